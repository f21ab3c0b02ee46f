#include "tasklab/ld_transform.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "tasklab/checkers.hpp"

namespace tasklab {

namespace {

const char* kHead = "rec";

// Projection of a record onto a channel, as a comparable term.
Term project_record(const std::vector<LdLabel>& labels, const Channel& e) {
  std::vector<LdLabel> sub;
  for (const LdLabel& l : labels)
    if (std::binary_search(e.begin(), e.end(), l.name)) sub.push_back(l);
  return ld_value_term(sub);
}

}  // namespace

Term ld_value_term(const std::vector<LdLabel>& labels) {
  std::vector<LdLabel> sorted = labels;
  std::sort(sorted.begin(), sorted.end(),
            [](const LdLabel& a, const LdLabel& b) { return a.name < b.name; });
  std::vector<Term> items;
  for (const LdLabel& l : sorted)
    items.push_back(Term::tuple({Term::integer(l.name), l.x, l.y}));
  return Term::tuple({Term::atom(kHead), Term::list(std::move(items))});
}

std::vector<LdLabel> ld_labels(const Term& value) {
  if (value.kind() != Term::Kind::Tuple || value.items().size() != 2 ||
      !value.items()[0].is_atom() || value.items()[0].atom_name() != kHead)
    throw std::runtime_error("not a record value: " + value.str());
  std::vector<LdLabel> out;
  for (const Term& item : value.items()[1].items()) {
    const auto& parts = item.items();
    out.push_back({static_cast<ProcName>(parts[0].int_value()), parts[1],
                   parts[2]});
  }
  return out;
}

Simplex LdTransform::forward(const Simplex& sigma, const Simplex& tau) const {
  if (sigma.names() != tau.names())
    throw std::runtime_error("input and output name sets differ");
  std::vector<Vertex> verts;
  for (const Vertex& v : sigma.vertices()) {
    std::vector<LdLabel> labels;
    for (ProcName j : reach.at(v.name)) {
      auto x = sigma.value_at(j);
      auto y = tau.value_at(j);
      if (!x || !y)
        throw std::runtime_error(
            "collection needs a closed input simplex covering every reach");
      labels.push_back({j, *x, *y});
    }
    verts.push_back({v.name, ld_value_term(labels)});
  }
  return Simplex(std::move(verts));
}

Simplex LdTransform::backward(const Simplex& speedup_simplex) const {
  std::vector<Vertex> verts;
  for (const Vertex& v : speedup_simplex.vertices()) {
    bool found = false;
    for (const LdLabel& l : ld_labels(v.value))
      if (l.name == v.name) {
        verts.push_back({v.name, l.y});
        found = true;
        break;
      }
    if (!found)
      throw std::runtime_error("record misses the name's own entry");
  }
  return Simplex(std::move(verts));
}

LdTransform ld_to_edge_transform(const TaskSpec& task, const Model& m,
                                 const Budget& budget) {
  if (task.n != m.n())
    throw std::runtime_error("transform: task and model disagree on n");
  CheckabilityResult lc = check_local_checkability(task, m, budget);
  if (!lc.holds)
    throw std::runtime_error(
        "task is not locally checkable under the model; transform undefined");

  LdTransform tr;
  std::set<Channel> channels;
  for (ProcName i = 1; i <= m.n(); ++i) {
    std::set<ProcName> J;
    for (const Channel& e : m.channels_at(i)) {
      J.insert(e.begin(), e.end());
      channels.insert(e);
    }
    tr.reach[i] = std::vector<ProcName>(J.begin(), J.end());
  }

  // vertex pool per name: legal (input, output) simplex pairs on the reach
  long long left = budget.enumeration;
  std::map<ProcName, std::vector<Term>> pool;
  for (ProcName i = 1; i <= m.n(); ++i) {
    std::set<Term> vals;
    for (const Simplex& sx : task.inputs.simplices_with_names(tr.reach[i]))
      for (const Simplex& sy : task.delta_of(sx)) {
        if (--left < 0)
          throw std::runtime_error("transform exceeded the enumeration budget");
        std::vector<LdLabel> labels;
        for (ProcName j : tr.reach[i])
          labels.push_back({j, *sx.value_at(j), *sy.value_at(j)});
        vals.insert(ld_value_term(labels));
      }
    pool[i] = std::vector<Term>(vals.begin(), vals.end());
  }

  // acceptance of a record collection for an input simplex
  auto accepted = [&](const Simplex& sigma, const Simplex& s) {
    std::map<ProcName, std::vector<LdLabel>> rec;
    for (const Vertex& v : s.vertices()) {
      std::vector<LdLabel> labels = ld_labels(v.value);
      for (const LdLabel& l : labels)
        if (l.name == v.name && !(l.x == *sigma.value_at(v.name))) return false;
      rec[v.name] = std::move(labels);
    }
    for (const Channel& e : channels) {
      const std::vector<LdLabel>* first = nullptr;
      Term fp;
      for (ProcName j : e) {
        auto it = rec.find(j);
        if (it == rec.end()) continue;
        Term p = project_record(it->second, e);
        if (!first) {
          first = &it->second;
          fp = p;
        } else if (!(p == fp)) {
          return false;
        }
      }
    }
    return true;
  };

  // facets: consistent collections over the closed input facets
  std::vector<Simplex> facets;
  for (const Simplex& sigma : task.inputs.facets()) {
    if (!m.names_closed(sigma.names())) continue;
    std::vector<ProcName> names = sigma.names();
    std::vector<Vertex> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == names.size()) {
        Simplex s(chosen);
        if (accepted(sigma, s)) facets.push_back(std::move(s));
        if (facets.size() > budget.max_facets)
          throw std::runtime_error("transform exceeded the facet budget");
        return;
      }
      ProcName i = names[k];
      for (const Term& val : pool[i]) {
        if (--left < 0)
          throw std::runtime_error("transform exceeded the enumeration budget");
        chosen.push_back({i, val});
        // own-entry and pairwise checks run on the completed collection;
        // prune early on the own input entry
        bool own_ok = false;
        for (const LdLabel& l : ld_labels(val))
          if (l.name == i) own_ok = l.x == *sigma.value_at(i);
        if (own_ok) rec(k + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }

  Complex outputs = Complex::closure_of(std::move(facets));
  std::map<Simplex, std::vector<Simplex>> delta;
  for (const Simplex& sigma : task.inputs.all_simplices()) {
    std::vector<Simplex> images;
    for (const Simplex& s : outputs.simplices_with_names(sigma.names()))
      if (accepted(sigma, s)) images.push_back(s);
    delta[sigma] = std::move(images);
  }
  tr.transformed =
      make_task(task.name + "-edge", task.n, task.inputs, std::move(outputs),
                std::move(delta));
  return tr;
}

}  // namespace tasklab
