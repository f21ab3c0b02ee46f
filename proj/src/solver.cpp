#include "tasklab/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tasklab {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solvable: return "SOLVABLE";
    case SolveStatus::Unsolvable: return "UNSOLVABLE";
    case SolveStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

const char* to_string(Mode m) {
  return m == Mode::Anonymous ? "anonymous" : "name-aware";
}

Term class_key(const Vertex& v, Mode mode) {
  if (mode == Mode::Anonymous) return canonical_view(v.value, mode);
  return Term::tuple({Term::atom("nv"), Term::integer(v.name), v.value});
}

namespace {

struct BudgetHit {};

struct Constraint {
  // (name, class index) per vertex of the underlying simplex
  std::vector<std::pair<ProcName, int>> parts;
  // nullptr: image must lie in the output complex (simpliciality);
  // otherwise: image must be a face of some simplex in *allowed (agreement)
  const std::vector<Simplex>* allowed = nullptr;
};

struct Search {
  const Complex* outputs = nullptr;
  std::vector<VertexClass> classes;
  std::vector<Constraint> constraints;
  std::vector<std::vector<int>> touching;  // class -> constraint indices
  std::vector<int> chosen;                 // class -> domain index or -1
  const Budget* budget = nullptr;
  SolveStats stats;

  // Partial image under chosen[], optionally pretending class `cls` holds
  // domain value `val` (used while filtering a not yet assigned class).
  bool constraint_ok(const Constraint& c, int cls = -1, int val = -1) const {
    std::vector<Vertex> img;
    for (auto [name, k] : c.parts) {
      int dv = (k == cls) ? val : chosen[k];
      if (dv < 0) continue;
      img.push_back({name, classes[k].domain[dv]});
    }
    if (img.empty()) return true;
    Simplex s(std::move(img));
    if (!c.allowed) return outputs->contains(s);
    for (const Simplex& t : *c.allowed)
      if (t.has_face(s)) return true;
    return false;
  }

  // Backtracking with forward checking: `live` carries the still admissible
  // domain indices per class and shrinks as neighbours get pinned down.
  bool run(const std::vector<std::vector<int>>& live) {
    int best = -1;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (chosen[k] >= 0) continue;
      if (best < 0 || live[k].size() < live[best].size()) best = static_cast<int>(k);
    }
    if (best < 0) return true;  // everything assigned
    for (int val : live[best]) {
      if (++stats.nodes > budget->search_nodes) throw BudgetHit{};
      chosen[best] = val;
      bool ok = true;
      for (int ci : touching[best])
        if (!constraint_ok(constraints[ci])) {
          ok = false;
          break;
        }
      if (ok) {
        std::vector<std::vector<int>> next = live;
        for (int ci : touching[best]) {
          for (auto [name, k] : constraints[ci].parts) {
            (void)name;
            if (chosen[k] >= 0) continue;
            std::vector<int> kept;
            for (int dv : next[k])
              if (constraint_ok(constraints[ci], k, dv)) kept.push_back(dv);
            next[k] = std::move(kept);
            if (next[k].empty()) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (ok && run(next)) return true;
      }
      chosen[best] = -1;
      ++stats.backtracks;
    }
    return false;
  }
};

std::vector<VertexClass> build_classes(const TaskSpec& task, const ProtocolComplex& p,
                                       Mode mode) {
  std::map<Term, VertexClass> by_key;
  for (const Simplex& s : p.complex.all_simplices()) {
    if (s.size() != 1) continue;
    const Vertex& v = s.vertices()[0];
    Term key = class_key(v, mode);
    auto& c = by_key[key];
    c.key = key;
    c.members.push_back(v);
  }
  std::vector<VertexClass> classes;
  for (auto& [key, c] : by_key) {
    std::set<ProcName> names;
    for (const Vertex& v : c.members) names.insert(v.name);
    std::vector<Term> domain = task.outputs.values_at(*names.begin());
    for (ProcName nm : names) {
      std::vector<Term> vals = task.outputs.values_at(nm);
      std::vector<Term> inter;
      std::set_intersection(domain.begin(), domain.end(), vals.begin(), vals.end(),
                            std::back_inserter(inter));
      domain = std::move(inter);
    }
    c.domain = std::move(domain);
    classes.push_back(std::move(c));
  }
  return classes;
}

}  // namespace

SolveResult solve_on(const TaskSpec& task, const ProtocolComplex& p, Mode mode,
                     const Budget& budget) {
  SolveResult res;
  res.mode = mode;
  res.rounds = p.rounds;

  Search s;
  s.outputs = &task.outputs;
  s.budget = &budget;
  s.classes = build_classes(task, p, mode);
  res.stats.classes = s.classes.size();

  std::map<Term, int> index;
  for (std::size_t k = 0; k < s.classes.size(); ++k) index[s.classes[k].key] = static_cast<int>(k);
  auto parts_of = [&](const Simplex& simplex) {
    std::vector<std::pair<ProcName, int>> parts;
    for (const Vertex& v : simplex.vertices())
      parts.push_back({v.name, index.at(class_key(v, mode))});
    return parts;
  };

  // Simpliciality on facets (faces follow by closure of the outputs).
  std::set<std::vector<std::pair<ProcName, int>>> seen;
  for (const Simplex& f : p.complex.facets()) {
    auto parts = parts_of(f);
    if (seen.insert(parts).second) s.constraints.push_back({std::move(parts), nullptr});
  }
  // Agreement along the tracked images of every closed input simplex.
  for (const auto& [origin, reach] : p.reachable) {
    const std::vector<Simplex>& allowed = task.delta_of(origin);
    for (const Simplex& img : reach)
      s.constraints.push_back({parts_of(img), &allowed});
  }
  res.stats.constraints = s.constraints.size();

  s.touching.resize(s.classes.size());
  for (std::size_t ci = 0; ci < s.constraints.size(); ++ci)
    for (auto [name, cls] : s.constraints[ci].parts)
      s.touching[cls].push_back(static_cast<int>(ci));
  s.chosen.assign(s.classes.size(), -1);

  std::vector<std::vector<int>> live(s.classes.size());
  for (std::size_t k = 0; k < s.classes.size(); ++k)
    for (std::size_t d = 0; d < s.classes[k].domain.size(); ++d)
      live[k].push_back(static_cast<int>(d));

  try {
    bool ok = s.run(live);
    res.stats.nodes = s.stats.nodes;
    res.stats.backtracks = s.stats.backtracks;
    if (ok) {
      res.status = SolveStatus::Solvable;
      for (std::size_t k = 0; k < s.classes.size(); ++k)
        res.assignment[s.classes[k].key] = s.classes[k].domain[s.chosen[k]];
    } else {
      res.status = SolveStatus::Unsolvable;
    }
  } catch (const BudgetHit&) {
    res.stats.nodes = s.stats.nodes;
    res.stats.backtracks = s.stats.backtracks;
    res.status = SolveStatus::BudgetExceeded;
  }
  return res;
}

SolveResult solve(const TaskSpec& task, const Model& m, int t, Mode mode,
                  const Budget& budget) {
  return solve_on(task, protocol_complex(task.inputs, m, t), mode, budget);
}

std::vector<MapIssue> verify_map(const TaskSpec& task, const Model& m, int t,
                                 Mode mode, const std::map<Term, Term>& assignment) {
  std::vector<MapIssue> issues;
  ProtocolComplex p = protocol_complex(task.inputs, m, t);

  auto value_of = [&](const Vertex& v) -> const Term* {
    auto it = assignment.find(class_key(v, mode));
    return it == assignment.end() ? nullptr : &it->second;
  };

  // Coverage and per-name output membership.
  for (const Simplex& s : p.complex.all_simplices()) {
    if (s.size() != 1) continue;
    const Vertex& v = s.vertices()[0];
    const Term* out = value_of(v);
    if (!out) {
      issues.push_back({"no output value for vertex " + v.str()});
      continue;
    }
    if (!task.outputs.contains_vertex({v.name, *out}))
      issues.push_back({"value " + out->str() + " is not an output at name " +
                        std::to_string(v.name)});
  }
  if (!issues.empty()) return issues;

  auto image_of = [&](const Simplex& s) {
    std::vector<Vertex> img;
    for (const Vertex& v : s.vertices()) img.push_back({v.name, *value_of(v)});
    return Simplex(std::move(img));
  };

  for (const Simplex& f : p.complex.all_simplices())
    if (!task.outputs.contains(image_of(f))) {
      issues.push_back({"image of " + f.str() + " is not an output simplex"});
      break;
    }

  for (const auto& [origin, reach] : p.reachable) {
    const auto& allowed = task.delta_of(origin);
    for (const Simplex& img : reach) {
      Simplex out = image_of(img);
      if (!std::binary_search(allowed.begin(), allowed.end(), out)) {
        issues.push_back({"agreement fails on input " + origin.str() +
                          ": image " + out.str() + " not allowed"});
      }
    }
  }
  return issues;
}

}  // namespace tasklab
