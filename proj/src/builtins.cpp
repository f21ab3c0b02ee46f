// Built-in task families used by the demos and the test suites.
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tasklab/task.hpp"

namespace tasklab {

namespace {

// All assignments of one value per name, filtered by `keep`.
std::vector<Simplex> assignments(
    const std::vector<ProcName>& names, const std::vector<Term>& values,
    const std::function<bool(const std::vector<Term>&)>& keep) {
  std::vector<Simplex> out;
  std::vector<std::size_t> idx(names.size(), 0);
  if (names.empty() || values.empty()) return out;
  while (true) {
    std::vector<Term> chosen;
    for (std::size_t k = 0; k < names.size(); ++k) chosen.push_back(values[idx[k]]);
    if (keep(chosen)) {
      std::vector<Vertex> verts;
      for (std::size_t k = 0; k < names.size(); ++k) verts.push_back({names[k], chosen[k]});
      out.push_back(Simplex(std::move(verts)));
    }
    std::size_t k = 0;
    while (k < names.size() && ++idx[k] == values.size()) idx[k++] = 0;
    if (k == names.size()) break;
  }
  return out;
}

std::vector<ProcName> name_range(int n) {
  std::vector<ProcName> names(n);
  for (int i = 0; i < n; ++i) names[i] = i + 1;
  return names;
}

std::vector<Term> int_values(int lo, int hi) {
  std::vector<Term> out;
  for (int v = lo; v <= hi; ++v) out.push_back(Term::integer(v));
  return out;
}

// Delta given by projecting every output facet: the usual relation for
// labeling tasks whose validity is a property of complete labelings.
std::map<Simplex, std::vector<Simplex>> delta_by_restriction(const Complex& inputs,
                                                             const Complex& outputs) {
  std::map<Simplex, std::vector<Simplex>> delta;
  for (const Simplex& s : inputs.all_simplices()) {
    std::set<Simplex> images;
    for (const Simplex& f : outputs.facets()) {
      Simplex p = f.project(s.names());
      if (!p.empty() && p.names() == s.names()) images.insert(p);
    }
    delta[s] = {images.begin(), images.end()};
  }
  return delta;
}

Complex trivial_inputs(int n) {
  std::vector<Vertex> verts;
  for (ProcName i : name_range(n)) verts.push_back({i, Term::atom("bot")});
  return Complex::closure_of({Simplex(std::move(verts))});
}

}  // namespace

TaskSpec consensus_task(int n) {
  Complex inputs = pseudosphere(n, int_values(0, 1));
  std::vector<Simplex> out_facets;
  for (int v = 0; v <= 1; ++v) {
    std::vector<Vertex> verts;
    for (ProcName i : name_range(n)) verts.push_back({i, Term::integer(v)});
    out_facets.push_back(Simplex(std::move(verts)));
  }
  Complex outputs = Complex::closure_of(out_facets);

  // Agreement plus validity: unanimous output on a value present in the
  // input simplex.
  std::map<Simplex, std::vector<Simplex>> delta;
  for (const Simplex& s : inputs.all_simplices()) {
    std::set<Term> present;
    for (const Vertex& v : s.vertices()) present.insert(v.value);
    std::vector<Simplex> images;
    for (const Term& val : present) {
      std::vector<Vertex> verts;
      for (ProcName i : s.names()) verts.push_back({i, val});
      images.push_back(Simplex(std::move(verts)));
    }
    delta[s] = std::move(images);
  }
  return make_task("consensus", n, std::move(inputs), std::move(outputs),
                   std::move(delta));
}

TaskSpec renaming_task(int n, int m, int k) {
  if (m < n || k < n) throw std::runtime_error("renaming: need m >= n and k >= n");
  auto distinct = [](const std::vector<Term>& vals) {
    for (std::size_t a = 0; a < vals.size(); ++a)
      for (std::size_t b = a + 1; b < vals.size(); ++b)
        if (vals[a] == vals[b]) return false;
    return true;
  };
  Complex inputs =
      Complex::closure_of(assignments(name_range(n), int_values(0, m - 1), distinct));
  Complex outputs =
      Complex::closure_of(assignments(name_range(n), int_values(0, k - 1), distinct));

  // Any injective output assignment is acceptable for any input.
  std::map<Simplex, std::vector<Simplex>> delta;
  for (const Simplex& s : inputs.all_simplices()) {
    std::vector<Simplex> images;
    for (const Simplex& o : outputs.simplices_with_names(s.names())) images.push_back(o);
    delta[s] = std::move(images);
  }
  std::ostringstream nm;
  nm << "renaming(" << n << "," << m << "," << k << ")";
  return make_task(nm.str(), n, std::move(inputs), std::move(outputs), std::move(delta));
}

TaskSpec perfect_renaming_task(int n) { return renaming_task(n, 2 * n - 1, n); }

TaskSpec coloring_task(const Graph& g, int k) {
  Hypergraph h;
  h.n = g.n;
  for (auto [u, v] : g.edges) h.edges.push_back({u, v});
  TaskSpec t = hypergraph_coloring_task(h, k);
  std::ostringstream nm;
  nm << k << "-coloring(graph n=" << g.n << ")";
  t.name = nm.str();
  return t;
}

TaskSpec hypergraph_coloring_task(const Hypergraph& h, int k) {
  int n = h.n;
  auto proper = [&h](const std::vector<Term>& vals) {
    for (const std::vector<int>& e : h.edges) {
      if (e.size() < 2) continue;
      bool mono = true;
      for (std::size_t a = 1; a < e.size(); ++a)
        if (vals[e[a] - 1] != vals[e[0] - 1]) {
          mono = false;
          break;
        }
      if (mono) return false;
    }
    return true;
  };
  Complex inputs = trivial_inputs(n);
  Complex outputs =
      Complex::closure_of(assignments(name_range(n), int_values(1, k), proper));
  auto delta = delta_by_restriction(inputs, outputs);
  std::ostringstream nm;
  nm << k << "-coloring(hypergraph n=" << n << ")";
  return make_task(nm.str(), n, std::move(inputs), std::move(outputs), std::move(delta));
}

TaskSpec mis_task(const Graph& g) {
  Hypergraph h;
  h.n = g.n;
  for (auto [u, v] : g.edges) h.edges.push_back({u, v});
  std::vector<int> thresholds(h.edges.size(), 1);
  TaskSpec t = gmis_task(h, thresholds);
  std::ostringstream nm;
  nm << "mis(graph n=" << g.n << ")";
  t.name = nm.str();
  return t;
}

TaskSpec gmis_task(const Hypergraph& h, const std::vector<int>& thresholds) {
  int n = h.n;
  if (thresholds.size() != h.edges.size())
    throw std::runtime_error("gmis: one threshold per hyperedge required");
  for (std::size_t a = 0; a < h.edges.size(); ++a) {
    int sz = static_cast<int>(h.edges[a].size());
    if (thresholds[a] != 1 && thresholds[a] != sz - 1)
      throw std::runtime_error("gmis: threshold must be 1 or |e|-1");
  }
  auto respects = [&](const std::vector<int>& members) {
    for (std::size_t a = 0; a < h.edges.size(); ++a) {
      int cnt = 0;
      for (int u : h.edges[a]) cnt += members[u - 1];
      if (cnt > thresholds[a]) return false;
    }
    return true;
  };
  auto valid = [&](const std::vector<Term>& vals) {
    std::vector<int> members(n, 0);
    for (int i = 0; i < n; ++i) members[i] = static_cast<int>(vals[i].int_value());
    if (!respects(members)) return false;
    // Maximality: no zero vertex can be flipped to one.
    for (int i = 0; i < n; ++i) {
      if (members[i]) continue;
      members[i] = 1;
      bool ok = respects(members);
      members[i] = 0;
      if (ok) return false;
    }
    return true;
  };
  Complex inputs = trivial_inputs(n);
  Complex outputs =
      Complex::closure_of(assignments(name_range(n), int_values(0, 1), valid));
  auto delta = delta_by_restriction(inputs, outputs);
  std::ostringstream nm;
  nm << "gmis(hypergraph n=" << n << ")";
  return make_task(nm.str(), n, std::move(inputs), std::move(outputs), std::move(delta));
}

Digraph fig2_cycle() {
  Digraph g;
  g.n = 3;
  g.arcs = {{3, 1}, {1, 2}, {2, 3}};  // i hears its in-neighbor
  return g;
}

Digraph cycle_digraph(int n) {
  Digraph g;
  g.n = n;
  for (int i = 1; i <= n; ++i) {
    int j = i % n + 1;
    g.arcs.push_back({i, j});
    g.arcs.push_back({j, i});
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g;
  g.n = n;
  for (int i = 1; i <= n; ++i) g.edges.push_back({i, i % n + 1});
  return g;
}

Graph two_star_graph(int k) {
  // Nodes u_1..u_k are processes 1,3,..,2k-1; v_1..v_k are 2,4,..,2k.
  // Edges {u_1, v_i} and {u_i, v_1} for every i.
  Graph g;
  g.n = 2 * k;
  for (int i = 1; i <= k; ++i) {
    g.edges.push_back({1, 2 * i});
    if (i > 1) g.edges.push_back({2 * i - 1, 2});
  }
  g.edges.push_back({1, 2});
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

TaskSpec fig2_task() {
  Term B = Term::atom("B"), R = Term::atom("R"), G = Term::atom("G");
  std::vector<Simplex> in_facets;
  std::map<Simplex, std::vector<Simplex>> delta;
  for (const Term& x2 : {R, G})
    for (const Term& x3 : {R, G}) {
      Simplex f({{1, B}, {2, x2}, {3, x3}});
      // p2 keeps its input color; p3 takes the remaining one.
      Term other = x2 == R ? G : R;
      delta[f] = {Simplex({{1, B}, {2, x2}, {3, other}})};
      in_facets.push_back(std::move(f));
    }
  Complex inputs = Complex::closure_of(in_facets);
  Complex outputs = Complex::closure_of(
      {Simplex({{1, B}, {2, R}, {3, G}}), Simplex({{1, B}, {2, G}, {3, R}})});
  return make_task("fig2", 3, std::move(inputs), std::move(outputs), std::move(delta));
}

TaskSpec two_star_coloring_task(int k) {
  Graph g = two_star_graph(k);
  TaskSpec base = coloring_task(g, 3);
  // Inputs are proper 3-colorings of the same graph; outputs as in base.
  auto proper = [&g](const std::vector<Term>& vals) {
    for (auto [u, v] : g.edges)
      if (vals[u - 1] == vals[v - 1]) return false;
    return true;
  };
  Complex inputs =
      Complex::closure_of(assignments(name_range(g.n), int_values(1, 3), proper));
  auto delta = delta_by_restriction(inputs, base.outputs);
  std::ostringstream nm;
  nm << "two_star_coloring(k=" << k << ")";
  return make_task(nm.str(), g.n, std::move(inputs), base.outputs, std::move(delta));
}

}  // namespace tasklab
