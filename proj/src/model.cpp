#include "tasklab/model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tasklab {

Term channel_term(const Channel& e) {
  std::vector<Term> items;
  for (ProcName j : e) items.push_back(Term::integer(j));
  return Term::set(std::move(items));
}

Channel channel_from_term(const Term& t) {
  if (t.kind() != Term::Kind::Set) throw std::runtime_error("channel term must be a set");
  Channel e;
  for (const Term& m : t.items()) e.push_back(static_cast<ProcName>(m.int_value()));
  return e;
}

Term pattern_term(const ChannelSet& channels) {
  std::vector<Term> items;
  for (const Channel& e : channels) items.push_back(channel_term(e));
  return Term::set(std::move(items));
}

ChannelSet pattern_from_term(const Term& t) {
  if (t.kind() != Term::Kind::Set) throw std::runtime_error("pattern term must be a set");
  ChannelSet out;
  for (const Term& e : t.items()) out.push_back(channel_from_term(e));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Uniform channel encoding of a received-from name set E at process i.
ChannelSet channels_from_name_set(ProcName i, const std::set<int>& E) {
  ChannelSet out;
  out.push_back({i});
  for (int j : E)
    if (j != i) out.push_back({std::min(i, j), std::max(i, j)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& base) {
  std::vector<std::vector<int>> out;
  std::size_t k = base.size();
  for (std::size_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (1u << b)) s.push_back(base[b]);
    out.push_back(std::move(s));
  }
  return out;
}

// All name sets E with i in E and E within `allowed`.
std::vector<std::set<int>> name_set_candidates(int i, const std::vector<int>& allowed) {
  std::vector<std::set<int>> c;
  std::vector<int> others;
  for (int j : allowed)
    if (j != i) others.push_back(j);
  std::size_t k = others.size();
  for (std::size_t mask = 0; mask < (1u << k); ++mask) {
    std::set<int> E{i};
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (1u << b)) E.insert(others[b]);
    c.push_back(std::move(E));
  }
  return c;
}

// Enumerates all simplices of a pairwise model: for every nonempty I and
// every assignment of candidate name sets E_i, keeps the assignments
// accepted by `ok`.
Complex build_pairwise(int n,
                       const std::function<std::vector<std::set<int>>(int)>& candidates,
                       const std::function<bool(const std::vector<int>&,
                                                const std::vector<std::set<int>>&)>& ok) {
  if (n < 1 || n > 6) throw std::runtime_error("model size out of range (1..6)");
  std::vector<int> names(n);
  for (int i = 0; i < n; ++i) names[i] = i + 1;

  std::vector<Simplex> simplices;
  for (const std::vector<int>& I : nonempty_subsets(names)) {
    std::vector<std::vector<std::set<int>>> cands;
    double combos = 1;
    for (int i : I) {
      cands.push_back(candidates(i));
      combos *= static_cast<double>(cands.back().size());
    }
    if (combos > 5e6) throw std::runtime_error("model enumeration too large");
    std::vector<std::size_t> idx(I.size(), 0);
    while (true) {
      std::vector<std::set<int>> assign;
      for (std::size_t k = 0; k < I.size(); ++k) assign.push_back(cands[k][idx[k]]);
      if (ok(I, assign)) {
        std::vector<Vertex> verts;
        for (std::size_t k = 0; k < I.size(); ++k)
          verts.push_back({I[k], pattern_term(channels_from_name_set(I[k], assign[k]))});
        simplices.push_back(Simplex(std::move(verts)));
      }
      std::size_t k = 0;
      while (k < I.size() && ++idx[k] == cands[k].size()) idx[k++] = 0;
      if (k == I.size()) break;
    }
  }
  return Complex::closure_of(std::move(simplices));
}

bool chain_conditions(const std::vector<int>& I,
                      const std::vector<std::set<int>>& E) {
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < I.size(); ++b) {
      bool ab = std::includes(E[b].begin(), E[b].end(), E[a].begin(), E[a].end());
      bool ba = std::includes(E[a].begin(), E[a].end(), E[b].begin(), E[b].end());
      if (!ab && !ba) return false;
      if (E[a].count(I[b]) && !ba) return false;  // I[b] in E_a forces E_b within E_a
    }
  return true;
}

void check_graph_nodes(int n, int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::runtime_error("graph node out of range 1..n");
}

}  // namespace

Model::Model(int n, Complex c, std::string desc)
    : n_(n), complex_(std::move(c)), desc_(std::move(desc)) {
  if (!complex_.is_pure() || complex_.dim() != n_ - 1) {
    std::ostringstream out;
    out << "model is not pure of dimension " << n_ - 1 << ": " << desc_;
    throw std::runtime_error(out.str());
  }
  for (const Vertex& v : complex_.vertices()) {
    ChannelSet channels = pattern_from_term(v.value);
    bool self = false;
    for (const Channel& e : channels) {
      if (e.empty()) throw std::runtime_error("empty channel in model vertex");
      if (!std::binary_search(e.begin(), e.end(), v.name))
        throw std::runtime_error("channel not incident to its listener");
      if (e.size() == 1 && e[0] == v.name) self = true;
      for (ProcName m : e)
        if (m < 1 || m > n_) throw std::runtime_error("channel member out of range");
    }
    if (!self) throw std::runtime_error("model vertex lacks the self-loop channel");
  }
  for (const Simplex& s : complex_.all_simplices())
    if (is_closed(s)) closed_.push_back(s);
}

bool Model::is_closed(const Simplex& s) {
  std::set<ProcName> reach;
  for (const Vertex& v : s.vertices())
    for (const Channel& e : pattern_from_term(v.value))
      reach.insert(e.begin(), e.end());
  std::vector<ProcName> names = s.names();
  return std::equal(reach.begin(), reach.end(), names.begin(), names.end()) &&
         reach.size() == names.size();
}

std::vector<Simplex> Model::closed_with_names(const std::vector<ProcName>& names) const {
  std::vector<Simplex> out;
  for (const Simplex& s : closed_)
    if (s.names() == names) out.push_back(s);
  return out;
}

bool Model::names_closed(const std::vector<ProcName>& names) const {
  for (const Simplex& s : closed_)
    if (s.names() == names) return true;
  return false;
}

std::vector<Channel> Model::channels_at(ProcName i) const {
  std::set<Channel> out;
  for (const Vertex& v : complex_.vertices()) {
    for (const Channel& e : pattern_from_term(v.value))
      if (std::binary_search(e.begin(), e.end(), i)) out.insert(e);
  }
  return {out.begin(), out.end()};
}

std::vector<ChannelSet> Model::patterns_at(ProcName i) const {
  std::vector<ChannelSet> out;
  for (const Term& val : complex_.values_at(i)) out.push_back(pattern_from_term(val));
  std::sort(out.begin(), out.end());
  return out;
}

Model Model::wait_free(int n) {
  auto cands = [n](int i) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j + 1;
    return name_set_candidates(i, v);
  };
  Complex c = build_pairwise(n, cands, chain_conditions);
  std::ostringstream d;
  d << "wait_free(" << n << ")";
  return Model(n, std::move(c), d.str());
}

Model Model::f_resilient(int n, int f) {
  if (f < 1 || f > n - 1) throw std::runtime_error("f must satisfy 1 <= f <= n-1");
  auto cands = [n](int i) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j + 1;
    return name_set_candidates(i, v);
  };
  auto ok = [n, f](const std::vector<int>& I, const std::vector<std::set<int>>& E) {
    for (const auto& Ei : E)
      if (static_cast<int>(Ei.size()) < n - f) return false;
    return chain_conditions(I, E);
  };
  Complex c = build_pairwise(n, cands, ok);
  std::ostringstream d;
  d << "f_resilient(" << n << "," << f << ")";
  return Model(n, std::move(c), d.str());
}

Model Model::local(const Digraph& g) {
  return dyn({g});
}

Model Model::dyn(const std::vector<Digraph>& family) {
  if (family.empty()) throw std::runtime_error("dyn: empty graph family");
  int n = family[0].n;
  std::vector<std::vector<std::set<int>>> nbhd;  // per graph: closed in-neighborhoods
  for (const Digraph& g : family) {
    if (g.n != n) throw std::runtime_error("dyn: graphs disagree on n");
    std::vector<std::set<int>> N(n + 1);
    for (int i = 1; i <= n; ++i) N[i].insert(i);
    for (auto [u, v] : g.arcs) {
      check_graph_nodes(n, u, v);
      N[v].insert(u);  // v hears from u
    }
    nbhd.push_back(std::move(N));
  }
  auto cands = [&nbhd](int i) {
    std::vector<std::set<int>> c;
    for (const auto& N : nbhd) c.push_back(N[i]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  };
  auto ok = [&nbhd](const std::vector<int>& I, const std::vector<std::set<int>>& E) {
    for (const auto& N : nbhd) {
      bool match = true;
      for (std::size_t k = 0; k < I.size(); ++k)
        if (E[k] != N[I[k]]) {
          match = false;
          break;
        }
      if (match) return true;
    }
    return false;
  };
  Complex c = build_pairwise(n, cands, ok);
  std::ostringstream d;
  d << (family.size() == 1 ? "local" : "dyn") << "(n=" << n << ")";
  return Model(n, std::move(c), d.str());
}

Model Model::h_local(const Hypergraph& h) {
  int n = h.n;
  if (n < 1) throw std::runtime_error("h_local: empty hypergraph");
  std::vector<ChannelSet> pattern(n + 1);
  for (int i = 1; i <= n; ++i) pattern[i].push_back({i});
  for (const std::vector<int>& e : h.edges) {
    Channel ch = e;
    std::sort(ch.begin(), ch.end());
    ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
    if (ch.empty()) throw std::runtime_error("h_local: empty hyperedge");
    for (int m : ch) check_graph_nodes(n, m, m);
    for (int m : ch) {
      pattern[m].push_back(ch);
    }
  }
  std::vector<Vertex> verts;
  for (int i = 1; i <= n; ++i) {
    std::sort(pattern[i].begin(), pattern[i].end());
    pattern[i].erase(std::unique(pattern[i].begin(), pattern[i].end()),
                     pattern[i].end());
    verts.push_back({i, pattern_term(pattern[i])});
  }
  Complex c = Complex::closure_of({Simplex(std::move(verts))});
  std::ostringstream d;
  d << "h_local(n=" << n << ")";
  return Model(n, std::move(c), d.str());
}

Model Model::wf_local(const Graph& g) {
  int n = g.n;
  std::vector<std::set<int>> N(n + 1);
  std::set<std::pair<int, int>> edge_set;
  for (int i = 1; i <= n; ++i) N[i].insert(i);
  for (auto [u, v] : g.edges) {
    check_graph_nodes(n, u, v);
    N[u].insert(v);
    N[v].insert(u);
    edge_set.insert({std::min(u, v), std::max(u, v)});
  }
  auto cands = [&N](int i) {
    return name_set_candidates(i, std::vector<int>(N[i].begin(), N[i].end()));
  };
  auto ok = [&edge_set](const std::vector<int>& I, const std::vector<std::set<int>>& E) {
    std::size_t k = I.size();
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<std::size_t> U;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1u << b)) U.push_back(b);
      bool clique = true;
      for (std::size_t a = 0; a < U.size() && clique; ++a)
        for (std::size_t b = a + 1; b < U.size() && clique; ++b) {
          int u = I[U[a]], v = I[U[b]];
          if (!edge_set.count({std::min(u, v), std::max(u, v)})) clique = false;
        }
      if (!clique) continue;
      std::set<int> Uset;
      for (std::size_t u : U) Uset.insert(I[u]);
      for (std::size_t a : U)
        for (std::size_t b : U) {
          std::set<int> Ea, Eb;
          for (int x : E[a])
            if (Uset.count(x)) Ea.insert(x);
          for (int x : E[b])
            if (Uset.count(x)) Eb.insert(x);
          bool ab = std::includes(Eb.begin(), Eb.end(), Ea.begin(), Ea.end());
          bool ba = std::includes(Ea.begin(), Ea.end(), Eb.begin(), Eb.end());
          if (!ab && !ba) return false;
          // I[b] heard by a inside the clique forces E_b|U within E_a.
          if (E[a].count(I[b])) {
            for (int x : Eb)
              if (!E[a].count(x)) return false;
          }
        }
    }
    return true;
  };
  Complex c = build_pairwise(n, cands, ok);
  std::ostringstream d;
  d << "wf_local(n=" << n << ")";
  return Model(n, std::move(c), d.str());
}

Model Model::from_facets(int n, std::vector<Simplex> facets, std::string description) {
  return Model(n, Complex::closure_of(std::move(facets)), std::move(description));
}

}  // namespace tasklab
