#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "tasklab/model.hpp"

using namespace tasklab;

namespace {

// Independent brute-force count of full snapshot patterns: assignments
// E: [n] -> 2^[n] with i in E_i, pairwise comparable, and E_j within E_i
// whenever j in E_i.  Written against the conditions directly, without the
// library's model builder.
int snapshot_facet_oracle(int n) {
  int count = 0;
  std::vector<int> masks(n, 0);
  int total = 1 << n;
  std::vector<int> assign(n, 0);
  std::function<bool()> check = [&]() {
    for (int i = 0; i < n; ++i)
      if (!(assign[i] & (1 << i))) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int a = assign[i], b = assign[j];
        if ((a | b) != a && (a | b) != b) return false;  // incomparable
        if ((a & (1 << j)) && (a | b) != a) return false;
      }
    return true;
  };
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (check()) ++count;
      return;
    }
    for (int m = 0; m < total; ++m) {
      assign[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

Term pat(ProcName i, const std::vector<Channel>& extra) {
  ChannelSet cs = extra;
  cs.push_back({i});
  return pattern_term(cs);
}

}  // namespace

TEST_CASE("channel and pattern term round-trip") {
  Channel e{1, 3};
  CHECK(channel_from_term(channel_term(e)) == e);
  ChannelSet cs{{2}, {1, 2}};
  CHECK(pattern_from_term(pattern_term(cs)) == ChannelSet{{1, 2}, {2}});
}

TEST_CASE("wait_free(2) has the three snapshot facets") {
  Model m = Model::wait_free(2);
  CHECK(m.complex().facets().size() == 3);
  CHECK(m.complex().is_pure());
  CHECK(m.complex().dim() == 1);

  // solo-first patterns and the fully concurrent one
  Simplex solo1({{1, pat(1, {})}, {2, pat(2, {{1, 2}})}});
  Simplex solo2({{1, pat(1, {{1, 2}})}, {2, pat(2, {})}});
  Simplex both({{1, pat(1, {{1, 2}})}, {2, pat(2, {{1, 2}})}});
  CHECK(m.complex().contains(solo1));
  CHECK(m.complex().contains(solo2));
  CHECK(m.complex().contains(both));
}

TEST_CASE("wait_free facet counts match the brute-force oracle") {
  CHECK(snapshot_facet_oracle(2) == 3);
  CHECK(snapshot_facet_oracle(3) == 13);
  CHECK(Model::wait_free(2).complex().facets().size() == 3);
  CHECK(Model::wait_free(3).complex().facets().size() == 13);
}

TEST_CASE("wait_free closed simplices exist in every dimension") {
  Model m = Model::wait_free(2);
  // facets are closed; the solo vertices are closed; pair-channel vertices open
  int closed_vertices = 0;
  for (const Simplex& s : m.closed_simplices())
    if (s.dim() == 0) ++closed_vertices;
  CHECK(closed_vertices == 2);
  CHECK(m.names_closed({1}));
  CHECK(m.names_closed({1, 2}));
  Simplex open_vertex({{1, pat(1, {{1, 2}})}});
  CHECK(m.complex().contains(open_vertex));
  CHECK(!Model::is_closed(open_vertex));
}

TEST_CASE("f_resilient(n, n-1) equals wait_free(n)") {
  CHECK(Model::f_resilient(2, 1).complex() == Model::wait_free(2).complex());
  CHECK(Model::f_resilient(3, 2).complex() == Model::wait_free(3).complex());
  // 1-resilient for three processes: losing two is not allowed
  Model r = Model::f_resilient(3, 1);
  for (const Simplex& s : r.closed_simplices()) CHECK(s.size() >= 2u);
  CHECK_THROWS(Model::f_resilient(3, 3));
}

TEST_CASE("local oriented triangle has one facet") {
  Digraph g;
  g.n = 3;
  g.arcs = {{3, 1}, {1, 2}, {2, 3}};
  Model m = Model::local(g);
  CHECK(m.complex().facets().size() == 1);
  const Simplex& f = m.complex().facets()[0];
  CHECK(*f.value_at(1) == pat(1, {{1, 3}}));
  CHECK(*f.value_at(2) == pat(2, {{1, 2}}));
  CHECK(*f.value_at(3) == pat(3, {{2, 3}}));
  // only the full simplex is closed in a connected one-graph model
  for (const Simplex& s : m.closed_simplices()) CHECK(s.size() == 3u);
}

TEST_CASE("dyn of a single graph equals local") {
  Digraph g;
  g.n = 3;
  g.arcs = {{3, 1}, {1, 2}, {2, 3}};
  CHECK(Model::dyn({g}).complex() == Model::local(g).complex());
  CHECK_THROWS(Model::dyn({}));
}

TEST_CASE("dyn of two graphs has two facets") {
  Digraph a, b;
  a.n = b.n = 2;
  a.arcs = {{1, 2}};  // 2 hears 1
  b.arcs = {{2, 1}};  // 1 hears 2
  Model m = Model::dyn({a, b});
  CHECK(m.complex().facets().size() == 2);
}

TEST_CASE("h_local single hyperedge") {
  Hypergraph h;
  h.n = 3;
  h.edges = {{1, 2, 3}};
  Model m = Model::h_local(h);
  CHECK(m.complex().facets().size() == 1);
  for (int i = 1; i <= 3; ++i)
    CHECK(*m.complex().facets()[0].value_at(i) == pat(i, {{1, 2, 3}}));
  CHECK(m.channels_at(1) == std::vector<Channel>{{1}, {1, 2, 3}});
}

TEST_CASE("wf_local on a single edge matches wait_free(2)") {
  Graph g;
  g.n = 2;
  g.edges = {{1, 2}};
  CHECK(Model::wf_local(g).complex() == Model::wait_free(2).complex());
}

TEST_CASE("wf_local on a path allows independent far ends") {
  Graph g;
  g.n = 3;
  g.edges = {{1, 2}, {2, 3}};
  Model m = Model::wf_local(g);
  // 1 and 3 are not adjacent: both may hear only themselves while hearing
  // nothing of each other; the middle node sees both.
  Simplex f({{1, pat(1, {{1, 2}})},
             {2, pat(2, {{1, 2}, {2, 3}})},
             {3, pat(3, {{2, 3}})}});
  CHECK(m.complex().contains(f));
  // every edge of the graph must be heard in at least one direction
  Simplex bad({{1, pat(1, {})}, {2, pat(2, {{2, 3}})}, {3, pat(3, {})}});
  CHECK(!m.complex().contains(bad));
}

TEST_CASE("explicit facets validate channel conditions") {
  // missing self-loop
  CHECK_THROWS(Model::from_facets(
      2, {Simplex({{1, pattern_term({{1, 2}})}, {2, pat(2, {{1, 2}})}})}));
  // channel not incident to the listener
  CHECK_THROWS(Model::from_facets(
      2, {Simplex({{1, pat(1, {{2, 2}})}, {2, pat(2, {})}})}));
  // impure complex
  CHECK_THROWS(Model::from_facets(
      2, {Simplex({{1, pat(1, {})}})}));
  // a valid one-facet model
  Model ok = Model::from_facets(
      2, {Simplex({{1, pat(1, {{1, 2}})}, {2, pat(2, {{1, 2}})}})});
  CHECK(ok.complex().facets().size() == 1);
}

TEST_CASE("patterns_at and channels_at aggregate over the model") {
  Model m = Model::wait_free(2);
  auto pats = m.patterns_at(1);
  CHECK(pats.size() == 2);  // {{1}} and {{1},{1,2}}
  auto chans = m.channels_at(1);
  CHECK(chans == std::vector<Channel>{{1}, {1, 2}});
}
