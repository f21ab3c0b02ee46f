#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tasklab/protocol.hpp"
#include "tasklab/task.hpp"

using namespace tasklab;

namespace {

// Independent recursive oracle for the image of one closed input simplex
// after t rounds: applies the communication step along every pattern
// sequence, without the incremental bookkeeping of `advance`.
std::set<Simplex> reach_oracle(const Simplex& s, const Model& m, int t) {
  if (t == 0) return {s};
  std::set<Simplex> out;
  for (const Simplex& prev : reach_oracle(s, m, t - 1))
    for (const Simplex& phi : m.closed_with_names(s.names()))
      out.insert(communication_step(prev, phi));
  return out;
}

}  // namespace

TEST_CASE("one step in the oriented triangle") {
  TaskSpec fig2 = fig2_task();
  Model m = Model::local(fig2_cycle());
  const Simplex& phi = m.complex().facets()[0];

  Simplex inp({{1, Term::atom("B")}, {2, Term::atom("R")}, {3, Term::atom("G")}});
  Simplex next = communication_step(inp, phi);

  // process 2 hears channels {2} and {1,2}: itself and process 1's input
  Term v2 = *next.value_at(2);
  REQUIRE(is_round_view(v2));
  CHECK(view_input(v2) == Term::atom("R"));
  CHECK(v2.items()[1].items().size() == 2);
  CHECK(view_input(*next.value_at(1)) == Term::atom("B"));
  CHECK(view_input(*next.value_at(3)) == Term::atom("G"));

  CHECK_THROWS(communication_step(inp.project({1, 2}), phi));
}

TEST_CASE("fig2 protocol complex counts") {
  TaskSpec fig2 = fig2_task();
  Model m = Model::local(fig2_cycle());

  ProtocolComplex p0 = protocol_complex(fig2.inputs, m, 0);
  CHECK(p0.complex == fig2.inputs);
  CHECK(p0.reachable.size() == 4);  // only the facets are closed in LOCAL

  ProtocolComplex p1 = protocol_complex(fig2.inputs, m, 1);
  CHECK(p1.complex.facets().size() == 4);
  CHECK(p1.complex.is_pure());
  CHECK(p1.complex.dim() == 2);
  int edges = 0, vertices = 0;
  for (const Simplex& s : p1.complex.all_simplices()) {
    if (s.dim() == 1) ++edges;
    if (s.dim() == 0) ++vertices;
  }
  CHECK(edges == 12);
  CHECK(vertices == 8);

  // deterministic model: each input facet reaches exactly one state
  for (const auto& [sigma, reach] : p1.reachable) CHECK(reach.size() == 1);
}

TEST_CASE("star closure of a one-round vertex in fig2") {
  TaskSpec fig2 = fig2_task();
  Model m = Model::local(fig2_cycle());
  ProtocolComplex p1 = protocol_complex(fig2.inputs, m, 1);

  // the round-1 view of process 1 whose own input is B and in-neighbor has R
  Simplex inp({{1, Term::atom("B")}, {2, Term::atom("G")}, {3, Term::atom("R")}});
  Simplex img = communication_step(inp, m.complex().facets()[0]);
  Vertex v1{1, *img.value_at(1)};
  Complex st = p1.complex.star_closure(v1);
  CHECK(st.facets().size() == 2);
  CHECK(st.simplex_count() == 13);  // 2 triangles, 6 edges, 5 vertices
}

TEST_CASE("renaming protocol complex sizes under wait_free(2)") {
  TaskSpec ren = perfect_renaming_task(2);
  Model wf = Model::wait_free(2);
  CHECK(ren.inputs.facets().size() == 6);

  ProtocolComplex p1 = protocol_complex(ren.inputs, wf, 1);
  CHECK(p1.complex.facets().size() == 18);
  CHECK(p1.complex.is_pure());

  ProtocolComplex p2 = protocol_complex(ren.inputs, wf, 2);
  CHECK(p2.complex.facets().size() == 54);
}

TEST_CASE("provenance agrees with the recursive oracle") {
  TaskSpec ren = perfect_renaming_task(2);
  Model wf = Model::wait_free(2);
  for (int t = 0; t <= 2; ++t) {
    ProtocolComplex p = protocol_complex(ren.inputs, wf, t);
    for (const auto& [sigma, reach] : p.reachable) {
      std::set<Simplex> want = reach_oracle(sigma, wf, t);
      CHECK(std::set<Simplex>(reach.begin(), reach.end()) == want);
      for (const Simplex& s : reach) CHECK(p.complex.contains(s));
    }
  }
}

TEST_CASE("solo views coincide across names after anonymization") {
  Model wf = Model::wait_free(2);
  Term x = Term::integer(7);
  Simplex s1 = Simplex::single(1, x);
  Simplex s2 = Simplex::single(2, x);
  Simplex phi1 = wf.closed_with_names({1})[0];
  Simplex phi2 = wf.closed_with_names({2})[0];
  Term v1 = *communication_step(s1, phi1).value_at(1);
  Term v2 = *communication_step(s2, phi2).value_at(2);
  CHECK(v1 != v2);  // raw views carry the names
  CHECK(canonical_view(v1, Mode::Anonymous) == canonical_view(v2, Mode::Anonymous));
  CHECK(canonical_view(v1, Mode::NameAware) == v1);
}

TEST_CASE("anonymization is idempotent and keeps round-0 payloads") {
  TaskSpec ren = renaming_task(2, 3, 2);
  Model wf = Model::wait_free(2);
  ProtocolComplex p2 = protocol_complex(ren.inputs, wf, 2);
  for (const Simplex& f : p2.complex.facets())
    for (const Vertex& v : f.vertices()) {
      Term once = canonical_view(v.value, Mode::Anonymous);
      CHECK(canonical_view(once, Mode::Anonymous) == once);
      // the processed input id survives anonymization
      CHECK(view_input(once) == view_input(v.value));
    }
}

TEST_CASE("views distinguish executions in wait_free(2)") {
  Model wf = Model::wait_free(2);
  Term x1 = Term::integer(0), x2 = Term::integer(1);
  Simplex inp({{1, x1}, {2, x2}});
  auto phis = wf.closed_with_names({1, 2});
  REQUIRE(phis.size() == 3);
  std::set<Term> views1, views2;
  for (const Simplex& phi : phis) {
    Simplex img = communication_step(inp, phi);
    views1.insert(*img.value_at(1));
    views2.insert(*img.value_at(2));
  }
  // process 1 sees two distinct worlds: alone, or both (solo-second and
  // concurrent give the same view)
  CHECK(views1.size() == 2);
  CHECK(views2.size() == 2);
}

TEST_CASE("input extraction needs a self-loop") {
  CHECK(view_input(Term::integer(9)) == Term::integer(9));
  Term fake = Term::tuple(
      {Term::atom("rd"),
       Term::list({Term::tuple({Term::set({Term::integer(1), Term::integer(2)}),
                                Term::list({})})})});
  CHECK_THROWS(view_input(fake));
}
