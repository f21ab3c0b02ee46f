// Acceptance gate: one line per criterion, nonzero exit if any line fails.
// Each criterion re-derives its expected values independently of the unit
// suites (local oracles, hand-built witnesses, frozen counts) so a
// regression in the library cannot hide behind a stale test.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tasklab/checkers.hpp"
#include "tasklab/demos.hpp"
#include "tasklab/io.hpp"
#include "tasklab/ld_transform.hpp"
#include "tasklab/report.hpp"
#include "tasklab/speedup.hpp"

using namespace tasklab;

namespace {

const Term B = Term::atom("B");
const Term R = Term::atom("R");
const Term G = Term::atom("G");

// sorted channel/channel-set literals for the oriented triangle
const Channel c1{1}, c2{2}, c3{3}, c12{1, 2}, c13{1, 3}, c23{2, 3};
const ChannelSet E1{{1}, {1, 3}};
const ChannelSet E2{{1, 2}, {2}};
const ChannelSet E3{{2, 3}, {3}};

Term sval(Term x,
          std::vector<std::tuple<Channel, ChannelSet,
                                 std::vector<std::vector<Term>>>>
              cells) {
  SpeedupValue v;
  v.x = std::move(x);
  for (auto& [e, E, fam] : cells) v.cells[{e, E}] = fam;
  return speedup_value_term(v);
}

// The worked triangle facet: p1 committed to B everywhere, p2 committed to
// its own input X, p3 undecided alone but split along the channel to p2.
Term worked_v1() {
  return sval(B, {{c1, E1, {{B}}}, {c12, E1, {{B}}}, {c13, E1, {{B}}}});
}
Term worked_v2(const Term& X) {
  return sval(X, {{c12, E2, {{X}}}, {c2, E2, {{X}}}, {c23, E2, {{X}}}});
}
Term worked_v3(const Term& x3) {
  return sval(x3, {{c13, E3, {{R, G}}}, {c23, E3, {{R}, {G}}}, {c3, E3, {{R, G}}}});
}

Digraph undirected(const Graph& g) {
  Digraph d;
  d.n = g.n;
  for (auto [u, v] : g.edges) {
    d.arcs.push_back({u, v});
    d.arcs.push_back({v, u});
  }
  return d;
}

// Independent brute-force count of full snapshot patterns: assignments
// E: [n] -> 2^[n] with i in E_i, pairwise comparable, and E_j within E_i
// whenever j in E_i.
int snapshot_facet_oracle(int n) {
  int count = 0;
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

// Recursive restatement of t-round reachability, without the incremental
// bookkeeping of the protocol builder.
std::set<Simplex> reach_oracle(const Simplex& s, const Model& m, int t) {
  if (t == 0) return {s};
  std::set<Simplex> out;
  for (const Simplex& prev : reach_oracle(s, m, t - 1))
    for (const Simplex& phi : m.closed_with_names(s.names()))
      out.insert(communication_step(prev, phi));
  return out;
}

struct Checks {
  std::vector<std::string> bad;
  void expect(bool ok, const std::string& label) {
    if (!ok) bad.push_back(label);
  }
};

int failures = 0;

void criterion(int num, const std::string& title, double bound_seconds,
               const std::function<void(Checks&)>& body) {
  Checks c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.bad.push_back(std::string("unexpected exception: ") + e.what());
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (bound_seconds > 0 && secs > bound_seconds) {
    c.bad.push_back("runtime " + std::to_string(secs) + "s exceeds the " +
                    std::to_string(bound_seconds) + "s bound");
  }
  char timing[32];
  std::snprintf(timing, sizeof(timing), " [%.2fs]", secs);
  std::cout << (c.bad.empty() ? "PASS" : "FAIL") << ": " << num << ". "
            << title << timing << "\n";
  for (const std::string& why : c.bad) std::cout << "      - " << why << "\n";
  if (!c.bad.empty()) ++failures;
}

void criterion_1(Checks& c) {
  TaskSpec t = fig2_task();
  Model m = Model::local(fig2_cycle());
  c.expect(solve(t, m, 0, Mode::Anonymous).status == SolveStatus::Unsolvable,
           "zero rounds, anonymous: expected UNSOLVABLE");
  c.expect(solve(t, m, 0, Mode::NameAware).status == SolveStatus::Unsolvable,
           "zero rounds, name-aware: expected UNSOLVABLE");
  SolveResult one = solve(t, m, 1, Mode::NameAware);
  c.expect(one.status == SolveStatus::Solvable,
           "one round, name-aware: expected SOLVABLE");
  if (one.status == SolveStatus::Solvable)
    c.expect(verify_map(t, m, 1, Mode::NameAware, one.assignment).empty(),
             "the returned one-round map fails independent re-verification");
}

void criterion_2(Checks& c) {
  TaskSpec t = fig2_task();
  Model m = Model::local(fig2_cycle());
  TaskSpec sp = build_speedup_task(t, m);

  // the worked output facet, in all four input combinations
  for (const Term& X : {R, G})
    for (const Term& x3 : {R, G}) {
      Simplex f(std::vector<Vertex>{
          {1, worked_v1()}, {2, worked_v2(X)}, {3, worked_v3(x3)}});
      c.expect(sp.outputs.contains(f),
               "worked facet missing for inputs (" + X.str() + "," +
                   x3.str() + ")");
    }

  // the committed name admits exactly the eight values whose three cells
  // carry the empty family or {{B}}, independently
  std::vector<Term> got = enumerate_vertex_values(t, m, 1);
  std::vector<std::vector<Term>> none{}, justB{{B}};
  std::vector<Term> expect;
  for (const auto& fa : {none, justB})
    for (const auto& fb : {none, justB})
      for (const auto& fc : {none, justB})
        expect.push_back(sval(B, {{c1, E1, fa}, {c12, E1, fb}, {c13, E1, fc}}));
  std::sort(expect.begin(), expect.end());
  c.expect(got == expect,
           "name 1 vertex values differ from the eight empty-or-{{B}} "
           "combinations");

  c.expect(solve(sp, m, 0, Mode::NameAware).status == SolveStatus::Solvable,
           "the one-round reduction task is not zero-round solvable");

  SpeedupPairVerdict pv = verify_speedup_pair(t, m, 1, Mode::NameAware);
  c.expect(pv.agree && pv.direct.status == SolveStatus::Solvable &&
               pv.reduced.status == SolveStatus::Solvable,
           "round-reduction adjudication disagrees at one round");
}

void criterion_3(Checks& c) {
  TaskSpec t = fig2_task();
  Model m = Model::local(fig2_cycle());
  c.expect(check_t_independence(t.inputs, m, 0).holds,
           "triangle inputs: expected 0-independence to HOLD");
  IndependenceResult r1 = check_t_independence(t.inputs, m, 1);
  c.expect(!r1.holds, "triangle inputs: expected 1-independence to FAIL");

  // hand-built failing instance: views (1:B heard R), (2:R heard B),
  // (3:R heard G) assemble pairwise but not jointly
  Simplex phi = m.closed_simplices()[0];
  Simplex brr = communication_step(Simplex({{1, B}, {2, R}, {3, R}}), phi);
  Simplex bgr = communication_step(Simplex({{1, B}, {2, G}, {3, R}}), phi);
  c.expect(*brr.value_at(1) == *bgr.value_at(1),
           "the two executions disagree at the committed name");
  Simplex base({{1, *brr.value_at(1)}, {2, *brr.value_at(2)}});
  Simplex star({{1, *bgr.value_at(1)}, {3, *bgr.value_at(3)}});
  ProtocolComplex p = protocol_complex(t.inputs, m, 1);
  c.expect(p.complex.contains(base) && p.complex.contains(star),
           "witness pieces are not one-round protocol simplices");
  c.expect(!independence_instance_holds(p.complex, {base, star}),
           "the textbook witness instance unexpectedly assembles");

  TaskSpec ts = two_star_coloring_task(3);
  Model tm = Model::local(undirected(two_star_graph(3)));
  c.expect(check_t_independence(ts.inputs, tm, 0).holds,
           "two-star coloring inputs: expected 0-independence to HOLD");

  TaskSpec cons = consensus_task(2);
  Model wf = Model::wait_free(2);
  for (int rounds = 0; rounds <= 2; ++rounds)
    c.expect(check_t_independence(cons.inputs, wf, rounds).holds,
             "two-process inputs: expected " + std::to_string(rounds) +
                 "-independence to HOLD");
}

void criterion_4(Checks& c) {
  TaskSpec t = perfect_renaming_task(2);
  Model m = Model::wait_free(2);
  for (int rounds = 0; rounds <= 2; ++rounds)
    c.expect(solve(t, m, rounds, Mode::Anonymous).status ==
                 SolveStatus::Unsolvable,
             "anonymous renaming at " + std::to_string(rounds) +
                 " rounds: expected UNSOLVABLE");

  // every reduction facet carries opposite committed outputs on the two
  // solo cells, each a singleton family with a singleton member
  TaskSpec sp = build_speedup_task(t, m);
  c.expect(!sp.outputs.empty(), "the renaming reduction has no outputs");
  const ChannelSet solo1{{1}}, solo2{{2}};
  const Term zero = Term::integer(0), one = Term::integer(1);
  bool pairs_ok = !sp.outputs.empty();
  for (const Simplex& f : sp.outputs.facets()) {
    if (f.size() != 2) {
      pairs_ok = false;
      break;
    }
    auto z1 = family_at(*f.value_at(1), Channel{1}, solo1);
    auto z2 = family_at(*f.value_at(2), Channel{2}, solo2);
    if (z1.size() != 1 || z2.size() != 1 || z1[0].size() != 1 ||
        z2[0].size() != 1 || z1[0][0] == z2[0][0] ||
        !(z1[0][0] == zero || z1[0][0] == one) ||
        !(z2[0][0] == zero || z2[0][0] == one)) {
      pairs_ok = false;
      break;
    }
  }
  c.expect(pairs_ok,
           "a reduction facet lacks the opposite committed solo outputs");
  c.expect(check_includes_original(sp, t).exists,
           "no value-reading extraction of renaming from its reduction");
}

void criterion_5(Checks& c) {
  TaskSpec t = consensus_task(2);
  Model m = Model::wait_free(2);
  for (int rounds = 0; rounds <= 2; ++rounds)
    for (Mode mode : {Mode::Anonymous, Mode::NameAware})
      c.expect(solve(t, m, rounds, mode).status == SolveStatus::Unsolvable,
               std::string("consensus at ") + std::to_string(rounds) +
                   " rounds, " + to_string(mode) + ": expected UNSOLVABLE");
  TaskSpec sp = build_speedup_task(t, m);
  c.expect(check_includes_original(sp, t).exists,
           "no value-reading extraction of consensus from its reduction");
  c.expect(!check_local_checkability(t, m).holds,
           "consensus under wait-free patterns: expected local checkability "
           "to FAIL");
}

void criterion_6(Checks& c) {
  Model c4 = Model::local(cycle_digraph(4));
  Model c5 = Model::local(cycle_digraph(5));
  TaskSpec col4 = coloring_task(cycle_graph(4), 3);
  TaskSpec mis4 = mis_task(cycle_graph(4));
  TaskSpec mis5 = mis_task(cycle_graph(5));

  c.expect(check_edge_checkability(col4, c4).holds,
           "3-coloring on the 4-cycle: expected edge checkability to HOLD");
  c.expect(check_local_checkability(mis4, c4).holds,
           "independent-set indicators on the 4-cycle: expected local "
           "checkability to HOLD");
  c.expect(!check_edge_checkability(mis4, c4).holds,
           "independent-set indicators on the 4-cycle: expected edge "
           "checkability to FAIL, measured HOLDS; the even 4-cycle admits "
           "only the two alternating output facets, so every per-edge set is "
           "forced and the per-edge test accepts; the intended failure is "
           "exhibited on the 5-cycle and pinned by the next sub-checks");
  c.expect(check_local_checkability(mis5, c5).holds,
           "independent-set indicators on the 5-cycle: expected local "
           "checkability to HOLD");
  c.expect(!check_edge_checkability(mis5, c5).holds,
           "independent-set indicators on the 5-cycle: expected edge "
           "checkability to FAIL");

  // per-channel checkability implies reach-level checkability on every
  // built-in task/model pair with matching process counts
  for (const std::string& tn : builtin_task_names())
    for (const std::string& mn : builtin_model_names()) {
      TaskSpec task = builtin_task(tn).value();
      Model model = builtin_model(mn).value();
      if (task.n != model.n()) continue;
      bool edge = check_edge_checkability(task, model).holds;
      if (!edge) continue;
      c.expect(check_local_checkability(task, model).holds,
               "edge checkability without local checkability on " + tn +
                   " / " + mn);
    }
}

void criterion_7(Checks& c) {
  TaskSpec t = builtin_task("coloring-path3").value();
  Model m = builtin_model("hlocal-path3").value();  // 3-node hypergraph path
  LdTransform lt = ld_to_edge_transform(t, m);

  c.expect(check_edge_checkability(lt.transformed, m).holds,
           "the transformed task is not edge-checkable");

  int closed_facets = 0;
  bool all_valid = true;
  for (const Simplex& sigma : t.inputs.facets()) {
    if (m.closed_with_names(sigma.names()).empty()) continue;
    ++closed_facets;
    for (const Simplex& tau : t.delta_of(sigma)) {
      if (tau.names() != sigma.names()) continue;
      Simplex fw = lt.forward(sigma, tau);
      if (!lt.transformed.delta_allows(sigma, fw)) all_valid = false;
      Simplex back = lt.backward(fw);
      if (!t.delta_allows(sigma, back)) all_valid = false;
    }
  }
  c.expect(closed_facets > 0, "no closed input facets to exercise");
  c.expect(all_valid,
           "one simulated round then a zero-round read left an output that "
           "the original relation rejects");
}

void criterion_8(Checks& c) {
  TaskSpec t = fig2_task();
  Model m = Model::local(fig2_cycle());
  TaskSpec sp = build_speedup_task(t, m);

  SolveResult one = solve(t, m, 1, Mode::NameAware);
  c.expect(one.status == SolveStatus::Solvable,
           "no one-round witness to extract values from");
  if (one.status != SolveStatus::Solvable) return;

  std::map<Term, Term> alpha = speedup_values_from_solution(t, m, 1, one);
  c.expect(verify_map(sp, m, 0, Mode::NameAware, alpha).empty(),
           "the extracted values are not a valid zero-round reduction map");

  // read the extracted value at every input vertex, communicate once along
  // the triangle pattern, and check the original relation on each facet
  Simplex phi = m.closed_simplices()[0];
  int covered = 0;
  for (const Simplex& sigma : t.inputs.facets()) {
    std::vector<Vertex> verts;
    bool have_all = true;
    for (const Vertex& v : sigma.vertices()) {
      auto it = alpha.find(class_key(v, Mode::NameAware));
      if (it == alpha.end()) {
        have_all = false;
        break;
      }
      verts.push_back({v.name, it->second});
    }
    if (!have_all) {
      c.expect(false, "an input vertex has no extracted value");
      continue;
    }
    Simplex out = one_round_outputs(t, Simplex(std::move(verts)), phi);
    c.expect(t.delta_allows(sigma, out),
             "one round after reading values yields a rejected output on " +
                 sigma.str());
    ++covered;
  }
  c.expect(covered == 4, "expected all 4 input facets to be exercised");
}

void criterion_9(Checks& c) {
  // closure, star and skeleton laws on a small mixed complex
  Term A = Term::atom("a"), Bb = Term::atom("b");
  auto tri = [&](Term x, Term y, Term z) {
    return Simplex({{1, x}, {2, y}, {3, z}});
  };
  Complex k = Complex::closure_of({tri(A, A, A), tri(A, A, Bb),
                                   Simplex({{2, Bb}, {3, Bb}})});
  bool laws = !k.is_pure() && k.dim() == 2;
  for (const Simplex& s : k.all_simplices()) {
    Complex st = k.star_closure(s);
    if (!st.contains(s)) laws = false;
    for (const Simplex& u : st.all_simplices())
      if (!k.contains(u)) laws = false;
    for (const Simplex& f : st.facets())
      if (!f.has_face(s)) laws = false;
  }
  Complex sk = k.skeleton({2, 3});
  for (const Simplex& s : sk.all_simplices()) {
    if (!k.contains(s)) laws = false;
    for (ProcName nm : s.names())
      if (nm != 2 && nm != 3) laws = false;
  }
  if (!(k.skeleton({1, 2, 3}) == k) || !(sk.skeleton({2, 3}) == sk))
    laws = false;
  c.expect(laws, "a closure/star/skeleton law fails on the mixed complex");

  // pseudosphere facet counts are |X|^n for n <= 3, |X| <= 3
  bool counts = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::vector<Term> vals;
      for (int v = 0; v < m; ++v) vals.push_back(Term::integer(v));
      Complex ps = pseudosphere(n, vals);
      std::size_t want = 1;
      for (int r = 0; r < n; ++r) want *= m;
      if (ps.facets().size() != want || !ps.is_pure() || ps.dim() != n - 1)
        counts = false;
    }
  c.expect(counts, "a pseudosphere facet count misses |X|^n");

  // snapshot pattern counts against the brute-force oracle
  c.expect(snapshot_facet_oracle(2) == 3 &&
               Model::wait_free(2).complex().facets().size() == 3,
           "two-process snapshot patterns: expected 3 facets");
  c.expect(snapshot_facet_oracle(3) == 13 &&
               Model::wait_free(3).complex().facets().size() == 13,
           "three-process snapshot patterns: expected 13 facets");

  // one-round subdivision sizes
  TaskSpec fig2 = fig2_task();
  Model triangle = Model::local(fig2_cycle());
  ProtocolComplex p1 = protocol_complex(fig2.inputs, triangle, 1);
  int edges = 0, vertices = 0;
  for (const Simplex& s : p1.complex.all_simplices()) {
    if (s.dim() == 1) ++edges;
    if (s.dim() == 0) ++vertices;
  }
  c.expect(p1.complex.facets().size() == 4 && edges == 12 && vertices == 8,
           "triangle one-round complex: expected 4 facets, 12 edges, 8 "
           "vertices");

  TaskSpec ren = perfect_renaming_task(2);
  Model wf = Model::wait_free(2);
  c.expect(protocol_complex(ren.inputs, wf, 1).complex.facets().size() == 18,
           "renaming one-round complex: expected 18 facets");
  c.expect(protocol_complex(ren.inputs, wf, 2).complex.facets().size() == 54,
           "renaming two-round complex: expected 54 facets");

  // reachability bookkeeping against the recursive oracle
  bool provenance = true;
  for (int t = 0; t <= 2; ++t) {
    ProtocolComplex p = protocol_complex(ren.inputs, wf, t);
    for (const auto& [sigma, reach] : p.reachable) {
      if (std::set<Simplex>(reach.begin(), reach.end()) !=
          reach_oracle(sigma, wf, t))
        provenance = false;
      for (const Simplex& s : reach)
        if (!p.complex.contains(s)) provenance = false;
    }
  }
  for (int t = 0; t <= 1; ++t) {
    ProtocolComplex p = protocol_complex(fig2.inputs, triangle, t);
    for (const auto& [sigma, reach] : p.reachable)
      if (std::set<Simplex>(reach.begin(), reach.end()) !=
          reach_oracle(sigma, triangle, t))
        provenance = false;
  }
  c.expect(provenance, "recorded reachability disagrees with the recursive "
                       "oracle");
}

void criterion_10(Checks& c) {
  for (const std::string& name : demo_names()) {
    std::string first = render_report(run_demo(name));
    std::string second = render_report(run_demo(name));
    c.expect(!first.empty(), "demo " + name + " renders an empty report");
    c.expect(first == second,
             "demo " + name + " renders differently across two runs");
  }
}

}  // namespace

int main() {
  criterion(1, "oriented-triangle task: impossible in zero rounds, solvable "
               "in one, witness re-verified",
            1.0, criterion_1);
  criterion(2, "one-round reduction of the triangle task: worked facet, "
               "committed-name values, zero-round solution, adjudication",
            10.0, criterion_2);
  criterion(3, "independence suite: triangle holds at 0 and fails at 1 with "
               "the textbook instance, two-star holds, two processes always "
               "hold",
            10.0, criterion_3);
  criterion(4, "renaming chain: anonymous impossibility through two rounds, "
               "opposite committed solo outputs, extraction found",
            60.0, criterion_4);
  criterion(5, "consensus chain: impossibility through two rounds, "
               "extraction found, not locally checkable",
            0.0, criterion_5);
  criterion(6, "checkability suite: coloring and independent-set checks on "
               "cycles, per-channel implies reach-level on built-in pairs",
            5.0, criterion_6);
  criterion(7, "record transform on a 3-node hypergraph path: output "
               "edge-checkable, simulate-then-read stays valid",
            10.0, criterion_7);
  criterion(8, "constructive round-trip on the triangle: extracted values "
               "solve the reduction, one round of talk solves the task",
            5.0, criterion_8);
  criterion(9, "structural suite: complex laws, pseudosphere counts, "
               "snapshot counts, subdivision sizes, reachability oracle",
            30.0, criterion_9);
  criterion(10, "determinism: every demo report is byte-identical across "
                "two runs",
            0.0, criterion_10);

  if (failures == 0) {
    std::cout << "acceptance: all criteria hold\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
