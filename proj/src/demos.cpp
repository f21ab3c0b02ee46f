#include "tasklab/demos.hpp"

#include <sstream>
#include <stdexcept>

#include "tasklab/checkers.hpp"
#include "tasklab/io.hpp"
#include "tasklab/ld_transform.hpp"
#include "tasklab/speedup.hpp"

namespace tasklab {

namespace {

// Collects expectation outcomes; a budget hit suppresses the verdict.
class DemoRun {
 public:
  explicit DemoRun(Report& r) : r_(r) {}

  void expect(const std::string& label, bool ok) {
    r_.put("expect." + label, ok ? "PASS" : "FAIL");
    if (!ok) all_ = false;
  }

  SolveResult solve_line(const std::string& key, const TaskSpec& t,
                         const Model& m, int rounds, Mode mode,
                         const Budget& budget) {
    SolveResult s = solve(t, m, rounds, mode, budget);
    r_.put(key, to_string(s.status));
    if (s.status == SolveStatus::BudgetExceeded) budget_hit_ = true;
    return s;
  }

  void pair_lines(const std::string& key, const SpeedupPairVerdict& v) {
    r_.put(key + ".direct", to_string(v.direct.status));
    r_.put(key + ".reduced", to_string(v.reduced.status));
    r_.put(key + ".agree", v.agree ? "true" : "false");
    if (v.direct.status == SolveStatus::BudgetExceeded ||
        v.reduced.status == SolveStatus::BudgetExceeded)
      budget_hit_ = true;
  }

  void finish() {
    if (budget_hit_) return;
    r_.verdict = all_ ? "ALL-GREEN" : "MISMATCH";
  }

 private:
  Report& r_;
  bool all_ = true;
  bool budget_hit_ = false;
};

void demo_fig2(Report& r, DemoRun& run, const Budget& budget) {
  r.title = "fig2: anchored triangle coloring, one round of speedup";
  TaskSpec t = fig2_task();
  Model m = Model::local(fig2_cycle());
  describe_inputs(r, t, m, budget);

  SolveResult s0a = run.solve_line("solve.anonymous.t0", t, m, 0,
                                   Mode::Anonymous, budget);
  SolveResult s0n = run.solve_line("solve.name-aware.t0", t, m, 0,
                                   Mode::NameAware, budget);
  SolveResult s1 = run.solve_line("solve.name-aware.t1", t, m, 1,
                                  Mode::NameAware, budget);
  run.expect("unsolvable-at-0-anonymous",
             s0a.status == SolveStatus::Unsolvable);
  run.expect("unsolvable-at-0-name-aware",
             s0n.status == SolveStatus::Unsolvable);
  run.expect("solvable-at-1", s1.status == SolveStatus::Solvable);

  TaskSpec sp = build_speedup_task(t, m, budget);
  r.put("speedup.facets", std::to_string(sp.outputs.facet_count()));
  SolveResult sp0 = run.solve_line("speedup.solve.name-aware.t0", sp, m, 0,
                                   Mode::NameAware, budget);
  run.expect("speedup-solvable-at-0", sp0.status == SolveStatus::Solvable);

  SpeedupPairVerdict pv = verify_speedup_pair(t, m, 1, Mode::NameAware, budget);
  run.pair_lines("pair.t1", pv);
  run.expect("pair-agrees", pv.agree);

  r.note("the task needs exactly one exchange: no zero-round assignment");
  r.note("works in either mode, while one round suffices;");
  r.note("the derived one-round-faster task is already solvable with no");
  r.note("communication, and both decisions agree across the pair.");
}

void demo_renaming2(Report& r, DemoRun& run, const Budget& budget) {
  r.title = "renaming2: two processes cannot pick distinct names";
  TaskSpec t = perfect_renaming_task(2);
  Model m = Model::wait_free(2);
  describe_inputs(r, t, m, budget);

  bool all_unsolvable = true;
  for (int rounds = 0; rounds <= 2; ++rounds) {
    std::ostringstream key;
    key << "solve.anonymous.t" << rounds;
    SolveResult s =
        run.solve_line(key.str(), t, m, rounds, Mode::Anonymous, budget);
    all_unsolvable = all_unsolvable && s.status == SolveStatus::Unsolvable;
  }
  run.expect("unsolvable-at-0-1-2", all_unsolvable);

  TaskSpec sp = build_speedup_task(t, m, budget);
  r.put("speedup.facets", std::to_string(sp.outputs.facet_count()));
  Extraction ex = check_includes_original(sp, t, budget);
  r.put("extraction", ex.exists ? "FOUND" : "NONE");
  run.expect("speedup-includes-original", ex.exists);

  SpeedupPairVerdict pv =
      verify_speedup_pair(t, m, 1, Mode::Anonymous, budget);
  run.pair_lines("pair.anonymous.t1", pv);
  run.expect("pair-agrees", pv.agree);

  r.note("symmetric runs keep both processes interchangeable, so no round");
  r.note("count suffices; reading the derived task's values back as names");
  r.note("shows it includes the original task, which propagates the");
  r.note("zero-round impossibility to every horizon.");
}

void demo_consensus2(Report& r, DemoRun& run, const Budget& budget) {
  r.title = "consensus2: two processes cannot agree on one input";
  TaskSpec t = consensus_task(2);
  Model m = Model::wait_free(2);
  describe_inputs(r, t, m, budget);

  CheckabilityResult lc = check_local_checkability(t, m, budget);
  r.put("local-checkability", lc.holds ? "HOLDS" : "FAILS");
  run.expect("not-locally-checkable", !lc.holds);
  if (lc.witness) r.note("checkability witness: " + lc.witness->str());

  bool all_unsolvable = true;
  for (int rounds = 0; rounds <= 2; ++rounds) {
    std::ostringstream key;
    key << "solve.anonymous.t" << rounds;
    SolveResult s =
        run.solve_line(key.str(), t, m, rounds, Mode::Anonymous, budget);
    all_unsolvable = all_unsolvable && s.status == SolveStatus::Unsolvable;
  }
  run.expect("unsolvable-at-0-1-2", all_unsolvable);

  TaskSpec sp = build_speedup_task(t, m, budget);
  r.put("speedup.facets", std::to_string(sp.outputs.facet_count()));
  Extraction ex = check_includes_original(sp, t, budget);
  r.put("extraction", ex.exists ? "FOUND" : "NONE");
  run.expect("speedup-includes-original", ex.exists);

  SpeedupPairVerdict pv = verify_speedup_pair(t, m, 1, Mode::NameAware, budget);
  run.pair_lines("pair.name-aware.t1", pv);
  run.expect("pair-agrees", pv.agree);

  r.note("a process deciding alone must keep its own input, so per-process");
  r.note("checking cannot certify joint agreement; the derived task again");
  r.note("includes the original, extending the impossibility to all rounds.");
}

void demo_twostar(Report& r, DemoRun& run, const Budget& budget) {
  r.title = "twostar: coloring inputs stay extendable without communication";
  TaskSpec t = two_star_coloring_task(3);
  const Model m = *builtin_model("twostar");
  describe_inputs(r, t, m, budget);

  IndependenceResult r0 = check_t_independence(t.inputs, m, 0, budget);
  r.put("independence.t0", r0.holds ? "HOLDS" : "FAILS");
  r.put("independence.t0.instances", std::to_string(r0.instances));
  run.expect("independent-at-0", r0.holds);

  r.put("inputs.facets", std::to_string(t.inputs.facet_count()));
  r.note("every partial zero-round view extends to a full legal input, so");
  r.note("the centers of the joined stars place no constraint on each other");
  r.note("before the first exchange.");
}

void demo_hypertree(Report& r, DemoRun& run, const Budget& budget) {
  r.title = "hypertree: maximal selection on one shared hyperedge";
  TaskSpec t = *builtin_task("gmis-hypertree");
  const Model m = *builtin_model("hlocal-hypertree");
  describe_inputs(r, t, m, budget);

  CheckabilityResult ec = check_edge_checkability(t, m, budget);
  r.put("edge-checkability", ec.holds ? "HOLDS" : "FAILS");
  run.expect("edge-checkable", ec.holds);

  IterateResult it = iterate_speedup(t, m, 1, budget);
  r.put("iterate.status",
        it.status == IterateStatus::Completed ? "COMPLETED" : "HYPOTHESIS-LOST");
  r.put("iterate.steps", std::to_string(it.steps.size()));
  run.expect("iteration-completes",
             it.status == IterateStatus::Completed && it.steps.size() == 1);
  if (!it.steps.empty())
    r.put("iterate.built.facets",
          std::to_string(it.steps[0].built.outputs.facet_count()));

  SpeedupPairVerdict pv = verify_speedup_pair(t, m, 1, Mode::NameAware, budget);
  run.pair_lines("pair.name-aware.t1", pv);
  run.expect("solvable-at-1", pv.direct.status == SolveStatus::Solvable);
  run.expect("pair-agrees", pv.agree);

  r.note("the selection rule is checkable hyperedge by hyperedge, so the");
  r.note("derivation applies and one full iteration goes through with both");
  r.note("horizons agreeing on solvability.");
}

void demo_ld_transform(Report& r, DemoRun& run, const Budget& budget) {
  r.title = "ld-transform: neighborhood checking turned into edge checking";
  TaskSpec t = *builtin_task("coloring-path3");
  const Model m = *builtin_model("hlocal-path3");
  describe_inputs(r, t, m, budget);

  CheckabilityResult lc = check_local_checkability(t, m, budget);
  r.put("local-checkability", lc.holds ? "HOLDS" : "FAILS");
  run.expect("locally-checkable", lc.holds);

  LdTransform tr = ld_to_edge_transform(t, m, budget);
  r.put("transform.facets",
        std::to_string(tr.transformed.outputs.facet_count()));
  CheckabilityResult ec = check_edge_checkability(tr.transformed, m, budget);
  r.put("transform.edge-checkability", ec.holds ? "HOLDS" : "FAILS");
  run.expect("transformed-edge-checkable", ec.holds);

  int pairs = 0;
  bool roundtrip = true;
  for (const Simplex& sigma : t.inputs.facets()) {
    if (!m.names_closed(sigma.names())) continue;
    for (const Simplex& tau : t.delta_of(sigma)) {
      Simplex fw = tr.forward(sigma, tau);
      roundtrip = roundtrip && tr.transformed.delta_allows(sigma, fw) &&
                  tr.backward(fw) == tau;
      ++pairs;
    }
  }
  r.put("roundtrip.pairs", std::to_string(pairs));
  run.expect("collect-then-read-restores-outputs", roundtrip && pairs > 0);

  bool rejected = false;
  std::string why;
  try {
    ld_to_edge_transform(consensus_task(3), m, budget);
  } catch (const std::runtime_error& e) {
    why = e.what();
    rejected = why.find("not locally checkable") != std::string::npos;
  }
  r.put("reject.consensus3", rejected ? "NOT-LOCALLY-CHECKABLE" : "ACCEPTED");
  run.expect("agreement-rejected", rejected);

  r.note("records of neighborhood input/output pairs make validity a");
  r.note("matter of comparing overlaps channel by channel; agreement on the");
  r.note("path stays out of reach because end processes cannot vouch for a");
  r.note("value they never see.");
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"fig2",    "renaming2", "consensus2",
          "twostar", "hypertree", "ld-transform"};
}

Report run_demo(const std::string& name, const Budget& budget) {
  void (*body)(Report&, DemoRun&, const Budget&) = nullptr;
  if (name == "fig2") body = demo_fig2;
  if (name == "renaming2") body = demo_renaming2;
  if (name == "consensus2") body = demo_consensus2;
  if (name == "twostar") body = demo_twostar;
  if (name == "hypertree") body = demo_hypertree;
  if (name == "ld-transform") body = demo_ld_transform;
  if (!body) {
    std::string names;
    for (const std::string& n : demo_names()) names += " " + n;
    throw std::runtime_error("unknown demo \"" + name + "\"; expected one of" +
                             names);
  }

  Report r;
  DemoRun run(r);
  try {
    body(r, run, budget);
    run.finish();
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    if (what.find("budget") == std::string::npos) throw;
    r.put("budget", "EXCEEDED");
    r.note("stopped early: " + what);
  }
  return r;
}

}  // namespace tasklab
