// Command-line front door: load tasks and models (built-in names or files),
// run solvability analyses, property checks, the speedup construction, and
// the named demos.  Reports print to stdout and are byte-stable across runs.
//
// Exit codes: 0 when the analysis completed (holds/fails are data), 1 when
// a demo's own expectations mismatch, 2 on input errors, 3 when a budget
// ran out.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tasklab/checkers.hpp"
#include "tasklab/demos.hpp"
#include "tasklab/io.hpp"
#include "tasklab/ld_transform.hpp"
#include "tasklab/protocol.hpp"
#include "tasklab/report.hpp"
#include "tasklab/speedup.hpp"

using namespace tasklab;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

struct Options {
  std::string task;
  std::string model;
  int t = 0;
  std::string mode = "anonymous";
  Budget budget;
  std::string out;
  std::string emit;
  bool tables = false;
  std::string demo;
};

Mode parse_mode(const std::string& mode) {
  if (mode == "anonymous") return Mode::Anonymous;
  if (mode == "name-aware") return Mode::NameAware;
  throw std::runtime_error("mode must be anonymous or name-aware");
}

void emit(const Report& r, const Options& opt) {
  std::string text = render_report(r);
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.out);
    out << text;
  }
}

void solve_lines(Report& r, const std::string& key, const SolveResult& s) {
  r.put(key, to_string(s.status));
  r.put(key + ".classes", std::to_string(s.stats.classes));
  r.put(key + ".nodes", std::to_string(s.stats.nodes));
}

int exit_for(const SolveResult& s) {
  return s.status == SolveStatus::BudgetExceeded ? kBudget : kOk;
}

int cmd_solve(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Mode mode = parse_mode(opt.mode);
  Report r;
  r.title = "solve " + task.name + " @ " + std::to_string(opt.t) + " rounds";
  describe_inputs(r, task, m, opt.budget);
  SolveResult s = solve(task, m, opt.t, mode, opt.budget);
  r.put("mode", to_string(mode));
  r.put("rounds", std::to_string(opt.t));
  solve_lines(r, "solve", s);
  if (s.status == SolveStatus::Solvable) {
    r.note("decision map (class key -> output value):");
    for (const auto& [key, value] : s.assignment)
      r.note("  " + key.str() + " -> " + value.str());
  }
  if (s.status != SolveStatus::BudgetExceeded)
    r.verdict = to_string(s.status);
  emit(r, opt);
  return exit_for(s);
}

int cmd_protocol(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Report r;
  r.title = "protocol complex of " + task.name + " inputs @ " +
            std::to_string(opt.t) + " rounds";
  describe_inputs(r, task, m, opt.budget);
  ProtocolComplex p = protocol_complex(task.inputs, m, opt.t);
  r.put("rounds", std::to_string(p.rounds));
  r.put("facets", std::to_string(p.complex.facet_count()));
  r.put("simplices", std::to_string(p.complex.simplex_count()));
  for (ProcName i = 1; i <= m.n(); ++i)
    r.put("views." + std::to_string(i),
          std::to_string(p.complex.values_at(i).size()));
  r.verdict = "BUILT";
  emit(r, opt);
  return kOk;
}

int cmd_speedup(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Report r;
  r.title = "speedup construction for " + task.name;
  describe_inputs(r, task, m, opt.budget);
  TaskSpec sp = build_speedup_task(task, m, opt.budget);
  r.put("speedup.name", sp.name);
  r.put("speedup.facets", std::to_string(sp.outputs.facet_count()));
  for (ProcName i = 1; i <= m.n(); ++i)
    r.put("speedup.values." + std::to_string(i),
          std::to_string(sp.outputs.values_at(i).size()));
  if (!opt.emit.empty()) {
    std::ofstream out(opt.emit, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opt.emit);
    out << task_text(sp);
    if (opt.tables) {
      out << "# value tables: x component, then per-cell member families\n";
      for (ProcName i = 1; i <= m.n(); ++i)
        for (const Term& val : sp.outputs.values_at(i)) {
          SpeedupValue v = decode_speedup_value(val);
          out << "# name " << i << " x=" << v.x.str() << "\n";
          for (const auto& [cell, members] : v.cells) {
            out << "#   channel " << channel_term(cell.first).str()
                << " under " << pattern_term(cell.second).str() << ":";
            for (const auto& member : members) {
              out << " {";
              for (std::size_t k = 0; k < member.size(); ++k)
                out << (k ? "," : "") << member[k].str();
              out << "}";
            }
            out << "\n";
          }
        }
    }
    r.note("task written to " + opt.emit);
  }
  r.verdict = "BUILT";
  emit(r, opt);
  return kOk;
}

int cmd_iterate(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Report r;
  r.title = "iterated speedup of " + task.name + " from " +
            std::to_string(opt.t) + " rounds";
  describe_inputs(r, task, m, opt.budget);
  IterateResult it = iterate_speedup(task, m, opt.t, opt.budget);
  for (std::size_t k = 0; k < it.steps.size(); ++k) {
    const IterateStep& step = it.steps[k];
    std::string key = "step." + std::to_string(k + 1);
    r.put(key + ".horizon", std::to_string(step.horizon));
    r.put(key + ".edge-checkable", step.edge_checkable ? "HOLDS" : "FAILS");
    r.put(key + ".independent", step.independent ? "HOLDS" : "FAILS");
    r.put(key + ".facets", std::to_string(step.built.outputs.facet_count()));
  }
  if (!it.detail.empty()) r.note(it.detail);
  r.verdict =
      it.status == IterateStatus::Completed ? "COMPLETED" : "HYPOTHESIS-LOST";
  emit(r, opt);
  return kOk;
}

int cmd_check_independence(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Report r;
  r.title = "independence of " + task.name + " inputs @ " +
            std::to_string(opt.t);
  describe_inputs(r, task, m, opt.budget);
  IndependenceResult res = check_t_independence(task.inputs, m, opt.t,
                                                opt.budget);
  r.put("independence", res.holds ? "HOLDS" : "FAILS");
  r.put("instances", std::to_string(res.instances));
  if (res.witness) r.note("witness: " + res.witness->str());
  r.verdict = res.holds ? "HOLDS" : "FAILS";
  emit(r, opt);
  return kOk;
}

int cmd_check_checkability(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Report r;
  r.title = "checkability of " + task.name;
  describe_inputs(r, task, m, opt.budget);
  CheckabilityResult local = check_local_checkability(task, m, opt.budget);
  CheckabilityResult edge = check_edge_checkability(task, m, opt.budget);
  r.put("local-checkability", local.holds ? "HOLDS" : "FAILS");
  r.put("local.instances", std::to_string(local.instances));
  r.put("edge-checkability", edge.holds ? "HOLDS" : "FAILS");
  r.put("edge.instances", std::to_string(edge.instances));
  if (local.witness) r.note("local witness: " + local.witness->str());
  if (edge.witness) r.note("edge witness: " + edge.witness->str());
  r.verdict = std::string(local.holds ? "LOCAL" : "local") + "+" +
              (edge.holds ? "EDGE" : "edge");
  emit(r, opt);
  return kOk;
}

int cmd_transform_ld(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Report r;
  r.title = "record transform of " + task.name;
  describe_inputs(r, task, m, opt.budget);
  try {
    LdTransform tr = ld_to_edge_transform(task, m, opt.budget);
    for (const auto& [name, J] : tr.reach) {
      std::string js;
      for (ProcName j : J) js += (js.empty() ? "" : ",") + std::to_string(j);
      r.put("reach." + std::to_string(name), "{" + js + "}");
    }
    r.put("transform.facets",
          std::to_string(tr.transformed.outputs.facet_count()));
    CheckabilityResult ec =
        check_edge_checkability(tr.transformed, m, opt.budget);
    r.put("transform.edge-checkability", ec.holds ? "HOLDS" : "FAILS");
    if (!opt.emit.empty()) {
      std::ofstream out(opt.emit, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + opt.emit);
      out << task_text(tr.transformed);
      r.note("task written to " + opt.emit);
    }
    r.verdict = "TRANSFORMED";
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    if (what.find("not locally checkable") == std::string::npos) throw;
    r.note(what);
    r.put("transform", "REJECTED");
    r.verdict = "NOT-LOCALLY-CHECKABLE";
  }
  emit(r, opt);
  return kOk;
}

int cmd_verify_pair(const Options& opt) {
  TaskSpec task = resolve_task(opt.task);
  Model m = resolve_model(opt.model);
  Mode mode = parse_mode(opt.mode);
  Report r;
  r.title = "speedup pair for " + task.name + " @ " + std::to_string(opt.t);
  describe_inputs(r, task, m, opt.budget);
  SpeedupPairVerdict v = verify_speedup_pair(task, m, opt.t, mode, opt.budget);
  r.put("mode", to_string(mode));
  solve_lines(r, "direct", v.direct);
  solve_lines(r, "reduced", v.reduced);
  r.put("agree", v.agree ? "true" : "false");
  bool starved = v.direct.status == SolveStatus::BudgetExceeded ||
                 v.reduced.status == SolveStatus::BudgetExceeded;
  if (!starved) r.verdict = v.agree ? "AGREE" : "DISAGREE";
  emit(r, opt);
  return starved ? kBudget : kOk;
}

int cmd_demo(const Options& opt) {
  Report r = run_demo(opt.demo, opt.budget);
  emit(r, opt);
  if (!r.verdict.has_value()) return kBudget;
  return *r.verdict == "ALL-GREEN" ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide task solvability in round-based full-information "
               "models, build speedup tasks, and check their hypotheses"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_t) {
    sub->add_option("--task", opt.task,
                    "built-in task name or task file path")
        ->required();
    sub->add_option("--model", opt.model,
                    "built-in model name or model file path")
        ->required();
    if (needs_t) sub->add_option("--t", opt.t, "round count")->required();
    sub->add_option("--search-nodes", opt.budget.search_nodes,
                    "backtracking node ceiling");
    sub->add_option("--enumeration", opt.budget.enumeration,
                    "enumeration ceiling");
    sub->add_option("--max-facets", opt.budget.max_facets, "facet ceiling");
    sub->add_option("--out", opt.out, "also write the report to this file");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "decide t-round solvability");
  add_common(solve_cmd, true);
  solve_cmd->add_option("--mode", opt.mode, "anonymous or name-aware");

  CLI::App* protocol_cmd =
      app.add_subcommand("protocol", "build the t-round protocol complex");
  add_common(protocol_cmd, true);

  CLI::App* speedup_cmd =
      app.add_subcommand("speedup", "build the one-round-faster task");
  add_common(speedup_cmd, false);
  speedup_cmd->add_option("--emit", opt.emit, "write the built task here");
  speedup_cmd->add_flag("--tables", opt.tables,
                        "append decoded value tables as comments");

  CLI::App* iterate_cmd = app.add_subcommand(
      "iterate", "iterate the construction down from t rounds");
  add_common(iterate_cmd, true);

  CLI::App* indep_cmd = app.add_subcommand(
      "check-independence", "test t-independence of the task's inputs");
  add_common(indep_cmd, true);

  CLI::App* check_cmd = app.add_subcommand(
      "check-checkability", "test per-process and per-channel checkability");
  add_common(check_cmd, false);

  CLI::App* transform_cmd = app.add_subcommand(
      "transform-ld", "derive the edge-checkable record task");
  add_common(transform_cmd, false);
  transform_cmd->add_option("--emit", opt.emit, "write the derived task here");

  CLI::App* pair_cmd = app.add_subcommand(
      "verify-pair", "solve the task at t and its speedup at t-1");
  add_common(pair_cmd, true);
  pair_cmd->add_option("--mode", opt.mode, "anonymous or name-aware");

  CLI::App* demo_cmd = app.add_subcommand("demo", "run a named demo");
  demo_cmd->add_option("name", opt.demo, "demo name")->required();
  demo_cmd->add_option("--out", opt.out, "also write the report to this file");
  demo_cmd->add_option("--search-nodes", opt.budget.search_nodes,
                       "backtracking node ceiling");
  demo_cmd->add_option("--enumeration", opt.budget.enumeration,
                       "enumeration ceiling");
  demo_cmd->add_option("--max-facets", opt.budget.max_facets, "facet ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(opt);
    if (protocol_cmd->parsed()) return cmd_protocol(opt);
    if (speedup_cmd->parsed()) return cmd_speedup(opt);
    if (iterate_cmd->parsed()) return cmd_iterate(opt);
    if (indep_cmd->parsed()) return cmd_check_independence(opt);
    if (check_cmd->parsed()) return cmd_check_checkability(opt);
    if (transform_cmd->parsed()) return cmd_transform_ld(opt);
    if (pair_cmd->parsed()) return cmd_verify_pair(opt);
    if (demo_cmd->parsed()) return cmd_demo(opt);
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    if (what.find("budget") != std::string::npos) {
      std::cerr << "budget exhausted: " << what << "\n";
      return kBudget;
    }
    std::cerr << "error: " << what << "\n";
    return kInputError;
  }
  return kInputError;
}
