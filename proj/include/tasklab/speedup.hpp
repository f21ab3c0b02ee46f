// The one-round speedup construction: from a task (I, O, Delta) and a model,
// build the task (I, O', Delta') whose (t-1)-round solutions correspond to
// t-round solutions of the original.
//
// A vertex value of O' at name i is a pair (x, S): x an input value, S a
// table assigning to each cell (channel e containing i, channel set E at i)
// a family of member sets, each member a nonempty set of output values at i.
// Vertex rule: within one channel set, any pick of one member per family of
// a channel belonging to that set leaves a common output value.
// Facet rules, over every closed pattern simplex phi and channel e of phi:
//   - a joint selector fixes one member per (name, channel, channel set)
//     triple, shared across all closed patterns, such that every value tuple
//     drawn from the selected members extends the x values on e to an output
//     allowed for some input simplex containing those x values;
//   - the self-loop family of every pattern is a singleton, and the family
//     at (i, e, E) is a copy of the self-loop family of E whenever e belongs
//     to the pattern of some name that hears i while E never hears it back.
// The relation Delta' accepts an output simplex for an input simplex exactly
// when their name sets agree and the x components copy the input values.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tasklab/model.hpp"
#include "tasklab/solver.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

// Decoded speedup value: the carried input plus one family per cell.
// Families are sorted lists of distinct members; members are sorted lists
// of distinct output values.
struct SpeedupValue {
  Term x;
  std::map<std::pair<Channel, ChannelSet>, std::vector<std::vector<Term>>> cells;
};

Term speedup_value_term(const SpeedupValue& v);
SpeedupValue decode_speedup_value(const Term& t);
// Family stored at one cell of an encoded speedup value; throws when the
// value has no such cell.
std::vector<std::vector<Term>> family_at(const Term& value, const Channel& e,
                                         const ChannelSet& E);

// All speedup values admissible at name i by the vertex rule alone, sorted.
std::vector<Term> enumerate_vertex_values(const TaskSpec& task, const Model& m,
                                          ProcName i, const Budget& budget = {});

// The full speedup task: same inputs, outputs generated by the facet rules,
// relation matching x components against the input.
TaskSpec build_speedup_task(const TaskSpec& task, const Model& m,
                            const Budget& budget = {});

// Speedup value adopted at each round-(t-1) protocol vertex by a t-round
// solution of the original task: the member recorded at cell (e, E) for a
// simplex sigma over e near the vertex collects the solution's outputs at i
// across one more round from the star of sigma.  Keys are solver class keys
// of the round-(t-1) complex under the solution's mode.
std::map<Term, Term> speedup_values_from_solution(const TaskSpec& task,
                                                  const Model& m, int t,
                                                  const SolveResult& sol);

// One-round outputs read off speedup values: on a closed pattern phi, the
// members selected per channel (deterministically, first joint choice that
// the facet rules accept) are intersected across each name's channels and
// the least common value is output.
Simplex one_round_outputs(const TaskSpec& task, const Simplex& speedup_simplex,
                          const Simplex& phi);

struct Extraction {
  bool exists = false;
  // Per name: speedup value -> original output value.
  std::map<ProcName, std::map<Term, Term>> read;
};

// Searches for a per-name reading of speedup values as original output
// values under which every output facet accepted for an input facet reads
// as a facet accepted by the original relation for the same input.  When a
// reading exists, any solution of the speedup task yields, facet by facet,
// a solution of the original task in the same number of rounds.
Extraction check_includes_original(const TaskSpec& speedup,
                                   const TaskSpec& original,
                                   const Budget& budget = {});

struct SpeedupPairVerdict {
  SolveResult direct;   // the original task at t rounds
  SolveResult reduced;  // the speedup task at t-1 rounds
  bool agree = false;   // solvability coincides and neither hit the budget
};

// Decides both sides of the speedup equivalence at horizon t.
SpeedupPairVerdict verify_speedup_pair(const TaskSpec& task, const Model& m,
                                       int t, Mode mode,
                                       const Budget& budget = {});

enum class IterateStatus { Completed, HypothesisLost };

struct IterateStep {
  int horizon = 0;              // rounds left before this step's build
  bool edge_checkable = false;  // current task, under the model
  bool independent = false;     // inputs at horizon-1, under the model
  TaskSpec built;
};

struct IterateResult {
  IterateStatus status = IterateStatus::Completed;
  std::vector<IterateStep> steps;
  std::string detail;  // failure reason when a hypothesis is lost
};

// Repeats the construction t times, re-checking edge-checkability of the
// current task and independence of the inputs before each build; stops at
// the first lost hypothesis.
IterateResult iterate_speedup(const TaskSpec& task, const Model& m, int t,
                              const Budget& budget = {});

}  // namespace tasklab
