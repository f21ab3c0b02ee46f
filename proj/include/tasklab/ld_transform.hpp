// Turning a locally checkable task into an edge-checkable one.
//
// Under a hyperedge-sharing model every name i reaches the union J_i of its
// channels.  The transformed task asks each name to output a full labeled
// record of its reach: one (input, output) pair per member of J_i, legal for
// the original relation when read as a pair of simplices on J_i.  A record
// collection is accepted for an input simplex when each name's own input
// entry matches its actual input and any two names sharing a channel agree
// on the channel's records.  Agreement is a channel-by-channel condition, so
// the transformed task is edge-checkable; one round of communication turns
// any original solution into records (forward), and reading the own entry
// turns records back into an original solution (backward).
#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "tasklab/model.hpp"
#include "tasklab/solver.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

// One labeled entry of a record: (member name, its input, its output).
struct LdLabel {
  ProcName name = 0;
  Term x;
  Term y;
  bool operator==(const LdLabel& o) const {
    return name == o.name && x == o.x && y == o.y;
  }
};

// Record values encode as ("rec", [(name, x, y), ...]) sorted by name.
Term ld_value_term(const std::vector<LdLabel>& labels);
std::vector<LdLabel> ld_labels(const Term& value);

struct LdTransform {
  TaskSpec transformed;
  std::map<ProcName, std::vector<ProcName>> reach;  // J_i, sorted

  // One round: every name of the closed simplex collects the inputs and
  // outputs across its reach.  tau must be an accepted output for sigma.
  Simplex forward(const Simplex& sigma, const Simplex& tau) const;

  // Zero rounds: every name reads its own entry from its record.
  Simplex backward(const Simplex& speedup_simplex) const;
};

// Builds the transformed task; requires the original to be locally
// checkable under the model and throws otherwise.
LdTransform ld_to_edge_transform(const TaskSpec& task, const Model& m,
                                 const Budget& budget = {});

}  // namespace tasklab
