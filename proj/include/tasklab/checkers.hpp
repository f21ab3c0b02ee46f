// Structural property checkers.
//
// Independence: for a closed communication pattern phi, a channel e of phi,
// and a simplex of round-t views on the names of e, every choice of
// neighbouring view simplices (one per listener j in e and channel
// f in E_j \ {e}, each taken in the star of (j,v_j)) must union into a
// simplex of the round-t protocol complex.  The property depends only on
// the input complex and the model.
//
// Checkability: a task is locally checkable when, under every closed
// pattern, an input/output labeling is globally legal iff every process
// accepts the restriction it can see (its reachable name set J_i); it is
// edge-checkable when the same holds channel by channel.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tasklab/protocol.hpp"
#include "tasklab/solver.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

struct IndependenceWitness {
  Simplex phi;                     // closed model simplex
  Channel channel;                 // the channel e under test
  Simplex base;                    // round-t views on the names of e
  std::vector<Simplex> collection; // chosen star simplices sigma_{f,j}
  bool merge_conflict = false;     // union is not even a chromatic simplex
  Simplex merged;                  // the union, when it merged
  std::string str() const;
};

struct IndependenceResult {
  bool holds = true;
  std::optional<IndependenceWitness> witness;
  long long instances = 0;  // collections examined
};

// Decides t-independence of (inputs, m) by exhaustive enumeration.
IndependenceResult check_t_independence(const Complex& inputs, const Model& m,
                                        int t, const Budget& budget = {});

// Re-checks one concrete instance: merges the collection and tests
// membership in the given protocol complex.  Returns true when the
// instance satisfies the independence condition.
bool independence_instance_holds(const Complex& protocol,
                                 const std::vector<Simplex>& collection);

struct CheckabilityWitness {
  Simplex sigma;        // input simplex
  Simplex phi;          // closed model simplex on the same names
  Simplex tau;          // candidate output labeling
  bool delta_accepts;   // whether tau lies in Delta(sigma)
  std::string detail;   // the local test that disagrees
  std::string str() const;
};

struct CheckabilityResult {
  bool holds = true;
  std::optional<CheckabilityWitness> witness;
  long long instances = 0;  // (sigma, tau, phi) triples examined
};

CheckabilityResult check_local_checkability(const TaskSpec& task, const Model& m,
                                            const Budget& budget = {});
CheckabilityResult check_edge_checkability(const TaskSpec& task, const Model& m,
                                           const Budget& budget = {});

}  // namespace tasklab
