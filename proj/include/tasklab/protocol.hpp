// Full-information protocol execution.  One communication round turns a
// state simplex (process name -> view) under a closed pattern simplex into
// the next state: each process's new view records, per incident channel,
// the previous views of the channel's members.
//
// View terms:
//   round 0:  the input value itself
//   round t:  (rd, [ (channel, [ (member, subview), ... ]), ... ])
// Channel entries are ordered by channel label and member entries by name
// at construction; anonymous canonicalization renames process names by
// first occurrence (also inside channel labels) without reordering, so
// views of processes occupying symmetric positions become equal while the
// per-channel structure survives.  Round-0 payloads are never renamed.
#pragma once

#include <map>
#include <vector>

#include "tasklab/model.hpp"

namespace tasklab {

enum class Mode { Anonymous, NameAware };

// New view of process i after one round in state `state` (name -> previous
// view) under channel set Ei.  Every channel member must carry a view.
Term next_view(ProcName i, const ChannelSet& Ei, const Simplex& state);

// One communication step: state simplex under a closed pattern simplex with
// the same name set.
Simplex communication_step(const Simplex& state, const Simplex& pattern);

// True for round >= 1 view terms (rd-headed tuples).
bool is_round_view(const Term& view);
// Input value carried by a view: descends self-loop channels to round 0.
Term view_input(const Term& view);
// Anonymous mode: renames process names by first occurrence; identity in
// name-aware mode and on round-0 views.
Term canonical_view(const Term& view, Mode mode);

struct ProtocolComplex {
  int rounds = 0;
  Complex complex;
  // Image of each closed input simplex after `rounds` steps.
  std::map<Simplex, std::vector<Simplex>> reachable;
};

// Round 0: the input complex itself; reachable maps every closed input
// simplex (name set admitting a closed pattern) to itself.
ProtocolComplex initial_protocol(const Complex& inputs, const Model& m);
// One application of the communication map to every closed simplex.
ProtocolComplex advance(const ProtocolComplex& p, const Model& m);
ProtocolComplex protocol_complex(const Complex& inputs, const Model& m, int t);

}  // namespace tasklab
