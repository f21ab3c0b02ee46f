// Round-based communication models as chromatic complexes.  A model vertex
// is (process name, channel set): the channels the process hears from in one
// round.  Channels are member-name sets that include the listener; every
// pattern includes the self-loop {i}.  A simplex is closed when the union of
// all its channels stays inside its own name set.
//
// Builders: wait_free(n), f_resilient(n,f), local(digraph), dyn(digraphs),
// h_local(hypergraph), wf_local(graph), plus explicit facet lists.  Pairwise
// kinds are normalized to the uniform channel encoding ({i,j} pairs plus the
// self-loop), so one communication map serves every kind.
#pragma once

#include <string>
#include <vector>

#include "tasklab/complex.hpp"

namespace tasklab {

struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // (u,v) means u -> v
};

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;
};

using Channel = std::vector<ProcName>;          // sorted member names
using ChannelSet = std::vector<Channel>;        // sorted, distinct

Term channel_term(const Channel& e);
Channel channel_from_term(const Term& t);
Term pattern_term(const ChannelSet& channels);
ChannelSet pattern_from_term(const Term& t);

class Model {
 public:
  static Model wait_free(int n);
  static Model f_resilient(int n, int f);
  static Model local(const Digraph& g);
  static Model dyn(const std::vector<Digraph>& family);
  static Model h_local(const Hypergraph& h);
  static Model wf_local(const Graph& g);
  // Explicit model from facets; validates purity and the channel conditions.
  static Model from_facets(int n, std::vector<Simplex> facets,
                           std::string description = "explicit");

  int n() const { return n_; }
  const std::string& description() const { return desc_; }
  const Complex& complex() const { return complex_; }

  // A model simplex is closed when its channels reach only its own names.
  static bool is_closed(const Simplex& s);
  // All closed simplices, sorted.
  const std::vector<Simplex>& closed_simplices() const { return closed_; }
  // Closed simplices whose name set is exactly `names` (sorted input).
  std::vector<Simplex> closed_with_names(const std::vector<ProcName>& names) const;
  // True when at least one closed simplex has exactly these names.
  bool names_closed(const std::vector<ProcName>& names) const;

  // Channels incident to name i across the whole model, sorted.
  std::vector<Channel> channels_at(ProcName i) const;
  // Channel sets E_i occurring at name i (one per model vertex), sorted.
  std::vector<ChannelSet> patterns_at(ProcName i) const;

 private:
  Model(int n, Complex c, std::string desc);

  int n_ = 0;
  Complex complex_;
  std::string desc_;
  std::vector<Simplex> closed_;
};

}  // namespace tasklab
