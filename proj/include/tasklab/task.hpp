// Task specifications (I, O, Delta): an input complex, an output complex,
// and a name-preserving relation mapping each input simplex to the output
// simplices acceptable for it.  Delta is stored extensionally on every
// input simplex; when a builder supplies only facet images, faces inherit
// the projections of their facets' images.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tasklab/complex.hpp"
#include "tasklab/model.hpp"

namespace tasklab {

struct TaskSpec {
  std::string name;
  int n = 0;
  Complex inputs;
  Complex outputs;
  std::map<Simplex, std::vector<Simplex>> delta;  // sorted image lists

  const std::vector<Simplex>& delta_of(const Simplex& s) const;
  bool delta_allows(const Simplex& input, const Simplex& output) const;
};

// Assembles a task, deriving Delta on faces absent from `delta` by
// restricting the images of the facets containing them.  Validates that
// every image simplex lies in O with matching names.
TaskSpec make_task(std::string name, int n, Complex inputs, Complex outputs,
                   std::map<Simplex, std::vector<Simplex>> delta);

struct TaskIssue {
  std::string what;
  Simplex where;
};

// Structural diagnostics: empty images, carrier-map monotonicity gaps.
std::vector<TaskIssue> validate_task(const TaskSpec& t);

// With-IDs variant: input values become (id, x) pairs with distinct ids
// drawn from [1..N]; Delta forwards to the original task's images.
TaskSpec augment_with_ids(const TaskSpec& t, int N);

// Built-in tasks.
TaskSpec consensus_task(int n);                       // binary consensus
TaskSpec renaming_task(int n, int m, int k);          // ids in [m] -> distinct names in [k]
TaskSpec perfect_renaming_task(int n);                // renaming(n, 2n-1 capped, n); n=2 uses m=3
TaskSpec coloring_task(const Graph& g, int k);        // trivial inputs, proper k-colorings
TaskSpec hypergraph_coloring_task(const Hypergraph& h, int k);  // no monochromatic hyperedge
TaskSpec mis_task(const Graph& g);                    // maximal independent set indicators
TaskSpec gmis_task(const Hypergraph& h, const std::vector<int>& thresholds);
TaskSpec fig2_task();                                 // oriented triangle warm-up task
TaskSpec two_star_coloring_task(int k);               // 3-coloring inputs on two joined stars

// The oriented 3-cycle used by fig2: process i hears its in-neighbor,
// arcs 3->1, 1->2, 2->3.
Digraph fig2_cycle();
// Undirected cycle C_n as a digraph with arcs both ways.
Digraph cycle_digraph(int n);
Graph cycle_graph(int n);
Graph two_star_graph(int k);

}  // namespace tasklab
