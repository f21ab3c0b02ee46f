// Decides t-round solvability: searches for a chromatic simplicial map from
// the round-t protocol complex to the output complex that agrees with the
// task relation on every closed input simplex.
//
// Vertices of the protocol complex are grouped into classes: in anonymous
// mode two vertices sharing a canonical view must receive one output value
// (decisions independent of names); in name-aware mode every
// (name, view) pair is its own class (processes know their identifiers).  The search is
// a deterministic backtracking over classes ordered by domain size, with
// face-level pruning against the output complex and the agreement images.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tasklab/protocol.hpp"
#include "tasklab/task.hpp"

namespace tasklab {

struct Budget {
  long long search_nodes = 5'000'000;   // backtracking assignments
  long long enumeration = 50'000'000;   // candidate tuples in exhaustive scans
  std::size_t max_facets = 2'000'000;   // materialized facets in constructions
};

enum class SolveStatus { Solvable, Unsolvable, BudgetExceeded };
const char* to_string(SolveStatus s);
const char* to_string(Mode m);

struct VertexClass {
  Term key;
  std::vector<Vertex> members;
  std::vector<Term> domain;
};

struct SolveStats {
  long long nodes = 0;
  long long backtracks = 0;
  std::size_t classes = 0;
  std::size_t constraints = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsolvable;
  Mode mode = Mode::Anonymous;
  int rounds = 0;
  std::map<Term, Term> assignment;  // class key -> output value when solvable
  SolveStats stats;
};

// Class key of a protocol-complex vertex.
Term class_key(const Vertex& v, Mode mode);

SolveResult solve(const TaskSpec& task, const Model& m, int t, Mode mode,
                  const Budget& budget = {});
// Same search against a prebuilt protocol complex.
SolveResult solve_on(const TaskSpec& task, const ProtocolComplex& p, Mode mode,
                     const Budget& budget = {});

struct MapIssue {
  std::string what;
};

// Re-checks a claimed assignment from scratch (coverage, domains,
// simpliciality, agreement); empty result means the map is valid.
std::vector<MapIssue> verify_map(const TaskSpec& task, const Model& m, int t,
                                 Mode mode, const std::map<Term, Term>& assignment);

}  // namespace tasklab
