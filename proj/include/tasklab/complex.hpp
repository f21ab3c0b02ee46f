// Chromatic simplicial complexes over process names 1..n.  A vertex is a
// (name, value) pair; a simplex carries at most one vertex per name and is
// stored sorted by name; a complex is represented by its facets (maximal
// simplices) together with a membership index over all faces.
//
// Supported operations: closure of a simplex set, star closure around a
// vertex or simplex, skeleton restricted to a name set, projection of a
// simplex to a name set, pseudospheres, purity and dimension queries.
// The empty complex has dimension -1.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tasklab/term.hpp"

namespace tasklab {

using ProcName = int;

struct Vertex {
  ProcName name = 0;
  Term value;

  bool operator==(const Vertex& o) const = default;
  auto operator<=>(const Vertex& o) const = default;
  std::string str() const;
};

// Nonempty chromatic simplex unless default-constructed (the empty face).
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> verts);  // sorts; throws on repeated name

  static Simplex single(ProcName name, const Term& value);

  const std::vector<Vertex>& vertices() const { return verts_; }
  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }

  std::vector<ProcName> names() const;
  // Value carried at a name, or nullopt when the name is absent.
  std::optional<Term> value_at(ProcName name) const;
  bool has_name(ProcName name) const { return value_at(name).has_value(); }
  bool has_vertex(const Vertex& v) const;

  // True when `face` is a subset of this simplex.
  bool has_face(const Simplex& face) const;

  // Projection pi_J: keep only vertices whose name lies in J.
  Simplex project(const std::vector<ProcName>& J) const;

  // Union of two chromatic simplices; nullopt when some shared name carries
  // two different values (the union is not a simplex).
  static std::optional<Simplex> merge(const Simplex& a, const Simplex& b);

  // All nonempty subsimplices (including this one).
  std::vector<Simplex> faces() const;

  bool operator==(const Simplex& o) const = default;
  auto operator<=>(const Simplex& o) const = default;
  std::string str() const;

 private:
  std::vector<Vertex> verts_;  // sorted by name, names distinct
};

class Complex {
 public:
  Complex() = default;

  // Builds the inclusion closure of the given simplices (empty ones are
  // dropped); keeps the maximal ones as facets.
  static Complex closure_of(std::vector<Simplex> simplices);

  const std::vector<Simplex>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }
  int dim() const;       // max facet dimension; -1 when empty
  bool is_pure() const;  // all facets share the top dimension

  bool contains(const Simplex& s) const;
  bool contains_vertex(const Vertex& v) const;

  // All nonempty simplices, sorted.
  const std::vector<Simplex>& all_simplices() const { return faces_; }
  // All vertices, sorted.
  std::vector<Vertex> vertices() const;
  // Distinct process names appearing in the complex, sorted.
  std::vector<ProcName> names() const;
  // Values carried at a given name, sorted.
  std::vector<Term> values_at(ProcName name) const;
  // Simplices whose name set is exactly `names` (given sorted).
  std::vector<Simplex> simplices_with_names(const std::vector<ProcName>& names) const;

  // Skeleton: subcomplex of simplices whose names lie inside J.
  Complex skeleton(const std::vector<ProcName>& J) const;
  // Closure of the star of a simplex: all faces of facets containing it.
  Complex star_closure(const Simplex& s) const;
  Complex star_closure(const Vertex& v) const {
    return star_closure(Simplex(std::vector<Vertex>{v}));
  }

  std::size_t facet_count() const { return facets_.size(); }
  std::size_t simplex_count() const { return faces_.size(); }

  bool operator==(const Complex& o) const { return facets_ == o.facets_; }
  std::string str() const;

 private:
  std::vector<Simplex> facets_;  // sorted, mutually non-contained
  std::vector<Simplex> faces_;   // sorted closure of facets_
};

// Pseudosphere: every name in `spec` paired with each of its admissible
// values; facets are all full choice combinations.
Complex pseudosphere(const std::vector<std::pair<ProcName, std::vector<Term>>>& spec);
// Uniform pseudosphere over names 1..n with a common value set.
Complex pseudosphere(int n, const std::vector<Term>& values);

}  // namespace tasklab
