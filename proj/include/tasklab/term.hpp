// Canonical immutable values used for process inputs, outputs, views and
// structured labels.  A Term is one of: integer, atom (symbolic constant),
// tuple (fixed arity, ordered), list (ordered), set (sorted, deduplicated).
// Terms have a total order, a structural hash, and a stable text syntax:
//
//   42   -17   red   (a,b,c)   [x,y]   {1,2,3}
//
// Sets are canonicalized on construction, so two Terms are equal iff their
// text renderings are equal.  Copies are cheap (shared immutable nodes).
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tasklab {

class Term {
 public:
  enum class Kind : std::uint8_t { Int, Atom, Tuple, List, Set };

  // Default-constructed term is the empty tuple.
  Term();

  static Term integer(long long v);
  static Term atom(const std::string& name);
  static Term tuple(std::vector<Term> items);
  static Term list(std::vector<Term> items);
  static Term set(std::vector<Term> items);  // sorts and deduplicates

  Kind kind() const;
  bool is_int() const { return kind() == Kind::Int; }
  bool is_atom() const { return kind() == Kind::Atom; }

  long long int_value() const;          // requires Int
  const std::string& atom_name() const; // requires Atom
  const std::vector<Term>& items() const;  // requires Tuple/List/Set

  std::size_t hash() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const Term& o) const;

  // Canonical rendering; parse() inverts it.  parse() throws
  // std::runtime_error on malformed input.
  std::string str() const;
  static Term parse(const std::string& text);

  struct Node;  // immutable shared representation

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

}  // namespace tasklab
