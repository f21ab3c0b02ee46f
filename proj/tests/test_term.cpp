#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tasklab/term.hpp"

using namespace tasklab;

TEST_CASE("kinds and accessors") {
  Term i = Term::integer(-7);
  Term a = Term::atom("hello_world");
  Term t = Term::tuple({i, a});
  Term l = Term::list({a, a});
  Term s = Term::set({a, i, a});

  CHECK(i.int_value() == -7);
  CHECK(a.atom_name() == "hello_world");
  CHECK(t.items().size() == 2);
  CHECK(l.items().size() == 2);
  CHECK(s.items().size() == 2);  // duplicate atom collapsed
  CHECK_THROWS(i.items());
  CHECK_THROWS(t.int_value());
}

TEST_CASE("set canonicalization ignores construction order") {
  Term a = Term::atom("a"), b = Term::atom("b"), c = Term::atom("c");
  CHECK(Term::set({c, a, b}) == Term::set({a, b, c}));
  CHECK(Term::set({a, a, b}) == Term::set({b, a}));
  CHECK(Term::list({a, b}) != Term::list({b, a}));
}

TEST_CASE("total order laws") {
  std::vector<Term> sample = {
      Term::integer(-2), Term::integer(0), Term::integer(5),
      Term::atom("a"),   Term::atom("ab"), Term::tuple({}),
      Term::tuple({Term::integer(1)}),
      Term::tuple({Term::integer(1), Term::integer(2)}),
      Term::list({Term::atom("a")}),
      Term::set({Term::integer(1), Term::integer(3)}),
      Term::set({Term::integer(2)}),
  };
  for (const Term& x : sample)
    for (const Term& y : sample) {
      // antisymmetry and equality consistency
      bool eq = (x == y);
      CHECK(eq == ((x <=> y) == std::strong_ordering::equal));
      if (x < y) CHECK(!(y < x));
      for (const Term& z : sample)
        if (x < y && y < z) CHECK(x < z);
    }
}

TEST_CASE("equal terms share hashes") {
  Term x = Term::tuple({Term::integer(3), Term::set({Term::atom("q"), Term::atom("p")})});
  Term y = Term::tuple({Term::integer(3), Term::set({Term::atom("p"), Term::atom("q")})});
  CHECK(x == y);
  CHECK(x.hash() == y.hash());
}

TEST_CASE("render and parse round-trip") {
  std::vector<Term> sample = {
      Term::integer(42),
      Term::integer(-1),
      Term::atom("B"),
      Term::tuple({}),
      Term::tuple({Term::integer(1), Term::atom("x")}),
      Term::list({}),
      Term::set({Term::integer(2), Term::integer(1)}),
      Term::tuple({Term::atom("rd"),
                   Term::list({Term::tuple({Term::set({Term::integer(1)}),
                                            Term::list({Term::tuple({Term::integer(1),
                                                                     Term::atom("B")})})})})}),
  };
  for (const Term& t : sample) {
    CAPTURE(t.str());
    CHECK(Term::parse(t.str()) == t);
  }
}

TEST_CASE("parser accepts whitespace and rejects junk") {
  CHECK(Term::parse(" ( 1 , { 2 , 1 } ) ") ==
        Term::tuple({Term::integer(1), Term::set({Term::integer(1), Term::integer(2)})}));
  CHECK_THROWS(Term::parse(""));
  CHECK_THROWS(Term::parse("(1,"));
  CHECK_THROWS(Term::parse("1 2"));
  CHECK_THROWS(Term::parse("#"));
}
