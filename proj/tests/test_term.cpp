#include "doctest.h"

#include "sgp/term.hpp"

using sgp::Term;

TEST_CASE("term equality and ordering are structural") {
  CHECK(Term::xpow(2) == Term::xpow(2));
  CHECK(Term::xpow(2) != Term::xpow(3));
  CHECK(Term::xpow(2) != Term::aelem(2));
  CHECK(Term::pair(Term::xpow(1), Term::aelem(0))
        == Term::pair(Term::xpow(1), Term::aelem(0)));
  CHECK(compare(Term::aelem(-1), Term::aelem(1)) < 0);
  CHECK(sgp::hash_value(Term::xpow(2)) == sgp::hash_value(Term::xpow(2)));
}

TEST_CASE("set canonicalization sorts by serialized components and dedups") {
  auto const p1 = Term::pair(Term::aelem(2), Term::xpow(1));
  auto const p2 = Term::pair(Term::aelem(-1), Term::xpow(3));
  auto const s1 = Term::set({p1, p2, p1});
  auto const s2 = Term::set({p2, p1});
  CHECK(s1 == s2);
  CHECK(s1.subs.size() == 2);
  // "a_-1" sorts before "a_2".
  CHECK(s1.subs[0] == p2);
}

TEST_CASE("serialization forms") {
  CHECK(Term::xpow(1).str() == "x");
  CHECK(Term::xpow(3).str() == "x^3");
  CHECK(Term::aelem(-2).str() == "a_-2");
  CHECK(Term::zero().str() == "0");
  CHECK(Term::one().str() == "1");
  CHECK(Term::fin(4).str() == "e4");
  CHECK(Term::pair(Term::fin(0), Term::fin(1)).str() == "(e0,e1)");
  CHECK(Term::rees(0, Term::fin(1), 2).str() == "(0|e1|2)");
  CHECK(Term::br(1, Term::fin(0), 3).str() == "(1,e0,3)");
  CHECK(Term::set({Term::aelem(1)}).str() == "{a_1}");
  CHECK(Term::tup({2, 5}).str() == "(2,5)");
  CHECK(Term::word({0, 1, 0}).str() == "xyx");
  CHECK(Term::comp(1, Term::fin(0)).str() == "1:e0");
  CHECK(Term::seq({Term::comp(0, Term::fin(1)), Term::comp(1, Term::fin(0))})
            .str()
        == "(0:e1,1:e0)");
}
