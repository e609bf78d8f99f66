#include "doctest.h"

#include "sgp/analysis.hpp"
#include "sgp/sampling.hpp"
#include "sgp/witnesses.hpp"

using namespace sgp;
using namespace sgp::witnesses;

TEST_CASE("registry lookup and aliases") {
  CHECK(witness("W1").name == "W1");
  CHECK(witness("ex-sdp").name == "W1");
  CHECK(witness("schutz-counterexample").name == "W3");
  CHECK(witness("free").name == "W4");
  CHECK(witness("bruck-reilly").name == "W5");
  CHECK(witness("nn-semilattice").name == "W6");
  CHECK(witness("null-chain").name == "W7");
  CHECK_THROWS_AS(witness("W9"), std::invalid_argument);
}

TEST_CASE("W1 products match the displayed rules on |i|, n <= 50") {
  auto const s = w1();
  for (int i = -50; i <= 50; ++i) {
    for (int n = 0; n <= 50; ++n) {
      CHECK(s.mul(Term::aelem(i), Term::xpow(n)) == Term::aelem(i - n));
      CHECK(s.mul(Term::xpow(n), Term::aelem(i)) == Term::aelem(i));
    }
    for (int j = -10; j <= 10; ++j) {
      CHECK(s.mul(Term::aelem(i), Term::aelem(j)) == Term::aelem(j));
    }
  }
  for (int m = 0; m <= 50; ++m) {
    for (int n = 0; n <= 50; ++n) {
      CHECK(s.mul(Term::xpow(m), Term::xpow(n)) == Term::xpow(m + n));
    }
  }
  // Identity behaves.
  CHECK(s.mul(Term::xpow(0), Term::aelem(7)) == Term::aelem(7));
  CHECK(s.mul(Term::aelem(7), Term::xpow(0)) == Term::aelem(7));
}

TEST_CASE("W1 spot examples") {
  auto const s = w1();
  CHECK(s.mul(Term::aelem(5), Term::xpow(2)) == Term::aelem(3));
  CHECK(s.mul(Term::xpow(3), Term::aelem(2)) == Term::aelem(2));
  CHECK(s.mul(Term::aelem(1), Term::aelem(2)) == Term::aelem(2));
}

TEST_CASE("W1 randomized associativity") {
  auto const s = w1();
  auto const window = s.prefix(200);
  Rng rng(41);
  for (int trial = 0; trial < 10'000; ++trial) {
    auto const& u = window[uniform_below(rng, window.size())];
    auto const& v = window[uniform_below(rng, window.size())];
    auto const& w = window[uniform_below(rng, window.size())];
    CHECK(s.mul(s.mul(u, v), w) == s.mul(u, s.mul(v, w)));
  }
}

TEST_CASE("W2 adjoins a zero to W1 and carries phi_e") {
  auto const s = w2();
  CHECK(s.zero == Term::zero());
  CHECK(s.identity == Term::xpow(0));
  CHECK(s.mul(Term::zero(), Term::aelem(3)) == Term::zero());

  auto const phi = w2_phi_action();
  auto const e = Term::fin(0);
  CHECK(phi(e, Term::xpow(2)) == Term::xpow(2));
  CHECK(phi(e, Term::aelem(3)) == Term::zero());
  CHECK(phi(e, Term::zero()) == Term::zero());
  CHECK(validate_endo_action_bounded(phi, 500).ok);
}

TEST_CASE("W3 realizes the unit Schuetzenberger product of W1") {
  auto const s = w3();
  CHECK(s.identity
        == Term::pair(Term::set({}), Term::xpow(0)));
  // ({a_2}, a_3)(empty, x) = ({a_1}, a_2).
  CHECK(s.mul(Term::pair(Term::set({Term::aelem(2)}), Term::aelem(3)),
              Term::pair(Term::set({}), Term::xpow(1)))
        == Term::pair(Term::set({Term::aelem(1)}), Term::aelem(2)));
}

TEST_CASE("W5 is the Bruck-Reilly extension of C2 by the collapse map") {
  auto const s = w5();
  CHECK(s.identity == Term::br(0, Term::fin(0), 0));
  CHECK(s.mul(Term::br(0, Term::fin(1), 0), Term::br(0, Term::fin(1), 0))
        == Term::br(0, Term::fin(0), 0));
  CHECK(s.mul(Term::br(1, Term::fin(1), 2), Term::br(3, Term::fin(1), 1))
        == Term::br(2, Term::fin(1), 1));
}

TEST_CASE("W6 products match the min/max formula on a box") {
  auto const s = w6();
  auto make = [](std::int64_t i, std::int64_t n) {
    return Term::comp_keyed(Term::tup({i}), Term::tup({i, n}));
  };
  for (int i = 1; i <= 8; ++i) {
    for (int m = 1; m <= 8; ++m) {
      for (int j = 1; j <= 8; ++j) {
        for (int n = 1; n <= 8; ++n) {
          auto const lo = std::min(i, j);
          auto const expected =
              make(lo, std::max(m + i - lo, n + j - lo));
          CHECK(s.mul(make(i, m), make(j, n)) == expected);
        }
      }
    }
  }
}

TEST_CASE("W6 is a semilattice on the box and obeys the order law") {
  auto const s = w6();
  auto make = [](std::int64_t i, std::int64_t n) {
    return Term::comp_keyed(Term::tup({i}), Term::tup({i, n}));
  };
  for (int i = 1; i <= 8; ++i) {
    for (int m = 1; m <= 8; ++m) {
      CHECK(s.mul(make(i, m), make(i, m)) == make(i, m));
      for (int j = 1; j <= 8; ++j) {
        for (int n = 1; n <= 8; ++n) {
          CHECK(s.mul(make(i, m), make(j, n)) == s.mul(make(j, n), make(i, m)));
          bool const below = s.mul(make(j, n), make(i, m)) == make(i, m);
          if (below && !(i == j && m == n)) {
            CHECK(i <= j);
            CHECK(m >= n);
            if (i < j) {
              CHECK(m > n);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("W7 products match the displayed rules on |i|, n <= 50") {
  auto const s = w7();
  for (int i = 1; i <= 50; ++i) {
    for (int j = -50; j <= 50; ++j) {
      CHECK(s.mul(Term::xpow(i), Term::aelem(j)) == Term::aelem(j - i));
      CHECK(s.mul(Term::aelem(j), Term::xpow(i)) == Term::aelem(j - i));
    }
    CHECK(s.mul(Term::xpow(i), Term::zero()) == Term::zero());
    CHECK(s.mul(Term::zero(), Term::xpow(i)) == Term::zero());
  }
  CHECK(s.mul(Term::xpow(2), Term::aelem(3)) == Term::aelem(1));
  CHECK(s.mul(Term::aelem(1), Term::aelem(2)) == Term::zero());
}

TEST_CASE("W7 is a semilattice of semigroups over Y = {1 > 0}") {
  auto const s = w7();
  auto const y = as_symbolic(min_semilattice(2));
  auto const check = semilattice_partition_check_bounded(
      s, [](const Term& t) { return Term::fin(w7_component(t)); }, y, 400);
  CHECK(check.status == Status::Holds);

  // The finite fragment {x, x^2, a_0, a_1, 0}: the containment law holds on
  // every product that stays inside the fragment.
  std::vector<Term> const fragment{Term::xpow(1), Term::xpow(2),
                                   Term::aelem(0), Term::aelem(1),
                                   Term::zero()};
  auto const in_fragment = [&](const Term& t) {
    return std::find(fragment.begin(), fragment.end(), t) != fragment.end();
  };
  int in_range = 0;
  for (auto const& u : fragment) {
    for (auto const& v : fragment) {
      auto const uv = s.mul(u, v);
      if (!in_fragment(uv)) {
        continue;
      }
      ++in_range;
      CHECK(w7_component(uv)
            == std::min(w7_component(u), w7_component(v)));
    }
  }
  CHECK(in_range > 0);
}

TEST_CASE("registry witnesses validate on their enumeration prefixes") {
  for (auto const& name : witness_names()) {
    auto const s = witness(name);
    auto const v = validate_symbolic(s, 2000);
    INFO(name << ": " << v.message);
    CHECK(v.ok());
  }
}

TEST_CASE("free monoid and free semigroup on larger alphabets") {
  auto const fm = free_monoid(2);
  CHECK(fm.identity.has_value());
  CHECK(fm.mul(Term::word({0, 1}), Term::word({1})) == Term::word({0, 1, 1}));
  CHECK(validate_symbolic(fm, 300).ok());

  auto const fs = free_semigroup(2);
  CHECK(!fs.identity.has_value());
  CHECK(fs.declared_no_lri.value_or(false));
  CHECK(validate_symbolic(fs, 300).ok());
}
