// Seeded random finite semigroups and endomorphism actions.
//
// Naive rejection over raw tables dies combinatorially past order 3 (the
// associative fraction at order 5 is ~1e-12), so the sampler fills table
// cells in random order and backtracks on the first associativity violation
// it can already decide.  Same filter, feasible proposal; deterministic for
// a fixed seed.

#ifndef SGP_SAMPLING_HPP_
#define SGP_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "sgp/constructions.hpp"
#include "sgp/finite.hpp"

namespace sgp {

using Rng = std::mt19937_64;

// Engine-only bounded draw; std::uniform_int_distribution is not
// reproducible across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

// Random associative table of the exact given order.
FiniteSemigroup random_semigroup(Rng& rng, int order);

// Random semigroup of order 1..max_order (order drawn uniformly).
FiniteSemigroup random_semigroup_up_to(Rng& rng, int max_order);

// Random monoid (a random semigroup conditioned on having an identity,
// with an identity adjoined as fallback).
FiniteSemigroup random_monoid_up_to(Rng& rng, int max_order);

// All endomorphisms of s, in lexicographic map order.  Order <= 5 only.
std::vector<std::vector<int>> all_endomorphisms(const FiniteSemigroup& s);

// Random validated action phi : T -> End(S).  Tries random assignments of
// endomorphisms first; falls back to a constant idempotent-endomorphism
// action or the identity action, so it always succeeds.
FiniteEndoAction random_endo_action(Rng& rng, const FiniteSemigroup& s,
                                    const FiniteSemigroup& t);

}  // namespace sgp

#endif  // SGP_SAMPLING_HPP_
