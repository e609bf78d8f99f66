// The registry of named symbolic semigroups used throughout the suite.
//
//   W1  monoid {x^n : n >= 0} u {a_i : i in Z} with a_i x^n = a_{i-n},
//       x^n a_j = a_i a_j = a_j
//   W2  W1 with a zero adjoined (carries the endomorphism action phi_e that
//       fixes x-powers and kills everything else)
//   W3  {1} <> W1 realized on P_f(W1) x W1 through the generic
//       Schuetzenberger product
//   W4  free monogenic monoid {x}*
//   W5  Bruck-Reilly extension of the 2-element group by the collapse map
//   W6  strong semilattice over (N, min) with components ({i} x N, max) and
//       transitions (i, n) -> (j, n + i - j)
//   W7  {x}+ u ({a_i : i in Z} u {0}) with x^i a_j = a_j x^i = a_{j-i} and
//       all other mixed products 0
//
// Enumeration grades: |i| for a_i, n for x^n, max(i, j, |a|) for
// Bruck-Reilly triples, max(set size, member grades) for finite sets,
// componentwise max for pairs; ties within a grade break on the serialized
// term.

#ifndef SGP_WITNESSES_HPP_
#define SGP_WITNESSES_HPP_

#include <string>
#include <vector>

#include "sgp/constructions.hpp"
#include "sgp/symbolic.hpp"

namespace sgp::witnesses {

// Throws std::invalid_argument for unknown names.  Accepts W1..W7 and the
// aliases ex-sdp, schutz-counterexample, free, bruck-reilly, nn-semilattice,
// null-chain.
SymbolicSemigroup witness(const std::string& name);

std::vector<std::string> witness_names();

SymbolicSemigroup w1();
SymbolicSemigroup w2();
SymbolicSemigroup w3();
SymbolicSemigroup w4();
SymbolicSemigroup w5();
SymbolicSemigroup w6();
SymbolicSemigroup w7();

// phi : {e} -> End(W2), phi_e fixing x-powers and sending {a_i} u {0} to 0.
EndoAction w2_phi_action();

// The decomposition behind W6, for the semilattice analysis operations.
SymbolicStrongDecomposition w6_decomposition();

// W7's structure semilattice Y = {1 > 0}: component 1 holds the x-powers,
// component 0 the null part.
int w7_component(const Term& t);

// Free monogenic semigroup {x}+ (no identity, no element with a local right
// identity).
SymbolicSemigroup free_semigroup_monogenic();

// Free semigroup/monoid on an alphabet of `letters` >= 1 symbols.
SymbolicSemigroup free_semigroup(int letters);
SymbolicSemigroup free_monoid(int letters);

}  // namespace sgp::witnesses

#endif  // SGP_WITNESSES_HPP_
