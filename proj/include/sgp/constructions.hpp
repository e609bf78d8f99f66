// The construction zoo: semidirect products, Schuetzenberger products, free
// products, Rees matrix semigroups (with and without zero), Brandt
// extensions, Bruck-Reilly extensions and (strong) semilattices of
// semigroups.
//
// Finite operands yield validated tables; symbolic operands yield symbolic
// semigroups.  The semidirect and Schuetzenberger finite paths tabulate the
// same symbolic formula code, so both routes exercise one implementation.

#ifndef SGP_CONSTRUCTIONS_HPP_
#define SGP_CONSTRUCTIONS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgp/finite.hpp"
#include "sgp/green.hpp"
#include "sgp/symbolic.hpp"
#include "sgp/term.hpp"

namespace sgp {

// Test-support fault injection for the mutation-sensitivity gate.  Off in
// normal operation; the verify suite flips it to prove the tests can fail.
namespace mutation {

enum class Kind {
  None,
  BrExponent,      // first Bruck-Reilly exponent t-j becomes t+j
  SchutzUnionDrop  // Schuetzenberger middle loses the P1*t2 union term
};

Kind active();
void set_active(Kind kind);
std::optional<Kind> parse(const std::string& token);

}  // namespace mutation

// ---------------------------------------------------------------------
// Semidirect products.

// phi : T -> End(S) for finite S, T; apply[t] is the image map of phi_t.
struct FiniteEndoAction {
  std::vector<std::vector<int>> apply;

  static FiniteEndoAction identity_action(const FiniteSemigroup& s,
                                          const FiniteSemigroup& t);
  // phi_t = constant map at the identity of the monoid s, for every t.
  static FiniteEndoAction constant_identity_action(const FiniteSemigroup& s,
                                                   const FiniteSemigroup& t);
};

struct ActionReport {
  bool ok = true;
  std::string message;  // names the violated law and its witness
};

// Checks that every phi_t is an endomorphism and that phi_{tt'} = phi_t o
// phi_{t'} (right factor applied first).
ActionReport validate_endo_action(const FiniteSemigroup& s,
                                  const FiniteSemigroup& t,
                                  const FiniteEndoAction& phi);

struct EndoAction {
  SymbolicSemigroup domain;  // S
  SymbolicSemigroup index;   // T
  std::function<Term(const Term&, const Term&)> apply;  // phi_t(s)

  Term operator()(const Term& t, const Term& s) const { return apply(t, s); }
};

ActionReport validate_endo_action_bounded(const EndoAction& phi,
                                          std::uint64_t budget);

// Throws std::invalid_argument (with the validator's witness) if phi fails
// validation.
FiniteSemigroup semidirect_product(const FiniteSemigroup& s,
                                   const FiniteSemigroup& t,
                                   const FiniteEndoAction& phi);
SymbolicSemigroup semidirect_product_symbolic(const EndoAction& phi,
                                              std::uint64_t validation_budget);

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t);

// ---------------------------------------------------------------------
// Schuetzenberger products.

FiniteSemigroup schutzenberger_product(const FiniteSemigroup& s,
                                       const FiniteSemigroup& t);
SymbolicSemigroup schutzenberger_product_symbolic(const SymbolicSemigroup& s,
                                                  const SymbolicSemigroup& t);

// {1} diamond T realized on P_f(T) x T.  Products delegate to the generic
// Schuetzenberger product over the trivial monoid and reduce back.
SymbolicSemigroup unit_schutzenberger(const SymbolicSemigroup& t);

// ---------------------------------------------------------------------
// Free products.

// Elements are alternating sequences of factor-tagged entries.
SymbolicSemigroup free_product(std::vector<SymbolicSemigroup> factors);

struct MonoidFreeProduct {
  SymbolicSemigroup sg;
  std::vector<SymbolicSemigroup> factors;
};

// Every factor must declare an identity; elements are reduced sequences
// (no factor identities) plus the adjoined 1.
MonoidFreeProduct monoid_free_product(std::vector<SymbolicSemigroup> factors);

// u is of minimal length in its R-class iff its last letter is not right
// invertible in its factor; bounded search on symbolic factors.
Bounded3 is_minimal_length_in_r_class(const MonoidFreeProduct& mfp,
                                      const Term& u, std::uint64_t budget);

// ---------------------------------------------------------------------
// Rees matrix semigroups and Brandt extensions.

// J x I matrix with entries from S (row j, column i).
struct SandwichMatrix {
  std::vector<std::vector<int>> p;

  int rows() const { return static_cast<int>(p.size()); }
  int cols() const { return p.empty() ? 0 : static_cast<int>(p[0].size()); }
};

// M(S; I, J; P) on I x S x J; (i,s,j)(k,t,l) = (i, s p_{jk} t, l).
FiniteSemigroup rees_matrix(const FiniteSemigroup& s, int num_i, int num_j,
                            const SandwichMatrix& p);

// M^0(S; I, J; P): the Rees quotient by I x {0} x J; S must have a zero.
FiniteSemigroup rees_matrix_zero(const FiniteSemigroup& s, int num_i,
                                 int num_j, const SandwichMatrix& p);

// B(S, I) on (I x S x I) u {0}.
FiniteSemigroup brandt_extension(const FiniteSemigroup& s, int num_i);

// Element helpers for the finite triple universes above.
int rees_index(const FiniteSemigroup& s, int num_i, int num_j, int i,
               int mid, int j);
int rees_zero_index(const FiniteSemigroup& s, int num_i, int num_j, int i,
                    int mid, int j);  // -1 stands for the collapsed zero
int brandt_index(const FiniteSemigroup& s, int num_i, int i, int mid, int j);

// ---------------------------------------------------------------------
// Bruck-Reilly extensions.

// BR(M, theta) on N_0 x M x N_0; theta must be a monoid endomorphism of M
// (validated up to `validation_budget`, throws on a counterexample).
SymbolicSemigroup bruck_reilly(const SymbolicSemigroup& m,
                               std::function<Term(const Term&)> theta,
                               std::uint64_t validation_budget);
// Finite M with theta as an image map.
SymbolicSemigroup bruck_reilly(const FiniteSemigroup& m,
                               const std::vector<int>& theta);

// ---------------------------------------------------------------------
// Semilattices of semigroups.

struct StrongDecomposition {
  FiniteSemigroup y;  // must be a semilattice (commutative and idempotent)
  std::vector<FiniteSemigroup> components;  // indexed by elements of y
  // transitions[{a, b}] for a >= b (i.e. ab = b): image map S_a -> S_b.
  std::map<std::pair<int, int>, std::vector<int>> transitions;
};

struct DecompositionReport {
  bool ok = true;
  std::string message;  // witnessing triple or element pair
};

DecompositionReport validate_strong_decomposition(const StrongDecomposition& d);

// Throws std::invalid_argument with the validator's witness on failure.
FiniteSemigroup strong_semilattice(const StrongDecomposition& d);

// Index of component `alpha`'s element `local` in the glued table.
int strong_semilattice_index(const StrongDecomposition& d, int alpha,
                             int local);

struct SymbolicStrongDecomposition {
  SymbolicSemigroup y;
  std::function<SymbolicSemigroup(const Term&)> component;
  // phi_{alpha,beta}(a) for alpha >= beta in y.
  std::function<Term(const Term&, const Term&, const Term&)> transition;
};

// Validation is restricted to the finite sub-semilattice `box`.
DecompositionReport validate_strong_decomposition_bounded(
    const SymbolicStrongDecomposition& d, const std::vector<Term>& box,
    std::uint64_t budget);

SymbolicSemigroup strong_semilattice_symbolic(
    const SymbolicStrongDecomposition& d, const std::vector<Term>& box,
    std::uint64_t validation_budget);

struct PartitionCheck {
  bool ok = true;
  std::pair<int, int> witness{-1, -1};
  std::string message;
};

// S_alpha S_beta inside S_{alpha beta} for the partition component_of,
// indexed by elements of the semilattice y.
PartitionCheck semilattice_partition_check(const FiniteSemigroup& s,
                                           const std::vector<int>& component_of,
                                           const FiniteSemigroup& y);

}  // namespace sgp

#endif  // SGP_CONSTRUCTIONS_HPP_
