// Green's R-preorder: a <=_R b iff aS^1 is contained in bS^1, equivalently
// a = b or a = bs for some s in S.  Exact on finite tables, bounded search on
// symbolic semigroups; every negative answer from a bounded search carries
// the budget it exhausted.

#ifndef SGP_GREEN_HPP_
#define SGP_GREEN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgp/finite.hpp"
#include "sgp/symbolic.hpp"
#include "sgp/term.hpp"

namespace sgp {

// ---------------------------------------------------------------------
// Finite case: exact computations.

struct RPoset {
  int n_elements = 0;
  std::vector<int> class_of;               // element -> class id
  std::vector<std::vector<int>> classes;   // class id -> sorted members
  std::vector<std::vector<char>> leq;      // reflexive partial order on ids
  std::vector<std::pair<int, int>> hasse;  // covers (lower, upper)

  int num_classes() const { return static_cast<int>(classes.size()); }
  bool below(int c, int d) const { return leq[c][d] != 0; }
  bool strictly_below(int c, int d) const { return c != d && leq[c][d] != 0; }
  // Number of classes in a longest chain.
  int height() const;
};

bool r_leq(const FiniteSemigroup& s, int a, int b);

// Classes via strongly connected components of the right Cayley graph
// a -> as (all elements as generators), order via condensation reachability;
// cross-validated internally against the principal right ideal sets aS^1.
RPoset r_poset(const FiniteSemigroup& s);

int antichain_width(const RPoset& poset);

// DOT digraph, one node per R-class labeled with its members, one edge per
// Hasse cover, lower class -> upper class, deterministic ordering.
std::string to_dot(const RPoset& poset, const FiniteSemigroup& s);

std::optional<int> local_right_identity(const FiniteSemigroup& s, int a);
bool exists_lri(const FiniteSemigroup& s);
bool all_have_lri(const FiniteSemigroup& s);
// Both the elements and the multiplier candidates come from `within`.
bool all_have_lri_within(const FiniteSemigroup& s, const FiniteSubset& within);
bool is_r_trivial(const FiniteSemigroup& s);

struct SubsetCheck {
  enum class Status { Yes, No, YesUpToBudget };
  Status status = Status::Yes;
  // r-preserving: {a, b, s} with a = bs in S but a not below b within T;
  // right-unitary: {a, b} with ab in T but b outside.
  std::vector<Term> witness;
  bool negative_exhaustive = false;  // the inner non-existence search
  std::uint64_t budget = 0;

  explicit operator bool() const { return status != Status::No; }
};

// Throws std::invalid_argument when t is not closed under the product.
SubsetCheck is_r_preserving(const FiniteSemigroup& s, const FiniteSubset& t);
SubsetCheck is_right_unitary(const FiniteSemigroup& s, const FiniteSubset& t);

// ---------------------------------------------------------------------
// Chains.

struct StepEvidence {
  bool exhaustive = false;  // reverse witness search ran to completion
  std::uint64_t budget = 0;
};

struct ChainWitness {
  // elements[i] = elements[i+1] * multipliers[i]; nullopt marks equality.
  std::vector<Term> elements;
  std::vector<std::optional<Term>> multipliers;
  std::vector<StepEvidence> strictness;

  std::size_t length() const { return elements.size(); }
};

// Checks every step by direct multiplication.
bool replay_chain(const SymbolicSemigroup& s, const ChainWitness& w);

// Exact: extracted from the R-poset, all steps certified exhaustively.
std::optional<ChainWitness> find_ascending_chain(const FiniteSemigroup& s,
                                                 int length);

enum class ChainSearchMode {
  // Chain elements restricted to the enumeration prefix (box semantics).
  PrefixOnly,
  // The prefix is closed under right-multiplication by enumerated
  // multipliers (capped at 4x budget nodes), so chains may pass through
  // elements far beyond the prefix.
  ExpandProducts,
};

// Bounded: multiplier candidates are the first `budget` enumerated terms;
// strictness of each step records that budget.
std::optional<ChainWitness> find_ascending_chain(
    const SymbolicSemigroup& s, int length, std::uint64_t budget,
    ChainSearchMode mode = ChainSearchMode::ExpandProducts);

// ---------------------------------------------------------------------
// Symbolic case: bounded decisions.

struct BoundedFind {
  enum class Kind { Yes, Equal, NoWitnessWithinBudget };
  Kind kind = Kind::NoWitnessWithinBudget;
  std::optional<Term> witness;
  std::uint64_t budget = 0;
};

// Multiplier candidates are the enumerator stream of S itself (not S^1).
BoundedFind r_leq_bounded(const SymbolicSemigroup& s, const Term& a,
                          const Term& b, std::uint64_t budget);

BoundedFind local_right_identity_bounded(const SymbolicSemigroup& s,
                                         const Term& a, std::uint64_t budget);

enum class Bounded3 { True, False, Unknown };

struct LriAggregate {
  Bounded3 verdict = Bounded3::Unknown;
  std::optional<Term> witness;
  std::uint64_t budget = 0;
};

LriAggregate exists_lri_bounded(const SymbolicSemigroup& s,
                                std::uint64_t budget);
// True means: each of the first `budget` elements has an LRI found within
// the budget (a bounded claim, not a proof).
LriAggregate all_have_lri_bounded(const SymbolicSemigroup& s,
                                  std::uint64_t budget);

struct SymbolicSubsemigroup {
  SymbolicSemigroup parent;
  SymbolicSemigroup sub;  // same product, member enumeration
  std::function<bool(const Term&)> contains;
};

// Bounded closure spot-check of `sub` inside `parent`.
bool validate_closure(const SymbolicSubsemigroup& t, std::uint64_t budget);

SubsetCheck is_r_preserving_bounded(const SymbolicSubsemigroup& t,
                                    std::uint64_t budget);
SubsetCheck is_right_unitary_bounded(const SymbolicSubsemigroup& t,
                                     std::uint64_t budget);
// Elements and multipliers both drawn from the subsemigroup's enumeration.
LriAggregate all_have_lri_within_bounded(const SymbolicSubsemigroup& t,
                                         std::uint64_t budget);

namespace detail {

// Path of exactly `length` nodes along strict edges.  Exact longest-path DP
// when the edge relation is acyclic (the usual case for bounded R-orders);
// falls back to capped DFS otherwise.  Deterministic.
std::optional<std::vector<int>> longest_path_chain(
    int n, const std::function<bool(int, int)>& edge, int length);

}  // namespace detail

}  // namespace sgp

#endif  // SGP_GREEN_HPP_
