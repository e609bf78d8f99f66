// Evaluators for the characterization conditions: phi-chains for semidirect
// products, U-ideals for Rees matrix semigroups, witnessed chains for
// semilattices of semigroups.  Semi-decidable questions return three-valued
// verdicts; a bounded search that finds nothing never upgrades to "holds"
// on its own, only declared structural facts (spot-checked) do.

#ifndef SGP_ANALYSIS_HPP_
#define SGP_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgp/constructions.hpp"
#include "sgp/finite.hpp"
#include "sgp/green.hpp"
#include "sgp/symbolic.hpp"

namespace sgp {

enum class Status { Holds, Fails, Unknown };

struct Verdict {
  Status status = Status::Unknown;
  std::string rationale;               // which condition branch fired
  std::vector<std::string> evidence;   // serialized witnesses, exhaustion notes
  std::optional<std::uint64_t> budget;

  explicit operator bool() const { return status == Status::Holds; }

  // Line-oriented interchange form: status, branch, witness (one line per
  // item), budget (when bounded).
  std::string to_report() const;
};

// ---------------------------------------------------------------------
// phi-ideals a(phi_b(S))^1 and phi-chains.

struct PhiIdeal {
  int base = -1;     // a
  int index_t = -1;  // b
  std::vector<int> members;  // sorted

  bool contains(int x) const;
};

PhiIdeal phi_ideal(const FiniteSemigroup& s, const FiniteEndoAction& phi,
                   int a, int b);

struct PhiIdealView {
  Term base;
  Term index_t;
  std::vector<Term> bounded_members;  // enumeration order, duplicate-free
  std::uint64_t budget = 0;

  bool contains(const Term& x) const;
};

PhiIdealView phi_ideal_bounded(const EndoAction& phi, const Term& a,
                               const Term& b, std::uint64_t budget);

struct PhiChainWitness {
  std::vector<Term> bases;        // a_i
  std::vector<Term> indices;      // b_i
  std::vector<Term> s_witnesses;  // a_i = a_{i+1} phi_{b_{i+1}}(s_i)
  std::vector<Term> t_witnesses;  // b_i = b_{i+1} t_i
  std::vector<StepEvidence> strictness;

  std::size_t length() const { return bases.size(); }
};

// Strictly ascending phi-chain of `length` ideals; set strictness is exact
// for finite inputs.
std::optional<PhiChainWitness> phi_chain_search(const FiniteSemigroup& s,
                                                const FiniteSemigroup& t,
                                                const FiniteEndoAction& phi,
                                                int length);

// Bounded variant; elements, indices and multipliers all come from the
// first `budget` enumerated terms, and strictness is budget-qualified.
std::optional<PhiChainWitness> phi_chain_search_bounded(const EndoAction& phi,
                                                        int length,
                                                        std::uint64_t budget);

bool replay_phi_chain(const EndoAction& phi, const PhiChainWitness& w);

// ---------------------------------------------------------------------
// Semidirect product verdicts.

// Finite inputs: decidable, and cross-validated by building S x| T and
// computing its R-poset.
Verdict sdp_verdict(const FiniteSemigroup& s, const FiniteSemigroup& t,
                    const FiniteEndoAction& phi);

// Symbolic: holds only through declared structural facts (spot-checked);
// fails through found witnesses; otherwise unknown at the given budget.
Verdict sdp_verdict_bounded(const EndoAction& phi, int chain_length,
                            std::uint64_t budget);

enum class SurjCase { BothNoetherian, SNoethNoLri, TNoethNoLri, None };

struct SurjVerdict {
  Verdict verdict;
  SurjCase case_label = SurjCase::None;
};

// Precondition: every phi_t surjective; throws std::invalid_argument naming
// the offending t otherwise.
SurjVerdict surj_sdp_classify(const FiniteSemigroup& s,
                              const FiniteSemigroup& t,
                              const FiniteEndoAction& phi);
SurjVerdict surj_sdp_classify_bounded(const EndoAction& phi,
                                      std::uint64_t budget);

// ---------------------------------------------------------------------
// Rees U-ideals.

struct UIdeal {
  std::vector<int> members;  // sorted; U = {p_{ji} : j, i} S

  bool contains(int x) const;
};

UIdeal rees_u_ideal(const FiniteSemigroup& s, const SandwichMatrix& p);

// a = b or a in bU.
bool u_leq(const FiniteSemigroup& s, const UIdeal& u, int a, int b);

// Brute-force gate for the derived R-characterization of M(S; I, J; P):
//   (i,a,j) in (i',a',j')T  =>  i = i' and a in a'U,
//   a in a'U  <=>  exists j': (i,a,j) in (i,a',j')T,
// and cross-i pairs are incomparable.  Membership through one fixed j' sees
// only row j' of P, so the pairwise converse holds existentially over j'.
Verdict rees_r_oracle_check(const FiniteSemigroup& s, int num_i, int num_j,
                            const SandwichMatrix& p);

// ---------------------------------------------------------------------
// Semilattices of semigroups.

struct SosChain {
  ChainWitness chain;
  std::vector<Term> y_indices;  // component of each chain element
  int y_strict_moves = 0;       // steps whose component changes
};

// Ascending R-chain of `length` elements in a semilattice of semigroups,
// annotated with component indices.
std::optional<SosChain> sos_r_witnessed_search(
    const SymbolicSemigroup& s,
    const std::function<Term(const Term&)>& component_of, int length,
    std::uint64_t budget);

std::optional<SosChain> sos_r_witnessed_search(
    const FiniteSemigroup& s, const std::vector<int>& component_of,
    const FiniteSemigroup& y, int length);

// Partition component map of a glued strong semilattice.
std::vector<int> strong_semilattice_partition(const StrongDecomposition& d);

// For a semilattice of monoids with 1_a 1_b = 1_{ab}: every a <= b gives
// 1_a in 1_b S^1.  Premise failure reports not-applicable (Unknown).
Verdict som_identity_chain_check(const FiniteSemigroup& s,
                                 const std::vector<int>& component_of,
                                 const FiniteSemigroup& y);

// Bounded containment law S_a S_b inside S_{ab} for symbolic semilattices
// of semigroups; component_of maps elements to Y terms.
Verdict semilattice_partition_check_bounded(
    const SymbolicSemigroup& s,
    const std::function<Term(const Term&)>& component_of,
    const SymbolicSemigroup& y, std::uint64_t budget);

}  // namespace sgp

#endif  // SGP_ANALYSIS_HPP_
