// Countable semigroups given by a product rule on canonical terms plus a
// graded enumerator.
//
// Equality of elements is term equality after canonicalization, so every
// product rule must return canonical terms.  The enumerator lists the terms
// of each grade (the declared size function) in serialized order; grades are
// finite, disjoint, and jointly exhaustive.  Identity, zero and structural
// facts used by the analysis evaluators are declared, never inferred;
// declared facts are spot-checked by validate_symbolic and the test suite.

#ifndef SGP_SYMBOLIC_HPP_
#define SGP_SYMBOLIC_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sgp/finite.hpp"
#include "sgp/term.hpp"

namespace sgp {

class SymbolicSemigroup {
 public:
  std::string name;
  std::function<Term(const Term&, const Term&)> product;
  std::function<Term(const Term&)> canonicalize;  // null = already canonical
  std::function<std::vector<Term>(std::int64_t)> grade;
  std::optional<std::int64_t> max_grade;  // set when the universe is finite
  std::optional<Term> identity;
  std::optional<Term> zero;

  // Structural facts established externally (and spot-checked), consumed by
  // the analysis evaluators.  Bounded searches alone never set these.
  std::optional<bool> declared_r_noetherian;
  std::optional<bool> declared_no_lri;

  SymbolicSemigroup();
  // Copies get a fresh enumeration cache, so overriding `grade` (or any
  // other callable) on a copy is safe.  Moves keep the cache.
  SymbolicSemigroup(const SymbolicSemigroup& other);
  SymbolicSemigroup& operator=(const SymbolicSemigroup& other);
  SymbolicSemigroup(SymbolicSemigroup&&) = default;
  SymbolicSemigroup& operator=(SymbolicSemigroup&&) = default;

  Term mul(const Term& a, const Term& b) const { return product(a, b); }
  Term canon(const Term& t) const {
    return canonicalize ? canonicalize(t) : t;
  }

  // idx-th term of the enumeration; nullopt past the end of a finite
  // universe.
  std::optional<Term> at(std::uint64_t idx) const;
  // First min(count, universe size) terms.
  std::vector<Term> prefix(std::uint64_t count) const;
  // Terms of exact grade g, sorted by serialization (cached).
  const std::vector<Term>& terms_of_grade(std::int64_t g) const;
  // All terms of grade <= g in enumeration order.
  std::vector<Term> terms_up_to_grade(std::int64_t g) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::vector<Term>> grades;
    std::vector<Term> flat;
    std::int64_t flat_next_grade = 0;
    bool exhausted = false;
  };
  void ensure_grade(std::int64_t g) const;  // caller holds the cache mutex
  std::shared_ptr<Cache> cache_;
};

// View of a finite table as a symbolic semigroup on Fin terms (grade i holds
// exactly the term for element i).
SymbolicSemigroup as_symbolic(const FiniteSemigroup& s);

// Materializes a symbolic semigroup with exactly `expected` elements into a
// validated table.  Throws std::invalid_argument when the enumerator does not
// produce exactly `expected` terms or a product escapes them.
FiniteSemigroup tabulate(const SymbolicSemigroup& s, std::size_t expected);

// Wraps with a fresh identity/zero unless one is declared.
SymbolicSemigroup adjoin_identity(const SymbolicSemigroup& s);
SymbolicSemigroup adjoin_zero(const SymbolicSemigroup& s);

struct SymbolicValidation {
  bool canonicalize_idempotent = true;
  bool enumerator_injective = true;
  bool products_canonical = true;
  bool identity_law = true;
  bool zero_law = true;
  std::uint64_t terms_checked = 0;
  std::string message;

  bool ok() const {
    return canonicalize_idempotent && enumerator_injective
           && products_canonical && identity_law && zero_law;
  }
};

// Spot-checks the SymbolicSemigroup invariants on the first `count` terms.
// Product canonicity is sampled on a fixed quadratic slice to stay cheap.
SymbolicValidation validate_symbolic(const SymbolicSemigroup& s,
                                     std::uint64_t count);

struct BoundedHomReport {
  enum class Status { VerifiedUpToBudget, Counterexample };
  Status status = Status::VerifiedUpToBudget;
  std::pair<Term, Term> witness;
  std::uint64_t budget = 0;
};

BoundedHomReport is_homomorphism_bounded(
    const std::function<Term(const Term&)>& f, const SymbolicSemigroup& s,
    const SymbolicSemigroup& t, std::uint64_t budget);

}  // namespace sgp

#endif  // SGP_SYMBOLIC_HPP_
