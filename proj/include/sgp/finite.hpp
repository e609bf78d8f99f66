// Finite semigroups as Cayley tables on indices 0..n-1.

#ifndef SGP_FINITE_HPP_
#define SGP_FINITE_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgp {

// Input/format problems (CLI exit code 2), as opposed to semantic failures
// such as a non-associative table (exit code 1).
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A not-yet-validated table, e.g. fresh from a file or an enumeration sweep.
struct RawTable {
  std::vector<std::vector<int>> entries;
  std::vector<std::string> names;  // empty or one per element

  int order() const { return static_cast<int>(entries.size()); }
};

struct ValidationReport {
  bool well_formed = false;   // square, entries in range
  bool associative = false;
  std::array<int, 3> first_violation{-1, -1, -1};  // lexicographically first
  std::string message;

  bool valid() const { return well_formed && associative; }
};

// Returns valid, or the lexicographically first failing triple (i, j, k).
// Out-of-range entries are reported as malformed, not as non-associativity.
ValidationReport validate_associativity(const RawTable& candidate);

class FiniteSemigroup {
 public:
  // Empty placeholder; every real instance comes from `from`.
  FiniteSemigroup() = default;

  // Throws format_error on a malformed table and std::invalid_argument on a
  // non-associative one.
  static FiniteSemigroup from(const RawTable& candidate);

  int order() const { return n_; }
  int product(int a, int b) const { return table_[a * n_ + b]; }
  const std::vector<int>& flat_table() const { return table_; }

  std::optional<int> identity() const { return identity_; }
  std::optional<int> zero() const { return zero_; }
  bool is_monoid() const { return identity_.has_value(); }

  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  RawTable raw() const;

 private:
  int n_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<std::string> names_;
  std::optional<int> identity_;
  std::optional<int> zero_;
};

// S^1: unchanged when the table scan finds a two-sided identity, otherwise
// one fresh element appended at index n acting as a two-sided identity.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

// S^0, symmetric with an absorbing element.
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s);

struct HomReport {
  enum class Status { Verified, Counterexample, DomainError };
  Status status = Status::Verified;
  std::pair<int, int> witness{-1, -1};  // f(ab) != f(a)f(b)
};

// f is given element-wise; f[a] must lie in T.
HomReport is_homomorphism(const std::vector<int>& f, const FiniteSemigroup& s,
                          const FiniteSemigroup& t);

// A subset of a finite semigroup, normally a subsemigroup.
struct FiniteSubset {
  const FiniteSemigroup* parent = nullptr;
  std::vector<int> members;  // sorted, duplicate-free

  bool contains(int x) const;
  bool is_closed() const;
  // aba = a solvable within the subset, for every a in it.
  bool is_regular() const;
};

// All non-empty subsets closed under the product, in subset-mask order.
std::vector<FiniteSubset> all_subsemigroups(const FiniteSemigroup& s);

// The complement of T is a left ideal of S (and non-empty).
bool complement_is_left_ideal(const FiniteSemigroup& s, const FiniteSubset& t);

// Small stock semigroups used throughout tests, witnesses and sampling.
FiniteSemigroup left_zero(int n);
FiniteSemigroup right_zero(int n);
// n >= 2; index 0 is the zero, every product is 0.
FiniteSemigroup null_semigroup(int n);
FiniteSemigroup cyclic_group(int n);
// ({0..n-1}, min).
FiniteSemigroup min_semilattice(int n);
FiniteSemigroup trivial_monoid();

}  // namespace sgp

#endif  // SGP_FINITE_HPP_
