// Canonical term algebra shared by every symbolic semigroup in the library.
//
// A Term is a small tagged tree: construction elements (pairs, Rees triples,
// reduced sequences, finite subsets, ...) are all represented uniformly so
// that equality, ordering, hashing and printing are decidable and total.

#ifndef SGP_TERM_HPP_
#define SGP_TERM_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace sgp {

enum class Tag : std::uint8_t {
  Fin,     // element of a finite table, ints = {index}
  One,     // adjoined or declared identity
  Zero,    // adjoined or distinguished zero
  XPow,    // x^n in a monogenic (free) semigroup/monoid, ints = {n}
  AElem,   // a_i in a Z-indexed family, ints = {i}
  Word,    // non-empty word over a finite alphabet, ints = letters
  Tup,     // flat integer tuple
  Pair,    // (s, t), subs = {s, t}
  Set,     // duplicate-free set in canonical order, subs = members
  Triple,  // (s, P, t), subs = {s, P, t} with P a Set of Pairs
  Seq,     // free-product sequence, subs = factor-tagged entries
  Comp,    // factor/component-tagged value; ints = {factor}, subs = {value},
           // or ints = {} and subs = {component_key, value}
  Rees,    // (i, s, j), ints = {i, j}, subs = {s}
  BRt,     // (i, a, j) with i, j in N_0, ints = {i, j}, subs = {a}
};

struct Term {
  Tag tag = Tag::Zero;
  std::vector<std::int64_t> ints;
  std::vector<Term> subs;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const;

  // Deterministic human-readable form; also the enumeration tie-breaker.
  std::string str() const;

  static Term fin(std::int64_t i);
  static Term one();
  static Term zero();
  static Term xpow(std::int64_t n);
  static Term aelem(std::int64_t i);
  static Term word(std::vector<std::int64_t> letters);
  static Term tup(std::vector<std::int64_t> values);
  static Term pair(Term s, Term t);
  // Sorts by serialized components and removes duplicates.
  static Term set(std::vector<Term> members);
  static Term triple(Term s, Term p, Term t);
  static Term seq(std::vector<Term> entries);
  static Term comp(std::int64_t factor, Term value);
  static Term comp_keyed(Term key, Term value);
  static Term rees(std::int64_t i, Term s, std::int64_t j);
  static Term br(std::int64_t i, Term a, std::int64_t j);
};

// -1, 0, +1; total order (tag, ints, subs lexicographically).
int compare(const Term& a, const Term& b);

std::size_t hash_value(const Term& t);

struct TermHash {
  std::size_t operator()(const Term& t) const { return hash_value(t); }
};

}  // namespace sgp

#endif  // SGP_TERM_HPP_
