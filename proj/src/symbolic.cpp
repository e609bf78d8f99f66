#include "sgp/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace sgp {

SymbolicSemigroup::SymbolicSemigroup() : cache_(std::make_shared<Cache>()) {}

SymbolicSemigroup::SymbolicSemigroup(const SymbolicSemigroup& other)
    : name(other.name),
      product(other.product),
      canonicalize(other.canonicalize),
      grade(other.grade),
      max_grade(other.max_grade),
      identity(other.identity),
      zero(other.zero),
      declared_r_noetherian(other.declared_r_noetherian),
      declared_no_lri(other.declared_no_lri),
      cache_(std::make_shared<Cache>()) {}

SymbolicSemigroup& SymbolicSemigroup::operator=(const SymbolicSemigroup& other) {
  if (this != &other) {
    name = other.name;
    product = other.product;
    canonicalize = other.canonicalize;
    grade = other.grade;
    max_grade = other.max_grade;
    identity = other.identity;
    zero = other.zero;
    declared_r_noetherian = other.declared_r_noetherian;
    declared_no_lri = other.declared_no_lri;
    cache_ = std::make_shared<Cache>();
  }
  return *this;
}

void SymbolicSemigroup::ensure_grade(std::int64_t g) const {
  while (static_cast<std::int64_t>(cache_->grades.size()) <= g) {
    auto const next = static_cast<std::int64_t>(cache_->grades.size());
    std::vector<Term> batch;
    if (!max_grade || next <= *max_grade) {
      batch = grade(next);
      std::sort(batch.begin(), batch.end(), [](const Term& a, const Term& b) {
        return a.str() < b.str();
      });
    }
    cache_->grades.push_back(std::move(batch));
  }
}

const std::vector<Term>& SymbolicSemigroup::terms_of_grade(
    std::int64_t g) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  ensure_grade(g);
  return cache_->grades[g];
}

std::vector<Term> SymbolicSemigroup::terms_up_to_grade(std::int64_t g) const {
  std::vector<Term> out;
  for (std::int64_t h = 0; h <= g; ++h) {
    auto const& batch = terms_of_grade(h);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::optional<Term> SymbolicSemigroup::at(std::uint64_t idx) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  while (cache_->flat.size() <= idx && !cache_->exhausted) {
    if (max_grade && cache_->flat_next_grade > *max_grade) {
      cache_->exhausted = true;
      break;
    }
    ensure_grade(cache_->flat_next_grade);
    auto const& batch = cache_->grades[cache_->flat_next_grade++];
    cache_->flat.insert(cache_->flat.end(), batch.begin(), batch.end());
  }
  if (idx < cache_->flat.size()) {
    return cache_->flat[idx];
  }
  return std::nullopt;
}

std::vector<Term> SymbolicSemigroup::prefix(std::uint64_t count) const {
  std::vector<Term> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto t = at(i);
    if (!t) {
      break;
    }
    out.push_back(std::move(*t));
  }
  return out;
}

SymbolicSemigroup as_symbolic(const FiniteSemigroup& s) {
  auto base = std::make_shared<const FiniteSemigroup>(s);
  SymbolicSemigroup sym;
  sym.name = "table[" + std::to_string(base->order()) + "]";
  sym.product = [base](const Term& a, const Term& b) {
    return Term::fin(base->product(static_cast<int>(a.ints[0]),
                                   static_cast<int>(b.ints[0])));
  };
  sym.grade = [base](std::int64_t g) {
    std::vector<Term> out;
    if (g >= 0 && g < base->order()) {
      out.push_back(Term::fin(g));
    }
    return out;
  };
  sym.max_grade = base->order() - 1;
  if (base->identity()) {
    sym.identity = Term::fin(*base->identity());
  }
  if (base->zero()) {
    sym.zero = Term::fin(*base->zero());
  }
  sym.declared_r_noetherian = true;  // finite
  return sym;
}

FiniteSemigroup tabulate(const SymbolicSemigroup& s, std::size_t expected) {
  auto const elems = s.prefix(expected + 1);
  if (elems.size() != expected) {
    throw std::invalid_argument(
        "tabulate: enumerator produced " + std::to_string(elems.size())
        + " terms, expected " + std::to_string(expected));
  }
  std::map<Term, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index.emplace(elems[i], static_cast<int>(i));
  }

  RawTable raw;
  int const n = static_cast<int>(expected);
  raw.entries.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto const p = s.mul(elems[i], elems[j]);
      auto const it = index.find(p);
      if (it == index.end()) {
        throw std::invalid_argument("tabulate: product " + p.str()
                                    + " escapes the enumerated universe");
      }
      raw.entries[i][j] = it->second;
    }
    raw.names.push_back(elems[i].str());
  }
  return FiniteSemigroup::from(raw);
}

SymbolicSemigroup adjoin_identity(const SymbolicSemigroup& s) {
  if (s.identity) {
    return s;
  }
  SymbolicSemigroup out;
  out.name = s.name + "^1";
  SymbolicSemigroup base = s;
  out.product = [base](const Term& a, const Term& b) {
    if (a.tag == Tag::One) return b;
    if (b.tag == Tag::One) return a;
    return base.mul(a, b);
  };
  out.grade = [base](std::int64_t g) {
    auto batch = base.grade(g);
    if (g == 0) {
      batch.push_back(Term::one());
    }
    return batch;
  };
  out.max_grade = s.max_grade;
  out.identity = Term::one();
  out.zero = s.zero;
  out.declared_r_noetherian = s.declared_r_noetherian;
  return out;
}

SymbolicSemigroup adjoin_zero(const SymbolicSemigroup& s) {
  if (s.zero) {
    return s;
  }
  SymbolicSemigroup out;
  out.name = s.name + "^0";
  SymbolicSemigroup base = s;
  out.product = [base](const Term& a, const Term& b) {
    if (a.tag == Tag::Zero || b.tag == Tag::Zero) return Term::zero();
    return base.mul(a, b);
  };
  out.grade = [base](std::int64_t g) {
    auto batch = base.grade(g);
    if (g == 0) {
      batch.push_back(Term::zero());
    }
    return batch;
  };
  out.max_grade = s.max_grade;
  out.identity = s.identity;
  out.zero = Term::zero();
  out.declared_r_noetherian = s.declared_r_noetherian;
  return out;
}

SymbolicValidation validate_symbolic(const SymbolicSemigroup& s,
                                     std::uint64_t count) {
  SymbolicValidation v;
  auto const elems = s.prefix(count);
  v.terms_checked = elems.size();

  std::unordered_set<std::size_t> seen;
  std::vector<Term> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    v.enumerator_injective = false;
    v.message = "enumerator repeats a term";
  }

  for (auto const& t : elems) {
    if (s.canon(t) != t) {
      v.canonicalize_idempotent = false;
      v.message = "canonicalize not idempotent at " + t.str();
      break;
    }
  }

  // Quadratic slice: first ~sqrt(count) terms against each other.
  std::size_t const side =
      std::min<std::size_t>(elems.size(), 1 + static_cast<std::size_t>(
                                                  std::sqrt(double(count))));
  for (std::size_t i = 0; i < side && v.products_canonical; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      auto const p = s.mul(elems[i], elems[j]);
      if (s.canon(p) != p) {
        v.products_canonical = false;
        v.message = "non-canonical product at (" + elems[i].str() + ", "
                    + elems[j].str() + ")";
        break;
      }
    }
  }

  if (s.identity) {
    for (auto const& t : elems) {
      if (s.mul(*s.identity, t) != t || s.mul(t, *s.identity) != t) {
        v.identity_law = false;
        v.message = "identity law fails at " + t.str();
        break;
      }
    }
  }
  if (s.zero) {
    for (auto const& t : elems) {
      if (s.mul(*s.zero, t) != *s.zero || s.mul(t, *s.zero) != *s.zero) {
        v.zero_law = false;
        v.message = "zero law fails at " + t.str();
        break;
      }
    }
  }
  return v;
}

BoundedHomReport is_homomorphism_bounded(
    const std::function<Term(const Term&)>& f, const SymbolicSemigroup& s,
    const SymbolicSemigroup& t, std::uint64_t budget) {
  BoundedHomReport report;
  report.budget = budget;
  // Pairs from a square window of size ~sqrt(budget), so the whole check
  // costs about `budget` products.
  std::uint64_t const side =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(
                                     std::sqrt(double(budget))));
  auto const elems = s.prefix(side);
  for (auto const& a : elems) {
    for (auto const& b : elems) {
      auto const lhs = f(s.mul(a, b));
      auto const rhs = t.mul(f(a), f(b));
      if (lhs != rhs) {
        report.status = BoundedHomReport::Status::Counterexample;
        report.witness = {a, b};
        return report;
      }
    }
  }
  return report;
}

}  // namespace sgp
