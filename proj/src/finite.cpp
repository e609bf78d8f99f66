#include "sgp/finite.hpp"

#include <numeric>
#include <sstream>

#include "sgp/kernels.hpp"

namespace sgp {

ValidationReport validate_associativity(const RawTable& candidate) {
  ValidationReport report;
  int const n = candidate.order();
  if (n <= 0) {
    report.message = "empty table";
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(candidate.entries[i].size()) != n) {
      std::ostringstream msg;
      msg << "row " << i << " has " << candidate.entries[i].size()
          << " entries, expected " << n;
      report.message = msg.str();
      return report;
    }
    for (int j = 0; j < n; ++j) {
      int const v = candidate.entries[i][j];
      if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << "entry (" << i << "," << j << ") = " << v
            << " out of range 0.." << n - 1;
        report.message = msg.str();
        return report;
      }
    }
  }
  report.well_formed = true;

  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      flat[i * n + j] = candidate.entries[i][j];
    }
  }
  auto violation = n >= 64 ? kernels::first_nonassoc_parallel(flat.data(), n)
                           : kernels::first_nonassoc_serial(flat.data(), n);
  if (violation) {
    report.first_violation = *violation;
    std::ostringstream msg;
    msg << "not associative at (" << (*violation)[0] << "," << (*violation)[1]
        << "," << (*violation)[2] << ")";
    report.message = msg.str();
    return report;
  }
  report.associative = true;
  return report;
}

FiniteSemigroup FiniteSemigroup::from(const RawTable& candidate) {
  auto const report = validate_associativity(candidate);
  if (!report.well_formed) {
    throw format_error("malformed table: " + report.message);
  }
  if (!report.associative) {
    throw std::invalid_argument(report.message);
  }

  FiniteSemigroup s;
  s.n_ = candidate.order();
  s.table_.resize(static_cast<std::size_t>(s.n_) * s.n_);
  for (int i = 0; i < s.n_; ++i) {
    for (int j = 0; j < s.n_; ++j) {
      s.table_[i * s.n_ + j] = candidate.entries[i][j];
    }
  }
  if (candidate.names.empty()) {
    for (int i = 0; i < s.n_; ++i) {
      s.names_.push_back("e" + std::to_string(i));
    }
  } else {
    if (static_cast<int>(candidate.names.size()) != s.n_) {
      throw format_error("name list size does not match order");
    }
    s.names_ = candidate.names;
  }

  for (int e = 0; e < s.n_; ++e) {
    bool ident = true;
    bool zero = true;
    for (int x = 0; x < s.n_; ++x) {
      ident = ident && s.product(e, x) == x && s.product(x, e) == x;
      zero = zero && s.product(e, x) == e && s.product(x, e) == e;
    }
    if (ident && !s.identity_) s.identity_ = e;
    if (zero && !s.zero_) s.zero_ = e;
  }
  return s;
}

RawTable FiniteSemigroup::raw() const {
  RawTable raw;
  raw.entries.assign(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      raw.entries[i][j] = product(i, j);
    }
  }
  raw.names = names_;
  return raw;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.identity()) {
    return s;
  }
  int const n = s.order();
  RawTable raw = s.raw();
  raw.entries.emplace_back();
  for (int i = 0; i < n; ++i) {
    raw.entries[i].push_back(i);
    raw.entries[n].push_back(i);
  }
  raw.entries[n].push_back(n);
  raw.names.push_back("1");
  return FiniteSemigroup::from(raw);
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  if (s.zero()) {
    return s;
  }
  int const n = s.order();
  RawTable raw = s.raw();
  raw.entries.emplace_back();
  for (int i = 0; i < n; ++i) {
    raw.entries[i].push_back(n);
    raw.entries[n].push_back(n);
  }
  raw.entries[n].push_back(n);
  raw.names.push_back("0");
  return FiniteSemigroup::from(raw);
}

HomReport is_homomorphism(const std::vector<int>& f, const FiniteSemigroup& s,
                          const FiniteSemigroup& t) {
  HomReport report;
  if (static_cast<int>(f.size()) != s.order()) {
    report.status = HomReport::Status::DomainError;
    return report;
  }
  for (int a = 0; a < s.order(); ++a) {
    if (f[a] < 0 || f[a] >= t.order()) {
      report.status = HomReport::Status::DomainError;
      return report;
    }
  }
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (f[s.product(a, b)] != t.product(f[a], f[b])) {
        report.status = HomReport::Status::Counterexample;
        report.witness = {a, b};
        return report;
      }
    }
  }
  return report;
}

bool FiniteSubset::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool FiniteSubset::is_closed() const {
  for (int a : members) {
    for (int b : members) {
      if (!contains(parent->product(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool FiniteSubset::is_regular() const {
  for (int a : members) {
    bool found = false;
    for (int b : members) {
      if (parent->product(parent->product(a, b), a) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

std::vector<FiniteSubset> all_subsemigroups(const FiniteSemigroup& s) {
  std::vector<FiniteSubset> out;
  int const n = s.order();
  if (n > 20) {
    throw std::invalid_argument("all_subsemigroups: order > 20");
  }
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    FiniteSubset sub{&s, {}};
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sub.members.push_back(i);
      }
    }
    if (sub.is_closed()) {
      out.push_back(std::move(sub));
    }
  }
  return out;
}

bool complement_is_left_ideal(const FiniteSemigroup& s, const FiniteSubset& t) {
  std::vector<int> complement;
  for (int i = 0; i < s.order(); ++i) {
    if (!t.contains(i)) {
      complement.push_back(i);
    }
  }
  if (complement.empty()) {
    return false;
  }
  for (int x : complement) {
    for (int a = 0; a < s.order(); ++a) {
      int const ax = s.product(a, x);
      if (t.contains(ax)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

FiniteSemigroup from_rule(int n, int (*rule)(int, int, int),
                          const char* prefix) {
  RawTable raw;
  raw.entries.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      raw.entries[i][j] = rule(i, j, n);
    }
    raw.names.push_back(prefix + std::to_string(i));
  }
  return FiniteSemigroup::from(raw);
}

}  // namespace

FiniteSemigroup left_zero(int n) {
  return from_rule(n, [](int i, int, int) { return i; }, "l");
}

FiniteSemigroup right_zero(int n) {
  return from_rule(n, [](int, int j, int) { return j; }, "r");
}

FiniteSemigroup null_semigroup(int n) {
  return from_rule(n, [](int, int, int) { return 0; }, "n");
}

FiniteSemigroup cyclic_group(int n) {
  return from_rule(n, [](int i, int j, int m) { return (i + j) % m; }, "g");
}

FiniteSemigroup min_semilattice(int n) {
  return from_rule(n, [](int i, int j, int) { return i < j ? i : j; }, "m");
}

FiniteSemigroup trivial_monoid() { return cyclic_group(1); }

}  // namespace sgp
