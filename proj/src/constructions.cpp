#include "sgp/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sgp {

namespace mutation {

namespace {
std::atomic<Kind> g_active{Kind::None};
}

Kind active() { return g_active.load(std::memory_order_relaxed); }
void set_active(Kind kind) { g_active.store(kind, std::memory_order_relaxed); }

std::optional<Kind> parse(const std::string& token) {
  if (token == "none") return Kind::None;
  if (token == "br-exponent") return Kind::BrExponent;
  if (token == "schutz-union") return Kind::SchutzUnionDrop;
  return std::nullopt;
}

}  // namespace mutation

// ---------------------------------------------------------------------
// Semidirect products.

FiniteEndoAction FiniteEndoAction::identity_action(const FiniteSemigroup& s,
                                                   const FiniteSemigroup& t) {
  FiniteEndoAction phi;
  std::vector<int> id(s.order());
  for (int i = 0; i < s.order(); ++i) {
    id[i] = i;
  }
  phi.apply.assign(t.order(), id);
  return phi;
}

FiniteEndoAction FiniteEndoAction::constant_identity_action(
    const FiniteSemigroup& s, const FiniteSemigroup& t) {
  if (!s.identity()) {
    throw std::invalid_argument("constant_identity_action: S has no identity");
  }
  FiniteEndoAction phi;
  phi.apply.assign(t.order(), std::vector<int>(s.order(), *s.identity()));
  return phi;
}

ActionReport validate_endo_action(const FiniteSemigroup& s,
                                  const FiniteSemigroup& t,
                                  const FiniteEndoAction& phi) {
  ActionReport report;
  if (static_cast<int>(phi.apply.size()) != t.order()) {
    report.ok = false;
    report.message = "action has " + std::to_string(phi.apply.size())
                     + " maps, expected " + std::to_string(t.order());
    return report;
  }
  for (int u = 0; u < t.order(); ++u) {
    if (static_cast<int>(phi.apply[u].size()) != s.order()) {
      report.ok = false;
      report.message = "phi_" + std::to_string(u) + " is not total on S";
      return report;
    }
    for (int a : phi.apply[u]) {
      if (a < 0 || a >= s.order()) {
        report.ok = false;
        report.message = "phi_" + std::to_string(u) + " maps outside S";
        return report;
      }
    }
  }
  for (int u = 0; u < t.order(); ++u) {
    for (int a = 0; a < s.order(); ++a) {
      for (int b = 0; b < s.order(); ++b) {
        if (phi.apply[u][s.product(a, b)]
            != s.product(phi.apply[u][a], phi.apply[u][b])) {
          std::ostringstream msg;
          msg << "phi_" << u << " is not an endomorphism at (" << a << ","
              << b << ")";
          report.ok = false;
          report.message = msg.str();
          return report;
        }
      }
    }
  }
  // phi_{uv} = phi_u o phi_v, right factor applied first.
  for (int u = 0; u < t.order(); ++u) {
    for (int v = 0; v < t.order(); ++v) {
      int const uv = t.product(u, v);
      for (int a = 0; a < s.order(); ++a) {
        if (phi.apply[uv][a] != phi.apply[u][phi.apply[v][a]]) {
          std::ostringstream msg;
          msg << "phi_{t t'} != phi_t o phi_t' at (t=" << u << ", t'=" << v
              << ", s=" << a << ")";
          report.ok = false;
          report.message = msg.str();
          return report;
        }
      }
    }
  }
  return report;
}

ActionReport validate_endo_action_bounded(const EndoAction& phi,
                                          std::uint64_t budget) {
  ActionReport report;
  std::uint64_t const side = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(std::cbrt(double(budget))));
  auto const ss = phi.domain.prefix(side);
  auto const ts = phi.index.prefix(side);
  for (auto const& t : ts) {
    for (auto const& a : ss) {
      for (auto const& b : ss) {
        if (phi(t, phi.domain.mul(a, b))
            != phi.domain.mul(phi(t, a), phi(t, b))) {
          report.ok = false;
          report.message = "phi_" + t.str() + " is not an endomorphism at ("
                           + a.str() + "," + b.str() + ")";
          return report;
        }
      }
    }
  }
  for (auto const& u : ts) {
    for (auto const& v : ts) {
      auto const uv = phi.index.mul(u, v);
      for (auto const& a : ss) {
        if (phi(uv, a) != phi(u, phi(v, a))) {
          report.ok = false;
          report.message = "phi_{t t'} != phi_t o phi_t' at (t=" + u.str()
                           + ", t'=" + v.str() + ", s=" + a.str() + ")";
          return report;
        }
      }
    }
  }
  return report;
}

SymbolicSemigroup semidirect_product_symbolic(const EndoAction& phi,
                                              std::uint64_t validation_budget) {
  if (validation_budget > 0) {
    auto const report = validate_endo_action_bounded(phi, validation_budget);
    if (!report.ok) {
      throw std::invalid_argument("semidirect product rejected: "
                                  + report.message);
    }
  }
  SymbolicSemigroup s = phi.domain;
  SymbolicSemigroup t = phi.index;
  auto f = phi.apply;

  SymbolicSemigroup out;
  out.name = s.name + " x| " + t.name;
  out.product = [s, t, f](const Term& a, const Term& b) {
    // (s, t)(s', t') = (s phi_t(s'), t t')
    return Term::pair(s.mul(a.subs[0], f(a.subs[1], b.subs[0])),
                      t.mul(a.subs[1], b.subs[1]));
  };
  out.grade = [s, t](std::int64_t g) {
    std::vector<Term> out_terms;
    auto const s_new = s.terms_of_grade(g);
    auto const t_new = t.terms_of_grade(g);
    auto const s_old = s.terms_up_to_grade(g - 1);
    auto const t_old = t.terms_up_to_grade(g - 1);
    for (auto const& a : s_new) {
      for (auto const& b : t_new) {
        out_terms.push_back(Term::pair(a, b));
      }
      for (auto const& b : t_old) {
        out_terms.push_back(Term::pair(a, b));
      }
    }
    for (auto const& a : s_old) {
      for (auto const& b : t_new) {
        out_terms.push_back(Term::pair(a, b));
      }
    }
    return out_terms;
  };
  if (s.max_grade && t.max_grade) {
    out.max_grade = std::max(*s.max_grade, *t.max_grade);
  }
  return out;
}

FiniteSemigroup semidirect_product(const FiniteSemigroup& s,
                                   const FiniteSemigroup& t,
                                   const FiniteEndoAction& phi) {
  auto const report = validate_endo_action(s, t, phi);
  if (!report.ok) {
    throw std::invalid_argument("semidirect product rejected: "
                                + report.message);
  }
  auto const apply = phi.apply;
  EndoAction action{as_symbolic(s), as_symbolic(t),
                    [apply](const Term& t_el, const Term& s_el) {
                      return Term::fin(apply[t_el.ints[0]][s_el.ints[0]]);
                    }};
  auto const sym = semidirect_product_symbolic(action, 0);
  return tabulate(sym, static_cast<std::size_t>(s.order()) * t.order());
}

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t) {
  return semidirect_product(s, t, FiniteEndoAction::identity_action(s, t));
}

// ---------------------------------------------------------------------
// Schuetzenberger products.

namespace {

// All subsets of pool indices of size <= max_size, in index order.
void for_each_combination(std::size_t pool, std::size_t max_size,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> combo;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    fn(combo);
    if (combo.size() == max_size) {
      return;
    }
    for (std::size_t i = start; i < pool; ++i) {
      combo.push_back(static_cast<int>(i));
      go(i + 1);
      combo.pop_back();
    }
  };
  go(0);
}

}  // namespace

SymbolicSemigroup schutzenberger_product_symbolic(const SymbolicSemigroup& s,
                                                  const SymbolicSemigroup& t) {
  SymbolicSemigroup out;
  out.name = s.name + " <> " + t.name;
  SymbolicSemigroup sl = s;
  SymbolicSemigroup tl = t;
  out.product = [sl, tl](const Term& a, const Term& b) {
    // (s1, P1, t1)(s2, P2, t2) = (s1 s2, s1 P2 u P1 t2, t1 t2)
    const Term& s1 = a.subs[0];
    const Term& p1 = a.subs[1];
    const Term& t1 = a.subs[2];
    const Term& s2 = b.subs[0];
    const Term& p2 = b.subs[1];
    const Term& t2 = b.subs[2];
    std::vector<Term> mid;
    for (auto const& pq : p2.subs) {
      mid.push_back(Term::pair(sl.mul(s1, pq.subs[0]), pq.subs[1]));
    }
    if (mutation::active() != mutation::Kind::SchutzUnionDrop) {
      for (auto const& pq : p1.subs) {
        mid.push_back(Term::pair(pq.subs[0], tl.mul(pq.subs[1], t2)));
      }
    }
    return Term::triple(sl.mul(s1, s2), Term::set(std::move(mid)),
                        tl.mul(t1, t2));
  };
  out.grade = [sl, tl](std::int64_t g) {
    std::vector<Term> result;
    // Component terms up to grade g, each remembering its grade.
    std::vector<std::pair<Term, std::int64_t>> s_terms, t_terms;
    for (std::int64_t h = 0; h <= g; ++h) {
      for (auto const& x : sl.terms_of_grade(h)) s_terms.emplace_back(x, h);
      for (auto const& x : tl.terms_of_grade(h)) t_terms.emplace_back(x, h);
    }
    std::vector<std::pair<Term, std::int64_t>> pool;  // pairs with grades
    for (auto const& [p, gp] : s_terms) {
      for (auto const& [q, gq] : t_terms) {
        pool.emplace_back(Term::pair(p, q), std::max(gp, gq));
      }
    }
    // Middle components: subsets of the pool with |P| <= g (a set of size k
    // has grade >= k), graded by max(|P|, member grades).
    std::vector<std::pair<Term, std::int64_t>> sets;
    for_each_combination(
        pool.size(), static_cast<std::size_t>(std::max<std::int64_t>(g, 0)),
        [&](const std::vector<int>& combo) {
          std::int64_t grade_p = static_cast<std::int64_t>(combo.size());
          std::vector<Term> members;
          for (int idx : combo) {
            members.push_back(pool[idx].first);
            grade_p = std::max(grade_p, pool[idx].second);
          }
          if (grade_p <= g) {
            sets.emplace_back(Term::set(std::move(members)), grade_p);
          }
        });
    for (auto const& [a, ga] : s_terms) {
      for (auto const& [p, gp] : sets) {
        for (auto const& [b, gb] : t_terms) {
          if (std::max({ga, gp, gb}) == g) {
            result.push_back(Term::triple(a, p, b));
          }
        }
      }
    }
    return result;
  };
  if (s.max_grade && t.max_grade) {
    // Grade of a full middle set is bounded by the pool size.
    std::int64_t pool_size = 0;
    for (std::int64_t h = 0; h <= *s.max_grade; ++h) {
      pool_size += static_cast<std::int64_t>(s.terms_of_grade(h).size());
    }
    std::int64_t t_size = 0;
    for (std::int64_t h = 0; h <= *t.max_grade; ++h) {
      t_size += static_cast<std::int64_t>(t.terms_of_grade(h).size());
    }
    out.max_grade =
        std::max({*s.max_grade, *t.max_grade, pool_size * t_size});
  }
  return out;
}

FiniteSemigroup schutzenberger_product(const FiniteSemigroup& s,
                                       const FiniteSemigroup& t) {
  auto const bits = static_cast<std::size_t>(s.order()) * t.order();
  if (bits > 12) {
    throw std::invalid_argument(
        "schutzenberger_product: |S||T| > 12 would not fit a table");
  }
  std::size_t const expected = static_cast<std::size_t>(s.order())
                               * (std::size_t{1} << bits) * t.order();
  auto const sym =
      schutzenberger_product_symbolic(as_symbolic(s), as_symbolic(t));
  return tabulate(sym, expected);
}

SymbolicSemigroup unit_schutzenberger(const SymbolicSemigroup& t) {
  auto const full =
      schutzenberger_product_symbolic(as_symbolic(trivial_monoid()), t);
  Term const unit = Term::fin(0);

  auto unreduce = [unit](const Term& a) {
    std::vector<Term> pairs;
    for (auto const& q : a.subs[0].subs) {
      pairs.push_back(Term::pair(unit, q));
    }
    return Term::triple(unit, Term::set(std::move(pairs)), a.subs[1]);
  };
  auto reduce = [](const Term& a) {
    std::vector<Term> qs;
    for (auto const& pq : a.subs[1].subs) {
      qs.push_back(pq.subs[1]);
    }
    return Term::pair(Term::set(std::move(qs)), a.subs[2]);
  };

  SymbolicSemigroup out;
  out.name = "{1} <> " + t.name;
  out.product = [full, unreduce, reduce](const Term& a, const Term& b) {
    return reduce(full.mul(unreduce(a), unreduce(b)));
  };
  SymbolicSemigroup tl = t;
  out.grade = [tl](std::int64_t g) {
    std::vector<Term> result;
    std::vector<std::pair<Term, std::int64_t>> t_terms;
    for (std::int64_t h = 0; h <= g; ++h) {
      for (auto const& x : tl.terms_of_grade(h)) t_terms.emplace_back(x, h);
    }
    std::vector<std::pair<Term, std::int64_t>> sets;
    for_each_combination(
        t_terms.size(),
        static_cast<std::size_t>(std::max<std::int64_t>(g, 0)),
        [&](const std::vector<int>& combo) {
          std::int64_t grade_p = static_cast<std::int64_t>(combo.size());
          std::vector<Term> members;
          for (int idx : combo) {
            members.push_back(t_terms[idx].first);
            grade_p = std::max(grade_p, t_terms[idx].second);
          }
          if (grade_p <= g) {
            sets.emplace_back(Term::set(std::move(members)), grade_p);
          }
        });
    for (auto const& [p, gp] : sets) {
      for (auto const& [b, gb] : t_terms) {
        if (std::max(gp, gb) == g) {
          result.push_back(Term::pair(p, b));
        }
      }
    }
    return result;
  };
  if (t.identity) {
    out.identity = Term::pair(Term::set({}), *t.identity);
  }
  return out;
}

// ---------------------------------------------------------------------
// Free products.

SymbolicSemigroup free_product(std::vector<SymbolicSemigroup> factors) {
  if (factors.size() < 2) {
    throw std::invalid_argument("free_product: need at least two factors");
  }
  auto fs = std::make_shared<std::vector<SymbolicSemigroup>>(std::move(factors));

  SymbolicSemigroup out;
  out.name = "free-product[" + std::to_string(fs->size()) + "]";
  out.product = [fs](const Term& u, const Term& v) {
    // Concatenate; merge the boundary entries when their factors agree.
    std::vector<Term> entries(u.subs.begin(), u.subs.end());
    std::size_t start = 0;
    auto const& left = entries.back();
    auto const& right = v.subs.front();
    if (left.ints[0] == right.ints[0]) {
      auto const f = left.ints[0];
      entries.back() =
          Term::comp(f, (*fs)[f].mul(left.subs[0], right.subs[0]));
      start = 1;
    }
    for (std::size_t i = start; i < v.subs.size(); ++i) {
      entries.push_back(v.subs[i]);
    }
    return Term::seq(std::move(entries));
  };
  out.grade = [fs](std::int64_t g) {
    std::vector<Term> result;
    if (g <= 0) {
      return result;  // sequences have length >= 1, so grade >= 1
    }
    // Entries of each factor up to grade g, with their grades.
    std::vector<std::vector<std::pair<Term, std::int64_t>>> entries(fs->size());
    for (std::size_t f = 0; f < fs->size(); ++f) {
      for (std::int64_t h = 0; h <= g; ++h) {
        for (auto const& x : (*fs)[f].terms_of_grade(h)) {
          entries[f].emplace_back(x, h);
        }
      }
    }
    std::vector<Term> seq;
    std::function<void(std::int64_t, std::int64_t)> go =
        [&](std::int64_t last_factor, std::int64_t grade_so_far) {
          auto const len = static_cast<std::int64_t>(seq.size());
          if (len >= 1 && std::max(len, grade_so_far) == g) {
            result.push_back(Term::seq(seq));
          }
          if (len == g) {
            return;
          }
          for (std::size_t f = 0; f < fs->size(); ++f) {
            if (static_cast<std::int64_t>(f) == last_factor) {
              continue;
            }
            for (auto const& [x, h] : entries[f]) {
              seq.push_back(Term::comp(static_cast<std::int64_t>(f), x));
              go(static_cast<std::int64_t>(f), std::max(grade_so_far, h));
              seq.pop_back();
            }
          }
        };
    go(-1, 0);
    return result;
  };
  return out;
}

MonoidFreeProduct monoid_free_product(std::vector<SymbolicSemigroup> factors) {
  if (factors.size() < 2) {
    throw std::invalid_argument("monoid_free_product: need at least two factors");
  }
  for (auto const& f : factors) {
    if (!f.identity) {
      throw std::invalid_argument(
          "monoid_free_product: every factor must declare an identity");
    }
  }
  auto fs = std::make_shared<std::vector<SymbolicSemigroup>>(std::move(factors));

  SymbolicSemigroup out;
  out.name = "monoid-free-product[" + std::to_string(fs->size()) + "]";
  out.product = [fs](const Term& u, const Term& v) {
    if (u.tag == Tag::One) return v;
    if (v.tag == Tag::One) return u;
    std::vector<Term> left(u.subs.begin(), u.subs.end());
    std::size_t vpos = 0;
    // Reduce at the seam: merge equal-factor boundary entries, erasing
    // factor identities; each merge shortens the word, so this terminates.
    while (!left.empty() && vpos < v.subs.size()
           && left.back().ints[0] == v.subs[vpos].ints[0]) {
      auto const f = left.back().ints[0];
      auto const p = (*fs)[f].mul(left.back().subs[0], v.subs[vpos].subs[0]);
      left.pop_back();
      ++vpos;
      if (p != *(*fs)[f].identity) {
        left.push_back(Term::comp(f, p));
        break;
      }
    }
    for (; vpos < v.subs.size(); ++vpos) {
      left.push_back(v.subs[vpos]);
    }
    if (left.empty()) {
      return Term::one();
    }
    return Term::seq(std::move(left));
  };
  out.grade = [fs](std::int64_t g) {
    std::vector<Term> result;
    if (g == 0) {
      result.push_back(Term::one());
      return result;
    }
    // Reduced sequences: entries exclude the factor identities.
    std::vector<std::vector<std::pair<Term, std::int64_t>>> entries(fs->size());
    for (std::size_t f = 0; f < fs->size(); ++f) {
      for (std::int64_t h = 0; h <= g; ++h) {
        for (auto const& x : (*fs)[f].terms_of_grade(h)) {
          if (x != *(*fs)[f].identity) {
            entries[f].emplace_back(x, h);
          }
        }
      }
    }
    std::vector<Term> seq;
    std::function<void(std::int64_t, std::int64_t)> go =
        [&](std::int64_t last_factor, std::int64_t grade_so_far) {
          auto const len = static_cast<std::int64_t>(seq.size());
          if (len >= 1 && std::max(len, grade_so_far) == g) {
            result.push_back(Term::seq(seq));
          }
          if (len == g) {
            return;
          }
          for (std::size_t f = 0; f < fs->size(); ++f) {
            if (static_cast<std::int64_t>(f) == last_factor) {
              continue;
            }
            for (auto const& [x, h] : entries[f]) {
              seq.push_back(Term::comp(static_cast<std::int64_t>(f), x));
              go(static_cast<std::int64_t>(f), std::max(grade_so_far, h));
              seq.pop_back();
            }
          }
        };
    go(-1, 0);
    return result;
  };
  out.identity = Term::one();

  MonoidFreeProduct product;
  product.sg = out;
  product.factors = *fs;
  return product;
}

Bounded3 is_minimal_length_in_r_class(const MonoidFreeProduct& mfp,
                                      const Term& u, std::uint64_t budget) {
  if (u.tag == Tag::One) {
    return Bounded3::True;
  }
  auto const& last = u.subs.back();
  auto const f = last.ints[0];
  auto const& factor = mfp.factors[f];
  bool exhausted_universe = false;
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto const s = factor.at(i);
    if (!s) {
      exhausted_universe = true;
      break;
    }
    if (factor.mul(last.subs[0], *s) == *factor.identity) {
      return Bounded3::False;  // last letter right invertible: not minimal
    }
  }
  return exhausted_universe ? Bounded3::True : Bounded3::Unknown;
}

// ---------------------------------------------------------------------
// Rees matrix semigroups and Brandt extensions.

namespace {

void check_sandwich(const FiniteSemigroup& s, int num_i, int num_j,
                    const SandwichMatrix& p) {
  if (num_i <= 0 || num_j <= 0) {
    throw std::invalid_argument("rees_matrix: index sets must be non-empty");
  }
  if (p.rows() != num_j || p.cols() != num_i) {
    throw std::invalid_argument("rees_matrix: sandwich matrix is not J x I");
  }
  for (auto const& row : p.p) {
    for (int v : row) {
      if (v < 0 || v >= s.order()) {
        throw std::invalid_argument("rees_matrix: matrix entry outside S");
      }
    }
  }
}

}  // namespace

int rees_index(const FiniteSemigroup& s, int /*num_i*/, int num_j, int i,
               int mid, int j) {
  return (i * s.order() + mid) * num_j + j;
}

FiniteSemigroup rees_matrix(const FiniteSemigroup& s, int num_i, int num_j,
                            const SandwichMatrix& p) {
  check_sandwich(s, num_i, num_j, p);
  int const n = num_i * s.order() * num_j;
  RawTable raw;
  raw.entries.assign(n, std::vector<int>(n));
  raw.names.assign(n, "");
  for (int i = 0; i < num_i; ++i) {
    for (int mid = 0; mid < s.order(); ++mid) {
      for (int j = 0; j < num_j; ++j) {
        raw.names[rees_index(s, num_i, num_j, i, mid, j)] =
            "(" + std::to_string(i) + "|" + s.name(mid) + "|"
            + std::to_string(j) + ")";
      }
    }
  }
  for (int i = 0; i < num_i; ++i) {
    for (int a = 0; a < s.order(); ++a) {
      for (int j = 0; j < num_j; ++j) {
        for (int k = 0; k < num_i; ++k) {
          for (int b = 0; b < s.order(); ++b) {
            for (int l = 0; l < num_j; ++l) {
              // (i, a, j)(k, b, l) = (i, a p_{jk} b, l)
              int const mid = s.product(s.product(a, p.p[j][k]), b);
              raw.entries[rees_index(s, num_i, num_j, i, a, j)]
                         [rees_index(s, num_i, num_j, k, b, l)] =
                  rees_index(s, num_i, num_j, i, mid, l);
            }
          }
        }
      }
    }
  }
  return FiniteSemigroup::from(raw);
}

int rees_zero_index(const FiniteSemigroup& s, int /*num_i*/, int num_j, int i,
                    int mid, int j) {
  int const z = *s.zero();
  if (mid == z) {
    return 0;
  }
  int const rank = mid < z ? mid : mid - 1;  // skip the zero of S
  return 1 + (i * (s.order() - 1) + rank) * num_j + j;
}

FiniteSemigroup rees_matrix_zero(const FiniteSemigroup& s, int num_i,
                                 int num_j, const SandwichMatrix& p) {
  if (!s.zero()) {
    throw std::invalid_argument("rees_matrix_zero: S has no zero");
  }
  check_sandwich(s, num_i, num_j, p);
  int const z = *s.zero();
  int const n = num_i * (s.order() - 1) * num_j + 1;
  RawTable raw;
  raw.entries.assign(n, std::vector<int>(n, 0));
  raw.names.assign(n, "0");
  for (int i = 0; i < num_i; ++i) {
    for (int mid = 0; mid < s.order(); ++mid) {
      if (mid == z) continue;
      for (int j = 0; j < num_j; ++j) {
        raw.names[rees_zero_index(s, num_i, num_j, i, mid, j)] =
            "(" + std::to_string(i) + "|" + s.name(mid) + "|"
            + std::to_string(j) + ")";
      }
    }
  }
  for (int i = 0; i < num_i; ++i) {
    for (int a = 0; a < s.order(); ++a) {
      if (a == z) continue;
      for (int j = 0; j < num_j; ++j) {
        for (int k = 0; k < num_i; ++k) {
          for (int b = 0; b < s.order(); ++b) {
            if (b == z) continue;
            for (int l = 0; l < num_j; ++l) {
              int const mid = s.product(s.product(a, p.p[j][k]), b);
              raw.entries[rees_zero_index(s, num_i, num_j, i, a, j)]
                         [rees_zero_index(s, num_i, num_j, k, b, l)] =
                  rees_zero_index(s, num_i, num_j, i, mid, l);
            }
          }
        }
      }
    }
  }
  return FiniteSemigroup::from(raw);
}

int brandt_index(const FiniteSemigroup& s, int num_i, int i, int mid, int j) {
  return 1 + (i * s.order() + mid) * num_i + j;
}

FiniteSemigroup brandt_extension(const FiniteSemigroup& s, int num_i) {
  if (num_i <= 0) {
    throw std::invalid_argument("brandt_extension: I must be non-empty");
  }
  int const n = num_i * s.order() * num_i + 1;
  RawTable raw;
  raw.entries.assign(n, std::vector<int>(n, 0));
  raw.names.assign(n, "0");
  for (int i = 0; i < num_i; ++i) {
    for (int mid = 0; mid < s.order(); ++mid) {
      for (int j = 0; j < num_i; ++j) {
        raw.names[brandt_index(s, num_i, i, mid, j)] =
            "(" + std::to_string(i) + "|" + s.name(mid) + "|"
            + std::to_string(j) + ")";
      }
    }
  }
  for (int i = 0; i < num_i; ++i) {
    for (int a = 0; a < s.order(); ++a) {
      for (int j = 0; j < num_i; ++j) {
        for (int k = 0; k < num_i; ++k) {
          for (int b = 0; b < s.order(); ++b) {
            for (int l = 0; l < num_i; ++l) {
              raw.entries[brandt_index(s, num_i, i, a, j)]
                         [brandt_index(s, num_i, k, b, l)] =
                  j == k ? brandt_index(s, num_i, i, s.product(a, b), l) : 0;
            }
          }
        }
      }
    }
  }
  return FiniteSemigroup::from(raw);
}

// ---------------------------------------------------------------------
// Bruck-Reilly extensions.

SymbolicSemigroup bruck_reilly(const SymbolicSemigroup& m,
                               std::function<Term(const Term&)> theta,
                               std::uint64_t validation_budget) {
  if (!m.identity) {
    throw std::invalid_argument("bruck_reilly: M must declare an identity");
  }
  if (validation_budget > 0) {
    if (theta(*m.identity) != *m.identity) {
      throw std::invalid_argument(
          "bruck_reilly: theta does not fix the identity");
    }
    auto const report = is_homomorphism_bounded(theta, m, m, validation_budget);
    if (report.status == BoundedHomReport::Status::Counterexample) {
      throw std::invalid_argument(
          "bruck_reilly: theta is not an endomorphism at ("
          + report.witness.first.str() + "," + report.witness.second.str()
          + ")");
    }
  }

  struct ThetaCache {
    std::mutex mutex;
    std::map<std::pair<std::int64_t, Term>, Term> powers;
  };
  auto cache = std::make_shared<ThetaCache>();
  auto pow = [theta, cache](const Term& a, std::int64_t k) {
    if (k == 0) {
      return a;
    }
    std::lock_guard<std::mutex> lock(cache->mutex);
    std::vector<std::int64_t> missing;
    std::int64_t base = k;
    while (base > 0 && !cache->powers.count({base, a})) {
      missing.push_back(base);
      --base;
    }
    Term cur = base == 0 ? a : cache->powers.at({base, a});
    for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
      cur = theta(cur);
      cache->powers.emplace(std::make_pair(*it, a), cur);
    }
    return cur;
  };

  SymbolicSemigroup base = m;
  SymbolicSemigroup out;
  out.name = "BR(" + m.name + ")";
  out.product = [base, pow](const Term& u, const Term& v) {
    // (i, a, j)(p, b, q) = (i-j+t, (a theta^{t-j})(b theta^{t-p}), q-p+t)
    // with t = max(j, p).
    auto const i = u.ints[0], j = u.ints[1];
    auto const p = v.ints[0], q = v.ints[1];
    auto const t = std::max(j, p);
    auto exp_left = t - j;
    if (mutation::active() == mutation::Kind::BrExponent) {
      exp_left = t + j;
    }
    auto const mid =
        base.mul(pow(u.subs[0], exp_left), pow(v.subs[0], t - p));
    return Term::br(i - j + t, mid, q - p + t);
  };
  out.grade = [base](std::int64_t g) {
    std::vector<Term> result;
    std::vector<std::pair<Term, std::int64_t>> ms;
    for (std::int64_t h = 0; h <= g; ++h) {
      for (auto const& x : base.terms_of_grade(h)) ms.emplace_back(x, h);
    }
    for (std::int64_t i = 0; i <= g; ++i) {
      for (std::int64_t j = 0; j <= g; ++j) {
        for (auto const& [a, h] : ms) {
          if (std::max({i, j, h}) == g) {
            result.push_back(Term::br(i, a, j));
          }
        }
      }
    }
    return result;
  };
  out.identity = Term::br(0, *m.identity, 0);
  return out;
}

SymbolicSemigroup bruck_reilly(const FiniteSemigroup& m,
                               const std::vector<int>& theta) {
  if (!m.identity()) {
    throw std::invalid_argument("bruck_reilly: M must be a monoid");
  }
  if (static_cast<int>(theta.size()) != m.order()) {
    throw std::invalid_argument("bruck_reilly: theta is not total on M");
  }
  auto const hom = is_homomorphism(theta, m, m);
  if (hom.status != HomReport::Status::Verified
      || theta[*m.identity()] != *m.identity()) {
    throw std::invalid_argument("bruck_reilly: theta is not a monoid endomorphism");
  }
  auto sym = as_symbolic(m);
  auto map = theta;
  return bruck_reilly(
      sym, [map](const Term& a) { return Term::fin(map[a.ints[0]]); }, 0);
}

// ---------------------------------------------------------------------
// Semilattices of semigroups.

namespace {

bool is_semilattice_table(const FiniteSemigroup& y, std::string* why) {
  for (int a = 0; a < y.order(); ++a) {
    if (y.product(a, a) != a) {
      if (why) *why = "Y is not idempotent at " + std::to_string(a);
      return false;
    }
    for (int b = 0; b < y.order(); ++b) {
      if (y.product(a, b) != y.product(b, a)) {
        if (why) {
          *why = "Y is not commutative at (" + std::to_string(a) + ","
                 + std::to_string(b) + ")";
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

DecompositionReport validate_strong_decomposition(const StrongDecomposition& d) {
  DecompositionReport report;
  std::string why;
  if (!is_semilattice_table(d.y, &why)) {
    report.ok = false;
    report.message = why;
    return report;
  }
  if (static_cast<int>(d.components.size()) != d.y.order()) {
    report.ok = false;
    report.message = "component family does not match Y";
    return report;
  }
  auto const transition = [&](int a, int b) -> const std::vector<int>* {
    auto const it = d.transitions.find({a, b});
    return it == d.transitions.end() ? nullptr : &it->second;
  };
  for (int a = 0; a < d.y.order(); ++a) {
    for (int b = 0; b < d.y.order(); ++b) {
      if (d.y.product(a, b) != b) {
        continue;  // need a >= b only
      }
      auto const* phi = transition(a, b);
      if (a == b) {
        if (phi) {
          for (int x = 0; x < d.components[a].order(); ++x) {
            if ((*phi)[x] != x) {
              report.ok = false;
              report.message = "phi_{" + std::to_string(a) + ","
                               + std::to_string(a) + "} is not the identity";
              return report;
            }
          }
        }
        continue;
      }
      if (!phi) {
        report.ok = false;
        report.message = "missing transition (" + std::to_string(a) + ","
                         + std::to_string(b) + ")";
        return report;
      }
      if (static_cast<int>(phi->size()) != d.components[a].order()) {
        report.ok = false;
        report.message = "transition (" + std::to_string(a) + ","
                         + std::to_string(b) + ") is not total";
        return report;
      }
      auto const hom = is_homomorphism(*phi, d.components[a], d.components[b]);
      if (hom.status != HomReport::Status::Verified) {
        report.ok = false;
        report.message = "transition (" + std::to_string(a) + ","
                         + std::to_string(b) + ") is not a homomorphism";
        return report;
      }
    }
  }
  // phi_{a,b} then phi_{b,c} equals phi_{a,c} for a >= b >= c.
  auto const apply = [&](int a, int b, int x) {
    if (a == b) {
      auto const* phi = transition(a, b);
      return phi ? (*phi)[x] : x;
    }
    return d.transitions.at({a, b})[x];
  };
  for (int a = 0; a < d.y.order(); ++a) {
    for (int b = 0; b < d.y.order(); ++b) {
      if (d.y.product(a, b) != b) continue;
      for (int c = 0; c < d.y.order(); ++c) {
        if (d.y.product(b, c) != c) continue;
        for (int x = 0; x < d.components[a].order(); ++x) {
          if (apply(b, c, apply(a, b, x)) != apply(a, c, x)) {
            report.ok = false;
            report.message = "transition composition fails at ("
                             + std::to_string(a) + "," + std::to_string(b)
                             + "," + std::to_string(c) + ")";
            return report;
          }
        }
      }
    }
  }
  return report;
}

int strong_semilattice_index(const StrongDecomposition& d, int alpha,
                             int local) {
  int offset = 0;
  for (int c = 0; c < alpha; ++c) {
    offset += d.components[c].order();
  }
  return offset + local;
}

FiniteSemigroup strong_semilattice(const StrongDecomposition& d) {
  auto const report = validate_strong_decomposition(d);
  if (!report.ok) {
    throw std::invalid_argument("strong_semilattice rejected: "
                                + report.message);
  }
  int n = 0;
  for (auto const& c : d.components) {
    n += c.order();
  }
  auto const apply = [&](int a, int b, int x) {
    if (a == b) return x;
    return d.transitions.at({a, b})[x];
  };
  RawTable raw;
  raw.entries.assign(n, std::vector<int>(n));
  raw.names.assign(n, "");
  for (int alpha = 0; alpha < d.y.order(); ++alpha) {
    for (int x = 0; x < d.components[alpha].order(); ++x) {
      raw.names[strong_semilattice_index(d, alpha, x)] =
          "[" + d.y.name(alpha) + "|" + d.components[alpha].name(x) + "]";
    }
  }
  for (int alpha = 0; alpha < d.y.order(); ++alpha) {
    for (int beta = 0; beta < d.y.order(); ++beta) {
      int const gamma = d.y.product(alpha, beta);
      for (int a = 0; a < d.components[alpha].order(); ++a) {
        for (int b = 0; b < d.components[beta].order(); ++b) {
          // ab = (a phi_{alpha,gamma})(b phi_{beta,gamma})
          int const prod = d.components[gamma].product(apply(alpha, gamma, a),
                                                       apply(beta, gamma, b));
          raw.entries[strong_semilattice_index(d, alpha, a)]
                     [strong_semilattice_index(d, beta, b)] =
              strong_semilattice_index(d, gamma, prod);
        }
      }
    }
  }
  return FiniteSemigroup::from(raw);
}

DecompositionReport validate_strong_decomposition_bounded(
    const SymbolicStrongDecomposition& d, const std::vector<Term>& box,
    std::uint64_t budget) {
  DecompositionReport report;
  std::uint64_t const side = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(std::sqrt(double(budget))));
  // Y restricted to the box must be a semilattice.
  for (auto const& a : box) {
    if (d.y.mul(a, a) != a) {
      report.ok = false;
      report.message = "Y is not idempotent at " + a.str();
      return report;
    }
    for (auto const& b : box) {
      if (d.y.mul(a, b) != d.y.mul(b, a)) {
        report.ok = false;
        report.message = "Y is not commutative at (" + a.str() + ","
                         + b.str() + ")";
        return report;
      }
    }
  }
  auto leq = [&](const Term& b, const Term& a) {  // b <= a in Y
    return d.y.mul(a, b) == b;
  };
  for (auto const& alpha : box) {
    auto const sa = d.component(alpha);
    auto const elems = sa.prefix(side);
    for (auto const& x : elems) {
      if (d.transition(alpha, alpha, x) != x) {
        report.ok = false;
        report.message = "phi_{a,a} not the identity at a=" + alpha.str();
        return report;
      }
    }
    for (auto const& beta : box) {
      if (!leq(beta, alpha)) continue;
      auto const sb = d.component(beta);
      // Homomorphism property of phi_{alpha,beta}.
      for (auto const& x : elems) {
        for (auto const& y2 : elems) {
          if (d.transition(alpha, beta, sa.mul(x, y2))
              != sb.mul(d.transition(alpha, beta, x),
                        d.transition(alpha, beta, y2))) {
            report.ok = false;
            report.message = "phi_{" + alpha.str() + "," + beta.str()
                             + "} is not a homomorphism at (" + x.str() + ","
                             + y2.str() + ")";
            return report;
          }
        }
      }
      // Composition law through every gamma below beta in the box.
      for (auto const& gamma : box) {
        if (!leq(gamma, beta)) continue;
        for (auto const& x : elems) {
          if (d.transition(beta, gamma, d.transition(alpha, beta, x))
              != d.transition(alpha, gamma, x)) {
            report.ok = false;
            report.message = "transition composition fails at ("
                             + alpha.str() + "," + beta.str() + ","
                             + gamma.str() + ")";
            return report;
          }
        }
      }
    }
  }
  return report;
}

SymbolicSemigroup strong_semilattice_symbolic(
    const SymbolicStrongDecomposition& d, const std::vector<Term>& box,
    std::uint64_t validation_budget) {
  if (validation_budget > 0) {
    auto const report =
        validate_strong_decomposition_bounded(d, box, validation_budget);
    if (!report.ok) {
      throw std::invalid_argument("strong_semilattice rejected: "
                                  + report.message);
    }
  }
  auto dd = std::make_shared<SymbolicStrongDecomposition>(d);
  SymbolicSemigroup out;
  out.name = "strong-semilattice";
  out.product = [dd](const Term& a, const Term& b) {
    auto const& alpha = a.subs[0];
    auto const& beta = b.subs[0];
    auto const gamma = dd->y.mul(alpha, beta);
    auto const va = dd->transition(alpha, gamma, a.subs[1]);
    auto const vb = dd->transition(beta, gamma, b.subs[1]);
    return Term::comp_keyed(gamma, dd->component(gamma).mul(va, vb));
  };
  out.grade = [dd](std::int64_t g) {
    std::vector<Term> result;
    for (std::int64_t h = 0; h <= g; ++h) {
      for (auto const& alpha : dd->y.terms_of_grade(h)) {
        auto const comp = dd->component(alpha);
        if (h == g) {
          for (std::int64_t k = 0; k <= g; ++k) {
            for (auto const& v : comp.terms_of_grade(k)) {
              result.push_back(Term::comp_keyed(alpha, v));
            }
          }
        } else {
          for (auto const& v : comp.terms_of_grade(g)) {
            result.push_back(Term::comp_keyed(alpha, v));
          }
        }
      }
    }
    return result;
  };
  return out;
}

PartitionCheck semilattice_partition_check(const FiniteSemigroup& s,
                                           const std::vector<int>& component_of,
                                           const FiniteSemigroup& y) {
  PartitionCheck check;
  std::string why;
  if (!is_semilattice_table(y, &why)) {
    check.ok = false;
    check.message = why;
    return check;
  }
  if (static_cast<int>(component_of.size()) != s.order()) {
    check.ok = false;
    check.message = "partition not covering S";
    return check;
  }
  std::vector<char> used(y.order(), 0);
  for (int v : component_of) {
    if (v < 0 || v >= y.order()) {
      check.ok = false;
      check.message = "partition not covering S";
      return check;
    }
    used[v] = 1;
  }
  for (int alpha = 0; alpha < y.order(); ++alpha) {
    if (!used[alpha]) {
      check.ok = false;
      check.message = "component " + std::to_string(alpha) + " is empty";
      return check;
    }
  }
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (component_of[s.product(a, b)]
          != y.product(component_of[a], component_of[b])) {
        check.ok = false;
        check.witness = {a, b};
        check.message = "S_a S_b escapes S_{ab} at (" + s.name(a) + ","
                        + s.name(b) + ")";
        return check;
      }
    }
  }
  return check;
}

}  // namespace sgp
