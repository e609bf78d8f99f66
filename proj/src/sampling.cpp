#include "sgp/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace sgp {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return n <= 1 ? 0 : rng() % n;
}

namespace {

// Checks every associativity triple all of whose inputs are already filled
// and that involves the just-set cell (r, c).  table entries are -1 when
// unset.
bool consistent_after(const std::vector<int>& table, int n, int r, int c) {
  auto const get = [&](int i, int j) { return table[i * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // (ij)k vs i(jk); only triples touching (r, c) can have changed.
        bool const touches = (i == r && j == c) || (j == r && k == c);
        int const ij = get(i, j);
        int const jk = get(j, k);
        if (!touches && (ij != r || k != c) && (i != r || jk != c)) {
          continue;
        }
        if (ij < 0 || jk < 0) {
          continue;
        }
        int const left = get(ij, k);
        int const right = get(i, jk);
        if (left >= 0 && right >= 0 && left != right) {
          return false;
        }
      }
    }
  }
  return true;
}

bool fill_cells(std::vector<int>& table, int n,
                const std::vector<int>& cell_order, std::size_t pos,
                const std::vector<std::vector<int>>& value_order,
                std::uint64_t& nodes, std::uint64_t node_cap) {
  if (pos == cell_order.size()) {
    return true;
  }
  if (++nodes > node_cap) {
    return false;
  }
  int const cell = cell_order[pos];
  for (int v : value_order[pos]) {
    table[cell] = v;
    if (consistent_after(table, n, cell / n, cell % n)
        && fill_cells(table, n, cell_order, pos + 1, value_order, nodes,
                      node_cap)) {
      return true;
    }
  }
  table[cell] = -1;
  return false;
}

}  // namespace

FiniteSemigroup random_semigroup(Rng& rng, int order) {
  int const n = order;
  while (true) {
    std::vector<int> cells(n * n);
    std::iota(cells.begin(), cells.end(), 0);
    for (std::size_t i = cells.size(); i > 1; --i) {
      std::swap(cells[i - 1], cells[uniform_below(rng, i)]);
    }
    std::vector<std::vector<int>> values(cells.size());
    for (auto& v : values) {
      v.resize(n);
      std::iota(v.begin(), v.end(), 0);
      for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
      }
    }
    std::vector<int> table(n * n, -1);
    std::uint64_t nodes = 0;
    if (fill_cells(table, n, cells, 0, values, nodes, 200'000)) {
      RawTable raw;
      raw.entries.assign(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          raw.entries[i][j] = table[i * n + j];
        }
      }
      return FiniteSemigroup::from(raw);
    }
    // Node cap hit (rare for n <= 6): reshuffle and retry.
  }
}

FiniteSemigroup random_semigroup_up_to(Rng& rng, int max_order) {
  return random_semigroup(rng, 1 + static_cast<int>(uniform_below(
                                   rng, static_cast<std::uint64_t>(max_order))));
}

FiniteSemigroup random_monoid_up_to(Rng& rng, int max_order) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto s = random_semigroup_up_to(rng, max_order);
    if (s.identity()) {
      return s;
    }
  }
  auto s = random_semigroup_up_to(rng, max_order - 1);
  return adjoin_identity(s);
}

std::vector<std::vector<int>> all_endomorphisms(const FiniteSemigroup& s) {
  int const n = s.order();
  if (n > 5) {
    throw std::invalid_argument("all_endomorphisms: order > 5");
  }
  std::vector<std::vector<int>> endos;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        ok = f[s.product(a, b)] == s.product(f[a], f[b]);
      }
    }
    if (ok) {
      endos.push_back(f);
    }
    int pos = n - 1;
    while (pos >= 0 && f[pos] == n - 1) {
      f[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++f[pos];
  }
  return endos;
}

FiniteEndoAction random_endo_action(Rng& rng, const FiniteSemigroup& s,
                                    const FiniteSemigroup& t) {
  auto const endos = all_endomorphisms(s);

  // Random assignment t -> End(S), kept when it is a homomorphism.
  for (int attempt = 0; attempt < 60; ++attempt) {
    FiniteEndoAction phi;
    phi.apply.reserve(t.order());
    for (int u = 0; u < t.order(); ++u) {
      phi.apply.push_back(endos[uniform_below(rng, endos.size())]);
    }
    if (validate_endo_action(s, t, phi).ok) {
      return phi;
    }
  }

  // Constant action at a random idempotent endomorphism (f o f = f makes
  // t -> f a homomorphism into End(S)).
  std::vector<int> idempotents;
  for (std::size_t e = 0; e < endos.size(); ++e) {
    bool idem = true;
    for (int x = 0; x < s.order() && idem; ++x) {
      idem = endos[e][endos[e][x]] == endos[e][x];
    }
    if (idem) {
      idempotents.push_back(static_cast<int>(e));
    }
  }
  if (!idempotents.empty()) {
    auto const& f = endos[idempotents[uniform_below(rng, idempotents.size())]];
    FiniteEndoAction phi;
    phi.apply.assign(t.order(), f);
    if (validate_endo_action(s, t, phi).ok) {
      return phi;
    }
  }
  return FiniteEndoAction::identity_action(s, t);
}

}  // namespace sgp
