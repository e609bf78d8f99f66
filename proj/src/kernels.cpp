#include "sgp/kernels.hpp"

#include <atomic>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgp/finite.hpp"

namespace sgp::kernels {

bool BitMatrix::row_equal(int a, int b) const {
  auto const* ra = bits.data() + static_cast<std::size_t>(a) * words_per_row;
  auto const* rb = bits.data() + static_cast<std::size_t>(b) * words_per_row;
  return std::memcmp(ra, rb, sizeof(std::uint64_t) * words_per_row) == 0;
}

bool BitMatrix::row_subset(int a, int b) const {
  auto const* ra = bits.data() + static_cast<std::size_t>(a) * words_per_row;
  auto const* rb = bits.data() + static_cast<std::size_t>(b) * words_per_row;
  for (int w = 0; w < words_per_row; ++w) {
    if (ra[w] & ~rb[w]) {
      return false;
    }
  }
  return true;
}

std::optional<std::array<int, 3>> first_nonassoc_serial(const int* t, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int const ij = t[i * n + j];
      for (int k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          return std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> first_nonassoc_parallel(const int* t,
                                                          int n) {
  // Deterministic: threads race only towards the minimum encoded triple.
  std::int64_t const none = static_cast<std::int64_t>(n) * n * n;
  std::atomic<std::int64_t> best{none};

#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < n; ++i) {
    std::int64_t const row_base = static_cast<std::int64_t>(i) * n * n;
    if (row_base >= best.load(std::memory_order_relaxed)) {
      continue;
    }
    for (int j = 0; j < n; ++j) {
      int const ij = t[i * n + j];
      for (int k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          std::int64_t code = row_base + static_cast<std::int64_t>(j) * n + k;
          std::int64_t cur = best.load(std::memory_order_relaxed);
          while (code < cur
                 && !best.compare_exchange_weak(cur, code,
                                                std::memory_order_relaxed)) {
          }
          break;  // later k in this (i, j) can only encode higher
        }
      }
    }
  }

  std::int64_t const found = best.load();
  if (found == none) {
    return std::nullopt;
  }
  return std::array<int, 3>{static_cast<int>(found / (n * n)),
                            static_cast<int>((found / n) % n),
                            static_cast<int>(found % n)};
}

namespace {

void fill_right_ideal_row(const FiniteSemigroup& s, int a, BitMatrix& m) {
  m.set(a, a);
  for (int x = 0; x < s.order(); ++x) {
    m.set(a, s.product(a, x));
  }
}

}  // namespace

BitMatrix right_ideal_sets_serial(const FiniteSemigroup& s) {
  BitMatrix m(s.order());
  for (int a = 0; a < s.order(); ++a) {
    fill_right_ideal_row(s, a, m);
  }
  return m;
}

BitMatrix right_ideal_sets_parallel(const FiniteSemigroup& s) {
  BitMatrix m(s.order());
#pragma omp parallel for schedule(static)
  for (int a = 0; a < s.order(); ++a) {
    fill_right_ideal_row(s, a, m);
  }
  return m;
}

int parallel_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sgp::kernels
