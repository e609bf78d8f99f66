// Data-parallel kernels with serial reference implementations.
//
// Every *_parallel function computes exactly what its *_serial twin does;
// the twins are compared in the test suite and in the benchmark target.

#ifndef SGP_KERNELS_HPP_
#define SGP_KERNELS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sgp {

class FiniteSemigroup;

namespace kernels {

// Row-indexed bit matrix; row a holds the characteristic vector of a set of
// elements (here: the principal right ideal aS^1).
struct BitMatrix {
  int n = 0;
  int words_per_row = 0;
  std::vector<std::uint64_t> bits;

  explicit BitMatrix(int size)
      : n(size),
        words_per_row((size + 63) / 64),
        bits(static_cast<std::size_t>(size) * words_per_row, 0) {}

  void set(int r, int c) {
    bits[static_cast<std::size_t>(r) * words_per_row + c / 64] |=
        std::uint64_t{1} << (c % 64);
  }
  bool get(int r, int c) const {
    return (bits[static_cast<std::size_t>(r) * words_per_row + c / 64]
            >> (c % 64))
           & 1;
  }
  bool row_equal(int a, int b) const;
  // row a subset-of row b
  bool row_subset(int a, int b) const;
};

// Lexicographically first triple (i, j, k) with (ij)k != i(jk), if any.
// `table` is row-major n*n with entries already known to be in range.
std::optional<std::array<int, 3>> first_nonassoc_serial(const int* table,
                                                        int n);
std::optional<std::array<int, 3>> first_nonassoc_parallel(const int* table,
                                                          int n);

// Principal right ideals aS^1 = {a} u aS, one bit-row per element.
BitMatrix right_ideal_sets_serial(const FiniteSemigroup& s);
BitMatrix right_ideal_sets_parallel(const FiniteSemigroup& s);

int parallel_thread_count();

}  // namespace kernels
}  // namespace sgp

#endif  // SGP_KERNELS_HPP_
