#include "doctest.h"

#include "sgp/constructions.hpp"
#include "sgp/finite.hpp"
#include "sgp/kernels.hpp"
#include "sgp/sampling.hpp"

using namespace sgp;

TEST_CASE("serial and parallel associativity kernels agree on all order-2 tables") {
  for (int code = 0; code < 16; ++code) {
    int const t[4] = {code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1};
    CHECK(kernels::first_nonassoc_serial(t, 2)
          == kernels::first_nonassoc_parallel(t, 2));
  }
}

TEST_CASE("kernels agree on larger tables, including broken ones") {
  auto const s = brandt_extension(cyclic_group(3), 5);  // order 76
  auto table = s.flat_table();
  int const n = s.order();
  CHECK(kernels::first_nonassoc_serial(table.data(), n) == std::nullopt);
  CHECK(kernels::first_nonassoc_parallel(table.data(), n) == std::nullopt);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto broken = table;
    broken[uniform_below(rng, broken.size())] =
        static_cast<int>(uniform_below(rng, n));
    auto const a = kernels::first_nonassoc_serial(broken.data(), n);
    auto const b = kernels::first_nonassoc_parallel(broken.data(), n);
    CHECK(a == b);
  }
}

TEST_CASE("right ideal kernels agree and match the definition") {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    auto const s = random_semigroup_up_to(rng, 5);
    auto const serial = kernels::right_ideal_sets_serial(s);
    auto const parallel = kernels::right_ideal_sets_parallel(s);
    CHECK(serial.bits == parallel.bits);
    for (int a = 0; a < s.order(); ++a) {
      CHECK(serial.get(a, a));
      for (int c = 0; c < s.order(); ++c) {
        bool in_ideal = a == c;
        for (int x = 0; x < s.order(); ++x) {
          in_ideal = in_ideal || s.product(a, x) == c;
        }
        CHECK(serial.get(a, c) == in_ideal);
      }
    }
  }
}

TEST_CASE("bit matrix row operations") {
  kernels::BitMatrix m(70);
  m.set(0, 3);
  m.set(0, 69);
  m.set(1, 3);
  CHECK(m.get(0, 69));
  CHECK(!m.get(1, 69));
  CHECK(m.row_subset(1, 0));
  CHECK(!m.row_subset(0, 1));
  CHECK(!m.row_equal(0, 1));
  m.set(1, 69);
  CHECK(m.row_equal(0, 1));
}
