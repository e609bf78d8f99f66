// Serial vs OpenMP kernel comparison on large constructed tables.
//
//   bench_kernels [order]
//
// Builds a Brandt extension of a cyclic group scaled to roughly the given
// order (default 512), then times associativity validation and the
// principal-right-ideal sweep with both implementations.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "sgp/constructions.hpp"
#include "sgp/finite.hpp"
#include "sgp/green.hpp"
#include "sgp/kernels.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int target = argc > 1 ? std::atoi(argv[1]) : 512;
  if (target < 8) {
    target = 8;
  }
  // |B(C_k, i)| = i^2 k + 1; pick i = 8 and scale k.
  int const num_i = 8;
  int const k = std::max(1, target / (num_i * num_i));
  auto const s = sgp::brandt_extension(sgp::cyclic_group(k), num_i);
  int const n = s.order();
  std::printf("table order %d, %d threads\n", n,
              sgp::kernels::parallel_thread_count());

  auto const* table = s.flat_table().data();
  {
    auto const t0 = Clock::now();
    auto const r_serial = sgp::kernels::first_nonassoc_serial(table, n);
    double const serial_ms = ms_since(t0);
    auto const t1 = Clock::now();
    auto const r_parallel = sgp::kernels::first_nonassoc_parallel(table, n);
    double const parallel_ms = ms_since(t1);
    if (r_serial != r_parallel) {
      std::printf("MISMATCH in associativity kernels\n");
      return 1;
    }
    std::printf("associativity sweep (%lld triples): serial %.1fms, openmp %.1fms (x%.2f)\n",
                static_cast<long long>(n) * n * n, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
  }
  {
    auto const t0 = Clock::now();
    auto const m_serial = sgp::kernels::right_ideal_sets_serial(s);
    double const serial_ms = ms_since(t0);
    auto const t1 = Clock::now();
    auto const m_parallel = sgp::kernels::right_ideal_sets_parallel(s);
    double const parallel_ms = ms_since(t1);
    if (m_serial.bits != m_parallel.bits) {
      std::printf("MISMATCH in right-ideal kernels\n");
      return 1;
    }
    std::printf("right-ideal sets: serial %.1fms, openmp %.1fms (x%.2f)\n",
                serial_ms, parallel_ms, serial_ms / parallel_ms);
  }
  {
    auto const t0 = Clock::now();
    auto const poset = sgp::r_poset(s);
    std::printf("r_poset (both routes + cross-validation): %.1fms, %d classes\n",
                ms_since(t0), poset.num_classes());
  }
  return 0;
}
