// The acceptance suite behind `sgp verify-paper`: exhaustive small-instance
// sweeps, seeded randomized suites, the counterexample replays, and the
// mutation-sensitivity gate.  One line per criterion, deterministic for a
// fixed seed (timings can be suppressed for byte-comparison).

#ifndef SGP_VERIFY_HPP_
#define SGP_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sgp/constructions.hpp"

namespace sgp::verify {

struct Options {
  std::string suite = "all";  // all | finite | symbolic
  std::uint64_t seed = 1;
  bool timings = true;
  mutation::Kind inject = mutation::Kind::None;
};

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::int64_t millis = 0;
  std::string detail;  // witness or summary counts
};

struct Report {
  std::vector<CriterionResult> results;

  bool all_pass() const;
  // "PASS C1 17ms" lines, in criterion order.
  std::string render(bool timings) const;
};

Report run(const Options& options);

}  // namespace sgp::verify

#endif  // SGP_VERIFY_HPP_
