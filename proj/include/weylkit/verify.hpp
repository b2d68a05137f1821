#ifndef WEYLKIT_VERIFY_HPP
#define WEYLKIT_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "weylkit/coxeter.hpp"

namespace weylkit {

struct VerifyScope {
  std::shared_ptr<const CoxeterSystem> system;  // coxeter-level suites
  int radius = 3;          // ball radius for element sweeps
  int pair_radius = 3;     // ball radius for pair/triple sweeps
  int depth_cap = 8;       // positive-root depth cap
  int samples = 200;       // random cocharacters per rank
  std::uint64_t seed = 0;
  std::vector<int> affine_ranks{2, 3};
  int affine_radius = 6;   // affine ball radius (model agreement, Prop 4.2)
  bool n4_report = false;  // append the n=4 bound sweep
};

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  long millis = 0;
  std::vector<std::string> notes;  // free-form report lines (n=4 sweep etc.)
};

/// Runs every invariant suite in fixed order.
std::vector<SuiteResult> run_verification(const VerifyScope& scope);

}  // namespace weylkit

#endif  // WEYLKIT_VERIFY_HPP
