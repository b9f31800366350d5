#ifndef CALIBRA_VERIFY_HPP
#define CALIBRA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "calibra/g2.hpp"
#include "calibra/spin7.hpp"

namespace calibra {
namespace verify {

struct SuiteResult {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> checks;  // identity -> residual
};

constexpr double kSuiteTol = 1e-9;

/// Suites on a 7-dim structure: cross-axioms, brackets, g2-projectors,
/// octonion-norm, octonion-triple.
SuiteResult run_suite7(const std::string& name, const g2::CrossStructure7& s,
                       std::uint64_t seed, int trials);

/// Suites on an 8-dim structure: triple-cross, cayley-constants, spin,
/// spin7-projectors.
SuiteResult run_suite8(const std::string& name,
                       const spin7::CayleyStructure8& c, std::uint64_t seed,
                       int trials);

std::vector<std::string> suite_names(int dim);

}  // namespace verify
}  // namespace calibra

#endif  // CALIBRA_VERIFY_HPP
