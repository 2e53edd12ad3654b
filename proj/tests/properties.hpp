#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner.  Each returns the number of cases checked and the first failure.

#include <cstdint>
#include <string>

namespace testing {

struct PropertyResult {
  int cases = 0;
  std::string failure;  ///< empty when every case held
  bool ok() const { return failure.empty(); }
};

PropertyResult leibniz_rule(int cases, std::uint64_t seed);
PropertyResult energy_conservation(int cases, std::uint64_t seed);
PropertyResult tau_anticommutation(int cases, std::uint64_t seed);
PropertyResult graded_derivation(int cases, std::uint64_t seed);
PropertyResult cofactor_additivity(int cases, std::uint64_t seed);
PropertyResult certificate_invariants(int cases, std::uint64_t seed);
PropertyResult euler_identity(int cases, std::uint64_t seed);
PropertyResult scaling_identity(int cases, std::uint64_t seed);
PropertyResult gamma_round_trip(int cases, std::uint64_t seed);
PropertyResult format_round_trip(int cases, std::uint64_t seed);
PropertyResult ring_axioms(int cases, std::uint64_t seed);
PropertyResult division_and_gcd(int cases, std::uint64_t seed);

}  // namespace testing
