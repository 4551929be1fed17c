#pragma once

// Definition-level checks for complementary sequences, arrays, sets and mates,
// plus an exhaustive search used as an independent oracle on small sizes.
// Every check is exact: sums are tested with the cyclotomic zero test.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "golay2d/constructions.hpp"
#include "golay2d/correlation.hpp"
#include "golay2d/qary_array.hpp"

namespace golay2d {

struct Violation {
  Eigen::Index u1;
  Eigen::Index u2;
  CorrelationValue value;
  std::complex<double> approx() const { return value.to_complex(); }
};

enum class VerifyStatus {
  passed,
  sidelobes,           // nonzero sum at some checked shift
  center_mismatch,     // zero-shift sum differs from the expected peak
  first_not_gcap,      // mate check: the first pair is not complementary
  second_not_gcap,     // mate check: the second pair is not complementary
};

const char* to_string(VerifyStatus status);

struct VerificationResult {
  bool passed = false;
  VerifyStatus status = VerifyStatus::passed;
  std::vector<Violation> violations;  // capped at VerifyOptions::max_violations
  std::size_t violation_count = 0;    // uncapped
  CorrelationValue center_value{2};
  CorrelationValue expected_center{2};
};

struct VerifyOptions {
  std::size_t max_violations = 16;
};

// Sum of autocorrelations is zero off-center and N*L1*L2 at the center.
// Throws std::invalid_argument for an empty set or mismatched shapes.
VerificationResult is_gcas(std::span<const QaryArray> arrays, const VerifyOptions& opts = {});

// Same condition for single-row arrays. Throws std::invalid_argument for ragged
// lengths or a multi-row input.
VerificationResult is_gcs(std::span<const QaryArray> sequences, const VerifyOptions& opts = {});

VerificationResult is_gcap(const QaryArray& c, const QaryArray& d, const VerifyOptions& opts = {});
inline VerificationResult is_gcap(const ArrayPair& pair, const VerifyOptions& opts = {}) {
  return is_gcap(pair.first, pair.second, opts);
}

// rho(A, C; u) + rho(B, D; u) = 0 at every shift, the center included. Each
// pair must be a GCAP itself; a failure there is reported with its own status.
VerificationResult is_mate(const ArrayPair& first, const ArrayPair& second, const VerifyOptions& opts = {});

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 26;

// Every ordered pair of L1 x L2 arrays over Z_q whose autocorrelations sum to a
// GCAP profile. Arrays are ordered lexicographically by row-major entries, and
// pairs by (first, second). Throws BudgetExceeded when q^(2 L1 L2) > budget.
std::vector<ArrayPair> brute_force_gcaps(int q, int l1, int l2, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace golay2d
