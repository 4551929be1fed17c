#pragma once

// Direct constructions of complementary pairs, sets and mates from quadratic
// generalized Boolean functions.
//
// Permutations are 1-indexed one-line notation: {3, 4, 2, 1, 5} means pi(1) = 3,
// pi(2) = 4, and so on. Indices refer to z variables unless stated otherwise.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "golay2d/boolean_function.hpp"
#include "golay2d/qary_array.hpp"

namespace golay2d {

using Permutation = std::vector<int>;
using Blocks = std::vector<std::vector<int>>;

struct ArrayPair {
  QaryArray first;
  QaryArray second;

  bool operator==(const ArrayPair&) const = default;
};

// Product-path pair over separate row and column chains, linked by
// x_{pi1(m)} y_{pi2(1)}. lambda are full Z_q coefficients on the row variables.
struct GcapBasicSpec {
  int q = 2;
  int n = 1;
  int m = 1;
  Permutation pi1;  // on column indices 1..m
  Permutation pi2;  // on row indices 1..n
  std::vector<int> p;       // p_1..p_m on x_1..x_m; empty means all zero
  std::vector<int> lambda;  // lambda_1..lambda_n on y_1..y_n; empty means all zero
  int p0 = 0;
};

// One path through all n + m variables.
struct GcapGeneralSpec {
  int q = 2;
  int n = 1;
  int m = 1;
  Permutation pi;     // on 1..n+m
  std::vector<int> p;  // p_1..p_{n+m}; empty means all zero
  int p0 = 0;
};

// k disjoint paths. The alpha-th block lists pi_alpha(1), pi_alpha(2), ... in order.
struct GcasSpec {
  int q = 2;
  int n = 0;
  int m = 2;
  Blocks blocks;
  std::vector<int> p;  // p_1..p_{n+m}; empty means all zero
  int p0 = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument unless pi is a bijection on {1..size}.
void validate_permutation(const Permutation& pi, int size, const char* name = "permutation");
// Throws std::invalid_argument unless blocks are nonempty, disjoint and cover {1..size}.
void validate_partition(const Blocks& blocks, int size);

void validate(const GcapBasicSpec& spec);
void validate(const GcapGeneralSpec& spec);
void validate(const GcasSpec& spec);

// Generating functions.
GeneralizedBooleanFunction gcap_basic_function(const GcapBasicSpec& spec);
GeneralizedBooleanFunction gcap_general_function(const GcapGeneralSpec& spec);
GeneralizedBooleanFunction gcas_function(const GcasSpec& spec);

// 1-D Golay pair (f, f + (q/2) x_{pi(1)}) of length 2^m, as single-row arrays.
// Requires m >= 2.
ArrayPair gdj_pair(int q, int m, const Permutation& pi, const std::vector<int>& p = {}, int p0 = 0);

// 1-D complementary set of 2^k sequences of length 2^m, one per offset selector.
// Ordered with the selector of block 1 varying fastest. Requires m >= 2.
std::vector<QaryArray> gcs_1d(int q, int m, const Blocks& blocks, const std::vector<int>& p = {}, int p0 = 0);

ArrayPair construct_gcap_basic(const GcapBasicSpec& spec);
ArrayPair construct_gcap_general(const GcapGeneralSpec& spec);

// (f + (q/2) z_{pi(n+m)}, f + (q/2) z_{pi(1)} + (q/2) z_{pi(n+m)}) for the same
// f as construct_gcap_general(spec).
ArrayPair construct_mate(const GcapGeneralSpec& spec);

// All 2^k arrays f + (q/2) sum_alpha lambda_alpha z_{pi_alpha(1)}, lambda in {0,1}^k,
// with lambda_1 (block 1) the fastest-varying bit.
std::vector<QaryArray> construct_gcas(const GcasSpec& spec);

// General-path specs producing the same pair as a basic spec: the column chain
// is listed first, then the row chain.
GcapGeneralSpec general_spec_from_basic(const GcapBasicSpec& spec);

// (n + m)! / 2 * q^(n + m + 1). Throws std::overflow_error when it does not fit.
std::uint64_t count_path_arrays(int q, int n, int m);

// Raw spec count (n + m)! * q^(n + m + 1). Throws std::overflow_error.
std::uint64_t path_spec_count(int q, int n, int m);

// Counted in raw (pi, p, p0) specs.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 16;

// Streams every (pi, p, p0) exactly once: permutations in lexicographic order,
// then p with p_1 fastest, then p0. Returns the number of specs visited. The
// visitor may return false to stop early. Throws BudgetExceeded when the raw
// spec count exceeds budget.
std::uint64_t enumerate_path_specs(int q, int n, int m, std::uint64_t budget,
                                 const std::function<bool(const GcapGeneralSpec&, const ArrayPair&)>& visit);

struct EnumerationCount {
  std::uint64_t raw_specs = 0;
  std::uint64_t distinct_first_arrays = 0;
};

// Enumerates and deduplicates the first arrays entrywise.
EnumerationCount count_distinct_path_arrays(int q, int n, int m, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace golay2d
