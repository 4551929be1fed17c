#pragma once

// Shared test helpers: seeded generators and oracles that never touch the
// library's Boolean-function or exact-correlation code.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "golay2d/constructions.hpp"
#include "golay2d/qary_array.hpp"

namespace testing_support {

using namespace golay2d;

inline std::uint64_t seed() {
  if (const char* s = std::getenv("GOLAY2D_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

class Gen {
 public:
  explicit Gen(std::uint64_t salt = 0) : rng_(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  int even_q() {
    static constexpr int qs[] = {2, 4, 6, 8, 12};
    return qs[uniform(0, 4)];
  }

  Permutation permutation(int size) {
    Permutation pi(static_cast<std::size_t>(size));
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng_);
    return pi;
  }

  std::vector<int> coeffs(int size, int q) {
    std::vector<int> out(static_cast<std::size_t>(size));
    for (auto& c : out) c = uniform(0, q - 1);
    return out;
  }

  // n + m in [2, max_vars], each of n, m at least min_side.
  std::pair<int, int> dims(int max_vars, int min_side) {
    while (true) {
      const int n = uniform(min_side, max_vars - min_side);
      const int m = uniform(min_side, max_vars - n);
      if (n + m >= 2 && m >= min_side && n + m <= max_vars) return {n, m};
    }
  }

  GcapBasicSpec basic_spec(int max_vars = 6) {
    GcapBasicSpec s;
    s.q = even_q();
    std::tie(s.n, s.m) = dims(max_vars, 1);
    s.pi1 = permutation(s.m);
    s.pi2 = permutation(s.n);
    s.p = coeffs(s.m, s.q);
    s.lambda = coeffs(s.n, s.q);
    s.p0 = uniform(0, s.q - 1);
    return s;
  }

  GcapGeneralSpec general_spec(int max_vars = 6) {
    GcapGeneralSpec s;
    s.q = even_q();
    std::tie(s.n, s.m) = dims(max_vars, 0);
    s.pi = permutation(s.n + s.m);
    s.p = coeffs(s.n + s.m, s.q);
    s.p0 = uniform(0, s.q - 1);
    return s;
  }

  GcasSpec gcas_spec(int max_vars = 6) {
    GcasSpec s;
    s.q = even_q();
    std::tie(s.n, s.m) = dims(max_vars, 0);
    const auto order = permutation(s.n + s.m);
    const int k = uniform(1, std::min(3, s.n + s.m));
    // k nonempty blocks from k - 1 distinct cut points
    std::vector<int> cuts(static_cast<std::size_t>(s.n + s.m - 1));
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng_);
    cuts.resize(static_cast<std::size_t>(k - 1));
    cuts.push_back(0);
    cuts.push_back(s.n + s.m);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b)
      s.blocks.emplace_back(order.begin() + cuts[b], order.begin() + cuts[b + 1]);
    s.p = coeffs(s.n + s.m, s.q);
    s.p0 = uniform(0, s.q - 1);
    return s;
  }

  QaryArray array(int q, int rows, int cols) {
    PhaseMatrix m(rows, cols);
    for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = uniform(0, q - 1);
    return QaryArray(q, std::move(m));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Bit of z_l at (g, i), little-endian with rows first.
inline int zbit(int l, int n, int g, int i) { return l <= n ? (g >> (l - 1)) & 1 : (i >> (l - n - 1)) & 1; }

inline int mod(long long v, int q) { return static_cast<int>(((v % q) + q) % q); }

// Path-form array evaluated pointwise:
// (q/2) sum over each path of consecutive products + sum p_l z_l + p0 + (q/2) sum_{l in extra} z_l.
inline PhaseMatrix path_array(int q, int n, int m, const std::vector<std::vector<int>>& paths,
                              const std::vector<std::pair<int, int>>& cross_terms, const std::vector<int>& p, int p0,
                              const std::vector<int>& extra) {
  PhaseMatrix out(1 << n, 1 << m);
  for (int g = 0; g < (1 << n); ++g)
    for (int i = 0; i < (1 << m); ++i) {
      long long v = p0;
      for (const auto& path : paths)
        for (std::size_t k = 0; k + 1 < path.size(); ++k) v += (q / 2) * zbit(path[k], n, g, i) * zbit(path[k + 1], n, g, i);
      for (auto [a, b] : cross_terms) v += (q / 2) * zbit(a, n, g, i) * zbit(b, n, g, i);
      for (std::size_t l = 0; l < p.size(); ++l) v += static_cast<long long>(p[l]) * zbit(static_cast<int>(l) + 1, n, g, i);
      for (int l : extra) v += (q / 2) * zbit(l, n, g, i);
      out(g, i) = mod(v, q);
    }
  return out;
}

inline std::vector<int> or_zeros(const std::vector<int>& v, int size) {
  return v.empty() ? std::vector<int>(static_cast<std::size_t>(size), 0) : v;
}

inline ArrayPair oracle_basic(const GcapBasicSpec& s) {
  std::vector<int> cols, rows;
  for (int l : s.pi1) cols.push_back(s.n + l);
  for (int r : s.pi2) rows.push_back(r);
  // z-ordered linear part: lambda on y then p on x
  std::vector<int> lin = or_zeros(s.lambda, s.n);
  const auto p = or_zeros(s.p, s.m);
  lin.insert(lin.end(), p.begin(), p.end());
  const std::vector<std::pair<int, int>> link{{s.n + s.pi1.back(), s.pi2.front()}};
  return {QaryArray(s.q, path_array(s.q, s.n, s.m, {cols, rows}, link, lin, s.p0, {})),
          QaryArray(s.q, path_array(s.q, s.n, s.m, {cols, rows}, link, lin, s.p0, {s.n + s.pi1.front()}))};
}

inline ArrayPair oracle_general(const GcapGeneralSpec& s, std::vector<int> extra_c = {}, std::vector<int> extra_d = {}) {
  const auto p = or_zeros(s.p, s.n + s.m);
  return {QaryArray(s.q, path_array(s.q, s.n, s.m, {s.pi}, {}, p, s.p0, extra_c)),
          QaryArray(s.q, path_array(s.q, s.n, s.m, {s.pi}, {}, p, s.p0, extra_d))};
}

// Floating-point aperiodic cross-correlation sum_{g,i} D[g+u1][i+u2] * conj(C[g][i]).
inline std::complex<double> float_cross(const QaryArray& c, const QaryArray& d, int u1, int u2) {
  auto phases = [](const QaryArray& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (Eigen::Index g = 0; g < a.rows(); ++g)
      for (Eigen::Index i = 0; i < a.cols(); ++i) out(g, i) = std::polar(1.0, 2.0 * std::numbers::pi * a(g, i) / a.q());
    return out;
  };
  const Eigen::MatrixXcd C = phases(c), D = phases(d);
  std::complex<double> s{0, 0};
  for (Eigen::Index g = 0; g < C.rows(); ++g)
    for (Eigen::Index i = 0; i < C.cols(); ++i) {
      const Eigen::Index h = g + u1, j = i + u2;
      if (h < 0 || h >= C.rows() || j < 0 || j >= C.cols()) continue;
      s += D(h, j) * std::conj(C(g, i));
    }
  return s;
}

// Floating-point complementary check: off-center sums below tol, center N*L1*L2.
inline bool float_complementary(const std::vector<QaryArray>& set, double tol = 1e-6) {
  const int l1 = static_cast<int>(set.front().rows()), l2 = static_cast<int>(set.front().cols());
  for (int u1 = 1 - l1; u1 < l1; ++u1)
    for (int u2 = 1 - l2; u2 < l2; ++u2) {
      std::complex<double> s{0, 0};
      for (const auto& a : set) s += float_cross(a, a, u1, u2);
      const double expect = (u1 == 0 && u2 == 0) ? static_cast<double>(set.size()) * l1 * l2 : 0.0;
      if (std::abs(s - expect) > tol) return false;
    }
  return true;
}

template <std::size_t R, std::size_t C>
QaryArray golden_array(int q, const std::array<std::array<int, C>, R>& rows) {
  PhaseMatrix m(static_cast<Eigen::Index>(R), static_cast<Eigen::Index>(C));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return QaryArray(q, std::move(m));
}

}  // namespace testing_support
