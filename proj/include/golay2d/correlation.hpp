#pragma once

// Exact aperiodic correlations over q-PSK alphabets.
//
// A correlation value is a sum of q-th roots of unity, kept as a vector of
// exponent counts: counts[e] is the net multiplicity of xi^e. Zero testing is
// exact: the integer polynomial sum_e counts[e] x^e is reduced modulo the q-th
// cyclotomic polynomial, and the value is zero iff the remainder is.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "golay2d/qary_array.hpp"

namespace golay2d {

// Integer coefficients of Phi_q, constant term first. Cached per q; thread safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(int q);

class CorrelationValue {
 public:
  explicit CorrelationValue(int q);
  CorrelationValue(int q, std::vector<std::int64_t> counts);

  static CorrelationValue integer(int q, std::int64_t k);
  static CorrelationValue root(int q, long long exponent);

  int q() const { return q_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  // Adds mult * xi^exponent; the exponent is reduced mod q.
  void add_root(long long exponent, std::int64_t mult = 1);

  CorrelationValue& operator+=(const CorrelationValue& other);
  CorrelationValue& operator-=(const CorrelationValue& other);
  friend CorrelationValue operator+(CorrelationValue a, const CorrelationValue& b) { return a += b; }
  friend CorrelationValue operator-(CorrelationValue a, const CorrelationValue& b) { return a -= b; }
  CorrelationValue operator-() const;

  // Complex conjugate: xi^e -> xi^-e.
  CorrelationValue conj() const;

  // Remainder of the count polynomial modulo Phi_q; a canonical form of the value.
  std::vector<std::int64_t> reduced() const;

  bool is_zero() const;
  std::complex<double> to_complex() const;

  // The value as a rational integer, if it is one.
  std::optional<std::int64_t> as_integer() const;
  // The value as a + b*sqrt(-1) with integer a, b, if it is one.
  std::optional<std::pair<std::int64_t, std::int64_t>> as_gaussian_integer() const;

  // Exact equality of the represented complex numbers, not of the counts.
  bool operator==(const CorrelationValue& other) const;

 private:
  int q_;
  std::vector<std::int64_t> counts_;
};

inline bool is_zero(const CorrelationValue& v) { return v.is_zero(); }
inline std::complex<double> to_complex(const CorrelationValue& v) { return v.to_complex(); }

// Entrywise sum of count vectors. The empty sum is zero over Z_q.
CorrelationValue correlation_sum(std::span<const CorrelationValue> values, int q);

// Correlations of an L1 x L2 pair over every shift -L1 < u1 < L1, -L2 < u2 < L2,
// stored as a dense (2 L1 - 1) x (2 L2 - 1) grid.
class CorrelationTable {
 public:
  CorrelationTable(int q, Eigen::Index l1, Eigen::Index l2);

  int q() const { return q_; }
  Eigen::Index l1() const { return l1_; }
  Eigen::Index l2() const { return l2_; }
  Eigen::Index grid_rows() const { return 2 * l1_ - 1; }
  Eigen::Index grid_cols() const { return 2 * l2_ - 1; }

  bool contains(Eigen::Index u1, Eigen::Index u2) const {
    return u1 > -l1_ && u1 < l1_ && u2 > -l2_ && u2 < l2_;
  }

  // Throws std::out_of_range outside the shift window.
  const CorrelationValue& at(Eigen::Index u1, Eigen::Index u2) const;
  CorrelationValue& at(Eigen::Index u1, Eigen::Index u2);

  CorrelationTable& operator+=(const CorrelationTable& other);
  bool operator==(const CorrelationTable& other) const;

  // Grid in row order u1 = -(L1-1)..L1-1, column order u2 = -(L2-1)..L2-1.
  template <typename Scalar = double>
  ComplexMatrix<Scalar> to_complex() const {
    ComplexMatrix<Scalar> out(grid_rows(), grid_cols());
    for (Eigen::Index r = 0; r < grid_rows(); ++r)
      for (Eigen::Index c = 0; c < grid_cols(); ++c) {
        const auto z = cells_[index(r - (l1_ - 1), c - (l2_ - 1))].to_complex();
        out(r, c) = std::complex<Scalar>(static_cast<Scalar>(z.real()), static_cast<Scalar>(z.imag()));
      }
    return out;
  }

 private:
  std::size_t index(Eigen::Index u1, Eigen::Index u2) const;

  int q_;
  Eigen::Index l1_;
  Eigen::Index l2_;
  std::vector<CorrelationValue> cells_;
};

// rho(C, D; u1, u2) = sum_{g,i} xi^(d[g+u1][i+u2] - c[g][i]), with out-of-range
// terms of d contributing nothing. Throws std::invalid_argument on q or shape
// mismatch and std::out_of_range on a shift outside the window.
CorrelationValue cross_correlation(const QaryArray& c, const QaryArray& d, Eigen::Index u1, Eigen::Index u2);
inline CorrelationValue auto_correlation(const QaryArray& c, Eigen::Index u1, Eigen::Index u2) {
  return cross_correlation(c, c, u1, u2);
}

CorrelationTable cross_correlation_table(const QaryArray& c, const QaryArray& d);

// Computes half the shifts and fills the rest from rho(C; -u) = conj(rho(C; u)).
CorrelationTable auto_correlation_table(const QaryArray& c);

// Cellwise sum; throws std::invalid_argument for an empty list or mismatched tables.
CorrelationTable sum_tables(std::span<const CorrelationTable> tables);

}  // namespace golay2d
