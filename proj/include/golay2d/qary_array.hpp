#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "golay2d/boolean_function.hpp"

namespace golay2d {

using PhaseMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// An L1 x L2 array over Z_q. Row index g, column index i. A 1-D sequence is a
// single-row array.
class QaryArray {
 public:
  // Entries are reduced mod q. Throws std::invalid_argument for q < 2 or an
  // empty matrix.
  QaryArray(int q, PhaseMatrix entries);
  QaryArray(int q, Eigen::Index rows, Eigen::Index cols);

  static QaryArray sequence(int q, const std::vector<int>& values);
  static QaryArray from_rows(int q, const std::vector<std::vector<int>>& rows);

  int q() const { return q_; }
  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  Eigen::Index size() const { return entries_.size(); }
  const PhaseMatrix& entries() const { return entries_; }

  int operator()(Eigen::Index g, Eigen::Index i) const { return entries_(g, i); }

  std::vector<int> row(Eigen::Index g) const;
  std::vector<int> col(Eigen::Index i) const;
  std::vector<std::vector<int>> to_rows() const;

  // Entrywise sum mod q; q and shape must match.
  QaryArray operator+(const QaryArray& other) const;
  QaryArray plus_constant(int c) const;
  QaryArray transposed() const;

  bool same_shape(const QaryArray& other) const {
    return q_ == other.q_ && rows() == other.rows() && cols() == other.cols();
  }
  bool operator==(const QaryArray& other) const {
    return same_shape(other) && entries_ == other.entries_;
  }

  // C = xi^c with xi = exp(2 pi sqrt(-1) / q).
  template <typename Scalar = double>
  ComplexMatrix<Scalar> complex_form() const {
    ComplexMatrix<Scalar> out(rows(), cols());
    const Scalar step = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(q_);
    for (Eigen::Index g = 0; g < rows(); ++g)
      for (Eigen::Index i = 0; i < cols(); ++i) out(g, i) = std::polar(Scalar(1), step * Scalar(entries_(g, i)));
    return out;
  }

 private:
  int q_;
  PhaseMatrix entries_;
};

// The 2^n x 2^m array with entry (g, i) = f(g, i).
QaryArray array_from_function(const GeneralizedBooleanFunction& f);

// Recovers the unique ANF of a 2^n x 2^m array over Z_q (binary Moebius
// transform). Inverse of array_from_function. Throws std::invalid_argument
// when the shape is not a power of two in each direction or q is odd.
GeneralizedBooleanFunction function_from_array(const QaryArray& a);

// Throws std::invalid_argument unless both arrays share q and shape.
void require_same_shape(const QaryArray& a, const QaryArray& b);

}  // namespace golay2d
