#include "golay2d/qary_array.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace golay2d {

namespace {

int mod(long long v, int q) {
  const long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int log2_exact(Eigen::Index len) {
  if (len < 1 || !std::has_single_bit(static_cast<unsigned long long>(len))) return -1;
  return std::countr_zero(static_cast<unsigned long long>(len));
}

}  // namespace

QaryArray::QaryArray(int q, PhaseMatrix entries) : q_(q), entries_(std::move(entries)) {
  if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
  if (entries_.size() == 0) throw std::invalid_argument("array must be nonempty");
  entries_ = entries_.unaryExpr([q](int v) { return mod(v, q); });
}

QaryArray::QaryArray(int q, Eigen::Index rows, Eigen::Index cols) : QaryArray(q, PhaseMatrix::Zero(rows, cols)) {}

QaryArray QaryArray::sequence(int q, const std::vector<int>& values) {
  PhaseMatrix m(1, static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) m(0, static_cast<Eigen::Index>(i)) = values[i];
  return QaryArray(q, std::move(m));
}

QaryArray QaryArray::from_rows(int q, const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("array must be nonempty");
  const auto cols = rows.front().size();
  PhaseMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t g = 0; g < rows.size(); ++g) {
    if (rows[g].size() != cols)
      throw std::invalid_argument("ragged array: row " + std::to_string(g) + " has " + std::to_string(rows[g].size()) +
                                  " entries, expected " + std::to_string(cols));
    for (std::size_t i = 0; i < cols; ++i) m(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(i)) = rows[g][i];
  }
  return QaryArray(q, std::move(m));
}

std::vector<int> QaryArray::row(Eigen::Index g) const {
  std::vector<int> out(static_cast<std::size_t>(cols()));
  for (Eigen::Index i = 0; i < cols(); ++i) out[static_cast<std::size_t>(i)] = entries_(g, i);
  return out;
}

std::vector<int> QaryArray::col(Eigen::Index i) const {
  std::vector<int> out(static_cast<std::size_t>(rows()));
  for (Eigen::Index g = 0; g < rows(); ++g) out[static_cast<std::size_t>(g)] = entries_(g, i);
  return out;
}

std::vector<std::vector<int>> QaryArray::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(rows()));
  for (Eigen::Index g = 0; g < rows(); ++g) out.push_back(row(g));
  return out;
}

QaryArray QaryArray::operator+(const QaryArray& other) const {
  require_same_shape(*this, other);
  return QaryArray(q_, entries_ + other.entries_);
}

QaryArray QaryArray::plus_constant(int c) const {
  return QaryArray(q_, (entries_.array() + mod(c, q_)).matrix());
}

QaryArray QaryArray::transposed() const { return QaryArray(q_, entries_.transpose()); }

void require_same_shape(const QaryArray& a, const QaryArray& b) {
  if (a.q() != b.q())
    throw std::invalid_argument("alphabet mismatch: q=" + std::to_string(a.q()) + " vs q=" + std::to_string(b.q()));
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

QaryArray array_from_function(const GeneralizedBooleanFunction& f) {
  const Eigen::Index rows = Eigen::Index{1} << f.n();
  const Eigen::Index cols = Eigen::Index{1} << f.m();
  PhaseMatrix m(rows, cols);
  for (Eigen::Index g = 0; g < rows; ++g)
    for (Eigen::Index i = 0; i < cols; ++i)
      m(g, i) = f.eval_mask(point_mask(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(i), f.n()));
  return QaryArray(f.q(), std::move(m));
}

GeneralizedBooleanFunction function_from_array(const QaryArray& a) {
  const int n = log2_exact(a.rows());
  const int m = log2_exact(a.cols());
  if (n < 0 || m < 0) throw std::invalid_argument("array dimensions must be powers of two");
  if (n + m < 1) throw std::invalid_argument("1x1 array has no variables");
  GeneralizedBooleanFunction f(a.q(), n, m);

  const std::size_t points = std::size_t{1} << (n + m);
  std::vector<long long> coeff(points);
  for (Eigen::Index g = 0; g < a.rows(); ++g)
    for (Eigen::Index i = 0; i < a.cols(); ++i)
      coeff[point_mask(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(i), n)] = a(g, i);

  // Moebius transform: coeff[S] = sum_{T subset S} (-1)^{|S \ T|} value[T].
  for (int b = 0; b < n + m; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < points; ++s)
      if (s & bit) coeff[s] = mod(coeff[s] - coeff[s ^ bit], a.q());
  }

  f.add_constant(static_cast<int>(coeff[0]));
  std::vector<int> vars;
  for (std::size_t s = 1; s < points; ++s) {
    if (coeff[s] == 0) continue;
    vars.clear();
    for (int b = 0; b < n + m; ++b)
      if (s & (std::size_t{1} << b)) vars.push_back(b + 1);
    f.add_term(static_cast<int>(coeff[s]), vars);
  }
  return f;
}

}  // namespace golay2d
