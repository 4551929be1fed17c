#include "golay2d/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace golay2d {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("correlation arithmetic overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("correlation arithmetic overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("correlation arithmetic overflow");
  return r;
}

// Exact quotient of num by a monic divisor.
Poly divide_monic(Poly num, const Poly& div) {
  const std::size_t dd = div.size() - 1;
  if (num.size() <= dd) return {0};
  Poly quot(num.size() - dd, 0);
  for (std::size_t k = num.size() - 1; k + 1 > dd; --k) {
    const std::int64_t c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] = checked_sub(num[k - dd + j], checked_mul(c, div[j]));
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (num[j] != 0) throw std::logic_error("inexact cyclotomic division");
  return quot;
}

Poly compute_cyclotomic(int q) {
  // x^q - 1 = prod_{d | q} Phi_d(x)
  Poly p(static_cast<std::size_t>(q) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(q)] = 1;
  for (int d = 1; d < q; ++d)
    if (q % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  return p;
}

void require_q(int q) {
  if (q < 1) throw std::invalid_argument("root-of-unity order q must be >= 1");
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int q) {
  require_q(q);
  static std::recursive_mutex mutex;
  static std::map<int, Poly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  return cache.emplace(q, compute_cyclotomic(q)).first->second;
}

CorrelationValue::CorrelationValue(int q) : q_(q), counts_() {
  require_q(q);
  counts_.assign(static_cast<std::size_t>(q), 0);
}

CorrelationValue::CorrelationValue(int q, std::vector<std::int64_t> counts) : q_(q), counts_(std::move(counts)) {
  require_q(q);
  if (counts_.size() != static_cast<std::size_t>(q))
    throw std::invalid_argument("count vector length " + std::to_string(counts_.size()) + " != q=" + std::to_string(q));
}

CorrelationValue CorrelationValue::integer(int q, std::int64_t k) {
  CorrelationValue v(q);
  v.counts_[0] = k;
  return v;
}

CorrelationValue CorrelationValue::root(int q, long long exponent) {
  CorrelationValue v(q);
  v.add_root(exponent);
  return v;
}

void CorrelationValue::add_root(long long exponent, std::int64_t mult) {
  long long e = exponent % q_;
  if (e < 0) e += q_;
  counts_[static_cast<std::size_t>(e)] = checked_add(counts_[static_cast<std::size_t>(e)], mult);
}

CorrelationValue& CorrelationValue::operator+=(const CorrelationValue& other) {
  if (other.q_ != q_) throw std::invalid_argument("cannot combine correlation values with different q");
  for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] = checked_add(counts_[e], other.counts_[e]);
  return *this;
}

CorrelationValue& CorrelationValue::operator-=(const CorrelationValue& other) {
  if (other.q_ != q_) throw std::invalid_argument("cannot combine correlation values with different q");
  for (std::size_t e = 0; e < counts_.size(); ++e) counts_[e] = checked_sub(counts_[e], other.counts_[e]);
  return *this;
}

CorrelationValue CorrelationValue::operator-() const {
  CorrelationValue out(q_);
  for (std::size_t e = 0; e < counts_.size(); ++e) out.counts_[e] = checked_sub(0, counts_[e]);
  return out;
}

CorrelationValue CorrelationValue::conj() const {
  CorrelationValue out(q_);
  for (std::size_t e = 0; e < counts_.size(); ++e) out.counts_[(static_cast<std::size_t>(q_) - e) % counts_.size()] = counts_[e];
  return out;
}

std::vector<std::int64_t> CorrelationValue::reduced() const {
  const Poly& phi = cyclotomic_polynomial(q_);
  const std::size_t deg = phi.size() - 1;
  Poly r = counts_;
  for (std::size_t k = r.size(); k-- > deg;) {
    const std::int64_t c = r[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[k - deg + j] = checked_sub(r[k - deg + j], checked_mul(c, phi[j]));
  }
  r.resize(deg);
  return r;
}

bool CorrelationValue::is_zero() const {
  for (std::int64_t c : reduced())
    if (c != 0) return false;
  return true;
}

std::complex<double> CorrelationValue::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / q_;
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] == 0) continue;
    // Exact axes for the quarter turns keep integer tables free of rounding noise.
    std::complex<double> w;
    if (e == 0)
      w = {1.0, 0.0};
    else if (2 * e == counts_.size())
      w = {-1.0, 0.0};
    else if (4 * e == counts_.size())
      w = {0.0, 1.0};
    else if (4 * e == 3 * counts_.size())
      w = {0.0, -1.0};
    else
      w = std::polar(1.0, step * static_cast<double>(e));
    acc += static_cast<double>(counts_[e]) * w;
  }
  return acc;
}

std::optional<std::int64_t> CorrelationValue::as_integer() const {
  const auto z = to_complex();
  const auto k = static_cast<std::int64_t>(std::llround(z.real()));
  if ((*this - integer(q_, k)).is_zero()) return k;
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> CorrelationValue::as_gaussian_integer() const {
  if (q_ % 4 != 0) {
    if (auto k = as_integer()) return std::pair{*k, std::int64_t{0}};
    return std::nullopt;
  }
  const auto z = to_complex();
  const auto a = static_cast<std::int64_t>(std::llround(z.real()));
  const auto b = static_cast<std::int64_t>(std::llround(z.imag()));
  CorrelationValue probe = integer(q_, a);
  probe.add_root(q_ / 4, b);
  if ((*this - probe).is_zero()) return std::pair{a, b};
  return std::nullopt;
}

bool CorrelationValue::operator==(const CorrelationValue& other) const {
  return q_ == other.q_ && (*this - other).is_zero();
}

CorrelationValue correlation_sum(std::span<const CorrelationValue> values, int q) {
  CorrelationValue acc(q);
  for (const auto& v : values) acc += v;
  return acc;
}

CorrelationTable::CorrelationTable(int q, Eigen::Index l1, Eigen::Index l2) : q_(q), l1_(l1), l2_(l2) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("correlation table dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(grid_rows() * grid_cols()), CorrelationValue(q));
}

std::size_t CorrelationTable::index(Eigen::Index u1, Eigen::Index u2) const {
  if (!contains(u1, u2))
    throw std::out_of_range("shift (" + std::to_string(u1) + "," + std::to_string(u2) + ") outside table");
  return static_cast<std::size_t>((u1 + l1_ - 1) * grid_cols() + (u2 + l2_ - 1));
}

const CorrelationValue& CorrelationTable::at(Eigen::Index u1, Eigen::Index u2) const { return cells_[index(u1, u2)]; }
CorrelationValue& CorrelationTable::at(Eigen::Index u1, Eigen::Index u2) { return cells_[index(u1, u2)]; }

CorrelationTable& CorrelationTable::operator+=(const CorrelationTable& other) {
  if (other.q_ != q_ || other.l1_ != l1_ || other.l2_ != l2_)
    throw std::invalid_argument("cannot add correlation tables of different shape or q");
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += other.cells_[k];
  return *this;
}

bool CorrelationTable::operator==(const CorrelationTable& other) const {
  if (other.q_ != q_ || other.l1_ != l1_ || other.l2_ != l2_) return false;
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (!(cells_[k] == other.cells_[k])) return false;
  return true;
}

CorrelationValue cross_correlation(const QaryArray& c, const QaryArray& d, Eigen::Index u1, Eigen::Index u2) {
  require_same_shape(c, d);
  const Eigen::Index l1 = c.rows();
  const Eigen::Index l2 = c.cols();
  if (u1 <= -l1 || u1 >= l1 || u2 <= -l2 || u2 >= l2)
    throw std::out_of_range("shift (" + std::to_string(u1) + "," + std::to_string(u2) + ") outside (-" +
                            std::to_string(l1) + "," + std::to_string(l1) + ")x(-" + std::to_string(l2) + "," +
                            std::to_string(l2) + ")");
  const int q = c.q();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
  const Eigen::Index g_lo = std::max<Eigen::Index>(0, -u1), g_hi = std::min(l1, l1 - u1);
  const Eigen::Index i_lo = std::max<Eigen::Index>(0, -u2), i_hi = std::min(l2, l2 - u2);
  const auto& ce = c.entries();
  const auto& de = d.entries();
  for (Eigen::Index g = g_lo; g < g_hi; ++g)
    for (Eigen::Index i = i_lo; i < i_hi; ++i) {
      int e = de(g + u1, i + u2) - ce(g, i);
      if (e < 0) e += q;
      ++counts[static_cast<std::size_t>(e)];
    }
  return CorrelationValue(q, std::move(counts));
}

CorrelationTable cross_correlation_table(const QaryArray& c, const QaryArray& d) {
  require_same_shape(c, d);
  CorrelationTable table(c.q(), c.rows(), c.cols());
  for (Eigen::Index u1 = 1 - c.rows(); u1 < c.rows(); ++u1)
    for (Eigen::Index u2 = 1 - c.cols(); u2 < c.cols(); ++u2) table.at(u1, u2) = cross_correlation(c, d, u1, u2);
  return table;
}

CorrelationTable auto_correlation_table(const QaryArray& c) {
  CorrelationTable table(c.q(), c.rows(), c.cols());
  for (Eigen::Index u1 = 0; u1 < c.rows(); ++u1)
    for (Eigen::Index u2 = 1 - c.cols(); u2 < c.cols(); ++u2) {
      if (u1 == 0 && u2 < 0) continue;
      table.at(u1, u2) = cross_correlation(c, c, u1, u2);
      if (u1 != 0 || u2 != 0) table.at(-u1, -u2) = table.at(u1, u2).conj();
    }
  return table;
}

CorrelationTable sum_tables(std::span<const CorrelationTable> tables) {
  if (tables.empty()) throw std::invalid_argument("sum of an empty table list has no shape");
  CorrelationTable acc = tables.front();
  for (std::size_t k = 1; k < tables.size(); ++k) acc += tables[k];
  return acc;
}

}  // namespace golay2d
