#include "golay2d/verify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace golay2d {

namespace {

VerificationResult check_profile(const CorrelationTable& sum, std::int64_t expected_peak, bool center_is_sidelobe,
                                 const VerifyOptions& opts) {
  VerificationResult r;
  r.center_value = sum.at(0, 0);
  r.expected_center = CorrelationValue::integer(sum.q(), expected_peak);

  for (Eigen::Index u1 = 1 - sum.l1(); u1 < sum.l1(); ++u1)
    for (Eigen::Index u2 = 1 - sum.l2(); u2 < sum.l2(); ++u2) {
      const auto& v = sum.at(u1, u2);
      const bool center = u1 == 0 && u2 == 0;
      if (center && !center_is_sidelobe) continue;
      if (v.is_zero()) continue;
      ++r.violation_count;
      if (r.violations.size() < opts.max_violations) r.violations.push_back({u1, u2, v});
    }

  if (r.violation_count > 0)
    r.status = VerifyStatus::sidelobes;
  else if (!(r.center_value == r.expected_center))
    r.status = VerifyStatus::center_mismatch;
  r.passed = r.status == VerifyStatus::passed;
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (__builtin_mul_overflow(r, base, &r) || r > cap) return cap + 1;
  }
  return r;
}

QaryArray array_at_index(int q, int l1, int l2, std::uint64_t index) {
  PhaseMatrix m(l1, l2);
  for (Eigen::Index k = m.size(); k-- > 0;) {
    m.data()[k] = static_cast<int>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return QaryArray(q, std::move(m));
}

}  // namespace

const char* to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::passed: return "passed";
    case VerifyStatus::sidelobes: return "nonzero correlation sum";
    case VerifyStatus::center_mismatch: return "zero-shift sum differs from expected peak";
    case VerifyStatus::first_not_gcap: return "first pair is not a complementary array pair";
    case VerifyStatus::second_not_gcap: return "second pair is not a complementary array pair";
  }
  return "unknown";
}

VerificationResult is_gcas(std::span<const QaryArray> arrays, const VerifyOptions& opts) {
  if (arrays.empty()) throw std::invalid_argument("complementary set check needs at least one array");
  std::vector<CorrelationTable> tables;
  tables.reserve(arrays.size());
  for (const auto& a : arrays) {
    require_same_shape(arrays.front(), a);
    tables.push_back(auto_correlation_table(a));
  }
  const auto peak = static_cast<std::int64_t>(arrays.size()) * arrays.front().rows() * arrays.front().cols();
  return check_profile(sum_tables(tables), peak, false, opts);
}

VerificationResult is_gcs(std::span<const QaryArray> sequences, const VerifyOptions& opts) {
  if (sequences.empty()) throw std::invalid_argument("complementary set check needs at least one sequence");
  for (const auto& s : sequences) {
    if (s.rows() != 1) throw std::invalid_argument("sequence inputs must be single-row arrays");
    if (s.cols() != sequences.front().cols())
      throw std::invalid_argument("ragged sequence lengths: " + std::to_string(s.cols()) + " vs " +
                                  std::to_string(sequences.front().cols()));
  }
  return is_gcas(sequences, opts);
}

VerificationResult is_gcap(const QaryArray& c, const QaryArray& d, const VerifyOptions& opts) {
  require_same_shape(c, d);
  const QaryArray pair[] = {c, d};
  return is_gcas(pair, opts);
}

VerificationResult is_mate(const ArrayPair& first, const ArrayPair& second, const VerifyOptions& opts) {
  require_same_shape(first.first, first.second);
  require_same_shape(first.first, second.first);
  require_same_shape(first.first, second.second);

  if (auto r = is_gcap(first, opts); !r.passed) {
    r.status = VerifyStatus::first_not_gcap;
    return r;
  }
  if (auto r = is_gcap(second, opts); !r.passed) {
    r.status = VerifyStatus::second_not_gcap;
    return r;
  }
  auto sum = cross_correlation_table(first.first, second.first);
  sum += cross_correlation_table(first.second, second.second);
  return check_profile(sum, 0, true, opts);
}

std::vector<ArrayPair> brute_force_gcaps(int q, int l1, int l2, std::uint64_t budget) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("array dimensions must be positive");
  const auto cells = static_cast<std::uint64_t>(l1) * static_cast<std::uint64_t>(l2);
  const std::uint64_t pairs = checked_pow(static_cast<std::uint64_t>(q), 2 * cells, budget);
  if (pairs > budget)
    throw BudgetExceeded("q^(2*L1*L2) pairs exceed the search budget of " + std::to_string(budget));
  const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(q), cells, budget);

  // Reduction mod Phi_q is linear, so reduced tables can be added directly and a
  // pair passes iff the reduced off-center sums all vanish.
  const std::size_t phi = cyclotomic_polynomial(q).size() - 1;
  const std::size_t shifts = static_cast<std::size_t>((2 * l1 - 1) * (2 * l2 - 1));
  const std::size_t center = shifts / 2;
  std::vector<std::int64_t> reduced(static_cast<std::size_t>(count) * shifts * phi);
  for (std::uint64_t a = 0; a < count; ++a) {
    const auto table = auto_correlation_table(array_at_index(q, l1, l2, a));
    std::size_t s = 0;
    for (Eigen::Index u1 = 1 - l1; u1 < l1; ++u1)
      for (Eigen::Index u2 = 1 - l2; u2 < l2; ++u2, ++s) {
        const auto r = table.at(u1, u2).reduced();
        std::copy(r.begin(), r.end(), reduced.begin() + static_cast<std::ptrdiff_t>((a * shifts + s) * phi));
      }
  }

  auto complementary = [&](std::uint64_t a, std::uint64_t b) {
    const std::int64_t* ra = reduced.data() + a * shifts * phi;
    const std::int64_t* rb = reduced.data() + b * shifts * phi;
    for (std::size_t s = 0; s < shifts; ++s) {
      if (s == center) continue;
      for (std::size_t k = 0; k < phi; ++k)
        if (ra[s * phi + k] + rb[s * phi + k] != 0) return false;
    }
    return true;
  };

  // Contiguous outer ranges per worker keep the concatenated result sorted.
  const std::uint64_t workers = std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, count);
  std::vector<std::future<std::vector<std::pair<std::uint64_t, std::uint64_t>>>> jobs;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;
      for (std::uint64_t a = lo; a < hi; ++a)
        for (std::uint64_t b = 0; b < count; ++b)
          if (complementary(a, b)) hits.emplace_back(a, b);
      return hits;
    }));
  }

  std::vector<ArrayPair> out;
  for (auto& job : jobs)
    for (auto [a, b] : job.get()) out.push_back({array_at_index(q, l1, l2, a), array_at_index(q, l1, l2, b)});
  return out;
}

}  // namespace golay2d
