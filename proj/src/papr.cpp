#include "golay2d/papr.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace golay2d {

namespace {

class Envelope {
 public:
  Envelope(std::span<const int> s, int q) : symbols_(static_cast<Eigen::Index>(s.size())) {
    const double step = 2.0 * std::numbers::pi / q;
    for (std::size_t k = 0; k < s.size(); ++k)
      symbols_(static_cast<Eigen::Index>(k)) = std::polar(1.0, step * static_cast<double>(s[k]));
  }

  // |S(t)|^2 by Horner's rule in z = exp(2 pi sqrt(-1) t).
  double power(double t) const {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * t);
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index k = symbols_.size(); k-- > 0;) acc = acc * z + symbols_(k);
    return std::norm(acc);
  }

  Eigen::Index length() const { return symbols_.size(); }

 private:
  Eigen::VectorXcd symbols_;
};

double refine(const Envelope& env, double lo, double hi) {
  while (hi - lo > 1e-10) {
    const double a = lo + (hi - lo) / 3.0;
    const double b = hi - (hi - lo) / 3.0;
    if (env.power(a) < env.power(b))
      lo = a;
    else
      hi = b;
  }
  return env.power(0.5 * (lo + hi));
}

int log2_exact(Eigen::Index len) {
  int k = 0;
  while ((Eigen::Index{1} << k) < len) ++k;
  return (Eigen::Index{1} << k) == len ? k : -1;
}

}  // namespace

RunPartition run_partition(std::span<const int> indices) {
  RunPartition out;
  out.source.assign(indices.begin(), indices.end());
  std::ranges::sort(out.source);
  out.source.erase(std::unique(out.source.begin(), out.source.end()), out.source.end());
  for (int v : out.source) {
    if (out.runs.empty() || out.runs.back().back() + 1 != v)
      out.runs.push_back({v});
    else
      out.runs.back().push_back(v);
  }
  return out;
}

double papr_sequence(std::span<const int> s, int q, int oversampling) {
  if (s.empty()) throw std::invalid_argument("PAPR of an empty sequence is undefined");
  if (oversampling < 4) throw std::invalid_argument("oversampling factor must be >= 4");
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (s.size() == 1) return 1.0;

  const Envelope env(s, q);
  const auto samples = static_cast<Eigen::Index>(oversampling) * env.length();
  const double dt = 1.0 / static_cast<double>(samples);
  Eigen::VectorXd power(samples);
  for (Eigen::Index j = 0; j < samples; ++j) power(j) = env.power(static_cast<double>(j) * dt);

  // Refine every sampled local maximum (circularly); there are at most L - 1 peaks.
  double best = power.maxCoeff();
  for (Eigen::Index j = 0; j < samples; ++j) {
    const double prev = power((j + samples - 1) % samples);
    const double next = power((j + 1) % samples);
    if (power(j) < prev || power(j) < next) continue;
    const double t = static_cast<double>(j) * dt;
    best = std::max(best, refine(env, t - dt, t + dt));
  }
  return best / static_cast<double>(env.length());
}

double PaprReport::max_row() const { return per_row.empty() ? 0.0 : *std::ranges::max_element(per_row); }
double PaprReport::max_col() const { return per_col.empty() ? 0.0 : *std::ranges::max_element(per_col); }

std::pair<RunPartition, RunPartition> papr_run_partitions(const GcapGeneralSpec& spec) {
  validate(spec);
  std::vector<int> w, w_prime;
  for (int l = 1; l <= spec.n + spec.m; ++l) {
    if (spec.pi[static_cast<std::size_t>(l - 1)] > spec.n)
      w.push_back(l);
    else
      w_prime.push_back(l);
  }
  return {run_partition(w), run_partition(w_prime)};
}

PaprReport papr_report(const QaryArray& c, const ConstructionSpec& spec, int oversampling) {
  PaprReport report;
  report.oversampling = oversampling;

  auto check_shape = [&c](int q, int n, int m) {
    if (q != c.q() || log2_exact(c.rows()) != n || log2_exact(c.cols()) != m)
      throw std::invalid_argument("spec (q=" + std::to_string(q) + ", " + std::to_string(1 << n) + "x" +
                                  std::to_string(1 << m) + ") does not match array (q=" + std::to_string(c.q()) +
                                  ", " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + ")");
  };
  if (const auto* basic = std::get_if<GcapBasicSpec>(&spec)) {
    validate(*basic);
    check_shape(basic->q, basic->n, basic->m);
    report.row_bound = 2.0;
    report.col_bound = 2.0;
  } else if (const auto* general = std::get_if<GcapGeneralSpec>(&spec)) {
    check_shape(general->q, general->n, general->m);
    auto [w, w_prime] = papr_run_partitions(*general);
    report.row_bound = std::ldexp(1.0, w.v());
    report.col_bound = std::ldexp(1.0, w_prime.v());
    report.row_runs = std::move(w);
    report.col_runs = std::move(w_prime);
  }

  for (Eigen::Index g = 0; g < c.rows(); ++g) report.per_row.push_back(papr_sequence(c.row(g), c.q(), oversampling));
  for (Eigen::Index i = 0; i < c.cols(); ++i) report.per_col.push_back(papr_sequence(c.col(i), c.q(), oversampling));
  return report;
}

}  // namespace golay2d
