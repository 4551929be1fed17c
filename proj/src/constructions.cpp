#include "golay2d/constructions.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

namespace golay2d {

namespace {

std::vector<int> coefficients_or_zero(const std::vector<int>& p, int size, const char* name) {
  if (p.empty()) return std::vector<int>(static_cast<std::size_t>(size), 0);
  if (static_cast<int>(p.size()) != size)
    throw std::invalid_argument(std::string(name) + " must have " + std::to_string(size) + " entries, got " +
                                std::to_string(p.size()));
  return p;
}

void require_even_q(int q) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("q must be an even integer >= 2, got " + std::to_string(q));
}

// (q/2) * sum over consecutive path entries, in z indices.
void add_path(GeneralizedBooleanFunction& f, const std::vector<int>& path) {
  const int half = f.q() / 2;
  for (std::size_t l = 0; l + 1 < path.size(); ++l) f.add_term(half, {path[l], path[l + 1]});
}

void add_linear(GeneralizedBooleanFunction& f, const std::vector<int>& p, int p0) {
  for (std::size_t l = 0; l < p.size(); ++l) f.add_term(p[l], {static_cast<int>(l) + 1});
  f.add_constant(p0);
}

GeneralizedBooleanFunction offset(const GeneralizedBooleanFunction& f, std::initializer_list<int> vars) {
  GeneralizedBooleanFunction out = f;
  for (int l : vars) out.add_term(f.q() / 2, {l});
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflows 64 bits");
  return r;
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int j = 2; j <= k; ++j) r = checked_mul(r, static_cast<std::uint64_t>(j));
  return r;
}

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int j = 0; j < exp; ++j) r = checked_mul(r, base);
  return r;
}

void require_path_params(int q, int n, int m) {
  require_even_q(q);
  if (n < 0 || m < 0 || n + m < 2) throw std::invalid_argument("need n, m >= 0 with n + m >= 2");
}

std::string array_key(const QaryArray& a) {
  const auto& e = a.entries();
  std::string key(static_cast<std::size_t>(e.size()), '\0');
  for (Eigen::Index k = 0; k < e.size(); ++k) key[static_cast<std::size_t>(k)] = static_cast<char>(e.data()[k]);
  return key;
}

}  // namespace

void validate_permutation(const Permutation& pi, int size, const char* name) {
  if (static_cast<int>(pi.size()) != size)
    throw std::invalid_argument(std::string(name) + " must list " + std::to_string(size) + " entries, got " +
                                std::to_string(pi.size()));
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (int v : pi) {
    if (v < 1 || v > size)
      throw std::invalid_argument(std::string(name) + " entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(size));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument(std::string(name) + " repeats " + std::to_string(v) + "; not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void validate_partition(const Blocks& blocks, int size) {
  if (blocks.empty()) throw std::invalid_argument("partition needs at least one block");
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  int covered = 0;
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    if (blocks[a].empty()) throw std::invalid_argument("partition block " + std::to_string(a + 1) + " is empty");
    for (int v : blocks[a]) {
      if (v < 1 || v > size)
        throw std::invalid_argument("partition entry " + std::to_string(v) + " outside 1.." + std::to_string(size));
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("partition blocks overlap at " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  }
  if (covered != size)
    throw std::invalid_argument("partition covers " + std::to_string(covered) + " of " + std::to_string(size) +
                                " indices");
}

void validate(const GcapBasicSpec& spec) {
  require_even_q(spec.q);
  if (spec.n < 1 || spec.m < 1)
    throw std::invalid_argument("basic construction needs n >= 1 and m >= 1 (the x_{pi1(m)} y_{pi2(1)} link)");
  if (spec.n + spec.m > kMaxVariables) throw std::invalid_argument("n + m too large");
  validate_permutation(spec.pi1, spec.m, "pi1");
  validate_permutation(spec.pi2, spec.n, "pi2");
  coefficients_or_zero(spec.p, spec.m, "p");
  coefficients_or_zero(spec.lambda, spec.n, "lambda");
}

void validate(const GcapGeneralSpec& spec) {
  require_path_params(spec.q, spec.n, spec.m);
  if (spec.n + spec.m > kMaxVariables) throw std::invalid_argument("n + m too large");
  validate_permutation(spec.pi, spec.n + spec.m, "pi");
  coefficients_or_zero(spec.p, spec.n + spec.m, "p");
}

void validate(const GcasSpec& spec) {
  require_even_q(spec.q);
  if (spec.n < 0 || spec.m < 0 || spec.n + spec.m < 2) throw std::invalid_argument("need n, m >= 0 with n + m >= 2");
  if (spec.n + spec.m > kMaxVariables) throw std::invalid_argument("n + m too large");
  validate_partition(spec.blocks, spec.n + spec.m);
  coefficients_or_zero(spec.p, spec.n + spec.m, "p");
}

GeneralizedBooleanFunction gcap_basic_function(const GcapBasicSpec& spec) {
  validate(spec);
  const int n = spec.n;
  GeneralizedBooleanFunction f(spec.q, n, spec.m);
  auto x = [n](int l) { return n + l; };

  std::vector<int> col_path, row_path;
  for (int l : spec.pi1) col_path.push_back(x(l));
  for (int s : spec.pi2) row_path.push_back(s);
  add_path(f, col_path);
  add_path(f, row_path);
  f.add_term(spec.q / 2, {x(spec.pi1.back()), spec.pi2.front()});

  const auto p = coefficients_or_zero(spec.p, spec.m, "p");
  const auto lambda = coefficients_or_zero(spec.lambda, n, "lambda");
  for (int l = 1; l <= spec.m; ++l) f.add_term(p[static_cast<std::size_t>(l - 1)], {x(l)});
  for (int s = 1; s <= n; ++s) f.add_term(lambda[static_cast<std::size_t>(s - 1)], {s});
  f.add_constant(spec.p0);
  return f;
}

GeneralizedBooleanFunction gcap_general_function(const GcapGeneralSpec& spec) {
  validate(spec);
  GeneralizedBooleanFunction f(spec.q, spec.n, spec.m);
  add_path(f, spec.pi);
  add_linear(f, coefficients_or_zero(spec.p, spec.n + spec.m, "p"), spec.p0);
  return f;
}

GeneralizedBooleanFunction gcas_function(const GcasSpec& spec) {
  validate(spec);
  GeneralizedBooleanFunction f(spec.q, spec.n, spec.m);
  for (const auto& block : spec.blocks) add_path(f, block);
  add_linear(f, coefficients_or_zero(spec.p, spec.n + spec.m, "p"), spec.p0);
  return f;
}

ArrayPair gdj_pair(int q, int m, const Permutation& pi, const std::vector<int>& p, int p0) {
  if (m < 2) throw std::invalid_argument("Golay pair construction needs m >= 2, got " + std::to_string(m));
  return construct_gcap_general({q, 0, m, pi, p, p0});
}

std::vector<QaryArray> gcs_1d(int q, int m, const Blocks& blocks, const std::vector<int>& p, int p0) {
  if (m < 2) throw std::invalid_argument("complementary set construction needs m >= 2, got " + std::to_string(m));
  return construct_gcas({q, 0, m, blocks, p, p0});
}

ArrayPair construct_gcap_basic(const GcapBasicSpec& spec) {
  const auto f = gcap_basic_function(spec);
  return {array_from_function(f), array_from_function(offset(f, {spec.n + spec.pi1.front()}))};
}

ArrayPair construct_gcap_general(const GcapGeneralSpec& spec) {
  const auto f = gcap_general_function(spec);
  return {array_from_function(f), array_from_function(offset(f, {spec.pi.front()}))};
}

ArrayPair construct_mate(const GcapGeneralSpec& spec) {
  const auto f = gcap_general_function(spec);
  const int first = spec.pi.front();
  const int last = spec.pi.back();
  return {array_from_function(offset(f, {last})), array_from_function(offset(f, {first, last}))};
}

std::vector<QaryArray> construct_gcas(const GcasSpec& spec) {
  const auto f = gcas_function(spec);
  const std::size_t k = spec.blocks.size();
  if (k > 20) throw std::invalid_argument("too many blocks");
  std::vector<QaryArray> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t lambda = 0; lambda < (std::uint32_t{1} << k); ++lambda) {
    GeneralizedBooleanFunction g = f;
    for (std::size_t a = 0; a < k; ++a)
      if (lambda & (1u << a)) g.add_term(f.q() / 2, {spec.blocks[a].front()});
    out.push_back(array_from_function(g));
  }
  return out;
}

GcapGeneralSpec general_spec_from_basic(const GcapBasicSpec& spec) {
  validate(spec);
  GcapGeneralSpec out{spec.q, spec.n, spec.m, {}, {}, spec.p0};
  for (int l : spec.pi1) out.pi.push_back(spec.n + l);
  for (int s : spec.pi2) out.pi.push_back(s);
  const auto lambda = coefficients_or_zero(spec.lambda, spec.n, "lambda");
  const auto p = coefficients_or_zero(spec.p, spec.m, "p");
  out.p = lambda;
  out.p.insert(out.p.end(), p.begin(), p.end());
  return out;
}

std::uint64_t count_path_arrays(int q, int n, int m) {
  require_path_params(q, n, m);
  return checked_mul(factorial(n + m) / 2, power(static_cast<std::uint64_t>(q), n + m + 1));
}

std::uint64_t path_spec_count(int q, int n, int m) {
  require_path_params(q, n, m);
  return checked_mul(factorial(n + m), power(static_cast<std::uint64_t>(q), n + m + 1));
}

std::uint64_t enumerate_path_specs(int q, int n, int m, std::uint64_t budget,
                                 const std::function<bool(const GcapGeneralSpec&, const ArrayPair&)>& visit) {
  std::uint64_t total = 0;
  try {
    total = path_spec_count(q, n, m);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("spec count overflows 64 bits; budget is " + std::to_string(budget));
  }
  if (total > budget)
    throw BudgetExceeded(std::to_string(total) + " specs exceed the enumeration budget of " + std::to_string(budget));

  const int vars = n + m;
  GcapGeneralSpec spec{q, n, m, Permutation(static_cast<std::size_t>(vars)), std::vector<int>(static_cast<std::size_t>(vars), 0), 0};
  std::iota(spec.pi.begin(), spec.pi.end(), 1);
  std::uint64_t visited = 0;
  do {
    std::fill(spec.p.begin(), spec.p.end(), 0);
    while (true) {
      for (spec.p0 = 0; spec.p0 < q; ++spec.p0) {
        ++visited;
        if (!visit(spec, construct_gcap_general(spec))) return visited;
      }
      std::size_t l = 0;
      while (l < spec.p.size() && ++spec.p[l] == q) spec.p[l++] = 0;
      if (l == spec.p.size()) break;
    }
  } while (std::next_permutation(spec.pi.begin(), spec.pi.end()));
  return visited;
}

EnumerationCount count_distinct_path_arrays(int q, int n, int m, std::uint64_t budget) {
  // Check the budget before spawning workers.
  std::uint64_t total = 0;
  try {
    total = path_spec_count(q, n, m);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("spec count overflows 64 bits");
  }
  if (total > budget)
    throw BudgetExceeded(std::to_string(total) + " specs exceed the enumeration budget of " + std::to_string(budget));

  const int vars = n + m;
  std::vector<Permutation> perms;
  Permutation pi(static_cast<std::size_t>(vars));
  std::iota(pi.begin(), pi.end(), 1);
  do perms.push_back(pi);
  while (std::next_permutation(pi.begin(), pi.end()));

  // Workers own disjoint slices of the permutation space; key sets merge afterwards.
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, perms.size());
  std::vector<std::future<std::pair<std::uint64_t, std::unordered_set<std::string>>>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::unordered_set<std::string> keys;
      std::uint64_t raw = 0;
      GcapGeneralSpec spec{q, n, m, {}, std::vector<int>(static_cast<std::size_t>(vars), 0), 0};
      for (std::size_t k = w; k < perms.size(); k += workers) {
        spec.pi = perms[k];
        std::fill(spec.p.begin(), spec.p.end(), 0);
        while (true) {
          for (spec.p0 = 0; spec.p0 < q; ++spec.p0) {
            ++raw;
            keys.insert(array_key(array_from_function(gcap_general_function(spec))));
          }
          std::size_t l = 0;
          while (l < spec.p.size() && ++spec.p[l] == q) spec.p[l++] = 0;
          if (l == spec.p.size()) break;
        }
      }
      return std::pair{raw, std::move(keys)};
    }));
  }

  EnumerationCount out;
  std::unordered_set<std::string> all;
  for (auto& job : jobs) {
    auto [raw, keys] = job.get();
    out.raw_specs += raw;
    all.merge(keys);
  }
  out.distinct_first_arrays = all.size();
  return out;
}

}  // namespace golay2d
