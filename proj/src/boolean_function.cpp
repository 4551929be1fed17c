#include "golay2d/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace golay2d {

namespace {

int mod(long long v, int q) {
  const long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

std::vector<int> mask_to_vars(std::uint32_t mask) {
  std::vector<int> vars;
  for (int l = 1; mask != 0; ++l, mask >>= 1)
    if (mask & 1u) vars.push_back(l);
  return vars;
}

}  // namespace

VariableRole z_role(int l, int n, int m) {
  if (n < 0 || m < 0 || l < 1 || l > n + m)
    throw std::out_of_range("variable index z_" + std::to_string(l) + " outside 1.." + std::to_string(n + m));
  if (l <= n) return {VariableKind::row, l};
  return {VariableKind::column, l - n};
}

int z_index(VariableRole role, int n, int m) {
  if (role.kind == VariableKind::row) {
    if (role.index < 1 || role.index > n) throw std::out_of_range("row variable y_" + std::to_string(role.index));
    return role.index;
  }
  if (role.index < 1 || role.index > m) throw std::out_of_range("column variable x_" + std::to_string(role.index));
  return n + role.index;
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int q, int n, int m) : q_(q), n_(n), m_(m) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("q must be an even integer >= 2, got " + std::to_string(q));
  if (n < 0 || m < 0) throw std::invalid_argument("variable counts n and m must be nonnegative");
  if (n + m < 1) throw std::invalid_argument("need at least one variable (n + m >= 1)");
  if (n + m > kMaxVariables) throw std::invalid_argument("n + m exceeds " + std::to_string(kMaxVariables));
}

GeneralizedBooleanFunction& GeneralizedBooleanFunction::add_term(int coeff, std::span<const int> vars) {
  std::uint32_t mask = 0;
  for (int l : vars) {
    if (l < 1 || l > num_vars())
      throw std::out_of_range("variable index z_" + std::to_string(l) + " outside 1.." + std::to_string(num_vars()));
    mask |= 1u << (l - 1);
  }
  if (mask == 0) return add_constant(coeff);

  const int c = mod(coeff, q_);
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second = mod(it->second + c, q_);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GeneralizedBooleanFunction& GeneralizedBooleanFunction::add_constant(int c) {
  constant_ = mod(static_cast<long long>(constant_) + c, q_);
  return *this;
}

std::vector<Monomial> GeneralizedBooleanFunction::terms() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [mask, coeff] : terms_) out.push_back({coeff, mask_to_vars(mask)});
  return out;
}

int GeneralizedBooleanFunction::degree() const {
  int d = 0;
  for (const auto& [mask, coeff] : terms_) d = std::max(d, std::popcount(mask));
  return d;
}

int GeneralizedBooleanFunction::coefficient(std::span<const int> vars) const {
  std::uint32_t mask = 0;
  for (int l : vars) {
    if (l < 1 || l > num_vars()) throw std::out_of_range("variable index out of range");
    mask |= 1u << (l - 1);
  }
  if (mask == 0) return constant_;
  auto it = terms_.find(mask);
  return it == terms_.end() ? 0 : it->second;
}

int GeneralizedBooleanFunction::eval_mask(std::uint32_t mask) const {
  long long v = constant_;
  for (const auto& [vars, coeff] : terms_)
    if ((mask & vars) == vars) v += coeff;
  return mod(v, q_);
}

std::string GeneralizedBooleanFunction::to_string(bool xy_names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << coeff << '*';
    bool first_var = true;
    for (int l : mask_to_vars(mask)) {
      if (!first_var) os << '*';
      first_var = false;
      if (xy_names) {
        const auto role = z_role(l, n_, m_);
        os << (role.kind == VariableKind::row ? 'y' : 'x') << role.index;
      } else {
        os << 'z' << l;
      }
    }
  }
  if (constant_ != 0 || first) {
    if (!first) os << " + ";
    os << constant_;
  }
  return os.str();
}

GeneralizedBooleanFunction operator+(GeneralizedBooleanFunction f, const GeneralizedBooleanFunction& g) {
  if (f.q() != g.q() || f.n() != g.n() || f.m() != g.m())
    throw std::invalid_argument("cannot add Boolean functions over different (q, n, m)");
  for (const auto& t : g.terms()) f.add_term(t.coeff, t.vars);
  f.add_constant(g.constant());
  return f;
}

int eval(const GeneralizedBooleanFunction& f, std::int64_t g, std::int64_t i) {
  if (g < 0 || g >= (std::int64_t{1} << f.n())) throw std::out_of_range("row index " + std::to_string(g));
  if (i < 0 || i >= (std::int64_t{1} << f.m())) throw std::out_of_range("column index " + std::to_string(i));
  return f.eval_mask(point_mask(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(i), f.n()));
}

}  // namespace golay2d
