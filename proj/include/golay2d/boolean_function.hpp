#pragma once

// Generalized Boolean functions f : {0,1}^(n+m) -> Z_q in algebraic normal form.
//
// Variables are z_1..z_{n+m}. The first n are row variables (z_l = y_l) and the
// remaining m are column variables (z_l = x_{l-n}).
//
// Bit order is little-endian throughout the library: a row index g has bits
// g_1..g_n with g = sum_h g_h 2^(h-1), and a column index i has bits i_1..i_m
// with i = sum_j i_j 2^(j-1). So y_1 is the least significant bit of g and x_1
// is the least significant bit of i. Every golden value depends on this.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace golay2d {

// Upper limit on n + m. Arrays have 2^(n+m) entries, so this is not a practical
// restriction; it lets a monomial be a 32-bit variable mask.
inline constexpr int kMaxVariables = 30;

enum class VariableKind { row, column };

struct VariableRole {
  VariableKind kind;
  int index;  // 1-based: y_index for rows, x_index for columns

  bool operator==(const VariableRole&) const = default;
};

// z_l -> y_l for l <= n, x_{l-n} otherwise. Throws std::out_of_range.
VariableRole z_role(int l, int n, int m);

// Inverse of z_role.
int z_index(VariableRole role, int n, int m);

struct Monomial {
  int coeff;
  std::vector<int> vars;  // sorted, 1-based z indices; empty never appears

  bool operator==(const Monomial&) const = default;
};

class GeneralizedBooleanFunction {
 public:
  // Throws std::invalid_argument for odd q, q < 2, negative n or m, n + m < 1
  // or n + m > kMaxVariables.
  GeneralizedBooleanFunction(int q, int n, int m);

  int q() const { return q_; }
  int n() const { return n_; }
  int m() const { return m_; }
  int num_vars() const { return n_ + m_; }
  int constant() const { return constant_; }

  // Adds coeff * prod_{l in vars} z_l. Duplicate indices collapse (z^2 = z), an
  // empty set adds to the constant, and coefficients merge mod q so the stored
  // form stays canonical. Throws std::out_of_range on a bad index.
  GeneralizedBooleanFunction& add_term(int coeff, std::span<const int> vars);
  GeneralizedBooleanFunction& add_term(int coeff, std::initializer_list<int> vars) {
    return add_term(coeff, std::span<const int>(vars.begin(), vars.size()));
  }
  GeneralizedBooleanFunction& add_constant(int c);

  // Canonical terms ordered by variable mask.
  std::vector<Monomial> terms() const;
  std::size_t num_terms() const { return terms_.size(); }
  int degree() const;

  // Coefficient of the monomial over vars, 0 if absent.
  int coefficient(std::span<const int> vars) const;
  int coefficient(std::initializer_list<int> vars) const {
    return coefficient(std::span<const int>(vars.begin(), vars.size()));
  }

  // Value at the point whose z bits are given by mask (bit l-1 is z_l).
  int eval_mask(std::uint32_t mask) const;

  // Canonical ANF equality; two functions are equal iff they agree everywhere.
  bool operator==(const GeneralizedBooleanFunction&) const = default;

  // Human readable, e.g. "2*z1 + z2 + 3*z3*z5 + 2*z4" in z variables or
  // "2*y1 + y2 + 3*x1*x3 + 2*x2" with row/column names.
  std::string to_string(bool xy_names = false) const;

 private:
  int q_;
  int n_;
  int m_;
  int constant_ = 0;
  std::map<std::uint32_t, int> terms_;  // variable mask -> nonzero coefficient
};

GeneralizedBooleanFunction operator+(GeneralizedBooleanFunction f, const GeneralizedBooleanFunction& g);

// Point (g, i) packed into a z mask: row bits first, then column bits.
inline std::uint32_t point_mask(std::uint32_t g, std::uint32_t i, int n) { return g | (i << n); }

// f evaluated at row index g and column index i, reduced mod q.
// Throws std::out_of_range unless 0 <= g < 2^n and 0 <= i < 2^m.
int eval(const GeneralizedBooleanFunction& f, std::int64_t g, std::int64_t i);

}  // namespace golay2d
