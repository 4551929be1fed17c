#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golay2d/boolean_function.hpp"
#include "golay2d/qary_array.hpp"
#include "golden_tables.hpp"
#include "support.hpp"

using namespace golay2d;
using testing_support::Gen;

TEST_CASE("z variables map rows first, then columns") {
  CHECK(z_role(1, 2, 3) == VariableRole{VariableKind::row, 1});
  CHECK(z_role(2, 2, 3) == VariableRole{VariableKind::row, 2});
  CHECK(z_role(3, 2, 3) == VariableRole{VariableKind::column, 1});
  CHECK(z_role(5, 2, 3) == VariableRole{VariableKind::column, 3});
  CHECK_THROWS_AS(z_role(0, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(z_role(6, 2, 3), std::out_of_range);
  for (int l = 1; l <= 5; ++l) CHECK(z_index(z_role(l, 2, 3), 2, 3) == l);
}

TEST_CASE("constructor rejects bad parameters") {
  CHECK_THROWS_AS(GeneralizedBooleanFunction(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedBooleanFunction(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedBooleanFunction(2, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedBooleanFunction(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedBooleanFunction(2, 20, 11), std::invalid_argument);
  CHECK_NOTHROW(GeneralizedBooleanFunction(2, 0, 1));
}

TEST_CASE("terms merge canonically mod q") {
  GeneralizedBooleanFunction f(4, 1, 2);
  f.add_term(3, {1, 2}).add_term(1, {2, 1});
  CHECK(f.num_terms() == 0);
  f.add_term(2, {3, 3});
  CHECK(f.coefficient({3}) == 2);
  f.add_term(-1, {});
  CHECK(f.constant() == 3);
  CHECK_THROWS_AS(f.add_term(1, {4}), std::out_of_range);
  CHECK(f.degree() == 1);
}

TEST_CASE("worked ANF example evaluates to its printed array") {
  GeneralizedBooleanFunction f(4, 2, 3);
  f.add_term(2, {1}).add_term(1, {2}).add_term(3, {3, 5}).add_term(2, {4});
  CHECK(array_from_function(f) == testing_support::golden_array(4, golden::anf_q4_f));
  CHECK(f.to_string(true) == "2*y1 + y2 + 2*x2 + 3*x1*x3");
  CHECK(f.to_string() == "2*z1 + z2 + 2*z4 + 3*z3*z5");
}

TEST_CASE("eval agrees with a bitwise oracle") {
  Gen gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = gen.even_q();
    auto [n, m] = gen.dims(6, 0);
    GeneralizedBooleanFunction f(q, n, m);
    std::vector<std::pair<int, std::vector<int>>> recorded;
    for (int t = 0; t < 5; ++t) {
      std::vector<int> vars;
      for (int l = 1; l <= n + m; ++l)
        if (gen.uniform(0, 2) == 0) vars.push_back(l);
      const int c = gen.uniform(-q, 2 * q);
      f.add_term(c, vars);
      recorded.emplace_back(c, vars);
    }
    const auto a = array_from_function(f);
    for (int g = 0; g < (1 << n); ++g)
      for (int i = 0; i < (1 << m); ++i) {
        long long v = 0;
        for (const auto& [c, vars] : recorded) {
          int prod = 1;
          for (int l : vars) prod *= testing_support::zbit(l, n, g, i);
          v += static_cast<long long>(c) * prod;
        }
        REQUIRE(a(g, i) == testing_support::mod(v, q));
        REQUIRE(eval(f, g, i) == a(g, i));
      }
  }
}

TEST_CASE("Moebius inverse round-trips") {
  Gen gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = gen.even_q();
    auto [n, m] = gen.dims(6, 0);
    const auto a = gen.array(q, 1 << n, 1 << m);
    const auto f = function_from_array(a);
    CHECK(array_from_function(f) == a);
    CHECK(function_from_array(array_from_function(f)) == f);
  }
  CHECK_THROWS_AS(function_from_array(QaryArray(2, 3, 4)), std::invalid_argument);
}

TEST_CASE("function sum maps to array sum") {
  Gen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int q = gen.even_q();
    const auto a = gen.array(q, 4, 8), b = gen.array(q, 4, 8);
    CHECK(array_from_function(function_from_array(a) + function_from_array(b)) == a + b);
  }
}

TEST_CASE("array basics") {
  const auto a = QaryArray::from_rows(4, {{0, 5, -1}, {2, 3, 4}});
  CHECK(a(0, 1) == 1);
  CHECK(a(0, 2) == 3);
  CHECK(a(1, 2) == 0);
  CHECK(a.row(1) == std::vector<int>{2, 3, 0});
  CHECK(a.col(0) == std::vector<int>{0, 2});
  CHECK(a.transposed().transposed() == a);
  CHECK(a.plus_constant(2)(0, 0) == 2);
  CHECK_THROWS_AS(QaryArray::from_rows(2, {{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(QaryArray(1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(a + QaryArray(4, 2, 2), std::invalid_argument);
  CHECK(QaryArray::sequence(2, {1, 0, 1}).rows() == 1);
}

TEST_CASE("complex form uses xi = exp(2 pi i / q)") {
  const auto z = QaryArray::sequence(4, {0, 1, 2, 3}).complex_form<double>();
  CHECK(std::abs(z(0, 1) - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(z(0, 2) + 1.0) < 1e-12);
  const auto zf = QaryArray::sequence(4, {3}).complex_form<float>();
  CHECK(std::abs(zf(0, 0) - std::complex<float>(0, -1)) < 1e-6f);
}
