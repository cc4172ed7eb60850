#include <doctest.h>

#include "pushkit/error.hpp"
#include "pushkit/polynomial.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace pushkit;
using pushkit::testing::Gen;
using pushkit::testing::poly;
using pushkit::testing::var;

namespace {

const BundleVariables &R3 = BundleVariables::of_rank(3);

std::vector<std::size_t> all_vars(const BundleVariables &vars) {
  std::vector<std::size_t> out(vars.table()->size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = i;
  return out;
}

} // namespace

TEST_CASE("variable table validates its entries") {
  CHECK_THROWS_AS(VariableTable::make({{"a", 1}, {"a", 2}}), DomainError);
  CHECK_THROWS_AS(VariableTable::make({{"a", 0}}), DomainError);
  auto t = VariableTable::make({{"a", 1}, {"b", 3}});
  CHECK(t->index("b") == 1);
  CHECK(t->degree(1) == 3);
  CHECK_THROWS_AS(t->index("z"), UnboundVariableError);
  CHECK_THROWS_AS(BundleVariables::of_rank(0), DomainError);
  CHECK(&BundleVariables::of_rank(3) == &R3);
}

TEST_CASE("poly_arith examples") {
  const auto u1 = var(3, "u1"), u2 = var(3, "u2");
  CHECK(poly_arith(u1 + u2, u1 - u2, ArithOp::add) == 2 * u1);

  const auto lhs = poly(3, "1 + y") * poly(3, "1 + q1 + q2");
  CHECK(lhs == poly(3, "1 + y + q1 + q2 + y q1 + y q2"));
  CHECK(lhs.size() == 6);

  const auto p = poly(3, "u1^2 - 3/4 c2 + 7");
  CHECK(poly_arith(p, Polynomial(R3.table()), ArithOp::mul).is_zero());
}

TEST_CASE("arithmetic rejects mismatched tables") {
  auto other = VariableTable::make({{"u1", 1}});
  const auto a = Polynomial::variable(other, 0);
  const auto b = var(3, "u1");
  CHECK_THROWS_AS(a + b, TableMismatchError);
  CHECK_THROWS_AS(a * b, TableMismatchError);
  CHECK_THROWS_AS(poly_arith(a, b, ArithOp::sub), TableMismatchError);
}

TEST_CASE("structurally equal tables are interchangeable") {
  auto t1 = VariableTable::make({{"a", 1}, {"b", 2}});
  auto t2 = VariableTable::make({{"a", 1}, {"b", 2}});
  CHECK(Polynomial::variable(t1, 0) + Polynomial::variable(t2, 1) ==
        Polynomial::variable(t2, 0) + Polynomial::variable(t1, 1));
}

TEST_CASE("canonical form strips zero coefficients") {
  const auto p = poly(3, "x + c1 - x");
  CHECK(p == var(3, "c1"));
  CHECK(p.size() == 1);
  CHECK((p - p).is_zero());
  CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("truncate examples") {
  CHECK(truncate(poly(3, "1 + u1 + u1^2"), 1) == poly(3, "1 + u1"));
  CHECK(truncate(poly(3, "5 + u1 + c2"), 0) == poly(3, "5"));
  CHECK(truncate(poly(3, "c2 + c1^2"), 1).is_zero());
  CHECK(truncate(poly(3, "c2 + c1^2"), -1).is_zero());
}

TEST_CASE("substitute examples") {
  Substitution at_p2(R3.table(), R3.table());
  at_p2.bind("y", var(3, "u2"));
  CHECK(substitute(poly(3, "y^2"), at_p2) == poly(3, "u2^2"));

  const auto p = poly(3, "3 y^2 q2 - 1/2 c1 c3 + u2");
  CHECK(substitute(p, Substitution::identity(R3.table())) == p);

  Substitution at_p1(R3.table(), R3.table());
  at_p1.bind("q1", poly(3, "u2 + u3"));
  CHECK(substitute(var(3, "q1"), at_p1) == poly(3, "u2 + u3"));
}

TEST_CASE("substitute errors") {
  Substitution sigma(R3.table(), R3.table());
  sigma.bind("y", var(3, "u1"));
  CHECK_THROWS_AS(substitute(poly(3, "y + x"), sigma), UnboundVariableError);
  CHECK_THROWS_AS(sigma.bind("y", poly(3, "u1^2")), GradingError);
  CHECK_THROWS_AS(sigma.bind("q2", poly(3, "u1 + u2^2")), GradingError);
  CHECK_NOTHROW(sigma.bind("q2", poly(3, "u1 u2")));

  auto other = VariableTable::make({{"t", 1}});
  CHECK_THROWS_AS(sigma.bind("x", Polynomial::variable(other, 0)), TableMismatchError);
}

TEST_CASE("divide_exact_linear examples") {
  CHECK(divide_exact_linear(poly(3, "(u2 - u1)(u3 - u1)"), poly(3, "u2 - u1")) == poly(3, "u3 - u1"));
  CHECK(divide_exact_linear(poly(3, "u1^2 - u2^2"), poly(3, "u1 - u2")) == poly(3, "u1 + u2"));
  CHECK_THROWS_AS(divide_exact_linear(poly(3, "u1 + u2"), poly(3, "u1 - u2")), NotDivisibleError);
}

TEST_CASE("divide_exact_linear handles either orientation and inert coefficients") {
  const auto f = poly(3, "u1 - u3");
  const auto g = poly(3, "u3 - u1");
  const auto p = poly(3, "(u1 - u3)(c2 u2 + x^3 - 2/7)");
  CHECK(divide_exact_linear(p, f) == poly(3, "c2 u2 + x^3 - 2/7"));
  CHECK(divide_exact_linear(p, g) == poly(3, "-(c2 u2 + x^3 - 2/7)"));
  CHECK(divide_exact_linear(Polynomial(R3.table()), f).is_zero());
}

TEST_CASE("divide_exact_linear rejects malformed divisors") {
  CHECK_THROWS_AS(divide_exact_linear(poly(3, "u1"), poly(3, "u1 + u2")), DomainError);
  CHECK_THROWS_AS(divide_exact_linear(poly(3, "u1"), poly(3, "u1 - c2")), DomainError);
  CHECK_THROWS_AS(divide_exact_linear(poly(3, "u1"), poly(3, "2 u1 - u2")), DomainError);
  CHECK_THROWS_AS(divide_exact_linear(poly(3, "u1"), poly(3, "u1^2 - u2")), DomainError);
  CHECK_THROWS_AS(divide_exact_linear(poly(3, "u1"), poly(3, "u1 - u2 + 1")), DomainError);
}

TEST_CASE("series_inverse examples") {
  CHECK(series_inverse(poly(3, "1 - x"), 3) == poly(3, "1 + x + x^2 + x^3"));
  CHECK(series_inverse(poly(3, "1"), 5) == poly(3, "1"));

  // Oracle: multiplying back by 1 + c1 + c2 + c3 and truncating at 3 gives 1.
  const auto total = poly(3, "1 + c1 + c2 + c3");
  const auto segre = poly(3, "1 - c1 + (c1^2 - c2) + (-c1^3 + 2 c1 c2 - c3)");
  REQUIRE(truncate(total * segre, 3) == poly(3, "1"));
  CHECK(series_inverse(total, 3) == segre);

  CHECK(series_inverse(poly(3, "2 + x"), 2) == poly(3, "1/2 - 1/4 x + 1/8 x^2"));
  CHECK_THROWS_AS(series_inverse(poly(3, "x + c1"), 4), NotInvertibleError);
  CHECK_THROWS_AS(series_inverse(Polynomial(R3.table()), 4), NotInvertibleError);
}

TEST_CASE("grade_decompose examples") {
  const auto parts = grade_decompose(poly(3, "1 + c1 + c1^2"));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second == poly(3, "1"));
  CHECK(parts[1].first == 1);
  CHECK(parts[1].second == poly(3, "c1"));
  CHECK(parts[2].first == 2);
  CHECK(parts[2].second == poly(3, "c1^2"));

  CHECK(grade_decompose(Polynomial(R3.table())).empty());

  const auto mixed = grade_decompose(poly(3, "c2 + c1^2"));
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].first == 2);
  CHECK(mixed[0].second == poly(3, "c2 + c1^2"));
}

TEST_CASE("graded lex order and canonical text") {
  const auto &t = *R3.table();
  const auto c1 = Monomial::variable(t.index("c1"));
  const auto c2 = Monomial::variable(t.index("c2"));
  CHECK(grlex_compare(c1 * c1, c2, t) > 0);
  CHECK(grlex_compare(c2, c1, t) > 0);
  CHECK(grlex_compare(Monomial::variable(t.index("u1")), Monomial::variable(t.index("u2")), t) > 0);

  CHECK(to_string(poly(3, "1 - c2 + c1^2")) == "c1^2 - c2 + 1");
  CHECK(to_string(poly(3, "-2/6 u1 u2^3 + x")) == "-1/3 u1 u2^3 + x");
  CHECK(to_string(Polynomial(R3.table())) == "0");
  CHECK(to_string(poly(3, "-1")) == "-1");
  CHECK(poly(3, "u2 + 3 u1^2").leading_term().second == 3);
}

TEST_CASE("ring axioms on random inputs") {
  Gen gen(11);
  const auto vars = all_vars(R3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen.polynomial(R3.table(), vars, 4, 5);
    const auto b = gen.polynomial(R3.table(), vars, 4, 5);
    const auto c = gen.polynomial(R3.table(), vars, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(R3.table()));
  }
}

TEST_CASE("truncation properties") {
  Gen gen(12);
  const auto vars = all_vars(R3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen.polynomial(R3.table(), vars, 6, 6);
    const auto b = gen.polynomial(R3.table(), vars, 6, 6);
    const long d = gen.uniform(0, 6);
    CHECK(truncate(truncate(a, d), d) == truncate(a, d));
    CHECK(truncate(a + b, d) == truncate(a, d) + truncate(b, d));
    CHECK(truncate(a * b, d) == truncate(truncate(a, d) * truncate(b, d), d));
    CHECK(truncated_mul(a, b, d) == truncate(a * b, d));
    CHECK(truncated_pow(a, 3, d) == truncate(a * a * a, d));
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  Gen gen(13);
  const auto vars = all_vars(R3);
  const auto roots = R3.roots();
  for (int trial = 0; trial < 40; ++trial) {
    Substitution sigma(R3.table(), R3.table());
    for (auto v : vars) {
      // random homogeneous image of the right degree in the roots
      Polynomial image(R3.table());
      while (image.is_zero())
        for (const auto &[d, part] : grade_decompose(gen.polynomial(R3.table(), roots, R3.table()->degree(v), 6)))
          if (d == R3.table()->degree(v))
            image = part;
      sigma.bind(v, image);
    }
    const auto a = gen.polynomial(R3.table(), vars, 3, 4);
    const auto b = gen.polynomial(R3.table(), vars, 3, 4);
    CHECK(substitute(a * b, sigma) == substitute(a, sigma) * substitute(b, sigma));
    CHECK(substitute(a + b, sigma) == substitute(a, sigma) + substitute(b, sigma));
  }
}

TEST_CASE("exact linear division inverts multiplication") {
  Gen gen(14);
  const auto vars = all_vars(R3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = gen.polynomial(R3.table(), vars, 5, 6);
    const unsigned a = gen.uniform(1, 3);
    unsigned b = a;
    while (b == a)
      b = gen.uniform(1, 3);
    const auto f = Polynomial::variable(R3.table(), R3.u(a)) - Polynomial::variable(R3.table(), R3.u(b));
    CHECK(divide_exact_linear(p * f, f) == p);
  }
}

TEST_CASE("series_inverse multiplies back to one") {
  Gen gen(15);
  const auto vars = all_vars(R3);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = gen.polynomial(R3.table(), vars, 4, 5);
    p.add_term(Monomial{}, gen.rational());
    if (p.constant_term() == 0)
      continue;
    const unsigned d = gen.uniform(0, 6);
    CHECK(truncate(p * series_inverse(p, d), d) == Polynomial::constant(R3.table(), 1));
  }
}
