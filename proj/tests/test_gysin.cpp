#include <doctest.h>

#include "pushkit/error.hpp"
#include "pushkit/gysin.hpp"
#include "pushkit/symfun.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace pushkit;
using pushkit::testing::Gen;
using pushkit::testing::poly;

namespace {

ClassExpr cls(unsigned r, const std::string &text, long cutoff) { return {truncate(poly(r, text), cutoff), cutoff}; }

/// Random p(x) with coefficients polynomial in the c_i, degree <= max_degree.
Polynomial random_x_class(Gen &gen, unsigned r, unsigned max_degree) {
  const auto &vars = BundleVariables::of_rank(r);
  auto gens = vars.chern();
  gens.push_back(vars.x());
  gens.push_back(vars.x());
  return gen.polynomial(vars.table(), gens, max_degree, 6);
}

} // namespace

TEST_CASE("pushforward examples") {
  const ClassExpr geometric{series_inverse(poly(3, "1 - x"), 6), 6};
  const auto result = pushforward(geometric, 3);
  CHECK(result.valid_through == 4);
  CHECK(result.all_passed());
  CHECK(result.chern_form ==
        poly(3, "1 - c1 + (c1^2 - c2) + (-c1^3 + 2 c1 c2 - c3) + (c1^4 - 3 c1^2 c2 + 2 c1 c3 + c2^2)"));
  CHECK(expand_elementary(result.chern_form, BundleVariables::of_rank(3)) == result.u_form);

  CHECK(pushforward(cls(3, "x^2", 6), 3).chern_form == poly(3, "1"));
  CHECK(pushforward(cls(3, "x", 6), 3).chern_form.is_zero());
}

TEST_CASE("pushforward checks are recorded") {
  const auto verified = pushforward(cls(3, "x^4 + c1 x^3", 6), 3);
  REQUIRE(verified.checks.size() == 3);
  CHECK(verified.checks[0].name == "weyl_invariance");
  CHECK(verified.checks[1].name == "chern_expansion");
  CHECK(verified.checks[2].name == "presentation_oracle");
  CHECK(verified.all_passed());

  const auto fast = pushforward(cls(3, "x^4", 6), 3, {.verify = false});
  CHECK(fast.checks.size() == 1);
}

TEST_CASE("pushforward errors") {
  CHECK_THROWS_AS(pushforward(cls(4, "x^3", 6), 3), ArityError);
  CHECK_THROWS_AS(pushforward(cls(3, "u1 x^2", 6), 3), UnsupportedVariableError);
  CHECK_THROWS_AS(pushforward(cls(3, "x y", 6), 3), DomainError);
}

TEST_CASE("pushforward at rank one is the identity on the base") {
  CHECK(pushforward(cls(1, "c1^2 + 3", 4), 1).chern_form == poly(1, "c1^2 + 3"));
  CHECK(pushforward(cls(1, "x", 4), 1).chern_form == poly(1, "-c1"));
  CHECK(pushforward(cls(1, "y", 4), 1).chern_form == poly(1, "c1"));
}

TEST_CASE("pushforward handles quotient classes") {
  // f_*(q1 x) at rank 3: q1 = x + c1, so f_*(x^2 + c1 x) = 1.
  const auto result = pushforward(cls(3, "q1 x", 6), 3);
  CHECK(result.chern_form == poly(3, "1"));
  CHECK(result.all_passed());
}

TEST_CASE("segre_oracle") {
  // one step of inversion: 1/(1 + c1 + ...) = 1 - c1 + O(2)
  CHECK(segre_oracle(3, 1) == poly(3, "1 - c1"));
  for (unsigned r = 1; r <= 5; ++r)
    CHECK(segre_oracle(r, 0) == poly(r, "1"));
  const auto s3 = segre_oracle(3, 3);
  CHECK(s3 == poly(3, "1 - c1 + (c1^2 - c2) + (-c1^3 + 2 c1 c2 - c3)"));
  CHECK(truncate(s3 * poly(3, "1 + c1 + c2 + c3"), 3) == poly(3, "1"));
}

TEST_CASE("presentation_oracle") {
  for (unsigned r = 1; r <= 5; ++r)
    CHECK(presentation_oracle(cls(r, "x^" + std::to_string(r - 1), 8), r) == poly(r, "1"));
  CHECK(presentation_oracle(cls(3, "c2 x", 6), 3).is_zero());
  // x^3 = -c1 x^2 - c2 x - c3
  CHECK(presentation_oracle(cls(3, "x^3", 6), 3) == poly(3, "-c1"));
  CHECK_THROWS_AS(presentation_oracle(cls(3, "y^2", 6), 3), UnsupportedVariableError);
  CHECK_THROWS_AS(presentation_oracle(cls(3, "q1 x", 6), 3), UnsupportedVariableError);
}

TEST_CASE("to_hyperplane_form uses the Whitney relation") {
  CHECK(to_hyperplane_form(poly(3, "q1"), 3) == poly(3, "x + c1"));
  CHECK(to_hyperplane_form(poly(3, "q2"), 3) == poly(3, "x^2 + c1 x + c2"));
  CHECK(to_hyperplane_form(poly(3, "y^2"), 3) == poly(3, "x^2"));
}

TEST_CASE("verify_classical") {
  for (auto [r, d] : {std::pair{3u, 6L}, {1u, 4L}, {5u, 8L}, {2u, 1L}}) {
    const auto report = verify_classical(r, d);
    CHECK(report.checks.size() == 4);
    for (const auto &check : report.checks) {
      INFO(r, " ", check.name, " ", check.detail);
      CHECK(check.passed);
    }
  }
  CHECK_THROWS_AS(verify_classical(3, 1), DomainError);
  CHECK_THROWS_AS(verify_classical(0, 4), DomainError);
}

TEST_CASE("oracle triangle on random classes") {
  Gen gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned r = gen.uniform(1, 4);
    const ClassExpr expr{random_x_class(gen, r, 7), 7};
    const auto pushed = pushforward(expr, r);
    CHECK(pushed.chern_form == truncate(presentation_oracle(expr, r), pushed.valid_through));
  }
}

TEST_CASE("pushforward is linear") {
  Gen gen(42);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned r = gen.uniform(1, 4);
    const auto a = random_x_class(gen, r, 6), b = random_x_class(gen, r, 6);
    const auto alpha = gen.rational(), beta = gen.rational();
    const auto lhs = pushforward({alpha * a + beta * b, 6}, r).chern_form;
    const auto rhs = alpha * pushforward({a, 6}, r).chern_form + beta * pushforward({b, 6}, r).chern_form;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("projection formula") {
  Gen gen(43);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned r = gen.uniform(1, 4);
    const auto &vars = BundleVariables::of_rank(r);
    const auto g = gen.polynomial(vars.table(), vars.chern(), 3, 3);
    const auto p = random_x_class(gen, r, 4);
    // no truncation loss: total degree stays below the cutoff
    const auto lhs = pushforward({g * p, 8}, r).chern_form;
    const auto rhs = g * pushforward({p, 8}, r).chern_form;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degree shift of the Chern form") {
  Gen gen(44);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned r = gen.uniform(1, 5);
    for (const auto &[d, part] : grade_decompose(random_x_class(gen, r, 8))) {
      const auto result = pushforward({part, 8}, r).chern_form;
      for (const auto &[m, c] : result.terms())
        CHECK(static_cast<long>(m.degree(*result.table())) == static_cast<long>(d) - static_cast<long>(r - 1));
    }
  }
}

TEST_CASE("Whitney consistency") {
  for (unsigned r = 1; r <= 5; ++r) {
    const auto &vars = BundleVariables::of_rank(r);
    Polynomial quotient = poly(r, "1"), total = poly(r, "1");
    for (unsigned i = 1; i < r; ++i)
      quotient += Polynomial::variable(vars.table(), vars.q(i));
    for (unsigned i = 1; i <= r; ++i)
      total += Polynomial::variable(vars.table(), vars.c(i));
    const auto lhs = (poly(r, "1 + y") * quotient) * poly(r, "y^" + std::to_string(r + 1));
    const auto rhs = total * poly(r, "y^" + std::to_string(r + 1));
    CHECK(pushforward({lhs, 3 * static_cast<long>(r) + 2}, r).chern_form ==
          pushforward({rhs, 3 * static_cast<long>(r) + 2}, r).chern_form);
  }
}
