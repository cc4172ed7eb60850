#include "pushkit/gysin.hpp"

#include <algorithm>

#include "pushkit/error.hpp"
#include "pushkit/symfun.hpp"

namespace pushkit {

namespace {

const BundleVariables &layout_for(const Polynomial &payload, unsigned r, const char *who) {
  const auto &vars = BundleVariables::of_rank(r);
  if (!same_table(payload.table(), vars.table()))
    throw ArityError(std::string(who) + ": class was not built for rank " + std::to_string(r));
  return vars;
}

/// Compares two polynomials one degree at a time; returns the first degree
/// where they differ.
std::optional<unsigned> first_difference(const Polynomial &a, const Polynomial &b) {
  const auto diff = grade_decompose(a - b);
  if (diff.empty())
    return std::nullopt;
  return diff.front().first;
}

Polynomial power_of(const BundleVariables &vars, std::size_t var, unsigned k) {
  return Polynomial::monomial(vars.table(), Monomial::variable(var, k));
}

} // namespace

bool PushforwardResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

PushforwardResult pushforward(const ClassExpr &expr, unsigned r, const PushforwardOptions &options) {
  const auto &vars = layout_for(expr.payload, r, "pushforward");
  const auto &table = vars.table();
  for (auto u : vars.roots())
    if (expr.payload.involves(u))
      throw UnsupportedVariableError("pushforward: " + table->name(u) + " is not a class on P(V)");
  if (expr.payload.involves(vars.x()) && expr.payload.involves(vars.y()))
    throw DomainError("pushforward: class mixes x and y; normalize to one of them first");

  Substitution normalize = Substitution::identity(table);
  normalize.bind(vars.x(), -Polynomial::variable(table, vars.y()));
  const Polynomial fiber_class = substitute(expr.payload, normalize);

  auto localized = localize(fiber_class, r, expr.cutoff, options.threads);
  PushforwardResult result{Polynomial(table), std::move(localized.value), *localized.valid_through, {}};
  result.checks.push_back({"weyl_invariance", true, {}});
  result.chern_form = reduce_to_elementary(result.u_form, vars);

  if (options.verify) {
    const bool expands = expand_elementary(result.chern_form, vars) == result.u_form;
    result.checks.push_back({"chern_expansion", expands,
                             expands ? "" : "Chern form does not expand back to the localized sum"});

    const ClassExpr hyperplane{to_hyperplane_form(expr.payload, r), expr.cutoff};
    const auto expected = truncate(presentation_oracle(hyperplane, r), result.valid_through);
    const auto at = first_difference(result.chern_form, expected);
    result.checks.push_back({"presentation_oracle", !at,
                             at ? "disagrees with the presentation oracle in degree " + std::to_string(*at) : ""});
  }
  return result;
}

Polynomial segre_oracle(unsigned r, unsigned cutoff) {
  const auto &vars = BundleVariables::of_rank(r);
  Polynomial total = Polynomial::constant(vars.table(), 1);
  for (auto c : vars.chern())
    total += Polynomial::variable(vars.table(), c);
  return series_inverse(total, cutoff);
}

Polynomial to_hyperplane_form(const Polynomial &payload, unsigned r) {
  const auto &vars = layout_for(payload, r, "to_hyperplane_form");
  const auto &table = vars.table();
  const auto x = Polynomial::variable(table, vars.x());

  Substitution sigma = Substitution::identity(table);
  sigma.bind(vars.y(), -x);
  for (unsigned i = 1; i < r; ++i) {
    Polynomial image = power_of(vars, vars.x(), i);
    for (unsigned k = 0; k < i; ++k)
      image += Polynomial::variable(table, vars.c(i - k)) * power_of(vars, vars.x(), k);
    sigma.bind(vars.q(i), std::move(image));
  }
  return substitute(payload, sigma);
}

Polynomial presentation_oracle(const ClassExpr &expr, unsigned r) {
  const auto &vars = layout_for(expr.payload, r, "presentation_oracle");
  const auto &table = vars.table();
  for (const auto &[m, c] : expr.payload.terms())
    for (const auto &[var, exp] : m.factors())
      if (var != vars.x() && !vars.is_chern(var))
        throw UnsupportedVariableError("presentation_oracle: " + table->name(var) +
                                       " is not allowed; use only x and c1..c" + std::to_string(r));

  // coefficients[k] = coefficient of x^k, a polynomial in the c_i
  std::vector<Polynomial> coefficients;
  for (const auto &[m, c] : expr.payload.terms()) {
    const auto k = m.exponent(vars.x());
    if (coefficients.size() <= k)
      coefficients.resize(k + 1, Polynomial(table));
    coefficients[k].add_term(m.with_exponent(vars.x(), 0), c);
  }
  // x^k = x^{k-r} x^r -> -sum_i c_i x^{k-i}
  for (std::size_t k = coefficients.size(); k-- > r;) {
    if (coefficients[k].is_zero())
      continue;
    for (unsigned i = 1; i <= r; ++i)
      coefficients[k - i] -= Polynomial::variable(table, vars.c(i)) * coefficients[k];
    coefficients[k] = Polynomial(table);
  }
  if (coefficients.size() < r)
    return Polynomial(table);
  return coefficients[r - 1];
}

VerificationReport verify_classical(unsigned r, long cutoff) {
  if (r < 1)
    throw DomainError("verify: rank must be at least 1");
  if (cutoff < static_cast<long>(r) - 1)
    throw DomainError("verify: cutoff must be at least rank - 1 = " + std::to_string(r - 1));

  const auto &vars = BundleVariables::of_rank(r);
  const auto &table = vars.table();
  const auto one = Polynomial::constant(table, 1);
  const auto x = Polynomial::variable(table, vars.x());
  const auto y = Polynomial::variable(table, vars.y());
  const PushforwardOptions quiet{.verify = false};
  VerificationReport report{r, cutoff, {}};

  {
    const ClassExpr geometric{series_inverse(one - x, static_cast<unsigned>(cutoff)), cutoff};
    const auto pushed = pushforward(geometric, r, quiet);
    const auto segre = segre_oracle(r, static_cast<unsigned>(pushed.valid_through));
    const auto at = first_difference(pushed.chern_form, segre);
    report.checks.push_back({"segre_identity", !at,
                             at ? "f_*(1/(1-x)) differs from 1/c(V) in degree " + std::to_string(*at) : ""});
  }

  {
    std::string detail;
    for (long k = 0; k <= cutoff && detail.empty(); ++k) {
      const ClassExpr monomial{power_of(vars, vars.x(), static_cast<unsigned>(k)), cutoff};
      const auto pushed = pushforward(monomial, r, quiet);
      const auto expected = truncate(presentation_oracle(monomial, r), pushed.valid_through);
      if (const auto at = first_difference(pushed.chern_form, expected))
        detail = "f_*(x^" + std::to_string(k) + ") differs from the presentation oracle in degree " +
                 std::to_string(*at);
    }
    report.checks.push_back({"presentation_agreement", detail.empty(), detail});
  }

  {
    const bool holds = relation_check(r);
    report.checks.push_back({"whitney_relation", holds, holds ? "" : "restricted relation fails at a fixed point"});
  }

  {
    const ClassExpr inverse{series_inverse(one + y, static_cast<unsigned>(cutoff)), cutoff};
    const auto pushed = pushforward(inverse, r, quiet);
    Polynomial product = one;
    for (auto u : vars.roots())
      product = truncated_mul(product, series_inverse(one + Polynomial::variable(table, u),
                                                      static_cast<unsigned>(std::max(0L, pushed.valid_through))),
                              pushed.valid_through);
    const auto at = first_difference(pushed.u_form, truncate(product, pushed.valid_through));
    report.checks.push_back({"localized_inverse", !at,
                             at ? "pi_T*(1/(1+y)) differs from prod 1/(1+u_j) in degree " + std::to_string(*at) : ""});
  }
  return report;
}

} // namespace pushkit
