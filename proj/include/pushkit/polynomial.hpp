#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pushkit/variable_table.hpp"

namespace pushkit {

using Rational = mpq_class;

/// A power product of generators, stored sparsely as (variable, exponent)
/// pairs sorted by variable index. Zero exponents are never stored.
class Monomial {
public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::size_t var, std::uint32_t exponent = 1);
  /// Builds from arbitrary pairs; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor> &factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t exponent(std::size_t var) const noexcept;

  /// Weighted total degree, sum of exponent * deg(variable).
  unsigned degree(const VariableTable &table) const;

  /// The same monomial with `var`'s exponent replaced.
  Monomial with_exponent(std::size_t var, std::uint32_t exponent) const;

  friend Monomial operator*(const Monomial &a, const Monomial &b);

  // Storage order for canonical maps. Not the graded-lex order.
  auto operator<=>(const Monomial &) const = default;
  bool operator==(const Monomial &) const = default;

private:
  std::vector<Factor> factors_;
};

/// Graded lex comparison under `table`: weighted degree first, then
/// lexicographic on exponents with earlier-registered generators larger.
std::strong_ordering grlex_compare(const Monomial &a, const Monomial &b, const VariableTable &table);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: no zero coefficients are stored, so two polynomials over
/// the same table are equal iff their term maps are equal.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(TablePtr table);
  Polynomial(TablePtr table, Terms terms);

  static Polynomial constant(TablePtr table, const Rational &value);
  static Polynomial variable(TablePtr table, std::size_t var);
  static Polynomial variable(TablePtr table, std::string_view name);
  static Polynomial monomial(TablePtr table, Monomial m, const Rational &coeff = 1);

  const TablePtr &table() const noexcept { return table_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial &m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  /// Highest weighted degree of any term; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  /// Whether any term has a positive exponent of `var`.
  bool involves(std::size_t var) const;

  /// Graded-lex leading term. Precondition: nonzero.
  std::pair<Monomial, Rational> leading_term() const;
  /// Terms sorted in decreasing graded-lex order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Polynomial &other);
  Polynomial &operator*=(const Rational &scalar);
  /// Adds coeff * m in place.
  void add_term(const Monomial &m, const Rational &coeff);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Rational &s) { return a *= s; }
  friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a);

  /// Equal when the tables agree structurally and the term maps agree.
  bool operator==(const Polynomial &other) const;

private:
  void require_same_table(const Polynomial &other, const char *op) const;

  TablePtr table_;
  Terms terms_;
};

enum class ArithOp { add, sub, mul };

/// Dispatching form of +, -, *.
Polynomial poly_arith(const Polynomial &a, const Polynomial &b, ArithOp op);

/// Drops every term of degree > cutoff. A negative cutoff yields zero.
Polynomial truncate(const Polynomial &p, long cutoff);

/// Product with terms of degree > cutoff never formed.
Polynomial truncated_mul(const Polynomial &a, const Polynomial &b, long cutoff);

/// p^n, truncated at cutoff after every multiplication.
Polynomial truncated_pow(const Polynomial &p, unsigned n, std::optional<long> cutoff);

/// Homogeneous components of p in increasing degree; zero components omitted.
std::vector<std::pair<unsigned, Polynomial>> grade_decompose(const Polynomial &p);

/// A degree-preserving assignment of generators of `source` to polynomials
/// over `target`.
class Substitution {
public:
  Substitution(TablePtr source, TablePtr target);

  /// Throws TableMismatchError if the image is over the wrong table, and
  /// GradingError unless the image is zero or homogeneous of deg(var).
  Substitution &bind(std::size_t var, Polynomial image);
  Substitution &bind(std::string_view name, Polynomial image);

  const TablePtr &source() const noexcept { return source_; }
  const TablePtr &target() const noexcept { return target_; }
  const Polynomial *image(std::size_t var) const;

  /// Binds every generator of `source` that has the same name in `target` to
  /// itself. Both tables must agree on the degrees of shared names.
  static Substitution identity(TablePtr table);

private:
  TablePtr source_;
  TablePtr target_;
  std::map<std::size_t, Polynomial> images_;
};

/// Ring homomorphism image of p. Throws UnboundVariableError when p uses a
/// generator without an image.
Polynomial substitute(const Polynomial &p, const Substitution &sigma);

/// Exact quotient of p by a linear factor u_a - u_b, where u_a and u_b are
/// distinct degree-1 generators. Synthetic division in u_a; throws
/// NotDivisibleError on a nonzero remainder and DomainError if the factor does
/// not have that shape.
Polynomial divide_exact_linear(const Polynomial &p, const Polynomial &factor);

/// The power series inverse of p modulo terms of degree > cutoff. Throws
/// NotInvertibleError if the constant term is zero.
Polynomial series_inverse(const Polynomial &p, unsigned cutoff);

/// Canonical text: terms in decreasing graded-lex order, reduced fraction
/// coefficients, juxtaposition for products and `^` for powers, e.g.
/// `c1^2 - 2 c2 + 1/3`.
std::string to_string(const Polynomial &p);
std::string to_string(const Monomial &m, const VariableTable &table);

} // namespace pushkit
