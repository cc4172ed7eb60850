#pragma once

#include <string_view>

#include "pushkit/expr.hpp"
#include "pushkit/polynomial.hpp"
#include "pushkit/variable_table.hpp"

namespace pushkit::testing {

/// Exact polynomial from source text over the rank-r table, untruncated.
inline Polynomial poly(unsigned r, std::string_view text) {
  return evaluate(parse_expression(text, r), r, std::nullopt);
}

inline Polynomial var(unsigned r, std::string_view name) {
  return Polynomial::variable(BundleVariables::of_rank(r).table(), name);
}

inline Polynomial constant(unsigned r, const Rational &value) {
  return Polynomial::constant(BundleVariables::of_rank(r).table(), value);
}

} // namespace pushkit::testing
