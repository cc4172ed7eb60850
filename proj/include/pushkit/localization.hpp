#pragma once

#include <optional>
#include <vector>

#include "pushkit/polynomial.hpp"

namespace pushkit {

class BundleVariables;

/// Data at the j-th torus-fixed point p_j = [e_j] of CP^{r-1}.
///
/// The restriction i*_{p_j} sends y -> u_j, x -> -u_j, q_i -> e_i of the
/// roots other than u_j, c_i -> e_i of all roots and fixes every u_i. The
/// equivariant Euler class of the tangent space is prod_{i != j} (u_i - u_j).
struct FixedPointChart {
  unsigned index; // j, 1-based
  Substitution restriction;
  Polynomial euler;
  /// The linear factors u_i - u_j whose product is `euler`.
  std::vector<Polynomial> euler_factors;
};

/// The r charts of CP^{r-1}, over BundleVariables::of_rank(r). Throws
/// DomainError for r < 1.
std::vector<FixedPointChart> fixed_point_charts(unsigned r);

/// Degree bound; nullopt means no truncation.
using Cutoff = std::optional<long>;

struct LocalizationResult {
  Polynomial value;      // symmetric in u1..ur
  Cutoff valid_through;  // exact through this degree
};

/// pi_{T*} phi = sum_j i*_{p_j}(phi) / e_j, evaluated over the Vandermonde
/// denominator prod_{a<b}(u_a - u_b) with exact linear division.
///
/// phi must already be truncated at `cutoff` by the caller; the output is
/// exact through cutoff - (r - 1) and truncated there. Throws
/// IntegralityError on a nonzero remainder and SymmetryError if the sum is
/// not Weyl invariant.
///
/// The per-chart numerators are evaluated on up to `threads` threads; zero
/// means use the PUSHKIT_THREADS environment variable or the hardware default.
LocalizationResult localize(const Polynomial &phi, unsigned r, Cutoff cutoff = std::nullopt, unsigned threads = 0);

/// The Vandermonde polynomial prod_{a<b}(u_a - u_b) and its factors in that
/// order.
std::vector<Polynomial> vandermonde_factors(const BundleVariables &vars);

/// Checks (1 + y)(1 + q1 + ... + q_{r-1}) = prod (1 + u_i) at every chart.
bool relation_check(unsigned r);

/// Parallelism cap from PUSHKIT_THREADS, or the hardware concurrency.
unsigned default_thread_count();

} // namespace pushkit
