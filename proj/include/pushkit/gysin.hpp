#pragma once

#include <string>
#include <vector>

#include "pushkit/localization.hpp"
#include "pushkit/polynomial.hpp"

namespace pushkit {

/// A class on P(V), already series-expanded: a polynomial in x or y, the
/// quotient classes q_i and the Chern classes c_i over the rank-r bundle
/// table, with no terms above `cutoff`.
struct ClassExpr {
  Polynomial payload;
  long cutoff;
};

struct Check {
  std::string name;
  bool passed;
  std::string detail; // empty on success
};

struct PushforwardResult {
  Polynomial chern_form;  // in c1..cr
  Polynomial u_form;      // symmetric in u1..ur, before reduction
  long valid_through;     // cutoff - (r - 1); negative means nothing is claimed
  std::vector<Check> checks;

  bool all_passed() const;
};

struct PushforwardOptions {
  /// Cross-check against the presentation oracle. Weyl invariance is always
  /// asserted.
  bool verify = true;
  unsigned threads = 0;
};

/// f_* for f: P(V) -> M by torus localization on the fiber CP^{r-1}.
///
/// Rewrites x as -y, sums over the r fixed points, checks the sum is Weyl
/// invariant and reduces it to Chern classes. Coefficients in c_i pass
/// through the fixed-point sum as symmetric functions of the roots.
///
/// Throws ArityError if the class was built at another rank,
/// UnsupportedVariableError if it involves a root u_i, and propagates
/// IntegralityError / SymmetryError from the localization step.
PushforwardResult pushforward(const ClassExpr &expr, unsigned r, const PushforwardOptions &options = {});

/// Total Segre class 1/c(V) through degree `cutoff`, by series inversion.
Polynomial segre_oracle(unsigned r, unsigned cutoff);

/// Rewrites y = -x and q_i = sum_k c_{i-k} x^k, the latter read off from
/// (1 + y)(1 + q_1 + ... ) = c(V). The result involves only x and c_i.
Polynomial to_hyperplane_form(const Polynomial &payload, unsigned r);

/// f_* from the presentation H*(P(V)) = H*(M)[x]/(x^r + c1 x^{r-1} + ... + cr):
/// reduce modulo the relation and take the coefficient of x^{r-1}. Throws
/// UnsupportedVariableError unless the payload involves only x and c_i.
Polynomial presentation_oracle(const ClassExpr &expr, unsigned r);

struct VerificationReport {
  unsigned rank;
  long cutoff;
  std::vector<Check> checks;

  bool passed() const;
};

/// Runs the classical identities at rank r through cutoff D:
///  - f_*(1/(1-x)) equals the Segre class, degree by degree;
///  - f_*(x^k) agrees with the presentation oracle for 0 <= k <= D;
///  - the restricted Whitney relation holds at every fixed point;
///  - the localized 1/(1+y) equals prod_j 1/(1+u_j).
/// Throws DomainError unless r >= 1 and D >= r - 1.
VerificationReport verify_classical(unsigned r, long cutoff);

} // namespace pushkit
