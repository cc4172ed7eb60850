#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pushkit/polynomial.hpp"

namespace pushkit {

class BundleVariables;

/// An element of the symmetric group S_r, stored as the images of 1..r.
class Permutation {
public:
  /// Throws DomainError unless `images` is a permutation of 1..r.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned r);
  /// The transposition exchanging i and j (1-based).
  static Permutation swap(unsigned r, unsigned i, unsigned j);

  unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
  /// Image of i, 1-based.
  unsigned operator()(unsigned i) const { return images_.at(i - 1); }

private:
  std::vector<unsigned> images_;
};

/// e_k of the given generators. Throws DomainError for k > vars.size().
Polynomial elementary_symmetric(unsigned k, std::span<const std::size_t> vars, const TablePtr &table);

/// h_k of the given generators: the sum of all monomials of degree k.
Polynomial complete_homogeneous(unsigned k, std::span<const std::size_t> vars, const TablePtr &table);

/// Renames roots[i-1] to roots[sigma(i)-1]; every other generator is fixed.
Polynomial apply_permutation(const Polynomial &p, const Permutation &sigma, std::span<const std::size_t> roots);

/// Invariance under the adjacent transpositions (i, i+1), which generate S_r.
bool is_symmetric(const Polynomial &p, std::span<const std::size_t> roots);

/// Rewrites a polynomial symmetric in `roots` in terms of the elementary
/// symmetric polynomials, with e_i written as the generator chern[i-1].
///
/// Leading-term elimination: the graded-lex leading monomial u^lambda of a
/// symmetric polynomial has lambda a partition; subtract the matching
/// product of e_i^(lambda_i - lambda_{i+1}) and repeat. Generators outside
/// `roots` ride along as coefficients, except the `chern` generators
/// themselves, which must not occur in p.
///
/// Throws SymmetryError for non-symmetric input and DomainError if p already
/// involves a chern generator. `roots` must be in increasing index order.
Polynomial reduce_to_elementary(const Polynomial &p, std::span<const std::size_t> roots,
                                std::span<const std::size_t> chern);

/// The inverse direction: substitutes chern[i-1] -> e_i(roots).
Polynomial expand_elementary(const Polynomial &p, std::span<const std::size_t> roots,
                             std::span<const std::size_t> chern);

// Convenience forms over the standard bundle layout (u1..ur, c1..cr).
Polynomial reduce_to_elementary(const Polynomial &p, const BundleVariables &vars);
Polynomial expand_elementary(const Polynomial &p, const BundleVariables &vars);
bool is_symmetric(const Polynomial &p, const BundleVariables &vars);

} // namespace pushkit
