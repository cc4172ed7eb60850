#include "pushkit/symfun.hpp"

#include <algorithm>
#include <numeric>

#include "pushkit/error.hpp"

namespace pushkit {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned v : images_) {
    if (v < 1 || v > images_.size() || seen[v])
      throw DomainError("permutation: images are not a bijection on 1.." + std::to_string(images_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned r) {
  std::vector<unsigned> images(r);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

Permutation Permutation::swap(unsigned r, unsigned i, unsigned j) {
  if (i < 1 || j < 1 || i > r || j > r)
    throw DomainError("permutation: transposition index out of range");
  std::vector<unsigned> images(r);
  std::iota(images.begin(), images.end(), 1u);
  std::swap(images[i - 1], images[j - 1]);
  return Permutation(std::move(images));
}

Polynomial elementary_symmetric(unsigned k, std::span<const std::size_t> vars, const TablePtr &table) {
  if (k > vars.size())
    throw DomainError("elementary_symmetric: k = " + std::to_string(k) + " exceeds the " +
                      std::to_string(vars.size()) + " chosen variables");
  // e[j] over a growing prefix of vars
  std::vector<Polynomial> e(k + 1, Polynomial(table));
  e[0] = Polynomial::constant(table, 1);
  for (std::size_t n = 0; n < vars.size(); ++n) {
    const auto v = Polynomial::variable(table, vars[n]);
    for (std::size_t j = std::min<std::size_t>(k, n + 1); j >= 1; --j)
      e[j] += e[j - 1] * v;
  }
  return e[k];
}

Polynomial complete_homogeneous(unsigned k, std::span<const std::size_t> vars, const TablePtr &table) {
  // h_j(S + v) = h_j(S) + v h_{j-1}(S + v)
  std::vector<Polynomial> h(k + 1, Polynomial(table));
  h[0] = Polynomial::constant(table, 1);
  for (auto var : vars) {
    const auto v = Polynomial::variable(table, var);
    for (unsigned j = 1; j <= k; ++j)
      h[j] += v * h[j - 1];
  }
  return h[k];
}

Polynomial apply_permutation(const Polynomial &p, const Permutation &sigma, std::span<const std::size_t> roots) {
  if (sigma.size() != roots.size())
    throw DomainError("apply_permutation: permutation of " + std::to_string(sigma.size()) + " letters acting on " +
                      std::to_string(roots.size()) + " roots");
  std::vector<std::size_t> rename(p.table()->size());
  std::iota(rename.begin(), rename.end(), std::size_t{0});
  for (unsigned i = 1; i <= roots.size(); ++i)
    rename[roots[i - 1]] = roots[sigma(i) - 1];

  Polynomial out(p.table());
  for (const auto &[m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto &[var, exp] : m.factors())
      factors.emplace_back(static_cast<std::uint32_t>(rename[var]), exp);
    out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

bool is_symmetric(const Polynomial &p, std::span<const std::size_t> roots) {
  const auto r = static_cast<unsigned>(roots.size());
  for (unsigned i = 1; i < r; ++i)
    if (apply_permutation(p, Permutation::swap(r, i, i + 1), roots) != p)
      return false;
  return true;
}

Polynomial reduce_to_elementary(const Polynomial &p, std::span<const std::size_t> roots,
                                std::span<const std::size_t> chern) {
  const auto &table = p.table();
  if (chern.size() != roots.size())
    throw DomainError("reduce_to_elementary: need one Chern generator per root");
  if (!std::is_sorted(roots.begin(), roots.end()))
    throw DomainError("reduce_to_elementary: roots must be listed in increasing generator order");
  for (auto c : chern)
    if (p.involves(c))
      throw DomainError("reduce_to_elementary: input already involves " + table->name(c));
  if (!is_symmetric(p, roots))
    throw SymmetryError("reduce_to_elementary: " + to_string(p) + " is not symmetric in the roots");

  const std::size_t r = roots.size();
  std::vector<Polynomial> elementary;
  for (std::size_t i = 1; i <= r; ++i)
    elementary.push_back(elementary_symmetric(static_cast<unsigned>(i), roots, table));
  std::vector<std::vector<Polynomial>> e_powers(r); // e_powers[i][k] = e_{i+1}^k
  auto e_power = [&](std::size_t i, std::uint32_t k) -> const Polynomial & {
    auto &cache = e_powers[i];
    if (cache.empty())
      cache.push_back(Polynomial::constant(table, 1));
    while (cache.size() <= k)
      cache.push_back(cache.back() * elementary[i]);
    return cache[k];
  };

  std::vector<bool> is_root(table->size(), false);
  for (auto v : roots)
    is_root[v] = true;

  Polynomial remainder = p;
  Polynomial result(table);
  while (!remainder.is_zero()) {
    const auto [lead, coeff] = remainder.leading_term();
    std::vector<std::uint32_t> lambda(r + 1, 0);
    std::vector<Monomial::Factor> inert;
    for (const auto &[var, exp] : lead.factors()) {
      if (is_root[var])
        lambda[std::find(roots.begin(), roots.end(), var) - roots.begin()] = exp;
      else
        inert.emplace_back(var, exp);
    }
    std::vector<Monomial::Factor> chern_factors = inert;
    Polynomial expansion = Polynomial::monomial(table, Monomial::from_factors(inert), coeff);
    for (std::size_t i = 0; i < r; ++i) {
      if (lambda[i] < lambda[i + 1])
        throw SymmetryError("reduce_to_elementary: leading exponent is not a partition");
      const auto k = lambda[i] - lambda[i + 1];
      if (k == 0)
        continue;
      chern_factors.emplace_back(static_cast<std::uint32_t>(chern[i]), k);
      expansion = expansion * e_power(i, k);
    }
    result.add_term(Monomial::from_factors(std::move(chern_factors)), coeff);
    remainder -= expansion;
  }
  return result;
}

Polynomial expand_elementary(const Polynomial &p, std::span<const std::size_t> roots,
                             std::span<const std::size_t> chern) {
  if (chern.size() != roots.size())
    throw DomainError("expand_elementary: need one Chern generator per root");
  Substitution sigma = Substitution::identity(p.table());
  for (std::size_t i = 0; i < chern.size(); ++i)
    sigma.bind(chern[i], elementary_symmetric(static_cast<unsigned>(i + 1), roots, p.table()));
  return substitute(p, sigma);
}

Polynomial reduce_to_elementary(const Polynomial &p, const BundleVariables &vars) {
  return reduce_to_elementary(p, vars.roots(), vars.chern());
}

Polynomial expand_elementary(const Polynomial &p, const BundleVariables &vars) {
  return expand_elementary(p, vars.roots(), vars.chern());
}

bool is_symmetric(const Polynomial &p, const BundleVariables &vars) { return is_symmetric(p, vars.roots()); }

} // namespace pushkit
