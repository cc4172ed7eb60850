#include "pushkit/localization.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "pushkit/error.hpp"
#include "pushkit/symfun.hpp"

namespace pushkit {

namespace {

std::vector<std::size_t> roots_without(const BundleVariables &vars, unsigned j) {
  std::vector<std::size_t> out;
  for (unsigned i = 1; i <= vars.rank(); ++i)
    if (i != j)
      out.push_back(vars.u(i));
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn &&fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i; (i = next++) < count;)
            fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace

unsigned default_thread_count() {
  if (const char *env = std::getenv("PUSHKIT_THREADS")) {
    char *end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1)
      return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<FixedPointChart> fixed_point_charts(unsigned r) {
  const auto &vars = BundleVariables::of_rank(r);
  const auto &table = vars.table();
  const auto all = vars.roots();

  std::vector<FixedPointChart> charts;
  charts.reserve(r);
  for (unsigned j = 1; j <= r; ++j) {
    const auto others = roots_without(vars, j);
    const auto uj = Polynomial::variable(table, vars.u(j));

    Substitution restriction(table, table);
    for (unsigned i = 1; i <= r; ++i)
      restriction.bind(vars.u(i), Polynomial::variable(table, vars.u(i)));
    restriction.bind(vars.y(), uj);
    restriction.bind(vars.x(), -uj);
    for (unsigned i = 1; i < r; ++i)
      restriction.bind(vars.q(i), elementary_symmetric(i, others, table));
    for (unsigned i = 1; i <= r; ++i)
      restriction.bind(vars.c(i), elementary_symmetric(i, all, table));

    Polynomial euler = Polynomial::constant(table, 1);
    std::vector<Polynomial> factors;
    for (auto ui : others) {
      factors.push_back(Polynomial::variable(table, ui) - uj);
      euler = euler * factors.back();
    }
    charts.push_back({j, std::move(restriction), std::move(euler), std::move(factors)});
  }
  return charts;
}

std::vector<Polynomial> vandermonde_factors(const BundleVariables &vars) {
  std::vector<Polynomial> out;
  for (unsigned a = 1; a <= vars.rank(); ++a)
    for (unsigned b = a + 1; b <= vars.rank(); ++b)
      out.push_back(Polynomial::variable(vars.table(), vars.u(a)) - Polynomial::variable(vars.table(), vars.u(b)));
  return out;
}

LocalizationResult localize(const Polynomial &phi, unsigned r, Cutoff cutoff, unsigned threads) {
  const auto &vars = BundleVariables::of_rank(r);
  const auto &table = vars.table();
  if (!same_table(phi.table(), table))
    throw TableMismatchError("localize: class is not over the rank-" + std::to_string(r) + " bundle table");

  const auto charts = fixed_point_charts(r);
  const auto factors = vandermonde_factors(vars);
  Polynomial vandermonde = Polynomial::constant(table, 1);
  for (const auto &f : factors)
    vandermonde = vandermonde * f;

  auto divide = [](Polynomial p, const Polynomial &f) {
    try {
      return divide_exact_linear(p, f);
    } catch (const NotDivisibleError &e) {
      throw IntegralityError(std::string("localize: fixed-point sum is not a polynomial (") + e.what() + ")");
    }
  };

  // numerator_j = i*_j(phi) * V / e_j; the sign of reordering u_i - u_j
  // against u_j - u_i is absorbed by the exact division itself.
  std::vector<Polynomial> numerators(r, Polynomial(table));
  parallel_for(r, threads == 0 ? default_thread_count() : threads, [&](std::size_t k) {
    const auto &chart = charts[k];
    Polynomial cofactor = vandermonde;
    for (const auto &f : chart.euler_factors)
      cofactor = divide(cofactor, f);
    Polynomial restricted = substitute(phi, chart.restriction);
    if (cutoff)
      restricted = truncate(restricted, *cutoff);
    numerators[k] = restricted * cofactor;
  });

  Polynomial sum(table);
  for (const auto &n : numerators)
    sum += n;
  for (const auto &f : factors)
    sum = divide(sum, f);

  Cutoff valid;
  if (cutoff) {
    valid = *cutoff - static_cast<long>(r - 1);
    sum = truncate(sum, *valid);
  }
  if (!is_symmetric(sum, vars))
    throw SymmetryError("localize: fixed-point sum " + to_string(sum) + " is not Weyl invariant");
  return {std::move(sum), valid};
}

bool relation_check(unsigned r) {
  const auto &vars = BundleVariables::of_rank(r);
  const auto &table = vars.table();
  const auto one = Polynomial::constant(table, 1);

  Polynomial quotient_total = one;
  for (unsigned i = 1; i < r; ++i)
    quotient_total += Polynomial::variable(table, vars.q(i));
  const Polynomial relation = (one + Polynomial::variable(table, vars.y())) * quotient_total;

  Polynomial root_total = one;
  for (unsigned i = 1; i <= r; ++i)
    root_total = root_total * (one + Polynomial::variable(table, vars.u(i)));

  for (const auto &chart : fixed_point_charts(r))
    if (substitute(relation, chart.restriction) != root_total)
      return false;
  return true;
}

} // namespace pushkit
