#include "pushkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pushkit/error.hpp"

namespace pushkit {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t var, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0)
    m.factors_.emplace_back(static_cast<std::uint32_t>(var), exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto &[var, exp] : factors) {
    if (exp == 0)
      continue;
    if (!m.factors_.empty() && m.factors_.back().first == var)
      m.factors_.back().second += exp;
    else
      m.factors_.emplace_back(var, exp);
  }
  return m;
}

std::uint32_t Monomial::exponent(std::size_t var) const noexcept {
  for (const auto &[v, e] : factors_)
    if (v == var)
      return e;
  return 0;
}

unsigned Monomial::degree(const VariableTable &table) const {
  unsigned d = 0;
  for (const auto &[v, e] : factors_)
    d += e * table.degree(v);
  return d;
}

Monomial Monomial::with_exponent(std::size_t var, std::uint32_t exponent) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto &f : factors_) {
    if (!placed && f.first >= var) {
      if (exponent > 0)
        m.factors_.emplace_back(static_cast<std::uint32_t>(var), exponent);
      placed = true;
      if (f.first == var)
        continue;
    }
    m.factors_.push_back(f);
  }
  if (!placed && exponent > 0)
    m.factors_.emplace_back(static_cast<std::uint32_t>(var), exponent);
  return m;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  return m;
}

std::strong_ordering grlex_compare(const Monomial &a, const Monomial &b, const VariableTable &table) {
  if (auto c = a.degree(table) <=> b.degree(table); c != 0)
    return c;
  // The first generator (lowest index) where the exponents differ decides.
  const auto &fa = a.factors();
  const auto &fb = b.factors();
  auto i = fa.begin(), j = fb.begin();
  for (; i != fa.end() && j != fb.end(); ++i, ++j) {
    if (i->first != j->first)
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->second != j->second)
      return i->second <=> j->second;
  }
  if (i != fa.end())
    return std::strong_ordering::greater;
  if (j != fb.end())
    return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(TablePtr table) : table_(std::move(table)) {
  if (!table_)
    throw DomainError("polynomial requires a variable table");
}

Polynomial::Polynomial(TablePtr table, Terms terms) : Polynomial(std::move(table)) {
  for (auto it = terms.begin(); it != terms.end();) {
    it->second.canonicalize();
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  terms_ = std::move(terms);
}

Polynomial Polynomial::constant(TablePtr table, const Rational &value) {
  return monomial(std::move(table), Monomial{}, value);
}

Polynomial Polynomial::variable(TablePtr table, std::size_t var) {
  if (var >= table->size())
    throw UnboundVariableError("generator index " + std::to_string(var) + " not in table");
  return monomial(std::move(table), Monomial::variable(var));
}

Polynomial Polynomial::variable(TablePtr table, std::string_view name) {
  auto var = table->index(name);
  return variable(std::move(table), var);
}

Polynomial Polynomial::monomial(TablePtr table, Monomial m, const Rational &coeff) {
  Polynomial p(std::move(table));
  p.add_term(m, coeff);
  return p;
}

Rational Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> Polynomial::degree() const {
  std::optional<unsigned> d;
  for (const auto &[m, c] : terms_)
    d = std::max(d.value_or(0), m.degree(*table_));
  return d;
}

bool Polynomial::is_homogeneous() const {
  std::optional<unsigned> d;
  for (const auto &[m, c] : terms_) {
    auto md = m.degree(*table_);
    if (d && *d != md)
      return false;
    d = md;
  }
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto &[m, c] : terms_)
    if (m.exponent(var) > 0)
      return true;
  return false;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
  if (terms_.empty())
    throw DomainError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (grlex_compare(it->first, best->first, *table_) > 0)
      best = it;
  return *best;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) {
    return grlex_compare(a.first, b.first, *table_) > 0;
  });
  return out;
}

void Polynomial::require_same_table(const Polynomial &other, const char *op) const {
  if (!same_table(table_, other.table_))
    throw TableMismatchError(std::string("polynomial ") + op + ": operands use different variable tables");
}

void Polynomial::add_term(const Monomial &m, const Rational &coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  require_same_table(other, "add");
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  require_same_table(other, "sub");
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) { return *this = *this * other; }

Polynomial &Polynomial::operator*=(const Rational &scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.require_same_table(b, "mul");
  Polynomial::Terms acc;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
      if (!inserted)
        it->second += ca * cb;
    }
  std::erase_if(acc, [](const auto &kv) { return kv.second == 0; });
  Polynomial out(a.table_);
  out.terms_ = std::move(acc);
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto &[m, c] : a.terms_)
    c = -c;
  return a;
}

bool Polynomial::operator==(const Polynomial &other) const {
  return same_table(table_, other.table_) && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial poly_arith(const Polynomial &a, const Polynomial &b, ArithOp op) {
  switch (op) {
  case ArithOp::add:
    return a + b;
  case ArithOp::sub:
    return a - b;
  case ArithOp::mul:
    return a * b;
  }
  throw DomainError("unknown arithmetic operation");
}

Polynomial truncate(const Polynomial &p, long cutoff) {
  Polynomial out(p.table());
  if (cutoff < 0)
    return out;
  for (const auto &[m, c] : p.terms())
    if (static_cast<long>(m.degree(*p.table())) <= cutoff)
      out.add_term(m, c);
  return out;
}

Polynomial truncated_mul(const Polynomial &a, const Polynomial &b, long cutoff) {
  if (!same_table(a.table(), b.table()))
    throw TableMismatchError("polynomial mul: operands use different variable tables");
  Polynomial out(a.table());
  if (cutoff < 0)
    return out;
  const auto &table = *a.table();
  std::vector<std::pair<const Monomial *, long>> right;
  right.reserve(b.size());
  for (const auto &[m, c] : b.terms())
    right.emplace_back(&m, static_cast<long>(m.degree(table)));
  Polynomial::Terms acc;
  for (const auto &[ma, ca] : a.terms()) {
    const long da = ma.degree(table);
    if (da > cutoff)
      continue;
    for (const auto &[mb, db] : right) {
      if (da + db > cutoff)
        continue;
      const Rational &cb = b.terms().find(*mb)->second;
      auto [it, inserted] = acc.try_emplace(ma * *mb, ca * cb);
      if (!inserted)
        it->second += ca * cb;
    }
  }
  return Polynomial(a.table(), std::move(acc));
}

Polynomial truncated_pow(const Polynomial &p, unsigned n, std::optional<long> cutoff) {
  auto mul = [&](const Polynomial &a, const Polynomial &b) {
    return cutoff ? truncated_mul(a, b, *cutoff) : a * b;
  };
  Polynomial result = Polynomial::constant(p.table(), 1);
  if (cutoff)
    result = truncate(result, *cutoff);
  Polynomial base = cutoff ? truncate(p, *cutoff) : p;
  while (n > 0) {
    if (n & 1u)
      result = mul(result, base);
    n >>= 1;
    if (n > 0)
      base = mul(base, base);
  }
  return result;
}

std::vector<std::pair<unsigned, Polynomial>> grade_decompose(const Polynomial &p) {
  std::map<unsigned, Polynomial> parts;
  for (const auto &[m, c] : p.terms()) {
    auto d = m.degree(*p.table());
    parts.try_emplace(d, p.table()).first->second.add_term(m, c);
  }
  return {parts.begin(), parts.end()};
}

Substitution::Substitution(TablePtr source, TablePtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_)
    throw DomainError("substitution requires source and target tables");
}

Substitution &Substitution::bind(std::size_t var, Polynomial image) {
  if (var >= source_->size())
    throw UnboundVariableError("substitution: generator index " + std::to_string(var) + " not in source table");
  if (!same_table(image.table(), target_))
    throw TableMismatchError("substitution: image of '" + source_->name(var) + "' is over a different table");
  if (!image.is_zero()) {
    if (!image.is_homogeneous() || *image.degree() != source_->degree(var))
      throw GradingError("substitution: image of '" + source_->name(var) + "' is not homogeneous of degree " +
                         std::to_string(source_->degree(var)));
  }
  images_.insert_or_assign(var, std::move(image));
  return *this;
}

Substitution &Substitution::bind(std::string_view name, Polynomial image) {
  return bind(source_->index(name), std::move(image));
}

const Polynomial *Substitution::image(std::size_t var) const {
  auto it = images_.find(var);
  return it == images_.end() ? nullptr : &it->second;
}

Substitution Substitution::identity(TablePtr table) {
  Substitution sigma(table, table);
  for (std::size_t v = 0; v < table->size(); ++v)
    sigma.bind(v, Polynomial::variable(table, v));
  return sigma;
}

Polynomial substitute(const Polynomial &p, const Substitution &sigma) {
  if (!same_table(p.table(), sigma.source()))
    throw TableMismatchError("substitute: polynomial is not over the substitution's source table");
  // powers[var][k] = image(var)^k, grown on demand
  std::map<std::uint32_t, std::vector<Polynomial>> powers;
  auto power = [&](std::uint32_t var, std::uint32_t exp) -> const Polynomial & {
    auto it = powers.find(var);
    if (it == powers.end()) {
      const Polynomial *img = sigma.image(var);
      if (!img)
        throw UnboundVariableError("substitute: no image for generator '" + sigma.source()->name(var) + "'");
      it = powers.emplace(var, std::vector<Polynomial>{Polynomial::constant(sigma.target(), 1), *img}).first;
    }
    auto &cache = it->second;
    while (cache.size() <= exp)
      cache.push_back(cache.back() * cache[1]);
    return cache[exp];
  };

  Polynomial out(sigma.target());
  for (const auto &[m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(sigma.target(), c);
    for (const auto &[var, exp] : m.factors())
      term = term * power(var, exp);
    out += term;
  }
  return out;
}

Polynomial divide_exact_linear(const Polynomial &p, const Polynomial &factor) {
  if (!same_table(p.table(), factor.table()))
    throw TableMismatchError("divide_exact_linear: operands use different variable tables");
  const auto &table = *p.table();

  std::optional<std::uint32_t> lead, trail;
  if (factor.size() == 2) {
    for (const auto &[m, c] : factor.terms()) {
      if (m.factors().size() != 1 || m.factors()[0].second != 1 || table.degree(m.factors()[0].first) != 1)
        break;
      if (c == 1)
        lead = m.factors()[0].first;
      else if (c == -1)
        trail = m.factors()[0].first;
    }
  }
  if (!lead || !trail)
    throw DomainError("divide_exact_linear: divisor " + to_string(factor) +
                      " is not a difference of two degree-1 generators");

  // p = sum_k P_k a^k with P_k free of a; dividing by (a - b) gives
  // Q_{n-1} = P_n, Q_{k-1} = P_k + b Q_k, remainder P_0 + b Q_0.
  const std::uint32_t a = *lead, b = *trail;
  std::map<std::uint32_t, Polynomial::Terms> slices;
  std::uint32_t top = 0;
  for (const auto &[m, c] : p.terms()) {
    auto k = m.exponent(a);
    slices[k].emplace(m.with_exponent(a, 0), c);
    top = std::max(top, k);
  }

  auto times_b = [&](const Polynomial::Terms &terms) {
    Polynomial::Terms out;
    for (const auto &[m, c] : terms)
      out.emplace(m.with_exponent(b, m.exponent(b) + 1), c);
    return out;
  };

  Polynomial quotient(p.table());
  Polynomial::Terms carry; // Q_k, starting above the top degree as zero
  for (std::uint32_t k = top + 1; k-- > 0;) {
    Polynomial::Terms next = times_b(carry);
    if (auto it = slices.find(k); it != slices.end())
      for (const auto &[m, c] : it->second) {
        auto [pos, inserted] = next.try_emplace(m, c);
        if (!inserted)
          pos->second += c;
      }
    std::erase_if(next, [](const auto &kv) { return kv.second == 0; });
    if (k == 0) {
      if (!next.empty())
        throw NotDivisibleError("divide_exact_linear: " + to_string(factor) + " does not divide " + to_string(p));
      break;
    }
    // next is Q_{k-1}
    for (const auto &[m, c] : next)
      quotient.add_term(m.with_exponent(a, k - 1), c);
    carry = std::move(next);
  }
  return quotient;
}

Polynomial series_inverse(const Polynomial &p, unsigned cutoff) {
  const Rational a0 = p.constant_term();
  if (a0 == 0)
    throw NotInvertibleError("series_inverse: constant term of " + to_string(p) + " is zero");

  std::vector<Polynomial> part(cutoff + 1, Polynomial(p.table()));
  for (auto &[d, component] : grade_decompose(p))
    if (d <= cutoff)
      part[d] = std::move(component);

  const Rational inv0 = 1 / a0;
  std::vector<Polynomial> inverse;
  inverse.reserve(cutoff + 1);
  inverse.push_back(Polynomial::constant(p.table(), inv0));
  for (unsigned d = 1; d <= cutoff; ++d) {
    Polynomial acc(p.table());
    for (unsigned i = 1; i <= d; ++i)
      if (!part[i].is_zero() && !inverse[d - i].is_zero())
        acc += part[i] * inverse[d - i];
    inverse.push_back(acc * (-inv0));
  }
  Polynomial out(p.table());
  for (auto &component : inverse)
    out += component;
  return out;
}

std::string to_string(const Monomial &m, const VariableTable &table) {
  std::string out;
  for (const auto &[var, exp] : m.factors()) {
    if (!out.empty())
      out += ' ';
    out += table.name(var);
    if (exp != 1)
      out += '^' + std::to_string(exp);
  }
  return out;
}

std::string to_string(const Polynomial &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : p.sorted_terms()) {
    const bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1)
      os << magnitude.get_str() << ' ';
    os << to_string(m, *p.table());
  }
  return os.str();
}

} // namespace pushkit
