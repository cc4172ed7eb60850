#include "pushkit/format.hpp"

#include <sstream>

#include "pushkit/error.hpp"

namespace pushkit {

namespace {

std::string tex_name(const std::string &name) {
  if (name.size() == 1)
    return name;
  return name.substr(0, 1) + "_{" + name.substr(1) + "}";
}

std::string tex_rational(const Rational &value) {
  if (value.get_den() == 1)
    return value.get_num().get_str();
  return "\\frac{" + value.get_num().get_str() + "}{" + value.get_den().get_str() + "}";
}

} // namespace

std::string to_tex(const Polynomial &p) {
  if (p.is_zero())
    return "0";
  const auto &table = *p.table();
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : p.sorted_terms()) {
    const bool negative = c < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      os << tex_rational(magnitude);
      continue;
    }
    if (magnitude != 1)
      os << tex_rational(magnitude) << ' ';
    bool first_factor = true;
    for (const auto &[var, exp] : m.factors()) {
      os << (first_factor ? "" : " ") << tex_name(table.name(var));
      if (exp != 1)
        os << "^{" << exp << '}';
      first_factor = false;
    }
  }
  return os.str();
}

nlohmann::json to_json(const OutputRecord &record) {
  nlohmann::json terms = nlohmann::json::array();
  const auto &table = *record.result.table();
  for (const auto &[m, c] : record.result.sorted_terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto &[var, exp] : m.factors())
      exps[table.name(var)] = exp;
    terms.push_back({{"coeff", c.get_num().get_str() + "/" + c.get_den().get_str()}, {"exps", std::move(exps)}});
  }
  nlohmann::json checks = nlohmann::json::object();
  for (const auto &check : record.checks)
    checks[check.name] = check.passed ? "pass" : "fail";

  nlohmann::json out;
  out["rank"] = record.rank;
  out["cutoff"] = record.cutoff;
  out["valid_through"] = record.valid_through ? nlohmann::json(*record.valid_through) : nlohmann::json(nullptr);
  out["input"] = record.input;
  out["terms"] = std::move(terms);
  out["checks"] = std::move(checks);
  return out;
}

Polynomial terms_from_json(const nlohmann::json &terms, unsigned r) {
  const auto &table = BundleVariables::of_rank(r).table();
  Polynomial p(table);
  for (const auto &term : terms) {
    Rational coeff(term.at("coeff").get<std::string>(), 10);
    coeff.canonicalize();
    std::vector<Monomial::Factor> factors;
    for (const auto &[name, exp] : term.at("exps").items())
      factors.emplace_back(static_cast<std::uint32_t>(table->index(name)), exp.get<std::uint32_t>());
    p.add_term(Monomial::from_factors(std::move(factors)), coeff);
  }
  return p;
}

std::string render(const Polynomial &p, OutputFormat format) {
  return format == OutputFormat::tex ? to_tex(p) : to_string(p);
}

} // namespace pushkit
