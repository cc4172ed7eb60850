#include "pushkit/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "pushkit/error.hpp"
#include "pushkit/expr.hpp"
#include "pushkit/format.hpp"
#include "pushkit/gysin.hpp"
#include "pushkit/localization.hpp"

namespace pushkit::cli {

namespace {

struct Options {
  unsigned rank = 0;
  std::optional<unsigned> max_degree;
  OutputFormat format = OutputFormat::text;
  bool no_verify = false;
  std::string expression;
  unsigned from = 0;
  unsigned to = 0;

  unsigned cutoff() const { return max_degree.value_or(rank + 3); }
};

void print_record(const OutputRecord &record, OutputFormat format, std::ostream &out) {
  if (format == OutputFormat::json) {
    out << to_json(record).dump(2) << '\n';
    return;
  }
  out << "input: " << record.input << '\n';
  out << "result: " << render(record.result, format) << '\n';
  out << "valid_through: ";
  if (record.valid_through)
    out << *record.valid_through;
  else
    out << "exact";
  out << '\n';
  out << "checks:";
  for (const auto &check : record.checks)
    out << ' ' << check.name << '=' << (check.passed ? "pass" : "fail");
  out << '\n';
  for (const auto &check : record.checks)
    if (!check.passed)
      out << "  " << check.name << ": " << check.detail << '\n';
}

int do_push(const Options &opt, std::ostream &out) {
  const auto ast = parse_expression(opt.expression, opt.rank);
  const auto expr = elaborate(ast, opt.rank, opt.cutoff());
  const auto result = pushforward(expr, opt.rank, {.verify = !opt.no_verify});
  print_record({opt.rank, expr.cutoff, result.valid_through, result.chern_form, result.checks, to_string(expr.payload)},
               opt.format, out);
  return result.all_passed() ? ok : verification_failed;
}

int do_localize(const Options &opt, std::ostream &out) {
  const auto ast = parse_expression(opt.expression, opt.rank);
  const auto expr = elaborate(ast, opt.rank, opt.cutoff());
  const auto result = localize(expr.payload, opt.rank, expr.cutoff);
  print_record({opt.rank, expr.cutoff, result.valid_through, result.value, {{"weyl_invariance", true, {}}},
                to_string(expr.payload)},
               opt.format, out);
  return ok;
}

int do_table(const Options &opt, std::ostream &out, std::ostream &err) {
  if (opt.from > opt.to) {
    err << "error: --from must not exceed --to\n";
    return usage_error;
  }
  const auto &vars = BundleVariables::of_rank(opt.rank);
  bool all_passed = true;
  for (unsigned k = opt.from; k <= opt.to; ++k) {
    const ClassExpr expr{Polynomial::monomial(vars.table(), Monomial::variable(vars.x(), k)), k};
    const auto result = pushforward(expr, opt.rank);
    all_passed = all_passed && result.all_passed();
    out << "f_*(x^" << k << ") = " << to_string(result.chern_form) << (result.all_passed() ? "" : "   [check failed]")
        << '\n';
  }
  return all_passed ? ok : verification_failed;
}

int do_verify(const Options &opt, std::ostream &out) {
  const auto report = verify_classical(opt.rank, opt.cutoff());
  out << "rank " << report.rank << ", cutoff " << report.cutoff << '\n';
  for (const auto &check : report.checks) {
    out << (check.passed ? "pass  " : "FAIL  ") << check.name;
    if (!check.passed)
      out << ": " << check.detail;
    out << '\n';
  }
  out << (report.passed() ? "all checks passed" : "verification failed") << '\n';
  return report.passed() ? ok : verification_failed;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Gysin pushforwards for projective bundles by torus localization", "pushkit"};
  app.require_subcommand(1);

  Options opt;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"tex", OutputFormat::tex}};

  auto add_rank = [&](CLI::App *cmd) {
    cmd->add_option("--rank,-r", opt.rank, "rank of V")->required()->check(CLI::Range(1u, 16u));
  };
  auto add_degree = [&](CLI::App *cmd) {
    cmd->add_option("--max-degree,-D", opt.max_degree, "truncation degree (default rank + 3)");
  };
  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", opt.format, "output format")->transform(CLI::CheckedTransformer(formats));
  };

  auto *push = app.add_subcommand("push", "compute f_*(EXPR) in Chern classes of V");
  add_rank(push);
  add_degree(push);
  add_format(push);
  push->add_flag("--no-verify", opt.no_verify, "skip oracle cross-checks");
  push->add_option("EXPR", opt.expression, "class on P(V)")->required();

  auto *loc = app.add_subcommand("localize", "print the fixed-point sum in the roots u_i");
  add_rank(loc);
  add_degree(loc);
  add_format(loc);
  loc->add_option("EXPR", opt.expression, "class on P(V)")->required();

  auto *table = app.add_subcommand("table", "print f_*(x^k) for a range of k");
  add_rank(table);
  table->add_option("--from", opt.from, "first power")->required();
  table->add_option("--to", opt.to, "last power")->required();

  auto *verify = app.add_subcommand("verify", "check the classical identities");
  add_rank(verify);
  add_degree(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*push)
      return do_push(opt, out);
    if (*loc)
      return do_localize(opt, out);
    if (*table)
      return do_table(opt, out, err);
    return do_verify(opt, out);
  } catch (const IntegralityError &e) {
    err << "internal error: " << e.what() << '\n';
    return verification_failed;
  } catch (const SymmetryError &e) {
    err << "internal error: " << e.what() << '\n';
    return verification_failed;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace pushkit::cli
