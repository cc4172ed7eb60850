#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pushkit/gysin.hpp"

namespace pushkit {

enum class OutputFormat { text, json, tex };

/// Plain-text math rendering, e.g. `c_{1}^{2} - \frac{1}{2} c_{2}`.
std::string to_tex(const Polynomial &p);

/// What the CLI reports for one computation.
struct OutputRecord {
  unsigned rank;
  long cutoff;
  std::optional<long> valid_through;
  Polynomial result;
  std::vector<Check> checks;
  std::string input; // canonical text of the normalized input class
};

/// {"rank", "cutoff", "valid_through", "input", "terms": [{"coeff": "p/q",
/// "exps": {"c1": 2}}], "checks": {"name": "pass" | "fail"}}.
/// Coefficients are always written as "p/q" strings.
nlohmann::json to_json(const OutputRecord &record);

/// Reads the "terms" array back into a polynomial over the rank-r table.
Polynomial terms_from_json(const nlohmann::json &terms, unsigned r);

std::string render(const Polynomial &p, OutputFormat format);

} // namespace pushkit
