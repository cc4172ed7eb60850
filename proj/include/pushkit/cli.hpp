#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pushkit::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Runs one command line (without the program name):
///
///   push     --rank R [--max-degree D] [--format text|json|tex] [--no-verify] EXPR
///   localize --rank R [--max-degree D] [--format text|json|tex] EXPR
///   table    --rank R --from K0 --to K1
///   verify   --rank R [--max-degree D]
///
/// D defaults to R + 3.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace pushkit::cli
