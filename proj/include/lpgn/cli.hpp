#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lpgn/zline.hpp"

namespace lpgn::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Data goes to `out`
/// (or to --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "-i", "2.5i", "1+i", "0.5-2e-3i".
std::complex<double> parse_complex(std::string_view text);
/// Comma-separated complex literals.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);
/// "k:v,k:v,…" with integer k and complex v.
Kernel parse_kernel(std::string_view text);

}  // namespace lpgn::cli
