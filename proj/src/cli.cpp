#include "lpgn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "lpgn/classify.hpp"
#include "lpgn/cyclic.hpp"
#include "lpgn/errors.hpp"
#include "lpgn/verify.hpp"

namespace lpgn::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "1";
constexpr const char* kDefaultTs = "1,8/7,4/3,3/2,2,3,4,8";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return parts;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ValidationError("malformed complex literal '" + std::string(whole) + "'");
  return v;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json bound(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json vector_json(const CVector& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(json::array({z.real(), z.imag()}));
  return arr;
}

std::vector<Exponent> parse_exponents(std::string_view text) {
  std::vector<Exponent> out;
  for (auto part : split(text, ',')) out.push_back(Exponent::parse(part));
  return out;
}

struct Common {
  std::string out_file;
  std::uint64_t seed = 0;
  int starts = 8;
  int max_iter = 500;
  int refine_grid = 256;

  void attach(CLI::App* app, bool budget) {
    app->add_option("--out", out_file, "Write data to FILE instead of stdout");
    app->add_option("--seed", seed, "Seed for random starts and samples")->capture_default_str();
    if (!budget) return;
    app->add_option("--starts", starts, "Random Boyd starts beyond the basis vectors")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--max-iter", max_iter, "Boyd iteration cap per start")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--refine-grid", refine_grid, "Grid size of the 2x2 solver")->capture_default_str()->check(CLI::Range(8, 1 << 14));
  }

  NormBudget budget() const {
    NormBudget b;
    b.boyd.starts = starts;
    b.boyd.max_iter = max_iter;
    b.boyd.seed = seed;
    b.refine.grid = refine_grid;
    return b;
  }
};

json estimate_json(const NormEstimate& e) {
  json j;
  j["lower"] = e.lower;
  j["upper"] = bound(e.upper);
  j["exact"] = e.exact;
  j["method_tags"] = e.method_tags;
  j["witness"] = vector_json(e.lower_witness);
  return j;
}

struct NormArgs {
  Common common;
  std::string group, gelfand, coeffs, kernel, p;
  int n_half = 64;
};

std::string cmd_norm(const NormArgs& a) {
  const int given = !a.gelfand.empty() + !a.coeffs.empty() + !a.kernel.empty();
  if (given != 1) throw ValidationError("give exactly one of --gelfand, --coeffs, --kernel");
  const auto p = Exponent::parse(a.p);
  const auto budget = a.common.budget();

  GroupDescriptor g;
  if (!a.group.empty()) g = GroupDescriptor::parse(a.group);
  else if (!a.kernel.empty()) g = GroupDescriptor::integers();
  else {
    const auto len = split(a.gelfand.empty() ? a.coeffs : a.gelfand, ',').size();
    g = len == 1 ? GroupDescriptor::trivial() : GroupDescriptor::cyclic(len);
  }

  json j;
  j["schema"] = kSchema;
  j["command"] = "norm";
  j["group"] = g.name();
  j["p"] = p.to_string();

  if (g.kind == GroupDescriptor::Kind::integers) {
    if (a.kernel.empty()) throw ValidationError("group Z needs --kernel");
    const Kernel f = parse_kernel(a.kernel);
    NormEstimate lo = zline::norm_lambda_lower(f, p, a.n_half, budget);
    const NormEstimate up = zline::norm_lambda_upper(f, p);
    lo.upper = std::max(up.upper, lo.lower);
    lo.exact = lo.width() <= kExactTolerance;
    for (const auto& t : up.method_tags) lo.method_tags.push_back(t);
    j["N"] = a.n_half;
    j.update(estimate_json(lo));
    return j.dump() + "\n";
  }

  const std::size_t n = g.kind == GroupDescriptor::Kind::trivial ? 1 : g.n;
  std::optional<CyclicElement> x;
  if (!a.kernel.empty()) x = cyclic::periodize(parse_kernel(a.kernel), n);
  else if (!a.gelfand.empty()) x = CyclicElement::from_gelfand(n, parse_complex_list(a.gelfand));
  else x = CyclicElement::from_coeffs(n, parse_complex_list(a.coeffs));
  j["gelfand"] = vector_json(x->gelfand());
  j.update(estimate_json(cyclic::norm(*x, p, budget)));
  return j.dump() + "\n";
}

struct CurveArgs {
  Common common;
  std::string ts = kDefaultTs;
  std::string format = "csv";
};

std::string cmd_delta_curve(const CurveArgs& a) {
  const auto ts = parse_exponents(a.ts);
  for (const auto& t : ts)
    if (t.is_infinite()) throw ValidationError("delta-curve needs finite t");
  const auto rows = cyclic::delta_curve(ts, a.common.budget());
  std::string out;
  if (a.format == "csv") out += "t,lower,upper,closed_form,abs_err\r\n";
  for (const auto& [t, e] : rows) {
    const double closed = std::pow(2.0, t.distance_to_half());
    const double err = std::max({0.0, e.lower - closed, closed - e.upper});
    if (a.format == "csv") {
      out += t.to_string() + "," + num(e.lower) + "," + num(e.upper) + "," + num(closed) + "," + num(err) + "\r\n";
    } else {
      json j;
      j["schema"] = kSchema;
      j["command"] = "delta-curve";
      j["t"] = t.to_string();
      j["lower"] = e.lower;
      j["upper"] = bound(e.upper);
      j["closed_form"] = closed;
      j["abs_err"] = err;
      out += j.dump() + "\n";
    }
  }
  return out;
}

struct VerifyArgs {
  Common common;
  std::vector<std::string> suites;
  bool all = false;
  std::size_t n = 4;
  int trials = 20;
  std::string grid;
  std::string format = "json";
};

std::string cmd_verify(const VerifyArgs& a, bool& failed) {
  if (a.all == !a.suites.empty()) throw ValidationError("give either --suite NAME or --all");
  const auto& known = verify::suite_names();
  const auto names = a.all ? known : a.suites;
  for (const auto& s : names)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw ValidationError("unknown suite '" + s + "'");
  verify::SuiteConfig cfg;
  cfg.n = a.n;
  cfg.trials = a.trials;
  cfg.seed = a.common.seed;
  cfg.budget = a.common.budget();
  if (!a.grid.empty()) cfg.grid = parse_exponents(a.grid);

  std::string out;
  if (a.format == "csv") out += "suite,passed,failed,total\r\n";
  int passed = 0, fails = 0;
  for (const auto& s : names) {
    const auto r = verify::run_suite(s, cfg);
    passed += r.passed;
    fails += r.failed;
    if (a.format == "csv") {
      out += r.name + "," + std::to_string(r.passed) + "," + std::to_string(r.failed) + "," +
             std::to_string(r.passed + r.failed) + "\r\n";
    } else {
      json j;
      j["schema"] = kSchema;
      j["command"] = "verify";
      j["suite"] = r.name;
      j["passed"] = r.passed;
      j["failed"] = r.failed;
      j["total"] = r.passed + r.failed;
      j["failures"] = r.failures;
      out += j.dump() + "\n";
    }
  }
  if (a.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["suite"] = "summary";
    j["passed"] = passed;
    j["failed"] = fails;
    j["total"] = passed + fails;
    j["seed"] = a.common.seed;
    out += j.dump() + "\n";
  }
  failed = fails > 0;
  return out;
}

struct WitnessArgs {
  Common common;
  std::string group, p, q;
  int trials = 64;
  bool general = false;
};

std::string cmd_witness(const WitnessArgs& a) {
  const auto g = GroupDescriptor::parse(a.group);
  WitnessOptions o;
  o.trials = a.trials;
  o.seed = a.common.seed;
  o.budget = a.common.budget();
  o.unimodular_only = !a.general;
  const auto w = witness_search(g, Exponent::parse(a.p), Exponent::parse(a.q), o);
  json j;
  j["schema"] = kSchema;
  j["command"] = "witness";
  j["group"] = g.name();
  j["p"] = w.p.to_string();
  j["q"] = w.q.to_string();
  j["gelfand"] = vector_json(w.element.gelfand());
  j["coeffs"] = vector_json(w.element.coeffs());
  j["lower_p"] = w.at_p.lower;
  j["upper_p"] = bound(w.at_p.upper);
  j["lower_q"] = w.at_q.lower;
  j["upper_q"] = bound(w.at_q.upper);
  j["gap_lower"] = w.gap_lower;
  return j.dump() + "\n";
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ValidationError("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split_at = 0;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  const std::string_view re = body.substr(0, split_at);
  std::string_view im = body.substr(split_at);
  double imag = 0.0;
  if (im.empty() || im == "+") imag = 1.0;
  else if (im == "-") imag = -1.0;
  else imag = parse_real(im, text);
  return {re.empty() ? 0.0 : parse_real(re, text), imag};
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
  std::vector<std::complex<double>> out;
  for (auto part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

Kernel parse_kernel(std::string_view text) {
  std::vector<std::pair<std::int64_t, cplx>> terms;
  for (auto part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw ValidationError("kernel term '" + std::string(part) + "' is not k:v");
    const auto ks = trim(part.substr(0, colon));
    std::int64_t k = 0;
    const auto [ptr, ec] = std::from_chars(ks.data(), ks.data() + ks.size(), k);
    if (ks.empty() || ec != std::errc{} || ptr != ks.data() + ks.size())
      throw ValidationError("kernel position '" + std::string(ks) + "' is not an integer");
    terms.emplace_back(k, parse_complex(part.substr(colon + 1)));
  }
  return Kernel::from_terms(terms);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms and isometry checks for L^p group algebras of Z and Z_n", "lpgn"};
  app.require_subcommand(1);

  NormArgs na;
  auto* norm = app.add_subcommand("norm", "Certified norm of one element");
  na.common.attach(norm, true);
  norm->add_option("--group", na.group, "trivial, Z or Z<n>");
  norm->add_option("--gelfand", na.gelfand, "Gelfand coordinates, e.g. \"1,i\"");
  norm->add_option("--coeffs", na.coeffs, "Convolution coefficients f(0..n-1)");
  norm->add_option("--kernel", na.kernel, "Kernel on Z as \"k:v,...\"");
  norm->add_option("--p", na.p, "Exponent, decimal or fraction")->required();
  norm->add_option("--N", na.n_half, "Truncation half-width for Z")->capture_default_str()->check(CLI::Range(1, 4096));

  CurveArgs ca;
  auto* curve = app.add_subcommand("delta-curve", "Norm of (1, i) in F^t(Z_2) over a list of t");
  ca.common.attach(curve, true);
  curve->add_option("--t", ca.ts, "Comma-separated exponents")->capture_default_str();
  curve->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run property suites");
  va.common.attach(ver, true);
  ver->add_option("--suite", va.suites, "Suite name(s)")->delimiter(',');
  ver->add_flag("--all", va.all, "Run every suite");
  ver->add_option("--n", va.n, "Group order for random elements")->capture_default_str()->check(CLI::Range(1, 64));
  ver->add_option("--trials", va.trials, "Random trials per suite")->capture_default_str()->check(CLI::NonNegativeNumber);
  ver->add_option("--grid", va.grid, "Exponent grid for the gamma suite");
  ver->add_option("--format", va.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  WitnessArgs wa;
  auto* wit = app.add_subcommand("witness", "Search for an element whose F^p and F^q norms differ");
  wa.common.attach(wit, true);
  wit->add_option("--group", wa.group, "Z<n>, n >= 2")->required();
  wit->add_option("--p", wa.p)->required();
  wit->add_option("--q", wa.q)->required();
  wit->add_option("--trials", wa.trials, "Random candidates")->capture_default_str()->check(CLI::NonNegativeNumber);
  wit->add_flag("--general", wa.general, "Allow non-unimodular Gelfand vectors");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  std::string data;
  std::string out_file;
  bool failed = false;
  try {
    if (norm->parsed()) data = cmd_norm(na), out_file = na.common.out_file;
    else if (curve->parsed()) data = cmd_delta_curve(ca), out_file = ca.common.out_file;
    else if (ver->parsed()) data = cmd_verify(va, failed), out_file = va.common.out_file;
    else data = cmd_witness(wa), out_file = wa.common.out_file;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const OutOfScopeError& e) {
    err << "error: out of scope: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsageError;
  }

  if (out_file.empty()) {
    out << data;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!(f << data)) {
      err << "error: cannot write " << out_file << "\n";
      return kUsageError;
    }
  }
  if (failed) err << "verify: assertion failures, see report\n";
  return failed ? kAssertionFailed : kOk;
}

}  // namespace lpgn::cli
