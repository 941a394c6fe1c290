// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lpgn/circle.hpp"
#include "lpgn/classify.hpp"
#include "lpgn/cli.hpp"
#include "lpgn/cyclic.hpp"
#include "lpgn/errors.hpp"
#include "lpgn/interp.hpp"
#include "lpgn/kernels.hpp"
#include "lpgn/rng.hpp"
#include "lpgn/zline.hpp"

using namespace lpgn;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I{0.0, 1.0};

Exponent Q(std::int64_t a, std::int64_t b = 1) { return Exponent::rational(a, b); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

CVector random_vector(Rng& rng, std::size_t n) {
  CVector v(n);
  for (auto& z : v) {
    const double re = rng.uniform(-1.0, 1.0);
    z = {re, rng.uniform(-1.0, 1.0)};
  }
  return v;
}

CVector random_phases(Rng& rng, std::size_t n) {
  CVector v(n);
  for (auto& z : v) z = std::polar(1.0, rng.uniform(0.0, 2 * kPi));
  return v;
}

double sup_norm(const CVector& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

cplx omega_pow(std::size_t n, std::size_t m) { return std::polar(1.0, 2 * kPi * static_cast<double>(m % n) / static_cast<double>(n)); }

// Independent lower bound on the ℓ^∞ distance to {(ζ ω^{kj})_j}: for each k,
// scan ζ on a grid and subtract the 1-Lipschitz slack.
double distance_oracle(const CVector& xi) {
  const std::size_t n = xi.size();
  constexpr int grid = 4000;
  double best = 1e300;
  for (std::size_t k = 0; k < n; ++k)
    for (int a = 0; a < grid; ++a) {
      const cplx zeta = std::polar(1.0, 2 * kPi * a / grid);
      double worst = 0.0;
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(xi[j] - zeta * omega_pow(n, k * j)));
      best = std::min(best, worst);
    }
  return best - kPi / grid;
}

Outcome c1_delta_curve() {
  Outcome o;
  const auto x = CyclicElement::from_gelfand(2, {1.0, I});
  double worst_width = 0.0, worst_time = 0.0;
  for (const auto& t : {Q(1), Q(8, 7), Q(4, 3), Q(3, 2), Q(2), Q(3), Q(4), Q(8)}) {
    const auto start = std::chrono::steady_clock::now();
    const auto e = cyclic::norm(x, t);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double closed = std::pow(2.0, std::abs(1.0 / t.value() - 0.5));
    worst_width = std::max(worst_width, e.width());
    worst_time = std::max(worst_time, secs);
    if (!e.contains(closed)) o.fail("t=" + t.to_string() + fmt(": [%.17g, %.17g] misses %.17g", e.lower, e.upper, closed));
    if (e.width() > 1e-6) o.fail("t=" + t.to_string() + fmt(": width %.3g", e.width()));
    if (secs > 1.0) o.fail("t=" + t.to_string() + fmt(": %.3f s", secs));
  }
  if (o.pass) o.detail = fmt("8 points, max width %.2g, max time %.3f s", worst_width, worst_time);
  return o;
}

Outcome c2_sup_norm() {
  Outcome o;
  Rng rng(2002);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 7);
    const auto xi = random_vector(rng, n);
    const auto e = cyclic::norm(CyclicElement::from_gelfand(n, xi), Q(2));
    const double err = std::max(std::abs(e.lower - sup_norm(xi)), std::abs(e.upper - sup_norm(xi)));
    worst = std::max(worst, err);
    if (err > 1e-10) o.fail(fmt("trial %g: error %.3g", t, err));
  }
  if (o.pass) o.detail = fmt("100 elements, max |norm - sup| = %.2g", worst);
  return o;
}

Outcome c3_shift() {
  Outcome o;
  Rng rng(3003);
  const std::vector<Exponent> ps{Q(1), Q(13, 10), Q(17, 10), Q(2), Q(5, 2)};
  int checks = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    const auto x = CyclicElement::from_gelfand(n, random_vector(rng, n));
    const auto y = cyclic::shift_auto(x);
    for (const auto& p : ps) {
      const auto a = cyclic::norm(x, p), b = cyclic::norm(y, p);
      ++checks;
      if (!NormEstimate::overlap(a, b, 1e-6))
        o.fail("p=" + p.to_string() + fmt(": [%.17g, %.17g] vs [%.17g, ...]", a.lower, a.upper, b.lower));
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " interval pairs overlap";
  return o;
}

Outcome c4_gamma() {
  Outcome o;
  Rng rng(4004);
  const std::vector<Exponent> grid{Q(1), Q(5, 4), Q(3, 2), Q(7, 4), Q(2)};
  int checks = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto x = CyclicElement::from_gelfand(n, random_vector(rng, n));
      std::vector<NormEstimate> est;
      for (const auto& p : grid) est.push_back(cyclic::norm(x, p));
      for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i; j < grid.size(); ++j) {
          ++checks;
          if (est[j].lower > est[i].upper + 1e-8)
            o.fail(fmt("n=%g: lower(q) %.17g > upper(p) %.17g", static_cast<double>(n), est[j].lower, est[i].upper));
        }
    }
  if (o.pass) o.detail = std::to_string(checks) + " ordered pairs satisfy lower_q <= upper_p";
  return o;
}

Outcome c5_duality() {
  Outcome o;
  Rng rng(5005);
  int checks = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const auto x = CyclicElement::from_gelfand(n, random_vector(rng, n));
    for (const auto& p : {Q(6, 5), Q(3, 2), Q(9, 5)}) {
      const auto a = cyclic::norm(x, p), b = cyclic::norm(x, p.conjugate());
      ++checks;
      if (!NormEstimate::overlap(a, b, 1e-6))
        o.fail("p=" + p.to_string() + fmt(": [%.17g, %.17g] vs [%.17g, ...]", a.lower, a.upper, b.lower));
    }
  }
  // T_N(f^♯) = T_N(f)ᵀ entrywise; the norm identity follows from it.
  double worst = 0.0;
  const std::vector<Kernel> kernels{Kernel(0, {1.0, I}), Kernel(-2, {0.5, I, -1.0, 2.0, cplx(0.3, -0.7)}),
                                    Kernel(1, random_vector(rng, 4))};
  for (const auto& f : kernels)
    for (int n_half = 1; n_half <= 64; ++n_half) {
      const auto lhs = zline::toeplitz_truncation(zline::sharp(f), n_half);
      const auto rhs = zline::toeplitz_truncation(f, n_half).transpose();
      worst = std::max(worst, CMatrix::max_abs_diff(lhs, rhs));
      ++checks;
      if (n_half <= 6) {
        const auto a = norm_certified(zline::toeplitz_truncation(f, n_half), Q(3, 2));
        const auto b = norm_certified(lhs, Q(3));
        if (!NormEstimate::overlap(a, b, 1e-8)) o.fail(fmt("N=%g: truncation norms disagree", n_half));
      }
    }
  if (worst > 1e-8) o.fail(fmt("sharp/transpose mismatch %.3g", worst));
  if (o.pass) o.detail = std::to_string(checks) + " checks, max sharp/transpose mismatch " + fmt("%.2g", worst);
  return o;
}

Outcome c6_logconvex() {
  Outcome o;
  Rng rng(6006);
  const std::vector<Exponent> ps{Q(1), Q(4, 3), Q(3, 2), Q(2)};
  std::size_t violations = 0;
  for (int t = 0; t < 100; ++t) {
    const auto rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    const CMatrix a(rows, cols, random_vector(rng, rows * cols));
    std::vector<std::pair<Exponent, NormEstimate>> samples;
    for (const auto& p : ps) samples.emplace_back(p, norm_certified(a, p));
    violations += check_logconvex(samples, 1e-8).size();
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  else o.detail = "100 matrices, 0 violations";
  return o;
}

Outcome c7_isometries() {
  Outcome o;
  Rng rng(7007);
  const auto p = Q(3, 2);
  int forms = 0;
  double worst_width = 0.0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 0; k < n; ++k)
      for (int s = 0; s < 20; ++s) {
        const cplx zeta = std::polar(1.0, rng.uniform(0.0, 2 * kPi));
        CVector xi(n);
        for (std::size_t j = 0; j < n; ++j) xi[j] = zeta * omega_pow(n, k * j);
        const auto x = CyclicElement::from_gelfand(n, xi);
        const auto e = cyclic::norm(x, p);
        const auto cls = cyclic::classify_isometry(x, p);
        ++forms;
        worst_width = std::max(worst_width, e.width());
        if (!e.contains(1.0) || e.width() > 1e-6)
          o.fail(fmt("n=%g k=%g: [%.17g, ...]", static_cast<double>(n), static_cast<double>(k), e.lower));
        if (!cls.is_isometry || cls.witness->k != k) o.fail(fmt("n=%g k=%g not classified", static_cast<double>(n), static_cast<double>(k)));
      }
  double min_lower = 1e300;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    CVector xi = random_phases(rng, n);
    while (distance_oracle(xi) < 0.1) xi = random_phases(rng, n);
    const auto x = CyclicElement::from_gelfand(n, xi);
    const auto e = cyclic::norm(x, p);
    min_lower = std::min(min_lower, e.lower);
    if (!(e.lower > 1.0 + 1e-4)) o.fail(fmt("non-isometry n=%g lower %.17g", static_cast<double>(n), e.lower));
    if (cyclic::classify_isometry(x, p).is_isometry) o.fail("non-isometry classified as isometry");
  }
  if (o.pass)
    o.detail = std::to_string(forms) + fmt(" isometries (max width %.2g); 100 non-isometries, min lower %.6f", worst_width, min_lower);
  return o;
}

Outcome c8_toeplitz() {
  Outcome o;
  const std::vector<Kernel> kernels{Kernel(0, {1.0, 1.0}), Kernel(0, {1.0, 1.0, I})};
  std::string summary;
  for (const auto& f : kernels) {
    // Independent symbol oracle on a dense grid.
    double oracle = 0.0;
    for (int j = 0; j < 1 << 20; ++j) {
      const double th = 2 * kPi * j / double(1 << 20);
      cplx s{};
      for (std::int64_t k = f.support_lo(); k <= f.support_hi(); ++k) s += f(k) * std::polar(1.0, th * double(k));
      oracle = std::max(oracle, std::abs(s));
    }
    double prev = 0.0;
    for (int n_half = 4; n_half <= 256; n_half *= 2) {
      const double lower = zline::norm_lambda_lower(f, Q(2), n_half).lower;
      if (lower < prev - 1e-12) o.fail(fmt("N=%g: %.17g after %.17g", n_half, lower, prev));
      prev = lower;
    }
    const double sup = zline::symbol_sup(f).value;
    if (std::abs(sup - oracle) > 1e-9) o.fail(fmt("symbol sup %.17g vs oracle %.17g", sup, oracle));
    if (std::abs(prev - sup) > 1e-2) o.fail(fmt("lower_256 %.17g vs sup %.17g", prev, sup));
    summary += fmt("sup %.6f lower_256 %.6f; ", sup, prev);
  }
  if (o.pass) o.detail = summary.substr(0, summary.size() - 2);
  return o;
}

Outcome c9_truth_table() {
  Outcome o;
  enum class Rep { yes, no, out_of_scope };
  struct Row {
    GroupDescriptor g;
    const char* p;
    const char* q;
    Rep rep;
    bool iso;
  };
  const auto Z = GroupDescriptor::integers();
  const auto T = GroupDescriptor::trivial();
  const auto C = [](std::size_t n) { return GroupDescriptor::cyclic(n); };
  const std::vector<Row> rows{
      {Z, "4/3", "4", Rep::yes, true},         {T, "1.7", "3", Rep::yes, true},
      {C(2), "1.5", "1.2", Rep::no, false},    {Z, "3/2", "3", Rep::yes, true},
      {Z, "2", "3", Rep::yes, false},          {C(3), "2", "5/4", Rep::yes, false},
      {Z, "1", "2", Rep::no, false},           {C(2), "4", "4/3", Rep::yes, true},
      {C(5), "3/2", "3/2", Rep::yes, true},    {Z, "6/5", "6", Rep::yes, true},
      {Z, "6/5", "5", Rep::no, false},         {C(4), "3", "3/2", Rep::yes, true},
      {C(4), "3", "2", Rep::no, false},        {C(2), "2", "2", Rep::yes, true},
      {T, "1", "2", Rep::yes, true},           {Z, "1.5", "1", Rep::out_of_scope, false},
      {C(3), "2", "1", Rep::out_of_scope, false}, {T, "3", "1", Rep::out_of_scope, true},
      {Z, "1", "1.5", Rep::no, false},         {C(7), "5/3", "5/2", Rep::yes, true},
  };
  int ok = 0;
  for (const auto& r : rows) {
    const auto p = Exponent::parse(r.p), q = Exponent::parse(r.q);
    Rep got;
    try {
      got = representable(r.g, p, q) ? Rep::yes : Rep::no;
    } catch (const OutOfScopeError&) {
      got = Rep::out_of_scope;
    }
    const bool iso = isomorphic_group_algebras(r.g, p, q);
    if (got == r.rep && iso == r.iso) ++ok;
    else o.fail(r.g.name() + " p=" + r.p + " q=" + r.q + " mismatch");
  }
  if (o.pass) o.detail = std::to_string(ok) + "/20 rows match";
  return o;
}

std::optional<double> witness_gap(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != 0) return std::nullopt;
  return nlohmann::json::parse(out.str().substr(0, out.str().find('\n')))["gap_lower"].get<double>();
}

Outcome c10_witness() {
  Outcome o;
  const auto a = witness_gap({"witness", "--group", "Z2", "--p", "1", "--q", "2"});
  const auto b = witness_gap({"witness", "--group", "Z2", "--p", "4/3", "--q", "3/2"});
  const double want_a = std::sqrt(2.0) - 1, want_b = std::pow(2.0, 0.25) - std::pow(2.0, 1.0 / 6);
  if (!a || *a < want_a - 1e-6) o.fail(fmt("Z2 (1,2): gap %.17g < %.17g", a.value_or(-1), want_a));
  if (!b || *b < want_b - 1e-6) o.fail(fmt("Z2 (4/3,3/2): gap %.17g < %.17g", b.value_or(-1), want_b));
  if (o.pass) o.detail = fmt("gaps %.12f and %.12f", *a, *b);
  return o;
}

Outcome c11_antipodal() {
  Outcome o;
  const double tol = 1e-10;
  const auto quad = circle::antipodal_point(MonotoneCircleMap::from_function([](double t) { return t * t / (2 * kPi); }), tol);
  if (std::abs(quad.t - kPi / 2) > 1e-8) o.fail(fmt("quadratic t* = %.17g", quad.t));
  const auto id = circle::antipodal_point(MonotoneCircleMap::from_function([](double t) { return t; }), tol);
  if (id.t != 0.0) o.fail(fmt("identity t* = %.17g", id.t));
  Rng rng(1111);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto knots = 1 + rng.below(12);
    std::vector<double> ts, hs;
    for (std::uint64_t i = 0; i < knots; ++i) ts.push_back(rng.uniform(0.0, 2 * kPi)), hs.push_back(rng.uniform(0.0, 2 * kPi));
    std::sort(ts.begin(), ts.end());
    std::sort(hs.begin(), hs.end());
    std::vector<std::pair<double, double>> table{{0.0, 0.0}};
    for (std::size_t i = 0; i < ts.size(); ++i) table.emplace_back(ts[i], hs[i]);
    table.emplace_back(2 * kPi, 2 * kPi);
    const auto h = MonotoneCircleMap::from_table(table);
    const auto r = circle::antipodal_point(h, tol);
    // Residual recomputed from the map, not taken from the solver.
    const double res = std::abs((h(r.t + kPi) - h(r.t)) / kPi - 1.0);
    worst = std::max(worst, res);
    if (res > 1e-8) o.fail(fmt("map %g: residual %.3g", t, res));
  }
  if (o.pass) o.detail = fmt("quadratic t* = %.15f, identity t* = %g, 50 maps max residual %.2g", quad.t, id.t, worst);
  return o;
}

Outcome c12_reproducible() {
  Outcome o;
  const std::vector<std::string> args{"verify", "--all", "--seed", "7"};
  std::ostringstream out1, err1, out2, err2;
  const int code1 = cli::run(args, out1, err1);
  kernels::set_thread_cap(2);
  const int code2 = cli::run(args, out2, err2);
  kernels::set_thread_cap(0);
  if (out1.str() != out2.str()) o.fail("reports differ");
  if (code1 != code2) o.fail("exit codes differ");
  if (code1 != 0) o.fail("verify --all reported failures: " + err1.str());
  if (o.pass) o.detail = std::to_string(out1.str().size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"delta-curve reproduction", c1_delta_curve},
      {"F^2(Z_n) equals the sup norm", c2_sup_norm},
      {"shift invariance", c3_shift},
      {"gamma monotonicity", c4_gamma},
      {"duality", c5_duality},
      {"Riesz-Thorin log-convexity", c6_logconvex},
      {"isometry classification", c7_isometries},
      {"Toeplitz convergence at p=2", c8_toeplitz},
      {"oracle truth table", c9_truth_table},
      {"witness soundness", c10_witness},
      {"antipodal solver", c11_antipodal},
      {"reproducibility", c12_reproducible},
  };
  int failed = 0, idx = 0;
  for (const auto& [name, fn] : criteria) {
    ++idx;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", idx, name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
