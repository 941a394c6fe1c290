#include "lpgn/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <vector>

#include "lpgn/errors.hpp"
#include "lpgn/kernels.hpp"
#include "lpgn/rng.hpp"

namespace lpgn {

GroupDescriptor GroupDescriptor::trivial() { return {}; }

GroupDescriptor GroupDescriptor::cyclic(std::size_t n) {
  if (n < 2) throw ValidationError("Z_n needs n >= 2 (use the trivial group for n = 1)");
  GroupDescriptor g;
  g.kind = Kind::cyclic_finite;
  g.n = n;
  return g;
}

GroupDescriptor GroupDescriptor::integers() {
  GroupDescriptor g;
  g.kind = Kind::integers;
  return g;
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  if (text == "trivial" || text == "1") return trivial();
  if (text == "Z") return integers();
  if (text.size() >= 2 && text[0] == 'Z') {
    std::size_t n = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data() + 1, end, n);
    if (ec == std::errc{} && ptr == end && n >= 1) return n == 1 ? trivial() : cyclic(n);
  }
  throw ValidationError("unknown group '" + std::string(text) + "' (expected trivial, Z or Z<n>)");
}

std::string GroupDescriptor::name() const {
  switch (kind) {
    case Kind::trivial: return "trivial";
    case Kind::integers: return "Z";
    case Kind::cyclic_finite: return "Z" + std::to_string(n);
  }
  return "?";
}

bool representable(const GroupDescriptor& g, const Exponent& p, const Exponent& q) {
  if (p.is_infinite() || q.is_infinite()) throw ValidationError("representability needs finite p and q");
  if (q.value() <= 1.0) throw OutOfScopeError("representability is only classified for q > 1, got q = " + q.to_string());
  if (g.kind == GroupDescriptor::Kind::trivial) return true;
  if (Exponent::same_distance_to_half(p, q)) return true;
  return p.is_exactly(2) && g.abelian;
}

bool isomorphic_group_algebras(const GroupDescriptor& g, const Exponent& p, const Exponent& q) {
  return g.kind == GroupDescriptor::Kind::trivial || Exponent::same_distance_to_half(p, q);
}

namespace {

struct Scored {
  NormEstimate at_p;
  NormEstimate at_q;
  double gap_lower = 0.0;
  double gap_mid = 0.0;
};

double separation(const NormEstimate& a, const NormEstimate& b) {
  return std::max({0.0, a.lower - b.upper, b.lower - a.upper});
}

}  // namespace

Witness witness_search(const GroupDescriptor& g, const Exponent& p, const Exponent& q, const WitnessOptions& opts) {
  if (g.kind != GroupDescriptor::Kind::cyclic_finite) throw ValidationError("witness search needs a group Z_n with n >= 2");
  if (p.is_infinite() || q.is_infinite()) throw ValidationError("witness search needs finite p and q");
  if (isomorphic_group_algebras(g, p, q))
    throw ValidationError("|1/p - 1/2| = |1/q - 1/2| for p = " + p.to_string() + ", q = " + q.to_string() +
                          ": the algebras are isometrically isomorphic, so no witness exists");
  if (opts.trials < 0) throw ValidationError("trials must be >= 0");

  const std::size_t n = g.n;
  std::vector<CVector> candidates;
  CVector alternating(n), powers(n);
  const cplx i{0.0, 1.0};
  for (std::size_t j = 0; j < n; ++j) {
    alternating[j] = j % 2 == 0 ? cplx{1.0} : i;
    powers[j] = std::pow(i, static_cast<int>(j % 4));
  }
  candidates.push_back(alternating);
  if (n > 2) candidates.push_back(powers);  // both are (1, i) when n = 2

  Rng rng(opts.seed);
  for (int t = 0; t < opts.trials; ++t) {
    CVector xi(n);
    for (auto& z : xi) {
      const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double radius = opts.unimodular_only ? 1.0 : rng.uniform(0.0, 1.0);
      z = std::polar(radius, phase);
    }
    candidates.push_back(std::move(xi));
  }

  std::vector<Scored> scored(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::thread_cap())
  for (std::int64_t c = 0; c < count; ++c) {
    const auto idx = static_cast<std::size_t>(c);
    try {
      NormBudget budget = opts.budget;
      budget.boyd.seed = opts.budget.boyd.seed + static_cast<std::uint64_t>(idx);
      const auto x = CyclicElement::from_gelfand(n, candidates[idx]);
      Scored s;
      s.at_p = cyclic::norm(x, p, budget);
      s.at_q = cyclic::norm(x, q, budget);
      s.gap_lower = separation(s.at_p, s.at_q);
      s.gap_mid = std::abs(s.at_p.midpoint() - s.at_q.midpoint());
      scored[idx] = std::move(s);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t best = 0;
  for (std::size_t c = 1; c < scored.size(); ++c) {
    const auto& a = scored[c];
    const auto& b = scored[best];
    if (a.gap_lower > b.gap_lower || (a.gap_lower == b.gap_lower && a.gap_mid > b.gap_mid)) best = c;
  }
  return Witness{g,
                 CyclicElement::from_gelfand(n, candidates[best]),
                 p,
                 q,
                 std::move(scored[best].at_p),
                 std::move(scored[best].at_q),
                 scored[best].gap_lower};
}

}  // namespace lpgn
