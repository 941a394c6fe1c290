#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpgn/classify.hpp"
#include "lpgn/errors.hpp"

using namespace lpgn;

namespace {

Exponent P(const char* s) { return Exponent::parse(s); }

// ‖inverse DFT(ξ)‖_1 by direct summation.
double l1_of_coeffs(const CVector& xi) {
  const std::size_t n = xi.size();
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx c{};
    for (std::size_t j = 0; j < n; ++j) c += xi[j] * std::polar(1.0, -2 * std::numbers::pi * double(j * k) / double(n));
    s += std::abs(c) / double(n);
  }
  return s;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("group descriptors") {
    CHECK(GroupDescriptor::parse("Z").kind == GroupDescriptor::Kind::integers);
    CHECK(GroupDescriptor::parse("Z5").n == 5);
    CHECK(GroupDescriptor::parse("Z1").kind == GroupDescriptor::Kind::trivial);
    CHECK(GroupDescriptor::parse("trivial").name() == "trivial");
    CHECK(GroupDescriptor::cyclic(7).name() == "Z7");
    CHECK_THROWS_AS(GroupDescriptor::parse("Q8"), ValidationError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z0"), ValidationError);
    CHECK_THROWS_AS(GroupDescriptor::cyclic(1), ValidationError);
  }

  TEST_CASE("representability oracle") {
    const auto Z = GroupDescriptor::integers();
    CHECK(representable(Z, P("4/3"), P("4")));
    CHECK(representable(GroupDescriptor::trivial(), P("1.7"), P("3")));
    CHECK_FALSE(representable(GroupDescriptor::cyclic(2), P("1.5"), P("1.2")));
    CHECK(representable(Z, P("2"), P("3")));
    CHECK_THROWS_AS(representable(Z, P("2"), P("1")), OutOfScopeError);
    CHECK_THROWS_AS(representable(Z, P("2"), Exponent::infinity()), ValidationError);
  }

  TEST_CASE("oracle symmetry under conjugation") {
    const char* ps[] = {"1", "6/5", "4/3", "3/2", "2", "3", "4", "5/2"};
    for (const auto* a : ps)
      for (const auto* b : ps) {
        const auto p = P(a), q = P(b);
        if (q.is_exactly(1)) continue;
        const auto g = GroupDescriptor::cyclic(3);
        const bool base = representable(g, p, q);
        if (!p.is_exactly(1)) CHECK(representable(g, p.conjugate(), q) == base);
        if (!q.conjugate().is_exactly(1) && !q.conjugate().is_infinite())
          CHECK(representable(g, p, q.conjugate()) == base);
      }
  }

  TEST_CASE("isomorphism oracle") {
    const auto Z = GroupDescriptor::integers();
    CHECK(isomorphic_group_algebras(Z, P("3/2"), P("3")));
    CHECK(isomorphic_group_algebras(Z, P("1.9"), P("1.9")));
    CHECK_FALSE(isomorphic_group_algebras(GroupDescriptor::cyclic(2), P("1"), P("2")));
    CHECK(isomorphic_group_algebras(GroupDescriptor::trivial(), P("1"), P("2")));
    CHECK(isomorphic_group_algebras(Z, P("1"), Exponent::infinity()));
  }

  TEST_CASE("witnesses on Z_2 match the closed form") {
    const auto g = GroupDescriptor::cyclic(2);
    WitnessOptions o;
    o.trials = 8;
    const auto w = witness_search(g, P("1"), P("2"), o);
    CHECK(w.gap_lower >= std::sqrt(2.0) - 1 - 1e-6);
    const auto w2 = witness_search(g, P("4/3"), P("3/2"), o);
    CHECK(w2.gap_lower >= std::pow(2.0, 0.25) - std::pow(2.0, 1.0 / 6) - 1e-6);
    CHECK_FALSE(isomorphic_group_algebras(g, w2.p, w2.q));
    CHECK(w2.gap_lower <= std::abs(w2.at_p.midpoint() - w2.at_q.midpoint()) + w2.at_p.width() + w2.at_q.width());
  }

  TEST_CASE("witness on Z_3 against an exhaustive phase grid") {
    // At p = 1 and q = 2 both norms are closed forms: ‖coeffs‖_1 and 1.
    double oracle = 0.0;
    constexpr int m = 96;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const CVector xi{1.0, std::polar(1.0, 2 * std::numbers::pi * a / m), std::polar(1.0, 2 * std::numbers::pi * b / m)};
        oracle = std::max(oracle, l1_of_coeffs(xi) - 1.0);
      }
    WitnessOptions o;
    o.trials = 500;
    const auto w = witness_search(GroupDescriptor::cyclic(3), P("1"), P("2"), o);
    CHECK(w.gap_lower > 0.0);
    CHECK(w.gap_lower <= oracle + 0.05);
    CHECK(w.gap_lower >= 0.5 * oracle);
    CHECK(std::abs(w.gap_lower - (l1_of_coeffs(w.element.gelfand()) - 1.0)) <= 1e-9);
  }

  TEST_CASE("witness search rejects isomorphic exponents and bad groups") {
    CHECK_THROWS_AS(witness_search(GroupDescriptor::cyclic(2), P("1.5"), P("3")), ValidationError);
    CHECK_THROWS_AS(witness_search(GroupDescriptor::integers(), P("1"), P("2")), ValidationError);
    CHECK_THROWS_AS(witness_search(GroupDescriptor::trivial(), P("1"), P("2")), ValidationError);
  }

  TEST_CASE("witness search is seed-deterministic") {
    WitnessOptions o;
    o.trials = 10;
    o.seed = 3;
    const auto a = witness_search(GroupDescriptor::cyclic(4), P("6/5"), P("2"), o);
    const auto b = witness_search(GroupDescriptor::cyclic(4), P("6/5"), P("2"), o);
    CHECK(a.gap_lower == b.gap_lower);
    CHECK(a.element.gelfand() == b.element.gelfand());
  }
}
