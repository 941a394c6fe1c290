#include <doctest.h>

#include <cmath>

#include "lpgn/errors.hpp"
#include "lpgn/exponent.hpp"

using lpgn::Exponent;

TEST_SUITE("exponent") {
  TEST_CASE("parse forms") {
    CHECK(Exponent::parse("4/3").exact() == lpgn::Rational{4, 3});
    CHECK(Exponent::parse("1.5").exact() == lpgn::Rational{3, 2});
    CHECK(Exponent::parse(" 1.25 ").exact() == lpgn::Rational{5, 4});
    CHECK(Exponent::parse("inf").is_infinite());
    CHECK(Exponent::parse("2").is_exactly(2));
    CHECK(Exponent::parse("8/6").exact() == lpgn::Rational{4, 3});
    CHECK(Exponent::parse("1e0").is_exactly(1));
    CHECK(Exponent::parse("1.7").value() == doctest::Approx(1.7));
  }

  TEST_CASE("parse rejects junk and p < 1") {
    CHECK_THROWS_AS(Exponent::parse("abc"), lpgn::ValidationError);
    CHECK_THROWS_AS(Exponent::parse("0.5"), lpgn::ValidationError);
    CHECK_THROWS_AS(Exponent::parse("3/4"), lpgn::ValidationError);
    CHECK_THROWS_AS(Exponent::parse("1/0"), lpgn::ValidationError);
    CHECK_THROWS_AS(Exponent::parse(""), lpgn::ValidationError);
    CHECK_THROWS_AS(Exponent::from_double(std::nan("")), lpgn::ValidationError);
  }

  TEST_CASE("conjugates") {
    CHECK(Exponent::parse("4/3").conjugate().is_exactly(4));
    CHECK(Exponent::parse("1").conjugate().is_infinite());
    CHECK(Exponent::infinity().conjugate().is_exactly(1));
    CHECK(Exponent::parse("2").conjugate().is_exactly(2));
    CHECK(Exponent::parse("3/2").conjugate().is_exactly(3));
    const auto c = Exponent::from_double(1.7).conjugate();
    CHECK(1.0 / 1.7 + c.reciprocal() == doctest::Approx(1.0));
  }

  TEST_CASE("distance to one half is exact on fractions") {
    CHECK(Exponent::same_distance_to_half(Exponent::parse("4/3"), Exponent::parse("4")));
    CHECK(Exponent::same_distance_to_half(Exponent::parse("1"), Exponent::infinity()));
    CHECK_FALSE(Exponent::same_distance_to_half(Exponent::parse("3/2"), Exponent::parse("6/5")));
    CHECK(Exponent::same_distance_to_half(Exponent::parse("1.5"), Exponent::parse("3")));
    // Fractions a double cannot separate still compare exactly.
    CHECK_FALSE(Exponent::same_distance_to_half(Exponent::rational(1000000000000001, 1000000000000000),
                                                Exponent::rational(1000000000000002, 1000000000000001)));
  }

  TEST_CASE("to_string round trip") {
    for (const char* s : {"1", "4/3", "inf", "8/7", "5/2"}) CHECK(Exponent::parse(s).to_string() == s);
  }
}
