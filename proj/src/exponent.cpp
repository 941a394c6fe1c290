#include "lpgn/exponent.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "lpgn/errors.hpp"

namespace lpgn {
namespace {

using i128 = __int128;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ValidationError("malformed exponent '" + std::string(whole) + "'");
  return v;
}

// |2*den - num| / (2*num) as a fraction; infinity maps to 1/2.
struct HalfDistance {
  i128 num;
  i128 den;
};

HalfDistance half_distance(const Exponent& p) {
  if (p.is_infinite()) return {1, 2};
  const auto& r = *p.exact();
  i128 n = 2 * static_cast<i128>(r.den) - r.num;
  if (n < 0) n = -n;
  return {n, 2 * static_cast<i128>(r.num)};
}

bool is_exact(const Exponent& p) { return p.is_infinite() || p.exact().has_value(); }

}  // namespace

Exponent::Exponent() : value_(2.0), exact_(Rational{2, 1}) {}

Exponent Exponent::from_double(double p) {
  if (std::isnan(p) || p < 1.0)
    throw ValidationError("exponent must lie in [1, inf], got " + std::to_string(p));
  if (std::isinf(p)) return infinity();
  Exponent e;
  e.value_ = p;
  e.infinite_ = false;
  e.exact_.reset();
  // Integers are exact as doubles; record them as fractions too.
  if (p == std::floor(p) && p < 9.0e15) e.exact_ = Rational{static_cast<std::int64_t>(p), 1};
  return e;
}

Exponent Exponent::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("exponent fraction has zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < den)
    throw ValidationError("exponent must lie in [1, inf], got " + std::to_string(num) + "/" +
                          std::to_string(den));
  const std::int64_t g = std::gcd(num, den);
  Exponent e;
  e.exact_ = Rational{num / g, den / g};
  e.value_ = static_cast<double>(e.exact_->num) / static_cast<double>(e.exact_->den);
  e.infinite_ = false;
  return e;
}

Exponent Exponent::infinity() {
  Exponent e;
  e.value_ = std::numeric_limits<double>::infinity();
  e.infinite_ = true;
  e.exact_.reset();
  return e;
}

Exponent Exponent::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "infinity" || s == "Inf" || s == "oo") return infinity();
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    return rational(parse_int(trim(s.substr(0, slash)), s), parse_int(trim(s.substr(slash + 1)), s));
  }
  // Plain decimals ("1.25") are read as exact fractions.
  if (const auto dot = s.find('.');
      dot != std::string_view::npos && s.find_first_not_of("0123456789.") == std::string_view::npos &&
      s.size() <= 16 && s.find('.', dot + 1) == std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, s);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, s);
    return rational(whole * scale + frac, scale);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ValidationError("malformed exponent '" + std::string(text) + "'");
  return from_double(v);
}

double Exponent::reciprocal() const {
  if (infinite_) return 0.0;
  if (exact_) return static_cast<double>(exact_->den) / static_cast<double>(exact_->num);
  return 1.0 / value_;
}

Exponent Exponent::conjugate() const {
  if (infinite_) return rational(1, 1);
  if (exact_) {
    if (exact_->num == exact_->den) return infinity();
    return rational(exact_->num, exact_->num - exact_->den);
  }
  if (value_ == 1.0) return infinity();
  return from_double(value_ / (value_ - 1.0));
}

double Exponent::distance_to_half() const { return std::abs(reciprocal() - 0.5); }

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  if (exact_) {
    if (exact_->den == 1) return std::to_string(exact_->num);
    return std::to_string(exact_->num) + "/" + std::to_string(exact_->den);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

bool Exponent::same_distance_to_half(const Exponent& p, const Exponent& q, double tol) {
  if (is_exact(p) && is_exact(q)) {
    const auto a = half_distance(p);
    const auto b = half_distance(q);
    return a.num * b.den == b.num * a.den;
  }
  return std::abs(p.distance_to_half() - q.distance_to_half()) <= tol;
}

bool Exponent::equal(const Exponent& p, const Exponent& q, double tol) {
  if (p.is_infinite() || q.is_infinite()) return p.is_infinite() && q.is_infinite();
  if (p.exact() && q.exact()) return *p.exact() == *q.exact();
  return std::abs(p.reciprocal() - q.reciprocal()) <= tol;
}

bool Exponent::is_exactly(std::int64_t integer) const {
  if (infinite_) return false;
  if (exact_) return exact_->den == 1 && exact_->num == integer;
  return value_ == static_cast<double>(integer);
}

}  // namespace lpgn
