#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lpgn {

/// Positive rational num/den in lowest terms.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A Hölder exponent p in [1, ∞].
///
/// Exponents built from integer fractions keep the exact fraction alongside
/// the double value, so that conjugate pairs such as 4/3 and 4 compare
/// exactly. Infinity is a valid matrix exponent; group-algebra code rejects
/// it at its own boundary.
class Exponent {
public:
  /// Exponent 2.
  Exponent();

  static Exponent from_double(double p);
  static Exponent rational(std::int64_t num, std::int64_t den);
  static Exponent infinity();

  /// Accepts "1.5", "4/3", "inf" / "infinity".
  static Exponent parse(std::string_view text);

  double value() const { return value_; }
  /// 1/p, with 1/∞ = 0.
  double reciprocal() const;
  bool is_infinite() const { return infinite_; }
  const std::optional<Rational>& exact() const { return exact_; }

  /// Hölder conjugate p' with 1/p + 1/p' = 1.
  Exponent conjugate() const;

  /// |1/p - 1/2|; equal for p and its conjugate.
  double distance_to_half() const;

  std::string to_string() const;

  /// Exact comparison of |1/p - 1/2| against |1/q - 1/2| when both exponents
  /// are exact (rational or infinite); otherwise compares doubles within `tol`.
  static bool same_distance_to_half(const Exponent& p, const Exponent& q, double tol = 1e-15);

  /// p == q, exactly when possible.
  static bool equal(const Exponent& p, const Exponent& q, double tol = 1e-15);

  bool is_exactly(std::int64_t integer) const;

private:
  double value_ = 2.0;
  bool infinite_ = false;
  std::optional<Rational> exact_;
};

}  // namespace lpgn
