#pragma once

#include <string>
#include <string_view>

namespace polytorus {

/// A Lebesgue exponent in [1, infinity]. Infinity is a distinguished state,
/// never a large float, so that its conjugate is exactly 1.
class Exponent {
 public:
  /// Throws std::domain_error unless value is finite and >= 1.
  explicit Exponent(double value);
  static Exponent infinity() noexcept { return Exponent(); }
  /// Accepts a decimal number, a fraction "a/b", "inf", "infinity" or "oo".
  static Exponent parse(std::string_view text);

  bool isInfinite() const noexcept { return infinite_; }
  /// The finite value, or +infinity.
  double value() const noexcept;
  /// 1/value, exactly 0 for infinity.
  double reciprocal() const noexcept;
  /// The Hölder conjugate: 1 <-> infinity, otherwise v / (v - 1).
  Exponent conjugate() const;

  std::string toString() const;

  bool operator==(const Exponent& other) const noexcept = default;

 private:
  Exponent() noexcept : infinite_(true) {}

  bool infinite_ = false;
  double value_ = 0.0;
};

bool operator<(const Exponent& a, const Exponent& b) noexcept;
inline bool operator<=(const Exponent& a, const Exponent& b) noexcept { return !(b < a); }

/// Exponents (p, q, r) with r the conjugate of q: 1/q + 1/r = 1, and r = 1
/// exactly when q is infinite.
struct ExponentTriple {
  double p;
  Exponent q;
  double r;

  /// Requires 1 < q (q = 1 has no finite conjugate) and p >= 1.
  static ExponentTriple make(double p, Exponent q);
};

}  // namespace polytorus
