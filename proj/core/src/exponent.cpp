#include "polytorus/exponent.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace polytorus {

Exponent::Exponent(double value) : value_(value) {
  if (!std::isfinite(value) || value < 1.0) {
    throw std::domain_error("exponent must be finite and >= 1, got " + std::to_string(value));
  }
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "oo") return infinity();
  auto number = [&](std::string_view part) {
    double v = 0.0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw std::invalid_argument("cannot parse exponent '" + std::string(text) + "'");
    }
    return v;
  };
  // "a/b" is accepted for fractions such as 4/3.
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Exponent(number(text.substr(0, slash)) / number(text.substr(slash + 1)));
  }
  return Exponent(number(text));
}

double Exponent::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double Exponent::reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

Exponent Exponent::conjugate() const {
  if (infinite_) return Exponent(1.0);
  if (value_ == 1.0) return infinity();
  const double v = value_ / (value_ - 1.0);
  // Conjugates of values like 4/3 should land exactly on the integer.
  const double nearest = std::round(v);
  if (std::abs(v - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * v) return Exponent(nearest);
  return Exponent(v);
}

std::string Exponent::toString() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

bool operator<(const Exponent& a, const Exponent& b) noexcept {
  if (a.isInfinite()) return false;
  if (b.isInfinite()) return true;
  return a.value() < b.value();
}

ExponentTriple ExponentTriple::make(double p, Exponent q) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("ExponentTriple: p must be finite and >= 1");
  }
  if (!q.isInfinite() && q.value() == 1.0) {
    throw std::domain_error("ExponentTriple: q must exceed 1");
  }
  return {p, q, q.conjugate().value()};
}

}  // namespace polytorus
