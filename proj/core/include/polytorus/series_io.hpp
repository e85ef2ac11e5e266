#pragma once

#include <string>
#include <string_view>

#include "polytorus/fourier_series.hpp"

namespace polytorus {

/// Canonical JSON form of a series:
///   {"dim":d,"terms":[{"alpha":[...],"im":y,"re":x},...]}
/// Terms appear in multi-index order (lexicographic on zero-padded indices),
/// alpha is written without trailing zeros, object keys are sorted, there is
/// no insignificant whitespace, and doubles are printed with round-trip
/// precision. Equal series therefore serialize to identical bytes.
std::string toJson(const FourierSeries& f);

/// Parses the form written by toJson. Accepts any term order, padded alpha
/// vectors and repeated indices (coefficients are summed). Throws
/// std::invalid_argument on malformed input.
FourierSeries seriesFromJson(std::string_view text);

}  // namespace polytorus
