#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polytorus {

/// Finitely supported integer exponent vector indexing a Fourier mode on the
/// polytorus. Entry i is the exponent of variable z_{i+1}; a negative entry
/// stands for a power of the conjugate variable.
///
/// Stored in canonical form: trailing zero entries are stripped, so the zero
/// multi-index has no entries and two indices compare equal exactly when
/// they denote the same mode.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  /// Index of the single variable at 0-based `position`, raised to `power`.
  static MultiIndex unit(std::size_t position, int power = 1);

  /// Exponent of the variable at 0-based `position` (zero past the support).
  int operator[](std::size_t position) const noexcept;

  /// Number of stored entries; one past the last variable with a nonzero
  /// exponent.
  std::size_t size() const noexcept { return entries_.size(); }
  bool isZero() const noexcept { return entries_.empty(); }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Total degree, the sum of all exponents. May be negative.
  int degree() const noexcept;
  /// True when every exponent is nonnegative.
  bool isAnalytic() const noexcept;
  int maxAbsExponent() const noexcept;

  /// Entries padded with zeros to `dim` (dim must be at least size()).
  std::vector<int> padded(std::size_t dim) const;

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-() const;

  /// Lexicographic order on the zero-padded sequences.
  std::strong_ordering operator<=>(const MultiIndex& other) const noexcept;
  bool operator==(const MultiIndex& other) const noexcept = default;

  std::string toString() const;

 private:
  void canonicalize();

  std::vector<int> entries_;
};

}  // namespace polytorus
