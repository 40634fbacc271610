#pragma once

#include <vector>

#include "tenwein/errors.hpp"
#include "tenwein/numeric.hpp"

namespace tenwein {

/// Truncated series in 1/N with exact rational coefficients:
///   sum_j coeffs[j] * N^{-(lead+j)},
/// exact for all powers of 1/N up to truncation_order (inclusive). The zero
/// series is represented with an empty coefficient list.
class LaurentSeries {
 public:
  LaurentSeries(long lead, std::vector<Rat> coeffs, long truncation_order);

  static LaurentSeries zero(long truncation_order);
  static LaurentSeries constant(const Rat& value, long truncation_order);

  // Power of 1/N at the first non-zero coefficient. Undefined on the zero
  // series (throws).
  long leading_exponent() const;
  long truncation_order() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of N^{-inv_power}; zero when outside the stored range, throws
  // past the truncation order.
  Rat coefficient(long inv_power) const;
  // Coefficients starting at leading_exponent().
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  LaurentSeries operator+(const LaurentSeries& rhs) const;
  LaurentSeries operator*(const LaurentSeries& rhs) const;
  LaurentSeries scaled(const Rat& factor) const;
  LaurentSeries truncated_to(long truncation_order) const;

  // Exact value sum_j c_j / N^{lead+j} of the retained terms.
  Rat evaluate(const Int& N) const;

  bool operator==(const LaurentSeries&) const = default;

 private:
  void normalize();

  long lead_ = 0;
  long trunc_ = 0;
  std::vector<Rat> coeffs_;
};

}  // namespace tenwein
