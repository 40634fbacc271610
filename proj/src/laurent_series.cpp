#include "tenwein/laurent_series.hpp"

#include <algorithm>

namespace tenwein {

LaurentSeries::LaurentSeries(long lead, std::vector<Rat> coeffs, long truncation_order)
    : lead_(lead), trunc_(truncation_order), coeffs_(std::move(coeffs)) {
  require(lead_ + static_cast<long>(coeffs_.size()) - 1 <= trunc_,
          "coefficients extend past the truncation order");
  normalize();
}

void LaurentSeries::normalize() {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    lead_ = trunc_ + 1;
    return;
  }
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<Rat>(coeffs_.begin() + static_cast<long>(lo),
                               coeffs_.begin() + static_cast<long>(hi));
    lead_ += static_cast<long>(lo);
  }
}

LaurentSeries LaurentSeries::zero(long truncation_order) {
  return LaurentSeries(truncation_order + 1, {}, truncation_order);
}

LaurentSeries LaurentSeries::constant(const Rat& value, long truncation_order) {
  require(truncation_order >= 0, "constant term past the truncation order");
  return LaurentSeries(0, {value}, truncation_order);
}

long LaurentSeries::leading_exponent() const {
  require(!is_zero(), "zero series has no leading exponent");
  return lead_;
}

Rat LaurentSeries::coefficient(long inv_power) const {
  require(inv_power <= trunc_, "coefficient past the truncation order");
  long idx = inv_power - lead_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<size_t>(idx)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& rhs) const {
  long trunc = std::min(trunc_, rhs.trunc_);
  if (is_zero()) return rhs.truncated_to(trunc);
  if (rhs.is_zero()) return truncated_to(trunc);
  long lead = std::min(lead_, rhs.lead_);
  long last = std::min(
      trunc, std::max(lead_ + static_cast<long>(coeffs_.size()) - 1,
                      rhs.lead_ + static_cast<long>(rhs.coeffs_.size()) - 1));
  if (last < lead) return zero(trunc);
  std::vector<Rat> c(static_cast<size_t>(last - lead + 1), Rat(0));
  for (long e = lead; e <= last; ++e) {
    Rat v(0);
    long ia = e - lead_;
    if (ia >= 0 && ia < static_cast<long>(coeffs_.size())) v += coeffs_[static_cast<size_t>(ia)];
    long ib = e - rhs.lead_;
    if (ib >= 0 && ib < static_cast<long>(rhs.coeffs_.size())) v += rhs.coeffs_[static_cast<size_t>(ib)];
    c[static_cast<size_t>(e - lead)] = v;
  }
  return LaurentSeries(lead, std::move(c), trunc);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
  // a exact to x^ta, b exact to x^tb (x = 1/N): the product is exact to
  // min(ta + lead(b), tb + lead(a)).
  if (is_zero() || rhs.is_zero()) {
    long t = is_zero() ? (rhs.is_zero() ? std::min(trunc_ + rhs.trunc_, std::max(trunc_, rhs.trunc_))
                                        : trunc_ + rhs.lead_)
                       : rhs.trunc_ + lead_;
    return zero(t);
  }
  long trunc = std::min(trunc_ + rhs.lead_, rhs.trunc_ + lead_);
  long lead = lead_ + rhs.lead_;
  long last = std::min(trunc, lead + static_cast<long>(coeffs_.size()) - 1 +
                                  static_cast<long>(rhs.coeffs_.size()) - 1);
  if (last < lead) return zero(trunc);
  std::vector<Rat> c(static_cast<size_t>(last - lead + 1), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      long e = lead_ + static_cast<long>(i) + rhs.lead_ + static_cast<long>(j);
      if (e > last) break;
      c[static_cast<size_t>(e - lead)] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return LaurentSeries(lead, std::move(c), trunc);
}

LaurentSeries LaurentSeries::scaled(const Rat& factor) const {
  if (factor == 0) return zero(trunc_);
  std::vector<Rat> c = coeffs_;
  for (auto& v : c) v *= factor;
  return LaurentSeries(lead_, std::move(c), trunc_);
}

LaurentSeries LaurentSeries::truncated_to(long truncation_order) const {
  require(truncation_order <= trunc_,
          "cannot extend a truncated series to a higher order");
  if (is_zero() || lead_ > truncation_order)
    return zero(truncation_order);
  long keep = std::min<long>(static_cast<long>(coeffs_.size()),
                             truncation_order - lead_ + 1);
  return LaurentSeries(lead_, std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + keep),
                       truncation_order);
}

Rat LaurentSeries::evaluate(const Int& N) const {
  require(N >= 1, "evaluation requires N >= 1");
  Rat total(0);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    long e = lead_ + static_cast<long>(j);
    Rat term = coeffs_[j];
    if (e >= 0)
      term /= Rat(pow_int(N, static_cast<unsigned long>(e)));
    else
      term *= Rat(pow_int(N, static_cast<unsigned long>(-e)));
    total += term;
  }
  return total;
}

}  // namespace tenwein
