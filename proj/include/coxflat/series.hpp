#pragma once

#include <vector>

#include "coxflat/rational.hpp"

namespace coxflat {

// Power series truncated at a fixed order; arithmetic discards degree > N.
struct TruncatedSeries {
  std::vector<Rational> coeffs;  // c_0 .. c_N

  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Rational> c) : coeffs(std::move(c)) {}
  static TruncatedSeries from_counts(const std::vector<long>& counts);

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const TruncatedSeries& o) const { return coeffs == o.coeffs; }

  TruncatedSeries mul_one_plus_z() const;  // h(z)*(1+z), same truncation order
};

// h(z)/(1+z): c_0 = b_0, c_n = b_n - c_{n-1}.
TruncatedSeries series_div_one_plus_z(const TruncatedSeries& h);

}  // namespace coxflat
