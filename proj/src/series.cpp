#include "coxflat/series.hpp"

namespace coxflat {

TruncatedSeries TruncatedSeries::from_counts(const std::vector<long>& counts) {
  std::vector<Rational> c;
  c.reserve(counts.size());
  for (long b : counts) c.emplace_back(b);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::mul_one_plus_z() const {
  std::vector<Rational> c(coeffs.size(), Rational(0));
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    c[n] += coeffs[n];
    if (n + 1 < coeffs.size()) c[n + 1] += coeffs[n];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div_one_plus_z(const TruncatedSeries& h) {
  std::vector<Rational> c(h.coeffs.size());
  for (std::size_t n = 0; n < h.coeffs.size(); ++n)
    c[n] = n == 0 ? h.coeffs[0] : h.coeffs[n] - c[n - 1];
  return TruncatedSeries(std::move(c));
}

}  // namespace coxflat
