#include "parksim/weibull.hpp"

#include <cmath>
#include <string>

#include "parksim/errors.hpp"

namespace parksim {

double sample_weibull(const WeibullParams& p, double u) {
  if (!p.valid()) throw DomainError("sample_weibull: shape and scale must be positive");
  if (!(u > 0.0 && u < 1.0)) throw DomainError("sample_weibull: invalid draw, u must be in (0,1)");
  return p.scale * std::pow(-std::log(u), 1.0 / p.shape);
}

double weibull_moment(const WeibullParams& p, int n) {
  if (!p.valid()) throw DomainError("weibull_moment: shape and scale must be positive");
  if (n < 1) throw DomainError("weibull_moment: n must be >= 1");
  double log_m = n * std::log(p.scale) + std::lgamma(1.0 + n / p.shape);
  double m = std::exp(log_m);
  if (!std::isfinite(m))
    throw NonFiniteMomentError("weibull_moment: E[X^" + std::to_string(n) +
                               "] overflows double range");
  return m;
}

double sum_moment(const WeibullParams& p1, const WeibullParams& p2, int n) {
  if (n < 1) throw DomainError("sum_moment: n must be >= 1");
  // E[(X1+X2)^n] = sum_k C(n,k) E[X1^(n-k)] E[X2^k], E[X^0] = 1
  double total = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    double m1 = (n - k == 0) ? 1.0 : weibull_moment(p1, n - k);
    double m2 = (k == 0) ? 1.0 : weibull_moment(p2, k);
    total += binom * m1 * m2;
    binom = binom * (n - k) / (k + 1);
  }
  if (!std::isfinite(total))
    throw NonFiniteMomentError("sum_moment: E[(X1+X2)^" + std::to_string(n) + "] overflows");
  return total;
}

} // namespace parksim
