#ifndef PARKSIM_WEIBULL_HPP
#define PARKSIM_WEIBULL_HPP

#include "parksim/rng.hpp"

namespace parksim {

// Two-parameter Weibull. Table 1 uses (0.4, 3600 s) for parking time and
// (0.7, 900 s) for vacant time.
struct WeibullParams {
  double shape = 1.0; // dimensionless
  double scale = 1.0; // seconds

  bool valid() const { return shape > 0.0 && scale > 0.0; }
};

// Inverse-CDF draw: scale * (-ln u)^(1/shape). u must lie strictly in (0,1).
double sample_weibull(const WeibullParams& p, double u);

inline double sample_weibull(const WeibullParams& p, RngStream& rng) {
  return sample_weibull(p, rng.uniform01());
}

// n-th raw moment scale^n * Gamma(1 + n/shape), evaluated through log-gamma.
// Throws NonFiniteMomentError when the result leaves double range (small
// shape with large n gets there quickly).
double weibull_moment(const WeibullParams& p, int n);

// n-th raw moment of the sum of two independent Weibull variates, by the
// binomial convolution of single-variate moments with E[X^0] = 1.
double sum_moment(const WeibullParams& p1, const WeibullParams& p2, int n);

} // namespace parksim

#endif
