// Standard normal pdf/cdf/quantile kernels used throughout the toolkit.
//
// Accuracy notes: norm_cdf goes through erfc so both tails keep full
// relative precision (no 1 - Phi cancellation); norm_icdf is Wichura's
// PPND16 rational approximation, good to ~1e-15 over (0, 1).
#pragma once

namespace ssearch {

double norm_pdf(double x);

// Phi(x), computed as 0.5 * erfc(-x / sqrt(2)).
double norm_cdf(double x);

// 1 - Phi(x) without cancellation, i.e. Phi(-x) evaluated directly.
double norm_cdf_c(double x);

// Inverse of norm_cdf on (0, 1). Out-of-range p throws std::domain_error.
double norm_icdf(double p);

}  // namespace ssearch
