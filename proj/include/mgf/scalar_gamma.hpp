#pragma once

#include <complex>

namespace mgf {

using Complex = std::complex<double>;

/// Gamma function, Lanczos approximation (g = 7, 9 coefficients) with
/// reflection for Re(z) < 0.5. Overflows to inf past z ~ 171 like the rest
/// of double arithmetic; callers at that scale want rgamma_scalar instead.
Complex gamma_scalar(Complex z);

/// Reciprocal gamma. Entire: returns exact 0 at the nonpositive integers and
/// never overflows for arguments of large positive real part (it underflows).
Complex rgamma_scalar(Complex z);

/// Digamma, asymptotic series after recurrence push. Test/oracle helper.
Complex digamma_scalar(Complex z);

/// Scalar incomplete gamma kernels, x >= 0 real, complex order. The split at
/// x = Re(a)+1 picks the representation that has no cancellation: power
/// series below, modified Lentz continued fraction above.
Complex lower_inc_gamma_scalar(Complex a, double x);
Complex upper_inc_gamma_scalar(Complex a, double x);

}  // namespace mgf
