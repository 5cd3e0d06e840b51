#pragma once

#include <functional>

#include "mgf/matcore.hpp"

namespace mgf {

struct QuadResult {
  CMatrix value;
  double abs_error_estimate;
  int subdivisions;
};

using MatFn = std::function<CMatrix(double)>;

inline constexpr int kQuadMaxSubdivisions = 200;

/// Elementwise adaptive 15-point Gauss-Kronrod on [a, b]. Global target
/// tol * (1 + ||value||); throws MaxSubdivisionsError / NonFiniteIntegrandError.
QuadResult quad_matrix(const MatFn& f, double a, double b, double tol,
                       int max_subdivisions = kQuadMaxSubdivisions);

/// Integral over [a, inf) via t = a + s/(1-s); the integrand must decay at
/// least exponentially (caller asserts).
QuadResult quad_semi_infinite(const MatFn& f, double a, double tol,
                              int max_subdivisions = kQuadMaxSubdivisions);

/// Integral over [0, b] of t^{E-I} g(t) dt where g is smooth; the power
/// endpoint is split off analytically on [0, eps] as E^{-1} eps^E g(0).
/// E must be positive stable.
QuadResult quad_power_left(const CMatrix& exponent, const MatFn& g, double b, double tol,
                           int max_subdivisions = kQuadMaxSubdivisions);

/// Integral over [0, 1] of t^{A-I} (1-t)^{B-I} g(t) dt with analytic splits
/// at both endpoints. A and B positive stable.
QuadResult quad_beta_kernel(const CMatrix& a_exp, const CMatrix& b_exp, const MatFn& g, double tol,
                            int max_subdivisions = kQuadMaxSubdivisions);

/// Central differences: order 1 uses the two-point rule at step
/// h = max(1e-5, 1e-5 |t0|); order 2 a five-point stencil.
CMatrix finite_diff(const MatFn& f, double t0, int order);

struct ScalarIncGamma {
  Complex lower;
  Complex upper;
};

/// Independent scalar reference for the incomplete gamma pair: its own gamma
/// (Spouge), its own power series and continued fraction. Never shares code
/// with the production kernels it is used to check.
ScalarIncGamma scalar_ref_incgamma(Complex a, double x);

/// Spouge-approximation gamma, oracle-side.
Complex ref_gamma(Complex z);

}  // namespace mgf
