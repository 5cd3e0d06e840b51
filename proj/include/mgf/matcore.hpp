#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "mgf/errors.hpp"

namespace mgf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxDim = 32;

/// Square, 1 <= n <= kMaxDim, all entries finite. Every public entry point
/// funnels its matrix arguments through this.
void validate_matrix(const CMatrix& a);

/// FNV-1a over the raw entries, hex string. Used in diagnostics and reports.
std::string matrix_digest(const CMatrix& a);

/// Largest singular value.
double norm2(const CMatrix& a);

/// ||AB - BA||_2 <= tol (1 + ||A||_2 ||B||_2).
bool commutes(const CMatrix& a, const CMatrix& b, double tol);

struct SpectralInfo {
  CVector eigenvalues;
  double bigM;    // max Re over the spectrum
  double smallm;  // min Re over the spectrum
};
SpectralInfo spectral_bounds(const CMatrix& a);

struct SchurForm {
  CMatrix unitary;
  CMatrix triangular;  // upper
};
SchurForm schur(const CMatrix& a);

/// A scalar analytic function with Taylor coefficients on demand. Exact
/// coefficient rules are attached where cheap (exp, powers, log); everything
/// else is differentiated by sampling a circle around the expansion center,
/// which is the only numerically sane way to reach the orders the blocked
/// triangular evaluation needs.
class AnalyticFn {
 public:
  using Eval = std::function<Complex(Complex)>;
  // coefficients f^(k)(center)/k! for k = 0..count-1
  using TaylorFn = std::function<std::vector<Complex>(Complex, int)>;
  // radius of a pole-free disk around the center (inf for entire functions)
  using RadiusFn = std::function<double(Complex)>;

  explicit AnalyticFn(Eval eval, TaylorFn taylor = nullptr, RadiusFn radius = nullptr,
                      int max_order = std::numeric_limits<int>::max())
      : eval_(std::move(eval)),
        taylor_(std::move(taylor)),
        radius_(std::move(radius)),
        max_order_(max_order) {}

  Complex operator()(Complex z) const { return eval_(z); }
  std::vector<Complex> taylor(Complex center, int count, double spread) const;
  int max_order() const { return max_order_; }

 private:
  Eval eval_;
  TaylorFn taylor_;
  RadiusFn radius_;
  int max_order_;
};

AnalyticFn exp_fn();
AnalyticFn power_base_fn(double x);  // z -> x^z, x > 0
AnalyticFn log_fn();                 // principal branch
AnalyticFn rgamma_fn();
AnalyticFn gamma_fn();                        // oracle-side use; poles respected
AnalyticFn upper_inc_gamma_fn(double x);      // z -> Gamma(z, x), entire for x > 0

/// f(A) through the complex Schur form with a Parlett block recurrence.
/// Eigenvalues closer than 0.1 are confluent into one block, which is then
/// evaluated by a Taylor expansion of order (block size + 10) about the block
/// mean; distinct blocks are at least 0.1 apart, so the Sylvester solves in
/// the recurrence are well conditioned at this scale.
CMatrix apply_entire(const AnalyticFn& f, const CMatrix& a);

/// Same, but the input is trusted to be upper triangular (no Schur step).
CMatrix apply_entire_tri(const AnalyticFn& f, const CMatrix& t);

CMatrix mat_exp(const CMatrix& a);
CMatrix mat_log_principal(const CMatrix& a);
CMatrix real_power(double x, const CMatrix& q);          // x^Q, x > 0
CMatrix mat_pow(const CMatrix& base, const CMatrix& e);  // base^E, commuting inputs

/// Scale-free residual ||L - R||_2 / (1 + max(||L||_2, ||R||_2)).
double residual(const CMatrix& lhs, const CMatrix& rhs);

/// Solve A X = B; exploits exact upper-triangular structure when present so
/// that triangular pipelines stay exactly triangular.
CMatrix solve_into(const CMatrix& a, const CMatrix& b);
CMatrix inverse_of(const CMatrix& a);
bool is_upper_triangular(const CMatrix& a);

}  // namespace mgf
