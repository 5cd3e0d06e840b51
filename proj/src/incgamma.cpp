#include "mgf/incgamma.hpp"

#include <cmath>

#include "mgf/gammamat.hpp"
#include "mgf/scalar_gamma.hpp"

namespace mgf {

namespace {

void require_positive_stable(const CMatrix& q, const char* who) {
  if (spectral_bounds(q).smallm <= 0.0)
    throw DomainError(std::string(who) + " requires a positive stable matrix argument");
}

void require_nonnegative_x(double x, const char* who) {
  if (!(x >= 0.0)) throw DomainError(std::string(who) + " requires x >= 0");
}

// Three consecutive sub-tolerance terms end a matrix series.
class Plateau {
 public:
  Plateau(double tol, int cap, const char* who) : tol_(tol), cap_(cap), who_(who) {}
  // returns true when the sum can stop
  bool done(double term_norm, double sum_norm, int k) {
    if (term_norm < tol_ * (sum_norm + 1e-300)) {
      if (++streak_ >= 3) return true;
    } else {
      streak_ = 0;
    }
    if (k + 1 >= cap_) throw TruncationError(std::string(who_) + " hit the term cap", k + 1);
    return false;
  }

 private:
  double tol_;
  int cap_;
  int streak_ = 0;
  const char* who_;
};

// Series on the triangular Schur factor; transformed back by the caller.
CMatrix gamma_star_tri(const CMatrix& t, double x, const EvalConfig& cfg) {
  const Eigen::Index n = t.rows();
  CMatrix id = CMatrix::Identity(n, n);
  if (x == 0.0) return apply_entire_tri(rgamma_fn(), t + id);
  CMatrix sum = CMatrix::Zero(n, n);
  Plateau stop(cfg.tol, cfg.term_cap, "gamma_star");
  double xk = 1.0;
  for (int k = 0;; ++k) {
    CMatrix term = xk * apply_entire_tri(rgamma_fn(), t + static_cast<double>(k + 1) * id);
    sum += term;
    if (stop.done(term.norm(), sum.norm(), k)) break;
    xk *= x;
  }
  return std::exp(-x) * sum;
}

}  // namespace

CMatrix gamma_star(const CMatrix& q, double x, const EvalConfig& cfg) {
  validate_matrix(q);
  require_nonnegative_x(x, "gamma_star");
  SchurForm sf = schur(q);
  CMatrix v = gamma_star_tri(sf.triangular, x, cfg);
  if (is_upper_triangular(q)) return v;
  return sf.unitary * v * sf.unitary.adjoint();
}

CMatrix lower_inc_gamma(const CMatrix& q, double x, const EvalConfig& cfg) {
  require_positive_stable(q, "lower_inc_gamma");
  require_nonnegative_x(x, "lower_inc_gamma");
  const Eigen::Index n = q.rows();
  CMatrix id = CMatrix::Identity(n, n);
  if (x == 0.0) return CMatrix::Zero(n, n);
  SpectralInfo si = spectral_bounds(q);
  if (x >= 60.0 + 8.0 * std::max(0.0, si.bigM)) {
    // the tail Gamma(Q, x) is below underflow at this point
    return gamma_mat(q);
  }
  const double x_switch = 1.0 + si.bigM;
  CMatrix sum = CMatrix::Zero(n, n);
  Plateau stop(cfg.tol, cfg.term_cap, "lower_inc_gamma");
  if (x <= x_switch) {
    // alternating series: x^Q sum_k (-x)^k / k! (Q + kI)^{-1}
    double coef = 1.0;
    for (int k = 0;; ++k) {
      CMatrix term = coef * inverse_of(q + static_cast<double>(k) * id);
      sum += term;
      if (stop.done(term.norm(), sum.norm(), k)) break;
      coef *= -x / (k + 1.0);
    }
    return real_power(x, q) * sum;
  }
  // positive-term series: e^{-x} x^Q sum_k x^k [(Q)_{k+1}]^{-1}
  CMatrix t = inverse_of(q);
  sum = t;
  for (int k = 1;; ++k) {
    t = solve_into(q + static_cast<double>(k) * id, t) * x;
    sum += t;
    if (stop.done(t.norm(), sum.norm(), k)) break;
  }
  return std::exp(-x) * real_power(x, q) * sum;
}

CMatrix upper_inc_gamma(const CMatrix& q, double x, const EvalConfig& cfg) {
  require_positive_stable(q, "upper_inc_gamma");
  require_nonnegative_x(x, "upper_inc_gamma");
  SpectralInfo si = spectral_bounds(q);
  if (x <= si.smallm + 1.0) {
    return gamma_mat(q) - lower_inc_gamma(q, x, cfg);
  }
  return apply_entire(upper_inc_gamma_fn(x), q);
}

CMatrix inc_pochhammer(const CMatrix& q, double x, int n, PochKind kind, const EvalConfig& cfg) {
  require_positive_stable(q, "inc_pochhammer");
  if (n < 0) throw DomainError("inc_pochhammer requires n >= 0");
  CMatrix shifted = q + static_cast<double>(n) * CMatrix::Identity(q.rows(), q.cols());
  CMatrix g = (kind == PochKind::Lower) ? lower_inc_gamma(shifted, x, cfg)
                                        : upper_inc_gamma(shifted, x, cfg);
  return g * rgamma_mat(q);
}

namespace {

CMatrix shift_tail(const CMatrix& q, double x, int n) {
  // sum_{r=0}^{n-1} (Q+(r+1)I)_{n-1-r} x^r
  const Eigen::Index d = q.rows();
  CMatrix id = CMatrix::Identity(d, d);
  CMatrix s = CMatrix::Zero(d, d);
  double xr = 1.0;
  for (int r = 0; r < n; ++r) {
    s += xr * pochhammer(q + static_cast<double>(r + 1) * id, n - 1 - r);
    xr *= x;
  }
  return s;
}

}  // namespace

CMatrix shifted_lower(const CMatrix& q, double x, int n, const EvalConfig& cfg) {
  require_positive_stable(q, "shifted_lower");
  if (n < 1) throw DomainError("shifted_lower requires n >= 1");
  require_nonnegative_x(x, "shifted_lower");
  CMatrix base = pochhammer(q, n) * lower_inc_gamma(q, x, cfg);
  if (x == 0.0) return base;
  return base - std::exp(-x) * real_power(x, q) * shift_tail(q, x, n);
}

CMatrix shifted_upper(const CMatrix& q, double x, int n, const EvalConfig& cfg) {
  require_positive_stable(q, "shifted_upper");
  if (n < 1) throw DomainError("shifted_upper requires n >= 1");
  require_nonnegative_x(x, "shifted_upper");
  CMatrix base = pochhammer(q, n) * upper_inc_gamma(q, x, cfg);
  if (x == 0.0) return base;
  return base + std::exp(-x) * real_power(x, q) * shift_tail(q, x, n);
}

IncGammaPair inc_gamma_pair(const CMatrix& q, double x, const EvalConfig& cfg) {
  return {lower_inc_gamma(q, x, cfg), upper_inc_gamma(q, x, cfg), q, x};
}

CMatrix lower_gamma_ratio(const CMatrix& m, double x, const EvalConfig& cfg) {
  validate_matrix(m);
  require_nonnegative_x(x, "lower_gamma_ratio");
  const Eigen::Index n = m.rows();
  if (x == 0.0) return CMatrix::Zero(n, n);
  SchurForm sf = schur(m);
  CMatrix v = apply_entire_tri(power_base_fn(x), sf.triangular) *
              gamma_star_tri(sf.triangular, x, cfg);
  if (is_upper_triangular(m)) return v;
  return sf.unitary * v * sf.unitary.adjoint();
}

CMatrix upper_gamma_ratio(const CMatrix& m, double x, const EvalConfig& cfg) {
  return CMatrix::Identity(m.rows(), m.cols()) - lower_gamma_ratio(m, x, cfg);
}

}  // namespace mgf
