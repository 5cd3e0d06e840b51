#pragma once

#include <optional>
#include <vector>

#include "mgf/gammamat.hpp"
#include "mgf/incgamma.hpp"
#include "mgf/matcore.hpp"

namespace mgf {

enum class Domain { AllZ, UnitDisk, Nowhere };
enum class Boundary { Absolute, Conditional, Divergent, NotApplicable };

struct ConvergenceClass {
  Domain domain;
  Boundary boundary;  // NotApplicable unless domain == UnitDisk
};

const char* to_string(Domain d);
const char* to_string(Boundary b);

/// Validated parameter bundle {A_1..A_r; B_1..B_s; P; Q}. Every lower
/// parameter must keep B_j + l I invertible for all integers l >= 0, i.e.
/// no eigenvalue within 1e-8 of a nonpositive integer. P and Q may be empty
/// (0x0) for the plain hypergeometric series.
struct ParamSet {
  std::vector<CMatrix> upper;
  std::vector<CMatrix> lower;
  CMatrix p;
  CMatrix q;
  int dim = 0;
  bool commuting = false;  // pairwise over upper, lower, p, q at tol 1e-10
};

ParamSet make_param_set(std::vector<CMatrix> upper, std::vector<CMatrix> lower);
ParamSet make_param_set(std::vector<CMatrix> upper, std::vector<CMatrix> lower, CMatrix p,
                        CMatrix q);

/// Shape trichotomy for sum z^k/k! prod (A_i)_k prod [(B_j)_k]^{-1}:
/// entire when p <= q, unit disk when p = q + 1 (boundary verdict from the
/// spectral sums), divergent otherwise.
ConvergenceClass classify_pfq(const ParamSet& ps);

/// Same trichotomy shifted by the reciprocal-gamma factor: entire when
/// r <= s + 1, unit disk when r = s + 2, divergent otherwise.
ConvergenceClass classify_rrs(const ParamSet& ps);

struct SeriesResult {
  CMatrix value;
  int terms_used = 0;
  double tail_estimate = 0.0;
  ConvergenceClass convergence{Domain::AllZ, Boundary::NotApplicable};
};

/// Incremental term stream for the generalized hypergeometric series.
/// Numerator products are extended by right-multiplying (A_i + kI); the
/// denominators advance by linear solves against (B_j + kI), never by
/// forming inverses.
class PfqTerms {
 public:
  PfqTerms(const ParamSet& ps, Complex z);
  CMatrix next();
  int index() const { return k_; }

 private:
  const ParamSet& ps_;
  Complex z_;
  Complex coef_;  // z^k / k!
  std::vector<CMatrix> num_;
  std::vector<CMatrix> den_;
  int k_ = 0;
};

/// Term stream for the Wright-type series, whose k-th term carries
/// Gamma^{-1}(kP + Q). When P and Q commute the pair is triangularized once
/// and every reciprocal gamma is evaluated on the shared triangular form.
class RrsTerms {
 public:
  RrsTerms(const ParamSet& ps, Complex z);
  CMatrix next();
  int index() const { return k_; }

 private:
  CMatrix rgamma_arg(int k) const;
  const ParamSet& ps_;
  Complex z_;
  Complex coef_;
  std::vector<CMatrix> num_;
  std::vector<CMatrix> den_;
  bool tri_ok_ = false;
  CMatrix u_, tp_, tq_;
  int k_ = 0;
};

SeriesResult eval_pfq(const ParamSet& ps, Complex z, const EvalConfig& cfg = {});
SeriesResult eval_rrs(const ParamSet& ps, Complex z, const EvalConfig& cfg = {});

}  // namespace mgf
