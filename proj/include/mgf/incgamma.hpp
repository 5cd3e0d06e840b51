#pragma once

#include "mgf/matcore.hpp"

namespace mgf {

struct EvalConfig {
  double tol = 1e-14;   // relative series tolerance
  int term_cap = 2000;  // hard cap before TruncationError
};

/// gamma(Q, x), the lower incomplete gamma matrix function. Q positive
/// stable, x >= 0. Alternating series below x = 1 + bigM(Q), the
/// positive-term series above; exact 0 at x = 0.
CMatrix lower_inc_gamma(const CMatrix& q, double x, const EvalConfig& cfg = {});

/// Gamma(Q, x), the upper companion. Complement of the lower function while
/// that subtraction is well conditioned (x <= smallm(Q) + 1); past that point
/// the subtraction would lose the entire tail, so the value is produced by
/// the scalar kernel z -> Gamma(z, x) through the functional calculus.
CMatrix upper_inc_gamma(const CMatrix& q, double x, const EvalConfig& cfg = {});

/// gamma*(Q, x) = x^{-Q} gamma(Q, x) Gamma^{-1}(Q), entire in Q. Evaluated by
/// its everywhere-convergent positive series; Gamma^{-1}(Q+I) at x = 0.
CMatrix gamma_star(const CMatrix& q, double x, const EvalConfig& cfg = {});

enum class PochKind { Lower, Upper };

/// Incomplete Pochhammer symbols gamma(Q+nI,x) Gamma^{-1}(Q) and
/// Gamma(Q+nI,x) Gamma^{-1}(Q); the two kinds sum to (Q)_n.
CMatrix inc_pochhammer(const CMatrix& q, double x, int n, PochKind kind,
                       const EvalConfig& cfg = {});

/// gamma(Q+nI, x) via the finite-sum shift identity (no series at the
/// shifted argument); agrees with direct evaluation.
CMatrix shifted_lower(const CMatrix& q, double x, int n, const EvalConfig& cfg = {});
CMatrix shifted_upper(const CMatrix& q, double x, int n, const EvalConfig& cfg = {});

struct IncGammaPair {
  CMatrix lower;
  CMatrix upper;
  CMatrix q;
  double x;
};
IncGammaPair inc_gamma_pair(const CMatrix& q, double x, const EvalConfig& cfg = {});

/// gamma(M, x) Gamma^{-1}(M) = x^M gamma*(M, x): entire in M and free of
/// overflow for spectra far beyond where Gamma itself is representable.
/// The workhorse kernel of the incomplete exponential series.
CMatrix lower_gamma_ratio(const CMatrix& m, double x, const EvalConfig& cfg = {});
CMatrix upper_gamma_ratio(const CMatrix& m, double x, const EvalConfig& cfg = {});

}  // namespace mgf
