#pragma once

#include <vector>

#include "mgf/matcore.hpp"

namespace mgf {

/// Reciprocal gamma of a matrix. Entire, so defined for every square matrix.
CMatrix rgamma_mat(const CMatrix& a);

/// Gamma of a matrix, the inverse of rgamma_mat. Throws PoleError when an
/// eigenvalue sits within 1e-8 of a nonpositive integer (past that the
/// Taylor blocks are numerically meaningless).
CMatrix gamma_mat(const CMatrix& a);

/// (A)_n = A (A+I) ... (A+(n-1)I), with (A)_0 = I. Computed as the explicit
/// product; the gamma-quotient form is a cross-check, not the implementation.
CMatrix pochhammer(const CMatrix& a, int n);

/// k^{kn} (Q/k)_n ((Q+I)/k)_n ... ((Q+(k-1)I)/k)_n, equal to (Q)_{kn}.
CMatrix pochhammer_kn(const CMatrix& q, int k, int n);

/// Gamma(P) Gamma(Q) Gamma^{-1}(P+Q); requires commuting, positive stable
/// arguments.
CMatrix beta_mat(const CMatrix& p, const CMatrix& q);

struct PochhammerCache {
  CMatrix base;
  std::vector<CMatrix> products;  // products[k] = (base)_k
};
PochhammerCache make_pochhammer_cache(const CMatrix& base, int up_to);

}  // namespace mgf
