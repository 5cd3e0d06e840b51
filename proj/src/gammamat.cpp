#include "mgf/gammamat.hpp"

#include <cmath>
#include <sstream>

namespace mgf {

CMatrix rgamma_mat(const CMatrix& a) {
  validate_matrix(a);
  return apply_entire(rgamma_fn(), a);
}

CMatrix gamma_mat(const CMatrix& a) {
  SpectralInfo si = spectral_bounds(a);
  for (Eigen::Index i = 0; i < si.eigenvalues.size(); ++i) {
    Complex l = si.eigenvalues(i);
    double nearest = std::round(l.real());
    if (nearest <= 0.0 && std::abs(l - Complex(nearest, 0.0)) < 1e-8) {
      std::ostringstream os;
      os << "gamma_mat: eigenvalue (" << l.real() << ", " << l.imag()
         << ") within 1e-8 of pole at " << nearest;
      throw PoleError(os.str());
    }
  }
  return inverse_of(rgamma_mat(a));
}

CMatrix pochhammer(const CMatrix& a, int n) {
  validate_matrix(a);
  if (n < 0) throw DomainError("pochhammer requires n >= 0");
  const Eigen::Index d = a.rows();
  CMatrix acc = CMatrix::Identity(d, d);
  for (int k = 0; k < n; ++k) acc = acc * (a + static_cast<double>(k) * CMatrix::Identity(d, d));
  return acc;
}

CMatrix pochhammer_kn(const CMatrix& q, int k, int n) {
  validate_matrix(q);
  if (k < 1) throw DomainError("pochhammer_kn requires k >= 1");
  if (n < 0) throw DomainError("pochhammer_kn requires n >= 0");
  const Eigen::Index d = q.rows();
  CMatrix acc = CMatrix::Identity(d, d) * std::pow(static_cast<double>(k), k * n);
  for (int j = 0; j < k; ++j) {
    CMatrix member = (q + static_cast<double>(j) * CMatrix::Identity(d, d)) / static_cast<double>(k);
    acc = acc * pochhammer(member, n);
  }
  return acc;
}

CMatrix beta_mat(const CMatrix& p, const CMatrix& q) {
  validate_matrix(p);
  validate_matrix(q);
  if (p.rows() != q.rows()) throw DimensionError("beta_mat: dimension mismatch");
  if (!commutes(p, q, 1e-10)) throw CommutativityError("beta_mat requires commuting arguments");
  if (spectral_bounds(p).smallm <= 0.0 || spectral_bounds(q).smallm <= 0.0)
    throw DomainError("beta_mat requires positive stable arguments");
  return gamma_mat(p) * gamma_mat(q) * rgamma_mat(p + q);
}

PochhammerCache make_pochhammer_cache(const CMatrix& base, int up_to) {
  validate_matrix(base);
  PochhammerCache cache;
  cache.base = base;
  cache.products.reserve(up_to + 1);
  const Eigen::Index d = base.rows();
  cache.products.push_back(CMatrix::Identity(d, d));
  for (int k = 1; k <= up_to; ++k) {
    cache.products.push_back(cache.products.back() *
                             (base + static_cast<double>(k - 1) * CMatrix::Identity(d, d)));
  }
  return cache;
}

}  // namespace mgf
