#include "mgf/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mgf/rng.hpp"
#include "mgf/scalar_gamma.hpp"

namespace mgf {

namespace {
constexpr double kClusterGap = 0.1;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void validate_matrix(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("matrix is not square: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  }
  if (a.rows() < 1 || a.rows() > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(a.rows()) + " outside [1, " +
                         std::to_string(kMaxDim) + "]");
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        throw DomainError("non-finite entry at (" + std::to_string(i) + "," + std::to_string(j) +
                          ")");
}

std::string matrix_digest(const CMatrix& a) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      double re = a(i, j).real(), im = a(i, j).imag();
      h = fnv1a(&re, sizeof(re), h);
      h = fnv1a(&im, sizeof(im), h);
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

double norm2(const CMatrix& a) {
  validate_matrix(a);
  if (a.rows() == 1) return std::abs(a(0, 0));
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

bool commutes(const CMatrix& a, const CMatrix& b, double tol) {
  validate_matrix(a);
  validate_matrix(b);
  if (a.rows() != b.rows()) throw DimensionError("commutes: dimension mismatch");
  double c = norm2(a * b - b * a);
  return c <= tol * (1.0 + norm2(a) * norm2(b));
}

SchurForm schur(const CMatrix& a) {
  validate_matrix(a);
  if (is_upper_triangular(a)) {
    return {CMatrix::Identity(a.rows(), a.cols()), a};
  }
  Eigen::ComplexSchur<CMatrix> cs(a, /*computeU=*/true);
  if (cs.info() != Eigen::Success) {
    throw EigensolverError("Schur iteration failed for matrix " + matrix_digest(a));
  }
  return {cs.matrixU(), cs.matrixT()};
}

SpectralInfo spectral_bounds(const CMatrix& a) {
  SchurForm sf = schur(a);
  SpectralInfo info;
  info.eigenvalues = sf.triangular.diagonal();
  info.bigM = -std::numeric_limits<double>::infinity();
  info.smallm = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < info.eigenvalues.size(); ++i) {
    info.bigM = std::max(info.bigM, info.eigenvalues(i).real());
    info.smallm = std::min(info.smallm, info.eigenvalues(i).real());
  }
  return info;
}

std::vector<Complex> AnalyticFn::taylor(Complex center, int count, double spread) const {
  if (count - 1 > max_order_) {
    throw DomainError("analytic function provides derivatives only through order " +
                      std::to_string(max_order_) + ", order " + std::to_string(count - 1) +
                      " requested");
  }
  if (taylor_) return taylor_(center, count);
  // Circle sampling: c_k = (1/N) sum_j f(center + r w^j) w^{-jk} / r^k.
  double r = std::max(1.0, 2.0 * spread);
  if (radius_) {
    double safe = radius_(center);
    r = std::min(r, 0.75 * safe);
    if (!(r > 0.0)) throw DomainError("no pole-free disk around expansion center");
  }
  const int N = 128;
  std::vector<Complex> samples(N);
  for (int j = 0; j < N; ++j) {
    double th = 2.0 * kPi * j / N;
    samples[j] = eval_(center + r * Complex(std::cos(th), std::sin(th)));
  }
  std::vector<Complex> coeffs(count);
  for (int k = 0; k < count; ++k) {
    Complex s = 0.0;
    for (int j = 0; j < N; ++j) {
      double th = -2.0 * kPi * j * k / N;
      s += samples[j] * Complex(std::cos(th), std::sin(th));
    }
    coeffs[k] = s / (static_cast<double>(N) * std::pow(r, k));
  }
  return coeffs;
}

AnalyticFn exp_fn() {
  return AnalyticFn([](Complex z) { return std::exp(z); },
                    [](Complex c, int count) {
                      std::vector<Complex> out(count);
                      Complex e = std::exp(c);
                      double fact = 1.0;
                      for (int k = 0; k < count; ++k) {
                        out[k] = e / fact;
                        fact *= (k + 1.0);
                      }
                      return out;
                    });
}

AnalyticFn power_base_fn(double x) {
  if (!(x > 0.0)) throw DomainError("real_power requires x > 0");
  double lx = std::log(x);
  return AnalyticFn([lx](Complex z) { return std::exp(z * lx); },
                    [lx](Complex c, int count) {
                      std::vector<Complex> out(count);
                      Complex v = std::exp(c * lx);
                      double fact = 1.0;
                      double p = 1.0;
                      for (int k = 0; k < count; ++k) {
                        out[k] = v * p / fact;
                        fact *= (k + 1.0);
                        p *= lx;
                      }
                      return out;
                    });
}

AnalyticFn log_fn() {
  return AnalyticFn(
      [](Complex z) { return std::log(z); },
      [](Complex c, int count) {
        // log(c + h) = log c + sum_{k>=1} (-1)^{k-1} h^k / (k c^k)
        std::vector<Complex> out(count);
        out[0] = std::log(c);
        Complex invc = 1.0 / c, p = invc;
        for (int k = 1; k < count; ++k) {
          out[k] = ((k % 2) ? 1.0 : -1.0) * p / static_cast<double>(k);
          p *= invc;
        }
        return out;
      },
      [](Complex c) {
        // distance to the branch cut (-inf, 0]
        if (c.real() > 0.0) return std::abs(c);
        return std::abs(c.imag());
      });
}

AnalyticFn rgamma_fn() {
  return AnalyticFn([](Complex z) { return rgamma_scalar(z); });
}

AnalyticFn gamma_fn() {
  return AnalyticFn([](Complex z) { return gamma_scalar(z); }, nullptr, [](Complex c) {
    double d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 64; ++k) d = std::min(d, std::abs(c + static_cast<double>(k)));
    return d;
  });
}

AnalyticFn upper_inc_gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("upper incomplete gamma kernel requires x > 0");
  return AnalyticFn([x](Complex z) { return upper_inc_gamma_scalar(z, x); });
}

namespace {

// Swap the diagonal entries at positions p, p+1 of an upper triangular T by a
// unitary similarity, accumulating the rotation into W (T_new = G T G^H,
// W_new = G W).
void swap_adjacent(CMatrix& t, CMatrix& w, Eigen::Index p) {
  Complex t12 = t(p, p + 1);
  Complex dl = t(p + 1, p + 1) - t(p, p);
  double r = std::hypot(std::abs(t12), std::abs(dl));
  if (r == 0.0) return;  // identical entries, nothing to reorder
  Complex c = t12 / r, s = dl / r;
  Eigen::Matrix2cd g;
  g << std::conj(c), std::conj(s), -s, c;
  t.middleRows(p, 2) = g * t.middleRows(p, 2);
  t.middleCols(p, 2) = t.middleCols(p, 2) * g.adjoint();
  t(p + 1, p) = 0.0;
  w.middleRows(p, 2) = g * w.middleRows(p, 2);
}

// Confluent clustering of the diagonal with a transitive gap rule.
std::vector<int> cluster_ids(const CVector& d, double gap) {
  const int n = static_cast<int>(d.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(d(i) - d(j)) <= gap) parent[find(i)] = find(j);
  std::vector<int> id(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (id[r] < 0) id[r] = next++;
    id[i] = id[r];
  }
  // renumber by first appearance
  std::vector<int> rank(next, -1);
  int c = 0;
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    if (rank[id[i]] < 0) rank[id[i]] = c++;
    out[i] = rank[id[i]];
  }
  return out;
}

// f on one (small) triangular block by Taylor expansion about the mean.
CMatrix taylor_block(const AnalyticFn& f, const CMatrix& b) {
  const Eigen::Index m = b.rows();
  if (m == 1) {
    CMatrix r(1, 1);
    r(0, 0) = f(b(0, 0));
    return r;
  }
  Complex mu = b.diagonal().mean();
  double spread = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) spread = std::max(spread, std::abs(b(i, i) - mu));
  const int order = static_cast<int>(m) + 10;
  std::vector<Complex> c = f.taylor(mu, order + 1, spread);
  CMatrix shift = b - mu * CMatrix::Identity(m, m);
  CMatrix acc = c[order] * CMatrix::Identity(m, m);
  for (int k = order - 1; k >= 0; --k) {
    acc = acc * shift + c[k] * CMatrix::Identity(m, m);
  }
  return acc;
}

// Solve T11 X - X T22 = C for upper triangular T11, T22 with disjoint spectra.
CMatrix sylvester_tri(const CMatrix& t11, const CMatrix& t22, const CMatrix& c) {
  const Eigen::Index m = t11.rows(), n = t22.rows();
  CMatrix x(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    CMatrix rhs = c.col(j);
    for (Eigen::Index k = 0; k < j; ++k) rhs += x.col(k) * t22(k, j);
    CMatrix a = t11 - t22(j, j) * CMatrix::Identity(m, m);
    x.col(j) = a.triangularView<Eigen::Upper>().solve(rhs);
  }
  return x;
}

}  // namespace

CMatrix apply_entire_tri(const AnalyticFn& f, const CMatrix& tin) {
  const Eigen::Index n = tin.rows();
  if (n == 1) {
    CMatrix r(1, 1);
    r(0, 0) = f(tin(0, 0));
    return r;
  }
  CMatrix t = tin;
  CMatrix w = CMatrix::Identity(n, n);
  std::vector<int> ids = cluster_ids(t.diagonal(), kClusterGap);
  // adjacent swaps until cluster ids are nondecreasing
  bool moved = true;
  while (moved) {
    moved = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      if (ids[p] > ids[p + 1]) {
        swap_adjacent(t, w, p);
        std::swap(ids[p], ids[p + 1]);
        moved = true;
      }
    }
  }
  // block boundaries
  std::vector<Eigen::Index> start;
  for (Eigen::Index i = 0; i < n; ++i)
    if (i == 0 || ids[i] != ids[i - 1]) start.push_back(i);
  start.push_back(n);
  const int nb = static_cast<int>(start.size()) - 1;
  auto blk = [&](int i, int j) -> Eigen::Block<CMatrix> {
    return t.block(start[i], start[j], start[i + 1] - start[i], start[j + 1] - start[j]);
  };

  CMatrix ft = CMatrix::Zero(n, n);
  auto fblk = [&](int i, int j) -> Eigen::Block<CMatrix> {
    return ft.block(start[i], start[j], start[i + 1] - start[i], start[j + 1] - start[j]);
  };
  for (int i = 0; i < nb; ++i) {
    int sz = static_cast<int>(start[i + 1] - start[i]);
    if (sz + 10 > f.max_order() + 1 && sz > 1) {
      throw DomainError("eigenvalue cluster of size " + std::to_string(sz) +
                        " needs derivatives beyond the function's stated order");
    }
    fblk(i, i) = taylor_block(f, blk(i, i));
  }
  // Parlett recurrence over block superdiagonals.
  for (int d = 1; d < nb; ++d) {
    for (int i = 0; i + d < nb; ++i) {
      int j = i + d;
      CMatrix c = fblk(i, i) * blk(i, j) - blk(i, j) * fblk(j, j);
      for (int k = i + 1; k < j; ++k) c += fblk(i, k) * blk(k, j) - blk(i, k) * fblk(k, j);
      fblk(i, j) = sylvester_tri(blk(i, i), blk(j, j), c);
    }
  }
  return w.adjoint() * ft * w;
}

CMatrix apply_entire(const AnalyticFn& f, const CMatrix& a) {
  validate_matrix(a);
  if (a.rows() == 1) {
    CMatrix r(1, 1);
    r(0, 0) = f(a(0, 0));
    return r;
  }
  SchurForm sf = schur(a);
  CMatrix ft = apply_entire_tri(f, sf.triangular);
  if (is_upper_triangular(a)) return ft;
  return sf.unitary * ft * sf.unitary.adjoint();
}

CMatrix mat_exp(const CMatrix& a) { return apply_entire(exp_fn(), a); }

CMatrix mat_log_principal(const CMatrix& a) {
  SpectralInfo si = spectral_bounds(a);
  for (Eigen::Index i = 0; i < si.eigenvalues.size(); ++i) {
    Complex l = si.eigenvalues(i);
    if (std::abs(l.imag()) < 1e-12 && l.real() <= 1e-12)
      throw DomainError("matrix logarithm: eigenvalue on the branch cut");
  }
  return apply_entire(log_fn(), a);
}

CMatrix real_power(double x, const CMatrix& q) {
  validate_matrix(q);
  if (!(x > 0.0)) throw DomainError("real_power requires x > 0");
  return apply_entire(power_base_fn(x), q);
}

CMatrix mat_pow(const CMatrix& base, const CMatrix& e) {
  if (!commutes(base, e, 1e-10)) throw CommutativityError("mat_pow requires commuting inputs");
  return mat_exp(e * mat_log_principal(base));
}

double residual(const CMatrix& lhs, const CMatrix& rhs) {
  return norm2(lhs - rhs) / (1.0 + std::max(norm2(lhs), norm2(rhs)));
}

bool is_upper_triangular(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = j + 1; i < a.rows(); ++i)
      if (a(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

CMatrix solve_into(const CMatrix& a, const CMatrix& b) {
  if (is_upper_triangular(a)) return a.triangularView<Eigen::Upper>().solve(b);
  return a.partialPivLu().solve(b);
}

CMatrix inverse_of(const CMatrix& a) {
  return solve_into(a, CMatrix::Identity(a.rows(), a.cols()));
}

}  // namespace mgf
