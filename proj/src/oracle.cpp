#include "mgf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace mgf {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322542, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999235, 0.209482141084727828012999174892};
constexpr double kWg[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816};

struct Interval {
  double a, b;
  CMatrix k15;
  double err;
};

Interval evaluate(const MatFn& f, double a, double b) {
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  CMatrix fc = f(c);
  CMatrix k15 = kWgk[7] * fc;
  CMatrix g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    CMatrix f1 = f(c - h * kXgk[i]);
    CMatrix f2 = f(c + h * kXgk[i]);
    CMatrix s = f1 + f2;
    k15 += kWgk[i] * s;
    if (i % 2 == 1) g7 += kWg[i / 2] * s;
  }
  k15 *= h;
  g7 *= h;
  Interval iv{a, b, k15, 0.0};
  iv.err = (k15 - g7).cwiseAbs().maxCoeff() * static_cast<double>(k15.rows());
  for (Eigen::Index i = 0; i < k15.size(); ++i) {
    Complex v = k15.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFiniteIntegrandError("non-finite integrand on [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]");
  }
  return iv;
}

}  // namespace

QuadResult quad_matrix(const MatFn& f, double a, double b, double tol, int max_subdivisions) {
  if (!(a < b)) throw DomainError("quad_matrix requires a < b");
  auto cmp = [](const Interval& l, const Interval& r) { return l.err < r.err; };
  std::priority_queue<Interval, std::vector<Interval>, decltype(cmp)> q(cmp);
  Interval first = evaluate(f, a, b);
  CMatrix total = first.k15;
  double toterr = first.err;
  q.push(std::move(first));
  int subdivisions = 1;
  while (toterr > tol * (1.0 + total.norm()) && !q.empty()) {
    if (subdivisions >= max_subdivisions)
      throw MaxSubdivisionsError("quadrature did not converge in " +
                                 std::to_string(max_subdivisions) + " subdivisions");
    Interval worst = q.top();
    q.pop();
    double mid = 0.5 * (worst.a + worst.b);
    Interval l = evaluate(f, worst.a, mid);
    Interval r = evaluate(f, mid, worst.b);
    total += l.k15 + r.k15 - worst.k15;
    toterr += l.err + r.err - worst.err;
    q.push(std::move(l));
    q.push(std::move(r));
    ++subdivisions;
  }
  return {total, toterr, subdivisions};
}

QuadResult quad_semi_infinite(const MatFn& f, double a, double tol, int max_subdivisions) {
  auto mapped = [&](double s) -> CMatrix {
    double t = a + s / (1.0 - s);
    double jac = 1.0 / ((1.0 - s) * (1.0 - s));
    return f(t) * jac;
  };
  return quad_matrix(mapped, 0.0, 1.0 - 1e-12, tol, max_subdivisions);
}

QuadResult quad_power_left(const CMatrix& exponent, const MatFn& g, double b, double tol,
                           int max_subdivisions) {
  validate_matrix(exponent);
  const double eps = 1e-6;
  const Eigen::Index n = exponent.rows();
  auto f = [&](double t) -> CMatrix { return real_power(t, exponent - CMatrix::Identity(n, n)) * g(t); };
  if (b <= eps) return quad_matrix(f, b * 1e-9, b, tol, max_subdivisions);
  // head: integral of t^{E-I} g(0) on [0, eps] = E^{-1} eps^E g(0)
  CMatrix head = solve_into(exponent, real_power(eps, exponent)) * g(0.0);
  QuadResult tail = quad_matrix(f, eps, b, tol, max_subdivisions);
  tail.value += head;
  return tail;
}

QuadResult quad_beta_kernel(const CMatrix& a_exp, const CMatrix& b_exp, const MatFn& g, double tol,
                            int max_subdivisions) {
  validate_matrix(a_exp);
  validate_matrix(b_exp);
  const double eps = 1e-6;
  const Eigen::Index n = a_exp.rows();
  CMatrix id = CMatrix::Identity(n, n);
  auto f = [&](double t) -> CMatrix {
    return real_power(t, a_exp - id) * real_power(1.0 - t, b_exp - id) * g(t);
  };
  CMatrix head = solve_into(a_exp, real_power(eps, a_exp)) * g(0.0);
  CMatrix tail_end = solve_into(b_exp, real_power(eps, b_exp)) * g(1.0);
  QuadResult mid = quad_matrix(f, eps, 1.0 - eps, tol, max_subdivisions);
  mid.value += head + tail_end;
  return mid;
}

CMatrix finite_diff(const MatFn& f, double t0, int order) {
  if (order == 1) {
    double h = std::max(1e-5, 1e-5 * std::abs(t0));
    return (f(t0 + h) - f(t0 - h)) / (2.0 * h);
  }
  if (order == 2) {
    double h = 1e-3 * (1.0 + std::abs(t0));
    return (-f(t0 + 2 * h) + 16.0 * f(t0 + h) - 30.0 * f(t0) + 16.0 * f(t0 - h) - f(t0 - 2 * h)) /
           (12.0 * h * h);
  }
  throw DomainError("finite_diff supports orders 1 and 2");
}

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex spouge_positive(Complex z) {
  // Spouge approximation with a = 13 for Gamma(z), Re(z) >= 0.5.
  constexpr int a = 13;
  z -= 1.0;
  Complex acc = std::sqrt(2.0 * kPi);
  double fact = 1.0;
  for (int k = 1; k < a; ++k) {
    double ck = std::pow(static_cast<double>(a - k), k - 0.5) * std::exp(static_cast<double>(a - k)) / fact;
    acc += ((k % 2) ? 1.0 : -1.0) * ck / (z + static_cast<double>(k));
    fact *= -static_cast<double>(k);
  }
  return acc * std::exp(-(z + static_cast<double>(a))) *
         std::pow(z + static_cast<double>(a), z + 0.5);
}

}  // namespace

Complex ref_gamma(Complex z) {
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * spouge_positive(1.0 - z));
  return spouge_positive(z);
}

ScalarIncGamma scalar_ref_incgamma(Complex a, double x) {
  if (!(a.real() > 0.0)) throw DomainError("scalar reference requires Re(a) > 0");
  if (x < 0.0) throw DomainError("scalar reference requires x >= 0");
  Complex g = ref_gamma(a);
  if (x == 0.0) return {Complex(0.0, 0.0), g};
  if (x < a.real() + 1.0) {
    Complex term = 1.0 / a, sum = term;
    int n = 1;
    for (; n < 800; ++n) {
      term *= x / (a + static_cast<double>(n));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    if (n >= 800) throw Error("scalar reference series did not converge");
    Complex lower = std::exp(-x + a * std::log(x)) * sum;
    return {lower, g - lower};
  }
  // Lentz continued fraction for the upper function.
  const double tiny = 1e-308;
  Complex b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  int i = 1;
  for (; i < 800; ++i) {
    Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  if (i >= 800) throw Error("scalar reference continued fraction did not converge");
  Complex upper = std::exp(-x + a * std::log(x)) * h;
  return {g - upper, upper};
}

}  // namespace mgf
