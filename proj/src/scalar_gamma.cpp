#include "mgf/scalar_gamma.hpp"

#include <cmath>
#include <limits>

namespace mgf {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Valid for Re(z) >= 0.5.
Complex gamma_positive_half(Complex z) {
  z -= 1.0;
  Complex a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Complex gamma_scalar(Complex z) {
  if (is_nonpositive_integer(z)) return {std::numeric_limits<double>::infinity(), 0.0};
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
  }
  return gamma_positive_half(z);
}

Complex rgamma_scalar(Complex z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  if (z.real() < 0.5) {
    return std::sin(kPi * z) * gamma_positive_half(1.0 - z) / kPi;
  }
  Complex g = gamma_positive_half(z);
  if (std::abs(g) == 0.0) return {0.0, 0.0};
  // Underflow instead of overflow for huge arguments.
  if (std::isinf(g.real()) || std::isinf(g.imag())) return {0.0, 0.0};
  return 1.0 / g;
}

Complex digamma_scalar(Complex z) {
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma_scalar(1.0 - z) - kPi / std::tan(kPi * z);
  }
  Complex acc = 0.0;
  while (z.real() < 9.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // Asymptotic series with Bernoulli numbers B2..B12.
  Complex inv = 1.0 / z, inv2 = inv * inv;
  Complex s = std::log(z) - 0.5 * inv;
  const double b[6] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240, 1.0 / 132, -691.0 / 32760};
  Complex p = inv2;
  for (double c : b) {
    s -= c * p;
    p *= inv2;
  }
  return acc + s;
}

namespace {

// Power series for the lower function, x < Re(a)+1 territory.
Complex lower_series(Complex a, double x) {
  Complex sum = 1.0 / a, del = sum;
  for (int n = 1; n < 600; ++n) {
    del *= x / (a + static_cast<double>(n));
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) break;
  }
  return std::exp(-x + a * std::log(x)) * sum;
}

// Modified Lentz continued fraction for the upper function, x >= Re(a)+1.
Complex upper_cf(Complex a, double x) {
  const double tiny = 1e-300;
  Complex b = x + 1.0 - a;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 600; ++i) {
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
  return std::exp(-x + a * std::log(x)) * h;
}

}  // namespace

Complex lower_inc_gamma_scalar(Complex a, double x) {
  if (x == 0.0) return {0.0, 0.0};
  if (x < a.real() + 1.0) return lower_series(a, x);
  return gamma_scalar(a) - upper_cf(a, x);
}

Complex upper_inc_gamma_scalar(Complex a, double x) {
  if (x == 0.0) return gamma_scalar(a);
  if (x < a.real() + 1.0) return gamma_scalar(a) - lower_series(a, x);
  return upper_cf(a, x);
}

}  // namespace mgf
