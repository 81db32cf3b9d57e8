#include "core/faddeeva.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace stepswitch::faddeeva {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double inv_sqrt_pi = 0.56418958354775628695;
constexpr double overflow_log = 700.0;

// Weideman rational approximation on the upper half plane: a single global
// rational function whose coefficients come from a cosine transform of
// exp(-t^2)(L^2 + t^2) sampled on the tangent-mapped real line.  N = 96 puts
// the approximation error well below double roundoff.
constexpr int weideman_N = 96;

struct WeidemanTable {
  double L;
  std::vector<double> coeff;  // c_1..c_N, low order first

  WeidemanTable() {
    const int N = weideman_N;
    const int M = 2 * N;
    L = std::sqrt(N / std::sqrt(2.0));
    std::vector<double> f(M);  // f(theta_k), k = 0..M-1 (even in k)
    for (int k = 0; k < M; ++k) {
      const double theta = k * pi / M;
      const double t = L * std::tan(0.5 * theta);
      f[k] = std::exp(-t * t) * (L * L + t * t);
    }
    coeff.resize(N);
    for (int n = 1; n <= N; ++n) {
      double acc = f[0];
      for (int k = 1; k < M; ++k) acc += 2.0 * f[k] * std::cos(pi * k * n / M);
      coeff[n - 1] = acc / (2.0 * M);
    }
  }
};

const WeidemanTable& table() {
  static const WeidemanTable t;
  return t;
}

// Valid for Im z >= 0.
complexd w_weideman(complexd z) {
  const WeidemanTable& t = table();
  const complexd iz{-z.imag(), z.real()};
  const complexd den = t.L - iz;
  const complexd Z = (t.L + iz) / den;
  complexd p{0.0, 0.0};
  for (int n = weideman_N - 1; n >= 0; --n) p = p * Z + t.coeff[n];
  return 2.0 * p / (den * den) + inv_sqrt_pi / den;
}

// Valid for Im z >= 0, |z| large: i/(sqrt(pi) z) * sum (2n-1)!!/(2 z^2)^n.
complexd w_asymptotic_series(complexd z) {
  const complexd iz2 = 0.5 / (z * z);
  complexd term{1.0, 0.0};
  complexd sum = term;
  for (int n = 1; n <= 10; ++n) {
    term *= static_cast<double>(2 * n - 1) * iz2;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return complexd{0.0, inv_sqrt_pi} / z * sum;
}

// Valid everywhere but used near the origin: w = exp(-z^2) + (2iz/sqrt(pi)) M(1,3/2,-z^2).
complexd w_maclaurin(complexd z) {
  const complexd u = -z * z;
  complexd term{1.0, 0.0};
  complexd sum = term;
  for (int n = 0; n < 40; ++n) {
    term *= u / (1.5 + n);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(u) + complexd{0.0, 2.0 * inv_sqrt_pi} * z * sum;
}

complexd w_upper(complexd z, Regime* regime) {
  if (std::norm(z) >= 144.0) {
    if (regime) *regime = Regime::asymptotic;
    return w_asymptotic_series(z);
  }
  if (std::norm(z) <= 0.09) {
    if (regime) *regime = Regime::series;
    return w_maclaurin(z);
  }
  if (regime) *regime = Regime::continued_fraction;
  complexd v = w_weideman(z);
  if (z.imag() == 0.0) {
    // On the real axis Re w(x) = exp(-x^2) exactly; keep it to full relative
    // precision since densities difference these terms.
    v = complexd{std::exp(-z.real() * z.real()), v.imag()};
  }
  return v;
}

}  // namespace

bool would_overflow(complexd z) {
  if (z.imag() >= 0.0) return false;
  const complexd z2 = z * z;
  return -z2.real() > overflow_log;
}

complexd w(complexd z, Regime* regime) {
  if (z.imag() >= 0.0) return w_upper(z, regime);
  // Reflection into the upper half plane; the exponential term can be huge.
  const complexd v = w_upper(-z, regime);
  return 2.0 * std::exp(-z * z) - v;
}

std::optional<complexd> w_checked(complexd z) {
  if (would_overflow(z)) return std::nullopt;
  return w(z);
}

complexd w_asymptotic(complexd z) {
  const complexd lead = complexd{0.0, inv_sqrt_pi} / z;
  if (z.imag() > 0.0) return lead;
  return lead + 2.0 * std::exp(-z * z);
}

complexd w_derivative(complexd z) {
  return -2.0 * z * w(z) + complexd{0.0, 2.0 * inv_sqrt_pi};
}

}  // namespace stepswitch::faddeeva
