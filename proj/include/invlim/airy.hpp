// Airy function Ai and its derivative on [-10, inf), double precision.
//
// On [-10, 10] values come from Taylor steps off a precomputed table of
// (Ai, Ai') at spacing 1/2; the table itself is built by marching the
// defining equation y'' = x y outward from the exact values at 0. Beyond
// x = 10 the exponential asymptotic expansion is used (relative error
// there is below 1e-17). Tail integrals needed by the distribution
// builders are provided as adaptive quadratures of the evaluator.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "invlim/quad.hpp"

namespace invlim {

namespace airy_detail {

// Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
inline constexpr double kAi0 = 0.35502805388781723926;
inline constexpr double kAip0 = -0.25881940379280679841;

struct TaylorResult {
  double value;
  double deriv;
};

// One Taylor step of y'' = x y from center c with data (f, fp).
inline TaylorResult taylor_step(double c, double f, double fp, double h) {
  if (h == 0.0) return {f, fp};
  double a0 = f, a1 = fp;
  double val = a0 + a1 * h;
  double der = a1;
  // a_{k+2} = (c*a_k + a_{k-1}) / ((k+1)(k+2)), with a_{-1} = 0
  double am1 = 0.0;
  double hk1 = 1.0;  // h^{k+1}
  int small_terms = 0;
  for (int k = 0; k < 60; ++k) {
    const double a2 = (c * a0 + am1) / ((k + 1.0) * (k + 2.0));
    hk1 *= h;  // h^{k+1}
    val += a2 * hk1 * h;
    der += (k + 2.0) * a2 * hk1;
    am1 = a0;
    a0 = a1;
    a1 = a2;
    // the series has structural zero coefficients; require a run of
    // negligible terms before stopping
    if (std::fabs(a2 * hk1 * h) < 1e-20 * (std::fabs(val) + 1e-300))
      ++small_terms;
    else
      small_terms = 0;
    if (small_terms >= 3 && k > 10) break;
  }
  return {val, der};
}

// Asymptotic expansion for x > 10: Ai ~ e^{-z}/(2 sqrt(pi) x^{1/4}) sum (-1)^k u_k z^-k
inline TaylorResult asymptotic(double x) {
  const double z = 2.0 / 3.0 * std::pow(x, 1.5);
  double uk = 1.0, vk = 1.0;
  double su = 0.0, sv = 0.0;
  double zk = 1.0;
  for (int k = 0;; ++k) {
    const double tu = uk / zk, tv = vk / zk;
    su += (k % 2 ? -tu : tu);
    sv += (k % 2 ? -tv : tv);
    if (std::fabs(tu) < 1e-18 && k > 2) break;
    if (k > 40) break;
    const double kk = k;
    const double ratio = (3 * kk + 0.5) * (3 * kk + 1.5) * (3 * kk + 2.5) /
                         (54.0 * (kk + 1.0) * (kk + 0.5));
    uk *= ratio;
    vk = uk * (6.0 * (kk + 1) + 1.0) / (1.0 - 6.0 * (kk + 1));
    zk *= z;
  }
  const double pref = std::exp(-z) / (2.0 * std::sqrt(M_PI));
  return {pref * su / std::pow(x, 0.25), -pref * sv * std::pow(x, 0.25)};
}

struct Table {
  static constexpr double x_lo = -10.5;
  static constexpr double x_hi = 10.5;
  static constexpr double step = 0.5;
  std::vector<double> ai, aip;

  // Marching up the positive axis is unstable (the complementary solution
  // grows); build the whole table by a downward sweep from an asymptotic
  // anchor at the top, which keeps errors aligned with the shrinking mode.
  Table() {
    const int n_lo = static_cast<int>(std::round(-x_lo / step));
    const int n_hi = static_cast<int>(std::round(x_hi / step));
    ai.resize(n_lo + n_hi + 1);
    aip.resize(n_lo + n_hi + 1);
    auto top = asymptotic(x_hi);
    ai[n_lo + n_hi] = top.value;
    aip[n_lo + n_hi] = top.deriv;
    for (int i = n_lo + n_hi - 1; i >= 0; --i) {
      const double c = (i + 1 - n_lo) * step;
      auto r = taylor_step(c, ai[i + 1], aip[i + 1], -step);
      ai[i] = r.value;
      aip[i] = r.deriv;
    }
  }
};

inline const Table& table() {
  static const Table t;
  return t;
}

inline TaylorResult eval(double x) {
  if (x > 10.0) return asymptotic(x);
  if (x < -10.2)
    throw std::domain_error("airy: argument below supported range");
  const Table& t = table();
  const int idx = static_cast<int>(std::round((x - Table::x_lo) / Table::step));
  const int i = std::min(std::max(idx, 0), static_cast<int>(t.ai.size()) - 1);
  const double c = Table::x_lo + i * Table::step;
  return taylor_step(c, t.ai[i], t.aip[i], x - c);
}

}  // namespace airy_detail

inline double airy_ai(double x) { return airy_detail::eval(x).value; }
inline double airy_ai_prime(double x) { return airy_detail::eval(x).deriv; }

namespace airy_detail {

// The integrands decay super-exponentially; integrate on panels of
// geometrically growing width so the mass near x is not missed, with a
// tolerance proportional to the local scale.
template <class F>
double tail_quad(const F& f, double x) {
  const double top = std::max(x + 2.0, 26.0);
  double total = 0.0;
  double a = x, w = 0.25;
  const double scale = std::max({std::fabs(f(x)), std::fabs(f(x + 0.5)),
                                 std::fabs(f(x + 1.0))});
  while (a < top) {
    const double b = std::min(a + w, top);
    total += integrate(f, a, b, std::max(1e-14 * scale * (b - a), 1e-300));
    a = b;
    w *= 2.0;
  }
  return total;
}

}  // namespace airy_detail

// int_x^inf Ai(s) ds, for x >= -10.
inline double airy_tail_integral(double x) {
  return airy_detail::tail_quad([](double s) { return airy_ai(s); }, x);
}

// int_x^inf Ai(s)^2 ds
inline double airy_sq_tail_integral(double x) {
  return airy_detail::tail_quad(
      [](double s) { double a = airy_ai(s); return a * a; }, x);
}

// int_x^inf (s - x) Ai(s)^2 ds
inline double airy_weighted_sq_tail_integral(double x) {
  return airy_detail::tail_quad(
      [x](double s) { double a = airy_ai(s); return (s - x) * a * a; }, x);
}

}  // namespace invlim
