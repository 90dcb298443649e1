// Hastings-McLeod solution of Painleve II (u'' = 2u^3 + xu, u ~ -Ai at +inf)
// solved as a two-point boundary value problem by damped Newton iteration on
// a central-difference collocation grid, plus the distribution factors
//   v(x)    = int_inf^x u^2,
//   log E   = (1/2) int_x^inf u,
//   log F   = (1/2) int_x^inf v,
// and the Tracy-Widom distribution functions F1 = F E, F2 = F^2,
// F4 = F (E + 1/E)/2 built from them.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "invlim/airy.hpp"
#include "invlim/quad.hpp"

namespace invlim {

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BvpConfig {
  double x_left = -10.0;
  double x_right = 8.0;
  int node_count = 4001;
  double newton_tolerance = 1e-10;
  int max_newton_iters = 60;
};

enum class Ensemble { goe = 1, gue = 2, gse = 4 };

inline Ensemble ensemble_from_int(int beta) {
  switch (beta) {
    case 1: return Ensemble::goe;
    case 2: return Ensemble::gue;
    case 4: return Ensemble::gse;
    default: throw InvalidConfig("ensemble must be 1, 2 or 4");
  }
}

class PiiGrid {
 public:
  std::vector<double> x_nodes, u_vals, du_vals, v_vals, logE_vals, logF_vals;
  double tolerance = 1e-10;

  double x_left() const { return x_nodes.front(); }
  double x_right() const { return x_nodes.back(); }
  double h() const { return x_nodes[1] - x_nodes[0]; }
  int size() const { return static_cast<int>(x_nodes.size()); }

  // Piecewise cubic Hermite interpolants. Each tabulated quantity carries an
  // exact derivative: u' = du, v' = u^2, (log E)' = -u/2, (log F)' = -v/2,
  // du' = 2u^3 + xu.
  double u(double x) const { return hermite(x, u_vals, DerivKind::du); }
  double du(double x) const { return hermite(x, du_vals, DerivKind::ddu); }
  double v(double x) const { return hermite(x, v_vals, DerivKind::usq); }
  double log_E(double x) const {
    return hermite(x, logE_vals, DerivKind::half_u);
  }
  double log_F(double x) const {
    return hermite(x, logF_vals, DerivKind::half_v);
  }

  // u extended by its tail asymptotics; usable on [x_left-50, +inf).
  double u_ext(double x) const {
    if (x > x_right()) return -airy_ai(x);
    if (x < x_left()) {
      const double s = std::sqrt(-x / 2.0);
      return -s * (1.0 + 1.0 / (8.0 * x * x * x));
    }
    return u(x);
  }
  double du_ext(double x) const {
    if (x > x_right()) return -airy_ai_prime(x);
    if (x < x_left()) {
      const double s = std::sqrt(-x / 2.0);
      return 0.25 / s * (1.0 + 1.0 / (8.0 * x * x * x)) +
             s * 3.0 / (8.0 * x * x * x * x);
    }
    return du(x);
  }

  // log E / log F extended to all reals with analytic tails.
  double log_E_ext(double x) const {
    if (x > x_right()) {
      if (x > 25.0) return 0.0;
      return -0.5 * airy_tail_integral(x);
    }
    if (x < x_left()) {
      const double xl = x_left();
      // int_x^xl u ds with u = -sqrt(-s/2):  (4/3)[(-xl/2)^{3/2}-(-x/2)^{3/2}]
      const double part = 4.0 / 3.0 * (std::pow(-xl / 2.0, 1.5) -
                                       std::pow(-x / 2.0, 1.5));
      return logE_vals.front() + 0.5 * part;
    }
    return log_E(x);
  }
  double log_F_ext(double x) const {
    if (x > x_right()) {
      if (x > 25.0) return 0.0;
      return -0.5 * airy_weighted_sq_tail_integral(x);
    }
    if (x < x_left()) {
      const double xl = x_left();
      const double vl = v_vals.front();
      // v(s) ~ vl - (s^2 - xl^2)/4 below the grid; log F(x) = log F(xl)
      // + (1/2) int_x^xl v
      const double intv = (vl + xl * xl / 4.0) * (xl - x) -
                          (xl * xl * xl - x * x * x) / 12.0;
      return logF_vals.front() + 0.5 * intv;
    }
    return log_F(x);
  }

  void write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "x,u,du,v,logE,logF\n";
    char buf[160];
    for (int i = 0; i < size(); ++i) {
      std::snprintf(buf, sizeof buf,
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x_nodes[i],
                    u_vals[i], du_vals[i], v_vals[i], logE_vals[i],
                    logF_vals[i]);
      out << buf;
    }
  }

  static PiiGrid read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(in, line);
    if (line != "x,u,du,v,logE,logF")
      throw std::runtime_error("bad grid csv header in " + path);
    PiiGrid g;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ss(line);
      double cols[6];
      for (int c = 0; c < 6; ++c) {
        std::string cell;
        if (!std::getline(ss, cell, ',')) throw std::runtime_error("bad row");
        cols[c] = std::stod(cell);
      }
      g.x_nodes.push_back(cols[0]);
      g.u_vals.push_back(cols[1]);
      g.du_vals.push_back(cols[2]);
      g.v_vals.push_back(cols[3]);
      g.logE_vals.push_back(cols[4]);
      g.logF_vals.push_back(cols[5]);
    }
    return g;
  }

 private:
  enum class DerivKind { du, ddu, usq, half_u, half_v };

  double deriv_at(int i, DerivKind k) const {
    switch (k) {
      case DerivKind::du: return du_vals[i];
      case DerivKind::ddu:
        return 2.0 * u_vals[i] * u_vals[i] * u_vals[i] +
               x_nodes[i] * u_vals[i];
      case DerivKind::usq: return u_vals[i] * u_vals[i];
      case DerivKind::half_u: return -0.5 * u_vals[i];
      case DerivKind::half_v: return -0.5 * v_vals[i];
    }
    return 0.0;
  }

  double hermite(double x, const std::vector<double>& y, DerivKind k) const {
    const double xl = x_nodes.front(), xr = x_nodes.back();
    if (x < xl || x > xr)
      throw std::domain_error("PiiGrid interpolation outside grid");
    const double hh = h();
    int i = std::min(static_cast<int>((x - xl) / hh), size() - 2);
    const double s = (x - x_nodes[i]) / hh;
    const double y0 = y[i], y1 = y[i + 1];
    const double d0 = deriv_at(i, k) * hh, d1 = deriv_at(i + 1, k) * hh;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * d0 +
           (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * d1;
  }
};

namespace pii_detail {

// Tridiagonal solve (Thomas); diagonals a (sub), b, c (super), rhs d.
inline void thomas(std::vector<double>& a, std::vector<double>& b,
                   std::vector<double>& c, std::vector<double>& d) {
  const int n = static_cast<int>(b.size());
  for (int i = 1; i < n; ++i) {
    const double m = a[i] / b[i - 1];
    b[i] -= m * c[i - 1];
    d[i] -= m * d[i - 1];
  }
  d[n - 1] /= b[n - 1];
  for (int i = n - 2; i >= 0; --i) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
}

inline double residual_norm(const std::vector<double>& x,
                            const std::vector<double>& u, double h,
                            double bc_l, double bc_r) {
  const int n = static_cast<int>(x.size());
  double worst = std::max(std::fabs(u.front() - bc_l),
                          std::fabs(u.back() - bc_r));
  for (int i = 1; i + 1 < n; ++i) {
    const double r = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h) -
                     2.0 * u[i] * u[i] * u[i] - x[i] * u[i];
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

}  // namespace pii_detail

inline PiiGrid solve_hastings_mcleod(const BvpConfig& cfg = {}) {
  if (!(cfg.x_left < -5.0 && cfg.x_right > 5.0))
    throw InvalidConfig("interval must contain [-5, 5]");
  if (cfg.node_count < 100) throw InvalidConfig("node_count too small");
  if (cfg.newton_tolerance <= 0) throw InvalidConfig("tolerance must be > 0");

  const int n = cfg.node_count;
  const double h = (cfg.x_right - cfg.x_left) / (n - 1);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = cfg.x_left + i * h;

  const double bc_l =
      -std::sqrt(-cfg.x_left / 2.0) *
      (1.0 + 1.0 / (8.0 * cfg.x_left * cfg.x_left * cfg.x_left));
  const double bc_r = -airy_ai(cfg.x_right);

  // Initial iterate: linear blend of the two boundary asymptotes.
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) {
    const double lam = (cfg.x_right - x[i]) / (cfg.x_right - cfg.x_left);
    const double left_asym =
        x[i] < -0.5 ? -std::sqrt(-x[i] / 2.0) : -std::sqrt(0.25);
    const double right_asym = x[i] > -6.0 ? -airy_ai(x[i]) : 0.0;
    u[i] = lam * left_asym + (1.0 - lam) * right_asym;
  }
  u.front() = bc_l;
  u.back() = bc_r;

  std::vector<double> sub(n), diag(n), sup(n), rhs(n), trial(n);
  double res = pii_detail::residual_norm(x, u, h, bc_l, bc_r);
  for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
    if (res <= 0.25 * cfg.newton_tolerance) break;
    rhs[0] = u[0] - bc_l;
    rhs[n - 1] = u[n - 1] - bc_r;
    sub[0] = sup[0] = sub[n - 1] = sup[n - 1] = 0.0;
    diag[0] = diag[n - 1] = 1.0;
    for (int i = 1; i + 1 < n; ++i) {
      rhs[i] = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h) -
               2.0 * u[i] * u[i] * u[i] - x[i] * u[i];
      sub[i] = 1.0 / (h * h);
      sup[i] = 1.0 / (h * h);
      diag[i] = -2.0 / (h * h) - 6.0 * u[i] * u[i] - x[i];
    }
    pii_detail::thomas(sub, diag, sup, rhs);
    double lambda = 1.0;
    double next = res;
    for (int half = 0; half < 25; ++half) {
      for (int i = 0; i < n; ++i) trial[i] = u[i] - lambda * rhs[i];
      next = pii_detail::residual_norm(x, trial, h, bc_l, bc_r);
      if (next < res) break;
      lambda *= 0.5;
    }
    u = trial;
    res = next;
  }
  if (res > cfg.newton_tolerance)
    throw NonConvergence("PII Newton stalled at residual " +
                         std::to_string(res));

  PiiGrid g;
  g.tolerance = cfg.newton_tolerance;
  g.x_nodes = x;
  g.u_vals = u;

  // u' by fourth-order differences (one-sided at the ends).
  g.du_vals.resize(n);
  for (int i = 0; i < n; ++i) {
    if (i >= 2 && i + 2 < n) {
      g.du_vals[i] =
          (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / (12.0 * h);
    } else if (i < 2) {
      g.du_vals[i] = (-25.0 * u[i] + 48.0 * u[i + 1] - 36.0 * u[i + 2] +
                      16.0 * u[i + 3] - 3.0 * u[i + 4]) /
                     (12.0 * h);
    } else {
      g.du_vals[i] = (25.0 * u[i] - 48.0 * u[i - 1] + 36.0 * u[i - 2] -
                      16.0 * u[i - 3] + 3.0 * u[i - 4]) /
                     (12.0 * h);
    }
  }

  // Cumulative integrals from the right boundary, corrected trapezoid
  // (O(h^4); endpoint derivatives of each integrand are known exactly).
  auto cumulate = [&](auto f, auto fp, double tail_at_xr,
                      std::vector<double>& out) {
    out.assign(n, 0.0);
    out[n - 1] = tail_at_xr;
    for (int i = n - 2; i >= 0; --i) {
      const double seg = 0.5 * h * (f(i) + f(i + 1)) +
                         h * h / 12.0 * (fp(i) - fp(i + 1));
      out[i] = out[i + 1] + seg;  // integral from x_i to infinity
    }
  };

  // v(x) = -int_x^inf u^2
  std::vector<double> tail_int(n);
  cumulate([&](int i) { return u[i] * u[i]; },
           [&](int i) { return 2.0 * u[i] * g.du_vals[i]; },
           airy_sq_tail_integral(cfg.x_right), tail_int);
  g.v_vals.resize(n);
  for (int i = 0; i < n; ++i) g.v_vals[i] = -tail_int[i];

  // log E = (1/2) int_x^inf u
  cumulate([&](int i) { return u[i]; }, [&](int i) { return g.du_vals[i]; },
           -airy_tail_integral(cfg.x_right), tail_int);
  g.logE_vals.resize(n);
  for (int i = 0; i < n; ++i) g.logE_vals[i] = 0.5 * tail_int[i];

  // log F = (1/2) int_x^inf v
  cumulate([&](int i) { return g.v_vals[i]; },
           [&](int i) { return u[i] * u[i]; },
           -airy_weighted_sq_tail_integral(cfg.x_right), tail_int);
  g.logF_vals.resize(n);
  for (int i = 0; i < n; ++i) g.logF_vals[i] = 0.5 * tail_int[i];

  return g;
}

// Tracy-Widom distribution function for ensemble beta in {1,2,4}; total on
// the reals, clamped to [0,1].
inline double eval_tw(const PiiGrid& grid, double x, Ensemble ens) {
  const double lf = grid.log_F_ext(x);
  const double le = grid.log_E_ext(x);
  double val = 0.0;
  switch (ens) {
    case Ensemble::gue: val = std::exp(2.0 * lf); break;
    case Ensemble::goe: val = std::exp(lf + le); break;
    case Ensemble::gse:
      val = 0.5 * (std::exp(lf - le) + std::exp(lf + le));
      break;
  }
  return std::clamp(val, 0.0, 1.0);
}

// p-th moment of the ensemble law, by tail integration of the CDF.
inline double tw_moment(const PiiGrid& grid, Ensemble ens, int p) {
  if (p < 0 || p > 6) throw InvalidConfig("moment order must be 0..6");
  if (p == 0) return 1.0;
  auto upper = [&](double s) {
    return p * std::pow(s, p - 1) * (1.0 - eval_tw(grid, s, ens));
  };
  auto lower = [&](double s) {
    return p * std::pow(s, p - 1) * eval_tw(grid, s, ens);
  };
  const double a = integrate(upper, 0.0, 11.0, 1e-10);
  const double b = integrate(lower, -11.0, 0.0, 1e-10);
  return a - b;
}

}  // namespace invlim
