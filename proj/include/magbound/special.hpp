#pragma once

// Numerical kernels: Hermite polynomials and functions, digamma/trigamma,
// MacDonald K0, bracketed root finding, Gauss-Hermite rules, 1D quadrature
// helpers and central-difference operators on rectangular grids.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "magbound/errors.hpp"

namespace magbound {

inline constexpr double euler_gamma = 0.57721566490153286061;

// Largest Landau/Hermite index the library evaluates.  Raw H_n(z) overflows
// long before products with the Gaussian envelope do, so anything that pairs
// H_n with exp(-z^2/2) goes through the normalized Hermite functions instead.
inline constexpr int max_hermite_order = 200;

inline void check_hermite_order(int n) {
  if (n < 0) throw DomainError("Hermite order must be non-negative");
  if (n > max_hermite_order) {
    throw DomainError("Hermite order " + std::to_string(n) + " exceeds " +
                      std::to_string(max_hermite_order) +
                      "; use the scaled Hermite-function representation");
  }
}

// Physicists' Hermite polynomial H_n(z), by H_{n+1} = 2z H_n - 2n H_{n-1}.
inline double hermite_eval(int n, double z) {
  check_hermite_order(n);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Normalized Hermite polynomials h_k(s) = H_k(s) / sqrt(2^k k! sqrt(pi)),
// k = 0..n.  psi_k(s) = h_k(s) exp(-s^2/2) is orthonormal on the real line.
inline std::vector<double> normalized_hermite_polys(int n, double s) {
  check_hermite_order(n);
  std::vector<double> h(static_cast<std::size_t>(n) + 1);
  h[0] = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  if (n >= 1) h[1] = std::numbers::sqrt2 * s * h[0];
  for (int k = 1; k < n; ++k) {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * s * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
  }
  return h;
}

// Hermite functions psi_k(s), k = 0..n, with the Gaussian folded into the
// recurrence so nothing overflows for any finite s.
inline std::vector<double> hermite_functions(int n, double s) {
  check_hermite_order(n);
  std::vector<double> psi(static_cast<std::size_t>(n) + 1);
  psi[0] = std::exp(-0.5 * s * s) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n >= 1) psi[1] = std::numbers::sqrt2 * s * psi[0];
  for (int k = 1; k < n; ++k) {
    psi[k + 1] =
        std::sqrt(2.0 / (k + 1)) * s * psi[k] - std::sqrt(double(k) / (k + 1)) * psi[k - 1];
  }
  return psi;
}

inline double hermite_function(int n, double s) {
  return hermite_functions(n, s).back();
}

namespace detail {
inline constexpr double asymptotic_threshold = 8.0;
}

// psi(x) for x > 0: upward recurrence to x >= 8, then the Bernoulli
// asymptotic series through B_12.
inline double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: argument must be positive");
  double shift = 0.0;
  while (x < detail::asymptotic_threshold) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 12 -
           r * (1.0 / 120 -
                r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760))))));
  return std::log(x) - 0.5 / x - series - shift;
}

// psi'(x) for x > 0, same scheme as digamma.
inline double trigamma(double x) {
  if (!(x > 0.0)) throw DomainError("trigamma: argument must be positive");
  double shift = 0.0;
  while (x < detail::asymptotic_threshold) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double r = inv * inv;
  const double series =
      1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730)))));
  return inv + 0.5 * r + inv * r * series + shift;
}

// MacDonald function K0(z), z > 0.  Ascending series for z <= 2; above that
// the asymptotic form sqrt(pi/2z) e^{-z} / s(z) with s from Steed's
// continued fraction, which converges to full precision where the bare
// asymptotic series cannot.
inline double bessel_k0(double z) {
  if (!(z > 0.0)) throw DomainError("bessel_k0: argument must be positive");
  constexpr double switchover = 2.0;
  constexpr double eps = 1e-17;
  if (z <= switchover) {
    const double q = 0.25 * z * z;
    double term = 1.0;     // (q^k / k!^2)
    double harmonic = 0.0;
    double i0 = 1.0;
    double tail = 0.0;
    for (int k = 1; k < 60; ++k) {
      term *= q / (double(k) * k);
      harmonic += 1.0 / k;
      i0 += term;
      tail += term * harmonic;
      if (term * (harmonic + 1.0) < eps * std::abs(tail + 1.0)) break;
    }
    return -(std::log(0.5 * z) + euler_gamma) * i0 + tail;
  }
  // Thompson-Barnett / Steed evaluation for order zero.
  double b = 2.0 * (1.0 + z);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-16) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) / s;
}

// ---------------------------------------------------------------------------
// Root finding

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  bool encloses_root() const { return lo < hi && f_lo * f_hi <= 0.0; }
};

template <class F>
Bracket make_bracket(F&& f, double lo, double hi) {
  return Bracket{lo, hi, f(lo), f(hi)};
}

// Secant steps safeguarded by bisection: a secant candidate outside the
// bracket, or one that failed to halve the width last time, is replaced by
// the midpoint.  Stops when |f(x)| <= tol or the width <= tol * max(1, |x|).
template <class F>
double find_root_bracketed(F&& f, Bracket br, double tol, int max_iter = 200) {
  if (!br.encloses_root()) {
    throw ValidationError("bracket", "does not enclose a sign change");
  }
  if (br.f_lo == 0.0) return br.lo;
  if (br.f_hi == 0.0) return br.hi;

  double lo = br.lo, hi = br.hi, f_lo = br.f_lo, f_hi = br.f_hi;
  double last_width = hi - lo;
  bool force_bisect = false;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    x = 0.5 * (lo + hi);
    if (!force_bisect) {
      const double secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
      if (secant > lo && secant < hi) x = secant;
    }
    const double fx = f(x);
    if (std::abs(fx) <= tol || fx == 0.0) return x;
    if ((fx < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    const double width = hi - lo;
    if (width <= tol * std::max(1.0, std::abs(x))) {
      return std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
    }
    force_bisect = width > 0.5 * last_width;
    last_width = width;
  }
  throw SolverError("find_root_bracketed: no convergence after " + std::to_string(max_iter) +
                    " iterations");
}

// ---------------------------------------------------------------------------
// Quadrature

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int max_gauss_hermite_points = 256;

// Gauss-Hermite rule for weight exp(-t^2), nodes ascending.  Nodes start
// from the eigenvalues of the Jacobi matrix and are polished by Newton on
// the orthonormal recurrence, which also yields the weights 2 / p'(t)^2.
inline QuadratureRule gauss_hermite_nodes(int k) {
  if (k < 1 || k > max_gauss_hermite_points) {
    throw ValidationError("k", "Gauss-Hermite order must lie in [1, 256]");
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd sub(std::max(k - 1, 0));
  for (int j = 1; j < k; ++j) sub[j - 1] = std::sqrt(0.5 * j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  const double pim4 = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  std::vector<double> x(k), w(k);
  for (int i = 0; i < k; ++i) {
    double z = eig.eigenvalues()[i];
    double pp = 1.0;
    for (int it = 0; it < 20; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < k; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * k) * p2;
      const double step = p1 / pp;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    w[i] = 2.0 / (pp * pp);
  }
  // Enforce the exact symmetry of the rule.
  for (int i = 0; i < k / 2; ++i) {
    const double node = 0.5 * (x[k - 1 - i] - x[i]);
    const double weight = 0.5 * (w[i] + w[k - 1 - i]);
    x[i] = -node;
    x[k - 1 - i] = node;
    w[i] = w[k - 1 - i] = weight;
  }
  if (k % 2 == 1) x[k / 2] = 0.0;
  return {std::move(x), std::move(w)};
}

// Composite Simpson on [a, b] with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  if (panels < 2) panels = 2;
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Trapezoid rule for a 2*pi-periodic integrand: spectrally accurate.
template <class F>
double periodic_trapezoid(F&& f, int points) {
  const double h = 2.0 * std::numbers::pi / points;
  double acc = 0.0;
  for (int i = 0; i < points; ++i) acc += f(i * h);
  return acc * h;
}

// ---------------------------------------------------------------------------
// Grids and finite differences

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Extent {
  double x_min = -1.0, x_max = 1.0, y_min = -1.0, y_max = 1.0;
};

// Row-major samples on a uniform tensor grid; x varies fastest.
template <class T>
struct Grid2D {
  Extent extent;
  int nx = 0;
  int ny = 0;
  std::vector<T> values;

  Grid2D() = default;
  Grid2D(Extent e, int nx_, int ny_) : extent(e), nx(nx_), ny(ny_) {
    if (nx < 2 || ny < 2) throw ValidationError("grid", "needs at least 2 points per axis");
    if (!(e.x_max > e.x_min) || !(e.y_max > e.y_min)) {
      throw ValidationError("extent", "must be non-empty");
    }
    values.resize(static_cast<std::size_t>(nx) * ny);
  }

  template <class F>
  static Grid2D sample(Extent e, int nx, int ny, F&& f) {
    Grid2D g(e, nx, ny);
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) g.at(i, j) = f(g.x(i), g.y(j));
    }
    return g;
  }

  double hx() const { return (extent.x_max - extent.x_min) / (nx - 1); }
  double hy() const { return (extent.y_max - extent.y_min) / (ny - 1); }
  double x(int i) const { return extent.x_min + i * hx(); }
  double y(int j) const { return extent.y_min + j * hy(); }

  T& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
  const T& at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }

  bool interior(int i, int j) const { return i >= 1 && i <= nx - 2 && j >= 1 && j <= ny - 2; }
};

template <class A, class B>
bool same_layout(const Grid2D<A>& a, const Grid2D<B>& b) {
  return a.nx == b.nx && a.ny == b.ny && a.extent.x_min == b.extent.x_min &&
         a.extent.x_max == b.extent.x_max && a.extent.y_min == b.extent.y_min &&
         a.extent.y_max == b.extent.y_max;
}

namespace detail {
template <class T>
void require_interior(const Grid2D<T>& g, int i, int j) {
  if (!g.interior(i, j)) {
    throw ValidationError("index", "(" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") is not an interior grid point");
  }
}
}  // namespace detail

inline double fd_divergence(const Grid2D<Vec2>& f, int i, int j) {
  detail::require_interior(f, i, j);
  return (f.at(i + 1, j).x - f.at(i - 1, j).x) / (2.0 * f.hx()) +
         (f.at(i, j + 1).y - f.at(i, j - 1).y) / (2.0 * f.hy());
}

inline double fd_curl_z(const Grid2D<Vec2>& f, int i, int j) {
  detail::require_interior(f, i, j);
  return (f.at(i + 1, j).y - f.at(i - 1, j).y) / (2.0 * f.hx()) -
         (f.at(i, j + 1).x - f.at(i, j - 1).x) / (2.0 * f.hy());
}

inline double fd_laplacian(const Grid2D<double>& f, int i, int j) {
  detail::require_interior(f, i, j);
  const double hx = f.hx(), hy = f.hy();
  return (f.at(i + 1, j) - 2.0 * f.at(i, j) + f.at(i - 1, j)) / (hx * hx) +
         (f.at(i, j + 1) - 2.0 * f.at(i, j) + f.at(i, j - 1)) / (hy * hy);
}

}  // namespace magbound
