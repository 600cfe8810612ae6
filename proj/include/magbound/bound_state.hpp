#pragma once

// Bound state of the attractive delta potential below the lowest Landau
// level.  Energies here are in units of hbar*omega unless noted; the bound
// level is parameterized by b = 1/2 - E / (hbar omega) > 0.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include "magbound/errors.hpp"
#include "magbound/landau.hpp"
#include "magbound/special.hpp"
#include "magbound/units.hpp"

namespace magbound {

enum class SolverMethod { ExactSum, LogApprox, Asymptotic };

inline constexpr std::string_view to_string(SolverMethod m) {
  switch (m) {
    case SolverMethod::ExactSum: return "exact";
    case SolverMethod::LogApprox: return "log";
    case SolverMethod::Asymptotic: return "asymptotic";
  }
  return "?";
}

inline SolverMethod parse_solver_method(std::string_view s) {
  if (s == "exact") return SolverMethod::ExactSum;
  if (s == "log") return SolverMethod::LogApprox;
  if (s == "asymptotic") return SolverMethod::Asymptotic;
  throw ValidationError("method", "expected exact, log or asymptotic, got '" + std::string(s) + "'");
}

struct BoundStateSolution {
  double b = 0.0;
  double energy = 0.0;   // E / (hbar omega) = 1/2 - b
  double binding = 0.0;  // (-E + hbar omega / 2) / (hbar omega) = b
  std::int64_t cutoff_N = 0;
  double c_norm = 0.0;   // C_E, with C_E^{-2} = sum_n 1/(n+b)^2 = trigamma(b)
  SolverMethod method = SolverMethod::ExactSum;
  double coupling = 0.0;
};

namespace detail {

inline void validate_solver_input(double coupling, std::int64_t N) {
  require_positive(coupling, "lambda");
  if (N < 1) throw ValidationError("cutoff", "must be at least 1");
}

inline BoundStateSolution finish(double b, double coupling, std::int64_t N, SolverMethod m) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw SolverError("bound-state parameter b = " + std::to_string(b) +
                      " is not a positive finite number for lambda = " + std::to_string(coupling));
  }
  BoundStateSolution s;
  s.b = b;
  s.energy = 0.5 - b;
  s.binding = b;
  s.cutoff_N = N;
  s.c_norm = 1.0 / std::sqrt(trigamma(b));
  s.method = m;
  s.coupling = coupling;
  return s;
}

inline constexpr std::int64_t direct_sum_threshold = 64;

}  // namespace detail

// sum_{n=0}^{N} 1/(n+b) by direct summation, smallest terms first.
inline double energy_sum_direct(double b, std::int64_t N) {
  if (!(b > 0.0)) throw DomainError("energy_sum: b must be positive");
  if (N < 0) throw DomainError("energy_sum: N must be non-negative");
  double acc = 0.0;
  for (std::int64_t n = N; n >= 0; --n) acc += 1.0 / (double(n) + b);
  return acc;
}

// sum_{n=0}^{N} 1/(n+b) = psi(N+1+b) - psi(b); short sums are added directly.
inline double energy_sum(double b, std::int64_t N) {
  if (!(b > 0.0)) throw DomainError("energy_sum: b must be positive");
  if (N < 0) throw DomainError("energy_sum: N must be non-negative");
  if (N < detail::direct_sum_threshold) return energy_sum_direct(b, N);
  return digamma(double(N) + 1.0 + b) - digamma(b);
}

// |(lambda / 4 pi) sum_{n<=N} 1/(n+b) - 1|
inline double truncated_residual(double coupling, double b, std::int64_t N) {
  return std::abs(coupling / (4.0 * std::numbers::pi) * energy_sum(b, N) - 1.0);
}

// Unique b > 0 with (lambda/4pi) sum_{n<=N} 1/(n+b) = 1.  The sum falls
// strictly in b, so the root is bracketed in log b and refined.
inline BoundStateSolution solve_b_exact(double coupling, std::int64_t N, double tol = 1e-14) {
  detail::validate_solver_input(coupling, N);
  const double target = 4.0 * std::numbers::pi / coupling;
  auto f = [&](double log_b) { return energy_sum(std::exp(log_b), N) / target - 1.0; };

  const double b_min = 1e-12 * (double(N) + 1.0);
  if (energy_sum(b_min, N) < target) {
    throw SolverError("coupling lambda = " + std::to_string(coupling) +
                      " is too weak for cutoff N = " + std::to_string(N) +
                      ": the bound level lies below b = " + std::to_string(b_min));
  }
  double b_hi = double(N) * 1e3;
  while (energy_sum(b_hi, N) > target) {
    b_hi *= 10.0;
    if (!std::isfinite(b_hi) || b_hi > 1e300) {
      throw SolverError("coupling lambda = " + std::to_string(coupling) + " is out of range");
    }
  }
  const Bracket br = make_bracket(f, std::log(b_min), std::log(b_hi));
  const double b = std::exp(find_root_bracketed(f, br, tol));
  return detail::finish(b, coupling, N, SolverMethod::ExactSum);
}

// Large-N form of the truncated condition, 1 = (lambda/4pi) ln(N/b + 1).
inline BoundStateSolution solve_b_log(double coupling, std::int64_t N) {
  detail::validate_solver_input(coupling, N);
  const double b = double(N) / std::expm1(4.0 * std::numbers::pi / coupling);
  return detail::finish(b, coupling, N, SolverMethod::LogApprox);
}

// Leading behaviour hbar omega b = hbar omega N exp(-4pi/lambda).
inline BoundStateSolution b_asymptotic(double coupling, std::int64_t N) {
  detail::validate_solver_input(coupling, N);
  const double b = double(N) * std::exp(-4.0 * std::numbers::pi / coupling);
  return detail::finish(b, coupling, N, SolverMethod::Asymptotic);
}

inline BoundStateSolution solve_bound_state(SolverMethod m, double coupling, std::int64_t N) {
  switch (m) {
    case SolverMethod::ExactSum: return solve_b_exact(coupling, N);
    case SolverMethod::LogApprox: return solve_b_log(coupling, N);
    case SolverMethod::Asymptotic: return b_asymptotic(coupling, N);
  }
  throw ValidationError("method", "unknown solver method");
}

// Residual of the defining equation of whichever method produced `s`.
inline double method_residual(const BoundStateSolution& s) {
  const double k = s.coupling / (4.0 * std::numbers::pi);
  switch (s.method) {
    case SolverMethod::ExactSum: return truncated_residual(s.coupling, s.b, s.cutoff_N);
    case SolverMethod::LogApprox: return std::abs(k * std::log1p(double(s.cutoff_N) / s.b) - 1.0);
    case SolverMethod::Asymptotic:
      return std::abs(s.b - double(s.cutoff_N) * std::exp(-1.0 / k)) / s.b;
  }
  return 0.0;
}

// Bare coupling lambda(N) that keeps the log-method b fixed at target_b as
// the cutoff moves: lambda = 4 pi / ln(N / target_b + 1).
inline double transmutation_lambda(std::int64_t N, double target_b) {
  if (N < 1) throw ValidationError("cutoff", "must be at least 1");
  detail::require_positive(target_b, "target_b");
  if (!(target_b < double(N))) throw ValidationError("target_b", "must be smaller than the cutoff");
  return 4.0 * std::numbers::pi / std::log1p(double(N) / target_b);
}

// Closed-form ground state (1/(sqrt(2pi) a)) exp((-x^2 - y^2 + 2ixy) / 4a^2).
inline cplx ground_state_eval(double x, double y, const DerivedScales& sc) {
  const double a2 = sc.a * sc.a;
  const double amp = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sc.a);
  return std::polar(amp * std::exp(-(x * x + y * y) / (4.0 * a2)), x * y / (2.0 * a2));
}

// H Psi0 - (hbar omega / 2) Psi0 with H applied by central differences.
// Exact away from the delta, so this vanishes as O(h^2).
inline cplx schrodinger_residual(double x, double y, double h, const DerivedScales& sc) {
  if (x == 0.0 && y == 0.0) {
    throw ValidationError("position", "the residual is not defined at the delta (origin)");
  }
  detail::require_positive(h, "h");
  auto psi = [&](double px, double py) { return ground_state_eval(px, py, sc); };
  const cplx h_psi = apply_landau_hamiltonian(psi, x, y, h, sc);
  return h_psi - 0.5 * sc.hbar * sc.omega * psi(x, y);
}

// ---------------------------------------------------------------------------
// Spectral representation C_{Enp} = C_E V_n(0) / (n + b)

struct SpectralCoefficients {
  double b = 0.0;
  std::int64_t cutoff_N = 0;
  double c_E = 0.0;

  static SpectralCoefficients from(const BoundStateSolution& s) { return {s.b, s.cutoff_N, s.c_norm}; }

  // C_{Enp}, with p entering through the guiding centre y0.
  double coefficient(int n, double y0, double a) const { return c_E * v_n0(n, y0, a) / (n + b); }
};

inline constexpr int exact_overlap_order = 127;

// int dp V_n(0) V_k(0) by Gauss-Hermite in u = y0/a (dp = hbar/a du).
// Exact for n + k <= 255; the expected value is (hbar/a) delta_{nk}.
inline double p_overlap(int n, int k, const DerivedScales& sc) {
  static const QuadratureRule rule = gauss_hermite_nodes(128);
  const int top = std::max(n, k);
  double acc = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const auto h = normalized_hermite_polys(top, -rule.nodes[q]);
    acc += rule.weights[q] * h[n] * h[k];
  }
  return sc.hbar / sc.a * acc;
}

// Residual of the coefficient system
//   C_{Enp} (n + b) = lambda0 sum_{l,k} C_{Elk} V_l(0) V_n(0)
// at level n and guiding centre y0.  The p-integrals are done by quadrature
// for l <= 127 and by the orthonormality measure beyond that.
inline double coefficient_system_residual(const SpectralCoefficients& c, double coupling, int n,
                                          double y0, const DerivedScales& sc) {
  const double lambda0 = coupling / (4.0 * std::numbers::pi * sc.mass * sc.omega * sc.a);
  const double vn = v_n0(n, y0, sc.a);
  const double lhs = c.coefficient(n, y0, sc.a) * (n + c.b);

  const std::int64_t quad_top = std::min<std::int64_t>(c.cutoff_N, exact_overlap_order);
  double sum = 0.0;
  for (std::int64_t l = quad_top; l >= 0; --l) {
    sum += c.c_E * p_overlap(int(l), int(l), sc) / (double(l) + c.b);
  }
  if (c.cutoff_N > quad_top) {
    const double tail = digamma(double(c.cutoff_N) + 1.0 + c.b) - digamma(double(quad_top) + 1.0 + c.b);
    sum += c.c_E * sc.hbar / sc.a * tail;
  }
  const double rhs = lambda0 * sum * vn;
  return std::abs(lhs - rhs);
}

// sum_{n,p} |C_{Enp}|^2 over all n with the p-measure taken relative to
// hbar/a.  Quadrature for n <= 127, exact measure for the tail.
inline double spectral_norm(const SpectralCoefficients& c, const DerivedScales& sc) {
  const double unit = sc.hbar / sc.a;
  double acc = 0.0;
  for (int n = exact_overlap_order; n >= 0; --n) {
    acc += p_overlap(n, n, sc) / unit / ((n + c.b) * (n + c.b));
  }
  acc += trigamma(exact_overlap_order + 1.0 + c.b);
  return c.c_E * c.c_E * acc;
}

// Psi_E(x, y) ~ sum_{n<=cutoff_n} 1/(n+b) int dp e^{ipx/hbar} U_n(y; y0) V_n(0; y0),
// unnormalized.  With u = y0/a, the two Gaussians combine to
// exp(-(u - Y/2)^2 - Y^2/4), so t = u - Y/2 is integrated by Gauss-Hermite.
inline cplx reconstruct_state(double b, int cutoff_n, int quad_k, double x, double y,
                              const DerivedScales& sc) {
  detail::require_positive(b, "b");
  check_hermite_order(cutoff_n);
  const QuadratureRule rule = gauss_hermite_nodes(quad_k);
  const double X = x / sc.a;
  const double Y = y / sc.a;

  std::vector<double> inv(static_cast<std::size_t>(cutoff_n) + 1);
  for (int n = 0; n <= cutoff_n; ++n) inv[n] = 1.0 / (n + b);

  cplx acc{0.0, 0.0};
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double u = rule.nodes[q] + 0.5 * Y;
    const auto h1 = normalized_hermite_polys(cutoff_n, Y - u);
    const auto h2 = normalized_hermite_polys(cutoff_n, -u);
    double radial = 0.0;
    for (int n = cutoff_n; n >= 0; --n) radial += inv[n] * h1[n] * h2[n];
    acc += rule.weights[q] * radial * std::polar(1.0, u * X);
  }
  const double prefactor = sc.hbar / sc.a / std::sqrt(sc.a) * std::exp(-0.25 * Y * Y);
  return prefactor * acc;
}

}  // namespace magbound
