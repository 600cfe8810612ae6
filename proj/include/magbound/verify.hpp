#pragma once

// Self-verification suite: every closed-form relation the library relies on,
// checked numerically against an independent route at default parameters.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "magbound/bound_state.hpp"
#include "magbound/current.hpp"
#include "magbound/landau.hpp"
#include "magbound/special.hpp"
#include "magbound/units.hpp"
#include "magbound/zero_field.hpp"

namespace magbound {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double target = 0.0;    // for relative checks: measured ~ target (1 +/- tolerance)
  bool relative = false;  // false: measured <= tolerance
};

struct VerifyOptions {
  double coupling = 4.0 * std::numbers::pi;
  std::int64_t cutoff = 10000;
  // Multiplies j0 inside the current fields only (fault injection).
  double perturb_j0 = 1.0;
};

namespace detail {

inline CheckResult upper_bound(std::string name, double measured, double tol) {
  return {std::move(name), measured, tol, measured <= tol};
}

inline CheckResult near(std::string name, double measured, double target, double rel_tol) {
  return {std::move(name), measured, rel_tol, std::abs(measured / target - 1.0) <= rel_tol, target, true};
}

inline double cosh_integral_k0(double z) {
  // K0(z) = int_0^inf exp(-z cosh t) dt; trapezoid is spectrally accurate here.
  constexpr double h = 0.005;
  double acc = 0.5 * std::exp(-z);
  for (int i = 1; i < 4000; ++i) acc += std::exp(-z * std::cosh(i * h));
  return acc * h;
}

inline double max_divergence(const DerivedScales& sc, int n) {
  const Extent e{-4 * sc.a, 4 * sc.a, -4 * sc.a, 4 * sc.a};
  const auto cur = sample_current(e, n, n, [&](double x, double y) { return current_closed_form(x, y, sc); });
  const auto dens = Grid2D<double>::sample(e, n, n, [&](double x, double y) {
    return std::norm(ground_state_eval(x, y, sc));
  });
  return continuity_check(cur, dens).max_abs_divergence;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
  using namespace detail;
  std::vector<CheckResult> out;
  const DerivedScales sc = derive_scales(PhysicalParams::natural(opt.coupling));
  DerivedScales jsc = sc;
  jsc.j0 *= opt.perturb_j0;
  const double a = sc.a;

  {
    const DerivedScales g = derive_scales(PhysicalParams::gaussian(10.0, opt.coupling));
    out.push_back(upper_bound("magnetic length a^2 m omega / hbar = 1",
                              std::abs(g.a * g.a * g.mass * g.omega / g.hbar - 1.0), 1e-12));
  }
  {
    double worst = 0.0;
    for (double x : {0.1, 0.5, 1.0, 5.0, 50.0}) {
      worst = std::max(worst, std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x));
    }
    out.push_back(upper_bound("digamma recurrence psi(x+1) - psi(x) = 1/x", worst, 1e-12));
  }
  {
    double worst = 0.0;
    constexpr double h = 1e-4;
    for (double x : {0.5, 1.0, 2.0, 10.0}) {
      const double fd = (digamma(x + h) - digamma(x - h)) / (2 * h);
      worst = std::max(worst, std::abs(trigamma(x) - fd));
    }
    out.push_back(upper_bound("trigamma = d/dx digamma (central difference)", worst, 1e-6));
  }
  {
    double worst = 0.0;
    for (double z : {0.5, 1.0, 2.0, 3.0, 8.0}) {
      const double ref = cosh_integral_k0(z);
      worst = std::max(worst, std::abs(bessel_k0(z) - ref) / ref);
    }
    out.push_back(upper_bound("K0 vs integral representation (relative)", worst, 1e-10));
  }
  const BoundStateSolution exact = solve_b_exact(opt.coupling, opt.cutoff);
  out.push_back(upper_bound("truncated energy condition residual",
                            truncated_residual(opt.coupling, exact.b, opt.cutoff), 1e-10));
  {
    const BoundStateSolution lg = solve_b_log(opt.coupling, opt.cutoff);
    out.push_back(upper_bound("exact vs logarithmic b, relative (x N)",
                              std::abs(exact.b - lg.b) / exact.b * double(opt.cutoff), 10.0));
  }
  {
    double worst = 0.0;
    for (std::int64_t n : {std::int64_t{1000}, std::int64_t{1000000}}) {
      const double lam = transmutation_lambda(n, 0.1);
      worst = std::max(worst, std::abs(solve_b_log(lam, n).b - 0.1) / 0.1);
    }
    out.push_back(upper_bound("transmutation lambda(N) round trip", worst, 1e-12));
  }
  {
    double worst = 0.0;
    const SpectralCoefficients coeff = SpectralCoefficients::from(exact);
    for (int n = 0; n <= 5; ++n) {
      for (double y0 : {-0.7 * a, 0.0, 1.3 * a}) {
        worst = std::max(worst, coefficient_system_residual(coeff, opt.coupling, n, y0, sc));
      }
    }
    out.push_back(upper_bound("coefficient system residual, n <= 5", worst, 1e-8));
  }
  {
    const double h = 0.05 * a;
    double acc = 0.0;
    for (int j = -240; j <= 240; ++j) {
      for (int i = -240; i <= 240; ++i) acc += std::norm(ground_state_eval(i * h, j * h, sc));
    }
    out.push_back(upper_bound("ground-state norm |1 - int |Psi0|^2|", std::abs(acc * h * h - 1.0), 1e-8));
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double r = (0.2 + 0.15 * k) * a;
      const double t = 0.7 * k + 0.3;
      const double x = r * std::cos(t), y = r * std::sin(t);
      worst = std::max(worst, std::abs(schrodinger_residual(x, y, 1e-3 * a, sc)) /
                                  (sc.hbar * sc.omega * std::abs(ground_state_eval(x, y, sc))));
    }
    out.push_back(upper_bound("ground state: finite-difference Schroedinger residual", worst, 1e-5));
  }
  {
    const double coarse = max_divergence(jsc, 101);
    const double fine = max_divergence(jsc, 201);
    out.push_back(near("continuity: max |div j| shrinks 4x per halving of h", coarse / fine, 4.0, 0.2));
  }
  {
    double worst = 0.0;
    const double h = 1e-3 * a;
    for (auto [px, py] : std::vector<std::pair<double, double>>{{0.3, 0.7}, {1.0, 0.0}, {-1.2, 0.4}, {0.0, 2.0}, {1.5, -1.5}}) {
      const double x = px * a, y = py * a;
      const auto g = sample_current(Extent{x - h, x + h, y - h, y + h}, 3, 3,
                                    [&](double u, double v) { return current_closed_form(u, v, jsc); });
      worst = std::max(worst, std::abs(fd_curl_z(g, 1, 1) - curl_closed(x, y, sc)) / (sc.A_scale / std::numbers::pi));
    }
    out.push_back(upper_bound("curl of current matches closed-form curl", worst, 1e-5));
  }
  {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> radius(0.0, 4.0 * a), angle(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const cplx z = std::polar(radius(rng), angle(rng));
      const CurrentSample s = current_closed_form(z.real(), z.imag(), jsc);
      const cplx jc = current_complex(z, sc);
      const double scale = std::max(s.magnitude(), 1e-300);
      worst = std::max(worst, std::abs(jc - cplx{s.jx, s.jy}) / scale);
    }
    out.push_back(upper_bound("complex-variable current equals Cartesian current", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (double r : {1.0, 2.0, 3.0}) {
      const double circ = circulation([&](double x, double y) { return current_closed_form(x, y, jsc); }, r * a);
      const double flux = disc_flux([&](double x, double y) { return curl_closed(x, y, sc); }, r * a);
      worst = std::max(worst, std::abs(circ - flux) / std::abs(flux));
    }
    out.push_back(upper_bound("Stokes: circulation equals curl flux", worst, 1e-3));
  }
  {
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
      const double circ = circulation([&](double x, double y) { return current_closed_form(x, y, jsc); }, r * a);
      const double inten = vortex_intensity(cplx{r * a, 0.0}, sc);
      worst = std::max(worst, std::abs(circ - inten) / inten);
    }
    out.push_back(upper_bound("vortex intensity equals circulation", worst, 1e-9));
  }
  {
    const double b = 1e-4;
    const cplx ref0 = reconstruct_state(b, 100, 64, 0.0, 0.0, sc);
    const cplx cf0 = ground_state_eval(0.0, 0.0, sc);
    double worst = 0.0;
    for (auto [px, py] : std::vector<std::pair<double, double>>{{0.5, 0.0}, {0.0, 0.5}, {1.0, 1.0}}) {
      const cplx lhs = reconstruct_state(b, 100, 64, px * a, py * a, sc) / ref0;
      const cplx rhs = ground_state_eval(px * a, py * a, sc) / cf0;
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    out.push_back(upper_bound("spectral reconstruction vs closed-form ground state", worst, 1e-2));
  }
  {
    const ZeroFieldState zf = ZeroFieldState::make(0.5, 1.0, 1.0, opt.coupling);
    const GaugeContext g = GaugeContext::field_free(1.0, 1.0);
    auto psi = [&](double x, double y) { return cplx{zero_field_state_eval(zf, x, y), 0.0}; };
    double worst = 0.0;
    const double amp = zf.amplitude();
    const double unit = amp * amp / zf.l0;
    for (int k = 1; k <= 40; ++k) {
      const double x = 0.1 * k * zf.l0 * std::cos(0.37 * k), y = 0.1 * k * zf.l0 * std::sin(0.37 * k);
      const CurrentSample s = current_gauge(psi, x, y, default_gauge_step * zf.l0, g);
      worst = std::max(worst, s.magnitude() / unit);
    }
    out.push_back(upper_bound("zero-field current vanishes (scaled)", worst, 1e-10));
  }
  {
    const VortexConfig cfg = VortexConfig::make({{cplx{-1.5 * a, 0.0}, 0.3}, {cplx{1.5 * a, 0.0}, 0.3}}, a);
    out.push_back(upper_bound("symmetric vortex pair cancels at the midpoint",
                              std::abs(multi_center_current(cfg, cplx{0.0, 0.0})) / 0.3, 1e-10));
  }
  {
    const double exact_ratio = localization_ratio_exact(1.0, 1.0);
    out.push_back(upper_bound("a/l0 at 1 eV, 1 kG: rounded formula within 5%",
                              std::abs(localization_ratio_rounded(1.0, 1.0) / exact_ratio - 1.0), 0.05));
  }
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace magbound
