#pragma once

// Probability-current fields of the magnetic ground state, their curl and
// vortex intensity, the complex-variable form of the current, and the
// superposition of several point vortices.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "magbound/errors.hpp"
#include "magbound/landau.hpp"
#include "magbound/special.hpp"
#include "magbound/units.hpp"

namespace magbound {

struct CurrentSample {
  double x = 0.0;
  double y = 0.0;
  double jx = 0.0;
  double jy = 0.0;

  Vec2 j() const { return {jx, jy}; }
  double magnitude() const { return std::hypot(jx, jy); }
};

// Closed-form azimuthal current of the ground state:
//   jx = -j0 y exp(-r^2/2a^2),  jy = j0 x exp(-r^2/2a^2).
inline CurrentSample current_closed_form(double x, double y, const DerivedScales& sc) {
  const double g = sc.j0 * std::exp(-(x * x + y * y) / (2.0 * sc.a * sc.a));
  return {x, y, -g * y, g * x};
}

// Constants for the gauge-covariant current; field = 0 gives the
// field-free expression hbar Im(psi* grad psi) / m.
struct GaugeContext {
  double hbar = 1.0;
  double mass = 1.0;
  double charge = -1.0;
  double field = 1.0;
  double light_speed = 1.0;

  static GaugeContext from(const DerivedScales& sc) {
    return {sc.hbar, sc.mass, sc.charge, sc.field, sc.light_speed};
  }
  static GaugeContext field_free(double hbar, double mass) { return {hbar, mass, -1.0, 0.0, 1.0}; }
};

inline constexpr double default_gauge_step = 1e-4;  // in units of the state's length scale

// j = (1/m) [hbar Im(psi* grad psi) - (e/c) A |psi|^2] with A = (-yB, 0) and
// central-difference gradients of step h.
template <class Psi>
CurrentSample current_gauge(Psi&& psi, double x, double y, double h, const GaugeContext& g) {
  detail::require_positive(h, "h");
  const cplx c0 = psi(x, y);
  const cplx dx = (psi(x + h, y) - psi(x - h, y)) / (2.0 * h);
  const cplx dy = (psi(x, y + h) - psi(x, y - h)) / (2.0 * h);
  const double dens = std::norm(c0);
  const double ax = -y * g.field;
  const double jx = (g.hbar * std::imag(std::conj(c0) * dx) - g.charge / g.light_speed * ax * dens) / g.mass;
  const double jy = g.hbar * std::imag(std::conj(c0) * dy) / g.mass;
  return {x, y, jx, jy};
}

// (A/pi) (1 - |z|^2/d^2) exp(-|z|^2/d^2)
inline double curl_closed(double x, double y, const DerivedScales& sc) {
  const double rho = (x * x + y * y) / (sc.d * sc.d);
  return sc.A_scale / std::numbers::pi * (1.0 - rho) * std::exp(-rho);
}

// I(z) = A |z|^2 exp(-|z|^2/d^2): circulation around the circle through z.
inline double vortex_intensity(cplx z, const DerivedScales& sc) {
  const double zz = std::norm(z);
  return sc.A_scale * zz * std::exp(-zz / (sc.d * sc.d));
}

// j = i I(z) / (2 pi conj(z)) as jx + i jy.  The origin is a removable point.
inline cplx current_complex(cplx z, const DerivedScales& sc) {
  if (z == cplx{0.0, 0.0}) return {0.0, 0.0};
  return cplx{0.0, 1.0} * vortex_intensity(z, sc) / (2.0 * std::numbers::pi * std::conj(z));
}

// Probability current to electric current.
inline CurrentSample electric_current(CurrentSample s, double charge) {
  s.jx *= charge;
  s.jy *= charge;
  return s;
}

// ---------------------------------------------------------------------------
// Several vortices

struct VortexCenter {
  cplx z;
  double intensity = 0.0;
};

inline constexpr double vortex_separation_factor = 1e-6;  // epsilon_sep / a

struct VortexConfig {
  std::vector<VortexCenter> centers;
  double min_separation = 0.0;

  static VortexConfig make(std::vector<VortexCenter> centers, double a) {
    if (centers.empty()) throw ValidationError("centers", "at least one vortex centre is required");
    VortexConfig cfg{std::move(centers), vortex_separation_factor * a};
    for (std::size_t k = 0; k < cfg.centers.size(); ++k) {
      const auto& c = cfg.centers[k];
      if (!std::isfinite(c.z.real()) || !std::isfinite(c.z.imag())) {
        throw ValidationError("centers", "centre " + std::to_string(k) + " has a non-finite position");
      }
      if (!(c.intensity >= 0.0) || !std::isfinite(c.intensity)) {
        throw ValidationError("intensity", "centre " + std::to_string(k) + " needs a finite intensity >= 0");
      }
      for (std::size_t m = 0; m < k; ++m) {
        if (std::abs(c.z - cfg.centers[m].z) < cfg.min_separation) {
          throw ValidationError("centers", "centres " + std::to_string(m) + " and " +
                                               std::to_string(k) + " coincide");
        }
      }
    }
    return cfg;
  }

  bool near_pole(cplx z) const {
    for (const auto& c : centers) {
      if (std::abs(z - c.z) < min_separation) return true;
    }
    return false;
  }
};

// Sum of point vortices, each of the single-centre form i I_k / (2 pi conj(z - z_k)).
// Throws DomainError within min_separation of a centre.
inline cplx multi_center_current(const VortexConfig& cfg, cplx z) {
  if (cfg.near_pole(z)) throw DomainError("multi_center_current: point lies on a vortex centre");
  cplx acc{0.0, 0.0};
  for (const auto& c : cfg.centers) acc += c.intensity / std::conj(z - c.z);
  return cplx{0.0, 1.0} * acc / (2.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------------
// Continuity and Stokes checks

struct ContinuityReport {
  double max_abs_divergence = 0.0;
  int i = -1;
  int j = -1;
  double x = 0.0;
  double y = 0.0;
};

// The density is stationary, so continuity reduces to div j = 0.  Reports
// the largest central-difference divergence over interior points.
inline ContinuityReport continuity_check(const Grid2D<Vec2>& current, const Grid2D<double>& density) {
  if (!same_layout(current, density)) {
    throw ValidationError("grid", "current and density grids differ in layout");
  }
  ContinuityReport r;
  for (int j = 1; j < current.ny - 1; ++j) {
    for (int i = 1; i < current.nx - 1; ++i) {
      const double d = std::abs(fd_divergence(current, i, j));
      if (r.i < 0 || d > r.max_abs_divergence) {
        r = {d, i, j, current.x(i), current.y(j)};
      }
    }
  }
  return r;
}

template <class F>
Grid2D<Vec2> sample_current(Extent e, int nx, int ny, F&& field) {
  return Grid2D<Vec2>::sample(e, nx, ny, [&](double x, double y) { return field(x, y).j(); });
}

// Circulation of a current field around |z| = r by the periodic trapezoid rule.
template <class F>
double circulation(F&& field, double r, int points = 512) {
  return periodic_trapezoid(
      [&](double t) {
        const CurrentSample s = field(r * std::cos(t), r * std::sin(t));
        return r * (-s.jx * std::sin(t) + s.jy * std::cos(t));
      },
      points);
}

// Flux of a scalar curl through the disc |z| <= r: Simpson in radius,
// trapezoid in angle.
template <class F>
double disc_flux(F&& curl, double r, int radial = 512, int angular = 256) {
  return simpson(
      [&](double rho) {
        return rho * periodic_trapezoid(
                         [&](double t) { return curl(rho * std::cos(t), rho * std::sin(t)); }, angular);
      },
      0.0, r, radial);
}

}  // namespace magbound
