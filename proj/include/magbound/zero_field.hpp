#pragma once

// The field-free delta-potential bound state, a K0 profile with
// localization length l0 = sqrt(hbar^2 / 2 m |E0|), and the comparison
// with the magnetic length.

#include <cmath>
#include <complex>
#include <numbers>

#include "magbound/errors.hpp"
#include "magbound/special.hpp"
#include "magbound/units.hpp"

namespace magbound {

inline double localization_length(double e0_mag, double hbar, double mass) {
  detail::require_positive(e0_mag, "E0");
  detail::require_positive(hbar, "hbar");
  detail::require_positive(mass, "m");
  return hbar / std::sqrt(2.0 * mass * e0_mag);
}

// int_0^inf t K0(t)^2 dt by the trapezoid rule in u = ln t, where the
// integrand e^{2u} K0(e^u)^2 decays double-exponentially at both ends.
inline double k0_radial_moment() {
  constexpr double u_lo = -40.0;
  const double u_hi = std::log(50.0);
  constexpr int panels = 4000;
  const double h = (u_hi - u_lo) / panels;
  double acc = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double t = std::exp(u_lo + i * h);
    const double k = bessel_k0(t);
    acc += (i == 0 || i == panels ? 0.5 : 1.0) * t * t * k * k;
  }
  return acc * h;
}

struct ZeroFieldState {
  double e0_mag = 1.0;       // |E0|, internal energy units
  double l0 = 1.0;
  double coupling = 1.0;     // lambda
  double c_prefactor = 1.0;  // C, fixed by unit L^2 normalization

  static ZeroFieldState make(double e0_mag, double hbar, double mass, double coupling) {
    detail::require_positive(coupling, "lambda");
    ZeroFieldState s;
    s.e0_mag = e0_mag;
    s.l0 = localization_length(e0_mag, hbar, mass);
    s.coupling = coupling;
    static const double moment = k0_radial_moment();
    // (C lambda / 2 pi)^2 * 2 pi l0^2 * moment = 1
    s.c_prefactor = 2.0 * std::numbers::pi / coupling / (s.l0 * std::sqrt(2.0 * std::numbers::pi * moment));
    return s;
  }

  double amplitude() const { return c_prefactor * coupling / (2.0 * std::numbers::pi); }
};

// C (lambda / 2 pi) K0(r / l0); logarithmically singular at the origin.
inline double zero_field_state_eval(const ZeroFieldState& s, double x, double y) {
  if (x == 0.0 && y == 0.0) {
    throw ValidationError("position", "the K0 state is singular at the origin");
  }
  return s.amplitude() * bessel_k0(std::hypot(x, y) / s.l0);
}

// a / l0 at m = m_e from first principles, |E0| in eV and B in kG.
inline double localization_ratio_exact(double e0_ev, double b_kg) {
  detail::require_positive(e0_ev, "E0");
  detail::require_positive(b_kg, "B");
  const DerivedScales sc = derive_scales(PhysicalParams::gaussian(b_kg, 1.0));
  const double l0 = localization_length(e0_ev * cgs::erg_per_ev, cgs::hbar, cgs::electron_mass);
  return sc.a / l0;
}

// The rounded practical formula a / l0 = 4e2 sqrt(|E0| / B).
inline double localization_ratio_rounded(double e0_ev, double b_kg) {
  detail::require_positive(e0_ev, "E0");
  detail::require_positive(b_kg, "B");
  return 400.0 * std::sqrt(e0_ev / b_kg);
}

// Time inside a narrow well of radius r0 relative to the time outside it:
// r0^2 ln^2(r0/l0) / l0^2 without field (scale = l0), r0^2 / a^2 with
// field (scale = a).  Requires r0 <= 0.1 scale.
inline double dwell_ratio(double r0, double state_scale, bool with_field) {
  detail::require_positive(r0, "r0");
  detail::require_positive(state_scale, "state_scale");
  if (r0 > 0.1 * state_scale) {
    throw ValidationError("r0", "must be at most 0.1 of the localization scale");
  }
  const double q = r0 / state_scale;
  if (with_field) return q * q;
  const double lg = std::log(q);
  return q * q * lg * lg;
}

}  // namespace magbound
