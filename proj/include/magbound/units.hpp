#pragma once

// Physical parameters of a 2D electron in a uniform magnetic field plus an
// attractive zero-range potential, and every derived scale used elsewhere.

#include <cmath>
#include <numbers>
#include <string_view>

#include "magbound/errors.hpp"

namespace magbound {

enum class UnitSystem {
  // hbar = m = omega = 1 (so the magnetic length is 1); e = c = B = 1.
  Natural,
  // Gaussian CGS internally (g, cm, s, G, statC, erg).  Inputs take B in
  // kilogauss; energies are reported in electron-volts.
  GaussianPractical,
};

inline constexpr std::string_view to_string(UnitSystem u) {
  return u == UnitSystem::Natural ? "natural" : "gaussian";
}

namespace cgs {
// CODATA 2018; h and e are exact in the 2019 SI, so hbar is taken as h / 2 pi.
inline constexpr double planck = 6.62607015e-27;           // erg s
inline constexpr double hbar = planck / (2.0 * std::numbers::pi);
inline constexpr double light_speed = 2.99792458e10;       // cm / s
inline constexpr double elementary_charge = 4.803204712570263e-10;  // statC
inline constexpr double electron_mass = 9.1093837015e-28;  // g
inline constexpr double erg_per_ev = 1.602176634e-12;
inline constexpr double gauss_per_kilogauss = 1.0e3;
}  // namespace cgs

struct PhysicalParams {
  UnitSystem units = UnitSystem::Natural;
  double field = 1.0;          // B > 0 (gauss in GaussianPractical)
  double mass = 1.0;           // effective mass m
  double electron_mass = 1.0;  // free-electron mass m_e
  double charge_mag = 1.0;     // |e|; the electron charge is -charge_mag
  double hbar = 1.0;
  double light_speed = 1.0;
  double coupling = 1.0;       // dimensionless lambda > 0

  // mass_ratio = m / m_e.
  static PhysicalParams natural(double coupling, double mass_ratio = 1.0) {
    detail::require_positive(mass_ratio, "mass_ratio");
    PhysicalParams p;
    p.coupling = coupling;
    p.electron_mass = 1.0 / mass_ratio;
    return p;
  }

  static PhysicalParams gaussian(double field_kilogauss, double coupling,
                                 double mass_ratio = 1.0) {
    detail::require_positive(mass_ratio, "mass_ratio");
    PhysicalParams p;
    p.units = UnitSystem::GaussianPractical;
    p.field = field_kilogauss * cgs::gauss_per_kilogauss;
    p.electron_mass = cgs::electron_mass;
    p.mass = mass_ratio * cgs::electron_mass;
    p.charge_mag = cgs::elementary_charge;
    p.hbar = cgs::hbar;
    p.light_speed = cgs::light_speed;
    p.coupling = coupling;
    return p;
  }

  double charge() const { return -charge_mag; }

  void validate() const {
    detail::require_positive(field, "B");
    detail::require_positive(mass, "m");
    detail::require_positive(electron_mass, "m_e");
    detail::require_positive(charge_mag, "e");
    detail::require_positive(hbar, "hbar");
    detail::require_positive(light_speed, "c");
    detail::require_positive(coupling, "lambda");
  }
};

// Everything downstream needs, so evaluators can take a single argument.
struct DerivedScales {
  UnitSystem units = UnitSystem::Natural;
  double omega = 1.0;          // cyclotron frequency |e|B/mc
  double a = 1.0;              // magnetic length sqrt(hbar c/|e|B)
  double mu = 0.5;             // Bohr magneton |e|hbar/2 m_e c
  double lambda0 = 0.0;        // lambda / (4 pi m omega a)
  double d = std::numbers::sqrt2;  // vortex length, d^2 = 2 a^2
  double j0 = 0.0;             // hbar / (2 pi m a^4)
  double A_scale = 0.0;        // hbar / (m a^4) = 2 pi j0
  double hbar_omega = 1.0;     // Landau spacing, in unit-system energy units

  // Carried through for operators that need the bare constants.
  double hbar = 1.0;
  double mass = 1.0;
  double charge = -1.0;        // signed electron charge
  double field = 1.0;
  double light_speed = 1.0;
};

// Energy conversion from internal units (erg in GaussianPractical) to
// reported units (eV).  Identity in natural units.
inline double reported_energy(double internal, UnitSystem units) {
  return units == UnitSystem::GaussianPractical ? internal / cgs::erg_per_ev
                                                : internal;
}

inline double bohr_magneton(const PhysicalParams& p) {
  p.validate();
  const double mu = p.charge_mag * p.hbar / (2.0 * p.electron_mass * p.light_speed);
  return reported_energy(mu, p.units);
}

inline DerivedScales derive_scales(const PhysicalParams& p) {
  p.validate();
  DerivedScales s;
  s.units = p.units;
  s.hbar = p.hbar;
  s.mass = p.mass;
  s.charge = p.charge();
  s.field = p.field;
  s.light_speed = p.light_speed;

  s.omega = p.charge_mag * p.field / (p.mass * p.light_speed);
  s.a = std::sqrt(p.hbar * p.light_speed / (p.charge_mag * p.field));
  s.mu = bohr_magneton(p);
  s.lambda0 = p.coupling / (4.0 * std::numbers::pi * p.mass * s.omega * s.a);
  s.d = std::numbers::sqrt2 * s.a;
  const double a4 = (s.a * s.a) * (s.a * s.a);
  s.A_scale = p.hbar / (p.mass * a4);
  s.j0 = s.A_scale / (2.0 * std::numbers::pi);
  s.hbar_omega = reported_energy(p.hbar * s.omega, p.units);
  return s;
}

}  // namespace magbound
