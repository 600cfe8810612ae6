#pragma once

// Landau-gauge eigenstates of the free magnetic Hamiltonian with vector
// potential A = (-yB, 0, 0) and electron charge e < 0.

#include <cmath>
#include <complex>

#include "magbound/errors.hpp"
#include "magbound/special.hpp"
#include "magbound/units.hpp"

namespace magbound {

using cplx = std::complex<double>;

struct LandauQuantum {
  int n = 0;          // Landau level
  double p = 0.0;     // momentum along x
  int s = 1;          // spin projection, +1 or -1

  void validate() const {
    if (n < 0) throw ValidationError("n", "Landau level must be non-negative");
    if (s != 1 && s != -1) throw ValidationError("s", "spin must be +1 or -1");
  }
};

// Classical orbit centre y0 = -c p / (e B).  With e < 0 this is +c p / |e| B.
struct GuidingCenter {
  double y0 = 0.0;

  static GuidingCenter from_momentum(double p, const DerivedScales& sc) {
    return {-sc.light_speed * p / (sc.charge * sc.field)};
  }
};

// hbar omega (n + 1/2) + s hbar omega m / 2 m_e, in the unit system's energy units.
inline double landau_energy(const LandauQuantum& q, const DerivedScales& sc,
                            const PhysicalParams& params) {
  q.validate();
  return sc.hbar_omega * (q.n + 0.5) + q.s * sc.hbar_omega * params.mass / (2.0 * params.electron_mass);
}

// U_n(y) = (2^n n! sqrt(pi) a)^{-1/2} exp(-(y-y0)^2/2a^2) H_n((y-y0)/a),
// evaluated as a^{-1/2} psi_n((y-y0)/a).
inline double basis_u(int n, double y, double y0, double a) {
  return hermite_function(n, (y - y0) / a) / std::sqrt(a);
}

// Spatial part exp(ipx/hbar) U_n(y; y0(p)); the spinor only enters the energy.
inline cplx landau_state_eval(const LandauQuantum& q, double x, double y, const DerivedScales& sc) {
  q.validate();
  const double y0 = GuidingCenter::from_momentum(q.p, sc).y0;
  return std::polar(basis_u(q.n, y, y0, sc.a), q.p * x / sc.hbar);
}

// V_n(0) = sqrt(a) U_n(y = 0) for guiding centre y0; dimensionless.
inline double v_n0(int n, double y0, double a) { return hermite_function(n, -y0 / a); }

enum class StencilOrder { Second = 2, Fourth = 4 };

// Central-difference application of
//   (1/2m) [ (-i hbar d/dx + e B y / c)^2 - hbar^2 d^2/dy^2 ]
// to psi at (x, y) with step h, second order in h by default.
template <class Psi>
cplx apply_landau_hamiltonian(Psi&& psi, double x, double y, double h, const DerivedScales& sc,
                              StencilOrder order = StencilOrder::Second) {
  const cplx c0 = psi(x, y);
  const cplx xp = psi(x + h, y), xm = psi(x - h, y);
  const cplx yp = psi(x, y + h), ym = psi(x, y - h);
  cplx dx, dxx, dyy;
  if (order == StencilOrder::Second) {
    dx = (xp - xm) / (2.0 * h);
    dxx = (xp - 2.0 * c0 + xm) / (h * h);
    dyy = (yp - 2.0 * c0 + ym) / (h * h);
  } else {
    const cplx xpp = psi(x + 2.0 * h, y), xmm = psi(x - 2.0 * h, y);
    const cplx ypp = psi(x, y + 2.0 * h), ymm = psi(x, y - 2.0 * h);
    dx = (xmm - 8.0 * xm + 8.0 * xp - xpp) / (12.0 * h);
    dxx = (-xmm + 16.0 * xm - 30.0 * c0 + 16.0 * xp - xpp) / (12.0 * h * h);
    dyy = (-ymm + 16.0 * ym - 30.0 * c0 + 16.0 * yp - ypp) / (12.0 * h * h);
  }
  const double k = sc.charge * sc.field * y / sc.light_speed;
  const cplx i{0.0, 1.0};
  const double hb = sc.hbar;
  const cplx kinetic = -hb * hb * dxx - 2.0 * i * hb * k * dx + k * k * c0 - hb * hb * dyy;
  return kinetic / (2.0 * sc.mass);
}

}  // namespace magbound
