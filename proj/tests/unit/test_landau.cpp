#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "magbound/landau.hpp"

using namespace magbound;

namespace {

const DerivedScales natural = derive_scales(PhysicalParams::natural(1.0));

// int f(y) dy by a fine trapezoid on [-L, L]; the integrands are Gaussian-
// damped so the rule converges spectrally.
template <class F>
double integrate(F&& f, double L = 20.0, int panels = 8000) {
  const double h = 2.0 * L / panels;
  double acc = 0.5 * (f(-L) + f(L));
  for (int i = 1; i < panels; ++i) acc += f(-L + i * h);
  return acc * h;
}

}  // namespace

TEST(LandauEnergy, SpinSplitting) {
  PhysicalParams p = PhysicalParams::natural(1.0);
  EXPECT_DOUBLE_EQ(landau_energy({0, 0.0, -1}, natural, p), 0.0);
  EXPECT_DOUBLE_EQ(landau_energy({1, 0.0, +1}, natural, p), 2.0);
  // m = 2 m_e: the spin term is hbar omega m / 2 m_e = hbar omega.
  p = PhysicalParams::natural(1.0, 2.0);
  EXPECT_DOUBLE_EQ(landau_energy({0, 0.0, +1}, derive_scales(p), p), 1.5);
  // m = m_e / 2 gives a quarter.
  p = PhysicalParams::natural(1.0, 0.5);
  EXPECT_DOUBLE_EQ(landau_energy({0, 0.0, +1}, derive_scales(p), p), 0.75);
}

TEST(LandauEnergy, RejectsBadQuantumNumbers) {
  const PhysicalParams p = PhysicalParams::natural(1.0);
  EXPECT_THROW(landau_energy({-1, 0.0, 1}, natural, p), ValidationError);
  EXPECT_THROW(landau_energy({0, 0.0, 0}, natural, p), ValidationError);
  EXPECT_THROW(landau_energy({0, 0.0, 2}, natural, p), ValidationError);
}

TEST(GuidingCenter, SignFollowsNegativeCharge) {
  EXPECT_DOUBLE_EQ(GuidingCenter::from_momentum(1.5, natural).y0, 1.5);
  EXPECT_DOUBLE_EQ(GuidingCenter::from_momentum(-0.5, natural).y0, -0.5);
}

TEST(BasisU, PeakValue) {
  for (double a : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(basis_u(0, 0.7, 0.7, a), 1.0 / std::sqrt(std::sqrt(std::numbers::pi) * a), 1e-15);
  }
}

TEST(BasisU, Orthonormality) {
  for (double a : {1.0, 2.5}) {
    for (int m = 0; m <= 10; ++m) {
      for (int n = m; n <= 10; ++n) {
        const double v = integrate([&](double y) { return basis_u(m, y, 0.3, a) * basis_u(n, y, 0.3, a); },
                                   20.0 * a);
        EXPECT_NEAR(v, m == n ? 1.0 : 0.0, 1e-9) << m << "," << n << " a=" << a;
      }
    }
  }
}

TEST(BasisU, TranslationCovariance) {
  for (int n : {0, 1, 4, 9}) {
    for (double y : {-2.0, 0.0, 0.75, 3.0}) {
      EXPECT_EQ(basis_u(n, y, 1.25, 0.8), basis_u(n, y - 1.25, 0.0, 0.8));
    }
  }
}

TEST(BasisU, OrderOutOfRange) {
  EXPECT_THROW(basis_u(max_hermite_order + 1, 0.0, 0.0, 1.0), DomainError);
}

TEST(LandauState, PhaseAndModulus) {
  EXPECT_NEAR(std::abs(landau_state_eval({0, 0.0, 1}, 0.0, 0.0, natural) - std::pow(std::numbers::pi, -0.25)),
              0.0, 1e-15);
  const cplx real_state = landau_state_eval({2, 0.0, 1}, 3.3, 0.4, natural);
  EXPECT_EQ(real_state.imag(), 0.0);
  const LandauQuantum q{3, 0.8, -1};
  const double m0 = std::abs(landau_state_eval(q, 0.0, 0.2, natural));
  for (double x : {-5.0, 1.0, 17.0}) {
    EXPECT_NEAR(std::abs(landau_state_eval(q, x, 0.2, natural)), m0, 1e-14);
  }
}

// Fourth-order stencil: the second-order truncation error grows like
// h^2 (y - y0)^4 / a^4 relative to the state and exceeds 1e-5 in the tails.
TEST(LandauState, HamiltonianEigenstate) {
  for (double field : {1.0, 2.0}) {
    PhysicalParams p = PhysicalParams::natural(1.0);
    p.field = field;
    const DerivedScales sc = derive_scales(p);
    const double h = 1e-3 * sc.a;
    for (int n = 0; n <= 3; ++n) {
      for (double mom : {-1.0, 0.0, 1.0}) {
        const LandauQuantum q{n, mom, 1};
        auto psi = [&](double x, double y) { return landau_state_eval(q, x, y, sc); };
        const double e = sc.hbar * sc.omega * (n + 0.5);
        for (double x : {-0.4, 0.9}) {
          for (double y = -3.0; y <= 3.0; y += 0.25) {
            const cplx v = psi(x, y);
            if (std::abs(v) <= 1e-6) continue;
            const cplx res = apply_landau_hamiltonian(psi, x, y, h, sc, StencilOrder::Fourth) - e * v;
            EXPECT_LE(std::abs(res) / std::abs(v), 1e-5) << "n=" << n << " p=" << mom << " y=" << y;
          }
        }
      }
    }
  }
}

TEST(VN0, Values) {
  EXPECT_NEAR(v_n0(0, 0.0, 1.0), std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_EQ(v_n0(1, 0.0, 1.0), 0.0);
  EXPECT_NEAR(v_n0(2, 0.4, 2.0), std::sqrt(2.0) * basis_u(2, 0.0, 0.4, 2.0), 1e-15);
}

TEST(VN0, PartialSumsIncrease) {
  double prev = 0.0;
  for (int n = 0; n <= 40; ++n) {
    const double v = v_n0(n, 0.6, 1.0);
    const double next = prev + v * v;
    EXPECT_GE(next, prev);
    prev = next;
  }
}
