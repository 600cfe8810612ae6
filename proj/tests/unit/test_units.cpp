#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "magbound/units.hpp"

using namespace magbound;

TEST(DeriveScales, NaturalUnitsAreUnity) {
  const DerivedScales s = derive_scales(PhysicalParams::natural(1.0));
  EXPECT_EQ(s.a, 1.0);
  EXPECT_EQ(s.omega, 1.0);
  EXPECT_EQ(s.hbar, 1.0);
  EXPECT_EQ(s.mass, 1.0);
  EXPECT_DOUBLE_EQ(s.d, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(s.j0, 1.0 / (2.0 * std::numbers::pi));
}

TEST(DeriveScales, LambdaFourPiGivesUnitLambda0) {
  EXPECT_DOUBLE_EQ(derive_scales(PhysicalParams::natural(4.0 * std::numbers::pi)).lambda0, 1.0);
}

TEST(DeriveScales, GaussianMagneticLength) {
  // sqrt(hbar c / |e| B) with CODATA 2018 constants, hbar = h / 2 pi (evaluated independently
  // in extended precision): 8.1130263e-6 cm at 1 kG, 2.5655642e-6 cm at 10 kG.
  EXPECT_NEAR(derive_scales(PhysicalParams::gaussian(1.0, 1.0)).a / 8.1130262969554497e-06, 1.0, 1e-12);
  EXPECT_NEAR(derive_scales(PhysicalParams::gaussian(10.0, 1.0)).a / 2.5655641815220811e-06, 1.0, 1e-12);
}

TEST(DeriveScales, Identities) {
  for (double kg : {0.5, 1.0, 10.0, 50.0}) {
    const DerivedScales s = derive_scales(PhysicalParams::gaussian(kg, 2.0, 0.067));
    EXPECT_NEAR(s.a * s.a * s.mass * s.omega / s.hbar, 1.0, 1e-12);
    EXPECT_NEAR(s.d * s.d / (2.0 * s.a * s.a), 1.0, 1e-15);
    EXPECT_NEAR(s.A_scale / (2.0 * std::numbers::pi * s.j0), 1.0, 1e-12);
  }
}

TEST(DeriveScales, ScaleHomogeneityInField) {
  PhysicalParams p = PhysicalParams::natural(3.0);
  const DerivedScales s1 = derive_scales(p);
  p.field *= 2.0;
  const DerivedScales s2 = derive_scales(p);
  EXPECT_NEAR(s2.omega / s1.omega, 2.0, 2e-12);
  EXPECT_NEAR(s2.a / s1.a, 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s2.j0 / s1.j0, 4.0, 4e-12);
  EXPECT_NEAR(s2.A_scale / s1.A_scale, 4.0, 4e-12);
}

TEST(DeriveScales, DeterministicBitwise) {
  const PhysicalParams p = PhysicalParams::gaussian(3.7, 5.1, 0.2);
  const DerivedScales a = derive_scales(p), b = derive_scales(p);
  for (auto member : {&DerivedScales::omega, &DerivedScales::a, &DerivedScales::mu, &DerivedScales::lambda0,
                      &DerivedScales::d, &DerivedScales::j0, &DerivedScales::A_scale, &DerivedScales::hbar_omega}) {
    EXPECT_EQ(std::memcmp(&(a.*member), &(b.*member), sizeof(double)), 0);
  }
}

TEST(DeriveScales, RejectsNonPositiveInputsByName) {
  auto expect_field = [](PhysicalParams p, const char* field) {
    try {
      derive_scales(p);
      FAIL() << "expected ValidationError for " << field;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.field(), field);
    }
  };
  PhysicalParams p = PhysicalParams::natural(1.0);
  p.field = 0.0;
  expect_field(p, "B");
  p = PhysicalParams::natural(1.0);
  p.mass = -1.0;
  expect_field(p, "m");
  expect_field(PhysicalParams::natural(-1.0), "lambda");
  expect_field(PhysicalParams::natural(0.0), "lambda");
}

TEST(BohrMagneton, Values) {
  EXPECT_DOUBLE_EQ(bohr_magneton(PhysicalParams::natural(1.0)), 0.5);
  // |e| hbar / 2 m_e c / (erg per eV), CODATA 2018.
  EXPECT_NEAR(bohr_magneton(PhysicalParams::gaussian(1.0, 1.0)), 5.7883818060738013e-09, 1e-17);

  PhysicalParams p = PhysicalParams::natural(1.0);
  const double mu1 = bohr_magneton(p);
  p.electron_mass *= 2.0;
  EXPECT_DOUBLE_EQ(bohr_magneton(p), mu1 / 2.0);
}

TEST(BohrMagneton, NaturalWithMassRatio) {
  // m = 2 m_e in natural units means m_e = 1/2.
  EXPECT_DOUBLE_EQ(bohr_magneton(PhysicalParams::natural(1.0, 2.0)), 1.0);
}
