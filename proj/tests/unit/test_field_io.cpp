#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "magbound/field_io.hpp"

using namespace magbound;

namespace {

const DerivedScales sc = derive_scales(PhysicalParams::natural(4.0 * std::numbers::pi));

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(FormatNumber, FixedScientificNineDigits) {
  EXPECT_EQ(format_number(1.0), "1.00000000e+00");
  EXPECT_EQ(format_number(-0.0), "0.00000000e+00");
  EXPECT_EQ(format_number(123456789.123), "1.23456789e+08");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(round_significant(1.234567891234), 1.23456789);
  EXPECT_TRUE(json_number(std::nan("")).is_null());
}

TEST(SampleGroundState, LayoutAndValues) {
  const double a = sc.a;
  const auto rows = sample_ground_state({-a, a, -a, a}, 3, 3, sc);
  ASSERT_EQ(rows.size(), 9u);
  // y is the outer loop
  EXPECT_EQ(rows[0].y, -a);
  EXPECT_EQ(rows[1].y, -a);
  EXPECT_EQ(rows[1].x, 0.0);
  EXPECT_EQ(rows[3].y, 0.0);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.prob, r.re_psi * r.re_psi + r.im_psi * r.im_psi, 1e-12);
    if (r.y == 0.0) EXPECT_EQ(r.jx, 0.0);
    EXPECT_NEAR(r.curl, curl_closed(r.x, r.y, sc), 1e-15);
  }
  EXPECT_NEAR(rows[4].prob, 1.0 / (2.0 * std::numbers::pi * a * a), 1e-15);
}

TEST(WriteCsv, FieldHeaderAndColumns) {
  std::ostringstream os;
  write_csv(os, sample_ground_state({-2, 2, -1, 1}, 4, 3, sc));
  const auto ls = lines(os.str());
  ASSERT_EQ(ls.size(), 13u);
  EXPECT_EQ(ls[0], "x,y,re_psi,im_psi,prob,jx,jy,curl");
  for (std::size_t k = 1; k < ls.size(); ++k) {
    EXPECT_EQ(std::count(ls[k].begin(), ls[k].end(), ','), 7);
  }
  std::ostringstream again;
  write_csv(again, sample_ground_state({-2, 2, -1, 1}, 4, 3, sc));
  EXPECT_EQ(os.str(), again.str());
}

TEST(ToJson, KeysMatchCsvAndRoundTrip) {
  const auto rows = sample_ground_state({-1, 1, -1, 1}, 2, 2, sc);
  const nlohmann::json j = to_json(rows);
  ASSERT_EQ(j.size(), 4u);
  for (const char* key : {"x", "y", "re_psi", "im_psi", "prob", "jx", "jy", "curl"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  const std::string text = j.dump();
  EXPECT_EQ(nlohmann::json::parse(text).dump(), text);
}

TEST(SampleVortices, PoleSentinelAndMidpoint) {
  const VortexConfig cfg = VortexConfig::make({{{-1.0, 0.0}, 1.0}, {{1.0, 0.0}, 1.0}}, sc.a);
  const VortexSampling s = sample_vortices(cfg, {-1, 1, -1, 1}, 3, 3);
  ASSERT_EQ(s.rows.size(), 9u);
  EXPECT_EQ(s.pole_samples, 2);
  EXPECT_TRUE(std::isnan(s.rows[3].jx));
  EXPECT_TRUE(std::isnan(s.rows[5].jy));
  EXPECT_LE(std::hypot(s.rows[4].jx, s.rows[4].jy), 1e-10);

  std::ostringstream os;
  write_csv(os, s.rows);
  const auto ls = lines(os.str());
  EXPECT_EQ(ls[0], "x,y,jx,jy");
  EXPECT_NE(ls[4].find("nan"), std::string::npos);
  EXPECT_TRUE(to_json(s.rows)[3]["jx"].is_null());
}

TEST(SampleVortices, SingleCenterMatchesFieldPatternUpToFrozenIntensity) {
  // With I frozen at the value on |z| = r, the point vortex equals the
  // closed-form current everywhere on that circle.
  const double r = 1.3 * sc.a;
  const VortexConfig cfg = VortexConfig::make({{{0.0, 0.0}, vortex_intensity({r, 0.0}, sc)}}, sc.a);
  for (int k = 0; k < 5; ++k) {
    const double t = 0.7 + 1.1 * k;
    const cplx z = std::polar(r, t);
    const cplx jm = multi_center_current(cfg, z);
    const CurrentSample jp = current_closed_form(z.real(), z.imag(), sc);
    EXPECT_LE(std::abs(jm - cplx{jp.jx, jp.jy}), 1e-14 * jp.magnitude()) << t;
  }
}

TEST(ParseCenters, AcceptsAndRejects) {
  const auto doc = nlohmann::json::parse(R"([{"x": 1, "y": -2, "intensity": 0.5}, {"x": 0.0, "y": 3, "intensity": 0}])");
  const auto cs = parse_centers(doc, 2.0);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].z, cplx(2.0, -4.0));
  EXPECT_EQ(cs[0].intensity, 0.5);
  EXPECT_TRUE(parse_centers(nlohmann::json::array()).empty());
  EXPECT_THROW(parse_centers(nlohmann::json::object()), ValidationError);
  EXPECT_THROW(parse_centers(nlohmann::json::parse(R"([{"x": 1, "y": 2}])")), ValidationError);
  EXPECT_THROW(parse_centers(nlohmann::json::parse(R"([{"x": "1", "y": 2, "intensity": 1}])")), ValidationError);
  EXPECT_THROW(parse_centers(nlohmann::json::parse(R"([3])")), ValidationError);
}
