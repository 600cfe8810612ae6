#pragma once

// Sampling of the ground-state fields onto grids and their CSV / JSON
// serialization.  All numbers are written with 9 significant digits in
// scientific notation so repeated runs are byte-identical.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magbound/bound_state.hpp"
#include "magbound/current.hpp"
#include "magbound/special.hpp"
#include "magbound/units.hpp"

namespace magbound {

inline constexpr const char* field_csv_header = "x,y,re_psi,im_psi,prob,jx,jy,curl";
inline constexpr const char* vortex_csv_header = "x,y,jx,jy";

struct FieldRecord {
  double x = 0.0, y = 0.0;
  double re_psi = 0.0, im_psi = 0.0;
  double prob = 0.0;
  double jx = 0.0, jy = 0.0;
  double curl = 0.0;
};

struct VortexRecord {
  double x = 0.0, y = 0.0;
  double jx = 0.0, jy = 0.0;
};

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

// Value rounded to what format_number prints; NaN stays NaN.
inline double round_significant(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

inline nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

// Rows in y-outer, x-inner order; `extent` is in physical length units.
inline std::vector<FieldRecord> sample_ground_state(Extent extent, int nx, int ny, const DerivedScales& sc) {
  const Grid2D<char> layout(extent, nx, ny);
  std::vector<FieldRecord> rows;
  rows.reserve(layout.values.size());
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double x = layout.x(i), y = layout.y(j);
      const cplx psi = ground_state_eval(x, y, sc);
      const CurrentSample cur = current_closed_form(x, y, sc);
      FieldRecord r;
      r.x = x;
      r.y = y;
      r.re_psi = psi.real();
      r.im_psi = psi.imag();
      r.prob = r.re_psi * r.re_psi + r.im_psi * r.im_psi;
      r.jx = cur.jx;
      r.jy = cur.jy;
      r.curl = curl_closed(x, y, sc);
      rows.push_back(r);
    }
  }
  return rows;
}

struct VortexSampling {
  std::vector<VortexRecord> rows;
  int pole_samples = 0;  // samples within the pole exclusion radius (NaN rows)
};

inline VortexSampling sample_vortices(const VortexConfig& cfg, Extent extent, int nx, int ny) {
  const Grid2D<char> layout(extent, nx, ny);
  VortexSampling out;
  out.rows.reserve(layout.values.size());
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const cplx z{layout.x(i), layout.y(j)};
      if (cfg.near_pole(z)) {
        out.rows.push_back({z.real(), z.imag(), nan, nan});
        ++out.pole_samples;
        continue;
      }
      const cplx jc = multi_center_current(cfg, z);
      out.rows.push_back({z.real(), z.imag(), jc.real(), jc.imag()});
    }
  }
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<FieldRecord>& rows) {
  os << field_csv_header << '\n';
  for (const auto& r : rows) {
    os << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.re_psi) << ','
       << format_number(r.im_psi) << ',' << format_number(r.prob) << ',' << format_number(r.jx) << ','
       << format_number(r.jy) << ',' << format_number(r.curl) << '\n';
  }
}

inline void write_csv(std::ostream& os, const std::vector<VortexRecord>& rows) {
  os << vortex_csv_header << '\n';
  for (const auto& r : rows) {
    os << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.jx) << ','
       << format_number(r.jy) << '\n';
  }
}

inline nlohmann::json to_json(const std::vector<FieldRecord>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"x", json_number(r.x)},
                   {"y", json_number(r.y)},
                   {"re_psi", json_number(r.re_psi)},
                   {"im_psi", json_number(r.im_psi)},
                   {"prob", json_number(r.prob)},
                   {"jx", json_number(r.jx)},
                   {"jy", json_number(r.jy)},
                   {"curl", json_number(r.curl)}});
  }
  return arr;
}

// NaN pole samples serialize as null.
inline nlohmann::json to_json(const std::vector<VortexRecord>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"x", json_number(r.x)},
                   {"y", json_number(r.y)},
                   {"jx", json_number(r.jx)},
                   {"jy", json_number(r.jy)}});
  }
  return arr;
}

// Centres file: JSON array of {"x", "y", "intensity"}.
inline std::vector<VortexCenter> parse_centers(const nlohmann::json& doc, double length_unit = 1.0) {
  if (!doc.is_array()) throw ValidationError("centers", "expected a JSON array");
  std::vector<VortexCenter> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& item = doc[k];
    const std::string where = "centre " + std::to_string(k);
    if (!item.is_object()) throw ValidationError("centers", where + " is not an object");
    for (const char* key : {"x", "y", "intensity"}) {
      if (!item.contains(key) || !item[key].is_number()) {
        throw ValidationError("centers", where + " lacks numeric '" + key + "'");
      }
    }
    out.push_back({cplx{item["x"].get<double>() * length_unit, item["y"].get<double>() * length_unit},
                   item["intensity"].get<double>()});
  }
  return out;
}

}  // namespace magbound
