#pragma once

// Trajectory CSV: header t,a,H,phi,phidot,constraint,power,denominator;
// LF line endings; 17 significant digits so doubles round-trip exactly.
// Backward and forward runs are stitched in increasing t with one t = 0 row.

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "esgb/errors.hpp"
#include "esgb/integrator.hpp"

namespace esgb {

inline constexpr std::array<std::string_view, 8> kTrajectoryColumns{
    "t", "a", "H", "phi", "phidot", "constraint", "power", "denominator"};

struct TrajectoryRow {
  double t, a, H, phi, phidot, constraint, power, denominator;

  [[nodiscard]] std::array<double, 8> values() const {
    return {t, a, H, phi, phidot, constraint, power, denominator};
  }
};

[[nodiscard]] inline TrajectoryRow make_row(const CosmoState& s, const RhsValue& r) {
  const double P = s.H == 0.0 ? std::nan("") : power_identity(s, r.dH);
  return {s.t, s.a, s.H, s.phi, s.Phi, constraint_residual(s), P, gb_denominator(s)};
}

/// Either pointer may be null.
[[nodiscard]] inline std::vector<TrajectoryRow> stitch(const Trajectory* backward,
                                                       const Trajectory* forward) {
  std::vector<TrajectoryRow> rows;
  if (backward) {
    for (std::size_t i = backward->samples.size(); i-- > 0;) {
      rows.push_back(make_row(backward->samples[i], backward->rates[i]));
    }
  }
  if (forward) {
    std::size_t start = 0;
    if (!rows.empty() && !forward->samples.empty() && forward->samples[0].t == rows.back().t) {
      start = 1;
    }
    for (std::size_t i = start; i < forward->samples.size(); ++i) {
      rows.push_back(make_row(forward->samples[i], forward->rates[i]));
    }
  }
  return rows;
}

namespace detail {

inline void append_double(std::string& out, double v) {
  std::array<char, 40> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  out.append(buf.data(), res.ptr);
}

inline double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  // from_chars rejects a leading '+'.
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw MalformedCsv("line " + std::to_string(line) + ": cannot parse '" + std::string(field) +
                       "' as a number");
  }
  return v;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(',', pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? line.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace detail

inline void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows) {
  std::string line;
  for (std::size_t i = 0; i < kTrajectoryColumns.size(); ++i) {
    if (i) line += ',';
    line += kTrajectoryColumns[i];
  }
  os << line << '\n';
  for (const auto& r : rows) {
    line.clear();
    const auto v = r.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) line += ',';
      detail::append_double(line, v[i]);
    }
    os << line << '\n';
  }
}

[[nodiscard]] inline std::vector<TrajectoryRow> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw MalformedCsv("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = detail::split_commas(line);
  if (header.size() != kTrajectoryColumns.size()) throw MalformedCsv("unexpected header: " + line);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != kTrajectoryColumns[i]) throw MalformedCsv("unexpected header: " + line);
  }
  std::vector<TrajectoryRow> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = detail::split_commas(line);
    if (f.size() != kTrajectoryColumns.size()) {
      throw MalformedCsv("line " + std::to_string(lineno) + ": expected 8 fields");
    }
    std::array<double, 8> v{};
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = detail::parse_double(f[i], lineno);
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  return rows;
}

/// Values of one named column.
[[nodiscard]] inline std::vector<double> column(const std::vector<TrajectoryRow>& rows,
                                                std::string_view name) {
  std::size_t idx = kTrajectoryColumns.size();
  for (std::size_t i = 0; i < kTrajectoryColumns.size(); ++i) {
    if (kTrajectoryColumns[i] == name) idx = i;
  }
  if (idx == kTrajectoryColumns.size()) throw UnknownColumn("unknown column: " + std::string(name));
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.values()[idx]);
  return out;
}

}  // namespace esgb
