#pragma once

#include <string>

#include "arithdeg/degree.hpp"

namespace arithdeg {

/// Human-readable multi-line rendering, ending in a "deg = ..." line.
std::string format_text(const DegreeReport& r);

/// Canonical single-line JSON with fixed key order
///   m, d_K, d_B, degenerate, diff, p, splitting, epsilon_p, M, R_M, count,
///   length, degree_coeff, degree_approx.
/// All canonical fields are exact (M as {"num", "den"}); degree_approx is
/// the one floating-point field, printed with 15 significant digits. Absent
/// prime means "p": null (and null for the other p-dependent fields).
std::string format_json(const DegreeReport& r);

/// Inverse of format_json: format_json(parse_json(s)) == s for any s
/// produced by format_json.
DegreeReport parse_json(const std::string& s);

/// CSV column set used by both the degree and table commands.
std::string csv_header(); // "m,diff_size,p,M,R_M,count,length,degree_coeff"
std::string format_csv_row(const DegreeReport& r);

} // namespace arithdeg
