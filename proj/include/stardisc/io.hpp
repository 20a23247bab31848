#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stardisc/core.hpp"
#include "stardisc/covers.hpp"

namespace stardisc {

/// Shortest-safe text form of a double: 17 significant digits, "C" locale.
std::string format_real(double v);

/// Locale-independent parse of a whole token; throws input_error.
double parse_real(std::string_view token);

/// Comma-separated coordinates such as "0.37,0.81".
std::vector<double> parse_real_list(std::string_view text);

// Point-set files: header "s N", then N rows of s coordinates separated by
// single spaces. Lines starting with '#' are comments.
void write_point_set(std::ostream& out, const PointSet& points);
PointSet read_point_set(std::istream& in);
PointSet load_point_set(const std::filesystem::path& path);
void save_point_set(const std::filesystem::path& path, const PointSet& points);

// Bracket files: header "s M" with M the number of rows, then one row per
// bracket holding the s lower coordinates followed by the s upper ones.
void write_brackets(std::ostream& out, const BracketingCover& cover);
std::vector<Bracket> read_brackets(std::istream& in);

}  // namespace stardisc
