#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsc {

/// Square matrix from CSV: n rows of n comma-separated decimals, no header.
/// Throws std::runtime_error on ragged rows or unparsable fields.
std::vector<double> read_square_matrix_csv(std::istream& in, int& n);
std::vector<double> read_square_matrix_csv_file(const std::string& path, int& n);

/// Round-trip-safe decimal rendering (17 significant digits).
std::string format_full(double x);

/// Fixed three decimals, the presentation format of the correlation table.
std::string format_3(double x);

}  // namespace bsc
