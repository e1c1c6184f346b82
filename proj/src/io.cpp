#include "bsc/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bsc {

std::vector<double> read_square_matrix_csv(std::istream& in, int& n) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(field, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("matrix csv: cannot parse field '" + field + "'");
            }
            while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                ++used;
            if (used != field.size())
                throw std::runtime_error("matrix csv: trailing junk in field '" + field + "'");
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("matrix csv: empty input");
    n = static_cast<int>(rows.size());
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::runtime_error("matrix csv: expected a square matrix");
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<double> read_square_matrix_csv_file(const std::string& path, int& n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return read_square_matrix_csv(in, n);
}

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

}  // namespace bsc
