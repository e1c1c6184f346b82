#include "bsc/parameter_matrix.hpp"

#include <cmath>
#include <sstream>

namespace bsc {

ParameterMatrix::ParameterMatrix(std::vector<double> entries, std::vector<double> row_weights,
                                 std::vector<double> col_weights)
    : rows_(static_cast<int>(row_weights.size())), cols_(static_cast<int>(col_weights.size())),
      entries_(std::move(entries)), row_weights_(std::move(row_weights)),
      col_weights_(std::move(col_weights)) {}

ParameterMatrix ParameterMatrix::validated(std::vector<double> entries,
                                           std::vector<double> row_weights,
                                           std::vector<double> col_weights, double tol) {
    const int rows = static_cast<int>(row_weights.size());
    const int cols = static_cast<int>(col_weights.size());
    if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ValidationError(ValidationError::Kind::shape_mismatch, -1,
                              static_cast<double>(entries.size()),
                              static_cast<double>(rows) * cols,
                              "parameter matrix: entry count does not match the weights");
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        if (entries[idx] < 0.0) {
            std::ostringstream os;
            os << "parameter matrix: negative entry " << entries[idx] << " at flat index " << idx;
            throw ValidationError(ValidationError::Kind::negative_entry, static_cast<int>(idx),
                                  entries[idx], 0.0, os.str());
        }
    }
    for (int k = 0; k < rows; ++k) {
        double sum = 0.0;
        for (int l = 0; l < cols; ++l) sum += entries[static_cast<std::size_t>(k) * cols + l];
        if (std::abs(sum - row_weights[static_cast<std::size_t>(k)]) > tol) {
            std::ostringstream os;
            os << "parameter matrix: row " << k << " sums to " << sum << ", expected "
               << row_weights[static_cast<std::size_t>(k)];
            throw ValidationError(ValidationError::Kind::row_sum_mismatch, k, sum,
                                  row_weights[static_cast<std::size_t>(k)], os.str());
        }
    }
    for (int l = 0; l < cols; ++l) {
        double sum = 0.0;
        for (int k = 0; k < rows; ++k) sum += entries[static_cast<std::size_t>(k) * cols + l];
        if (std::abs(sum - col_weights[static_cast<std::size_t>(l)]) > tol) {
            std::ostringstream os;
            os << "parameter matrix: column " << l << " sums to " << sum << ", expected "
               << col_weights[static_cast<std::size_t>(l)];
            throw ValidationError(ValidationError::Kind::col_sum_mismatch, l, sum,
                                  col_weights[static_cast<std::size_t>(l)], os.str());
        }
    }
    return ParameterMatrix(std::move(entries), std::move(row_weights), std::move(col_weights));
}

ParameterMatrix ParameterMatrix::validated(std::vector<double> entries,
                                           std::vector<double> weights, double tol) {
    std::vector<double> col = weights;
    return validated(std::move(entries), std::move(weights), std::move(col), tol);
}

ParameterMatrix ParameterMatrix::diagonal(std::span<const double> weights) {
    const int n = static_cast<int>(weights.size());
    std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k)
        entries[static_cast<std::size_t>(k) * n + k] = weights[static_cast<std::size_t>(k)];
    return ParameterMatrix(std::move(entries), {weights.begin(), weights.end()},
                           {weights.begin(), weights.end()});
}

ParameterMatrix ParameterMatrix::independence(std::span<const double> row_weights,
                                              std::span<const double> col_weights) {
    const int rows = static_cast<int>(row_weights.size());
    const int cols = static_cast<int>(col_weights.size());
    std::vector<double> entries(static_cast<std::size_t>(rows) * cols);
    for (int k = 0; k < rows; ++k)
        for (int l = 0; l < cols; ++l)
            entries[static_cast<std::size_t>(k) * cols + l] =
                row_weights[static_cast<std::size_t>(k)] * col_weights[static_cast<std::size_t>(l)];
    return ParameterMatrix(std::move(entries), {row_weights.begin(), row_weights.end()},
                           {col_weights.begin(), col_weights.end()});
}

}  // namespace bsc
