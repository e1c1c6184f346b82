#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsc {

class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        negative_entry,
        row_sum_mismatch,
        col_sum_mismatch,
        shape_mismatch,
        weight_mismatch,
    };

    ValidationError(Kind kind, int index, double got, double want, const std::string& message)
        : std::runtime_error(message), kind_(kind), index_(index), got_(got), want_(want) {}

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    double got() const { return got_; }
    double want() const { return want_; }

private:
    Kind kind_;
    int index_;
    double got_, want_;
};

/// Nonnegative coupling weights r_{kl} with prescribed margins: row k sums
/// to row_weights[k] and column l sums to col_weights[l]; both margins sum
/// to 1, so the total mass is 1. Immutable once validated.
class ParameterMatrix {
public:
    static ParameterMatrix validated(std::vector<double> entries,
                                     std::vector<double> row_weights,
                                     std::vector<double> col_weights, double tol = 1e-10);
    // Square case with equal margins.
    static ParameterMatrix validated(std::vector<double> entries, std::vector<double> weights,
                                     double tol = 1e-10);

    static ParameterMatrix diagonal(std::span<const double> weights);
    static ParameterMatrix independence(std::span<const double> row_weights,
                                        std::span<const double> col_weights);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    double operator()(int k, int l) const {
        return entries_[static_cast<std::size_t>(k) * static_cast<std::size_t>(cols_) +
                        static_cast<std::size_t>(l)];
    }
    std::span<const double> entries() const { return entries_; }  // row-major
    std::span<const double> row_weights() const { return row_weights_; }
    std::span<const double> col_weights() const { return col_weights_; }

private:
    ParameterMatrix(std::vector<double> entries, std::vector<double> row_weights,
                    std::vector<double> col_weights);

    int rows_, cols_;
    std::vector<double> entries_;
    std::vector<double> row_weights_;
    std::vector<double> col_weights_;
};

}  // namespace bsc
