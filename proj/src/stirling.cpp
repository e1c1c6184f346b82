#include "bsc/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace bsc {

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    static std::mutex mu;
    static std::vector<std::vector<BigInt>> table;  // table[n][k], k <= n
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table.push_back({BigInt(1)});  // S(0,0) = 1
    while (static_cast<int>(table.size()) <= n) {
        const int row = static_cast<int>(table.size());
        const auto& prev = table[static_cast<std::size_t>(row - 1)];
        std::vector<BigInt> next(static_cast<std::size_t>(row + 1));
        next[0] = 0;
        for (int j = 1; j <= row; ++j) {
            BigInt val = (j < row) ? BigInt(j) * prev[static_cast<std::size_t>(j)] : BigInt(0);
            if (j - 1 < row) val += prev[static_cast<std::size_t>(j - 1)];
            next[static_cast<std::size_t>(j)] = val;
        }
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling2_explicit(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2_explicit: negative argument");
    if (k > n) return 0;
    BigInt sum = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(k, j) * boost::multiprecision::pow(BigInt(k - j),
                                                                  static_cast<unsigned>(n));
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum / factorial(k);  // divides exactly
}

}  // namespace bsc
