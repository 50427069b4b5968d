#include "homrates/math_util.hpp"

namespace homrates {

std::vector<double> log_factorial_table(int max_n) {
    std::vector<double> t(static_cast<std::size_t>(max_n) + 1);
    t[0] = 0.0;
    for (int n = 1; n <= max_n; ++n)
        t[static_cast<std::size_t>(n)] = std::lgamma(static_cast<double>(n) + 1.0);
    return t;
}

namespace {

// largest n for which every C(n,k) is below 2^53 and therefore exact in a double
constexpr int kExactBinomialLimit = 56;

// Pascal addition: every intermediate is an integer < 2^53, so the row is exact.
std::vector<double> pascal_row(int n) {
    std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
    row[0] = 1.0;
    for (int m = 1; m <= n; ++m)
        for (int k = m; k >= 1; --k)
            row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
    return row;
}

}  // namespace

std::vector<double> binomial_row(int n) {
    if (n <= kExactBinomialLimit) return pascal_row(n);
    std::vector<double> row(static_cast<std::size_t>(n) + 1);
    const double lf_n = std::lgamma(static_cast<double>(n) + 1.0);
    for (int k = 0; k <= n; ++k)
        row[static_cast<std::size_t>(k)] =
            std::exp(lf_n - std::lgamma(static_cast<double>(k) + 1.0)
                          - std::lgamma(static_cast<double>(n - k) + 1.0));
    return row;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= kExactBinomialLimit) return pascal_row(n)[static_cast<std::size_t>(k)];
    return std::exp(std::lgamma(static_cast<double>(n) + 1.0)
                    - std::lgamma(static_cast<double>(k) + 1.0)
                    - std::lgamma(static_cast<double>(n - k) + 1.0));
}

}  // namespace homrates
