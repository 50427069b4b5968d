#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace homrates {

// ln(n!) lookup built once per computation; avoids repeated lgamma calls in hot loops.
std::vector<double> log_factorial_table(int max_n);

// Binomial coefficient as a double. Exact (integer-valued) for n <= 56 where
// C(n,k) < 2^53; larger arguments go through lgamma.
double binomial(int n, int k);

// Row {C(n,0), ..., C(n,n)} with the same exactness guarantee.
std::vector<double> binomial_row(int n);

// ln(cosh(x)) without overflow for large x. The large-x form cancels badly
// below |x| ~ 1 (three O(0.7) terms combine to O(x^2)), so small arguments
// go through cosh(x) - 1 = 2 sinh^2(x/2), which is cancellation-free.
inline double log_cosh(double x) {
    const double a = std::fabs(x);
    if (a < 1.0) {
        const double s = std::sinh(0.5 * a);
        return std::log1p(2.0 * s * s);
    }
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

// sech(2x) without overflowing cosh for large x; underflows gracefully to 0.
inline double sech2x(double x) {
    const double e = std::exp(-2.0 * std::fabs(x));
    return 2.0 * e / (1.0 + e * e);
}

// Compensated (Neumaier) accumulator. Sums of ~1e6 terms stay accurate to
// a few ulp, which the 1e-12 agreement checks in this project rely on.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// splitmix64: tiny, well-known 64-bit mixer. Used both as a standalone
// generator and to derive independent per-run substreams from (seed, index).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace homrates
