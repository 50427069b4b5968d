#include "homrates/bsv_source.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "homrates/errors.hpp"
#include "homrates/math_util.hpp"

namespace homrates {

void SourceParams::validate() const {
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw InvalidArgumentError("gamma must be finite and >= 0, got " + std::to_string(gamma));
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!std::isfinite(alpha) || alpha < -1e-12 || alpha > half_pi + 1e-12)
        throw InvalidArgumentError("alpha must lie in [0, pi/2], got " + std::to_string(alpha));
    if (n_max < 0)
        throw InvalidArgumentError("n_max must be >= 0, got " + std::to_string(n_max));
}

std::vector<PairAmplitude> pair_amplitudes(const SourceParams& p) {
    p.validate();
    std::vector<PairAmplitude> out;
    out.reserve(static_cast<std::size_t>(p.n_max) + 1);
    const double th = std::tanh(p.gamma);
    double a = 1.0 / std::cosh(p.gamma);
    out.push_back({0, a});
    for (int n = 1; n <= p.n_max; ++n) {
        a *= th / (2.0 * static_cast<double>(n));
        out.push_back({n, a});
    }
    return out;
}

double log_pair_prefactor(double gamma, int n) {
    if (n == 0) return -log_cosh(gamma);
    // gamma == 0 with n > 0 has amplitude exactly 0; callers skip that case
    return static_cast<double>(n) * std::log(std::tanh(gamma))
           - std::lgamma(static_cast<double>(n) + 1.0)
           - static_cast<double>(n) * std::log(2.0)
           - log_cosh(gamma);
}

double pair_probability(double gamma, int n) {
    if (n == 0) {
        const double c = std::cosh(gamma);
        return 1.0 / (c * c);
    }
    if (gamma == 0.0) return 0.0;
    return std::exp(2.0 * static_cast<double>(n) * std::log(std::tanh(gamma)) - 2.0 * log_cosh(gamma));
}

double truncation_tail(double gamma, int n_max) {
    if (gamma == 0.0) return 0.0;
    const double th = std::tanh(gamma);
    const double sech_sq = 1.0 - th * th;
    const double cosh_sq = std::cosh(gamma) * std::cosh(gamma);
    // cosh^2 (1 - tanh^2) == 1 analytically; kept in the stated form
    return std::exp(2.0 * static_cast<double>(n_max + 1) * std::log(th)) / (cosh_sq * sech_sq);
}

int choose_truncation(double gamma, double tail_tolerance, int hard_cap) {
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw InvalidArgumentError("gamma must be finite and >= 0");
    if (!(tail_tolerance > 0.0))
        throw InvalidArgumentError("tail tolerance must be > 0");
    int n = 0;
    while (truncation_tail(gamma, n) >= tail_tolerance) {
        ++n;
        if (n > hard_cap)
            throw CapacityError("truncation order for gamma=" + std::to_string(gamma) +
                                ", tail<" + std::to_string(tail_tolerance) +
                                " exceeds cap " + std::to_string(hard_cap));
    }
    return n;
}

}  // namespace homrates
