#include "homrates/lossy_reference.hpp"

#include <cmath>
#include <vector>

#include "homrates/bsv_source.hpp"
#include "homrates/math_util.hpp"

namespace homrates {

namespace {

// w * sum over detected counts (xa, xb) >= 1 of thinned probabilities times
// the two observables
void add_thinned(double w, int ya, int yb, const LossKernel& ker, NeumaierSum& g_acc,
                 NeumaierSum& c_acc) {
    if (w == 0.0 || ya == 0 || yb == 0) return;
    const auto ra = ker.row(ya);
    const auto rb = ker.row(yb);
    for (int xa = 1; xa <= ya; ++xa) {
        const double pa = w * ra[static_cast<std::size_t>(xa)];
        for (int xb = 1; xb <= yb; ++xb) {
            const double q = pa * rb[static_cast<std::size_t>(xb)];
            const double prod = static_cast<double>(xa) * static_cast<double>(xb);
            const double tot = static_cast<double>(xa + xb);
            g_acc.add(q * prod);
            c_acc.add(q * prod / (tot * tot));
        }
    }
}

}  // namespace

LossyMoments lossy_direct_alpha0(double gamma, const DetectionModel& model, int n_max) {
    model.validate();
    SourceParams{gamma, 0.0, n_max}.validate();
    if (gamma == 0.0) return {};

    const auto lf = log_factorial_table(2 * n_max);
    const LossKernel ker(model.eta, 2 * n_max);
    NeumaierSum g_acc, c_acc;
    for (int n = 1; n <= n_max; ++n) {
        const double log_an2 = 2.0 * log_pair_prefactor(gamma, n);
        for (int k = 0; k <= n; ++k) {
            const double w = std::exp(log_an2 + 2.0 * std::log(binomial(n, k)) +
                                      lf[static_cast<std::size_t>(2 * k)] +
                                      lf[static_cast<std::size_t>(2 * (n - k))]);
            add_thinned(w, 2 * (n - k), 2 * k, ker, g_acc, c_acc);
        }
    }
    return {g_acc.value(), c_acc.value()};
}

LossyMoments lossy_direct_alpha_pi2(double gamma, const DetectionModel& model, int n_max) {
    model.validate();
    SourceParams{gamma, 0.0, n_max}.validate();
    if (gamma == 0.0) return {};

    const auto lf = log_factorial_table(2 * n_max);
    const LossKernel ker(model.eta, 2 * n_max);
    NeumaierSum g_acc, c_acc;
    for (int n = 1; n <= n_max; ++n) {
        const double log_an2 = 2.0 * log_pair_prefactor(gamma, n);
        for (int k = 0; k <= n; ++k) {
            const double log_k = 2.0 * std::log(binomial(n, k)) +
                                 lf[static_cast<std::size_t>(k)] +
                                 lf[static_cast<std::size_t>(n - k)];
            for (int l = 0; l <= n; ++l) {
                const double w = std::exp(log_an2 + log_k + 2.0 * std::log(binomial(n, l)) +
                                          lf[static_cast<std::size_t>(l)] +
                                          lf[static_cast<std::size_t>(n - l)]);
                add_thinned(w, k + l, 2 * n - k - l, ker, g_acc, c_acc);
            }
        }
    }
    return {g_acc.value(), c_acc.value()};
}

}  // namespace homrates
