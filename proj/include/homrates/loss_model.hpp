#pragma once

#include <map>
#include <span>
#include <vector>

#include "homrates/correlations.hpp"
#include "homrates/sparse_state.hpp"

namespace homrates {

struct DetectionModel {
    double eta = 1.0;            // per-mode detection efficiency, in (0, 1]
    bool number_resolving = true;  // the only detector type modeled; pinned assumption

    void validate() const;  // throws InvalidArgumentError
};

// Bernoulli thinning: row y holds P(detect x | y photons) = C(y,x) eta^x (1-eta)^{y-x}.
// Built directly as binomial probabilities, never as squared amplitudes, so the
// rows are as exact as the binomial coefficients themselves. Every row sums to 1.
class LossKernel {
public:
    LossKernel(double eta, int max_count);

    int max_count() const { return static_cast<int>(rows_.size()) - 1; }
    std::span<const double> row(int y) const { return rows_[static_cast<std::size_t>(y)]; }
    double prob(int y, int x) const;  // 0 outside 0 <= x <= y

private:
    std::vector<std::vector<double>> rows_;
};

// Full detected-outcome distribution: each pre-loss occupation feeds its four
// mode counts through independent Bernoulli channels. Probabilities sum to
// 1 - norm_deficit of the input. Cost grows with the product of mode counts;
// this is the generic route, kept for oracle checks and small states.
std::map<Occupation4, double> lossy_outcome_distribution(const SparseState& state,
                                                         const DetectionModel& model);

// Detected-count moments. Numerator-style: g carries no squared-total
// denominator. The omitted denominator is the same at alpha = 0 and pi/2 for
// equal gamma and eta (total photon statistics are alpha-independent and loss
// acts identically), so it cancels from any visibility formed from these.
struct LossyMoments {
    double g = 0.0;  // <x_a x_b> over detected spatial counts
    double c = 0.0;  // <x_a x_b / (x_a+x_b)^2>; zero-detection outcomes contribute 0
};

// Primary route: marginalize the state to pre-loss spatial totals (y_a, y_b),
// then thin one side at a time through the kernel. O(N^3) overall, which is
// what makes large-gamma lossy sweeps affordable.
LossyMoments lossy_moments(const SparseState& state, const DetectionModel& model);

// Same moments via lossy_outcome_distribution; independent second route for
// the two-path agreement check.
LossyMoments lossy_moments_fourmode(const SparseState& state, const DetectionModel& model);

double g_q_eta(const SparseState& state, const DetectionModel& model);
double c_q_eta(const SparseState& state, const DetectionModel& model);

// One sweep point at efficiency model.eta, truncated at n_max pairs.
// eta = 1 delegates to the lossless path (the reduction is exact), so the
// record then carries ratio-normalized correlators; for eta < 1 the correlator
// fields hold the numerator-style moments above. Visibilities are comparable
// across both, which is all the sweep consumes. gamma = 0 reports undefined.
VisibilityRecord visibility_eta(double gamma, const DetectionModel& model, int n_max);

// Same record from pre-expanded endpoint states, so an eta sweep can reuse
// one expansion per gamma. Requires model.eta < 1; both states must share a
// truncation order.
VisibilityRecord visibility_eta_from_states(double gamma, const SparseState& at0,
                                            const SparseState& at_pi2,
                                            const DetectionModel& model);

}  // namespace homrates
