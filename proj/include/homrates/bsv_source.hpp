#pragma once

#include <vector>

namespace homrates {

// Bright-squeezed-vacuum source feeding the splitter. gamma is the parametric
// gain, alpha the distinguishability rotation of input 2 into its orthogonal
// companion mode (0 = indistinguishable, pi/2 = fully distinguishable),
// n_max the retained pair-number truncation.
struct SourceParams {
    double gamma = 0.0;
    double alpha = 0.0;
    int n_max = 0;

    void validate() const;  // throws InvalidArgumentError
};

// Prefactor of the 2n-photon sector after the splitter:
//   a_n = tanh^n(gamma) / (n! 2^n cosh(gamma))
struct PairAmplitude {
    int n = 0;
    double a_n = 0.0;
};

// a_0..a_{n_max}; built by the recurrence a_{n+1} = a_n tanh(gamma)/(2(n+1))
// so consecutive ratios are reproduced essentially exactly
std::vector<PairAmplitude> pair_amplitudes(const SourceParams& p);

// log(a_n); safe where a_n itself would underflow (used by the expansion)
double log_pair_prefactor(double gamma, int n);

// weight of the 2n-photon sector: tanh^{2n}(gamma)/cosh^2(gamma)
double pair_probability(double gamma, int n);

// weight discarded beyond n_max: tanh^{2(n_max+1)}(gamma)/(cosh^2 (1-tanh^2)),
// the closed geometric tail
double truncation_tail(double gamma, int n_max);

inline constexpr int kDefaultTruncationCap = 200;

// Smallest n_max whose tail is below tail_tolerance. Throws CapacityError if
// that would exceed hard_cap.
int choose_truncation(double gamma, double tail_tolerance, int hard_cap = kDefaultTruncationCap);

}  // namespace homrates
