#pragma once

#include <cstdint>
#include <string>

namespace homrates {

// Distribution of the per-run pulse energy pair (I1, I2). The model itself
// does not fix one; these two laws bracket the interesting behavior (constant
// energy vs. strongly fluctuating energy).
enum class IntensityLaw {
    fixed_equal,              // I1 = I2 = 1 every run
    independent_exponential,  // I1, I2 independent Exp(1) draws
};

const char* to_string(IntensityLaw law);

// One Monte Carlo configuration of the stochastic two-pulse model. overlap is
// the squared pulse overlap: 1 for identical pulses, 0 for fully delayed or
// orthogonal ones. phase_offset is a fixed pulse-shape phase added to the
// random phase difference; the observables must not depend on it.
struct ClassicalEnsemble {
    std::uint64_t runs = 1'000'000;
    double overlap = 1.0;
    IntensityLaw law = IntensityLaw::fixed_equal;
    std::uint64_t seed = 12345;
    double phase_offset = 0.0;

    void validate() const;  // throws InvalidArgumentError
};

struct ClassicalResult {
    double g_mean = 0.0;  // <I_a I_b>
    double g_se = 0.0;
    double c_mean = 0.0;  // <I_a I_b / (I1+I2)^2>
    double c_se = 0.0;
    double ia_mean = 0.0;  // <I_a>, consumed by the phase-insensitivity check
    double ia_se = 0.0;
    std::uint64_t runs = 0;
};

// Draws (I1, I2) per the law, two independent uniform phases, splits the
// combined field on a balanced splitter and accumulates the two correlators.
// Per-run substreams are derived from (seed, run index), so results are
// reproducible and independent of any batching. Energy conservation
// I_a + I_b = I1 + I2 is asserted every run.
ClassicalResult sample_products(const ClassicalEnsemble& ensemble);

struct ClassicalVisibility {
    double v_g = 0.0;
    double v_g_se = 0.0;
    double v_c = 0.0;
    double v_c_se = 0.0;
};

// V = (max - min)/max per correlator, the maximum taken from the orthogonal
// ensemble. Both ensembles must share the intensity law and run count.
// Standard errors are propagated from both measurements.
ClassicalVisibility classical_visibility(const ClassicalEnsemble& overlapped,
                                         const ClassicalEnsemble& orthogonal);

}  // namespace homrates
