#pragma once

#include <complex>
#include <vector>

#include "homrates/bsv_source.hpp"
#include "homrates/sparse_state.hpp"

namespace homrates {

// Pinned balanced-splitter convention:
//   input 1:       a1_dag      -> (a_dag + b_dag)/sqrt(2)
//   input 2:       a2_dag      -> (a_dag + mode2_relative_sign * b_dag)/sqrt(2)
//   input 2 perp:  a2p_dag     -> (a_perp_dag + mode2_relative_sign * b_perp_dag)/sqrt(2)
// mode2_relative_sign is -1; flipping it to +1 is a test hook that breaks the
// convention on purpose so oracle checks can prove they would catch it.
struct BsConvention {
    double mode2_relative_sign = -1.0;
};

struct ExpandOptions {
    std::size_t max_terms = 40'000'000;
    BsConvention convention{};
};

// Splitter output for the 2n-pair source sectors up to p.n_max:
//   sum_n a_n (a+b)^n (cos(alpha)(a-b) + sin(alpha)(a_perp-b_perp))^n |vac>
// expanded to Fock occupations with like terms collected before any squaring.
// Internally each sector is grouped as (a^2-b^2)^{n-l}(a+b)^l(a_perp-b_perp)^l,
// which the product expansion is algebraically equal to; the grouping keeps
// the signed collection numerically benign at large n and makes the alpha
// endpoints collision-free.
SparseState expand_output(const SourceParams& p, const ExpandOptions& opts = {});

// Same expansion with a controlled phase phi applied to the whole input beam 2
// (both its polarization components), giving each 2n-photon sector a factor
// e^{i n phi}. Complex amplitudes are quarantined to this variant; it exists so
// tests can verify that detected distributions are phase-insensitive.
struct PhasedTerm {
    Occupation4 occ;
    std::complex<double> amplitude;
};
struct PhasedState {
    std::vector<PhasedTerm> terms;
    int truncation_order = 0;
};
PhasedState expand_output_with_phase(const SourceParams& p, double phi,
                                     const ExpandOptions& opts = {});

}  // namespace homrates
