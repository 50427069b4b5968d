#include "homrates/closed_forms.hpp"

#include <cmath>
#include <string>

#include "homrates/errors.hpp"
#include "homrates/math_util.hpp"

namespace homrates {

// Rearranged so nothing overflows and nothing cancels badly: sech(2g) and
// sech^2(g) = e^L decay to 0 for large gamma instead of dividing overflowing
// cosh values, and g0 uses (1 - sech(2g)) rather than sinh^2 sech(2g)/...
// which would pair two extreme magnitudes.
ClosedFormSet eval_closed(double gamma) {
    if (!std::isfinite(gamma) || gamma < 0.0)
        throw InvalidArgumentError("gamma must be finite and >= 0, got " + std::to_string(gamma));

    ClosedFormSet r;
    if (gamma == 0.0) {
        // gamma -> 0+ limits of the four ratios; only gpi2 is nonzero
        r.gpi2 = 0.125;
        r.v_g = 1.0;
        r.v_c = 1.0;
        r.limit_at_zero = true;
        return r;
    }

    const double s2 = sech2x(gamma);             // sech(2 gamma)
    const double L = -2.0 * log_cosh(gamma);     // ln(sech^2 gamma), always < 0
    const double sech_sq = std::exp(L);          // sech^2 gamma
    const double th = std::tanh(gamma);
    const double th_sq = th * th;
    // 1 - sech(2g) = (1 - e^{-2g})^2 / (1 + e^{-4g}), exact via expm1 even
    // when sech(2g) rounds to 1
    const double em = -std::expm1(-2.0 * gamma);
    const double e2 = std::exp(-2.0 * gamma);
    const double one_minus_s2 = em * em / (1.0 + e2 * e2);

    r.g0 = one_minus_s2 / 8.0;
    r.c0 = (th_sq + sech_sq * L) / 8.0;
    r.gpi2 = (2.0 - s2) / 8.0;
    r.cpi2 = (2.0 * th_sq + sech_sq * L) / 8.0;
    r.v_g = 1.0 / (2.0 - s2);
    // denominator written as (1 - s2) + L s2: both addends are O(gamma^2)
    // near 0, dodging the 1 - (1 - L) s2 cancellation of the naive form
    r.v_c = one_minus_s2 / (2.0 * (one_minus_s2 + L * s2));
    return r;
}

}  // namespace homrates
