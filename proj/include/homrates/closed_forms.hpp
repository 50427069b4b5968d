#pragma once

namespace homrates {

// Analytic values of the two correlators at the alpha endpoints, and the
// visibilities they imply. Completely independent of the Fock expansion;
// the test suite drives both routes against each other.
struct ClosedFormSet {
    double g0 = 0.0;     // intensity correlator, alpha = 0
    double c0 = 0.0;     // rate correlator, alpha = 0
    double gpi2 = 0.0;   // intensity correlator, alpha = pi/2
    double cpi2 = 0.0;   // rate correlator, alpha = pi/2
    double v_g = 0.0;
    double v_c = 0.0;
    bool limit_at_zero = false;  // gamma == 0: correlators vanish, visibilities
                                 // are the gamma->0 limits (both 1)
};

ClosedFormSet eval_closed(double gamma);  // throws InvalidArgumentError on bad gamma

}  // namespace homrates
