#pragma once

#include <span>
#include <vector>

#include "homrates/bsv_source.hpp"
#include "homrates/sparse_state.hpp"

namespace homrates {

// Intensity correlator of a detected state: n_a n_b averaged over the state,
// normalized by the squared total photon number. The denominator is
// alpha-independent (the total photon-number distribution does not change
// with distinguishability), which is why it cancels from visibilities.
struct GqResult {
    double numerator = 0.0;    // <n_a n_b>
    double denominator = 0.0;  // <(n_a+n_b)^2>
    double value = 0.0;
};

// Throws UndefinedValueError (carrying the zero denominator) on a state with
// no nonvacuum weight.
GqResult g_q(const SparseState& state);

// Rate correlator <n_a n_b / (n_a+n_b)^2>, a total function: outcomes with no
// photons contribute 0 (the vacuum-projected observable). Always in [0, 1/4].
double c_q(const SparseState& state);

struct CorrelationPair {
    GqResult g;
    double c = 0.0;
};

// Both correlators in one pass over the state. Throws like g_q on vacuum.
CorrelationPair evaluate_correlations(const SparseState& state);

// (f(pi/2) - f(0)) / f(pi/2). Throws UndefinedValueError when f_at_pi2 == 0,
// which happens only for the vacuum (gamma = 0).
double visibility(double f_at_0, double f_at_pi2);

enum class VisStatus {
    ok,
    limit,      // gamma = 0 analytic limit substituted (closed-form route only)
    undefined,  // gamma = 0 on a numerical route: 0/0 is reported, not fabricated
};
const char* to_string(VisStatus s);

struct VisibilityRecord {
    double gamma = 0.0;
    double eta = 1.0;
    double g_at_0 = 0.0;
    double g_at_pi2 = 0.0;
    double c_at_0 = 0.0;
    double c_at_pi2 = 0.0;
    double v_g = 0.0;
    double v_c = 0.0;
    double delta_v = 0.0;  // v_c - v_g
    VisStatus status = VisStatus::ok;
    int n_max_used = 0;    // 0 for the closed-form route
};

// How sweeps pick the pair-number cutoff.
//
// The lossless rule keeps the *relative* error of the correlators in check:
// the alpha=0 intensity numerator scales like sinh^4(gamma), so for small
// gamma the tail tolerance is scaled down by sinh^4 before choosing N. A
// floor of 8 pairs is always retained. The lossy rule follows detector-loss
// practice: 8 pairs below gamma = 1, tail-chosen above.
struct TruncationPolicy {
    int fixed_n_max = -1;      // >= 0 bypasses both rules
    double tail = 1e-12;
    double lossy_tail = 1e-6;
    int hard_cap = kDefaultTruncationCap;
    bool clamp_at_cap = false;  // true: saturate at hard_cap instead of throwing
};

struct ResolvedTruncation {
    int n_max = 0;
    bool clamped = false;  // hard cap saturated; results carry extra truncation error
};

ResolvedTruncation resolve_lossless(const TruncationPolicy& policy, double gamma);
ResolvedTruncation resolve_lossy(const TruncationPolicy& policy, double gamma);

// One lossless sweep point via the truncated expansion. gamma = 0 yields a
// record with NaN visibilities and status undefined.
VisibilityRecord visibility_fock(double gamma, const TruncationPolicy& policy = {});

// One sweep point from the closed forms. gamma = 0 yields the analytic limit
// (both visibilities 1) flagged with status limit.
VisibilityRecord visibility_closed(double gamma);

std::vector<VisibilityRecord> sweep_fock(std::span<const double> gammas,
                                         const TruncationPolicy& policy = {});

}  // namespace homrates
