#include "homrates/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "homrates/beamsplitter.hpp"
#include "homrates/closed_forms.hpp"
#include "homrates/errors.hpp"

namespace homrates {

namespace {

CorrelationPair accumulate(const SparseState& state) {
    NeumaierSum num, den, rate;
    for (const auto& t : state.terms()) {
        const double p = t.amplitude * t.amplitude;
        const double na = static_cast<double>(t.occ.n_a());
        const double nb = static_cast<double>(t.occ.n_b());
        const double tot = na + nb;
        num.add(p * na * nb);
        den.add(p * tot * tot);
        if (tot > 0.0) rate.add(p * (na * nb) / (tot * tot));
    }
    CorrelationPair out;
    out.g.numerator = num.value();
    out.g.denominator = den.value();
    out.c = rate.value();
    return out;
}

}  // namespace

CorrelationPair evaluate_correlations(const SparseState& state) {
    CorrelationPair out = accumulate(state);
    if (out.g.denominator == 0.0)
        throw UndefinedValueError("intensity correlator undefined: state has no nonvacuum weight",
                                  out.g.denominator);
    out.g.value = out.g.numerator / out.g.denominator;
    return out;
}

GqResult g_q(const SparseState& state) { return evaluate_correlations(state).g; }

double c_q(const SparseState& state) { return accumulate(state).c; }

double visibility(double f_at_0, double f_at_pi2) {
    if (f_at_pi2 == 0.0)
        throw UndefinedValueError("visibility undefined: zero correlator at alpha = pi/2",
                                  f_at_pi2);
    return (f_at_pi2 - f_at_0) / f_at_pi2;
}

const char* to_string(VisStatus s) {
    switch (s) {
        case VisStatus::ok: return "ok";
        case VisStatus::limit: return "limit";
        case VisStatus::undefined: return "undefined";
    }
    return "?";
}

namespace {

ResolvedTruncation resolve(const TruncationPolicy& policy, double gamma, double tolerance,
                           int floor_n) {
    if (policy.fixed_n_max >= 0) return {policy.fixed_n_max, false};
    try {
        const int n = choose_truncation(gamma, tolerance, policy.hard_cap);
        return {std::max(floor_n, n), false};
    } catch (const CapacityError&) {
        if (!policy.clamp_at_cap) throw;
        return {policy.hard_cap, true};
    }
}

}  // namespace

ResolvedTruncation resolve_lossless(const TruncationPolicy& policy, double gamma) {
    if (policy.fixed_n_max >= 0) return {policy.fixed_n_max, false};
    if (gamma == 0.0) return {8, false};
    // keep the tail small relative to the alpha=0 numerator ~ sinh^4(gamma)/4,
    // not just in absolute terms, so small-gamma points keep 1e-8 relative accuracy
    const double s = std::sinh(std::min(gamma, 2.0));
    const double scale = std::min(1.0, s * s * s * s);
    return resolve(policy, gamma, policy.tail * scale, 8);
}

ResolvedTruncation resolve_lossy(const TruncationPolicy& policy, double gamma) {
    if (policy.fixed_n_max >= 0) return {policy.fixed_n_max, false};
    if (gamma < 1.0) return {8, false};
    return resolve(policy, gamma, policy.lossy_tail, 8);
}

VisibilityRecord visibility_fock(double gamma, const TruncationPolicy& policy) {
    const ResolvedTruncation trunc = resolve_lossless(policy, gamma);
    constexpr double half_pi = std::numbers::pi / 2.0;

    VisibilityRecord rec;
    rec.gamma = gamma;
    rec.eta = 1.0;
    rec.n_max_used = trunc.n_max;

    const SparseState at0 = expand_output({gamma, 0.0, trunc.n_max});
    const SparseState atpi2 = expand_output({gamma, half_pi, trunc.n_max});

    if (gamma == 0.0) {
        rec.c_at_0 = c_q(at0);
        rec.c_at_pi2 = c_q(atpi2);
        rec.v_g = std::numeric_limits<double>::quiet_NaN();
        rec.v_c = rec.v_g;
        rec.delta_v = rec.v_g;
        rec.status = VisStatus::undefined;
        return rec;
    }

    const CorrelationPair p0 = evaluate_correlations(at0);
    const CorrelationPair ppi2 = evaluate_correlations(atpi2);
    rec.g_at_0 = p0.g.value;
    rec.g_at_pi2 = ppi2.g.value;
    rec.c_at_0 = p0.c;
    rec.c_at_pi2 = ppi2.c;
    rec.v_g = visibility(rec.g_at_0, rec.g_at_pi2);
    rec.v_c = visibility(rec.c_at_0, rec.c_at_pi2);
    rec.delta_v = rec.v_c - rec.v_g;
    return rec;
}

VisibilityRecord visibility_closed(double gamma) {
    const ClosedFormSet cf = eval_closed(gamma);
    VisibilityRecord rec;
    rec.gamma = gamma;
    rec.eta = 1.0;
    rec.g_at_0 = cf.g0;
    rec.g_at_pi2 = cf.gpi2;
    rec.c_at_0 = cf.c0;
    rec.c_at_pi2 = cf.cpi2;
    rec.v_g = cf.v_g;
    rec.v_c = cf.v_c;
    rec.delta_v = cf.v_c - cf.v_g;
    rec.status = cf.limit_at_zero ? VisStatus::limit : VisStatus::ok;
    rec.n_max_used = 0;
    return rec;
}

std::vector<VisibilityRecord> sweep_fock(std::span<const double> gammas,
                                         const TruncationPolicy& policy) {
    std::vector<VisibilityRecord> out;
    out.reserve(gammas.size());
    for (double g : gammas) out.push_back(visibility_fock(g, policy));
    return out;
}

}  // namespace homrates
