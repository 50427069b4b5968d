// Acceptance gate for the whole engine: nine independently checkable
// criteria, each printed as a single pass/fail line with its measured wall
// time. Exit code 0 only if every criterion passes inside its time budget.
// Tolerances are pinned here on purpose; loosening them is a visible diff.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "homrates/beamsplitter.hpp"
#include "homrates/bsv_source.hpp"
#include "homrates/classical_mc.hpp"
#include "homrates/closed_forms.hpp"
#include "homrates/correlations.hpp"
#include "homrates/loss_model.hpp"
#include "homrates/lossy_reference.hpp"
#include "homrates/math_util.hpp"

using namespace homrates;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// 1. Fock-path endpoint correlators agree with the analytic closed forms to
//    1e-8 relative across the seven-point gain grid.
Outcome criterion1() {
    const std::vector<double> grid{0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5};
    double worst = 0.0;
    for (double g : grid) {
        const auto f = visibility_fock(g);
        const auto c = eval_closed(g);
        worst = std::max({worst, std::fabs(f.g_at_0 - c.g0) / c.g0,
                          std::fabs(f.g_at_pi2 - c.gpi2) / c.gpi2,
                          std::fabs(f.c_at_0 - c.c0) / c.c0,
                          std::fabs(f.c_at_pi2 - c.cpi2) / c.cpi2});
    }
    return {worst < 1e-8, "max relative deviation " + fmt(worst) + " (tol 1e-8, 7 gains, both "
                          "endpoints, both correlators)"};
}

// 2. The gamma = 1 benchmark visibilities, from both computation paths.
Outcome criterion2() {
    const auto f = visibility_fock(1.0);
    const auto c = visibility_closed(1.0);
    const double worst =
        std::max({std::fabs(f.v_g - 0.576635), std::fabs(c.v_g - 0.576635),
                  std::fabs(f.v_c - 0.728948), std::fabs(c.v_c - 0.728948)});
    return {worst < 1e-5,
            "V_G, V_C at gamma 1 off the benchmark by at most " + fmt(worst) + " (tol 1e-5)"};
}

// 3. Ordering and the high-gain limit: V_C > V_G > 1/2, both strictly
//    decreasing in gamma, and both inside (0.5, 0.502) at gamma = 5.
Outcome criterion3() {
    const std::vector<double> fock_grid{0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5};
    const std::vector<double> closed_grid{0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5,
                                          2.0, 3.0, 4.0, 5.0};
    bool ordered = true;
    double prev_vg = 1.0, prev_vc = 1.0;
    for (double g : fock_grid) {
        const auto f = visibility_fock(g);
        ordered = ordered && f.v_c > f.v_g && f.v_g > 0.5 && f.v_g < prev_vg && f.v_c < prev_vc;
        prev_vg = f.v_g;
        prev_vc = f.v_c;
    }
    prev_vg = prev_vc = 1.0;
    for (double g : closed_grid) {
        const auto c = eval_closed(g);
        ordered = ordered && c.v_c > c.v_g && c.v_g > 0.5 && c.v_g < prev_vg && c.v_c < prev_vc;
        prev_vg = c.v_g;
        prev_vc = c.v_c;
    }
    const auto tail = eval_closed(5.0);
    const bool limits = tail.v_g > 0.5 && tail.v_g < 0.502 && tail.v_c > 0.5 && tail.v_c < 0.502;
    return {ordered && limits,
            std::string("V_C > V_G > 1/2 and decreasing on both paths; at gamma 5: V_G = ") +
                fmt6(tail.v_g) + ", V_C = " + fmt6(tail.v_c) + " (must sit in (0.5, 0.502))"};
}

// 4. The loss pipeline at eta = 1 reduces to the lossless moments.
Outcome criterion4() {
    double worst = 0.0;
    for (double g : {0.25, 0.5, 1.0}) {
        for (double a : {0.0, kHalfPi}) {
            const auto s = expand_output({g, a, 8});
            const auto m = lossy_moments(s, {1.0, true});
            worst = std::max(
                {worst, std::fabs(m.g - g_q(s).numerator), std::fabs(m.c - c_q(s))});
        }
    }
    return {worst < 1e-10, "eta = 1 kernel vs lossless moments: max deviation " + fmt(worst) +
                               " (tol 1e-10)"};
}

// 5. Under loss the rate-correlator visibility never drops below the
//    eta-independent product-moment one, and approaches it as eta falls.
Outcome criterion5() {
    bool pass = true;
    std::string note;
    for (double g : {0.25, 0.5, 0.75}) {
        TruncationPolicy fixed;
        fixed.fixed_n_max = 8;
        const double v_g_ref = visibility_fock(g, fixed).v_g;
        double vc_01 = 0.0, vc_075 = 0.0;
        for (double eta : {0.1, 0.25, 0.5, 0.75, 1.0}) {
            const double vc = eta == 1.0 ? visibility_fock(g, fixed).v_c
                                         : visibility_eta(g, {eta, true}, 8).v_c;
            pass = pass && vc >= v_g_ref - 1e-9;
            if (eta == 0.1) vc_01 = vc;
            if (eta == 0.75) vc_075 = vc;
        }
        pass = pass && std::fabs(vc_01 - v_g_ref) < std::fabs(vc_075 - v_g_ref);
        if (g == 0.5)
            note = "at gamma 0.5: V_C(eta 0.1) - V_G = " + fmt(vc_01 - v_g_ref) +
                   ", V_C(eta 0.75) - V_G = " + fmt(vc_075 - v_g_ref);
    }
    return {pass, "V_C(eta) >= V_G - 1e-9 and collapses toward V_G as eta falls; " + note};
}

// 6. Three independent loss routes (marginal kernel, four-mode convolution,
//    literal index sums) agree at gamma 0.5, eta 0.5.
Outcome criterion6() {
    const DetectionModel model{0.5, true};
    double worst = 0.0;
    {
        const auto s = expand_output({0.5, 0.0, 8});
        const auto m = lossy_moments(s, model);
        const auto f = lossy_moments_fourmode(s, model);
        const auto d = lossy_direct_alpha0(0.5, model, 8);
        worst = std::max({worst, std::fabs(m.g - f.g), std::fabs(m.c - f.c),
                          std::fabs(m.g - d.g), std::fabs(m.c - d.c)});
    }
    {
        const auto s = expand_output({0.5, kHalfPi, 8});
        const auto m = lossy_moments(s, model);
        const auto f = lossy_moments_fourmode(s, model);
        const auto d = lossy_direct_alpha_pi2(0.5, model, 8);
        worst = std::max({worst, std::fabs(m.g - f.g), std::fabs(m.c - f.c),
                          std::fabs(m.g - d.g), std::fabs(m.c - d.c)});
    }
    return {worst < 1e-10,
            "three loss routes, both endpoints: max deviation " + fmt(worst) + " (tol 1e-10)"};
}

// 7. The stochastic baseline obeys the 1/2 ceiling; the fixed-equal law
//    saturates it within statistics.
Outcome criterion7() {
    bool pass = true;
    double fixed_sigma = 0.0, worst_excess = -1.0;
    for (IntensityLaw law : {IntensityLaw::fixed_equal, IntensityLaw::independent_exponential}) {
        const std::uint64_t seed = law == IntensityLaw::fixed_equal ? 12345u : 12347u;
        const ClassicalEnsemble dip{1'000'000, 1.0, law, seed, 0.0};
        const ClassicalEnsemble top{1'000'000, 0.0, law, seed + 1, 0.0};
        const auto v = classical_visibility(dip, top);
        worst_excess = std::max({worst_excess, v.v_g - (0.5 + 3.0 * v.v_g_se),
                                 v.v_c - (0.5 + 3.0 * v.v_c_se)});
        if (law == IntensityLaw::fixed_equal)
            fixed_sigma = std::max(std::fabs(v.v_g - 0.5) / v.v_g_se,
                                   std::fabs(v.v_c - 0.5) / v.v_c_se);
    }
    pass = worst_excess <= 0.0 && fixed_sigma <= 3.0;
    return {pass, "1e6 runs per ensemble: worst excess over 0.5+3se = " + fmt(worst_excess) +
                      ", fixed law sits " + fmt(fixed_sigma) + " se from 1/2 (limit 3)"};
}

// 8. Structural invariants of the expanded state: parity at alpha = 0,
//    sector weights, and insensitivity to an overall input phase.
Outcome criterion8() {
    const auto s = expand_output({0.5, 0.0, 3});
    bool parity = true;
    for (const auto& t : s.terms())
        parity = parity && t.occ.k == 0 && t.occ.m == 0 && t.occ.j % 2 == 0 && t.occ.l % 2 == 0;

    double worst_weight = 0.0;
    for (int n = 0; n <= 3; ++n) {
        NeumaierSum sector;
        for (const auto& t : s.terms())
            if (t.occ.total() == 2 * n) sector.add(t.amplitude * t.amplitude);
        worst_weight = std::max(worst_weight,
                                std::fabs(sector.value() - pair_probability(0.5, n)));
    }

    double worst_phase = 0.0;
    double mean_ref = 0.0;
    for (double phi : {0.0, std::numbers::pi / 3.0, std::numbers::pi}) {
        const auto ps = expand_output_with_phase({0.5, 0.0, 3}, phi);
        NeumaierSum mean_na;
        for (const auto& t : ps.terms) mean_na.add(std::norm(t.amplitude) * t.occ.n_a());
        if (phi == 0.0)
            mean_ref = mean_na.value();
        else
            worst_phase = std::max(worst_phase, std::fabs(mean_na.value() - mean_ref));
    }

    const bool pass = parity && worst_weight < 1e-12 && worst_phase < 1e-12;
    return {pass, std::string("alpha 0 parity ") + (parity ? "holds" : "BROKEN") +
                      ", sector weight deviation " + fmt(worst_weight) +
                      ", phase sensitivity of <n_a> " + fmt(worst_phase) + " (tol 1e-12)"};
}

// 9. The optimized expansion equals a naive polynomial reference term by term.
Outcome criterion9() {
    double worst = 0.0;
    for (double alpha : {0.0, std::numbers::pi / 4.0, kHalfPi}) {
        const auto state = expand_output({0.8, alpha, 4});
        const auto ref = testing::brute_force_amplitudes(0.8, alpha, 4);
        for (const auto& [occ, amp] : ref)
            worst = std::max(worst, std::fabs(state.amplitude_of(occ) - amp));
        for (const auto& t : state.terms()) {
            const auto it = ref.find(t.occ);
            worst = std::max(worst,
                             std::fabs(t.amplitude - (it == ref.end() ? 0.0 : it->second)));
        }
    }
    return {worst < 1e-13,
            "optimized vs naive expansion, order 4: max amplitude deviation " + fmt(worst) +
                " (tol 1e-13)"};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries{
        {"dual-route endpoint agreement", 10.0, criterion1},
        {"gamma 1 benchmark visibilities", 1.0, criterion2},
        {"visibility ordering and high-gain limit", 10.0, criterion3},
        {"loss pipeline identity reduction", 30.0, criterion4},
        {"loss sweep physics", 60.0, criterion5},
        {"independent loss-route agreement", 30.0, criterion6},
        {"classical visibility ceiling", 30.0, criterion7},
        {"state structure invariants", 5.0, criterion8},
        {"brute-force expansion agreement", 5.0, criterion9},
    };

    int failures = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = entries[i].run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs <= entries[i].budget_seconds;
        const bool pass = out.pass && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %zu [%s] %s: %s [%.2fs, budget %.0fs]%s\n", i + 1,
                    pass ? "pass" : "FAIL", entries[i].name, out.detail.c_str(), secs,
                    entries[i].budget_seconds, in_budget ? "" : " (over budget)");
    }
    std::printf("acceptance: %d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
