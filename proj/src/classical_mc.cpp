#include "homrates/classical_mc.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "homrates/errors.hpp"
#include "homrates/math_util.hpp"

namespace homrates {

const char* to_string(IntensityLaw law) {
    switch (law) {
        case IntensityLaw::fixed_equal: return "fixed-equal";
        case IntensityLaw::independent_exponential: return "independent-exponential";
    }
    return "?";
}

void ClassicalEnsemble::validate() const {
    if (runs < 1) throw InvalidArgumentError("runs must be >= 1");
    if (!std::isfinite(overlap) || overlap < 0.0 || overlap > 1.0)
        throw InvalidArgumentError("overlap must lie in [0, 1], got " + std::to_string(overlap));
    if (!std::isfinite(phase_offset))
        throw InvalidArgumentError("phase offset must be finite");
}

namespace {

// Independent substream per run: both the seed and the run index go through a
// full splitmix64 avalanche, so streams never overlap no matter how many
// values a run draws.
SplitMix64 per_run_stream(std::uint64_t seed, std::uint64_t run) {
    SplitMix64 a(seed);
    SplitMix64 b(a.next() + run);
    return SplitMix64(b.next());
}

struct MomentAcc {
    NeumaierSum sum, sq;

    void add(double x) {
        sum.add(x);
        sq.add(x * x);
    }
    // mean and its standard error from n samples
    void finish(std::uint64_t n, double& mean, double& se) const {
        const double nn = static_cast<double>(n);
        mean = sum.value() / nn;
        if (n < 2) {
            se = 0.0;
            return;
        }
        const double var = std::max(0.0, (sq.value() / nn - mean * mean) * nn / (nn - 1.0));
        se = std::sqrt(var / nn);
    }
};

}  // namespace

ClassicalResult sample_products(const ClassicalEnsemble& ensemble) {
    ensemble.validate();
    constexpr double two_pi = 2.0 * std::numbers::pi;

    MomentAcc g_acc, c_acc, ia_acc;
    for (std::uint64_t run = 0; run < ensemble.runs; ++run) {
        SplitMix64 rng = per_run_stream(ensemble.seed, run);

        // draw order is pinned (intensities, then phases) so streams are stable
        double i1 = 1.0, i2 = 1.0;
        if (ensemble.law == IntensityLaw::independent_exponential) {
            i1 = -std::log1p(-rng.uniform01());
            i2 = -std::log1p(-rng.uniform01());
        }
        const double ph1 = two_pi * rng.uniform01();
        const double ph2 = two_pi * rng.uniform01();

        const double half = 0.5 * (i1 + i2);
        const double cross =
            std::sqrt(ensemble.overlap * i1 * i2) * std::cos(ph1 - ph2 + ensemble.phase_offset);
        const double ia = half + cross;
        const double ib = half - cross;
        const double itot = i1 + i2;

        if (!std::isfinite(ia) || !std::isfinite(ib))
            throw Error("non-finite intensity at run " + std::to_string(run));
        if (std::fabs((ia + ib) - itot) > 8.0 * std::numeric_limits<double>::epsilon() * itot)
            throw Error("energy conservation violated at run " + std::to_string(run));

        const double g = ia * ib;
        g_acc.add(g);
        c_acc.add(itot > 0.0 ? g / (itot * itot) : 0.0);
        ia_acc.add(ia);
    }

    ClassicalResult r;
    r.runs = ensemble.runs;
    g_acc.finish(ensemble.runs, r.g_mean, r.g_se);
    c_acc.finish(ensemble.runs, r.c_mean, r.c_se);
    ia_acc.finish(ensemble.runs, r.ia_mean, r.ia_se);
    return r;
}

namespace {

void ratio_visibility(double dip, double dip_se, double top, double top_se, double& v,
                      double& v_se) {
    if (top == 0.0)
        throw UndefinedValueError("classical visibility undefined: zero maximum correlator", top);
    v = (top - dip) / top;
    v_se = std::sqrt((dip_se / top) * (dip_se / top) +
                     (dip * top_se / (top * top)) * (dip * top_se / (top * top)));
}

}  // namespace

ClassicalVisibility classical_visibility(const ClassicalEnsemble& overlapped,
                                         const ClassicalEnsemble& orthogonal) {
    if (overlapped.law != orthogonal.law || overlapped.runs != orthogonal.runs)
        throw InvalidArgumentError(
            "visibility ensembles must share the intensity law and run count");

    const ClassicalResult dip = sample_products(overlapped);
    const ClassicalResult top = sample_products(orthogonal);

    ClassicalVisibility v;
    ratio_visibility(dip.g_mean, dip.g_se, top.g_mean, top.g_se, v.v_g, v.v_g_se);
    ratio_visibility(dip.c_mean, dip.c_se, top.c_mean, top.c_se, v.v_c, v.v_c_se);
    return v;
}

}  // namespace homrates
