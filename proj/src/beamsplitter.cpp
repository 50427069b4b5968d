#include "homrates/beamsplitter.hpp"

#include <algorithm>
#include <cmath>

#include "homrates/errors.hpp"
#include "homrates/math_util.hpp"

namespace homrates {

namespace {

// angles within this of an endpoint are treated as the endpoint, so the
// alpha=0 and alpha=pi/2 structural guarantees (only even occupations, exact
// product form) hold for the representable inputs cos(pi/2) ~ 6e-17 etc.
constexpr double kTrigSnap = 1e-14;

// Walks every output term of the splitter expansion exactly once and hands
// (occupation, real amplitude, sector n) to sink. Occupations never repeat:
// like-term collection happens inside the per-(n,l) coefficient array, before
// any amplitude is emitted, so emitted amplitudes are the collected ones.
template <typename Sink>
void expand_core(const SourceParams& p, const ExpandOptions& opts, Sink&& sink) {
    p.validate();
    const double sign = opts.convention.mode2_relative_sign;
    if (sign != -1.0 && sign != 1.0)
        throw InvalidArgumentError("mode2_relative_sign must be -1 or +1");

    double c = std::cos(p.alpha);
    double s = std::sin(p.alpha);
    if (std::fabs(c) < kTrigSnap) c = 0.0;
    if (std::fabs(s) < kTrigSnap) s = 0.0;
    const double log_c = c > 0.0 ? std::log(c) : 0.0;
    const double log_s = s > 0.0 ? std::log(s) : 0.0;

    const auto lf = log_factorial_table(2 * p.n_max + 1);

    for (int n = 0; n <= p.n_max; ++n) {
        if (n > 0 && p.gamma == 0.0) break;
        const double log_an = log_pair_prefactor(p.gamma, n);
        for (int l = 0; l <= n; ++l) {
            if ((s == 0.0 && l > 0) || (c == 0.0 && l < n)) continue;

            // coefficients of the (a,b) factor by power j of a_dag.
            // pinned sign: (a^2-b^2)^{n-l} (a+b)^l, collected exactly here;
            // perturbed (+1) convention collapses to the single binomial (a+b)^{2n-l}.
            const int deg = 2 * n - l;
            std::vector<double> ab(static_cast<std::size_t>(deg) + 1, 0.0);
            if (sign < 0.0) {
                const auto row_q = binomial_row(n - l);
                const auto row_l = binomial_row(l);
                for (int q = 0; q <= n - l; ++q) {
                    const double base = (q & 1) ? -row_q[static_cast<std::size_t>(q)]
                                                : row_q[static_cast<std::size_t>(q)];
                    const int j0 = 2 * (n - l - q);
                    for (int w = 0; w <= l; ++w)
                        ab[static_cast<std::size_t>(j0 + w)] += base * row_l[static_cast<std::size_t>(w)];
                }
            } else {
                ab = binomial_row(deg);
            }

            double log_pref = log_an + std::log(binomial(n, l));
            if (n - l > 0) log_pref += static_cast<double>(n - l) * log_c;
            if (l > 0) log_pref += static_cast<double>(l) * log_s;

            const auto row_perp = binomial_row(l);
            for (int v = 0; v <= l; ++v) {
                const double perp = ((l - v) & 1) ? sign * row_perp[static_cast<std::size_t>(v)]
                                                  : row_perp[static_cast<std::size_t>(v)];
                const double log_perp = std::log(row_perp[static_cast<std::size_t>(v)]);
                for (int j = 0; j <= deg; ++j) {
                    const double cj = ab[static_cast<std::size_t>(j)];
                    if (cj == 0.0) continue;
                    const Occupation4 occ{j, v, deg - j, l - v};
                    const double log_mag =
                        log_pref + std::log(std::fabs(cj)) + log_perp +
                        0.5 * (lf[static_cast<std::size_t>(occ.j)] + lf[static_cast<std::size_t>(occ.k)] +
                               lf[static_cast<std::size_t>(occ.l)] + lf[static_cast<std::size_t>(occ.m)]);
                    double amp = std::exp(log_mag);
                    if (cj < 0.0) amp = -amp;
                    if (perp < 0.0) amp = -amp;
                    sink(occ, amp, n);
                }
            }
        }
    }
}

}  // namespace

SparseState expand_output(const SourceParams& p, const ExpandOptions& opts) {
    StateBuilder builder(p.n_max, opts.max_terms);
    expand_core(p, opts, [&](const Occupation4& occ, double amp, int) { builder.push(occ, amp); });
    return builder.finish();
}

PhasedState expand_output_with_phase(const SourceParams& p, double phi, const ExpandOptions& opts) {
    PhasedState out;
    out.truncation_order = p.n_max;
    expand_core(p, opts, [&](const Occupation4& occ, double amp, int n) {
        if (amp == 0.0) return;
        if (out.terms.size() >= opts.max_terms)
            throw CapacityError("state term budget exceeded");
        const std::complex<double> phase = std::polar(1.0, static_cast<double>(n) * phi);
        out.terms.push_back({occ, amp * phase});
    });
    std::sort(out.terms.begin(), out.terms.end(),
              [](const PhasedTerm& a, const PhasedTerm& b) { return a.occ < b.occ; });
    for (std::size_t i = 1; i < out.terms.size(); ++i)
        if (out.terms[i].occ == out.terms[i - 1].occ)
            throw InvalidArgumentError("duplicate occupation in phased expansion");
    return out;
}

}  // namespace homrates
