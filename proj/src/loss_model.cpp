#include "homrates/loss_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "homrates/beamsplitter.hpp"
#include "homrates/errors.hpp"
#include "homrates/math_util.hpp"

namespace homrates {

void DetectionModel::validate() const {
    if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0)
        throw InvalidArgumentError("eta must lie in (0, 1], got " + std::to_string(eta));
    if (!number_resolving)
        throw InvalidArgumentError("only number-resolving detectors are modeled");
}

LossKernel::LossKernel(double eta, int max_count) {
    DetectionModel{eta, true}.validate();
    if (max_count < 0) throw InvalidArgumentError("kernel max_count must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_count) + 1);
    for (int y = 0; y <= max_count; ++y) {
        auto& row = rows_[static_cast<std::size_t>(y)];
        row.assign(static_cast<std::size_t>(y) + 1, 0.0);
        if (eta == 1.0) {
            row[static_cast<std::size_t>(y)] = 1.0;
            continue;
        }
        for (int x = 0; x <= y; ++x)
            row[static_cast<std::size_t>(x)] =
                binomial(y, x) * std::pow(eta, x) * std::pow(1.0 - eta, y - x);
    }
}

double LossKernel::prob(int y, int x) const {
    if (y < 0 || y > max_count() || x < 0 || x > y) return 0.0;
    return rows_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
}

namespace {

int max_mode_count(const SparseState& state) {
    int m = 0;
    for (const auto& t : state.terms())
        m = std::max({m, t.occ.j, t.occ.k, t.occ.l, t.occ.m});
    return m;
}

}  // namespace

std::map<Occupation4, double> lossy_outcome_distribution(const SparseState& state,
                                                         const DetectionModel& model) {
    model.validate();
    const LossKernel ker(model.eta, max_mode_count(state));
    std::map<Occupation4, double> out;
    for (const auto& t : state.terms()) {
        const double p = t.amplitude * t.amplitude;
        const auto rj = ker.row(t.occ.j);
        const auto rk = ker.row(t.occ.k);
        const auto rl = ker.row(t.occ.l);
        const auto rm = ker.row(t.occ.m);
        for (int xj = 0; xj <= t.occ.j; ++xj) {
            const double pj = p * rj[static_cast<std::size_t>(xj)];
            for (int xk = 0; xk <= t.occ.k; ++xk) {
                const double pk = pj * rk[static_cast<std::size_t>(xk)];
                for (int xl = 0; xl <= t.occ.l; ++xl) {
                    const double pl = pk * rl[static_cast<std::size_t>(xl)];
                    for (int xm = 0; xm <= t.occ.m; ++xm)
                        out[{xj, xk, xl, xm}] += pl * rm[static_cast<std::size_t>(xm)];
                }
            }
        }
    }
    return out;
}

LossyMoments lossy_moments(const SparseState& state, const DetectionModel& model) {
    model.validate();
    const int Y = 2 * state.truncation_order();
    const std::size_t W = static_cast<std::size_t>(Y) + 1;

    // joint pre-loss distribution over spatial totals; entries are positive,
    // so plain accumulation keeps full relative accuracy
    std::vector<double> pre(W * W, 0.0);
    for (const auto& t : state.terms())
        pre[static_cast<std::size_t>(t.occ.n_a()) * W + static_cast<std::size_t>(t.occ.n_b())] +=
            t.amplitude * t.amplitude;

    const LossKernel ker(model.eta, Y);

    // thin side a: half[x_a][y_b] = sum_{y_a} P(x_a|y_a) pre[y_a][y_b]
    std::vector<double> half(W * W, 0.0);
    for (int ya = 0; ya <= Y; ++ya) {
        const auto row = ker.row(ya);
        const double* src = &pre[static_cast<std::size_t>(ya) * W];
        for (int xa = 0; xa <= ya; ++xa) {
            const double w = row[static_cast<std::size_t>(xa)];
            if (w == 0.0) continue;
            double* dst = &half[static_cast<std::size_t>(xa) * W];
            for (std::size_t yb = 0; yb < W; ++yb) dst[yb] += w * src[yb];
        }
    }

    // thin side b and take both moments in the same pass; outcomes with a
    // zero count on either side contribute to neither moment and are skipped
    NeumaierSum g_acc, c_acc;
    for (int xa = 1; xa <= Y; ++xa) {
        const double* src = &half[static_cast<std::size_t>(xa) * W];
        for (int yb = 1; yb <= Y; ++yb) {
            const double v = src[static_cast<std::size_t>(yb)];
            if (v == 0.0) continue;
            const auto row = ker.row(yb);
            for (int xb = 1; xb <= yb; ++xb) {
                const double q = v * row[static_cast<std::size_t>(xb)];
                const double prod = static_cast<double>(xa) * static_cast<double>(xb);
                const double tot = static_cast<double>(xa + xb);
                g_acc.add(q * prod);
                c_acc.add(q * prod / (tot * tot));
            }
        }
    }
    return {g_acc.value(), c_acc.value()};
}

LossyMoments lossy_moments_fourmode(const SparseState& state, const DetectionModel& model) {
    const auto dist = lossy_outcome_distribution(state, model);
    NeumaierSum g_acc, c_acc;
    for (const auto& [occ, p] : dist) {
        const double na = static_cast<double>(occ.n_a());
        const double nb = static_cast<double>(occ.n_b());
        if (na == 0.0 || nb == 0.0) continue;
        const double tot = na + nb;
        g_acc.add(p * na * nb);
        c_acc.add(p * na * nb / (tot * tot));
    }
    return {g_acc.value(), c_acc.value()};
}

double g_q_eta(const SparseState& state, const DetectionModel& model) {
    return lossy_moments(state, model).g;
}

double c_q_eta(const SparseState& state, const DetectionModel& model) {
    return lossy_moments(state, model).c;
}

VisibilityRecord visibility_eta(double gamma, const DetectionModel& model, int n_max) {
    model.validate();
    if (model.eta == 1.0) {
        TruncationPolicy policy;
        policy.fixed_n_max = n_max;
        return visibility_fock(gamma, policy);
    }
    constexpr double half_pi = std::numbers::pi / 2.0;
    return visibility_eta_from_states(gamma, expand_output({gamma, 0.0, n_max}),
                                      expand_output({gamma, half_pi, n_max}), model);
}

VisibilityRecord visibility_eta_from_states(double gamma, const SparseState& at0,
                                            const SparseState& at_pi2,
                                            const DetectionModel& model) {
    model.validate();
    if (model.eta == 1.0)
        throw InvalidArgumentError("eta = 1 sweep points go through the lossless path");
    if (at0.truncation_order() != at_pi2.truncation_order())
        throw InvalidArgumentError("endpoint states have different truncation orders");

    VisibilityRecord rec;
    rec.gamma = gamma;
    rec.eta = model.eta;
    rec.n_max_used = at0.truncation_order();

    const LossyMoments m0 = lossy_moments(at0, model);
    const LossyMoments mpi2 = lossy_moments(at_pi2, model);
    rec.g_at_0 = m0.g;
    rec.g_at_pi2 = mpi2.g;
    rec.c_at_0 = m0.c;
    rec.c_at_pi2 = mpi2.c;
    if (gamma == 0.0) {
        rec.v_g = std::numeric_limits<double>::quiet_NaN();
        rec.v_c = rec.v_g;
        rec.delta_v = rec.v_g;
        rec.status = VisStatus::undefined;
        return rec;
    }
    rec.v_g = visibility(m0.g, mpi2.g);
    rec.v_c = visibility(m0.c, mpi2.c);
    rec.delta_v = rec.v_c - rec.v_g;
    return rec;
}

}  // namespace homrates
