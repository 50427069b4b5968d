#include "homrates/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "homrates/beamsplitter.hpp"
#include "homrates/bsv_source.hpp"
#include "homrates/classical_mc.hpp"
#include "homrates/closed_forms.hpp"
#include "homrates/correlations.hpp"
#include "homrates/errors.hpp"
#include "homrates/loss_model.hpp"
#include "homrates/lossy_reference.hpp"
#include "homrates/svg_plot.hpp"

namespace homrates {

namespace {

// data cells: 17 significant digits per the CSV dialect
std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// metadata echo: short form
std::string numg(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double to_double(const std::string& text, const std::string& name) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InvalidArgumentError(name + ": cannot parse '" + text + "' as a number");
    }
    if (pos != text.size())
        throw InvalidArgumentError(name + ": trailing characters in '" + text + "'");
    if (!std::isfinite(v)) throw InvalidArgumentError(name + ": value must be finite");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

constexpr std::size_t kMaxGridPoints = 100000;

}  // namespace

std::vector<double> parse_value_spec(const std::string& spec, const std::string& name) {
    if (spec.empty()) throw InvalidArgumentError(name + ": empty value list");
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw InvalidArgumentError(name + ": range must be start:stop:step, got '" + spec + "'");
        const double start = to_double(parts[0], name);
        const double stop = to_double(parts[1], name);
        const double step = to_double(parts[2], name);
        if (!(step > 0.0)) throw InvalidArgumentError(name + ": range step must be > 0");
        if (stop < start) throw InvalidArgumentError(name + ": range stop is below start");
        const double span = (stop - start) / step;
        const auto count = static_cast<std::size_t>(std::floor(span * (1.0 + 1e-12) + 1e-9)) + 1;
        if (count > kMaxGridPoints)
            throw InvalidArgumentError(name + ": range produces more than " +
                                       std::to_string(kMaxGridPoints) + " points");
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(start + static_cast<double>(i) * step);
        // land exactly on the endpoint when the range divides evenly
        if (std::fabs(out.back() - stop) <= 1e-9 * step) out.back() = stop;
    } else {
        for (const auto& piece : split(spec, ','))
            out.push_back(to_double(piece, name));
    }
    return out;
}

namespace {

struct Options {
    std::string gamma_spec;
    std::string eta_spec;
    std::string alpha_spec;
    std::string nmax_spec = "auto";
    double tail = 0.0;  // 0 = command-specific default
    std::string method = "both";
    std::uint64_t runs = 1'000'000;
    std::uint64_t seed = 12345;
    std::string out_path;
    std::string format = "csv";
    bool perturb_convention = false;
};

std::vector<double> parse_gammas(const std::string& spec) {
    auto v = parse_value_spec(spec, "--gamma");
    for (double g : v)
        if (g < 0.0) throw InvalidArgumentError("--gamma: values must be >= 0");
    return v;
}

std::vector<double> parse_etas(const std::string& spec) {
    auto v = parse_value_spec(spec, "--eta");
    for (double e : v)
        if (!(e > 0.0) || e > 1.0)
            throw InvalidArgumentError("--eta: values must lie in (0, 1]");
    return v;
}

std::vector<double> parse_alphas_deg(const std::string& spec) {
    auto v = parse_value_spec(spec, "--alpha");
    for (double a : v)
        if (a < 0.0 || a > 90.0)
            throw InvalidArgumentError("--alpha: degrees must lie in [0, 90]");
    return v;
}

TruncationPolicy make_policy(const Options& o) {
    TruncationPolicy p;
    p.clamp_at_cap = true;  // sweeps saturate at the cap and disclose it
    if (o.nmax_spec != "auto") {
        std::size_t pos = 0;
        long n = 0;
        try {
            n = std::stol(o.nmax_spec, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != o.nmax_spec.size() || n < 0 || n > 5000)
            throw InvalidArgumentError("--nmax: expected 'auto' or an integer in [0, 5000], got '" +
                                       o.nmax_spec + "'");
        p.fixed_n_max = static_cast<int>(n);
    }
    if (o.tail != 0.0) {
        if (!(o.tail > 0.0) || o.tail >= 1.0)
            throw InvalidArgumentError("--tail: tolerance must lie in (0, 1)");
        p.tail = o.tail;
        p.lossy_tail = o.tail;
    }
    return p;
}

std::string format_trunc_list(const std::vector<ResolvedTruncation>& used) {
    std::string s;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(used[i].n_max);
        if (used[i].clamped) s += "(clamped)";
    }
    return s;
}

// shared "# ..." preamble; every CSV gets tool version, command, config echo
std::string metadata(const std::string& command, const std::vector<std::string>& config_lines) {
    std::string s = "# homrates " + std::string(kToolVersion) + "\n";
    s += "# command: " + command + "\n";
    for (const auto& line : config_lines) s += "# " + line + "\n";
    return s;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return std::cout ? 0 : 3;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "homrates: cannot open '" << path << "' for writing\n";
        return 3;
    }
    f << content;
    f.flush();
    if (!f) {
        std::cerr << "homrates: write to '" << path << "' failed\n";
        return 3;
    }
    return 0;
}

constexpr double kDegToRad = std::numbers::pi / 180.0;

// ---- visibility ------------------------------------------------------------

std::string visibility_row(const VisibilityRecord& r, const char* method) {
    return num17(r.gamma) + "," + num17(r.g_at_0) + "," + num17(r.g_at_pi2) + "," +
           num17(r.c_at_0) + "," + num17(r.c_at_pi2) + "," + num17(r.v_g) + "," + num17(r.v_c) +
           "," + method + "," + to_string(r.status) + "\n";
}

int cmd_visibility(const Options& o) {
    const std::string gamma_spec = o.gamma_spec.empty() ? "0.1:2.0:0.1" : o.gamma_spec;
    const auto gammas = parse_gammas(gamma_spec);
    if (!o.eta_spec.empty())
        for (double e : parse_etas(o.eta_spec))
            if (e != 1.0)
                throw InvalidArgumentError("visibility is a perfect-detection sweep; use the "
                                           "lossy command for eta < 1");
    const bool want_fock = o.method == "fock" || o.method == "both";
    const bool want_closed = o.method == "closed" || o.method == "both";
    if (!want_fock && !want_closed)
        throw InvalidArgumentError("--method: expected fock, closed, or both");
    const TruncationPolicy policy = make_policy(o);

    std::vector<VisibilityRecord> fock_recs, closed_recs;
    std::vector<ResolvedTruncation> used;
    for (double g : gammas) {
        if (want_fock) {
            used.push_back(resolve_lossless(policy, g));
            fock_recs.push_back(visibility_fock(g, policy));
        }
        if (want_closed) closed_recs.push_back(visibility_closed(g));
    }

    std::vector<std::string> config{
        "gamma: " + gamma_spec,
        "eta: 1",
        "nmax: " + o.nmax_spec + (o.nmax_spec == "auto" ? " (tail " + numg(policy.tail) + ")" : ""),
        "method: " + o.method,
        want_fock ? "truncation used: " + format_trunc_list(used)
                  : std::string("truncation used: none (closed form)"),
    };

    if (o.format == "svg") {
        const auto& recs = want_fock ? fock_recs : closed_recs;
        PlotSeries vg{"V_G", {}, {}}, vc{"V_C", {}, {}};
        for (const auto& r : recs) {
            vg.x.push_back(r.gamma);
            vg.y.push_back(r.v_g);
            vc.x.push_back(r.gamma);
            vc.y.push_back(r.v_c);
        }
        return write_output(o.out_path,
                            render_line_plot("two-detector visibilities", "gamma", "visibility",
                                             {vg, vc}));
    }

    std::string csv = metadata("visibility", config);
    csv += "gamma,G_alpha0,G_alphapi2,C_alpha0,C_alphapi2,V_G,V_C,method,status\n";
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (want_fock) csv += visibility_row(fock_recs[i], "fock");
        if (want_closed) csv += visibility_row(closed_recs[i], "closed");
    }
    return write_output(o.out_path, csv);
}

// ---- lossy -----------------------------------------------------------------

int cmd_lossy(const Options& o) {
    const std::string gamma_spec = o.gamma_spec.empty() ? "0.1:1.5:0.1" : o.gamma_spec;
    const std::string eta_spec = o.eta_spec.empty() ? "1,0.75,0.5,0.25,0.1" : o.eta_spec;
    const auto gammas = parse_gammas(gamma_spec);
    const auto etas = parse_etas(eta_spec);
    const TruncationPolicy policy = make_policy(o);
    const bool any_lossy = std::any_of(etas.begin(), etas.end(), [](double e) { return e < 1.0; });
    const bool any_perfect = std::any_of(etas.begin(), etas.end(), [](double e) { return e == 1.0; });

    constexpr double half_pi = std::numbers::pi / 2.0;
    std::vector<VisibilityRecord> rows;
    std::vector<ResolvedTruncation> used_lossless, used_lossy;
    for (double g : gammas) {
        SparseState at0, at_pi2;
        ResolvedTruncation rt{};
        if (any_lossy) {
            rt = resolve_lossy(policy, g);
            at0 = expand_output({g, 0.0, rt.n_max});
            at_pi2 = expand_output({g, half_pi, rt.n_max});
            used_lossy.push_back(rt);
        }
        if (any_perfect) used_lossless.push_back(resolve_lossless(policy, g));
        for (double e : etas) {
            // eta = 1 rows go through the lossless path with its own
            // truncation rule, so they reproduce the visibility command
            rows.push_back(e == 1.0 ? visibility_fock(g, policy)
                                    : visibility_eta_from_states(g, at0, at_pi2, {e, true}));
        }
    }

    std::vector<std::string> config{
        "gamma: " + gamma_spec,
        "eta: " + eta_spec,
        "nmax: " + o.nmax_spec +
            (o.nmax_spec == "auto"
                 ? " (lossy tail " + numg(policy.lossy_tail) + ", floor 8 below gamma 1)"
                 : ""),
    };
    if (any_perfect)
        config.push_back("truncation used (eta=1 rows): " + format_trunc_list(used_lossless));
    if (any_lossy)
        config.push_back("truncation used (eta<1 rows): " + format_trunc_list(used_lossy));

    if (o.format == "svg") {
        std::vector<PlotSeries> series;
        for (std::size_t ei = 0; ei < etas.size(); ++ei) {
            PlotSeries vc{"V_C eta=" + numg(etas[ei]), {}, {}};
            for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
                const auto& r = rows[gi * etas.size() + ei];
                vc.x.push_back(r.gamma);
                vc.y.push_back(r.v_c);
            }
            series.push_back(std::move(vc));
        }
        return write_output(o.out_path, render_line_plot("rate-correlator visibility under loss",
                                                         "gamma", "V_C", series));
    }

    std::string csv = metadata("lossy", config);
    csv += "gamma,eta,V_G_eta,V_C_eta,status\n";
    for (const auto& r : rows)
        csv += num17(r.gamma) + "," + num17(r.eta) + "," + num17(r.v_g) + "," + num17(r.v_c) +
               "," + to_string(r.status) + "\n";
    return write_output(o.out_path, csv);
}

// ---- dip -------------------------------------------------------------------

int cmd_dip(const Options& o) {
    const std::string gamma_spec = o.gamma_spec.empty() ? "0.5" : o.gamma_spec;
    const std::string alpha_spec = o.alpha_spec.empty() ? "0:90:5" : o.alpha_spec;
    const auto gammas = parse_gammas(gamma_spec);
    const auto alphas = parse_alphas_deg(alpha_spec);
    const TruncationPolicy policy = make_policy(o);

    struct DipRow {
        double gamma, alpha_deg, g, c;
    };
    std::vector<DipRow> rows;
    std::vector<ResolvedTruncation> used;
    for (double g : gammas) {
        const ResolvedTruncation rt = resolve_lossless(policy, g);
        used.push_back(rt);
        for (double a : alphas) {
            if (g == 0.0) {
                rows.push_back({g, a, 0.0, 0.0});
                continue;
            }
            const SparseState state = expand_output({g, a * kDegToRad, rt.n_max});
            const CorrelationPair pair = evaluate_correlations(state);
            rows.push_back({g, a, pair.g.value, pair.c});
        }
    }

    std::vector<std::string> config{
        "gamma: " + gamma_spec,
        "alpha: " + alpha_spec + " (degrees)",
        "nmax: " + o.nmax_spec + (o.nmax_spec == "auto" ? " (tail " + numg(policy.tail) + ")" : ""),
        "truncation used: " + format_trunc_list(used),
    };

    if (o.format == "svg") {
        std::vector<PlotSeries> series;
        for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
            PlotSeries sg{"G_Q gamma=" + numg(gammas[gi]), {}, {}};
            PlotSeries sc{"C_Q gamma=" + numg(gammas[gi]), {}, {}};
            for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
                const auto& r = rows[gi * alphas.size() + ai];
                sg.x.push_back(r.alpha_deg);
                sg.y.push_back(r.g);
                sc.x.push_back(r.alpha_deg);
                sc.y.push_back(r.c);
            }
            series.push_back(std::move(sg));
            series.push_back(std::move(sc));
        }
        return write_output(o.out_path, render_line_plot("correlators vs distinguishability",
                                                         "alpha (degrees)", "correlator", series));
    }

    std::string csv = metadata("dip", config);
    csv += "gamma,alpha_deg,G_Q,C_Q\n";
    for (const auto& r : rows)
        csv += num17(r.gamma) + "," + num17(r.alpha_deg) + "," + num17(r.g) + "," + num17(r.c) +
               "\n";
    return write_output(o.out_path, csv);
}

// ---- classical -------------------------------------------------------------

int cmd_classical(const Options& o) {
    if (o.format == "svg")
        throw InvalidArgumentError("classical emits scalar summaries; svg output is not defined");
    const std::uint64_t runs = o.runs;

    struct LawRow {
        IntensityLaw law;
        std::uint64_t seed_base;
    };
    const LawRow laws[] = {
        {IntensityLaw::fixed_equal, o.seed},
        {IntensityLaw::independent_exponential, o.seed + 2},
    };

    std::string csv = metadata("classical", {
                                                "runs: " + std::to_string(runs),
                                                "seed: " + std::to_string(o.seed),
                                                "overlap: 1 (dip) vs 0 (reference)",
                                                "truncation used: none (stochastic model)",
                                            });
    csv += "law,runs,seed,v_g,v_g_se,v_c,v_c_se,bound_pass\n";
    for (const auto& lr : laws) {
        ClassicalEnsemble dip{runs, 1.0, lr.law, lr.seed_base, 0.0};
        ClassicalEnsemble top{runs, 0.0, lr.law, lr.seed_base + 1, 0.0};
        const ClassicalVisibility v = classical_visibility(dip, top);
        const bool pass = v.v_g <= 0.5 + 3.0 * v.v_g_se && v.v_c <= 0.5 + 3.0 * v.v_c_se;
        csv += std::string(to_string(lr.law)) + "," + std::to_string(runs) + "," +
               std::to_string(o.seed) + "," + num17(v.v_g) + "," + num17(v.v_g_se) + "," +
               num17(v.v_c) + "," + num17(v.v_c_se) + "," + (pass ? "pass" : "fail") + "\n";
    }
    return write_output(o.out_path, csv);
}

// ---- validate --------------------------------------------------------------

struct CheckLine {
    bool pass;
    std::string text;
};

// A throwing check is a failed check, not a tool error; the report must
// still cover the remaining checks.
template <typename Fn>
CheckLine run_check(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {false, name + ": threw: " + e.what()};
    }
}

int cmd_validate(const Options& o) {
    const std::string gamma_spec =
        o.gamma_spec.empty() ? "0.1,0.25,0.5,0.75,1.0,1.25,1.5" : o.gamma_spec;
    const auto gammas = parse_gammas(gamma_spec);
    for (double g : gammas)
        if (g == 0.0)
            throw InvalidArgumentError("validate needs gamma > 0 (correlators vanish at 0)");
    const TruncationPolicy policy = make_policy(o);

    ExpandOptions expand_opts;
    if (o.perturb_convention) expand_opts.convention.mode2_relative_sign = 1.0;

    constexpr double half_pi = std::numbers::pi / 2.0;
    std::vector<CheckLine> checks;

    // truncated series against the analytic forms, both endpoints
    checks.push_back(run_check("closed-form agreement", [&]() -> CheckLine {
        constexpr double tol = 1e-8;
        double worst = 0.0;
        for (double g : gammas) {
            const ResolvedTruncation rt = resolve_lossless(policy, g);
            const CorrelationPair p0 =
                evaluate_correlations(expand_output({g, 0.0, rt.n_max}, expand_opts));
            const CorrelationPair ppi2 =
                evaluate_correlations(expand_output({g, half_pi, rt.n_max}, expand_opts));
            const ClosedFormSet cf = eval_closed(g);
            worst = std::max({worst, std::fabs(p0.g.value - cf.g0) / cf.g0,
                              std::fabs(p0.c - cf.c0) / cf.c0,
                              std::fabs(ppi2.g.value - cf.gpi2) / cf.gpi2,
                              std::fabs(ppi2.c - cf.cpi2) / cf.cpi2});
        }
        return {worst < tol, "closed-form agreement: max relative error " + numg(worst) +
                                 " (tolerance " + numg(tol) + ") over " +
                                 std::to_string(gammas.size()) + " gamma points"};
    }));

    // identity kernel must reproduce the lossless moments
    checks.push_back(run_check("eta=1 reduction", [&]() -> CheckLine {
        constexpr double tol = 1e-10;
        double worst = 0.0;
        for (double g : {0.25, 0.5, 1.0}) {
            for (double a : {0.0, half_pi}) {
                const SparseState s = expand_output({g, a, 8}, expand_opts);
                const LossyMoments m = lossy_moments(s, {1.0, true});
                worst = std::max({worst, std::fabs(m.g - g_q(s).numerator),
                                  std::fabs(m.c - c_q(s))});
            }
        }
        return {worst < tol, "eta=1 reduction: max deviation " + numg(worst) + " (tolerance " +
                                 numg(tol) + ")"};
    }));

    // marginal, four-mode, and direct index-sum loss routes
    checks.push_back(run_check("loss two-path agreement", [&]() -> CheckLine {
        constexpr double tol = 1e-10;
        const DetectionModel model{0.5, true};
        const SparseState s0 = expand_output({0.5, 0.0, 8}, expand_opts);
        const SparseState spi2 = expand_output({0.5, half_pi, 8}, expand_opts);
        const LossyMoments m0 = lossy_moments(s0, model);
        const LossyMoments f0 = lossy_moments_fourmode(s0, model);
        const LossyMoments d0 = lossy_direct_alpha0(0.5, model, 8);
        const LossyMoments mpi2 = lossy_moments(spi2, model);
        const LossyMoments fpi2 = lossy_moments_fourmode(spi2, model);
        const LossyMoments dpi2 = lossy_direct_alpha_pi2(0.5, model, 8);
        const double worst =
            std::max({std::fabs(m0.g - f0.g), std::fabs(m0.c - f0.c), std::fabs(m0.g - d0.g),
                      std::fabs(m0.c - d0.c), std::fabs(mpi2.g - fpi2.g),
                      std::fabs(mpi2.c - fpi2.c), std::fabs(mpi2.g - dpi2.g),
                      std::fabs(mpi2.c - dpi2.c)});
        return {worst < tol, "loss two-path agreement: max deviation " + numg(worst) +
                                 " (tolerance " + numg(tol) + ")"};
    }));

    // stochastic baseline stays at or below the one-half bound
    double fixed_law_sigma = 0.0;
    bool classical_ran = false;
    checks.push_back(run_check("classical bound", [&]() -> CheckLine {
        double worst_excess = -1.0;
        for (IntensityLaw law :
             {IntensityLaw::fixed_equal, IntensityLaw::independent_exponential}) {
            const std::uint64_t base = law == IntensityLaw::fixed_equal ? o.seed : o.seed + 2;
            ClassicalEnsemble dip{o.runs, 1.0, law, base, 0.0};
            ClassicalEnsemble top{o.runs, 0.0, law, base + 1, 0.0};
            const ClassicalVisibility v = classical_visibility(dip, top);
            worst_excess = std::max({worst_excess, v.v_g - (0.5 + 3.0 * v.v_g_se),
                                     v.v_c - (0.5 + 3.0 * v.v_c_se)});
            if (law == IntensityLaw::fixed_equal)
                fixed_law_sigma = std::max(std::fabs(v.v_g - 0.5) / v.v_g_se,
                                           std::fabs(v.v_c - 0.5) / v.v_c_se);
        }
        classical_ran = true;
        return {worst_excess <= 0.0,
                "classical bound: worst excess over 0.5+3*se is " + numg(worst_excess)};
    }));
    checks.push_back(classical_ran
                         ? CheckLine{fixed_law_sigma <= 3.0,
                                     "classical fixed-law dip depth: |v - 0.5| at most " +
                                         numg(fixed_law_sigma) + " standard errors (limit 3)"}
                         : CheckLine{false, "classical fixed-law dip depth: not evaluated"});

    bool all_pass = true;
    std::string report = "homrates " + std::string(kToolVersion) + " validation report\n";
    if (o.perturb_convention)
        report += "NOTE: splitter convention deliberately perturbed (test hook)\n";
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        report += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.text + "\n";
    }
    report += std::string("overall: ") + (all_pass ? "pass" : "FAIL") + "\n";

    const int io = write_output(o.out_path, report);
    if (io != 0) return io;
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    Options o;
    CLI::App app{"Correlator and visibility sweeps for bright squeezed vacuum on a balanced "
                 "beam splitter, with detector-loss modeling and a classical baseline"};
    app.set_config("--config", "", "Read any flag from a config file (CLI values win)");
    app.require_subcommand(1);

    auto add_grid = [&](CLI::App* cmd, const char* gamma_default) {
        cmd->add_option("--gamma", o.gamma_spec,
                        std::string("Gain grid: value, comma list, or start:stop:step (default ") +
                            gamma_default + ")");
        cmd->add_option("--nmax", o.nmax_spec, "Pair-number cutoff: integer or 'auto'");
        cmd->add_option("--tail", o.tail, "Tail tolerance for auto truncation");
        cmd->add_option("--out", o.out_path, "Output path (default stdout)");
    };

    CLI::App* vis = app.add_subcommand(
        "visibility", "Endpoint correlators and visibilities over a gain grid");
    add_grid(vis, "0.1:2.0:0.1");
    vis->add_option("--eta", o.eta_spec, "Accepted for symmetry; must be 1");
    vis->add_option("--method", o.method, "fock, closed, or both (default both)");
    vis->add_option("--format", o.format, "csv or svg (default csv)");

    CLI::App* lossy = app.add_subcommand(
        "lossy", "Visibilities under per-mode detector loss over a (gamma, eta) grid");
    add_grid(lossy, "0.1:1.5:0.1");
    lossy->add_option("--eta", o.eta_spec,
                      "Efficiency list in (0,1] (default 1,0.75,0.5,0.25,0.1)");
    lossy->add_option("--format", o.format, "csv or svg (default csv)");

    CLI::App* dip = app.add_subcommand(
        "dip", "Correlators across the distinguishability angle (dip shape)");
    add_grid(dip, "0.5");
    dip->add_option("--alpha", o.alpha_spec,
                    "Angle grid in degrees within [0, 90] (default 0:90:5)");
    dip->add_option("--format", o.format, "csv or svg (default csv)");

    CLI::App* classical = app.add_subcommand(
        "classical", "Monte Carlo bound check for the stochastic two-pulse model");
    classical->add_option("--runs", o.runs, "Samples per ensemble (default 1000000)");
    classical->add_option("--seed", o.seed, "RNG seed (default 12345)");
    classical->add_option("--out", o.out_path, "Output path (default stdout)");
    classical->add_option("--format", o.format, "csv only");

    CLI::App* validate = app.add_subcommand(
        "validate", "Cross-route oracle suite; nonzero exit on any failure");
    add_grid(validate, "0.1,0.25,0.5,0.75,1.0,1.25,1.5");
    validate->add_option("--runs", o.runs, "Monte Carlo samples for the bound check");
    validate->add_option("--seed", o.seed, "RNG seed for the bound check");
    validate->add_flag("--perturb-convention", o.perturb_convention, "")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (o.format != "csv" && o.format != "svg")
            throw InvalidArgumentError("--format: expected csv or svg");
        if (*vis) return cmd_visibility(o);
        if (*lossy) return cmd_lossy(o);
        if (*dip) return cmd_dip(o);
        if (*classical) return cmd_classical(o);
        if (*validate) return cmd_validate(o);
        std::cerr << "homrates: no command selected\n";
        return 2;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "homrates: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "homrates: request exceeds configured resource bounds: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "homrates: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "homrates: unexpected error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace homrates
