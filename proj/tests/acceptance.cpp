// Acceptance gate. Each criterion prints its measurements followed by one
// [PASS] or [FAIL] line; the exit status is nonzero on failure.
//
//   acceptance <criterion>   run one criterion
//   acceptance               run all of them

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "fockbench/bundled.hpp"
#include "fockbench/commands.hpp"
#include "fockbench/emergence.hpp"
#include "fockbench/report.hpp"
#include "fockbench/sampling.hpp"
#include "support.hpp"

using namespace fockbench;

namespace {

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    // Records |got - want| <= tol.
    void near(const std::string& what, double got, double want, double tol) {
        const bool ok = std::abs(got - want) <= tol;
        std::printf("  %-44s got %-12.6g want %-10.6g +/- %-8.3g %s\n", what.c_str(), got, want,
                    tol, ok ? "ok" : "MISS");
        ok_ = ok_ && ok;
    }

    void within(const std::string& what, double got, double lo, double hi) {
        const bool ok = got >= lo && got <= hi;
        std::printf("  %-44s got %-12.6g want [%g, %g] %s\n", what.c_str(), got, lo, hi,
                    ok ? "ok" : "MISS");
        ok_ = ok_ && ok;
    }

    void below(const std::string& what, double got, double bound) {
        const bool ok = got < bound;
        std::printf("  %-44s got %-12.6g want < %g %s\n", what.c_str(), got, bound,
                    ok ? "ok" : "MISS");
        ok_ = ok_ && ok;
    }

    void at_most(const std::string& what, double got, double bound) {
        const bool ok = got <= bound;
        std::printf("  %-44s got %-12.6g want <= %g %s\n", what.c_str(), got, bound,
                    ok ? "ok" : "MISS");
        ok_ = ok_ && ok;
    }

    void at_least(const std::string& what, double got, double bound) {
        const bool ok = got >= bound;
        std::printf("  %-44s got %-12.6g want >= %g %s\n", what.c_str(), got, bound,
                    ok ? "ok" : "MISS");
        ok_ = ok_ && ok;
    }

    bool finish() const {
        std::printf("[%s] %s\n", ok_ ? "PASS" : "FAIL", name_.c_str());
        std::fflush(stdout);
        return ok_;
    }

private:
    std::string name_;
    bool ok_ = true;
};

std::string label(Component c) { return "I_" + std::string(to_string(c)); }

// The statistics report exactly as the stats command produces it for the
// bundled tables.
StatsReport bundled_report() {
    RunConfig config;
    const auto result = cmd_stats(config);
    if (result.exit_code != kExitOk) throw Error("stats command failed: " + result.diagnostics);
    return Json::parse(result.output).at("stats").get<StatsReport>();
}

bool summary_statistics() {
    Criterion c("summary statistics of the bundled tables");
    const auto r = bundled_report();
    const std::map<Component, std::pair<double, double>> want{
        {Component::A, {-0.42, 0.09}},   {Component::B, {-0.43, 0.075}},
        {Component::Ap, {-0.35, 0.09}},  {Component::Bp, {-0.33, 0.09}},
        {Component::ABApBp, {-0.81, 0.13}}};
    for (const auto& [comp, mv] : want) {
        const auto& s = r.summary[static_cast<std::size_t>(comp)];
        c.near("mean " + label(comp), s.mean, mv.first, 0.015);
        c.near("std " + label(comp), s.std, mv.second, 0.02);
    }
    return c.finish();
}

bool correlation_matrix_check() {
    Criterion c("correlation matrix of the bundled tables");
    const auto r = bundled_report();
    const double table[5][5] = {{1, 0.45, -0.03, 0.33, 0.61},
                                {0.45, 1, 0.41, -0.07, 0.63},
                                {-0.03, 0.41, 1, 0.48, 0.71},
                                {0.33, -0.07, 0.48, 1, 0.61},
                                {0.61, 0.63, 0.71, 0.61, 1}};
    for (auto a : kComponents)
        for (auto b : kComponents) {
            const auto i = static_cast<std::size_t>(a), j = static_cast<std::size_t>(b);
            if (j <= i) continue;
            c.near("corr(" + label(a) + ", " + label(b) + ")", r.correlations[i][j], table[i][j],
                   0.02);
        }
    return c.finish();
}

bool sorted_regression_check() {
    Criterion c("sorted regression of the bundled tables");
    const auto r = bundled_report();
    const std::map<Component, std::pair<double, double>> want{
        {Component::A, {3.0e-3, 0.94}},  {Component::B, {2.9e-3, 0.93}},
        {Component::Ap, {2.6e-3, 0.96}}, {Component::Bp, {3.1e-3, 0.98}},
        {Component::ABApBp, {4e-3, 0.92}}};
    for (const auto& [comp, sr] : want) {
        const auto& g = r.regression[static_cast<std::size_t>(comp)];
        c.near("slope " + label(comp), g.slope, sr.first, 5e-4);
        c.near("R^2 " + label(comp), g.r_squared, sr.second, 0.02);
    }
    return c.finish();
}

bool paired_ttests() {
    Criterion c("paired t-tests on the bundled tables");
    const auto r = bundled_report();
    auto p_of = [&](Component x, Component y) {
        for (const auto& t : r.ttests)
            if (t.x == x && t.y == y) return t.p;
        throw Error("missing t-test");
    };
    c.within("p(I_A, I_B)", p_of(Component::A, Component::B), 0.75, 0.95);
    c.within("p(I_Ap, I_Bp)", p_of(Component::Ap, Component::Bp), 0.03, 0.15);
    c.below("p(I_A, I_Ap)", p_of(Component::A, Component::Ap), 1e-6);
    c.below("p(I_A, I_Bp)", p_of(Component::A, Component::Bp), 1e-6);
    c.below("p(I_B, I_Ap)", p_of(Component::B, Component::Ap), 1e-6);
    c.below("p(I_B, I_Bp)", p_of(Component::B, Component::Bp), 1e-6);
    return c.finish();
}

bool forward_model() {
    Criterion c("forward Fock model at published parameters");
    c.near("Olive, A and B", eval_fock({0.18, 0.19, 0.31, 57.31}, 0.53, 0.63).value, 0.65, 0.01);
    c.near("Prize Bull, A and B'", eval_fock({0.17, 0.07, 0.16, 40.23}, 0.13, 0.26).value, 0.28,
           0.01);
    c.near("Door Bell, A' and B", eval_fock({0.42, 0.21, 0.27, 67.37}, 0.32, 0.33).value, 0.34,
           0.01);
    return c.finish();
}

bool sigma_bands() {
    Criterion c("one-sigma bands of I_A and I_B");
    const auto r = bundled_report();
    const auto& a = r.bands[static_cast<std::size_t>(Component::A)].band_1sigma;
    const auto& b = r.bands[static_cast<std::size_t>(Component::B)].band_1sigma;
    c.near("I_A lower", a.lo, -0.51, 0.03);
    c.near("I_A upper", a.hi, -0.33, 0.03);
    c.near("I_B lower", b.lo, -0.52, 0.03);
    c.near("I_B upper", b.hi, -0.34, 0.03);
    return c.finish();
}

bool property_suites() {
    Criterion c("property suites");
    std::mt19937_64 rng(20240607);

    // (a) classicality verdict against the Boolean-algebra oracle
    {
        int agree = 0, total = 0, classical = 0;
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 600; ++i) {
            MembershipRecord r;
            double tol = 1e-9;
            switch (i % 3) {
                case 0:
                    r = fbtest::random_record(rng);
                    break;
                case 1:
                    r = fbtest::record_from_atoms(fbtest::random_atoms(rng));
                    break;
                default: {
                    // classical data nudged by up to twice the tolerance
                    tol = 1e-3;
                    r = fbtest::record_from_atoms(fbtest::random_atoms(rng));
                    auto w = r.weights();
                    w[static_cast<std::size_t>(i % 8)] += (u(rng) * 4.0 - 2.0) * tol;
                    w[static_cast<std::size_t>(i % 8)] =
                        std::clamp(w[static_cast<std::size_t>(i % 8)], 0.0, 1.0);
                    r = fbtest::make_record(w);
                }
            }
            const bool v = is_classical(r, tol).classical;
            classical += v;
            agree += v == oracle_check(r, tol);
            ++total;
        }
        std::printf("  (a) %d of %d records classical\n", classical, total);
        c.at_least("(a) records checked", total, 500);
        c.near("(a) disagreements with the oracle", total - agree, 0, 0);
    }

    // (b) fit round trip, (c) realization of the fitted records
    {
        const int trials = 200;
        int fitted = 0;
        int realized = 0;
        double worst_orth = 0.0, worst_prob = 0.0, worst_alpha = 0.0;
        for (int i = 0; i < trials; ++i) {
            const auto sample = fbtest::random_model_record(rng);
            const auto& r = sample.record;
            FockFit fit;
            try {
                fit = fit_exemplar(r);
            } catch (const NoFockRepresentationError&) {
                continue;
            }
            if (fit.max_abs_residual() > 5e-3) continue;
            ++fitted;

            HilbertRealization real;
            try {
                real = realize_vectors(r, fit);
            } catch (const NoRealizationError&) {
                continue;
            }
            ++realized;
            const auto d = fbtest::dense_check(real);
            const std::array<double, 4> mu{r.mu_A, r.mu_B, r.mu_Ap, r.mu_Bp};
            const std::array<std::pair<int, int>, 4> pairs{{{0, 1}, {0, 3}, {2, 1}, {2, 3}}};
            worst_orth = std::max(worst_orth, d.orthonormality);
            double alpha_sum = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const auto& p = fit.params[k];
                const auto [x, y] = pairs[k];
                worst_prob = std::max(worst_prob, std::abs(d.membership[k] - mu[k]));
                worst_prob = std::max(
                    worst_prob,
                    std::abs(d.interf[k] - p.beta * std::cos(p.phi_deg * M_PI / 180.0)));
                worst_prob = std::max(worst_prob, std::abs(d.sector2[k] - p.alpha));
                const double rebuilt =
                    p.m2 * d.sector2[k] +
                    (1 - p.m2) * (0.5 * (d.membership[static_cast<std::size_t>(x)] +
                                         d.membership[static_cast<std::size_t>(y)]) +
                                  d.interf[k]);
                worst_prob = std::max(
                    worst_prob,
                    std::abs(rebuilt - eval_fock(p, mu[static_cast<std::size_t>(x)],
                                                 mu[static_cast<std::size_t>(y)])
                                           .value));
                alpha_sum += d.sector2[k];
            }
            worst_alpha = std::max(worst_alpha, std::abs(alpha_sum - 1.0));
        }
        c.at_least("(b) fraction fitted within 5e-3", static_cast<double>(fitted) / trials, 0.99);
        c.at_least("(c) fitted records realized", realized, 100);
        c.at_most("(c) orthonormality", worst_orth, 1e-10);
        c.at_most("(c) probability reproduction", worst_prob, 1e-8);
        c.at_most("(c) sector-2 weight sum", worst_alpha, 1e-10);
    }

    // (d) emergence identities
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto r = fbtest::random_record(rng);
            const auto d = decompose(r);
            const auto I = compute_deviations(r);
            for (double v : {d.residual_A + I.I_A + 0.5, d.residual_B + I.I_B + 0.5,
                             d.residual_Ap + I.I_Ap + 0.5, d.residual_Bp + I.I_Bp + 0.5,
                             d.residual_total + I.I_ABApBp + 1.0}) {
                worst = std::max(worst, std::abs(v));
            }
        }
        c.at_most("(d) emergence identity residual", worst, 1e-12);
    }

    // (e) sampling consistency
    {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            auto r = fbtest::random_record(rng);
            r.pair_id = "P/Q";
            const auto responses = sample_responses(r, 100000, 1000 + i);
            const auto back = build_dataset(responses).records.at(0);
            const auto w = r.weights();
            const auto b = back.weights();
            for (std::size_t k = 0; k < 8; ++k) worst = std::max(worst, std::abs(w[k] - b[k]));
        }
        c.at_most("(e) sampled weight error", worst, 0.01);
    }
    return c.finish();
}

const std::map<std::string, std::function<bool()>> kCriteria{
    {"summary_statistics", summary_statistics},
    {"correlation_matrix", correlation_matrix_check},
    {"sorted_regression", sorted_regression_check},
    {"paired_ttests", paired_ttests},
    {"forward_model", forward_model},
    {"sigma_bands", sigma_bands},
    {"property_suites", property_suites},
};

const char* const kOrder[] = {"summary_statistics", "correlation_matrix", "sorted_regression",
                              "paired_ttests",      "forward_model",      "sigma_bands",
                              "property_suites"};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::fprintf(stderr, "usage: acceptance [criterion]\n");
        return 2;
    }
    if (argc == 2) {
        const auto it = kCriteria.find(argv[1]);
        if (it == kCriteria.end()) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[1]);
            return 2;
        }
        return it->second() ? 0 : 1;
    }
    int failed = 0;
    for (const char* name : kOrder) failed += !kCriteria.at(name)();
    return failed == 0 ? 0 : 1;
}
