#include "fockbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fockbench/special.hpp"

namespace fockbench {

namespace {

void require_at_least(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        std::ostringstream os;
        os << "insufficient data for " << what << ": need at least " << min << " values, got "
           << n;
        throw InsufficientDataError(os.str());
    }
}

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

Summary summarize_values(std::span<const double> values) {
    require_at_least(values.size(), 2, "summary");
    const double m = mean_of(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return {m, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

std::vector<double> component_values(std::span<const DeviationVector> deviations, Component c) {
    std::vector<double> out;
    out.reserve(deviations.size());
    for (const auto& d : deviations) out.push_back(d[c]);
    return out;
}

std::array<Summary, 5> summarize(std::span<const DeviationVector> deviations) {
    require_at_least(deviations.size(), 2, "summary");
    std::array<Summary, 5> out{};
    for (auto c : kComponents) {
        out[static_cast<std::size_t>(c)] = summarize_values(component_values(deviations, c));
    }
    return out;
}

RegressionResult sorted_regression(std::span<const double> values) {
    require_at_least(values.size(), 3, "regression");
    std::vector<double> y(values.begin(), values.end());
    std::sort(y.begin(), y.end());

    const double n = static_cast<double>(y.size());
    const double x_mean = (n + 1.0) / 2.0;
    const double y_mean = mean_of(y);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double dx = static_cast<double>(i + 1) - x_mean;
        const double dy = y[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    RegressionResult r;
    if (syy == 0.0) {
        r.intercept = y_mean;
        r.degenerate = true;
        return r;
    }
    r.slope = sxy / sxx;
    r.intercept = y_mean - r.slope * x_mean;
    r.r_squared = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);

    const double sse = std::max(0.0, syy - r.slope * sxy);
    const double se = std::sqrt(sse / (n - 2.0) / sxx);
    if (se == 0.0) {
        r.p_value_slope = r.slope == 0.0 ? 1.0 : 0.0;
    } else {
        r.p_value_slope = student_t_two_sided(r.slope / se, n - 2.0);
    }
    return r;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw Error("pearson: samples differ in length");
    require_at_least(xs.size(), 3, "correlation");
    const double mx = mean_of(xs);
    const double my = mean_of(ys);
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw Error("pearson: constant sample");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(std::span<const DeviationVector> deviations) {
    require_at_least(deviations.size(), 3, "correlation");
    std::array<std::vector<double>, 5> cols;
    for (auto c : kComponents) {
        auto& col = cols[static_cast<std::size_t>(c)];
        col = component_values(deviations, c);
        if (std::all_of(col.begin(), col.end(), [&](double v) { return v == col.front(); })) {
            throw UndefinedCorrelationError(
                "undefined correlation: component I_" + std::string(to_string(c)) +
                    " is constant",
                c);
        }
    }
    CorrelationMatrix m{};
    for (std::size_t i = 0; i < 5; ++i) {
        m[i][i] = 1.0;
        for (std::size_t j = i + 1; j < 5; ++j) {
            m[i][j] = m[j][i] = pearson(cols[i], cols[j]);
        }
    }
    return m;
}

double paired_ttest(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw Error("paired t-test: samples differ in length");
    require_at_least(xs.size(), 2, "paired t-test");
    std::vector<double> d(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) d[i] = xs[i] - ys[i];
    const Summary s = summarize_values(d);
    if (s.std == 0.0) {
        if (s.mean == 0.0) return 1.0;
        throw Error("paired t-test is degenerate: differences are constant and nonzero");
    }
    const double n = static_cast<double>(d.size());
    const double t = s.mean / (s.std / std::sqrt(n));
    return student_t_two_sided(t, n - 1.0);
}

double bonferroni(double p, int comparisons) {
    if (comparisons < 1) throw Error("bonferroni: need at least one comparison");
    return std::min(1.0, p * comparisons);
}

std::array<Bands, 5> interval_bands(std::span<const DeviationVector> deviations) {
    const auto summary = summarize(deviations);
    const double n = static_cast<double>(deviations.size());
    const double t_crit = student_t_quantile(0.975, n - 1.0);
    std::array<Bands, 5> out{};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& s = summary[i];
        const double half = t_crit * s.std / std::sqrt(n);
        out[i].band_1sigma = {s.mean - s.std, s.mean + s.std};
        out[i].ci95_mean = {s.mean - half, s.mean + half};
    }
    return out;
}

StatsReport build_stats_report(std::span<const DeviationVector> deviations) {
    require_at_least(deviations.size(), 3, "statistics report");
    StatsReport r;
    r.n = deviations.size();
    r.summary = summarize(deviations);
    r.bands = interval_bands(deviations);
    for (auto c : kComponents) {
        r.regression[static_cast<std::size_t>(c)] =
            sorted_regression(component_values(deviations, c));
    }
    r.correlations = correlation_matrix(deviations);
    const int comparisons = static_cast<int>(kPairedComparisons.size());
    for (const auto& [x, y] : kPairedComparisons) {
        PairedTest t{x, y, 1.0, 1.0};
        t.p = paired_ttest(component_values(deviations, x), component_values(deviations, y));
        t.p_bonferroni = bonferroni(t.p, comparisons);
        r.ttests.push_back(t);
    }
    return r;
}

}  // namespace fockbench
