#pragma once

// Statistical battery over deviation vectors: summaries, rank regression of
// sorted values, interval bands, paired t-tests and the correlation matrix.

#include <array>
#include <span>
#include <vector>

#include "fockbench/classicality.hpp"

namespace fockbench {

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class UndefinedCorrelationError : public Error {
public:
    UndefinedCorrelationError(const std::string& what, Component component)
        : Error(what), component_(component) {}
    Component component() const noexcept { return component_; }

private:
    Component component_;
};

struct Summary {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation, n - 1 denominator
};

Summary summarize_values(std::span<const double> values);
std::array<Summary, 5> summarize(std::span<const DeviationVector> deviations);

std::vector<double> component_values(std::span<const DeviationVector> deviations, Component c);

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double p_value_slope = 1.0;  // two-sided, n - 2 degrees of freedom
    bool degenerate = false;     // zero variance: slope 0, R^2 0, p 1
};

// Sorts ascending and regresses value on rank 1..n by ordinary least squares.
RegressionResult sorted_regression(std::span<const double> values);

using CorrelationMatrix = std::array<std::array<double, 5>, 5>;

double pearson(std::span<const double> xs, std::span<const double> ys);

// Throws UndefinedCorrelationError naming a constant component.
CorrelationMatrix correlation_matrix(std::span<const DeviationVector> deviations);

// Two-sided paired t-test. Zero variance of the differences gives p = 1 when
// the mean difference is 0 and throws otherwise.
double paired_ttest(std::span<const double> xs, std::span<const double> ys);

double bonferroni(double p, int comparisons);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct Bands {
    Interval band_1sigma;  // mean +/- std
    Interval ci95_mean;    // mean +/- t_{0.025, n-1} * std / sqrt(n)
};

std::array<Bands, 5> interval_bands(std::span<const DeviationVector> deviations);

struct PairedTest {
    Component x;
    Component y;
    double p = 1.0;
    double p_bonferroni = 1.0;
};

// The single-concept pairs compared in the battery, in report order.
inline constexpr std::array<std::pair<Component, Component>, 6> kPairedComparisons{{
    {Component::A, Component::B},
    {Component::Ap, Component::Bp},
    {Component::A, Component::Ap},
    {Component::A, Component::Bp},
    {Component::B, Component::Ap},
    {Component::B, Component::Bp},
}};

struct StatsReport {
    std::size_t n = 0;
    std::array<Summary, 5> summary{};
    std::array<Bands, 5> bands{};
    std::array<RegressionResult, 5> regression{};
    CorrelationMatrix correlations{};
    std::vector<PairedTest> ttests;
};

StatsReport build_stats_report(std::span<const DeviationVector> deviations);

}  // namespace fockbench
