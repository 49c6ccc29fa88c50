#include "fockbench/emergence.hpp"

namespace fockbench {

double sector1_interference(double mu_x, double mu_y, double mu_xy) noexcept {
    return mu_xy - 0.5 * (mu_x + mu_y);
}

EmergenceDecomposition decompose(const MembershipRecord& r) noexcept {
    EmergenceDecomposition d;
    for (auto k : kConjunctions) {
        d.int_XY[static_cast<std::size_t>(k)] =
            sector1_interference(r.first(k), r.second(k), r.conjunction(k));
    }
    d.int_single = {r.mu_A - 0.5, r.mu_B - 0.5, r.mu_Ap - 0.5, r.mu_Bp - 0.5};

    const auto& xy = d.int_XY;
    const auto& x = d.int_single;
    d.residual_A = 0.5 * (x[1] + x[3]) + xy[0] + xy[1];
    d.residual_B = 0.5 * (x[0] + x[2]) + xy[0] + xy[2];
    d.residual_Ap = 0.5 * (x[1] + x[3]) + xy[2] + xy[3];
    d.residual_Bp = 0.5 * (x[0] + x[2]) + xy[1] + xy[3];
    d.residual_total = (xy[0] + xy[1] + xy[2] + xy[3]) + (x[0] + x[1] + x[2] + x[3]);
    return d;
}

EmergencePrediction emergence_prediction(const DeviationVector& actual) noexcept {
    EmergencePrediction p;
    p.actual = actual;
    p.gap = {actual.I_A - p.predicted.I_A, actual.I_B - p.predicted.I_B,
             actual.I_Ap - p.predicted.I_Ap, actual.I_Bp - p.predicted.I_Bp,
             actual.I_ABApBp - p.predicted.I_ABApBp};
    return p;
}

EmergencePrediction emergence_prediction(const MembershipRecord& record) noexcept {
    return emergence_prediction(compute_deviations(record));
}

DeviationVector mean_gap(std::span<const DeviationVector> actual) {
    if (actual.empty()) throw Error("mean gap of an empty collection");
    std::array<double, 5> sum{};
    for (const auto& a : actual) {
        const auto g = emergence_prediction(a).gap.as_array();
        for (std::size_t i = 0; i < 5; ++i) sum[i] += g[i];
    }
    const double n = static_cast<double>(actual.size());
    return {sum[0] / n, sum[1] / n, sum[2] / n, sum[3] / n, sum[4] / n};
}

}  // namespace fockbench
