#pragma once

// Emergence-only reading of the deviation functionals.
//
// If every conjunction were judged purely in sector 1, its weight would be
// (mu(X) + mu(Y)) / 2 + I_XY with interference I_XY = Re<X|M|Y>. Writing
// I_X = mu(X) - 1/2 for single concepts, the deviation functionals expand to
//
//   I_A      = -1/2 - [ (I_B + I_B') / 2 + I_AB + I_AB' ]
//   I_ABA'B' = -1   - [ sum_XY I_XY + sum_X I_X ]
//
// so with the bracketed terms offsetting each other the prediction is
// (-1/2, -1/2, -1/2, -1/2, -1). The interference terms here are computed from
// data, not from a fitted model.

#include <array>
#include <span>

#include "fockbench/classicality.hpp"
#include "fockbench/domain.hpp"

namespace fockbench {

// mu(X and Y) - (mu(X) + mu(Y)) / 2
double sector1_interference(double mu_x, double mu_y, double mu_xy) noexcept;

struct EmergenceDecomposition {
    std::array<double, 4> int_XY{};      // conjunction order AB, AB', A'B, A'B'
    std::array<double, 4> int_single{};  // A, B, A', B'
    double residual_A = 0.0;             // the bracket in the I_A expansion
    double residual_B = 0.0;
    double residual_Ap = 0.0;
    double residual_Bp = 0.0;
    double residual_total = 0.0;
};

EmergenceDecomposition decompose(const MembershipRecord& record) noexcept;

inline constexpr DeviationVector kEmergencePrediction{-0.5, -0.5, -0.5, -0.5, -1.0};

struct EmergencePrediction {
    DeviationVector predicted = kEmergencePrediction;
    DeviationVector actual;
    DeviationVector gap;  // actual - predicted
};

EmergencePrediction emergence_prediction(const MembershipRecord& record) noexcept;

// Same comparison for deviation values that come without their weights.
EmergencePrediction emergence_prediction(const DeviationVector& actual) noexcept;

// Component-wise mean of the gaps.
DeviationVector mean_gap(std::span<const DeviationVector> actual);

}  // namespace fockbench
