#pragma once

// Two-sector Fock space model of a conjunction "X and Y":
//
//   mu(X and Y) = m2 * alpha + (1 - m2) * ( (mu(X) + mu(Y)) / 2 + beta * cos(phi) )
//
// Sector 2 (weight m2) contributes alpha = <C|M_X (x) M_Y|C>; sector 1
// contributes the superposition term with interference beta * cos(phi)
// standing for Re<X|M|Y>.

#include <array>
#include <cstdint>
#include <string>

#include "fockbench/domain.hpp"

namespace fockbench {

struct ConjunctionParams {
    double m2 = 0.0;       // sector-2 weight, in [0,1]
    double alpha = 0.0;    // in [0,1]
    double beta = 0.0;     // in [-1,1]
    double phi_deg = 0.0;  // in [0,180]

    bool within_bounds() const noexcept;
};

// A model probability together with an out-of-range flag. Values outside
// [0,1] are reported as computed.
struct ModelValue {
    double value = 0.0;
    bool in_range = true;
};

ModelValue eval_sector1(double mu_x, double mu_y, double beta, double phi_deg) noexcept;
ModelValue eval_fock(const ConjunctionParams& params, double mu_x, double mu_y) noexcept;

class InfeasibleInterferenceError : public Error {
public:
    InfeasibleInterferenceError(const std::string& what, double quotient)
        : Error(what), quotient_(quotient) {}
    double quotient() const noexcept { return quotient_; }

private:
    double quotient_;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

// Angle in degrees reproducing mu_xy given the other parameters. Throws
// DegenerateError when m2 == 1 or beta == 0 and InfeasibleInterferenceError
// when the arccos argument leaves [-1,1].
double solve_phi(double mu_xy, double mu_x, double mu_y, double m2, double alpha, double beta);

// The four interference values Re<X|M|Y> in conjunction order, viewed as the
// 2x2 matrix with rows {A, A'} and columns {B, B'}.
using InterferenceMatrix = std::array<double, 4>;

// Largest s in [0,1] such that s * c is realizable by orthonormal A, B, A', B'
// with the record's single weights (see realization.hpp for the
// construction). c is realizable iff the returned value is 1.
double realizable_scale(const MembershipRecord& record, const InterferenceMatrix& c) noexcept;

struct FitConfig {
    double fit_tol = 5e-3;
    int budget = 10000;  // objective evaluations per exemplar
    std::uint64_t seed = 0;
};

struct FockFit {
    std::array<ConjunctionParams, 4> params{};
    std::array<double, 4> residuals{};  // model - data, conjunction order
    bool feasible = false;

    const ConjunctionParams& operator[](Conjunction c) const noexcept {
        return params[static_cast<std::size_t>(c)];
    }
    double max_abs_residual() const noexcept;
    double alpha_sum() const noexcept;
    double m2_sum() const noexcept;
    InterferenceMatrix interference() const noexcept;
};

class NoFockRepresentationError : public Error {
public:
    NoFockRepresentationError(const std::string& what, FockFit best)
        : Error(what), best_(best) {}
    const FockFit& best() const noexcept { return best_; }

private:
    FockFit best_;
};

// Model value of each conjunction for a parameter set, with residuals
// against the record.
FockFit evaluate_fit(const MembershipRecord& record,
                     const std::array<ConjunctionParams, 4>& params, double fit_tol);

// Fits the four conjunctions of one exemplar. Objectives, lexicographically:
// the largest |residual|, then the total sector-2 weight, then total |beta|.
// Interference values are restricted to those realize_vectors can build, and
// sum(alpha) == 1. Deterministic for a given config.
//
// Throws NoFockRepresentationError (carrying the best parameters found) when
// the largest residual stays above config.fit_tol.
FockFit fit_exemplar(const MembershipRecord& record, const FitConfig& config = {});

}  // namespace fockbench
