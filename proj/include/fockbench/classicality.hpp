#pragma once

// Classical (Kolmogorovian) representability of conjunction/negation data.
//
// Eight weights mu(A), mu(B), mu(A'), mu(B') and the four conjunctions admit
// a single probability space exactly when the five deviation functionals
//
//   I_A       = mu(A)  - mu(A and B)   - mu(A and B')
//   I_B       = mu(B)  - mu(A and B)   - mu(A' and B)
//   I_A'      = mu(A') - mu(A' and B') - mu(A' and B)
//   I_B'      = mu(B') - mu(A' and B') - mu(A and B')
//   I_ABA'B'  = 1 - (sum of the four conjunctions)
//
// all vanish.

#include <array>
#include <string_view>

#include "fockbench/domain.hpp"

namespace fockbench {

enum class Component { A = 0, B = 1, Ap = 2, Bp = 3, ABApBp = 4 };

inline constexpr std::array<Component, 5> kComponents{
    Component::A, Component::B, Component::Ap, Component::Bp, Component::ABApBp};

// Short names used in reports: A, B, Ap, Bp, ABApBp.
std::string_view to_string(Component c) noexcept;

struct DeviationVector {
    double I_A = 0.0;
    double I_B = 0.0;
    double I_Ap = 0.0;
    double I_Bp = 0.0;
    double I_ABApBp = 0.0;

    double operator[](Component c) const noexcept;
    std::array<double, 5> as_array() const noexcept {
        return {I_A, I_B, I_Ap, I_Bp, I_ABApBp};
    }
    double max_abs() const noexcept;
};

DeviationVector compute_deviations(const MembershipRecord& record) noexcept;

struct ClassicalityVerdict {
    bool classical = false;
    DeviationVector deviations;
};

// Classical iff every deviation component is within tol of zero.
ClassicalityVerdict is_classical(const MembershipRecord& record, double tol);

// Probabilities of the four atoms A&B, A&B', A'&B, A'&B'.
struct AtomMeasure {
    double p_AB = 0.0;
    double p_ABp = 0.0;
    double p_ApB = 0.0;
    double p_ApBp = 0.0;

    double total() const noexcept { return p_AB + p_ABp + p_ApB + p_ApBp; }
    double marginal_A() const noexcept { return p_AB + p_ABp; }
    double marginal_B() const noexcept { return p_AB + p_ApB; }
    double marginal_Ap() const noexcept { return p_ApB + p_ApBp; }
    double marginal_Bp() const noexcept { return p_ABp + p_ApBp; }
};

class NotRepresentableError : public Error {
public:
    NotRepresentableError(const std::string& what, DeviationVector deviations)
        : Error(what), deviations_(deviations) {}

    const DeviationVector& deviations() const noexcept { return deviations_; }

private:
    DeviationVector deviations_;
};

// The atom measure realizing a classical record. Throws NotRepresentableError
// when is_classical(record, tol) is false.
AtomMeasure construct_measure(const MembershipRecord& record, double tol);

// Independent check on the 4-atom Boolean algebra: the atoms must carry the
// conjunction weights, so the only candidate measure is fixed; the events
// A, B, A', B' and their pairwise meets are then built as atom sets and every
// weight is compared with the measure of its event.
bool oracle_check(const MembershipRecord& record, double tol);

}  // namespace fockbench
