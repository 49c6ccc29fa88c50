#include "fockbench/classicality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace fockbench {

std::string_view to_string(Component c) noexcept {
    switch (c) {
        case Component::A: return "A";
        case Component::B: return "B";
        case Component::Ap: return "Ap";
        case Component::Bp: return "Bp";
        case Component::ABApBp: return "ABApBp";
    }
    return "?";
}

double DeviationVector::operator[](Component c) const noexcept {
    return as_array()[static_cast<std::size_t>(c)];
}

double DeviationVector::max_abs() const noexcept {
    double m = 0.0;
    for (double v : as_array()) m = std::max(m, std::abs(v));
    return m;
}

DeviationVector compute_deviations(const MembershipRecord& r) noexcept {
    DeviationVector d;
    d.I_A = r.mu_A - r.mu_AandB - r.mu_AandBp;
    d.I_B = r.mu_B - r.mu_AandB - r.mu_ApandB;
    d.I_Ap = r.mu_Ap - r.mu_ApandBp - r.mu_ApandB;
    d.I_Bp = r.mu_Bp - r.mu_ApandBp - r.mu_AandBp;
    d.I_ABApBp = 1.0 - r.mu_AandB - r.mu_AandBp - r.mu_ApandB - r.mu_ApandBp;
    return d;
}

ClassicalityVerdict is_classical(const MembershipRecord& record, double tol) {
    if (!(tol >= 0.0)) throw Error("tolerance must be non-negative");
    auto d = compute_deviations(record);
    return {d.max_abs() <= tol, d};
}

AtomMeasure construct_measure(const MembershipRecord& record, double tol) {
    auto verdict = is_classical(record, tol);
    if (!verdict.classical) {
        std::ostringstream os;
        os << "exemplar '" << record.exemplar_id
           << "' is not representable in a single classical probability space "
              "(max |I| = "
           << verdict.deviations.max_abs() << ")";
        throw NotRepresentableError(os.str(), verdict.deviations);
    }
    return {record.mu_AandB, record.mu_AandBp, record.mu_ApandB, record.mu_ApandBp};
}

namespace {

// Events of the 4-atom algebra as bitmasks over atoms
// bit0 = A&B, bit1 = A&B', bit2 = A'&B, bit3 = A'&B'.
using Event = std::uint8_t;
constexpr Event kSure = 0b1111;
constexpr Event kEventA = 0b0011;
constexpr Event kEventB = 0b0101;

constexpr Event complement(Event e) { return static_cast<Event>(kSure & ~e); }

double measure_of(Event e, const std::array<double, 4>& atoms) {
    double p = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (e & (1u << i)) p += atoms[static_cast<std::size_t>(i)];
    }
    return p;
}

}  // namespace

bool oracle_check(const MembershipRecord& r, double tol) {
    if (!(tol >= 0.0)) throw Error("tolerance must be non-negative");

    const Event A = kEventA;
    const Event B = kEventB;
    const Event Ap = complement(A);
    const Event Bp = complement(B);

    // Each atom is the meet of one event from {A, A'} with one from {B, B'},
    // so its mass is pinned by the corresponding conjunction weight.
    std::array<double, 4> atoms{};
    const std::array<std::pair<Event, double>, 4> meets{{
        {static_cast<Event>(A & B), r.mu_AandB},
        {static_cast<Event>(A & Bp), r.mu_AandBp},
        {static_cast<Event>(Ap & B), r.mu_ApandB},
        {static_cast<Event>(Ap & Bp), r.mu_ApandBp},
    }};
    for (const auto& [event, weight] : meets) {
        for (int i = 0; i < 4; ++i) {
            if (event == (1u << i)) atoms[static_cast<std::size_t>(i)] = weight;
        }
    }

    for (double a : atoms) {
        if (a < -tol) return false;
    }
    if (std::abs(measure_of(kSure, atoms) - 1.0) > tol) return false;

    const std::array<std::pair<Event, double>, 4> singles{{
        {A, r.mu_A}, {B, r.mu_B}, {Ap, r.mu_Ap}, {Bp, r.mu_Bp}}};
    for (const auto& [event, weight] : singles) {
        if (std::abs(measure_of(event, atoms) - weight) > tol) return false;
    }
    for (const auto& [event, weight] : meets) {
        if (std::abs(measure_of(event, atoms) - weight) > tol) return false;
    }
    return true;
}

}  // namespace fockbench
