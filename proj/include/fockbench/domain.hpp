#pragma once

// Experiment data types: 7-point ratings, raw responses, and the eight
// membership weights of one exemplar.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fockbench {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A selection of responses that matched nothing.
class NoDataError : public Error {
public:
    using Error::Error;
};

// A single point of the 7-point scale, -3..+3. Out-of-range values are
// rejected, never clamped.
class Rating {
public:
    explicit Rating(int value);

    int value() const noexcept { return value_; }

    friend bool operator==(Rating, Rating) = default;

private:
    int value_;
};

// +1..+3 -> 1, -1..-3 -> 0, 0 -> 0.5
double rating_to_membership(Rating rating) noexcept;

// The four experiments e_AB, e_AB', e_A'B, e_A'B'. CSV spelling uses "n" for
// a negated concept: AB, ABn, AnB, AnBn.
enum class Experiment { AB, ABn, AnB, AnBn };

// X is the first concept of the experiment, Y the second, XY the conjunction.
enum class Target { First, Second, Conjunction };

std::string_view to_string(Experiment e) noexcept;
std::string_view to_string(Target t) noexcept;
std::optional<Experiment> parse_experiment(std::string_view s) noexcept;
std::optional<Target> parse_target(std::string_view s) noexcept;

inline constexpr std::array<Experiment, 4> kExperiments{
    Experiment::AB, Experiment::ABn, Experiment::AnB, Experiment::AnBn};
inline constexpr std::array<Target, 3> kTargets{
    Target::First, Target::Second, Target::Conjunction};

struct RawResponse {
    std::string subject_id;
    std::string pair_id;
    Experiment experiment;
    Target target;
    std::string exemplar_id;
    Rating rating;
};

// Conjunction order used throughout: A and B, A and B', A' and B, A' and B'.
enum class Conjunction { AB = 0, ABp = 1, ApB = 2, ApBp = 3 };

inline constexpr std::array<Conjunction, 4> kConjunctions{
    Conjunction::AB, Conjunction::ABp, Conjunction::ApB, Conjunction::ApBp};

std::string_view to_string(Conjunction c) noexcept;

struct MembershipRecord {
    std::string exemplar_id;
    std::string pair_id;
    double mu_A = 0.0;
    double mu_B = 0.0;
    double mu_Ap = 0.0;
    double mu_Bp = 0.0;
    double mu_AandB = 0.0;
    double mu_AandBp = 0.0;
    double mu_ApandB = 0.0;
    double mu_ApandBp = 0.0;

    // Weight of the first / second constituent and of the conjunction itself.
    double first(Conjunction c) const noexcept;
    double second(Conjunction c) const noexcept;
    double conjunction(Conjunction c) const noexcept;

    std::array<double, 8> weights() const noexcept;
    bool in_unit_range() const noexcept;
};

// Throws Error naming the offending field when a weight is outside [0,1] or
// not finite.
void require_unit_range(const MembershipRecord& record);

struct Dataset {
    std::string pair_label;
    std::vector<MembershipRecord> records;
};

// Mean membership indicator over every response matching the selection.
// Throws NoDataError when nothing matches.
double aggregate(std::span<const RawResponse> responses, std::string_view pair_id,
                 std::string_view exemplar_id, Experiment experiment, Target target);

// Which estimate of a single-concept weight goes into the canonical record.
// Each single concept is judged in two experiments.
enum class SingleSource {
    Canonical,  // mu_A from e_AB, mu_B from e_AB, mu_A' from e_A'B, mu_B' from e_AB'
    Pooled,     // mean over both experiments that judge the concept
};

// One record per (pair, exemplar), in order of first appearance. Requires the
// full 4 experiments x 3 targets grid; a missing cell raises NoDataError
// listing every missing (pair, exemplar, experiment, target). Duplicate
// (subject, pair, experiment, target, exemplar) keys raise Error.
Dataset build_dataset(std::span<const RawResponse> responses,
                      SingleSource source = SingleSource::Canonical);

// Both per-experiment estimates of each single-concept weight.
struct MarginalEstimates {
    std::string exemplar_id;
    std::string pair_id;
    double A_fromAB = 0.0, A_fromABn = 0.0;
    double B_fromAB = 0.0, B_fromAnB = 0.0;
    double Ap_fromAnB = 0.0, Ap_fromAnBn = 0.0;
    double Bp_fromABn = 0.0, Bp_fromAnBn = 0.0;

    // Largest absolute difference between the two estimates of any concept.
    double max_discrepancy() const noexcept;
};

std::vector<MarginalEstimates> marginal_estimates(std::span<const RawResponse> responses);

}  // namespace fockbench
