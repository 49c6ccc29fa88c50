#include "fockbench/domain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace fockbench {

Rating::Rating(int value) : value_(value) {
    if (value < -3 || value > 3) {
        throw Error("rating " + std::to_string(value) + " is outside the 7-point scale -3..+3");
    }
}

double rating_to_membership(Rating rating) noexcept {
    if (rating.value() > 0) return 1.0;
    if (rating.value() < 0) return 0.0;
    return 0.5;
}

std::string_view to_string(Experiment e) noexcept {
    switch (e) {
        case Experiment::AB: return "AB";
        case Experiment::ABn: return "ABn";
        case Experiment::AnB: return "AnB";
        case Experiment::AnBn: return "AnBn";
    }
    return "?";
}

std::string_view to_string(Target t) noexcept {
    switch (t) {
        case Target::First: return "X";
        case Target::Second: return "Y";
        case Target::Conjunction: return "XY";
    }
    return "?";
}

std::string_view to_string(Conjunction c) noexcept {
    switch (c) {
        case Conjunction::AB: return "AB";
        case Conjunction::ABp: return "ABp";
        case Conjunction::ApB: return "ApB";
        case Conjunction::ApBp: return "ApBp";
    }
    return "?";
}

std::optional<Experiment> parse_experiment(std::string_view s) noexcept {
    for (auto e : kExperiments) {
        if (to_string(e) == s) return e;
    }
    return std::nullopt;
}

std::optional<Target> parse_target(std::string_view s) noexcept {
    for (auto t : kTargets) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

double MembershipRecord::first(Conjunction c) const noexcept {
    return (c == Conjunction::AB || c == Conjunction::ABp) ? mu_A : mu_Ap;
}

double MembershipRecord::second(Conjunction c) const noexcept {
    return (c == Conjunction::AB || c == Conjunction::ApB) ? mu_B : mu_Bp;
}

double MembershipRecord::conjunction(Conjunction c) const noexcept {
    switch (c) {
        case Conjunction::AB: return mu_AandB;
        case Conjunction::ABp: return mu_AandBp;
        case Conjunction::ApB: return mu_ApandB;
        case Conjunction::ApBp: return mu_ApandBp;
    }
    return 0.0;
}

std::array<double, 8> MembershipRecord::weights() const noexcept {
    return {mu_A, mu_B, mu_Ap, mu_Bp, mu_AandB, mu_AandBp, mu_ApandB, mu_ApandBp};
}

bool MembershipRecord::in_unit_range() const noexcept {
    auto w = weights();
    return std::all_of(w.begin(), w.end(),
                       [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; });
}

void require_unit_range(const MembershipRecord& record) {
    static constexpr std::array<const char*, 8> names{
        "muA", "muB", "muAp", "muBp", "muAB", "muABp", "muApB", "muApBp"};
    auto w = record.weights();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] < 0.0 || w[i] > 1.0) {
            std::ostringstream os;
            os << "exemplar '" << record.exemplar_id << "': " << names[i] << " = " << w[i]
               << " is outside [0,1]";
            throw Error(os.str());
        }
    }
}

double aggregate(std::span<const RawResponse> responses, std::string_view pair_id,
                 std::string_view exemplar_id, Experiment experiment, Target target) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : responses) {
        if (r.experiment == experiment && r.target == target && r.pair_id == pair_id &&
            r.exemplar_id == exemplar_id) {
            sum += rating_to_membership(r.rating);
            ++count;
        }
    }
    if (count == 0) {
        std::ostringstream os;
        os << "no data for pair '" << pair_id << "', exemplar '" << exemplar_id
           << "', experiment " << to_string(experiment) << ", target " << to_string(target);
        throw NoDataError(os.str());
    }
    return sum / static_cast<double>(count);
}

namespace {

struct CellTotals {
    double sum = 0.0;
    std::size_t count = 0;
};

// Per (pair, exemplar): a 4 x 3 grid of indicator totals.
struct ExemplarGrid {
    std::string pair_id;
    std::string exemplar_id;
    std::array<std::array<CellTotals, 3>, 4> cells{};

    double mean(Experiment e, Target t) const {
        const auto& c = cells[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
        return c.sum / static_cast<double>(c.count);
    }
};

std::vector<ExemplarGrid> collect_grids(std::span<const RawResponse> responses) {
    std::vector<ExemplarGrid> grids;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    std::set<std::tuple<std::string, std::string, int, int, std::string>> seen;

    for (const auto& r : responses) {
        auto key = std::make_tuple(r.subject_id, r.pair_id, static_cast<int>(r.experiment),
                                   static_cast<int>(r.target), r.exemplar_id);
        if (!seen.insert(std::move(key)).second) {
            std::ostringstream os;
            os << "duplicate response: subject '" << r.subject_id << "', pair '" << r.pair_id
               << "', experiment " << to_string(r.experiment) << ", target "
               << to_string(r.target) << ", exemplar '" << r.exemplar_id << "'";
            throw Error(os.str());
        }
        auto [it, inserted] = index.try_emplace({r.pair_id, r.exemplar_id}, grids.size());
        if (inserted) {
            grids.push_back(ExemplarGrid{r.pair_id, r.exemplar_id, {}});
        }
        auto& cell = grids[it->second].cells[static_cast<std::size_t>(r.experiment)]
                                             [static_cast<std::size_t>(r.target)];
        cell.sum += rating_to_membership(r.rating);
        ++cell.count;
    }

    std::ostringstream missing;
    bool any_missing = false;
    for (const auto& g : grids) {
        for (auto e : kExperiments) {
            for (auto t : kTargets) {
                if (g.cells[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)].count == 0) {
                    missing << (any_missing ? "; " : "") << "(" << g.pair_id << ", "
                            << g.exemplar_id << ", " << to_string(e) << ", " << to_string(t)
                            << ")";
                    any_missing = true;
                }
            }
        }
    }
    if (any_missing) {
        throw NoDataError("no data for cells: " + missing.str());
    }
    return grids;
}

}  // namespace

Dataset build_dataset(std::span<const RawResponse> responses, SingleSource source) {
    if (responses.empty()) {
        throw NoDataError("no responses");
    }
    const auto grids = collect_grids(responses);

    Dataset out;
    std::vector<std::string> pairs;
    for (const auto& g : grids) {
        if (std::find(pairs.begin(), pairs.end(), g.pair_id) == pairs.end()) {
            pairs.push_back(g.pair_id);
        }
        MembershipRecord r;
        r.exemplar_id = g.exemplar_id;
        r.pair_id = g.pair_id;
        using E = Experiment;
        using T = Target;
        if (source == SingleSource::Canonical) {
            r.mu_A = g.mean(E::AB, T::First);
            r.mu_B = g.mean(E::AB, T::Second);
            r.mu_Ap = g.mean(E::AnB, T::First);
            r.mu_Bp = g.mean(E::ABn, T::Second);
        } else {
            r.mu_A = 0.5 * (g.mean(E::AB, T::First) + g.mean(E::ABn, T::First));
            r.mu_B = 0.5 * (g.mean(E::AB, T::Second) + g.mean(E::AnB, T::Second));
            r.mu_Ap = 0.5 * (g.mean(E::AnB, T::First) + g.mean(E::AnBn, T::First));
            r.mu_Bp = 0.5 * (g.mean(E::ABn, T::Second) + g.mean(E::AnBn, T::Second));
        }
        r.mu_AandB = g.mean(E::AB, T::Conjunction);
        r.mu_AandBp = g.mean(E::ABn, T::Conjunction);
        r.mu_ApandB = g.mean(E::AnB, T::Conjunction);
        r.mu_ApandBp = g.mean(E::AnBn, T::Conjunction);
        out.records.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out.pair_label += (i ? "|" : "") + pairs[i];
    }
    return out;
}

double MarginalEstimates::max_discrepancy() const noexcept {
    return std::max({std::abs(A_fromAB - A_fromABn), std::abs(B_fromAB - B_fromAnB),
                     std::abs(Ap_fromAnB - Ap_fromAnBn), std::abs(Bp_fromABn - Bp_fromAnBn)});
}

std::vector<MarginalEstimates> marginal_estimates(std::span<const RawResponse> responses) {
    std::vector<MarginalEstimates> out;
    using E = Experiment;
    using T = Target;
    for (const auto& g : collect_grids(responses)) {
        MarginalEstimates m;
        m.exemplar_id = g.exemplar_id;
        m.pair_id = g.pair_id;
        m.A_fromAB = g.mean(E::AB, T::First);
        m.A_fromABn = g.mean(E::ABn, T::First);
        m.B_fromAB = g.mean(E::AB, T::Second);
        m.B_fromAnB = g.mean(E::AnB, T::Second);
        m.Ap_fromAnB = g.mean(E::AnB, T::First);
        m.Ap_fromAnBn = g.mean(E::AnBn, T::First);
        m.Bp_fromABn = g.mean(E::ABn, T::Second);
        m.Bp_fromAnBn = g.mean(E::AnBn, T::Second);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace fockbench
