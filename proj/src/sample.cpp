#include <random>
#include <string>

#include "fockbench/sampling.hpp"

namespace fockbench {

namespace {

// Probability of a "member" answer for each (experiment, target) cell.
using CellTable = std::array<std::array<double, 3>, 4>;

CellTable cells_from(const MembershipRecord& r, const std::array<double, 4>& conj) {
    CellTable t{};
    t[static_cast<std::size_t>(Experiment::AB)] = {r.mu_A, r.mu_B, conj[0]};
    t[static_cast<std::size_t>(Experiment::ABn)] = {r.mu_A, r.mu_Bp, conj[1]};
    t[static_cast<std::size_t>(Experiment::AnB)] = {r.mu_Ap, r.mu_B, conj[2]};
    t[static_cast<std::size_t>(Experiment::AnBn)] = {r.mu_Ap, r.mu_Bp, conj[3]};
    return t;
}

std::vector<RawResponse> draw(const MembershipRecord& record, const CellTable& cells,
                              int n_subjects, std::uint64_t seed) {
    if (n_subjects < 1) throw Error("n_subjects must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<RawResponse> out;
    out.reserve(static_cast<std::size_t>(n_subjects) * 12);
    const std::string pair = record.pair_id.empty() ? "pair" : record.pair_id;
    for (int s = 0; s < n_subjects; ++s) {
        const std::string subject = "s" + std::to_string(s + 1);
        for (auto e : kExperiments) {
            for (auto t : kTargets) {
                const double p =
                    cells[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
                // u < p is never true for p = 0 and always true for p = 1.
                const bool member = unit(rng) < p;
                out.push_back(RawResponse{subject, pair, e, t, record.exemplar_id,
                                          Rating(member ? 2 : -2)});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<RawResponse> sample_responses(const MembershipRecord& record, int n_subjects,
                                          std::uint64_t seed) {
    require_unit_range(record);
    return draw(record,
                cells_from(record, {record.mu_AandB, record.mu_AandBp, record.mu_ApandB,
                                    record.mu_ApandBp}),
                n_subjects, seed);
}

std::vector<RawResponse> sample_responses(const MembershipRecord& record, const FockFit& fit,
                                          int n_subjects, std::uint64_t seed) {
    require_unit_range(record);
    std::array<double, 4> conj{};
    for (auto k : kConjunctions) {
        const auto i = static_cast<std::size_t>(k);
        const ModelValue v = eval_fock(fit.params[i], record.first(k), record.second(k));
        if (!v.in_range) {
            throw Error("model probability " + std::to_string(v.value) + " for conjunction " +
                        std::string(to_string(k)) + " is outside [0,1]");
        }
        conj[i] = v.value;
    }
    return draw(record, cells_from(record, conj), n_subjects, seed);
}

}  // namespace fockbench
