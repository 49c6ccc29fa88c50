#pragma once

// Synthetic subjects for pipeline validation: every subject answers every
// cell of the 4 x 3 grid with an independent membership draw, reported as
// +2 (member) or -2 (non-member).

#include <cstdint>
#include <vector>

#include "fockbench/domain.hpp"
#include "fockbench/fockmodel.hpp"

namespace fockbench {

// Cell probabilities taken directly from the record.
std::vector<RawResponse> sample_responses(const MembershipRecord& record, int n_subjects,
                                          std::uint64_t seed);

// Conjunction cells drawn from the fitted model instead of the record's own
// conjunction weights; single-concept cells still come from the record.
// Throws Error if a model probability falls outside [0,1].
std::vector<RawResponse> sample_responses(const MembershipRecord& record, const FockFit& fit,
                                          int n_subjects, std::uint64_t seed);

}  // namespace fockbench
