#pragma once

// Per-exemplar deviation values for four concept pairs, 24 exemplars each,
// compiled into the library.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fockbench/csv.hpp"

namespace fockbench {

struct BundledRow {
    std::string_view pair;
    std::string_view exemplar;
    std::array<double, 5> values;  // I_A, I_B, I_A', I_B', I_ABA'B'
};

std::span<const BundledRow> bundled_rows() noexcept;

// All 96 rows in table order.
std::vector<LabeledDeviation> load_bundled();

// Pair labels in table order.
std::vector<std::string> bundled_pairs();

}  // namespace fockbench
