#pragma once

// Report rendering: JSON (round-trippable), aligned text tables and
// plot-ready long-form CSV.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockbench/classicality.hpp"
#include "fockbench/csv.hpp"
#include "fockbench/emergence.hpp"
#include "fockbench/fockmodel.hpp"
#include "fockbench/realization.hpp"
#include "fockbench/stats.hpp"

namespace fockbench {

using Json = nlohmann::json;

void to_json(Json& j, const DeviationVector& d);
void from_json(const Json& j, DeviationVector& d);
void to_json(Json& j, const Summary& s);
void from_json(const Json& j, Summary& s);
void to_json(Json& j, const Interval& i);
void from_json(const Json& j, Interval& i);
void to_json(Json& j, const Bands& b);
void from_json(const Json& j, Bands& b);
void to_json(Json& j, const RegressionResult& r);
void from_json(const Json& j, RegressionResult& r);
void to_json(Json& j, const PairedTest& t);
void from_json(const Json& j, PairedTest& t);
void to_json(Json& j, const StatsReport& r);
void from_json(const Json& j, StatsReport& r);
void to_json(Json& j, const ConjunctionParams& p);
void from_json(const Json& j, ConjunctionParams& p);
void to_json(Json& j, const FockFit& f);
void from_json(const Json& j, FockFit& f);
void to_json(Json& j, const RealizationCheck& c);
void to_json(Json& j, const HilbertRealization& r);

Component parse_component(std::string_view name);

struct DeviationRow {
    LabeledDeviation row;
    bool classical = false;
    std::optional<EmergenceDecomposition> emergence;  // present when weights were given
};

void to_json(Json& j, const EmergenceDecomposition& d);

struct FitRow {
    MembershipRecord record;
    FockFit fit;
};

Json deviations_report(const std::vector<DeviationRow>& rows, double tol);
std::string deviations_table(const std::vector<DeviationRow>& rows);

Json fit_report(const std::vector<FitRow>& rows, const FitConfig& config);
std::string fit_table(const std::vector<FitRow>& rows);
// One line per conjunction: pair, exemplar, conjunction, parameters, model, data.
std::string fit_csv(const std::vector<FitRow>& rows);

Json stats_report_json(const StatsReport& report, const DeviationVector& mean_gap);
std::string stats_table(const StatsReport& report, const DeviationVector& mean_gap);
// Long form "section,key,value"; sorted values appear as section "sorted".
std::string stats_csv(const StatsReport& report, const DeviationVector& mean_gap,
                      const std::vector<DeviationVector>& data);

}  // namespace fockbench
