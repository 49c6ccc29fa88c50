#include "fockbench/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fockbench {

namespace {

constexpr std::array<std::string_view, 4> kConceptNames{"A", "B", "Ap", "Bp"};

template <typename Vec>
Json interleaved(const Vec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v[i].real());
        out.push_back(v[i].imag());
    }
    return out;
}

std::string fixed(double v, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

}  // namespace

Component parse_component(std::string_view name) {
    for (auto c : kComponents) {
        if (to_string(c) == name) return c;
    }
    throw Error("unknown component: " + std::string(name));
}

void to_json(Json& j, const DeviationVector& d) {
    j = Json::object();
    for (auto c : kComponents) j[std::string(to_string(c))] = d[c];
}

void from_json(const Json& j, DeviationVector& d) {
    d.I_A = j.at("A").get<double>();
    d.I_B = j.at("B").get<double>();
    d.I_Ap = j.at("Ap").get<double>();
    d.I_Bp = j.at("Bp").get<double>();
    d.I_ABApBp = j.at("ABApBp").get<double>();
}

void to_json(Json& j, const Summary& s) { j = Json{{"mean", s.mean}, {"std", s.std}}; }

void from_json(const Json& j, Summary& s) {
    s.mean = j.at("mean").get<double>();
    s.std = j.at("std").get<double>();
}

void to_json(Json& j, const Interval& i) { j = Json::array({i.lo, i.hi}); }

void from_json(const Json& j, Interval& i) {
    i.lo = j.at(0).get<double>();
    i.hi = j.at(1).get<double>();
}

void to_json(Json& j, const Bands& b) {
    j = Json{{"band_1sigma", b.band_1sigma}, {"ci95_mean", b.ci95_mean}};
}

void from_json(const Json& j, Bands& b) {
    b.band_1sigma = j.at("band_1sigma").get<Interval>();
    b.ci95_mean = j.at("ci95_mean").get<Interval>();
}

void to_json(Json& j, const RegressionResult& r) {
    j = Json{{"slope", r.slope},
             {"intercept", r.intercept},
             {"r_squared", r.r_squared},
             {"p_value_slope", r.p_value_slope},
             {"degenerate", r.degenerate}};
}

void from_json(const Json& j, RegressionResult& r) {
    r.slope = j.at("slope").get<double>();
    r.intercept = j.at("intercept").get<double>();
    r.r_squared = j.at("r_squared").get<double>();
    r.p_value_slope = j.at("p_value_slope").get<double>();
    r.degenerate = j.at("degenerate").get<bool>();
}

void to_json(Json& j, const PairedTest& t) {
    j = Json{{"x", to_string(t.x)},
             {"y", to_string(t.y)},
             {"p", t.p},
             {"p_bonferroni", t.p_bonferroni}};
}

void from_json(const Json& j, PairedTest& t) {
    t.x = parse_component(j.at("x").get<std::string>());
    t.y = parse_component(j.at("y").get<std::string>());
    t.p = j.at("p").get<double>();
    t.p_bonferroni = j.at("p_bonferroni").get<double>();
}

void to_json(Json& j, const StatsReport& r) {
    Json summary = Json::object();
    Json bands = Json::object();
    Json regression = Json::object();
    for (auto c : kComponents) {
        const auto i = static_cast<std::size_t>(c);
        const std::string key(to_string(c));
        summary[key] = r.summary[i];
        bands[key] = r.bands[i];
        regression[key] = r.regression[i];
    }
    j = Json{{"n", r.n},
             {"summary", summary},
             {"bands", bands},
             {"regression", regression},
             {"correlations", r.correlations},
             {"ttests", r.ttests}};
}

void from_json(const Json& j, StatsReport& r) {
    r.n = j.at("n").get<std::size_t>();
    for (auto c : kComponents) {
        const auto i = static_cast<std::size_t>(c);
        const std::string key(to_string(c));
        r.summary[i] = j.at("summary").at(key).get<Summary>();
        r.bands[i] = j.at("bands").at(key).get<Bands>();
        r.regression[i] = j.at("regression").at(key).get<RegressionResult>();
    }
    r.correlations = j.at("correlations").get<CorrelationMatrix>();
    r.ttests = j.at("ttests").get<std::vector<PairedTest>>();
}

void to_json(Json& j, const ConjunctionParams& p) {
    j = Json{{"m2", p.m2}, {"alpha", p.alpha}, {"beta", p.beta}, {"phiDeg", p.phi_deg}};
}

void from_json(const Json& j, ConjunctionParams& p) {
    p.m2 = j.at("m2").get<double>();
    p.alpha = j.at("alpha").get<double>();
    p.beta = j.at("beta").get<double>();
    p.phi_deg = j.at("phiDeg").get<double>();
}

void to_json(Json& j, const FockFit& f) {
    Json params = Json::object();
    Json residuals = Json::object();
    for (auto k : kConjunctions) {
        const auto i = static_cast<std::size_t>(k);
        params[std::string(to_string(k))] = f.params[i];
        residuals[std::string(to_string(k))] = f.residuals[i];
    }
    j = Json{{"feasible", f.feasible}, {"params", params}, {"residuals", residuals}};
}

void from_json(const Json& j, FockFit& f) {
    f.feasible = j.at("feasible").get<bool>();
    for (auto k : kConjunctions) {
        const auto i = static_cast<std::size_t>(k);
        f.params[i] = j.at("params").at(std::string(to_string(k))).get<ConjunctionParams>();
        f.residuals[i] = j.at("residuals").at(std::string(to_string(k))).get<double>();
    }
}

void to_json(Json& j, const RealizationCheck& c) {
    j = Json{{"orthonormality", c.orthonormality},
             {"membership", c.membership},
             {"interference", c.interference},
             {"sector2", c.sector2},
             {"state_norm", c.state_norm}};
}

void to_json(Json& j, const HilbertRealization& r) {
    Json concepts = Json::object();
    for (std::size_t i = 0; i < 4; ++i) {
        concepts[std::string(kConceptNames[i])] = interleaved(r.concepts[i]);
    }
    j = Json{{"encoding", "interleaved re,im"},
             {"concepts", concepts},
             {"state", interleaved(r.state)}};
}

void to_json(Json& j, const EmergenceDecomposition& d) {
    Json interferences = Json::object();
    for (auto k : kConjunctions) {
        interferences[std::string(to_string(k))] = d.int_XY[static_cast<std::size_t>(k)];
    }
    for (std::size_t i = 0; i < 4; ++i) {
        interferences[std::string(kConceptNames[i])] = d.int_single[i];
    }
    j = Json{{"interferences", interferences},
             {"residuals",
              {{"A", d.residual_A},
               {"B", d.residual_B},
               {"Ap", d.residual_Ap},
               {"Bp", d.residual_Bp},
               {"ABApBp", d.residual_total}}}};
}

Json deviations_report(const std::vector<DeviationRow>& rows, double tol) {
    Json out{{"tolerance", tol}, {"rows", Json::array()}};
    for (const auto& r : rows) {
        const auto prediction = emergence_prediction(r.row.I);
        Json emergence{{"predictedI", prediction.predicted}, {"gaps", prediction.gap}};
        if (r.emergence) emergence.update(Json(*r.emergence));
        out["rows"].push_back(Json{{"pair", r.row.pair_id},
                                   {"exemplar", r.row.exemplar_id},
                                   {"I", r.row.I},
                                   {"classical", r.classical},
                                   {"emergence", emergence}});
    }
    return out;
}

std::string deviations_table(const std::vector<DeviationRow>& rows) {
    std::size_t width = 8;
    for (const auto& r : rows) width = std::max(width, r.row.exemplar_id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "exemplar" << std::right;
    for (auto c : kComponents) os << std::setw(10) << to_string(c);
    os << "  verdict\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(width)) << r.row.exemplar_id << std::right;
        for (auto c : kComponents) os << std::setw(10) << fixed(r.row.I[c]);
        os << "  " << (r.classical ? "classical" : "non-classical") << '\n';
    }
    return os.str();
}

Json fit_report(const std::vector<FitRow>& rows, const FitConfig& config) {
    Json out{{"config",
              {{"fit_tol", config.fit_tol}, {"budget", config.budget}, {"seed", config.seed}}},
             {"exemplars", Json::array()}};
    for (const auto& r : rows) {
        Json model = Json::object();
        Json data = Json::object();
        for (auto k : kConjunctions) {
            const auto i = static_cast<std::size_t>(k);
            const std::string key(to_string(k));
            model[key] = r.record.conjunction(k) + r.fit.residuals[i];
            data[key] = r.record.conjunction(k);
        }
        out["exemplars"].push_back(Json{{"pair", r.record.pair_id},
                                        {"exemplar", r.record.exemplar_id},
                                        {"fit", r.fit},
                                        {"model", model},
                                        {"data", data},
                                        {"max_abs_residual", r.fit.max_abs_residual()},
                                        {"m2_sum", r.fit.m2_sum()},
                                        {"alpha_sum", r.fit.alpha_sum()}});
    }
    return out;
}

std::string fit_table(const std::vector<FitRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "exemplar" << std::setw(6) << "conj" << std::right
       << std::setw(9) << "m2" << std::setw(9) << "alpha" << std::setw(9) << "beta"
       << std::setw(9) << "phi" << std::setw(9) << "data" << std::setw(12) << "residual"
       << "  status\n";
    for (const auto& r : rows) {
        for (auto k : kConjunctions) {
            const auto i = static_cast<std::size_t>(k);
            const auto& p = r.fit.params[i];
            os << std::left << std::setw(20) << r.record.exemplar_id << std::setw(6)
               << to_string(k) << std::right << std::setw(9) << fixed(p.m2) << std::setw(9)
               << fixed(p.alpha) << std::setw(9) << fixed(p.beta) << std::setw(9)
               << fixed(p.phi_deg, 2) << std::setw(9) << fixed(r.record.conjunction(k))
               << std::setw(12) << sci(r.fit.residuals[i]) << "  "
               << (r.fit.feasible ? "ok" : "INFEASIBLE") << '\n';
        }
    }
    return os.str();
}

std::string fit_csv(const std::vector<FitRow>& rows) {
    std::ostringstream os;
    os << "pair,exemplar,conjunction,m2,alpha,beta,phi_deg,model,data,residual,feasible\n";
    for (const auto& r : rows) {
        for (auto k : kConjunctions) {
            const auto i = static_cast<std::size_t>(k);
            const auto& p = r.fit.params[i];
            const double data = r.record.conjunction(k);
            os << r.record.pair_id << ',' << r.record.exemplar_id << ',' << to_string(k) << ','
               << format_double(p.m2) << ',' << format_double(p.alpha) << ','
               << format_double(p.beta) << ',' << format_double(p.phi_deg) << ','
               << format_double(data + r.fit.residuals[i]) << ',' << format_double(data) << ','
               << format_double(r.fit.residuals[i]) << ',' << (r.fit.feasible ? 1 : 0) << '\n';
        }
    }
    return os.str();
}

Json stats_report_json(const StatsReport& report, const DeviationVector& mean_gap) {
    return Json{{"stats", report},
                {"emergence",
                 {{"predicted", kEmergencePrediction}, {"mean_gap", mean_gap}}}};
}

std::string stats_table(const StatsReport& r, const DeviationVector& mean_gap) {
    std::ostringstream os;
    os << "n = " << r.n << "\n\n";
    os << std::left << std::setw(8) << "" << std::right << std::setw(9) << "mean"
       << std::setw(9) << "std" << std::setw(20) << "1-sigma band" << std::setw(20)
       << "95% CI of mean" << std::setw(11) << "slope" << std::setw(8) << "R^2"
       << std::setw(11) << "p(slope)" << std::setw(10) << "gap" << '\n';
    for (auto c : kComponents) {
        const auto i = static_cast<std::size_t>(c);
        const auto& b = r.bands[i];
        const auto& g = r.regression[i];
        os << std::left << std::setw(8) << to_string(c) << std::right << std::setw(9)
           << fixed(r.summary[i].mean) << std::setw(9) << fixed(r.summary[i].std)
           << std::setw(20)
           << ("(" + fixed(b.band_1sigma.lo, 3) + ", " + fixed(b.band_1sigma.hi, 3) + ")")
           << std::setw(20)
           << ("(" + fixed(b.ci95_mean.lo, 3) + ", " + fixed(b.ci95_mean.hi, 3) + ")")
           << std::setw(11) << sci(g.slope) << std::setw(8) << fixed(g.r_squared, 3)
           << std::setw(11) << sci(g.p_value_slope) << std::setw(10) << fixed(mean_gap[c], 3)
           << '\n';
    }

    os << "\ncorrelations\n" << std::setw(8) << "";
    for (auto c : kComponents) os << std::setw(9) << to_string(c);
    os << '\n';
    for (auto a : kComponents) {
        os << std::left << std::setw(8) << to_string(a) << std::right;
        for (auto b : kComponents) {
            os << std::setw(9)
               << fixed(r.correlations[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                        3);
        }
        os << '\n';
    }

    os << "\npaired t-tests (Bonferroni k = " << r.ttests.size() << ")\n";
    for (const auto& t : r.ttests) {
        const std::string label = std::string(to_string(t.x)) + " vs " + std::string(to_string(t.y));
        os << std::left << std::setw(12) << label << std::right << "  p = " << sci(t.p)
           << "  adjusted = " << sci(t.p_bonferroni) << '\n';
    }
    return os.str();
}

std::string stats_csv(const StatsReport& r, const DeviationVector& mean_gap,
                      const std::vector<DeviationVector>& data) {
    std::ostringstream os;
    os << "section,key,value\n";
    auto line = [&](std::string_view section, const std::string& key, double v) {
        os << section << ',' << key << ',' << format_double(v) << '\n';
    };
    line("n", "all", static_cast<double>(r.n));
    for (auto c : kComponents) {
        const auto i = static_cast<std::size_t>(c);
        const std::string k(to_string(c));
        line("mean", k, r.summary[i].mean);
        line("std", k, r.summary[i].std);
        line("band_1sigma_lo", k, r.bands[i].band_1sigma.lo);
        line("band_1sigma_hi", k, r.bands[i].band_1sigma.hi);
        line("ci95_lo", k, r.bands[i].ci95_mean.lo);
        line("ci95_hi", k, r.bands[i].ci95_mean.hi);
        line("slope", k, r.regression[i].slope);
        line("intercept", k, r.regression[i].intercept);
        line("r_squared", k, r.regression[i].r_squared);
        line("p_slope", k, r.regression[i].p_value_slope);
        line("emergence_gap", k, mean_gap[c]);
    }
    for (auto a : kComponents) {
        for (auto b : kComponents) {
            if (static_cast<int>(b) <= static_cast<int>(a)) continue;
            line("corr", std::string(to_string(a)) + ":" + std::string(to_string(b)),
                 r.correlations[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
    }
    for (const auto& t : r.ttests) {
        const std::string k = std::string(to_string(t.x)) + ":" + std::string(to_string(t.y));
        line("ttest_p", k, t.p);
        line("ttest_p_bonferroni", k, t.p_bonferroni);
    }
    for (auto c : kComponents) {
        auto v = component_values(data, c);
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < v.size(); ++i) {
            line("sorted", std::string(to_string(c)) + ":" + std::to_string(i + 1), v[i]);
        }
    }
    return os.str();
}

}  // namespace fockbench
