#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fockbench/csv.hpp"
#include "fockbench/domain.hpp"

using namespace fockbench;

namespace {

RawResponse resp(std::string subject, Experiment e, Target t, int rating,
                 std::string exemplar = "Olive", std::string pair = "Fruits/Vegetables") {
    return RawResponse{std::move(subject), std::move(pair), e, t, std::move(exemplar),
                       Rating(rating)};
}

std::vector<RawResponse> full_grid(int rating, const std::string& exemplar = "Olive") {
    std::vector<RawResponse> out;
    for (auto e : kExperiments)
        for (auto t : kTargets) out.push_back(resp("s1", e, t, rating, exemplar));
    return out;
}

}  // namespace

TEST_CASE("ratings outside -3..3 are rejected") {
    for (int v = -3; v <= 3; ++v) CHECK(Rating(v).value() == v);
    CHECK_THROWS_AS(Rating(4), Error);
    CHECK_THROWS_AS(Rating(-4), Error);
}

TEST_CASE("rating to membership") {
    CHECK(rating_to_membership(Rating(3)) == 1.0);
    CHECK(rating_to_membership(Rating(1)) == 1.0);
    CHECK(rating_to_membership(Rating(0)) == 0.5);
    CHECK(rating_to_membership(Rating(-1)) == 0.0);
    CHECK(rating_to_membership(Rating(-3)) == 0.0);
    for (int v = -3; v < 3; ++v) {
        CHECK(rating_to_membership(Rating(v)) <= rating_to_membership(Rating(v + 1)));
    }
}

TEST_CASE("aggregate averages membership indicators") {
    std::vector<RawResponse> r{resp("s1", Experiment::AB, Target::First, 3),
                               resp("s2", Experiment::AB, Target::First, -2),
                               resp("s3", Experiment::AB, Target::First, 0)};
    CHECK(aggregate(r, "Fruits/Vegetables", "Olive", Experiment::AB, Target::First) ==
          doctest::Approx(0.5).epsilon(1e-15));

    std::vector<RawResponse> pos{resp("s1", Experiment::AB, Target::First, 1),
                                 resp("s2", Experiment::AB, Target::First, 2),
                                 resp("s3", Experiment::AB, Target::First, 3)};
    CHECK(aggregate(pos, "Fruits/Vegetables", "Olive", Experiment::AB, Target::First) == 1.0);
}

TEST_CASE("aggregate matches a direct count and ignores order") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> rating(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<RawResponse> r;
        int ones = 0, halves = 0;
        for (int i = 0; i < 40; ++i) {
            const int v = rating(rng);
            ones += v > 0;
            halves += v == 0;
            r.push_back(resp("s" + std::to_string(i), Experiment::AnB, Target::Conjunction, v));
        }
        const double expected = (ones + 0.5 * halves) / 40.0;
        const double got =
            aggregate(r, "Fruits/Vegetables", "Olive", Experiment::AnB, Target::Conjunction);
        CHECK(got == doctest::Approx(expected).epsilon(1e-14));
        std::shuffle(r.begin(), r.end(), rng);
        CHECK(aggregate(r, "Fruits/Vegetables", "Olive", Experiment::AnB, Target::Conjunction) ==
              doctest::Approx(got).epsilon(1e-14));
    }
}

TEST_CASE("aggregate with no matching responses names the cell") {
    std::vector<RawResponse> r{resp("s1", Experiment::AB, Target::First, 3)};
    try {
        aggregate(r, "Fruits/Vegetables", "Olive", Experiment::AnBn, Target::Second);
        FAIL("expected NoDataError");
    } catch (const NoDataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("Olive") != std::string::npos);
        CHECK(msg.find("AnBn") != std::string::npos);
    }
}

TEST_CASE("build_dataset on a complete grid") {
    const auto ds = build_dataset(full_grid(3));
    REQUIRE(ds.records.size() == 1);
    for (double w : ds.records[0].weights()) CHECK(w == 1.0);
    CHECK(ds.records[0].exemplar_id == "Olive");
    CHECK(ds.pair_label == "Fruits/Vegetables");
}

TEST_CASE("build_dataset takes single weights from the canonical experiments") {
    // Distinct rating per (experiment, target) so every weight is traceable.
    std::vector<RawResponse> r;
    auto add = [&](Experiment e, Target t, int a, int b) {
        r.push_back(resp("s1", e, t, a));
        r.push_back(resp("s2", e, t, b));
    };
    add(Experiment::AB, Target::First, 3, 3);          // muA = 1
    add(Experiment::AB, Target::Second, 3, -3);        // muB = 0.5
    add(Experiment::AB, Target::Conjunction, 0, -3);   // muAB = 0.25
    add(Experiment::ABn, Target::First, -3, -3);       // A judged again: 0
    add(Experiment::ABn, Target::Second, 0, 0);        // muB' = 0.5
    add(Experiment::ABn, Target::Conjunction, 3, 0);   // muAB' = 0.75
    add(Experiment::AnB, Target::First, 0, 3);         // muA' = 0.75
    add(Experiment::AnB, Target::Second, -3, -3);      // B judged again: 0
    add(Experiment::AnB, Target::Conjunction, 3, 3);   // muA'B = 1
    add(Experiment::AnBn, Target::First, 3, 3);        // A' judged again: 1
    add(Experiment::AnBn, Target::Second, 3, 3);       // B' judged again: 1
    add(Experiment::AnBn, Target::Conjunction, -3, 0); // muA'B' = 0.25

    const auto canonical = build_dataset(r).records.at(0);
    CHECK(canonical.mu_A == 1.0);
    CHECK(canonical.mu_B == 0.5);
    CHECK(canonical.mu_Ap == 0.75);
    CHECK(canonical.mu_Bp == 0.5);
    CHECK(canonical.mu_AandB == 0.25);
    CHECK(canonical.mu_AandBp == 0.75);
    CHECK(canonical.mu_ApandB == 1.0);
    CHECK(canonical.mu_ApandBp == 0.25);

    const auto pooled = build_dataset(r, SingleSource::Pooled).records.at(0);
    CHECK(pooled.mu_A == 0.5);
    CHECK(pooled.mu_B == 0.25);
    CHECK(pooled.mu_Ap == 0.875);
    CHECK(pooled.mu_Bp == 0.75);

    const auto est = marginal_estimates(r).at(0);
    CHECK(est.A_fromAB == 1.0);
    CHECK(est.A_fromABn == 0.0);
    CHECK(est.max_discrepancy() == 1.0);
}

TEST_CASE("build_dataset reports every missing cell") {
    auto r = full_grid(1);
    std::erase_if(r, [](const auto& x) { return x.experiment == Experiment::AnBn; });
    try {
        build_dataset(r);
        FAIL("expected NoDataError");
    } catch (const NoDataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("Olive") != std::string::npos);
        CHECK(msg.find("AnBn") != std::string::npos);
        CHECK(msg.find("XY") != std::string::npos);
    }
}

TEST_CASE("build_dataset rejects duplicate responses") {
    auto r = full_grid(1);
    r.push_back(r.front());
    CHECK_THROWS_AS(build_dataset(r), Error);
}

TEST_CASE("build_dataset keeps weights in range and exemplar order") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> rating(-3, 3);
    std::vector<RawResponse> r;
    for (const std::string ex : {"Mango", "Apple", "Olive"})
        for (int s = 0; s < 5; ++s)
            for (auto e : kExperiments)
                for (auto t : kTargets) r.push_back(resp("s" + std::to_string(s), e, t, rating(rng), ex));
    const auto ds = build_dataset(r);
    REQUIRE(ds.records.size() == 3);
    CHECK(ds.records[0].exemplar_id == "Mango");
    CHECK(ds.records[2].exemplar_id == "Olive");
    for (const auto& rec : ds.records) CHECK(rec.in_unit_range());
}

TEST_CASE("require_unit_range names the field") {
    MembershipRecord r;
    r.mu_ApandB = 1.5;
    try {
        require_unit_range(r);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("muApB = 1.5") != std::string::npos);
    }
}

TEST_CASE("raw csv round trip") {
    const auto grid = full_grid(-2);
    std::ostringstream os;
    write_raw_csv(os, grid);
    std::istringstream is(os.str());
    const auto back = read_raw_csv(is);
    REQUIRE(back.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(back[i].experiment == grid[i].experiment);
        CHECK(back[i].target == grid[i].target);
        CHECK(back[i].rating == grid[i].rating);
        CHECK(back[i].exemplar_id == grid[i].exemplar_id);
    }
}

TEST_CASE("malformed rating names line and column") {
    std::istringstream is(
        "subject,pair,experiment,target,exemplar,rating\n"
        "s1,p,AB,X,Olive,2\n"
        "s1,p,AB,Y,Olive,5\n");
    try {
        read_raw_csv(is, "ratings.csv");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 17);
        CHECK(std::string(e.what()).rfind("ratings.csv:3:17:", 0) == 0);
    }
}

TEST_CASE("csv rejects bad headers, fields and ranges") {
    std::istringstream bad_header("exemplar,muA\n");
    CHECK_THROWS_AS(read_aggregated_csv(bad_header), ParseError);

    std::istringstream bad_exp("subject,pair,experiment,target,exemplar,rating\ns,p,BA,X,e,1\n");
    CHECK_THROWS_AS(read_raw_csv(bad_exp), ParseError);

    std::istringstream out_of_range(
        "exemplar,muA,muB,muAp,muBp,muAB,muABp,muApB,muApBp\nx,0.5,0.5,0.5,0.5,1.2,0,0,0\n");
    CHECK_THROWS_AS(read_aggregated_csv(out_of_range), ParseError);

    std::istringstream comma_decimal(
        "exemplar,IA,IB,IAp,IBp,IABApBp\nx,-0.5,-0.5,-0.5,-0.5,-1;0\n");
    CHECK_THROWS_AS(read_deviations_csv(comma_decimal), ParseError);
}

TEST_CASE("aggregated csv round trips bit-exactly, with or without pair") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Dataset ds;
    for (int i = 0; i < 20; ++i) {
        MembershipRecord r;
        r.exemplar_id = "e" + std::to_string(i);
        r.pair_id = i % 2 ? "P/Q" : "R/S";
        r.mu_A = u(rng), r.mu_B = u(rng), r.mu_Ap = u(rng), r.mu_Bp = u(rng);
        r.mu_AandB = u(rng), r.mu_AandBp = u(rng), r.mu_ApandB = u(rng), r.mu_ApandBp = u(rng);
        ds.records.push_back(r);
    }
    std::ostringstream os;
    write_aggregated_csv(os, ds);
    std::istringstream is(os.str());
    const auto back = read_aggregated_csv(is);
    REQUIRE(back.records.size() == ds.records.size());
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
        CHECK(back.records[i].weights() == ds.records[i].weights());
        CHECK(back.records[i].pair_id == ds.records[i].pair_id);
    }

    std::istringstream no_pair(
        "exemplar,muA,muB,muAp,muBp,muAB,muABp,muApB,muApBp\r\nx,1,0,0,1,0,1,0,0\r\n");
    const auto plain = read_aggregated_csv(no_pair);
    REQUIRE(plain.records.size() == 1);
    CHECK(plain.records[0].pair_id.empty());
    CHECK(plain.records[0].mu_AandBp == 1.0);
}
