#include <doctest.h>

#include "cheeger/gauss.hpp"
#include "cheeger/mixture.hpp"
#include "cheeger/scanner.hpp"
#include "cheeger/solver.hpp"

#include <cmath>
#include <stdexcept>

using namespace cheeger;

TEST_CASE("single cell matches the symmetric closed form") {
    const auto records = scan_grid(0.5, 0.5, 2.0, 2.0, 2, 2);
    REQUIRE(records.size() == 4); // inclusive 2x2 grid collapses to one cell value
    for (const auto& r : records) {
        CHECK(r.p == 0.5);
        CHECK(r.d == 2.0);
        CHECK(r.h == doctest::Approx(sqrt_2_over_pi * std::exp(-0.5)).epsilon(1e-13));
        CHECK(r.n_min == 1);
        CHECK(r.r_star == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("d <= 2 cells always report a single minimizer") {
    const auto records = scan_grid(0.05, 0.95, 0.1, 2.0, 12, 12);
    for (const auto& r : records) {
        CHECK(r.n_min == 1);
        CHECK(static_cast<int>(r.minimizers.size()) == r.n_min);
        CHECK(r.gap > 0.0);
    }
}

TEST_CASE("minimizer count never exceeds two") {
    const auto records = scan_grid(0.02, 0.98, 0.1, 6.0, 15, 15);
    for (const auto& r : records) {
        CHECK(r.n_min >= 1);
        CHECK(r.n_min <= 2);
        CHECK(r.gap >= 0.0);
    }
}

TEST_CASE("symmetric row is strictly decreasing in d") {
    const auto records = scan_grid(0.5, 0.5, 0.5, 5.0, 2, 20);
    double prev = 1e300;
    for (std::size_t i = 0; i < records.size() / 2; ++i) { // first p-row, d ascending
        CHECK(records[i].h < prev);
        prev = records[i].h;
    }
}

TEST_CASE("p and 1-p rows coincide") {
    const auto lo = scan_grid(0.3, 0.3, 0.5, 5.0, 2, 10);
    const auto hi = scan_grid(0.7, 0.7, 0.5, 5.0, 2, 10);
    REQUIRE(lo.size() == hi.size());
    // 1 - 0.7 differs from 0.3 by one ulp, so allow rounding-level noise.
    for (std::size_t i = 0; i < lo.size(); ++i) {
        CHECK(lo[i].h == doctest::Approx(hi[i].h).epsilon(1e-13));
        CHECK(lo[i].r_star == doctest::Approx(hi[i].r_star).epsilon(1e-13));
        REQUIRE(lo[i].minimizers.size() == hi[i].minimizers.size());
        for (std::size_t j = 0; j < lo[i].minimizers.size(); ++j) {
            CHECK(std::abs(lo[i].minimizers[j] - hi[i].minimizers[j]) <= 1e-12);
        }
    }
}

TEST_CASE("h tends to the Gaussian constant as d -> 0") {
    const auto records = scan_grid(0.3, 0.3, 1e-3, 1e-3, 2, 2);
    CHECK(std::abs(records.front().h - sqrt_2_over_pi) <= 1e-3);
}

TEST_CASE("scan_grid validates its bounds") {
    CHECK_THROWS_AS(scan_grid(0.0, 0.5, 1.0, 2.0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(scan_grid(0.1, 0.5, 0.0, 2.0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(scan_grid(0.5, 0.1, 1.0, 2.0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(scan_grid(0.1, 0.5, 1.0, 2.0, 1, 4), std::invalid_argument);
}

TEST_CASE("csv round trip is exact") {
    const auto records = scan_grid(0.05, 0.95, 0.3, 5.5, 7, 9);
    const auto csv = scan_to_csv(records);
    CHECK(csv.rfind("p,d,h,r_star,n_min,t1,t2,gap\n", 0) == 0);
    const auto parsed = scan_from_csv(csv);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].p == records[i].p);
        CHECK(parsed[i].d == records[i].d);
        CHECK(parsed[i].h == records[i].h);
        CHECK(parsed[i].r_star == records[i].r_star);
        CHECK(parsed[i].n_min == records[i].n_min);
        CHECK(parsed[i].minimizers == records[i].minimizers);
        CHECK((std::isinf(parsed[i].gap) ? std::isinf(records[i].gap)
                                         : parsed[i].gap == records[i].gap));
    }
}

TEST_CASE("csv parser rejects malformed input") {
    CHECK_THROWS_AS(scan_from_csv("h,p\n"), std::invalid_argument);
    CHECK_THROWS_AS(scan_from_csv("p,d,h,r_star,n_min,t1,t2,gap\n1,2,3\n"),
                    std::invalid_argument);
}

TEST_CASE("json mirrors the csv fields") {
    const auto records = scan_grid(0.5, 0.5, 2.0, 2.0, 2, 2);
    const auto json = scan_to_json(records);
    CHECK(json.find("\"p\": 0.5") != std::string::npos);
    CHECK(json.find("\"n_min\": 1") != std::string::npos);
    CHECK(json.find("\"t2\": null") != std::string::npos);
    CHECK(json.find("\"gap\":") != std::string::npos);
}

TEST_CASE("tie locus at d = 3 sits near 0.075") {
    const double p_hat = tie_locus(3.0, {0.05, 0.10});
    CHECK(std::abs(p_hat - 0.075) <= 0.005);
    // At the tie the solver reports both minimizers.
    const auto res = find_minimizers(canonical_1d(p_hat, 3.0));
    CHECK(res.minimizers.size() == 2);
}

TEST_CASE("tie locus is bracket-independent") {
    const double wide = tie_locus(3.0, {0.05, 0.10});
    const double narrow = tie_locus(3.0, {0.06, 0.09});
    CHECK(std::abs(wide - narrow) <= 1e-9);
}

TEST_CASE("tie locus rejects d <= 2 and empty brackets") {
    CHECK_THROWS_AS(tie_locus(1.5, {0.01, 0.49}), std::runtime_error);
    CHECK_THROWS_AS(tie_locus(3.0, {0.3, 0.4}), std::runtime_error);
}

TEST_CASE("uniqueness threshold: symmetric weight is always unique") {
    CHECK(uniqueness_threshold(0.5, 6.0) == 0.0);
}

TEST_CASE("uniqueness threshold rejects weights outside (0, 1/2]") {
    CHECK_THROWS_AS(uniqueness_threshold(0.0, 6.0), std::domain_error);
    CHECK_THROWS_AS(uniqueness_threshold(0.7, 6.0), std::domain_error);
    CHECK_THROWS_AS(uniqueness_threshold(-0.1, 6.0), std::domain_error);
}

TEST_CASE("uniqueness threshold exceeds 3 at p = 0.075") {
    // The tie at (0.075..., 3) forces the certified-unique range above d = 3.
    const double c_hat = uniqueness_threshold(0.075, 8.0);
    CHECK(c_hat > 3.0);
    CHECK(c_hat < 3.5);
}

TEST_CASE("uniqueness threshold at p = 0.3 is finite and certifies d = c + 1") {
    const double c_hat = uniqueness_threshold(0.3, 8.0);
    CHECK(c_hat > 2.0);
    CHECK(c_hat < 8.0);
    const auto res = find_minimizers(canonical_1d(0.3, c_hat + 1.0));
    CHECK(res.minimizers.size() == 1);
    CHECK(res.gap > 1e-6);
}
