#include <doctest.h>

#include "cheeger/gauss.hpp"
#include "cheeger/oracle.hpp"
#include "cheeger/solver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace cheeger;

namespace {

// Independent oracle: P(|Z| <= r) for a standard Gaussian in R^3 via the
// chi(3) distribution function erf(r/sqrt(2)) - sqrt(2/pi) r exp(-r^2/2).
double chi3_cdf(double r) {
    return std::erf(r / std::sqrt(2.0)) -
           std::sqrt(2.0 / std::acos(-1.0)) * r * std::exp(-0.5 * r * r);
}

MixtureSpec spec_3d(double p, double d) {
    MixtureSpec spec;
    spec.p = p;
    spec.a = {0.0, 0.0, 0.0};
    spec.b = {d, 0.0, 0.0};
    return spec;
}

} // namespace

TEST_CASE("set membership and distance basics") {
    const TestSet hs = HalfSpace{{1.0, 0.0}, 0.5, HalfSpace::Side::minus};
    CHECK(set_contains(hs, {0.0, 3.0}));
    CHECK(!set_contains(hs, {1.0, 0.0}));
    CHECK(set_distance(hs, {0.0, 3.0}) == 0.0);
    CHECK(set_distance(hs, {1.5, -2.0}) == doctest::Approx(1.0).epsilon(1e-15));

    const TestSet ball = Ball{{1.0, 1.0}, 2.0};
    CHECK(set_contains(ball, {1.0, 2.0}));
    CHECK(!set_contains(ball, {4.0, 1.0}));
    CHECK(set_distance(ball, {4.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));

    const TestSet slab = Slab{{0.0, 1.0}, -1.0, 1.0};
    CHECK(set_contains(slab, {10.0, 0.0}));
    CHECK(!set_contains(slab, {0.0, 2.0}));
    CHECK(set_distance(slab, {0.0, 2.5}) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(set_distance(slab, {0.0, -3.0}) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("describe is stable and carries the set kind") {
    const TestSet ball = Ball{{0.5, -1.0}, 1.25};
    CHECK(describe(ball) == describe(ball));
    CHECK(describe(ball).find("ball") == 0);
    CHECK(describe(HalfSpace{{1.0}, 0.0, HalfSpace::Side::plus}).find("halfspace") == 0);
    CHECK(describe(Slab{{1.0}, -1.0, 1.0}).find("slab") == 0);
}

TEST_CASE("halfspace measure along the axis reduces to the mixture cdf") {
    const auto spec = spec_3d(0.3, 2.0);
    const auto cm = canonical_1d(0.3, 2.0);
    for (double t : {-1.0, 0.0, 0.7, 1.5, 2.0, 3.5}) {
        const HalfSpace hs{{1.0, 0.0, 0.0}, t, HalfSpace::Side::minus};
        CHECK(halfspace_measure(spec, hs) == doctest::Approx(cm.cdf(t)).epsilon(1e-15));
        CHECK(halfspace_perimeter(spec, hs) == doctest::Approx(cm.perimeter(t)).epsilon(1e-15));
        const HalfSpace plus{{1.0, 0.0, 0.0}, t, HalfSpace::Side::plus};
        CHECK(halfspace_measure(spec, hs) + halfspace_measure(spec, plus) ==
              doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("perpendicular mid-plane halves a symmetric mixture") {
    const auto spec = spec_3d(0.5, 3.0);
    const HalfSpace hs{{1.0, 0.0, 0.0}, 1.5, HalfSpace::Side::minus};
    CHECK(halfspace_measure(spec, hs) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("halfspace measure and perimeter are dimension-free") {
    // The same 1d cut embedded with an axis-aligned normal in n = 1, 2, 3, 5.
    const double p = 0.3, d = 2.0, t = 1.2;
    double ref_v = 0.0, ref_s = 0.0;
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
        MixtureSpec spec;
        spec.p = p;
        spec.a.assign(n, 0.0);
        spec.b.assign(n, 0.0);
        spec.b[0] = d;
        std::vector<double> nu(n, 0.0);
        nu[0] = 1.0;
        const HalfSpace hs{nu, t, HalfSpace::Side::minus};
        const double v = halfspace_measure(spec, hs);
        const double s = halfspace_perimeter(spec, hs);
        if (n == 1) {
            ref_v = v;
            ref_s = s;
        } else {
            CHECK(std::abs(v - ref_v) <= 1e-12);
            CHECK(std::abs(s - ref_s) <= 1e-12);
        }
    }
}

TEST_CASE("mc_measure agrees with the exact halfspace measure") {
    const auto spec = spec_3d(0.3, 2.0);
    std::mt19937_64 pick(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::normal_distribution<double> gauss;
        std::vector<double> nu{gauss(pick), gauss(pick), gauss(pick)};
        double len = std::sqrt(nu[0] * nu[0] + nu[1] * nu[1] + nu[2] * nu[2]);
        for (double& x : nu) x /= len;
        const HalfSpace hs{nu, 0.5, HalfSpace::Side::minus};
        const double exact = halfspace_measure(spec, hs);
        const auto est = mc_measure(spec, hs, 200000, 1000 + trial);
        CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error + 1e-12);
    }
}

TEST_CASE("mc_measure of a centered ball matches the chi(3) oracle") {
    // a = b collapses the mixture to a single standard Gaussian in R^3.
    const auto spec = spec_3d(0.5, 0.0);
    for (double r : {1.0, 1.5, 2.0}) {
        const TestSet ball = Ball{{0.0, 0.0, 0.0}, r};
        const auto est = mc_measure(spec, ball, 400000, 7);
        CHECK(std::abs(est.value - chi3_cdf(r)) <= 4.0 * est.std_error);
    }
}

TEST_CASE("mc_measure is deterministic in the seed") {
    const auto spec = spec_3d(0.3, 2.0);
    const TestSet ball = Ball{{1.0, 0.0, 0.0}, 1.5};
    const auto e1 = mc_measure(spec, ball, 50000, 42);
    const auto e2 = mc_measure(spec, ball, 50000, 42);
    CHECK(e1.value == e2.value);
    CHECK(e1.std_error == e2.std_error);
    const auto e3 = mc_measure(spec, ball, 50000, 43);
    CHECK(e1.value != e3.value);
}

TEST_CASE("mc_measure rejects tiny sample counts") {
    const auto spec = spec_3d(0.3, 2.0);
    const TestSet ball = Ball{{0.0, 0.0, 0.0}, 1.0};
    CHECK_THROWS_AS(mc_measure(spec, ball, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_minkowski(spec, ball, 100, 1), std::invalid_argument);
}

TEST_CASE("mc_minkowski recovers the exact halfspace perimeter") {
    const auto spec = spec_3d(0.3, 2.0);
    const HalfSpace hs{{1.0, 0.0, 0.0}, 1.2, HalfSpace::Side::minus};
    const double exact = halfspace_perimeter(spec, hs);
    const auto est = mc_minkowski(spec, hs, 500000, 11);
    CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error + 1e-3);
}

TEST_CASE("slab perimeter is the sum of its two face perimeters") {
    const auto spec = spec_3d(0.3, 2.0);
    const Slab slab{{1.0, 0.0, 0.0}, 0.2, 1.6};
    const HalfSpace lo{{1.0, 0.0, 0.0}, 0.2, HalfSpace::Side::minus};
    const HalfSpace hi{{1.0, 0.0, 0.0}, 1.6, HalfSpace::Side::minus};
    const double exact = halfspace_perimeter(spec, lo) + halfspace_perimeter(spec, hi);
    const auto est = mc_minkowski(spec, slab, 500000, 13);
    CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error + 2e-3);
}

TEST_CASE("ball Minkowski content is stable across the eps ladder") {
    // Richardson value vs the single-eps quotient at 1e-2: within a few percent.
    const auto spec = spec_3d(0.3, 2.0);
    const TestSet ball = Ball{{1.0, 0.0, 0.0}, 1.5};
    const auto rich = mc_minkowski(spec, ball, 500000, 19);
    // Crude one-eps estimate from an independent pass.
    const double eps = 1e-2;
    const auto inner = mc_measure(spec, ball, 500000, 23);
    const auto outer = mc_measure(spec, Ball{{1.0, 0.0, 0.0}, 1.5 + eps}, 500000, 23);
    const double crude = (outer.value - inner.value) / eps;
    CHECK(std::abs(rich.value - crude) / crude <= 0.02);
}

TEST_CASE("shift bounds: exact halfspace path") {
    // gamma(H) = Phi(t) for H = {x.nu < t}; shifting along the normal attains
    // the bound, shifting along a perpendicular direction leaves it unchanged.
    const double t = 0.4;
    const HalfSpace hs{{1.0, 0.0}, t, HalfSpace::Side::minus};
    for (double lambda : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        CHECK(shift_bounds_check(t, lambda, {1.0, 0.0}, hs, 10000, 3));
        CHECK(shift_bounds_check(t, lambda, {0.0, 1.0}, hs, 10000, 3));
        const double along = gaussian_shifted_halfspace_measure(hs, lambda, {1.0, 0.0});
        CHECK(along == doctest::Approx(norm_cdf(t + lambda)).epsilon(1e-15));
        const double perp = gaussian_shifted_halfspace_measure(hs, lambda, {0.0, 1.0});
        CHECK(perp == doctest::Approx(norm_cdf(t)).epsilon(1e-15));
    }
}

TEST_CASE("shift bounds: MC path for balls and slabs") {
    // A centered ball with gamma-measure Phi(t) stays inside the band.
    const double r = 1.5;
    const double t = norm_quantile(chi3_cdf(r));
    const TestSet ball = Ball{{0.0, 0.0, 0.0}, r};
    for (double lambda : {0.0, 0.3, -0.8, 1.5}) {
        CHECK(shift_bounds_check(t, lambda, {0.0, 0.0, 1.0}, ball, 400000, 29));
    }

    const Slab slab{{1.0, 0.0}, -1.0, 1.0};
    const double t_slab = norm_quantile(norm_cdf(1.0) - norm_cdf(-1.0));
    for (double lambda : {0.0, 0.5, -1.2}) {
        CHECK(shift_bounds_check(t_slab, lambda, {1.0, 0.0}, slab, 400000, 31));
        CHECK(shift_bounds_check(t_slab, lambda, {0.0, 1.0}, slab, 400000, 31));
    }
}

TEST_CASE("verify sweep passes on a well-conditioned mixture") {
    const auto spec = spec_3d(0.3, 2.0);
    const auto report = verify_cheeger_lower_bound(spec, 15, 50000, 5);
    CHECK(report.pass);
    CHECK(report.trials == 15);
    CHECK(report.h_mu == doctest::Approx(cheeger::cheeger(spec).h).epsilon(1e-15));
    CHECK(report.worst_ratio >= report.h_mu - 1e-3);
    CHECK(!report.worst_set.empty());
    CHECK(report.tilt_margin > 0.0);
}

TEST_CASE("verify sweep is deterministic in the seed") {
    const auto spec = spec_3d(0.3, 2.0);
    const auto r1 = verify_cheeger_lower_bound(spec, 9, 20000, 77);
    const auto r2 = verify_cheeger_lower_bound(spec, 9, 20000, 77);
    CHECK(r1.worst_ratio == r2.worst_ratio);
    CHECK(r1.worst_set == r2.worst_set);
    CHECK(r1.tilt_margin == r2.tilt_margin);
}

TEST_CASE("verify rejects degenerate mixtures") {
    MixtureSpec spec;
    spec.p = 0.0;
    spec.a = {0.0};
    spec.b = {5.0};
    CHECK_THROWS_AS(verify_cheeger_lower_bound(spec, 3, 10000, 1), std::domain_error);
}
