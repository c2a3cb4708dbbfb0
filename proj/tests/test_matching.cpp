#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "topocorr/matching.hpp"
#include "topocorr/persistence.hpp"
#include "topocorr/shapes.hpp"

using namespace topocorr;

namespace {

constexpr double kQuarterPi = 0.7853981633974483;
constexpr double kInvSqrt2 = 0.7071067811865476;

GridSpec coarse_grid(int refine_rounds = 0) {
    GridSpec grid;
    grid.n_theta = 5;
    grid.n_beta = 5;
    grid.refine_rounds = refine_rounds;
    return grid;
}

} // namespace

TEST_CASE("push along the diagonal line is the pointwise max") {
    const Bifunction phi(ScalarField({0.0, 1.0, -2.0}), ScalarField({0.5, 0.25, -3.0}));
    const FilteringLine diagonal = FilteringLine::from_angle(kQuarterPi, 0.0);
    const ScalarField pushed = push_to_line(phi, diagonal);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        CHECK(pushed[i] == doctest::Approx(std::max(phi.first()[i], phi.second()[i]))
                               .epsilon(1e-14));
    }

    const Bifunction diag(phi.first(), phi.first());
    const ScalarField same = push_to_line(diag, diagonal);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(same[i] == doctest::Approx(phi.first()[i]).epsilon(1e-14));
    }
}

TEST_CASE("push of a constant bifunction is the constant, at any angle") {
    const Bifunction constant(ScalarField({3.25, 3.25}), ScalarField({3.25, 3.25}));
    for (double theta : {0.3, kQuarterPi, 1.2}) {
        const ScalarField pushed =
            push_to_line(constant, FilteringLine::from_angle(theta, 0.0));
        for (std::size_t i = 0; i < pushed.size(); ++i) {
            CHECK(pushed[i] == doctest::Approx(3.25).epsilon(1e-14));
        }
    }
}

TEST_CASE("line angles must lie strictly inside (0, pi/2)") {
    CHECK_THROWS_AS(FilteringLine::from_angle(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(FilteringLine::from_angle(1.5707963267948966, 0.0),
                    std::invalid_argument);
}

TEST_CASE("three-angle grid sits at the quarter quantiles") {
    GridSpec grid;
    grid.n_theta = 3;
    grid.n_beta = 1;
    const auto lines = line_grid(grid, 1.0);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].theta() == doctest::Approx(kQuarterPi / 2.0).epsilon(1e-15));
    CHECK(lines[1].theta() == kQuarterPi);
    CHECK(lines[2].theta() == doctest::Approx(3.0 * kQuarterPi / 2.0).epsilon(1e-15));
    CHECK(lines[1].cos_theta() == kInvSqrt2);
    CHECK(lines[1].sin_theta() == kInvSqrt2);
    for (const FilteringLine& line : lines) CHECK(line.beta() == 0.0);
    // exact mirror pairing
    CHECK(lines[2].cos_theta() == lines[0].sin_theta());
    CHECK(lines[2].sin_theta() == lines[0].cos_theta());
}

TEST_CASE("two-angle grid is placed symmetrically") {
    GridSpec grid;
    grid.n_theta = 2;
    grid.n_beta = 2;
    grid.beta_bound = 1.0;
    const auto lines = line_grid(grid, 3.0);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0].cos_theta() == lines[3].sin_theta());
    CHECK(lines[0].sin_theta() == lines[3].cos_theta());
    CHECK(lines[0].beta() == -lines[1].beta());
    CHECK(lines[0].beta() == doctest::Approx(-1.0).epsilon(1e-15)); // 3.0 * (2/3 - 1)
}

TEST_CASE("grid validation") {
    GridSpec bad;
    bad.n_theta = 0;
    CHECK_THROWS_AS(line_grid(bad, 1.0), std::invalid_argument);
    GridSpec shrink;
    shrink.refine_shrink = 1.0;
    CHECK_THROWS_AS(shrink.validate(), std::invalid_argument);
}

TEST_CASE("matching distance of a bifunction with itself is zero") {
    testing::Rng rng(10001);
    for (int trial = 0; trial < 5; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 15);
        const Bifunction phi =
            testing::random_bifunction(rng, static_cast<std::size_t>(c.vertex_count()));
        CHECK(matching_distance(phi, phi, c, coarse_grid(1), 0) == 0.0);
    }
}

TEST_CASE("matching distance dominates the component distances") {
    testing::Rng rng(10002);
    for (int trial = 0; trial < 8; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 15);
        const auto n = static_cast<std::size_t>(c.vertex_count());
        const Bifunction phi1 = testing::random_bifunction(rng, n);
        const Bifunction phi2 = testing::random_bifunction(rng, n);
        const MatchingReport report =
            matching_distance_report(phi1, phi2, c, coarse_grid(1), 0);
        CHECK(report.distance >= report.component_distance);
    }
}

TEST_CASE("matching distance is symmetric in its arguments") {
    testing::Rng rng(10003);
    for (int trial = 0; trial < 5; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 12);
        const auto n = static_cast<std::size_t>(c.vertex_count());
        const Bifunction phi1 = testing::random_bifunction(rng, n);
        const Bifunction phi2 = testing::random_bifunction(rng, n);
        CHECK(matching_distance(phi1, phi2, c, coarse_grid(2), 0) ==
              matching_distance(phi2, phi1, c, coarse_grid(2), 0));
    }
}

TEST_CASE("swapping both bifunctions' components leaves the result unchanged") {
    testing::Rng rng(10004);
    for (int trial = 0; trial < 5; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 12);
        const auto n = static_cast<std::size_t>(c.vertex_count());
        const Bifunction phi1 = testing::random_bifunction(rng, n);
        const Bifunction phi2 = testing::random_bifunction(rng, n);
        // refinement on, so the mirrored windows are exercised too
        CHECK(matching_distance(phi1, phi2, c, coarse_grid(3), 0) ==
              matching_distance(phi1.swapped(), phi2.swapped(), c, coarse_grid(3), 0));
    }
}

TEST_CASE("adding lines never decreases the max over lines") {
    testing::Rng rng(10005);
    GridSpec small;
    small.n_theta = 4;
    small.n_beta = 3;
    GridSpec large;
    large.n_theta = 9; // (9+1) is a multiple of (4+1): angle superset
    large.n_beta = 7;  // (7+1) is a multiple of (3+1): offset superset
    for (int trial = 0; trial < 5; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 12);
        const auto n = static_cast<std::size_t>(c.vertex_count());
        const Bifunction phi1 = testing::random_bifunction(rng, n);
        const Bifunction phi2 = testing::random_bifunction(rng, n);
        const double range =
            std::max(std::max(phi1.first().max_abs(), phi1.second().max_abs()),
                     std::max(phi2.first().max_abs(), phi2.second().max_abs()));
        auto base = line_grid(small, range);
        auto extended = base;
        for (const FilteringLine& line : line_grid(large, range)) extended.push_back(line);
        const double over_base = matching_distance_over_lines(phi1, phi2, c, base, 0);
        const double over_extended =
            matching_distance_over_lines(phi1, phi2, c, extended, 0);
        CHECK(over_extended >= over_base);
    }
}

TEST_CASE("doubling the grid spec never decreases the estimate (refinement off)") {
    testing::Rng rng(10007);
    GridSpec base;
    base.n_theta = 6;
    base.n_beta = 4;
    base.refine_rounds = 0;
    GridSpec doubled = base;
    doubled.n_theta = 12;
    doubled.n_beta = 8;
    for (int trial = 0; trial < 12; ++trial) {
        const SimplicialComplex c = testing::random_complex(rng, 15);
        const auto n = static_cast<std::size_t>(c.vertex_count());
        const Bifunction phi1 = testing::random_bifunction(rng, n);
        const Bifunction phi2 = testing::random_bifunction(rng, n);
        CHECK(matching_distance(phi1, phi2, c, doubled, 0) >=
              matching_distance(phi1, phi2, c, base, 0));
    }
}

TEST_CASE("threaded evaluation matches single-threaded bit for bit") {
    testing::Rng rng(10006);
    const SimplicialComplex c = testing::random_complex(rng, 20);
    const auto n = static_cast<std::size_t>(c.vertex_count());
    const Bifunction phi1 = testing::random_bifunction(rng, n);
    const Bifunction phi2 = testing::random_bifunction(rng, n);
    const GridSpec grid = coarse_grid(2);
    CHECK(matching_distance(phi1, phi2, c, grid, 0, 1) ==
          matching_distance(phi1, phi2, c, grid, 0, 4));
}

TEST_CASE("diagonal line on the 64-gon separates (x,y) from (x,x)") {
    const EmbeddedMesh circle = circle_mesh(64);
    const ScalarField x = projection_field(circle, Axis::X);
    const ScalarField y = projection_field(circle, Axis::Y);
    const FilteringLine diagonal = FilteringLine::from_angle(kQuarterPi, 0.0);

    const PersistenceDiagram d1 = compute_persistence(
        lower_star_filtration(circle.complex, push_to_line(Bifunction(x, y), diagonal)), 0);
    const PersistenceDiagram d2 = compute_persistence(
        lower_star_filtration(circle.complex, push_to_line(Bifunction(x, x), diagonal)), 0);

    REQUIRE(d1.essential_births().size() == 1);
    // the vertex at 5/8 of the turn has both coordinates -1/sqrt(2)
    CHECK(d1.essential_births()[0] == doctest::Approx(-kInvSqrt2).epsilon(1e-14));
    // the second component is born at the vertex on the main diagonal and
    // dies when the sublevel set reaches either unit pole
    REQUIRE(d1.finite_pairs().size() == 1);
    CHECK(d1.finite_pairs()[0].first == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(d1.finite_pairs()[0].second == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(d2.essential_births().size() == 1);
    CHECK(d2.essential_births()[0] == -1.0);
    CHECK(d2.finite_pairs().empty());

    const double d = bottleneck_distance(d1, d2).value();
    CHECK(d == doctest::Approx(1.0 - kInvSqrt2).epsilon(1e-12));
}
