#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "topocorr/bottleneck.hpp"
#include "topocorr/errors.hpp"

using namespace topocorr;

namespace {
constexpr double kInvSqrt2 = 0.7071067811865476;
}

TEST_CASE("identical diagrams are at distance zero") {
    const PersistenceDiagram d({{0.0, 2.0}, {-1.0, 0.5}}, {-3.0, 1.0});
    CHECK(bottleneck_distance(d, d) == ExtendedDistance::finite(0.0));
}

TEST_CASE("a single pair against the empty diagram pays half its persistence") {
    const PersistenceDiagram d({{0.0, 2.0}}, {});
    const PersistenceDiagram empty;
    CHECK(bottleneck_distance(d, empty).value() == 1.0);
    CHECK(bottleneck_distance(empty, d).value() == 1.0);
}

TEST_CASE("essential classes match by birth difference") {
    const PersistenceDiagram a({}, {-1.0});
    const PersistenceDiagram b({}, {-kInvSqrt2});
    CHECK(bottleneck_distance(a, b).value() == doctest::Approx(1.0 - kInvSqrt2).epsilon(1e-15));
}

TEST_CASE("mismatched essential counts are incomparable") {
    const PersistenceDiagram a({}, {0.0});
    const PersistenceDiagram empty;
    const ExtendedDistance d = bottleneck_distance(a, empty);
    CHECK(d.is_infinite());
    CHECK_THROWS_AS(d.value(), IncomparableDiagramsError);
}

TEST_CASE("zero-persistence pairs never reach the distance") {
    const PersistenceDiagram degenerate({{1.0, 1.0}}, {});
    CHECK(degenerate.empty());
    CHECK(bottleneck_distance(degenerate, PersistenceDiagram{}).value() == 0.0);
}

TEST_CASE("oracle on the two-matchings example") {
    const PersistenceDiagram a({{0.0, 2.0}}, {});
    const PersistenceDiagram b({{0.0, 3.0}}, {});
    CHECK(bottleneck_oracle(a, b).value() == 1.0);
    CHECK(bottleneck_distance(a, b).value() == 1.0);
}

TEST_CASE("oracle on empty diagrams and size guard") {
    const PersistenceDiagram empty;
    CHECK(bottleneck_oracle(empty, empty).value() == 0.0);
    const PersistenceDiagram big({{0.0, 1.0},
                                  {0.1, 1.1},
                                  {0.2, 1.2},
                                  {0.3, 1.3},
                                  {0.4, 1.4}},
                                 {});
    CHECK_THROWS_AS(bottleneck_oracle(big, big), OracleSizeError);
}

TEST_CASE("bottleneck distance is symmetric and self-distance is zero") {
    testing::Rng rng(9001);
    for (int trial = 0; trial < 50; ++trial) {
        const PersistenceDiagram a = testing::random_diagram(rng, 4);
        const PersistenceDiagram b = testing::random_diagram(rng, 4);
        const ExtendedDistance ab = bottleneck_distance(a, b);
        const ExtendedDistance ba = bottleneck_distance(b, a);
        CHECK(ab == ba);
        CHECK(bottleneck_distance(a, a).value() == 0.0);
    }
}

TEST_CASE("triangle inequality on random small diagrams") {
    testing::Rng rng(9002);
    std::uniform_int_distribution<int> essential_dist(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int essentials = essential_dist(rng);
        const PersistenceDiagram a = testing::random_diagram(rng, 3, essentials);
        const PersistenceDiagram b = testing::random_diagram(rng, 3, essentials);
        const PersistenceDiagram c = testing::random_diagram(rng, 3, essentials);
        const double ab = bottleneck_distance(a, b).value();
        const double bc = bottleneck_distance(b, c).value();
        const double ac = bottleneck_distance(a, c).value();
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("algorithm equals the exhaustive oracle on random pairs") {
    testing::Rng rng(9003);
    for (int trial = 0; trial < 100; ++trial) {
        const PersistenceDiagram a = testing::random_diagram(rng, 4);
        const PersistenceDiagram b = testing::random_diagram(rng, 4);
        CHECK(bottleneck_distance(a, b) == bottleneck_oracle(a, b));
    }
}
