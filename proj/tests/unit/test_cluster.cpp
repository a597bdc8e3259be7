#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conifold/cluster.hpp"
#include "fixtures.hpp"

using namespace conifold;
using Complex = std::complex<double>;

TEST_SUITE("cluster") {

TEST_CASE("coordinates exponentiate central charges") {
    const auto s = fg_coords({0.0, {0.25, 0.0}}, 1.0);
    CHECK(s.coordinates[0] == Complex(1.0, 0.0));
    CHECK(std::abs(s.coordinates[1] - Complex(0.0, 1.0)) < 1e-15);
    CHECK(s.central_charges.has_value());
}

TEST_CASE("X = (1, 1) at lambda = 1 maps to (2, 1) exactly") {
    const auto s = fg_coords({0.0, 0.0}, 1.0);
    const auto m = fg_mutate(s, 1);
    CHECK(m.coordinates[0] == Complex(2.0, 0.0));
    CHECK(m.coordinates[1] == Complex(1.0, 0.0));
    CHECK(m.mutated);
    CHECK_FALSE(m.central_charges.has_value());
}

TEST_CASE("mutation is the identity iff lambda is zero") {
    const std::vector<std::vector<Complex>> charges{{0.0, 0.0}, {{0.1, 0.2}, {-0.3, 0.05}}, {{0.7, 0.0}, {0.2, 0.1}}};
    for (const auto& z : charges) {
        const auto s = fg_coords(z, {1.0, 0.5});
        CHECK(fg_mutate(s, 0).coordinates == s.coordinates);
        for (long lam : {-2L, -1L, 1L, 3L}) CHECK(fg_mutate(s, lam).coordinates != s.coordinates);
    }
}

TEST_CASE("X2 = -1 is flagged as degenerate") {
    const auto s = fg_coords({0.1, 0.5}, 1.0);
    CHECK(std::abs(s.coordinates[1] + 1.0) < 1e-15);
    const auto m = fg_mutate(s, 1);
    CHECK(m.degenerate);
    CHECK(std::abs(m.coordinates[0]) < 1e-12);
}

TEST_CASE("linear transport versus cluster value") {
    const std::vector<Complex> z{{0.1, 0.02}, {0.3, -0.1}};
    const Complex zz(1.5, 0.25);
    const auto s = fg_coords(z, zz);
    const auto cmp = mutate_and_compare(fixtures::a2(), s);
    CHECK(cmp.lambda12 == 1);
    const Complex tpi(0.0, 2.0 * std::numbers::pi);
    CHECK(std::abs(cmp.linear_transport - std::exp(tpi * (z[0] - z[1]) / zz)) < 1e-12);
    CHECK(std::abs(cmp.cluster_value - s.coordinates[0] * (1.0 + s.coordinates[1])) < 1e-12);
    CHECK(cmp.discrepancy == doctest::Approx(std::abs(cmp.linear_transport - cmp.cluster_value)));
    CHECK(cmp.mutated_config.cycle(0) == make_vector({1, 0, -1, 0}));

    const auto flat = mutate_and_compare(fixtures::a1xa1(), s);
    CHECK(flat.lambda12 == 0);
    CHECK(std::abs(flat.linear_transport - s.coordinates[0]) < 1e-12);
}

}
