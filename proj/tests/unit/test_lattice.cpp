#include <doctest.h>

#include <algorithm>

#include "conifold/errors.hpp"
#include "conifold/lattice.hpp"
#include "conifold/random_config.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace conifold;

TEST_SUITE("lattice") {

TEST_CASE("rationals parse canonically and reject decimals") {
    CHECK(format_rational(parse_rational("3/6")) == "1/2");
    CHECK(format_rational(parse_rational("-4")) == "-4");
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(parse_rational("0/5")) == "0");
    for (const char* bad : {"0.5", "1/0", "1e3", "", "abc", "1/2/3", "6/-4"}) {
        CHECK_THROWS_AS(parse_rational(bad), InputError);
    }
}

TEST_CASE("rank, determinant and kernel on small matrices") {
    const QMatrix a{{2, 1}, {1, 1}};
    CHECK(a.determinant() == 1);
    CHECK(a.rank() == 2);

    const QMatrix row{{1, 2, 3}};
    const auto ker = row.kernel();
    REQUIRE(ker.size() == 2);
    for (const auto& k : ker) CHECK(is_zero(row * k));
    CHECK(span_rank(ker, 3) == 2);

    const QMatrix sing{{1, 2}, {2, 4}};
    CHECK(sing.determinant() == 0);
    CHECK(sing.rank() == 1);

    // 3x3 determinant against cofactor expansion
    const QMatrix m{{2, -1, 3}, {0, 4, 1}, {5, 2, -2}};
    const long cof = 2 * (4 * -2 - 1 * 2) - (-1) * (0 * -2 - 1 * 5) + 3 * (0 * 2 - 4 * 5);
    CHECK(m.determinant() == cof);
}

TEST_CASE("pairing must be skew") {
    CHECK_THROWS_WITH_AS(IntersectionLattice(QMatrix{{0, 1}, {1, 0}}), "pairing not skew-symmetric", InputError);
    CHECK_THROWS_AS(IntersectionLattice(QMatrix{{1, 0}, {0, -1}}), InputError);
    CHECK(IntersectionLattice::symplectic(4).nondegenerate());
    CHECK_FALSE(IntersectionLattice(QMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}).nondegenerate());
    CHECK_THROWS_AS(IntersectionLattice::symplectic(3), InputError);
}

TEST_CASE("cycle validation") {
    const auto l = fixtures::sym4();
    CHECK_THROWS_AS(CycleConfig(l, {make_vector({0, 0, 0, 0})}), InputError);
    CHECK_THROWS_AS(CycleConfig(l, {make_vector({1, 0, 0})}), InputError);
    const CycleConfig dup(l, {make_vector({1, 0, 0, 0}), make_vector({2, 0, 0, 0})});
    CHECK(dup.cycle_span_rank() == 1);
    CHECK_FALSE(dup.cycles_independent());
}

TEST_CASE("intersection matrix of A2") {
    const auto lam = intersection_matrix(fixtures::a2());
    CHECK(lam(0, 1) == 1);
    CHECK(lam(1, 0) == -1);
    CHECK(lam(0, 0) == 0);
    CHECK(lam.matrix().is_skew());
    CHECK(intersection_matrix(fixtures::a1xa1()).off_diagonal_zero());
}

TEST_CASE("intersection matrix agrees with the pairing oracle on the corpus") {
    for (const auto& c : fixtures::corpus()) {
        const auto o = oracle::from(c);
        const auto lam = intersection_matrix(c);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                REQUIRE(lam(i, j) == static_cast<long>(oracle::pairing(o.p, o.cycles[i], o.cycles[j])));
    }
}

TEST_CASE("orthogonal complement") {
    const auto c = fixtures::a2();
    const auto comp = orthogonal_complement(c);
    CHECK(comp.size() == 2);
    for (const auto& v : comp)
        for (const auto& d : c.cycles()) CHECK(pair(c.lattice(), v, d) == 0);

    const CycleConfig empty(fixtures::sym4(), {});
    CHECK(orthogonal_complement(empty).size() == 4);
}

TEST_CASE("random corpus respects its bounds and is reproducible") {
    const auto& corpus = fixtures::corpus();
    REQUIRE(corpus.size() == 200);
    std::size_t unit = 0;
    for (const auto& c : corpus) {
        CHECK(c.rank() <= 8);
        CHECK(c.size() >= 1);
        CHECK(c.size() <= 4);
        const auto& p = c.lattice().pairing();
        CHECK(p.is_skew());
        for (std::size_t i = 0; i < c.rank(); ++i)
            for (std::size_t j = 0; j < c.rank(); ++j) CHECK(abs(p(i, j)) <= 3);
        for (const auto& d : c.cycles())
            for (const auto& x : d) CHECK(abs(x) <= 3);
        const auto lam = intersection_matrix(c);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) unit += abs(lam(i, j)) == 1;
    }
    CHECK(unit > 0);

    const auto again = random_corpus(20261016, 200);
    for (std::size_t k = 0; k < again.size(); ++k) {
        CHECK(again[k].lattice().pairing() == corpus[k].lattice().pairing());
        CHECK(again[k].cycles() == corpus[k].cycles());
    }
}

}
