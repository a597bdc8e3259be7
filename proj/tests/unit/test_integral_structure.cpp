#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conifold/config.hpp"
#include "conifold/errors.hpp"
#include "conifold/integral_structure.hpp"
#include "conifold/pl_stokes.hpp"
#include "fixtures.hpp"

using namespace conifold;

namespace {

const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

KDataBlock sample() { return load_config(CONIFOLD_CONFIG_DIR "/kdata_sample.json").kdata.value(); }

}

TEST_SUITE("integral_structure") {

TEST_CASE("Gamma class coefficients") {
    const auto g = gamma_class(1.0, 0.0);
    CHECK(std::abs(g.coefficients[0] - 1.0) < 1e-15);
    CHECK(std::abs(g.coefficients[1]) == 0.0);
    // zeta(2) / (2 pi i)^2 = -1/24
    CHECK(std::abs(g.coefficients[2] - (-1.0 / 24.0)) < 1e-15);
    const auto h = gamma_class(0.0, 2.0);
    const Complex z3 = kZeta3 / std::pow(kTwoPiI, 3);
    CHECK(std::abs(h.coefficients[3] - 2.0 * z3) < 1e-15);
    CHECK(std::abs(kZeta3 - 1.2020569031595942) < 1e-16);
}

TEST_CASE("symbolic Gamma class is exact and evaluates consistently") {
    const auto s = gamma_class_symbolic(Rational(7, 3), Rational(-2));
    CHECK(s.zeta2_coefficient == Rational(7, 3));
    CHECK(s.zeta3_coefficient == -2);
    const auto e = s.evaluate();
    const auto n = gamma_class(7.0 / 3.0, -2.0);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(e.coefficients[k] - n.coefficients[k]) < 1e-15);
}

TEST_CASE("cup product is a truncated convolution") {
    const GradedVector a{1.0, 2.0, 0.0, 1.0};
    const GradedVector b{1.0, 3.0, 5.0, 0.0};
    const auto c = cup(a, b);
    CHECK(c[0] == Complex(1.0));
    CHECK(c[1] == Complex(5.0));
    CHECK(c[2] == Complex(11.0));
    CHECK(c[3] == Complex(1.0 + 10.0));
}

TEST_CASE("Iritani map scales degree 2k by (2 pi i)^-k") {
    const GradedVector ch{1.0, 1.0, 0.5, 1.0 / 6.0};
    const auto trivial = gamma_class(0.0, 0.0);
    const auto s = iritani_map(ch, trivial);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(std::abs(s[k] - ch[k] / std::pow(kTwoPiI, static_cast<int>(k))) < 1e-15);
    const auto g = gamma_class(1.0, 0.0);
    const auto t = iritani_map({1.0, 0.0, 0.0, 0.0}, g);
    CHECK(std::abs(t[2] - g.coefficients[2] / std::pow(kTwoPiI, 2)) < 1e-15);
}

TEST_CASE("N_int is rank at most one and squares to a multiple of itself") {
    const std::vector<std::pair<QVector, QVector>> inputs{
        {make_vector({0, 1, 1, 0}), make_vector({0, -1, -1, 0})},
        {make_vector({1, 2, 3, 4}), make_vector({-1, 0, 2, 1})},
        {make_vector({0, 0, 0, 0}), make_vector({1, 2, 3, 4})},
        {make_vector({1, 0}), make_vector({0, 1})},
    };
    for (const auto& [a, b] : inputs) {
        const auto r = n_int(a, b);
        CHECK(r.rank <= 1);
        CHECK(r.contraction == dot(a, b));
        CHECK(r.matrix * r.matrix == r.contraction * r.matrix);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) CHECK(r.matrix(i, j) == a[i] * b[j]);
    }
    CHECK(n_int(make_vector({1, 0}), make_vector({0, 1})).unipotent);
    CHECK(n_int(make_vector({0, 0, 0, 0}), make_vector({1, 2, 3, 4})).rank == 0);
    CHECK_THROWS_AS(n_int(make_vector({1, 2}), make_vector({1})), InputError);
}

TEST_CASE("spherical twist") {
    const QMatrix x{{0, 1}, {-1, 0}};
    const auto s = make_vector({1, 0});
    const auto g = make_vector({0, 1});
    // chi(S, g) = 1, so T_S g = g - S
    CHECK(spherical_twist(g, s, x) == make_vector({-1, 1}));
    CHECK(spherical_twist(s, s, x) == s);
}

TEST_CASE("decategorification square on the bundled sample") {
    const auto cfg = load_config(CONIFOLD_CONFIG_DIR "/kdata_sample.json");
    const auto k = cfg.kdata.value();
    const auto rep = decategorification_check(k.data, cfg.cycles, k.node);
    CHECK(rep.premise_spherical);
    CHECK(rep.premise_pairing);
    CHECK(rep.square_commutes);
    CHECK(rep.classes_checked == 4);

    // chi vectors in the sample are the rows of X against S
    const auto& x = *k.data.euler_pairing;
    const auto& s = *k.data.spherical;
    CHECK(x * s == k.data.chi_with_s);
    CHECK(x.transpose() * s == k.data.chi_s_with);

    // the twist is even in S, so the opposite sign still commutes
    auto flipped = k.data;
    flipped.spherical = make_vector({1, 0, 0, 0});
    const auto rf = decategorification_check(flipped, cfg.cycles, k.node);
    CHECK_FALSE(rf.premise_spherical);
    CHECK(rf.square_commutes);

    auto broken = k.data;
    broken.spherical = make_vector({0, 1, 0, 0});
    const auto bad = decategorification_check(broken, cfg.cycles, k.node);
    CHECK_FALSE(bad.premise_spherical);
    CHECK_FALSE(bad.square_commutes);
}

TEST_CASE("pairing compatibility") {
    const QMatrix chi{{0, 1}, {-1, 0}};
    CHECK(pairing_compatibility(chi, -chi).pass);
    const auto off = pairing_compatibility(chi, chi);
    CHECK_FALSE(off.pass);
    CHECK(off.max_violation == doctest::Approx(2.0));

    const std::vector<std::vector<Complex>> c{{0.0, 1.0}, {-1.0, 0.0}};
    const std::vector<std::vector<Complex>> f{{0.0, -1.0}, {1.0 + 1e-12, 0.0}};
    CHECK(pairing_compatibility(c, f).pass);
    CHECK_FALSE(pairing_compatibility(c, f, 1e-14).pass);

    const std::vector<GradedVector> sols{{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
    std::vector<std::vector<Complex>> g(4, std::vector<Complex>(4, 0.0));
    g[0][3] = -1.0;
    g[3][0] = 1.0;
    CHECK(pairing_compatibility(c, sols, g).pass);
}

TEST_CASE("sample loads through the config layer") { CHECK(sample().node == 0); }

}
