#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conifold/dubrovin.hpp"
#include "conifold/errors.hpp"
#include "conifold/pl_stokes.hpp"
#include "fixtures.hpp"

using namespace conifold;

namespace {

/// Residue computation of the transport from q = -1 + rho once around q = -1:
/// M = Id + v w^T with v = (0, 0, 2 pi i / z, -2 pi i rho / z^2), w = (rho / z, 1, 0, 0).
Matrix4c closed_form_monodromy(Complex z, double rho) {
    const Complex tpi(0.0, 2.0 * std::numbers::pi);
    Eigen::Matrix<Complex, 4, 1> v(0.0, 0.0, tpi / z, -tpi * rho / (z * z));
    Eigen::Matrix<Complex, 4, 1> w(rho / z, 1.0, 0.0, 0.0);
    return Matrix4c::Identity() + v * w.transpose();
}

}

TEST_SUITE("dubrovin") {

TEST_CASE("Frobenius data") {
    const auto d = FrobeniusData::resolved_conifold();
    CHECK_NOTHROW(d.validate());
    CHECK(d.eta(1, 2) == 1);
    CHECK(d.eta(0, 3) == 1);
    CHECK(d.eta(0, 0) == 0);
    CHECK(d.eta.is_symmetric());
    auto bad = d;
    bad.z = 0.0;
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("f series matches closed form on |q| <= 0.5") {
    double worst = 0.0;
    for (int a = 0; a < 24; ++a)
        for (double rad : {0.0, 0.1, 0.25, 0.4, 0.5}) {
            const Complex q = std::polar(rad, 2.0 * std::numbers::pi * a / 24.0);
            worst = std::max(worst, std::abs(f_series(q, 40) - f_closed(q)));
        }
    CHECK(worst < 1e-10);
    CHECK(f_closed(Rational(1, 2)) == Rational(4, 3));
    CHECK_THROWS_AS(f_closed(Rational(-1)), PoleError);
}

TEST_CASE("GW potential partial sums") {
    const auto at0 = gw_potential(Complex(2.0, 0.0), 0.0, 10);
    CHECK(std::abs(at0.value - 8.0 / 6.0) < 1e-15);
    const Complex q(0.3, 0.1);
    Complex expected = 0.0;
    for (int d = 1; d <= 30; ++d) expected += (d % 2 ? 1.0 : -1.0) * std::pow(q, d) / std::pow(double(d), 3);
    CHECK(std::abs(gw_potential(0.0, q, 30).value - expected) < 1e-14);
    CHECK_FALSE(gw_potential(0.0, Complex(1.5, 0.0), 5).in_domain);
    // (q d/dq)^3 of the instanton part is the series part of f
    const double h = 1e-3;
    const double t = std::log(0.2);
    auto g = [](double s) { return gw_potential(0.0, std::exp(s), 60).value; };
    const Complex third = (g(t + 2 * h) - 2.0 * g(t + h) + 2.0 * g(t - h) - g(t - 2 * h)) / (2 * h * h * h);
    CHECK(std::abs(third - (f_closed(Complex(0.2, 0.0)) - 1.0)) < 1e-5);
}

TEST_CASE("quantum multiplication matrix") {
    const QMatrix a = quantum_mult_matrix(Rational(1, 3));
    CHECK(a(1, 0) == 1);
    CHECK(a(2, 1) == Rational(5, 4));
    CHECK(a(3, 2) == 1);
    CHECK(a(0, 0) == 0);
    CHECK_THROWS_AS(quantum_mult_matrix(Complex(-1.0, 0.0)), PoleError);
}

TEST_CASE("local form at the conifold point") {
    const auto lf = local_form();
    CHECK(lf.hol(1, 0) == 1);
    CHECK(lf.hol(2, 1) == 2);
    CHECK(lf.hol(3, 2) == 1);
    QMatrix pole(4, 4);
    pole(2, 1) = -1;
    CHECK(lf.pole == pole);
    CHECK(verify_local_form_identity());
    // pointwise exact check away from the pole
    for (long num : {-7L, -3L, 0L, 1L, 5L, 11L}) {
        Rational q(num, 4);
        q.canonicalize();
        if (q == -1) continue;
        Rational u = q + 1;
        QMatrix rhs = lf.hol;
        rhs += (Rational(1) / u) * lf.pole;
        CHECK(quantum_mult_matrix(q) == rhs);
    }
}

TEST_CASE("raw monodromy matches the residue closed form") {
    for (Complex z : {Complex(1, 0), Complex(2, 0), Complex(0, 1)})
        for (double rho : {0.2, 0.3}) {
            LoopOptions opt;
            opt.z = z;
            opt.radius = rho;
            const auto m = integrate_loop(opt);
            CHECK((m.monodromy - closed_form_monodromy(z, rho)).norm() < 1e-8);
        }
}

TEST_CASE("default loop is unipotent with rank-one logarithm") {
    const auto m = integrate_loop({});
    for (double d : m.eigenvalue_deviations) CHECK(d < 1e-8);
    CHECK(m.relative_unipotency < 1e-8);
    CHECK(m.numerical_rank == 1);
    CHECK(std::abs(m.monodromy.trace() - 4.0) < 1e-8);
    CHECK(m.canonical_model_deviation < 1e-7);
}

TEST_CASE("halving the tolerance changes nothing at 1e-8") {
    LoopOptions a;
    LoopOptions b;
    b.tol = a.tol / 2;
    CHECK((integrate_loop(a).monodromy - integrate_loop(b).monodromy).norm() < 1e-8);
}

TEST_CASE("clockwise loop gives the inverse") {
    LoopOptions cw;
    cw.orientation = Orientation::cw;
    const auto fwd = integrate_loop({});
    const auto back = integrate_loop(cw);
    CHECK((fwd.monodromy * back.monodromy - Matrix4c::Identity()).norm() < 1e-8);
}

TEST_CASE("canonical frame is base-point free and scales with 1/z") {
    LoopOptions a;
    a.radius = 0.2;
    LoopOptions b;
    b.radius = 0.5;
    const auto ma = integrate_loop(a);
    const auto mb = integrate_loop(b);
    CHECK((ma.canonical - mb.canonical).norm() < 1e-7);
    LoopOptions c;
    c.z = 2.0;
    const auto mc = integrate_loop(c);
    const double ratio = (mc.canonical - Matrix4c::Identity()).norm() / (ma.canonical - Matrix4c::Identity()).norm();
    CHECK(std::abs(ratio - 0.5) < 1e-6);
    // canonical M = Id + (2 pi i / z) * residue direction
    Matrix4c model = Matrix4c::Identity();
    model(2, 1) = Complex(0.0, 2.0 * std::numbers::pi);
    CHECK((ma.canonical - model).norm() < 1e-7);
}

TEST_CASE("loop preconditions") {
    LoopOptions big;
    big.radius = 1.0;
    CHECK_THROWS_WITH_AS(integrate_loop(big), "loop would enclose q=0", InputError);
    LoopOptions zero;
    zero.z = 0.0;
    CHECK_THROWS_AS(integrate_loop(zero), InputError);
    LoopOptions neg;
    neg.radius = -0.1;
    CHECK_THROWS_AS(integrate_loop(neg), InputError);
    LoopOptions starved;
    starved.max_steps = 3;
    CHECK_THROWS_AS(integrate_loop(starved), ResourceError);
}

TEST_CASE("Jordan type and comparison with the PL operator") {
    const QMatrix n = nilpotent(fixtures::single(), 0);
    CHECK(jordan_type_exact(n) == std::vector<std::size_t>{2, 1, 1});
    CHECK(jordan_type_exact(QMatrix::zero(3, 3)) == std::vector<std::size_t>{1, 1, 1});
    const auto m = integrate_loop({});
    const auto cmp = monodromy_vs_pl(m, fixtures::single(), 1.0);
    CHECK(cmp.agree);
    CHECK(cmp.numerical_log_rank == 1);
    CHECK(cmp.pl_jordan == std::vector<std::size_t>{2, 1, 1});
    CHECK_THROWS_AS(monodromy_vs_pl(m, fixtures::a2(), 1.0), InputError);
}

TEST_CASE("triangular eigenvalues are exact") {
    Matrix4c t = Matrix4c::Identity();
    t(2, 1) = Complex(0.0, 6.0);
    t(3, 0) = 1e-3;
    for (const auto& e : eigenvalues(t)) CHECK(std::abs(e - 1.0) == 0.0);
}

}
