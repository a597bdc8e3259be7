#include "conifold/integral_structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conifold/errors.hpp"
#include "conifold/pl_stokes.hpp"

namespace conifold {

namespace {

using C = std::complex<double>;
const C kTwoPiI{0.0, 2.0 * std::numbers::pi};
const double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

using CMatrix = std::vector<std::vector<C>>;

void check_square(const CMatrix& m, std::size_t n, const char* what) {
    if (m.size() != n) throw InputError(std::string(what) + ": inconsistent dimensions");
    for (const auto& row : m)
        if (row.size() != n) throw InputError(std::string(what) + ": inconsistent dimensions");
}

PairingCompatibility compare_gram(const CMatrix& chi, const CMatrix& gram, double tol) {
    PairingCompatibility out;
    for (std::size_t i = 0; i < chi.size(); ++i)
        for (std::size_t j = 0; j < chi.size(); ++j)
            out.max_violation = std::max(out.max_violation, std::abs(chi[i][j] + gram[i][j]));
    out.pass = out.max_violation <= tol;
    return out;
}

} // namespace

GammaClass gamma_class(C ch2, C ch3) {
    GammaClass g;
    g.ch2 = ch2;
    g.ch3 = ch3;
    g.coefficients[0] = 1.0;
    g.coefficients[1] = 0.0; // c1 = 0
    g.coefficients[2] = kZeta2 / (kTwoPiI * kTwoPiI) * ch2;
    g.coefficients[3] = kZeta3 / (kTwoPiI * kTwoPiI * kTwoPiI) * ch3;
    return g;
}

GammaSymbolic gamma_class_symbolic(const Rational& ch2, const Rational& ch3) { return {ch2, ch3}; }

GammaClass GammaSymbolic::evaluate() const {
    return gamma_class(zeta2_coefficient.get_d(), zeta3_coefficient.get_d());
}

GradedVector cup(const GradedVector& a, const GradedVector& b) {
    GradedVector out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; i + j < 4; ++j) out[i + j] += a[i] * b[j];
    return out;
}

GradedVector iritani_map(const GradedVector& ch, const GammaClass& gamma) {
    GradedVector s = cup(ch, gamma.coefficients);
    C scale = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
        s[k] *= scale;
        scale /= kTwoPiI;
    }
    return s;
}

NIntResult n_int(const QVector& chi_with_s, const QVector& chi_s_with) {
    if (chi_with_s.size() != chi_s_with.size()) throw InputError("chi vectors differ in length");
    NIntResult out;
    out.matrix = QMatrix::outer(chi_with_s, chi_s_with);
    out.contraction = dot(chi_s_with, chi_with_s);
    out.rank = out.matrix.rank();
    out.unipotent = out.contraction == 0;
    return out;
}

QVector spherical_twist(const QVector& gamma, const QVector& s, const QMatrix& euler_pairing) {
    if (euler_pairing.rows() == 0) throw InputError("spherical twist needs an Euler pairing matrix");
    if (!euler_pairing.square() || euler_pairing.rows() != gamma.size() || s.size() != gamma.size()) {
        throw InputError("spherical twist: inconsistent dimensions");
    }
    const Rational chi = dot(s, euler_pairing * gamma);
    return add(gamma, scaled(s, -chi));
}

DecategorificationReport decategorification_check(const KClassData& kdata, const CycleConfig& config,
                                                  std::size_t node) {
    if (!kdata.euler_pairing || !kdata.correspondence || !kdata.spherical) {
        throw InputError("decategorification check needs euler_pairing, correspondence and spherical");
    }
    const QMatrix& x = *kdata.euler_pairing;
    const QMatrix& c = *kdata.correspondence;
    const QVector& s = *kdata.spherical;
    if (c.rows() != config.rank() || c.cols() != s.size() || x.rows() != s.size()) {
        throw InputError("decategorification check: inconsistent dimensions");
    }

    DecategorificationReport rep;
    rep.premise_spherical = c * s == scaled(config.cycle(node), -1);
    rep.premise_pairing = x == c.transpose() * config.lattice().pairing() * c;

    const QMatrix t = pl_operator(config, node);
    rep.square_commutes = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const QVector e = unit_vector(s.size(), i);
        const QVector lhs = c * spherical_twist(e, s, x);
        const QVector rhs = t * (c * e);
        rep.square_commutes = rep.square_commutes && lhs == rhs;
        ++rep.classes_checked;
    }
    return rep;
}

PairingCompatibility pairing_compatibility(const QMatrix& chi, const QMatrix& flat_pairing) {
    if (!chi.square() || chi.rows() != flat_pairing.rows() || chi.cols() != flat_pairing.cols()) {
        throw InputError("pairing compatibility: inconsistent dimensions");
    }
    PairingCompatibility out;
    const QMatrix violation = chi + flat_pairing;
    out.pass = violation.is_zero();
    for (std::size_t i = 0; i < chi.rows(); ++i)
        for (std::size_t j = 0; j < chi.cols(); ++j)
            out.max_violation = std::max(out.max_violation, std::abs(violation(i, j).get_d()));
    return out;
}

PairingCompatibility pairing_compatibility(const CMatrix& chi, const CMatrix& flat, double tol) {
    check_square(chi, chi.size(), "chi");
    check_square(flat, chi.size(), "flat pairing");
    return compare_gram(chi, flat, tol);
}

PairingCompatibility pairing_compatibility(const CMatrix& chi, const std::vector<GradedVector>& solutions,
                                           const CMatrix& flat_metric, double tol) {
    check_square(chi, solutions.size(), "chi");
    check_square(flat_metric, 4, "flat metric");
    CMatrix gram(solutions.size(), std::vector<C>(solutions.size()));
    for (std::size_t a = 0; a < solutions.size(); ++a)
        for (std::size_t b = 0; b < solutions.size(); ++b)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    gram[a][b] += solutions[a][i] * flat_metric[i][j] * solutions[b][j];
    return compare_gram(chi, gram, tol);
}

} // namespace conifold
