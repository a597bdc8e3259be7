#include "conifold/dubrovin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "conifold/errors.hpp"

namespace conifold {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

/// Dense polynomial in one variable, coefficients by increasing degree.
struct Poly {
    std::vector<Rational> c;

    static Poly constant(const Rational& a) { return Poly{{a}}; }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.assign(std::max(c.size(), o.c.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        return r.trimmed();
    }
    Poly operator*(const Poly& o) const {
        if (c.empty() || o.c.empty()) return {};
        Poly r;
        r.c.assign(c.size() + o.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        return r.trimmed();
    }
    /// p(x + shift)
    Poly shifted(const Rational& shift) const {
        const Poly lin{{shift, Rational(1)}};
        Poly r;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * lin + constant(*it);
        return r.trimmed();
    }
    Poly trimmed() const {
        Poly r = *this;
        while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
        return r;
    }
    bool operator==(const Poly& o) const { return trimmed().c == o.trimmed().c; }
};

Poly to_poly(const std::vector<long>& coeffs) {
    Poly p;
    for (long x : coeffs) p.c.emplace_back(x);
    return p.trimmed();
}

Matrix4c to_complex(const QMatrix& m) {
    Matrix4c out = Matrix4c::Zero();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
    return out;
}

/// exp of a nilpotent matrix by its terminating series.
Matrix4c exp_nilpotent(const Matrix4c& x) {
    Matrix4c term = Matrix4c::Identity();
    Matrix4c sum = Matrix4c::Identity();
    for (int k = 1; k <= 4; ++k) {
        term = term * x / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

/// log of a unipotent matrix, log(Id + X) = X - X^2/2 + ...
Matrix4c log_unipotent(const Matrix4c& m) {
    const Matrix4c x = m - Matrix4c::Identity();
    Matrix4c power = Matrix4c::Identity();
    Matrix4c sum = Matrix4c::Zero();
    for (int k = 1; k <= 4; ++k) {
        power = power * x;
        sum += ((k % 2 == 1) ? 1.0 : -1.0) / k * power;
    }
    return sum;
}

std::vector<std::size_t> jordan_from_ranks(const std::vector<std::size_t>& ranks) {
    // ranks[k] = rank(A^k), ranks[0] = n. Blocks of size >= k: ranks[k-1] - ranks[k].
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
    std::vector<std::size_t> blocks;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        for (std::size_t c = 0; c < at_least[k] - next; ++c) blocks.push_back(k + 1);
    }
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

} // namespace

FrobeniusData FrobeniusData::resolved_conifold(Complex z) {
    FrobeniusData d;
    d.eta = QMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    d.z = z;
    d.validate();
    return d;
}

void FrobeniusData::validate() const {
    if (!eta.is_symmetric()) throw InputError("Poincare pairing is not symmetric");
    if (eta.rows() != 4 || eta.determinant() == 0) throw InputError("Poincare pairing is degenerate");
    if (z == Complex{0.0, 0.0}) throw InputError("z must be nonzero");
    if (f_numerator.empty() || f_denominator.empty() || f_numerator[0] != f_denominator[0]) {
        throw InputError("f(0) must equal 1");
    }
}

GwValue gw_potential(Complex t1, Complex q, int terms) {
    if (terms < 1) throw InputError("series needs at least one term");
    GwValue out;
    out.in_domain = std::abs(q) < 1.0;
    Complex sum = t1 * t1 * t1 / 6.0;
    Complex qd = 1.0;
    for (int d = 1; d <= terms; ++d) {
        qd *= q;
        const double sign = (d % 2 == 1) ? 1.0 : -1.0;
        sum += sign * qd / (static_cast<double>(d) * d * d);
    }
    out.value = sum;
    return out;
}

Complex f_series(Complex q, int terms) {
    Complex sum = 1.0;
    Complex qd = 1.0;
    for (int d = 1; d <= terms; ++d) {
        qd *= q;
        sum += ((d % 2 == 1) ? 1.0 : -1.0) * qd;
    }
    return sum;
}

Complex f_closed(Complex q) {
    if (q == Complex{-1.0, 0.0}) throw PoleError("f has a pole at q = -1");
    return (1.0 + 2.0 * q) / (1.0 + q);
}

Rational f_closed(const Rational& q) {
    if (q == -1) throw PoleError("f has a pole at q = -1");
    Rational r = (1 + 2 * q) / (1 + q);
    r.canonicalize();
    return r;
}

Matrix4c quantum_mult_matrix(Complex q) {
    Matrix4c a = Matrix4c::Zero();
    a(1, 0) = 1.0;
    a(2, 1) = f_closed(q);
    a(3, 2) = 1.0;
    return a;
}

QMatrix quantum_mult_matrix(const Rational& q) {
    QMatrix a(4, 4);
    a(1, 0) = 1;
    a(2, 1) = f_closed(q);
    a(3, 2) = 1;
    return a;
}

LocalForm local_form() {
    // f(q) = 2 - 1/u with u = q + 1
    LocalForm lf{QMatrix{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}},
                 QMatrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}}};
    return lf;
}

bool verify_local_form_identity() {
    const auto fd = FrobeniusData::resolved_conifold();
    const LocalForm lf = local_form();
    const Poly u{{Rational(0), Rational(1)}};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Poly num;
            Poly den = Poly::constant(1);
            if ((i == 1 && j == 0) || (i == 3 && j == 2)) {
                num = Poly::constant(1);
            } else if (i == 2 && j == 1) {
                num = to_poly(fd.f_numerator);
                den = to_poly(fd.f_denominator);
            }
            // q = u - 1
            const Poly num_u = num.shifted(-1);
            const Poly den_u = den.shifted(-1);
            const Poly lhs = u * num_u;
            const Poly rhs = (Poly::constant(lf.hol(i, j)) * u + Poly::constant(lf.pole(i, j))) * den_u;
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

Matrix4c connection_residue(Complex z) {
    if (z == Complex{0.0, 0.0}) throw InputError("z must be nonzero");
    return to_complex(local_form().pole) / z;
}

Matrix4c frobenius_frame(Complex z, double radius) {
    const LocalForm lf = local_form();
    // Y' = (R/u + B) Y with R = -A_pole/z, B = -A_hol/z (constant).
    const Matrix4c r = -to_complex(lf.pole) / z;
    const Matrix4c b = -to_complex(lf.hol) / z;
    const double u0 = radius;

    // u H' = [R, H] + u B H, H(0) = Id; solve (k - ad_R) H_k = B H_{k-1}.
    Matrix4c h_prev = Matrix4c::Identity();
    Matrix4c h_sum = Matrix4c::Identity();
    double u_pow = 1.0;
    for (int k = 1; k < 200; ++k) {
        const Matrix4c rhs = b * h_prev;
        Matrix4c term = rhs / static_cast<double>(k);
        Matrix4c hk = term;
        for (int m = 1; m <= 4; ++m) {
            term = (r * term - term * r) / static_cast<double>(k);
            hk += term;
        }
        u_pow *= u0;
        h_sum += hk * u_pow;
        h_prev = hk;
        if (hk.norm() * u_pow < 1e-18 * h_sum.norm()) break;
    }
    return h_sum * exp_nilpotent(std::log(u0) * r);
}

std::array<Complex, 4> eigenvalues(const Matrix4c& m) {
    const bool lower = m.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().isZero(0.0);
    const bool upper = m.triangularView<Eigen::StrictlyLower>().toDenseMatrix().isZero(0.0);
    std::array<Complex, 4> out{};
    if (lower || upper) {
        for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = m(i, i);
        return out;
    }
    Eigen::ComplexEigenSolver<Matrix4c> solver(m, false);
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

std::size_t numerical_rank(const Matrix4c& m, double threshold) {
    Eigen::JacobiSVD<Matrix4c> svd(m);
    const auto& s = svd.singularValues();
    return static_cast<std::size_t>((s.array() > threshold).count());
}

std::vector<std::size_t> jordan_type_exact(const QMatrix& nilpotent) {
    std::vector<std::size_t> ranks{nilpotent.rows()};
    QMatrix power = QMatrix::identity(nilpotent.rows());
    while (ranks.back() > 0) {
        power = power * nilpotent;
        const std::size_t r = power.rank();
        if (r == ranks.back()) throw InputError("matrix is not nilpotent");
        ranks.push_back(r);
    }
    return jordan_from_ranks(ranks);
}

std::vector<std::size_t> jordan_type_numeric(const Matrix4c& nilpotent, double threshold) {
    std::vector<std::size_t> ranks{4};
    Matrix4c power = Matrix4c::Identity();
    while (ranks.back() > 0 && ranks.size() <= 5) {
        power = power * nilpotent;
        ranks.push_back(numerical_rank(power, threshold));
    }
    if (ranks.back() != 0) return {};
    return jordan_from_ranks(ranks);
}

MonodromyResult integrate_loop(const LoopOptions& options) {
    if (options.z == Complex{0.0, 0.0}) throw InputError("z must be nonzero");
    if (!(options.radius > 0.0)) throw InputError("radius must be positive");
    if (options.radius >= 1.0) throw InputError("loop would enclose q=0");
    if (!(options.tol > 0.0)) throw InputError("tolerance must be positive");

    MonodromyResult res;
    res.loop = options;
    res.base_point = res.center + options.radius;

    const double sense = options.orientation == Orientation::ccw ? 1.0 : -1.0;
    const Complex inv_z = 1.0 / options.z;
    const double rho = options.radius;
    auto rhs = [&](double theta, const Matrix4c& y) -> Matrix4c {
        const Complex e = std::exp(kI * (sense * theta));
        const Complex q = res.center + rho * e;
        const Complex dq = kI * sense * rho * e;
        return (-inv_z * dq) * (quantum_mult_matrix(q) * y);
    };

    ode::Options opt;
    opt.rtol = options.tol;
    opt.atol = options.tol;
    opt.max_steps = options.max_steps;
    auto sol = ode::integrate(rhs, 0.0, kTwoPi, Matrix4c(Matrix4c::Identity()), opt);
    res.monodromy = sol.y;
    res.steps = sol.stats;

    const Matrix4c id = Matrix4c::Identity();
    const Matrix4c x = res.monodromy - id;
    res.deviation_norm = x.norm();
    res.residual_unipotency = (x * x).norm();
    res.relative_unipotency = res.deviation_norm > 0 ? res.residual_unipotency / res.deviation_norm : 0.0;

    Eigen::JacobiSVD<Matrix4c> svd_m(res.monodromy);
    res.rank_threshold = 1e-6 * std::max(1.0, svd_m.singularValues()(0));
    Eigen::JacobiSVD<Matrix4c> svd_x(x);
    for (int i = 0; i < 4; ++i) res.singular_values[static_cast<std::size_t>(i)] = svd_x.singularValues()(i);
    res.numerical_rank = static_cast<std::size_t>(
        std::count_if(res.singular_values.begin(), res.singular_values.end(),
                      [&](double s) { return s > res.rank_threshold; }));

    const auto ev = eigenvalues(res.monodromy);
    for (std::size_t i = 0; i < 4; ++i) res.eigenvalue_deviations[i] = std::abs(ev[i] - 1.0);

    const Matrix4c c = frobenius_frame(options.z, options.radius);
    res.canonical = c.inverse() * res.monodromy * c;
    const Matrix4c r = -to_complex(local_form().pole) / options.z;
    const Matrix4c model = exp_nilpotent(kI * (sense * kTwoPi) * r);
    res.canonical_model_deviation = (res.canonical - model).norm();
    return res;
}

PlComparison monodromy_vs_pl(const MonodromyResult& result, const CycleConfig& config, Complex z) {
    if (config.size() != 1) throw InputError("monodromy comparison needs a single-node configuration");
    if (z == Complex{0.0, 0.0}) throw InputError("z must be nonzero");
    PlComparison cmp;

    const double max_dev =
        *std::max_element(result.eigenvalue_deviations.begin(), result.eigenvalue_deviations.end());
    cmp.numerical_unipotent = max_dev < 1e-8 && result.relative_unipotency < 1e-8 &&
                              result.deviation_norm > 1e-6;

    const Matrix4c log_m = log_unipotent(result.monodromy);
    cmp.numerical_log_rank = numerical_rank(log_m, result.rank_threshold);
    cmp.numerical_jordan = jordan_type_numeric(result.monodromy - Matrix4c::Identity(), result.rank_threshold);

    // log(Id + (2 pi i / z) N) = (2 pi i / z) N since N^2 = 0; the scalar does
    // not change ranks, so the exact invariants of N are the reference.
    const QMatrix n = QMatrix::outer(config.cycle(0), config.covector(0));
    cmp.pl_log_rank = n.rank();
    cmp.pl_jordan = jordan_type_exact(n);

    cmp.agree = cmp.numerical_unipotent && cmp.numerical_log_rank == cmp.pl_log_rank &&
                cmp.numerical_jordan == cmp.pl_jordan;
    return cmp;
}

} // namespace conifold
