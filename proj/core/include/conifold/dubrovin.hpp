#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "conifold/lattice.hpp"
#include "conifold/ode.hpp"
#include "conifold/rational.hpp"

namespace conifold {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

/// Quantum cohomology data of the resolved conifold in the basis
/// e0 = 1, e1 = H, e2 = H^2, e3 = [pt].
struct FrobeniusData {
    std::array<std::string, 4> labels{"e0", "e1", "e2", "e3"};
    std::array<int, 4> degrees{0, 2, 4, 6};
    QMatrix eta;
    Complex z{1.0, 0.0};
    /// f(q) = (1 + 2q) / (1 + q), coefficients in increasing powers of q.
    std::vector<long> f_numerator{1, 2};
    std::vector<long> f_denominator{1, 1};

    static FrobeniusData resolved_conifold(Complex z = {1.0, 0.0});
    /// Throws InputError unless eta is symmetric and nondegenerate, z != 0 and f(0) = 1.
    void validate() const;
};

struct GwValue {
    Complex value;
    bool in_domain = true; // |q| < 1; outside it the partial sum is returned as-is
};

/// t1^3/6 + sum_{d=1..terms} (-1)^{d-1} q^d / d^3.
GwValue gw_potential(Complex t1, Complex q, int terms);

/// f(q) = 1 + sum_{d=1..terms} (-1)^{d-1} q^d.
Complex f_series(Complex q, int terms);
Complex f_closed(Complex q);
Rational f_closed(const Rational& q);

/// Quantum multiplication matrix A(q): subdiagonal (1, f(q), 1). Throws
/// PoleError at q = -1.
Matrix4c quantum_mult_matrix(Complex q);
QMatrix quantum_mult_matrix(const Rational& q);

/// A(q) = A_hol + A_pole / u with u = q + 1.
struct LocalForm {
    QMatrix hol;
    QMatrix pole;
};

LocalForm local_form();

/// Checks u * num(u - 1) == (hol * u + pole) * den(u - 1) entrywise as
/// polynomials in u, i.e. the local form as an identity of rational functions.
bool verify_local_form_identity();

/// Residue at q = -1 of the connection matrix (1/z) A(q) dq, i.e. A_pole / z.
Matrix4c connection_residue(Complex z);

enum class Orientation { ccw, cw };

struct LoopOptions {
    Complex z{1.0, 0.0};
    double radius = 0.3;
    double tol = 1e-10;
    std::size_t max_steps = 200000;
    Orientation orientation = Orientation::ccw;
};

struct MonodromyResult {
    LoopOptions loop;
    Complex center{-1.0, 0.0};
    Complex base_point;

    /// Y(2 pi) with Y = Id at the base point q = -1 + radius.
    Matrix4c monodromy;
    /// The same monodromy in the Frobenius frame Y = H(u) u^R, H(0) = Id, which
    /// does not depend on the base point.
    Matrix4c canonical;

    double residual_unipotency = 0.0; // ||(M - Id)^2||_F
    double deviation_norm = 0.0;      // ||M - Id||_F
    double relative_unipotency = 0.0; // residual / deviation
    std::array<double, 4> singular_values{};   // of M - Id, descending
    std::array<double, 4> eigenvalue_deviations{}; // |lambda_i - 1|
    double rank_threshold = 0.0;
    std::size_t numerical_rank = 0;
    double canonical_model_deviation = 0.0; // ||canonical - exp(+-2 pi i R)||_F

    ode::Stats steps;
};

/// Transports a fundamental matrix once around q = -1 on the circle of the
/// given radius, solving Y' = -(1/z) A(q) Y with adaptive Dormand-Prince steps.
MonodromyResult integrate_loop(const LoopOptions& options);

/// Frobenius-frame normalization C = H(u0) u0^R at the base point u0 = radius,
/// so that canonical = C^{-1} monodromy C.
Matrix4c frobenius_frame(Complex z, double radius);

/// Eigenvalues, reading the diagonal of exactly triangular matrices.
std::array<Complex, 4> eigenvalues(const Matrix4c& m);

/// Jordan block sizes (descending) of a nilpotent matrix from ranks of powers.
std::vector<std::size_t> jordan_type_exact(const QMatrix& nilpotent);
std::vector<std::size_t> jordan_type_numeric(const Matrix4c& nilpotent, double threshold);
std::size_t numerical_rank(const Matrix4c& m, double threshold);

struct PlComparison {
    bool numerical_unipotent = false;
    std::size_t numerical_log_rank = 0;
    std::size_t pl_log_rank = 0;
    std::vector<std::size_t> numerical_jordan;
    std::vector<std::size_t> pl_jordan;
    bool agree = false;
};

/// Compares conjugacy invariants of the numerical monodromy with those of
/// Id + (2 pi i / z) N for a single-node configuration.
PlComparison monodromy_vs_pl(const MonodromyResult& result, const CycleConfig& config, Complex z);

} // namespace conifold
