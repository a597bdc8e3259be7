#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conifold/lattice.hpp"
#include "conifold/rational.hpp"

namespace conifold {

/// Even-degree cohomology class truncated at degree 6; slot k holds degree 2k.
using GradedVector = std::array<std::complex<double>, 4>;

inline constexpr double kZeta3 = 1.2020569031595942;

/// Gamma class of a Calabi-Yau threefold, coefficients per degree 0, 2, 4, 6.
struct GammaClass {
    GradedVector coefficients{};
    std::complex<double> ch2;
    std::complex<double> ch3;
};

/// 1 + zeta(2)/(2 pi i)^2 ch2 + zeta(3)/(2 pi i)^3 ch3.
GammaClass gamma_class(std::complex<double> ch2, std::complex<double> ch3);

/// The same class with zeta(2)/(2 pi i)^2 and zeta(3)/(2 pi i)^3 kept as
/// opaque symbols; exact in the rational coefficients.
struct GammaSymbolic {
    Rational zeta2_coefficient; // degree 4
    Rational zeta3_coefficient; // degree 6

    GammaClass evaluate() const;
};

GammaSymbolic gamma_class_symbolic(const Rational& ch2, const Rational& ch3);

/// Truncated graded cup product (degree-indexed convolution).
GradedVector cup(const GradedVector& a, const GradedVector& b);

/// s(gamma) = (2 pi i)^{-deg/2} ch(gamma) cup Gamma.
GradedVector iritani_map(const GradedVector& ch, const GammaClass& gamma);

struct NIntResult {
    QMatrix matrix;       // (N_int)_ij = chi(g_i, S) chi(S, g_j)
    Rational contraction; // c with N_int^2 = c N_int
    std::size_t rank = 0;
    bool unipotent = false; // c == 0
};

NIntResult n_int(const QVector& chi_with_s, const QVector& chi_s_with);

/// T_S(g) = g - chi(S, g) S with chi(u, v) = u^T X v.
QVector spherical_twist(const QVector& gamma, const QVector& s, const QMatrix& euler_pairing);

/// K-theory data for the decategorification check.
///
/// `correspondence` maps K-coordinates to lattice coordinates (the Chern
/// character under the mirror identification).
struct KClassData {
    std::vector<std::string> labels;
    QVector chi_with_s;
    QVector chi_s_with;
    std::optional<QMatrix> euler_pairing;
    std::optional<QMatrix> correspondence;
    std::optional<QVector> spherical;
    std::optional<std::vector<GradedVector>> chern_characters;
};

struct DecategorificationReport {
    bool premise_spherical = false;  // C S == -delta
    bool premise_pairing = false;    // X == C^T P C
    bool square_commutes = false;    // C T_S e_i == T_PL C e_i for every i
    std::size_t classes_checked = 0;
};

DecategorificationReport decategorification_check(const KClassData& kdata, const CycleConfig& config,
                                                  std::size_t node);

struct PairingCompatibility {
    bool pass = false;
    double max_violation = 0.0;
};

/// chi(E, F) == (-1)^3 <s(E), s(F)>_flat, entrywise.
PairingCompatibility pairing_compatibility(const QMatrix& chi, const QMatrix& flat_pairing);
PairingCompatibility pairing_compatibility(const std::vector<std::vector<std::complex<double>>>& chi,
                                           const std::vector<std::vector<std::complex<double>>>& flat,
                                           double tol = 1e-10);
/// Same check with the flat Gram matrix computed as s_i^T G s_j from solution vectors.
PairingCompatibility pairing_compatibility(const std::vector<std::vector<std::complex<double>>>& chi,
                                           const std::vector<GradedVector>& solutions,
                                           const std::vector<std::vector<std::complex<double>>>& flat_metric,
                                           double tol = 1e-10);

} // namespace conifold
