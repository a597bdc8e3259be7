#pragma once

#include <cstddef>
#include <vector>

#include "conifold/rational.hpp"

namespace conifold {

/// Rational vector space with a skew pairing <a,b> = a^T P b.
///
/// Skew-symmetry is enforced at construction; there is no symmetric mode.
/// Nondegeneracy is not required, only recorded.
class IntersectionLattice {
public:
    explicit IntersectionLattice(QMatrix pairing);

    /// Standard symplectic lattice of even rank n: P = [[0, I], [-I, 0]].
    static IntersectionLattice symplectic(std::size_t n);

    std::size_t rank() const { return pairing_.rows(); }
    const QMatrix& pairing() const { return pairing_; }
    bool nondegenerate() const { return nondegenerate_; }

private:
    QMatrix pairing_;
    bool nondegenerate_ = false;
};

Rational pair(const IntersectionLattice& lattice, const QVector& a, const QVector& b);

/// Vanishing-cycle configuration delta_1..delta_r in a lattice.
///
/// Cycles must be nonzero. Linear dependence is allowed and reported through
/// cycle_span_rank(). r = 0 is allowed for the invariant-sector computations.
class CycleConfig {
public:
    CycleConfig(IntersectionLattice lattice, std::vector<QVector> cycles);

    const IntersectionLattice& lattice() const { return lattice_; }
    const std::vector<QVector>& cycles() const { return cycles_; }
    const QVector& cycle(std::size_t k) const { return cycles_.at(k); }
    std::size_t size() const { return cycles_.size(); }
    std::size_t rank() const { return lattice_.rank(); }

    std::size_t cycle_span_rank() const;
    bool cycles_independent() const { return cycle_span_rank() == cycles_.size(); }

    /// Covector of <., delta_k>, i.e. (P delta_k)^T.
    QVector covector(std::size_t k) const;
    /// Matrix whose rows are the covectors <., delta_k>.
    QMatrix covector_matrix() const;

    CycleConfig with_cycle(std::size_t k, QVector replacement) const;

private:
    IntersectionLattice lattice_;
    std::vector<QVector> cycles_;
};

/// Lambda = (lambda_ij), lambda_ij = <delta_i, delta_j>. Skew with zero diagonal.
class IntersectionMatrix {
public:
    explicit IntersectionMatrix(QMatrix entries);

    std::size_t size() const { return entries_.rows(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const QMatrix& matrix() const { return entries_; }
    bool off_diagonal_zero() const { return entries_.is_zero(); }

private:
    QMatrix entries_;
};

IntersectionMatrix intersection_matrix(const CycleConfig& config);

/// Basis of {alpha : <alpha, delta_k> = 0 for all k}.
std::vector<QVector> orthogonal_complement(const CycleConfig& config);

} // namespace conifold
