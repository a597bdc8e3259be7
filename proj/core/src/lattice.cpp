#include "conifold/lattice.hpp"

#include <string>

#include "conifold/errors.hpp"

namespace conifold {

IntersectionLattice::IntersectionLattice(QMatrix pairing) : pairing_(std::move(pairing)) {
    if (pairing_.rows() == 0) throw InputError("lattice rank must be at least 1");
    if (!pairing_.square()) throw InputError("pairing matrix is not square");
    if (!pairing_.is_skew()) throw InputError("pairing not skew-symmetric");
    nondegenerate_ = pairing_.determinant() != 0;
}

IntersectionLattice IntersectionLattice::symplectic(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw InputError("symplectic lattice needs even positive rank");
    const std::size_t h = n / 2;
    QMatrix p(n, n);
    for (std::size_t i = 0; i < h; ++i) {
        p(i, h + i) = 1;
        p(h + i, i) = -1;
    }
    return IntersectionLattice(std::move(p));
}

Rational pair(const IntersectionLattice& lattice, const QVector& a, const QVector& b) {
    const std::size_t n = lattice.rank();
    if (a.size() != n || b.size() != n) {
        throw InputError("pair: vector length " + std::to_string(a.size()) + "/" +
                         std::to_string(b.size()) + " does not match lattice rank " +
                         std::to_string(n));
    }
    return dot(a, lattice.pairing() * b);
}

CycleConfig::CycleConfig(IntersectionLattice lattice, std::vector<QVector> cycles)
    : lattice_(std::move(lattice)), cycles_(std::move(cycles)) {
    for (std::size_t k = 0; k < cycles_.size(); ++k) {
        const auto& d = cycles_[k];
        if (d.size() != lattice_.rank()) {
            throw InputError("cycle " + std::to_string(k + 1) + " has length " +
                             std::to_string(d.size()) + ", lattice rank is " +
                             std::to_string(lattice_.rank()));
        }
        if (is_zero(d)) throw InputError("cycle " + std::to_string(k + 1) + " is zero");
        if (pair(lattice_, d, d) != 0) {
            throw InvariantError("self-pairing of cycle " + std::to_string(k + 1) + " is nonzero");
        }
    }
}

std::size_t CycleConfig::cycle_span_rank() const { return span_rank(cycles_, rank()); }

QVector CycleConfig::covector(std::size_t k) const {
    // <alpha, d> = alpha^T (P d)
    return lattice_.pairing() * cycles_.at(k);
}

QMatrix CycleConfig::covector_matrix() const {
    QMatrix k(cycles_.size(), rank());
    for (std::size_t i = 0; i < cycles_.size(); ++i) {
        const QVector c = covector(i);
        for (std::size_t j = 0; j < rank(); ++j) k(i, j) = c[j];
    }
    return k;
}

CycleConfig CycleConfig::with_cycle(std::size_t k, QVector replacement) const {
    auto cycles = cycles_;
    cycles.at(k) = std::move(replacement);
    return CycleConfig(lattice_, std::move(cycles));
}

IntersectionMatrix::IntersectionMatrix(QMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_skew()) throw InvariantError("intersection matrix is not skew-symmetric");
}

IntersectionMatrix intersection_matrix(const CycleConfig& config) {
    const std::size_t r = config.size();
    QMatrix lam(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            lam(i, j) = pair(config.lattice(), config.cycle(i), config.cycle(j));
    return IntersectionMatrix(std::move(lam));
}

std::vector<QVector> orthogonal_complement(const CycleConfig& config) {
    const std::size_t n = config.rank();
    if (config.size() == 0) {
        std::vector<QVector> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
        return basis;
    }
    return config.covector_matrix().kernel();
}

} // namespace conifold
