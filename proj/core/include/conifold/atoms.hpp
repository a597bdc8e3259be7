#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "conifold/lattice.hpp"

namespace conifold {

/// Dimension-level rigid/flexible decomposition of a cycle configuration.
///
/// The rigid sector is the common kernel of the N_k (the invariant cycles),
/// the flexible atoms are the lines Q.delta_k. Because N_k^2 = 0 the two can
/// overlap, so the overlap is reported rather than assuming a direct sum.
struct AtomDecomposition {
    std::size_t n = 0;
    std::size_t rigid_dim = 0;
    std::size_t covector_rank = 0;
    std::size_t flexible_count = 0;
    std::vector<std::size_t> flexible_dims;
    std::size_t vanishing_dim = 0;
    std::size_t overlap_dim = 0;
    bool splits = true;
};

AtomDecomposition decompose(const CycleConfig& config);

struct GraphEdge {
    std::size_t i = 0; // 0-based, i < j
    std::size_t j = 0;
    Rational lambda;
};

struct InteractionGraph {
    std::size_t vertex_count = 0;
    std::vector<GraphEdge> edges;
    /// Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<std::size_t>> components;

    bool has_edge() const { return !edges.empty(); }
};

InteractionGraph interaction_graph(const CycleConfig& config);

struct NnfReport {
    bool stokes_abelian = true;
    bool graph_has_edge = false;
    bool lambda_offdiag_nonzero = false;
    bool splits = true;
    /// non-split <=> non-abelian <=> edge <=> nonzero off-diagonal lambda
    bool consistent = true;
};

NnfReport nnf_report(const CycleConfig& config);

/// Eigenvalue deg/2 - 3/2 of the grading operator per even-degree basis element.
std::vector<Rational> euler_grading(const std::vector<int>& degrees);

/// (delta h^{1,1}, delta h^{2,1}) = (r, -r) for r nodes.
std::pair<long, long> hodge_delta(long r);

struct ClemensSchmidDims {
    std::size_t ker_dim = 0;       // n - rank of covector matrix (common kernel)
    std::size_t total_ker_dim = 0; // dim ker N_sum, N_sum = sum_k N_k
    std::size_t im_dim = 0;        // rank N_sum
    std::size_t quotient_dim = 0;  // n - total_ker_dim
    bool exact = false;            // quotient_dim == im_dim
};

ClemensSchmidDims clemens_schmid_dims(const CycleConfig& config);

/// Ext^degree between node-supported and intersection-complex pieces.
/// Degree 1 gives r; degree >= 2 gives 0 unless nodes interact, in which
/// case nothing is known and nullopt is returned.
std::optional<long> ext_dimensions(long r, int degree, bool interacting = false);

} // namespace conifold
