#include "conifold/atoms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "conifold/errors.hpp"
#include "conifold/pl_stokes.hpp"

namespace conifold {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

AtomDecomposition decompose(const CycleConfig& config) {
    AtomDecomposition d;
    d.n = config.rank();
    const auto rigid = orthogonal_complement(config);
    d.rigid_dim = rigid.size();
    d.covector_rank = config.size() == 0 ? 0 : config.covector_matrix().rank();
    d.flexible_count = config.size();
    // Each flexible atom is the line spanned by a nonzero cycle.
    for (const auto& c : config.cycles()) d.flexible_dims.push_back(span_rank({c}, d.n));
    d.vanishing_dim = config.cycle_span_rank();

    std::vector<QVector> both = rigid;
    both.insert(both.end(), config.cycles().begin(), config.cycles().end());
    const std::size_t sum_dim = span_rank(both, d.n);
    d.overlap_dim = d.rigid_dim + d.vanishing_dim - sum_dim;

    d.splits = intersection_matrix(config).off_diagonal_zero();
    return d;
}

InteractionGraph interaction_graph(const CycleConfig& config) {
    const auto lam = intersection_matrix(config);
    InteractionGraph g;
    g.vertex_count = config.size();
    UnionFind uf(g.vertex_count);
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        for (std::size_t j = i + 1; j < g.vertex_count; ++j) {
            if (lam(i, j) == 0) continue;
            g.edges.push_back({i, j, lam(i, j)});
            uf.unite(i, j);
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < g.vertex_count; ++v) groups[uf.find(v)].push_back(v);
    for (auto& [root, members] : groups) g.components.push_back(std::move(members));
    std::sort(g.components.begin(), g.components.end());
    return g;
}

NnfReport nnf_report(const CycleConfig& config) {
    NnfReport rep;
    const std::size_t r = config.size();
    const auto ops = build_operator_set(config);
    for (std::size_t i = 0; i < r && rep.stokes_abelian; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            const auto& si = ops.stokes_ops[i];
            const auto& sj = ops.stokes_ops[j];
            if (!(si * sj == sj * si)) {
                rep.stokes_abelian = false;
                break;
            }
        }
    rep.graph_has_edge = interaction_graph(config).has_edge();
    rep.lambda_offdiag_nonzero = !intersection_matrix(config).off_diagonal_zero();
    rep.splits = decompose(config).splits;

    const bool interacting = !rep.stokes_abelian;
    rep.consistent = rep.graph_has_edge == interacting && rep.lambda_offdiag_nonzero == interacting &&
                     rep.splits == !interacting;
    return rep;
}

std::vector<Rational> euler_grading(const std::vector<int>& degrees) {
    std::vector<Rational> out;
    out.reserve(degrees.size());
    for (int deg : degrees) {
        if (deg % 2 != 0) {
            throw InputError("odd cohomological degree " + std::to_string(deg) +
                             " (basis must be even-degree)");
        }
        if (deg < 0 || deg > 6) throw InputError("degree " + std::to_string(deg) + " outside 0..6");
        Rational g(deg - 3, 2);
        g.canonicalize();
        out.push_back(g);
    }
    return out;
}

std::pair<long, long> hodge_delta(long r) {
    if (r < 0) throw InputError("node count must be nonnegative");
    return {r, -r};
}

ClemensSchmidDims clemens_schmid_dims(const CycleConfig& config) {
    ClemensSchmidDims cs;
    const std::size_t n = config.rank();
    cs.ker_dim = orthogonal_complement(config).size();
    QMatrix total = QMatrix::zero(n, n);
    for (std::size_t k = 0; k < config.size(); ++k) total += nilpotent(config, k);
    cs.im_dim = total.rank();
    cs.total_ker_dim = total.kernel().size();
    cs.quotient_dim = n - cs.total_ker_dim;
    cs.exact = cs.quotient_dim == cs.im_dim;
    return cs;
}

std::optional<long> ext_dimensions(long r, int degree, bool interacting) {
    if (degree <= 0) throw InputError("Ext degree must be positive");
    if (r < 0) throw InputError("node count must be nonnegative");
    if (degree == 1) return r;
    if (interacting && r >= 2) return std::nullopt;
    return 0;
}

} // namespace conifold
