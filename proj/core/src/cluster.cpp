#include "conifold/cluster.hpp"

#include <cmath>
#include <numbers>

#include "conifold/errors.hpp"
#include "conifold/pl_stokes.hpp"

namespace conifold {

namespace {

using C = std::complex<double>;
const C kTwoPiI{0.0, 2.0 * std::numbers::pi};
// |1 + X2| below this counts as the X2 = -1 degeneracy
constexpr double kDegenerateTol = 1e-12;

} // namespace

ClusterState fg_coords(const std::vector<C>& central_charges, C z) {
    if (z == C{0.0, 0.0}) throw InputError("z must be nonzero");
    ClusterState st;
    st.central_charges = central_charges;
    st.z = z;
    for (const auto& zk : central_charges) st.coordinates.push_back(std::exp(kTwoPiI * zk / z));
    return st;
}

ClusterState fg_mutate(const ClusterState& state, const Rational& lambda12) {
    if (state.coordinates.size() != 2) throw InputError("cluster mutation needs a two-node state");
    if (lambda12 == 0) return state;
    ClusterState out = state;
    out.coordinates[0] = state.coordinates[0] * (1.0 + state.coordinates[1]);
    out.central_charges.reset();
    out.mutated = true;
    out.degenerate = std::abs(1.0 + state.coordinates[1]) < kDegenerateTol;
    return out;
}

MutationComparison mutate_and_compare(const CycleConfig& config, const ClusterState& state, std::size_t i,
                                      std::size_t j) {
    if (config.size() != 2) throw InputError("mutate_and_compare needs exactly two nodes");
    if (state.coordinates.size() != 2) throw InputError("cluster state must have two coordinates");
    if (i > 1 || j > 1 || i == j) throw InputError("node indices must be {1,2} in some order");

    const auto mutation = hurwitz_mutate(config, i, j);
    MutationComparison cmp{mutation.mutated, mutation.coefficient, {}, {}, 0.0, false};

    const C xi = state.coordinates[i];
    const C xj = state.coordinates[j];
    const double lam = cmp.lambda12.get_d();
    if (state.central_charges) {
        const auto& z = *state.central_charges;
        cmp.linear_transport = std::exp(kTwoPiI * (z[i] - lam * z[j]) / state.z);
    } else {
        cmp.linear_transport = xi * std::pow(xj, -lam);
    }
    cmp.cluster_value = cmp.lambda12 == 0 ? xi : xi * (1.0 + xj);
    cmp.discrepancy = std::abs(cmp.cluster_value - cmp.linear_transport);
    cmp.degenerate = cmp.lambda12 != 0 && std::abs(1.0 + xj) < kDegenerateTol;
    return cmp;
}

} // namespace conifold
