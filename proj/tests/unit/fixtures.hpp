#pragma once

#include <vector>

#include "conifold/lattice.hpp"
#include "conifold/random_config.hpp"

namespace fixtures {

inline conifold::IntersectionLattice sym4() { return conifold::IntersectionLattice::symplectic(4); }

/// delta_1 = e1, delta_2 = e3, lambda_12 = 1.
inline conifold::CycleConfig a2() {
    return {sym4(), {conifold::make_vector({1, 0, 0, 0}), conifold::make_vector({0, 0, 1, 0})}};
}

inline conifold::CycleConfig a1xa1() {
    return {sym4(), {conifold::make_vector({1, 0, 0, 0}), conifold::make_vector({0, 1, 0, 0})}};
}

inline conifold::CycleConfig lambda2() {
    return {sym4(), {conifold::make_vector({1, 0, 0, 0}), conifold::make_vector({0, 0, 2, 0})}};
}

inline conifold::CycleConfig single() { return {sym4(), {conifold::make_vector({1, 0, 0, 0})}}; }

inline const std::vector<conifold::CycleConfig>& corpus() {
    static const auto c = conifold::random_corpus(20261016, 200);
    return c;
}

} // namespace fixtures
