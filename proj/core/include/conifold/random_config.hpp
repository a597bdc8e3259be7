#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "conifold/lattice.hpp"

namespace conifold {

struct RandomConfigOptions {
    std::size_t min_rank = 2;
    std::size_t max_rank = 8;
    std::size_t max_cycles = 4;
    long entry_bound = 3; // entries drawn from [-bound, bound]
};

/// Draws one skew configuration with every P delta_k nonzero. Three flavours are mixed so that a corpus
/// contains interacting, unit-intersection and mutually orthogonal cycles:
/// a generic skew pairing with dense cycles, the standard symplectic pairing
/// with sparse {-1,0,1} cycles, and cycles drawn inside the orthogonal
/// complement of the previous ones.
CycleConfig random_config(std::mt19937_64& rng, const RandomConfigOptions& options = {});

std::vector<CycleConfig> random_corpus(std::uint64_t seed, std::size_t count,
                                       const RandomConfigOptions& options = {});

} // namespace conifold
