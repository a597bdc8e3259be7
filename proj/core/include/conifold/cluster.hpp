#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "conifold/lattice.hpp"
#include "conifold/rational.hpp"

namespace conifold {

/// Fock-Goncharov coordinates X_k = exp(2 pi i Z_k / z).
struct ClusterState {
    /// Present at construction; dropped once the state has been mutated.
    std::optional<std::vector<std::complex<double>>> central_charges;
    std::complex<double> z{1.0, 0.0};
    std::vector<std::complex<double>> coordinates;
    bool mutated = false;
    bool degenerate = false; // a coordinate became 0
};

ClusterState fg_coords(const std::vector<std::complex<double>>& central_charges, std::complex<double> z);

/// X1' = X1 (1 + X2), X2' = X2 when lambda12 != 0; identity otherwise.
ClusterState fg_mutate(const ClusterState& state, const Rational& lambda12);

struct MutationComparison {
    CycleConfig mutated_config;
    Rational lambda12;
    std::complex<double> linear_transport; // X1 X2^{-lambda12}, via Z1' = Z1 - lambda12 Z2
    std::complex<double> cluster_value;    // X1 (1 + X2)
    double discrepancy = 0.0;
    bool degenerate = false;
};

/// Mutates cycles i, j (0-based) and reports the linear and cluster transports
/// of X_i side by side. No equality is asserted.
MutationComparison mutate_and_compare(const CycleConfig& config, const ClusterState& state,
                                      std::size_t i = 0, std::size_t j = 1);

} // namespace conifold
