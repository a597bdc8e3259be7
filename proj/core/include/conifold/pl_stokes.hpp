#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "conifold/errors.hpp"
#include "conifold/lattice.hpp"

// Node indices in this header are 0-based. The CLI and the JSON reports use
// 1-based node labels.

namespace conifold {

/// N_k(alpha) = <alpha, delta_k> delta_k, as the matrix delta_k (P delta_k)^T.
QMatrix nilpotent(const CycleConfig& config, std::size_t k);

/// T_k = Id + N_k.
QMatrix pl_operator(const CycleConfig& config, std::size_t k);

/// S_k = Id + N_k; identical to the Picard-Lefschetz operator at a regular
/// singular point.
QMatrix stokes_operator(const CycleConfig& config, std::size_t k);

/// Exact inverse Id - N_k of T_k (valid because N_k^2 = 0).
QMatrix pl_inverse(const CycleConfig& config, std::size_t k);

struct OperatorSet {
    std::vector<QMatrix> nilpotents;
    std::vector<QMatrix> pl_ops;
    std::vector<QMatrix> stokes_ops;
};

/// Builds every N_k, T_k, S_k and checks N_k^2 = 0, rank N_k = 1 and
/// S_k (Id - N_k) = Id. Throws InvariantError on violation.
OperatorSet build_operator_set(const CycleConfig& config);

struct CommutatorResult {
    QMatrix closed_form; // <a,d_j> l_ji d_i - <a,d_i> l_ij d_j
    QMatrix direct;      // N_i N_j - N_j N_i
    bool agree = false;
};

CommutatorResult commutator_nilpotent(const CycleConfig& config, std::size_t i, std::size_t j);

struct GroupCommutatorResult {
    QMatrix product;       // S_i S_j S_i^{-1} S_j^{-1}
    QMatrix via_nilpotent; // Id + [N_i, N_j]
    bool agree = false;    // first-order form; exact only when lambda_ij = 0
    /// Id + [N_i,N_j] + lambda_ij^2 (N_i - N_j) + N_i N_j N_i N_j
    QMatrix expansion;
    bool expansion_agrees = false;
};

GroupCommutatorResult group_commutator(const CycleConfig& config, std::size_t i, std::size_t j);

/// A vector alpha with [N_i, N_j] alpha != 0, or nullopt when the commutator
/// vanishes. Witnesses the converse of "[N_i,N_j] = 0 iff lambda_ij = 0".
std::optional<QVector> commutator_witness(const CycleConfig& config, std::size_t i, std::size_t j);

enum class Relation { commuting, braid, neither };

std::string_view to_string(Relation r);

struct RelationResult {
    Relation relation = Relation::neither;
    Rational lambda;
    bool commutes = false;   // exact T_i T_j == T_j T_i
    bool braid_holds = false; // exact T_i T_j T_i == T_j T_i T_j
    /// commuting <=> lambda == 0, and |lambda| == 1 => braid.
    bool consistent = false;
};

RelationResult relation_classify(const CycleConfig& config, std::size_t i, std::size_t j);

struct GroupExploration {
    std::size_t element_count = 0;
    bool abelian = false;
    std::size_t max_len = 0;
    /// Elements first reached at each word length 0..max_len.
    std::vector<std::size_t> sphere_sizes;
    /// Shortest word per element (signed 1-based generator labels), when requested.
    std::optional<std::vector<std::vector<int>>> words;
};

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// Thrown when enumeration passes the element cap; carries what was found.
class GroupCapExceeded : public ResourceError {
public:
    GroupCapExceeded(const std::string& what, GroupExploration partial)
        : ResourceError(what), partial_(std::move(partial)) {}
    const GroupExploration& partial() const { return partial_; }

private:
    GroupExploration partial_;
};

/// Breadth-first enumeration of distinct elements of <T_1..T_r> reachable by
/// words of length <= max_len in the generators and their inverses.
GroupExploration group_explore(const CycleConfig& config, std::size_t max_len,
                               std::size_t cap = kDefaultGroupCap, bool record_words = false);

struct MutationResult {
    CycleConfig mutated;
    Rational coefficient; // lambda_ij of the input config
    /// PL operator of the new cycle equals the conjugate it should.
    bool conjugation_holds = false;
};

/// delta_i -> delta_i - lambda_ij delta_j. The new T_i' equals T_j^{-1} T_i T_j.
MutationResult hurwitz_mutate(const CycleConfig& config, std::size_t i, std::size_t j);

/// delta_i -> delta_i + lambda_ij delta_j, the inverse move. The new T_i'
/// equals T_j T_i T_j^{-1}.
MutationResult hurwitz_mutate_inverse(const CycleConfig& config, std::size_t i, std::size_t j);

} // namespace conifold
