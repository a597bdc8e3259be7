#include "conifold/pl_stokes.hpp"

#include <string>
#include <unordered_set>

namespace conifold {

namespace {

void check_index(const CycleConfig& config, std::size_t k) {
    if (k >= config.size()) {
        throw InputError("node index " + std::to_string(k + 1) + " out of range 1.." +
                         std::to_string(config.size()));
    }
}

void check_pair(const CycleConfig& config, std::size_t i, std::size_t j) {
    check_index(config, i);
    check_index(config, j);
    if (i == j) throw InputError("node indices must differ");
}

QMatrix pl_of_cycle(const IntersectionLattice& lattice, const QVector& d) {
    return QMatrix::identity(lattice.rank()) + QMatrix::outer(d, lattice.pairing() * d);
}

} // namespace

QMatrix nilpotent(const CycleConfig& config, std::size_t k) {
    check_index(config, k);
    return QMatrix::outer(config.cycle(k), config.covector(k));
}

QMatrix pl_operator(const CycleConfig& config, std::size_t k) {
    return QMatrix::identity(config.rank()) + nilpotent(config, k);
}

QMatrix stokes_operator(const CycleConfig& config, std::size_t k) { return pl_operator(config, k); }

QMatrix pl_inverse(const CycleConfig& config, std::size_t k) {
    return QMatrix::identity(config.rank()) - nilpotent(config, k);
}

OperatorSet build_operator_set(const CycleConfig& config) {
    OperatorSet ops;
    const auto id = QMatrix::identity(config.rank());
    for (std::size_t k = 0; k < config.size(); ++k) {
        QMatrix n = nilpotent(config, k);
        const std::string label = "N_" + std::to_string(k + 1);
        if (!(n * n).is_zero()) throw InvariantError(label + "^2 != 0");
        if (n.rank() != 1) throw InvariantError("rank " + label + " != 1");
        QMatrix s = id + n;
        if (!(s * (id - n)).is_identity()) throw InvariantError("S_k (Id - N_k) != Id");
        ops.pl_ops.push_back(s);
        ops.stokes_ops.push_back(std::move(s));
        ops.nilpotents.push_back(std::move(n));
    }
    return ops;
}

CommutatorResult commutator_nilpotent(const CycleConfig& config, std::size_t i, std::size_t j) {
    check_pair(config, i, j);
    const auto lam = intersection_matrix(config);
    const auto& di = config.cycle(i);
    const auto& dj = config.cycle(j);

    CommutatorResult out;
    out.closed_form = lam(j, i) * QMatrix::outer(di, config.covector(j)) -
                      lam(i, j) * QMatrix::outer(dj, config.covector(i));

    const QMatrix ni = nilpotent(config, i);
    const QMatrix nj = nilpotent(config, j);
    out.direct = ni * nj - nj * ni;
    out.agree = out.closed_form == out.direct;
    return out;
}

GroupCommutatorResult group_commutator(const CycleConfig& config, std::size_t i, std::size_t j) {
    check_pair(config, i, j);
    GroupCommutatorResult out;
    out.product = stokes_operator(config, i) * stokes_operator(config, j) *
                  pl_inverse(config, i) * pl_inverse(config, j);
    out.via_nilpotent = QMatrix::identity(config.rank()) + commutator_nilpotent(config, i, j).direct;
    out.agree = out.product == out.via_nilpotent;

    const QMatrix ni = nilpotent(config, i);
    const QMatrix nj = nilpotent(config, j);
    const Rational lam = pair(config.lattice(), config.cycle(i), config.cycle(j));
    out.expansion = out.via_nilpotent + (lam * lam) * (ni - nj) + ni * nj * ni * nj;
    out.expansion_agrees = out.product == out.expansion;
    return out;
}

std::optional<QVector> commutator_witness(const CycleConfig& config, std::size_t i, std::size_t j) {
    const QMatrix c = commutator_nilpotent(config, i, j).direct;
    // Candidates first, then the standard basis.
    std::vector<QVector> trial{config.cycle(i), config.cycle(j)};
    for (std::size_t k = 0; k < config.rank(); ++k) trial.push_back(unit_vector(config.rank(), k));
    for (const auto& alpha : trial)
        if (!is_zero(c * alpha)) return alpha;
    return std::nullopt;
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::commuting: return "commuting";
    case Relation::braid: return "braid";
    case Relation::neither: return "neither";
    }
    return "neither";
}

RelationResult relation_classify(const CycleConfig& config, std::size_t i, std::size_t j) {
    check_pair(config, i, j);
    const QMatrix ti = pl_operator(config, i);
    const QMatrix tj = pl_operator(config, j);

    RelationResult out;
    out.lambda = pair(config.lattice(), config.cycle(i), config.cycle(j));
    out.commutes = ti * tj == tj * ti;
    out.braid_holds = ti * tj * ti == tj * ti * tj;

    if (out.commutes) {
        out.relation = Relation::commuting;
    } else if (out.braid_holds) {
        out.relation = Relation::braid;
    } else {
        out.relation = Relation::neither;
    }

    const bool lambda_zero = out.lambda == 0;
    const bool lambda_unit = abs(out.lambda) == 1;
    out.consistent = (out.commutes == lambda_zero) && (!lambda_unit || out.braid_holds);
    return out;
}

GroupExploration group_explore(const CycleConfig& config, std::size_t max_len, std::size_t cap,
                               bool record_words) {
    if (max_len == 0) throw InputError("max_len must be at least 1");
    if (config.size() == 0) throw InputError("group exploration needs at least one cycle");

    struct Generator {
        QMatrix m;
        int label;
    };
    std::vector<Generator> gens;
    for (std::size_t k = 0; k < config.size(); ++k) {
        const int label = static_cast<int>(k) + 1;
        gens.push_back({pl_operator(config, k), label});
        gens.push_back({pl_inverse(config, k), -label});
    }

    GroupExploration out;
    out.max_len = max_len;
    out.abelian = true;
    for (std::size_t a = 0; a < config.size() && out.abelian; ++a)
        for (std::size_t b = a + 1; b < config.size(); ++b) {
            const auto& x = gens[2 * a].m;
            const auto& y = gens[2 * b].m;
            if (!(x * y == y * x)) {
                out.abelian = false;
                break;
            }
        }

    struct Node {
        QMatrix m;
        std::vector<int> word;
    };
    std::unordered_set<std::string> seen;
    std::vector<Node> frontier{{QMatrix::identity(config.rank()), {}}};
    seen.insert(frontier.front().m.key());
    if (record_words) out.words.emplace().push_back({});
    out.sphere_sizes.push_back(1);

    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (const auto& g : gens) {
                QMatrix m = node.m * g.m;
                if (!seen.insert(m.key()).second) continue;
                std::vector<int> word;
                if (record_words) {
                    word = node.word;
                    word.push_back(g.label);
                    out.words->push_back(word);
                }
                next.push_back({std::move(m), std::move(word)});
                if (seen.size() > cap) {
                    out.sphere_sizes.push_back(next.size());
                    out.element_count = seen.size();
                    throw GroupCapExceeded("group exploration exceeded cap of " +
                                               std::to_string(cap) + " elements at word length " +
                                               std::to_string(len),
                                           out);
                }
            }
        }
        out.sphere_sizes.push_back(next.size());
        frontier = std::move(next);
    }
    out.element_count = seen.size();
    return out;
}

MutationResult hurwitz_mutate(const CycleConfig& config, std::size_t i, std::size_t j) {
    check_pair(config, i, j);
    const Rational lam = pair(config.lattice(), config.cycle(i), config.cycle(j));
    QVector moved = add(config.cycle(i), scaled(config.cycle(j), -lam));
    MutationResult out{config.with_cycle(i, std::move(moved)), lam, false};
    const QMatrix expected = pl_inverse(config, j) * pl_operator(config, i) * pl_operator(config, j);
    out.conjugation_holds = pl_of_cycle(config.lattice(), out.mutated.cycle(i)) == expected;
    return out;
}

MutationResult hurwitz_mutate_inverse(const CycleConfig& config, std::size_t i, std::size_t j) {
    check_pair(config, i, j);
    const Rational lam = pair(config.lattice(), config.cycle(i), config.cycle(j));
    QVector moved = add(config.cycle(i), scaled(config.cycle(j), lam));
    MutationResult out{config.with_cycle(i, std::move(moved)), lam, false};
    const QMatrix expected = pl_operator(config, j) * pl_operator(config, i) * pl_inverse(config, j);
    out.conjugation_holds = pl_of_cycle(config.lattice(), out.mutated.cycle(i)) == expected;
    return out;
}

} // namespace conifold
