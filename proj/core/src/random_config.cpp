#include "conifold/random_config.hpp"

#include <algorithm>

namespace conifold {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Nonzero vector with nonzero covector P v, so its PL nilpotent has rank one.
QVector random_cycle(std::mt19937_64& rng, const QMatrix& p, long bound) {
    QVector v(p.rows());
    do {
        for (auto& x : v) x = draw(rng, -bound, bound);
    } while (is_zero(p * v));
    return v;
}

/// Clears denominators so a rational kernel vector becomes integral.
QVector integral(QVector v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) x *= l;
    return v;
}

} // namespace

CycleConfig random_config(std::mt19937_64& rng, const RandomConfigOptions& options) {
    const long bound = options.entry_bound;
    const int flavour = static_cast<int>(draw(rng, 0, 2));
    std::size_t n = static_cast<std::size_t>(
        draw(rng, static_cast<long>(options.min_rank), static_cast<long>(options.max_rank)));
    const std::size_t r = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(options.max_cycles)));

    if (flavour == 1 && n % 2 == 1) n = std::max<std::size_t>(2, n - 1);
    QMatrix p(n, n);
    if (flavour == 1) {
        p = IntersectionLattice::symplectic(n).pairing();
    } else {
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    p(i, j) = draw(rng, -bound, bound);
                    p(j, i) = -p(i, j);
                }
        } while (p.is_zero());
    }
    IntersectionLattice lattice(p);

    std::vector<QVector> cycles;
    for (std::size_t k = 0; k < r; ++k) {
        if (flavour == 1) {
            cycles.push_back(random_cycle(rng, p, 1));
        } else if (flavour == 2 && k > 0) {
            // combine a random subset of the orthogonal complement of the cycles so far
            const auto basis = CycleConfig(lattice, cycles).covector_matrix().kernel();
            auto in_bounds = [bound](const QVector& v) {
                return std::all_of(v.begin(), v.end(), [bound](const Rational& x) { return abs(x) <= bound; });
            };
            QVector v = cycles.front();
            for (int attempt = 0; attempt < 50; ++attempt) {
                QVector trial(n, Rational(0));
                for (const auto& b : basis) trial = add(trial, scaled(integral(b), draw(rng, -1, 1)));
                if (!is_zero(p * trial) && in_bounds(trial)) {
                    v = std::move(trial);
                    break;
                }
            }
            cycles.push_back(std::move(v));
        } else {
            cycles.push_back(random_cycle(rng, p, bound));
        }
    }
    return CycleConfig(std::move(lattice), std::move(cycles));
}

std::vector<CycleConfig> random_corpus(std::uint64_t seed, std::size_t count,
                                       const RandomConfigOptions& options) {
    std::mt19937_64 rng(seed);
    std::vector<CycleConfig> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) corpus.push_back(random_config(rng, options));
    return corpus;
}

} // namespace conifold
