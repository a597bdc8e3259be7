#pragma once

// Integer reference implementations used as test oracles. They apply the
// defining formulas vector by vector with machine integers and never touch
// the library's matrix layer.

#include <cstddef>
#include <vector>

#include "conifold/lattice.hpp"

namespace oracle {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>; // row-major

inline IMat to_int(const conifold::QMatrix& m) {
    IMat out(m.rows(), IVec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num().get_si();
    return out;
}

inline IVec to_int(const conifold::QVector& v) {
    IVec out;
    for (const auto& x : v) out.push_back(x.get_num().get_si());
    return out;
}

inline conifold::QMatrix to_q(const IMat& m) {
    conifold::QMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = static_cast<long>(m[i][j]);
    return out;
}

inline long long pairing(const IMat& p, const IVec& a, const IVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * p[i][j] * b[j];
    return s;
}

inline IVec basis(std::size_t n, std::size_t k) {
    IVec e(n, 0);
    e[k] = 1;
    return e;
}

/// alpha -> <alpha, d> d
inline IVec apply_n(const IMat& p, const IVec& d, const IVec& alpha) {
    const long long c = pairing(p, alpha, d);
    IVec out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = c * d[i];
    return out;
}

/// Matrix of a linear map given by its action on the standard basis.
template <class F>
IMat matrix_of(std::size_t n, F&& f) {
    IMat m(n, IVec(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        const IVec col = f(basis(n, k));
        for (std::size_t i = 0; i < n; ++i) m[i][k] = col[i];
    }
    return m;
}

inline IMat mul(const IMat& a, const IMat& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    IMat c(n, IVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    return c;
}

inline IMat add(const IMat& a, const IMat& b, long long sign = 1) {
    IMat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += sign * b[i][j];
    return c;
}

inline IMat identity(std::size_t n) {
    IMat m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct Config {
    IMat p;
    std::vector<IVec> cycles;
};

inline Config from(const conifold::CycleConfig& c) {
    Config out{to_int(c.lattice().pairing()), {}};
    for (const auto& d : c.cycles()) out.cycles.push_back(to_int(d));
    return out;
}

inline IMat nilpotent(const Config& c, std::size_t k) {
    return matrix_of(c.p.size(), [&](const IVec& a) { return apply_n(c.p, c.cycles[k], a); });
}

inline IMat pl(const Config& c, std::size_t k, long long sign = 1) {
    return add(identity(c.p.size()), nilpotent(c, k), sign);
}

/// [N_i,N_j](alpha) = <alpha,d_j> l_ji d_i - <alpha,d_i> l_ij d_j, evaluated pointwise.
inline IMat commutator_formula(const Config& c, std::size_t i, std::size_t j) {
    const auto& di = c.cycles[i];
    const auto& dj = c.cycles[j];
    const long long lij = pairing(c.p, di, dj);
    const long long lji = pairing(c.p, dj, di);
    return matrix_of(c.p.size(), [&](const IVec& a) {
        IVec out(di.size());
        const long long aj = pairing(c.p, a, dj);
        const long long ai = pairing(c.p, a, di);
        for (std::size_t t = 0; t < di.size(); ++t) out[t] = aj * lji * di[t] - ai * lij * dj[t];
        return out;
    });
}

} // namespace oracle
