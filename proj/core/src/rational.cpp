#include "conifold/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conifold/errors.hpp"

namespace conifold {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string trimmed(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string_view::npos) return {};
    return std::string(s.substr(b, e - b + 1));
}

void check_shape(const QMatrix& a, const QMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError(std::string("matrix shape mismatch in ") + op);
    }
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string s = trimmed(text);
    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw InputError("not an exact rational: \"" + s + "\"");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw InputError("zero denominator in \"" + s + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& value) {
    Rational v(value);
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

QVector make_vector(std::initializer_list<long> entries) {
    QVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

QVector unit_vector(std::size_t n, std::size_t index) {
    QVector v(n, Rational(0));
    v.at(index) = 1;
    return v;
}

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVector add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVector scaled(const QVector& v, const Rational& s) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

QMatrix QMatrix::outer(const QVector& column, const QVector& row) {
    QMatrix m(column.size(), row.size());
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (column[i] == 0) continue;
        for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = column[i] * row[j];
    }
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return {};
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InputError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QVector QMatrix::row(std::size_t i) const {
    return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
    QVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::operator-() const {
    QMatrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
    check_shape(*this, other, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
    check_shape(*this, other, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool QMatrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool QMatrix::is_skew() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool QMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const {
    QMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
        std::size_t p = lead_row;
        while (p < rows_ && m(p, c) == 0) ++p;
        if (p == rows_) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(lead_row, j));
        const Rational inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < cols_; ++j) m(lead_row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead_row || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(lead_row, j);
        }
        piv.push_back(c);
        ++lead_row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t QMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Rational QMatrix::determinant() const {
    if (!square()) throw InputError("determinant of non-square matrix");
    QMatrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m(p, c) == 0) ++p;
        if (p == rows_) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::vector<QVector> QMatrix::kernel() const {
    std::vector<std::size_t> piv;
    const QMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string QMatrix::key() const {
    std::ostringstream os;
    os << rows_ << 'x' << cols_ << ':';
    for (const auto& x : data_) os << x.get_str() << ',';
    return os.str();
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
    QMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }

QVector operator*(const QMatrix& a, const QVector& v) {
    if (a.cols() != v.size()) throw InputError("matrix-vector shape mismatch");
    QVector out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

std::size_t span_rank(const std::vector<QVector>& vectors, std::size_t n) {
    if (vectors.empty()) return 0;
    for (const auto& v : vectors)
        if (v.size() != n) throw InputError("vector length mismatch");
    return QMatrix::from_rows(vectors).rank();
}

} // namespace conifold
