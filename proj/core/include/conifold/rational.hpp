#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace conifold {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Parse "p/q", "-p", or "p" into a canonical rational. Throws InputError on
/// anything else (including decimal points and exponents).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rational& value);

QVector make_vector(std::initializer_list<long> entries);
QVector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const QVector& v);
Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector scaled(const QVector& v, const Rational& s);

/// Dense matrix over exact rationals, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols);
    static QMatrix outer(const QVector& column, const QVector& row);
    static QMatrix from_rows(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector row(std::size_t i) const;
    QVector column(std::size_t j) const;

    QMatrix transpose() const;
    QMatrix operator-() const;
    QMatrix& operator+=(const QMatrix& other);
    QMatrix& operator-=(const QMatrix& other);
    QMatrix& operator*=(const Rational& s);

    bool is_zero() const;
    bool is_identity() const;
    bool is_skew() const;
    bool is_symmetric() const;

    std::size_t rank() const;
    Rational determinant() const;
    /// Basis of {x : A x = 0}, one vector per free column of the RREF.
    std::vector<QVector> kernel() const;
    /// Reduced row echelon form; pivot columns returned through `pivots`.
    QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    /// Canonical serialization; equal matrices give equal keys.
    std::string key() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, QMatrix a);
QVector operator*(const QMatrix& a, const QVector& v);

/// Dimension of the span of the given vectors.
std::size_t span_rank(const std::vector<QVector>& vectors, std::size_t n);

} // namespace conifold
