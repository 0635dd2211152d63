#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "derham/rational.hpp"

namespace derham {

// Dense matrix over Q, row-major. Sizes in this engine stay in the
// hundreds, so dense exact elimination beats sparse bookkeeping.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Rational> col(std::size_t c) const;
    void set_col(std::size_t c, const std::vector<Rational>& v);

    bool operator==(const QMat& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

QMat mul(const QMat& a, const QMat& b);
QMat add(const QMat& a, const QMat& b);
std::vector<Rational> matvec(const QMat& a, const std::vector<Rational>& v);
QMat hcat(const QMat& a, const QMat& b);
bool is_zero(const QMat& a);

// In-place reduced row echelon form. Returns the pivot columns in
// increasing order (lexicographic-first pivots). Among candidate pivot
// rows the one with the fewest nonzero entries is chosen.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank(QMat m);

// Columns form a basis of { x : m x = 0 }.
QMat kernel_basis(const QMat& m);

// Any solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMat& a, const std::vector<Rational>& b);

// Column-wise solve A X = B; nullopt if any column is inconsistent.
std::optional<QMat> solve_cols(const QMat& a, const QMat& b);

// Indices of a maximal independent subset of columns, scanning left to
// right (so earlier columns are preferred).
std::vector<std::size_t> independent_cols(const QMat& m);

bool in_column_span(const QMat& cols, const std::vector<Rational>& v);

}  // namespace derham
