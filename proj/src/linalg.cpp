#include "derham/linalg.hpp"

#include <algorithm>

namespace derham {

QMat QMat::identity(std::size_t n)
{
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::vector<Rational> QMat::col(std::size_t c) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

void QMat::set_col(std::size_t c, const std::vector<Rational>& v)
{
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, c) = v[r];
}

QMat mul(const QMat& a, const QMat& b)
{
    if (a.cols() != b.rows())
        throw argument_error("matrix product shape mismatch");
    QMat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!is_zero(bkj))
                    r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

QMat add(const QMat& a, const QMat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw argument_error("matrix sum shape mismatch");
    QMat r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) += b.at(i, j);
    return r;
}

std::vector<Rational> matvec(const QMat& a, const std::vector<Rational>& v)
{
    if (a.cols() != v.size())
        throw argument_error("matrix-vector shape mismatch");
    std::vector<Rational> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a.at(i, j)) && !is_zero(v[j]))
                r[i] += a.at(i, j) * v[j];
    return r;
}

QMat hcat(const QMat& a, const QMat& b)
{
    if (a.rows() != b.rows())
        throw argument_error("hcat row mismatch");
    QMat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

bool is_zero(const QMat& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a.at(i, j)))
                return false;
    return true;
}

namespace {

std::size_t row_weight(const QMat& m, std::size_t r)
{
    std::size_t w = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_zero(m.at(r, j)))
            ++w;
    return w;
}

void swap_rows(QMat& m, std::size_t r1, std::size_t r2)
{
    if (r1 == r2)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(r1, j), m.at(r2, j));
}

}  // namespace

std::vector<std::size_t> rref(QMat& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // pivot choice: nonzero entry in this column with the sparsest row
        std::size_t best = m.rows();
        std::size_t best_w = 0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (is_zero(m.at(r, col)))
                continue;
            std::size_t w = row_weight(m, r);
            if (best == m.rows() || w < best_w) {
                best = r;
                best_w = w;
            }
        }
        if (best == m.rows())
            continue;
        swap_rows(m, row, best);

        Rational inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m.at(r, col)))
                continue;
            Rational f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(QMat m) { return rref(m).size(); }

QMat kernel_basis(const QMat& m)
{
    QMat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::size_t nullity = m.cols() - pivots.size();
    QMat ker(m.cols(), nullity);
    std::size_t k = 0;
    for (std::size_t freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec])
            continue;
        ker.at(freec, k) = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            ker.at(pivots[pi], k) = -r.at(pi, freec);
        ++k;
    }
    return ker;
}

std::optional<std::vector<Rational>> solve(const QMat& a, const std::vector<Rational>& b)
{
    if (a.rows() != b.size())
        throw argument_error("solve shape mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        x[pivots[pi]] = aug.at(pi, a.cols());
    return x;
}

std::optional<QMat> solve_cols(const QMat& a, const QMat& b)
{
    if (a.rows() != b.rows())
        throw argument_error("solve_cols shape mismatch");
    QMat aug = hcat(a, b);
    std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t p : pivots)
        if (p >= a.cols())
            return std::nullopt;
    QMat x(a.cols(), b.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[pi], j) = aug.at(pi, a.cols() + j);
    return x;
}

std::vector<std::size_t> independent_cols(const QMat& m)
{
    QMat r = m;
    return rref(r);
}

bool in_column_span(const QMat& cols, const std::vector<Rational>& v)
{
    return solve(cols, v).has_value();
}

}  // namespace derham
