#include "derham/homalg.hpp"

#include <algorithm>

namespace derham {

int chain_map_defect(const CochainComplex& src, const CochainComplex& tgt, const GradedMap& f)
{
    int top = std::min(src.top_degree(), tgt.top_degree());
    for (int p = 0; p < top; ++p) {
        // d_tgt f_p = f_{p+1} d_src
        QMat lhs = mul(tgt.d[p], f.mats[p]);
        QMat rhs = mul(f.mats[p + 1], src.d[p]);
        if (!(lhs == rhs))
            return p;
    }
    return -1;
}

CohomologyReport cohomology(const CochainComplex& C, int lo, int hi)
{
    if (!C.is_complex())
        throw precondition_error("cohomology: d o d != 0");
    if (lo < 0 || hi < lo)
        throw argument_error("cohomology: bad degree range");
    CohomologyReport rep;
    rep.lo = lo;
    rep.hi = hi;
    for (int p = lo; p <= hi; ++p) {
        std::size_t np = (p <= C.top_degree()) ? C.dims[p] : 0;
        QMat dp = (p <= C.top_degree()) ? C.d[p] : QMat(0, 0);
        QMat Z = (dp.rows() == 0) ? QMat::identity(np) : kernel_basis(dp);

        QMat B(np, 0);
        if (p > 0 && p - 1 <= C.top_degree() && C.d[p - 1].rows() == np) {
            const QMat& dprev = C.d[p - 1];
            std::vector<std::size_t> ind = independent_cols(dprev);
            B = QMat(np, ind.size());
            for (std::size_t j = 0; j < ind.size(); ++j)
                B.set_col(j, dprev.col(ind[j]));
        }

        // complete the image basis inside the cocycles
        QMat both = hcat(B, Z);
        std::vector<std::size_t> piv = independent_cols(both);
        std::vector<std::size_t> reps;
        for (std::size_t c : piv)
            if (c >= B.cols())
                reps.push_back(c - B.cols());
        QMat R(np, reps.size());
        for (std::size_t j = 0; j < reps.size(); ++j)
            R.set_col(j, Z.col(reps[j]));

        rep.dims.push_back(reps.size());
        rep.representatives.push_back(std::move(R));
        rep.coboundary_basis.push_back(std::move(B));
    }
    return rep;
}

std::optional<std::vector<Rational>> class_coordinates(const CochainComplex& C,
                                                       const CohomologyReport& rep, int p,
                                                       const std::vector<Rational>& x)
{
    if (p < rep.lo || p > rep.hi)
        throw argument_error("class_coordinates: degree outside report range");
    if (p <= C.top_degree() && C.d[p].rows() > 0) {
        std::vector<Rational> dx = matvec(C.d[p], x);
        for (const Rational& v : dx)
            if (!is_zero(v))
                return std::nullopt;
    }
    const QMat& B = rep.coboundary_basis[p - rep.lo];
    const QMat& R = rep.representatives[p - rep.lo];
    auto sol = solve(hcat(B, R), x);
    if (!sol)
        throw std::logic_error("class_coordinates: cocycle outside ker = im + reps");
    std::vector<Rational> coords(R.cols());
    for (std::size_t j = 0; j < R.cols(); ++j)
        coords[j] = (*sol)[B.cols() + j];
    return coords;
}

std::vector<QMat> induced_map(const CochainComplex& src, const CochainComplex& tgt,
                              const GradedMap& f, const CohomologyReport& src_rep,
                              const CohomologyReport& tgt_rep)
{
    int defect = chain_map_defect(src, tgt, f);
    if (defect >= 0)
        throw precondition_error("induced_map: not a chain map at degree " +
                                 std::to_string(defect));
    if (src_rep.lo != tgt_rep.lo || src_rep.hi != tgt_rep.hi)
        throw argument_error("induced_map: report ranges differ");
    std::vector<QMat> out;
    for (int p = src_rep.lo; p <= src_rep.hi; ++p) {
        const QMat& R = src_rep.representatives[p - src_rep.lo];
        QMat m(tgt_rep.dims[p - tgt_rep.lo], R.cols());
        for (std::size_t j = 0; j < R.cols(); ++j) {
            std::vector<Rational> img = matvec(f.mats[p], R.col(j));
            auto coords = class_coordinates(tgt, tgt_rep, p, img);
            if (!coords)
                throw std::logic_error("induced_map: image of a cocycle is not a cocycle");
            m.set_col(j, *coords);
        }
        out.push_back(std::move(m));
    }
    return out;
}

QuasiIsoReport is_quasi_iso(const CochainComplex& src, const CochainComplex& tgt,
                            const GradedMap& f, int lo, int hi)
{
    QuasiIsoReport rep;
    CohomologyReport hs = cohomology(src, lo, hi);
    CohomologyReport ht = cohomology(tgt, lo, hi);
    std::vector<QMat> hf = induced_map(src, tgt, f, hs, ht);
    for (int p = lo; p <= hi; ++p) {
        const QMat& m = hf[p - lo];
        if (m.rows() != m.cols() || rank(m) != m.rows()) {
            rep.ok = false;
            rep.failing_degree = p;
            return rep;
        }
        // determinant via elimination on a copy
        QMat c = m;
        Rational det = 1;
        for (std::size_t i = 0; i < c.rows(); ++i) {
            std::size_t piv = i;
            while (piv < c.rows() && is_zero(c.at(piv, i)))
                ++piv;
            if (piv == c.rows()) {
                det = 0;
                break;
            }
            if (piv != i) {
                for (std::size_t j = 0; j < c.cols(); ++j)
                    std::swap(c.at(i, j), c.at(piv, j));
                det = -det;
            }
            det *= c.at(i, i);
            Rational inv = 1 / c.at(i, i);
            for (std::size_t r = i + 1; r < c.rows(); ++r) {
                if (is_zero(c.at(r, i)))
                    continue;
                Rational fac = c.at(r, i) * inv;
                for (std::size_t j = i; j < c.cols(); ++j)
                    c.at(r, j) -= fac * c.at(i, j);
            }
        }
        rep.determinants.push_back(det);
    }
    rep.ok = true;
    return rep;
}

std::vector<QMat> simplex_chain_boundary(int n)
{
    // b[p]: N_p -> N_{p-1} for p = 0..n+1, with N_{n+1} = 0
    std::vector<QMat> b(n + 2);
    std::vector<std::vector<std::vector<int>>> basis(n + 2);
    std::vector<std::map<std::vector<int>, std::size_t>> idx(n + 2);
    for (int p = 0; p <= n + 1; ++p) {
        basis[p] = increasing_tuples(n, p + 1);
        for (std::size_t i = 0; i < basis[p].size(); ++i)
            idx[p][basis[p][i]] = i;
    }
    b[0] = QMat(0, basis[0].size());
    for (int p = 1; p <= n + 1; ++p) {
        QMat m(basis[p - 1].size(), basis[p].size());
        for (std::size_t c = 0; c < basis[p].size(); ++c)
            for (int i = 0; i <= p; ++i) {
                std::vector<int> f = basis[p][c];
                f.erase(f.begin() + i);
                Rational sign = (i % 2) ? -1 : 1;
                m.at(idx[p - 1].at(f), c) += sign;
            }
        b[p] = std::move(m);
    }
    return b;
}

std::vector<QMat> cone_contraction(int n)
{
    if (n < 0)
        throw argument_error("cone_contraction: n must be >= 0");
    std::vector<QMat> h(n + 1);
    std::vector<std::vector<std::vector<int>>> basis(n + 2);
    std::vector<std::map<std::vector<int>, std::size_t>> idx(n + 2);
    for (int p = 0; p <= n + 1; ++p) {
        basis[p] = increasing_tuples(n, p + 1);
        for (std::size_t i = 0; i < basis[p].size(); ++i)
            idx[p][basis[p][i]] = i;
    }
    for (int p = 0; p <= n; ++p) {
        QMat m(basis[p + 1].size(), basis[p].size());
        for (std::size_t c = 0; c < basis[p].size(); ++c) {
            const auto& t = basis[p][c];
            if (t[0] == 0)
                continue;  // join repeats the vertex: degenerate, hence 0
            std::vector<int> joined;
            joined.reserve(t.size() + 1);
            joined.push_back(0);
            joined.insert(joined.end(), t.begin(), t.end());
            m.at(idx[p + 1].at(joined), c) = 1;
        }
        h[p] = std::move(m);
    }
    return h;
}

}  // namespace derham
