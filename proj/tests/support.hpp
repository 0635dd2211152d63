#pragma once

// Shared test utilities: deterministic RNG, random objects, and small
// independent oracles kept deliberately separate from the library
// implementation paths they check.

#include <random>
#include <vector>

#include "derham/cochain.hpp"
#include "derham/polyform.hpp"
#include "derham/sset.hpp"

namespace testsupport {

using derham::Cochain;
using derham::FiniteSimplicialSet;
using derham::PolyForm;
using derham::QMat;
using derham::Rational;
using derham::TermKey;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Random p-form on Delta^n with polynomial degree <= polydeg; a few
// random monomial terms, possibly zero.
inline PolyForm random_polyform(Rng& rng, int n, int fdeg, int polydeg, int nterms = 4)
{
    PolyForm f = PolyForm::zero(n, fdeg);
    if (fdeg > n)
        return f;
    std::uniform_int_distribution<int> expd(0, polydeg);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> exps(n, 0);
        int budget = expd(rng);
        for (int b = 0; b < budget && n > 0; ++b)
            exps[std::uniform_int_distribution<int>(0, n - 1)(rng)] += 1;
        // random strictly increasing part of size fdeg
        std::vector<int> all;
        for (int v = 1; v <= n; ++v)
            all.push_back(v);
        for (int v = n - 1; v > 0; --v)
            std::swap(all[v], all[std::uniform_int_distribution<int>(0, v)(rng)]);
        std::vector<int> part(all.begin(), all.begin() + fdeg);
        std::sort(part.begin(), part.end());
        f.add_term(TermKey{std::move(part), std::move(exps)}, random_rational(rng));
    }
    return f;
}

inline Cochain random_cochain(Rng& rng, const FiniteSimplicialSet& K, int degree)
{
    Cochain c;
    c.degree = degree;
    for (int g : K.generators_of_dim(degree))
        c.set(g, random_rational(rng));
    return c;
}

// Independent oracle: plain textbook Gaussian elimination rank, no
// pivot-selection tricks shared with the library routine.
inline std::size_t brute_rank(QMat m)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r)
            if (!derham::is_zero(m.at(r, col))) {
                sel = r;
                break;
            }
        if (sel == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m.at(rank, j), m.at(sel, j));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || derham::is_zero(m.at(r, col)))
                continue;
            Rational f = m.at(r, col) / m.at(rank, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(r, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Oracle Betti number: dim ker d_p - rank d_{p-1} by brute elimination.
inline std::size_t brute_betti(const derham::CochainComplex& C, int p)
{
    std::size_t kerdim;
    if (p > C.top_degree())
        return 0;
    if (C.d[p].rows() == 0)
        kerdim = C.dims[p];
    else
        kerdim = C.dims[p] - brute_rank(C.d[p]);
    std::size_t imdim = 0;
    if (p > 0 && p - 1 <= C.top_degree())
        imdim = brute_rank(C.d[p - 1]);
    return kerdim - imdim;
}

// Independent quadrature oracle for top-degree integrals over the
// standard simplex: iterated Gauss-Legendre, exact to machine precision
// for the polynomial degrees used in tests. Evaluates the coefficient
// of dt_1^...^dt_n numerically on the region t_i >= 0, sum <= 1.
double quadrature_integral(const PolyForm& f);

}  // namespace testsupport
