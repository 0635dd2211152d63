#include "derham/cochain.hpp"

namespace derham {

Cochain add(const Cochain& a, const Cochain& b)
{
    if (a.degree != b.degree)
        throw argument_error("cochain degree mismatch");
    Cochain r = a;
    for (const auto& [g, v] : b.values)
        r.set(g, r.eval(SimplexRef{r.degree, g, {}}) + v);
    return r;
}

Cochain scale(const Rational& c, const Cochain& a)
{
    Cochain r;
    r.degree = a.degree;
    if (is_zero(c))
        return r;
    for (const auto& [g, v] : a.values)
        r.values[g] = c * v;
    return r;
}

bool CochainComplex::is_complex() const
{
    for (std::size_t p = 0; p + 1 < d.size(); ++p)
        if (!derham::is_zero(mul(d[p + 1], d[p])))
            return false;
    return true;
}

Cochain coboundary(const FiniteSimplicialSet& K, const Cochain& c)
{
    Cochain r;
    r.degree = c.degree + 1;
    for (int g : K.generators_of_dim(r.degree)) {
        Rational v = 0;
        SimplexRef s = K.ref(g);
        for (int i = 0; i <= r.degree; ++i) {
            Rational t = c.eval(K.face(s, i));
            if (i % 2)
                v -= t;
            else
                v += t;
        }
        r.set(g, v);
    }
    return r;
}

Cochain cup(const FiniteSimplicialSet& K, const Cochain& a, const Cochain& b)
{
    int p = a.degree, q = b.degree;
    Cochain r;
    r.degree = p + q;
    for (int g : K.generators_of_dim(p + q)) {
        SimplexRef front = K.ref(g);
        for (int t = 0; t < q; ++t)
            front = K.face(front, front.dim);
        SimplexRef back = K.ref(g);
        for (int t = 0; t < p; ++t)
            back = K.face(back, 0);
        r.set(g, a.eval(front) * b.eval(back));
    }
    return r;
}

Cochain unit_cochain(const FiniteSimplicialSet& K)
{
    Cochain r;
    r.degree = 0;
    for (int g : K.generators_of_dim(0))
        r.values[g] = 1;
    return r;
}

CochainComplex cochain_complex(const FiniteSimplicialSet& K, int top)
{
    if (top < 0)
        top = K.max_dim();
    CochainComplex C;
    C.dims.resize(top + 1);
    for (int p = 0; p <= top; ++p)
        C.dims[p] = K.generators_of_dim(p).size();
    C.d.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        std::size_t nrows = (p + 1 <= top) ? C.dims[p + 1] : 0;
        QMat m(nrows, C.dims[p]);
        if (nrows) {
            const auto& rows = K.generators_of_dim(p + 1);
            // column index of each p-generator
            std::map<int, std::size_t> colof;
            const auto& cols = K.generators_of_dim(p);
            for (std::size_t j = 0; j < cols.size(); ++j)
                colof[cols[j]] = j;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                SimplexRef s = K.ref(rows[i]);
                for (int k = 0; k <= p + 1; ++k) {
                    SimplexRef f = K.face(s, k);
                    if (f.degenerate())
                        continue;
                    Rational sign = (k % 2) ? -1 : 1;
                    m.at(i, colof.at(f.gen)) += sign;
                }
            }
        }
        C.d[p] = std::move(m);
    }
    return C;
}

std::vector<Rational> cochain_to_vector(const FiniteSimplicialSet& K, const Cochain& c)
{
    const auto& gens = K.generators_of_dim(c.degree);
    std::vector<Rational> v(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        v[j] = c.eval(SimplexRef{c.degree, gens[j], {}});
    return v;
}

Cochain vector_to_cochain(const FiniteSimplicialSet& K, int degree, const std::vector<Rational>& v)
{
    const auto& gens = K.generators_of_dim(degree);
    if (gens.size() != v.size())
        throw argument_error("vector_to_cochain size mismatch");
    Cochain c;
    c.degree = degree;
    for (std::size_t j = 0; j < gens.size(); ++j)
        c.set(gens[j], v[j]);
    return c;
}

}  // namespace derham
