#include "derham/forms.hpp"

#include <algorithm>

namespace derham {

namespace {

// theta of the i-th coface [n-1] -> [n] (omit i)
std::vector<int> coface_theta(int i, int n)
{
    std::vector<int> th;
    for (int v = 0; v <= n; ++v)
        if (v != i)
            th.push_back(v);
    return th;
}

// theta of the j-th codegeneracy [d+1] -> [d] (hit j twice)
std::vector<int> codegeneracy_theta(int j, int d)
{
    std::vector<int> th;
    for (int v = 0; v <= d + 1; ++v)
        th.push_back(v <= j ? v : v - 1);
    return th;
}

std::vector<int> compose_tuple(const std::vector<int>& theta, const std::vector<int>& tau)
{
    std::vector<int> out(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i)
        out[i] = theta[tau[i]];
    return out;
}

bool strictly_increasing(const std::vector<int>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i])
            return false;
    return true;
}

}  // namespace

SimplicialForm zero_simplicial_form(const FiniteSimplicialSet& K, int degree)
{
    SimplicialForm w;
    w.degree = degree;
    for (int g = 0; g < K.num_generators(); ++g)
        w.values.push_back(PolyForm::zero(K.dim_of(g), degree));
    return w;
}

PolyForm value_on_ref(const FiniteSimplicialSet& K, const SimplicialForm& w,
                      const SimplexRef& ref)
{
    PolyForm v = w.values[ref.gen];
    for (std::size_t t = ref.degens.size(); t-- > 0;)
        v = degeneracy_pullback(ref.degens[t], v);
    return v;
}

ValidationResult validate(const FiniteSimplicialSet& K, const SimplicialForm& w)
{
    ValidationResult res;
    if (static_cast<int>(w.values.size()) != K.num_generators()) {
        res.violations.push_back({-1, -1});
        return res;
    }
    for (int g = 0; g < K.num_generators(); ++g) {
        const PolyForm& v = w.values[g];
        if (v.ambient() != K.dim_of(g) || (!v.zerop() && v.form_degree() != w.degree)) {
            res.violations.push_back({g, -1});
            continue;
        }
        int n = K.dim_of(g);
        for (int i = 0; i <= n && n >= 1; ++i) {
            PolyForm lhs = coface_pullback(i, v);
            PolyForm rhs = value_on_ref(K, w, K.faces_of(g)[i]);
            if (!(lhs == rhs))
                res.violations.push_back({g, i});
        }
    }
    return res;
}

SimplicialForm form_add(const FiniteSimplicialSet& K, const SimplicialForm& a,
                        const SimplicialForm& b)
{
    if (a.degree != b.degree)
        throw argument_error("form_add: degree mismatch");
    SimplicialForm r = a;
    for (int g = 0; g < K.num_generators(); ++g)
        r.values[g] = add(a.values[g], b.values[g]);
    return r;
}

SimplicialForm form_scale(const Rational& c, const SimplicialForm& a)
{
    SimplicialForm r = a;
    for (auto& v : r.values)
        v = scale(c, v);
    return r;
}

SimplicialForm form_wedge(const FiniteSimplicialSet& K, const SimplicialForm& a,
                          const SimplicialForm& b)
{
    SimplicialForm r;
    r.degree = a.degree + b.degree;
    for (int g = 0; g < K.num_generators(); ++g)
        r.values.push_back(wedge(a.values[g], b.values[g]));
    return r;
}

SimplicialForm form_d(const FiniteSimplicialSet& K, const SimplicialForm& a)
{
    SimplicialForm r;
    r.degree = a.degree + 1;
    for (int g = 0; g < K.num_generators(); ++g)
        r.values.push_back(differential(a.values[g]));
    return r;
}

SimplicialForm pullback_along_char(const FiniteSimplicialSet& K, int gen,
                                   const SimplicialForm& w)
{
    int n = K.dim_of(gen);
    FiniteSimplicialSet D = std_simplex(n);
    SimplicialForm r;
    r.degree = w.degree;
    for (int g = 0; g < D.num_generators(); ++g) {
        std::vector<int> tup = parse_tuple_name(D.name_of(g));
        r.values.push_back(value_on_ref(K, w, K.restrict_ref(K.ref(gen), tup)));
    }
    return r;
}

Cochain cochain_pullback_along_char(const FiniteSimplicialSet& K, int gen, const Cochain& c)
{
    int n = K.dim_of(gen);
    FiniteSimplicialSet D = std_simplex(n);
    Cochain r;
    r.degree = c.degree;
    for (int g : D.generators_of_dim(c.degree)) {
        std::vector<int> tup = parse_tuple_name(D.name_of(g));
        r.set(g, c.eval(K.restrict_ref(K.ref(gen), tup)));
    }
    return r;
}

Cochain integrate(const FiniteSimplicialSet& K, const SimplicialForm& w)
{
    ValidationResult chk = validate(K, w);
    if (!chk.ok())
        throw precondition_error("integrate: form is not simplicial (" +
                                 std::to_string(chk.violations.size()) + " violations)");
    Cochain c;
    c.degree = w.degree;
    for (int g : K.generators_of_dim(w.degree))
        c.set(g, integrate_top(w.values[g]));
    return c;
}

SimplicialForm whitney_extension(const FiniteSimplicialSet& K, const Cochain& c)
{
    int p = c.degree;
    SimplicialForm r = zero_simplicial_form(K, p);
    for (int g = 0; g < K.num_generators(); ++g) {
        int n = K.dim_of(g);
        if (p > n)
            continue;
        PolyForm acc = PolyForm::zero(n, p);
        for (const auto& tau : increasing_tuples(n, p + 1)) {
            Rational coeff = c.eval(K.restrict_ref(K.ref(g), tau));
            if (is_zero(coeff))
                continue;
            acc = add(acc, scale(coeff, whitney_form(n, tau)));
        }
        r.values[g] = std::move(acc);
    }
    return r;
}

// --- C_PL ---------------------------------------------------------------

std::map<std::vector<int>, Rational> cpl_pullback(const std::vector<int>& theta,
                                                  const std::map<std::vector<int>, Rational>& v)
{
    std::map<std::vector<int>, Rational> out;
    if (v.empty())
        return out;
    int m = static_cast<int>(theta.size()) - 1;
    int size = static_cast<int>(v.begin()->first.size());
    for (const auto& taup : increasing_tuples(m, size)) {
        std::vector<int> comp = compose_tuple(theta, taup);
        if (!strictly_increasing(comp))
            continue;
        auto it = v.find(comp);
        if (it != v.end() && !is_zero(it->second))
            out[taup] = it->second;
    }
    return out;
}

namespace {

std::map<std::vector<int>, Rational> cpl_value_on_ref(
    const FiniteSimplicialSet& K, const CPLElement& g, const SimplexRef& ref)
{
    std::map<std::vector<int>, Rational> v = g.values[ref.gen];
    int d = K.dim_of(ref.gen);
    for (std::size_t t = ref.degens.size(); t-- > 0;) {
        v = cpl_pullback(codegeneracy_theta(ref.degens[t], d), v);
        ++d;
    }
    return v;
}

}  // namespace

ValidationResult validate_cpl(const FiniteSimplicialSet& K, const CPLElement& g)
{
    ValidationResult res;
    if (static_cast<int>(g.values.size()) != K.num_generators()) {
        res.violations.push_back({-1, -1});
        return res;
    }
    for (int s = 0; s < K.num_generators(); ++s) {
        int n = K.dim_of(s);
        for (const auto& [tau, val] : g.values[s])
            if (static_cast<int>(tau.size()) != g.degree + 1 || !strictly_increasing(tau) ||
                tau.front() < 0 || tau.back() > n) {
                res.violations.push_back({s, -1});
                break;
            }
        for (int i = 0; i <= n && n >= 1; ++i) {
            auto lhs = cpl_pullback(coface_theta(i, n), g.values[s]);
            auto rhs = cpl_value_on_ref(K, g, K.faces_of(s)[i]);
            if (lhs != rhs)
                res.violations.push_back({s, i});
        }
    }
    return res;
}

CPLElement cpl_coboundary(const FiniteSimplicialSet& K, const CPLElement& g)
{
    CPLElement r;
    r.degree = g.degree + 1;
    r.values.resize(K.num_generators());
    for (int s = 0; s < K.num_generators(); ++s) {
        int n = K.dim_of(s);
        for (const auto& rho : increasing_tuples(n, g.degree + 2)) {
            Rational acc = 0;
            for (int i = 0; i <= g.degree + 1; ++i) {
                std::vector<int> face = rho;
                face.erase(face.begin() + i);
                auto it = g.values[s].find(face);
                if (it == g.values[s].end())
                    continue;
                acc += (i % 2) ? -it->second : it->second;
            }
            if (!is_zero(acc))
                r.values[s][rho] = acc;
        }
    }
    return r;
}

Cochain nu(const FiniteSimplicialSet& K, const CPLElement& g)
{
    ValidationResult chk = validate_cpl(K, g);
    if (!chk.ok())
        throw precondition_error("nu: family is not simplicial");
    Cochain c;
    c.degree = g.degree;
    std::vector<int> id_tuple;
    for (int v = 0; v <= g.degree; ++v)
        id_tuple.push_back(v);
    for (int s : K.generators_of_dim(g.degree)) {
        auto it = g.values[s].find(id_tuple);
        if (it != g.values[s].end())
            c.set(s, it->second);
    }
    return c;
}

CPLElement nu_inverse(const FiniteSimplicialSet& K, const Cochain& c)
{
    CPLElement g;
    g.degree = c.degree;
    g.values.resize(K.num_generators());
    for (int s = 0; s < K.num_generators(); ++s) {
        int n = K.dim_of(s);
        for (const auto& tau : increasing_tuples(n, c.degree + 1)) {
            Rational v = c.eval(K.restrict_ref(K.ref(s), tau));
            if (!is_zero(v))
                g.values[s][tau] = v;
        }
    }
    return g;
}

// --- tensor complex ------------------------------------------------------

void TensorForm::add_term(int gen, const std::vector<int>& tuple, const PolyForm& w)
{
    if (w.zerop())
        return;
    auto& m = values[gen];
    auto it = m.find(tuple);
    if (it == m.end()) {
        m.emplace(tuple, w);
    } else {
        it->second = add(it->second, w);
        if (it->second.zerop())
            m.erase(it);
    }
}

TensorForm zero_tensor_form(const FiniteSimplicialSet& K, int degree)
{
    TensorForm x;
    x.degree = degree;
    x.values.resize(K.num_generators());
    return x;
}

namespace {

std::map<std::vector<int>, PolyForm> tensor_pullback(const std::vector<int>& theta,
                                                     const std::map<std::vector<int>, PolyForm>& v)
{
    std::map<std::vector<int>, PolyForm> out;
    int m = static_cast<int>(theta.size()) - 1;
    for (const auto& [tau, w] : v) {
        for (const auto& taup : increasing_tuples(m, static_cast<int>(tau.size()))) {
            if (compose_tuple(theta, taup) != tau)
                continue;
            PolyForm img = affine_pullback(theta, w);
            if (img.zerop())
                continue;
            auto it = out.find(taup);
            if (it == out.end())
                out.emplace(taup, std::move(img));
            else {
                it->second = add(it->second, img);
                if (it->second.zerop())
                    out.erase(it);
            }
        }
    }
    return out;
}

std::map<std::vector<int>, PolyForm> tensor_value_on_ref(
    const FiniteSimplicialSet& K, const TensorForm& x, const SimplexRef& ref)
{
    std::map<std::vector<int>, PolyForm> v = x.values[ref.gen];
    int d = K.dim_of(ref.gen);
    for (std::size_t t = ref.degens.size(); t-- > 0;) {
        v = tensor_pullback(codegeneracy_theta(ref.degens[t], d), v);
        ++d;
    }
    return v;
}

}  // namespace

ValidationResult validate_tensor(const FiniteSimplicialSet& K, const TensorForm& x)
{
    ValidationResult res;
    if (static_cast<int>(x.values.size()) != K.num_generators()) {
        res.violations.push_back({-1, -1});
        return res;
    }
    for (int s = 0; s < K.num_generators(); ++s) {
        int n = K.dim_of(s);
        for (const auto& [tau, w] : x.values[s]) {
            int q = static_cast<int>(tau.size()) - 1;
            if (!strictly_increasing(tau) || tau.front() < 0 || tau.back() > n ||
                w.ambient() != n || (!w.zerop() && w.form_degree() != x.degree - q)) {
                res.violations.push_back({s, -1});
                break;
            }
        }
        for (int i = 0; i <= n && n >= 1; ++i) {
            auto lhs = tensor_pullback(coface_theta(i, n), x.values[s]);
            auto rhs = tensor_value_on_ref(K, x, K.faces_of(s)[i]);
            if (lhs != rhs)
                res.violations.push_back({s, i});
        }
    }
    return res;
}

TensorForm tensor_add(const FiniteSimplicialSet& K, const TensorForm& a, const TensorForm& b)
{
    if (a.degree != b.degree)
        throw argument_error("tensor_add: degree mismatch");
    TensorForm r = a;
    for (int g = 0; g < K.num_generators(); ++g)
        for (const auto& [tau, w] : b.values[g])
            r.add_term(g, tau, w);
    return r;
}

TensorForm tensor_scale(const Rational& c, const TensorForm& a)
{
    TensorForm r = a;
    for (auto& m : r.values)
        for (auto it = m.begin(); it != m.end();) {
            it->second = scale(c, it->second);
            it = it->second.zerop() ? m.erase(it) : std::next(it);
        }
    return r;
}

TensorForm tensor_d(const FiniteSimplicialSet& K, const TensorForm& x)
{
    TensorForm r = zero_tensor_form(K, x.degree + 1);
    for (int g = 0; g < K.num_generators(); ++g) {
        int n = K.dim_of(g);
        for (const auto& [tau, w] : x.values[g]) {
            int q = static_cast<int>(tau.size()) - 1;
            // delta of the indicator cochain: insert a missing vertex
            for (int v = 0; v <= n; ++v) {
                if (std::binary_search(tau.begin(), tau.end(), v))
                    continue;
                std::vector<int> rho = tau;
                auto pos = std::upper_bound(rho.begin(), rho.end(), v);
                int i = static_cast<int>(pos - rho.begin());
                rho.insert(pos, v);
                r.add_term(g, rho, (i % 2) ? scale(-1, w) : w);
            }
            // (-1)^{|tau|} tau (x) dw
            PolyForm dw = differential(w);
            r.add_term(g, tau, (q % 2) ? scale(-1, dw) : dw);
        }
    }
    return r;
}

TensorForm tensor_mult(const FiniteSimplicialSet& K, const TensorForm& a, const TensorForm& b)
{
    TensorForm r = zero_tensor_form(K, a.degree + b.degree);
    for (int g = 0; g < K.num_generators(); ++g)
        for (const auto& [tau, w] : a.values[g])
            for (const auto& [tau2, w2] : b.values[g]) {
                if (tau.back() != tau2.front())
                    continue;
                std::vector<int> joined = tau;
                joined.insert(joined.end(), tau2.begin() + 1, tau2.end());
                if (!strictly_increasing(joined))
                    continue;
                int sign_exp = w.form_degree() * (static_cast<int>(tau2.size()) - 1);
                PolyForm prod = wedge(w, w2);
                r.add_term(g, joined, (sign_exp % 2) ? scale(-1, prod) : prod);
            }
    return r;
}

TensorForm phi(const FiniteSimplicialSet& K, const CPLElement& g)
{
    TensorForm r = zero_tensor_form(K, g.degree);
    for (int s = 0; s < K.num_generators(); ++s) {
        int n = K.dim_of(s);
        for (const auto& [tau, v] : g.values[s])
            r.add_term(s, tau, PolyForm::scalar(n, v));
    }
    return r;
}

TensorForm psi(const FiniteSimplicialSet& K, const SimplicialForm& w)
{
    TensorForm r = zero_tensor_form(K, w.degree);
    for (int s = 0; s < K.num_generators(); ++s) {
        int n = K.dim_of(s);
        for (int v = 0; v <= n; ++v)
            r.add_term(s, {v}, w.values[s]);
    }
    return r;
}

Cochain mult_one_tensor_int(const FiniteSimplicialSet& K, const TensorForm& x)
{
    int p = x.degree;
    Cochain c;
    c.degree = p;
    for (int g : K.generators_of_dim(p)) {
        Rational acc = 0;
        for (const auto& [tau, w] : x.values[g]) {
            int q = static_cast<int>(tau.size()) - 1;
            // front-face indicator must be the initial segment 0..q
            bool initial = true;
            for (int v = 0; v <= q; ++v)
                if (tau[v] != v) {
                    initial = false;
                    break;
                }
            if (!initial)
                continue;
            std::vector<int> back;
            for (int v = q; v <= p; ++v)
                back.push_back(v);
            acc += integrate_top(affine_pullback(back, w));
        }
        c.set(g, acc);
    }
    return c;
}

// --- truncated form complex ----------------------------------------------

TruncatedAK truncated_forms(const FiniteSimplicialSet& K, int D, int top)
{
    if (D < 1)
        throw argument_error("truncated_forms: D must be >= 1");
    if (top < 0)
        throw argument_error("truncated_forms: top must be >= 0");
    TruncatedAK t;
    t.D = D;
    t.top = top;

    // ambient direct sums and their per-generator offsets
    std::vector<std::vector<FormBasis>> bases(top + 1);
    t.offsets.resize(top + 1);
    t.ambient_dims.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        std::size_t off = 0;
        for (int g = 0; g < K.num_generators(); ++g) {
            bases[p].push_back(total_degree_basis(K.dim_of(g), p, D));
            t.offsets[p].push_back(off);
            off += bases[p][g].size();
        }
        t.ambient_dims[p] = off;
    }

    // compatibility constraints cut out the valid families
    std::map<std::pair<int, int>, QMat> coface_mats;        // (n, i)
    std::map<std::pair<int, std::vector<int>>, QMat> word_mats;  // (gen dim, word)
    std::vector<QMat> valid(top + 1);
    auto face_basis = [&](int p, int n) { return total_degree_basis(n, p, D); };

    for (int p = 0; p <= top; ++p) {
        std::size_t rows = 0;
        for (int g = 0; g < K.num_generators(); ++g) {
            int n = K.dim_of(g);
            if (n >= 1)
                rows += (n + 1) * face_basis(p, n - 1).size();
        }
        QMat C(rows, t.ambient_dims[p]);
        std::size_t roff = 0;
        for (int g = 0; g < K.num_generators(); ++g) {
            int n = K.dim_of(g);
            if (n < 1)
                continue;
            FormBasis fb_face = total_degree_basis(n - 1, p, D);
            for (int i = 0; i <= n; ++i) {
                auto key = std::make_pair(n, i);
                if (!coface_mats.count(key))
                    coface_mats.emplace(key, operator_matrix(bases[p][g], fb_face,
                                                             [i](const PolyForm& f) {
                                                                 return coface_pullback(i, f);
                                                             }));
                const QMat& M1 = coface_mats.at(key);
                for (std::size_t r = 0; r < M1.rows(); ++r)
                    for (std::size_t cc = 0; cc < M1.cols(); ++cc)
                        if (!is_zero(M1.at(r, cc)))
                            C.at(roff + r, t.offsets[p][g] + cc) += M1.at(r, cc);

                const SimplexRef& ref = K.faces_of(g)[i];
                auto wkey = std::make_pair(K.dim_of(ref.gen), ref.degens);
                if (!word_mats.count(wkey)) {
                    std::vector<int> word = ref.degens;
                    word_mats.emplace(
                        wkey, operator_matrix(bases[p][ref.gen], fb_face,
                                              [&word](const PolyForm& f) {
                                                  PolyForm v = f;
                                                  for (std::size_t u = word.size(); u-- > 0;)
                                                      v = degeneracy_pullback(word[u], v);
                                                  return v;
                                              }));
                }
                const QMat& M2 = word_mats.at(wkey);
                for (std::size_t r = 0; r < M2.rows(); ++r)
                    for (std::size_t cc = 0; cc < M2.cols(); ++cc)
                        if (!is_zero(M2.at(r, cc)))
                            C.at(roff + r, t.offsets[p][ref.gen] + cc) -= M2.at(r, cc);
                roff += fb_face.size();
            }
        }
        valid[p] = kernel_basis(C);
        // coface/word caches are degree-specific
        coface_mats.clear();
        word_mats.clear();
    }

    // induced differential in the valid bases
    t.complex.dims.resize(top + 1);
    t.complex.d.resize(top + 1);
    t.basis.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        t.basis[p] = valid[p];
        t.complex.dims[p] = valid[p].cols();
    }
    for (int p = 0; p < top; ++p) {
        // blockwise d on the ambient sum
        QMat damb(t.ambient_dims[p + 1], t.ambient_dims[p]);
        for (int g = 0; g < K.num_generators(); ++g) {
            QMat block = operator_matrix(bases[p][g], bases[p + 1][g],
                                         [](const PolyForm& f) { return differential(f); });
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t cc = 0; cc < block.cols(); ++cc)
                    if (!is_zero(block.at(r, cc)))
                        damb.at(t.offsets[p + 1][g] + r, t.offsets[p][g] + cc) = block.at(r, cc);
        }
        auto coords = solve_cols(valid[p + 1], mul(damb, valid[p]));
        if (!coords)
            throw std::logic_error("truncated_forms: differential leaves the subcomplex");
        t.complex.d[p] = std::move(*coords);
    }
    t.complex.d[top] = QMat(0, valid[top].cols());

    // integration map into C*(K)
    t.integration.mats.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        const auto& gens = K.generators_of_dim(p);
        QMat m(gens.size(), valid[p].cols());
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int g = gens[gi];
            const FormBasis& fb = bases[p][g];
            for (std::size_t c = 0; c < valid[p].cols(); ++c) {
                Rational acc = 0;
                for (std::size_t kk = 0; kk < fb.size(); ++kk) {
                    const Rational& coef = valid[p].at(t.offsets[p][g] + kk, c);
                    if (is_zero(coef))
                        continue;
                    PolyForm bf = PolyForm::zero(p, p);
                    bf.add_term(fb.keys[kk], 1);
                    acc += coef * integrate_top(bf);
                }
                m.at(gi, c) = acc;
            }
        }
        t.integration.mats[p] = std::move(m);
    }

    // Whitney section from C*(K); elementary p-forms have total degree
    // p+1, so the matrix only exists once D admits them
    t.whitney.mats.resize(top + 1);
    t.whitney_defined.assign(top + 1, true);
    for (int p = 0; p <= top; ++p) {
        const auto& gens = K.generators_of_dim(p);
        QMat amb(t.ambient_dims[p], gens.size());
        for (std::size_t gi = 0; gi < gens.size() && t.whitney_defined[p]; ++gi) {
            Cochain e;
            e.degree = p;
            e.set(gens[gi], 1);
            SimplicialForm w = whitney_extension(K, e);
            for (int g = 0; g < K.num_generators(); ++g) {
                if (w.values[g].poly_degree() + p > D) {
                    t.whitney_defined[p] = false;
                    break;
                }
                std::vector<Rational> vv = form_to_vector(w.values[g], bases[p][g]);
                for (std::size_t r = 0; r < vv.size(); ++r)
                    amb.at(t.offsets[p][g] + r, gi) = vv[r];
            }
        }
        if (!t.whitney_defined[p]) {
            t.whitney.mats[p] = QMat(0, 0);
            continue;
        }
        auto coords = solve_cols(valid[p], amb);
        if (!coords)
            throw std::logic_error("truncated_forms: Whitney image escapes the subcomplex");
        t.whitney.mats[p] = std::move(*coords);
    }

    return t;
}

std::vector<Rational> flatten_form(const FiniteSimplicialSet& K, const TruncatedAK& t,
                                   const SimplicialForm& w)
{
    int p = w.degree;
    if (p < 0 || p > t.top)
        throw argument_error("flatten_form: degree outside the truncation");
    std::vector<Rational> out(t.ambient_dims[p]);
    for (int g = 0; g < K.num_generators(); ++g) {
        FormBasis fb = total_degree_basis(K.dim_of(g), p, t.D);
        std::vector<Rational> vv = form_to_vector(w.values[g], fb);
        for (std::size_t r = 0; r < vv.size(); ++r)
            out[t.offsets[p][g] + r] = vv[r];
    }
    return out;
}

SimplicialForm unflatten_form(const FiniteSimplicialSet& K, const TruncatedAK& t, int degree,
                              const std::vector<Rational>& ambient)
{
    SimplicialForm w = zero_simplicial_form(K, degree);
    for (int g = 0; g < K.num_generators(); ++g) {
        FormBasis fb = total_degree_basis(K.dim_of(g), degree, t.D);
        std::vector<Rational> vv(fb.size());
        for (std::size_t r = 0; r < fb.size(); ++r)
            vv[r] = ambient[t.offsets[degree][g] + r];
        w.values[g] = vector_to_form(vv, fb);
    }
    return w;
}

std::vector<Rational> truncate_coords(const FiniteSimplicialSet& K, const TruncatedAK& t,
                                      const SimplicialForm& w)
{
    std::vector<Rational> amb = flatten_form(K, t, w);
    auto sol = solve(t.basis[w.degree], amb);
    if (!sol)
        throw argument_error("truncate_coords: form is not in the valid subcomplex");
    return *sol;
}

TruncatedCohomology truncated_cohomology_of_A(const FiniteSimplicialSet& K, int D, int lo,
                                              int hi)
{
    TruncatedAK t = truncated_forms(K, D, hi + 1);
    TruncatedCohomology out;
    out.D = D;
    out.report = cohomology(t.complex, lo, hi);
    for (int p = lo; p <= hi; ++p) {
        std::vector<SimplicialForm> reps;
        const QMat& R = out.report.representatives[p - lo];
        for (std::size_t c = 0; c < R.cols(); ++c) {
            std::vector<Rational> amb = matvec(t.basis[p], R.col(c));
            reps.push_back(unflatten_form(K, t, p, amb));
        }
        out.representatives.push_back(std::move(reps));
    }
    return out;
}

}  // namespace derham
