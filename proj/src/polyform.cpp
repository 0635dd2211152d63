#include "derham/polyform.hpp"

#include <algorithm>
#include <sstream>

namespace derham {

PolyForm PolyForm::zero(int n, int fdeg)
{
    if (n < 0 || fdeg < 0)
        throw argument_error("PolyForm::zero: bad arguments");
    PolyForm f;
    f.n_ = n;
    f.fdeg_ = fdeg;
    return f;
}

PolyForm PolyForm::scalar(int n, const Rational& c)
{
    PolyForm f = PolyForm::zero(n, 0);
    f.add_term(TermKey{{}, std::vector<int>(n, 0)}, c);
    return f;
}

PolyForm PolyForm::coordinate(int n, int i)
{
    if (i < 1 || i > n)
        throw argument_error("coordinate index out of range");
    PolyForm f = PolyForm::zero(n, 0);
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    f.add_term(TermKey{{}, std::move(e)}, 1);
    return f;
}

PolyForm PolyForm::bary(int n, int i)
{
    if (i < 0 || i > n)
        throw argument_error("barycentric index out of range");
    if (i >= 1)
        return coordinate(n, i);
    PolyForm f = scalar(n, 1);
    for (int k = 1; k <= n; ++k)
        f = sub(f, coordinate(n, k));
    return f;
}

PolyForm PolyForm::dbary(int n, int i)
{
    if (i < 0 || i > n)
        throw argument_error("barycentric index out of range");
    PolyForm f = PolyForm::zero(n, 1);
    if (i >= 1) {
        f.add_term(TermKey{{i}, std::vector<int>(n, 0)}, 1);
    } else {
        for (int k = 1; k <= n; ++k)
            f.add_term(TermKey{{k}, std::vector<int>(n, 0)}, -1);
    }
    return f;
}

void PolyForm::add_term(TermKey key, const Rational& coeff)
{
    if (is_zero(coeff))
        return;
    if (static_cast<int>(key.exps.size()) != n_)
        throw argument_error("term exponent size mismatch");
    if (static_cast<int>(key.part.size()) != fdeg_)
        throw argument_error("term form degree mismatch");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (is_zero(it->second))
            terms_.erase(it);
    }
}

bool PolyForm::operator==(const PolyForm& o) const
{
    // zero forms compare equal regardless of declared degree
    return n_ == o.n_ && terms_ == o.terms_ &&
           (terms_.empty() || fdeg_ == o.fdeg_);
}

int PolyForm::poly_degree() const
{
    int d = -1;
    for (const auto& [k, c] : terms_) {
        int s = 0;
        for (int e : k.exps)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

PolyForm add(const PolyForm& a, const PolyForm& b)
{
    if (a.ambient() != b.ambient())
        throw argument_error("ambient dimension mismatch");
    if (!a.zerop() && !b.zerop() && a.form_degree() != b.form_degree())
        throw argument_error("form degree mismatch in sum");
    int fdeg = a.zerop() ? b.form_degree() : a.form_degree();
    PolyForm r = PolyForm::zero(a.ambient(), fdeg);
    for (const auto& [k, c] : a.terms())
        r.add_term(k, c);
    for (const auto& [k, c] : b.terms())
        r.add_term(k, c);
    return r;
}

PolyForm sub(const PolyForm& a, const PolyForm& b) { return add(a, scale(-1, b)); }

PolyForm scale(const Rational& c, const PolyForm& a)
{
    PolyForm r = PolyForm::zero(a.ambient(), a.form_degree());
    if (is_zero(c))
        return r;
    for (const auto& [k, v] : a.terms())
        r.add_term(k, c * v);
    return r;
}

namespace {

// merge strictly increasing dt-index lists; false if they intersect,
// sign = parity of the interleaving permutation
bool merge_parts(const std::vector<int>& p1, const std::vector<int>& p2,
                 std::vector<int>& out, int& sign)
{
    out.clear();
    out.reserve(p1.size() + p2.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < p1.size() && j < p2.size()) {
        if (p1[i] == p2[j])
            return false;
        if (p1[i] < p2[j]) {
            out.push_back(p1[i++]);
        } else {
            // p2[j] jumps over the remaining entries of p1
            inversions += static_cast<int>(p1.size() - i);
            out.push_back(p2[j++]);
        }
    }
    while (i < p1.size())
        out.push_back(p1[i++]);
    while (j < p2.size())
        out.push_back(p2[j++]);
    sign = (inversions % 2) ? -1 : 1;
    return true;
}

}  // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b)
{
    if (a.ambient() != b.ambient())
        throw argument_error("ambient dimension mismatch in wedge");
    int n = a.ambient();
    PolyForm r = PolyForm::zero(n, a.form_degree() + b.form_degree());
    std::vector<int> part;
    int sign;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (!merge_parts(ka.part, kb.part, part, sign))
                continue;
            std::vector<int> exps(n);
            for (int t = 0; t < n; ++t)
                exps[t] = ka.exps[t] + kb.exps[t];
            r.add_term(TermKey{part, std::move(exps)}, sign * ca * cb);
        }
    return r;
}

PolyForm differential(const PolyForm& a)
{
    int n = a.ambient();
    PolyForm r = PolyForm::zero(n, a.form_degree() + 1);
    for (const auto& [k, c] : a.terms()) {
        for (int v = 1; v <= n; ++v) {
            int e = k.exps[v - 1];
            if (e == 0)
                continue;
            // dt_v wedged in front of the existing part
            if (std::binary_search(k.part.begin(), k.part.end(), v))
                continue;
            std::vector<int> part;
            part.reserve(k.part.size() + 1);
            int before = 0;
            for (int s : k.part) {
                if (s < v)
                    ++before;
            }
            part.assign(k.part.begin(), k.part.end());
            part.insert(std::upper_bound(part.begin(), part.end(), v), v);
            int sign = (before % 2) ? -1 : 1;
            std::vector<int> exps = k.exps;
            exps[v - 1] -= 1;
            r.add_term(TermKey{std::move(part), std::move(exps)}, sign * Rational(e) * c);
        }
    }
    return r;
}

PolyForm affine_pullback(const std::vector<int>& theta, const PolyForm& a)
{
    int n = a.ambient();
    int p = static_cast<int>(theta.size()) - 1;
    if (p < 0)
        throw argument_error("affine_pullback: empty vertex map");
    for (std::size_t j = 0; j < theta.size(); ++j) {
        if (theta[j] < 0 || theta[j] > n)
            throw argument_error("affine_pullback: vertex image out of range");
        if (j > 0 && theta[j] < theta[j - 1])
            throw argument_error("affine_pullback: vertex map must be non-decreasing");
    }

    // images of t_k and dt_k under t_k = sum over theta^{-1}(k) of u_j
    std::vector<PolyForm> tsub(n + 1, PolyForm::zero(p, 0));
    std::vector<PolyForm> dtsub(n + 1, PolyForm::zero(p, 1));
    for (int j = 0; j <= p; ++j) {
        int k = theta[j];
        tsub[k] = add(tsub[k], PolyForm::bary(p, j));
        dtsub[k] = add(dtsub[k], PolyForm::dbary(p, j));
    }

    // cache powers of the polynomial images
    std::map<int, std::vector<PolyForm>> pow_cache;
    auto tpow = [&](int k, int e) -> const PolyForm& {
        auto& vec = pow_cache[k];
        if (vec.empty())
            vec.push_back(PolyForm::scalar(p, 1));
        while (static_cast<int>(vec.size()) <= e)
            vec.push_back(wedge(vec.back(), tsub[k]));
        return vec[e];
    };

    PolyForm r = PolyForm::zero(p, a.form_degree());
    for (const auto& [key, c] : a.terms()) {
        PolyForm term = PolyForm::scalar(p, c);
        for (int v = 1; v <= n; ++v)
            if (key.exps[v - 1] > 0)
                term = wedge(term, tpow(v, key.exps[v - 1]));
        for (int s : key.part)
            term = wedge(term, dtsub[s]);
        r = add(r, term);
    }
    return r;
}

PolyForm coface_pullback(int i, const PolyForm& a)
{
    int n = a.ambient();
    if (i < 0 || i > n)
        throw argument_error("coface index out of range");
    if (n == 0)
        throw argument_error("no cofaces into dimension -1");
    std::vector<int> theta;
    for (int v = 0; v <= n; ++v)
        if (v != i)
            theta.push_back(v);
    return affine_pullback(theta, a);
}

PolyForm degeneracy_pullback(int j, const PolyForm& a)
{
    int n = a.ambient();
    if (j < 0 || j > n)
        throw argument_error("degeneracy index out of range");
    std::vector<int> theta;
    for (int v = 0; v <= n + 1; ++v)
        theta.push_back(v <= j ? v : v - 1);
    return affine_pullback(theta, a);
}

Rational integrate_top(const PolyForm& a)
{
    int n = a.ambient();
    if (!a.zerop() && a.form_degree() != n)
        throw argument_error("integrate_top: form degree must equal ambient dimension");
    Rational total = 0;
    for (const auto& [k, c] : a.terms()) {
        mpz_class num = 1;
        long esum = 0;
        for (int e : k.exps) {
            num *= factorial(static_cast<unsigned long>(e));
            esum += e;
        }
        total += c * Rational(num) / Rational(factorial(static_cast<unsigned long>(n + esum)));
    }
    return total;
}

PolyForm contraction_homotopy(const PolyForm& a)
{
    int n = a.ambient();
    int p = a.form_degree();
    if (p == 0)
        return PolyForm::zero(n, 0);
    PolyForm r = PolyForm::zero(n, p - 1);
    for (const auto& [k, c] : a.terms()) {
        long esum = 0;
        for (int e : k.exps)
            esum += e;
        Rational coeff = c / Rational(esum + p);
        for (std::size_t j = 0; j < k.part.size(); ++j) {
            std::vector<int> part = k.part;
            int v = part[j];
            part.erase(part.begin() + j);
            std::vector<int> exps = k.exps;
            exps[v - 1] += 1;
            Rational sign = (j % 2) ? -1 : 1;
            r.add_term(TermKey{std::move(part), std::move(exps)}, sign * coeff);
        }
    }
    return r;
}

Rational vertex_evaluation(const PolyForm& a)
{
    if (a.form_degree() > 0)
        return 0;
    TermKey constant{{}, std::vector<int>(a.ambient(), 0)};
    auto it = a.terms().find(constant);
    return it == a.terms().end() ? Rational(0) : it->second;
}

PolyForm poincare_contraction(const PolyForm& a)
{
    if (a.form_degree() < 1)
        throw precondition_error("poincare_contraction: form degree must be >= 1");
    if (!differential(a).zerop())
        throw precondition_error("poincare_contraction: form is not closed");
    return contraction_homotopy(a);
}

PolyForm whitney_form(int n, const std::vector<int>& sigma)
{
    if (sigma.empty())
        throw argument_error("whitney_form: empty vertex sequence");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0 || sigma[i] > n)
            throw argument_error("whitney_form: vertex out of range");
        if (i > 0 && sigma[i] <= sigma[i - 1])
            throw argument_error("whitney_form: vertices must strictly increase");
    }
    int p = static_cast<int>(sigma.size()) - 1;
    PolyForm r = PolyForm::zero(n, p);
    for (int k = 0; k <= p; ++k) {
        PolyForm term = PolyForm::bary(n, sigma[k]);
        for (int i = 0; i <= p; ++i)
            if (i != k)
                term = wedge(term, PolyForm::dbary(n, sigma[i]));
        r = (k % 2) ? sub(r, term) : add(r, term);
    }
    return scale(Rational(factorial(static_cast<unsigned long>(p))), r);
}

void check_face_family(const FaceFamily& f)
{
    int fdeg = -1;
    for (const auto& [i, form] : f.forms) {
        if (i < 0 || i > f.n)
            throw argument_error("face index out of range in family");
        if (form.ambient() != f.n - 1)
            throw argument_error("face form has wrong ambient dimension");
        if (!form.zerop()) {
            if (fdeg == -1)
                fdeg = form.form_degree();
            else if (form.form_degree() != fdeg)
                throw argument_error("face family mixes form degrees");
        }
    }
    if (f.n < 2)
        return;  // pair conditions live one dimension further down
    for (auto it = f.forms.begin(); it != f.forms.end(); ++it)
        for (auto jt = std::next(it); jt != f.forms.end(); ++jt) {
            int i = it->first, j = jt->first;
            if (!(coface_pullback(i, jt->second) == coface_pullback(j - 1, it->second)))
                throw incompatible_faces(i, j);
        }
}

PolyForm extend_faces(const FaceFamily& f)
{
    if (f.n < 1)
        throw argument_error("extend_faces: n must be >= 1");
    check_face_family(f);
    if (f.forms.empty())
        return PolyForm::zero(f.n, 0);

    int fdeg = 0;
    int maxdeg = 0;
    bool all_zero = true;
    for (const auto& [i, form] : f.forms) {
        if (!form.zerop()) {
            fdeg = form.form_degree();
            all_zero = false;
        }
        maxdeg = std::max(maxdeg, form.poly_degree());
    }
    if (all_zero)
        return PolyForm::zero(f.n, fdeg);

    // Lemma-backed termination: some finite D admits a preimage.
    const int hard_cap = maxdeg + 16;
    for (int D = std::max(maxdeg, 0); D <= hard_cap; ++D) {
        FormBasis src(f.n, fdeg, D);
        FormBasis dst(f.n - 1, fdeg, D);
        QMat R(dst.size() * f.forms.size(), src.size());
        std::vector<Rational> rhs(dst.size() * f.forms.size());
        std::size_t block = 0;
        for (const auto& [i, form] : f.forms) {
            for (std::size_t c = 0; c < src.size(); ++c) {
                PolyForm bf = PolyForm::zero(f.n, fdeg);
                bf.add_term(src.keys[c], 1);
                std::vector<Rational> img = form_to_vector(coface_pullback(i, bf), dst);
                for (std::size_t rrow = 0; rrow < dst.size(); ++rrow)
                    R.at(block * dst.size() + rrow, c) = img[rrow];
            }
            std::vector<Rational> fv = form_to_vector(form, dst);
            for (std::size_t rrow = 0; rrow < dst.size(); ++rrow)
                rhs[block * dst.size() + rrow] = fv[rrow];
            ++block;
        }
        if (auto x = solve(R, rhs))
            return vector_to_form(*x, src);
    }
    throw std::logic_error("extend_faces: no preimage up to the degree cap");
}

namespace {

void monomials_up_to(int nvars, int D, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur(nvars, 0);
    // graded-free enumeration in plain odometer order; FormBasis sorts keys anyway
    while (true) {
        int s = 0;
        for (int e : cur)
            s += e;
        if (s <= D)
            out.push_back(cur);
        int k = nvars - 1;
        while (k >= 0 && cur[k] == D)
            --k;
        if (k < 0)
            break;
        ++cur[k];
        for (int t = k + 1; t < nvars; ++t)
            cur[t] = 0;
    }
}

void subsets_of_size(int n, int p, std::vector<std::vector<int>>& out)
{
    if (p == 0) {
        out.push_back({});
        return;
    }
    if (p > n)
        return;
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i)
        idx[i] = i + 1;
    while (true) {
        out.push_back(idx);
        int k = p - 1;
        while (k >= 0 && idx[k] == n - (p - 1 - k))
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (int t = k + 1; t < p; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

FormBasis::FormBasis(int n_, int p_, int D_) : n(n_), p(p_), D(D_)
{
    if (n < 0 || p < 0 || D < 0)
        throw argument_error("FormBasis: bad parameters");
    std::vector<std::vector<int>> monos;
    monomials_up_to(n, D, monos);
    std::vector<std::vector<int>> parts;
    subsets_of_size(n, p, parts);
    for (const auto& part : parts)
        for (const auto& m : monos)
            keys.push_back(TermKey{part, m});
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size(); ++i)
        index[keys[i]] = static_cast<int>(i);
}

FormBasis total_degree_basis(int n, int p, int D)
{
    if (p > D) {
        FormBasis fb(n, p, 0);
        fb.keys.clear();
        fb.index.clear();
        return fb;
    }
    return FormBasis(n, p, D - p);
}

std::vector<Rational> form_to_vector(const PolyForm& a, const FormBasis& basis)
{
    if (a.ambient() != basis.n)
        throw argument_error("form_to_vector: ambient mismatch");
    if (!a.zerop() && a.form_degree() != basis.p)
        throw argument_error("form_to_vector: degree mismatch");
    std::vector<Rational> v(basis.size());
    for (const auto& [k, c] : a.terms()) {
        auto it = basis.index.find(k);
        if (it == basis.index.end())
            throw argument_error("form_to_vector: polynomial degree exceeds basis bound");
        v[it->second] = c;
    }
    return v;
}

PolyForm vector_to_form(const std::vector<Rational>& v, const FormBasis& basis)
{
    if (v.size() != basis.size())
        throw argument_error("vector_to_form: size mismatch");
    PolyForm f = PolyForm::zero(basis.n, basis.p);
    for (std::size_t i = 0; i < v.size(); ++i)
        f.add_term(basis.keys[i], v[i]);
    return f;
}

QMat operator_matrix(const FormBasis& src, const FormBasis& dst,
                     const std::function<PolyForm(const PolyForm&)>& op)
{
    QMat m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        PolyForm bf = PolyForm::zero(src.n, src.p);
        bf.add_term(src.keys[c], 1);
        std::vector<Rational> img = form_to_vector(op(bf), dst);
        for (std::size_t r = 0; r < dst.size(); ++r)
            m.at(r, c) = img[r];
    }
    return m;
}

std::string to_string(const PolyForm& a)
{
    if (a.zerop())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str();
        for (int v = 1; v <= a.ambient(); ++v) {
            int e = k.exps[v - 1];
            if (e == 0)
                continue;
            os << " t" << v;
            if (e > 1)
                os << '^' << e;
        }
        if (!k.part.empty()) {
            os << ' ';
            for (std::size_t i = 0; i < k.part.size(); ++i) {
                if (i)
                    os << '^';
                os << "dt" << k.part[i];
            }
        }
    }
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool looks_like_rational(const std::string& a)
{
    if (a.empty())
        return false;
    std::size_t i = (a[0] == '-' || a[0] == '+') ? 1 : 0;
    return i < a.size() && std::isdigit(static_cast<unsigned char>(a[i]));
}

}  // namespace

PolyForm parse_polyform(int n, const std::string& text)
{
    std::string body = trim(text);
    if (body.empty())
        throw argument_error("empty form text");
    if (body == "0")
        return PolyForm::zero(n, 0);

    PolyForm result = PolyForm::zero(n, 0);
    bool degree_set = false;

    for (const std::string& raw : split(body, '+')) {
        std::string termtext = trim(raw);
        if (termtext.empty())
            throw argument_error("empty term in form text");
        std::istringstream is(termtext);
        std::string atom;
        Rational coeff = 1;
        PolyForm term = PolyForm::scalar(n, 1);
        bool first_atom = true;
        while (is >> atom) {
            if (first_atom && looks_like_rational(atom)) {
                coeff = parse_rational(atom);
                first_atom = false;
                continue;
            }
            first_atom = false;
            if (atom.rfind("dt", 0) == 0) {
                for (const std::string& piece : split(atom, '^')) {
                    if (piece.rfind("dt", 0) != 0)
                        throw argument_error("malformed form factor '" + atom + "'");
                    int v = std::stoi(piece.substr(2));
                    if (v < 0 || v > n)
                        throw argument_error("dt index out of range in '" + atom + "'");
                    term = wedge(term, PolyForm::dbary(n, v));
                }
            } else if (atom[0] == 't') {
                std::vector<std::string> pieces = split(atom, '^');
                int v = std::stoi(pieces[0].substr(1));
                if (v < 0 || v > n)
                    throw argument_error("t index out of range in '" + atom + "'");
                int e = 1;
                if (pieces.size() == 2)
                    e = std::stoi(pieces[1]);
                else if (pieces.size() > 2)
                    throw argument_error("malformed monomial '" + atom + "'");
                for (int t = 0; t < e; ++t)
                    term = wedge(term, PolyForm::bary(n, v));
            } else {
                throw argument_error("unrecognized token '" + atom + "'");
            }
        }
        term = scale(coeff, term);
        if (!term.zerop()) {
            if (degree_set && term.form_degree() != result.form_degree())
                throw argument_error("form text mixes form degrees");
            if (!degree_set) {
                result = PolyForm::zero(n, term.form_degree());
                degree_set = true;
            }
        }
        result = add(result, term);
    }
    return result;
}

}  // namespace derham
