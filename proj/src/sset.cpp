#include "derham/sset.hpp"

#include <algorithm>

namespace derham {

int FiniteSimplicialSet::add_generator(const std::string& name, int dim)
{
    if (dim < 0)
        throw presentation_error("generator '" + name + "' has negative dimension");
    if (gen_index_.count(name))
        throw presentation_error("duplicate generator id '" + name + "'");
    int id = static_cast<int>(gen_name_.size());
    gen_name_.push_back(name);
    gen_dim_.push_back(dim);
    gen_faces_.emplace_back();
    gen_index_[name] = id;
    if (dim > max_dim_) {
        max_dim_ = dim;
        by_dim_.resize(max_dim_ + 1);
    }
    by_dim_[dim].push_back(id);
    return id;
}

void FiniteSimplicialSet::set_faces(int gen, std::vector<SimplexRef> faces)
{
    gen_faces_[gen] = std::move(faces);
}

int FiniteSimplicialSet::generator_index(const std::string& name) const
{
    auto it = gen_index_.find(name);
    if (it == gen_index_.end())
        throw presentation_error("unknown generator id '" + name + "'");
    return it->second;
}

const std::vector<int>& FiniteSimplicialSet::generators_of_dim(int d) const
{
    static const std::vector<int> empty;
    if (d < 0 || d > max_dim_)
        return empty;
    return by_dim_[d];
}

namespace {

bool strictly_decreasing(const std::vector<int>& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] <= w[i])
            return false;
    return true;
}

}  // namespace

SimplexRef FiniteSimplicialSet::degenerate_ref(const SimplexRef& s, int j)
{
    if (j < 0 || j > s.dim)
        throw argument_error("degeneracy index out of range");
    // insert s_j into the word via s_a s_b = s_{b+1} s_a for a <= b
    std::vector<int> w;
    w.reserve(s.degens.size() + 1);
    int cur = j;
    std::size_t i = 0;
    while (i < s.degens.size() && cur <= s.degens[i]) {
        w.push_back(s.degens[i] + 1);
        ++i;
    }
    w.push_back(cur);
    for (; i < s.degens.size(); ++i)
        w.push_back(s.degens[i]);
    return SimplexRef{s.dim + 1, s.gen, std::move(w)};
}

SimplexRef FiniteSimplicialSet::face(const SimplexRef& s, int i) const
{
    if (i < 0 || i > s.dim)
        throw argument_error("face index out of range");
    if (s.dim == 0)
        throw argument_error("0-simplex has no faces");

    // push d_i through the degeneracy word
    std::vector<int> outer;
    int fidx = i;
    std::size_t pos = 0;
    bool cancelled = false;
    for (; pos < s.degens.size(); ++pos) {
        int j = s.degens[pos];
        if (fidx < j) {
            outer.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
        } else if (fidx == j || fidx == j + 1) {
            cancelled = true;        // d_j s_j = d_{j+1} s_j = id
            ++pos;
            break;
        } else {
            outer.push_back(j);      // d_i s_j = s_j d_{i-1}
            --fidx;
        }
    }

    SimplexRef inner;
    if (cancelled) {
        inner = SimplexRef{gen_dim_[s.gen] + static_cast<int>(s.degens.size() - pos),
                           s.gen,
                           std::vector<int>(s.degens.begin() + pos, s.degens.end())};
    } else {
        const auto& fs = gen_faces_[s.gen];
        inner = fs.at(static_cast<std::size_t>(fidx));
    }
    for (std::size_t t = outer.size(); t-- > 0;)
        inner = degenerate_ref(inner, outer[t]);
    return inner;
}

SimplexRef FiniteSimplicialSet::restrict_ref(const SimplexRef& s, const std::vector<int>& verts) const
{
    SimplexRef cur = s;
    // delete the complement, largest index first so positions stay valid
    std::vector<int> missing;
    std::size_t vi = 0;
    for (int v = 0; v <= s.dim; ++v) {
        if (vi < verts.size() && verts[vi] == v)
            ++vi;
        else
            missing.push_back(v);
    }
    if (vi != verts.size())
        throw argument_error("restrict_ref: vertex list not within the simplex");
    for (std::size_t t = missing.size(); t-- > 0;)
        cur = face(cur, missing[t]);
    return cur;
}

void FiniteSimplicialSet::validate() const
{
    for (int g = 0; g < num_generators(); ++g) {
        int n = gen_dim_[g];
        const auto& fs = gen_faces_[g];
        if (n == 0) {
            if (!fs.empty())
                throw presentation_error("vertex '" + gen_name_[g] + "' must have no faces");
            continue;
        }
        if (static_cast<int>(fs.size()) != n + 1)
            throw presentation_error("generator '" + gen_name_[g] + "' needs " +
                                     std::to_string(n + 1) + " faces");
        for (int i = 0; i <= n; ++i) {
            const SimplexRef& f = fs[i];
            if (f.gen < 0 || f.gen >= num_generators())
                throw presentation_error("face " + std::to_string(i) + " of '" + gen_name_[g] +
                                         "' refers to a missing generator");
            if (!strictly_decreasing(f.degens))
                throw presentation_error("face " + std::to_string(i) + " of '" + gen_name_[g] +
                                         "' has a non-normal degeneracy word");
            if (f.dim != n - 1 ||
                gen_dim_[f.gen] + static_cast<int>(f.degens.size()) != n - 1)
                throw presentation_error("face " + std::to_string(i) + " of '" + gen_name_[g] +
                                         "' has inconsistent dimension");
            // each letter s_j needs 0 <= j <= dim at its stage
            int d = gen_dim_[f.gen];
            for (std::size_t t = f.degens.size(); t-- > 0;) {
                int j = f.degens[t];
                if (j < 0 || j > d)
                    throw presentation_error("face " + std::to_string(i) + " of '" +
                                             gen_name_[g] + "' has degeneracy index out of range");
                ++d;
            }
        }
    }
    // d_i d_j = d_{j-1} d_i for i < j, after normalization
    for (int g = 0; g < num_generators(); ++g) {
        int n = gen_dim_[g];
        if (n < 2)
            continue;
        SimplexRef r = ref(g);
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef lhs = face(face(r, j), i);
                SimplexRef rhs = face(face(r, i), j - 1);
                if (!(lhs == rhs))
                    throw presentation_error("simplicial identity fails on '" + gen_name_[g] +
                                             "' at (i,j)=(" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
            }
    }
}

std::string tuple_name(const std::vector<int>& verts)
{
    std::string s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(verts[i]);
    }
    return s;
}

std::vector<int> parse_tuple_name(const std::string& name)
{
    std::vector<int> out;
    std::string cur;
    for (char ch : name) {
        if (ch == '.') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(std::stoi(cur));
    return out;
}

std::vector<std::vector<int>> increasing_tuples(int top, int size)
{
    std::vector<std::vector<int>> out;
    if (size <= 0 || size > top + 1)
        return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i)
        idx[i] = i;
    while (true) {
        out.push_back(idx);
        int k = size - 1;
        while (k >= 0 && idx[k] == top - (size - 1 - k))
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (int t = k + 1; t < size; ++t)
            idx[t] = idx[t - 1] + 1;
    }
    return out;
}

namespace {

FiniteSimplicialSet simplex_like(int n, bool full)
{
    FiniteSimplicialSet K;
    int top = full ? n : n - 1;
    std::map<std::vector<int>, int> ids;
    for (int d = 0; d <= top; ++d) {
        for (const auto& t : increasing_tuples(n, d + 1))
            ids[t] = K.add_generator(tuple_name(t), d);
    }
    for (const auto& [t, id] : ids) {
        int d = static_cast<int>(t.size()) - 1;
        if (d == 0)
            continue;
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= d; ++i) {
            std::vector<int> f = t;
            f.erase(f.begin() + i);
            faces.push_back(SimplexRef{d - 1, ids.at(f), {}});
        }
        K.set_faces(id, std::move(faces));
    }
    K.validate();
    return K;
}

}  // namespace

FiniteSimplicialSet std_simplex(int n)
{
    if (n < 0)
        throw argument_error("std_simplex: n must be >= 0");
    return simplex_like(n, true);
}

FiniteSimplicialSet boundary_std_simplex(int n)
{
    if (n < 1)
        throw argument_error("boundary_std_simplex: n must be >= 1");
    return simplex_like(n, false);
}

FiniteSimplicialSet quotient_sphere(int n)
{
    if (n < 1)
        throw argument_error("quotient_sphere: n must be >= 1");
    FiniteSimplicialSet K;
    int v = K.add_generator("*", 0);
    int top = K.add_generator("cell", n);
    // every face is the maximally degenerate basepoint s_{n-2}...s_0 *
    std::vector<int> word;
    for (int j = n - 2; j >= 0; --j)
        word.push_back(j);
    std::vector<SimplexRef> faces(n + 1, SimplexRef{n - 1, v, word});
    K.set_faces(top, std::move(faces));
    K.validate();
    return K;
}

FiniteSimplicialSet torus_presentation()
{
    FiniteSimplicialSet K;
    int v = K.add_generator("v", 0);
    int a = K.add_generator("a", 1);
    int b = K.add_generator("b", 1);
    int c = K.add_generator("c", 1);
    int U = K.add_generator("U", 2);
    int L = K.add_generator("L", 2);
    SimplexRef rv{0, v, {}};
    K.set_faces(a, {rv, rv});
    K.set_faces(b, {rv, rv});
    K.set_faces(c, {rv, rv});
    K.set_faces(U, {SimplexRef{1, b, {}}, SimplexRef{1, c, {}}, SimplexRef{1, a, {}}});
    K.set_faces(L, {SimplexRef{1, a, {}}, SimplexRef{1, c, {}}, SimplexRef{1, b, {}}});
    K.validate();
    return K;
}

}  // namespace derham
