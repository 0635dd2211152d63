#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "derham/linalg.hpp"

namespace derham {

// One basis monomial-with-form-part: dt indices strictly increasing in
// 1..n, exponent vector of length n over t_1..t_n.
struct TermKey {
    std::vector<int> part;
    std::vector<int> exps;
    auto operator<=>(const TermKey&) const = default;
};

// A polynomial differential form on the standard n-simplex in canonical
// barycentric-eliminated coordinates: t_0 = 1 - sum t_i, dt_0 = -sum dt_i.
// Terms are kept homogeneous in form degree; zero coefficients and
// repeated dt indices never survive canonicalization.
class PolyForm {
public:
    PolyForm() = default;

    static PolyForm zero(int n, int fdeg);
    static PolyForm scalar(int n, const Rational& c);   // 0-form
    static PolyForm coordinate(int n, int i);           // t_i, 1 <= i <= n
    static PolyForm bary(int n, int i);                 // t_i with t_0 = 1 - sum
    static PolyForm dbary(int n, int i);                // dt_i with dt_0 = -sum

    int ambient() const { return n_; }
    int form_degree() const { return fdeg_; }
    bool zerop() const { return terms_.empty(); }
    const std::map<TermKey, Rational>& terms() const { return terms_; }

    // -1 for the zero form, else max total exponent.
    int poly_degree() const;

    void add_term(TermKey key, const Rational& coeff);

    bool operator==(const PolyForm& o) const;

private:
    int n_ = 0;
    int fdeg_ = 0;
    std::map<TermKey, Rational> terms_;
};

PolyForm add(const PolyForm& a, const PolyForm& b);
PolyForm sub(const PolyForm& a, const PolyForm& b);
PolyForm scale(const Rational& c, const PolyForm& a);

// Graded-commutative product; a ^ b = (-1)^{|a||b|} b ^ a.
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// de Rham differential; d o d = 0 and the Leibniz rule hold exactly.
PolyForm differential(const PolyForm& a);

// Pullback along the affine map Delta^p -> Delta^n induced by a
// non-decreasing theta: [p] -> [n] (theta given as its value list,
// size p+1). Cofaces, degeneracies and face restrictions are all
// special cases; simplicial identities follow from functoriality.
PolyForm affine_pullback(const std::vector<int>& theta, const PolyForm& a);

// boundary_i = pullback along the i-th coface (omit i), A_n -> A_{n-1}
PolyForm coface_pullback(int i, const PolyForm& a);

// s_j = pullback along the j-th codegeneracy (hit j twice), A_n -> A_{n+1}
PolyForm degeneracy_pullback(int j, const PolyForm& a);

// Exact integral over the standard simplex, orientation dt_1^...^dt_n
// positive; requires form degree == ambient dimension.
// The monomial rule is
//   int t_1^{a_1}...t_n^{a_n} dt_1...dt_n = (prod a_i!) / (n + sum a_i)!.
Rational integrate_top(const PolyForm& a);

// Homotopy operator K of the contraction to vertex 0:
// d K + K d = id - eps, where eps picks the constant term of a 0-form
// and vanishes in positive form degree.
PolyForm contraction_homotopy(const PolyForm& a);
Rational vertex_evaluation(const PolyForm& a);

// For closed forms of degree >= 1: returns eta with d(eta) = a.
PolyForm poincare_contraction(const PolyForm& a);

// Elementary form of the face sigma = (i_0 < ... < i_p) of Delta^n:
//   p! sum_k (-1)^k t_{i_k} dt_{i_0} ^ ... omit k ... ^ dt_{i_p},
// integrating to 1 over its own face and to 0 over every other p-face.
PolyForm whitney_form(int n, const std::vector<int>& sigma);

// A compatible family of candidate faces: for i < j in the index set,
// boundary_i phi_j = boundary_{j-1} phi_i must hold.
struct FaceFamily {
    int n = 0;                       // dimension of the simplex to fill
    std::map<int, PolyForm> forms;   // face index -> form on Delta^{n-1}
};

struct incompatible_faces : precondition_error {
    int i, j;
    incompatible_faces(int i_, int j_)
        : precondition_error("face family incompatible at pair (" + std::to_string(i_) +
                             ", " + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

void check_face_family(const FaceFamily& f);

// Produces a form on Delta^n whose listed faces are exactly the given
// ones. Degree-escalating exact linear solve: restriction to the listed
// faces is linear on forms of polynomial degree <= D; D starts at the
// max input degree and grows until a preimage exists.
PolyForm extend_faces(const FaceFamily& f);

// Ordered basis of the p-forms of polynomial degree <= D on Delta^n.
struct FormBasis {
    int n, p, D;
    std::vector<TermKey> keys;
    std::map<TermKey, int> index;

    FormBasis(int n, int p, int D);
    std::size_t size() const { return keys.size(); }
};

// Basis of the p-forms with polynomial degree + form degree <= D. This
// is the grading the differential and the contraction homotopy both
// preserve, so truncating by it keeps exactness intact.
FormBasis total_degree_basis(int n, int p, int D);

std::vector<Rational> form_to_vector(const PolyForm& a, const FormBasis& basis);
PolyForm vector_to_form(const std::vector<Rational>& v, const FormBasis& basis);

// Matrix of a linear operator in the given bases, built columnwise.
QMat operator_matrix(const FormBasis& src, const FormBasis& dst,
                     const std::function<PolyForm(const PolyForm&)>& op);

// Textual syntax, e.g. "3/2 t1^2 t3 dt1^dt2 + -1 dt3". The printer is
// canonical and the parser round-trips it; t0/dt0 are accepted on input
// and eliminated.
std::string to_string(const PolyForm& a);
PolyForm parse_polyform(int n, const std::string& text);

}  // namespace derham
