#pragma once

#include "derham/cochain.hpp"
#include "derham/homalg.hpp"
#include "derham/polyform.hpp"
#include "derham/sset.hpp"

namespace derham {

// An element of A^p(K): a polynomial p-form on Delta^{dim sigma} for
// every nondegenerate simplex, compatible with all simplicial operators.
struct SimplicialForm {
    int degree = 0;
    std::vector<PolyForm> values;  // indexed by generator id

    const PolyForm& on(int gen) const { return values[gen]; }
};

SimplicialForm zero_simplicial_form(const FiniteSimplicialSet& K, int degree);

// Value on an arbitrary normal-form reference: the degeneracy word of
// the reference acts through the corresponding pullbacks.
PolyForm value_on_ref(const FiniteSimplicialSet& K, const SimplicialForm& w,
                      const SimplexRef& ref);

struct FormViolation {
    int gen;
    int face;
};

struct ValidationResult {
    std::vector<FormViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Accepts iff boundary_i(w_sigma) equals the face's value for every
// (generator, face) pair; returns the failing pairs otherwise.
ValidationResult validate(const FiniteSimplicialSet& K, const SimplicialForm& w);

SimplicialForm form_add(const FiniteSimplicialSet& K, const SimplicialForm& a,
                        const SimplicialForm& b);
SimplicialForm form_scale(const Rational& c, const SimplicialForm& a);
SimplicialForm form_wedge(const FiniteSimplicialSet& K, const SimplicialForm& a,
                          const SimplicialForm& b);
SimplicialForm form_d(const FiniteSimplicialSet& K, const SimplicialForm& a);

// Pullback along the characteristic map Delta[n] -> K of a generator;
// the instance of naturality the integration tests exercise.
SimplicialForm pullback_along_char(const FiniteSimplicialSet& K, int gen,
                                   const SimplicialForm& w);
Cochain cochain_pullback_along_char(const FiniteSimplicialSet& K, int gen, const Cochain& c);

// Integration map: (int w)(sigma) = integral over Delta^p of w_sigma.
// A cochain map by Stokes; checked exactly in the tests.
Cochain integrate(const FiniteSimplicialSet& K, const SimplicialForm& w);

// Chain-level section of the integration map built from elementary
// forms; integrate(whitney_extension(c)) == c.
SimplicialForm whitney_extension(const FiniteSimplicialSet& K, const Cochain& c);

// --- the simplicial cochain complex C_PL and the tensor complex -------

// An element of C_PL^p(K): a normalized p-cochain on Delta[dim sigma]
// per generator, compatible with the simplicial operators. Tuples are
// strictly increasing vertex lists.
struct CPLElement {
    int degree = 0;
    std::vector<std::map<std::vector<int>, Rational>> values;  // per generator
};

// Normalized-cochain pullback on a standard simplex along a monotone
// vertex map theta: value at tau is the value at theta o tau, zero when
// the composite is degenerate.
std::map<std::vector<int>, Rational> cpl_pullback(const std::vector<int>& theta,
                                                  const std::map<std::vector<int>, Rational>& v);

ValidationResult validate_cpl(const FiniteSimplicialSet& K, const CPLElement& g);

CPLElement cpl_coboundary(const FiniteSimplicialSet& K, const CPLElement& g);

// nu(gamma)(sigma) = gamma_sigma(id); an isomorphism with explicit
// inverse nu_inverse.
Cochain nu(const FiniteSimplicialSet& K, const CPLElement& g);
CPLElement nu_inverse(const FiniteSimplicialSet& K, const Cochain& c);

// An element of (C_PL (x) A)^p(K): per generator a sum of
// indicator-cochain (x) form terms, keyed by the tuple.
struct TensorForm {
    int degree = 0;
    std::vector<std::map<std::vector<int>, PolyForm>> values;  // per generator

    void add_term(int gen, const std::vector<int>& tuple, const PolyForm& w);
};

TensorForm zero_tensor_form(const FiniteSimplicialSet& K, int degree);
ValidationResult validate_tensor(const FiniteSimplicialSet& K, const TensorForm& x);

TensorForm tensor_add(const FiniteSimplicialSet& K, const TensorForm& a, const TensorForm& b);
TensorForm tensor_scale(const Rational& c, const TensorForm& a);

// d(gamma (x) w) = (delta gamma) (x) w + (-1)^{|gamma|} gamma (x) dw
TensorForm tensor_d(const FiniteSimplicialSet& K, const TensorForm& x);

// (gamma (x) w) . (gamma' (x) w') =
//   (-1)^{|w||gamma'|} (gamma cup gamma') (x) (w ^ w')
TensorForm tensor_mult(const FiniteSimplicialSet& K, const TensorForm& a, const TensorForm& b);

// phi(gamma) = gamma (x) 1 and psi(w) = 1 (x) w
TensorForm phi(const FiniteSimplicialSet& K, const CPLElement& g);
TensorForm psi(const FiniteSimplicialSet& K, const SimplicialForm& w);

// mult o (1 (x) int): integrate the form factor simplexwise, multiply
// in C*(Delta[n]), read off under nu.
Cochain mult_one_tensor_int(const FiniteSimplicialSet& K, const TensorForm& x);

// --- truncated form complex -------------------------------------------

// The degree-<= D subcomplex of A(K), graded by polynomial degree plus
// form degree (the grading d and the contraction both preserve),
// realized by exact linear algebra: a basis of the compatible families
// per form degree, the induced differential, and the matrices of the
// integration map and the Whitney section in those bases.
struct TruncatedAK {
    int D = 0;
    int top = 0;                    // complex degrees 0..top
    CochainComplex complex;         // induced differential on the subcomplex
    std::vector<QMat> basis;        // per degree: ambient x k_p, columns = basis
    GradedMap integration;          // into cochain_complex(K)
    GradedMap whitney;              // from cochain_complex(K), where defined
    std::vector<bool> whitney_defined;  // elementary p-forms need D >= p+1

    // ambient bookkeeping: per degree, per generator an offset into the
    // flattened coordinate vector
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::size_t> ambient_dims;
};

TruncatedAK truncated_forms(const FiniteSimplicialSet& K, int D, int top);

std::vector<Rational> flatten_form(const FiniteSimplicialSet& K, const TruncatedAK& t,
                                   const SimplicialForm& w);
SimplicialForm unflatten_form(const FiniteSimplicialSet& K, const TruncatedAK& t, int degree,
                              const std::vector<Rational>& ambient);

// Coordinates of a valid form in the truncation basis.
std::vector<Rational> truncate_coords(const FiniteSimplicialSet& K, const TruncatedAK& t,
                                      const SimplicialForm& w);

// dims + representative forms of H(A(K)_{<=D}) in the window.
struct TruncatedCohomology {
    int D = 0;
    CohomologyReport report;
    std::vector<std::vector<SimplicialForm>> representatives;  // per degree in range
};

TruncatedCohomology truncated_cohomology_of_A(const FiniteSimplicialSet& K, int D, int lo,
                                              int hi);

}  // namespace derham
