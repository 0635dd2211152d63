#pragma once

#include "derham/cochain.hpp"
#include "derham/linalg.hpp"

namespace derham {

// Chain map between complexes, one exact matrix per degree.
struct GradedMap {
    std::vector<QMat> mats;  // mats[p]: dims_target[p] x dims_source[p]
};

// -1 when the chain-map identity holds in every degree, else the first
// failing degree.
int chain_map_defect(const CochainComplex& src, const CochainComplex& tgt, const GradedMap& f);

struct CohomologyReport {
    int lo = 0, hi = 0;
    std::vector<std::size_t> dims;          // per degree lo..hi
    std::vector<QMat> representatives;      // columns: cocycles spanning H
    std::vector<QMat> coboundary_basis;     // columns: independent image of d

    std::size_t dim(int p) const { return dims[p - lo]; }
};

// Exact kernel/image ranks over Q. Representatives complete the image
// basis inside the cocycles, pivoting lexicographically-first.
CohomologyReport cohomology(const CochainComplex& C, int lo, int hi);

// Coordinates of the class of cocycle x in the report's representative
// basis at degree p; nullopt if x is not a cocycle.
std::optional<std::vector<Rational>> class_coordinates(const CochainComplex& C,
                                                       const CohomologyReport& rep, int p,
                                                       const std::vector<Rational>& x);

// Matrices of H(f) in the representative bases of the two reports.
// Requires f to be a chain map (throws otherwise, naming the degree).
std::vector<QMat> induced_map(const CochainComplex& src, const CochainComplex& tgt,
                              const GradedMap& f, const CohomologyReport& src_rep,
                              const CohomologyReport& tgt_rep);

struct QuasiIsoReport {
    bool ok = false;
    int failing_degree = -1;            // meaningful when !ok
    std::vector<Rational> determinants; // per degree when square
};

QuasiIsoReport is_quasi_iso(const CochainComplex& src, const CochainComplex& tgt,
                            const GradedMap& f, int lo, int hi);

// Combinatorial cone operator on normalized chains of Delta[n]: join
// with vertex 0. h[p]: N_p -> N_{p+1} satisfies
//   boundary h + h boundary = id - (unit o augmentation).
std::vector<QMat> cone_contraction(int n);

// Boundary matrices of normalized chains of Delta[n] (for the identity
// above): b[p]: N_p -> N_{p-1} for p = 0..n+1 (N_{n+1} = 0).
std::vector<QMat> simplex_chain_boundary(int n);

}  // namespace derham
