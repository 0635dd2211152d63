#pragma once

#include <map>

#include "derham/linalg.hpp"
#include "derham/sset.hpp"

namespace derham {

// Normalized rational cochain: values on nondegenerate p-simplices only,
// zero entries omitted. Evaluation on a degenerate reference is 0.
struct Cochain {
    int degree = 0;
    std::map<int, Rational> values;  // generator index -> value

    Rational eval(const SimplexRef& s) const
    {
        if (s.degenerate())
            return 0;
        auto it = values.find(s.gen);
        return it == values.end() ? Rational(0) : it->second;
    }

    void set(int gen, Rational v)
    {
        if (is_zero(v))
            values.erase(gen);
        else
            values[gen] = std::move(v);
    }

    bool operator==(const Cochain&) const = default;
};

Cochain add(const Cochain& a, const Cochain& b);
Cochain scale(const Rational& c, const Cochain& a);

// Graded complex with exact differentials, degrees 0..top.
// d[p] maps degree p to degree p+1 in the per-dimension generator bases.
struct CochainComplex {
    std::vector<std::size_t> dims;
    std::vector<QMat> d;  // d[p]: dims[p+1] x dims[p]; d[top] maps to 0

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }

    // d o d = 0 in every degree, checked exactly.
    bool is_complex() const;
};

// (delta c)(sigma) = sum_i (-1)^i c(d_i sigma), restricted to
// nondegenerate simplices.
Cochain coboundary(const FiniteSimplicialSet& K, const Cochain& c);

// Alexander-Whitney product: (a cup b)(sigma) = a(front) * b(back).
Cochain cup(const FiniteSimplicialSet& K, const Cochain& a, const Cochain& b);

// The unit: constant 1 on every vertex.
Cochain unit_cochain(const FiniteSimplicialSet& K);

// Normalized cochain complex of K up to degree top (default: max_dim).
CochainComplex cochain_complex(const FiniteSimplicialSet& K, int top = -1);

std::vector<Rational> cochain_to_vector(const FiniteSimplicialSet& K, const Cochain& c);
Cochain vector_to_cochain(const FiniteSimplicialSet& K, int degree, const std::vector<Rational>& v);

}  // namespace derham
