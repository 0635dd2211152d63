#pragma once

#include <map>
#include <string>
#include <vector>

#include "derham/rational.hpp"

namespace derham {

// A possibly degenerate simplex in Eilenberg-Zilber normal form:
// s_{w[0]} s_{w[1]} ... s_{w[k-1]} applied to a nondegenerate generator,
// with w strictly decreasing. Empty word = nondegenerate.
struct SimplexRef {
    int dim = 0;
    int gen = -1;
    std::vector<int> degens;

    bool degenerate() const { return !degens.empty(); }
    bool operator==(const SimplexRef&) const = default;
    auto operator<=>(const SimplexRef&) const = default;
};

// Finite presentation of a simplicial set: nondegenerate generators per
// dimension, with each face given as a normal-form SimplexRef one
// dimension down. Degenerate simplices are never stored.
class FiniteSimplicialSet {
public:
    int add_generator(const std::string& name, int dim);
    void set_faces(int gen, std::vector<SimplexRef> faces);

    // Mandatory before use: checks face targets, normal forms and the
    // simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
    // generator. Throws presentation_error with the offending location.
    void validate() const;

    int num_generators() const { return static_cast<int>(gen_name_.size()); }
    int dim_of(int gen) const { return gen_dim_[gen]; }
    const std::string& name_of(int gen) const { return gen_name_[gen]; }
    int generator_index(const std::string& name) const;
    int max_dim() const { return max_dim_; }
    const std::vector<int>& generators_of_dim(int d) const;
    const std::vector<SimplexRef>& faces_of(int gen) const { return gen_faces_[gen]; }

    SimplexRef ref(int gen) const { return SimplexRef{gen_dim_[gen], gen, {}}; }

    // d_i on a normal-form reference; result is in normal form.
    SimplexRef face(const SimplexRef& s, int i) const;

    // s_j on a normal-form reference; purely word arithmetic.
    static SimplexRef degenerate_ref(const SimplexRef& s, int j);

    // Iterated faces restricting to the vertex subset `verts`
    // (strictly increasing, within 0..dim).
    SimplexRef restrict_ref(const SimplexRef& s, const std::vector<int>& verts) const;

private:
    std::vector<std::string> gen_name_;
    std::vector<int> gen_dim_;
    std::vector<std::vector<SimplexRef>> gen_faces_;
    std::map<std::string, int> gen_index_;
    std::vector<std::vector<int>> by_dim_;
    int max_dim_ = -1;
};

// Delta[n]: generators are the strictly increasing subsequences of 0..n.
FiniteSimplicialSet std_simplex(int n);

// The subcomplex of Delta[n] of proper faces (n >= 1).
FiniteSimplicialSet boundary_std_simplex(int n);

// Delta[n]/boundary: one vertex, one n-cell, all faces degenerate on the
// basepoint. Requires n >= 1.
FiniteSimplicialSet quotient_sphere(int n);

// One-vertex torus: generators (v; a, b, c; U, L) with
// faces U = (b, c, a) and L = (a, c, b).
FiniteSimplicialSet torus_presentation();

// Names of Delta[n]-style generators: vertex labels joined with '.'.
std::string tuple_name(const std::vector<int>& verts);
std::vector<int> parse_tuple_name(const std::string& name);

// All strictly increasing tuples of the given size with entries in
// 0..top, in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int top, int size);

}  // namespace derham
