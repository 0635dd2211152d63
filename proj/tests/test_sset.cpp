#include <doctest.h>

#include "derham/cochain.hpp"
#include "derham/sset.hpp"
#include "support.hpp"

using namespace derham;

TEST_CASE("standard simplices")
{
    FiniteSimplicialSet p = std_simplex(0);
    CHECK(p.generators_of_dim(0).size() == 1);
    CHECK(p.max_dim() == 0);

    FiniteSimplicialSet t = std_simplex(2);
    CHECK(t.generators_of_dim(0).size() == 3);
    CHECK(t.generators_of_dim(1).size() == 3);
    CHECK(t.generators_of_dim(2).size() == 1);

    // validate() already checks d_i d_j = d_{j-1} d_i; run it explicitly on Delta[3]
    FiniteSimplicialSet s = std_simplex(3);
    int top = s.generator_index("0.1.2.3");
    SimplexRef r = s.ref(top);
    for (int j = 1; j <= 3; ++j)
        for (int i = 0; i < j; ++i)
            CHECK(s.face(s.face(r, j), i) == s.face(s.face(r, i), j - 1));
}

TEST_CASE("normal form arithmetic on references")
{
    FiniteSimplicialSet s = std_simplex(2);
    int top = s.generator_index("0.1.2");
    SimplexRef r = s.ref(top);

    // a face of a nondegenerate simplex with nondegenerate target
    SimplexRef f0 = s.face(r, 0);
    CHECK(!f0.degenerate());
    CHECK(s.name_of(f0.gen) == "1.2");

    // d_j s_j = id and d_{j+1} s_j = id
    for (int j = 0; j <= 2; ++j) {
        SimplexRef dj = FiniteSimplicialSet::degenerate_ref(r, j);
        CHECK(s.face(dj, j) == r);
        CHECK(s.face(dj, j + 1) == r);
    }

    // s_1 s_0 stays the decreasing word (1, 0); s_0 s_0 normalizes to it
    SimplexRef v = s.ref(s.generator_index("0"));
    SimplexRef w1 = FiniteSimplicialSet::degenerate_ref(
        FiniteSimplicialSet::degenerate_ref(v, 0), 1);
    CHECK(w1.degens == std::vector<int>{1, 0});
    SimplexRef w2 = FiniteSimplicialSet::degenerate_ref(
        FiniteSimplicialSet::degenerate_ref(v, 0), 0);
    CHECK(w2.degens == std::vector<int>{1, 0});
}

TEST_CASE("malformed presentations are rejected")
{
    FiniteSimplicialSet K;
    int v = K.add_generator("v", 0);
    int e = K.add_generator("e", 1);
    K.set_faces(e, {SimplexRef{0, v, {}}});  // one face missing
    CHECK_THROWS_AS(K.validate(), presentation_error);

    FiniteSimplicialSet K2;
    int v2 = K2.add_generator("v", 0);
    int e2 = K2.add_generator("e", 1);
    int T = K2.add_generator("T", 2);
    SimplexRef rv{0, v2, {}};
    K2.set_faces(e2, {rv, rv});
    // non-normal degeneracy word (not strictly decreasing)
    K2.set_faces(T, {SimplexRef{1, v2, {0}}, SimplexRef{1, v2, {0}}, SimplexRef{1, e2, {}}});
    CHECK_NOTHROW(K2.validate());
    K2.set_faces(T, {SimplexRef{1, v2, {0}}, SimplexRef{1, v2, {0}},
                     SimplexRef{1, v2, {1}}});
    CHECK_THROWS_AS(K2.validate(), presentation_error);
}

TEST_CASE("quotient spheres")
{
    CHECK_THROWS_AS(quotient_sphere(0), argument_error);
    FiniteSimplicialSet s2 = quotient_sphere(2);
    CHECK(s2.generators_of_dim(0).size() == 1);
    CHECK(s2.generators_of_dim(1).size() == 0);
    CHECK(s2.generators_of_dim(2).size() == 1);

    CochainComplex C = cochain_complex(s2);
    CHECK(C.is_complex());
    CHECK(testsupport::brute_betti(C, 0) == 1);
    CHECK(testsupport::brute_betti(C, 1) == 0);
    CHECK(testsupport::brute_betti(C, 2) == 1);

    CochainComplex C3 = cochain_complex(quotient_sphere(3));
    CHECK(C3.is_complex());
    CHECK(testsupport::brute_betti(C3, 3) == 1);
}

TEST_CASE("cochain complex shapes")
{
    CochainComplex c0 = cochain_complex(std_simplex(0));
    CHECK(c0.dims == std::vector<std::size_t>{1});

    CochainComplex c1 = cochain_complex(std_simplex(1));
    CHECK(c1.dims == std::vector<std::size_t>{2, 1});
    CHECK(c1.d[0].at(0, 0) == Rational(-1));
    CHECK(c1.d[0].at(0, 1) == Rational(1));

    CochainComplex cs = cochain_complex(quotient_sphere(2));
    CHECK(cs.dims == std::vector<std::size_t>{1, 0, 1});
    CHECK(is_zero(cs.d[0]));
    CHECK(is_zero(cs.d[1]));
}

TEST_CASE("torus fixture cohomology and cup structure")
{
    FiniteSimplicialSet T = torus_presentation();
    CHECK(T.generators_of_dim(0).size() == 1);
    CHECK(T.generators_of_dim(1).size() == 3);
    CHECK(T.generators_of_dim(2).size() == 2);

    CochainComplex C = cochain_complex(T);
    CHECK(C.is_complex());
    CHECK(testsupport::brute_betti(C, 0) == 1);
    CHECK(testsupport::brute_betti(C, 1) == 2);
    CHECK(testsupport::brute_betti(C, 2) == 1);

    // degree-1 cocycle generators: a* + c* and b* + c*
    Cochain alpha, beta;
    alpha.degree = beta.degree = 1;
    alpha.set(T.generator_index("a"), 1);
    alpha.set(T.generator_index("c"), 1);
    beta.set(T.generator_index("b"), 1);
    beta.set(T.generator_index("c"), 1);
    CHECK(coboundary(T, alpha).values.empty());
    CHECK(coboundary(T, beta).values.empty());

    Cochain ab = cup(T, alpha, beta);
    // nonzero class: not in the image of d^1
    std::vector<Rational> v = cochain_to_vector(T, ab);
    CHECK(!in_column_span(C.d[1], v));
    // cup squares are zero classes
    for (const Cochain& x : {alpha, beta}) {
        Cochain sq = cup(T, x, x);
        CHECK(in_column_span(C.d[1], cochain_to_vector(T, sq)));
    }
}

TEST_CASE("cup product unit, associativity, Leibniz")
{
    FiniteSimplicialSet T = torus_presentation();
    Cochain one = unit_cochain(T);
    testsupport::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain a = testsupport::random_cochain(rng, T, 1);
        Cochain b = testsupport::random_cochain(rng, T, 1);
        Cochain f = testsupport::random_cochain(rng, T, 0);

        CHECK(cup(T, one, a) == a);
        CHECK(cup(T, a, one) == a);

        CHECK(cup(T, cup(T, f, a), b) == cup(T, f, cup(T, a, b)));
        CHECK(cup(T, cup(T, a, f), b) == cup(T, a, cup(T, f, b)));

        // d(a cup b) = da cup b + (-1)^p a cup db
        Cochain lhs = coboundary(T, cup(T, f, a));
        Cochain rhs = add(cup(T, coboundary(T, f), a), cup(T, f, coboundary(T, a)));
        CHECK(lhs == rhs);

        Cochain lhs2 = coboundary(T, cup(T, a, f));
        Cochain rhs2 = add(cup(T, coboundary(T, a), f),
                           scale(-1, cup(T, a, coboundary(T, f))));
        CHECK(lhs2 == rhs2);
    }
}
