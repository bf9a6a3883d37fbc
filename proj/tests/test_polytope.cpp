/*
 * Combinatorial polytope tests: builders, face lattices, f/h-vectors,
 * hyperplane sections, vertex indices of generic directions.
 */
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "smallcover/polytope.hpp"

using namespace smallcover;

namespace {

using LL = std::vector<long long>;

LL lattice_sizes(const CombinatorialPolytope& p) {
    FaceLattice lat = face_lattice(p);
    LL out;
    for (const auto& lvl : lat.faces) out.push_back((long long)lvl.size());
    return out;
}

// index counts for a random generic direction, resampling until generic
LL random_direction_counts(const BuiltPolytope& b, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        std::vector<double> l(std::size_t(b.poly.n));
        for (auto& x : l) x = u(rng);
        try {
            return morse_index_counts(b.poly, *b.geom, l).counts;
        } catch (const geometry_error&) {
            continue;
        }
    }
}

}  // namespace

TEST_CASE("segment") {
    BuiltPolytope s = segment();
    CHECK(s.poly.n == 1);
    CHECK(s.poly.m == 2);
    CHECK(f_vector(s.poly) == LL{2});
    CHECK(h_vector(s.poly) == LL{1, 1});
}

TEST_CASE("square lattice and h-vector") {
    BuiltPolytope s = square();
    CHECK(s.poly.facet_names == std::vector<std::string>{"L", "R", "B", "T"});
    CHECK(lattice_sizes(s.poly) == LL{1, 4, 4});
    CHECK(f_vector(s.poly) == LL{4, 4});
    CHECK(h_vector(s.poly) == LL{1, 2, 1});
    // vertex {L,B} is the origin
    CHECK(s.poly.vertices[0] == FacetSet{0, 2});
    CHECK(s.geom->coords[0] == std::vector<double>{0.0, 0.0});
}

TEST_CASE("pentagon fixture") {
    BuiltPolytope p = polygon(5);
    CHECK(p.poly.facet_names ==
          std::vector<std::string>{"AB", "BC", "CD", "DE", "EA"});
    CHECK(lattice_sizes(p.poly) == LL{1, 5, 5});
    CHECK(f_vector(p.poly) == LL{5, 5});
    CHECK(h_vector(p.poly) == LL{1, 3, 1});
    // heights descend strictly A > B > C > D > E for the direction (0,1)
    auto h = heights(p.poly, *p.geom, {0.0, 1.0});
    for (std::size_t v = 0; v + 1 < h.size(); ++v) CHECK(h[v] > h[v + 1]);
}

TEST_CASE("cube lattice counts") {
    BuiltPolytope c = cube(3);
    CHECK(lattice_sizes(c.poly) == LL{1, 6, 12, 8});
    CHECK(h_vector(c.poly) == LL{1, 3, 3, 1});
}

TEST_CASE("simplex h-vector is all ones") {
    for (int n = 1; n <= 4; ++n) {
        BuiltPolytope s = simplex(n);
        LL h = h_vector(s.poly);
        CHECK(h == LL(std::size_t(n) + 1, 1));
    }
}

TEST_CASE("permutohedron of dimension 3") {
    BuiltPolytope p = permutohedron(3);
    CHECK(p.poly.m == 14);
    CHECK(p.poly.vertices.size() == 24);
    CHECK(f_vector(p.poly) == LL{14, 36, 24});
    CHECK(h_vector(p.poly) == LL{1, 11, 11, 1});
    CHECK(p.poly.facet_names[0] == "s1");
    CHECK(p.poly.facet_names[13] == "s234");
}

TEST_CASE("hexagon two ways") {
    CHECK(h_vector(permutohedron(2).poly) == LL{1, 4, 1});
    CHECK(h_vector(polygon(6).poly) == LL{1, 4, 1});
}

TEST_CASE("products multiply h-polynomials") {
    BuiltPolytope sq = product(segment(), segment());
    CHECK(f_vector(sq.poly) == f_vector(square().poly));
    CHECK(h_vector(sq.poly) == LL{1, 2, 1});

    BuiltPolytope c3 = product(square(), segment());
    CHECK(h_vector(c3.poly) == h_vector(cube(3).poly));

    // prism keeps base facet order and appends base0/base1
    BuiltPolytope pr = prism(square());
    CHECK(pr.poly.facet_names ==
          std::vector<std::string>{"L", "R", "B", "T", "base0", "base1"});
    CHECK(pr.poly.vertices.size() == 8);
    CHECK(h_vector(pr.poly) == LL{1, 3, 3, 1});
    // bottom copy: every even vertex has last coordinate 0
    CHECK((*pr.geom).coords[0].back() == 0.0);
    CHECK((*pr.geom).coords[1].back() == 1.0);
}

TEST_CASE("prism of a prism renames colliding facets") {
    BuiltPolytope pp = prism(prism(square()));
    CHECK(pp.poly.facet_names.back() == "base1'");
    CHECK(h_vector(pp.poly) == LL{1, 4, 6, 4, 1});
}

TEST_CASE("h-vector symmetry and vertex count") {
    for (const BuiltPolytope& b :
         {segment(), square(), polygon(5), cube(3), permutohedron(3), prism(polygon(5))}) {
        LL h = h_vector(b.poly);
        int n = b.poly.n;
        CHECK(h[0] == 1);
        CHECK(h[std::size_t(n)] == 1);
        long long sum = 0;
        for (int i = 0; i <= n; ++i) {
            CHECK(h[std::size_t(i)] == h[std::size_t(n - i)]);  // Dehn-Sommerville
            sum += h[std::size_t(i)];
        }
        CHECK(sum == (long long)b.poly.vertices.size());
    }
}

TEST_CASE("validation rejects malformed input") {
    // vertex on a wrong number of facets
    CHECK_THROWS_WITH(from_vertex_facets(2, 3, {"a", "b", "c"}, {{0, 1, 2}}),
                      Catch::Matchers::ContainsSubstring("not simple"));
    // ridge in three vertices
    CHECK_THROWS_WITH(from_vertex_facets(1, 3, {"a", "b", "c"}, {{0}, {1}, {2}}),
                      Catch::Matchers::ContainsSubstring("ridge"));
    // facet index out of range
    CHECK_THROWS_WITH(from_vertex_facets(1, 2, {"a", "b"}, {{0}, {5}}),
                      Catch::Matchers::ContainsSubstring("out of range"));
    // facet in no vertex
    CHECK_THROWS_WITH(
        from_vertex_facets(2, 4, {"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 2}}),
        Catch::Matchers::ContainsSubstring("no vertex"));
    // duplicate vertex
    CHECK_THROWS_WITH(
        from_vertex_facets(2, 3, {"a", "b", "c"}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}),
        Catch::Matchers::ContainsSubstring("duplicate"));
    // two disjoint squares: every ridge fine, dual complex disconnected
    std::vector<FacetSet> two;
    for (int off : {0, 4})
        for (auto v : {FacetSet{0, 2}, FacetSet{2, 1}, FacetSet{1, 3}, FacetSet{3, 0}}) {
            for (int& i : v) i += off;
            two.push_back(v);
        }
    CHECK_THROWS_WITH(
        from_vertex_facets(2, 8, {"a", "b", "c", "d", "e", "f", "g", "h"}, two),
        Catch::Matchers::ContainsSubstring("disconnected"));
}

TEST_CASE("face lattice lookup") {
    BuiltPolytope s = square();
    FaceLattice lat = face_lattice(s.poly);
    CHECK(lat.is_face({}));
    CHECK(lat.is_face({0}));
    CHECK(lat.is_face({0, 2}));
    CHECK_FALSE(lat.is_face({0, 1}));  // L and R do not meet
    CHECK(lat.cofaces[0][0].size() == 4);
    CHECK(face_vertices(s.poly, {0}) == std::vector<int>{0, 2});  // L holds (0,0),(0,1)
}

TEST_CASE("vertical slice of the unit square") {
    BuiltPolytope s = square();
    SectionData sec = slice(s.poly, *s.geom, {1.0, 0.0}, 0.5);
    CHECK(sec.crossed_facets == std::vector<int>{2, 3});  // B and T
    CHECK(sec.f_vector_S == LL{2});
    CHECK(sec.h_vector_S == LL{1, 1});
    CHECK(sec.side[0] == -1);  // (0,0)
    CHECK(sec.side[1] == +1);  // (1,0)
}

TEST_CASE("horizontal slice of the cube") {
    BuiltPolytope c = cube(3);
    SectionData sec = slice(c.poly, *c.geom, {0.0, 0.0, 1.0}, 0.5);
    CHECK(sec.crossed_facets == std::vector<int>{0, 1, 2, 3});  // four side facets
    CHECK(sec.h_vector_S == LL{1, 2, 1});
}

TEST_CASE("slice degeneracies are errors") {
    BuiltPolytope s = square();
    CHECK_THROWS_AS(slice(s.poly, *s.geom, {1.0, 0.0}, 0.0), geometry_error);   // hits vertices
    CHECK_THROWS_AS(slice(s.poly, *s.geom, {1.0, 0.0}, 5.0), geometry_error);   // misses
    CHECK_THROWS_AS(slice(s.poly, *s.geom, {0.0, 0.0}, 0.5), geometry_error);   // zero direction
}

TEST_CASE("pentagon vertex indices for the height direction") {
    BuiltPolytope p = polygon(5);
    MorseData md = morse_index_counts(p.poly, *p.geom, {0.0, 1.0});
    CHECK(md.index == std::vector<int>{2, 1, 1, 1, 0});  // A,B,C,D,E
    CHECK(md.counts == LL{1, 3, 1});
}

TEST_CASE("cube vertex indices count binomially") {
    BuiltPolytope c = cube(3);
    MorseData md = morse_index_counts(c.poly, *c.geom, {1.0, 0.5, 0.25});
    CHECK(md.counts == LL{1, 3, 3, 1});
}

TEST_CASE("axis direction on the square is not generic") {
    BuiltPolytope s = square();
    CHECK_THROWS_AS(morse_index_counts(s.poly, *s.geom, {1.0, 0.0}), geometry_error);
}

TEST_CASE("index counts equal h-numbers for random directions") {
    std::mt19937 rng(424242);
    for (const BuiltPolytope& b : {square(), polygon(5), cube(3), permutohedron(3)}) {
        LL h = h_vector(b.poly);
        for (int t = 0; t < 5; ++t) CHECK(random_direction_counts(b, rng) == h);
    }
}
