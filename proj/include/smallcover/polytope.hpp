/*
 * polytope.hpp: simple convex polytopes given combinatorially.
 *
 * A polytope of dimension n with m facets is stored by its vertex-facet
 * incidences: each vertex is the sorted n-set of facets through it.  The
 * structure accepted here is a connected simplicial pseudo-manifold on the
 * dual side (every ridge in exactly two vertices); genuine polytopality is
 * not verified.  Faces of codimension k correspond to k-subsets of facets
 * that lie in some vertex set, the empty set standing for the polytope.
 */
#ifndef SMALLCOVER_POLYTOPE_HPP
#define SMALLCOVER_POLYTOPE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smallcover/errors.hpp"

namespace smallcover {

using FacetSet = std::vector<int>;  // sorted, duplicate-free facet indices

struct CombinatorialPolytope {
    int n = 0;  // dimension
    int m = 0;  // number of facets
    std::vector<std::string> facet_names;
    std::vector<FacetSet> vertices;  // one sorted n-set per vertex
};

struct GeometricRealization {
    std::vector<std::vector<double>> coords;  // one length-n point per vertex
};

struct BuiltPolytope {
    CombinatorialPolytope poly;
    std::optional<GeometricRealization> geom;
};

namespace detail {

inline std::string join_names(const CombinatorialPolytope& p, const FacetSet& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += p.facet_names[std::size_t(t[i])];
    }
    return s;
}

}  // namespace detail

// Validating constructor.  Throws std::invalid_argument describing the first
// failure: out-of-range index, wrong vertex size (non-simple), facet in no
// vertex, duplicate vertex, ridge not in exactly two vertices, disconnected
// dual complex.
inline CombinatorialPolytope from_vertex_facets(int n, int m,
                                                std::vector<std::string> names,
                                                std::vector<FacetSet> vertices) {
    if (n < 1) throw std::invalid_argument("polytope: dimension must be at least 1");
    if (int(names.size()) != m) throw std::invalid_argument("polytope: need one name per facet");
    if (vertices.empty()) throw std::invalid_argument("polytope: vertex list is empty");

    std::vector<char> seen(std::size_t(m), 0);
    for (auto& v : vertices) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (int(v.size()) != n)
            throw std::invalid_argument(
                "polytope: vertex lies on " + std::to_string(v.size()) + " facets, expected " +
                std::to_string(n) + " (input is not simple)");
        for (int i : v) {
            if (i < 0 || i >= m) throw std::invalid_argument("polytope: facet index out of range");
            seen[std::size_t(i)] = 1;
        }
    }
    for (int i = 0; i < m; ++i)
        if (!seen[std::size_t(i)])
            throw std::invalid_argument("polytope: facet " + names[std::size_t(i)] +
                                        " is contained in no vertex");
    {
        auto sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("polytope: duplicate vertex set");
    }

    // ridge condition: each (n-1)-subset of a vertex set lies in exactly two
    std::map<FacetSet, std::vector<int>> ridges;
    for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
        const auto& v = vertices[vi];
        for (int drop = 0; drop < n; ++drop) {
            FacetSet r;
            r.reserve(std::size_t(n - 1));
            for (int k = 0; k < n; ++k)
                if (k != drop) r.push_back(v[std::size_t(k)]);
            ridges[r].push_back(int(vi));
        }
    }
    for (const auto& [r, vs] : ridges)
        if (vs.size() != 2)
            throw std::invalid_argument("polytope: a ridge lies in " + std::to_string(vs.size()) +
                                        " vertices, expected 2");

    // connectivity of the dual complex through ridges
    std::vector<char> reached(vertices.size(), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int drop = 0; drop < n; ++drop) {
            FacetSet r;
            for (int k = 0; k < n; ++k)
                if (k != drop) r.push_back(vertices[std::size_t(v)][std::size_t(k)]);
            for (int w : ridges[r])
                if (!reached[std::size_t(w)]) {
                    reached[std::size_t(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end())
        throw std::invalid_argument("polytope: dual complex is disconnected");

    CombinatorialPolytope p;
    p.n = n;
    p.m = m;
    p.facet_names = std::move(names);
    p.vertices = std::move(vertices);
    return p;
}

/*
 * Face lattice keyed by codimension: faces[k] lists the codim-k faces as
 * lex-sorted facet subsets, k = 0 (the whole polytope) through n (vertices).
 * cofaces[k][i] indexes the codim-(k+1) faces obtained by adding one facet.
 */
struct FaceLattice {
    int n = 0;
    std::vector<std::vector<FacetSet>> faces;
    std::vector<std::vector<std::vector<int>>> cofaces;
    std::vector<std::map<FacetSet, int>> index_of;

    bool is_face(const FacetSet& t) const {
        return int(t.size()) <= n && index_of[t.size()].count(t) > 0;
    }
    int find(const FacetSet& t) const {  // index within its codimension, -1 if absent
        if (int(t.size()) > n) return -1;
        auto it = index_of[t.size()].find(t);
        return it == index_of[t.size()].end() ? -1 : it->second;
    }
};

inline FaceLattice face_lattice(const CombinatorialPolytope& p) {
    FaceLattice lat;
    lat.n = p.n;
    std::vector<std::set<FacetSet>> level(std::size_t(p.n) + 1);
    for (const auto& v : p.vertices) {
        const std::uint32_t full = std::uint32_t(1) << p.n;
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            FacetSet t;
            for (int k = 0; k < p.n; ++k)
                if ((mask >> k) & 1) t.push_back(v[std::size_t(k)]);
            level[t.size()].insert(std::move(t));
        }
    }
    lat.faces.resize(std::size_t(p.n) + 1);
    lat.index_of.resize(std::size_t(p.n) + 1);
    for (int k = 0; k <= p.n; ++k) {
        lat.faces[std::size_t(k)].assign(level[std::size_t(k)].begin(), level[std::size_t(k)].end());
        for (std::size_t i = 0; i < lat.faces[std::size_t(k)].size(); ++i)
            lat.index_of[std::size_t(k)][lat.faces[std::size_t(k)][i]] = int(i);
    }
    lat.cofaces.resize(std::size_t(p.n) + 1);
    for (int k = 0; k < p.n; ++k)
        lat.cofaces[std::size_t(k)].resize(lat.faces[std::size_t(k)].size());
    for (int k = 1; k <= p.n; ++k) {
        for (std::size_t i = 0; i < lat.faces[std::size_t(k)].size(); ++i) {
            const auto& t = lat.faces[std::size_t(k)][i];
            for (std::size_t drop = 0; drop < t.size(); ++drop) {
                FacetSet parent;
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (j != drop) parent.push_back(t[j]);
                lat.cofaces[std::size_t(k - 1)][std::size_t(lat.find(parent))].push_back(int(i));
            }
        }
    }
    for (auto& lvl : lat.cofaces)
        for (auto& c : lvl) std::sort(c.begin(), c.end());
    return lat;
}

// vertices of the face given by facet subset t (ids into p.vertices)
inline std::vector<int> face_vertices(const CombinatorialPolytope& p, const FacetSet& t) {
    std::vector<int> out;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi)
        if (std::includes(p.vertices[vi].begin(), p.vertices[vi].end(), t.begin(), t.end()))
            out.push_back(int(vi));
    return out;
}

// f_i = number of faces of codimension i+1, i = 0 .. n-1
inline std::vector<long long> f_vector(const FaceLattice& lat) {
    std::vector<long long> f;
    for (int k = 1; k <= lat.n; ++k) f.push_back((long long)(lat.faces[std::size_t(k)].size()));
    return f;
}

inline std::vector<long long> f_vector(const CombinatorialPolytope& p) {
    return f_vector(face_lattice(p));
}

namespace detail {
inline long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}
}  // namespace detail

// h-numbers of a dim-dimensional polytope from its f-vector, via
//   h_0 t^dim + ... + h_dim = (t-1)^dim + f_0 (t-1)^(dim-1) + ... + f_{dim-1}.
inline std::vector<long long> h_from_f(const std::vector<long long>& f, int dim) {
    if (int(f.size()) != dim) throw std::invalid_argument("h_from_f: f-vector has wrong length");
    std::vector<long long> coef(std::size_t(dim) + 1, 0);  // coef[j] multiplies t^j
    for (int k = 0; k <= dim; ++k) {
        long long fk = (k == 0) ? 1 : f[std::size_t(k - 1)];
        int d = dim - k;  // expand fk * (t-1)^d
        for (int j = 0; j <= d; ++j) {
            long long term = fk * detail::binomial(d, j);
            if ((d - j) % 2) term = -term;
            coef[std::size_t(j)] += term;
        }
    }
    std::vector<long long> h(std::size_t(dim) + 1);
    for (int i = 0; i <= dim; ++i) h[std::size_t(i)] = coef[std::size_t(dim - i)];
    return h;
}

inline std::vector<long long> h_vector(const FaceLattice& lat) {
    return h_from_f(f_vector(lat), lat.n);
}

inline std::vector<long long> h_vector(const CombinatorialPolytope& p) {
    return h_vector(face_lattice(p));
}

// ---------------------------------------------------------------------------
// geometry: heights, generic hyperplane sections, vertex indices
// ---------------------------------------------------------------------------

inline void require_geometry(const CombinatorialPolytope& p, const GeometricRealization& g) {
    if (g.coords.size() != p.vertices.size())
        throw geometry_error("geometry: need one coordinate point per vertex");
    for (const auto& c : g.coords)
        if (int(c.size()) != p.n) throw geometry_error("geometry: points must have dimension n");
}

inline std::vector<double> heights(const CombinatorialPolytope& p, const GeometricRealization& g,
                                   const std::vector<double>& l) {
    require_geometry(p, g);
    if (int(l.size()) != p.n) throw geometry_error("geometry: direction must have dimension n");
    std::vector<double> h(p.vertices.size());
    for (std::size_t v = 0; v < g.coords.size(); ++v)
        h[v] = std::inner_product(l.begin(), l.end(), g.coords[v].begin(), 0.0);
    return h;
}

// per-vertex edge neighbours: crossing the edge that drops facet `dropped`
struct EdgeNeighbor {
    int dropped;
    int neighbor;
};

inline std::vector<std::vector<EdgeNeighbor>> vertex_adjacency(const CombinatorialPolytope& p) {
    std::map<FacetSet, std::vector<int>> ridge_verts;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        const auto& v = p.vertices[vi];
        for (int drop = 0; drop < p.n; ++drop) {
            FacetSet r;
            for (int k = 0; k < p.n; ++k)
                if (k != drop) r.push_back(v[std::size_t(k)]);
            ridge_verts[r].push_back(int(vi));
        }
    }
    std::vector<std::vector<EdgeNeighbor>> adj(p.vertices.size());
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        const auto& v = p.vertices[vi];
        for (int drop = 0; drop < p.n; ++drop) {
            FacetSet r;
            for (int k = 0; k < p.n; ++k)
                if (k != drop) r.push_back(v[std::size_t(k)]);
            const auto& pair = ridge_verts[r];
            int other = pair[0] == int(vi) ? pair[1] : pair[0];
            adj[vi].push_back({v[std::size_t(drop)], other});
        }
    }
    return adj;
}

struct SectionData {
    std::vector<int> side;                          // per vertex: -1 or +1
    std::vector<std::pair<int, int>> crossed_faces; // (codim, index in lattice)
    std::vector<int> crossed_facets;                // facet indices crossed by the hyperplane
    std::vector<long long> f_vector_S;              // f-vector of the section, length n-1
    std::vector<long long> h_vector_S;              // h-numbers of the section, length n
};

// Generic hyperplane section { <l,x> = c }.  Genericity demands every vertex
// stay clear of the hyperplane by 1e-9 relative to the largest |<l,v>|.
inline SectionData slice(const CombinatorialPolytope& p, const GeometricRealization& g,
                         const std::vector<double>& l, double c) {
    std::vector<double> h = heights(p, g, l);
    double scale = 0.0;
    for (double x : h) scale = std::max(scale, std::fabs(x));
    const double tol = 1e-9 * scale;
    SectionData s;
    s.side.resize(h.size());
    bool minus = false, plus = false;
    for (std::size_t v = 0; v < h.size(); ++v) {
        double d = h[v] - c;
        if (std::fabs(d) <= tol)
            throw geometry_error("slice: hyperplane is not generic (vertex " + std::to_string(v) +
                                 " lies on it)");
        s.side[v] = d < 0 ? -1 : +1;
        (d < 0 ? minus : plus) = true;
    }
    if (!minus || !plus) throw geometry_error("slice: section is empty");

    FaceLattice lat = face_lattice(p);
    for (int k = 0; k <= p.n; ++k) {
        for (std::size_t i = 0; i < lat.faces[std::size_t(k)].size(); ++i) {
            bool neg = false, pos = false;
            for (int v : face_vertices(p, lat.faces[std::size_t(k)][i]))
                (s.side[std::size_t(v)] < 0 ? neg : pos) = true;
            if (neg && pos) {
                s.crossed_faces.emplace_back(k, int(i));
                if (k == 1) s.crossed_facets.push_back(lat.faces[1][i][0]);
            }
        }
    }
    for (int k = 1; k < p.n; ++k)
        s.f_vector_S.push_back((long long)std::count_if(
            s.crossed_faces.begin(), s.crossed_faces.end(),
            [k](const std::pair<int, int>& f) { return f.first == k; }));
    s.h_vector_S = h_from_f(s.f_vector_S, p.n - 1);
    return s;
}

struct MorseData {
    std::vector<int> index;          // per vertex: number of lower edge-neighbours
    std::vector<long long> counts;   // counts[i] = #vertices of index i, length n+1
    std::vector<double> height;      // per-vertex value of the direction
};

// Vertex indices of a generic direction l.  Non-generic (an edge with equal
// endpoint heights, relative tolerance as in slice) is an error.
inline MorseData morse_index_counts(const CombinatorialPolytope& p,
                                    const GeometricRealization& g,
                                    const std::vector<double>& l) {
    MorseData md;
    md.height = heights(p, g, l);
    double scale = 0.0;
    for (double x : md.height) scale = std::max(scale, std::fabs(x));
    const double tol = 1e-9 * scale;
    auto adj = vertex_adjacency(p);
    md.index.resize(p.vertices.size(), 0);
    md.counts.assign(std::size_t(p.n) + 1, 0);
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        for (const auto& e : adj[v]) {
            double d = md.height[std::size_t(e.neighbor)] - md.height[v];
            if (std::fabs(d) <= tol)
                throw geometry_error("morse: direction is not generic on an edge");
            if (d < 0) ++md.index[v];
        }
        ++md.counts[std::size_t(md.index[v])];
    }
    return md;
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

inline BuiltPolytope segment() {
    CombinatorialPolytope p = from_vertex_facets(1, 2, {"F1", "F2"}, {{0}, {1}});
    return {std::move(p), GeometricRealization{{{0.0}, {1.0}}}};
}

inline BuiltPolytope simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex: dimension must be at least 1");
    if (n > 20) throw cap_error("simplex: dimension limit exceeded");
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("F" + std::to_string(i + 1));
    std::vector<FacetSet> verts;
    GeometricRealization g;
    for (int j = 0; j <= n; ++j) {  // vertex j is opposite facet j
        FacetSet v;
        for (int i = 0; i <= n; ++i)
            if (i != j) v.push_back(i);
        verts.push_back(std::move(v));
        std::vector<double> pt(std::size_t(n), 0.0);
        if (j > 0) pt[std::size_t(j - 1)] = 1.0;
        g.coords.push_back(std::move(pt));
    }
    return {from_vertex_facets(n, n + 1, std::move(names), std::move(verts)), std::move(g)};
}

inline BuiltPolytope cube(int n) {
    if (n < 1) throw std::invalid_argument("cube: dimension must be at least 1");
    if (n > 20) throw cap_error("cube: dimension limit exceeded");
    std::vector<std::string> names;
    for (int d = 0; d < n; ++d) {
        names.push_back("x" + std::to_string(d + 1) + "-");
        names.push_back("x" + std::to_string(d + 1) + "+");
    }
    std::vector<FacetSet> verts;
    GeometricRealization g;
    for (std::uint32_t b = 0; b < (std::uint32_t(1) << n); ++b) {
        FacetSet v;
        std::vector<double> pt;
        for (int d = 0; d < n; ++d) {
            int bit = int((b >> d) & 1);
            v.push_back(2 * d + bit);
            pt.push_back(double(bit));
        }
        verts.push_back(std::move(v));
        g.coords.push_back(std::move(pt));
    }
    return {from_vertex_facets(n, 2 * n, std::move(names), std::move(verts)), std::move(g)};
}

inline BuiltPolytope square() {
    BuiltPolytope b = cube(2);
    b.poly.facet_names = {"L", "R", "B", "T"};
    return b;
}

// Convex m-gon with edges named by their endpoints (AB, BC, ...).  Vertices
// descend strictly in the y-coordinate from A around to the last one, so the
// direction (0,1) is generic with the single ascent on the closing edge.
inline BuiltPolytope polygon(int m) {
    if (m < 3) throw std::invalid_argument("polygon: need at least 3 edges");
    if (m > 1000000) throw cap_error("polygon: size limit exceeded");
    auto letter = [m](int k) {
        return m <= 26 ? std::string(1, char('A' + k)) : "V" + std::to_string(k + 1);
    };
    std::vector<std::string> names;
    for (int k = 0; k < m; ++k) names.push_back(letter(k) + letter((k + 1) % m));
    std::vector<FacetSet> verts;
    for (int k = 0; k < m; ++k) {
        FacetSet v{(k + m - 1) % m, k};
        std::sort(v.begin(), v.end());
        verts.push_back(std::move(v));
    }
    GeometricRealization g;
    if (m == 5) {
        g.coords = {{0, 10}, {7, 6}, {9, 0}, {6, -6}, {-2, -9}};
    } else {
        const double pi = 3.14159265358979323846;
        for (int k = 0; k < m; ++k) {
            double theta = (80.0 - 160.0 * k / (m - 1)) * pi / 180.0;
            g.coords.push_back({std::cos(theta), std::sin(theta)});
        }
    }
    return {from_vertex_facets(2, m, std::move(names), std::move(verts)), std::move(g)};
}

// Permutohedron of dimension n: facets are the proper nonempty subsets of
// {1..n+1} ordered by (size, lex); the vertex of the permutation sigma lies
// on the subsets that hold sigma's k smallest values, k = 1..n.  Coordinates
// are (sigma(1),...,sigma(n)) — the last coordinate of the classical
// embedding is dropped, an affine isomorphism on its hyperplane.
inline BuiltPolytope permutohedron(int n, std::size_t cap = 1000000) {
    if (n < 1) throw std::invalid_argument("permutohedron: dimension must be at least 1");
    std::size_t nverts = 1;
    for (int i = 2; i <= n + 1; ++i) {
        nverts *= std::size_t(i);
        if (nverts > cap) throw cap_error("permutohedron: vertex count exceeds cap");
    }
    std::vector<FacetSet> subsets;  // facet i <-> subsets[i], elements 1..n+1
    for (int size = 1; size <= n; ++size)
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (n + 1)); ++mask)
            if (std::popcount(mask) == size) {
                FacetSet s;
                for (int e = 0; e <= n; ++e)
                    if ((mask >> e) & 1) s.push_back(e + 1);
                subsets.push_back(std::move(s));
            }
    std::sort(subsets.begin(), subsets.end(), [](const FacetSet& a, const FacetSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::map<FacetSet, int> subset_index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        subset_index[subsets[i]] = int(i);
        std::string nm = "s";
        for (int e : subsets[i]) nm += std::to_string(e);
        names.push_back(std::move(nm));
    }
    std::vector<FacetSet> verts;
    GeometricRealization g;
    std::vector<int> sigma(std::size_t(n) + 1);
    std::iota(sigma.begin(), sigma.end(), 1);  // sigma[i] = value at coordinate i+1
    do {
        FacetSet v;
        for (int k = 1; k <= n; ++k) {
            FacetSet s;
            for (int i = 0; i <= n; ++i)
                if (sigma[std::size_t(i)] <= k) s.push_back(i + 1);
            v.push_back(subset_index.at(s));
        }
        std::sort(v.begin(), v.end());
        verts.push_back(std::move(v));
        std::vector<double> pt;
        for (int i = 0; i < n; ++i) pt.push_back(double(sigma[std::size_t(i)]));
        g.coords.push_back(std::move(pt));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {from_vertex_facets(n, int(subsets.size()), std::move(names), std::move(verts)),
            std::move(g)};
}

// Cartesian product.  Facets: those of p (times q) first, then those of q;
// vertex (v,w) has index v*|W|+w.  Name collisions get a trailing apostrophe.
inline BuiltPolytope product(const BuiltPolytope& a, const BuiltPolytope& b,
                             std::size_t cap = 1000000) {
    const auto& P = a.poly;
    const auto& Q = b.poly;
    if (P.vertices.size() * Q.vertices.size() > cap)
        throw cap_error("product: vertex count exceeds cap");
    std::vector<std::string> names = P.facet_names;
    std::set<std::string> used(names.begin(), names.end());
    for (auto nm : Q.facet_names) {
        while (used.count(nm)) nm += "'";
        used.insert(nm);
        names.push_back(nm);
    }
    std::vector<FacetSet> verts;
    for (const auto& v : P.vertices)
        for (const auto& w : Q.vertices) {
            FacetSet t = v;
            for (int j : w) t.push_back(P.m + j);
            verts.push_back(std::move(t));
        }
    CombinatorialPolytope r = from_vertex_facets(P.n + Q.n, P.m + Q.m, std::move(names),
                                                 std::move(verts));
    BuiltPolytope out{std::move(r), std::nullopt};
    if (a.geom && b.geom) {
        GeometricRealization g;
        for (const auto& cv : a.geom->coords)
            for (const auto& cw : b.geom->coords) {
                std::vector<double> pt = cv;
                pt.insert(pt.end(), cw.begin(), cw.end());
                g.coords.push_back(std::move(pt));
            }
        out.geom = std::move(g);
    }
    return out;
}

// Prism P x [0,1]: facets of P in order, then the bottom copy "base0" (last
// coordinate 0) and the top copy "base1".
inline BuiltPolytope prism(const BuiltPolytope& base, std::size_t cap = 1000000) {
    BuiltPolytope seg = segment();
    seg.poly.facet_names = {"base0", "base1"};
    return product(base, seg, cap);
}

}  // namespace smallcover

#endif
