/*
 * quotient.hpp: the identification space P x GF(2)^N / ~ as a finite cell
 * complex, where (x,a) ~ (x,b) whenever a+b lies in the span of mu(F) over
 * the facets F containing x.  With N = n and mu characteristic this is the
 * closed manifold whose orbit space is P; appending a column gives its
 * two-fold covers.  Cells are pairs (face, coset); mod-2 homology comes from
 * boundary-matrix ranks.  Also here: dual-graph monodromy (turning a generic
 * hyperplane section into a degree-one class), per-facet section classes,
 * the sweep frontier check, and the sweep filtration table.
 */
#ifndef SMALLCOVER_QUOTIENT_HPP
#define SMALLCOVER_QUOTIENT_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

struct Cell {
    int codim = 0;         // |T|, the number of facets cutting out the face
    int face = 0;          // index into FaceLattice::faces[codim]
    gf2::BitVector coset;  // canonical representative of a + span{mu rows over T}
};

/*
 * Cells are grouped by codimension (dimension of a cell = n - codim) and
 * ordered by (face index, coset value); face indices follow the lattice,
 * whose faces are lexicographically sorted, so the whole layout is a pure
 * function of the input.  boundary[c][i] lists, for cell i of codimension c,
 * the cells of codimension c+1 its attaching map covers; every incidence
 * number is 1 because distinct facets of a face stay distinct downstairs.
 */
struct QuotientComplex {
    int n = 0;
    std::size_t group_rank = 0;  // N, number of coordinates of the group
    gf2::BitMatrix mu;           // m x N generator matrix
    FaceLattice lattice;
    std::vector<std::vector<Cell>> cells;                 // by codimension 0..n
    std::vector<std::vector<std::vector<int>>> boundary;  // by codimension 0..n-1
    std::vector<std::vector<gf2::Echelon>> stabilizer;    // echelon span per face
    std::vector<std::vector<std::vector<int>>> free_cols; // non-pivot columns per face
    std::vector<std::vector<int>> face_offset;            // first cell index per face

    std::size_t total_cells() const {
        std::size_t t = 0;
        for (const auto& lvl : cells) t += lvl.size();
        return t;
    }

    // index of the cell (codim, face, a) among the codim-level cells;
    // a may be any coset member
    int cell_index(int codim, int face, const gf2::BitVector& a) const {
        gf2::BitVector r = stabilizer[std::size_t(codim)][std::size_t(face)].reduce(a);
        const auto& free = free_cols[std::size_t(codim)][std::size_t(face)];
        std::size_t counter = 0;
        for (std::size_t b = 0; b < free.size(); ++b)
            if (r.test(std::size_t(free[b]))) counter |= std::size_t(1) << b;
        return face_offset[std::size_t(codim)][std::size_t(face)] + int(counter);
    }
};

inline QuotientComplex build_complex(const CombinatorialPolytope& p, const gf2::BitMatrix& mu,
                                     std::size_t cap = 1000000) {
    if (int(mu.rows()) != p.m)
        throw std::invalid_argument("quotient: generator matrix needs one row per facet");
    std::vector<int> bad;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        gf2::Echelon e(mu.cols());
        for (int f : p.vertices[vi]) e.insert(mu.row(std::size_t(f)));
        if (int(e.rank()) != p.n) bad.push_back(int(vi));
    }
    if (!bad.empty()) {
        std::string msg = "quotient: generator rows are dependent at " +
                          std::to_string(bad.size()) + " vertex(es)";
        throw validation_error(std::move(msg), std::move(bad));
    }

    QuotientComplex qc;
    qc.n = p.n;
    qc.group_rank = mu.cols();
    qc.mu = mu;
    qc.lattice = face_lattice(p);

    qc.stabilizer.resize(std::size_t(p.n) + 1);
    qc.free_cols.resize(std::size_t(p.n) + 1);
    qc.face_offset.resize(std::size_t(p.n) + 1);
    std::size_t total = 0;
    for (int c = 0; c <= p.n; ++c) {
        for (const auto& t : qc.lattice.faces[std::size_t(c)]) {
            gf2::Echelon e(mu.cols());
            for (int f : t) e.insert(mu.row(std::size_t(f)));
            std::vector<int> free = e.free_columns();
            if (free.size() >= 40 || (total += std::size_t(1) << free.size()) > cap)
                throw cap_error("quotient: cell count exceeds cap");
            qc.face_offset[std::size_t(c)].push_back(-1);
            qc.stabilizer[std::size_t(c)].push_back(std::move(e));
            qc.free_cols[std::size_t(c)].push_back(std::move(free));
        }
    }

    qc.cells.resize(std::size_t(p.n) + 1);
    for (int c = 0; c <= p.n; ++c) {
        auto& lvl = qc.cells[std::size_t(c)];
        for (std::size_t fi = 0; fi < qc.lattice.faces[std::size_t(c)].size(); ++fi) {
            qc.face_offset[std::size_t(c)][fi] = int(lvl.size());
            const auto& free = qc.free_cols[std::size_t(c)][fi];
            for (std::size_t counter = 0; counter < (std::size_t(1) << free.size()); ++counter) {
                gf2::BitVector a(mu.cols());
                for (std::size_t b = 0; b < free.size(); ++b)
                    if ((counter >> b) & 1) a.set(std::size_t(free[b]));
                lvl.push_back({c, int(fi), std::move(a)});
            }
        }
    }

    qc.boundary.resize(std::size_t(p.n));
    for (int c = 0; c < p.n; ++c) {
        auto& lvl = qc.boundary[std::size_t(c)];
        lvl.resize(qc.cells[std::size_t(c)].size());
        for (std::size_t i = 0; i < qc.cells[std::size_t(c)].size(); ++i) {
            const Cell& cell = qc.cells[std::size_t(c)][i];
            for (int j : qc.lattice.cofaces[std::size_t(c)][std::size_t(cell.face)])
                lvl[i].push_back(qc.cell_index(c + 1, j, cell.coset));
        }
    }
    return qc;
}

inline std::vector<long long> betti(const QuotientComplex& qc) {
    // rank of the boundary map leaving the codimension-c cells
    std::vector<std::size_t> r(std::size_t(qc.n) + 1, 0);
    for (int c = 0; c < qc.n; ++c) {
        gf2::BitMatrix d(qc.cells[std::size_t(c)].size(), qc.cells[std::size_t(c) + 1].size());
        for (std::size_t i = 0; i < qc.cells[std::size_t(c)].size(); ++i)
            for (int j : qc.boundary[std::size_t(c)][i]) d.set(i, std::size_t(j));
        r[std::size_t(c)] = gf2::rank(d);
    }
    std::vector<long long> b(std::size_t(qc.n) + 1, 0);
    for (int k = 0; k <= qc.n; ++k) {
        const std::size_t c = std::size_t(qc.n - k);
        b[std::size_t(k)] = (long long)qc.cells[c].size() - (long long)r[c] -
                            (long long)(k < qc.n ? r[c - 1] : 0);
    }
    return b;
}

/*
 * Two-fold cover of the quotient of lambda determined by a degree-one class
 * c, built as the quotient of the extended matrix (lambda | c).  Dropping
 * the last group coordinate is two-to-one on cells, so this covers the base
 * quotient; walking through a wall labeled by facet i flips the extra
 * coordinate exactly when c_i = 1, so a loop swaps the two sheets iff its
 * facet crossing parities pair nontrivially with c.  That is the defining
 * monodromy of the class sum_i c_i v_i.
 */
inline QuotientComplex double_cover_complex(const CombinatorialPolytope& p,
                                            const CharacteristicMap& cm, const gf2::BitVector& c,
                                            std::size_t cap = 1000000) {
    if (int(c.size()) != p.m) throw std::invalid_argument("double cover: class length must be m");
    gf2::BitMatrix mu(std::size_t(p.m), std::size_t(p.n) + 1);
    for (int i = 0; i < p.m; ++i) {
        for (int j = 0; j < p.n; ++j)
            if (cm.lambda.get(std::size_t(i), std::size_t(j))) mu.set(std::size_t(i), std::size_t(j));
        if (c.test(std::size_t(i))) mu.set(std::size_t(i), std::size_t(p.n));
    }
    return build_complex(p, mu, cap);
}

// Number of connected components of the part of the quotient lying over the
// face t, by the rank formula: the facets whose generators identify sheets
// over t are exactly those meeting t.
inline long long preimage_components(const CombinatorialPolytope& p, const gf2::BitMatrix& mu,
                                     const FacetSet& t) {
    std::vector<int> verts = face_vertices(p, t);
    if (verts.empty()) throw std::invalid_argument("preimage: not a face");
    std::set<int> meets;
    for (int v : verts)
        for (int f : p.vertices[std::size_t(v)]) meets.insert(f);
    gf2::Echelon e(mu.cols());
    for (int f : meets) e.insert(mu.row(std::size_t(f)));
    return 1LL << (mu.cols() - e.rank());
}

// The same count read off a built complex: connected components of the
// subcomplex of cells whose face lies inside t, by union-find over boundary
// incidences.
inline long long preimage_components(const QuotientComplex& qc, const FacetSet& t) {
    if (!qc.lattice.is_face(t)) throw std::invalid_argument("preimage: not a face");
    std::vector<std::vector<int>> id(std::size_t(qc.n) + 1);
    int nodes = 0;
    for (int c = int(t.size()); c <= qc.n; ++c) {
        id[std::size_t(c)].assign(qc.cells[std::size_t(c)].size(), -1);
        for (std::size_t i = 0; i < qc.cells[std::size_t(c)].size(); ++i) {
            const auto& face = qc.lattice.faces[std::size_t(c)][std::size_t(qc.cells[std::size_t(c)][i].face)];
            if (std::includes(face.begin(), face.end(), t.begin(), t.end()))
                id[std::size_t(c)][i] = nodes++;
        }
    }
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
        return x;
    };
    for (int c = int(t.size()); c < qc.n; ++c)
        for (std::size_t i = 0; i < qc.cells[std::size_t(c)].size(); ++i) {
            if (id[std::size_t(c)][i] < 0) continue;
            for (int j : qc.boundary[std::size_t(c)][i])
                parent[std::size_t(find(id[std::size_t(c)][i]))] = find(id[std::size_t(c) + 1][std::size_t(j)]);
        }
    long long roots = 0;
    for (int x = 0; x < nodes; ++x)
        if (find(x) == x) ++roots;
    return roots;
}

/*
 * A generic hyperplane section S of P lifts to a hypersurface in the
 * quotient manifold.  Its components are indexed by cosets of
 * V = span{lambda(F): F crossed}; this operation handles the two-component
 * case rank V = n-1, where the components are told apart by the value of
 * the functional psi vanishing on V.  Each component is a closed
 * hypersurface and so is dual to a degree-one class; both are computed.
 */
struct SectionClasses {
    SectionData section;
    gf2::BitVector psi;                     // functional on GF(2)^n cutting out V
    std::array<gf2::BitVector, 2> cls;      // cls[b]: canonical class of the psi = b component
};

inline SectionClasses section_to_class(const CombinatorialPolytope& p,
                                       const GeometricRealization& g, const CharacteristicMap& cm,
                                       const std::vector<double>& l, double threshold) {
    if (p.n >= 25) throw cap_error("section: dual graph too large");
    SectionClasses out;
    out.section = slice(p, g, l, threshold);

    gf2::Echelon v(std::size_t(p.n));
    gf2::BitMatrix crossed(0, std::size_t(p.n));
    for (int f : out.section.crossed_facets) {
        v.insert(cm.lambda.row(std::size_t(f)));
        crossed.append_row(cm.lambda.row(std::size_t(f)));
    }
    if (int(v.rank()) == p.n)
        throw section_error("section: hyperplane preimage is connected, not a section class");
    if (int(v.rank()) < p.n - 1)
        throw section_error("section: hyperplane preimage has more than two components");
    out.psi = gf2::kernel_basis(crossed)[0];

    // dual graph of the manifold cut along the section: nodes are (side,
    // group element), walls are facet pieces on a side plus one section wall
    // per group element.  Edge signatures live in GF(2)^{m+2}: coordinate i
    // counts facet-i crossings, coordinates m and m+1 count crossings of the
    // psi = 0 and psi = 1 section components.
    std::array<std::vector<bool>, 2> occupied;
    occupied[0].assign(std::size_t(p.m), false);
    occupied[1].assign(std::size_t(p.m), false);
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi)
        for (int f : p.vertices[vi]) occupied[out.section.side[vi] < 0 ? 0 : 1][std::size_t(f)] = true;

    const std::size_t copies = std::size_t(1) << p.n;
    auto node = [&](int s, std::size_t a) { return int(2 * a + std::size_t(s)); };
    auto group_elem = [&](std::size_t a) {
        gf2::BitVector x(std::size_t(p.n));
        for (int j = 0; j < p.n; ++j)
            if ((a >> j) & 1) x.set(std::size_t(j));
        return x;
    };
    auto value = [&](const gf2::BitVector& x) {
        std::size_t a = 0;
        for (int j = 0; j < p.n; ++j)
            if (x.test(std::size_t(j))) a |= std::size_t(1) << j;
        return a;
    };

    struct Edge {
        int u, v;
        gf2::BitVector sig;
    };
    std::vector<Edge> edges;
    const std::size_t sigw = std::size_t(p.m) + 2;
    for (int s = 0; s < 2; ++s)
        for (int f = 0; f < p.m; ++f) {
            if (!occupied[std::size_t(s)][std::size_t(f)]) continue;
            for (std::size_t a = 0; a < copies; ++a) {
                std::size_t b = value(group_elem(a) ^ cm.lambda.row(std::size_t(f)));
                if (a < b)
                    edges.push_back({node(s, a), node(s, b),
                                     gf2::BitVector::unit(sigw, std::size_t(f))});
            }
        }
    for (std::size_t a = 0; a < copies; ++a) {
        bool component = out.psi.dot(group_elem(a));
        edges.push_back({node(0, a), node(1, a),
                         gf2::BitVector::unit(sigw, std::size_t(p.m) + (component ? 1 : 0))});
    }

    std::vector<std::vector<int>> adj(2 * copies);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[std::size_t(edges[e].u)].push_back(int(e));
        adj[std::size_t(edges[e].v)].push_back(int(e));
    }
    std::vector<gf2::BitVector> potential(2 * copies);
    std::vector<bool> seen(2 * copies, false), used(edges.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    potential[0] = gf2::BitVector(sigw);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int e : adj[std::size_t(u)]) {
            int w = edges[std::size_t(e)].u == u ? edges[std::size_t(e)].v : edges[std::size_t(e)].u;
            if (seen[std::size_t(w)]) continue;
            seen[std::size_t(w)] = true;
            used[std::size_t(e)] = true;
            potential[std::size_t(w)] = potential[std::size_t(u)] ^ edges[std::size_t(e)].sig;
            q.push(w);
        }
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("section: dual graph is disconnected");

    gf2::BitMatrix pairings(0, std::size_t(p.m));
    std::vector<bool> mono[2];
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (used[e]) continue;
        gf2::BitVector cyc = potential[std::size_t(edges[e].u)] ^ potential[std::size_t(edges[e].v)] ^
                             edges[e].sig;
        gf2::BitVector pair(std::size_t(p.m));
        for (int f = 0; f < p.m; ++f)
            if (cyc.test(std::size_t(f))) pair.set(std::size_t(f));
        pairings.append_row(std::move(pair));
        mono[0].push_back(cyc.test(std::size_t(p.m)));
        mono[1].push_back(cyc.test(std::size_t(p.m) + 1));
    }
    if (int(gf2::rank(pairings)) != p.m - p.n)
        throw std::logic_error("section: cycle pairings have unexpected rank");
    for (int comp = 0; comp < 2; ++comp) {
        gf2::BitVector rhs(pairings.rows());
        for (std::size_t r = 0; r < pairings.rows(); ++r)
            if (mono[comp][r]) rhs.set(r);
        auto sol = gf2::solve(pairings, rhs);
        if (!sol) throw std::logic_error("section: monodromy system is inconsistent");
        out.cls[std::size_t(comp)] = canonical_rep(cm, *sol);
    }
    return out;
}

// The part of the quotient over one facet, when connected, is a closed
// hypersurface dual to the indicator class of that facet.  Connectivity
// needs the generators of the facets meeting it to span.
struct FacetSectionClass {
    gf2::BitVector cls;                // canonical indicator class
    std::vector<long long> h_facet;    // h-numbers of the facet, length n
};

inline FacetSectionClass facet_section_class(const CombinatorialPolytope& p,
                                             const CharacteristicMap& cm, int facet) {
    if (facet < 0 || facet >= p.m) throw std::invalid_argument("facet index out of range");
    if (preimage_components(p, cm.lambda, FacetSet{facet}) != 1)
        throw section_error("section: facet preimage is disconnected");
    FacetSectionClass out;
    out.cls = canonical_rep(cm, gf2::BitVector::unit(std::size_t(p.m), std::size_t(facet)));
    FaceLattice lat = face_lattice(p);
    std::vector<long long> f;
    for (int c = 2; c <= p.n; ++c)
        f.push_back((long long)std::count_if(
            lat.faces[std::size_t(c)].begin(), lat.faces[std::size_t(c)].end(),
            [facet](const FacetSet& t) { return std::binary_search(t.begin(), t.end(), facet); }));
    out.h_facet = h_from_f(f, p.n - 1);
    return out;
}

/*
 * Sweeping P by a generic direction assigns each vertex v the open cell of
 * points flowing down to it; the closure of that cell is the face G_v
 * spanned by v and its downward edges.  The open cells stratify P, but the
 * boundary of one cell need not lie in lower-dimensional cells: any face of
 * G_v missing v whose top vertex has index at least index(v) breaks the
 * frontier condition.  The check is purely combinatorial.
 */
struct FrontierViolation {
    int v = 0;        // vertex whose cell has the bad boundary face
    int w = 0;        // top vertex of the offending face
    FacetSet face;    // the offending face of G_v
};

inline std::vector<FrontierViolation> frontier_check(const CombinatorialPolytope& p,
                                                     const GeometricRealization& g,
                                                     const CharacteristicMap& cm,
                                                     const std::vector<double>& l) {
    (void)cm;
    MorseData md = morse_index_counts(p, g, l);
    auto adj = vertex_adjacency(p);
    FaceLattice lat = face_lattice(p);
    std::vector<FrontierViolation> out;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        FacetSet tv;
        for (const EdgeNeighbor& e : adj[vi])
            if (md.height[std::size_t(e.neighbor)] > md.height[vi]) tv.push_back(e.dropped);
        std::sort(tv.begin(), tv.end());
        for (int c = int(tv.size()); c <= p.n; ++c)
            for (const auto& t : lat.faces[std::size_t(c)]) {
                if (!std::includes(t.begin(), t.end(), tv.begin(), tv.end())) continue;
                std::vector<int> verts = face_vertices(p, t);
                if (std::find(verts.begin(), verts.end(), int(vi)) != verts.end()) continue;
                int w = verts[0];
                for (int u : verts)
                    if (md.height[std::size_t(u)] > md.height[std::size_t(w)]) w = u;
                if (md.index[std::size_t(w)] >= md.index[vi]) out.push_back({int(vi), w, t});
            }
    }
    return out;
}

/*
 * First page of the sweep filtration: ordering the vertices by height, the
 * p-th stage adds one cell of dimension index(v_p), so the (p,q) entry is
 * one exactly when p+q = index(v_p).  Column sums over p+q = i count the
 * index-i vertices.
 */
struct FiltrationTable {
    std::vector<int> order;             // vertex ids, ascending height
    std::vector<int> index;             // index of the p-th vertex in that order
    std::vector<long long> degree_sums; // per total degree 0..n

    bool entry(int p, int q) const { return p + q == index[std::size_t(p)]; }
};

inline FiltrationTable filtration_e1_table(const CombinatorialPolytope& p,
                                           const GeometricRealization& g,
                                           const CharacteristicMap& cm,
                                           const std::vector<double>& l) {
    (void)cm;
    MorseData md = morse_index_counts(p, g, l);
    FiltrationTable table;
    table.order.resize(p.vertices.size());
    std::iota(table.order.begin(), table.order.end(), 0);
    std::sort(table.order.begin(), table.order.end(), [&](int a, int b) {
        return md.height[std::size_t(a)] != md.height[std::size_t(b)]
                   ? md.height[std::size_t(a)] < md.height[std::size_t(b)]
                   : a < b;
    });
    table.degree_sums.assign(std::size_t(p.n) + 1, 0);
    for (int v : table.order) {
        table.index.push_back(md.index[std::size_t(v)]);
        ++table.degree_sums[std::size_t(md.index[std::size_t(v)])];
    }
    return table;
}

}  // namespace smallcover

#endif
