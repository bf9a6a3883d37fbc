/*
 * facering.hpp: the graded ring GF(2)[v_1..v_m] / (I + J), where I is
 * generated by the monomials of facet sets with empty intersection and J by
 * the linear forms sum_k lambda_j(F_k) v_k.  This is the cohomology ring of
 * the quotient manifold of lambda; the module computes graded dimensions,
 * kernels of cup multiplication by a degree-one class, the two-fold cover
 * Betti numbers those kernels determine, and the closed form for section
 * classes.
 */
#ifndef SMALLCOVER_FACERING_HPP
#define SMALLCOVER_FACERING_HPP

#include <map>
#include <string>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

struct GysinBetti {
    std::vector<long long> betti;
    bool disconnected = false;  // trivial class: the cover is two disjoint copies
};

/*
 * One echelonized relation space per degree, over the monomial basis of that
 * degree.  Monomials are exponent vectors listed in lexicographically
 * descending order, so the degree-1 basis is v_1, ..., v_m in facet order.
 */
struct GradedRingModel {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    CharacteristicMap map;
    std::vector<std::vector<std::vector<int>>> monomials;    // per degree
    std::vector<std::map<std::vector<int>, int>> index_of;   // exponent -> column
    std::vector<gf2::Echelon> relations;                     // per degree
    std::vector<long long> dims;                             // quotient dimensions
};

inline GradedRingModel build_ring(const CombinatorialPolytope& p, const CharacteristicMap& cm,
                                  int max_degree = -1, std::size_t cap = 2000000) {
    GradedRingModel model;
    model.n = p.n;
    model.m = p.m;
    model.max_degree = max_degree < 0 ? p.n + 1 : max_degree;
    model.map = cm;

    for (int d = 0; d <= model.max_degree; ++d) {
        std::vector<std::vector<int>> mons;
        std::vector<int> expo(std::size_t(p.m), 0);
        auto gen = [&](auto&& self, int var, int remaining) -> void {
            if (var == p.m - 1) {
                expo[std::size_t(var)] = remaining;
                mons.push_back(expo);
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                expo[std::size_t(var)] = e;
                self(self, var + 1, remaining - e);
            }
            expo[std::size_t(var)] = 0;
        };
        gen(gen, 0, d);
        if (mons.size() > cap) throw cap_error("ring: monomial count exceeds cap");
        std::map<std::vector<int>, int> idx;
        for (std::size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = int(i);

        gf2::Echelon rel(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i) {
            FacetSet support;
            for (int f = 0; f < p.m; ++f)
                if (mons[i][std::size_t(f)] > 0) support.push_back(f);
            bool face = false;
            for (const auto& v : p.vertices)
                if (std::includes(v.begin(), v.end(), support.begin(), support.end())) {
                    face = true;
                    break;
                }
            if (!face) rel.insert(gf2::BitVector::unit(mons.size(), i));
        }
        if (d >= 1)
            for (int j = 0; j < p.n; ++j)
                for (const auto& mu : model.monomials[std::size_t(d) - 1]) {
                    gf2::BitVector row(mons.size());
                    for (int i = 0; i < p.m; ++i) {
                        if (!cm.lambda.get(std::size_t(i), std::size_t(j))) continue;
                        std::vector<int> prod = mu;
                        ++prod[std::size_t(i)];
                        row.flip(std::size_t(idx.at(prod)));
                    }
                    rel.insert(std::move(row));
                }

        model.dims.push_back((long long)mons.size() - (long long)rel.rank());
        model.monomials.push_back(std::move(mons));
        model.index_of.push_back(std::move(idx));
        model.relations.push_back(std::move(rel));
        if (d > p.n && model.dims.back() != 0)
            throw std::logic_error("ring: quotient above the top degree is nonzero");
    }
    return model;
}

inline std::vector<long long> graded_dims(const GradedRingModel& model) {
    return std::vector<long long>(model.dims.begin(), model.dims.begin() + model.n + 1);
}

// Kernel dimensions of multiplication by the degree-one class c, one per
// degree 0..n.  The rank of the induced map is how much the image of the
// monomial basis grows the next degree's relation space.
inline std::vector<long long> cup_kernel_dims(const GradedRingModel& model,
                                              const gf2::BitVector& c) {
    if (int(c.size()) != model.m) throw std::invalid_argument("ring: class length must be m");
    if (model.max_degree < model.n)
        throw std::invalid_argument("ring: model needs all degrees through n");
    std::vector<long long> k;
    for (int d = 0; d <= model.n; ++d) {
        if (d + 1 > model.max_degree) {  // top degree: the next quotient is zero
            k.push_back(model.dims[std::size_t(d)]);
            continue;
        }
        gf2::Echelon image = model.relations[std::size_t(d) + 1];
        const std::size_t before = image.rank();
        for (const auto& mu : model.monomials[std::size_t(d)]) {
            gf2::BitVector row(model.monomials[std::size_t(d) + 1].size());
            for (int i = 0; i < model.m; ++i) {
                if (!c.test(std::size_t(i))) continue;
                std::vector<int> prod = mu;
                ++prod[std::size_t(i)];
                row.flip(std::size_t(model.index_of[std::size_t(d) + 1].at(prod)));
            }
            image.insert(std::move(row));
        }
        k.push_back(model.dims[std::size_t(d)] - (long long)(image.rank() - before));
    }
    return k;
}

/*
 * Betti numbers of the two-fold cover classified by c, from the exact
 * sequence of the cover: transfer and projection leave, in each degree,
 * b_d = d_d - d_{d-1} + k_{d-1} + k_d with the conventions d_{-1} = k_{-1}
 * = 0.  A trivial class gives two disjoint copies instead, flagged.
 */
inline GysinBetti gysin_betti(const GradedRingModel& model, const gf2::BitVector& c) {
    GysinBetti out;
    if (is_trivial(model.map, c)) {
        out.disconnected = true;
        for (int d = 0; d <= model.n; ++d) out.betti.push_back(2 * model.dims[std::size_t(d)]);
        return out;
    }
    std::vector<long long> k = cup_kernel_dims(model, c);
    for (int d = 0; d <= model.n; ++d)
        out.betti.push_back(model.dims[std::size_t(d)] -
                            (d > 0 ? model.dims[std::size_t(d) - 1] : 0) +
                            (d > 0 ? k[std::size_t(d) - 1] : 0) + k[std::size_t(d)]);
    return out;
}

// Closed form for the cover Betti numbers of a section class: h_P are the
// h-numbers of the polytope (length n+1), h_S those of the section (length
// n, with out-of-range entries read as zero).
inline std::vector<long long> section_double_cover_betti(const std::vector<long long>& h_P,
                                                         const std::vector<long long>& h_S) {
    if (h_P.size() != h_S.size() + 1)
        throw std::invalid_argument("inputs are not a valid (P,S) pair");
    std::vector<long long> b;
    for (std::size_t d = 0; d < h_P.size(); ++d) {
        long long v = 2 * h_P[d] - (d >= 1 && d - 1 < h_S.size() ? h_S[d - 1] : 0) -
                      (d < h_S.size() ? h_S[d] : 0);
        if (v < 0) throw std::invalid_argument("inputs are not a valid (P,S) pair");
        b.push_back(v);
    }
    return b;
}

// Whether the square of the class c vanishes in the ring.  Over GF(2) the
// cross terms cancel, so the square is the sum of the v_i^2 over the
// support of c.
inline bool square_is_zero(const GradedRingModel& model, const gf2::BitVector& c) {
    if (int(c.size()) != model.m) throw std::invalid_argument("ring: class length must be m");
    if (model.max_degree < 2) throw std::invalid_argument("ring: model needs degree 2");
    gf2::BitVector row(model.monomials[2].size());
    for (int i = 0; i < model.m; ++i) {
        if (!c.test(std::size_t(i))) continue;
        std::vector<int> sq(std::size_t(model.m), 0);
        sq[std::size_t(i)] = 2;
        row.flip(std::size_t(model.index_of[2].at(sq)));
    }
    return model.relations[2].contains(row);
}

// For a class dual to a connected hypersurface with h-numbers h_Y, the cup
// kernel profile is pinned: k_d = dims_d - h_Y[d] (h_Y padded with zeros).
// True iff the computed kernels match that prediction.
inline bool cup_kernel_matches_h(const GradedRingModel& model, const gf2::BitVector& c,
                                 const std::vector<long long>& h_Y) {
    std::vector<long long> k = cup_kernel_dims(model, c);
    for (int d = 0; d <= model.n; ++d) {
        long long expected =
            model.dims[std::size_t(d)] - (std::size_t(d) < h_Y.size() ? h_Y[std::size_t(d)] : 0);
        if (k[std::size_t(d)] != expected) return false;
    }
    return true;
}

}  // namespace smallcover

#endif
