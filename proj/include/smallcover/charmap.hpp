/*
 * charmap.hpp: characteristic matrices over GF(2).
 *
 * A characteristic matrix for an n-polytope with m facets assigns a vector
 * in GF(2)^n to every facet such that at each vertex the n incident rows
 * form a basis.  Degree-one cohomology classes of the quotient manifold are
 * length-m bit vectors modulo the row space of the transpose (the span of
 * the n linear forms sum_k lambda_i(F_k) v_k).
 */
#ifndef SMALLCOVER_CHARMAP_HPP
#define SMALLCOVER_CHARMAP_HPP

#include <string>
#include <vector>

#include "smallcover/errors.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

struct CharacteristicMap {
    gf2::BitMatrix lambda;  // m rows, n columns
};

// vertices whose incident rows fail to be a basis (empty = valid matrix)
inline std::vector<int> validate_charmap(const CombinatorialPolytope& p,
                                         const gf2::BitMatrix& lambda) {
    if (int(lambda.rows()) != p.m || int(lambda.cols()) != p.n)
        throw std::invalid_argument("charmap: matrix must be m x n");
    std::vector<int> bad;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
        gf2::Echelon e(std::size_t(p.n));
        for (int f : p.vertices[vi]) e.insert(lambda.row(std::size_t(f)));
        if (int(e.rank()) != p.n) bad.push_back(int(vi));
    }
    return bad;
}

inline CharacteristicMap characteristic_map(const CombinatorialPolytope& p,
                                            gf2::BitMatrix lambda) {
    std::vector<int> bad = validate_charmap(p, lambda);
    if (!bad.empty()) {
        std::string msg =
            "charmap: rows are dependent at " + std::to_string(bad.size()) + " vertex(es)";
        throw validation_error(std::move(msg), std::move(bad));
    }
    return {std::move(lambda)};
}

// lambda(F) = e_color(F) for a proper coloring with colors 1..n
inline CharacteristicMap from_coloring(const CombinatorialPolytope& p,
                                       const std::vector<int>& color) {
    if (int(color.size()) != p.m) throw std::invalid_argument("coloring: need one color per facet");
    for (int c : color)
        if (c < 1 || c > p.n) throw std::invalid_argument("coloring: colors must lie in 1..n");
    gf2::BitMatrix lambda(std::size_t(p.m), std::size_t(p.n));
    for (int f = 0; f < p.m; ++f) lambda.set(std::size_t(f), std::size_t(color[std::size_t(f)] - 1));
    std::vector<int> bad = validate_charmap(p, lambda);
    if (!bad.empty()) {
        std::string msg =
            "coloring: repeated color at " + std::to_string(bad.size()) + " vertex(es)";
        throw validation_error(std::move(msg), std::move(bad));
    }
    return {std::move(lambda)};
}

// replace lambda(F_g) by lambda(F_g) + a; invalid results are rejected
inline CharacteristicMap perturb(const CombinatorialPolytope& p, const CharacteristicMap& cm,
                                 int g, const gf2::BitVector& a) {
    if (g < 0 || g >= p.m) throw std::invalid_argument("perturb: facet index out of range");
    gf2::BitMatrix lambda = cm.lambda;
    lambda.row(std::size_t(g)) ^= a;
    std::vector<int> bad = validate_charmap(p, lambda);
    if (!bad.empty()) {
        std::string msg =
            "perturb: perturbed matrix is dependent at " + std::to_string(bad.size()) +
            " vertex(es)";
        throw validation_error(std::move(msg), std::move(bad));
    }
    return {std::move(lambda)};
}

// the n linear forms as rows over the facets (the transpose of lambda)
inline gf2::BitMatrix linear_forms(const CharacteristicMap& cm) {
    return cm.lambda.transposed();
}

inline bool is_trivial(const CharacteristicMap& cm, const gf2::BitVector& c) {
    if (c.size() != cm.lambda.rows()) throw std::invalid_argument("class: wrong length");
    return gf2::in_rowspace(linear_forms(cm), c);
}

// Canonical coset representative modulo the linear forms.  High-side pivots
// keep the representative supported on low-index facets, so e.g. a facet
// indicator survives reduction whenever possible.
inline gf2::BitVector canonical_rep(const CharacteristicMap& cm, const gf2::BitVector& c) {
    if (c.size() != cm.lambda.rows()) throw std::invalid_argument("class: wrong length");
    return gf2::row_echelon(linear_forms(cm), gf2::Pivot::high).reduce(c);
}

/*
 * Characteristic matrix of the prism P x [0,1] twisted by a class c:
 * facet F_i x [0,1] keeps lambda(F_i), extended by the bit c_i in the new
 * last coordinate; both bases P x {0}, P x {1} map to e_{n+1}.  The result
 * is characteristic for every c: at a prism vertex the old rows stay
 * independent in the first n coordinates and the base row supplies the rest.
 */
inline gf2::BitMatrix prism_charmap(const CombinatorialPolytope& p, const CharacteristicMap& cm,
                                    const gf2::BitVector& c) {
    if (c.size() != std::size_t(p.m)) throw std::invalid_argument("class: wrong length");
    gf2::BitMatrix out(std::size_t(p.m) + 2, std::size_t(p.n) + 1);
    for (int f = 0; f < p.m; ++f) {
        for (int j = 0; j < p.n; ++j)
            if (cm.lambda.get(std::size_t(f), std::size_t(j))) out.set(std::size_t(f), std::size_t(j));
        if (c.test(std::size_t(f))) out.set(std::size_t(f), std::size_t(p.n));
    }
    out.set(std::size_t(p.m), std::size_t(p.n));
    out.set(std::size_t(p.m) + 1, std::size_t(p.n));
    return out;
}

// class of the two prism bases on P x [0,1]: the pullback of any c under the
// bundle projection of the prism quotient over the circle factor
inline gf2::BitVector pullback_to_prism(const CombinatorialPolytope& p,
                                        const gf2::BitVector& c) {
    if (c.size() != std::size_t(p.m)) throw std::invalid_argument("class: wrong length");
    gf2::BitVector out(std::size_t(p.m) + 2);
    out.set(std::size_t(p.m));
    out.set(std::size_t(p.m) + 1);
    return out;
}

// parity predicate used when perturbing along a vector a in <e_2..e_n>
inline bool odd_support(const gf2::BitVector& a) { return a.count() % 2 == 1; }

}  // namespace smallcover

#endif
