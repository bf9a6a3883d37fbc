/*
 * io.hpp: JSON file formats and small text formatters.
 *
 * Polytope file: { "n": int, "facets": [names], "vertices": [[facet
 * indices]], "coords": optional [[floats]] }.  Matrix file: { "lambda":
 * [[0/1 per coordinate] per facet] }.  Class file: { "class": [0/1 per
 * facet] }.  Matrices and classes are also accepted as command-line
 * literals; see parse_lambda and parse_class.
 */
#ifndef SMALLCOVER_IO_HPP
#define SMALLCOVER_IO_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallcover/charmap.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/quotient.hpp"

namespace smallcover {

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

inline BuiltPolytope polytope_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("facets") || !j.contains("vertices"))
        throw std::invalid_argument("polytope file needs fields n, facets, vertices");
    std::vector<std::string> names = j["facets"].get<std::vector<std::string>>();
    std::vector<FacetSet> verts = j["vertices"].get<std::vector<FacetSet>>();
    const int m = int(names.size());
    BuiltPolytope p{
        from_vertex_facets(j["n"].get<int>(), m, std::move(names), std::move(verts)),
        std::nullopt};
    if (j.contains("coords")) {
        GeometricRealization g{j["coords"].get<std::vector<std::vector<double>>>()};
        require_geometry(p.poly, g);
        p.geom = std::move(g);
    }
    return p;
}

inline BuiltPolytope load_polytope(const std::string& path) {
    return polytope_from_json(load_json(path));
}

inline nlohmann::json polytope_to_json(const BuiltPolytope& p) {
    nlohmann::json j;
    j["n"] = p.poly.n;
    j["facets"] = p.poly.facet_names;
    j["vertices"] = p.poly.vertices;
    if (p.geom) j["coords"] = p.geom->coords;
    return j;
}

inline gf2::BitMatrix lambda_from_json(const nlohmann::json& j) {
    if (!j.contains("lambda")) throw std::invalid_argument("matrix file needs field lambda");
    auto rows = j["lambda"].get<std::vector<std::vector<int>>>();
    if (rows.empty()) throw std::invalid_argument("matrix file: no rows");
    gf2::BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw std::invalid_argument("matrix file: ragged rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c]) m.set(r, c);
    }
    return m;
}

// literal rows like "10;10;01;01", otherwise a path to a matrix file
inline gf2::BitMatrix parse_lambda(const std::string& arg) {
    if (arg.find_first_not_of("01;") == std::string::npos && !arg.empty()) {
        std::vector<gf2::BitVector> rows;
        std::size_t width = 0;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            gf2::BitVector v(tok.size());
            for (std::size_t i = 0; i < tok.size(); ++i)
                if (tok[i] == '1') v.set(i);
            if (rows.empty()) width = tok.size();
            if (tok.size() != width) throw std::invalid_argument("matrix literal: ragged rows");
            rows.push_back(std::move(v));
        }
        if (rows.empty()) throw std::invalid_argument("matrix literal: no rows");
        return gf2::BitMatrix::from_rows(std::move(rows), width);
    }
    return lambda_from_json(load_json(arg));
}

// a 0/1 string, a path to a class file, or a comma-separated facet name list
inline gf2::BitVector parse_class(const CombinatorialPolytope& p, const std::string& arg) {
    gf2::BitVector c(std::size_t(p.m));
    if (!arg.empty() && arg.find_first_not_of("01") == std::string::npos) {
        if (int(arg.size()) != p.m)
            throw std::invalid_argument("class literal needs one bit per facet");
        for (std::size_t i = 0; i < arg.size(); ++i)
            if (arg[i] == '1') c.set(i);
        return c;
    }
    if (std::filesystem::exists(arg)) {
        nlohmann::json j = load_json(arg);
        if (!j.contains("class")) throw std::invalid_argument("class file needs field class");
        auto bits = j["class"].get<std::vector<int>>();
        if (int(bits.size()) != p.m)
            throw std::invalid_argument("class file needs one bit per facet");
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) c.set(i);
        return c;
    }
    std::stringstream ss(arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto it = std::find(p.facet_names.begin(), p.facet_names.end(), name);
        if (it == p.facet_names.end()) throw std::invalid_argument("unknown facet name: " + name);
        c.flip(std::size_t(it - p.facet_names.begin()));
    }
    return c;
}

inline nlohmann::json class_to_json(const gf2::BitVector& c) {
    std::vector<int> bits;
    for (std::size_t i = 0; i < c.size(); ++i) bits.push_back(c.test(i) ? 1 : 0);
    return bits;
}

// cells in (codimension, face, coset) order with globally indexed boundary lists
inline nlohmann::json complex_to_json(const QuotientComplex& qc) {
    std::vector<int> offset(std::size_t(qc.n) + 1, 0);
    for (int c = 1; c <= qc.n; ++c)
        offset[std::size_t(c)] = offset[std::size_t(c) - 1] + int(qc.cells[std::size_t(c) - 1].size());
    nlohmann::json cells = nlohmann::json::array();
    for (int c = 0; c <= qc.n; ++c)
        for (std::size_t i = 0; i < qc.cells[std::size_t(c)].size(); ++i) {
            const Cell& cell = qc.cells[std::size_t(c)][i];
            nlohmann::json jc;
            jc["face"] = qc.lattice.faces[std::size_t(c)][std::size_t(cell.face)];
            jc["coset"] = cell.coset.to_string();
            jc["dim"] = qc.n - c;
            nlohmann::json bd = nlohmann::json::array();
            if (c < qc.n)
                for (int t : qc.boundary[std::size_t(c)][i]) bd.push_back(offset[std::size_t(c) + 1] + t);
            jc["boundary"] = std::move(bd);
            cells.push_back(std::move(jc));
        }
    nlohmann::json j;
    j["n"] = qc.n;
    j["group_rank"] = qc.group_rank;
    j["cells"] = std::move(cells);
    return j;
}

inline std::string paren(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string name_set(const CombinatorialPolytope& p, const gf2::BitVector& c) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < p.m; ++i)
        if (c.test(std::size_t(i))) {
            if (!first) s += ",";
            s += p.facet_names[std::size_t(i)];
            first = false;
        }
    return s + "}";
}

}  // namespace smallcover

#endif
