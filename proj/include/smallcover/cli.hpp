/*
 * cli.hpp: command line driver.  Anything computed two independent ways is
 * printed with a verdict line.  Exit status: 0 when every cross check
 * agrees, 1 when some pair disagrees, 2 on bad input.
 */
#ifndef SMALLCOVER_CLI_HPP
#define SMALLCOVER_CLI_HPP

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charmap.hpp"
#include "errors.hpp"
#include "facering.hpp"
#include "gf2.hpp"
#include "io.hpp"
#include "polytope.hpp"
#include "quotient.hpp"

namespace smallcover::cli {

struct Config {
    std::string builder;
    std::string input;
    std::string lambda;
    std::string cls;
    std::string facet;
    std::string hyperplane;
    std::string method = "both";
    std::string format = "table";
    std::string demo;
    int dim = 3;
    int gons = 0;
    std::size_t cap = 0;    // 0 keeps the per-module defaults
};

inline std::size_t cell_cap(const Config& cfg) { return cfg.cap ? cfg.cap : 1000000; }
inline std::size_t mono_cap(const Config& cfg) { return cfg.cap ? cfg.cap : 2000000; }

inline BuiltPolytope resolve_polytope(const Config& cfg) {
    if (cfg.builder.empty() == cfg.input.empty())
        throw std::invalid_argument("need exactly one polytope source (--builder or --input)");
    if (!cfg.input.empty()) return load_polytope(cfg.input);
    const std::string& b = cfg.builder;
    if (b == "segment") return segment();
    if (b == "square") return square();
    if (b == "triangle") return simplex(2);
    if (b == "pentagon") return polygon(5);
    if (b == "polygon") {
        if (cfg.gons < 3) throw std::invalid_argument("polygon: pass --gons (at least 3)");
        return polygon(cfg.gons);
    }
    if (b == "cube") return cube(cfg.dim);
    if (b == "simplex") return simplex(cfg.dim);
    if (b == "permutohedron3") return permutohedron(3);
    throw std::invalid_argument("unknown builder: " + b);
}

inline CharacteristicMap resolve_map(const CombinatorialPolytope& p, const Config& cfg) {
    if (cfg.lambda.empty()) throw std::invalid_argument("need a characteristic matrix (--lambda)");
    return characteristic_map(p, parse_lambda(cfg.lambda));
}

inline int resolve_facet(const CombinatorialPolytope& p, const std::string& s) {
    for (int i = 0; i < p.m; ++i)
        if (p.facet_names[std::size_t(i)] == s) return i;
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size() && v >= 0 && v < p.m) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("unknown facet: " + s);
}

inline std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad number: " + item);
        out.push_back(v);
    }
    return out;
}

inline int cmd_hvector(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = resolve_polytope(cfg);
    std::vector<long long> f = f_vector(p.poly);
    std::vector<long long> h = h_vector(p.poly);
    if (cfg.format == "json") {
        nlohmann::json j{{"schema", 1}, {"f", f}, {"h", h}};
        out << j.dump(2) << "\n";
    } else {
        out << "f = " << paren(f) << "; h = " << paren(h) << "\n";
    }
    return 0;
}

inline int cmd_betti(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = resolve_polytope(cfg);
    CharacteristicMap cm = resolve_map(p.poly, cfg);
    const bool ring = cfg.method == "ring" || cfg.method == "both";
    const bool oracle = cfg.method == "oracle" || cfg.method == "both";
    std::vector<long long> r, o;
    if (ring) r = graded_dims(build_ring(p.poly, cm, -1, mono_cap(cfg)));
    if (oracle) o = betti(build_complex(p.poly, cm.lambda, cell_cap(cfg)));
    const bool agree = r == o;
    if (cfg.format == "json") {
        nlohmann::json j{{"schema", 1}};
        if (ring) j["ring"] = r;
        if (oracle) j["oracle"] = o;
        if (ring && oracle) j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        if (ring) out << "ring = " << paren(r) << "\n";
        if (oracle) out << "oracle = " << paren(o) << "\n";
        if (ring && oracle) out << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return ring && oracle && !agree ? 1 : 0;
}

inline int cmd_doublecover(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = resolve_polytope(cfg);
    CharacteristicMap cm = resolve_map(p.poly, cfg);
    if (cfg.cls.empty()) throw std::invalid_argument("need a class (--class)");
    gf2::BitVector c = parse_class(p.poly, cfg.cls);
    const bool gys = cfg.method == "gysin" || cfg.method == "both";
    const bool oracle = cfg.method == "oracle" || cfg.method == "both";
    GysinBetti g;
    std::vector<long long> o;
    if (gys) g = gysin_betti(build_ring(p.poly, cm, -1, mono_cap(cfg)), c);
    if (oracle) o = betti(double_cover_complex(p.poly, cm, c, cell_cap(cfg)));
    const bool agree = g.betti == o;
    const bool disconnected = gys ? g.disconnected : !o.empty() && o[0] > 1;
    if (cfg.format == "json") {
        nlohmann::json j{{"schema", 1}, {"class", class_to_json(c)}, {"disconnected", disconnected}};
        if (gys) j["gysin"] = g.betti;
        if (oracle) j["oracle"] = o;
        if (gys && oracle) j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        out << "class = " << name_set(p.poly, c) << "\n";
        if (gys) out << "gysin = " << paren(g.betti) << "\n";
        if (oracle) out << "oracle = " << paren(o) << "\n";
        if (disconnected) out << "disconnected cover (trivial class)\n";
        if (gys && oracle) out << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return gys && oracle && !agree ? 1 : 0;
}

/*
 * Shared tail of the section paths: cross check the closed form against the
 * ring recurrence and the cell oracle for every reported class.
 */
struct SectionReport {
    std::vector<std::string> context;    // table-mode leading lines
    nlohmann::json extra;                // json-mode context fields
    std::vector<gf2::BitVector> classes;
    std::vector<long long> h_section;
};

inline int report_section(const BuiltPolytope& p, const CharacteristicMap& cm,
                          const SectionReport& rep, const Config& cfg, std::ostream& out) {
    std::vector<long long> closed = section_double_cover_betti(h_vector(p.poly), rep.h_section);
    GradedRingModel model = build_ring(p.poly, cm, -1, mono_cap(cfg));
    std::vector<GysinBetti> gys;
    std::vector<std::vector<long long>> orc;
    bool agree = true;
    for (const gf2::BitVector& c : rep.classes) {
        gys.push_back(gysin_betti(model, c));
        orc.push_back(betti(double_cover_complex(p.poly, cm, c, cell_cap(cfg))));
        agree = agree && gys.back().betti == closed && orc.back() == closed &&
                !gys.back().disconnected;
    }
    const bool multi = rep.classes.size() > 1;
    auto tag = [multi](const char* base, std::size_t i) {
        return multi ? base + (" " + std::to_string(i)) : std::string(base);
    };
    if (cfg.format == "json") {
        nlohmann::json j = rep.extra;
        j["schema"] = 1;
        j["section_h"] = rep.h_section;
        j["closed"] = closed;
        nlohmann::json cl = nlohmann::json::array();
        nlohmann::json gj = nlohmann::json::array();
        nlohmann::json oj = nlohmann::json::array();
        for (std::size_t i = 0; i < rep.classes.size(); ++i) {
            cl.push_back(class_to_json(rep.classes[i]));
            gj.push_back(gys[i].betti);
            oj.push_back(orc[i]);
        }
        j["classes"] = cl;
        j["gysin"] = gj;
        j["oracle"] = oj;
        j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        for (const std::string& line : rep.context) out << line << "\n";
        out << "section h = " << paren(rep.h_section) << "\n";
        for (std::size_t i = 0; i < rep.classes.size(); ++i)
            out << tag("class", i) << " = " << name_set(p.poly, rep.classes[i]) << "\n";
        out << "closed form = " << paren(closed) << "\n";
        for (std::size_t i = 0; i < gys.size(); ++i)
            out << tag("gysin", i) << " = " << paren(gys[i].betti) << "\n";
        for (std::size_t i = 0; i < orc.size(); ++i)
            out << tag("oracle", i) << " = " << paren(orc[i]) << "\n";
        out << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

inline int cmd_section(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = resolve_polytope(cfg);
    CharacteristicMap cm = resolve_map(p.poly, cfg);
    if (cfg.facet.empty() == cfg.hyperplane.empty())
        throw std::invalid_argument("need exactly one of --facet and --hyperplane");
    SectionReport rep;
    if (!cfg.facet.empty()) {
        int fi = resolve_facet(p.poly, cfg.facet);
        const std::string& nm = p.poly.facet_names[std::size_t(fi)];
        FacetSectionClass fsc = facet_section_class(p.poly, cm, fi);
        rep.context = {"facet = " + nm};
        rep.extra["facet"] = nm;
        rep.classes = {fsc.cls};
        rep.h_section = fsc.h_facet;
    } else {
        if (!p.geom) throw geometry_error("section: polytope has no coordinates");
        std::vector<double> vals = parse_doubles(cfg.hyperplane);
        if (int(vals.size()) != p.poly.n + 1)
            throw std::invalid_argument("hyperplane: need n+1 numbers l1,..,ln,threshold");
        const double threshold = vals.back();
        vals.pop_back();
        SectionClasses sc = section_to_class(p.poly, *p.geom, cm, vals, threshold);
        std::string crossed;
        nlohmann::json cj = nlohmann::json::array();
        for (std::size_t i = 0; i < sc.section.crossed_facets.size(); ++i) {
            const std::string& nm = p.poly.facet_names[std::size_t(sc.section.crossed_facets[i])];
            if (i) crossed += ",";
            crossed += nm;
            cj.push_back(nm);
        }
        rep.context = {"crossed = {" + crossed + "}"};
        rep.extra["crossed"] = cj;
        if (sc.cls[0] == sc.cls[1])
            rep.classes = {sc.cls[0]};
        else
            rep.classes = {sc.cls[0], sc.cls[1]};
        rep.h_section = sc.section.h_vector_S;
    }
    return report_section(p, cm, rep, cfg, out);
}

inline int demo_pentagon_gap(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = polygon(5);
    CharacteristicMap cm = characteristic_map(p.poly, parse_lambda("10;01;10;01;11"));
    const std::vector<double> l = {0.0, 1.0};
    std::vector<FrontierViolation> viol = frontier_check(p.poly, *p.geom, cm, l);
    FiltrationTable ft = filtration_e1_table(p.poly, *p.geom, cm, l);
    std::vector<long long> oracle = betti(build_complex(p.poly, cm.lambda, cell_cap(cfg)));
    const bool agree = ft.degree_sums == oracle;
    auto vname = [](int v) { return std::string(1, char('A' + v)); };
    if (cfg.format == "json") {
        nlohmann::json vj = nlohmann::json::array();
        for (const FrontierViolation& x : viol)
            vj.push_back({{"cell_vertex", vname(x.v)},
                          {"top_vertex", vname(x.w)},
                          {"face", detail::join_names(p.poly, x.face)}});
        nlohmann::json st = nlohmann::json::array();
        for (std::size_t q = 0; q < ft.order.size(); ++q)
            st.push_back({{"vertex", vname(ft.order[q])}, {"index", ft.index[q]}});
        nlohmann::json j{{"schema", 1},        {"violations", vj},
                         {"stages", st},       {"degree_sums", ft.degree_sums},
                         {"oracle", oracle},   {"agree", agree}};
        out << j.dump(2) << "\n";
    } else {
        out << "pentagon, sweep direction (0,1)\n";
        out << "frontier violations:\n";
        for (const FrontierViolation& x : viol)
            out << "  cell " << vname(x.v) << ": face {" << detail::join_names(p.poly, x.face)
                << "} tops at " << vname(x.w) << "\n";
        out << "stages (vertex, cell dimension):";
        for (std::size_t q = 0; q < ft.order.size(); ++q)
            out << " (" << vname(ft.order[q]) << "," << ft.index[q] << ")";
        out << "\n";
        out << "degree sums = " << paren(ft.degree_sums) << "\n";
        out << "oracle betti = " << paren(oracle) << "\n";
        out << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

inline int demo_permutohedron(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = permutohedron(3);
    std::vector<int> colors;
    for (const std::string& nm : p.poly.facet_names) colors.push_back(int(nm.size()) - 1);
    CharacteristicMap base = from_coloring(p.poly, colors);
    gf2::BitVector e2(std::size_t(p.poly.n));
    e2.set(1);
    CharacteristicMap nu = perturb(p.poly, base, 0, e2);
    FacetSectionClass fsc = facet_section_class(p.poly, nu, 0);
    SectionReport rep;
    rep.context = {"permutohedron(3), colors by subset size, row s1 perturbed by 010",
                   "facet = s1"};
    rep.extra["facet"] = "s1";
    rep.classes = {fsc.cls};
    rep.h_section = fsc.h_facet;
    return report_section(p, nu, rep, cfg, out);
}

inline int demo_prism(const Config& cfg, std::ostream& out) {
    BuiltPolytope sq = square();
    CharacteristicMap cm = characteristic_map(sq.poly, parse_lambda("10;10;01;01"));
    gf2::BitVector c = parse_class(sq.poly, cfg.cls.empty() ? std::string("L") : cfg.cls);
    std::vector<long long> base = betti(double_cover_complex(sq.poly, cm, c, cell_cap(cfg)));
    std::vector<long long> expect(base.size() + 1, 0);
    for (std::size_t k = 0; k < expect.size(); ++k) {
        if (k < base.size()) expect[k] += base[k];
        if (k > 0) expect[k] += base[k - 1];
    }
    BuiltPolytope pr = prism(sq);
    CharacteristicMap pcm = characteristic_map(pr.poly, prism_charmap(sq.poly, cm, c));
    std::vector<long long> cover =
        betti(double_cover_complex(pr.poly, pcm, pullback_to_prism(sq.poly, c), cell_cap(cfg)));
    const bool agree = cover == expect;
    if (cfg.format == "json") {
        nlohmann::json j{{"schema", 1},          {"class", class_to_json(c)},
                         {"base_cover", base},   {"circle_product", expect},
                         {"prism_cover", cover}, {"agree", agree}};
        out << j.dump(2) << "\n";
    } else {
        out << "square with map 10;10;01;01, class = " << name_set(sq.poly, c) << "\n";
        out << "base cover betti = " << paren(base) << "\n";
        out << "circle product = " << paren(expect) << "\n";
        out << "prism cover betti = " << paren(cover) << "\n";
        out << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

inline int cmd_dump(const Config& cfg, std::ostream& out) {
    BuiltPolytope p = resolve_polytope(cfg);
    if (cfg.lambda.empty()) throw std::invalid_argument("need a generator matrix (--lambda)");
    QuotientComplex qc = build_complex(p.poly, parse_lambda(cfg.lambda), cell_cap(cfg));
    nlohmann::json j = complex_to_json(qc);
    j["schema"] = 1;
    out << j.dump(2) << "\n";
    return 0;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"mod 2 quotient manifolds of simple polytopes", "smallcover"};
    app.require_subcommand(1);

    auto add_source = [&cfg](CLI::App* s) {
        s->add_option("--builder", cfg.builder,
                      "segment, square, triangle, pentagon, polygon, cube, simplex, "
                      "permutohedron3");
        s->add_option("--dim", cfg.dim, "dimension for cube and simplex");
        s->add_option("--gons", cfg.gons, "edge count for polygon");
        s->add_option("--input", cfg.input, "polytope file");
    };
    auto add_common = [&cfg](CLI::App* s) {
        s->add_option("--format", cfg.format, "table or json")
            ->check(CLI::IsMember({"table", "json"}));
        s->add_option("--cap", cfg.cap, "size cap for cell and monomial counts");
    };
    auto add_lambda = [&cfg](CLI::App* s) {
        s->add_option("--lambda", cfg.lambda,
                      "characteristic matrix, rows like 10;01;11, or a file");
    };

    CLI::App* hv = app.add_subcommand("hvector", "face and h numbers of the polytope");
    add_source(hv);
    add_common(hv);

    CLI::App* bt = app.add_subcommand("betti", "mod 2 betti numbers of the quotient, two ways");
    add_source(bt);
    add_lambda(bt);
    add_common(bt);
    bt->add_option("--method", cfg.method, "ring, oracle, or both")
        ->check(CLI::IsMember({"ring", "oracle", "both"}));

    CLI::App* dc = app.add_subcommand("doublecover", "betti numbers of a two fold cover");
    add_source(dc);
    add_lambda(dc);
    add_common(dc);
    dc->add_option("--class", cfg.cls, "degree one class: 0/1 string, facet names, or a file");
    dc->add_option("--method", cfg.method, "gysin, oracle, or both")
        ->check(CLI::IsMember({"gysin", "oracle", "both"}));

    CLI::App* sec =
        app.add_subcommand("section", "hypersurface dual to a hyperplane section or a facet");
    add_source(sec);
    add_lambda(sec);
    add_common(sec);
    sec->add_option("--facet", cfg.facet, "facet name or index");
    sec->add_option("--hyperplane", cfg.hyperplane,
                    "n+1 numbers l1,..,ln,c for the slice <l,x> = c");

    CLI::App* dm = app.add_subcommand("demo", "worked examples");
    dm->add_option("name", cfg.demo, "pentagon-gap, permutohedron-example, or prism-proposition")
        ->required()
        ->check(CLI::IsMember({"pentagon-gap", "permutohedron-example", "prism-proposition"}));
    dm->add_option("--class", cfg.cls, "base class for prism-proposition");
    add_common(dm);

    CLI::App* dp = app.add_subcommand("dump", "cell complex of a quotient as json");
    add_source(dp);
    add_common(dp);
    dp->add_option("--lambda", cfg.lambda,
                   "generator matrix, any width, rows like 110;011, or a file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hv->parsed()) return cmd_hvector(cfg, out);
        if (bt->parsed()) return cmd_betti(cfg, out);
        if (dc->parsed()) return cmd_doublecover(cfg, out);
        if (sec->parsed()) return cmd_section(cfg, out);
        if (dm->parsed()) {
            if (cfg.demo == "pentagon-gap") return demo_pentagon_gap(cfg, out);
            if (cfg.demo == "permutohedron-example") return demo_permutohedron(cfg, out);
            return demo_prism(cfg, out);
        }
        if (dp->parsed()) return cmd_dump(cfg, out);
    } catch (const validation_error& e) {
        err << e.what() << "; vertices:";
        for (int v : e.offending_vertices) err << " " << v;
        err << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace smallcover::cli

#endif
