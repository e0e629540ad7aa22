// coamoeba: command-line workbench for tropical coamoebae of free complexes.
//
// Exit codes: 0 success, 1 a requested check failed (a witness is printed),
// 2 malformed input or usage.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coamoeba/coamoeba.hpp"

using namespace coamoeba;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return json::parse(text);
}

ComplexDocument read_complex(const std::string& path) {
    json j = read_json(path);
    if (is_simplicial_set_json(j)) throw InputError("'" + path + "' holds a simplicial set, expected a complex");
    return complex_from_json(j);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

void print_table(std::ostream& os, const DiscreteInfo& info, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < info.size(); ++i)
        for (std::size_t j = 0; j < info.size(); ++j) {
            const auto& E = info.exponents(i, j);
            if (E.empty()) continue;
            os << "  E(" << names[i] << ", " << names[j] << ") = {";
            bool first = true;
            for (const auto& m : E) {
                os << (first ? "" : ", ") << to_string(m);
                first = false;
            }
            os << "}\n";
        }
}

std::string formal_to_string(const FormalSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : s) {
        if (out.empty())
            out += to_short_string(c);
        else
            out += c < 0 ? " - " + to_short_string(-c) : " + " + to_short_string(c);
        out += "*phi" + to_string(m);
    }
    return out;
}

void print_matrix(std::ostream& os, const RatMatrix& M, const std::string& indent) {
    if (M.rows() == 0 || M.cols() == 0) {
        os << indent << "(" << M.rows() << "x" << M.cols() << ")\n";
        return;
    }
    std::istringstream lines(M.to_string());
    for (std::string line; std::getline(lines, line);) os << indent << line << "\n";
}

// --- subcommands ---------------------------------------------------------------

int run_koszul(const std::vector<std::string>& polys, const std::string& vars_text, const std::string& points,
               const std::string& out) {
    std::vector<std::string> vars = split(vars_text, ',');
    std::vector<LaurentPoly> ps;
    for (const auto& p : polys) ps.push_back(parse_laurent(p, vars));
    FreeComplex F = koszul(ps, vars);
    Placement P(F.size(), zero_point(vars.size()));
    if (!points.empty()) {
        auto pts = split(points, ';');
        if (pts.size() != F.size())
            throw InputError("expected " + std::to_string(F.size()) + " points, got " + std::to_string(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            P[i] = parse_point(split(pts[i], ','));
            if (P[i].size() != vars.size()) throw InputError("point " + std::to_string(i) + " has wrong dimension");
        }
    }
    write_output(out, to_json(ComplexDocument{F, P}).dump(2) + "\n");
    return 0;
}

int run_build(const std::string& path) {
    auto doc = read_complex(path);
    const FreeComplex& F = doc.complex;
    SimplicialSet X = build_X(F, doc.placement);
    std::cout << "complex: n = " << F.dimension() << ", " << F.size() << " indices, degrees " << F.min_degree()
              << "..0, cochain complex: " << (is_cochain_complex(F) ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < X.level_count(); ++k) {
        std::size_t degenerate = 0;
        for (const auto& [s, prov] : X.level(k))
            if (s.degenerate()) ++degenerate;
        std::cout << "X_" << k << ": " << X.chain_count(k) << " chains, " << X.count(k) << " distinct simplices, "
                  << degenerate << " degenerate\n";
    }
    bool ok = true;
    bool closed = is_face_closed(X);
    ok &= closed;
    std::cout << "face closure: " << (closed ? "yes" : "no") << "\n";
    auto direct = build_S(F, doc.placement);
    std::cout << "support sets:\n";
    for (std::size_t i = 0; i < F.size(); ++i)
        std::cout << "  S(" << F.label(i) << "), degree " << F.degree(i) << ": " << direct[i].simplices.size()
                  << " simplices, " << direct[i].maximal_simplices().size() << " maximal\n";
    bool rec = same_point_sets(direct, build_S_recursive(F, doc.placement));
    bool restricted = same_point_sets(direct, build_S_recursive(F, doc.placement, true));
    bool cover = support_equals_T(F, doc.placement);
    std::cout << "recursive build matches direct enumeration: " << (rec ? "yes" : "no") << "\n";
    std::cout << "degree-one recursion matches: " << (restricted ? "yes" : "no") << "\n";
    std::cout << "union of supports equals T: " << (cover ? "yes" : "no") << "\n";
    ok &= rec && restricted && cover;
    return ok ? 0 : 1;
}

int run_check(const std::string& path, bool immersed, bool embedded) {
    auto doc = read_complex(path);
    SimplicialSet X = build_X(doc.complex, doc.placement);
    if (!immersed && !embedded) immersed = true;
    int code = 0;
    if (immersed || embedded) {
        ImmersionReport r = check_immersed(X);
        std::cout << "immersed: " << (r.immersed ? "yes" : "no") << " (" << r.degenerate.size()
                  << " degenerate simplices skipped)\n";
        if (r.witness)
            std::cout << "witness: simplex " << to_string(r.witness->simplex) << " meets its translate by "
                      << to_string(r.witness->translation) << " at " << to_string(r.witness->point) << "\n";
        if (!r.immersed) code = 1;
    }
    if (embedded) {
        EmbeddingReport r = check_embedded(X);
        std::cout << "embedded: " << (r.embedded ? "yes" : "no") << "\n";
        if (r.witness)
            std::cout << "witness: " << to_string(r.witness->first) << " and " << to_string(r.witness->second)
                      << " + " << to_string(r.witness->translation) << " share the interior point "
                      << to_string(r.witness->point) << "\n";
        if (!r.embedded) code = 1;
    }
    return code;
}

std::vector<std::string> vertex_names(const ComplexDocument& doc, const std::vector<Point>& verts) {
    std::vector<std::string> names;
    for (const auto& v : verts) {
        std::string name = to_string(v);
        for (std::size_t i = 0; i < doc.complex.size(); ++i)
            if (congruent_mod_lattice(doc.placement[i], v)) name = doc.complex.label(i);
        names.push_back(name);
    }
    return names;
}

int run_recover(const std::string& path, bool from_T) {
    auto doc = read_complex(path);
    ColoredComplex C = colored_X(doc.complex, doc.placement);
    auto verts = C.vertices();
    DiscreteInfo info;
    if (from_T) {
        std::vector<int> deg;
        for (const auto& v : verts) deg.push_back(C.degree_of(v));
        info = recover_from_T(T_simplices(C.X), verts, deg);
    } else {
        info = recover_E(C);
    }
    std::cout << (from_T ? "exponent sets recovered from T:\n" : "exponent sets recovered from X:\n");
    print_table(std::cout, info, vertex_names(doc, verts));
    bool eq = discrete_equivalent(info, discrete_info(doc.complex));
    std::cout << "equivalent to the source complex: " << (eq ? "yes" : "no") << "\n";
    return eq ? 0 : 1;
}

int run_characterize(const std::string& path) {
    json j = read_json(path);
    ColoredComplex C;
    if (is_simplicial_set_json(j)) {
        C = colored_from_json(j);
    } else {
        auto doc = complex_from_json(j);
        C = colored_X(doc.complex, doc.placement);
    }
    CharacterizationReport r = check_characterization(C);
    std::cout << "condition (1), edges are composites of degree-one edges: " << (r.condition1 ? "yes" : "no") << "\n";
    std::cout << "condition (2), simplices are chains of edges: " << (r.condition2 ? "yes" : "no") << "\n";
    std::cout << "realizable: " << (r.realizable ? "yes" : "no") << "\n";
    if (!r.violation.empty()) std::cout << "violation: " << r.violation << "\n";
    if (r.witness) {
        std::cout << "witness reproduces the input: " << (r.witness_reproduces ? "yes" : "no") << "\n";
        std::cout << "witness satisfies d^2 = 0: " << (r.witness_is_cochain_complex ? "yes" : "no") << "\n";
        std::cout << to_json(ComplexDocument{*r.witness, *r.witness_placement}).dump(2) << "\n";
    }
    return r.realizable ? 0 : 1;
}

int run_mirror(const std::string& path, bool d2, const std::string& stalk_text, std::optional<int> degree) {
    auto doc = read_complex(path);
    const FreeComplex& F = doc.complex;
    MirrorDifferential D = build_mirror(F, doc.placement);
    int code = 0;
    for (const auto& [k, mat] : D.differentials) {
        std::cout << "d^" << k << ":\n";
        const auto& rows = F.indices_in_degree(k + 1);
        const auto& cols = F.indices_in_degree(k);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!mat[r][c].empty())
                    std::cout << "  (" << F.label(rows[r]) << ", " << F.label(cols[c]) << "): " << formal_to_string(mat[r][c])
                              << "\n";
    }
    if (d2) {
        D2Report r = d2_equivalence(F, doc.placement);
        std::cout << "polynomial d^2 vanishes: " << (r.polynomial_vanishes ? "yes" : "no") << "\n";
        std::cout << "formal d^2 vanishes: " << (r.mirror_vanishes ? "yes" : "no") << "\n";
        std::cout << "same coefficient support: " << (r.same_support ? "yes" : "no") << "\n";
        std::cout << "equivalent: " << (r.equivalent ? "yes" : "no") << "\n";
        if (!r.equivalent || !r.same_support) code = 1;
    }
    if (!stalk_text.empty()) {
        Point theta = parse_point(split(stalk_text, ','));
        if (theta.size() != F.dimension()) throw InputError("stalk point has wrong dimension");
        Stalk st = stalk(D, theta);
        std::cout << "stalks at " << to_string(st.lift) << ":\n";
        for (std::size_t i = 0; i < F.size(); ++i) {
            std::cout << "  " << F.label(i) << " (degree " << F.degree(i) << "): dimension " << st.dimension(i);
            if (st.dimension(i)) {
                std::cout << ", lifts";
                for (const auto& m : st.bases[i]) std::cout << " " << to_string(m);
            }
            std::cout << "\n";
        }
        for (const auto& [k, mat] : D.differentials) {
            if (degree && *degree != k) continue;
            std::cout << "stalk map d^" << k << ":\n";
            print_matrix(std::cout, stalk_map(D, st, k), "  ");
        }
    }
    return code;
}

int run_dimer(const std::string& path, bool kas, bool reflect, bool kern) {
    auto doc = read_complex(path);
    BipartiteTorusGraph G = extract_graph(doc.complex, doc.placement);
    if (!kas && !reflect && !kern) kas = reflect = kern = true;
    std::cout << "graph: " << G.black.size() << " black, " << G.white.size() << " white, " << G.edges.size()
              << " edges\n";
    int code = 0;
    if (kas) {
        PolyMatrix K = kasteleyn(G);
        std::cout << "Kasteleyn matrix (rows white, columns black):\n";
        for (const auto& row : K) {
            std::cout << "  [";
            for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? ", " : "") << to_string(row[c], G.variables);
            std::cout << "]\n";
        }
        bool same = doc.complex.has_differential(-1) ? K == doc.complex.differential(-1) : G.edges.empty();
        std::cout << "reproduces d^-1: " << (same ? "yes" : "no") << "\n";
        if (!same) code = 1;
    }
    auto print_dims = [&](const QuiverRep& R) {
        std::cout << "  dimension vector (black, white):";
        for (auto d : R.vertex_dims()) std::cout << " " << d;
        std::cout << "\n  edge dimensions:";
        for (auto d : R.edge_dims) std::cout << " " << d;
        std::cout << "\n";
    };
    if (reflect) {
        QuiverRep R = reflect_local_system(G);
        ReflectedCheck c = check_reflected(R, G);
        std::cout << "reflected rank-one local system:\n";
        print_dims(R);
        std::cout << "  reflected local system conditions: " << (c.ok ? "yes" : "no") << "\n";
        if (!c.ok) {
            std::cout << "  violation: " << c.violation << "\n";
            code = 1;
        }
    }
    if (kern) {
        try {
            KernelResult K = kernel_of_d(doc.complex, doc.placement);
            std::cout << "kernel of d on stalks:\n";
            print_dims(K.rep);
            std::cout << "  reflected local system conditions: " << (K.check.ok ? "yes" : "no") << "\n";
            bool euler = euler_balanced(K, G);
            std::cout << "  rank-nullity at white vertices: " << (euler ? "yes" : "no") << "\n";
            if (!euler) code = 1;
        } catch (const PreconditionError& e) {
            std::cout << "kernel of d: precondition failed: " << e.what() << "\n";
            code = 1;
        }
    }
    return code;
}

int run_export(const std::string& path, const std::string& format, const std::string& support, const std::string& out) {
    auto doc = read_complex(path);
    const FreeComplex& F = doc.complex;
    if (format == "json") {
        if (!support.empty()) {
            auto S = build_S(F, doc.placement)[F.index_of(support)];
            json j{{"n", F.dimension()}, {"index", support}};
            json simplices = json::array();
            for (const auto& s : S.simplices) {
                json vs = json::array();
                for (const auto& v : s) vs.push_back(detail::point_to_json(v));
                simplices.push_back(vs);
            }
            j["simplices"] = simplices;
            write_output(out, j.dump(2) + "\n");
            return 0;
        }
        std::map<Point, int> degrees;
        for (std::size_t i = 0; i < F.size(); ++i) degrees[reduce_mod_lattice(doc.placement[i])] = F.degree(i);
        write_output(out, to_json(build_X(F, doc.placement), &degrees, &F.labels()).dump(2) + "\n");
    } else if (format == "obj") {
        if (!support.empty())
            write_output(out, export_obj(build_S(F, doc.placement)[F.index_of(support)]));
        else
            write_output(out, export_obj(build_X(F, doc.placement)));
    } else if (format == "dot") {
        write_output(out, export_dot(extract_graph(F, doc.placement)));
    } else {
        throw InputError("unknown format '" + format + "'");
    }
    return 0;
}

int run_perturb(const std::string& path, std::int64_t denominator, std::uint64_t seed, const std::string& out) {
    auto doc = read_complex(path);
    doc.placement = perturb_generic(doc.placement, denominator, seed);
    write_output(out, to_json(doc).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical coamoebae of free complexes over Laurent polynomial rings"};
    app.require_subcommand(1);

    std::string doc_path, out_path, vars = "x,y,z", points, format = "json", support, stalk_text;
    std::vector<std::string> polys;
    bool immersed = false, embedded = false, d2 = false, kas = false, reflect = false, kern = false;
    std::optional<int> degree;
    std::int64_t denominator = 1000;
    std::uint64_t seed = 0;

    auto* koszul_cmd = app.add_subcommand("koszul", "emit the Koszul complex of polynomials as a document");
    koszul_cmd->add_option("polys", polys, "Laurent polynomials")->required();
    koszul_cmd->add_option("--vars", vars, "comma-separated variable names")->capture_default_str();
    koszul_cmd->add_option("--points", points, "placement points, ';'-separated, coordinates ','-separated");
    koszul_cmd->add_option("-o,--output", out_path, "output file");

    auto* build_cmd = app.add_subcommand("build", "report X, T and the support sets");
    build_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();

    auto* check_cmd = app.add_subcommand("check", "check immersion and/or embedding");
    check_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();
    check_cmd->add_flag("--immersed", immersed, "test immersion (the default)");
    check_cmd->add_flag("--embedded", embedded, "test embedding (implies immersion)");

    auto* recover_cmd = app.add_subcommand("recover", "recover exponent sets from X");
    recover_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();

    auto* recover_t_cmd = app.add_subcommand("recover-from-t", "recover exponent sets from the point set T");
    recover_t_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();

    auto* char_cmd = app.add_subcommand("characterize", "decide whether a colored complex is some X(F)");
    char_cmd->add_option("document", doc_path, "complex or simplicial-set document")->required();

    auto* mirror_cmd = app.add_subcommand("mirror", "formal mirror differential, d^2 and stalks");
    mirror_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();
    mirror_cmd->add_flag("--d2", d2, "compare polynomial and formal d^2");
    mirror_cmd->add_option("--stalk", stalk_text, "point of T^n, comma-separated rationals");
    mirror_cmd->add_option("--degree", degree, "only print the stalk map of this degree");

    auto* dimer_cmd = app.add_subcommand("dimer", "two-term complexes as bipartite graphs");
    dimer_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();
    dimer_cmd->add_flag("--kasteleyn", kas, "graph and Kasteleyn matrix");
    dimer_cmd->add_flag("--reflect", reflect, "reflect the rank-one local system of the coefficients");
    dimer_cmd->add_flag("--kernel", kern, "kernel of d computed on stalks");

    auto* export_cmd = app.add_subcommand("export", "export geometry");
    export_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();
    export_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "obj", "dot"}))->capture_default_str();
    export_cmd->add_option("--support", support, "export S_i for this index label instead of X");
    export_cmd->add_option("-o,--output", out_path, "output file");

    auto* perturb_cmd = app.add_subcommand("perturb", "randomly perturb the placement");
    perturb_cmd->add_option("document", doc_path, "JSON document, or - for stdin")->required();
    perturb_cmd->add_option("--denominator", denominator, "offsets are multiples of 1/D")->capture_default_str();
    perturb_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    perturb_cmd->add_option("-o,--output", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*koszul_cmd) return run_koszul(polys, vars, points, out_path);
        if (*build_cmd) return run_build(doc_path);
        if (*check_cmd) return run_check(doc_path, immersed, embedded);
        if (*recover_cmd) return run_recover(doc_path, false);
        if (*recover_t_cmd) return run_recover(doc_path, true);
        if (*char_cmd) return run_characterize(doc_path);
        if (*mirror_cmd) return run_mirror(doc_path, d2, stalk_text, degree);
        if (*dimer_cmd) return run_dimer(doc_path, kas, reflect, kern);
        if (*export_cmd) return run_export(doc_path, format, support, out_path);
        if (*perturb_cmd) return run_perturb(doc_path, denominator, seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
