#pragma once

// View-only geometry exports: Wavefront OBJ meshes and Graphviz DOT graphs.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer.hpp"

namespace coamoeba {

namespace detail {

class ObjWriter {
public:
    void add(const Simplex& s) {
        if (s.size() > 3) throw std::invalid_argument("obj export supports simplices of dimension at most 2");
        std::vector<std::size_t> ids;
        for (const auto& v : s) {
            if (v.size() > 3) throw std::invalid_argument("obj export supports n <= 3");
            out_ << "v";
            for (std::size_t d = 0; d < 3; ++d) out_ << ' ' << (d < v.size() ? static_cast<double>(v[d]) : 0.0);
            out_ << '\n';
            ids.push_back(++count_);
        }
        std::ostringstream line;
        line << (s.size() == 3 ? "f" : s.size() == 2 ? "l" : "p");
        for (auto id : ids) line << ' ' << id;
        elements_.push_back(line.str());
    }

    std::string str() const {
        std::string s = out_.str();
        for (const auto& e : elements_) s += e + "\n";
        return s;
    }

private:
    std::ostringstream out_;
    std::vector<std::string> elements_;
    std::size_t count_ = 0;
};

}  // namespace detail

/// Every translate of every simplex of X whose bounding box meets the open
/// unit cube, so faces crossing the cube boundary appear once per piece of
/// the cube they reach.
inline std::string export_obj(const SimplicialSet& X) {
    if (X.max_dim() > 2) throw std::invalid_argument("obj export requires simplices of dimension at most 2");
    detail::ObjWriter w;
    const std::size_t n = X.dimension();
    Box cube{zero_point(n), Point(n, Rat(1))};
    auto meets_open_cube = [n](const Simplex& s) {
        Box b = bounding_box(s);
        for (std::size_t d = 0; d < n; ++d)
            if (b.hi[d] <= 0 || b.lo[d] >= 1) return false;
        return true;
    };
    for (int k = X.max_dim(); k >= 0; --k)
        for (const auto& [s, prov] : X.level(static_cast<std::size_t>(k)))
            for (const auto& m : overlapping_translations(cube, bounding_box(s.vertices()))) {
                Simplex t = translated(s.vertices(), m);
                if (k == 0 || meets_open_cube(t)) w.add(t);
            }
    return "# view-only export; exact data lives in the JSON form\n" + w.str();
}

/// The maximal simplices of a support set, unreduced.
inline std::string export_obj(const SupportSet& S) {
    detail::ObjWriter w;
    for (const auto& s : S.maximal_simplices()) w.add(s);
    return "# view-only export; exact data lives in the JSON form\n" + w.str();
}

/// Black (degree -1) vertices filled, white (degree 0) vertices unfilled;
/// edges carry the exact coefficient and the lattice class m.
inline std::string export_dot(const BipartiteTorusGraph& G) {
    std::ostringstream out;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    out << "graph coamoeba {\n";
    for (std::size_t b = 0; b < G.black.size(); ++b)
        out << "  b" << b << " [label=" << quote(G.black_labels[b]) << ", pos=" << quote(to_string(G.black[b]))
            << ", degree=-1, shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    for (std::size_t w = 0; w < G.white.size(); ++w)
        out << "  w" << w << " [label=" << quote(G.white_labels[w]) << ", pos=" << quote(to_string(G.white[w]))
            << ", degree=0, shape=circle, style=solid, fillcolor=white];\n";
    for (const auto& e : G.edges)
        out << "  b" << e.black << " -- w" << e.white << " [coefficient=" << quote(to_string(e.weight))
            << ", m=" << quote(to_string(e.m)) << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace coamoeba
