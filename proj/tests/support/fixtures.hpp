#pragma once

// The worked examples, built in code. samples/ holds the same documents.

#include <string>
#include <vector>

#include "coamoeba/coamoeba.hpp"

namespace fixtures {

using namespace coamoeba;

inline Point pt(std::initializer_list<const char*> coords) {
    std::vector<std::string> s(coords.begin(), coords.end());
    return parse_point(s);
}

struct Example {
    FreeComplex complex;
    Placement placement;
};

inline const std::vector<std::string> xyz{"x", "y", "z"};
inline const std::vector<std::string> xy{"x", "y"};

/// Koszul complex of f = 1 + x + y, g = 1 + z + xy; indices 11, 10, 01, 00.
inline Example origami() {
    auto F = koszul({parse_laurent("1 + x + y", xyz), parse_laurent("1 + z + x*y", xyz)}, xyz);
    return {F, {pt({"2/3", "2/3", "1/3"}), pt({"1/3", "1/3", "1/3"}), pt({"1/3", "1/3", "0"}), pt({"0", "0", "0"})}};
}

/// Koszul complex of two generic linear forms with x_2 = x_3 and the points collinear.
inline Example line() {
    auto F = koszul({parse_laurent("1 + 2*x + 3*y + 5*z", xyz), parse_laurent("7 + 11*x + 13*y + 17*z", xyz)}, xyz);
    return {F,
            {pt({"1/4", "1/4", "1/4"}), pt({"0", "0", "0"}), pt({"0", "0", "0"}), pt({"-1/4", "-1/4", "-1/4"})}};
}

/// Koszul complex of x - 2, y - 3, z - 5 (first n), with x_i having 1/2 where i has a 1.
inline Example hypercube(std::size_t n) {
    auto vars = default_variables(n);
    const long long holonomy[] = {2, 3, 5};
    std::vector<LaurentPoly> polys;
    for (std::size_t k = 0; k < n; ++k) {
        LaurentPoly p = LaurentPoly::monomial(unit_lattice(n, k));
        p.add_term(zero_lattice(n), Rat(-holonomy[k]));
        polys.push_back(p);
    }
    auto F = koszul(polys, vars);
    Placement P;
    for (std::size_t i = 0; i < F.size(); ++i) {
        Point p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = F.label(i)[k] == '1' ? Rat(1, 2) : Rat(0);
        P.push_back(p);
    }
    return {F, P};
}

/// The 2x2 matrix K on four points of T^2: columns black b1, b2, rows white w1, w2.
inline Example dimer() {
    PolyMatrix K{{parse_laurent("2 + 3*x", xy), parse_laurent("5 + 7*y^-1", xy)},
                 {parse_laurent("11 + 13*y", xy), parse_laurent("17 + 19*x^-1", xy)}};
    FreeComplex F(2, {"1", "2", "3", "4"}, {-1, -1, 0, 0}, {{-1, K}}, xy);
    return {F, {pt({"3/4", "3/4"}), pt({"1/4", "1/4"}), pt({"1/4", "3/4"}), pt({"3/4", "1/4"})}};
}

/// R --f--> R with f = 1 + x + y + z.
inline Example star3() {
    FreeComplex F(3, {"b", "w"}, {-1, 0}, {{-1, {{parse_laurent("1 + x + y + z", xyz)}}}}, xyz);
    return {F, {pt({"3/4", "2/3", "1/2"}), pt({"1/8", "1/4", "3/8"})}};
}

/// Two edges [a, b] and [c, d] of T^2 that cross at (3/8, 1/8).
inline Example crossing() {
    PolyMatrix d{{LaurentPoly::constant(2, 1), LaurentPoly(2)}, {LaurentPoly(2), LaurentPoly::constant(2, 1)}};
    FreeComplex F(2, {"a", "c", "b", "d"}, {-1, -1, 0, 0}, {{-1, d}}, xy);
    return {F, {pt({"0", "0"}), pt({"1/2", "0"}), pt({"3/4", "1/4"}), pt({"0", "1/2"})}};
}

}  // namespace fixtures
