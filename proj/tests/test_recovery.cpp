#include <catch_amalgamated.hpp>

#include "coamoeba/coamoeba.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace coamoeba;
using fixtures::pt;

namespace {

std::vector<Point> placement_points(const Placement& P) { return {P.begin(), P.end()}; }

ColoredComplex three_vertex(bool with_gap_two_edge, bool with_triangle) {
    ColoredComplex C;
    C.X = SimplicialSet(2);
    Point a = pt({"0", "0"}), b = pt({"1/4", "1/2"}), c = pt({"1/2", "1/8"});
    for (const auto& [p, d] : std::vector<std::pair<Point, int>>{{a, -2}, {b, -1}, {c, 0}}) {
        C.X.insert(TorusSimplex(Simplex{p}));
        C.degree[p] = d;
    }
    C.X.insert(TorusSimplex({a, b}));
    C.X.insert(TorusSimplex({b, c}));
    if (with_gap_two_edge) C.X.insert(TorusSimplex({a, c}));
    if (with_triangle) C.X.insert(TorusSimplex({a, b, c}));
    return C;
}

}  // namespace

TEST_CASE("recover_E on the worked examples") {
    for (auto ex : {fixtures::origami(), fixtures::dimer(), fixtures::star3(), fixtures::hypercube(2)}) {
        auto C = colored_X(ex.complex, ex.placement);
        CHECK(discrete_equivalent(recover_E(C), discrete_info(ex.complex)));
    }
}

TEST_CASE("colored_X rejects coincident vertices") {
    auto ex = fixtures::line();
    CHECK_THROWS(colored_X(ex.complex, ex.placement));
}

TEST_CASE("recover_E roundtrip on random complexes") {
    for (const auto& s : corpus::random_corpus(51, 60)) {
        auto C = colored_X(s.complex, s.placement);
        CHECK(discrete_equivalent(recover_E(C), discrete_info(s.complex)));
    }
}

TEST_CASE("recover_from_T on embedded two-term complexes") {
    corpus::Gen g(52);
    std::size_t tested = 0;
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 2 + trial % 2;
        auto F = corpus::random_complex(g, n, 2);
        auto P = corpus::generic_placement(g, n, F.size());
        auto X = build_X(F, P);
        if (!is_embedded(X)) continue;
        ++tested;
        auto info = recover_from_T(T_simplices(X), placement_points(P), F.degrees());
        CHECK(discrete_equivalent(info, discrete_info(F)));
    }
    CHECK(tested >= 10);
}

TEST_CASE("recover_from_T on the dimer and star") {
    for (auto ex : {fixtures::dimer(), fixtures::star3()}) {
        auto X = build_X(ex.complex, ex.placement);
        auto info = recover_from_T(T_simplices(X), placement_points(ex.placement), ex.complex.degrees());
        CHECK(discrete_equivalent(info, discrete_info(ex.complex)));
    }
}

TEST_CASE("recover_from_T needs edges of positive codimension") {
    FreeComplex F(1, {"b", "w"}, {-1, 0}, {{-1, {{LaurentPoly::constant(1, 1)}}}});
    Placement P{pt({"0"}), pt({"1/2"})};
    auto X = build_X(F, P);
    CHECK_THROWS(recover_from_T(T_simplices(X), placement_points(P), F.degrees()));
}

TEST_CASE("segment containment in a union of simplices") {
    std::vector<Simplex> T{{pt({"0", "0"}), pt({"1", "0"})}, {pt({"1", "0"}), pt({"2", "0"})}};
    CHECK(segment_in_union(pt({"1/2", "0"}), pt({"3/2", "0"}), T));
    // T lives in the torus, so its translates cover the whole axis.
    CHECK(segment_in_union(pt({"1/2", "0"}), pt({"7/2", "0"}), T));
    CHECK_FALSE(segment_in_union(pt({"1/2", "0"}), pt({"3/2", "1/2"}), T));
    CHECK_FALSE(segment_in_union(pt({"0", "0"}), pt({"1", "1"}), T));
    CHECK(segment_passes_vertex(pt({"0", "0"}), pt({"2", "0"}), {pt({"1", "0"})}));
    CHECK_FALSE(segment_passes_vertex(pt({"0", "0"}), pt({"1", "0"}), {pt({"1", "0"})}));
}

TEST_CASE("characterization holds on realized complexes") {
    for (auto ex : {fixtures::origami(), fixtures::dimer(), fixtures::hypercube(3)}) {
        auto C = colored_X(ex.complex, ex.placement);
        auto rep = check_characterization(C);
        CHECK(rep.realizable);
        CHECK(rep.witness_reproduces);
    }
    for (const auto& s : corpus::random_corpus(53, 40)) {
        auto rep = check_characterization(colored_X(s.complex, s.placement));
        CHECK(rep.condition1);
        CHECK(rep.condition2);
        CHECK(rep.witness_reproduces);
    }
}

TEST_CASE("a missing composite edge violates condition one") {
    auto rep = check_characterization(three_vertex(false, false));
    CHECK_FALSE(rep.realizable);
    CHECK_FALSE(rep.condition1);
    CHECK_FALSE(rep.violation.empty());
    CHECK_FALSE(rep.witness);

    auto full = check_characterization(three_vertex(true, true));
    CHECK(full.realizable);
    CHECK(full.witness_reproduces);
}

TEST_CASE("a missing chain simplex violates condition two") {
    auto rep = check_characterization(three_vertex(true, false));
    CHECK(rep.condition1);
    CHECK_FALSE(rep.condition2);
    CHECK_FALSE(rep.realizable);
}

TEST_CASE("an edge that does not raise degree violates condition one") {
    ColoredComplex C;
    C.X = SimplicialSet(1);
    Point a = pt({"0"}), b = pt({"1/2"});
    C.X.insert(TorusSimplex(Simplex{a}));
    C.X.insert(TorusSimplex(Simplex{b}));
    C.X.insert(TorusSimplex({a, b}));
    C.degree[a] = 0;
    C.degree[b] = 0;
    CHECK_FALSE(check_characterization(C).condition1);
}

TEST_CASE("unit-coefficient witness") {
    auto ex = fixtures::dimer();
    auto C = colored_X(ex.complex, ex.placement);
    auto rep = check_characterization(C);
    REQUIRE(rep.witness);
    REQUIRE(rep.witness_placement);
    const auto& W = *rep.witness;
    CHECK(std::count(W.degrees().begin(), W.degrees().end(), -1) == 2);
    CHECK(std::count(W.degrees().begin(), W.degrees().end(), 0) == 2);
    for (const auto& row : W.differential(-1))
        for (const auto& e : row)
            for (const auto& [m, c] : e.terms()) CHECK(c == 1);
    CHECK(build_X(W, *rep.witness_placement).same_simplices(C.X));
}
