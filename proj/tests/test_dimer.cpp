#include <catch_amalgamated.hpp>

#include "coamoeba/coamoeba.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace coamoeba;
using fixtures::pt;

TEST_CASE("graph of the dimer example") {
    auto ex = fixtures::dimer();
    auto G = extract_graph(ex.complex, ex.placement);
    CHECK(G.black.size() == 2);
    CHECK(G.white.size() == 2);
    CHECK(G.edges.size() == 8);
    for (std::size_t v = 0; v < 2; ++v) {
        CHECK(G.edges_at_black(v).size() == 4);
        CHECK(G.edges_at_white(v).size() == 4);
    }
    CHECK(kasteleyn(G) == ex.complex.differential(-1));
    CHECK(is_two_term(ex.complex));
    CHECK_FALSE(is_two_term(fixtures::origami().complex));
    CHECK_THROWS(extract_graph(fixtures::origami().complex, fixtures::origami().placement));
}

TEST_CASE("kasteleyn roundtrip on random two-term complexes") {
    corpus::Gen g(71);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto F = corpus::random_complex(g, n, 2);
        auto P = corpus::generic_placement(g, n, F.size());
        auto G = extract_graph(F, P);
        CHECK(kasteleyn(G) == F.differential(-1));
        std::size_t terms = 0;
        for (const auto& row : F.differential(-1))
            for (const auto& e : row) terms += e.size();
        CHECK(G.edges.size() == terms);
    }
}

TEST_CASE("reflected local system on the dimer") {
    auto ex = fixtures::dimer();
    auto G = extract_graph(ex.complex, ex.placement);
    auto R = reflect_local_system(G);
    CHECK(R.vertex_dims() == std::vector<std::size_t>{1, 1, 3, 3});
    auto check = check_reflected(R, G);
    CHECK(check.ok);
    CHECK(check.condition1);
    CHECK(check.condition2);
    CHECK(check.rank == 1);
}

TEST_CASE("reflection dimensions are valence minus one") {
    corpus::Gen g(72);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto F = corpus::random_complex(g, n, 2);
        auto P = corpus::generic_placement(g, n, F.size());
        auto G = extract_graph(F, P);
        auto R = reflect_local_system(G);
        bool isolated = false;
        for (std::size_t w = 0; w < G.white.size(); ++w) isolated |= G.edges_at_white(w).empty();
        for (std::size_t w = 0; w < G.white.size(); ++w) {
            std::size_t k = G.edges_at_white(w).size();
            CHECK(R.white_dims[w] == (k ? k - 1 : 0));
        }
        if (!isolated) CHECK(verify_reflected(R, G));
    }
}

TEST_CASE("zero weights are rejected") {
    auto ex = fixtures::dimer();
    auto G = extract_graph(ex.complex, ex.placement);
    std::vector<Rat> w(G.edges.size(), Rat(1));
    w[3] = 0;
    CHECK_THROWS_AS(reflect_local_system(G, w), std::invalid_argument);
    CHECK_THROWS_AS(reflect_local_system(G, std::vector<Rat>(2, Rat(1))), std::invalid_argument);
}

TEST_CASE("a zero black map fails condition one") {
    auto ex = fixtures::dimer();
    auto G = extract_graph(ex.complex, ex.placement);
    auto R = reflect_local_system(G);
    R.black_maps[0] = RatMatrix(1, 1);
    auto check = check_reflected(R, G);
    CHECK_FALSE(check.ok);
    CHECK_FALSE(check.condition1);
}

TEST_CASE("a white subspace containing an edge axis fails condition two") {
    // One black and one white vertex joined by two edges.
    FreeComplex F(2, {"b", "w"}, {-1, 0}, {{-1, {{parse_laurent("1 + x", fixtures::xy)}}}}, fixtures::xy);
    Placement P{pt({"1/2", "1/2"}), pt({"0", "1/4"})};
    auto G = extract_graph(F, P);
    REQUIRE(G.edges.size() == 2);
    auto R = reflect_local_system(G);
    CHECK(R.white_dims[0] == 1);
    CHECK(verify_reflected(R, G));
    // Replace the kernel (1, -1) by the axis (1, 0).
    auto inc = G.edges_at_white(0);
    R.white_maps[inc[0]] = RatMatrix(1, 1);
    R.white_maps[inc[0]](0, 0) = 1;
    R.white_maps[inc[1]] = RatMatrix(1, 1);
    auto check = check_reflected(R, G);
    CHECK(check.condition1);
    CHECK_FALSE(check.condition2);
    CHECK_FALSE(check.ok);
}

TEST_CASE("kernel of the dimer differential") {
    auto ex = fixtures::dimer();
    auto K = kernel_of_d(ex.complex, ex.placement);
    CHECK(K.rep.vertex_dims() == std::vector<std::size_t>{1, 1, 3, 3});
    CHECK(K.check.ok);
    CHECK(euler_balanced(K, extract_graph(ex.complex, ex.placement)));
}

TEST_CASE("kernel of a hypersurface star") {
    auto ex = fixtures::star3();
    auto K = kernel_of_d(ex.complex, ex.placement);
    CHECK(K.rep.vertex_dims() == std::vector<std::size_t>{1, 3});
    CHECK(K.check.ok);
}

TEST_CASE("kernel of d on a one-edge graph is zero at the white vertex") {
    FreeComplex F(2, {"b", "w"}, {-1, 0}, {{-1, {{parse_laurent("5*x", fixtures::xy)}}}}, fixtures::xy);
    Placement P{pt({"1/2", "1/2"}), pt({"0", "1/4"})};
    auto K = kernel_of_d(F, P);
    CHECK(K.rep.white_dims[0] == 0);
    CHECK(K.rep.black_dims[0] == 1);
}

TEST_CASE("kernel_of_d preconditions") {
    auto crossing = fixtures::crossing();
    CHECK_THROWS_AS(kernel_of_d(crossing.complex, crossing.placement), PreconditionError);

    FreeComplex isolated(2, {"b", "w", "u"}, {-1, 0, 0},
                         {{-1, {{parse_laurent("1 + x", fixtures::xy)}, {LaurentPoly(2)}}}}, fixtures::xy);
    Placement P{pt({"1/2", "1/2"}), pt({"0", "1/4"}), pt({"1/4", "0"})};
    CHECK_THROWS_AS(kernel_of_d(isolated, P), PreconditionError);
}

TEST_CASE("kernel_of_d agrees with reflection on random embedded graphs") {
    corpus::Gen g(73);
    std::size_t tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto F = corpus::random_complex(g, 3, 2);
        auto P = corpus::generic_placement(g, 3, F.size());
        auto G = extract_graph(F, P);
        bool isolated = false;
        for (std::size_t b = 0; b < G.black.size(); ++b) isolated |= G.edges_at_black(b).empty();
        for (std::size_t w = 0; w < G.white.size(); ++w) isolated |= G.edges_at_white(w).empty();
        if (isolated || !is_embedded(build_X(F, P))) continue;
        ++tested;
        auto K = kernel_of_d(F, P);
        auto R = reflect_local_system(G);
        CHECK(K.rep.white_dims == R.white_dims);
        CHECK(K.check.ok);
        CHECK(euler_balanced(K, G));
    }
    CHECK(tested >= 10);
}
