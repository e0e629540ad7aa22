#include <catch_amalgamated.hpp>

#include "coamoeba/coamoeba.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coamoeba;

TEST_CASE("origami exponent sets") {
    auto ex = fixtures::origami();
    auto E = exponent_table(ex.complex);
    // indices: 0 = 11, 1 = 10, 2 = 01, 3 = 00
    CHECK(E(1, 0) == ExponentSet{{0, 0, 0}, {0, 0, 1}, {1, 1, 0}});
    CHECK(E(2, 0) == ExponentSet{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(E(3, 0).size() == 9);
    CHECK(E(0, 3).empty());
    CHECK(E(1, 2).empty());

    std::set<Lattice> sumset;
    for (const auto& a : ex.complex.entry(1, 0).support())
        for (const auto& b : ex.complex.entry(3, 1).support()) sumset.insert(a + b);
    CHECK(E(3, 0) == sumset);
}

TEST_CASE("chain counts on the worked examples") {
    auto E = exponent_table(fixtures::origami().complex);
    CHECK(chains(E, 0).size() == 4);
    CHECK(chains(E, 1).size() == 3 + 3 + 3 + 3 + 9);
    CHECK(chains(E, 2).size() == 18);
    CHECK(chains(E, 3).empty());
    CHECK(max_chain_length(E) == 2);
    CHECK(chains(exponent_table(fixtures::line().complex), 2).size() == 32);
}

TEST_CASE("chains start where asked and follow exponent sets") {
    auto ex = fixtures::origami();
    auto E = exponent_table(ex.complex);
    std::size_t count = 0;
    for_each_chain_from(E, 0, 2, [&](const Chain& c) {
        ++count;
        CHECK(c.indices.front() == 0);
        for (std::size_t l = 0; l < c.length(); ++l) CHECK(E(c.indices[l + 1], c.indices[l]).count(c.steps[l]));
    });
    CHECK(count == 18);
}

TEST_CASE("exponent table and chain counts match path oracle on random complexes") {
    for (const auto& s : corpus::random_corpus(21, 60)) {
        const auto& F = s.complex;
        auto E = exponent_table(F);
        for (std::size_t i = 0; i < F.size(); ++i)
            for (std::size_t j = 0; j < F.size(); ++j) CHECK(E(i, j) == oracle::exponent_paths(F, i, j));
        for (std::size_t k = 0; k <= 3; ++k) CHECK(chains(E, k).size() == oracle::chain_count(F, k));
    }
}

TEST_CASE("gap-two sets are computed before cancellation") {
    // d^-2 = [-y; x], d^-1 = [x, y]: the composite cancels but E keeps x*y.
    std::vector<std::string> v{"x", "y"};
    auto F = koszul({parse_laurent("x", v), parse_laurent("y", v)}, v);
    CHECK(is_cochain_complex(F));
    CHECK(exponent_table(F)(3, 0) == ExponentSet{{1, 1}});
}

TEST_CASE("discrete equivalence examples") {
    auto origami = fixtures::origami();
    auto info = discrete_info(origami.complex);
    CHECK(discrete_equivalent(info, info));

    auto scaled = rescale_summand(origami.complex, 1, {2, 0, -1});
    CHECK(discrete_equivalent(info, discrete_info(scaled)));

    CHECK_FALSE(discrete_equivalent(info, discrete_info(fixtures::line().complex)));

    // Coefficients do not matter.
    std::vector<std::string> v{"x", "y", "z"};
    auto other = koszul({parse_laurent("3 + 5*x - y", v), parse_laurent("7 + 2*z + 9*x*y", v)}, v);
    CHECK(discrete_equivalent(info, discrete_info(other)));
}

TEST_CASE("discrete equivalence is invariant under relabeling and translation") {
    corpus::Gen g(22);
    for (const auto& s : corpus::random_corpus(23, 40)) {
        const auto& F = s.complex;
        FreeComplex G = F;
        for (std::size_t i = 0; i < F.size(); ++i) G = rescale_summand(G, i, g.exponent(F.dimension(), 2));
        auto a = discrete_info(F), b = discrete_info(G);
        CHECK(discrete_equivalent(a, b));
        CHECK(discrete_equivalent(b, a));

        // Reverse the index order within the table.
        const std::size_t N = a.size();
        DiscreteInfo r{{}, ExponentTable(F.dimension(), N)};
        for (std::size_t i = 0; i < N; ++i) r.degrees.push_back(a.degrees[N - 1 - i]);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.exponents(i, j) = a.exponents(N - 1 - i, N - 1 - j);
        CHECK(discrete_equivalent(a, r));
    }
}

TEST_CASE("adding a monomial breaks discrete equivalence") {
    corpus::Gen g(24);
    for (const auto& s : corpus::random_corpus(25, 40)) {
        const auto& F = s.complex;
        int k = F.differentials().begin()->first;
        auto diffs = F.differentials();
        auto& entry = diffs.at(k)[0][0];
        Lattice m(F.dimension(), 5);
        entry.add_term(m, Rat(1));
        FreeComplex G(F.dimension(), F.labels(), F.degrees(), diffs);
        CHECK_FALSE(discrete_equivalent(discrete_info(F), discrete_info(G)));
    }
}
