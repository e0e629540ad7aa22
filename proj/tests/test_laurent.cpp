#include <catch_amalgamated.hpp>

#include "coamoeba/coamoeba.hpp"
#include "support/corpus.hpp"

using namespace coamoeba;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> xy{"x", "y"};

std::size_t binomial(std::size_t r, std::size_t k) {
    std::size_t b = 1;
    for (std::size_t i = 0; i < k; ++i) b = b * (r - i) / (i + 1);
    return b;
}
}  // namespace

TEST_CASE("rationals parse and print exactly") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-4") == Rat(-4));
    CHECK(to_string(Rat(0)) == "0/1");
    CHECK(to_string(Rat(-2, 4)) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/"), ParseError);
    CHECK_THROWS_AS(parse_rat("abc"), ParseError);
    CHECK(floor(Rat(-1, 3)) == -1);
    CHECK(reduce_mod_lattice(Point{Rat(-1, 4), Rat(5, 4)}) == Point{Rat(3, 4), Rat(1, 4)});
}

TEST_CASE("parse examples") {
    auto p = parse_laurent("1 + x + y", xyz);
    CHECK(p.size() == 3);
    CHECK(p.coefficient({1, 0, 0}) == 1);

    auto q = parse_laurent("3*x^-1*y^2 - 1/2", xy);
    CHECK(q.coefficient({-1, 2}) == 3);
    CHECK(q.coefficient({0, 0}) == Rat(-1, 2));

    CHECK(parse_laurent("x - x", xy).is_zero());
    CHECK(parse_laurent("(1 + x)*(1 - x)", xy) == parse_laurent("1 - x^2", xy));
    CHECK(parse_laurent("-y^-3", xy).coefficient({0, -3}) == -1);
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_laurent("1 + * x", xy);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_laurent("1 + w", xy), ParseError);
    CHECK_THROWS_AS(parse_laurent("1/0*x", xy), ParseError);
    CHECK_THROWS_AS(parse_laurent("x^", xy), ParseError);
    CHECK_THROWS_AS(parse_laurent("", xy), ParseError);
    CHECK_THROWS_AS(parse_laurent("(1 + x", xy), ParseError);
}

TEST_CASE("multiplication examples") {
    auto f = parse_laurent("1 + x", xy);
    auto g = parse_laurent("1 - x", xy);
    CHECK(f * g == parse_laurent("1 - x^2", xy));
    CHECK((parse_laurent("x", xy) * parse_laurent("x^-1", xy)) == LaurentPoly::constant(2, 1));
    CHECK((f * LaurentPoly(2)).is_zero());
    CHECK_THROWS_AS(f * LaurentPoly(3), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    corpus::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto a = g.poly(n), b = g.poly(n), c = g.poly(n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        LaurentPoly sum = b;
        sum += c;
        LaurentPoly lhs = a * sum;
        LaurentPoly rhs = a * b;
        rhs += a * c;
        CHECK(lhs == rhs);
        CHECK((a * LaurentPoly::constant(n, 1)) == a);
    }
}

TEST_CASE("print then parse is the identity") {
    corpus::Gen g(12);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto vars = default_variables(n);
        auto p = g.poly(n, 6);
        std::string s = to_string(p, vars);
        auto q = parse_laurent(s, vars);
        CHECK(q == p);
        CHECK(to_string(q, vars) == s);
    }
}

TEST_CASE("koszul of two polynomials") {
    auto f = parse_laurent("1 + x + y", xyz), g = parse_laurent("1 + z + x*y", xyz);
    auto F = koszul({f, g}, xyz);
    CHECK(F.labels() == std::vector<std::string>{"11", "10", "01", "00"});
    CHECK(F.degrees() == std::vector<int>{-2, -1, -1, 0});
    CHECK(F.differential(-2) == PolyMatrix{{-g}, {f}});
    CHECK(F.differential(-1) == PolyMatrix{{f, g}});
    CHECK(is_cochain_complex(F));
}

TEST_CASE("koszul ranks are binomial and d^2 vanishes") {
    corpus::Gen g(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 3;
        std::size_t r = 1 + static_cast<std::size_t>(trial % 4);
        std::vector<LaurentPoly> polys;
        for (std::size_t a = 0; a < r; ++a) polys.push_back(g.poly(n, 3, 1));
        auto F = koszul(polys);
        for (std::size_t k = 0; k <= r; ++k)
            CHECK(F.indices_in_degree(-static_cast<int>(k)).size() == binomial(r, k));
        CHECK(is_cochain_complex(F));
    }
}

TEST_CASE("compose_differentials") {
    auto F = koszul({parse_laurent("1 + x", xy), parse_laurent("y", xy)}, xy);
    CHECK(is_zero(compose_differentials(F, -2)));
    CHECK_THROWS_AS(compose_differentials(F, -1), std::out_of_range);

    PolyMatrix one{{LaurentPoly::constant(1, 1)}};
    FreeComplex G(1, {"a", "b", "c"}, {-2, -1, 0}, {{-2, one}, {-1, one}});
    CHECK_FALSE(is_cochain_complex(G));
    CHECK(compose_differentials(G, -2) == one);
}

TEST_CASE("free complex validation") {
    PolyMatrix one{{LaurentPoly::constant(1, 1)}};
    CHECK_THROWS_AS(FreeComplex(1, {"a"}, {1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(FreeComplex(1, {"a"}, {-1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(FreeComplex(1, {"a", "a"}, {-1, 0}, {}), std::invalid_argument);
    PolyMatrix wide{{LaurentPoly::constant(1, 1), LaurentPoly::constant(1, 1)}};
    CHECK_THROWS_AS(FreeComplex(1, {"a", "b"}, {-1, 0}, {{-1, wide}}), std::invalid_argument);
    FreeComplex ok(1, {"a", "b"}, {-1, 0}, {{-1, one}});
    CHECK(ok.entry(1, 0) == LaurentPoly::constant(1, 1));
    CHECK(ok.entry(0, 1).is_zero());
}

TEST_CASE("rescaling a summand keeps d^2 = 0") {
    auto F = koszul({parse_laurent("1 + x + y", xyz), parse_laurent("1 + z + x*y", xyz)}, xyz);
    auto G = rescale_summand(F, 1, {1, -1, 0});
    CHECK(is_cochain_complex(G));
    CHECK_FALSE(G.differential(-1) == F.differential(-1));
}
