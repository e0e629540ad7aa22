#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "coamoeba/coamoeba.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"

using namespace coamoeba;
using fixtures::pt;

namespace {

json load_sample(const std::string& name) {
    std::ifstream in(std::string(COAMOEBA_SAMPLES_DIR) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) n += line.rfind(prefix, 0) == 0;
    return n;
}

}  // namespace

TEST_CASE("complex documents roundtrip") {
    for (const auto& s : corpus::random_corpus(81, 30)) {
        json j = to_json(ComplexDocument{s.complex, s.placement});
        auto doc = complex_from_json(json::parse(j.dump()));
        CHECK(doc.placement == s.placement);
        CHECK(doc.complex.labels() == s.complex.labels());
        CHECK(doc.complex.degrees() == s.complex.degrees());
        CHECK(doc.complex.differentials() == s.complex.differentials());
        CHECK(to_json(doc) == j);
    }
}

TEST_CASE("rationals are written as p/q strings") {
    FreeComplex F(3, {"a"}, {0}, {});
    json j = to_json(ComplexDocument{F, {pt({"0", "0", "0"})}});
    CHECK(j["indices"][0]["point"] == json::array({"0/1", "0/1", "0/1"}));
    CHECK(j["differentials"].empty());
}

TEST_CASE("samples match the built-in examples") {
    auto check = [](const std::string& file, const fixtures::Example& ex) {
        auto doc = complex_from_json(load_sample(file));
        CHECK(doc.placement == ex.placement);
        CHECK(doc.complex.degrees() == ex.complex.degrees());
        CHECK(doc.complex.differentials() == ex.complex.differentials());
    };
    check("origami.json", fixtures::origami());
    check("line.json", fixtures::line());
    check("hypercube2.json", fixtures::hypercube(2));
    check("hypercube3.json", fixtures::hypercube(3));
    check("dimer.json", fixtures::dimer());
    check("star3.json", fixtures::star3());
    check("crossing.json", fixtures::crossing());
}

TEST_CASE("document errors") {
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"indices": []})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"n": 1, "indices": [{"label": "a", "degree": 0, "point": ["0", "0"]}]})")),
                    ParseError);
    CHECK_THROWS_AS(
        complex_from_json(json::parse(R"({"n": 1, "indices": [{"label": "a", "degree": 0, "point": ["1/0"]}]})")),
        ParseError);
    CHECK_THROWS_AS(complex_from_json(json::parse(
                        R"({"n": 1, "indices": [{"label": "a", "degree": -1}, {"label": "b", "degree": 0}],
                            "differentials": {"-1": [["1 + q"]]}})")),
                    ParseError);
}

TEST_CASE("simplicial set documents roundtrip") {
    auto ex = fixtures::origami();
    auto C = colored_X(ex.complex, ex.placement);
    json j = to_json(C.X, &C.degree);
    auto back = colored_from_json(json::parse(j.dump()));
    CHECK(back.X.same_simplices(C.X));
    CHECK(back.degree == C.degree);
    CHECK(back.X.chain_count(2) == 18);
    CHECK(is_simplicial_set_json(j));
    CHECK_FALSE(is_simplicial_set_json(to_json(ComplexDocument{ex.complex, ex.placement})));

    const auto labels = ex.complex.labels();
    json labelled = to_json(C.X, &C.degree, &labels);
    CHECK(labelled["simplices"].back()["chains"][0]["indices"][0] == "11");
    auto dropped = simplicial_set_from_json(labelled);
    CHECK(dropped.same_simplices(C.X));
    CHECK(dropped.chain_count(2) == 0);
}

TEST_CASE("characterization through a document") {
    auto ex = fixtures::dimer();
    auto C = colored_X(ex.complex, ex.placement);
    auto back = colored_from_json(to_json(C.X, &C.degree));
    CHECK(check_characterization(back).realizable);
}

TEST_CASE("obj export") {
    auto cube = fixtures::hypercube(2);
    auto S = build_S(cube.complex, cube.placement);
    std::string obj = export_obj(S[0]);
    CHECK(count_prefix(obj, "f ") == 8);
    CHECK(count_prefix(obj, "v ") == 24);

    auto origami = fixtures::origami();
    std::string xobj = export_obj(build_X(origami.complex, origami.placement));
    CHECK(count_prefix(xobj, "f ") >= 18);
    CHECK(count_prefix(xobj, "p ") >= 4);

    auto hc3 = fixtures::hypercube(3);
    CHECK_THROWS_AS(export_obj(build_X(hc3.complex, hc3.placement)), std::invalid_argument);
}

TEST_CASE("dot export") {
    auto ex = fixtures::dimer();
    std::string dot = export_dot(extract_graph(ex.complex, ex.placement));
    CHECK(dot.rfind("graph coamoeba {", 0) == 0);
    CHECK(count_prefix(dot, "  b0 -- ") + count_prefix(dot, "  b1 -- ") == 8);
    CHECK(dot.find("style=filled, fillcolor=black") != std::string::npos);
    CHECK(dot.find("coefficient=\"19/1\", m=\"(-1,0)\"") != std::string::npos);
}
