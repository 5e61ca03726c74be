#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antimagic/io.hpp"

#include <regex>

using namespace antimagic;
using nlohmann::json;

namespace {

bool same_structure(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edges().size() != b.edges().size()) return false;
    for (size_t k = 0; k < a.edges().size(); ++k)
        if (!(a.edges()[k] == b.edges()[k])) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (a.role(v) != b.role(v)) return false;
    return true;
}

} // namespace

TEST_CASE("graph JSON round-trip over the small grid") {
    for (int s = 1; s <= 5; ++s)
        for (int n = 2; n <= 9; ++n) {
            Graph g = product_star_path(ProductParams::checked(s, n));
            Graph back = graph_from_json(graph_to_json(g));
            CHECK(same_structure(g, back));
        }
    // Role-free graphs keep role == nullopt.
    Graph p = make_path(4);
    Graph back = graph_from_json(graph_to_json(p));
    CHECK(same_structure(p, back));
    CHECK_FALSE(back.role(0).has_value());
}

TEST_CASE("graph JSON uses the fixed key names") {
    Graph g = product_star_path(ProductParams::checked(2, 3));
    json j = graph_to_json(g);
    REQUIRE(j.contains("vertices"));
    REQUIRE(j.contains("edges"));
    const json& v0 = j["vertices"][0];
    CHECK(v0.contains("id"));
    CHECK(v0.contains("role"));
    CHECK(v0["role"].contains("family"));
    CHECK(v0["role"].contains("i"));
    CHECK(v0["role"].contains("j"));
    const json& e0 = j["edges"][0];
    CHECK(e0.contains("id"));
    CHECK(e0.contains("u"));
    CHECK(e0.contains("v"));
    // Hub roles omit "j".
    bool found_hub = false;
    for (const json& jv : j["vertices"])
        if (jv["role"]["family"] == "v") {
            CHECK_FALSE(jv["role"].contains("j"));
            found_hub = true;
        }
    CHECK(found_hub);
}

TEST_CASE("malformed graph JSON names the offending key") {
    CHECK_THROWS_WITH_AS(graph_from_json(json{{"edges", json::array()}}),
                         doctest::Contains("\"vertices\""), ParseError);
    CHECK_THROWS_WITH_AS(
        graph_from_json(json{{"vertices", json::array()}}),
        doctest::Contains("\"edges\""), ParseError);
    json bad{{"vertices", json::array({json{{"id", 0}}})},
             {"edges", json::array({json{{"id", 0}, {"u", 0}}})}};
    CHECK_THROWS_WITH_AS(graph_from_json(bad), doctest::Contains("\"v\""),
                         ParseError);
    CHECK_THROWS_AS(parse_json_text("{nope"), ParseError);
}

TEST_CASE("labeling JSON round-trip and domain checks") {
    Graph g = product_star_path(ProductParams::checked(2, 4));
    EdgeLabeling f = label_even_s2(1);
    json j = labeling_to_json(f, "k12xp4");
    CHECK(j["graph_ref"] == "k12xp4");
    EdgeLabeling back = labeling_from_json(j, g);
    CHECK(back == f);

    json missing = json{{"labels", json::array({json{{"edge", 0}, {"label", 1}}})}};
    CHECK_THROWS_WITH_AS(labeling_from_json(missing, g),
                         doctest::Contains("misses edge id 1"), ParseError);

    json dup = labeling_to_json(f);
    dup["labels"][1]["edge"] = 0;
    CHECK_THROWS_WITH_AS(labeling_from_json(dup, g),
                         doctest::Contains("duplicate key \"edge\""),
                         ParseError);

    json extra = labeling_to_json(f);
    extra["labels"][0]["edge"] = 99;
    CHECK_THROWS_WITH_AS(labeling_from_json(extra, g),
                         doctest::Contains("outside the graph"), ParseError);

    json nonpositive = labeling_to_json(f);
    nonpositive["labels"][0]["label"] = 0;
    CHECK_THROWS_WITH_AS(labeling_from_json(nonpositive, g),
                         doctest::Contains("positive"), ParseError);
}

TEST_CASE("DOT output shape") {
    ProductParams p = ProductParams::checked(3, 8);
    Graph g = product_star_path(p);
    ConstructionOutcome out = construct(p);
    REQUIRE(out.antimagic());
    std::string dot = to_dot(g, *out.labeling);

    // Minimal grammar pass: graph <name> { <vertex lines> <edge lines> }.
    CHECK(dot.rfind("graph antimagic {", 0) == 0);
    CHECK(dot.back() == '\n');
    std::regex vertex_line(R"(^  (\d+) \[label="[^"]+:\d+"\];$)");
    std::regex edge_line(R"(^  (\d+) -- (\d+) \[label=(\d+)\];$)");
    int vertex_lines = 0, edge_lines = 0;
    std::istringstream in(dot);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line == "}") break;
        if (std::regex_match(line, vertex_line))
            ++vertex_lines;
        else if (std::regex_match(line, edge_line))
            ++edge_lines;
        else
            FAIL("unparseable DOT line: " << line);
    }
    CHECK(vertex_lines == g.vertex_count());
    CHECK(edge_lines == g.edge_count());

    // Roles render as family/index, weights after the colon.
    CHECK(dot.find("[label=\"a_0^1:") != std::string::npos);
}

TEST_CASE("labeled CSV shape") {
    Graph g = product_star_path(ProductParams::checked(2, 3));
    EdgeLabeling f = label_odd_p3(2);
    std::string csv = labeled_csv(g, f);
    CHECK(csv.rfind("edge,u,v,label\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == g.edge_count() + 1);
}

TEST_CASE("outcome JSON forms") {
    ConstructionOutcome anti = construct(ProductParams::checked(3, 8));
    json ja = outcome_to_json(anti);
    CHECK(ja["verdict"] == "antimagic");
    CHECK(ja["method"] == "even-general");
    CHECK(ja["epsilon"].is_number_integer());

    ConstructionOutcome nota = construct(ProductParams::checked(2, 2));
    json jn = outcome_to_json(nota);
    CHECK(jn["verdict"] == "not-antimagic");
    CHECK(jn["certificate"]["exhaustive"] == true);
    CHECK(jn["certificate"]["assignments_examined"].is_number_integer());

    ConstructionOutcome em = construct(ProductParams::checked(2, 4));
    json je = outcome_to_json(em);
    CHECK(je["epsilon"].is_null());
}
