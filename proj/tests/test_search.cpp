#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antimagic/constructions.hpp"
#include "antimagic/search.hpp"
#include "oracles.hpp"

#include <random>

using namespace antimagic;

namespace {

Graph disjoint_paths(int copies, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(c * n + i, c * n + i + 1);
    return Graph::from_edges(copies * n, edges);
}

} // namespace

TEST_CASE("2P_2 is certified not antimagic") {
    SearchResult r = find_antimagic(disjoint_paths(2, 2), SearchBudget::exhaustive());
    CHECK(r.kind == SearchResult::Kind::NotAntimagic);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->exhaustive);
    CHECK(r.certificate->assignments_examined <= 2);
}

TEST_CASE("2P_3 is certified not antimagic within 24 assignments") {
    SearchResult r = find_antimagic(disjoint_paths(2, 3), SearchBudget::exhaustive());
    CHECK(r.kind == SearchResult::Kind::NotAntimagic);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->exhaustive);
    CHECK(r.certificate->assignments_examined <= 24);
}

TEST_CASE("2P_4 yields a witness") {
    Graph g = disjoint_paths(2, 4);
    SearchResult r = find_antimagic(g, SearchBudget::backtracking());
    REQUIRE(r.kind == SearchResult::Kind::Antimagic);
    REQUIRE(r.witness.has_value());
    CHECK(is_antimagic_labeling(g, *r.witness).pass);
}

TEST_CASE("witnesses are deterministic") {
    Graph g = disjoint_paths(2, 5);
    SearchResult a = find_antimagic(g, SearchBudget::backtracking());
    SearchResult b = find_antimagic(g, SearchBudget::backtracking());
    REQUIRE(a.kind == SearchResult::Kind::Antimagic);
    CHECK(*a.witness == *b.witness);
    CHECK(a.report.nodes_expanded == b.report.nodes_expanded);
}

TEST_CASE("exhaustive mode and edge-count guards") {
    CHECK_THROWS_AS(
        find_antimagic(disjoint_paths(2, 8), SearchBudget::exhaustive()),
        std::invalid_argument);
    CHECK_THROWS_AS(find_antimagic(Graph::from_edges(3, {}), SearchBudget{}),
                    std::invalid_argument);
}

TEST_CASE("budget exhaustion reports Unknown") {
    Graph g = disjoint_paths(2, 3); // not antimagic; needs the full tree
    SearchBudget tiny = SearchBudget::backtracking(5);
    SearchResult r = find_antimagic(g, tiny);
    CHECK(r.kind == SearchResult::Kind::Unknown);
    CHECK(r.report.budget_exhausted);
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("K_2 plus anything stays not antimagic") {
    // A lone edge forces its two endpoints to share a weight.
    Graph k2_k3 = Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
    SearchResult r = find_antimagic(k2_k3, SearchBudget::exhaustive());
    CHECK(r.kind == SearchResult::Kind::NotAntimagic);
}

TEST_CASE("pruned search agrees with full enumeration on small graphs") {
    std::vector<Graph> zoo;
    zoo.push_back(make_path(2));
    zoo.push_back(make_path(4));
    zoo.push_back(make_path(7));
    zoo.push_back(make_star(3));
    zoo.push_back(make_star(6));
    zoo.push_back(disjoint_paths(2, 2));
    zoo.push_back(disjoint_paths(2, 3));
    zoo.push_back(disjoint_paths(3, 2));
    zoo.push_back(Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}));
    zoo.push_back(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}));
    // K_4 and the 4-cycle.
    zoo.push_back(Graph::from_edges(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    zoo.push_back(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    // Star plus a free edge; path plus an isolated vertex.
    zoo.push_back(Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}));
    zoo.push_back(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}}));
    zoo.push_back(product_star_path(ProductParams::checked(1, 4)));
    zoo.push_back(product_star_path(ProductParams::checked(3, 2)));

    // Random simple graphs, fixed seed, at most 7 edges.
    std::mt19937 rng(424242);
    while (zoo.size() < 28) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
        std::shuffle(all.begin(), all.end(), rng);
        int e = 1 + static_cast<int>(rng() % 7);
        all.resize(static_cast<size_t>(std::min<int>(e, static_cast<int>(all.size()))));
        zoo.push_back(Graph::from_edges(n, all));
    }

    for (const Graph& g : zoo) {
        if (g.edge_count() > 7) continue;
        auto oracle = oracles::permutation_search(g);
        SearchResult pruned = find_antimagic(g, SearchBudget::exhaustive());
        if (oracle.has_value()) {
            CHECK(pruned.kind == SearchResult::Kind::Antimagic);
            CHECK(is_antimagic_labeling(g, *pruned.witness).pass);
        } else {
            CHECK(pruned.kind == SearchResult::Kind::NotAntimagic);
            CHECK(pruned.certificate->exhaustive);
        }
    }
}

TEST_CASE("fingerprint is stable and descriptive") {
    Graph g = disjoint_paths(2, 2);
    CHECK(graph_fingerprint(g) == "4;2;0-1,2-3");
    SearchResult r = find_antimagic(g, SearchBudget::exhaustive());
    CHECK(r.certificate->graph_fingerprint == graph_fingerprint(g));
}

TEST_CASE("cross-validation agrees on small product cells") {
    // (2,3): 8 edges, both report antimagic.
    CrossValidationReport r23 = cross_validate(ProductParams::checked(2, 3),
                                               SearchBudget::exhaustive());
    CHECK(r23.agree);
    CHECK(r23.construct_kind == SearchResult::Kind::Antimagic);

    // (1,3) and (2,2): both report not antimagic.
    CrossValidationReport r13 = cross_validate(ProductParams::checked(1, 3),
                                               SearchBudget::exhaustive());
    CHECK(r13.agree);
    CHECK(r13.construct_kind == SearchResult::Kind::NotAntimagic);

    CrossValidationReport r22 = cross_validate(ProductParams::checked(2, 2),
                                               SearchBudget::exhaustive());
    CHECK(r22.agree);
    CHECK(r22.construct_kind == SearchResult::Kind::NotAntimagic);

    CHECK_THROWS_AS(cross_validate(ProductParams::checked(3, 4),
                                   SearchBudget::exhaustive()),
                    std::invalid_argument);
}

TEST_CASE("s=1 desk-scale region through the dispatcher") {
    // 2P_n is antimagic exactly when n >= 4, at desk scale.
    for (int n = 2; n <= 8; ++n) {
        ConstructionOutcome out = construct(ProductParams::checked(1, n));
        if (n <= 3) {
            CHECK(out.kind == ConstructionOutcome::Kind::NotAntimagic);
        } else {
            REQUIRE(out.antimagic());
            CHECK(*out.method == MethodTag::SearchFallback);
            Graph g = product_star_path(ProductParams::checked(1, n));
            CHECK(is_antimagic_labeling(g, *out.labeling).pass);
        }
    }
}
