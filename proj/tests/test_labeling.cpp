#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antimagic/constructions.hpp"
#include "antimagic/labeling.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace antimagic;

TEST_CASE("check_bijection on P_3") {
    Graph p3 = make_path(3);
    CHECK(check_bijection(p3, EdgeLabeling{{1, 2}}));
    CHECK_FALSE(check_bijection(p3, EdgeLabeling{{1, 1}}));
    CHECK_FALSE(check_bijection(p3, EdgeLabeling{{1, 3}}));
}

TEST_CASE("check_bijection reports domain mismatch") {
    Graph p3 = make_path(3);
    CHECK_THROWS_WITH_AS(check_bijection(p3, EdgeLabeling{{1}}),
                         doctest::Contains("missing edge ids 1..1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(check_bijection(p3, EdgeLabeling{{1, 2, 3}}),
                         doctest::Contains("extra edge ids 2..2"),
                         std::invalid_argument);
}

TEST_CASE("vertex_weights small cases") {
    Graph p3 = make_path(3);
    WeightMap w = vertex_weights(p3, EdgeLabeling{{1, 2}});
    CHECK(w.weights == std::vector<std::int64_t>{1, 3, 2});

    Graph star = make_star(3);
    WeightMap ws = vertex_weights(star, EdgeLabeling{{1, 2, 3}});
    CHECK(ws.weight(0) == 6);
    CHECK(ws.weights == std::vector<std::int64_t>{6, 1, 2, 3});

    Graph iso = Graph::from_edges(3, {{0, 1}});
    CHECK(vertex_weights(iso, EdgeLabeling{{5}}).weight(2) == 0);
}

TEST_CASE("even-s2 family weights at m=1") {
    Graph g = product_star_path(ProductParams::checked(2, 4));
    EdgeLabeling f = label_even_s2(1);
    WeightMap w = vertex_weights(g, f);
    std::vector<std::int64_t> expected{1,  2,  3,  4,  11, 15,
                                       16, 17, 19, 20, 23, 25};
    CHECK(w.sorted() == expected);
    CHECK(is_antimagic_labeling(g, f).pass);
}

TEST_CASE("verdict reports the least collision pair") {
    // 2P_2 labeled (1,2): both endpoints of the first edge weigh 1.
    Graph g = product_star_path(ProductParams::checked(1, 2));
    AntimagicVerdict v = is_antimagic_labeling(g, EdgeLabeling{{1, 2}});
    CHECK_FALSE(v.pass);
    REQUIRE(v.collision.has_value());
    const Edge& e0 = g.edge(0);
    CHECK(v.collision->first == std::min(e0.u, e0.v));
    CHECK(v.collision->second == std::max(e0.u, e0.v));

    // The least pair is chosen by the first element, then the second.
    Graph p5 = make_path(5);
    EdgeLabeling l{{1, 4, 2, 3}};
    WeightMap w = vertex_weights(p5, l);
    AntimagicVerdict v2 = is_antimagic_labeling(p5, l);
    CHECK_FALSE(v2.pass);
    REQUIRE(v2.collision.has_value());
    auto [x, y] = *v2.collision;
    CHECK(w.weight(x) == w.weight(y));
    for (int i = 0; i < x; ++i)
        for (int j = i + 1; j < p5.vertex_count(); ++j)
            CHECK(w.weight(i) != w.weight(j));
}

TEST_CASE("verdict reports bijection defects before collisions") {
    Graph p3 = make_path(3);
    AntimagicVerdict v = is_antimagic_labeling(p3, EdgeLabeling{{1, 1}});
    CHECK_FALSE(v.pass);
    CHECK(v.bijection_defect == "label 1 used 2 times");
    CHECK_FALSE(v.collision.has_value());

    AntimagicVerdict v2 = is_antimagic_labeling(p3, EdgeLabeling{{1, 3}});
    CHECK_FALSE(v2.pass);
    CHECK(v2.bijection_defect == "label 3 on edge 1 outside 1..2");
}

TEST_CASE("odd-p3 family weights at s=2") {
    Graph g = product_star_path(ProductParams::checked(2, 3));
    EdgeLabeling f = label_odd_p3(2);
    AntimagicVerdict v = is_antimagic_labeling(g, f);
    CHECK(v.pass);
    std::vector<std::int64_t> expected{1, 2, 3, 4, 10, 11, 12, 14, 15};
    CHECK(v.weights.sorted() == expected);
}

TEST_CASE("handshake identity for arbitrary labelings") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int s = 1 + static_cast<int>(rng() % 4);
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = product_star_path(ProductParams::checked(s, n));
        EdgeLabeling l;
        l.labels.resize(static_cast<size_t>(g.edge_count()));
        for (auto& x : l.labels) x = 1 + static_cast<std::int64_t>(rng() % 50);
        std::int64_t label_sum =
            std::accumulate(l.labels.begin(), l.labels.end(), std::int64_t{0});
        WeightMap w = vertex_weights(g, l);
        std::int64_t weight_sum =
            std::accumulate(w.weights.begin(), w.weights.end(), std::int64_t{0});
        CHECK(weight_sum == 2 * label_sum);
    }
}

TEST_CASE("valid bijections satisfy the weight-sum identity") {
    Graph g = product_star_path(ProductParams::checked(3, 6));
    EdgeLabeling f = label_even_general(3, 2, 0);
    REQUIRE(check_bijection(g, f));
    WeightMap w = vertex_weights(g, f);
    std::int64_t total =
        std::accumulate(w.weights.begin(), w.weights.end(), std::int64_t{0});
    std::int64_t e = g.edge_count();
    CHECK(total == e * (e + 1));
}

TEST_CASE("verdict is invariant under vertex relabeling") {
    std::mt19937 rng(7);
    Graph g = product_star_path(ProductParams::checked(2, 5));
    EdgeLabeling f = label_odd_p5(2);
    REQUIRE(is_antimagic_labeling(g, f).pass);

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> endpoints;
        for (const Edge& e : g.edges())
            endpoints.emplace_back(perm[static_cast<size_t>(e.u)],
                                   perm[static_cast<size_t>(e.v)]);
        Graph permuted = Graph::from_edges(g.vertex_count(), endpoints);
        CHECK(is_antimagic_labeling(permuted, f).pass);
    }

    // A failing labeling stays failing.
    Graph two_p2 = product_star_path(ProductParams::checked(1, 2));
    Graph swapped = Graph::from_edges(4, {{3, 1}, {0, 2}});
    CHECK_FALSE(is_antimagic_labeling(two_p2, EdgeLabeling{{1, 2}}).pass);
    CHECK_FALSE(is_antimagic_labeling(swapped, EdgeLabeling{{1, 2}}).pass);
}

TEST_CASE("pass implies |V| distinct weights") {
    for (int s : {2, 3})
        for (int n : {3, 4, 6}) {
            Graph g = product_star_path(ProductParams::checked(s, n));
            ConstructionOutcome out = construct(ProductParams::checked(s, n));
            REQUIRE(out.antimagic());
            AntimagicVerdict v = is_antimagic_labeling(g, *out.labeling);
            REQUIRE(v.pass);
            auto sorted = v.weights.sorted();
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) ==
                  sorted.end());
            CHECK(static_cast<int>(sorted.size()) == g.vertex_count());
        }
}
