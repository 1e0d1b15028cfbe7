#include "helpers.hpp"

#include <ramsey/detect.hpp>
#include <ramsey/embed.hpp>
#include <ramsey/errors.hpp>

#include <doctest.h>

#include <random>
#include <set>

using namespace ramsey;
using namespace ramsey::test;

namespace
{
    /// Triangle-free red graph: random bipartite graph on a random bipartition.
    auto random_bipartite_red(std::size_t n, double p, std::mt19937_64 & rng) -> TwoColoring
    {
        std::bernoulli_distribution side(0.5), coin(p);
        std::vector<bool> left(n);
        for (auto && b : left)
            b = side(rng);
        Graph red(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (left[u] != left[v] && coin(rng))
                    red.set_edge(u, v, true);
        return TwoColoring(red);
    }

    /// Triangle-free red graph from the random greedy process.
    auto random_triangle_free_red(std::size_t n, std::size_t attempts, std::mt19937_64 & rng) -> TwoColoring
    {
        Graph red(n);
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        for (std::size_t i = 0; i < attempts; ++i) {
            auto u = pick(rng), v = pick(rng);
            if (u == v || red.has_edge(u, v) || red.neighbours(u).intersects(red.neighbours(v)))
                continue;
            red.set_edge(u, v, true);
        }
        return TwoColoring(red);
    }

    auto revalidates(const TwoColoring & c, const Graph & g, const EmbeddingMap & map) -> bool
    {
        std::set<Vertex> images(map.image.begin(), map.image.end());
        if (images.size() != g.order() || map.image.size() != g.order())
            return false;
        for (auto & e : g.edges())
            if (! c.is_blue(map.image[e.first], map.image[e.second]))
                return false;
        return true;
    }
}

TEST_CASE("embed_s3 examples")
{
    auto g = path_graph(4);
    auto map = embed_s3(TwoColoring(9), g);
    CHECK(revalidates(TwoColoring(9), g, map));

    // Red star K_{1,5} centred at 0 inside K_12, G = path on 5 vertices.
    auto star = coloring_from_red(12, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto p5 = path_graph(5);
    auto star_map = embed_s3(star, p5);
    CHECK(revalidates(star, p5, star_map));
    CHECK(find_copy(star, Color::blue, p5).status == SearchStatus::found);
    // The highest-degree path vertices land in the star's leaves.
    CHECK(star_map.image[1] == 1);

    auto two_edges = disjoint_union(complete_graph(2), complete_graph(2));
    auto disjoint = embed_s3(TwoColoring(6), two_edges);
    CHECK(revalidates(TwoColoring(6), two_edges, disjoint));
    CHECK(std::set<Vertex>(disjoint.image.begin(), disjoint.image.end()).size() == 4);
}

TEST_CASE("embed_s3 preconditions")
{
    CHECK_THROWS_AS(embed_s3(all_red(9), path_graph(3)), PreconditionError);
    CHECK_THROWS_AS(embed_s3(TwoColoring(5), path_graph(3)), PreconditionError);
    Graph isolated(3);
    isolated.add_edge(0, 1);
    CHECK_THROWS_AS(embed_s3(TwoColoring(9), isolated), PreconditionError);
    CHECK_THROWS_AS(embed_s3(TwoColoring(9), Graph(2)), PreconditionError);
}

TEST_CASE("embed_s3 succeeds on random triangle-free colourings with n = 3m")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<std::size_t> pick_m(1, 30);
        auto m = pick_m(rng);
        std::size_t v = 2;
        while (v * (v - 1) / 2 < m)
            ++v;
        v = std::uniform_int_distribution<std::size_t>(v, m + 1)(rng);
        auto g = random_connected_graph(v, m, rng);
        auto n = 3 * m;
        auto c = trial % 2 ? random_bipartite_red(n, 0.3 + 0.7 * (trial % 7) / 6.0, rng)
                           : random_triangle_free_red(n, n * n, rng);
        REQUIRE(! has_clique_naive(c.red_graph(), 3));
        auto map = embed_s3(c, g);
        CHECK(revalidates(c, g, map));
    }
}

TEST_CASE("embed_s3 on disconnected G with dense triangle-free red graphs")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_connected_graph(4, 4, rng);
        auto b = random_connected_graph(5, 6, rng);
        auto g = disjoint_union(a, disjoint_union(b, complete_graph(2)));
        auto c = random_bipartite_red(3 * g.size(), 0.9, rng);
        auto map = embed_s3(c, g);
        CHECK(revalidates(c, g, map));
    }
}

TEST_CASE("thresholds and clique order")
{
    CHECK(embedding_order_bound(3, 10) == 30.0);
    CHECK(embedding_order_bound(4, 100) == doctest::Approx(1000.0 / std::sqrt(std::log(100.0))));
    CHECK(red_degree_threshold(4, 10, 1.0) == 30.0);
    CHECK(red_degree_threshold(4, 10, 2.0) == 60.0);
    CHECK(blue_clique_order(1) == 1);
    CHECK(blue_clique_order(10) == 4);   // sqrt(10 ln 10) = 4.80
    CHECK(blue_clique_order(100) == 21); // sqrt(100 ln 100) = 21.46
}

TEST_CASE("embed_general blue-clique branch on an all-blue colouring")
{
    for (std::size_t v = 3; v <= 8; ++v) {
        auto g = complete_graph(v);
        auto c = TwoColoring(v + 2);
        auto outcome = embed_general(c, g, 4);
        REQUIRE(outcome.ok());
        CHECK(outcome.branches == std::vector<EmbedBranch>{EmbedBranch::blue_clique});
        CHECK(revalidates(c, g, *outcome.map));
    }
    auto p6 = path_graph(6);
    auto outcome = embed_general(TwoColoring(6), p6, 5);
    REQUIRE(outcome.ok());
    CHECK(revalidates(TwoColoring(6), p6, *outcome.map));
}

TEST_CASE("embed_general descends once into a large triangle-free red neighbourhood")
{
    // Vertex 0 is red to vertices 1..12, which carry a red C_12 (triangle-free),
    // so the red graph has no K_4. G = path on 4 vertices, m = 3, threshold 3m = 9.
    std::size_t n = 16;
    Graph red(n);
    for (Vertex v = 1; v <= 12; ++v) {
        red.set_edge(0, v, true);
        red.set_edge(v, v % 12 + 1, true);
    }
    TwoColoring c(red);
    REQUIRE(! find_clique(c, Color::red, 4));
    auto g = path_graph(4);
    auto outcome = embed_general(c, g, 4);
    REQUIRE(outcome.ok());
    CHECK(outcome.branches == std::vector<EmbedBranch>{EmbedBranch::red_neighbourhood, EmbedBranch::triangle_free_base});
    CHECK(revalidates(c, g, *outcome.map));
    for (auto x : outcome.map->image) {
        CHECK(x >= 1);
        CHECK(x <= 12);
    }
}

TEST_CASE("embed_general reports failures instead of throwing")
{
    // Red complete bipartite K_{3,3}: no red triangle, blue is two disjoint triangles.
    TwoColoring c(complete_bipartite_graph(3, 3));
    auto outcome = embed_general(c, complete_graph(4), 4);
    CHECK(! outcome.ok());
    CHECK(! outcome.failure.empty());

    CHECK_THROWS_AS(embed_general(all_red(6), path_graph(3), 4), PreconditionError);
    CHECK_THROWS_AS(embed_general(TwoColoring(6), path_graph(3), 2), PreconditionError);
}

TEST_CASE("embed_general output always revalidates on random K_4-free colourings")
{
    std::mt19937_64 rng(55);
    std::size_t successes = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_connected_graph(5, 6, rng);
        auto c = random_bipartite_red(24, 0.5, rng);
        auto outcome = embed_general(c, g, 4);
        if (outcome.ok()) {
            ++successes;
            CHECK(revalidates(c, g, *outcome.map));
        }
    }
    CHECK(successes > 0);
}

TEST_CASE("iterated_blue_cliques")
{
    auto triples = iterated_blue_cliques(TwoColoring(9), 3, 3, 3);
    CHECK(triples.complete);
    CHECK(triples.cliques == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});

    auto matching = coloring_from_red(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    auto edges = iterated_blue_cliques(matching, 3, 2, 4);
    CHECK(edges.complete);
    REQUIRE(edges.cliques.size() == 4);
    std::set<Vertex> seen;
    for (auto & e : edges.cliques) {
        CHECK(matching.is_blue(e[0], e[1]));
        seen.insert(e.begin(), e.end());
    }
    CHECK(seen.size() == 8);

    auto none = iterated_blue_cliques(TwoColoring(5), 3, 2, 0);
    CHECK(none.complete);
    CHECK(none.cliques.empty());

    auto partial = iterated_blue_cliques(TwoColoring(7), 3, 3, 3);
    CHECK(! partial.complete);
    CHECK(partial.cliques.size() == 2);
    CHECK(partial.last_status == SearchStatus::absent);

    CHECK_THROWS_AS(iterated_blue_cliques(all_red(4), 3, 2, 1), PreconditionError);
}

TEST_CASE("iterated_blue_cliques builds a blue copy of union_of_cliques")
{
    auto g = union_of_cliques(10, 3);
    auto [k, count] = union_of_cliques_shape(10, 3);
    std::mt19937_64 rng(8);
    auto c = random_bipartite_red(40, 0.15, rng);
    auto extraction = iterated_blue_cliques(c, 3, k, count);
    REQUIRE(extraction.complete);
    EmbeddingMap map;
    for (auto & clique : extraction.cliques)
        for (auto v : clique)
            map.image.push_back(v);
    CHECK(revalidates(c, g, map));
}
