#pragma once

// Shared builders and brute-force oracles for the unit tests. The oracles are
// deliberately naive and share no code with the library's search kernels.

#include <ramsey/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace ramsey::test
{
    inline auto coloring_from_red(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> red) -> TwoColoring
    {
        Graph g(n);
        for (auto [u, v] : red)
            g.add_edge(u, v);
        return TwoColoring(g);
    }

    /// Red 5-cycle 0-1-2-3-4-0 in K_5: both colour classes are C_5.
    inline auto c5_coloring() -> TwoColoring
    {
        return TwoColoring(cycle_graph(5));
    }

    inline auto all_red(std::size_t n) -> TwoColoring
    {
        return TwoColoring(complete_graph(n));
    }

    /// Colouring of K_n whose red pairs are given by the bits of mask, pairs in lexicographic order.
    inline auto coloring_from_mask(std::size_t n, std::uint64_t mask) -> TwoColoring
    {
        Graph red(n);
        std::size_t bit = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1)
                    red.set_edge(u, v, true);
        return TwoColoring(red);
    }

    inline auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.set_edge(u, v, true);
        return g;
    }

    /// Random connected graph with exactly m edges on v vertices (v-1 <= m <= v(v-1)/2).
    inline auto random_connected_graph(std::size_t v, std::size_t m, std::mt19937_64 & rng) -> Graph
    {
        Graph g(v);
        for (Vertex i = 1; i < v; ++i)
            g.set_edge(std::uniform_int_distribution<Vertex>(0, i - 1)(rng), i, true);
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        while (g.size() < m) {
            auto a = pick(rng), b = pick(rng);
            if (a != b)
                g.set_edge(a, b, true);
        }
        return g;
    }

    inline auto random_permutation(std::size_t n, std::mt19937_64 & rng) -> std::vector<Vertex>
    {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }

    /// Does `host` contain every pair of `vertices`?
    inline auto spans_clique(const Graph & host, const std::vector<Vertex> & vertices) -> bool
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (vertices[i] == vertices[j] || ! host.has_edge(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    /// All k-subsets of {0..n-1} in lexicographic order.
    inline auto subsets(std::size_t n, std::size_t k) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result;
        std::vector<Vertex> current;
        auto rec = [&](auto & self, Vertex from) -> void {
            if (current.size() == k) {
                result.push_back(current);
                return;
            }
            for (Vertex v = from; v < n; ++v) {
                current.push_back(v);
                self(self, v + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        return result;
    }

    /// Brute force: any s-subset spanning a clique.
    inline auto has_clique_naive(const Graph & host, std::size_t s) -> bool
    {
        for (auto & set : subsets(host.order(), s))
            if (spans_clique(host, set))
                return true;
        return false;
    }

    /// Brute force over all injective maps V(pattern) -> V(host).
    inline auto has_copy_naive(const Graph & host, const Graph & pattern) -> bool
    {
        auto k = pattern.order(), n = host.order();
        if (k > n)
            return false;
        auto edges = pattern.edges();
        std::vector<Vertex> image(k);
        std::vector<bool> used(n, false);
        auto rec = [&](auto & self, std::size_t i) -> bool {
            if (i == k) {
                for (auto & e : edges)
                    if (! host.has_edge(image[e.first], image[e.second]))
                        return false;
                return true;
            }
            for (Vertex x = 0; x < n; ++x) {
                if (used[x])
                    continue;
                used[x] = true;
                image[i] = x;
                bool ok = self(self, i + 1);
                used[x] = false;
                if (ok)
                    return true;
            }
            return false;
        };
        return rec(rec, 0);
    }

    /// Maximum edge-disjoint s-clique packing size by trying every family of cliques.
    inline auto max_packing_naive(const Graph & host, std::size_t s) -> std::size_t
    {
        std::vector<std::vector<Vertex>> cliques;
        for (auto & set : subsets(host.order(), s))
            if (spans_clique(host, set))
                cliques.push_back(set);
        std::size_t best = 0;
        std::set<std::pair<Vertex, Vertex>> used;
        auto rec = [&](auto & self, std::size_t i, std::size_t size) -> void {
            best = std::max(best, size);
            if (size + (cliques.size() - i) <= best)
                return;
            for (std::size_t j = i; j < cliques.size(); ++j) {
                auto & c = cliques[j];
                std::vector<std::pair<Vertex, Vertex>> pairs;
                for (std::size_t a = 0; a < s; ++a)
                    for (std::size_t b = a + 1; b < s; ++b)
                        pairs.emplace_back(c[a], c[b]);
                bool disjoint = std::none_of(pairs.begin(), pairs.end(), [&](auto & p) { return used.count(p); });
                if (! disjoint)
                    continue;
                for (auto & p : pairs)
                    used.insert(p);
                self(self, j + 1, size + 1);
                for (auto & p : pairs)
                    used.erase(p);
            }
        };
        rec(rec, 0, 0);
        return best;
    }

    /// Max over every vertex subset (|S| >= 3) and every edge subset of H[S] of (e-1)/(v-2).
    inline auto rho_star_naive(const Graph & h) -> Rational
    {
        auto n = h.order();
        Rational best(-1000);
        for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << n); ++vmask) {
            auto v = std::popcount(vmask);
            if (v < 3)
                continue;
            std::vector<Edge> inside;
            for (auto & e : h.edges())
                if ((vmask >> e.first & 1) && (vmask >> e.second & 1))
                    inside.push_back(e);
            for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << inside.size()); ++emask) {
                Rational candidate(std::popcount(emask) - 1, v - 2);
                if (candidate > best)
                    best = candidate;
            }
        }
        return best;
    }
}
