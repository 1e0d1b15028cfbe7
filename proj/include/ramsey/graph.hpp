#pragma once

#include <ramsey/bitset.hpp>
#include <ramsey/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramsey
{
    using Vertex = std::size_t;

    /// Unordered pair stored with first < second.
    struct Edge
    {
        Vertex first = 0;
        Vertex second = 0;

        friend auto operator<=>(const Edge &, const Edge &) = default;
    };

    auto make_edge(Vertex u, Vertex v) -> Edge;

    /// Simple undirected graph on vertices 0..order()-1.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t order);

        /// Throws std::invalid_argument on self-loops, duplicates or out-of-range ids.
        static auto from_edges(std::size_t order, std::span<const Edge> edges) -> Graph;

        auto order() const -> std::size_t { return _adjacency.size(); }
        auto size() const -> std::size_t { return _size; }

        auto has_edge(Vertex u, Vertex v) const -> bool { return _adjacency[u].test(v); }
        auto neighbours(Vertex v) const -> const Bitset & { return _adjacency[v]; }
        auto degree(Vertex v) const -> std::size_t { return _adjacency[v].count(); }

        /// Adds {u, v}; throws std::invalid_argument if it is a loop, out of range or already present.
        void add_edge(Vertex u, Vertex v);

        /// Sets the presence of {u, v} regardless of its current state. Returns whether anything changed.
        auto set_edge(Vertex u, Vertex v, bool present) -> bool;

        /// Edges in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        auto degrees() const -> std::vector<std::size_t>;
        auto max_degree() const -> std::size_t;
        auto has_isolated_vertices() const -> bool;

        /// Subgraph induced by the given vertices, relabelled 0..k-1 in the given order.
        auto induced(std::span<const Vertex> vertices) const -> Graph;

        auto complement() const -> Graph;

        /// Vertex sets of the connected components, each sorted, ordered by smallest member.
        auto components() const -> std::vector<std::vector<Vertex>>;

        /// Graph obtained by sending vertex v to permutation[v].
        auto relabelled(std::span<const Vertex> permutation) const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        std::vector<Bitset> _adjacency;
        std::size_t _size = 0;
    };

    auto complete_graph(std::size_t order) -> Graph;
    auto path_graph(std::size_t order) -> Graph;
    auto cycle_graph(std::size_t order) -> Graph;
    auto star_graph(std::size_t leaves) -> Graph;
    auto complete_bipartite_graph(std::size_t p, std::size_t q) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    enum class Color : std::uint8_t
    {
        red,
        blue
    };

    auto other(Color c) -> Color;
    auto to_string(Color c) -> const char *;

    /// Red/blue colouring of the edges of K_n. Stores the red graph and keeps
    /// the blue graph as its exact complement.
    class TwoColoring
    {
    public:
        TwoColoring() = default;

        /// All-blue K_n.
        explicit TwoColoring(std::size_t n);

        /// Red edges given by red_graph; everything else blue.
        explicit TwoColoring(const Graph & red_graph);

        auto order() const -> std::size_t { return _red.order(); }

        auto color(Vertex u, Vertex v) const -> Color { return _red.has_edge(u, v) ? Color::red : Color::blue; }
        auto is_red(Vertex u, Vertex v) const -> bool { return _red.has_edge(u, v); }
        auto is_blue(Vertex u, Vertex v) const -> bool { return u != v && ! _red.has_edge(u, v); }

        void set_color(Vertex u, Vertex v, Color c);

        auto graph(Color c) const -> const Graph & { return c == Color::red ? _red : _blue; }
        auto red_graph() const -> const Graph & { return _red; }
        auto blue_graph() const -> const Graph & { return _blue; }

        auto count(Color c) const -> std::size_t { return graph(c).size(); }

        /// Colouring of the sub-K induced on the given vertices, relabelled in order.
        auto restricted(std::span<const Vertex> vertices) const -> TwoColoring;

        /// Same colouring with red and blue exchanged.
        auto swapped() const -> TwoColoring;

        friend auto operator==(const TwoColoring & a, const TwoColoring & b) -> bool { return a._red == b._red; }

    private:
        Graph _red;
        Graph _blue;
    };

    /// (e_H - 1) / (v_H - 2). Throws DomainError when v_H < 3.
    auto density(const Graph & h) -> Rational;

    inline constexpr std::size_t default_rho_star_cap = 20;

    /// Maximum density over all subgraphs with at least three vertices.
    /// Enumerates vertex subsets, so v_H must not exceed vertex_cap (CapacityError).
    auto rho_star(const Graph & h, std::size_t vertex_cap = default_rho_star_cap) -> Rational;

    struct UnionOfCliquesShape
    {
        std::size_t clique_order;
        std::size_t count;
    };

    /// Clique order k and copy count for the disjoint-clique graph with edge budget m
    /// that avoids r(K_s, .) growth: k = max(2, round(m^{1/s} ln^{(s-2)/s} m)),
    /// count = ceil(2m / (k(k-1))).
    auto union_of_cliques_shape(std::size_t m, std::size_t s) -> UnionOfCliquesShape;

    /// Disjoint union of union_of_cliques_shape(m, s).count copies of K_k.
    /// Has at least m edges. Throws DomainError for m < 3 or s < 3.
    auto union_of_cliques(std::size_t m, std::size_t s) -> Graph;
}
