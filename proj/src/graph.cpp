#include <ramsey/errors.hpp>
#include <ramsey/graph.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

using std::size_t;
using std::vector;

namespace ramsey
{
    auto make_edge(Vertex u, Vertex v) -> Edge
    {
        return u < v ? Edge{u, v} : Edge{v, u};
    }

    Graph::Graph(size_t order) :
        _adjacency(order, Bitset(order))
    {
    }

    auto Graph::from_edges(size_t order, std::span<const Edge> edges) -> Graph
    {
        Graph result(order);
        for (auto & e : edges)
            result.add_edge(e.first, e.second);
        return result;
    }

    void Graph::add_edge(Vertex u, Vertex v)
    {
        if (u >= order() || v >= order())
            throw std::invalid_argument("vertex id out of range");
        if (u == v)
            throw std::invalid_argument("self-loop");
        if (_adjacency[u].test(v))
            throw std::invalid_argument("duplicate edge");
        set_edge(u, v, true);
    }

    auto Graph::set_edge(Vertex u, Vertex v, bool present) -> bool
    {
        if (_adjacency[u].test(v) == present)
            return false;
        _adjacency[u].set(v, present);
        _adjacency[v].set(u, present);
        present ? ++_size : --_size;
        return true;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_size);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v = _adjacency[u].next(u + 1); v != Bitset::npos; v = _adjacency[u].next(v + 1))
                result.push_back(Edge{u, v});
        return result;
    }

    auto Graph::degrees() const -> vector<size_t>
    {
        vector<size_t> result(order());
        for (Vertex v = 0; v < order(); ++v)
            result[v] = degree(v);
        return result;
    }

    auto Graph::max_degree() const -> size_t
    {
        size_t result = 0;
        for (Vertex v = 0; v < order(); ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::has_isolated_vertices() const -> bool
    {
        for (auto & row : _adjacency)
            if (row.none())
                return true;
        return false;
    }

    auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
    {
        Graph result(vertices.size());
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (has_edge(vertices[i], vertices[j]))
                    result.set_edge(i, j, true);
        return result;
    }

    auto Graph::complement() const -> Graph
    {
        Graph result(order());
        for (Vertex u = 0; u < order(); ++u) {
            result._adjacency[u] = _adjacency[u].complement();
            result._adjacency[u].reset(u);
        }
        result._size = order() * (order() - (order() > 0 ? 1 : 0)) / 2 - _size;
        return result;
    }

    auto Graph::components() const -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result;
        Bitset seen(order());
        for (Vertex root = 0; root < order(); ++root) {
            if (seen.test(root))
                continue;
            vector<Vertex> component{root};
            seen.set(root);
            for (size_t i = 0; i < component.size(); ++i)
                _adjacency[component[i]].for_each([&](size_t w) {
                    if (! seen.test(w)) {
                        seen.set(w);
                        component.push_back(w);
                    }
                });
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto Graph::relabelled(std::span<const Vertex> permutation) const -> Graph
    {
        Graph result(order());
        for (auto & e : edges())
            result.set_edge(permutation[e.first], permutation[e.second], true);
        return result;
    }

    auto complete_graph(size_t order) -> Graph
    {
        Graph result(order);
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                result.set_edge(u, v, true);
        return result;
    }

    auto path_graph(size_t order) -> Graph
    {
        Graph result(order);
        for (Vertex v = 0; v + 1 < order; ++v)
            result.set_edge(v, v + 1, true);
        return result;
    }

    auto cycle_graph(size_t order) -> Graph
    {
        if (order < 3)
            throw std::invalid_argument("cycle needs at least three vertices");
        Graph result = path_graph(order);
        result.set_edge(0, order - 1, true);
        return result;
    }

    auto star_graph(size_t leaves) -> Graph
    {
        Graph result(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v)
            result.set_edge(0, v, true);
        return result;
    }

    auto complete_bipartite_graph(size_t p, size_t q) -> Graph
    {
        Graph result(p + q);
        for (Vertex u = 0; u < p; ++u)
            for (Vertex v = p; v < p + q; ++v)
                result.set_edge(u, v, true);
        return result;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        Graph result(a.order() + b.order());
        for (auto & e : a.edges())
            result.set_edge(e.first, e.second, true);
        for (auto & e : b.edges())
            result.set_edge(a.order() + e.first, a.order() + e.second, true);
        return result;
    }

    auto other(Color c) -> Color
    {
        return c == Color::red ? Color::blue : Color::red;
    }

    auto to_string(Color c) -> const char *
    {
        return c == Color::red ? "red" : "blue";
    }

    TwoColoring::TwoColoring(size_t n) :
        _red(n),
        _blue(complete_graph(n))
    {
    }

    TwoColoring::TwoColoring(const Graph & red_graph) :
        _red(red_graph),
        _blue(red_graph.complement())
    {
    }

    void TwoColoring::set_color(Vertex u, Vertex v, Color c)
    {
        if (u == v || u >= order() || v >= order())
            throw std::invalid_argument("set_color: not an edge of K_n");
        _red.set_edge(u, v, c == Color::red);
        _blue.set_edge(u, v, c == Color::blue);
    }

    auto TwoColoring::restricted(std::span<const Vertex> vertices) const -> TwoColoring
    {
        return TwoColoring(_red.induced(vertices));
    }

    auto TwoColoring::swapped() const -> TwoColoring
    {
        return TwoColoring(_blue);
    }

    auto density(const Graph & h) -> Rational
    {
        if (h.order() < 3)
            throw DomainError("density needs at least three vertices, got " + std::to_string(h.order()));
        return Rational(static_cast<std::int64_t>(h.size()) - 1, static_cast<std::int64_t>(h.order()) - 2);
    }

    auto rho_star(const Graph & h, size_t vertex_cap) -> Rational
    {
        auto n = h.order();
        if (n < 3)
            throw DomainError("rho_star needs at least three vertices, got " + std::to_string(n));
        if (n > vertex_cap || n > 62)
            throw CapacityError("rho_star enumerates vertex subsets; " + std::to_string(n) + " vertices exceeds the cap of " +
                std::to_string(std::min<size_t>(vertex_cap, 62)));

        // For a fixed vertex set the induced subgraph is the densest, so a walk
        // over all subsets in Gray-code order suffices, updating the edge count
        // by one vertex toggle per step.
        vector<std::uint64_t> rows(n, 0);
        for (auto & e : h.edges()) {
            rows[e.first] |= std::uint64_t{1} << e.second;
            rows[e.second] |= std::uint64_t{1} << e.first;
        }

        Rational best = density(h);
        std::uint64_t mask = 0;
        std::int64_t edges = 0;
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
            auto v = std::countr_zero(step);
            auto adjacent = std::popcount(rows[v] & mask);
            mask ^= std::uint64_t{1} << v;
            edges += (mask >> v & 1) ? adjacent : -adjacent;
            auto vertices = std::popcount(mask);
            if (vertices >= 3) {
                Rational candidate(edges - 1, vertices - 2);
                if (candidate > best)
                    best = candidate;
            }
        }
        return best;
    }

    auto union_of_cliques_shape(size_t m, size_t s) -> UnionOfCliquesShape
    {
        if (m < 3)
            throw DomainError("union_of_cliques needs m >= 3, got " + std::to_string(m));
        if (s < 3)
            throw DomainError("union_of_cliques needs s >= 3, got " + std::to_string(s));
        double md = static_cast<double>(m), sd = static_cast<double>(s);
        double k_real = std::pow(md, 1.0 / sd) * std::pow(std::log(md), (sd - 2.0) / sd);
        auto k = std::max<size_t>(2, static_cast<size_t>(std::llround(k_real)));
        auto per_clique = k * (k - 1);
        return {k, (2 * m + per_clique - 1) / per_clique};
    }

    auto union_of_cliques(size_t m, size_t s) -> Graph
    {
        auto [k, count] = union_of_cliques_shape(m, s);
        Graph result(k * count);
        for (size_t c = 0; c < count; ++c)
            for (Vertex u = 0; u < k; ++u)
                for (Vertex v = u + 1; v < k; ++v)
                    result.set_edge(c * k + u, c * k + v, true);
        return result;
    }
}
