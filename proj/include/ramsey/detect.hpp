#pragma once

#include <ramsey/graph.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace ramsey
{
    enum class SearchStatus : std::uint8_t
    {
        found,
        absent,
        unknown ///< node budget exhausted before the search finished
    };

    auto to_string(SearchStatus s) -> const char *;

    inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();
    inline constexpr std::uint64_t default_node_budget = 100'000'000;

    struct CliqueSearch
    {
        SearchStatus status = SearchStatus::absent;
        std::vector<Vertex> clique;
        std::uint64_t nodes = 0;
    };

    /// Lexicographically least s-clique of g using only vertices in allowed.
    auto search_clique(const Graph & g, std::size_t s, const Bitset & allowed, std::uint64_t node_budget = unlimited_budget)
        -> CliqueSearch;

    /// Lexicographically least monochromatic s-set of the given colour, if any.
    auto find_clique(const TwoColoring & coloring, Color color, std::size_t s) -> std::optional<std::vector<Vertex>>;

    /// Injective map V(G) -> V(K_n); image[v] is where pattern vertex v lands.
    struct EmbeddingMap
    {
        std::vector<Vertex> image;

        friend auto operator==(const EmbeddingMap &, const EmbeddingMap &) -> bool = default;
    };

    /// Injective, and every edge of pattern lands on an edge of the given colour.
    auto is_valid_embedding(const TwoColoring & coloring, Color color, const Graph & pattern, const EmbeddingMap & map) -> bool;

    /// Same check against an arbitrary host graph.
    auto is_valid_embedding(const Graph & host, const Graph & pattern, const EmbeddingMap & map) -> bool;

    struct CopySearch
    {
        SearchStatus status = SearchStatus::absent;
        std::optional<EmbeddingMap> map;
        std::uint64_t nodes = 0;
    };

    /// Non-induced subgraph isomorphism by backtracking. Pattern vertices are
    /// placed highest degree first, then by most already-placed neighbours, with
    /// degree and forward-checking pruning. Returns the first map in that order.
    auto find_subgraph(const Graph & host, const Graph & pattern, std::uint64_t node_budget = default_node_budget) -> CopySearch;

    /// Like find_subgraph, restricted to copies that use the host edge {u, v}.
    auto find_subgraph_through(const Graph & host, const Graph & pattern, Vertex u, Vertex v,
        std::uint64_t node_budget = unlimited_budget) -> CopySearch;

    /// A copy of pattern in the given colour class of the colouring.
    auto find_copy(const TwoColoring & coloring, Color color, const Graph & pattern,
        std::uint64_t node_budget = default_node_budget) -> CopySearch;

    /// Pairwise edge-disjoint s-cliques, all of one colour.
    struct CliquePacking
    {
        std::size_t s = 0;
        std::vector<std::vector<Vertex>> members;

        auto size() const -> std::size_t { return members.size(); }
    };

    enum class PackingMode : std::uint8_t
    {
        greedy, ///< maximal: first-fit over s-sets in lexicographic order
        exact   ///< maximum cardinality, small instances only
    };

    inline constexpr std::size_t exact_packing_cap = 12;

    auto max_edge_disjoint_packing(const TwoColoring & coloring, std::size_t s, PackingMode mode = PackingMode::greedy,
        Color color = Color::red) -> CliquePacking;

    /// Vertex of maximum degree among those in within (ties to the smallest id)
    /// counting only neighbours in within.
    auto max_degree_vertex(const Graph & g, const Bitset & within) -> std::pair<Vertex, std::size_t>;

    auto max_red_degree_vertex(const TwoColoring & coloring) -> std::pair<Vertex, std::size_t>;
}
