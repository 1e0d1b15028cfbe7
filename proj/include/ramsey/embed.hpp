#pragma once

#include <ramsey/detect.hpp>
#include <ramsey/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// Blue copy of G in a colouring with no red triangle, for n >= 3 e(G) and G
    /// without isolated vertices. Each component of G gets its own block of
    /// 3 e(component) fresh vertices; inside a block, the red neighbourhood X of the
    /// block's maximum red-degree vertex is all blue, so the |X| highest-degree
    /// vertices of the component go there and the rest are placed greedily onto
    /// vertices blue to every already-placed neighbour.
    ///
    /// Throws PreconditionError if the hypotheses fail and ContractViolation if the
    /// greedy step ever runs dry (which the counting argument rules out).
    auto embed_s3(const TwoColoring & coloring, const Graph & g) -> EmbeddingMap;

    struct EmbedConfig
    {
        double c1 = 1.0; ///< scales the red-degree threshold for descending into a neighbourhood
        std::uint64_t node_budget = default_node_budget;
    };

    enum class EmbedBranch : std::uint8_t
    {
        triangle_free_base,
        red_neighbourhood,
        blue_clique
    };

    auto to_string(EmbedBranch b) -> const char *;

    struct EmbedOutcome
    {
        std::optional<EmbeddingMap> map;
        std::string failure;               ///< empty on success
        std::vector<EmbedBranch> branches; ///< branch taken at each recursion level

        auto ok() const -> bool { return map.has_value(); }
    };

    /// Bound r(K_s, G) <= B(s, m) used for the recursion: 3m for s = 3, otherwise
    /// m^{(s-1)/2} / ln^{(s-3)/2} m.
    auto embedding_order_bound(std::size_t s, std::size_t m) -> double;

    /// Red degree at which embed_general descends into a red neighbourhood:
    /// c1 * embedding_order_bound(s - 1, m).
    auto red_degree_threshold(std::size_t s, std::size_t m, double c1) -> double;

    /// floor(sqrt(m ln m)), at least 1.
    auto blue_clique_order(std::size_t m) -> std::size_t;

    /// Blue copy of G in a colouring with no red K_s, following the induction on s:
    /// s = 3 uses embed_s3; a vertex of red degree at least the threshold sends
    /// the search into its red neighbourhood with s - 1; otherwise a blue clique of
    /// order min(blue_clique_order(m), v(G)) hosts the highest-degree vertices and
    /// the rest are placed greedily. At small n the clique search or the greedy
    /// step can fail; that is reported in the outcome, not thrown.
    auto embed_general(const TwoColoring & coloring, const Graph & g, std::size_t s, const EmbedConfig & config = {})
        -> EmbedOutcome;

    struct BlueCliqueExtraction
    {
        std::vector<std::vector<Vertex>> cliques;
        bool complete = false;
        SearchStatus last_status = SearchStatus::found; ///< status of the step that stopped early, if any
    };

    /// Repeatedly takes the lexicographically least blue k-clique among the
    /// vertices not yet used, until count cliques are found or a search fails.
    auto iterated_blue_cliques(const TwoColoring & coloring, std::size_t s, std::size_t k, std::size_t count,
        std::uint64_t node_budget = default_node_budget) -> BlueCliqueExtraction;
}
