#include <ramsey/embed.hpp>
#include <ramsey/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

using std::size_t;
using std::string;
using std::vector;

namespace ramsey
{
    namespace
    {
        constexpr Vertex unplaced = Bitset::npos;

        /// Pattern vertices sorted by decreasing degree, ties by id.
        auto by_degree(const Graph & g, vector<Vertex> vertices) -> vector<Vertex>
        {
            std::stable_sort(vertices.begin(), vertices.end(),
                [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
            return vertices;
        }

        auto placed_neighbour_images(const Graph & g, Vertex v, const vector<Vertex> & image) -> vector<Vertex>
        {
            vector<Vertex> result;
            g.neighbours(v).for_each([&](size_t w) {
                if (image[w] != unplaced)
                    result.push_back(image[w]);
            });
            return result;
        }

        auto blue_common_neighbourhood(const TwoColoring & coloring, const vector<Vertex> & ys, Bitset within) -> Bitset
        {
            for (auto y : ys)
                within &= coloring.blue_graph().neighbours(y);
            return within;
        }

        void check_pattern(const Graph & g)
        {
            if (g.size() == 0)
                throw PreconditionError("G must have at least one edge");
            if (g.has_isolated_vertices())
                throw PreconditionError("G must not have isolated vertices");
        }

        void place_component(const TwoColoring & coloring, const Graph & g, const vector<Vertex> & component,
            const Bitset & block, vector<Vertex> & image, Bitset & used)
        {
            auto [centre, t] = max_degree_vertex(coloring.red_graph(), block);
            auto x = (coloring.red_graph().neighbours(centre) & block).to_vector();

            for (size_t i = 0; i < x.size(); ++i)
                for (size_t j = i + 1; j < x.size(); ++j)
                    if (! coloring.is_blue(x[i], x[j]))
                        throw ContractViolation("red neighbourhood of a triangle-free colouring has a red edge");

            auto ranked = by_degree(g, component);
            auto high = std::min(t, ranked.size());
            for (size_t i = 0; i < high; ++i) {
                image[ranked[i]] = x[i];
                used.set(x[i]);
            }

            vector<Vertex> rest(ranked.begin() + high, ranked.end());
            std::sort(rest.begin(), rest.end());
            auto block_size = block.count();
            for (auto v : rest) {
                auto ys = placed_neighbour_images(g, v, image);
                auto common = blue_common_neighbourhood(coloring, ys, block);

                // Every y has at most t red neighbours in the block, so all but
                // t|Y| block vertices are blue to Y or lie in Y.
                if (common.count() + ys.size() + t * ys.size() < block_size)
                    throw ContractViolation("availability bound violated while placing vertex " + std::to_string(v));

                auto free = common - used;
                auto target = free.first();
                if (target == Bitset::npos)
                    throw ContractViolation("no free blue-compatible vertex for pattern vertex " + std::to_string(v));
                image[v] = target;
                used.set(target);
            }
        }

        auto embed_with_clique(const TwoColoring & coloring, const Graph & g, const EmbedConfig & config, EmbedOutcome & outcome)
            -> void
        {
            auto k = std::min(blue_clique_order(g.size()), g.order());
            auto n = coloring.order();
            auto search = search_clique(coloring.blue_graph(), k, Bitset(n, true), config.node_budget);
            if (search.status != SearchStatus::found) {
                outcome.failure = search.status == SearchStatus::unknown
                    ? "no blue " + std::to_string(k) + "-clique found within the node budget"
                    : "no blue " + std::to_string(k) + "-clique exists on " + std::to_string(n) + " vertices";
                return;
            }

            vector<Vertex> image(g.order(), unplaced);
            Bitset used(n);
            vector<Vertex> all(g.order());
            std::iota(all.begin(), all.end(), 0);
            auto ranked = by_degree(g, all);
            for (size_t i = 0; i < k; ++i) {
                image[ranked[i]] = search.clique[i];
                used.set(search.clique[i]);
            }

            vector<Vertex> rest(ranked.begin() + k, ranked.end());
            std::sort(rest.begin(), rest.end());
            for (auto v : rest) {
                auto common = blue_common_neighbourhood(coloring, placed_neighbour_images(g, v, image), Bitset(n, true));
                auto target = (common - used).first();
                if (target == Bitset::npos) {
                    outcome.failure = "greedy placement ran out of blue-compatible vertices at pattern vertex " + std::to_string(v);
                    return;
                }
                image[v] = target;
                used.set(target);
            }
            outcome.map = EmbeddingMap{std::move(image)};
        }

        void embed_recursive(const TwoColoring & coloring, const Graph & g, size_t s, const EmbedConfig & config,
            EmbedOutcome & outcome)
        {
            auto m = g.size();
            if (s == 3) {
                outcome.branches.push_back(EmbedBranch::triangle_free_base);
                if (coloring.order() < 3 * m) {
                    outcome.failure = "triangle-free level has " + std::to_string(coloring.order()) + " vertices, below 3m = " +
                        std::to_string(3 * m);
                    return;
                }
                outcome.map = embed_s3(coloring, g);
                return;
            }

            auto [v, degree] = max_red_degree_vertex(coloring);
            if (static_cast<double>(degree) >= red_degree_threshold(s, m, config.c1)) {
                outcome.branches.push_back(EmbedBranch::red_neighbourhood);
                auto neighbourhood = coloring.red_graph().neighbours(v).to_vector();
                embed_recursive(coloring.restricted(neighbourhood), g, s - 1, config, outcome);
                if (outcome.map)
                    for (auto & x : outcome.map->image)
                        x = neighbourhood[x];
                return;
            }

            outcome.branches.push_back(EmbedBranch::blue_clique);
            embed_with_clique(coloring, g, config, outcome);
        }
    }

    auto to_string(EmbedBranch b) -> const char *
    {
        switch (b) {
        case EmbedBranch::triangle_free_base: return "triangle_free_base";
        case EmbedBranch::red_neighbourhood: return "red_neighbourhood";
        case EmbedBranch::blue_clique: return "blue_clique";
        }
        return "?";
    }

    auto embed_s3(const TwoColoring & coloring, const Graph & g) -> EmbeddingMap
    {
        check_pattern(g);
        auto n = coloring.order();
        if (n < 3 * g.size())
            throw PreconditionError("need n >= 3m = " + std::to_string(3 * g.size()) + ", got n = " + std::to_string(n));
        if (find_clique(coloring, Color::red, 3))
            throw PreconditionError("colouring contains a red triangle");

        vector<Vertex> image(g.order(), unplaced);
        Bitset used(n);
        for (auto & component : g.components()) {
            size_t degree_sum = 0;
            for (auto v : component)
                degree_sum += g.degree(v);
            auto budget = 3 * (degree_sum / 2);

            Bitset block(n);
            for (auto v = used.complement().first(); v != Bitset::npos && block.count() < budget; v = used.complement().next(v + 1))
                block.set(v);
            place_component(coloring, g, component, block, image, used);
        }

        EmbeddingMap result{std::move(image)};
        if (! is_valid_embedding(coloring, Color::blue, g, result))
            throw ContractViolation("embed_s3 produced an invalid embedding");
        return result;
    }

    auto embedding_order_bound(size_t s, size_t m) -> double
    {
        if (s < 3)
            throw DomainError("embedding_order_bound needs s >= 3");
        double md = static_cast<double>(m), sd = static_cast<double>(s);
        if (s == 3)
            return 3.0 * md;
        double log_m = std::log(md);
        if (log_m <= 0.0)
            return std::numeric_limits<double>::infinity();
        return std::pow(md, (sd - 1.0) / 2.0) / std::pow(log_m, (sd - 3.0) / 2.0);
    }

    auto red_degree_threshold(size_t s, size_t m, double c1) -> double
    {
        if (s < 4)
            throw DomainError("red_degree_threshold needs s >= 4");
        return c1 * embedding_order_bound(s - 1, m);
    }

    auto blue_clique_order(size_t m) -> size_t
    {
        if (m < 2)
            return 1;
        double md = static_cast<double>(m);
        return std::max<size_t>(1, static_cast<size_t>(std::floor(std::sqrt(md * std::log(md)))));
    }

    auto embed_general(const TwoColoring & coloring, const Graph & g, size_t s, const EmbedConfig & config) -> EmbedOutcome
    {
        if (s < 3)
            throw PreconditionError("embed_general needs s >= 3");
        check_pattern(g);
        if (find_clique(coloring, Color::red, s))
            throw PreconditionError("colouring contains a red K_" + std::to_string(s));

        EmbedOutcome outcome;
        embed_recursive(coloring, g, s, config, outcome);
        if (outcome.map && ! is_valid_embedding(coloring, Color::blue, g, *outcome.map))
            throw ContractViolation("embed_general produced an invalid embedding");
        return outcome;
    }

    auto iterated_blue_cliques(const TwoColoring & coloring, size_t s, size_t k, size_t count, std::uint64_t node_budget)
        -> BlueCliqueExtraction
    {
        if (s < 1 || k < 1)
            throw PreconditionError("iterated_blue_cliques needs s >= 1 and k >= 1");
        if (find_clique(coloring, Color::red, s))
            throw PreconditionError("colouring contains a red K_" + std::to_string(s));

        BlueCliqueExtraction result;
        Bitset available(coloring.order(), true);
        while (result.cliques.size() < count) {
            auto search = search_clique(coloring.blue_graph(), k, available, node_budget);
            if (search.status != SearchStatus::found) {
                result.last_status = search.status;
                return result;
            }
            for (auto v : search.clique)
                available.reset(v);
            result.cliques.push_back(std::move(search.clique));
        }
        result.complete = true;
        return result;
    }
}
