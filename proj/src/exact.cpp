#include <ramsey/detect.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/exact.hpp>

#include <string>
#include <vector>

using std::optional;
using std::size_t;
using std::vector;

namespace ramsey
{
    namespace
    {
        class WitnessSearch
        {
        public:
            WitnessSearch(size_t n, const Graph & h, const Graph & g) :
                _h(h), _g(g), _red(n), _blue(n)
            {
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v)
                        _pairs.push_back(Edge{u, v});
            }

            auto run(bool fix_first_red) -> optional<TwoColoring>
            {
                if (search(0, fix_first_red))
                    return TwoColoring(_red);
                return std::nullopt;
            }

            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            // A copy of a pattern with at least one edge in the completed colouring
            // must use the pair fixed last, so checking through that pair suffices.
            auto creates_copy(const Graph & host, const Graph & pattern, const Edge & e) const -> bool
            {
                return find_subgraph_through(host, pattern, e.first, e.second).status == SearchStatus::found;
            }

            auto search(size_t index, bool only_red) -> bool
            {
                ++_nodes;
                if (index == _pairs.size())
                    return true;
                auto & e = _pairs[index];

                _red.set_edge(e.first, e.second, true);
                if (! creates_copy(_red, _h, e) && search(index + 1, false))
                    return true;
                _red.set_edge(e.first, e.second, false);
                if (only_red)
                    return false;

                _blue.set_edge(e.first, e.second, true);
                if (! creates_copy(_blue, _g, e) && search(index + 1, false))
                    return true;
                _blue.set_edge(e.first, e.second, false);
                return false;
            }

            const Graph & _h;
            const Graph & _g;
            Graph _red;
            Graph _blue;
            vector<Edge> _pairs;
            std::uint64_t _nodes = 0;
        };
    }

    auto is_witness(const TwoColoring & coloring, const Graph & h, const Graph & g) -> bool
    {
        return find_copy(coloring, Color::red, h, unlimited_budget).status == SearchStatus::absent &&
            find_copy(coloring, Color::blue, g, unlimited_budget).status == SearchStatus::absent;
    }

    auto find_witness(size_t n, const Graph & h, const Graph & g, size_t pair_cap, WitnessSearchStats * stats)
        -> optional<TwoColoring>
    {
        auto pairs = n * (n > 0 ? n - 1 : 0) / 2;
        if (pairs > pair_cap)
            throw CapacityError("K_" + std::to_string(n) + " has " + std::to_string(pairs) + " pairs, above the cap of " +
                std::to_string(pair_cap));

        // Edgeless patterns are present as soon as they fit.
        if ((h.size() == 0 && h.order() <= n) || (g.size() == 0 && g.order() <= n))
            return std::nullopt;

        WitnessSearch search(n, h, g);
        auto result = search.run(h == g && pairs > 0);
        if (stats)
            stats->nodes = search.nodes();
        return result;
    }

    auto ramsey_number(const Graph & h, const Graph & g, size_t n_cap, size_t pair_cap) -> RamseyValue
    {
        RamseyValue result;
        for (size_t n = 1; n <= n_cap; ++n) {
            result.searched_through = n;
            if (! find_witness(n, h, g, pair_cap)) {
                result.value = n;
                return result;
            }
        }
        return result;
    }

    auto max_order_for_pair_cap(size_t pair_cap) -> size_t
    {
        size_t n = 1;
        while ((n + 1) * n / 2 <= pair_cap)
            ++n;
        return n;
    }
}
