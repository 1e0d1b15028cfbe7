#include <ramsey/detect.hpp>
#include <ramsey/errors.hpp>

#include <algorithm>
#include <bitset>
#include <numeric>
#include <string>

using std::optional;
using std::pair;
using std::size_t;
using std::uint64_t;
using std::vector;

namespace ramsey
{
    auto to_string(SearchStatus s) -> const char *
    {
        switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::unknown: return "unknown";
        }
        return "?";
    }

    namespace
    {
        struct BudgetExceeded
        {
        };

        class CliqueSearcher
        {
        public:
            CliqueSearcher(const Graph & g, size_t s, uint64_t budget) :
                _g(g), _s(s), _budget(budget)
            {
            }

            auto run(const Bitset & allowed) -> CliqueSearch
            {
                CliqueSearch result;
                try {
                    if (expand(allowed))
                        result.status = SearchStatus::found, result.clique = _chosen;
                    else
                        result.status = SearchStatus::absent;
                }
                catch (const BudgetExceeded &) {
                    result.status = SearchStatus::unknown;
                }
                result.nodes = _nodes;
                return result;
            }

        private:
            // Upper bound on the clique number of g[p] from a greedy colouring.
            auto colour_bound(const Bitset & p, size_t needed) const -> size_t
            {
                Bitset uncoloured = p;
                size_t colours = 0;
                while (uncoloured.any() && colours < needed) {
                    ++colours;
                    Bitset available = uncoloured;
                    for (auto v = available.first(); v != Bitset::npos; v = available.next(v + 1)) {
                        uncoloured.reset(v);
                        available -= _g.neighbours(v);
                    }
                }
                return uncoloured.any() ? needed : colours;
            }

            auto expand(const Bitset & candidates) -> bool
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded{};
                auto needed = _s - _chosen.size();
                if (needed == 0)
                    return true;
                if (candidates.count() < needed)
                    return false;
                if (needed >= 3 && colour_bound(candidates, needed) < needed)
                    return false;

                Bitset remaining = candidates;
                for (auto v = remaining.first(); v != Bitset::npos; v = remaining.next(v + 1)) {
                    if (remaining.count() < needed)
                        return false;
                    _chosen.push_back(v);
                    remaining.reset(v);
                    if (expand(remaining & _g.neighbours(v)))
                        return true;
                    _chosen.pop_back();
                }
                return false;
            }

            const Graph & _g;
            size_t _s;
            uint64_t _budget;
            uint64_t _nodes = 0;
            vector<Vertex> _chosen;
        };

        class SubgraphMatcher
        {
        public:
            SubgraphMatcher(const Graph & host, const Graph & pattern, uint64_t budget) :
                _host(host), _pattern(pattern), _budget(budget), _image(pattern.order(), 0), _used(host.order())
            {
            }

            auto run(vector<Vertex> order, const vector<Vertex> & pinned_images) -> CopySearch
            {
                CopySearch result;
                if (_pattern.order() > _host.order()) {
                    result.status = SearchStatus::absent;
                    return result;
                }
                _order = complete_order(std::move(order));
                _position.assign(_pattern.order(), 0);
                for (size_t i = 0; i < _order.size(); ++i)
                    _position[_order[i]] = i;
                _earlier.assign(_order.size(), {});
                for (size_t i = 0; i < _order.size(); ++i)
                    _pattern.neighbours(_order[i]).for_each([&](size_t w) {
                        if (_position[w] < i)
                            _earlier[i].push_back(w);
                    });

                try {
                    bool ok = true;
                    for (size_t i = 0; i < pinned_images.size() && ok; ++i)
                        ok = place(i, pinned_images[i]);
                    if (ok && search(pinned_images.size())) {
                        result.status = SearchStatus::found;
                        result.map = EmbeddingMap{_image};
                    }
                    else
                        result.status = SearchStatus::absent;
                }
                catch (const BudgetExceeded &) {
                    result.status = SearchStatus::unknown;
                }
                result.nodes = _nodes;
                return result;
            }

        private:
            // Extends a (possibly empty) prefix: repeatedly take the unplaced vertex
            // with the most placed neighbours, then highest degree, then smallest id.
            auto complete_order(vector<Vertex> order) const -> vector<Vertex>
            {
                auto k = _pattern.order();
                vector<size_t> placed_neighbours(k, 0);
                vector<bool> placed(k, false);
                auto mark = [&](Vertex v) {
                    placed[v] = true;
                    _pattern.neighbours(v).for_each([&](size_t w) { ++placed_neighbours[w]; });
                };
                for (auto v : order)
                    mark(v);
                while (order.size() < k) {
                    optional<Vertex> best;
                    for (Vertex v = 0; v < k; ++v) {
                        if (placed[v])
                            continue;
                        if (! best || placed_neighbours[v] > placed_neighbours[*best] ||
                            (placed_neighbours[v] == placed_neighbours[*best] && _pattern.degree(v) > _pattern.degree(*best)))
                            best = v;
                    }
                    order.push_back(*best);
                    mark(*best);
                }
                return order;
            }

            auto candidates(size_t depth) const -> Bitset
            {
                Bitset result = _used.complement();
                for (auto w : _earlier[depth])
                    result &= _host.neighbours(_image[w]);
                return result;
            }

            auto place(size_t depth, Vertex x) -> bool
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded{};
                auto u = _order[depth];
                if (_used.test(x) || _host.degree(x) < _pattern.degree(u))
                    return false;
                for (auto w : _earlier[depth])
                    if (! _host.has_edge(_image[w], x))
                        return false;
                _image[u] = x;
                _used.set(x);

                // Forward check: every later neighbour of u must still have a home.
                bool viable = true;
                _pattern.neighbours(u).for_each([&](size_t z) {
                    if (! viable || _position[z] <= depth)
                        return;
                    Bitset domain = _host.neighbours(x) - _used;
                    for (auto w : _earlier[_position[z]])
                        if (_position[w] <= depth)
                            domain &= _host.neighbours(_image[w]);
                    viable = domain.any();
                });
                if (! viable)
                    _used.reset(x);
                return viable;
            }

            auto search(size_t depth) -> bool
            {
                if (depth == _order.size())
                    return true;
                auto cand = candidates(depth);
                for (auto x = cand.first(); x != Bitset::npos; x = cand.next(x + 1)) {
                    if (! place(depth, x))
                        continue;
                    if (search(depth + 1))
                        return true;
                    _used.reset(x);
                }
                return false;
            }

            const Graph & _host;
            const Graph & _pattern;
            uint64_t _budget;
            uint64_t _nodes = 0;
            vector<Vertex> _order;
            vector<size_t> _position;
            vector<vector<Vertex>> _earlier;
            vector<Vertex> _image;
            Bitset _used;
        };

        auto all_vertices(size_t n) -> Bitset
        {
            return Bitset(n, true);
        }

        // Lexicographic first-fit packing over s-cliques of `graph`. Edges of
        // chosen cliques are removed from the working graph as we go, so the
        // remaining enumeration only sees cliques disjoint from all members.
        class GreedyPacker
        {
        public:
            GreedyPacker(const Graph & graph, size_t s) :
                _residual(graph), _s(s)
            {
            }

            auto run() -> vector<vector<Vertex>>
            {
                for (Vertex v = 0; v < _residual.order(); ++v) {
                    _chosen.assign(1, v);
                    extend();
                }
                return std::move(_packing);
            }

        private:
            // Returns true when a clique containing the current prefix was taken;
            // the prefix then contains a used edge (when |prefix| >= 2) and cannot grow.
            auto extend() -> bool
            {
                if (_chosen.size() == _s) {
                    for (size_t i = 0; i < _s; ++i)
                        for (size_t j = i + 1; j < _s; ++j)
                            _residual.set_edge(_chosen[i], _chosen[j], false);
                    _packing.push_back(_chosen);
                    return true;
                }
                for (Vertex w = _chosen.back() + 1; w < _residual.order(); ++w) {
                    bool adjacent = true;
                    for (auto c : _chosen)
                        if (! _residual.has_edge(c, w)) {
                            adjacent = false;
                            break;
                        }
                    if (! adjacent)
                        continue;
                    _chosen.push_back(w);
                    bool taken = extend();
                    _chosen.pop_back();
                    if (taken && _chosen.size() >= 2)
                        return true;
                }
                return false;
            }

            Graph _residual;
            size_t _s;
            vector<Vertex> _chosen;
            vector<vector<Vertex>> _packing;
        };

        constexpr size_t max_pairs = exact_packing_cap * (exact_packing_cap - 1) / 2;
        using EdgeMask = std::bitset<max_pairs>;

        class ExactPacker
        {
        public:
            ExactPacker(const Graph & graph, size_t s) :
                _n(graph.order()), _s(s)
            {
                vector<vector<size_t>> pair_index(_n, vector<size_t>(_n, 0));
                size_t next = 0;
                for (Vertex u = 0; u < _n; ++u)
                    for (Vertex v = u + 1; v < _n; ++v)
                        pair_index[u][v] = pair_index[v][u] = next++;

                // Enumerate every s-clique in lexicographic order.
                vector<Vertex> chosen;
                auto enumerate = [&](auto & self, const Bitset & cand) -> void {
                    if (chosen.size() == _s) {
                        EdgeMask mask;
                        for (size_t i = 0; i < _s; ++i)
                            for (size_t j = i + 1; j < _s; ++j)
                                mask.set(pair_index[chosen[i]][chosen[j]]);
                        _cliques.push_back(chosen);
                        _masks.push_back(mask);
                        return;
                    }
                    for (auto v = cand.first(); v != Bitset::npos; v = cand.next(v + 1)) {
                        chosen.push_back(v);
                        Bitset later = cand & graph.neighbours(v);
                        for (auto w = later.first(); w != Bitset::npos && w <= v; w = later.next(w + 1))
                            later.reset(w);
                        self(self, later);
                        chosen.pop_back();
                    }
                };
                enumerate(enumerate, all_vertices(_n));
            }

            auto run(size_t lower_bound) -> vector<vector<Vertex>>
            {
                _best_size = lower_bound;
                vector<size_t> all(_cliques.size());
                std::iota(all.begin(), all.end(), 0);
                _found_better = false;
                solve(all);
                vector<vector<Vertex>> result;
                if (_found_better)
                    for (auto i : _best)
                        result.push_back(_cliques[i]);
                return result;
            }

            auto found_better() const -> bool { return _found_better; }

        private:
            auto upper_bound(const vector<size_t> & cands) const -> size_t
            {
                EdgeMask covered;
                vector<size_t> vertex_degree(_n, 0);
                for (auto c : cands)
                    covered |= _masks[c];
                auto pairs_per_clique = _s * (_s - 1) / 2;
                size_t by_edges = covered.count() / pairs_per_clique;

                // Each clique through v uses s-1 of v's covered edges.
                size_t idx = 0;
                for (Vertex u = 0; u < _n; ++u)
                    for (Vertex v = u + 1; v < _n; ++v, ++idx)
                        if (covered.test(idx))
                            ++vertex_degree[u], ++vertex_degree[v];
                size_t incidences = 0;
                for (auto d : vertex_degree)
                    incidences += d / (_s - 1);
                return std::min({cands.size(), by_edges, incidences / _s});
            }

            void solve(const vector<size_t> & cands)
            {
                if (_current.size() + upper_bound(cands) <= _best_size)
                    return;
                if (cands.empty()) {
                    _best = _current;
                    _best_size = _current.size();
                    _found_better = true;
                    return;
                }

                // Branch on the lowest edge of the first candidate: covered by one
                // of the cliques containing it, or left uncovered.
                size_t edge = 0;
                while (! _masks[cands.front()].test(edge))
                    ++edge;

                vector<size_t> without_edge;
                for (auto c : cands)
                    if (! _masks[c].test(edge))
                        without_edge.push_back(c);

                for (auto c : cands) {
                    if (! _masks[c].test(edge))
                        continue;
                    vector<size_t> next;
                    for (auto d : without_edge)
                        if ((_masks[d] & _masks[c]).none())
                            next.push_back(d);
                    _current.push_back(c);
                    solve(next);
                    _current.pop_back();
                }
                solve(without_edge);
            }

            size_t _n;
            size_t _s;
            vector<vector<Vertex>> _cliques;
            vector<EdgeMask> _masks;
            vector<size_t> _current;
            vector<size_t> _best;
            size_t _best_size = 0;
            bool _found_better = false;
        };
    }

    auto search_clique(const Graph & g, size_t s, const Bitset & allowed, uint64_t node_budget) -> CliqueSearch
    {
        if (s == 0)
            return {SearchStatus::found, {}, 0};
        return CliqueSearcher(g, s, node_budget).run(allowed);
    }

    auto find_clique(const TwoColoring & coloring, Color color, size_t s) -> optional<vector<Vertex>>
    {
        if (s < 1)
            throw DomainError("find_clique needs s >= 1");
        auto result = search_clique(coloring.graph(color), s, all_vertices(coloring.order()));
        if (result.status == SearchStatus::found)
            return result.clique;
        return std::nullopt;
    }

    auto is_valid_embedding(const Graph & host, const Graph & pattern, const EmbeddingMap & map) -> bool
    {
        if (map.image.size() != pattern.order())
            return false;
        vector<bool> hit(host.order(), false);
        for (auto x : map.image) {
            if (x >= host.order() || hit[x])
                return false;
            hit[x] = true;
        }
        for (auto & e : pattern.edges())
            if (! host.has_edge(map.image[e.first], map.image[e.second]))
                return false;
        return true;
    }

    auto is_valid_embedding(const TwoColoring & coloring, Color color, const Graph & pattern, const EmbeddingMap & map) -> bool
    {
        return is_valid_embedding(coloring.graph(color), pattern, map);
    }

    auto find_subgraph(const Graph & host, const Graph & pattern, uint64_t node_budget) -> CopySearch
    {
        return SubgraphMatcher(host, pattern, node_budget).run({}, {});
    }

    auto find_subgraph_through(const Graph & host, const Graph & pattern, Vertex u, Vertex v, uint64_t node_budget) -> CopySearch
    {
        CopySearch result;
        if (! host.has_edge(u, v) || pattern.size() == 0)
            return result;
        uint64_t spent = 0;
        for (auto & e : pattern.edges()) {
            for (auto [a, b] : {pair{e.first, e.second}, pair{e.second, e.first}}) {
                auto remaining = node_budget == unlimited_budget ? unlimited_budget : node_budget - spent;
                auto attempt = SubgraphMatcher(host, pattern, remaining).run({a, b}, {u, v});
                spent += attempt.nodes;
                if (attempt.status != SearchStatus::absent) {
                    attempt.nodes = spent;
                    return attempt;
                }
            }
        }
        result.nodes = spent;
        return result;
    }

    auto find_copy(const TwoColoring & coloring, Color color, const Graph & pattern, uint64_t node_budget) -> CopySearch
    {
        return find_subgraph(coloring.graph(color), pattern, node_budget);
    }

    auto max_edge_disjoint_packing(const TwoColoring & coloring, size_t s, PackingMode mode, Color color) -> CliquePacking
    {
        if (s < 2)
            throw DomainError("clique packing needs s >= 2");
        const auto & graph = coloring.graph(color);
        CliquePacking result{s, GreedyPacker(graph, s).run()};
        if (mode == PackingMode::greedy)
            return result;

        if (coloring.order() > exact_packing_cap)
            throw CapacityError("exact packing is limited to n <= " + std::to_string(exact_packing_cap) + ", got " +
                std::to_string(coloring.order()));
        ExactPacker exact(graph, s);
        auto better = exact.run(result.size());
        if (exact.found_better())
            result.members = std::move(better);
        return result;
    }

    auto max_degree_vertex(const Graph & g, const Bitset & within) -> pair<Vertex, size_t>
    {
        pair<Vertex, size_t> best{Bitset::npos, 0};
        within.for_each([&](size_t v) {
            auto d = g.neighbours(v).intersection_count(within);
            if (best.first == Bitset::npos || d > best.second)
                best = {v, d};
        });
        return best;
    }

    auto max_red_degree_vertex(const TwoColoring & coloring) -> pair<Vertex, size_t>
    {
        if (coloring.order() < 1)
            throw DomainError("max_red_degree_vertex needs n >= 1");
        return max_degree_vertex(coloring.red_graph(), all_vertices(coloring.order()));
    }
}
