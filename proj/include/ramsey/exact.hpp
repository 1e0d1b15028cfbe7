#pragma once

#include <ramsey/graph.hpp>

#include <cstdint>
#include <optional>

namespace ramsey
{
    // Convention throughout: H is forbidden in red, G is forbidden in blue.

    inline constexpr std::size_t default_pair_cap = 36;

    /// No red copy of H and no blue copy of G.
    auto is_witness(const TwoColoring & coloring, const Graph & h, const Graph & g) -> bool;

    struct WitnessSearchStats
    {
        std::uint64_t nodes = 0;
    };

    /// First witness colouring of K_n under a depth-first search over pairs in
    /// lexicographic order, red before blue, pruning as soon as the fixed red
    /// pairs contain H or the fixed blue pairs contain G. When H == G the first
    /// pair is fixed red (colour swap symmetry). Throws CapacityError when
    /// n(n-1)/2 exceeds pair_cap.
    auto find_witness(std::size_t n, const Graph & h, const Graph & g, std::size_t pair_cap = default_pair_cap,
        WitnessSearchStats * stats = nullptr) -> std::optional<TwoColoring>;

    struct RamseyValue
    {
        std::optional<std::size_t> value; ///< r(H, G) when determined
        std::size_t searched_through = 0; ///< largest n examined

        /// r(H, G) > searched_through when value is empty
        auto exceeds_cap() const -> bool { return ! value.has_value(); }
    };

    /// Smallest n <= n_cap with no witness, else "greater than n_cap".
    auto ramsey_number(const Graph & h, const Graph & g, std::size_t n_cap, std::size_t pair_cap = default_pair_cap)
        -> RamseyValue;

    /// Largest n whose pair count fits under pair_cap.
    auto max_order_for_pair_cap(std::size_t pair_cap) -> std::size_t;
}
