#pragma once

#include <ramsey/detect.hpp>
#include <ramsey/graph.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ramsey
{
    /// splitmix64 finaliser; also the per-trial seed derivation.
    auto splitmix64(std::uint64_t x) -> std::uint64_t;

    /// Seed of trial i under master seed: the (i+1)-th output of a splitmix64
    /// stream started at the master seed.
    auto trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) -> std::uint64_t;

    struct LowerBoundParameters
    {
        std::size_t n;
        double p;
    };

    /// n = floor(scale * (m / ln m)^{(s+1)/(s+3)} / (3 s^3)), at least 2, and
    /// p = n^{-2/(s+1)} / (3 s) evaluated at that n.
    auto theorem1_parameters(std::size_t s, std::size_t m, double scale = 1.0) -> LowerBoundParameters;

    /// Each pair of K_n, in lexicographic order, is red iff one uniform [0,1) draw is < p.
    auto random_coloring(std::size_t n, double p, std::uint64_t seed) -> TwoColoring;

    /// Greedy maximal edge-disjoint red s-clique packing, with every member edge
    /// turned blue. The returned colouring has no red K_s.
    auto recolor_packing(const TwoColoring & coloring, std::size_t s) -> std::pair<TwoColoring, CliquePacking>;

    struct ConstructParams
    {
        std::size_t s = 3;
        std::size_t m = 0; ///< edge budget; 0 means e(G)
        std::optional<std::size_t> n_override;
        std::optional<double> p_override;
        double scale = 1.0;
        std::size_t trials = 1;
        std::uint64_t seed = 0;
        std::uint64_t node_budget = default_node_budget;
        unsigned threads = 1;
    };

    struct TrialReport
    {
        std::size_t trial_index = 0;
        TwoColoring coloring;
        std::size_t packing_size = 0;
        bool red_Ks_free = false;
        SearchStatus blue_G_status = SearchStatus::unknown;
        std::size_t red_edges_before = 0;
        std::size_t red_edges_after = 0;
    };

    /// Order and probability actually used by construct_witness for these params.
    auto resolve_parameters(const ConstructParams & params, const Graph & g) -> LowerBoundParameters;

    /// Runs params.trials independent trials of random colouring, recolouring
    /// and blue-copy search. Reports are in trial order for any thread count.
    auto construct_witness(const ConstructParams & params, const Graph & g) -> std::vector<TrialReport>;

    struct TailCheck
    {
        std::size_t trials = 0;
        std::size_t hits = 0;
        double empirical = 0.0;
        double bound = 0.0;

        /// Standard error of the empirical frequency when the true probability is
        /// at most bound: sqrt(c (1-c) / trials) with c = min(bound, 1/2).
        auto sampling_sigma() const -> double;

        /// empirical <= bound + 3 sigma
        auto holds() const -> bool;
    };

    /// Samples X ~ Bin(m, p) and estimates P[X - pm < -a] against exp(-a^2 / (2pm)).
    auto chernoff_tail_check(std::size_t m, double p, double a, std::size_t trials, std::uint64_t seed) -> TailCheck;

    struct ErdosTetaliCheck : TailCheck
    {
        double mu = 0.0;              ///< C(n,s) p^{C(s,2)}
        double factorial_bound = 0.0; ///< mu^k / k!
    };

    inline constexpr std::size_t erdos_tetali_cap = exact_packing_cap;

    /// Estimates P[X0 >= k], X0 the maximum number of edge-disjoint red s-cliques
    /// in G(n, p), against (e mu / k)^k.
    auto erdos_tetali_check(std::size_t n, double p, std::size_t s, std::size_t k, std::size_t trials, std::uint64_t seed)
        -> ErdosTetaliCheck;
}
