#include <ramsey/construct.hpp>
#include <ramsey/errors.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace ramsey
{
    namespace
    {
        constexpr uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

        // Uniform double in [0, 1) from the top 53 bits; identical on every platform,
        // unlike std::uniform_real_distribution.
        auto uniform01(std::mt19937_64 & rng) -> double
        {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }

        auto binomial(size_t n, size_t k) -> double
        {
            if (k > n)
                return 0.0;
            double result = 1.0;
            for (size_t i = 1; i <= k; ++i)
                result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
            return result;
        }

        void check_probability(double p)
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
        }
    }

    auto splitmix64(uint64_t x) -> uint64_t
    {
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto trial_seed(uint64_t master_seed, uint64_t trial_index) -> uint64_t
    {
        return splitmix64(master_seed + (trial_index + 1) * golden_gamma);
    }

    auto theorem1_parameters(size_t s, size_t m, double scale) -> LowerBoundParameters
    {
        if (s < 3)
            throw DomainError("s must be at least 3, got " + std::to_string(s));
        if (m < 3)
            throw DomainError("m must exceed e so that ln m > 1, got " + std::to_string(m));
        if (! (scale > 0.0))
            throw DomainError("scale must be positive");
        double sd = static_cast<double>(s), md = static_cast<double>(m);
        double n_real = scale * std::pow(md / std::log(md), (sd + 1.0) / (sd + 3.0)) / (3.0 * sd * sd * sd);
        auto n = std::max<size_t>(2, static_cast<size_t>(std::floor(n_real)));
        double p = std::pow(static_cast<double>(n), -2.0 / (sd + 1.0)) / (3.0 * sd);
        return {n, p};
    }

    auto random_coloring(size_t n, double p, uint64_t seed) -> TwoColoring
    {
        check_probability(p);
        std::mt19937_64 rng(seed);
        Graph red(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (uniform01(rng) < p)
                    red.set_edge(u, v, true);
        return TwoColoring(red);
    }

    auto recolor_packing(const TwoColoring & coloring, size_t s) -> std::pair<TwoColoring, CliquePacking>
    {
        if (s < 3)
            throw DomainError("recolor_packing needs s >= 3");
        auto packing = max_edge_disjoint_packing(coloring, s, PackingMode::greedy, Color::red);
        TwoColoring result = coloring;
        for (auto & member : packing.members)
            for (size_t i = 0; i < member.size(); ++i)
                for (size_t j = i + 1; j < member.size(); ++j)
                    result.set_color(member[i], member[j], Color::blue);
        return {std::move(result), std::move(packing)};
    }

    auto resolve_parameters(const ConstructParams & params, const Graph & g) -> LowerBoundParameters
    {
        if (params.trials < 1)
            throw DomainError("trials must be at least 1");
        if (params.s < 3)
            throw DomainError("s must be at least 3, got " + std::to_string(params.s));

        LowerBoundParameters result{0, 0.0};
        if (params.n_override)
            result.n = *params.n_override;
        else
            result.n = theorem1_parameters(params.s, params.m ? params.m : g.size(), params.scale).n;

        if (params.p_override) {
            check_probability(*params.p_override);
            result.p = *params.p_override;
        }
        else {
            double sd = static_cast<double>(params.s);
            result.p = std::min(1.0, std::pow(static_cast<double>(result.n), -2.0 / (sd + 1.0)) / (3.0 * sd));
        }
        return result;
    }

    auto construct_witness(const ConstructParams & params, const Graph & g) -> vector<TrialReport>
    {
        if (g.order() == 0)
            throw DomainError("G must have at least one vertex");
        if (params.s < 3)
            throw DomainError("s must be at least 3, got " + std::to_string(params.s));
        auto [n, p] = resolve_parameters(params, g);

        auto run_trial = [&, n = n, p = p](size_t index) {
            TrialReport report;
            report.trial_index = index;
            auto initial = random_coloring(n, p, trial_seed(params.seed, index));
            auto [recoloured, packing] = recolor_packing(initial, params.s);
            report.red_edges_before = initial.count(Color::red);
            report.red_edges_after = recoloured.count(Color::red);
            report.packing_size = packing.size();
            report.red_Ks_free = ! find_clique(recoloured, Color::red, params.s).has_value();
            report.blue_G_status = find_copy(recoloured, Color::blue, g, params.node_budget).status;
            report.coloring = std::move(recoloured);
            return report;
        };

        vector<TrialReport> reports(params.trials);
        auto threads = std::clamp<size_t>(params.threads, 1, params.trials);
        if (threads == 1) {
            for (size_t i = 0; i < params.trials; ++i)
                reports[i] = run_trial(i);
            return reports;
        }

        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        vector<std::thread> workers;
        for (size_t t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (size_t i; (i = next++) < params.trials;) {
                    try {
                        reports[i] = run_trial(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                    }
                }
            });
        for (auto & w : workers)
            w.join();
        if (failure)
            std::rethrow_exception(failure);
        return reports;
    }

    auto TailCheck::sampling_sigma() const -> double
    {
        if (trials == 0)
            return 0.0;
        double c = std::min(bound, 0.5);
        return std::sqrt(c * (1.0 - c) / static_cast<double>(trials));
    }

    auto TailCheck::holds() const -> bool
    {
        return empirical <= bound + 3.0 * sampling_sigma();
    }

    auto chernoff_tail_check(size_t m, double p, double a, size_t trials, uint64_t seed) -> TailCheck
    {
        if (m < 1)
            throw DomainError("chernoff check needs m >= 1");
        if (! (p > 0.0 && p < 1.0))
            throw DomainError("chernoff check needs 0 < p < 1");
        if (! (a > 0.0))
            throw DomainError("chernoff check needs a > 0");
        if (trials < 1)
            throw DomainError("trials must be at least 1");

        std::mt19937_64 rng(seed);
        double mean = p * static_cast<double>(m);
        TailCheck result;
        result.trials = trials;
        for (size_t t = 0; t < trials; ++t) {
            size_t x = 0;
            for (size_t i = 0; i < m; ++i)
                x += uniform01(rng) < p;
            if (static_cast<double>(x) - mean < -a)
                ++result.hits;
        }
        result.empirical = static_cast<double>(result.hits) / static_cast<double>(trials);
        result.bound = std::exp(-a * a / (2.0 * mean));
        return result;
    }

    auto erdos_tetali_check(size_t n, double p, size_t s, size_t k, size_t trials, uint64_t seed) -> ErdosTetaliCheck
    {
        if (n > erdos_tetali_cap)
            throw CapacityError("erdos_tetali_check uses exact packing, limited to n <= " + std::to_string(erdos_tetali_cap));
        if (s < 3)
            throw DomainError("erdos_tetali_check needs s >= 3");
        if (k < 1)
            throw DomainError("erdos_tetali_check needs k >= 1");
        if (trials < 1)
            throw DomainError("trials must be at least 1");
        check_probability(p);

        ErdosTetaliCheck result;
        result.trials = trials;
        for (size_t t = 0; t < trials; ++t) {
            auto coloring = random_coloring(n, p, trial_seed(seed, t));
            if (max_edge_disjoint_packing(coloring, s, PackingMode::exact).size() >= k)
                ++result.hits;
        }
        result.empirical = static_cast<double>(result.hits) / static_cast<double>(trials);
        result.mu = binomial(n, s) * std::pow(p, static_cast<double>(s * (s - 1) / 2));
        double kd = static_cast<double>(k);
        result.bound = std::pow(std::exp(1.0) * result.mu / kd, kd);
        result.factorial_bound = std::exp(kd * std::log(result.mu) - std::lgamma(kd + 1.0));
        return result;
    }
}
