#include "helpers.hpp"

#include <ramsey/construct.hpp>
#include <ramsey/errors.hpp>

#include <doctest.h>

#include <cmath>

using namespace ramsey;
using namespace ramsey::test;

TEST_CASE("theorem1_parameters")
{
    auto [n, p] = theorem1_parameters(3, 1'000'000);
    CHECK(n == 21);
    CHECK(p == doctest::Approx(0.0242464322).epsilon(1e-9));
    CHECK(p == doctest::Approx(std::pow(21.0, -0.5) / 9.0));

    for (std::size_t s = 3; s <= 6; ++s) {
        auto params = theorem1_parameters(s, 5'000'000);
        CHECK(params.n >= 2);
        CHECK(params.p == doctest::Approx(std::pow(static_cast<double>(params.n), -2.0 / (s + 1.0)) / (3.0 * s)));
    }
    CHECK(theorem1_parameters(3, 3).n == 2);

    CHECK_THROWS_AS(theorem1_parameters(3, 2), DomainError);
    CHECK_THROWS_AS(theorem1_parameters(2, 100), DomainError);
}

TEST_CASE("mp > 8 n ln n at the returned parameters once m is past the small-m regime")
{
    // Threshold located by a separate scan: the inequality holds for every m >= 142.
    for (double m = 142; m < 1e12; m *= 1.07) {
        auto mi = static_cast<std::size_t>(m);
        auto [n, p] = theorem1_parameters(3, mi);
        CHECK(static_cast<double>(mi) * p > 8.0 * n * std::log(static_cast<double>(n)));
    }
}

TEST_CASE("random_coloring")
{
    CHECK(random_coloring(7, 0.0, 1).count(Color::red) == 0);
    CHECK(random_coloring(7, 1.0, 1).count(Color::red) == 21);
    CHECK(random_coloring(20, 0.3, 99) == random_coloring(20, 0.3, 99));
    CHECK(! (random_coloring(20, 0.3, 99) == random_coloring(20, 0.3, 100)));
    CHECK_THROWS_AS(random_coloring(5, 1.5, 0), DomainError);
    CHECK_THROWS_AS(random_coloring(5, -0.1, 0), DomainError);
}

TEST_CASE("random_coloring red count has the binomial mean")
{
    // Bin(1225, 0.1): mean 122.5, sd 10.5, so the mean of 10^4 samples has standard error 0.105.
    double total = 0;
    const int samples = 10000;
    for (int seed = 0; seed < samples; ++seed)
        total += static_cast<double>(random_coloring(50, 0.1, trial_seed(2024, seed)).count(Color::red));
    CHECK(std::abs(total / samples - 122.5) < 3 * 0.105);
}

TEST_CASE("recolor_packing examples")
{
    auto [k4, packing] = recolor_packing(all_red(4), 3);
    CHECK(packing.size() == 1);
    CHECK(k4.count(Color::red) == 3);
    CHECK(! has_clique_naive(k4.red_graph(), 3));
    CHECK(k4.red_graph().max_degree() == 3);

    auto [blue, empty] = recolor_packing(TwoColoring(6), 3);
    CHECK(empty.size() == 0);
    CHECK(blue == TwoColoring(6));

    auto [c5, none] = recolor_packing(c5_coloring(), 3);
    CHECK(none.size() == 0);
    CHECK(c5 == c5_coloring());

    CHECK_THROWS_AS(recolor_packing(all_red(4), 2), DomainError);
}

TEST_CASE("recolor_packing removes every red K_s and flips exactly C(s,2) per member")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        auto n = 5 + trial % 10;
        auto s = 3 + trial % 3;
        TwoColoring c(random_graph(n, 0.7, rng));
        auto [after, packing] = recolor_packing(c, s);
        CHECK(! has_clique_naive(after.red_graph(), s));
        CHECK(c.count(Color::red) - after.count(Color::red) == s * (s - 1) / 2 * packing.size());
        // Recolouring only turns red pairs blue.
        for (auto & e : after.red_graph().edges())
            CHECK(c.is_red(e.first, e.second));
    }
}

TEST_CASE("trial seeds are distinct and reproducible")
{
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("construct_witness finds r(K_3,K_3) > 5 witnesses")
{
    ConstructParams params;
    params.s = 3;
    params.n_override = 5;
    params.p_override = 0.5;
    params.trials = 300;
    params.seed = 7;
    auto reports = construct_witness(params, complete_graph(3));
    REQUIRE(reports.size() == 300);
    std::size_t witnesses = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        auto & r = reports[i];
        CHECK(r.trial_index == i);
        CHECK(r.red_Ks_free);
        CHECK(r.red_edges_before - r.red_edges_after == 3 * r.packing_size);
        CHECK(r.coloring.count(Color::red) == r.red_edges_after);
        if (r.blue_G_status == SearchStatus::absent) {
            ++witnesses;
            CHECK(! has_copy_naive(r.coloring.blue_graph(), complete_graph(3)));
            CHECK(! has_clique_naive(r.coloring.red_graph(), 3));
        }
    }
    CHECK(witnesses > 0);
}

TEST_CASE("construct_witness trivial and degenerate inputs")
{
    ConstructParams params;
    params.s = 3;
    params.n_override = 4;
    params.trials = 5;
    for (auto & r : construct_witness(params, complete_graph(10)))
        CHECK(r.blue_G_status == SearchStatus::absent);

    // p = 0: all blue, so the search is just "does K_n contain G".
    params.n_override = 6;
    params.p_override = 0.0;
    for (auto & r : construct_witness(params, complete_graph(6)))
        CHECK(r.blue_G_status == SearchStatus::found);
    for (auto & r : construct_witness(params, complete_graph(7)))
        CHECK(r.blue_G_status == SearchStatus::absent);

    params.trials = 0;
    CHECK_THROWS_AS(construct_witness(params, complete_graph(3)), DomainError);
    params.trials = 1;
    params.p_override = 2.0;
    CHECK_THROWS_AS(construct_witness(params, complete_graph(3)), DomainError);
}

TEST_CASE("construct_witness defaults n and p from the lower-bound formula")
{
    ConstructParams params;
    params.s = 3;
    params.trials = 2;
    params.m = 1'000'000;
    auto resolved = resolve_parameters(params, complete_graph(3));
    CHECK(resolved.n == 21);
    CHECK(resolved.p == doctest::Approx(theorem1_parameters(3, 1'000'000).p));

    params.m = 0;
    CHECK_THROWS_AS(resolve_parameters(params, complete_graph(2)), DomainError);
}

TEST_CASE("construct_witness is independent of thread count")
{
    ConstructParams params;
    params.s = 4;
    params.n_override = 18;
    params.p_override = 0.4;
    params.trials = 24;
    params.seed = 12345;
    auto g = path_graph(5);
    params.threads = 1;
    auto serial = construct_witness(params, g);
    params.threads = 4;
    auto parallel = construct_witness(params, g);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].coloring == parallel[i].coloring);
        CHECK(serial[i].packing_size == parallel[i].packing_size);
        CHECK(serial[i].blue_G_status == parallel[i].blue_G_status);
    }
}

TEST_CASE("chernoff_tail_check")
{
    auto far = chernoff_tail_check(1000, 0.1, 50, 100000, 1);
    CHECK(far.bound == doctest::Approx(std::exp(-12.5)));
    CHECK(far.bound == doctest::Approx(3.7266531721e-06));
    CHECK(far.hits == 0);
    CHECK(far.holds());

    // Exact binomial CDF: P[Bin(10, 1/2) <= 4] = 386/1024.
    auto near = chernoff_tail_check(10, 0.5, 0.1, 100000, 2);
    CHECK(near.bound == doctest::Approx(std::exp(-0.001)));
    double exact = 386.0 / 1024.0;
    double sigma = std::sqrt(exact * (1 - exact) / 100000);
    CHECK(std::abs(near.empirical - exact) < 4 * sigma);
    CHECK(near.holds());

    auto beyond = chernoff_tail_check(20, 0.2, 4.0, 20000, 3);
    CHECK(beyond.hits == 0);
    CHECK(beyond.holds());

    CHECK_THROWS_AS(chernoff_tail_check(0, 0.5, 1, 10, 0), DomainError);
    CHECK_THROWS_AS(chernoff_tail_check(10, 0.0, 1, 10, 0), DomainError);
    CHECK_THROWS_AS(chernoff_tail_check(10, 0.5, 0, 10, 0), DomainError);
}

TEST_CASE("erdos_tetali_check")
{
    auto none = erdos_tetali_check(8, 0.0, 3, 1, 200, 0);
    CHECK(none.empirical == 0.0);
    CHECK(none.holds());

    auto full = erdos_tetali_check(6, 1.0, 3, 1, 50, 0);
    CHECK(full.empirical == 1.0);
    CHECK(full.mu == doctest::Approx(20.0));
    CHECK(full.bound == doctest::Approx(std::exp(1.0) * 20.0));
    CHECK(full.factorial_bound == doctest::Approx(20.0));
    CHECK(full.holds());

    auto mid = erdos_tetali_check(8, 0.3, 3, 3, 10000, 5);
    CHECK(mid.mu == doctest::Approx(56 * 0.027));
    CHECK(mid.holds());
    CHECK(mid.factorial_bound <= mid.bound);

    CHECK_THROWS_AS(erdos_tetali_check(13, 0.3, 3, 1, 10, 0), CapacityError);
    CHECK_THROWS_AS(erdos_tetali_check(8, 0.3, 3, 0, 10, 0), DomainError);
}
