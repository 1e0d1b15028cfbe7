#pragma once

#include <ramsey/graph.hpp>
#include <ramsey/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    enum class BoundRole
    {
        lower,
        upper,
        equality
    };

    auto to_string(BoundRole r) -> const char *;

    struct BoundInput
    {
        std::string name;
        double value;
    };

    /// One bound formula evaluated at concrete inputs. Asymptotic reports have
    /// their unspecified constant set to 1 unless overridden; they describe growth,
    /// not certified finite-m values.
    struct BoundReport
    {
        std::string name;
        BoundRole role = BoundRole::upper;
        std::vector<BoundInput> inputs;
        double value = 0.0;
        std::string constant_caveat;
        std::string pair;  ///< lower/upper reports of the same quantity share this tag
        bool asymptotic = true;
        std::optional<Rational> exponent; ///< exponent of the leading power, when rational
    };

    struct BipartiteQuery
    {
        std::size_t p;
        std::size_t q;
        std::size_t k;
    };

    struct BoundQuery
    {
        std::size_t s = 3;
        std::size_t m = 0;
        std::optional<std::size_t> t;
        std::optional<Graph> h;
        std::optional<BipartiteQuery> bipartite;
        std::size_t chromatic_number = 2;      ///< of H, for the m^{c sqrt t} report
        std::map<std::string, double> constants; ///< per-report multiplier overrides, keyed by report name
        std::size_t rho_star_cap = default_rho_star_cap;
    };

    auto efrs_lower_exponent(std::size_t s) -> Rational;      ///< s/(s+2)
    auto theorem1_lower_exponent(std::size_t s) -> Rational;  ///< (s+1)/(s+3)
    auto theorem1_upper_exponent(std::size_t s) -> Rational;  ///< (s-1)/s
    auto density_exponent(const Rational & rho) -> Rational;  ///< rho/(1+rho)

    /// rho*(K_{p,q}) from the induced K_{a,b} subgraphs, without subset enumeration.
    auto rho_star_complete_bipartite(std::size_t p, std::size_t q) -> Rational;

    /// Every report whose inputs are available. Throws DomainError for s < 3,
    /// m < 3 (ln m must exceed 1), or a report value that is not finite.
    auto evaluate_all(const BoundQuery & query) -> std::vector<BoundReport>;
}
