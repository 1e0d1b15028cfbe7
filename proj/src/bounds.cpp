#include <ramsey/bounds.hpp>
#include <ramsey/errors.hpp>

#include <cmath>
#include <string>

using std::size_t;
using std::string;
using std::vector;

namespace ramsey
{
    namespace
    {
        constexpr const char * suppressed = "asymptotic: unspecified constant taken as 1";

        auto as_double(size_t x) -> double
        {
            return static_cast<double>(x);
        }

        class Reporter
        {
        public:
            explicit Reporter(const BoundQuery & query) :
                _query(query)
            {
            }

            void add(BoundReport report)
            {
                auto c = _query.constants.find(report.name);
                if (report.asymptotic && c != _query.constants.end()) {
                    report.value *= c->second;
                    report.constant_caveat = "asymptotic: constant overridden to " + std::to_string(c->second);
                }
                if (! std::isfinite(report.value) || report.value <= 0.0)
                    throw DomainError(report.name + " is not a finite positive number at these inputs");
                _reports.push_back(std::move(report));
            }

            auto reports() -> vector<BoundReport> { return std::move(_reports); }

        private:
            const BoundQuery & _query;
            vector<BoundReport> _reports;
        };
    }

    auto to_string(BoundRole r) -> const char *
    {
        switch (r) {
        case BoundRole::lower: return "lower";
        case BoundRole::upper: return "upper";
        case BoundRole::equality: return "equality";
        }
        return "?";
    }

    auto efrs_lower_exponent(size_t s) -> Rational
    {
        return Rational(static_cast<std::int64_t>(s), static_cast<std::int64_t>(s + 2));
    }

    auto theorem1_lower_exponent(size_t s) -> Rational
    {
        return Rational(static_cast<std::int64_t>(s + 1), static_cast<std::int64_t>(s + 3));
    }

    auto theorem1_upper_exponent(size_t s) -> Rational
    {
        return Rational(static_cast<std::int64_t>(s) - 1, static_cast<std::int64_t>(s));
    }

    auto density_exponent(const Rational & rho) -> Rational
    {
        return rho / (Rational(1) + rho);
    }

    auto rho_star_complete_bipartite(size_t p, size_t q) -> Rational
    {
        if (p + q < 3)
            throw DomainError("K_{p,q} needs at least three vertices");
        std::optional<Rational> best;
        for (size_t a = 0; a <= p; ++a)
            for (size_t b = 0; b <= q; ++b) {
                if (a + b < 3)
                    continue;
                Rational candidate(static_cast<std::int64_t>(a * b) - 1, static_cast<std::int64_t>(a + b) - 2);
                if (! best || candidate > *best)
                    best = candidate;
            }
        return *best;
    }

    auto evaluate_all(const BoundQuery & query) -> vector<BoundReport>
    {
        auto s = query.s, m = query.m;
        if (s < 3)
            throw DomainError("s must be at least 3, got " + std::to_string(s));
        if (m < 3)
            throw DomainError("m must exceed e so that ln m > 1, got " + std::to_string(m));

        double md = as_double(m), sd = as_double(s), log_m = std::log(md);
        vector<BoundInput> sm{{"s", sd}, {"m", md}};
        Reporter out(query);

        out.add({"efrs_diagonal_min", BoundRole::equality, {{"m", md}}, md / log_m, string(suppressed) + " (Theta: both sides)",
            "", true, Rational(1)});

        auto efrs_lower = efrs_lower_exponent(s);
        auto upper_exp = theorem1_upper_exponent(s);
        out.add({"efrs_min_lower", BoundRole::lower, sm, std::pow(md, efrs_lower.to_double()), suppressed, "efrs_min_rKs", true,
            efrs_lower});
        out.add({"efrs_min_upper", BoundRole::upper, sm, std::pow(md, upper_exp.to_double()), suppressed, "efrs_min_rKs", true,
            upper_exp});

        auto thm1_lower = theorem1_lower_exponent(s);
        out.add({"thm1_lower", BoundRole::lower, sm, std::pow(md / log_m, thm1_lower.to_double()), suppressed, "min_rKs", true,
            thm1_lower});
        out.add({"thm1_upper", BoundRole::upper, sm, std::pow(md, upper_exp.to_double()) / std::pow(log_m, (sd - 2.0) / sd),
            suppressed, "min_rKs", true, upper_exp});

        if (s == 3) {
            out.add({"sidorenko_upper", BoundRole::upper, {{"m", md}}, 2.0 * md + 1.0,
                "exact for every G with m edges and no isolated vertices", "max_rK3", false, Rational(1)});
            out.add({"tree_equality", BoundRole::equality, {{"m", md}}, 2.0 * md + 1.0, "exact for every tree with m edges",
                "max_rK3", false, Rational(1)});
        }

        out.add({"thm2_upper", BoundRole::upper, sm, std::pow(md, (sd - 1.0) / 2.0) / std::pow(log_m, (sd - 3.0) / 2.0),
            string(suppressed) + "; requires G without isolated vertices", "max_rKs", true,
            Rational(static_cast<std::int64_t>(s) - 1, 2)});

        if (query.h) {
            auto rho = rho_star(*query.h, query.rho_star_cap);
            auto exponent = density_exponent(rho);
            out.add({"thm3_lower", BoundRole::lower,
                {{"m", md}, {"v_H", as_double(query.h->order())}, {"e_H", as_double(query.h->size())}, {"rho_star", rho.to_double()}},
                std::pow(md / log_m, exponent.to_double()), string(suppressed) + "; rho* = " + rho.to_string(), "", true, exponent});
        }

        if (query.bipartite) {
            auto [p, q, k] = *query.bipartite;
            if (p < 1 || q < 1)
                throw DomainError("K_{p,q} needs p, q >= 1");
            if (k < 2)
                throw DomainError("k must be at least 2 so that ln k > 0");
            double pd = as_double(p), kd = as_double(k), log_k = std::log(kd);
            out.add({"aks_offdiag_upper", BoundRole::upper, {{"s", sd}, {"k", kd}},
                std::pow(kd, sd - 1.0) / std::pow(log_k, sd - 2.0), string(suppressed) + " (exponent is in k)", "", true,
                Rational(static_cast<std::int64_t>(s) - 1)});
            out.add({"kst_clique_upper", BoundRole::upper, {{"p", pd}, {"q", as_double(q)}, {"k", kd}}, std::pow(kd, pd),
                string(suppressed) + " (exponent is in k)", "", true, Rational(static_cast<std::int64_t>(p))});

            auto union_exp = Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(p + 1));
            out.add({"kpq_union_upper", BoundRole::upper, {{"p", pd}, {"q", as_double(q)}, {"m", md}},
                std::pow(md, union_exp.to_double()), string(suppressed) + "; G a disjoint union of cliques of order m^{1/(p+1)}",
                "kpq", true, union_exp});
            if (p + q >= 3) {
                auto rho = rho_star_complete_bipartite(p, q);
                auto exponent = density_exponent(rho);
                out.add({"kpq_thm3_lower", BoundRole::lower, {{"p", pd}, {"q", as_double(q)}, {"m", md}, {"rho_star", rho.to_double()}},
                    std::pow(md / log_m, exponent.to_double()), string(suppressed) + "; rho* = " + rho.to_string(), "kpq", true,
                    exponent});
            }
        }

        if (query.t) {
            double td = as_double(*query.t), ell = as_double(query.chromatic_number);
            if (*query.t < 1)
                throw DomainError("t must be at least 1");
            out.add({"prop_upper", BoundRole::upper, {{"t", td}, {"m", md}, {"chromatic_number", ell}},
                std::exp(2.0 * ell * std::sqrt(td) * log_m),
                "exponent 2*chromatic_number*sqrt(t) for sufficiently large m; chromatic number " +
                    std::to_string(query.chromatic_number) + (query.chromatic_number == 2 ? " is the default, not measured" : ""),
                "", true, std::nullopt});
        }

        return out.reports();
    }
}
