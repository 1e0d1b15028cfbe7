#include "cli.hpp"

#include <ramsey/bounds.hpp>
#include <ramsey/construct.hpp>
#include <ramsey/detect.hpp>
#include <ramsey/embed.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/exact.hpp>
#include <ramsey/io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

using json = nlohmann::ordered_json;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace ramsey::cli
{
    namespace
    {
        constexpr int exit_ok = 0;
        constexpr int exit_negative = 1;
        constexpr int exit_input_error = 2;

        auto one_based(const vector<Vertex> & vertices) -> json
        {
            json result = json::array();
            for (auto v : vertices)
                result.push_back(v + 1);
            return result;
        }

        auto format_number(double x) -> string
        {
            char buffer[64];
            std::snprintf(buffer, sizeof(buffer), "%.10g", x);
            return buffer;
        }

        void emit(std::ostream & out, const json & j)
        {
            out << j.dump(2) << '\n';
        }

        struct BoundsOptions
        {
            size_t s = 0, m = 0;
            optional<size_t> t;
            string graph_file;
            vector<size_t> pq;
            optional<size_t> k;
            size_t chromatic_number = 2;
            vector<string> constants;
            bool as_json = false;
        };

        auto run_bounds(const BoundsOptions & o, std::ostream & out) -> int
        {
            BoundQuery query;
            query.s = o.s;
            query.m = o.m;
            query.t = o.t;
            query.chromatic_number = o.chromatic_number;
            if (! o.graph_file.empty())
                query.h = read_graph_file(o.graph_file);
            if (! o.pq.empty()) {
                if (! o.k)
                    throw DomainError("--pq needs --k");
                query.bipartite = BipartiteQuery{o.pq[0], o.pq[1], *o.k};
            }
            else if (o.k)
                throw DomainError("--k needs --pq");
            for (auto & c : o.constants) {
                auto eq = c.find('=');
                if (eq == string::npos)
                    throw DomainError("--constant expects name=value, got '" + c + "'");
                try {
                    query.constants[c.substr(0, eq)] = std::stod(c.substr(eq + 1));
                }
                catch (const std::exception &) {
                    throw DomainError("--constant value is not a number: '" + c + "'");
                }
            }

            auto reports = evaluate_all(query);
            if (o.as_json) {
                json result = json::array();
                for (auto & r : reports) {
                    json inputs = json::object();
                    for (auto & in : r.inputs)
                        inputs[in.name] = in.value;
                    json item{{"name", r.name}, {"role", to_string(r.role)}, {"inputs", inputs}, {"value", r.value},
                        {"constant_caveat", r.constant_caveat}, {"pair", r.pair}, {"asymptotic", r.asymptotic}};
                    item["exponent"] = r.exponent ? json(r.exponent->to_string()) : json(nullptr);
                    result.push_back(item);
                }
                emit(out, result);
            }
            else
                for (auto & r : reports) {
                    out << r.name << ' ' << format_number(r.value) << ' ' << to_string(r.role);
                    if (r.exponent)
                        out << " exponent=" << r.exponent->to_string();
                    out << "  # " << r.constant_caveat << '\n';
                }
            return exit_ok;
        }

        struct ConstructOptions
        {
            size_t s = 3;
            string graph_file;
            optional<size_t> n;
            optional<double> p;
            size_t trials = 1;
            std::uint64_t seed = 0;
            string out_dir;
            unsigned threads = 1;
            double scale = 1.0;
            std::uint64_t budget = default_node_budget;
        };

        auto run_construct(const ConstructOptions & o, std::ostream & out) -> int
        {
            auto g = read_graph_file(o.graph_file);
            ConstructParams params;
            params.s = o.s;
            params.n_override = o.n;
            params.p_override = o.p;
            params.scale = o.scale;
            params.trials = o.trials;
            params.seed = o.seed;
            params.node_budget = o.budget;
            params.threads = o.threads;
            auto [n, p] = resolve_parameters(params, g);
            auto reports = construct_witness(params, g);

            json trials = json::array();
            optional<size_t> first_witness;
            for (auto & r : reports) {
                if (r.blue_G_status == SearchStatus::absent && ! first_witness)
                    first_witness = r.trial_index;
                trials.push_back({{"trial_index", r.trial_index}, {"packing_size", r.packing_size}, {"red_Ks_free", r.red_Ks_free},
                    {"blue_G_status", to_string(r.blue_G_status)}, {"red_edges_before", r.red_edges_before},
                    {"red_edges_after", r.red_edges_after}});
            }
            json summary{{"s", o.s}, {"n", n}, {"p", p}, {"seed", o.seed}, {"trials", o.trials},
                {"graph", {{"order", g.order()}, {"size", g.size()}}}, {"witness_found", first_witness.has_value()},
                {"first_witness_trial", first_witness ? json(*first_witness) : json(nullptr)}, {"reports", trials}};

            if (! o.out_dir.empty()) {
                std::filesystem::create_directories(o.out_dir);
                for (auto & r : reports) {
                    char name[32];
                    std::snprintf(name, sizeof(name), "trial_%06zu.col", r.trial_index);
                    write_text_file((std::filesystem::path(o.out_dir) / name).string(), serialize_coloring(r.coloring));
                }
                write_text_file((std::filesystem::path(o.out_dir) / "summary.json").string(), summary.dump(2) + "\n");
            }
            emit(out, summary);
            return first_witness ? exit_ok : exit_negative;
        }

        auto run_embed(const string & coloring_file, const string & graph_file, size_t s, double c1, std::uint64_t budget,
            std::ostream & out) -> int
        {
            auto coloring = read_coloring_file(coloring_file);
            auto g = read_graph_file(graph_file);
            auto outcome = embed_general(coloring, g, s, EmbedConfig{c1, budget});
            json branches = json::array();
            for (auto b : outcome.branches)
                branches.push_back(to_string(b));
            json result{{"s", s}, {"status", outcome.ok() ? "embedded" : "failed"}, {"branches", branches}};
            if (outcome.ok())
                result["map"] = one_based(outcome.map->image);
            else
                result["reason"] = outcome.failure;
            emit(out, result);
            return outcome.ok() ? exit_ok : exit_negative;
        }

        auto run_pack(const string & coloring_file, size_t s, bool exact, std::ostream & out) -> int
        {
            auto coloring = read_coloring_file(coloring_file);
            auto packing = max_edge_disjoint_packing(coloring, s, exact ? PackingMode::exact : PackingMode::greedy);
            json cliques = json::array();
            for (auto & c : packing.members)
                cliques.push_back(one_based(c));
            emit(out, {{"s", s}, {"mode", exact ? "exact" : "greedy"}, {"size", packing.size()}, {"cliques", cliques}});
            return exit_ok;
        }

        auto run_exact(const string & h_file, const string & g_file, optional<size_t> cap, size_t pair_cap,
            optional<size_t> witness_order, std::ostream & out) -> int
        {
            auto h = read_graph_file(h_file);
            auto g = read_graph_file(g_file);
            if (witness_order) {
                auto witness = find_witness(*witness_order, h, g, pair_cap);
                json result{{"n", *witness_order}, {"witness", witness.has_value()}};
                if (witness)
                    result["coloring"] = serialize_coloring(*witness);
                emit(out, result);
                return witness ? exit_ok : exit_negative;
            }
            auto n_cap = cap ? *cap : max_order_for_pair_cap(pair_cap);
            auto value = ramsey_number(h, g, n_cap, pair_cap);
            if (value.value)
                emit(out, {{"ramsey", *value.value}});
            else
                emit(out, {{"ramsey", "> " + std::to_string(n_cap)}});
            return exit_ok;
        }

        auto run_gen_union(size_t m, size_t s, const string & out_file, std::ostream & out) -> int
        {
            auto shape = union_of_cliques_shape(m, s);
            auto g = union_of_cliques(m, s);
            json result{{"m", m}, {"s", s}, {"clique_order", shape.clique_order}, {"count", shape.count}, {"order", g.order()},
                {"edges", g.size()}};
            if (out_file.empty())
                result["graph"] = serialize_graph(g);
            else {
                write_text_file(out_file, serialize_graph(g));
                result["file"] = out_file;
            }
            emit(out, result);
            return exit_ok;
        }

        auto tail_json(const char * check, const TailCheck & c) -> json
        {
            return {{"check", check}, {"trials", c.trials}, {"hits", c.hits}, {"empirical", c.empirical}, {"bound", c.bound},
                {"sigma", c.sampling_sigma()}, {"holds", c.holds()}};
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Ramsey numbers of cliques versus graphs of given size: constructions, embeddings, exact search, bounds"};
        app.require_subcommand(1);

        BoundsOptions bounds;
        auto * bounds_cmd = app.add_subcommand("bounds", "Evaluate every bound formula at the given parameters");
        bounds_cmd->add_option("--s", bounds.s, "Order of the red clique K_s")->required();
        bounds_cmd->add_option("--m", bounds.m, "Number of edges of G")->required();
        bounds_cmd->add_option("--t", bounds.t, "Number of edges of H, for the m^{c sqrt t} bound");
        bounds_cmd->add_option("--graph", bounds.graph_file, "Graph file for H, for the rho* bound");
        bounds_cmd->add_option("--pq", bounds.pq, "p q of K_{p,q}")->expected(2);
        bounds_cmd->add_option("--k", bounds.k, "Clique order k for the K_{p,q} / AKS bounds");
        bounds_cmd->add_option("--chromatic", bounds.chromatic_number, "Chromatic number of H (default 2)");
        bounds_cmd->add_option("--constant", bounds.constants, "Override a suppressed constant: name=value");
        bounds_cmd->add_flag("--json", bounds.as_json, "Emit a JSON array");

        ConstructOptions construct;
        auto * construct_cmd = app.add_subcommand("construct", "Random colouring plus clique-deletion recolouring trials");
        construct_cmd->add_option("--s", construct.s, "Forbidden red clique order")->required();
        construct_cmd->add_option("--G", construct.graph_file, "Graph file for G")->required();
        construct_cmd->add_option("--n", construct.n, "Order of K_n (default from the lower-bound formula)");
        construct_cmd->add_option("--p", construct.p, "Red edge probability (default from the formula)");
        construct_cmd->add_option("--trials", construct.trials, "Number of trials")->required();
        construct_cmd->add_option("--seed", construct.seed, "Master seed")->required();
        construct_cmd->add_option("--out", construct.out_dir, "Directory for per-trial colourings and summary.json");
        construct_cmd->add_option("--threads", construct.threads, "Worker threads");
        construct_cmd->add_option("--scale", construct.scale, "Multiplier on the default n");
        construct_cmd->add_option("--budget", construct.budget, "Node budget for each blue-copy search");

        string coloring_file, graph_file, h_file;
        size_t s = 3;
        double c1 = 1.0;
        std::uint64_t budget = default_node_budget;
        auto * embed_cmd = app.add_subcommand("embed", "Embed a blue copy of G in a colouring with no red K_s");
        embed_cmd->add_option("--coloring", coloring_file, "Colouring file")->required();
        embed_cmd->add_option("--G", graph_file, "Graph file for G")->required();
        embed_cmd->add_option("--s", s, "Forbidden red clique order")->required();
        embed_cmd->add_option("--c1", c1, "Multiplier on the red-degree descent threshold");
        embed_cmd->add_option("--budget", budget, "Node budget for the blue clique search");

        bool exact_packing = false;
        auto * pack_cmd = app.add_subcommand("pack", "Edge-disjoint red s-clique packing");
        pack_cmd->add_option("--coloring", coloring_file, "Colouring file")->required();
        pack_cmd->add_option("--s", s, "Clique order")->required();
        pack_cmd->add_flag("--exact", exact_packing, "Maximum instead of maximal (n <= 12)");

        optional<size_t> cap, witness_order;
        size_t pair_cap = default_pair_cap;
        auto * exact_cmd = app.add_subcommand("exact", "Exact r(H, G) by exhaustive search");
        exact_cmd->add_option("--H", h_file, "Graph file for H (forbidden in red)")->required();
        exact_cmd->add_option("--G", graph_file, "Graph file for G (forbidden in blue)")->required();
        exact_cmd->add_option("--cap", cap, "Largest n to try");
        exact_cmd->add_option("--pair-cap", pair_cap, "Largest n(n-1)/2 the search accepts");
        exact_cmd->add_option("--witness", witness_order, "Only search for a witness colouring of K_N");

        size_t m = 0;
        string out_file;
        auto * union_cmd = app.add_subcommand("gen-union", "Disjoint union of cliques with at least m edges");
        union_cmd->add_option("--m", m, "Edge budget")->required();
        union_cmd->add_option("--s", s, "Clique order the construction is tuned against")->required();
        union_cmd->add_option("--out", out_file, "Write the graph file here");

        auto * stats_cmd = app.add_subcommand("stats", "Monte Carlo checks of the tail inequalities");
        stats_cmd->require_subcommand(1);
        size_t trials = 10000;
        std::uint64_t seed = 0;
        double p = 0.0, a = 0.0;
        size_t n = 0, k = 1;
        auto * chernoff_cmd = stats_cmd->add_subcommand("chernoff", "P[X - pm < -a] for X ~ Bin(m, p)");
        chernoff_cmd->add_option("--m", m, "Number of trials of the binomial")->required();
        chernoff_cmd->add_option("--p", p, "Success probability")->required();
        chernoff_cmd->add_option("--a", a, "Deviation")->required();
        chernoff_cmd->add_option("--trials", trials, "Samples");
        chernoff_cmd->add_option("--seed", seed, "Seed");
        auto * tetali_cmd = stats_cmd->add_subcommand("erdos-tetali", "P[X0 >= k] for edge-disjoint red s-cliques in G(n, p)");
        tetali_cmd->add_option("--n", n, "Order (at most 12)")->required();
        tetali_cmd->add_option("--p", p, "Red probability")->required();
        tetali_cmd->add_option("--s", s, "Clique order")->required();
        tetali_cmd->add_option("--k", k, "Threshold")->required();
        tetali_cmd->add_option("--trials", trials, "Samples");
        tetali_cmd->add_option("--seed", seed, "Seed");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }

        try {
            if (*bounds_cmd)
                return run_bounds(bounds, out);
            if (*construct_cmd)
                return run_construct(construct, out);
            if (*embed_cmd)
                return run_embed(coloring_file, graph_file, s, c1, budget, out);
            if (*pack_cmd)
                return run_pack(coloring_file, s, exact_packing, out);
            if (*exact_cmd)
                return run_exact(h_file, graph_file, cap, pair_cap, witness_order, out);
            if (*union_cmd)
                return run_gen_union(m, s, out_file, out);
            if (*chernoff_cmd) {
                auto check = chernoff_tail_check(m, p, a, trials, seed);
                auto j = tail_json("chernoff", check);
                j["m"] = m, j["p"] = p, j["a"] = a, j["seed"] = seed;
                emit(out, j);
                return check.holds() ? exit_ok : exit_negative;
            }
            if (*tetali_cmd) {
                auto check = erdos_tetali_check(n, p, s, k, trials, seed);
                auto j = tail_json("erdos-tetali", check);
                j["n"] = n, j["p"] = p, j["s"] = s, j["k"] = k, j["seed"] = seed;
                j["mu"] = check.mu, j["factorial_bound"] = check.factorial_bound;
                emit(out, j);
                return check.holds() ? exit_ok : exit_negative;
            }
        }
        catch (const ContractViolation & e) {
            err << "internal error: " << e.what() << '\n';
            return exit_negative;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }
        catch (const std::filesystem::filesystem_error & e) {
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }
        return exit_input_error;
    }
}
