#include <ramsey/bounds.hpp>
#include <ramsey/construct.hpp>
#include <ramsey/detect.hpp>
#include <ramsey/embed.hpp>
#include <ramsey/errors.hpp>
#include <ramsey/exact.hpp>
#include <ramsey/io.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ramsey;

namespace
{
    // Rationals cross the boundary as (numerator, denominator); the package turns them into Fractions.
    auto as_pair(const Rational & r) -> std::pair<std::int64_t, std::int64_t>
    {
        return {r.numerator(), r.denominator()};
    }

    auto edge_list(const Graph & g) -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> result;
        for (auto & e : g.edges())
            result.emplace_back(e.first, e.second);
        return result;
    }

    auto graph_from(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw DomainError("edge endpoint out of range");
            g.add_edge(u, v);
        }
        return g;
    }

    auto optional_map(const std::optional<EmbeddingMap> & map) -> std::optional<std::vector<Vertex>>
    {
        if (! map)
            return std::nullopt;
        return map->image;
    }
}

PYBIND11_MODULE(_ramsey, m)
{
    m.doc() = "Ramsey numbers of cliques versus sparse graphs: constructions, embeddings, exact search, bounds";

    auto base = py::register_exception<Error>(m, "RamseyError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("order"))
        .def(py::init(&graph_from), py::arg("order"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("degree", &Graph::degree)
        .def("edges", &edge_list)
        .def("components", &Graph::components)
        .def("complement", &Graph::complement)
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
        });

    py::enum_<Color>(m, "Color").value("red", Color::red).value("blue", Color::blue);

    py::class_<TwoColoring>(m, "TwoColoring")
        .def(py::init<std::size_t>(), py::arg("order"))
        .def(py::init<const Graph &>(), py::arg("red"))
        .def_property_readonly("order", &TwoColoring::order)
        .def_property_readonly("red", &TwoColoring::red_graph)
        .def_property_readonly("blue", &TwoColoring::blue_graph)
        .def("color", &TwoColoring::color)
        .def("set_color", &TwoColoring::set_color)
        .def("count", &TwoColoring::count)
        .def("__eq__", [](const TwoColoring & a, const TwoColoring & b) { return a == b; });

    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("star_graph", &star_graph, py::arg("leaves"));
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("disjoint_union", &disjoint_union);
    m.def("union_of_cliques", &union_of_cliques, py::arg("m"), py::arg("s"));
    m.def("union_of_cliques_shape", [](std::size_t mm, std::size_t s) {
        auto shape = union_of_cliques_shape(mm, s);
        return std::pair{shape.clique_order, shape.count};
    }, py::arg("m"), py::arg("s"));

    m.def("_density", [](const Graph & h) { return as_pair(density(h)); });
    m.def("_rho_star", [](const Graph & h, std::size_t cap) { return as_pair(rho_star(h, cap)); },
        py::arg("h"), py::arg("vertex_cap") = default_rho_star_cap);

    m.def("parse_graph", [](const std::string & text) { return parse_graph(text); });
    m.def("serialize_graph", &serialize_graph);
    m.def("parse_coloring", [](const std::string & text) { return parse_coloring(text); });
    m.def("serialize_coloring", &serialize_coloring);

    m.def("find_clique", &find_clique, py::arg("coloring"), py::arg("color"), py::arg("s"));
    m.def("find_copy", [](const TwoColoring & c, Color color, const Graph & pattern, std::uint64_t budget) {
        auto result = find_copy(c, color, pattern, budget);
        return std::pair{std::string(to_string(result.status)), optional_map(result.map)};
    }, py::arg("coloring"), py::arg("color"), py::arg("pattern"), py::arg("node_budget") = default_node_budget);
    m.def("clique_packing", [](const TwoColoring & c, std::size_t s, bool exact) {
        return max_edge_disjoint_packing(c, s, exact ? PackingMode::exact : PackingMode::greedy).members;
    }, py::arg("coloring"), py::arg("s"), py::arg("exact") = false);

    m.def("random_coloring", &random_coloring, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("theorem1_parameters", [](std::size_t s, std::size_t mm, double scale) {
        auto r = theorem1_parameters(s, mm, scale);
        return std::pair{r.n, r.p};
    }, py::arg("s"), py::arg("m"), py::arg("scale") = 1.0);
    m.def("recolor_packing", [](const TwoColoring & c, std::size_t s) {
        auto [recoloured, packing] = recolor_packing(c, s);
        return std::pair{recoloured, packing.members};
    }, py::arg("coloring"), py::arg("s"));
    m.def("construct", [](const Graph & g, std::size_t s, std::size_t trials, std::uint64_t seed, std::optional<std::size_t> n,
        std::optional<double> p, unsigned threads) {
        ConstructParams params;
        params.s = s;
        params.trials = trials;
        params.seed = seed;
        params.n_override = n;
        params.p_override = p;
        params.threads = threads;
        py::list result;
        std::vector<TrialReport> reports;
        {
            py::gil_scoped_release release;
            reports = construct_witness(params, g);
        }
        for (auto & r : reports) {
            py::dict d;
            d["trial_index"] = r.trial_index;
            d["coloring"] = r.coloring;
            d["packing_size"] = r.packing_size;
            d["red_Ks_free"] = r.red_Ks_free;
            d["blue_G_status"] = to_string(r.blue_G_status);
            d["red_edges_before"] = r.red_edges_before;
            d["red_edges_after"] = r.red_edges_after;
            result.append(d);
        }
        return result;
    }, py::arg("g"), py::arg("s"), py::arg("trials"), py::arg("seed"), py::arg("n") = py::none(), py::arg("p") = py::none(),
        py::arg("threads") = 1);

    m.def("embed_s3", [](const TwoColoring & c, const Graph & g) { return embed_s3(c, g).image; });
    m.def("embed_general", [](const TwoColoring & c, const Graph & g, std::size_t s, double c1) {
        auto outcome = embed_general(c, g, s, EmbedConfig{c1, default_node_budget});
        std::vector<std::string> branches;
        for (auto b : outcome.branches)
            branches.emplace_back(to_string(b));
        return py::make_tuple(optional_map(outcome.map), outcome.failure, branches);
    }, py::arg("coloring"), py::arg("g"), py::arg("s"), py::arg("c1") = 1.0);

    m.def("is_witness", &is_witness, py::arg("coloring"), py::arg("h"), py::arg("g"));
    m.def("find_witness", [](std::size_t n, const Graph & h, const Graph & g, std::size_t pair_cap) {
        return find_witness(n, h, g, pair_cap);
    }, py::arg("n"), py::arg("h"), py::arg("g"), py::arg("pair_cap") = default_pair_cap);
    m.def("ramsey_number", [](const Graph & h, const Graph & g, std::size_t n_cap) {
        return ramsey_number(h, g, n_cap).value;
    }, py::arg("h"), py::arg("g"), py::arg("n_cap") = max_order_for_pair_cap(default_pair_cap));

    m.def("_evaluate_bounds", [](std::size_t s, std::size_t mm, std::optional<std::size_t> t, std::optional<Graph> h,
        std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> pqk, std::map<std::string, double> constants) {
        BoundQuery q;
        q.s = s;
        q.m = mm;
        q.t = t;
        q.h = std::move(h);
        if (pqk)
            q.bipartite = BipartiteQuery{std::get<0>(*pqk), std::get<1>(*pqk), std::get<2>(*pqk)};
        q.constants = std::move(constants);
        py::list result;
        for (auto & r : evaluate_all(q)) {
            py::dict d;
            d["name"] = r.name;
            d["role"] = to_string(r.role);
            d["value"] = r.value;
            d["asymptotic"] = r.asymptotic;
            d["constant_caveat"] = r.constant_caveat;
            d["pair"] = r.pair;
            d["exponent"] = r.exponent ? py::cast(as_pair(*r.exponent)) : py::none();
            result.append(d);
        }
        return result;
    });

    m.def("chernoff_tail_check", [](std::size_t mm, double p, double a, std::size_t trials, std::uint64_t seed) {
        auto c = chernoff_tail_check(mm, p, a, trials, seed);
        return py::dict(py::arg("hits") = c.hits, py::arg("empirical") = c.empirical, py::arg("bound") = c.bound,
            py::arg("sigma") = c.sampling_sigma(), py::arg("holds") = c.holds());
    });
    m.def("erdos_tetali_check", [](std::size_t n, double p, std::size_t s, std::size_t k, std::size_t trials, std::uint64_t seed) {
        auto c = erdos_tetali_check(n, p, s, k, trials, seed);
        return py::dict(py::arg("hits") = c.hits, py::arg("empirical") = c.empirical, py::arg("bound") = c.bound,
            py::arg("sigma") = c.sampling_sigma(), py::arg("holds") = c.holds(), py::arg("mu") = c.mu);
    });
}
