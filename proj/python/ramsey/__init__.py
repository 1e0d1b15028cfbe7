"""Ramsey numbers of cliques versus sparse graphs."""

from fractions import Fraction

from ._ramsey import (
    CapacityError,
    Color,
    ContractViolation,
    DomainError,
    Graph,
    ParseError,
    PreconditionError,
    RamseyError,
    TwoColoring,
    chernoff_tail_check,
    clique_packing,
    complete_bipartite_graph,
    complete_graph,
    construct,
    cycle_graph,
    disjoint_union,
    embed_general,
    embed_s3,
    erdos_tetali_check,
    find_clique,
    find_copy,
    find_witness,
    is_witness,
    parse_coloring,
    parse_graph,
    path_graph,
    ramsey_number,
    random_coloring,
    recolor_packing,
    serialize_coloring,
    serialize_graph,
    star_graph,
    theorem1_parameters,
    union_of_cliques,
    union_of_cliques_shape,
)
from . import _ramsey


def density(h):
    """(e(H) - 1) / (v(H) - 2) as a Fraction."""
    return Fraction(*_ramsey._density(h))


def rho_star(h, vertex_cap=20):
    """Maximum density over subgraphs with at least three vertices."""
    return Fraction(*_ramsey._rho_star(h, vertex_cap))


def evaluate_bounds(s, m, t=None, h=None, pqk=None, constants=None):
    """Every bound report available for these inputs; exponents come back as Fractions."""
    reports = _ramsey._evaluate_bounds(s, m, t, h, pqk, dict(constants or {}))
    for r in reports:
        if r["exponent"] is not None:
            r["exponent"] = Fraction(*r["exponent"])
    return reports


__all__ = [name for name in dir() if not name.startswith("_")]
