"""Shared test oracle: color-graph metrics by brute path enumeration."""

from math import inf

from ballsat.colors import ALL_COLORS, DOTTED_EDGES, SOLID_EDGES


def enumerate_path_metrics():
    """Minimum solid/dotted edge counts over every simple directed path,
    found by plain depth-first enumeration; independent of the relaxation
    used to build the production tables."""
    adjacency = [(a, b, "solid") for a, b in SOLID_EDGES]
    adjacency += [(a, b, "dotted") for a, b in DOTTED_EDGES]
    best_d = {(a, b): (0 if a == b else inf) for a in ALL_COLORS for b in ALL_COLORS}
    best_cost = dict(best_d)

    def walk(node, visited, solid_used, dotted_used, source):
        for a, b, kind in adjacency:
            if a != node or b in visited:
                continue
            ns = solid_used + (kind == "solid")
            nd = dotted_used + (kind == "dotted")
            best_d[(source, b)] = min(best_d[(source, b)], ns)
            best_cost[(source, b)] = min(best_cost[(source, b)], nd)
            walk(b, visited | {b}, ns, nd, source)

    for source in ALL_COLORS:
        walk(source, {source}, 0, 0, source)
    return best_d, best_cost


ORACLE_D, ORACLE_COST = enumerate_path_metrics()
