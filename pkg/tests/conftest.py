"""Shared graph builders and raw definitional scans.

The raw_* functions re-derive each branchable configuration straight from
its definition with plain nested loops, no shortcuts and no shared code
with the detectors, so detector-vs-definition tests compare two
independent implementations.
"""

from itertools import combinations

import pytest

from bddv.graph import Graph


# -- builders ---------------------------------------------------------------


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, list(combinations(range(n), 2)))


def star_graph(leaves):
    """K1,leaves with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def circulant(n, offsets):
    edges = {tuple(sorted((v, (v + o) % n))) for v in range(n) for o in offsets}
    return Graph(n, sorted(edges))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def all_graphs(n):
    """Every labeled graph on n vertices, one per edge-subset bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def disjoint_union(graphs):
    """One graph holding every input side by side, vertices relabeled."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edge_list())
        offset += g.n
    return Graph(offset, edges)


# Hand-checked fixtures for specific branching rules, referenced by tests
# that pin which rule fires at the search root.

def sixreg_natural():
    """6-vertex cubic graph whose first quad at d=2 is the cycle shape."""
    return Graph(6, [(0, 1), (0, 3), (0, 4), (1, 2), (1, 5),
                     (2, 3), (2, 5), (3, 4), (4, 5)])


def sixreg_adversarial():
    """Relabeling of the same graph whose first quad at d=2 is a path shape
    with an outer vertex landing inside the other pair's shared set."""
    return Graph(6, [(0, 1), (0, 4), (0, 5), (1, 2), (1, 5),
                     (2, 3), (2, 4), (3, 4), (3, 5)])


def octahedron_minus_edge():
    """K2,2,2 minus one edge; its minimum at d=2 is a similar-pair quad."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0),
                     (4, 0), (4, 2), (5, 1), (5, 3)])


def close_triple_example():
    """Seven vertices; at d=2 the triple (0,1,2) with shared neighbor 3 and
    outside neighbors 4 and 5 matches the chained-pair definition."""
    return Graph(7, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3),
                     (0, 4), (2, 5), (4, 5), (4, 6), (5, 6)])


# -- raw definitional scans --------------------------------------------------


def raw_close(g, d, u, v):
    return (g.has_edge(u, v) and g.degree(u) == d + 1 and g.degree(v) == d + 1
            and len(g.common_neighbors(u, v)) == d - 1)


def raw_similar(g, d, u, v):
    return (u != v and not g.has_edge(u, v) and g.degree(u) == d + 1
            and g.degree(v) == d + 1 and g.neighbor_set(u) == g.neighbor_set(v))


def raw_dominates(g, d, a, b):
    """a dominates b: every vertex of degree >= d+1 in N[b] lies in N[a]."""
    return all(w == a or g.has_edge(w, a)
               for w in g.closed_neighborhood(b) if g.degree(w) >= d + 1)


def raw_high_degree(g, d):
    return any(g.degree(v) >= d + 2 for v in g.active_vertices())


def raw_proper_domination(g, d):
    for v in g.active_vertices():
        if g.degree(v) != d + 1:
            continue
        for u in g.active_vertices():
            if u == v:
                continue
            if raw_dominates(g, d, u, v):
                return True
            if g.has_edge(v, u) and raw_dominates(g, d, v, u):
                return True
    return False


def raw_good_pair(g, d):
    return any(1 <= len(g.common_neighbors(u, v)) <= d - 2
               for u, v in g.edge_list()
               if g.degree(u) == d + 1 and g.degree(v) == d + 1)


def raw_close_triple(g, d):
    for v2 in g.active_vertices():
        nb = list(g.neighbors(v2))
        for v1 in nb:
            if not raw_close(g, d, v1, v2):
                continue
            for v3 in nb:
                if v3 != v1 and not g.has_edge(v1, v3) and raw_close(g, d, v2, v3):
                    return True
    return False


def raw_type1_quad(g, d):
    for v1 in g.active_vertices():
        for v2 in g.neighbors(v1):
            if not raw_close(g, d, v1, v2):
                continue
            for v3 in g.neighbors(v2):
                if v3 == v1 or g.has_edge(v1, v3):
                    continue
                for v4 in g.neighbors(v3):
                    if v4 in (v1, v2) or g.has_edge(v2, v4):
                        continue
                    if raw_close(g, d, v3, v4):
                        return True
    return False


def raw_type2_quad(g, d):
    for v1 in g.active_vertices():
        for v2 in g.neighbors(v1):
            for v3 in g.active_vertices():
                if v3 in (v1, v2) or not raw_similar(g, d, v1, v3):
                    continue
                if not g.has_edge(v2, v3):
                    continue
                for v4 in g.active_vertices():
                    if (v4 not in (v1, v2, v3) and raw_similar(g, d, v2, v4)
                            and g.has_edge(v3, v4)):
                        return True
    return False


def raw_proper_triple(g, d):
    for v2 in g.active_vertices():
        if g.degree(v2) != d + 1:
            continue
        nb = list(g.neighbors(v2))
        for v1 in nb:
            if g.degree(v1) != d + 1 or raw_close(g, d, v1, v2):
                continue
            for v3 in nb:
                if v3 == v1 or g.has_edge(v1, v3) or g.degree(v3) != d + 1:
                    continue
                if raw_close(g, d, v2, v3) or raw_similar(g, d, v1, v3):
                    continue
                return True
    return False


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)
