"""Ground truth by exhaustive enumeration, plus reproducible test instances.

The brute-force functions answer the deletion question by trying every
vertex subset, smallest first, so they are slow but obviously correct and
fully independent of the search engine. The generator builds deterministic
random graphs, optionally embedding one of the seven branchable
configurations so tests can target a specific rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random

from . import structures as st
from .graph import Graph

_BRUTE_LIMIT = 20


def _bitmask_adjacency(g: Graph) -> tuple[list[int], list[int]]:
    """Active vertex list and, per vertex, its neighbors as an index bitmask."""
    verts = g.active_vertices()
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in g.neighbors(v):
            masks[i] |= 1 << index[u]
    return verts, masks


def brute_force_decision(g: Graph, d: int, k: int) -> set[int] | None:
    """First deletion set of size <= k in (size, lexicographic) order, or None.

    Tries every subset, so the active vertex count is capped at 20.
    """
    if d < 0 or k < 0:
        raise ValueError("d and k must be nonnegative")
    verts, masks = _bitmask_adjacency(g)
    m = len(verts)
    if m > _BRUTE_LIMIT:
        raise ValueError(f"brute force is capped at {_BRUTE_LIMIT} vertices, got {m}")
    full = (1 << m) - 1
    bit = [1 << i for i in range(m)]
    for size in range(min(k, m) + 1):
        for combo in combinations(range(m), size):
            smask = 0
            for i in combo:
                smask |= bit[i]
            keep = full & ~smask
            if all(
                (masks[i] & keep).bit_count() <= d
                for i in range(m)
                if not smask & bit[i]
            ):
                return {verts[i] for i in combo}
    return None


def brute_force_minimum(g: Graph, d: int) -> set[int]:
    """Smallest deletion set; lexicographically least among the smallest."""
    solution = brute_force_decision(g, d, g.active_count())
    assert solution is not None, "deleting every vertex is always enough"
    return solution


# -- instance generation -----------------------------------------------------


@dataclass(frozen=True)
class PlantSpec:
    """Request to embed one branchable configuration for degree bound d.

    kind is one of "high_degree", "proper_domination", "good_pair",
    "close_triple", "type1_quad", "type2_quad", "proper_triple". x sets the
    shared-neighbor count for good pairs (1..d-2) and proper triples
    (0..d-1); shape picks "cycle" or "path" for type-1 quads.
    """

    kind: str
    d: int
    x: int | None = None
    shape: str | None = None


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic instance recipe: n vertices, edge probability p, seed."""

    n: int
    p: float
    seed: int
    plant: PlantSpec | None = None


def _star(q: int) -> tuple[int, list[tuple[int, int]]]:
    return q + 1, [(0, i) for i in range(1, q + 1)]


def _plant_edges(plant: PlantSpec) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and edge list of the requested configuration.

    Vertices are numbered from 0; the detectors in the structures module
    recognize every construction at its own degree bound d.
    """
    d = plant.d
    if d < 0:
        raise ValueError("plant degree bound must be nonnegative")
    kind = plant.kind

    if kind == "high_degree":
        return _star(d + 2)

    if kind == "proper_domination":
        # The hub of a (d+1)-star is dominated by each of its leaves.
        return _star(d + 1)

    if kind == "good_pair":
        x = 1 if plant.x is None else plant.x
        if not 1 <= x <= d - 2:
            raise ValueError(f"good pair needs 1 <= x <= d-2, got x={x}, d={d}")
        edges = [(0, 1)]
        nxt = 2
        for _ in range(x):
            edges += [(0, nxt), (1, nxt)]
            nxt += 1
        for end in (0, 1):
            for _ in range(d - x):
                edges.append((end, nxt))
                nxt += 1
        return nxt, edges

    if kind == "close_triple":
        if d < 1:
            raise ValueError("close triple needs d >= 1")
        # Path 0-1-2, d-1 vertices adjacent to all three, and one outside
        # neighbor per end, padded with leaves up to degree d+1.
        edges = [(0, 1), (1, 2)]
        nxt = 3
        for _ in range(d - 1):
            edges += [(0, nxt), (1, nxt), (2, nxt)]
            nxt += 1
        for end in (0, 2):
            outer = nxt
            edges.append((end, outer))
            nxt += 1
            for _ in range(d):
                edges.append((outer, nxt))
                nxt += 1
        return nxt, edges

    if kind == "type1_quad":
        if d < 1:
            raise ValueError("type-1 quad needs d >= 1")
        shape = plant.shape or "cycle"
        if shape not in ("cycle", "path"):
            raise ValueError(f"shape must be cycle or path, got {shape!r}")
        edges = [(0, 1), (1, 2), (2, 3)]
        nxt = 4
        if shape == "cycle":
            edges.append((0, 3))
        else:
            for end in (0, 3):
                edges.append((end, nxt))
                nxt += 1
        for a, b in ((0, 1), (2, 3)):
            for _ in range(d - 1):
                edges += [(a, nxt), (b, nxt)]
                nxt += 1
        return nxt, edges

    if kind == "type2_quad":
        if d < 1:
            raise ValueError("type-2 quad needs d >= 1")
        # 4-cycle 0-1-2-3 with d-1 extra shared neighbors per opposite pair,
        # making N(0) = N(2) and N(1) = N(3).
        edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
        nxt = 4
        for a, b in ((0, 2), (1, 3)):
            for _ in range(d - 1):
                edges += [(a, nxt), (b, nxt)]
                nxt += 1
        return nxt, edges

    if kind == "proper_triple":
        if d < 2:
            raise ValueError("proper triple needs d >= 2")
        x = 0 if plant.x is None else plant.x
        if not 0 <= x <= d - 1:
            raise ValueError(f"proper triple needs 0 <= x <= d-1, got x={x}, d={d}")
        # Path 0-1-2 where the center's other neighbors and the ends' other
        # neighbors are all distinct, except x vertices shared by both ends.
        edges = [(0, 1), (1, 2)]
        nxt = 3
        for _ in range(d - 1):
            edges.append((1, nxt))
            nxt += 1
        for _ in range(x):
            edges += [(0, nxt), (2, nxt)]
            nxt += 1
        for end in (0, 2):
            for _ in range(d - x):
                edges.append((end, nxt))
                nxt += 1
        return nxt, edges

    raise ValueError(f"unknown plant kind {plant.kind!r}")


_DETECTORS = {
    "high_degree": st.find_high_degree,
    "proper_domination": st.find_proper_domination,
    "good_pair": st.find_good_pair,
    "close_triple": st.find_close_triple,
    "type1_quad": st.find_type1_quad,
    "type2_quad": st.find_type2_quad,
    "proper_triple": st.find_proper_triple,
}

PLANT_KINDS = tuple(_DETECTORS)


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic graph for (n, p, seed), optionally with a planted part.

    Random edges come from a Mersenne Twister seeded with spec.seed, drawn
    over vertex pairs in ascending (u, v) order with probability p each, so
    equal specs give equal graphs. A plant occupies the lowest-numbered
    vertices with its exact edge set; random edges then connect only the
    remaining vertices, which keeps every planted degree intact. The
    matching detector re-checks the configuration before returning.
    """
    if not 0.0 <= spec.p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {spec.p}")
    if spec.n < 0:
        raise ValueError("vertex count must be nonnegative")
    rng = Random(spec.seed)
    edges: list[tuple[int, int]] = []
    first_free = 0
    if spec.plant is not None:
        first_free, edges = _plant_edges(spec.plant)
        if spec.n < first_free:
            raise ValueError(
                f"{spec.plant.kind} needs {first_free} vertices, spec has {spec.n}"
            )
    for u in range(first_free, spec.n):
        for v in range(u + 1, spec.n):
            if rng.random() < spec.p:
                edges.append((u, v))
    g = Graph(spec.n, edges)
    if spec.plant is not None:
        found = _DETECTORS[spec.plant.kind](g, spec.plant.d)
        assert found is not None, f"planted {spec.plant.kind} was not detected"
    return g
