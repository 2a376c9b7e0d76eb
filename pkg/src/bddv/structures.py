"""Detection of the branchable configurations in bounded-degree deletion.

All detectors work on the active part of a Graph for a fixed degree bound d.
They scan vertices in ascending id order and return the lexicographically
smallest qualifying tuple, or None when the configuration is absent. The
`strict` flag additionally verifies side conditions that are only guaranteed
when no higher-priority configuration exists (the search engine dispatches in
priority order and passes strict=True); violations raise
StructuralAssumptionViolation instead of being silently patched over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class StructuralAssumptionViolation(RuntimeError):
    """A structural guarantee that the branching rules rely on was broken."""


@dataclass(frozen=True)
class HighDegree:
    """A vertex whose degree exceeds d+1, so it cannot keep all neighbors."""

    v: int


@dataclass(frozen=True)
class ProperDomination:
    """A degree-(d+1) vertex v dominated by u, or dominating its neighbor u.

    Vertex a dominates vertex b when every vertex of degree >= d+1 in N[b]
    lies in N[a]. mode is "dominated" (u dominates v) or "dominates"
    (v dominates u); u is a neighbor of v in both modes.
    """

    v: int
    u: int
    mode: str


@dataclass(frozen=True)
class GoodPair:
    """Adjacent degree-(d+1) vertices sharing x neighbors, 1 <= x <= d-2.

    core is the pair plus its shared neighbors; side1/side2 are the private
    neighbors of v1/v2 outside core, each of size d-x.
    """

    v1: int
    v2: int
    core: frozenset[int]
    side1: frozenset[int]
    side2: frozenset[int]
    x: int


@dataclass(frozen=True)
class CloseTriple:
    """Two close pairs {v1,v2}, {v2,v3} whose ends v1, v3 are nonadjacent.

    A close pair is an adjacent degree-(d+1) pair with exactly d-1 shared
    neighbors. center_block is N[v2] minus the ends (v2 plus the d-1
    neighbors shared by all three). outer1/outer3 are the unique neighbors
    of v1/v3 outside N[v2].
    """

    v1: int
    v2: int
    v3: int
    outer1: int
    outer3: int
    center_block: frozenset[int]


@dataclass(frozen=True)
class TypeOneQuad:
    """Two disjoint close pairs {v1,v2}, {v3,v4} inducing a 4-cycle or 4-path.

    For the cycle the edges run v1-v2-v3-v4-v1; for the path v1-v2-v3-v4.
    shared12/shared34 are the d-1 common neighbors of each close pair. For
    the path shape, outer1/outer4 are the unique neighbors of v1 outside
    N[v2] and of v4 outside N[v3] (they may coincide); None for the cycle.
    """

    v1: int
    v2: int
    v3: int
    v4: int
    shape: str
    shared12: frozenset[int]
    shared34: frozenset[int]
    outer1: int | None
    outer4: int | None


@dataclass(frozen=True)
class TypeTwoQuad:
    """Two similar pairs {v1,v3}, {v2,v4} chained into an induced 4-cycle.

    A similar pair is nonadjacent, degree d+1, with identical neighbor sets.
    outside13/outside24 hold each pair's d-1 neighbors outside the quad.
    """

    v1: int
    v2: int
    v3: int
    v4: int
    outside13: frozenset[int]
    outside24: frozenset[int]


@dataclass(frozen=True)
class ProperTriple:
    """Induced path v1-v2-v3 of degree-(d+1) vertices, no close/similar pair.

    ends_shared is N(v1) cap N(v3) minus v2 (size x <= d-1), v1_only and
    v3_only are the ends' unshared neighbors, center_rest is N(v2) minus the
    ends.
    """

    v1: int
    v2: int
    v3: int
    ends_shared: frozenset[int]
    v1_only: frozenset[int]
    v3_only: frozenset[int]
    center_rest: frozenset[int]
    x: int


Structure = (
    HighDegree
    | ProperDomination
    | GoodPair
    | CloseTriple
    | TypeOneQuad
    | TypeTwoQuad
    | ProperTriple
)


# -- pair predicates -------------------------------------------------------


def is_close_pair(g: Graph, d: int, u: int, v: int) -> bool:
    """Adjacent, both degree d+1, exactly d-1 shared neighbors."""
    return (
        g.degree(u) == d + 1
        and g.degree(v) == d + 1
        and g.has_edge(u, v)
        and len(g.common_neighbors(u, v)) == d - 1
    )


def is_similar_pair(g: Graph, d: int, u: int, v: int) -> bool:
    """Nonadjacent, both degree d+1, identical neighbor sets."""
    return (
        u != v
        and g.degree(u) == d + 1
        and g.degree(v) == d + 1
        and not g.has_edge(u, v)
        and g.neighbor_set(u) == g.neighbor_set(v)
    )


def classify_pair(g: Graph, d: int, v1: int, v2: int) -> str:
    """Bucket a vertex pair by its shared-neighbor count x.

    Returns "disjoint" (x = 0), "good" (1 <= x <= d-2) or "close" (x = d-1)
    for adjacent degree-(d+1) pairs; x = 0 wins the d=1 overlap where 0
    also equals d-1. Everything else is "not-applicable": pairs that are
    nonadjacent or of the wrong degree, and the x = d case, where both
    closed neighborhoods coincide and the domination rule takes over.
    """
    if (
        not g.has_edge(v1, v2)
        or g.degree(v1) != d + 1
        or g.degree(v2) != d + 1
    ):
        return "not-applicable"
    x = len(g.common_neighbors(v1, v2))
    if x == 0:
        return "disjoint"
    if x <= d - 2:
        return "good"
    if x == d - 1:
        return "close"
    return "not-applicable"


# -- detectors, in branching priority order --------------------------------


def _bounded_vertices(g: Graph, d: int) -> list[int]:
    """Active vertices of degree exactly d+1, ascending."""
    return [v for v in g.active_vertices() if g.degree(v) == d + 1]


def find_high_degree(g: Graph, d: int) -> HighDegree | None:
    for v in g.active_vertices():
        if g.degree(v) >= d + 2:
            return HighDegree(v)
    return None


def _dominates(g: Graph, d: int, a: int, b: int) -> bool:
    # a dominates b: every degree->=(d+1) vertex of N[b] lies in N[a].
    for w in g.closed_neighborhood(b):
        if g.degree(w) >= d + 1 and w != a and not g.has_edge(w, a):
            return False
    return True


def find_proper_domination(g: Graph, d: int) -> ProperDomination | None:
    """Lex-least (v, u): degree-(d+1) v dominated by u or dominating u.

    Only neighbors can dominate a degree-(d+1) vertex (v itself must land in
    the dominator's closed neighborhood), so the witness scan stays in N(v).
    When both directions hold for the same pair, "dominated" is reported.
    """
    for v in _bounded_vertices(g, d):
        for u in g.neighbors(v):
            if _dominates(g, d, u, v):
                return ProperDomination(v, u, "dominated")
            if _dominates(g, d, v, u):
                return ProperDomination(v, u, "dominates")
    return None


def find_good_pair(g: Graph, d: int) -> GoodPair | None:
    for v1 in _bounded_vertices(g, d):
        for v2 in g.neighbors(v1):
            if v2 <= v1 or g.degree(v2) != d + 1:
                continue
            shared = g.common_neighbors(v1, v2)
            x = len(shared)
            if 1 <= x <= d - 2:
                core = frozenset(shared | {v1, v2})
                return GoodPair(
                    v1=v1,
                    v2=v2,
                    core=core,
                    side1=frozenset(g.neighbor_set(v1) - core),
                    side2=frozenset(g.neighbor_set(v2) - core),
                    x=x,
                )
    return None


def _sole_outside_neighbor(g: Graph, end: int, center: int) -> int:
    # A close pair (end, center) leaves exactly one neighbor of `end`
    # outside N[center]: d+1 neighbors minus center minus d-1 shared ones.
    outside = [w for w in g.neighbors(end) if w != center and not g.has_edge(w, center)]
    assert len(outside) == 1, f"close pair ({end},{center}) broke its neighbor count"
    return outside[0]


def find_close_triple(g: Graph, d: int, strict: bool = False) -> CloseTriple | None:
    for v1 in _bounded_vertices(g, d):
        for v2 in g.neighbors(v1):
            if not is_close_pair(g, d, v1, v2):
                continue
            for v3 in g.neighbors(v2):
                if v3 <= v1 or g.has_edge(v1, v3):
                    continue
                if not is_close_pair(g, d, v2, v3):
                    continue
                outer1 = _sole_outside_neighbor(g, v1, v2)
                outer3 = _sole_outside_neighbor(g, v3, v2)
                if strict and (g.degree(outer1) != d + 1 or g.degree(outer3) != d + 1):
                    raise StructuralAssumptionViolation(
                        f"close triple ({v1},{v2},{v3}): outer vertices "
                        f"{outer1},{outer3} should have degree {d + 1}"
                    )
                block = frozenset(g.closed_neighborhood(v2) - {v1, v3})
                return CloseTriple(v1, v2, v3, outer1, outer3, block)
    return None


def _quad_fields(g: Graph, d: int, v1: int, v2: int, v3: int, v4: int,
                 shape: str, strict: bool) -> TypeOneQuad:
    shared12 = frozenset(g.common_neighbors(v1, v2))
    shared34 = frozenset(g.common_neighbors(v3, v4))
    if strict and shared12 & shared34:
        raise StructuralAssumptionViolation(
            f"type-1 quad ({v1},{v2},{v3},{v4}): shared neighbor sets overlap "
            f"on {sorted(shared12 & shared34)}"
        )
    outer1 = outer4 = None
    if shape == "path":
        outer1 = _sole_outside_neighbor(g, v1, v2)
        outer4 = _sole_outside_neighbor(g, v4, v3)
    return TypeOneQuad(v1, v2, v3, v4, shape, shared12, shared34, outer1, outer4)


def find_type1_quad(g: Graph, d: int, strict: bool = False) -> TypeOneQuad | None:
    """Lex-least (v1,v2,v3,v4) over both shapes, cycle and path together.

    The nested ascending scans enumerate tuples in lexicographic order, and
    any tuple passing the shared checks is forced into exactly one shape by
    the v1-v4 edge, so the first hit is the overall minimum.
    """
    for v1 in _bounded_vertices(g, d):
        for v2 in g.neighbors(v1):
            if not is_close_pair(g, d, v1, v2):
                continue
            for v3 in g.neighbors(v2):
                if v3 == v1 or g.has_edge(v1, v3):
                    continue
                for v4 in g.neighbors(v3):
                    if v4 in (v1, v2) or g.has_edge(v2, v4):
                        continue
                    if not is_close_pair(g, d, v3, v4):
                        continue
                    shape = "cycle" if g.has_edge(v1, v4) else "path"
                    return _quad_fields(g, d, v1, v2, v3, v4, shape, strict)
    return None


def find_type2_quad(g: Graph, d: int, strict: bool = False) -> TypeTwoQuad | None:
    for v1 in _bounded_vertices(g, d):
        n1 = g.neighbor_set(v1)
        for v2 in g.neighbors(v1):
            if g.degree(v2) != d + 1:
                continue
            n2 = g.neighbor_set(v2)
            for v3 in g.active_vertices():
                if v3 in (v1, v2) or v3 in n1 or g.degree(v3) != d + 1:
                    continue
                if g.neighbor_set(v3) != n1:
                    continue
                for v4 in g.active_vertices():
                    if v4 in (v1, v2, v3) or v4 in n2 or g.degree(v4) != d + 1:
                        continue
                    if g.neighbor_set(v4) != n2:
                        continue
                    outside13 = frozenset(n1 - {v2, v4})
                    outside24 = frozenset(n2 - {v1, v3})
                    if strict and outside13 & outside24:
                        raise StructuralAssumptionViolation(
                            f"type-2 quad ({v1},{v2},{v3},{v4}): outside sets "
                            f"overlap on {sorted(outside13 & outside24)}"
                        )
                    return TypeTwoQuad(v1, v2, v3, v4, outside13, outside24)
    return None


def find_proper_triple(g: Graph, d: int, strict: bool = False) -> ProperTriple | None:
    for v1 in _bounded_vertices(g, d):
        for v2 in g.neighbors(v1):
            if g.degree(v2) != d + 1 or is_close_pair(g, d, v1, v2):
                continue
            for v3 in g.neighbors(v2):
                if v3 <= v1 or g.degree(v3) != d + 1 or g.has_edge(v1, v3):
                    continue
                if is_close_pair(g, d, v2, v3) or is_similar_pair(g, d, v1, v3):
                    continue
                if strict:
                    bad12 = g.common_neighbors(v1, v2)
                    bad23 = g.common_neighbors(v2, v3)
                    if bad12 or bad23:
                        raise StructuralAssumptionViolation(
                            f"proper triple ({v1},{v2},{v3}): expected no shared "
                            f"neighbors along the path edges, found "
                            f"{sorted(bad12)} / {sorted(bad23)}"
                        )
                n1, n3 = g.neighbor_set(v1), g.neighbor_set(v3)
                ends_shared = frozenset((n1 & n3) - {v2})
                assert len(ends_shared) <= d - 1, "similar-pair filter failed"
                return ProperTriple(
                    v1=v1,
                    v2=v2,
                    v3=v3,
                    ends_shared=ends_shared,
                    v1_only=frozenset(n1 - n3),
                    v3_only=frozenset(n3 - n1),
                    center_rest=frozenset(g.neighbor_set(v2) - {v1, v3}),
                    x=len(ends_shared),
                )
    return None
