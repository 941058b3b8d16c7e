"""Recognition of the shellable single-bundle families and the class test.

A connected multigraph belongs to the "good" class exactly when it is simple
or matches one of six rigid single-bundle shapes: a path whose end edge is a
bundle (``ptilde``), the same with a pendant vertex pair near the far end
(``stilde``), with the pendant pair joined by an edge (``ttilde``), and primed
variants of each that add one edge from the far bundle endpoint back to the
first path vertex.  Recognition is a structural walk, not isomorphism search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .multigraph import Bundle, Multigraph, PiGraph

__all__ = [
    "FamilyTag",
    "FamilyStructure",
    "InconclusiveSearch",
    "family_structure",
    "family_of",
    "in_g_star",
    "non_shellable_witness",
    "p_tilde",
    "p_tilde_prime",
    "s_tilde",
    "s_tilde_prime",
    "t_tilde",
    "t_tilde_prime",
]

_DISPLAY = {"ptilde": "P̃", "stilde": "S̃", "ttilde": "T̃"}


@dataclass(frozen=True)
class FamilyTag:
    """Shape of a connected component: simple, or one of the bundle families."""

    kind: str  # "simple", "ptilde", "stilde", "ttilde", optionally "_prime"
    n: int  # number of vertices
    m: int = 0  # bundle size; 0 for simple graphs

    def __str__(self):
        if self.kind == "simple":
            return "Simple"
        base, _, prime = self.kind.partition("_")
        mark = "′" if prime else ""
        return f"{_DISPLAY[base]}{mark}_{{{self.n},{self.m}}}"


@dataclass(frozen=True)
class FamilyStructure:
    """A family match together with the data needed to relabel canonically.

    ``spine`` lists the non-endpoint vertices in walk order starting from the
    common neighbour of the bundle endpoints; a pendant pair, if any, sits at
    the end of the spine in ascending original id.  ``inner``/``outer`` name
    the bundle endpoints when the shape distinguishes them (unprimed, n >= 3);
    they are ``None`` for the symmetric shapes.
    """

    tag: FamilyTag
    ends: tuple[int, int]
    inner: int | None
    outer: int | None
    spine: tuple[int, ...]
    leaf_pair: tuple[int, int] | None


def _simple_adjacency(g: Multigraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {w: set() for w in g.vertices}
    for x, y in g.simple_edges:
        adj[x].add(y)
        adj[y].add(x)
    return adj


def family_structure(g: Multigraph) -> FamilyStructure | None:
    """Match a connected graph with one bundle against the six family shapes."""
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if len(g.bundles) != 1:
        return None
    b = g.bundles[0]
    m = len(b.labels)
    u, v = b.u, b.v
    n = g.n
    if n == 2:
        # A simple edge parallel to the bundle is impossible by construction,
        # so the two-vertex case is always the smallest path shape.
        return FamilyStructure(FamilyTag("ptilde", 2, m), (u, v), None, None, (), None)

    adj = _simple_adjacency(g)
    su, sv = adj[u], adj[v]
    primed = bool(su) and bool(sv)
    if primed:
        if su != sv or len(su) != 1:
            return None
        inner = outer = None
        start = next(iter(su))
    else:
        if not su and not sv:
            return None  # unreachable for a connected graph with n > 2
        inner, outer = (u, v) if su else (v, u)
        if len(adj[inner]) != 1:
            return None
        start = next(iter(adj[inner]))

    spine = [start]
    seen = {u, v, start}
    leaf_pair: tuple[int, int] | None = None
    cur = start
    while True:
        nxt = adj[cur] - seen
        if len(nxt) == 0:
            break
        if len(nxt) == 1:
            cur = nxt.pop()
            spine.append(cur)
            seen.add(cur)
            continue
        if len(nxt) == 2:
            leaf_pair = tuple(sorted(nxt))
            spine.extend(leaf_pair)
            seen |= nxt
            break
        return None
    if seen != set(g.vertices):
        return None

    if leaf_pair is None:
        kind = "ptilde"
    else:
        if n < 5 or n % 2 == 0:
            return None
        edge_set = {e for e in g.simple_edges}
        kind = "ttilde" if leaf_pair in edge_set else "stilde"
    if primed:
        kind += "_prime"

    expected: set[tuple[int, int]] = set()
    attach = [inner] if not primed else [u, v]
    for w in attach:
        expected.add(tuple(sorted((w, start))))
    core = spine if leaf_pair is None else spine[:-2]
    for x, y in zip(core, core[1:]):
        expected.add(tuple(sorted((x, y))))
    if leaf_pair is not None:
        hub = core[-1]
        expected.add(tuple(sorted((hub, leaf_pair[0]))))
        expected.add(tuple(sorted((hub, leaf_pair[1]))))
        if kind.startswith("ttilde"):
            expected.add(leaf_pair)
    if expected != set(g.simple_edges):
        return None

    tag = FamilyTag(kind, n, m)
    return FamilyStructure(tag, tuple(sorted((u, v))), inner, outer, tuple(spine), leaf_pair)


def family_of(g: Multigraph) -> FamilyTag | None:
    """Family tag of a connected graph, Simple for bundle-free, None otherwise."""
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if not g.bundles:
        return FamilyTag("simple", g.n)
    st = family_structure(g)
    return None if st is None else st.tag


def in_g_star(g: Multigraph) -> bool:
    """True iff every component is simple or matches one of the six families."""
    return all(family_of(c) is not None for c in g.components())


# ----------------------------------------------------------- constructors


def _bundle(m: int, labels) -> tuple[str, ...]:
    if m < 2:
        raise ValueError("bundle size must be at least 2")
    if labels is None:
        labels = tuple(f"e{i}" for i in range(1, m + 1))
    labels = tuple(labels)
    if len(labels) != m:
        raise ValueError("label count must equal bundle size")
    return labels


def p_tilde(n: int, m: int, labels=None) -> Multigraph:
    """Path on 1..n whose end edge 1-2 is an m-fold bundle."""
    if n < 2:
        raise ValueError("path shape needs at least 2 vertices")
    simple = [(i, i + 1) for i in range(2, n)]
    return Multigraph(range(1, n + 1), simple, [Bundle(1, 2, _bundle(m, labels))])


def p_tilde_prime(n: int, m: int, labels=None) -> Multigraph:
    """p_tilde plus the edge joining the outer bundle endpoint to vertex 3."""
    if n < 3:
        raise ValueError("primed path shape needs at least 3 vertices")
    g = p_tilde(n, m, labels)
    return Multigraph(g.vertices, g.simple_edges + ((1, 3),), g.bundles)


def s_tilde(n: int, m: int, labels=None) -> Multigraph:
    """Bundle-ended path on 1..n-2 with a pendant vertex pair on vertex n-2."""
    if n < 5 or n % 2 == 0:
        raise ValueError("pendant-pair shapes need an odd number >= 5 of vertices")
    simple = [(i, i + 1) for i in range(2, n - 2)]
    simple += [(n - 2, n - 1), (n - 2, n)]
    return Multigraph(range(1, n + 1), simple, [Bundle(1, 2, _bundle(m, labels))])


def t_tilde(n: int, m: int, labels=None) -> Multigraph:
    """s_tilde with the pendant pair joined by an edge."""
    g = s_tilde(n, m, labels)
    return Multigraph(g.vertices, g.simple_edges + ((n - 1, n),), g.bundles)


def s_tilde_prime(n: int, m: int, labels=None) -> Multigraph:
    g = s_tilde(n, m, labels)
    return Multigraph(g.vertices, g.simple_edges + ((1, 3),), g.bundles)


def t_tilde_prime(n: int, m: int, labels=None) -> Multigraph:
    g = t_tilde(n, m, labels)
    return Multigraph(g.vertices, g.simple_edges + ((1, 3),), g.bundles)


# ----------------------------------------------------------- witness search


class InconclusiveSearch(Exception):
    """Witness search skipped candidate intervals above the facet bound."""


def non_shellable_witness(g: Multigraph, *, max_facets: int = 14, budget: int = 10**7):
    """Hunt a non-shellable closed interval among the even posets of all
    admissible pairs of PI-graphs of g.

    Returns ``(pi_graph, admissible_set, (lower, upper))`` for the first
    failing interval, or ``None`` after an exhaustive pass.  Candidate order:
    smaller PI-graphs first, intervals by increasing element count.  Raises
    :class:`InconclusiveSearch` if nothing failed but some intervals exceeded
    the facet bound, so a ``None`` answer is always an actual certificate.
    """
    import numpy as np

    from .evenposet import even_poset
    from .poset import interval as poset_interval
    from .poset import order_complex
    from .shellability import SearchBudgetExceeded, is_shellable_bruteforce

    pairs = g.a_star()
    pairs.sort(key=lambda ha: (len(ha[0].graph.ground_set()), len(ha[1])))
    skipped = 0
    examined = 0
    for pi, a in pairs:
        ep = even_poset(pi.graph, a)
        bp = ep.bounded
        elems = bp.elements
        leq = bp.leq.astype(np.uint16)
        between = leq @ leq  # between[i, j] = number of elements in [i, j]
        candidates = [
            (int(between[i, j]), i, j)
            for i, j in itertools.product(range(len(elems)), repeat=2)
            if leq[i, j]
        ]
        candidates.sort()
        for count, i, j in candidates:
            if count < 4:
                continue  # proper part has at most one element: shellable
            examined += 1
            if examined > budget:
                raise SearchBudgetExceeded(
                    f"witness search exceeded the budget of {budget} intervals"
                )
            sub = poset_interval(bp, elems[i], elems[j])
            comp = order_complex(sub.proper_part())
            if len(comp.facets) > max_facets:
                skipped += 1
                continue
            if is_shellable_bruteforce(comp, max_facets=max_facets) is None:
                return pi, a, (elems[i], elems[j])
    if skipped:
        raise InconclusiveSearch(
            f"{skipped} candidate intervals exceeded the {max_facets}-facet bound"
        )
    return None
