"""Shared builders and frozen expected values for the test suite.

Reference objects used across several test modules: small multigraph hosts,
a hand-labeled six-element poset with a known chain labeling, the minimal
triangulation of the projective plane, the frozen falling-chain sets of three
worked bundle-path pairs, the closed-form Betti table, and the generated
corpus of single-bundle family instances used by the sweep tests.
"""

from __future__ import annotations

import itertools

from evenposets.classify import (
    p_tilde,
    p_tilde_prime,
    s_tilde,
    s_tilde_prime,
    t_tilde,
    t_tilde_prime,
)
from evenposets.evenposet import canonical_labeling, even_poset
from evenposets.multigraph import Bundle, Multigraph
from evenposets.poset import from_order

# --------------------------------------------------------------------------
# Small reference hosts.


def two_bundle_host() -> Multigraph:
    """Four vertices: bundle ab on 1-2, bundle cde on 2-3, simple edge 3-4."""
    return Multigraph(
        range(1, 5), [(3, 4)], [Bundle(1, 2, ("a", "b")), Bundle(2, 3, ("c", "d", "e"))]
    )


def path4() -> Multigraph:
    return Multigraph(range(1, 5), [(1, 2), (2, 3), (3, 4)])


def end_bundle_path4() -> Multigraph:
    """Bundle ab on 1-2, then simple path 2-3-4."""
    return Multigraph(range(1, 5), [(2, 3), (3, 4)], [Bundle(1, 2, ("a", "b"))])


def middle_bundle_path4() -> Multigraph:
    """Simple edge 1-2, bundle cde on 2-3, simple edge 3-4."""
    return Multigraph(range(1, 5), [(1, 2), (3, 4)], [Bundle(2, 3, ("c", "d", "e"))])


def path3() -> Multigraph:
    return Multigraph(range(1, 4), [(1, 2), (2, 3)])


def end_bundle_path3() -> Multigraph:
    """Bundle ab on 1-2 plus simple edge 2-3."""
    return Multigraph(range(1, 4), [(2, 3)], [Bundle(1, 2, ("a", "b"))])


def middle_bundle_path3() -> Multigraph:
    """Simple edge 1-2 plus bundle cde on 2-3."""
    return Multigraph(range(1, 4), [(1, 2)], [Bundle(2, 3, ("c", "d", "e"))])


def witness_host5() -> Multigraph:
    """Five vertices: edges 1-3, 2-4, 4-5 and bundle ab on 1-2.

    Both of its admissible sets give shellable even posets, yet the graph
    lies outside the good class: the four-vertex subgraph below carries a
    non-shellable pair.
    """
    return Multigraph(range(1, 6), [(1, 3), (2, 4), (4, 5)], [Bundle(1, 2, ("a", "b"))])


def witness_subgraph4() -> Multigraph:
    """Four vertices: edges 1-3, 2-4 and bundle ab on 1-2."""
    return Multigraph(range(1, 5), [(1, 3), (2, 4)], [Bundle(1, 2, ("a", "b"))])


def p53_host() -> Multigraph:
    """Two-endpoint bundle path: bundle a1,a2,b1 on 1-2, path 2-3-4-5."""
    return Multigraph(
        range(1, 6), [(2, 3), (3, 4), (4, 5)], [Bundle(1, 2, ("a1", "a2", "b1"))]
    )


def pp44_host() -> Multigraph:
    """Bundle a1,a2,b1,b2 on 1-2 with chord 1-3 and edge 3-4."""
    return Multigraph(
        range(1, 5), [(1, 3), (3, 4)], [Bundle(1, 2, ("a1", "a2", "b1", "b2"))]
    )


def p65_canonical() -> Multigraph:
    """Canonically labeled six-vertex bundle path with a five-edge bundle."""
    return Multigraph(
        range(1, 7),
        [(1, 3), (3, 4), (4, 5), (5, 6)],
        [Bundle(1, 2, ("a1", "a2", "a3", "a4", "b1"))],
    )


# --------------------------------------------------------------------------
# Hand-labeled six-element poset: two stacked diamonds a < {b,c} < {d,e} < f.

DOUBLE_DIAMOND_COVERS = {
    ("a", "b"),
    ("a", "c"),
    ("b", "d"),
    ("b", "e"),
    ("c", "d"),
    ("c", "e"),
    ("d", "f"),
    ("e", "f"),
}

# Explicit chain labels picked so that a<c<d<f is the unique falling chain
# and every rooted interval has a unique strictly increasing chain.
DOUBLE_DIAMOND_LABELS = {
    ("a", "b"): 1,
    ("a", "c"): 3,
    ("a", "b", "d"): 2,
    ("a", "b", "e"): 3,
    ("a", "c", "d"): 2,
    ("a", "c", "e"): 1,
    ("a", "b", "d", "f"): 3,
    ("a", "b", "e", "f"): 2,
    ("a", "c", "d", "f"): 1,
    ("a", "c", "e", "f"): 2,
}


def double_diamond():
    """Bounded poset on elements a..f with the covers above."""

    def leq(x, y):
        if x == y:
            return True
        frontier = {x}
        while frontier:
            frontier = {b for (u, b) in DOUBLE_DIAMOND_COVERS if u in frontier}
            if y in frontier:
                return True
        return False

    return from_order("abcdef", leq).bounded()


# --------------------------------------------------------------------------
# Minimal 6-vertex triangulation of the real projective plane.  Every edge
# of K6 appears; each vertex link is a 5-cycle; reduced homology is pure
# 2-torsion in degree 1.

PROJECTIVE_PLANE_FACETS = [
    (1, 2, 5),
    (1, 2, 6),
    (1, 3, 4),
    (1, 3, 6),
    (1, 4, 5),
    (2, 3, 4),
    (2, 3, 5),
    (2, 4, 6),
    (3, 5, 6),
    (4, 5, 6),
]

# --------------------------------------------------------------------------
# Frozen falling-chain sets of the three worked bundle-path pairs, rendered
# with format_element (bottom prints as the empty-set symbol).

FALLING_P53 = {
    "∅<23<123b1<1234a1b1<12345a1a2b1",
    "∅<23<123b1<1234a2b1<12345a1a2b1",
    "∅<34<2345<12345b1<12345a1a2b1",
    "∅<45<2345<12345b1<12345a1a2b1",
}

FALLING_PP44_HOLLOW = {
    "∅<2<12b2<12b1b2<123a1b1b2<1234a1a2b1b2",
    "∅<2<12b2<12b1b2<123a2b1b2<1234a1a2b1b2",
    "∅<34<234<1234b2<1234b1b2<1234a1a2b1b2",
}

FALLING_PP44_FULL = {
    "∅<12b2<1234b2<1234b1b2<1234a1a2b1b2",
    "∅<34<1234b2<1234b1b2<1234a1a2b1b2",
    "∅<12b2<12b1b2<123a1b1b2<1234a1a2b1b2",
    "∅<12b2<12b1b2<123a2b1b2<1234a1a2b1b2",
}

# --------------------------------------------------------------------------
# Closed-form Betti table of two-edge bundle paths: rows i = 0..8, columns
# n = 2..15, transcribed from the published table.

BETTI_TABLE_ORACLE = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
    [1, 2, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105],
    [0, 0, 0, 6, 18, 33, 54, 82, 118, 163, 218, 284, 362, 453],
    [0, 0, 0, 0, 0, 18, 56, 110, 192, 310, 473, 691, 975, 1337],
    [0, 0, 0, 0, 0, 0, 0, 56, 180, 372, 682, 1155, 1846, 2821],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 180, 594, 1276, 2431, 4277],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 594, 2002, 4433],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2002],
]

# --------------------------------------------------------------------------
# Generated corpus: every admissible set of every single-bundle family host
# with |V| + |B| <= 9 (pendant-pair shapes need odd |V|).


def family_hosts() -> list[tuple[str, Multigraph]]:
    out = []
    for n in range(2, 8):
        for m in range(2, 8):
            if n + m > 9:
                continue
            out.append((f"path-{n}-{m}", p_tilde(n, m)))
            if n >= 3:
                out.append((f"path-chord-{n}-{m}", p_tilde_prime(n, m)))
    for n in (5, 7):
        for m in range(2, 8):
            if n + m > 9:
                continue
            out.append((f"pendant-{n}-{m}", s_tilde(n, m)))
            out.append((f"pendant-leaf-{n}-{m}", t_tilde(n, m)))
            out.append((f"pendant-chord-{n}-{m}", s_tilde_prime(n, m)))
            out.append((f"pendant-leaf-chord-{n}-{m}", t_tilde_prime(n, m)))
    return out


def family_pairs() -> list[tuple[str, Multigraph, frozenset]]:
    pairs = []
    for name, g in family_hosts():
        for a in sorted(
            g.enumerate_admissible(), key=lambda s: (len(s), sorted(map(str, s)))
        ):
            pairs.append((name, g, a))
    return pairs


def canonical_even_poset(g: Multigraph, a):
    """Even poset of the canonically relabeled pair."""
    g2, a2, _ = canonical_labeling(g, a)
    return even_poset(g2, a2)


# --------------------------------------------------------------------------
# Connected multigraphs up to isomorphism, for the exhaustive membership
# sweep.  Graphs are represented by edge-multiplicity maps on 0-indexed
# vertex pairs; the canonical key is the minimum multiplicity tuple over all
# vertex permutations.


def _canonical_key(k: int, mults: dict) -> tuple:
    pairs = list(itertools.combinations(range(k), 2))
    best = None
    for perm in itertools.permutations(range(k)):
        key = tuple(
            mults.get((min(perm[u], perm[v]), max(perm[u], perm[v])), 0)
            for (u, v) in pairs
        )
        if best is None or key < best:
            best = key
    return best


def _support_connected(k: int, mults: dict) -> bool:
    if k == 1:
        return True
    adj = {i: set() for i in range(k)}
    for (u, v), m in mults.items():
        if m:
            adj[u].add(v)
            adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == k


def connected_multigraph_classes(max_vertices=5, max_edges=7):
    """All connected multigraphs with the given bounds, one per iso class."""
    out = []
    for k in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(k), 2))
        seen = set()

        def gen(idx, left, mults):
            if idx == len(pairs):
                yield dict(mults)
                return
            for m in range(left + 1):
                if m:
                    mults[pairs[idx]] = m
                yield from gen(idx + 1, left - m, mults)
                mults.pop(pairs[idx], None)

        for mults in gen(0, max_edges, {}):
            if not _support_connected(k, mults):
                continue
            key = (k, _canonical_key(k, mults))
            if key not in seen:
                seen.add(key)
                out.append((k, dict(mults)))
    return out


def multigraph_from_multiplicities(k: int, mults: dict) -> Multigraph:
    simple = [(u + 1, v + 1) for (u, v), m in mults.items() if m == 1]
    bundles = []
    for (u, v), m in sorted(mults.items()):
        if m >= 2:
            bundles.append(
                Bundle(u + 1, v + 1, tuple(f"x{len(bundles)}_{i}" for i in range(m)))
            )
    return Multigraph(range(1, k + 1), simple, bundles)
