"""Betti numbers and cohomology summaries of the real toric spaces of graphs.

Closed forms cover the bundle-ended path on two parallel edges; the general
route sums, over all admissible pairs of PI-graphs, reduced Betti vectors
obtained from the even posets' proper-part complexes through a duality
shift, combined across components by a join convolution.  Tubing complexes
and h-vectors supply the two-torsion part of integral cohomology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classify import in_g_star, p_tilde
from .evenposet import even_poset
from .homology import SimplicialComplex, SizeBudgetExceeded, integral_reduced_homology
from .multigraph import Multigraph

__all__ = [
    "CohomologySummary",
    "TubingComplex",
    "betti_general",
    "betti_simple_path",
    "betti_tilde_path2",
    "catalan",
    "falling_count_tilde_path2",
    "h_vector",
    "integral_cohomology",
    "odd_betti_tilde_path2",
    "table4",
    "tubing_complex",
]

TABLE_COLUMNS = range(2, 16)
TABLE_ROWS = range(0, 9)


def catalan(k: int) -> int:
    """k-th Catalan number.

    >>> [catalan(k) for k in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if k < 0:
        raise ValueError("Catalan numbers take non-negative indices")
    return math.comb(2 * k, k) // (k + 1)


def betti_simple_path(n: int) -> tuple:
    """Betti vector of the real toric space of the simple path on n vertices.

    Degree i carries C(n,i) - C(n,i-1) up to half of n and zero beyond.

    >>> betti_simple_path(3)
    (1, 2, 0)
    """
    if n < 1:
        raise ValueError("the path needs at least one vertex")
    return tuple(
        math.comb(n, i) - (math.comb(n, i - 1) if i else 0) if i <= n // 2 else 0
        for i in range(n)
    )


def odd_betti_tilde_path2(k: int) -> dict:
    """Odd-side reduced Betti numbers contributed by a k-vertex bundle path.

    Nonzero entries only: for even k the value C(k/2) in degrees k/2 and
    k/2 - 1; for odd k the value C((k+1)/2) - C((k-1)/2) in degree (k-1)/2.

    >>> odd_betti_tilde_path2(4)
    {1: 2, 2: 2}
    >>> odd_betti_tilde_path2(5)
    {2: 3}
    """
    if k < 2:
        return {}
    if k % 2 == 0:
        c = catalan(k // 2)
        return {k // 2 - 1: c, k // 2: c}
    half = (k - 1) // 2
    return {half: catalan(half + 1) - catalan(half)}


def _b(i: int, k: int) -> int:
    return odd_betti_tilde_path2(k).get(i, 0) if k >= 2 else 0


def falling_count_tilde_path2(n: int, a) -> int:
    """Number of falling chains of the even poset of the two-edge bundle
    path on n vertices with admissible set ``a`` (on the default labels).

    C(n/2) for even n; for odd n, C((n+1)/2) - C((n-1)/2) when the selected
    vertices induce a connected graph (the far bundle endpoint is the hollow
    one) and zero otherwise.  Bundle labels may carry any names; only the
    vertex part of ``a`` decides the value.
    """
    a = frozenset(a)
    verts = frozenset(x for x in a if isinstance(x, int))
    labels = a - verts
    admissible = (
        n >= 2
        and len(labels) == 2
        and verts <= frozenset(range(1, n + 1))
        and frozenset(range(3, n + 1)) <= verts
        and len(verts) % 2 == 0
    )
    if not admissible:
        raise ValueError("set is not admissible for the two-edge bundle path")
    k = n // 2
    if n % 2 == 0:
        return catalan(k)
    return catalan(k + 1) - catalan(k) if 1 not in a else 0


def betti_tilde_path2(n: int) -> tuple:
    """Betti vector of the real toric space of the two-edge bundle path.

    Assembled from the simple-path vector, the odd-side building blocks,
    and two boundary terms; exact integers throughout.

    >>> betti_tilde_path2(2)
    (1, 2, 1)
    """
    if not 2 <= n <= 60:
        raise ValueError("supported range is 2 <= n <= 60")
    path = betti_simple_path(n)
    out = []
    for i in range(n + 1):
        total = path[i] if i < len(path) else 0
        for ell in range(i):
            for m in range(2, n - 1):
                b = _b(ell, m)
                if b:
                    j = n - m - 1
                    rest = betti_simple_path(j) if j >= 1 else ()
                    idx = i - ell - 1
                    if 0 <= idx < len(rest):
                        total += b * rest[idx]
        total += _b(i - 1, n - 1)
        if not (n >= 4 and n % 2 == 0 and i == n // 2 + 1):
            # The published assembly keeps only the lower-degree half of the
            # whole-graph boundary block when n is even.
            total += _b(i - 1, n)
        out.append(total)
    return tuple(out)


def table4() -> list:
    """Betti numbers of the two-edge bundle paths, rows by degree 0..8 and
    columns by vertex count 2..15."""
    vectors = {n: betti_tilde_path2(n) for n in TABLE_COLUMNS}
    return [
        [vectors[n][i] if i < len(vectors[n]) else 0 for n in TABLE_COLUMNS]
        for i in TABLE_ROWS
    ]


# ------------------------------------------------------------------ general


def _convolve(u, v):
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                out[i + j] += x * y
    return out


def _polytope_dim(g: Multigraph) -> int:
    return g.n - 1 + sum(len(b.labels) - 1 for b in g.bundles)


def _component_vector(h: Multigraph, a) -> list:
    """Odd-side reduced Betti numbers of one connected pair, shifted so that
    index t holds the degree t-1 value, read off the even side through the
    duality swap at the polytope dimension."""
    d = _polytope_dim(h)
    ep = even_poset(h, frozenset(a))
    hom = integral_reduced_homology(ep.proper_complex())
    return [hom.betti(d - t - 1) for t in range(d + 1)]


def _pair_vector(graph: Multigraph, a, memo=None) -> list:
    vec = [1]
    for h in graph.components():
        ac = frozenset(a) & h.ground_set()
        if memo is None:
            sc = _component_vector(h, ac)
        else:
            key = (h, ac)
            sc = memo.get(key)
            if sc is None:
                sc = memo[key] = _component_vector(h, ac)
        vec = _convolve(vec, sc)
    return vec


def _pair_vector_task(args):
    graph, a = args
    return _pair_vector(graph, a)


def betti_general(g: Multigraph, *, jobs: int = 1) -> tuple:
    """Betti vector of the real toric space of any graph in the good class.

    Connected hosts are summed over all admissible pairs of PI-graphs; a
    disconnected host is the product of its components, so their vectors
    are convolved.  Raises ``ValueError`` outside the good class, where the
    cohomology may carry odd torsion and ranks alone would mislead.
    """
    comps = g.components()
    if len(comps) != 1:
        vec = [1]
        for comp in comps:
            vec = _convolve(vec, list(betti_general(comp, jobs=jobs)))
        return tuple(vec)
    if not in_g_star(g):
        raise ValueError(
            "Betti vector is computed only inside the good class; "
            "use the homology tools directly for other graphs"
        )
    dim = _polytope_dim(g)
    acc = [0] * (dim + 1)
    tasks = [(pi.graph, a) for pi, a in g.a_star()]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            vectors = list(pool.map(_pair_vector_task, tasks))
    else:
        memo: dict = {}
        vectors = [_pair_vector(graph, a, memo) for graph, a in tasks]
    for vec in vectors:
        for i, val in enumerate(vec):
            if val:
                acc[i] += val
    return tuple(acc)


# ------------------------------------------------------- tubings and torsion


@dataclass
class TubingComplex:
    """Flag complex of compatible proper connected semi-induced sets."""

    complex: SimplicialComplex
    tubes: list


def _tubes_compatible(g: Multigraph, s, t) -> bool:
    if s <= t or t <= s:
        return True
    sv = {x for x in s if isinstance(x, int)}
    tv = {x for x in t if isinstance(x, int)}
    if sv & tv:
        return False
    return not any(g.has_edge(u, v) for u in sv for v in tv)


def _maximal_cliques(n: int, adj) -> list:
    out = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        pivot = max(
            (v for v in range(n) if pool >> v & 1),
            key=lambda v: bin(adj[v] & p).count("1"),
        )
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            bk(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
            cand ^= low

    bk(0, (1 << n) - 1, 0)
    return out


def tubing_complex(g: Multigraph, *, max_tubes: int = 4096) -> TubingComplex:
    """Compatibility complex of the proper connected semi-induced sets.

    Two sets are compatible when nested, or vertex-disjoint with no host
    edge between them; faces are all pairwise-compatible collections.
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    ground = g.ground_set()
    tubes = [
        s
        for s in g.enumerate_semi_induced()
        if s and s != ground and len(g.subgraph_components(s)) == 1
    ]
    tubes.sort(key=lambda s: (len(s), tuple(g.sort_key(x) for x in sorted(s, key=g.sort_key))))
    if len(tubes) > max_tubes:
        raise SizeBudgetExceeded(f"{len(tubes)} tubes exceed the bound {max_tubes}")
    n = len(tubes)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if _tubes_compatible(g, tubes[i], tubes[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    if n == 0:
        return TubingComplex(SimplicialComplex([]), [])
    facets = [
        frozenset(tubes[v] for v in range(n) if mask >> v & 1)
        for mask in _maximal_cliques(n, adj)
    ]
    return TubingComplex(SimplicialComplex(facets), tubes)


def h_vector(k: SimplicialComplex) -> tuple:
    """f-to-h transform of a pure complex.

    >>> pentagon = SimplicialComplex(
    ...     [frozenset(e) for e in ["ab", "bc", "cd", "de", "ea"]]
    ... )
    >>> h_vector(pentagon)
    (1, 3, 1)
    """
    if not k.is_pure():
        raise ValueError("h-vector requires a pure complex")
    d = k.dim
    fv = k.f_vector()

    def f(i: int) -> int:  # number of faces with i vertices
        return fv[i] if 0 <= i < len(fv) else 0

    return tuple(
        sum((-1) ** (j - i) * math.comb(d + 1 - i, j - i) * f(i) for i in range(j + 1))
        for j in range(d + 2)
    )


@dataclass(frozen=True)
class CohomologySummary:
    """Per-degree free ranks and two-torsion multiplicities."""

    free: tuple
    torsion2: tuple

    def describe(self, i: int) -> str:
        a = self.free[i] if i < len(self.free) else 0
        b = self.torsion2[i] if i < len(self.torsion2) else 0
        parts = []
        if a == 1:
            parts.append("Z")
        elif a > 1:
            parts.append(f"Z^{a}")
        if b == 1:
            parts.append("Z/2")
        elif b > 1:
            parts.append(f"(Z/2)^{b}")
        return " + ".join(parts) if parts else "0"


def integral_cohomology(g: Multigraph) -> CohomologySummary:
    """Integral cohomology summary inside the good class: free part from the
    Betti vector, an elementary two-group on top with multiplicity h - beta."""
    beta = list(betti_general(g))
    tc = tubing_complex(g)
    h = [1] if not tc.tubes else list(h_vector(tc.complex))
    size = max(len(beta), len(h))
    beta += [0] * (size - len(beta))
    h += [0] * (size - len(h))
    torsion = []
    for i in range(size):
        t = h[i] - beta[i]
        if t < 0:
            raise RuntimeError(
                f"inconsistent inputs: h[{i}]={h[i]} below Betti {beta[i]}"
            )
        torsion.append(t)
    return CohomologySummary(tuple(beta), tuple(torsion))
