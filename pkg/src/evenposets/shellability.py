"""Shelling orders, recursive atom orderings, and chain-edge labelings.

Three layers live here.  The bottom layer works on any bounded poset:
verification and exhaustive search of recursive atom orderings, the
chain-edge labeling such an ordering induces, verification of the CL
property, and enumeration of falling chains.  The middle layer is a facet
brute force deciding shellability of small simplicial complexes.  The top
layer is specific to even posets of canonically labeled single-bundle
hosts: their intrinsic per-element linear orders, the atom orders those
induce, and a label-free five-case test for falling chains.

Throughout, ``F`` at an atom means the covers of that atom lying weakly
above an earlier sibling atom.  (Taking covers of earlier siblings instead
breaks the unique-increasing-chain property already on seven elements.)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evenposet import EvenPoset
from .homology import SimplicialComplex
from .poset import BoundedPoset

__all__ = [
    "AtomOrdering",
    "CLViolation",
    "ExplicitChainLabeling",
    "FacetBudgetExceeded",
    "RaoLabeling",
    "RaoViolation",
    "SearchBudgetExceeded",
    "ShellingOrder",
    "atom_order",
    "atom_ordering",
    "cl_labeling_from_rao",
    "even_poset_labeling",
    "falling_chains",
    "falling_counts_by_length",
    "find_recursive_atom_ordering",
    "is_shellable_bruteforce",
    "is_shelling_order",
    "lex_order",
    "threshold_falling_test",
    "verify_cl_labeling",
    "verify_recursive_atom_ordering",
]


class SearchBudgetExceeded(Exception):
    """An exhaustive search hit its node budget before finishing."""


class FacetBudgetExceeded(Exception):
    """The complex has more facets than the brute-force bound allows."""


# ------------------------------------------------------------------------
# recursive atom orderings on bounded posets
# ------------------------------------------------------------------------


class AtomOrdering:
    """Choice, for every element below the top, of an order on its covers.

    The covers of ``x`` are the atoms of the upper interval ``[x, top]``, so
    such a choice is exactly a root-independent candidate for a recursive
    atom ordering.  Orders are stored as tuples of element indices.
    """

    def __init__(self, p: BoundedPoset, orders: dict):
        ups = p.covers_up
        for i in range(len(p)):
            if i == p.top:
                continue
            got = orders.get(i)
            if got is None or sorted(got) != sorted(ups[i]):
                raise ValueError(
                    f"orders[{i}] is not a permutation of the covers of element {i}"
                )
        self.p = p
        self.orders = {i: tuple(v) for i, v in orders.items() if i != p.top}

    def order_of(self, i: int) -> tuple:
        return self.orders[i]

    def __repr__(self):
        return f"AtomOrdering(on {len(self.p)} elements)"


@dataclass
class RaoViolation:
    """Witness that an atom-order assignment is not recursive; falsy."""

    condition: int
    root: object
    atom: object
    detail: str

    def __bool__(self):
        return False

    def __str__(self):
        return (
            f"condition ({self.condition}) fails at root {self.root!r}, "
            f"atom {self.atom!r}: {self.detail}"
        )


def verify_recursive_atom_ordering(p: BoundedPoset, ordering: AtomOrdering):
    """Check both conditions of a recursive atom ordering for a fixed
    assignment of cover orders.

    Returns ``True`` on success and a falsy :class:`RaoViolation` otherwise.
    Condition (1) asks, for every rooted pair (x, j-th atom), that the
    covers of the atom lying above an earlier sibling form a prefix of the
    atom's own order; condition (2) asks that whenever two atoms have a
    common upper bound y, some cover of the later one sits above an earlier
    atom and below y.
    """
    inner = p.poset
    lt, leq = inner.lt, inner.leq
    ups = p.covers_up
    n = len(inner)
    for x in range(n):
        if x == p.top:
            continue
        beta = ordering.order_of(x)
        for j, bj in enumerate(beta):
            if j == 0:
                continue
            earlier = beta[:j]
            if bj != p.top:
                child = ordering.order_of(bj)
                fmask = [any(leq[e, cov] for e in earlier) for cov in child]
                f = sum(fmask)
                if not all(fmask[:f]):
                    return RaoViolation(
                        1,
                        inner.elements[x],
                        inner.elements[bj],
                        "covers above an earlier sibling are not a prefix of the order",
                    )
            above_earlier = np.zeros(n, dtype=bool)
            for bi in earlier:
                above_earlier |= lt[bi]
            ys = lt[bj] & above_earlier
            if not ys.any():
                continue
            ok = np.zeros(n, dtype=bool)
            for z in ups[bj]:
                if any(lt[bi, z] for bi in earlier):
                    ok |= leq[z]
            bad = ys & ~ok
            if bad.any():
                y = int(np.flatnonzero(bad)[0])
                return RaoViolation(
                    2,
                    inner.elements[x],
                    inner.elements[bj],
                    f"upper bound {inner.elements[y]!r} sees no cover above an "
                    "earlier sibling",
                )
    return True


def find_recursive_atom_ordering(p: BoundedPoset, *, budget: int = 10**6):
    """Backtracking search for a root-independent recursive atom ordering.

    Elements are processed from the top down, so whenever an order is being
    chosen for ``x`` the orders of everything above ``x`` are already fixed
    and both conditions can be checked per placement.  Returns an
    :class:`AtomOrdering` or ``None``; raises :class:`SearchBudgetExceeded`
    after ``budget`` placement attempts.
    """
    inner = p.poset
    n = len(inner)
    lt, leq = inner.lt, inner.leq
    ups = p.covers_up
    todo = sorted(
        (i for i in range(n) if i != p.top), key=lambda i: int(leq[i].sum())
    )
    orders: dict = {}
    nodes = 0

    def placement_ok(placed, nxt) -> bool:
        if not placed:
            return True
        if nxt != p.top:
            child = orders[nxt]
            fmask = [any(leq[e, cov] for e in placed) for cov in child]
            f = sum(fmask)
            if not all(fmask[:f]):
                return False
        above_earlier = np.zeros(n, dtype=bool)
        for bi in placed:
            above_earlier |= lt[bi]
        ys = lt[nxt] & above_earlier
        if ys.any():
            ok = np.zeros(n, dtype=bool)
            for z in ups[nxt]:
                if any(lt[bi, z] for bi in placed):
                    ok |= leq[z]
            if (ys & ~ok).any():
                return False
        return True

    def place(idx: int) -> bool:
        nonlocal nodes
        if idx == len(todo):
            return True
        x = todo[idx]

        def perm(placed, remaining) -> bool:
            nonlocal nodes
            if not remaining:
                orders[x] = tuple(placed)
                return place(idx + 1)
            for q, nxt in enumerate(remaining):
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(
                        f"atom-ordering search exceeded {budget} placements"
                    )
                if placement_ok(placed, nxt):
                    if perm(placed + [nxt], remaining[:q] + remaining[q + 1 :]):
                        return True
            return False

        return perm([], list(ups[x]))

    return AtomOrdering(p, orders) if place(0) else None


# ------------------------------------------------------------------------
# chain-edge labelings
# ------------------------------------------------------------------------
#
# A labeling object exposes:
#   start()          -> context of the one-element chain at the bottom
#   label(ctx, y)    -> (integer label, new context) for extending by cover y
#   pivot(ctx)       -> label of the last edge of the context (None at start)
#   memo_key(ctx)    -> hashable key identifying the context up to a uniform
#                       shift of every label in its subtree
# Elements are poset indices throughout.


class RaoLabeling:
    """Chain-edge labeling induced by a recursive atom ordering.

    The context is (element, earlier siblings, incoming label).  Covers
    above an earlier sibling are labeled just below the incoming label, the
    rest just above, each part in the order assigned to the element, so the
    labels decrease exactly when the chain slips into territory already
    reached by an earlier sibling.
    """

    def __init__(self, p: BoundedPoset, ordering: AtomOrdering):
        self.p = p
        self.ordering = ordering
        self._leq = p.poset.leq

    def start(self):
        return (self.p.bottom, frozenset(), 0)

    def pivot(self, ctx):
        return ctx[2] if ctx[0] != self.p.bottom or ctx[1] else None

    def memo_key(self, ctx):
        return (ctx[0], ctx[1])

    def label(self, ctx, y):
        x, prev, pivot = ctx
        beta = self.ordering.order_of(x)
        in_f = [any(self._leq[e, cov] for e in prev) for cov in beta]
        f = sum(in_f)
        if not all(in_f[:f]):
            raise ValueError(
                "cover order violates the prefix condition; verify the "
                "ordering before labeling"
            )
        q = beta.index(y)
        lab = pivot - (f - q) if q < f else pivot + (q - f + 1)
        return lab, (y, frozenset(beta[:q]), lab)


class ExplicitChainLabeling:
    """Chain-edge labeling read off a table keyed by chain prefixes.

    Keys are tuples of element payloads starting at the bottom; the value
    labels the last edge of that prefix.  Useful for pinning down a labeling
    given by hand.
    """

    def __init__(self, p: BoundedPoset, table: dict):
        self.p = p
        self.table = {
            tuple(p.index(e) for e in key): int(v) for key, v in table.items()
        }

    def start(self):
        return (self.p.bottom,)

    def pivot(self, ctx):
        return self.table[ctx] if len(ctx) > 1 else None

    def memo_key(self, ctx):
        return ctx

    def label(self, ctx, y):
        nxt = ctx + (y,)
        try:
            lab = self.table[nxt]
        except KeyError:
            chain = tuple(self.p.elements[i] for i in nxt)
            raise ValueError(f"no label for chain prefix {chain!r}") from None
        return lab, nxt


def cl_labeling_from_rao(p: BoundedPoset, ordering: AtomOrdering) -> RaoLabeling:
    """Labeling induced by an ordering, after verifying the ordering."""
    res = verify_recursive_atom_ordering(p, ordering)
    if not res:
        raise ValueError(f"not a recursive atom ordering: {res}")
    return RaoLabeling(p, ordering)


@dataclass
class CLViolation:
    """Witness that a chain-edge labeling is not CL; falsy."""

    kind: str
    root: object
    top: object
    detail: str

    def __bool__(self):
        return False

    def __str__(self):
        return (
            f"rooted interval [{self.root!r}, {self.top!r}] {self.kind}: "
            f"{self.detail}"
        )


def verify_cl_labeling(p: BoundedPoset, lab):
    """Check the CL property of a chain-edge labeling.

    Every closed rooted interval must have exactly one maximal chain with
    strictly increasing labels, and that chain's label word must strictly
    precede the word of every other maximal chain of the interval.  Returns
    ``True`` or a falsy :class:`CLViolation`.
    """
    inner = p.poset
    leq, lt = inner.leq, inner.lt
    ups = p.covers_up

    memo_inc: dict = {}

    def inc_count(ctx, cur, y) -> int:
        # increasing chains cur -> y whose first label exceeds the pivot
        if cur == y:
            return 1
        key = (lab.memo_key(ctx), y)
        if key in memo_inc:
            return memo_inc[key]
        piv = lab.pivot(ctx)
        total = 0
        for z in ups[cur]:
            if leq[z, y]:
                lz, ctx2 = lab.label(ctx, z)
                if lz > piv:
                    total += inc_count(ctx2, z, y)
        memo_inc[key] = total
        return total

    memo_seq: dict = {}

    def min_seq_rel(ctx, cur, y):
        # lexicographically least label word of a maximal chain cur -> y,
        # expressed relative to the pivot so it can be memoized per context
        if cur == y:
            return ()
        key = (lab.memo_key(ctx), y)
        if key in memo_seq:
            return memo_seq[key]
        piv = lab.pivot(ctx)
        best = None
        for z in ups[cur]:
            if leq[z, y]:
                lz, ctx2 = lab.label(ctx, z)
                delta = lz - piv
                seq = (delta,) + tuple(delta + r for r in min_seq_rel(ctx2, z, y))
                if best is None or seq < best:
                    best = seq
        memo_seq[key] = best
        return best

    def count_word(ctx, cur, y, word) -> int:
        # maximal chains cur -> y realizing an absolute label word
        if cur == y:
            return 0 if word else 1
        if not word:
            return 0
        total = 0
        for z in ups[cur]:
            if leq[z, y]:
                lz, ctx2 = lab.label(ctx, z)
                if lz == word[0]:
                    total += count_word(ctx2, z, y, word[1:])
        return total

    start = lab.start()
    seen = {lab.memo_key(start)}
    stack = [start]
    while stack:
        ctx = stack.pop()
        x = ctx[0]
        for z in ups[x]:
            _, ctx2 = lab.label(ctx, z)
            k = lab.memo_key(ctx2)
            if k not in seen:
                seen.add(k)
                stack.append(ctx2)
        for y in np.flatnonzero(lt[x]):
            y = int(y)
            root_pay, top_pay = inner.elements[x], inner.elements[y]
            total = 0
            firsts = []
            for z in ups[x]:
                if leq[z, y]:
                    lz, ctx2 = lab.label(ctx, z)
                    firsts.append((lz, z, ctx2))
                    total += inc_count(ctx2, z, y)
            if total != 1:
                return CLViolation(
                    "count", root_pay, top_pay,
                    f"{total} strictly increasing maximal chains",
                )
            best = None
            for lz, z, ctx2 in firsts:
                seq = (lz,) + tuple(lz + r for r in min_seq_rel(ctx2, z, y))
                if best is None or seq < best:
                    best = seq
            achieved = sum(
                count_word(ctx2, z, y, best[1:])
                for lz, z, ctx2 in firsts
                if lz == best[0]
            )
            if achieved != 1:
                return CLViolation(
                    "lex", root_pay, top_pay,
                    f"{achieved} maximal chains share the least label word",
                )
            # walk the unique increasing chain and compare words; only steps
            # after the first are constrained by the previous label
            word: list = []
            cur, cur_ctx = x, ctx
            while cur != y:
                for z in ups[cur]:
                    if leq[z, y]:
                        lz, ctx2 = lab.label(cur_ctx, z)
                        if (not word or lz > word[-1]) and inc_count(ctx2, z, y):
                            word.append(lz)
                            cur, cur_ctx = z, ctx2
                            break
                else:  # pragma: no cover - unreachable once total == 1
                    raise AssertionError("lost the increasing chain")
            if tuple(word) != best:
                return CLViolation(
                    "lex", root_pay, top_pay,
                    "increasing chain is not lexicographically first",
                )
    return True


def falling_chains(p: BoundedPoset, lab) -> list:
    """All maximal chains with weakly decreasing labels, as index tuples."""
    ups = p.covers_up
    out = []

    def rec(ctx, cur, prev_label, chain):
        if cur == p.top:
            out.append(tuple(chain))
            return
        for y in ups[cur]:
            ly, ctx2 = lab.label(ctx, y)
            if prev_label is None or ly <= prev_label:
                rec(ctx2, y, ly, chain + [y])

    rec(lab.start(), p.bottom, None, [p.bottom])
    return out


def falling_counts_by_length(chains) -> dict:
    """Histogram of chain lengths (number of covers) of falling chains."""
    counts: dict = {}
    for c in chains:
        counts[len(c) - 1] = counts.get(len(c) - 1, 0) + 1
    return dict(sorted(counts.items()))


# ------------------------------------------------------------------------
# intrinsic orders for canonical single-bundle even posets
# ------------------------------------------------------------------------


def lex_order(ep: EvenPoset, element) -> tuple:
    """Linear order on the ground set attached to one poset element.

    Selected-class edges up to the last one present in the element jump
    ahead of vertex 3; once an unselected edge is present the whole
    selected class and the unselected edges up to the last one present
    jump ahead as well.  With no bundle edge present at all, the whole
    selected class jumps ahead exactly when the host keeps an unselected
    edge and endpoint 2 is selected; otherwise vertices come first.

    The last rule is where this order deviates from the naive one that
    always lists vertices before absent bundle edges: the naive reading
    is not a recursive atom ordering (on the five-vertex path with a
    selected pair from a triple bundle it already violates the
    earlier-atom condition at the element {1}, and no cover repairs it),
    while the variant here passes verification on every single-bundle
    family instance with at most nine ground vertices and edges.
    """
    info = ep.canonical_host()
    s = frozenset(element)
    ep.index(s)
    tail_verts = list(range(3, info.n + 1))
    a_edges, b_edges = list(info.a_edges), list(info.b_edges)
    if not any(e in s for e in b_edges):
        if any(e in s for e in a_edges):
            k = max(i for i, e in enumerate(a_edges) if e in s)
            seq = [1, 2] + a_edges[: k + 1] + tail_verts + a_edges[k + 1 :] + b_edges
        elif b_edges and 2 in info.a_vertices:
            seq = [1, 2] + a_edges + tail_verts + b_edges
        else:
            seq = [1, 2] + tail_verts + a_edges + b_edges
    else:
        k = max(i for i, e in enumerate(b_edges) if e in s)
        seq = [1, 2] + a_edges + b_edges[: k + 1] + tail_verts + b_edges[k + 1 :]
    return tuple(seq)


def atom_order(ep: EvenPoset, element) -> list:
    """Covers of an element in its intrinsic order.

    Sort key: first how many bundle endpoints the difference adds (one
    before two before none), then the rank word of the difference under the
    element's linear order.
    """
    s = frozenset(element)
    i = ep.index(s)
    rank = {x: r for r, x in enumerate(lex_order(ep, s))}

    def key(j):
        diff = ep.elements[j] - s
        ends = len(diff & {1, 2})
        cls = 0 if ends == 1 else (1 if ends == 2 else 2)
        return (cls, tuple(sorted(rank[x] for x in diff)))

    return [ep.elements[j] for j in sorted(ep.poset.covers_up[i], key=key)]


def atom_ordering(ep: EvenPoset) -> AtomOrdering:
    """Aggregate the intrinsic atom orders into one assignment."""
    bp = ep.poset
    orders = {
        i: tuple(ep.index(s) for s in atom_order(ep, bp.elements[i]))
        for i in range(len(bp))
        if i != bp.top
    }
    return AtomOrdering(bp, orders)


def even_poset_labeling(ep: EvenPoset, *, verify: bool = False) -> RaoLabeling:
    """Chain-edge labeling of an even poset from its intrinsic atom orders."""
    ordering = atom_ordering(ep)
    if verify:
        return cl_labeling_from_rao(ep.poset, ordering)
    return RaoLabeling(ep.poset, ordering)


def threshold_falling_test(ep: EvenPoset, chain) -> bool:
    """Label-free test that a maximal chain of a canonical even poset falls.

    A chain falls exactly when, at every interior element, the next element
    lies weakly above one of the current element's earlier siblings — the
    atoms of the previous element's upper interval that precede the current
    one in its intrinsic order.  That is precisely when the induced
    chain-edge label drops below the incoming one, so this agrees with the
    labeling-based enumeration step for step.  In particular a chain that
    ever moves into a first atom cannot fall.

    Case arithmetic on the least new ground element can decide the same
    question without looking at siblings, but the published bounds break on
    bundle-only hosts, so the sibling test is the one used.
    """
    elems = [frozenset(c) for c in chain]
    bp = ep.poset
    idx = [ep.index(s) for s in elems]
    ups = bp.covers_up
    if idx[0] != bp.bottom or idx[-1] != bp.top:
        raise ValueError("chain must run from the bottom to the top")
    for s, t in zip(idx, idx[1:]):
        if t not in ups[s]:
            raise ValueError("chain is not maximal: a step is not a cover")
    leq = bp.poset.leq
    for pos in range(1, len(elems) - 1):
        parent, cur, nxt = elems[pos - 1], elems[pos], elems[pos + 1]
        sibs = atom_order(ep, parent)
        earlier = sibs[: sibs.index(cur)]
        if not any(leq[ep.index(s), idx[pos + 1]] for s in earlier):
            return False
    return True


def falling_step_signature(ep: EvenPoset, chain) -> str:
    """Pattern of the unique step of a maximal chain that introduces vertex 1.

    Tokens in order: endpoints present in the difference, one ``a`` per
    selected bundle edge (the second written ``a'``), one ``v`` per other
    vertex, one ``b`` per unselected bundle edge.
    """
    info = ep.canonical_host()
    elems = [frozenset(c) for c in chain]
    steps = [(s, t) for s, t in zip(elems, elems[1:]) if 1 in t - s]
    if len(steps) != 1:
        raise ValueError("expected exactly one step introducing vertex 1")
    s, t = steps[0]
    diff = t - s
    a_set = set(info.a_edges)
    n_a = sum(1 for x in diff if x in a_set)
    n_b = sum(1 for x in diff if isinstance(x, str) and x not in a_set)
    n_v = sum(1 for x in diff if isinstance(x, int) and x not in (1, 2))
    parts = ["1"] + (["2"] if 2 in diff else [])
    parts += ["a", "a'"][:n_a] + ["v"] * n_v + ["b"] * n_b
    return "".join(parts)


def expected_falling_profile(ep: EvenPoset):
    """Predicted falling-chain lengths and introduce-1 patterns.

    Returns ``(lengths, signatures)``: every falling chain of a canonical
    single-bundle even poset has its length in the first set and the
    pattern of its vertex-1 step in the second.
    """
    info = ep.canonical_host()
    g = ep.host
    primed = any(1 in e for e in g.simple_edges) and any(
        2 in e for e in g.simple_edges
    )
    half = len(ep.admissible) // 2
    ell = len(info.b_edges)
    full = info.a_vertices == frozenset(g.vertices)
    if full:
        if ell:
            lengths = {half + ell - 1}
            sigs = {"12b", "1vb"} if primed else {"12b"}
        elif primed:
            lengths, sigs = {half - 1, half}, {"12aa'", "1a"}
        else:
            lengths, sigs = {half - 1}, {"12aa'"}
    else:
        bump = 1 if info.n % 2 == 0 else 0
        lengths = {half + ell + bump}
        sigs = {"1b"} if ell else {"1aa'", "1av"}
    return frozenset(lengths), frozenset(sigs)


# ------------------------------------------------------------------------
# facet brute force for simplicial complexes
# ------------------------------------------------------------------------


@dataclass(frozen=True)
class ShellingOrder:
    """A facet order certifying shellability."""

    facets: tuple

    def __iter__(self):
        return iter(self.facets)

    def __len__(self):
        return len(self.facets)


def is_shelling_order(k: SimplicialComplex, order) -> bool:
    """Validate a facet order: each facet must meet the union of the earlier
    ones in a nonempty pure complex of one dimension lower (vertices are
    exempt, their required intersection dimension being that of ``{∅}``)."""
    facets = [frozenset(f) for f in order]
    if sorted(map(sorted, facets)) != sorted(map(sorted, k.facets)):
        return False
    for j in range(1, len(facets)):
        fj = facets[j]
        if len(fj) == 1:
            continue
        ints = [facets[i] & fj for i in range(j)]
        maximal = [s for s in ints if not any(s < t for t in ints)]
        if not maximal or any(len(s) != len(fj) - 1 for s in maximal):
            return False
    return True


def is_shellable_bruteforce(k: SimplicialComplex, *, max_facets: int = 14):
    """Exhaustive shelling-order search over the facets of a complex.

    Returns a :class:`ShellingOrder` or ``None`` (a genuine certificate of
    non-shellability); raises :class:`FacetBudgetExceeded` when the complex
    has more than ``max_facets`` facets.  States are memoized on the set of
    placed facets, so the search visits at most ``2**t`` states.
    """
    facets = [frozenset(f) for f in k.facets]
    t = len(facets)
    if t > max_facets:
        raise FacetBudgetExceeded(f"{t} facets exceed the bound {max_facets}")
    if t <= 1:
        return ShellingOrder(tuple(facets))
    sizes = [len(f) for f in facets]
    inter = [[facets[i] & facets[j] for j in range(t)] for i in range(t)]
    big = [0] * t
    cont = [[0] * t for _ in range(t)]
    for j in range(t):
        for i in range(t):
            if i == j:
                continue
            if len(inter[i][j]) == sizes[j] - 1:
                big[j] |= 1 << i
            m = 0
            for i2 in range(t):
                if i2 != j and inter[i][j] <= facets[i2]:
                    m |= 1 << i2
            cont[j][i] = m
    full = (1 << t) - 1

    def addable(mask: int, j: int) -> bool:
        if sizes[j] == 1:
            return True
        bj = big[j] & mask
        if not bj:
            return False
        rem = mask
        while rem:
            low = rem & -rem
            i = low.bit_length() - 1
            if not cont[j][i] & bj:
                return False
            rem ^= low
        return True

    dead: set = set()
    order: list = []

    def dfs(mask: int) -> bool:
        if mask == full:
            return True
        if mask in dead:
            return False
        for j in range(t):
            bit = 1 << j
            if mask & bit:
                continue
            if mask == 0 or addable(mask, j):
                order.append(j)
                if dfs(mask | bit):
                    return True
                order.pop()
        dead.add(mask)
        return False

    if dfs(0):
        return ShellingOrder(tuple(facets[j] for j in order))
    return None
