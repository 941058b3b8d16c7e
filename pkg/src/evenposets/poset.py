"""Finite poset engine on boolean order matrices.

Elements are opaque hashable payloads compared by index; the order relation
is held as a dense numpy boolean matrix, from which covers are derived as
the transitive reduction.  Bounded posets add distinguished bottom/top
indices and support intervals, products, the Möbius invariant, maximal
chains, total semimodularity, and order complexes.
"""

from __future__ import annotations

import json

import numpy as np


class Poset:
    """A finite poset: payload list + boolean ``leq`` matrix."""

    def __init__(self, elements, leq: np.ndarray, *, check: bool = True):
        self.elements = list(elements)
        n = len(self.elements)
        leq = np.asarray(leq, dtype=bool)
        assert leq.shape == (n, n)
        self.leq = leq
        self._index = {e: i for i, e in enumerate(self.elements)}
        assert len(self._index) == n, "duplicate payloads"
        if check:
            self._check_axioms()
        self.lt = leq & ~np.eye(n, dtype=bool)
        self._covers_matrix: np.ndarray | None = None
        self._covers_up: list[list[int]] | None = None
        self._covers_down: list[list[int]] | None = None

    def _check_axioms(self):
        n = len(self.elements)
        if not self.leq.diagonal().all():
            raise ValueError("order not reflexive")
        if (self.leq & self.leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("order not antisymmetric")
        reach = self.leq.astype(np.uint8)
        closed = (reach @ reach > 0)
        if (closed & ~self.leq).any():
            raise ValueError("order not transitive")

    # ----------------------------------------------------------- accessors

    def __len__(self):
        return len(self.elements)

    def index(self, payload) -> int:
        return self._index[payload]

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    @property
    def covers_matrix(self) -> np.ndarray:
        """covers[x, y] iff y covers x (transitive reduction of the order)."""
        if self._covers_matrix is None:
            n = len(self.elements)
            cov = np.zeros((n, n), dtype=bool)
            # strict-up counts let us scan candidates small-to-large, keeping
            # the minimal ones and blocking everything above each kept cover
            sizes = self.lt.sum(axis=1)  # more above => smaller element
            for x in range(n):
                ups = np.nonzero(self.lt[x])[0]
                if ups.size == 0:
                    continue
                ups = ups[np.argsort(-sizes[ups], kind="stable")]
                blocked = np.zeros(n, dtype=bool)
                for y in ups:
                    if not blocked[y]:
                        cov[x, y] = True
                        blocked |= self.lt[y]
            self._covers_matrix = cov
        return self._covers_matrix

    @property
    def covers_up(self) -> list[list[int]]:
        if self._covers_up is None:
            cov = self.covers_matrix
            self._covers_up = [
                np.nonzero(cov[x])[0].tolist() for x in range(len(self))
            ]
        return self._covers_up

    @property
    def covers_down(self) -> list[list[int]]:
        if self._covers_down is None:
            cov = self.covers_matrix
            self._covers_down = [
                np.nonzero(cov[:, y])[0].tolist() for y in range(len(self))
            ]
        return self._covers_down

    def cover_pairs(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.covers_matrix)
        return list(zip(xs.tolist(), ys.tolist()))

    def minimal_elements(self) -> list[int]:
        return [x for x in range(len(self)) if not self.lt[:, x].any()]

    def maximal_elements(self) -> list[int]:
        return [x for x in range(len(self)) if not self.lt[x].any()]

    def topological_order(self) -> list[int]:
        """Indices sorted by number of elements below (a linear extension)."""
        below = self.lt.sum(axis=0)
        return sorted(range(len(self)), key=lambda x: (below[x], x))

    def height(self) -> np.ndarray:
        """Longest-chain-from-a-minimal-element length per element."""
        h = np.zeros(len(self), dtype=int)
        for x in self.topological_order():
            downs = self.covers_down[x]
            if downs:
                h[x] = 1 + max(h[d] for d in downs)
        return h

    def length(self) -> int:
        return int(self.height().max(initial=0))

    def bounded(self) -> "BoundedPoset":
        mins, maxs = self.minimal_elements(), self.maximal_elements()
        if len(mins) != 1 or len(maxs) != 1:
            raise ValueError("poset is not bounded")
        return BoundedPoset(self, mins[0], maxs[0])

    def subposet(self, indices) -> "Poset":
        indices = list(indices)
        sub = self.leq[np.ix_(indices, indices)]
        return Poset([self.elements[i] for i in indices], sub, check=False)

    # --------------------------------------------------------- chains etc.

    def maximal_chains_general(self) -> list[list[int]]:
        """Maximal chains of an arbitrary poset, minimal-to-maximal."""
        out: list[list[int]] = []
        minimal = self.minimal_elements()

        def grow(chain):
            ups = self.covers_up[chain[-1]]
            if not ups:
                out.append(list(chain))
                return
            for y in ups:
                chain.append(y)
                grow(chain)
                chain.pop()

        for m in minimal:
            grow([m])
        if not self.elements:
            return []
        return out

    # --------------------------------------------------------------- export

    def to_json(self, label=str) -> str:
        return json.dumps(
            {
                "elements": [label(e) for e in self.elements],
                "covers": sorted(self.cover_pairs()),
            }
        )

    def to_dot(self, label=str) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for i, e in enumerate(self.elements):
            lines.append(f'  n{i} [label="{label(e)}"];')
        for x, y in sorted(self.cover_pairs()):
            lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines)


class BoundedPoset:
    """A poset with distinguished bottom and top."""

    def __init__(self, poset: Poset, bottom: int, top: int):
        self.poset = poset
        self.bottom = bottom
        self.top = top
        assert poset.leq[bottom].all(), "bottom not below everything"
        assert poset.leq[:, top].all(), "top not above everything"

    # Delegation keeps call sites short.
    @property
    def elements(self):
        return self.poset.elements

    @property
    def leq(self):
        return self.poset.leq

    def __len__(self):
        return len(self.poset)

    def index(self, payload) -> int:
        return self.poset.index(payload)

    def le(self, x, y) -> bool:
        return self.poset.le(x, y)

    @property
    def covers_up(self):
        return self.poset.covers_up

    @property
    def covers_down(self):
        return self.poset.covers_down

    def atoms(self) -> list[int]:
        return self.poset.covers_up[self.bottom]

    def length(self) -> int:
        return self.poset.length()

    def is_pure(self) -> bool:
        """All maximal chains of the same length (graded by longest chain)."""
        h = self.poset.height()
        return all(h[y] == h[x] + 1 for x, y in self.poset.cover_pairs())

    def proper_part(self) -> Poset:
        if self.bottom == self.top or self.length() < 1:
            raise ValueError("proper part needs length >= 1")
        keep = [i for i in range(len(self)) if i not in (self.bottom, self.top)]
        return self.poset.subposet(keep)


def from_order(elements, leq) -> Poset:
    """Build a poset from a binary predicate; validates the order axioms."""
    elements = list(elements)
    n = len(elements)
    mat = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mat[i, j] = bool(leq(a, b))
    return Poset(elements, mat, check=True)


def from_subsets(sets) -> Poset:
    """Poset of distinct sets under inclusion (no axiom check needed).

    Inclusion is tested with one integer matrix product over indicator
    vectors, which keeps construction fast for a few thousand elements.
    """
    sets = list(sets)
    universe = sorted({x for s in sets for x in s}, key=repr)
    pos = {x: k for k, x in enumerate(universe)}
    m = np.zeros((len(sets), max(1, len(universe))), dtype=np.uint8)
    for i, s in enumerate(sets):
        for x in s:
            m[i, pos[x]] = 1
    # |A \ B| == 0  <=>  A <= B
    missing = m.astype(np.float32) @ (1 - m).astype(np.float32).T
    return Poset(sets, missing == 0, check=False)


def interval(p: BoundedPoset, x, y) -> BoundedPoset:
    """Closed interval [x, y] as a bounded poset (payload arguments)."""
    xi, yi = p.index(x), p.index(y)
    if not p.le(xi, yi):
        raise ValueError("interval endpoints are incomparable")
    keep = [z for z in range(len(p)) if p.le(xi, z) and p.le(z, yi)]
    sub = p.poset.subposet(keep)
    return BoundedPoset(sub, keep.index(xi), keep.index(yi))


def product(p: BoundedPoset, q: BoundedPoset) -> BoundedPoset:
    """Componentwise order on pairs; bottom/top are the pairs of bounds."""
    elements = [(a, b) for a in p.elements for b in q.elements]
    leq = np.kron(p.leq.astype(np.uint8), q.leq.astype(np.uint8)).astype(bool)
    poset = Poset(elements, leq, check=False)
    nb = len(q)
    return BoundedPoset(poset, p.bottom * nb + q.bottom, p.top * nb + q.top)


def mobius_invariant(p: BoundedPoset) -> int:
    """mu(bottom, top) via the defining recursion."""
    n = len(p)
    mu = np.zeros(n, dtype=object)
    order = p.poset.topological_order()
    b = p.bottom
    for z in order:
        if z == b:
            mu[z] = 1
        elif p.le(b, z):
            below = [w for w in range(n) if p.le(b, w) and p.poset.lt[w, z]]
            mu[z] = -sum(mu[w] for w in below)
    return int(mu[p.top])


def maximal_chains(p: BoundedPoset) -> list[list[int]]:
    """All bottom-to-top chains through covers, children in index order."""
    out: list[list[int]] = []

    def grow(chain):
        x = chain[-1]
        if x == p.top:
            out.append(list(chain))
            return
        for y in p.covers_up[x]:
            chain.append(y)
            grow(chain)
            chain.pop()

    grow([p.bottom])
    return out


def count_maximal_chains(p: BoundedPoset) -> int:
    counts = np.zeros(len(p), dtype=object)
    counts[p.bottom] = 1
    for x in p.poset.topological_order():
        if x == p.bottom:
            continue
        counts[x] = sum(counts[d] for d in p.covers_down[x])
    return int(counts[p.top])


def is_totally_semimodular(p: BoundedPoset) -> bool:
    """Every closed interval is semimodular.

    Intervals are convex, so their cover relation is the restriction of the
    ambient one; the check reduces to: whenever a, b both cover c and both
    lie below y, some common cover d of a and b lies below y.
    """
    cov = p.poset.covers_matrix
    leq = p.leq
    n = len(p)
    for c in range(n):
        ups = p.covers_up[c]
        for ai in range(len(ups)):
            for bi in range(ai + 1, len(ups)):
                a, b = ups[ai], ups[bi]
                ds = [d for d in range(n) if cov[a, d] and cov[b, d]]
                need = leq[a] & leq[b]
                ok = np.zeros(n, dtype=bool)
                for d in ds:
                    ok |= leq[d]
                if (need & ~ok).any():
                    return False
    return True


def order_complex(p: Poset):
    """Simplicial complex of chains; facets are the maximal chains."""
    from .homology import SimplicialComplex

    if not p.elements:
        # the complex whose only face is the empty one
        return SimplicialComplex([frozenset()])
    facets = [frozenset(chain) for chain in p.maximal_chains_general()]
    return SimplicialComplex(facets)
