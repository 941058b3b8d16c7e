"""Integral simplicial homology via Smith normal form.

Complexes are stored by their facets; faces are the downward closure plus
the empty face, so all homology here is reduced.  Boundary matrices are
reduced sparsely with unit pivots first, and whatever small core remains
goes through a dense Smith normal form over arbitrary-precision integers,
so torsion is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from heapq import heappush, heappop

import numpy as np


class SizeBudgetExceeded(Exception):
    """The complex has more faces than the caller allowed."""


class SimplicialComplex:
    """An abstract simplicial complex given by facets over hashable vertices."""

    def __init__(self, facets):
        facets = [frozenset(f) for f in facets]
        # drop faces contained in others so facets form an antichain
        facets = sorted(set(facets), key=lambda f: (-len(f), sorted(map(repr, f))))
        kept: list[frozenset] = []
        for f in facets:
            if not any(f < g for g in kept):
                kept.append(f)
        self.facets: tuple[frozenset, ...] = tuple(kept)
        self._faces: dict[int, list[tuple]] | None = None

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def faces(self, max_faces: int | None = None) -> dict[int, list[tuple]]:
        """All faces by dimension (including the empty face at -1), sorted."""
        if self._faces is None:
            seen: set[frozenset] = set()
            for f in self.facets:
                elems = sorted(f, key=repr)
                for k in range(len(elems) + 1):
                    for sub in itertools.combinations(elems, k):
                        seen.add(frozenset(sub))
                        if max_faces is not None and len(seen) > max_faces:
                            raise SizeBudgetExceeded(
                                f"more than {max_faces} faces"
                            )
            by_dim: dict[int, list[tuple]] = {}
            for f in seen:
                by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f, key=repr)))
            for d in by_dim:
                by_dim[d].sort()
            self._faces = by_dim
        return self._faces

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_dim) face counts; f_{-1}=1 unless the complex is void."""
        faces = self.faces()
        if not faces:
            return (0,)
        return tuple(len(faces.get(d, ())) for d in range(-1, self.dim + 1))

    def euler_characteristic_reduced(self) -> int:
        return sum((-1 if d % 2 else 1) * len(fs) for d, fs in self.faces().items())


def boundary_matrix(k: SimplicialComplex, d: int) -> np.ndarray:
    """Matrix of the boundary map from d-faces to (d-1)-faces.

    Columns are indexed by the sorted list of d-faces, rows by the sorted
    (d-1)-faces; signs follow the sorted-vertex orientation.  For d = 0 the
    single row is the empty face.
    """
    assert d >= 0
    faces = k.faces()
    cols = faces.get(d, [])
    rows = faces.get(d - 1, [])
    row_index = {f: i for i, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        for omit in range(len(face)):
            sub = face[:omit] + face[omit + 1 :]
            mat[row_index[sub], j] = (-1) ** omit
    return mat


@dataclass(frozen=True)
class HomologySummary:
    """Reduced integral homology: free rank and torsion factors per dimension."""

    ranks: dict[int, int]
    torsion: dict[int, tuple[int, ...]]

    def betti(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def torsion_at(self, d: int) -> tuple[int, ...]:
        return self.torsion.get(d, ())

    def is_torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def nonzero(self) -> dict[int, int]:
        return {d: r for d, r in sorted(self.ranks.items()) if r}

    def to_json_dict(self) -> dict:
        dims = sorted(set(self.ranks) | set(self.torsion))
        return {
            str(d): {"betti": self.ranks.get(d, 0), "torsion": list(self.torsion.get(d, ()))}
            for d in dims
        }


def _sparse_eliminate(cols: dict[int, dict[int, int]]):
    """Clear unit pivots greedily; return (#unit pivots, leftover dense core).

    ``cols`` maps column id -> {row id: coefficient}.  Entries stay exact
    python integers throughout.
    """
    rows: dict[int, set[int]] = {}
    for j, col in cols.items():
        for i in col:
            rows.setdefault(i, set()).add(j)

    heap: list[tuple[int, int]] = []
    for j, col in cols.items():
        heappush(heap, (len(col), j))

    pivots = 0
    while heap:
        size, j = heappop(heap)
        col = cols.get(j)
        if col is None or len(col) != size:
            continue  # stale entry; a fresh one was pushed on modification
        # choose a unit entry with the sparsest row
        unit = [(len(rows[i]), i) for i, v in col.items() if v in (1, -1)]
        if not unit:
            continue  # handled by the dense core later
        _, pi = min(unit)
        pv = col[pi]
        pivots += 1
        # eliminate row pi from all other columns using column j
        for j2 in list(rows[pi]):
            if j2 == j:
                continue
            col2 = cols[j2]
            mult = col2[pi] * pv  # pv in {1,-1} so this is col2[pi]/pv
            for i, v in col.items():
                new = col2.get(i, 0) - mult * v
                if new:
                    col2[i] = new
                    rows.setdefault(i, set()).add(j2)
                else:
                    if i in col2:
                        del col2[i]
                        rows[i].discard(j2)
            if col2:
                heappush(heap, (len(col2), j2))
            else:
                del cols[j2]
        # remove the pivot column and row
        for i in col:
            rows[i].discard(j)
        del cols[j]
        rows.pop(pi, None)

    return pivots, cols


def _dense_smith(core: dict[int, dict[int, int]]) -> list[int]:
    """Invariant factors (each > 0) of the leftover sparse core, densely."""
    if not core:
        return []
    row_ids = sorted({i for col in core.values() for i in col})
    col_ids = sorted(core)
    ri = {r: k for k, r in enumerate(row_ids)}
    a = [[0] * len(col_ids) for _ in row_ids]
    for cj, j in enumerate(col_ids):
        for i, v in core[j].items():
            a[ri[i]][cj] = v

    m, n = len(a), len(a[0])
    factors: list[int] = []
    top = 0
    while True:
        # find the smallest nonzero entry in the remaining block
        best = None
        for i in range(top, m):
            for j in range(top, n):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        p = a[top][top]
        # clear the pivot row and column; restart if remainders appear
        dirty = False
        for i in range(top + 1, m):
            q = a[i][top] // p
            if q:
                for j in range(top, n):
                    a[i][j] -= q * a[top][j]
            if a[i][top]:
                dirty = True
        for j in range(top + 1, n):
            q = a[top][j] // p
            if q:
                for i in range(top, m):
                    a[i][j] -= q * a[i][top]
            if a[top][j]:
                dirty = True
        if dirty:
            continue
        # enforce divisibility of everything below-right by the pivot
        bad = None
        for i in range(top + 1, m):
            for j in range(top + 1, n):
                if a[i][j] % p:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(top, n):
                a[top][j] += a[bad][j]
            continue
        factors.append(abs(p))
        top += 1
    return factors


def _boundary_invariants(k: SimplicialComplex) -> dict[int, tuple[int, list[int]]]:
    """For each d: (number of d-faces, invariant factors of the boundary map)."""
    faces = k.faces()
    if not faces:
        return {}
    out: dict[int, tuple[int, list[int]]] = {}
    for d in range(0, k.dim + 1):
        cols_list = faces.get(d, [])
        rows_list = faces.get(d - 1, [])
        row_index = {f: i for i, f in enumerate(rows_list)}
        cols: dict[int, dict[int, int]] = {}
        for j, face in enumerate(cols_list):
            col = {}
            for omit in range(len(face)):
                sub = face[:omit] + face[omit + 1 :]
                col[row_index[sub]] = (-1) ** omit
            if col:
                cols[j] = col
        units, core = _sparse_eliminate(cols)
        factors = [1] * units + _dense_smith(core)
        out[d] = (len(cols_list), factors)
    return out


def integral_reduced_homology(
    k: SimplicialComplex, max_faces: int | None = 200_000
) -> HomologySummary:
    """Reduced homology over the integers, dimension by dimension."""
    k.faces(max_faces=max_faces)
    faces = k.faces()
    if not faces:
        return HomologySummary({}, {})
    inv = _boundary_invariants(k)
    ranks: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for d in range(-1, k.dim + 1):
        n_d = len(faces.get(d, ()))
        rank_d = len(inv[d][1]) if d >= 0 else 0
        rank_up = len(inv[d + 1][1]) if d + 1 in inv else 0
        ranks[d] = n_d - rank_d - rank_up
        if d + 1 in inv:
            tor = tuple(f for f in inv[d + 1][1] if f > 1)
            if tor:
                torsion[d] = tor
    return HomologySummary(ranks, torsion)


def wedge_summary(hs: HomologySummary):
    """Sphere-dimension multiset for torsion-free summaries, else None."""
    if not hs.is_torsion_free():
        return None
    out: list[int] = []
    for d, r in sorted(hs.ranks.items()):
        out.extend([d] * r)
    return tuple(out)
