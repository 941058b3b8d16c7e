"""Even and odd subgraph posets of a multigraph relative to an admissible set.

The even poset of a pair ``(G, A)`` collects the semi-induced subgraph sets
whose every component meets ``A`` evenly, ordered by containment and bounded
by the empty set and the whole ground set.  For canonical single-bundle hosts
the covers fall into a short list of shapes and the maximal-chain lengths obey
a parity case split; both facts are exposed here as checkable operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .classify import family_structure
from .multigraph import Bundle, Multigraph
from .poset import BoundedPoset, Poset, from_subsets, order_complex

__all__ = [
    "NULL_POSET",
    "NullPoset",
    "EvenPoset",
    "CanonicalHost",
    "CanonicalLabeling",
    "even_poset",
    "odd_poset",
    "canonical_labeling",
    "cover_type",
    "chain_length_spectrum",
    "expected_spectrum",
]


class NullPoset:
    """Distinct marker returned for inadmissible sets, never a real poset."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NULL_POSET"

    def __bool__(self):
        return False


NULL_POSET = NullPoset()


def _element_sort_key(host: Multigraph):
    def key(s):
        return (len(s), tuple(host.sort_key(x) for x in sorted(s, key=host.sort_key)))

    return key


class EvenPoset:
    """Bounded poset of A-even semi-induced subgraph sets of a host graph."""

    def __init__(self, host: Multigraph, admissible):
        admissible = frozenset(admissible)
        if not admissible <= host.ground_set():
            raise ValueError("admissible set contains elements outside the ground set")
        if not host.is_admissible(admissible):
            raise ValueError("set is not admissible; use even_poset() for the null marker")
        self.host = host
        self.admissible = admissible
        elems = [
            s
            for s in host.enumerate_semi_induced()
            if host.meets_evenly(s, admissible)
        ]
        elems.sort(key=_element_sort_key(host))
        assert elems[0] == frozenset() and elems[-1] == host.ground_set()
        self.poset: BoundedPoset = from_subsets(elems).bounded()

    # ------------------------------------------------------------- basics

    @property
    def elements(self) -> list[frozenset]:
        return self.poset.elements

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        return (
            f"EvenPoset(host={self.host!r}, "
            f"admissible={self.host.format_set(self.admissible)!r}, "
            f"size={len(self)})"
        )

    def index(self, s) -> int:
        try:
            return self.poset.index(frozenset(s))
        except KeyError:
            raise ValueError(f"{self.host.format_set(s)} is not an element") from None

    def atoms(self) -> list[frozenset]:
        return [self.elements[i] for i in self.poset.atoms()]

    @property
    def bounded(self) -> BoundedPoset:
        return self.poset

    def format_element(self, x) -> str:
        """Token string of an element, given as a set or a poset index."""
        if isinstance(x, int):
            x = self.elements[x]
        return self.host.format_set(x)

    def proper_complex(self):
        """Order complex of the open interval between the bounds."""
        return order_complex(self.poset.proper_part())

    # ------------------------------------------------------- serialization

    def to_json_dict(self) -> dict:
        covers = sorted(
            (i, j) for i, ups in enumerate(self.poset.covers_up) for j in ups
        )
        return {
            "admissible": self.host.format_set(self.admissible),
            "elements": [self.host.format_set(s) for s in self.elements],
            "covers": [list(c) for c in covers],
        }

    def to_dot(self) -> str:
        return self.poset.poset.to_dot(label=self.host.format_set)

    # ------------------------------------------------- canonical structure

    @cached_property
    def _canonical_host(self) -> "CanonicalHost":
        g, a = self.host, self.admissible
        _, _, lab = canonical_labeling(g, a)
        if any(k != w for k, w in lab.vertex_map.items()):
            raise ValueError("host is not canonically labeled")
        bundle = g.bundles[0]
        if bundle.labels != lab.a_edges + lab.b_edges:
            raise ValueError(
                "bundle labels are not listed selected-first; relabel canonically"
            )
        st = family_structure(g)
        return CanonicalHost(
            n=g.n,
            a_edges=lab.a_edges,
            b_edges=lab.b_edges,
            a_vertices=frozenset(x for x in a if isinstance(x, int)),
            has_leaf_pair=st.leaf_pair is not None,
            two_three_adjacent=g.has_edge(2, 3),
        )

    def canonical_host(self) -> "CanonicalHost":
        """Structure of the host under the canonical labeling; raises if the
        host is not presented canonically."""
        return self._canonical_host


@dataclass(frozen=True)
class CanonicalHost:
    """Canonical presentation summary of a single-bundle family host."""

    n: int
    a_edges: tuple[str, ...]
    b_edges: tuple[str, ...]
    a_vertices: frozenset
    has_leaf_pair: bool
    two_three_adjacent: bool


def even_poset(g: Multigraph, a) -> EvenPoset | NullPoset:
    """Even poset of (g, a), or the null marker when a is inadmissible."""
    a = frozenset(a)
    if not a <= g.ground_set():
        raise ValueError("set contains elements outside the ground set")
    if not g.is_admissible(a):
        return NULL_POSET
    return EvenPoset(g, a)


def odd_poset(g: Multigraph, a) -> Poset:
    """Poset of nonempty semi-induced sets each of whose components meets a
    oddly.  Defined for any subset of the ground set; no bounds are added."""
    a = frozenset(a)
    if not a <= g.ground_set():
        raise ValueError("set contains elements outside the ground set")
    elems = [s for s in g.enumerate_semi_induced() if s and g.meets_oddly(s, a)]
    elems.sort(key=_element_sort_key(g))
    return from_subsets(elems)


# --------------------------------------------------------------- canonical


@dataclass
class CanonicalLabeling:
    """Vertex permutation and bundle-edge partition of a canonical relabeling."""

    vertex_map: dict[int, int]
    a_edges: tuple[str, ...]
    b_edges: tuple[str, ...]

    @property
    def is_identity(self) -> bool:
        return all(k == v for k, v in self.vertex_map.items())


def canonical_labeling(g: Multigraph, a) -> tuple[Multigraph, frozenset, CanonicalLabeling]:
    """Relabel a single-bundle family host into canonical form.

    The bundle endpoints become vertices 1 and 2 and the remaining vertices
    are numbered outward along the walk; a pendant pair takes the last two
    numbers in ascending original id.  With an odd number of vertices, the
    endpoint outside ``a`` becomes vertex 1; with an even number, vertex 1 is
    the endpoint carrying the path (so 1 and 3 are adjacent), and symmetric
    shapes break the tie toward the smaller original id.  Bundle labels keep
    their names but are reordered selected-first, each part in file order.
    """
    a = frozenset(a)
    if not a <= g.ground_set():
        raise ValueError("set contains elements outside the ground set")
    if not g.is_admissible(a):
        raise ValueError("set is not admissible")
    st = family_structure(g)
    if st is None:
        raise ValueError("graph is not one of the single-bundle families")
    u, v = st.ends
    bundle = g.bundles[0]
    n = g.n
    if n % 2:
        hollows = [w for w in (u, v) if w not in a]
        assert len(hollows) == 1, "admissibility forces exactly one hollow endpoint"
        first = hollows[0]
        second = v if first == u else u
    elif st.inner is not None:
        first, second = st.inner, st.outer
    else:
        first, second = u, v  # symmetric endpoints: smaller original id first
    vmap = {first: 1, second: 2}
    for pos, w in enumerate(st.spine, start=3):
        vmap[w] = pos
    a_edges = tuple(lab for lab in bundle.labels if lab in a)
    b_edges = tuple(lab for lab in bundle.labels if lab not in a)
    new_simple = sorted(tuple(sorted((vmap[x], vmap[y]))) for x, y in g.simple_edges)
    g2 = Multigraph(
        range(1, n + 1), new_simple, [Bundle(1, 2, a_edges + b_edges)]
    )
    a2 = frozenset(vmap[x] for x in a if isinstance(x, int)) | frozenset(a_edges)
    return g2, a2, CanonicalLabeling(vmap, a_edges, b_edges)


# ------------------------------------------------------------- cover types

_ALLOWED_TAGS = {
    "odd": {"E1", "E2", "E3", "E1'", "E2'", "E3'-1"},
    "even_empty": {"E1", "E2", "E3", "E1'", "E2'"},
    "even_full": {"E2", "E4", "E1'", "E3'-1", "E3'-2"},
}


def _row_of(info: CanonicalHost) -> str:
    if info.n % 2:
        return "odd"
    return "even_full" if info.a_vertices & {1, 2} else "even_empty"


def cover_type(ep: EvenPoset, i, j) -> str:
    """Classify a cover of a canonical single-bundle even poset.

    Returns one of ``E1 E2 E3 E4 E1' E2' E3'-1 E3'-2`` after validating the
    difference against the shape allowed for the host's parity row; raises
    ``ValueError`` if the pair is not a cover or the shape does not match.
    """
    info = ep.canonical_host()
    low = frozenset(i)
    up = frozenset(j)
    li = ep.index(low)
    lj = ep.index(up)
    if lj not in ep.poset.covers_up[li]:
        raise ValueError(
            f"{ep.format_element(low)} is not covered by {ep.format_element(up)}"
        )
    a = ep.admissible
    diff = up - low
    dv = {x for x in diff if isinstance(x, int)}
    da = {x for x in diff if x in set(info.a_edges)}
    db = {x for x in diff if x in set(info.b_edges)}
    if da and db:
        raise ValueError("cover difference mixes selected and unselected bundle edges")
    if len(diff & a) % 2:
        raise ValueError("cover changes the admissible intersection by an odd amount")
    comps = ep.host.subgraph_components(up)
    if not any(diff <= c for c in comps):
        raise ValueError("cover difference spans several components of the upper set")

    row = _row_of(info)
    verts = set(ep.host.vertices)
    low_verts = {x for x in low if isinstance(x, int)}
    missing = verts - low_verts - {1, 2}
    size = len(diff)

    def reject(msg):
        raise ValueError(
            f"cover {ep.format_element(low)} < {ep.format_element(up)}: {msg}"
        )

    if db:
        if len(db) != 1:
            reject("more than one unselected bundle edge")
        hit = dv & {1, 2}
        if size == 1:
            tag = "E1'"
        elif size == 2:
            if len(dv) != 1 or not hit or hit & a:
                reject("two-element shape must add one hollow endpoint and one edge")
            tag = "E2'"
        elif size == 3:
            if len(hit) == 1:
                if not hit <= a:
                    reject("endpoint joining a three-element shape must be selected")
                others = dv - {1, 2}
                if len(others) != 1 or (missing and min(others) != min(missing)):
                    reject("vertex must be the smallest one absent from the lower set")
                tag = "E3'-1"
            elif len(hit) == 2:
                if dv != {1, 2} or not hit <= a:
                    reject("three-element shape with both endpoints needs them selected")
                tag = "E3'-2"
            else:
                reject("three-element shape must involve a bundle endpoint")
        else:
            reject("difference too large for an unselected-edge shape")
    else:
        if size == 1:
            x = next(iter(diff))
            if not isinstance(x, int) or x not in {1, 2} or x in a:
                reject("single added element must be a hollow bundle endpoint")
            tag = "E1"
        elif size == 2:
            if not diff <= a:
                reject("two added elements must both be selected")
            tag = "E2"
        elif size == 3:
            hollow = dv & ({1, 2} - a)
            if len(hollow) != 1:
                reject("three-element shape needs exactly one hollow endpoint")
            if not da:
                reject("three-element shape needs a selected bundle edge")
            rest = diff - hollow
            if len(da) == 2:
                if rest != da:
                    reject("shape must be endpoint plus two selected edges")
            else:
                c = next(iter(rest - da))
                if not isinstance(c, int) or c not in a:
                    reject("companion element must be a selected vertex or edge")
                corner = (
                    info.has_leaf_pair
                    and len(verts - low_verts) == 3
                    and {info.n - 1, info.n} <= verts - low_verts
                    and c in {info.n - 1, info.n}
                )
                if not corner and (not missing or c != min(missing)):
                    reject("vertex must be the smallest one absent from the lower set")
            tag = "E3"
        elif size == 4:
            if dv != {1, 2} or not dv <= a or len(da) != 2:
                reject("four-element shape must be both endpoints plus two selected edges")
            tag = "E4"
        else:
            reject("difference too large for a selected-only shape")

    if tag not in _ALLOWED_TAGS[row]:
        reject(f"shape {tag} cannot occur in the {row.replace('_', ' ')} case")
    return tag


# ------------------------------------------------------------- chain lengths


def chain_length_spectrum(ep: EvenPoset) -> frozenset:
    """Set of lengths of maximal chains of the bounded even poset."""
    bp = ep.poset
    inner = bp.poset
    ups = bp.covers_up
    dp: list[set] = [set() for _ in range(len(inner))]
    dp[bp.bottom] = {0}
    for x in inner.topological_order():
        if not dp[x]:
            continue
        for y in ups[x]:
            dp[y] |= {l + 1 for l in dp[x]}
    return frozenset(dp[bp.top])


def expected_spectrum(ep: EvenPoset) -> frozenset:
    """Possible maximal-chain lengths for a canonical single-bundle host.

    Every maximal chain realizes one of the returned values.  On two-vertex
    hosts with every vertex selected only the shorter value occurs; all other
    generated instances realize the full set.
    """
    info = ep.canonical_host()
    half = len(ep.admissible) // 2
    ell = len(info.b_edges)
    if info.n % 2:
        if ell == 0 and not info.two_three_adjacent:
            return frozenset({half + 1})
        return frozenset({half + ell, half + ell + 1})
    if frozenset(ep.host.vertices) - info.a_vertices:
        return frozenset({half + ell + 1})
    return frozenset({half + ell - 1, half + ell})
