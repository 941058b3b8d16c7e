"""Loopless multigraphs with labeled bundles of parallel edges.

A *bundle* is a maximal set of parallel edges sharing both endpoints; it has
at least two edges and each of its edges carries a distinct label.  Edges
outside bundles are *simple* and unlabeled.  The *ground set* of a graph is
its vertex set together with all bundle-edge labels.

A subgraph containing at least one edge between every adjacent pair of its
vertices is *semi-induced*; such a subgraph is faithfully described by the
subset of the ground set consisting of its vertices and its bundle edges
(simple edges between present vertices are implicitly included).

Replacing some bundles by unlabeled simple edges and then taking an induced
subgraph yields a *PI-graph*; PI-graphs inherit the original vertex ids and
bundle labels, and are deduplicated as labeled objects, not up to
isomorphism.

An *admissible collection* for a graph H is a subset A of the ground set
such that, within each component of H: |A ∩ V| is even, every vertex
incident to simple edges only lies in A, and A meets each bundle in a
nonempty even set.  A semi-induced subgraph is *A-even* (*A-odd*) if each
of its components meets A in an even (odd) number of elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

GroundElement = int | str


@dataclass(frozen=True)
class Bundle:
    """A maximal parallel class: endpoints u < v and ≥ 2 labeled edges."""

    u: int
    v: int
    labels: tuple[str, ...]

    def __post_init__(self):
        assert self.u < self.v, "bundle endpoints must be normalized u < v"
        assert len(self.labels) >= 2, "a bundle has at least two edges"

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


class Multigraph:
    """Immutable loopless multigraph with simple edges and labeled bundles.

    Vertices are positive integers (arbitrary ids; parsing produces 1..n).
    ``simple_edges`` are unordered vertex pairs; ``bundles`` keep their
    input order, as do the labels inside each bundle.
    """

    def __init__(self, vertices=(), simple_edges=(), bundles=()):
        self.vertices: tuple[int, ...] = tuple(sorted(set(vertices)))
        vset = set(self.vertices)

        norm = []
        for u, v in simple_edges:
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge {u}-{v} uses an unknown vertex")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate simple edge")
        self.simple_edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))

        bnorm = []
        for b in bundles:
            if not isinstance(b, Bundle):
                u, v, labels = b
                b = Bundle(min(u, v), max(u, v), tuple(labels))
            if b.u == b.v:
                raise ValueError("loop bundle")
            if b.u not in vset or b.v not in vset:
                raise ValueError(f"bundle {b.u}-{b.v} uses an unknown vertex")
            bnorm.append(b)
        self.bundles: tuple[Bundle, ...] = tuple(bnorm)

        # label -> (bundle index, position); uniqueness across the graph
        self.label_index: dict[str, tuple[int, int]] = {}
        for i, b in enumerate(self.bundles):
            for j, lab in enumerate(b.labels):
                if lab in self.label_index:
                    raise ValueError(f"duplicate edge label {lab!r}")
                self.label_index[lab] = (i, j)

        # adjacency and the kind of each adjacent pair
        pair_kind: dict[tuple[int, int], int | str] = {}
        for u, v in self.simple_edges:
            pair_kind[(u, v)] = "simple"
        for i, b in enumerate(self.bundles):
            if (b.u, b.v) in pair_kind:
                raise ValueError(
                    f"pair {b.u}-{b.v} has both a simple edge and a bundle "
                    "(bundles are maximal parallel classes)"
                )
            pair_kind[(b.u, b.v)] = i
        self._pair_kind = pair_kind
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in pair_kind:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj

    # ------------------------------------------------------------- basics

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._pair_kind

    def bundle_between(self, u: int, v: int) -> Bundle | None:
        k = self._pair_kind.get((min(u, v), max(u, v)))
        return self.bundles[k] if isinstance(k, int) else None

    def is_simple(self) -> bool:
        return not self.bundles

    @property
    def edge_count(self) -> int:
        return len(self.simple_edges) + sum(len(b.labels) for b in self.bundles)

    def ground_set(self) -> frozenset[GroundElement]:
        labels = [lab for b in self.bundles for lab in b.labels]
        return frozenset(self.vertices) | frozenset(labels)

    def sort_key(self, x: GroundElement):
        """Deterministic order: vertices ascending, then labels in file order."""
        if isinstance(x, int):
            return (0, x, 0)
        i, j = self.label_index[x]
        return (1, i, j)

    def endpoints_of(self, label: str) -> frozenset[int]:
        i, _ = self.label_index[label]
        return self.bundles[i].ends

    def __eq__(self, other):
        return (
            isinstance(other, Multigraph)
            and self.vertices == other.vertices
            and self.simple_edges == other.simple_edges
            and self.bundles == other.bundles
        )

    def __hash__(self):
        return hash((self.vertices, self.simple_edges, self.bundles))

    def __repr__(self):
        return (
            f"Multigraph(vertices={self.vertices}, "
            f"simple_edges={self.simple_edges}, bundles={self.bundles})"
        )

    # --------------------------------------------------------- components

    def components(self) -> list["Multigraph"]:
        """Connected components as multigraphs with inherited labels."""
        seen: set[int] = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            stack, comp = [start], {start}
            seen.add(start)
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        seen.add(w)
                        stack.append(w)
            comps.append(self.induced(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertex_subset) -> "Multigraph":
        """Induced sub-multigraph on the given vertices (labels inherited)."""
        vs = set(vertex_subset)
        assert vs <= set(self.vertices)
        return Multigraph(
            vs,
            [e for e in self.simple_edges if e[0] in vs and e[1] in vs],
            [b for b in self.bundles if b.u in vs and b.v in vs],
        )

    # --------------------------------------------------- semi-induced sets

    def _check_ground(self, s) -> frozenset[GroundElement]:
        s = frozenset(s)
        ground = self.ground_set()
        bad = s - ground
        if bad:
            raise ValueError(f"elements not in ground set: {sorted(map(str, bad))}")
        return s

    def is_semi_induced(self, s) -> bool:
        """True iff s (vertices + bundle edges) describes a semi-induced subgraph."""
        s = self._check_ground(s)
        verts = {x for x in s if isinstance(x, int)}
        for x in s:
            if isinstance(x, str):
                if not self.endpoints_of(x) <= verts:
                    return False
        for b in self.bundles:
            if b.u in verts and b.v in verts and not (set(b.labels) & s):
                return False
        return True

    def subgraph_components(self, s) -> list[frozenset[GroundElement]]:
        """Partition of a semi-induced set into its connected components.

        Simple host edges between present vertices count as connections;
        bundle edges connect only if selected.  Isolated vertices form
        their own components, and each selected label joins the component
        of its endpoints.
        """
        s = frozenset(s)
        verts = sorted(x for x in s if isinstance(x, int))
        labels = [x for x in s if isinstance(x, str)]
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

        for u, v in itertools.combinations(verts, 2):
            k = self._pair_kind.get((u, v))
            if k == "simple":
                union(u, v)
        for lab in labels:
            u, v = sorted(self.endpoints_of(lab))
            union(u, v)

        groups: dict[int, set[GroundElement]] = {}
        for v in verts:
            groups.setdefault(find(v), set()).add(v)
        for lab in labels:
            u = next(iter(self.endpoints_of(lab)))
            groups[find(u)].add(lab)
        return [frozenset(groups[r]) for r in sorted(groups, key=lambda r: min(g for g in groups[r] if isinstance(g, int)))]

    def enumerate_semi_induced(self):
        """All semi-induced subgraph sets, deterministically ordered.

        Vertex subsets by ascending bitmask over the sorted vertex list;
        within a vertex subset, each present bundle contributes a nonempty
        edge subset, bundles in input order, subsets by ascending bitmask.
        """
        vs = self.vertices
        for vmask in range(1 << len(vs)):
            sel = [vs[i] for i in range(len(vs)) if vmask >> i & 1]
            selset = set(sel)
            present = [b for b in self.bundles if b.u in selset and b.v in selset]
            choices = []
            for b in present:
                subs = []
                for emask in range(1, 1 << len(b.labels)):
                    subs.append([b.labels[i] for i in range(len(b.labels)) if emask >> i & 1])
                choices.append(subs)
            for combo in itertools.product(*choices):
                yield frozenset(sel) | frozenset(x for part in combo for x in part)

    # -------------------------------------------------------- parity sets

    def meets_evenly(self, s, a) -> bool:
        """True iff every component of the semi-induced set s meets a evenly."""
        a = frozenset(a)
        return all(len(c & a) % 2 == 0 for c in self.subgraph_components(s))

    def meets_oddly(self, s, a) -> bool:
        a = frozenset(a)
        return all(len(c & a) % 2 == 1 for c in self.subgraph_components(s))

    # ------------------------------------------------------- admissibility

    def simple_only_vertices(self) -> frozenset[int]:
        """Vertices not incident to any bundle (isolated vertices included)."""
        bundle_ends = {v for b in self.bundles for v in (b.u, b.v)}
        return frozenset(v for v in self.vertices if v not in bundle_ends)

    def is_admissible(self, a) -> bool:
        """Definition of an admissible collection, checked per component."""
        a = self._check_ground(a)
        for comp in self.components():
            ca = a & comp.ground_set()
            if len({x for x in ca if isinstance(x, int)}) % 2:
                return False
            if not comp.simple_only_vertices() <= ca:
                return False
            for b in comp.bundles:
                hit = set(b.labels) & ca
                if not hit or len(hit) % 2:
                    return False
        return True

    def enumerate_admissible(self):
        """All admissible collections, deterministically ordered.

        Built constructively per component: forced simple-only vertices,
        then free-vertex subsets of the right parity (bitmask ascending),
        then per bundle the nonempty even label subsets (bitmask ascending);
        components combined in order.
        """
        per_component = []
        for comp in self.components():
            forced = comp.simple_only_vertices()
            free = [v for v in comp.vertices if v not in forced]
            want = len(forced) % 2
            vparts = []
            for vmask in range(1 << len(free)):
                if bin(vmask).count("1") % 2 == want:
                    vparts.append(frozenset(free[i] for i in range(len(free)) if vmask >> i & 1) | forced)
            bparts_per_bundle = []
            for b in comp.bundles:
                subs = []
                for emask in range(1, 1 << len(b.labels)):
                    if bin(emask).count("1") % 2 == 0:
                        subs.append(frozenset(b.labels[i] for i in range(len(b.labels)) if emask >> i & 1))
                bparts_per_bundle.append(subs)
            combos = []
            for vpart in vparts:
                for bcombo in itertools.product(*bparts_per_bundle):
                    combos.append(vpart | frozenset(x for part in bcombo for x in part))
            per_component.append(combos)
        out = []
        for pick in itertools.product(*per_component):
            out.append(frozenset(x for part in pick for x in part))
        return out

    # ----------------------------------------------------------- PI-graphs

    def pi_graph(self, vertex_subset, replaced_bundles) -> "PiGraph":
        """Induced subgraph after replacing the given bundles by simple edges."""
        vs = set(vertex_subset)
        replaced = frozenset(replaced_bundles)
        simple = [e for e in self.simple_edges if e[0] in vs and e[1] in vs]
        bundles = []
        for i, b in enumerate(self.bundles):
            if b.u in vs and b.v in vs:
                if i in replaced:
                    simple.append((b.u, b.v))
                else:
                    bundles.append(b)
        return PiGraph(Multigraph(vs, simple, bundles), frozenset(vs), replaced)

    def enumerate_pi_graphs(self) -> list["PiGraph"]:
        """All PI-graphs, deduplicated as labeled objects (first occurrence kept).

        Vertex-subset bitmask ascending, then bundle-replacement bitmask
        ascending; includes the empty graph and the graph itself.
        """
        vs = self.vertices
        out, seen = [], set()
        for vmask in range(1 << len(vs)):
            sel = {vs[i] for i in range(len(vs)) if vmask >> i & 1}
            live = [i for i, b in enumerate(self.bundles) if b.u in sel and b.v in sel]
            for rmask in range(1 << len(live)):
                replaced = frozenset(live[i] for i in range(len(live)) if rmask >> i & 1)
                pi = self.pi_graph(sel, replaced)
                key = (pi.graph.vertices, pi.graph.simple_edges, pi.graph.bundles)
                if key not in seen:
                    seen.add(key)
                    out.append(pi)
        return out

    def a_star(self) -> list[tuple["PiGraph", frozenset]]:
        """All pairs (H, A): H a PI-graph, A admissible for H."""
        return [
            (pi, a)
            for pi in self.enumerate_pi_graphs()
            for a in pi.graph.enumerate_admissible()
        ]

    # ------------------------------------------------------- serialization

    def format_set(self, s) -> str:
        """Token string: vertices ascending, then labels in file order; ∅ for empty.

        >>> g = parse_graph("vertices 2\\nedge 1 2 a\\nedge 1 2 b")
        >>> g.format_set({2, 1, "b", "a"})
        '12ab'
        >>> g.format_set(frozenset())
        '∅'
        """
        s = frozenset(s)
        if not s:
            return "∅"
        return "".join(str(x) for x in sorted(s, key=self.sort_key))

    def parse_set(self, text: str) -> frozenset[GroundElement]:
        """Whitespace-separated ground-element tokens -> frozenset.

        >>> g = parse_graph("vertices 2\\nedge 1 2 a\\nedge 1 2 b")
        >>> sorted(g.parse_set("2 1 a"), key=str)
        [1, 2, 'a']
        """
        out = set()
        for tok in text.split():
            if tok in ("∅", "0̂", "{}"):
                continue
            if tok.isdigit():
                v = int(tok)
                if v not in set(self.vertices):
                    raise ValueError(f"unknown vertex {v}")
                out.add(v)
            elif tok in self.label_index:
                out.add(tok)
            else:
                raise ValueError(f"unknown ground element {tok!r}")
        return frozenset(out)


@dataclass(frozen=True)
class PiGraph:
    """A PI-graph with its provenance in the source multigraph."""

    graph: Multigraph
    vertex_set: frozenset[int]
    replaced: frozenset[int] = field(default_factory=frozenset)  # source bundle indices


def parse_graph(text: str) -> Multigraph:
    """Parse the graph file format.

    Lines: ``vertices <n>`` (vertices become 1..n), then ``edge <u> <v>``
    for a simple edge or ``edge <u> <v> <label>`` for a bundle member;
    ``#`` starts a comment.  Parallel classes of size ≥ 2 become bundles
    (every member must be labeled); lone edges must be unlabeled.
    """
    n = None
    raw_edges: list[tuple[int, int, str | None]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: malformed vertices line")
            if n is not None:
                raise ValueError(f"line {lineno}: repeated vertices line")
            n = int(parts[1])
        elif parts[0] == "edge":
            if len(parts) not in (3, 4):
                raise ValueError(f"line {lineno}: malformed edge line")
            if n is None:
                raise ValueError(f"line {lineno}: edge before vertices line")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed edge endpoints") from None
            if u == v:
                raise ValueError(f"line {lineno}: loop edge at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: endpoint out of range 1..{n}")
            raw_edges.append((min(u, v), max(u, v), parts[3] if len(parts) == 4 else None))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing vertices line")

    by_pair: dict[tuple[int, int], list[str | None]] = {}
    pair_order: list[tuple[int, int]] = []
    for u, v, lab in raw_edges:
        if (u, v) not in by_pair:
            pair_order.append((u, v))
        by_pair.setdefault((u, v), []).append(lab)

    simple, bundles = [], []
    for pair in pair_order:
        labs = by_pair[pair]
        if len(labs) == 1:
            if labs[0] is not None:
                raise ValueError(f"simple edge {pair[0]}-{pair[1]} must be unlabeled")
            simple.append(pair)
        else:
            if any(l is None for l in labs):
                raise ValueError(f"bundle edge {pair[0]}-{pair[1]} missing label")
            bundles.append(Bundle(pair[0], pair[1], tuple(labs)))
    return Multigraph(range(1, n + 1), simple, bundles)


def format_graph(g: Multigraph) -> str:
    """Inverse of parse_graph for graphs with vertices 1..n."""
    assert g.vertices == tuple(range(1, g.n + 1)), "only 1..n graphs serialize"
    lines = [f"vertices {g.n}"]
    for u, v in g.simple_edges:
        lines.append(f"edge {u} {v}")
    for b in g.bundles:
        for lab in b.labels:
            lines.append(f"edge {b.u} {b.v} {lab}")
    return "\n".join(lines) + "\n"
