"""Finite posets: axioms, covers, intervals, products, Mobius, order complex."""

from __future__ import annotations

import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from evenposets.evenposet import even_poset, odd_poset
from evenposets.homology import integral_reduced_homology
from evenposets.multigraph import Multigraph
from evenposets.poset import (
    BoundedPoset,
    Poset,
    count_maximal_chains,
    from_order,
    from_subsets,
    interval,
    is_totally_semimodular,
    maximal_chains,
    mobius_invariant,
    order_complex,
    product,
)


def chain(k: int) -> BoundedPoset:
    return from_order(range(k), lambda x, y: x <= y).bounded()


def boolean_lattice(letters: str) -> BoundedPoset:
    subsets = [
        frozenset(c)
        for r in range(len(letters) + 1)
        for c in itertools.combinations(letters, r)
    ]
    return from_subsets(subsets).bounded()


# --------------------------------------------------------------------------
# Axioms and basic structure.


def test_axiom_violations_raise():
    with pytest.raises(ValueError, match="not reflexive"):
        from_order([1, 2], lambda x, y: x < y)
    with pytest.raises(ValueError, match="not antisymmetric"):
        from_order([1, 2], lambda x, y: True)

    def not_transitive(x, y):
        return x == y or (x, y) in {(1, 2), (2, 3)}

    with pytest.raises(ValueError, match="not transitive"):
        from_order([1, 2, 3], not_transitive)


def test_check_false_skips_validation():
    n = 2
    leq = np.zeros((n, n), dtype=bool)
    Poset([1, 2], leq, check=False)  # silently accepted


def test_double_diamond_covers_and_chains():
    bp = helpers.double_diamond()
    covers = {
        (bp.elements[i], bp.elements[j]) for i, j in bp.poset.cover_pairs()
    }
    assert covers == helpers.DOUBLE_DIAMOND_COVERS
    chains = maximal_chains(bp)
    assert len(chains) == count_maximal_chains(bp) == 4
    rendered = {tuple(bp.elements[i] for i in ch) for ch in chains}
    assert rendered == {
        ("a", "b", "d", "f"),
        ("a", "b", "e", "f"),
        ("a", "c", "d", "f"),
        ("a", "c", "e", "f"),
    }
    assert bp.length() == 3
    assert bp.atoms() == ["b", "c"]
    assert bp.is_pure()


def test_minimal_maximal_and_height():
    p = helpers.double_diamond().poset
    assert [p.elements[i] for i in p.minimal_elements()] == ["a"]
    assert [p.elements[i] for i in p.maximal_elements()] == ["f"]
    assert p.height() == 4
    topo = p.topological_order()
    pos = {i: k for k, i in enumerate(topo)}
    assert all(pos[i] < pos[j] for i, j in p.cover_pairs())


def test_bounded_requires_unique_ends():
    antichain = from_order([1, 2], lambda x, y: x == y)
    with pytest.raises(ValueError, match="not bounded"):
        antichain.bounded()


def test_proper_part_requires_length():
    singleton = from_order([1], lambda x, y: True).bounded()
    with pytest.raises(ValueError, match="length >= 1"):
        singleton.proper_part()
    assert len(chain(2).proper_part().elements) == 0
    assert [x for x in helpers.double_diamond().proper_part().elements] == list("bcde")


# --------------------------------------------------------------------------
# Intervals and subposets.


def test_interval_examples():
    bp = helpers.double_diamond()
    diamond = interval(bp.poset, "a", "d")
    assert sorted(diamond.elements) == ["a", "b", "c", "d"]
    assert diamond.length() == 2
    whole = interval(bp.poset, "a", "f")
    assert len(whole.elements) == 6
    point = interval(bp.poset, "c", "c")
    assert point.elements == ["c"]
    with pytest.raises(ValueError, match="incomparable"):
        interval(bp.poset, "d", "e")


def test_interval_of_even_poset_is_a_diamond():
    g = helpers.pp44_host()
    ep = even_poset(g, g.parse_set("1 2 3 4 a1 a2"))
    iv = interval(ep.poset.poset, frozenset({1, 3}), g.parse_set("1 2 3 4 a1 a2"))
    assert sorted(g.format_set(s) for s in iv.elements) == [
        "1234a1a2",
        "123a1",
        "123a2",
        "13",
    ]


def test_subposet():
    bp = helpers.double_diamond()
    sub = bp.poset.subposet([bp.index("a"), bp.index("b"), bp.index("d")])
    assert sub.elements == ["a", "b", "d"]
    assert sub.height() == 3


# --------------------------------------------------------------------------
# Products.


def test_product_of_two_chains_is_a_diamond():
    c2 = chain(2)
    prod = product(c2.poset, c2.poset)
    bp = prod.bounded()
    assert len(prod.elements) == 4
    assert len(maximal_chains(bp)) == 2
    assert mobius_invariant(bp) == 1
    assert bp.is_pure()


def test_product_with_singleton_is_isomorphic():
    one = from_order([0], lambda x, y: True)
    dd = helpers.double_diamond().poset
    prod = product(dd, one)
    assert len(prod.elements) == len(dd.elements)
    assert sorted(map(tuple, prod.cover_pairs())) == sorted(
        map(tuple, dd.cover_pairs())
    )


@st.composite
def bounded_posets(draw):
    ground = "wxyz"
    fams = draw(
        st.sets(
            st.frozensets(st.sampled_from(ground), max_size=4), min_size=0, max_size=5
        )
    )
    sets = set(fams) | {frozenset(), frozenset(ground)}
    return from_subsets(sorted(sets, key=lambda s: (len(s), sorted(s)))).bounded()


@settings(max_examples=40, deadline=None)
@given(bounded_posets(), bounded_posets())
def test_mobius_is_multiplicative_over_products(p, q):
    prod = product(p.poset, q.poset).bounded()
    assert mobius_invariant(prod) == mobius_invariant(p) * mobius_invariant(q)


# --------------------------------------------------------------------------
# Mobius invariant.


def test_mobius_small_examples():
    assert mobius_invariant(from_order([0], lambda x, y: True).bounded()) == 1
    assert mobius_invariant(chain(2)) == -1
    assert mobius_invariant(chain(3)) == 0
    assert mobius_invariant(boolean_lattice("xyz")) == -1
    assert mobius_invariant(helpers.double_diamond()) == -1


def test_mobius_of_even_path_poset():
    g = helpers.path4()
    ep = even_poset(g, {1, 2, 3, 4})
    assert mobius_invariant(ep.poset) == 2


def test_mobius_equals_reduced_euler_characteristic_of_proper_complex():
    for bp in (helpers.double_diamond(), boolean_lattice("xyz")):
        complex_ = order_complex(bp.proper_part())
        assert mobius_invariant(bp) == complex_.euler_characteristic_reduced()


# --------------------------------------------------------------------------
# Transitive structure.


@settings(max_examples=40, deadline=None)
@given(bounded_posets())
def test_covers_regenerate_the_order(p):
    poset = p.poset
    n = len(poset.elements)
    reach = np.eye(n, dtype=bool) | poset.covers_matrix
    for _ in range(n):
        reach = reach | (reach @ reach)
    assert (reach == poset.leq).all()


def test_totally_semimodular_examples():
    assert is_totally_semimodular(boolean_lattice("xyz"))
    g = helpers.path4()
    assert is_totally_semimodular(even_poset(g, {1, 2, 3, 4}).poset)
    host = helpers.p53_host()
    ep = even_poset(host, host.parse_set("2 3 4 5 a1 a2"))
    assert not is_totally_semimodular(ep.poset)


# --------------------------------------------------------------------------
# Order complex.


def test_order_complex_examples():
    three = chain(3)
    oc = order_complex(three.poset)
    assert oc.facets == [frozenset({0, 1, 2})]

    antichain = from_order([1, 2, 3], lambda x, y: x == y)
    oc = order_complex(antichain)
    assert sorted(map(tuple, oc.facets)) == [(0,), (1,), (2,)]

    dd = helpers.double_diamond()
    oc = order_complex(dd.proper_part())
    assert sorted(tuple(sorted(f)) for f in oc.facets) == [
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
    ]
    hs = integral_reduced_homology(oc)
    assert hs.nonzero() == {1: 1}  # a circle


def test_order_complex_of_empty_poset():
    empty = from_order([], lambda x, y: True)
    oc = order_complex(empty)
    assert oc.facets == [frozenset()]
    assert oc.dim == -1


def test_unbounded_odd_poset_chains():
    g = helpers.path4()
    op = odd_poset(g, {1, 2, 3, 4})
    assert sorted(g.format_set(s) for s in op.elements) == [
        "1",
        "123",
        "13",
        "14",
        "2",
        "234",
        "24",
        "3",
        "4",
    ]
    chains = op.maximal_chains_general()
    assert all(
        op.leq[ch[i], ch[i + 1]] for ch in chains for i in range(len(ch) - 1)
    )


# --------------------------------------------------------------------------
# Serialization.


def test_to_json_and_to_dot():
    bp = helpers.double_diamond()
    data = json.loads(bp.poset.to_json())
    assert data["elements"] == list("abcdef")
    assert len(data["covers"]) == 8
    dot = bp.poset.to_dot()
    assert dot.startswith("digraph hasse {")
    assert "rankdir=BT" in dot
    assert dot.count("->") == 8
