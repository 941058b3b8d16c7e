"""Simplicial complexes and integral homology via Smith normal form."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from evenposets.evenposet import even_poset, odd_poset
from evenposets.homology import (
    HomologySummary,
    SimplicialComplex,
    SizeBudgetExceeded,
    boundary_matrix,
    integral_reduced_homology,
    wedge_summary,
)
from evenposets.poset import mobius_invariant, order_complex


def betti_dict(k: SimplicialComplex) -> dict:
    return integral_reduced_homology(k).nonzero()


# --------------------------------------------------------------------------
# Complex bookkeeping.


def test_facets_form_an_antichain():
    k = SimplicialComplex([(1, 2, 3), (1, 2), (3,), (4,)])
    assert sorted(map(sorted, k.facets)) == [[1, 2, 3], [4]]
    assert k.dim == 2
    assert not k.is_pure()
    assert SimplicialComplex([(1, 2), (2, 3)]).is_pure()


def test_face_enumeration_and_f_vector():
    k = SimplicialComplex([(1, 2, 3)])
    assert k.f_vector() == (1, 3, 3, 1)
    faces = k.faces()
    assert faces[-1] == [()]
    assert faces[1] == [(1, 2), (1, 3), (2, 3)]
    assert SimplicialComplex([]).f_vector() == (0,)
    # a complex with only the empty facet still has the empty face
    assert SimplicialComplex([()]).f_vector() == (1,)


def test_euler_characteristic_is_an_int():
    k = SimplicialComplex([(1, 2), (2, 3), (1, 3)])
    chi = k.euler_characteristic_reduced()
    assert chi == -1 + 3 - 3 == -1
    assert isinstance(chi, int)


def test_size_budget():
    k = SimplicialComplex([tuple(range(20))])
    with pytest.raises(SizeBudgetExceeded, match="more than 10 faces"):
        integral_reduced_homology(k, max_faces=10)


# --------------------------------------------------------------------------
# Boundary matrices.


def test_boundary_matrices_of_a_single_edge():
    k = SimplicialComplex([(1, 2)])
    d1 = boundary_matrix(k, 1)
    assert d1.tolist() == [[-1], [1]]
    d0 = boundary_matrix(k, 0)
    assert d0.tolist() == [[1, 1]]


def test_boundary_squares_to_zero_on_a_triangle():
    k = SimplicialComplex([(1, 2, 3)])
    d2 = boundary_matrix(k, 2)
    d1 = boundary_matrix(k, 1)
    assert np.count_nonzero(d1 @ d2) == 0
    assert np.linalg.matrix_rank(boundary_matrix(SimplicialComplex([(1, 2), (2, 3), (1, 3)]), 1)) == 2


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.frozensets(st.integers(0, 7), min_size=1, max_size=4),
        min_size=1,
        max_size=8,
    )
)
def test_random_complexes_satisfy_the_fundamental_identities(facets):
    k = SimplicialComplex(facets)
    for d in range(1, k.dim + 1):
        prod = boundary_matrix(k, d - 1) @ boundary_matrix(k, d)
        assert np.count_nonzero(prod) == 0
    hs = integral_reduced_homology(k)
    chi = sum((-1 if d % 2 else 1) * b for d, b in hs.ranks.items())
    assert chi == k.euler_characteristic_reduced()


# --------------------------------------------------------------------------
# Known homology values.


def test_point_and_wedges():
    hs = integral_reduced_homology(SimplicialComplex([(1,)]))
    assert hs.nonzero() == {}
    assert hs.is_torsion_free()
    assert wedge_summary(hs) == ()


def test_spheres_from_simplex_boundaries():
    for k in (3, 4, 5):
        facets = itertools.combinations(range(k), k - 1)
        hs = integral_reduced_homology(SimplicialComplex(facets))
        assert hs.nonzero() == {k - 2: 1}
        assert wedge_summary(hs) == (k - 2,)


def test_circle_and_two_circles():
    assert betti_dict(SimplicialComplex([(1, 2), (2, 3), (1, 3)])) == {1: 1}
    two = SimplicialComplex(
        [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]
    )
    assert betti_dict(two) == {1: 2}


def test_disconnected_pair_of_edges():
    hs = integral_reduced_homology(SimplicialComplex([(1, 2), (3, 4)]))
    assert hs.nonzero() == {0: 1}
    assert wedge_summary(hs) == (0,)


def test_projective_plane_has_two_torsion():
    hs = integral_reduced_homology(
        SimplicialComplex(helpers.PROJECTIVE_PLANE_FACETS)
    )
    assert hs.nonzero() == {}
    assert hs.torsion_at(1) == (2,)
    assert not hs.is_torsion_free()
    assert wedge_summary(hs) is None
    chi = sum((-1 if d % 2 else 1) * b for d, b in hs.ranks.items())
    assert chi == 0


def test_summary_accessors_and_json():
    hs = HomologySummary({-1: 0, 0: 0, 1: 2}, {1: (2, 4)})
    assert hs.betti(1) == 2 and hs.betti(5) == 0
    assert hs.torsion_at(1) == (2, 4) and hs.torsion_at(0) == ()
    assert hs.to_json_dict() == {
        "-1": {"betti": 0, "torsion": []},
        "0": {"betti": 0, "torsion": []},
        "1": {"betti": 2, "torsion": [2, 4]},
    }


# --------------------------------------------------------------------------
# Even-poset complexes.


def test_proper_complexes_of_reference_pairs():
    g = helpers.end_bundle_path3()
    ep = even_poset(g, g.parse_set("1 2 a b"))
    hs = integral_reduced_homology(ep.proper_complex())
    assert hs.is_torsion_free()

    pp = helpers.pp44_host()
    epp = even_poset(pp, pp.parse_set("3 4 a1 a2"))
    hp = integral_reduced_homology(epp.proper_complex())
    assert hp.nonzero() == {3: 3}
    assert wedge_summary(hp) == (3, 3, 3)


def test_mobius_equals_reduced_euler_characteristic():
    for g, a_text in (
        (helpers.p53_host(), "2 3 4 5 a1 a2"),
        (helpers.pp44_host(), "3 4 a1 a2"),
        (helpers.pp44_host(), "1 2 3 4 a1 a2"),
        (helpers.end_bundle_path4(), "3 4 a b"),
    ):
        ep = even_poset(g, g.parse_set(a_text))
        assert mobius_invariant(ep.poset) == ep.proper_complex().euler_characteristic_reduced()


def test_odd_even_duality_report(capsys):
    """Compare odd-side Betti numbers against the even side through the
    duality shift at the polytope dimension.  The agreement is reported, not
    asserted: both sides are computed independently and printed per pair."""
    from evenposets.classify import p_tilde

    rows = []
    agree = True
    for n in (2, 3, 4):
        g = p_tilde(n, 2)
        for a in sorted(g.enumerate_admissible(), key=sorted_key := lambda s: sorted(map(str, s))):
            d = g.n - 1 + sum(len(b.labels) - 1 for b in g.bundles)
            ep = even_poset(g, a)
            even_hom = integral_reduced_homology(ep.proper_complex())
            odd_hom = integral_reduced_homology(order_complex(odd_poset(g, a)))
            odd_side = [odd_hom.betti(t - 1) for t in range(d + 1)]
            even_side = [even_hom.betti(d - t - 1) for t in range(d + 1)]
            rows.append((n, g.format_set(a), odd_side, even_side))
            if odd_side != even_side:
                agree = False
    for n, a, lhs, rhs in rows:
        status = "==" if lhs == rhs else "!="
        print(f"bundle path n={n} A={a}: odd side {lhs} {status} even side {rhs}")
    print(f"duality check: {'all pairs agree' if agree else 'DISAGREEMENT observed'}")
    assert len(rows) == 6
