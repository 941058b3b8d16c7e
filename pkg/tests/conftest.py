"""Session fixtures shared across test modules.

The generated family corpus (every admissible set of every single-bundle
family host with |V| + |B| <= 9) is built once per session; several sweep
tests and the acceptance module iterate over it.
"""

from __future__ import annotations

import pytest

import helpers


@pytest.fixture(scope="session")
def family_pairs():
    pairs = helpers.family_pairs()
    assert len(pairs) >= 30
    return pairs


@pytest.fixture(scope="session")
def family_posets(family_pairs):
    """Canonically relabeled even posets for every generated pair."""
    return [
        (name, helpers.canonical_even_poset(g, a)) for name, g, a in family_pairs
    ]
