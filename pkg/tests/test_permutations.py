from math import factorial

import numpy as np
import pytest
from hypothesis import given, strategies as st

from youngops.permutations import (
    all_permutations,
    check_perm,
    compose,
    cycle_count,
    cycle_type,
    cycles,
    embed,
    identity,
    inverse,
    is_perm,
    perms_of,
    sign,
    transposition,
)

perm3 = st.permutations(range(1, 4)).map(tuple)
perm5 = st.permutations(range(1, 6)).map(tuple)


def test_compose_applies_right_factor_first():
    # (12) after (13): 1 -> 3, 2 -> 1, 3 -> 2.
    t12 = transposition(3, 1, 2)
    t13 = transposition(3, 1, 3)
    assert compose(t12, t13) == (3, 1, 2)
    # and the other order gives the other 3-cycle
    assert compose(t13, t12) == (2, 3, 1)


def test_compose_identity_and_inverse():
    p = (3, 1, 4, 2)
    assert compose(p, identity(4)) == p
    assert compose(identity(4), p) == p
    assert compose(p, inverse(p)) == identity(4)
    assert compose(inverse(p), p) == identity(4)


def _matrix(p):
    m = np.zeros((len(p), len(p)), dtype=int)
    for k, image in enumerate(p, start=1):
        m[image - 1, k - 1] = 1
    return m


@given(perm3, perm3)
def test_compose_matches_matrix_product(a, b):
    assert (_matrix(compose(a, b)) == _matrix(a) @ _matrix(b)).all()


def test_cycles_and_counts():
    assert cycles((2, 1, 3)) == [(1, 2), (3,)]
    assert cycles((2, 3, 1)) == [(1, 2, 3)]
    assert cycle_count(identity(5)) == 5
    assert cycle_type((2, 1, 4, 3)) == (2, 2)
    assert cycle_type((3, 1, 2, 4)) == (3, 1)


def test_sign_known_values():
    assert sign(identity(4)) == 1
    assert sign(transposition(4, 2, 4)) == -1
    assert sign((2, 3, 1)) == 1


@given(perm5, perm5)
def test_sign_is_multiplicative(a, b):
    assert sign(compose(a, b)) == sign(a) * sign(b)


@given(perm5)
def test_inverse_is_involutive(p):
    assert inverse(inverse(p)) == p
    assert sign(inverse(p)) == sign(p)


def test_all_permutations_counts():
    for n in range(1, 6):
        seen = list(all_permutations(n))
        assert len(seen) == factorial(n)
        assert len(set(seen)) == factorial(n)


def test_validation():
    assert is_perm((2, 1, 3))
    assert not is_perm((1, 1, 3))
    assert not is_perm((0, 1, 2))
    with pytest.raises(ValueError):
        check_perm((1, 2, 2))


def test_embed_fixes_trailing_slots():
    assert embed((2, 1), 4) == (2, 1, 3, 4)
    assert embed((2, 1), 2) == (2, 1)
    with pytest.raises(ValueError):
        embed((2, 1, 3), 2)


def test_perms_of_is_the_subgroup_on_the_subset():
    moved = list(perms_of([2, 4], 4))
    assert sorted(moved) == [(1, 2, 3, 4), (1, 4, 3, 2)]
    assert len(list(perms_of([1, 3, 5], 5))) == 6
    for p in perms_of([1, 3, 5], 5):
        assert p[1] == 2 and p[3] == 4
