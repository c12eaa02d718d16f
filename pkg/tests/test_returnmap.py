from collections import Counter

import pytest

from dtorus5.modring import (
    add,
    displacement,
    root_points,
    rotate,
    sub,
    vec,
    zero_set,
)
from dtorus5.returnmap import (
    NORMALIZED_SHIFT,
    check_identities,
    color_return,
    conjugating_direction,
    cycle_structure,
    normalized_color_return,
    normalized_return,
    normalized_shift,
    selector_step,
)
from dtorus5.selector import selector
from dtorus5.verdicts import StructuralError


def test_color_return_m3_from_origin():
    # three layers: translate by q_4 (identity), selector step, translate by q_3
    assert color_return(3, 0, (0, 0, 0, 0, 0)) == (1, 0, 0, 1, 1)


def test_normalized_return_examples():
    assert normalized_return(3, (0, 0, 0, 0, 0)) == (1, 0, 0, 1, 1)
    assert normalized_return(5, (0, 1, 0, 0, 4)) == (2, 1, 1, 1, 0)
    assert normalized_return(3, (1, 0, 0, 1, 1)) == (1, 0, 0, 2, 0)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_coordinate_deltas(m):
    # delta table: w_0 drops by 3 unless p = 0, w_3 and w_4 rise by 1, and
    # coordinate p gains one extra
    for w in root_points(m):
        p = selector(zero_set(w))
        g = normalized_return(m, w)
        deltas = tuple((b - a) % m for a, b in zip(w, g))
        expect = [(-3) % m, 0, 0, 1, 1]
        expect[p] = (expect[p] + 1) % m
        assert deltas == tuple(expect)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_normalized_shift_consistency(m):
    # the constant (-3,0,0,1,1) plus e_p equals -3q_0 + q_3 + q_p for every p
    base = normalized_shift(m, 0)  # -3q_0 + q_3 + q_4, and q_4 = 0
    for p in range(5):
        via_q = add(base, displacement(p, m), m)
        via_B = vec([NORMALIZED_SHIFT[j] + (1 if j == p else 0) for j in range(5)], m)
        assert via_q == via_B


@pytest.mark.parametrize("m", [3, 5])
def test_color_zero_reduces_to_normalized(m):
    for w in root_points(m):
        assert normalized_color_return(m, 0, w) == normalized_return(m, w)


def test_m3_shift_loses_triple_term():
    # -3 q_c vanishes mod 3, so the color-c shift is q_{c+3} + q_{c+4}
    for c in range(5):
        expect = add(displacement((c + 3) % 5, 3), displacement((c + 4) % 5, 3), 3)
        assert normalized_shift(3, c) == expect


def test_return_transfer_spot_value():
    m, w = 5, (0, 1, 0, 0, 4)
    assert normalized_color_return(m, 1, rotate(1, w)) == rotate(1, normalized_return(m, w))


@pytest.mark.parametrize("m", [3, 5])
def test_check_identities(m):
    results = check_identities(m)
    assert set(results) == {"rotation", "layer-transfer", "return-transfer"}
    assert all(v.ok for v in results.values())


def test_wrong_rotation_breaks_the_identity():
    # rotating by w_{j+c} instead of w_{j-c} must fail the displacement rule
    def bad_rotate(c, w):
        return tuple(w[(j + c) % 5] for j in range(5))

    m = 5
    failures = [
        (c, i)
        for c in range(5)
        for i in range(5)
        if bad_rotate(c, displacement(i, m))
        != sub(displacement((i + c) % 5, m), displacement((4 + c) % 5, m), m)
    ]
    assert failures


@pytest.mark.parametrize("m", [3, 5])
def test_conjugacy_pointwise(m):
    # G_c = T(q_k) o R_c o T(q_k)^{-1} with the schedule-dependent k
    for c in range(5):
        k = conjugating_direction(m, c)
        qk = displacement(k, m)
        for w in root_points(m):
            lhs = add(qk, color_return(m, c, sub(w, qk, m)), m)
            assert lhs == normalized_color_return(m, c, w)


def test_cycle_structure_identity():
    assert cycle_structure(lambda w: w, 3) == Counter({1: 81})


def test_cycle_structure_translation():
    m = 5
    q0 = displacement(0, m)
    assert cycle_structure(lambda w: add(w, q0, m), m) == Counter({5: 125})


def test_cycle_structure_normalized_return():
    assert cycle_structure(lambda w: normalized_return(3, w), 3) == Counter({81: 1})
    assert cycle_structure(lambda w: normalized_return(5, w), 5) == Counter({625: 1})


def test_cycle_structure_rejects_non_bijection():
    with pytest.raises(StructuralError):
        cycle_structure(lambda w: (0, 0, 0, 0, 0), 3)
    with pytest.raises(StructuralError):
        cycle_structure(lambda w: (1, 0, 0, 0, 0), 3)  # leaves the hyperplane


@pytest.mark.parametrize("m", [3, 5])
def test_conjugate_maps_share_cycle_structure(m):
    base = cycle_structure(lambda w: normalized_return(m, w), m)
    for c in range(5):
        assert cycle_structure(lambda w: color_return(m, c, w), m) == base
        assert cycle_structure(lambda w: normalized_color_return(m, c, w), m) == base


def test_selector_step_is_a_bijection():
    # the matching consequence: the non-constant layer alone permutes the flat
    for m in (3, 5):
        lengths = cycle_structure(lambda w: selector_step(m, 0, w), m)
        assert sum(k * v for k, v in lengths.items()) == m ** 4
