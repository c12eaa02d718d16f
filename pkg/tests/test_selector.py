import pytest

from dtorus5.selector import (
    LATIN_REPRESENTATIVES,
    SELECTOR_TABLE,
    feasible_zero_sets,
    is_feasible,
    latin_row,
    layer1_rows_by_zmask,
    mask_of,
    rotate_color,
    selector,
    selector_by_zmask,
    selector_table,
    set_of,
    shift_set,
)
from dtorus5.verdicts import StructuralError


def test_representative_rows():
    assert LATIN_REPRESENTATIVES[frozenset()] == (0, 1, 2, 3, 4)
    assert LATIN_REPRESENTATIVES[frozenset({0})] == (0, 1, 3, 2, 4)
    assert LATIN_REPRESENTATIVES[frozenset({0, 1})] == (4, 1, 3, 2, 0)
    assert LATIN_REPRESENTATIVES[frozenset({0, 2})] == (4, 1, 3, 0, 2)
    assert LATIN_REPRESENTATIVES[frozenset({0, 1, 2})] == (1, 0, 3, 4, 2)
    assert LATIN_REPRESENTATIVES[frozenset({0, 1, 3})] == (4, 3, 0, 2, 1)
    assert LATIN_REPRESENTATIVES[frozenset(range(5))] == (0, 1, 2, 3, 4)


def test_latin_row_examples():
    assert latin_row(frozenset()) == (0, 1, 2, 3, 4)
    assert latin_row(frozenset({0}))[2] == 3
    # the {1} row comes from the {0} row by the cyclic rule with k = 1
    assert latin_row(frozenset({1})) == (0, 1, 2, 4, 3)


def test_feasible_zero_sets():
    sets = feasible_zero_sets()
    assert len(sets) == 27
    assert all(len(S) != 4 for S in sets)
    assert not is_feasible({0, 1, 2, 3})


def test_latin_row_rejects_size_four():
    with pytest.raises(ValueError):
        latin_row({0, 1, 2, 3})
    with pytest.raises(ValueError):
        selector({1, 2, 3, 4})


def test_every_row_is_a_permutation():
    for S in feasible_zero_sets():
        assert sorted(latin_row(S)) == [0, 1, 2, 3, 4]


def test_equivariance_exhaustive():
    # row(S+k)(a+k) = row(S)(a) + k over the full 27 x 5 x 5 grid
    for S in feasible_zero_sets():
        row = latin_row(S)
        for k in range(5):
            shifted = latin_row(shift_set(S, k))
            for a in range(5):
                assert shifted[(a + k) % 5] == (row[a] + k) % 5


def test_symmetric_sets_are_shift_independent():
    # only the empty set and Z_5 are fixed by rotation; their rows must come
    # out identical no matter which shift found the representative
    for S in (frozenset(), frozenset(range(5))):
        rows = {tuple((latin_row(shift_set(S, -k))[(c - k) % 5] + k) % 5 for c in range(5))
                for k in range(5)}
        assert rows == {latin_row(S)}


def test_selector_examples():
    assert selector(frozenset({0, 3})) == 2
    assert selector(frozenset(range(5))) == 0
    assert selector(frozenset({2, 4})) == 3
    assert selector(frozenset({3})) == 4
    assert selector(frozenset({4})) == 1


def test_selector_table_matches_embedded():
    table = selector_table()
    assert len(table) == 27
    assert table == SELECTOR_TABLE
    for Z in feasible_zero_sets():
        assert table[Z] == latin_row(shift_set(Z, -1))[0]


def test_selector_table_cross_check_detects_mutation():
    mutated = dict(LATIN_REPRESENTATIVES)
    mutated[frozenset({0})] = (0, 1, 3, 4, 2)
    with pytest.raises(StructuralError):
        selector_table(representatives=mutated)
    # the same table without the cross-check is returned as-is
    assert selector_table(representatives=mutated, cross_check=False) != SELECTOR_TABLE


def test_selector_two_characterization():
    expected = {frozenset({0, 3}), frozenset({0, 1, 3}), frozenset({0, 2, 3})}
    assert {Z for Z in feasible_zero_sets() if selector(Z) == 2} == expected


def test_mask_helpers():
    for S in feasible_zero_sets():
        assert set_of(mask_of(S)) == S
    rows = layer1_rows_by_zmask()
    sels = selector_by_zmask()
    assert len(rows) == 32
    assert sum(r is not None for r in rows) == 27
    for Z in feasible_zero_sets():
        assert rows[mask_of(Z)] == latin_row(shift_set(Z, -1))
        assert sels[mask_of(Z)] == selector(Z)


def test_rotate_color():
    assert rotate_color(3, 4) == 2
    assert [rotate_color(c, 1) for c in range(5)] == [1, 2, 3, 4, 0]
