import pytest

from dtorus5.firstreturn import (
    BlockState,
    ReturnRecord,
    SectionPoint,
    WrapState,
    block_step,
    closed_form_first_return,
    displacement_from_counts,
    first_block,
    first_return_map,
    in_section,
    induced_cycle,
    long_wrap,
    row_excursion,
    section_matches_selector,
    section_points,
    section_root,
    section_size,
    simulate_first_return,
    total_excursion,
    wrap_root,
    wrap_step,
)
from dtorus5.modring import root_points, sub, vec
from dtorus5.returnmap import normalized_return
from dtorus5.verdicts import StructuralError


def iterate(m, w, n):
    for _ in range(n):
        w = normalized_return(m, w)
    return w


def test_in_section_examples():
    assert in_section((0, 1, 1, 0, 3))
    assert not in_section((0, 0, 0, 0, 0))
    assert not in_section((1, 1, 0, 0, 3))


@pytest.mark.parametrize("m", [3, 5, 7])
def test_section_is_the_selector_two_locus(m):
    assert section_matches_selector(m).ok
    assert sum(1 for w in root_points(m) if in_section(w)) == section_size(m)


def test_section_size():
    assert section_size(5) == 20
    assert section_size(9) == 72


def test_section_root_validation():
    assert section_root(5, SectionPoint(1, 0)) == (0, 1, 0, 0, 4)
    with pytest.raises(ValueError):
        section_root(5, SectionPoint(1, 4))  # a + b = 0
    with pytest.raises(ValueError):
        section_root(5, SectionPoint(0, 0))


# lengths below were produced by the step-by-step simulator before being frozen
def test_simulate_first_return_frozen_values():
    assert simulate_first_return(5, SectionPoint(3, 4)) == ReturnRecord(
        SectionPoint(3, 4), SectionPoint(3, 0), 4
    )
    assert simulate_first_return(5, SectionPoint(2, 0)) == ReturnRecord(
        SectionPoint(2, 0), SectionPoint(2, 1), 30
    )
    assert simulate_first_return(5, SectionPoint(0, 4)) == ReturnRecord(
        SectionPoint(0, 4), SectionPoint(1, 0), 113
    )


def test_closed_form_frozen_values():
    assert closed_form_first_return(5, SectionPoint(1, 0)) == ReturnRecord(
        SectionPoint(1, 0), SectionPoint(3, 1), 15
    )
    assert closed_form_first_return(5, SectionPoint(4, 0)) == ReturnRecord(
        SectionPoint(4, 0), SectionPoint(1, 1), 40
    )
    assert closed_form_first_return(7, SectionPoint(0, 6)) == ReturnRecord(
        SectionPoint(0, 6), SectionPoint(1, 0), 313
    )


def test_closed_form_guards():
    with pytest.raises(ValueError):
        closed_form_first_return(3, SectionPoint(1, 0))
    with pytest.raises(ValueError):
        closed_form_first_return(5, SectionPoint(2, 3))  # a + b = 0


@pytest.mark.parametrize("m", [5, 7])
def test_closed_form_equals_simulation(m):
    for p in section_points(m):
        assert closed_form_first_return(m, p) == simulate_first_return(m, p)


def test_first_block_examples():
    assert first_block(5, SectionPoint(1, 0)) == (3, 2, 1, 0, 4)
    assert first_block(7, SectionPoint(2, 3)) == (5, 3, 4, 0, 2)
    with pytest.raises(ValueError):
        first_block(5, SectionPoint(2, 4))  # last row has no normal block


@pytest.mark.parametrize("m", [5, 7])
def test_first_block_matches_iteration(m):
    for b in range(m - 1):
        for a in range(m):
            if (a + b) % m == 0:
                continue
            p = SectionPoint(a, b)
            assert first_block(m, p) == iterate(m, section_root(m, p), m)


def test_block_step_branches():
    m = 7
    assert block_step(m, BlockState(3, 5, m - 1)) == BlockState(2, 5, 0)
    assert block_step(m, BlockState(0, 5, 0)) == BlockState(6, 6, 0)
    assert block_step(m, BlockState(3, 5, 2)) == BlockState(1, 6, 3)
    with pytest.raises(ValueError):
        block_step(m, BlockState(0, 5, 2))  # in the section


@pytest.mark.parametrize("m", [5, 7])
def test_block_step_matches_iteration(m):
    # all boundary states (x, y, B, 0, z) outside the section, B != 0;
    # y is pinned by the zero-sum relation
    for x in range(m):
        for z in range(m):
            if x == 0 and z != 0:
                continue
            for B in range(1, m):
                y = (-(x + B + z)) % m
                got = iterate(m, (x, y, B, 0, z), m)
                nxt = block_step(m, BlockState(x, y, z))
                assert got == (nxt.x, nxt.y, B, 0, nxt.z)


def test_wrap_step_examples():
    m = 5
    assert wrap_step(m, WrapState(2, 4)) == (WrapState(2, 0), 5)
    assert wrap_step(m, WrapState(1, 0)) == (WrapState(1, 1), 4)
    assert wrap_step(m, WrapState(4, 0)) == (SectionPoint(1, 0), 13)
    with pytest.raises(ValueError):
        wrap_step(m, WrapState(0, 1))
    with pytest.raises(ValueError):
        wrap_step(m, WrapState(2, 3))  # u + v = 0


@pytest.mark.parametrize("m", [5, 7])
def test_wrap_step_matches_iteration(m):
    for u in range(1, m):
        for v in range(m):
            if (u + v) % m == 0:
                continue
            nxt, steps = wrap_step(m, WrapState(u, v))
            got = iterate(m, wrap_root(m, WrapState(u, v)), steps)
            if isinstance(nxt, SectionPoint):
                assert got == section_root(m, nxt)
            else:
                assert got == wrap_root(m, nxt)


@pytest.mark.parametrize("m,length", [(5, 113), (7, 313)])
def test_long_wrap(m, length):
    rec = long_wrap(m)
    assert rec == ReturnRecord(SectionPoint(0, m - 1), SectionPoint(1, 0), length)
    assert rec.length == m ** 3 - (m - 1) * (m - 2)
    assert rec == simulate_first_return(m, SectionPoint(0, m - 1))


@pytest.mark.parametrize("m", [5, 7])
def test_wrap_segment_bookkeeping(m):
    # from E(1, 0) to the landing: m-2 quick seams, m-1 slow seams,
    # (m-2)^2 generic hops
    counts = {m: 0, m - 1: 0, 3 * m - 2: 0}
    state = WrapState(1, 0)
    while True:
        nxt, steps = wrap_step(m, state)
        counts[steps] += 1
        if isinstance(nxt, SectionPoint):
            break
        state = nxt
    assert counts == {m: m - 2, m - 1: (m - 2) ** 2, 3 * m - 2: m - 1}


@pytest.mark.parametrize("m,size", [(5, 20), (9, 72)])
def test_induced_cycle(m, size):
    cycle, verdict = induced_cycle(m)
    assert verdict.ok
    assert len(cycle) == size


def test_induced_cycle_fifth_iterate():
    m = 5
    pt = SectionPoint(1, 0)
    for _ in range(m):
        pt = first_return_map(m, pt)
    assert pt == SectionPoint(2, 0)


@pytest.mark.parametrize("m", [5, 7])
def test_excursion_sums(m):
    assert total_excursion(m) == m ** 4
    for b in range(m):
        assert row_excursion(m, b) == m ** 3


def test_displacement_from_counts():
    m = 5
    assert displacement_from_counts(m, (m - 2, 1, 1, 0, 0)) == (-12, 1, 1, 5, 5)
    assert displacement_from_counts(m, (m - 2, 1, 1, 0, 0), m) == (3, 1, 1, 0, 0)
    assert displacement_from_counts(0, (0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        displacement_from_counts(4, (1, 1, 1, 0, 0))


def test_short_last_row_word_displacement():
    # counts (m-3, 0, 1, 1, 0) over m-1 steps carry w(a, -1) to w(a, 0)
    m = 5
    for a in range(2, m):
        start = section_root(m, SectionPoint(a, m - 1))
        end = section_root(m, SectionPoint(a, 0))
        delta = displacement_from_counts(m - 1, (m - 3, 0, 1, 1, 0), m)
        assert sub(end, start, m) == delta


def test_first_block_word_displacement():
    # the first normal block has selector counts (m-2, 1, 1, 0, 0)
    m = 5
    p = SectionPoint(1, 0)
    delta = displacement_from_counts(m, (m - 2, 1, 1, 0, 0), m)
    assert sub(first_block(m, p), section_root(m, p), m) == vec(delta, m)
