"""First-return dynamics of the normalized return on its selector-2 section.

The selector takes the value 2 exactly at the points (0, a, b, 0, -a-b) with
a + b != 0, written w(a, b).  Starting the normalized return G there, the
first positive time the orbit meets the section again has an explicit closed
form, organized by the row index b and by s = a + b read as an integer in
{1, ..., m-1} (valid for odd m >= 5, with h = (m-1)/2):

    rows b <= m-2:  lands on (a', b+1) with a' = a when s = h, else a + h;
                    time (h+1)m for 1 <= s <= h-1, 2(h+1)m for s = h,
                    (3h+2)m for h+1 <= s <= 2h.
    row  b = m-1:   (a, m-1) lands on (a, 0) after m-1 steps when a != 0, 1;
                    (0, m-1) is the single long excursion, landing on (1, 0)
                    after m^3 - (m-1)(m-2) steps.

Three per-block recurrences support the closed form: the first full block of
m steps from a normal row, the two-coordinate block map on boundary states
(x, y, B, 0, z), and the skeleton of the long excursion, which walks the
family E(u, v) = (u, v, 0, 0, -u-v).  Each one is cross-checked against
direct iteration of G.
"""

from __future__ import annotations

from typing import Iterator, List, NamedTuple, Optional, Tuple, Union

from .modring import Vec5, check_modulus, half, root_points, vec, zero_set
from .returnmap import normalized_return
from .selector import selector
from .verdicts import StructuralError, Verdict


class SectionPoint(NamedTuple):
    a: int
    b: int


class ReturnRecord(NamedTuple):
    start: SectionPoint
    end: SectionPoint
    length: int


class BlockState(NamedTuple):
    """Boundary state (x, y, B, 0, z) of a block excursion; B stays fixed."""

    x: int
    y: int
    z: int


class WrapState(NamedTuple):
    """Point E(u, v) = (u, v, 0, 0, -u-v) of the long-excursion family;
    u != 0 and u + v != 0."""

    u: int
    v: int


def in_section(w: Vec5) -> bool:
    """w_0 = 0, w_3 = 0 and w_4 != 0; equivalent to the selector being 2."""
    return w[0] == 0 and w[3] == 0 and w[4] != 0


def section_root(m: int, p: SectionPoint) -> Vec5:
    """The point w(a, b) = (0, a, b, 0, -a-b); a + b = 0 is not in the section."""
    a, b = p.a % m, p.b % m
    if (a + b) % m == 0:
        raise ValueError(f"(a, b) = ({a}, {b}) has a + b = 0 mod {m}: not a section point")
    return (0, a, b, 0, (-(a + b)) % m)


def section_points(m: int) -> Iterator[SectionPoint]:
    """All m(m-1) section parameters, row by row."""
    for b in range(m):
        for a in range(m):
            if (a + b) % m != 0:
                yield SectionPoint(a, b)


def section_size(m: int) -> int:
    return m * (m - 1)


def wrap_root(m: int, e: WrapState) -> Vec5:
    u, v = e.u % m, e.v % m
    if u == 0 or (u + v) % m == 0:
        raise ValueError(f"(u, v) = ({u}, {v}) is not a long-excursion state")
    return (u, v, 0, 0, (-(u + v)) % m)


def simulate_first_return(m: int, p: SectionPoint) -> ReturnRecord:
    """First positive return to the section by direct iteration of the
    normalized return.  The step cap m^4 + 1 can only be exceeded if the
    table data is broken, since the map is a bijection of a finite set."""
    check_modulus(m)
    start = SectionPoint(p.a % m, p.b % m)
    w = section_root(m, start)
    for step in range(1, m ** 4 + 2):
        w = normalized_return(m, w)
        if in_section(w):
            return ReturnRecord(start, SectionPoint(w[1], w[2]), step)
    raise StructuralError(f"no return to the section from {start} within {m ** 4 + 1} steps")


def closed_form_first_return(m: int, p: SectionPoint) -> ReturnRecord:
    """First return by the closed form; only stated for odd m >= 5."""
    check_modulus(m)
    if m < 5:
        raise ValueError("the closed form requires odd m >= 5")
    h = half(m)
    a, b = p.a % m, p.b % m
    start = SectionPoint(a, b)
    s = (a + b) % m
    if s == 0:
        raise ValueError(f"(a, b) = ({a}, {b}) is not a section point")
    if b <= m - 2:
        end = SectionPoint(a if s == h else (a + h) % m, b + 1)
        if 1 <= s <= h - 1:
            length = (h + 1) * m
        elif s == h:
            length = 2 * (h + 1) * m
        else:
            length = (3 * h + 2) * m
        return ReturnRecord(start, end, length)
    if a == 0:
        return ReturnRecord(start, SectionPoint(1, 0), m ** 3 - (m - 1) * (m - 2))
    return ReturnRecord(start, SectionPoint(a, 0), m - 1)


def first_return_map(m: int, p: SectionPoint) -> SectionPoint:
    """The induced map on the section, read off the closed form."""
    return closed_form_first_return(m, p).end


def first_block(m: int, p: SectionPoint) -> Vec5:
    """State after the first m steps from a normal row:
    (-2, a+1, b+1, 0, -s) with s = a + b."""
    check_modulus(m)
    if m < 5:
        raise ValueError("block form requires odd m >= 5")
    a, b = p.a % m, p.b % m
    s = (a + b) % m
    if s == 0:
        raise ValueError(f"({a}, {b}) is not a section point")
    if b > m - 2:
        raise ValueError(f"({a}, {b}) is in the last row; no normal first block")
    return vec((-2, a + 1, b + 1, 0, -s), m)


def block_step(m: int, st: BlockState) -> BlockState:
    """One full block on a boundary state (x, y, B, 0, z) outside the section.

    Three branches: the seam z = -1 moves to (x-1, 0) and keeps y; the corner
    x = z = 0 moves to (-1, 0); every other state moves to (x-2, z+1).  The
    tracked coordinate y grows by one except on the seam.
    """
    check_modulus(m)
    x, y, z = st.x % m, st.y % m, st.z % m
    if x == 0 and z != 0:
        raise ValueError(f"state (x, z) = ({x}, {z}) lies in the section")
    if z == m - 1:
        return BlockState((x - 1) % m, y, 0)
    if x == 0 and z == 0:
        return BlockState(m - 1, (y + 1) % m, 0)
    return BlockState((x - 2) % m, (y + 1) % m, (z + 1) % m)


def wrap_step(m: int, e: WrapState) -> Tuple[Union[WrapState, SectionPoint], int]:
    """One hop of the long-excursion skeleton from E(u, v).

    v + 1 = 0 is a quick seam of m steps to E(u, 0); a generic hop takes
    m - 1 steps to E(u, v+1); the slow seam v + 1 = -u takes 3m - 2 steps to
    E(u+1, -u), or lands on the section point (1, 0) when u = m - 1.
    """
    check_modulus(m)
    u, v = e.u % m, e.v % m
    if u == 0 or (u + v) % m == 0:
        raise ValueError(f"({u}, {v}) is not a long-excursion state")
    V = (v + 1) % m
    if V == 0:
        return WrapState(u, 0), m
    if V != (-u) % m:
        return WrapState(u, V), m - 1
    if u != m - 1:
        return WrapState(u + 1, (-u) % m), 3 * m - 2
    return SectionPoint(1, 0), 3 * m - 2


def long_wrap(m: int) -> ReturnRecord:
    """The single long excursion, from (0, m-1), rebuilt from its skeleton.

    Every hop is verified against direct iteration of the normalized return,
    including the 2m-step entry segment; any divergence raises
    ``StructuralError`` at the first bad step.
    """
    check_modulus(m)
    if m < 5:
        raise ValueError("the long excursion requires odd m >= 5")
    start = SectionPoint(0, m - 1)
    cur = section_root(m, start)
    for step in range(1, 2 * m + 1):
        cur = normalized_return(m, cur)
        if in_section(cur):
            raise StructuralError(f"section hit at step {step} inside the entry segment")
    state = WrapState(1, 0)
    if cur != wrap_root(m, state):
        raise StructuralError(f"entry segment landed on {cur}, not E(1, 0)")
    total = 2 * m
    while True:
        nxt, steps = wrap_step(m, state)
        for k in range(1, steps + 1):
            cur = normalized_return(m, cur)
            if k < steps and in_section(cur):
                raise StructuralError(
                    f"section hit at step {total + k}, inside the hop from E{tuple(state)}"
                )
        total += steps
        if isinstance(nxt, SectionPoint):
            if not in_section(cur) or SectionPoint(cur[1], cur[2]) != nxt:
                raise StructuralError(f"skeleton landing {nxt} but iteration reached {cur}")
            return ReturnRecord(start, nxt, total)
        if cur != wrap_root(m, nxt):
            raise StructuralError(f"skeleton state E{tuple(nxt)} but iteration reached {cur}")
        state = nxt


def induced_cycle(m: int) -> Tuple[List[SectionPoint], Verdict]:
    """Orbit of the induced map from (1, 0), with the single-cycle verdict.

    Passes when the orbit has length m(m-1) and covers the section, and when
    m applications advance (a, 0) to (a+1, 0) for every a, with m-1+1 read
    as 1.
    """
    check_modulus(m)
    if m < 5:
        raise ValueError("the induced cycle analysis requires odd m >= 5")
    start = SectionPoint(1, 0)
    cycle = [start]
    pt = first_return_map(m, start)
    while pt != start and len(cycle) <= section_size(m):
        cycle.append(pt)
        pt = first_return_map(m, pt)
    expected = section_size(m)
    if pt != start:
        return cycle, Verdict(False, {"reason": "orbit did not close", "length": len(cycle)})
    if len(cycle) != expected or set(cycle) != set(section_points(m)):
        return cycle, Verdict(
            False, {"reason": "orbit is not the whole section", "length": len(cycle)}
        )
    for a in range(1, m):
        pt = SectionPoint(a, 0)
        for _ in range(m):
            pt = first_return_map(m, pt)
        want = SectionPoint(1, 0) if a == m - 1 else SectionPoint(a + 1, 0)
        if pt != want:
            return cycle, Verdict(
                False, {"reason": "m-fold induced step", "a": a, "got": tuple(pt)}
            )
    return cycle, Verdict(True)


def row_excursion(m: int, b: int) -> int:
    """Sum of return times over one row of the section."""
    return sum(
        closed_form_first_return(m, SectionPoint(a, b)).length
        for a in range(m)
        if (a + b) % m != 0
    )


def total_excursion(m: int) -> int:
    """Sum of all first-return times; equals m^4, the hyperplane size."""
    return sum(row_excursion(m, b) for b in range(m))


def displacement_from_counts(length: int, counts, m: Optional[int] = None):
    """Net displacement of ``length`` normalized-return steps whose selector
    values occurred (N_0, ..., N_4) times:
    (-3*length + N_0, N_1, N_2, length + N_3, length + N_4)."""
    if len(counts) != 5:
        raise ValueError("five selector counts required")
    if sum(counts) != length:
        raise ValueError(f"counts sum to {sum(counts)}, not {length}")
    n0, n1, n2, n3, n4 = counts
    d = (-3 * length + n0, n1, n2, length + n3, length + n4)
    return d if m is None else vec(d, m)


def section_matches_selector(m: int) -> Verdict:
    """Check that the coordinate description of the section coincides with
    the selector-2 condition on every zero-sum point."""
    for w in root_points(m):
        if in_section(w) != (selector(zero_set(w)) == 2):
            return Verdict(False, {"w": w})
    return Verdict(True)
