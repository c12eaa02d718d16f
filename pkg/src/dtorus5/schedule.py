"""Layer schedules of the five-color arc assignment.

Color c uses one direction per grade layer t.  Every layer is a constant
shift of the color index except layer 1, which consults the Latin table on
the shifted zero-set of the current root point.  The modulus fixes the
schedule: m = 3 uses a three-layer variant, odd m >= 5 the generic one.
"""

from __future__ import annotations

import enum
from typing import Optional, Tuple

from .modring import (
    Vec5,
    add,
    check_modulus,
    coord_sum,
    displacement,
    root_point_with_zero_set,
    to_root,
    zero_set,
)
from .selector import feasible_zero_sets, latin_row, shift_set
from .verdicts import Verdict


class ScheduleKind(enum.Enum):
    SCH3 = "m=3"
    SCH_GE5 = "odd m>=5"


def kind_for(m: int) -> ScheduleKind:
    check_modulus(m)
    return ScheduleKind.SCH3 if m == 3 else ScheduleKind.SCH_GE5


def _check_kind(kind: ScheduleKind, m: int) -> None:
    check_modulus(m)
    if kind is ScheduleKind.SCH3 and m != 3:
        raise ValueError(f"the m=3 schedule does not apply to m={m}")
    if kind is ScheduleKind.SCH_GE5 and m < 5:
        raise ValueError(f"the generic schedule requires odd m>=5, got m={m}")


def direction(kind: ScheduleKind, m: int, t: int, w: Vec5, c: int,
              representatives: Optional[dict] = None) -> int:
    """Direction used by color c at layer t and root point w."""
    _check_kind(kind, m)
    if not 0 <= t < m:
        raise ValueError(f"layer index {t} outside 0..{m - 1}")
    if not 0 <= c <= 4:
        raise ValueError(f"color {c} outside 0..4")
    if kind is ScheduleKind.SCH3:
        if t == 0:
            return (c + 4) % 5
        if t == 2:
            return (c + 3) % 5
    else:
        if t == 0 or t >= 4:
            return c
        if t == 2:
            return (c + 3) % 5
        if t == 3:
            return (c + 4) % 5
    return latin_row(shift_set(zero_set(w), -1), representatives)[c]


def layer_map(kind: ScheduleKind, m: int, t: int, c: int, w: Vec5,
              representatives: Optional[dict] = None) -> Vec5:
    """One layer step on the zero-sum hyperplane: w + q_{direction}."""
    return add(w, displacement(direction(kind, m, t, w, c, representatives), m), m)


def arc_successor(m: int, x: Vec5, c: int, representatives: Optional[dict] = None) -> Vec5:
    """The color-c out-neighbor of torus vertex x; the grade rises by one."""
    kind = kind_for(m)
    t = coord_sum(x, m)
    d = direction(kind, m, t, to_root(t, x, m), c, representatives)
    y = list(x)
    y[d] = (y[d] + 1) % m
    return tuple(y)


def out_directions(m: int, x: Vec5, representatives: Optional[dict] = None) -> Tuple[int, ...]:
    """Directions used at vertex x by colors 0..4."""
    kind = kind_for(m)
    t = coord_sum(x, m)
    w = to_root(t, x, m)
    return tuple(direction(kind, m, t, w, c, representatives) for c in range(5))


def latin_row_check(kind: ScheduleKind, m: int, representatives: Optional[dict] = None) -> Verdict:
    """Check that c -> direction is a permutation at every layer and every
    feasible zero-set class; a failing row is reported with its witness."""
    _check_kind(kind, m)
    full = set(range(5))
    for t in range(m):
        for Z in feasible_zero_sets():
            w = root_point_with_zero_set(Z, m)
            row = tuple(direction(kind, m, t, w, c, representatives) for c in range(5))
            if set(row) != full:
                return Verdict(False, {"layer": t, "zero_set": sorted(Z), "row": row})
    return Verdict(True)
