"""The zero-set Latin table and its color-0 selector.

The non-constant layer of the arc coloring picks its direction from a table of
permutations keyed by subsets of Z_5 (the zero-set of the current root point,
shifted down by one).  The table is stored on seven representative subsets and
extended to every feasible subset by the cyclic rule

    row(S + k)(c + k) = row(S)(c) + k   (mod 5).

Zero-sum points never have exactly four zero coordinates, so the extension is
total on the remaining 27 subsets.  The full selector table is also embedded
literally, so the derived and transcribed values can be checked against each
other.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from .verdicts import StructuralError

Perm5 = Tuple[int, int, int, int, int]

# Representative rows: entry c of a row is the direction assigned to color c.
LATIN_REPRESENTATIVES: Dict[FrozenSet[int], Perm5] = {
    frozenset(): (0, 1, 2, 3, 4),
    frozenset({0}): (0, 1, 3, 2, 4),
    frozenset({0, 1}): (4, 1, 3, 2, 0),
    frozenset({0, 2}): (4, 1, 3, 0, 2),
    frozenset({0, 1, 2}): (1, 0, 3, 4, 2),
    frozenset({0, 1, 3}): (4, 3, 0, 2, 1),
    frozenset({0, 1, 2, 3, 4}): (0, 1, 2, 3, 4),
}

# The color-0 selector on all 27 feasible zero-sets, embedded as printed so
# that the derivation path and the transcription are independent sources.
SELECTOR_TABLE: Dict[FrozenSet[int], int] = {
    frozenset(): 0,
    frozenset({0}): 0,
    frozenset({1}): 0,
    frozenset({2}): 0,
    frozenset({3}): 4,
    frozenset({4}): 1,
    frozenset({0, 1}): 0,
    frozenset({0, 2}): 0,
    frozenset({0, 3}): 2,
    frozenset({0, 4}): 1,
    frozenset({1, 2}): 4,
    frozenset({1, 3}): 4,
    frozenset({1, 4}): 1,
    frozenset({2, 3}): 1,
    frozenset({2, 4}): 3,
    frozenset({3, 4}): 4,
    frozenset({0, 1, 2}): 4,
    frozenset({0, 1, 3}): 2,
    frozenset({0, 1, 4}): 1,
    frozenset({0, 2, 3}): 2,
    frozenset({0, 2, 4}): 3,
    frozenset({0, 3, 4}): 1,
    frozenset({1, 2, 3}): 1,
    frozenset({1, 2, 4}): 4,
    frozenset({1, 3, 4}): 4,
    frozenset({2, 3, 4}): 3,
    frozenset({0, 1, 2, 3, 4}): 0,
}


def shift_set(S, k: int) -> FrozenSet[int]:
    """S + k inside Z_5."""
    return frozenset((i + k) % 5 for i in S)


def rotate_color(c: int, s: int) -> int:
    """Color rotation c -> c + s (mod 5)."""
    return (c + s) % 5


def mask_of(S) -> int:
    mask = 0
    for j in S:
        mask |= 1 << j
    return mask


def set_of(mask: int) -> FrozenSet[int]:
    return frozenset(j for j in range(5) if mask >> j & 1)


def is_feasible(S) -> bool:
    return len(S) != 4


def feasible_zero_sets() -> List[FrozenSet[int]]:
    """The 27 subsets of Z_5 of size 0, 1, 2, 3 or 5, in a fixed order."""
    out = []
    for size in (0, 1, 2, 3, 5):
        for comb in itertools.combinations(range(5), size):
            out.append(frozenset(comb))
    return out


def latin_row(S, representatives: Optional[dict] = None) -> Perm5:
    """The table row for subset S, via the cyclic extension of the stored rows.

    The representative is found by scanning shifts k = 0..4 and taking the
    first match; only the two rotation-symmetric subsets admit several k, and
    their rows are the identity, so the choice does not matter.
    """
    S = frozenset(S)
    if len(S) == 4:
        raise ValueError(f"infeasible zero-set {sorted(S)}: size four never occurs")
    reps = LATIN_REPRESENTATIVES if representatives is None else representatives
    for k in range(5):
        rep = shift_set(S, -k)
        if rep in reps:
            row = reps[rep]
            return tuple((row[(c - k) % 5] + k) % 5 for c in range(5))
    raise StructuralError(f"no representative row for {sorted(S)}")


def selector(Z, representatives: Optional[dict] = None) -> int:
    """The color-0 entry of the row for Z - 1: the direction added by the
    non-constant layer for color 0."""
    return latin_row(shift_set(Z, -1), representatives)[0]


def selector_table(representatives: Optional[dict] = None, cross_check: bool = True) -> Dict[FrozenSet[int], int]:
    """Selector values on all 27 feasible zero-sets, generated from the rows.

    With ``cross_check`` the generated values are compared entry by entry
    against the embedded table, so a transcription error in either source is
    caught.
    """
    table = {Z: selector(Z, representatives) for Z in feasible_zero_sets()}
    if cross_check:
        for Z, p in table.items():
            if SELECTOR_TABLE[Z] != p:
                raise StructuralError(
                    f"selector mismatch at {sorted(Z)}: derived {p}, embedded {SELECTOR_TABLE[Z]}"
                )
    return table


@lru_cache(maxsize=None)
def _default_rows_by_zmask() -> Tuple[Optional[Perm5], ...]:
    return _rows_by_zmask_uncached(None)


def _rows_by_zmask_uncached(representatives) -> Tuple[Optional[Perm5], ...]:
    rows: List[Optional[Perm5]] = [None] * 32
    for Z in feasible_zero_sets():
        rows[mask_of(Z)] = latin_row(shift_set(Z, -1), representatives)
    return tuple(rows)


def layer1_rows_by_zmask(representatives: Optional[dict] = None) -> Tuple[Optional[Perm5], ...]:
    """Non-constant-layer direction rows indexed by the zero-set bitmask of the
    current root point; infeasible masks hold None."""
    if representatives is None:
        return _default_rows_by_zmask()
    return _rows_by_zmask_uncached(representatives)


@lru_cache(maxsize=None)
def selector_by_zmask() -> Tuple[Optional[int], ...]:
    """Color-0 selector indexed by zero-set bitmask."""
    rows = layer1_rows_by_zmask()
    return tuple(None if row is None else row[0] for row in rows)
