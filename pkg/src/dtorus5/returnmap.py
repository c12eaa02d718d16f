"""Color return maps on the zero-sum hyperplane and their normalized forms.

The m-step return of color c composes the m layer maps of the active
schedule.  Conjugating away the constant part leaves one normalized map per
color,

    G_c = T(-3*q_c + q_{c+3} + q_{c+4}) o P_c,

where P_c is the non-constant layer and T(v) is translation by v.  For color
0 this reads G(w) = w + (-3, 0, 0, 1, 1) + e_p with p the selector of the
zero-set of w, which is the form used by all first-return computations.  The
three exact transfer identities (displacement rotation, layer transfer,
return transfer) reduce every color to color 0 and are checked here
pointwise over the whole hyperplane.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, Optional

from .modring import (
    Vec5,
    add,
    check_modulus,
    displacement,
    root_from_index,
    root_index,
    root_points,
    rotate,
    sub,
    vec,
    zero_mask,
    zero_set,
)
from .schedule import kind_for, layer_map
from .selector import latin_row, selector_by_zmask, shift_set
from .verdicts import StructuralError, Verdict

# Translation part of the normalized color-0 return; the full step adds e_p.
NORMALIZED_SHIFT = (-3, 0, 0, 1, 1)

_STEP_DELTAS = tuple(
    tuple(NORMALIZED_SHIFT[j] + (1 if j == p else 0) for j in range(5)) for p in range(5)
)


def selector_step(m: int, c: int, w: Vec5, representatives: Optional[dict] = None) -> Vec5:
    """The non-constant layer for color c: w + q_{row(Z(w)-1)(c)}."""
    d = latin_row(shift_set(zero_set(w), -1), representatives)[c]
    return add(w, displacement(d, m), m)


def color_return(m: int, c: int, w: Vec5, representatives: Optional[dict] = None) -> Vec5:
    """The m-step return of color c: all m layer maps applied in layer order."""
    kind = kind_for(m)
    for t in range(m):
        w = layer_map(kind, m, t, c, w, representatives)
    return w


def normalized_return(m: int, w: Vec5) -> Vec5:
    """One step of the normalized color-0 return: w + (-3,0,0,1,1) + e_p."""
    p = selector_by_zmask()[zero_mask(w)]
    d = _STEP_DELTAS[p]
    return (
        (w[0] + d[0]) % m,
        (w[1] + d[1]) % m,
        (w[2] + d[2]) % m,
        (w[3] + d[3]) % m,
        (w[4] + d[4]) % m,
    )


def normalized_shift(m: int, c: int) -> Vec5:
    """The translation -3*q_c + q_{c+3} + q_{c+4} of the normalized color-c return."""
    q_c = displacement(c, m)
    q3 = displacement((c + 3) % 5, m)
    q4 = displacement((c + 4) % 5, m)
    return vec([-3 * q_c[j] + q3[j] + q4[j] for j in range(5)], m)


def normalized_color_return(m: int, c: int, w: Vec5) -> Vec5:
    """The normalized color-c return; coincides with ``normalized_return`` at c = 0."""
    return add(normalized_shift(m, c), selector_step(m, c, w), m)


def conjugating_direction(m: int, c: int) -> int:
    """Index k with  G_c = T(q_k) o R_c o T(q_k)^{-1}.

    The generic schedule conjugates by q_c; the three-layer schedule by
    q_{c+4} (its -3*q_c term vanishes identically).
    """
    check_modulus(m)
    return c if m >= 5 else (c + 4) % 5


def check_identities(m: int) -> Dict[str, Verdict]:
    """Exhaustively verify the three transfer identities.

    rotation:        rot_c(q_i) = q_{i+c} - q_{4+c}           (all 25 pairs)
    layer-transfer:  P_c o rot_c = T(q_{4+c}) o rot_c o P_0   (all c, all w)
    return-transfer: G_c o rot_c = rot_c o G_0                (all c, all w)
    """
    check_modulus(m)
    out: Dict[str, Verdict] = {}

    witness = None
    for c in range(5):
        for i in range(5):
            lhs = rotate(c, displacement(i, m))
            rhs = sub(displacement((i + c) % 5, m), displacement((4 + c) % 5, m), m)
            if lhs != rhs:
                witness = {"c": c, "i": i, "lhs": lhs, "rhs": rhs}
                break
        if witness:
            break
    out["rotation"] = Verdict(witness is None, witness)

    witness = None
    for c in range(5):
        q4c = displacement((4 + c) % 5, m)
        for w in root_points(m):
            lhs = selector_step(m, c, rotate(c, w))
            rhs = add(q4c, rotate(c, selector_step(m, 0, w)), m)
            if lhs != rhs:
                witness = {"c": c, "w": w, "lhs": lhs, "rhs": rhs}
                break
        if witness:
            break
    out["layer-transfer"] = Verdict(witness is None, witness)

    witness = None
    for c in range(5):
        for w in root_points(m):
            lhs = normalized_color_return(m, c, rotate(c, w))
            rhs = rotate(c, normalized_return(m, w))
            if lhs != rhs:
                witness = {"c": c, "w": w, "lhs": lhs, "rhs": rhs}
                break
        if witness:
            break
    out["return-transfer"] = Verdict(witness is None, witness)
    return out


def cycle_structure(step: Callable[[Vec5], Vec5], m: int) -> Counter:
    """Orbit lengths of a bijection of the zero-sum hyperplane, as a Counter
    {length: number of orbits}.

    A sweep with a visited map partitions all m^4 points.  Reaching an
    already-claimed point mid-orbit proves the evaluator is not a bijection
    and raises ``StructuralError`` with the offending point.
    """
    check_modulus(m)
    n = m ** 4
    orbit = [-1] * n
    lengths: Counter = Counter()
    for start in range(n):
        if orbit[start] >= 0:
            continue
        w = root_from_index(start, m)
        i = start
        length = 0
        while True:
            orbit[i] = start
            length += 1
            w = step(w)
            if sum(w) % m != 0:
                raise StructuralError(f"evaluator left the zero-sum hyperplane at {w}")
            i = root_index(w, m)
            if i == start:
                break
            if orbit[i] >= 0:
                raise StructuralError(
                    f"point {w} reached twice; the evaluator is not a bijection"
                )
        lengths[length] += 1
    return lengths
