"""Modular arithmetic on (Z_m)^5: the zero-sum hyperplane, step displacements, rotations.

Torus vertices are 5-tuples of residues mod m.  The zero-sum hyperplane (the
"root flat") carries the return-map dynamics; the grade-t cross-section of the
torus is identified with it by subtracting t*e_4.  Residues are stored
canonically in {0, ..., m-1}; -1 always means the class of m-1.  Direction and
color indices live in Z_5 and are never reduced mod m.
"""

from __future__ import annotations

from typing import Iterator, Tuple

Vec5 = Tuple[int, int, int, int, int]


def check_modulus(m: int) -> int:
    if not isinstance(m, int) or m < 3 or m % 2 == 0:
        raise ValueError(f"odd modulus >= 3 required, got {m!r}")
    return m


def half(m: int) -> int:
    """h with m = 2h + 1."""
    return (m - 1) // 2


def vec(coords, m: int) -> Vec5:
    """Canonicalize five residues mod m."""
    if len(coords) != 5:
        raise ValueError(f"expected 5 coordinates, got {len(coords)}")
    return tuple(c % m for c in coords)


def add(u: Vec5, v: Vec5, m: int) -> Vec5:
    return tuple((a + b) % m for a, b in zip(u, v))


def sub(u: Vec5, v: Vec5, m: int) -> Vec5:
    return tuple((a - b) % m for a, b in zip(u, v))


def coord_sum(x: Vec5, m: int) -> int:
    """The grading: sum of all five coordinates mod m."""
    return sum(x) % m


def is_root(w: Vec5, m: int) -> bool:
    return sum(w) % m == 0


def root_point(coords, m: int) -> Vec5:
    """Construct a zero-sum point; a violated sum relation is a caller bug."""
    w = vec(coords, m)
    if not is_root(w, m):
        raise ValueError(f"coordinate sum of {w} is {sum(w) % m}, not 0 mod {m}")
    return w


def to_root(t: int, x: Vec5, m: int) -> Vec5:
    """Identify the grade-t cross-section with the zero-sum hyperplane: x - t*e_4."""
    if coord_sum(x, m) != t % m:
        raise ValueError(f"{x} has grade {coord_sum(x, m)}, expected {t % m}")
    return (*x[:4], (x[4] - t) % m)


def from_root(t: int, w: Vec5, m: int) -> Vec5:
    """Inverse of the grade-t identification: w + t*e_4."""
    return (*w[:4], (w[4] + t) % m)


def displacement(i: int, m: int) -> Vec5:
    """Zero-sum displacement of one torus step in direction i: e_i - e_4, zero for i = 4."""
    if not 0 <= i <= 4:
        raise ValueError(f"direction index must be in 0..4, got {i}")
    v = [0, 0, 0, 0, 0]
    if i != 4:
        v[i] = 1
        v[4] = m - 1
    return tuple(v)


def rotate(c: int, w: Vec5) -> Vec5:
    """Coordinate rotation by color c: coordinate j of the result is w[j - c]."""
    return tuple(w[(j - c) % 5] for j in range(5))


def zero_set(w: Vec5) -> frozenset:
    return frozenset(j for j in range(5) if w[j] == 0)


def zero_mask(w: Vec5) -> int:
    """Bitmask of the zero-set: bit j is set iff w[j] == 0."""
    return (
        (w[0] == 0)
        | ((w[1] == 0) << 1)
        | ((w[2] == 0) << 2)
        | ((w[3] == 0) << 3)
        | ((w[4] == 0) << 4)
    )


def root_index(w: Vec5, m: int) -> int:
    """Mixed-radix index of a zero-sum point by its first four coordinates."""
    return w[0] + m * (w[1] + m * (w[2] + m * w[3]))


def root_from_index(i: int, m: int) -> Vec5:
    w0 = i % m
    i //= m
    w1 = i % m
    i //= m
    w2 = i % m
    w3 = i // m
    return (w0, w1, w2, w3, (-(w0 + w1 + w2 + w3)) % m)


def root_points(m: int) -> Iterator[Vec5]:
    """All m^4 zero-sum points, in mixed-radix order."""
    for i in range(m ** 4):
        yield root_from_index(i, m)


def root_point_with_zero_set(Z, m: int) -> Vec5:
    """Some zero-sum point whose zero coordinates are exactly Z.

    Exactly four zeros would force the fifth coordinate to vanish too, so
    |Z| = 4 is rejected.
    """
    Z = frozenset(Z)
    nonzero = [j for j in range(5) if j not in Z]
    k = len(nonzero)
    if k == 0:
        return (0, 0, 0, 0, 0)
    if k == 1:
        raise ValueError("a zero-sum point cannot have exactly four zero coordinates")
    w = [0, 0, 0, 0, 0]
    for j in nonzero[: k - 2]:
        w[j] = 1
    rest = (-(k - 2)) % m
    x = 1 if rest != 1 else 2
    w[nonzero[-2]] = x
    w[nonzero[-1]] = (rest - x) % m
    return tuple(w)
