"""Points and hyperplanes of the projective geometry PG(k-1, q).

A point is a one-dimensional subspace of F_q^k, represented canonically by
the vector in the subspace whose first nonzero coordinate is 1.  Point d is
the d-th canonical vector in 1..q^k-1 vector-index order.  A hyperplane is
stored as the projective point of its normal vector, so hyperplanes and
points enumerate identically.
"""

from __future__ import annotations

from functools import lru_cache
from math import prod
from typing import NamedTuple, Sequence

from .fields import Field, vector_of_index

__all__ = [
    "ProjectivePoint",
    "Hyperplane",
    "num_points",
    "canonicalize",
    "is_canonical",
    "enumerate_points",
    "enumerate_hyperplanes",
    "point_index",
    "on_hyperplane",
    "d_and_i_sets",
    "gaussian_binomial",
]


class ProjectivePoint(NamedTuple):
    index: int
    coords: tuple[int, ...]


class Hyperplane(NamedTuple):
    normal: ProjectivePoint


def num_points(k: int, q: int) -> int:
    return (q**k - 1) // (q - 1)


def canonicalize(field: Field, coords: Sequence[int]) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate becomes 1."""
    for c in coords:
        if c != 0:
            return field.scale(field.inv(c), coords)
    raise ValueError("the zero vector spans no projective point")


def is_canonical(coords: Sequence[int]) -> bool:
    for c in coords:
        if c != 0:
            return c == 1
    return False


@lru_cache(maxsize=None)
def enumerate_points(k: int, field: Field) -> tuple[ProjectivePoint, ...]:
    """All points of PG(k-1, q) in canonical order."""
    if k < 2:
        raise ValueError(f"projective enumeration needs k >= 2, got {k}")
    points = []
    for j in range(1, field.q**k):
        coords = vector_of_index(j, k, field).coords
        if is_canonical(coords):
            points.append(ProjectivePoint(len(points) + 1, coords))
    assert len(points) == num_points(k, field.q)
    return tuple(points)


@lru_cache(maxsize=None)
def _point_lookup(k: int, field: Field) -> dict[tuple[int, ...], int]:
    return {pt.coords: pt.index for pt in enumerate_points(k, field)}


def point_index(field: Field, coords: Sequence[int]) -> int:
    """Index d of the projective point spanned by coords."""
    k = len(coords)
    return _point_lookup(k, field)[canonicalize(field, coords)]


def enumerate_hyperplanes(k: int, field: Field) -> tuple[Hyperplane, ...]:
    return tuple(Hyperplane(pt) for pt in enumerate_points(k, field))


def on_hyperplane(field: Field, coords: Sequence[int], h: Hyperplane) -> bool:
    return field.dot(h.normal.coords, coords) == 0


def d_and_i_sets(k: int, field: Field, h: Hyperplane) -> tuple[frozenset[int], frozenset[int]]:
    """Indices of points, and of standard basis vectors, off the hyperplane."""
    points = enumerate_points(k, field)
    d = frozenset(pt.index for pt in points if not on_hyperplane(field, pt.coords, h))
    i = frozenset(
        i + 1 for i in range(k) if h.normal.coords[i] != 0
    )  # <e_i, normal> = normal_i
    return d, i


def gaussian_binomial(a: int, b: int, q: int) -> int:
    """Number of b-dimensional subspaces of an a-dimensional space over F_q."""
    if not 0 <= b <= a:
        raise ValueError(f"need a >= b >= 0, got a={a}, b={b}")
    num = prod(q**a - q**i for i in range(b))
    den = prod(q**b - q**i for i in range(b))
    if b == 0:
        return 1
    out, rem = divmod(num, den)
    assert rem == 0
    return out
