"""Minimal recovery sets.

A recovery set for object i is a set of stored vectors whose span contains
the i-th standard basis vector, minimal under inclusion.  Equivalently, the
vectors are linearly independent and the unique expansion of e_i over them
uses every vector with a nonzero coefficient; enumeration walks linearly
independent prefixes in index order and prunes a branch as soon as e_i
enters the span, which is exact and proportional to the output size.

Three universes are supported: the columns of an explicit generator matrix,
all q^k - 1 nonzero vectors, and the canonical projective representatives.
All indices in results are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field, index_of_vector, rank_over_field, solve_over_field, vector_of_index
from .limits import check_vector_budget
from .projective import enumerate_points

__all__ = [
    "RecoverySet",
    "GeneratorMatrix",
    "minimal_recovery_sets",
    "recovery_sets_of_matrix",
    "ambient_recovery_sets",
    "projective_recovery_sets",
    "standard_basis_vector",
]


@dataclass(frozen=True, order=True)
class RecoverySet:
    object_index: int
    members: tuple[int, ...]  # ascending


def standard_basis_vector(i: int, k: int) -> tuple[int, ...]:
    if not 1 <= i <= k:
        raise ValueError(f"object index {i} out of range 1..{k}")
    return tuple(1 if t == i - 1 else 0 for t in range(k))


class GeneratorMatrix:
    """A k x n matrix over GF(q), stored by columns of coordinate labels.

    Columns must be nonzero.  By default the matrix must have rank k and at
    least k columns; internal search paths may relax that to probe
    degenerate candidates (objects that are never demanded can go
    unrecoverable without invalidating the remaining ones).
    """

    __slots__ = ("field", "k", "n", "columns", "rank")

    def __init__(
        self,
        field: Field,
        columns: Iterable[Sequence[int]],
        *,
        require_full_rank: bool = True,
    ):
        cols = tuple(tuple(c) for c in columns)
        if not cols:
            raise ValueError("a generator matrix needs at least one column")
        k = len(cols[0])
        for c in cols:
            if len(c) != k:
                raise ValueError("ragged columns")
            for x in c:
                field.check(x)
            if not any(c):
                raise ValueError("zero column rejected: it stores nothing")
        self.field = field
        self.k = k
        self.n = len(cols)
        self.columns = cols
        self.rank = rank_over_field(field, cols)
        if require_full_rank:
            if self.n < k:
                raise ValueError(f"need at least k={k} columns, got {self.n}")
            if self.rank != k:
                raise ValueError(f"rank {self.rank} < k = {k}; matrix cannot store {k} objects")

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "k": self.k,
            "matrix": [list(c) for c in self.columns],
        }

    def __repr__(self) -> str:
        return f"GeneratorMatrix(k={self.k}, n={self.n}, q={self.field.q})"


def minimal_recovery_sets(
    field: Field,
    indexed_vectors: Sequence[tuple[int, Sequence[int]]],
    target: Sequence[int],
) -> list[tuple[int, ...]]:
    """All minimal index sets whose vectors span `target` with full support.

    `indexed_vectors` are (index, coords) pairs with strictly increasing
    indices.  Returned member tuples are ascending and the list is sorted.
    """
    k = len(target)
    vecs = list(indexed_vectors)
    out: list[tuple[int, ...]] = []
    chosen_idx: list[int] = []
    chosen_vec: list[Sequence[int]] = []

    def visit(start: int) -> None:
        for pos in range(start, len(vecs)):
            idx, v = vecs[pos]
            cand = chosen_vec + [v]
            if rank_over_field(field, cand) != len(cand):
                continue
            coeffs = solve_over_field(field, cand, target)
            if coeffs is None:
                if len(cand) < k:
                    chosen_idx.append(idx)
                    chosen_vec.append(v)
                    visit(pos + 1)
                    chosen_idx.pop()
                    chosen_vec.pop()
            elif all(c != 0 for c in coeffs):
                out.append(tuple(chosen_idx + [idx]))
            # target in the span: every superset is non-minimal, stop here

    visit(0)
    out.sort()
    return out


def recovery_sets_of_matrix(g: GeneratorMatrix, i: int) -> list[RecoverySet]:
    """Minimal recovery sets for object i over the columns of g."""
    target = standard_basis_vector(i, g.k)
    indexed = [(nu + 1, col) for nu, col in enumerate(g.columns)]
    return [RecoverySet(i, m) for m in minimal_recovery_sets(g.field, indexed, target)]


def ambient_recovery_sets(
    k: int, field: Field, i: int, *, budget: int | None = None
) -> list[RecoverySet]:
    """Minimal recovery sets for object i over all nonzero vectors of F_q^k."""
    check_vector_budget(field.q, k, budget)
    target = standard_basis_vector(i, k)
    indexed = [(j, vector_of_index(j, k, field).coords) for j in range(1, field.q**k)]
    return [RecoverySet(i, m) for m in minimal_recovery_sets(field, indexed, target)]


def projective_recovery_sets(
    k: int, field: Field, i: int, *, budget: int | None = None
) -> list[RecoverySet]:
    """Ambient recovery sets restricted to canonical projective representatives.

    Members are vector indices of canonical representatives; every ambient
    set maps onto exactly one projective set by canonicalizing its members.
    """
    check_vector_budget(field.q, k, budget)
    target = standard_basis_vector(i, k)
    indexed = [(index_of_vector(pt.coords, field), pt.coords) for pt in enumerate_points(k, field)]
    indexed.sort()
    return [RecoverySet(i, m) for m in minimal_recovery_sets(field, indexed, target)]
