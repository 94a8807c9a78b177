"""Exact arithmetic in GF(q), q = p^r, over integer element labels.

An element with polynomial form a_0 + a_1*z + ... + a_{r-1}*z^(r-1), where
z is a root of the modulus polynomial, gets the integer label
a_0 + a_1*p + ... + a_{r-1}*p^(r-1).  Label 0 is the additive identity,
label 1 the multiplicative identity, and for prime q the labels behave like
integers mod p.  Nonzero vectors over the field are numbered 1..q^k-1 by
reading their coordinate labels as base-q digits, most significant first.

Extension-field multiplication and inversion run off discrete-log tables
built once at construction.  A Field is immutable afterwards and safe to
share across threads.
"""

from __future__ import annotations

import itertools
from math import ceil, isqrt
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Field",
    "FieldElement",
    "IndexedVector",
    "make_field",
    "field_from_json",
    "vector_of_index",
    "index_of_vector",
    "is_prime",
    "prime_power",
    "iter_prime_powers",
    "next_prime_power",
    "solve_over_field",
    "rank_over_field",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Decompose n as (p, r) with p prime and n == p**r, else None."""
    if n < 2:
        return None
    p = n
    for f in range(2, isqrt(n) + 1):
        if n % f == 0:
            p = f
            break
    m, r = n, 0
    while m % p == 0:
        m //= p
        r += 1
    return (p, r) if m == 1 else None


def iter_prime_powers(start: int = 2) -> Iterator[int]:
    """Prime powers in ascending order, beginning at `start`."""
    q = max(2, start)
    while True:
        if prime_power(q) is not None:
            yield q
        q += 1


def next_prime_power(x) -> int:
    """Smallest prime power >= x (x an int or Fraction)."""
    q = max(2, ceil(x))
    while prime_power(q) is None:
        q += 1
    return q


# ---------------------------------------------------------------------------
# polynomials over F_p, coefficients low-degree-first


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for t, mc in enumerate(m):
                a[i - dm + t] = (a[i - dm + t] - c * mc) % p
    rem = a[:dm]
    rem += [0] * (dm - len(rem))
    return rem


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """f is a monic polynomial, full coefficient list, degree >= 1."""
    r = len(f) - 1
    if f[0] == 0:
        return r == 1  # divisible by x unless f == x itself
    for d in range(1, r // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def _smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    # Candidates ordered lexicographically on (c_0, ..., c_{r-1}).
    for tail in itertools.product(range(p), repeat=r):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {r} over F_{p}")


# ---------------------------------------------------------------------------


class Field:
    """GF(p^r) arithmetic on integer labels 0..q-1.

    Construct through make_field; the constructor assumes a validated,
    irreducible modulus.  All tables are built eagerly, after which the
    object is never mutated.
    """

    __slots__ = ("p", "r", "q", "modulus", "_digits", "_exp", "_log")

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        if r == 1:
            self._digits = None
            self._exp = None
            self._log = None
        else:
            digits = []
            for label in range(self.q):
                m, ds = label, []
                for _ in range(r):
                    ds.append(m % p)
                    m //= p
                digits.append(tuple(ds))
            self._digits = digits
            self._build_log_tables()

    # -- construction of multiplication tables

    def _label_of_digits(self, ds: Sequence[int]) -> int:
        label = 0
        for d in reversed(ds):
            label = label * self.p + d
        return label

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(self._digits[a], self._digits[b], self.p)
        return self._label_of_digits(_poly_rem(prod, self.modulus, self.p))

    def _build_log_tables(self) -> None:
        order = self.q - 1
        for g in range(2, self.q):
            exp = [1]
            x = g
            while x != 1 and len(exp) < order:
                exp.append(x)
                x = self._mul_poly(x, g)
            if x == 1 and len(exp) == order:
                log = [0] * self.q
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp = exp
                self._log = log
                return
        raise RuntimeError("no primitive element found; modulus not irreducible?")

    # -- label checks

    def check(self, a: int) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise ValueError(f"invalid label {a!r} for {self!r}")
        return a

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.r == 1:
            return (a + b) % self.p
        da, db = self._digits[a], self._digits[b]
        return self._label_of_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        self.check(a)
        if self.r == 1:
            return (-a) % self.p
        return self._label_of_digits([(-x) % self.p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self.check(a), self.check(b)
        if self.r == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        self.check(a)
        if a == 0:
            raise ValueError("0 has no multiplicative inverse")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out, base = 1, a
        self.check(a)
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        if len(u) != len(v):
            raise ValueError("dimension mismatch in dot product")
        acc = 0
        for x, y in zip(u, v):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def scale(self, c: int, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.mul(c, x) for x in v)

    def elements(self) -> range:
        return range(self.q)

    def element(self, label: int) -> "FieldElement":
        return FieldElement(self, self.check(label))

    # -- plumbing

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        if self.r == 1:
            return f"GF({self.q})"
        return f"GF({self.q}; modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r, "modulus": list(self.modulus)}


def make_field(p: int, r: int, modulus: Sequence[int] | None = None) -> Field:
    """Build GF(p^r).

    Without an override the modulus is the lexicographically smallest monic
    irreducible polynomial of degree r over F_p, coefficients compared
    low-degree-first, so the labeling is reproducible across runs.  An
    explicit `modulus` (full coefficient list, low degree first, monic) may
    be passed to relabel the same field; it must be irreducible.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    if r == 1:
        if modulus not in (None, (), []):
            raise ValueError("prime fields take no modulus")
        return Field(p, 1, ())
    if modulus is None:
        mod = _smallest_irreducible(p, r)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != r + 1 or mod[-1] != 1:
            raise ValueError(
                f"modulus must be a monic degree-{r} coefficient list, got {list(modulus)!r}"
            )
        if not _is_irreducible(mod, p):
            raise ValueError(f"modulus {list(modulus)!r} is reducible over F_{p}")
    return Field(p, r, mod)


def field_from_json(doc: dict) -> Field:
    mod = doc.get("modulus") or None
    return make_field(int(doc["p"]), int(doc["r"]), mod)


class FieldElement(NamedTuple):
    """Convenience wrapper pairing a label with its field."""

    field: Field
    label: int

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.label, other.label))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.label, other.label))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.label, other.label))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.label))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.label))


# ---------------------------------------------------------------------------
# vector indexing


class IndexedVector(NamedTuple):
    index: int
    coords: tuple[int, ...]


def vector_of_index(j: int, k: int, field: Field) -> IndexedVector:
    """The j-th nonzero vector of F_q^k, 1 <= j <= q^k - 1.

    Coordinates are the base-q digits of j, most significant first.
    """
    q = field.q
    if not isinstance(j, int) or not 1 <= j <= q**k - 1:
        raise ValueError(f"vector index {j!r} out of range 1..{q**k - 1}")
    ds = []
    m = j
    for _ in range(k):
        ds.append(m % q)
        m //= q
    return IndexedVector(j, tuple(reversed(ds)))


def index_of_vector(coords: Sequence[int], field: Field) -> int:
    """Inverse of vector_of_index."""
    for c in coords:
        field.check(c)
    if not any(coords):
        raise ValueError("the zero vector has no index")
    j = 0
    for c in coords:
        j = j * field.q + c
    return j


# ---------------------------------------------------------------------------
# linear algebra over the field


def rank_over_field(field: Field, vectors: Sequence[Sequence[int]]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_over_field(
    field: Field, vectors: Sequence[Sequence[int]], target: Sequence[int]
) -> tuple[int, ...] | None:
    """Coefficients c with sum_m c_m * vectors[m] == target, or None.

    Free coefficients are set to 0; when the vectors are linearly
    independent the expansion is unique.
    """
    m = len(vectors)
    k = len(target)
    rows = [[vectors[c][i] for c in range(m)] + [target[i]] for i in range(k)]
    pivots: list[tuple[int, int]] = []
    rr = 0
    for col in range(m):
        piv = next((i for i in range(rr, k) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rr], rows[piv] = rows[piv], rows[rr]
        inv = field.inv(rows[rr][col])
        rows[rr] = [field.mul(inv, x) for x in rows[rr]]
        for i in range(k):
            if i != rr and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[rr])]
        pivots.append((rr, col))
        rr += 1
        if rr == k:
            break
    for i in range(rr, k):
        if rows[i][m] != 0:
            return None
    coeffs = [0] * m
    for row, col in pivots:
        coeffs[col] = rows[row][m]
    return tuple(coeffs)
