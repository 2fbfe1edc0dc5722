"""Exact linear algebra over the integers, the rationals and GF(p).

Everything works on arbitrary-precision Python ints; there is no floating
point anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from wcdim import _backend

__all__ = [
    "IntMatrix",
    "FieldSpec",
    "QQ",
    "GF",
    "is_prime",
    "prime_factors",
    "rank",
    "bareiss_rank",
    "fraction_rank",
    "invariant_factors",
    "rank_from_factors",
    "nullspace_basis",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``|n|`` in increasing order."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """A field characteristic: 0 for the rationals, otherwise a prime."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    if p == 0:
        raise ValueError("GF(0) is not a field; use QQ")
    return FieldSpec(p)


def _field(f: FieldSpec | int) -> FieldSpec:
    return f if isinstance(f, FieldSpec) else FieldSpec(f)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; ``entries`` is a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, vec: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, vec)) for row in self.entries]


def _as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def bareiss_rank(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = _as_matrix(m)
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def fraction_rank(m: IntMatrix) -> int:
    """Rank over the rationals by textbook elimination on Fractions.

    Kept independent of :func:`bareiss_rank` so the two can check each other.
    """
    m = _as_matrix(m)
    a = [[Fraction(x) for x in row] for row in m.entries]
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def rank(m: IntMatrix, f: FieldSpec | int = QQ) -> int:
    """Rank of ``m`` over the rationals (characteristic 0) or GF(p)."""
    f = _field(f)
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    if f.characteristic == 0:
        return bareiss_rank(m)
    return _backend.rank_mod_p(m.entries, m.cols, f.characteristic)


def invariant_factors(m: IntMatrix) -> list[int]:
    """Nonzero diagonal of the Smith normal form, ``d1 | d2 | ...``, all positive."""
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return []
    return _backend.invariant_factors(m.entries, m.cols)


def rank_from_factors(factors: Sequence[int], f: FieldSpec | int = QQ) -> int:
    f = _field(f)
    if f.characteristic == 0:
        return len(factors)
    return sum(1 for d in factors if d % f.characteristic)


def nullspace_basis(m: IntMatrix, f: FieldSpec | int = QQ) -> list[tuple[int, ...]]:
    """Basis of ``{x : m x = 0}``.

    Over the rationals the vectors are primitive integer vectors; over GF(p)
    their entries lie in ``[0, p)``.  There is one vector per free column of
    the reduced row echelon form.
    """
    f = _field(f)
    m = _as_matrix(m)
    p = f.characteristic
    if p == 0:
        a = [[Fraction(x) for x in row] for row in m.entries]
        zero, one = Fraction(0), Fraction(1)

        def div(x, y):
            return x / y

        def norm(x):
            return x
    else:
        a = [[x % p for x in row] for row in m.entries]
        zero, one = 0, 1

        def div(x, y):
            return x * pow(y, p - 2, p) % p

        def norm(x):
            return x % p

    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != zero), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [div(x, lead) for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != zero:
                g = a[i][c]
                a[i] = [norm(x - g * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(m.cols) if c not in set(pivots)]
    for fc in free:
        vec = [zero] * m.cols
        vec[fc] = one
        for i, pc in enumerate(pivots):
            vec[pc] = norm(-a[i][fc])
        if p == 0:
            den = 1
            for x in vec:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in vec]
            g = 0
            for x in ints:
                g = gcd(g, x)
            basis.append(tuple(x // g for x in ints))
        else:
            basis.append(tuple(vec))
    return basis
