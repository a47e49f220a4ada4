"""Exact numeric substrate: rationals, prime fields, dense linear algebra.

Rationals are `fractions.Fraction` (always stored reduced, arbitrary
precision).  Prime-field elements are plain ints in [0, p-1].  All linear
algebra is exact; over the rationals, rank and determinant go through
fraction-free (Bareiss) elimination on a denominator-cleared integer matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


@dataclass(frozen=True)
class ModularValue:
    """Image of a rational in F_p: a residue, or Undefined when p divides
    the reduced denominator (residue is None in that case)."""

    prime: int
    residue: int | None

    @property
    def is_defined(self) -> bool:
        return self.residue is not None

    def __str__(self) -> str:
        return "undefined" if self.residue is None else str(self.residue)


def p_valuation(q: Fraction, p: int) -> int:
    """v such that q = p^v * (a/b) with p dividing neither a nor b.

    q must be nonzero (the valuation of 0 is +infinity; callers branch first).
    """
    if q == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    v = 0
    n = abs(q.numerator)
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def reduce_mod_p(q: Fraction, p: int) -> ModularValue:
    """Reduce a rational mod an odd prime p.

    Defined (num * den^-1 mod p) exactly when p does not divide the reduced
    denominator; otherwise Undefined.  p = 2 is rejected: the scalar
    normalization upstream carries factors of 1/2, and characteristic 2 is
    handled by fiat in the prime classifier.
    """
    if p <= 2:
        raise ValueError("reduction requires an odd prime")
    if q.denominator % p == 0:
        return ModularValue(p, None)
    return ModularValue(p, q.numerator * pow(q.denominator, -1, p) % p)


class RationalField:
    """Scalar ops on Fraction elements."""

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, q: Fraction):
        return q

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """Scalar ops on int residues mod p, p an odd prime."""

    p: int

    def __post_init__(self):
        if self.p <= 2:
            raise ValueError("prime field requires an odd prime")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, q: Fraction):
        mv = reduce_mod_p(q, self.p)
        if not mv.is_defined:
            raise ValueError(f"{q} has no image mod {self.p}")
        return mv.residue

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __repr__(self) -> str:
        return f"GF({self.p})"


QQ = RationalField()


@dataclass(frozen=True)
class DenseMatrix:
    """Rectangular matrix over QQ (Fraction entries) or GF(p) (int entries)."""

    field: RationalField | PrimeField
    entries: tuple[tuple, ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def matrix(field, rows) -> DenseMatrix:
    conv = field.from_fraction if isinstance(field, RationalField) else field.from_int
    return DenseMatrix(field, tuple(tuple(conv(x) for x in row) for row in rows))


def identity(field, n: int) -> DenseMatrix:
    return DenseMatrix(
        field, tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))
    )


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination on an integer matrix.

    Returns (rank, det) where det is the signed last pivot; det is only
    meaningful for square input (0 when rank-deficient).
    """
    m = [row[:] for row in rows]
    nrow = len(m)
    ncol = len(m[0]) if m else 0
    prev = 1
    sign = 1
    rank = 0
    for col in range(ncol):
        piv = next((i for i in range(rank, nrow) if m[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        for i in range(rank + 1, nrow):
            for j in range(col + 1, ncol):
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrow:
            break
    det = sign * prev if (nrow == ncol and rank == nrow) else 0
    return rank, det


def _clear_denominators(M: DenseMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns (int rows, product of row scales)."""
    out = []
    scale = Fraction(1)
    for row in M.entries:
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
        scale *= d
    return out, scale


def rank(M: DenseMatrix) -> int:
    """Rank over the matrix's field."""
    if isinstance(M.field, PrimeField):
        return _rank_mod_p([list(r) for r in M.entries], M.field.p)
    int_rows, _ = _clear_denominators(M)
    r, _ = _bareiss(int_rows)
    return r


def determinant(M: DenseMatrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    if not isinstance(M.field, RationalField):
        raise ValueError("determinant is provided over the rationals only")
    if M.rows != M.cols:
        raise ValueError("determinant requires a square matrix")
    if M.rows == 0:
        return Fraction(1)
    int_rows, scale = _clear_denominators(M)
    _, det = _bareiss(int_rows)
    return Fraction(det) / scale


def _rank_mod_p(m: list[list[int]], p: int) -> int:
    nrow = len(m)
    ncol = len(m[0]) if m else 0
    rank_ = 0
    for col in range(ncol):
        piv = next((i for i in range(rank_, nrow) if m[i][col] % p != 0), None)
        if piv is None:
            continue
        m[rank_], m[piv] = m[piv], m[rank_]
        inv = pow(m[rank_][col] % p, -1, p)
        for i in range(rank_ + 1, nrow):
            f = m[i][col] * inv % p
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank_])]
        rank_ += 1
        if rank_ == nrow:
            break
    return rank_
