"""Minimal-series weight arithmetic and the bad/good prime classifier.

For the discrete-series central charge c_l = 1 - 6/((l+1)(l+2)) the highest
weights h_{m,n} collide mod p exactly when p divides a difference of weight
numerators, which factors as a product of two linear forms.  This module
computes the collision set B_l both by brute force and by its closed interval
decomposition, classifies primes as good/bad, and checks the bound
2l^2 + l - 3 beyond which every prime is good.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import reduce_mod_p


@dataclass(frozen=True, order=True)
class MinimalLabel:
    """A weight label (m, n) at level parameter ell, canonical when n <= m."""

    ell: int
    m: int
    n: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError("ell must be >= 2")
        if not (1 <= self.m <= self.ell and 1 <= self.n <= self.ell + 1):
            raise ValueError(f"label ({self.m},{self.n}) out of range for ell={self.ell}")

    @property
    def is_canonical(self) -> bool:
        return self.n <= self.m


def central_charge(ell: int) -> Fraction:
    if ell < 2:
        raise ValueError("ell must be >= 2")
    return 1 - Fraction(6, (ell + 1) * (ell + 2))


def highest_weight(ell: int, m: int, n: int) -> Fraction:
    MinimalLabel(ell, m, n)  # range check
    num = (m * (ell + 2) - n * (ell + 1)) ** 2 - 1
    return Fraction(num, 4 * (ell + 1) * (ell + 2))


def weight_numerator(ell: int, m: int, n: int) -> int:
    """The integer (m(l+2) - n(l+1))^2 - 1, i.e. 4(l+1)(l+2) * h_{m,n}."""
    return (m * (ell + 2) - n * (ell + 1)) ** 2 - 1


def canonicalize(ell: int, m: int, n: int) -> MinimalLabel:
    """Apply the symmetry (m,n) -> (l+1-m, l+2-n) if needed so n <= m."""
    MinimalLabel(ell, m, n)
    if n <= m:
        return MinimalLabel(ell, m, n)
    return MinimalLabel(ell, ell + 1 - m, ell + 2 - n)


def canonical_labels(ell: int) -> list[MinimalLabel]:
    """All l(l+1)/2 canonical labels, sorted."""
    return [MinimalLabel(ell, m, n) for m in range(1, ell + 1) for n in range(1, m + 1)]


def d_plus(ell: int, m: int, n: int, mp: int, np_: int) -> int:
    return (m + mp) * (ell + 2) - (n + np_) * (ell + 1)


def d_minus(ell: int, m: int, n: int, mp: int, np_: int) -> int:
    return (m - mp) * (ell + 2) - (n - np_) * (ell + 1)


@dataclass(frozen=True)
class IntervalSet:
    """Sorted, disjoint, non-adjacent closed integer intervals."""

    intervals: tuple[tuple[int, int], ...]

    @classmethod
    def from_intervals(cls, ivs) -> "IntervalSet":
        ivs = sorted((a, b) for a, b in ivs if a <= b)
        merged: list[list[int]] = []
        for a, b in ivs:
            if merged and a <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        return cls(tuple((a, b) for a, b in merged))

    @classmethod
    def from_values(cls, values) -> "IntervalSet":
        return cls.from_intervals((v, v) for v in values)

    def values(self) -> list[int]:
        return [v for a, b in self.intervals for v in range(a, b + 1)]

    def __contains__(self, v: int) -> bool:
        return any(a <= v <= b for a, b in self.intervals)

    def __str__(self) -> str:
        return " u ".join(f"[{a},{b}]" if a != b else f"{{{a}}}" for a, b in self.intervals)


def b_set_bruteforce(ell: int) -> list[int]:
    """Collision values |(m+m')(l+2) - (n+n')(l+1)|, zero excluded, sorted.

    The value depends on the index tuple only through the sums s = m+m' and
    t = n+n', so enumerating sums covers every tuple.  The zero value occurs
    exactly at symmetry-paired tuples and is discarded.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    vals = set()
    for s in range(2, 2 * ell + 1):
        for t in range(2, 2 * ell + 3):
            v = abs(s * (ell + 2) - t * (ell + 1))
            if v:
                vals.add(v)
    return sorted(vals)


def b_set_intervals(ell: int) -> IntervalSet:
    """Closed form of the collision set: [1, l^2+l-2] plus l short blocks."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    ivs = [(1, ell * ell + ell - 2)]
    for a in range(ell):
        ivs.append((ell * ell + ell + a * (ell + 2), ell * ell + 2 * ell - 1 + a * (ell + 1)))
    return IntervalSet.from_intervals(ivs)


def d_matrix(ell: int) -> list[list[int]]:
    """The (2l-1) x (l+1) table of |column - row| differences.

    Rows are labelled by (m+m')(l+2) for m+m' = 2..2l increasing; columns by
    (n+n')(l+1) for n+n' = 2..l+2 (the left half of the full table; the full
    table is symmetric under 180-degree rotation).
    """
    rows = [s * (ell + 2) for s in range(2, 2 * ell + 1)]
    cols = [t * (ell + 1) for t in range(2, ell + 3)]
    return [[abs(c - r) for c in cols] for r in rows]


def d_matrix_full(ell: int) -> list[list[int]]:
    """The full (2l-1) x (2l+1) difference table over all column sums."""
    rows = [s * (ell + 2) for s in range(2, 2 * ell + 1)]
    cols = [t * (ell + 1) for t in range(2, 2 * ell + 3)]
    return [[abs(c - r) for c in cols] for r in rows]


def g_set(ell: int, corrected: bool = False) -> IntervalSet:
    """Complement of B_l in an initial interval: candidate good-prime range.

    corrected=False uses the published range [1, 2l^2+l-3]; corrected=True
    uses [1, 2l^2+2l-3], the range under which the complement equals the
    union of the blocks G_l(a) exactly.
    """
    top = 2 * ell * ell + (2 * ell if corrected else ell) - 3
    b = b_set_intervals(ell)
    return IntervalSet.from_values(v for v in range(1, top + 1) if v not in b)


def g_blocks(ell: int) -> IntervalSet:
    """The union of the blocks G_l(a) = [l^2+l-1+a(l+1), l^2+l-1+a(l+2)]."""
    base = ell * ell + ell - 1
    return IntervalSet.from_intervals(
        (base + a * (ell + 1), base + a * (ell + 2)) for a in range(ell)
    )


@dataclass(frozen=True)
class PrimeClassification:
    ell: int
    p: int
    status: str  # "good" | "bad"
    collisions: tuple[tuple[MinimalLabel, MinimalLabel], ...]
    degenerate: tuple[MinimalLabel, ...]
    central_charge_defined: bool

    @property
    def is_bad(self) -> bool:
        return self.status == "bad"


def _is_prime(n: int) -> bool:
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


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


def classify_prime(ell: int, p: int) -> PrimeClassification:
    """Good iff the canonical weights stay pairwise distinct mod p.

    p = 2 is bad by convention.  Weights whose reduced denominator is
    divisible by p have no image mod p; they are reported in `degenerate`
    and excluded from the collision comparison.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    cc_defined = central_charge(ell).denominator % p != 0
    if p == 2:
        return PrimeClassification(ell, 2, "bad", (), (), cc_defined)
    residues: dict[int, list[MinimalLabel]] = {}
    degenerate = []
    for lab in canonical_labels(ell):
        mv = reduce_mod_p(highest_weight(ell, lab.m, lab.n), p)
        if mv.is_defined:
            residues.setdefault(mv.residue, []).append(lab)
        else:
            degenerate.append(lab)
    collisions = []
    for labs in residues.values():
        for i in range(len(labs)):
            for j in range(i + 1, len(labs)):
                collisions.append((labs[i], labs[j]))
    status = "bad" if collisions else "good"
    return PrimeClassification(ell, p, status, tuple(sorted(collisions)), tuple(degenerate), cc_defined)


def bad_primes(ell: int) -> list[int]:
    """All bad primes; complete because every prime above 2l^2+l-3 is good."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    bound = 2 * ell * ell + ell - 3
    return [p for p in primes_upto(bound) if classify_prime(ell, p).is_bad]


@dataclass(frozen=True)
class VerifyReport:
    name: str
    ell: int
    passed: bool
    detail: str = ""


def verify_prop_h(ell: int) -> VerifyReport:
    """Spot-check: every prime in (2l^2+l-3, 2l^2+3l] classifies good."""
    bound = 2 * ell * ell + ell - 3
    window = [p for p in primes_upto(2 * ell * ell + 3 * ell) if p > bound]
    offenders = [p for p in window if classify_prime(ell, p).is_bad]
    return VerifyReport(
        "prop-h",
        ell,
        not offenders,
        f"checked primes {window}" if not offenders else f"bad above bound: {offenders}",
    )


def verify_prop_x(ell: int) -> VerifyReport:
    """Brute-force collision set equals its interval decomposition."""
    ok = b_set_bruteforce(ell) == b_set_intervals(ell).values()
    return VerifyReport("prop-x", ell, ok)


def verify_g_identity(ell: int) -> VerifyReport:
    """Corrected-range complement equals the union of the G_l(a) blocks."""
    ok = g_set(ell, corrected=True) == g_blocks(ell)
    return VerifyReport("g-identity", ell, ok)
