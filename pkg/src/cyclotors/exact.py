"""Exact integer, rational, modular and lattice arithmetic.

Integers are plain Python ints (arbitrary precision), rationals are
``fractions.Fraction``.  On top of those this module provides modular
residues with an explicit modulus, the Chinese remainder theorem,
rational reconstruction from a single residue, and an all-integer LLL
reduction used to recognise algebraic numbers from p-adic data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def invmod(a: int, m: int) -> int:
    """Inverse of a modulo m; raises ZeroDivisionError if gcd(a, m) != 1."""
    g, s, _ = xgcd(a % m, m)
    if g != 1:
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    return s % m


@dataclass(frozen=True)
class IntMod:
    """A residue 0 <= value < modulus with modulus >= 2."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other: "IntMod") -> "IntMod":
        self._check(other)
        return IntMod(self.value + other.value, self.modulus)

    def __sub__(self, other: "IntMod") -> "IntMod":
        self._check(other)
        return IntMod(self.value - other.value, self.modulus)

    def __mul__(self, other: "IntMod") -> "IntMod":
        self._check(other)
        return IntMod(self.value * other.value, self.modulus)

    def inverse(self) -> "IntMod":
        return IntMod(invmod(self.value, self.modulus), self.modulus)

    def _check(self, other: "IntMod") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed moduli")


def crt_combine(residues: Sequence[IntMod]) -> IntMod:
    """Combine residues with pairwise coprime moduli into one residue.

    Raises ValueError when the moduli are not pairwise coprime.
    """
    if not residues:
        raise ValueError("need at least one residue")
    value, modulus = residues[0].value, residues[0].modulus
    for r in residues[1:]:
        g, s, _ = xgcd(modulus, r.modulus)
        if g != 1:
            raise ValueError(f"moduli {modulus} and {r.modulus} are not coprime")
        # value + modulus * k == r.value (mod r.modulus)
        k = (s * (r.value - value)) % r.modulus
        value = value + modulus * k
        modulus *= r.modulus
        value %= modulus
    return IntMod(value, modulus)


def rational_reconstruct(r: IntMod, bound: int) -> Optional[Fraction]:
    """Recover p/q with |p|, q <= bound and p = q*r (mod m), if it exists.

    Requires 2 * bound**2 < m, which makes the answer unique.  Returns
    None when no such fraction exists.
    """
    m = r.modulus
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if 2 * bound * bound >= m:
        raise ValueError("need 2*bound^2 < modulus for uniqueness")
    # Half extended Euclid on (m, value): remainders give candidate
    # numerators, the t-cosequence gives candidate denominators.
    r0, r1 = m, r.value % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0:
        return None
    p, q = r1, t1
    if q < 0:
        p, q = -p, -q
    if q > bound or math.gcd(p, q) != 1:
        return None
    if (p - q * r.value) % m != 0:
        return None
    return Fraction(p, q)


# ---------------------------------------------------------------------------
# Lattices and LLL
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    """A lattice given by a basis of integer row vectors."""

    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Lattice":
        basis = tuple(tuple(int(x) for x in row) for row in rows)
        if not basis:
            raise ValueError("empty basis")
        dim = len(basis[0])
        if any(len(row) != dim for row in basis):
            raise ValueError("rows of unequal length")
        return cls(basis)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def lll_reduce(lattice: Lattice, delta: Fraction = Fraction(3, 4)) -> Lattice:
    """LLL-reduce the basis with parameter delta (default 3/4).

    Uses the all-integer formulation (Gram determinants d_i and scaled
    Gram-Schmidt coefficients lambda_ij), so the computation is exact.
    The rows of the result span the same lattice.
    """
    b = [list(row) for row in lattice.basis]
    n = len(b)
    if n == 1:
        return Lattice.from_rows(b)
    dnum, dden = delta.numerator, delta.denominator

    # d[0] = 1, d[i] = Gram determinant of b[0..i-1]; lam[i][j] = d[j+1]*mu_ij
    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]

    def init_row(i: int) -> None:
        for j in range(i + 1):
            u = _dot(b[i], b[j])
            for k in range(j):
                u = (d[k + 1] * u - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = u
            else:
                d[i + 1] = u
                if u == 0:
                    raise ValueError("basis vectors are linearly dependent")

    for i in range(n):
        init_row(i)

    def size_reduce(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            for idx in range(len(b[k])):
                b[k][idx] -= q * b[l][idx]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_k = lam[k][k - 1]
        new_d = (d[k - 1] * d[k + 1] + lam_k * lam_k) // d[k]
        for i in range(k + 1, n):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_k * t) // d[k]
            lam[i][k - 1] = (new_d * t + lam_k * lam[i][k]) // d[k + 1]
        d[k] = new_d

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        # Lovasz condition: d[k+1]*d[k-1] >= delta*d[k]^2 - lam^2
        if dden * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < dnum * d[k] * d[k]:
            swap(k)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return Lattice.from_rows(b)


def lattice_det_squared(lattice: Lattice) -> int:
    """Squared covolume of the lattice (Gram determinant), exact."""
    b = lattice.basis
    n = len(b)
    gram = [[_dot(b[i], b[j]) for j in range(n)] for i in range(n)]
    # Fraction-free Gaussian elimination (Bareiss).
    prev = 1
    m = [row[:] for row in gram]
    for i in range(n - 1):
        if m[i][i] == 0:
            pivot = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if pivot is None:
                return 0
            m[i], m[pivot] = m[pivot], m[i]
            for row in m:
                row[i], row[pivot] = row[pivot], row[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return m[n - 1][n - 1]


def nth_root_floor(x: int, n: int) -> int:
    """Floor of the n-th root of a nonnegative integer."""
    if x < 0 or n < 1:
        raise ValueError("nth_root_floor needs x >= 0 and n >= 1")
    if x in (0, 1) or n == 1:
        return x
    guess = 1 << (-(-x.bit_length() // n))
    while True:
        nxt = ((n - 1) * guess + x // guess ** (n - 1)) // n
        if nxt >= guess:
            break
        guess = nxt
    while guess ** n > x:
        guess -= 1
    return guess
