"""Exact arithmetic in cyclotomic fields Q(zeta_N) = Q[z]/Phi_N(z).

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(N)-1) with
rational coordinates.  Subfields are never materialised: every subfield
check is a fixed-point condition for a subgroup of (Z/NZ)^x acting by
zeta -> zeta^a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import RamifiedPrimeError

Scalar = Union[int, Fraction]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1 by trial division."""
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


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of n >= 1 as {p: exponent}."""
    out: dict[int, int] = {}
    for p in prime_factors(n):
        e = 0
        m = n
        while m % p == 0:
            m //= p
            e += 1
        out[p] = e
    return out


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    for p in prime_factors(n):
        result = result // p * (p - 1)
    return result


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = 1
    x = a % n
    while x != 1:
        x = x * a % n
        order += 1
    return order


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials with monic divisor."""
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low to high, computed as (z^n - 1) / prod Phi_d."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            f, rem = _poly_divmod_int(f, list(cyclotomic_poly(d)))
            assert rem == [0]
    return tuple(f)


def cyclotomic_conductor(k: int) -> int:
    """Smallest N with Q(zeta_k) = Q(zeta_N): k unless k = 2 mod 4."""
    return k // 2 if k % 4 == 2 else k


def contains_cyclotomic(m: int, n: int) -> bool:
    """True iff Q(zeta_m) is a subfield of Q(zeta_n)."""
    if m < 1 or n < 1:
        raise ValueError("conductors must be positive")
    return cyclotomic_conductor(n) % cyclotomic_conductor(m) == 0


def unit_group_invariants(n: int) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of (Z/nZ)^x (empty for trivial)."""
    cyclic_parts: list[int] = []
    for p, e in factorize(n).items():
        if p == 2:
            if e == 2:
                cyclic_parts.append(2)
            elif e >= 3:
                cyclic_parts.extend([2, 2 ** (e - 2)])
        else:
            cyclic_parts.append(euler_phi(p**e))
    cyclic_parts = [c for c in cyclic_parts if c > 1]
    if not cyclic_parts:
        return []
    # merge cyclic parts into invariant factors via prime-power components
    components: dict[int, list[int]] = {}
    for c in cyclic_parts:
        for p, e in factorize(c).items():
            components.setdefault(p, []).append(p**e)
    rank = max(len(v) for v in components.values())
    factors = []
    for i in range(rank):
        f = 1
        for p, powers in components.items():
            powers_sorted = sorted(powers, reverse=True)
            if i < len(powers_sorted):
                f *= powers_sorted[i]
        factors.append(f)
    return sorted(factors)


def largest_cyclic_quotient(n: int) -> int:
    """Maximal order of a cyclic quotient of (Z/nZ)^x.

    Equals the largest invariant factor (the exponent of the group).
    """
    inv = unit_group_invariants(n)
    return inv[-1] if inv else 1


@dataclass(frozen=True)
class SplittingData:
    prime: int
    conductor: int
    inertia_degree: int
    num_primes: int


def splitting_data(p: int, n: int) -> SplittingData:
    """Splitting of the rational prime p in Q(zeta_n); requires p unramified."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n > 1 and n % p == 0:
        raise RamifiedPrimeError(f"{p} ramifies in Q(zeta_{n})")
    f = multiplicative_order(p, n) if n > 1 else 1
    return SplittingData(p, n, f, euler_phi(n) // f)


class CycField:
    """The field Q(zeta_N), with power-basis arithmetic mod Phi_N."""

    _instances: dict[int, "CycField"] = {}

    def __new__(cls, conductor: int) -> "CycField":
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        inst = cls._instances.get(conductor)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(conductor)
            cls._instances[conductor] = inst
        return inst

    def _init(self, conductor: int) -> None:
        self.conductor = conductor
        self.minpoly = cyclotomic_poly(conductor)
        self.degree = len(self.minpoly) - 1
        assert self.degree == euler_phi(conductor)
        # zeta^e on the power basis, for e = 0..N-1 (integer rows)
        rows = []
        cur = [1] + [0] * (self.degree - 1)
        for _ in range(conductor):
            rows.append(tuple(cur))
            shifted = [0] + cur[:-1]
            carry = cur[-1]
            if carry:
                for i in range(self.degree):
                    shifted[i] -= carry * self.minpoly[i]
            cur = shifted
        self._zeta_pows = rows

    def __repr__(self) -> str:
        return f"CycField({self.conductor})"

    def __reduce__(self):
        return (CycField, (self.conductor,))

    # -- element constructors ------------------------------------------------

    def element(self, coords: Sequence[Scalar]) -> "CycElem":
        if len(coords) != self.degree:
            raise ValueError(f"need {self.degree} coordinates")
        return CycElem(self, tuple(Fraction(c) for c in coords))

    def zero(self) -> "CycElem":
        return self.element([0] * self.degree)

    def one(self) -> "CycElem":
        return self.from_rational(1)

    def from_rational(self, value: Scalar) -> "CycElem":
        coords = [Fraction(value)] + [Fraction(0)] * (self.degree - 1)
        return CycElem(self, tuple(coords))

    def zeta(self, exponent: int = 1) -> "CycElem":
        row = self._zeta_pows[exponent % self.conductor]
        return CycElem(self, tuple(Fraction(c) for c in row))

    def galois_group(self) -> list["GaloisElement"]:
        return [
            GaloisElement(self, a)
            for a in range(1, self.conductor + 1)
            if math.gcd(a, self.conductor) == 1
        ]

    def subgroup_fixing_subfield(self, m: int) -> list["GaloisElement"]:
        """The subgroup of Gal(Q(zeta_N)/Q) acting trivially on Q(zeta_m)."""
        if not contains_cyclotomic(m, self.conductor):
            raise ValueError(f"Q(zeta_{m}) is not inside Q(zeta_{self.conductor})")
        mc = cyclotomic_conductor(m)
        if mc == 1:
            return self.galois_group()
        return [s for s in self.galois_group() if s.exponent % mc == 1]


class CycElem:
    """An element of a CycField on the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CycField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    # -- ring structure ------------------------------------------------------

    def _coerce(self, other) -> "CycElem":
        if isinstance(other, CycElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycElem(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycElem(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return CycElem(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CycElem(self.field, tuple(a * f for a in self.coords))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        conv[i + j] += a * b
        out = list(conv[:d])
        pows = self.field._zeta_pows
        n = self.field.conductor
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = pows[k % n]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return CycElem(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self) -> "CycElem":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # invert self mod Phi_N in Q[z]
        mod = [Fraction(c) for c in self.field.minpoly]
        r0, r1 = mod, list(self.coords)
        while len(r1) > 1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def polymod(a, b):
            a = a[:]
            q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
            inv_lead = 1 / b[-1]
            for i in range(len(a) - len(b), -1, -1):
                c = a[i + len(b) - 1] * inv_lead
                q[i] = c
                if c:
                    for j, d in enumerate(b):
                        a[i + j] -= c * d
            while len(a) > 1 and a[-1] == 0:
                a.pop()
            return q, a

        while not (len(r1) == 1 and r1[0] == 0):
            q, rem = polymod(r0, r1)
            r0, r1 = r1, rem
            # s_new = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            new_s = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                new_s[i] += c
            for i, c in enumerate(prod):
                new_s[i] -= c
            while len(new_s) > 1 and new_s[-1] == 0:
                new_s.pop()
            s0, s1 = s1, new_s
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (not a field?)")
        c = 1 / r0[0]
        coords = [Fraction(0)] * self.field.degree
        for i, v in enumerate(s0):
            coords[i] = v * c
        return CycElem(self.field, tuple(coords))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.conductor, self.coords))

    def __repr__(self):
        n = self.field.conductor
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    terms.append(f"{c}*z{n}^{i}" if i > 1 else f"{c}*z{n}")
        return " + ".join(terms) if terms else "0"

    def denominator_lcm(self) -> int:
        out = 1
        for c in self.coords:
            out = out * c.denominator // math.gcd(out, c.denominator)
        return out


@dataclass(frozen=True)
class GaloisElement:
    """The automorphism zeta -> zeta^a of Q(zeta_N), gcd(a, N) = 1."""

    field: CycField
    exponent: int

    def __post_init__(self):
        n = self.field.conductor
        a = self.exponent % n if n > 1 else 0
        if n > 1 and math.gcd(a, n) != 1:
            raise ValueError(f"{self.exponent} is not invertible mod {n}")
        object.__setattr__(self, "exponent", a if n > 1 else 0)

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        if self.field is not other.field:
            raise ValueError("automorphisms of different fields")
        n = self.field.conductor
        return GaloisElement(self.field, (self.exponent * other.exponent) % n if n > 1 else 0)

    def is_identity(self) -> bool:
        return self.field.conductor <= 2 or self.exponent == 1

    def apply(self, x: CycElem) -> CycElem:
        return galois_apply(self, x)


def galois_apply(s: GaloisElement, x: CycElem) -> CycElem:
    """Apply the automorphism zeta -> zeta^a coordinatewise."""
    if s.field is not x.field:
        raise ValueError("automorphism and element live in different fields")
    field = x.field
    n = field.conductor
    if n == 1 or s.is_identity():
        return x
    d = field.degree
    out = [Fraction(0)] * d
    for i, c in enumerate(x.coords):
        if c:
            row = field._zeta_pows[(s.exponent * i) % n]
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
    return CycElem(field, tuple(out))


def _check_subgroup(h: Iterable[GaloisElement]) -> list[GaloisElement]:
    elems = list(h)
    if not elems:
        raise ValueError("H must be nonempty")
    field = elems[0].field
    exps = {e.exponent for e in elems}
    n = field.conductor
    for a in exps:
        for b in exps:
            if (a * b) % max(n, 1) not in exps and n > 1:
                raise ValueError("H is not closed under composition")
    return elems


def fixed_by(x: CycElem, h: Iterable[GaloisElement]) -> bool:
    """True iff every automorphism in the subgroup H fixes x."""
    elems = _check_subgroup(h)
    return all(galois_apply(s, x) == x for s in elems)
