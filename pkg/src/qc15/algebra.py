"""Exact arithmetic over GF(p), polynomials, and the quotient rings R_n = GF(p)[X]/(X^n - 1).

Everything here is immutable after construction and all operations are pure
functions, so values can be shared freely across threads.

Polynomial coefficients are stored in ascending order (constant term first),
matching the word identification (a_0, a_1, ..., a_{n-1}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoNonzeroCoset,
    NotCoprime,
    RingMismatch,
)

NEG_INF = float("-inf")  # degree of the zero polynomial; never a valid int degree


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


class PrimeField:
    """The prime field GF(p) for an odd prime p >= 3.

    p = 2 is rejected: the CRT idempotents used by the ring split divide by 2,
    so the whole construction needs odd characteristic.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"field size must be prime, got {p}")
        if p < 3:
            raise ValueError("field size must be an odd prime >= 3")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    # -- scalar arithmetic on residues in [0, p) ------------------------------

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.p

    def neg(self, x: int) -> int:
        return (-x) % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.p})")
        return pow(x, -1, self.p)

    def element(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    @property
    def half(self) -> int:
        """The residue 1/2, which exists because p is odd."""
        return self.inv(2)


@dataclass(frozen=True)
class FieldElement:
    """A residue in [0, p) tagged with its field.

    Arithmetic between elements of different fields raises FieldMismatch.
    Containers (Poly, RingElement) store bare ints for speed; this wrapper is
    the scalar-level API.
    """

    value: int
    field: PrimeField

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.field.p)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def inv(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inv()

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Poly:
    """A polynomial over GF(p): ascending coefficients, no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree NEG_INF,
    so degree arithmetic on it fails loudly instead of silently using -1.
    """

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.field.p
        object.__setattr__(self, "coeffs", _strip([c % p for c in self.coeffs]))

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: PrimeField) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x_pow(cls, field: PrimeField, k: int, scale: int = 1) -> "Poly":
        return cls(field, (0,) * k + (scale,))

    @classmethod
    def x_pow_minus_one(cls, field: PrimeField, n: int) -> "Poly":
        """X^n - 1."""
        return cls(field, (-1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def x_pow_plus_one(cls, field: PrimeField, n: int) -> "Poly":
        """X^n + 1."""
        return cls(field, (1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_text(cls, field: PrimeField, text: str) -> "Poly":
        """Parse comma-separated ascending coefficients, e.g. "2,1,2,1".

        Each integer is reduced mod p, so negative or oversized entries are
        accepted. An empty string parses as the zero polynomial.
        """
        text = text.strip()
        if not text:
            return cls.zero(field)
        return cls(field, tuple(int(t) for t in text.split(",")))

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.field.p
        return acc

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly[{self.to_text()} mod {self.field.p}]"

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.field.p
        return Poly(self.field, tuple(out))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        p = self.field.p
        return Poly(self.field, tuple((-c) % p for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % p
        return Poly(self.field, tuple(out))

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        p = self.field.p
        c %= p
        return Poly(self.field, tuple((c * a) % p for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        p = self.field.p
        inv_lead = self.field.inv(other.lead())
        rem = list(self.coeffs)
        dd, dg = len(rem) - 1, len(other.coeffs) - 1
        if dd < dg:
            return Poly.zero(self.field), self
        quot = [0] * (dd - dg + 1)
        for k in range(dd - dg, -1, -1):
            c = (rem[dg + k] * inv_lead) % p
            quot[k] = c
            if c:
                for j, g in enumerate(other.coeffs):
                    rem[j + k] = (rem[j + k] - c * g) % p
        return Poly(self.field, tuple(quot)), Poly(self.field, tuple(rem))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lead()
        return self if lead == 1 else self.scale(self.field.inv(lead))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor; gcd(0, 0) = 0 by convention."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def divides(self, other: "Poly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()


def poly_gcd(*polys: Poly) -> Poly:
    """Monic gcd of any number of polynomials."""
    it = iter(polys)
    acc = next(it)
    for f in it:
        acc = acc.gcd(f)
    return acc


@dataclass(frozen=True)
class RingElement:
    """An element of R_n = GF(p)[X]/(X^n - 1): exactly n coefficients, trailing zeros kept."""

    field: PrimeField
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")
        p = self.field.p
        object.__setattr__(self, "coeffs", tuple(c % p for c in self.coeffs))

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: PrimeField, n: int) -> "RingElement":
        return cls(field, n, (0,) * n)

    @classmethod
    def one(cls, field: PrimeField, n: int) -> "RingElement":
        return cls(field, n, (1,) + (0,) * (n - 1))

    @classmethod
    def from_coeffs(cls, field: PrimeField, n: int, coeffs: Sequence[int]) -> "RingElement":
        """Pad a short coefficient list with zeros up to length n."""
        coeffs = list(coeffs)
        if len(coeffs) > n:
            raise ValueError(f"{len(coeffs)} coefficients do not fit in R_{n}")
        coeffs += [0] * (n - len(coeffs))
        return cls(field, n, tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: Poly, n: int) -> "RingElement":
        """Reduce a polynomial mod X^n - 1 by folding exponents mod n."""
        out = [0] * n
        p = poly.field.p
        for k, c in enumerate(poly.coeffs):
            out[k % n] = (out[k % n] + c) % p
        return cls(poly.field, n, tuple(out))

    @classmethod
    def from_text(cls, field: PrimeField, n: int, text: str) -> "RingElement":
        return cls.from_poly(Poly.from_text(field, text), n)

    # -- queries -----------------------------------------------------------------

    def lift(self) -> Poly:
        """The canonical representative of degree < n."""
        return Poly(self.field, self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"RingElement[{self.to_text()} in R_{self.n} mod {self.field.p}]"

    # -- arithmetic ----------------------------------------------------------------

    def _check(self, other: "RingElement"):
        if self.field != other.field or self.n != other.n:
            raise RingMismatch(
                f"R_{self.n} over GF({self.field.p}) vs R_{other.n} over GF({other.field.p})"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        p = self.field.p
        return RingElement(
            self.field, self.n, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        p = self.field.p
        return RingElement(
            self.field, self.n, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "RingElement":
        p = self.field.p
        return RingElement(self.field, self.n, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p, n = self.field.p, self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = i + j
                    if k >= n:
                        k -= n
                    out[k] = (out[k] + a * b) % p
        return RingElement(self.field, n, tuple(out))

    __rmul__ = __mul__

    def scale(self, c: int) -> "RingElement":
        p = self.field.p
        c %= p
        return RingElement(self.field, self.n, tuple((c * a) % p for a in self.coeffs))

    def shift(self, k: int = 1) -> "RingElement":
        """Multiply by X^k: a cyclic right rotation of the coefficient vector."""
        k %= self.n
        return RingElement(self.field, self.n, self.coeffs[-k:] + self.coeffs[:-k] if k else self.coeffs)

    def fold_to(self, n: int) -> "RingElement":
        """Reduce into R_n for a divisor n of the current co-length."""
        if self.n % n != 0:
            raise RingMismatch(f"cannot fold R_{self.n} into R_{n}")
        return RingElement.from_poly(self.lift(), n)


# -- Chinese Remainder split of R_{2m} across X^m - 1 and X^m + 1 -----------------


def crt_split(f: RingElement) -> tuple[RingElement, Poly]:
    """Split f in R_{2m} into (f mod X^m - 1, f mod X^m + 1).

    The first component lands in R_m; the second is a plain residue of
    degree < m since GF(p)[X]/(X^m + 1) is not one of our rings.
    """
    if f.n % 2 != 0:
        raise RingMismatch(f"crt_split needs an even co-length, got {f.n}")
    m = f.n // 2
    p = f.field.p
    lo, hi = f.coeffs[:m], f.coeffs[m:]
    u = tuple((a + b) % p for a, b in zip(lo, hi))   # X^m = 1
    v = tuple((a - b) % p for a, b in zip(lo, hi))   # X^m = -1
    return RingElement(f.field, m, u), Poly(f.field, v)


def crt_combine(u: RingElement, v: Poly) -> RingElement:
    """Inverse of crt_split: the unique f in R_{2m} with the given residues.

    Uses f = u * (X^m + 1)/2 - v * (X^m - 1)/2; the division by 2 is why the
    field must have odd characteristic.
    """
    m = u.n
    if not v.is_zero() and v.degree >= m:
        raise ValueError(f"residue mod X^{m}+1 must have degree < {m}")
    field = u.field
    p = field.p
    half = field.half
    vc = list(v.coeffs) + [0] * (m - len(v.coeffs))
    lo = [((a + b) * half) % p for a, b in zip(u.coeffs, vc)]
    hi = [((a - b) * half) % p for a, b in zip(u.coeffs, vc)]
    return RingElement(field, 2 * m, tuple(lo + hi))


# -- cyclotomic cosets --------------------------------------------------------------


@dataclass(frozen=True)
class CosetPartition:
    """The q-cyclotomic cosets mod m: orbits of s -> s*q on Z_m.

    Coset sizes equal the degrees of the irreducible factors of X^m - 1 over
    GF(q), with the coset {0} corresponding to the factor X - 1. That is all
    the factor information any formula in this package needs, so irreducible
    factor polynomials are never computed.
    """

    m: int
    q: int
    cosets: tuple[tuple[int, ...], ...]

    def nonzero_sizes(self) -> list[int]:
        """Sizes of the cosets other than {0}, i.e. degrees of the factors of (X^m-1)/(X-1)."""
        return [len(c) for c in self.cosets if c != (0,)]

    @property
    def factor_count(self) -> int:
        return len(self.nonzero_sizes())


def cyclotomic_cosets(m: int, q: int) -> CosetPartition:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if math.gcd(m, q) != 1:
        raise NotCoprime(f"m={m} and q={q} are not coprime")
    seen = [False] * m
    cosets = []
    for s in range(m):
        if seen[s]:
            continue
        orbit = []
        t = s
        while not seen[t]:
            seen[t] = True
            orbit.append(t)
            t = (t * q) % m
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(m, q, tuple(cosets))


def min_factor_degree(m: int, q: int) -> int:
    """Smallest degree among the irreducible factors of (X^m - 1)/(X - 1) over GF(q).

    Equals the smallest nonzero q-cyclotomic coset size mod m.
    """
    if m == 1:
        raise NoNonzeroCoset("(X^m - 1)/(X - 1) has no factors when m = 1")
    sizes = cyclotomic_cosets(m, q).nonzero_sizes()
    return min(sizes)
