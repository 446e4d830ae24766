"""Quasi-cyclic codes of index 1½ and co-index 2m.

A code lives inside F^{2m} x F^m (length 3m) and is closed under the
permutation that simultaneously rotates the first 2m coordinates and the
last m coordinates one step to the right. Each pair (a, a') with a in R_{2m}
and a' in R_m spans such a code: the set of all (f*a mod X^{2m}-1,
f*a' mod X^m-1).

The code is fully described by two complementary monic divisors of X^{2m}-1:
a generator polynomial g and a check polynomial h with g*h = X^{2m}-1 and
dim = deg h.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .algebra import Poly, PrimeField, RingElement, poly_gcd
from .errors import (
    DimensionMismatch,
    EnumerationTooLarge,
    NotADivisor,
    NotCoprime,
    RingMismatch,
    ZeroCode,
)

DEFAULT_ENUM_LIMIT = 2**24


# -- words ---------------------------------------------------------------------


@dataclass(frozen=True)
class Word:
    """A word of F^{2m} x F^m: 3m coordinates, the first 2m indexed by R_{2m}."""

    m: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != 3 * self.m:
            raise ValueError(f"expected {3 * self.m} coordinates, got {len(self.coords)}")

    @classmethod
    def from_parts(cls, left: RingElement, right: RingElement) -> "Word":
        if left.n != 2 * right.n:
            raise RingMismatch(f"parts of co-length {left.n} and {right.n} do not pair up")
        return cls(right.n, left.coeffs + right.coeffs)

    def parts(self, field: PrimeField) -> tuple[RingElement, RingElement]:
        m = self.m
        return (
            RingElement(field, 2 * m, self.coords[: 2 * m]),
            RingElement(field, m, self.coords[2 * m :]),
        )

    def weight(self) -> int:
        return sum(1 for c in self.coords if c)

    def shifted(self) -> "Word":
        """Rotate the first 2m coordinates right by one, and the last m independently."""
        m = self.m
        left, right = self.coords[: 2 * m], self.coords[2 * m :]
        return Word(m, (left[-1],) + left[:-1] + (right[-1],) + right[:-1])

    def to_string(self) -> str:
        """Digits concatenated when every coordinate is a single digit, else dash-separated."""
        if all(c < 10 for c in self.coords):
            return "".join(str(c) for c in self.coords)
        return "-".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        return f"Word({self.to_string()})"


# -- GF(p) matrix helpers --------------------------------------------------------


def gf_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) mod p via float64 BLAS; falls back to object ints if unsafe."""
    inner = a.shape[1]
    if (p - 1) * (p - 1) * inner < 2**52:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return np.mod(np.rint(prod), p).astype(np.int64)
    return np.mod(a.astype(object) @ b.astype(object), p).astype(np.int64)


def gf_rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (R, pivot_columns), zero rows dropped."""
    m = np.array(mat, dtype=np.int64) % p
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m -= np.outer(col, m[r])
        m %= p
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def gf_rank(mat: np.ndarray, p: int) -> int:
    return len(gf_rref(mat, p)[1])


def leading_independent_rows(mat: np.ndarray, p: int) -> list[int]:
    """Indices of rows kept by a top-down scan, keeping a row iff it raises the rank."""
    kept: list[int] = []
    basis: list[np.ndarray] = []  # rows in row-echelon form, pivot normalized to 1
    pivots: list[int] = []
    for i in range(mat.shape[0]):
        row = np.array(mat[i], dtype=np.int64) % p
        for b, c in zip(basis, pivots):
            if row[c]:
                row = (row - row[c] * b) % p
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        c = int(nz[0])
        row = (row * pow(int(row[c]), -1, p)) % p
        basis.append(row)
        pivots.append(c)
        kept.append(i)
    return kept


# -- circulant blocks --------------------------------------------------------------


def circulant_matrix(v: RingElement) -> np.ndarray:
    """n x n circulant whose row i is the coefficient vector of X^i * v."""
    row = np.array(v.coeffs, dtype=np.int64)
    return np.stack([np.roll(row, i) for i in range(v.n)])


@dataclass(frozen=True)
class CirculantBlock:
    """The 2m x 3m span matrix [A | A' stacked twice] built from (a, a')."""

    A: np.ndarray
    A_prime: np.ndarray
    full: np.ndarray


def span_matrix(a: RingElement, a_prime: RingElement) -> CirculantBlock:
    """Rows of .full are the encodings of X^0, ..., X^{2m-1}; they span the code."""
    if a.n != 2 * a_prime.n or a.field != a_prime.field:
        raise RingMismatch(f"need a in R_2m and a' in R_m, got R_{a.n} and R_{a_prime.n}")
    A = circulant_matrix(a)
    Ap = circulant_matrix(a_prime)
    full = np.hstack([A, np.vstack([Ap, Ap])])
    return CirculantBlock(A, Ap, full)


# -- generator and check polynomials -------------------------------------------------


def generator_poly(a: RingElement, a_prime: RingElement) -> Poly:
    """The canonical monic generator: gcd(a, X^m+1) * gcd(a, a', X^m-1).

    Conventions for zero inputs follow gcd(0, f) = monic(f), so the zero pair
    yields X^{2m} - 1 (the zero code).
    """
    if a.n != 2 * a_prime.n or a.field != a_prime.field:
        raise RingMismatch(f"need a in R_2m and a' in R_m, got R_{a.n} and R_{a_prime.n}")
    field = a.field
    m = a_prime.n
    g1 = a.lift().gcd(Poly.x_pow_plus_one(field, m))
    g2 = poly_gcd(a.lift(), a_prime.lift(), Poly.x_pow_minus_one(field, m))
    return (g1 * g2).monic()


def check_poly(g: Poly, m: int) -> Poly:
    """The complementary divisor (X^{2m} - 1) / g, monic."""
    quot, rem = divmod(Poly.x_pow_minus_one(g.field, 2 * m), g)
    if not rem.is_zero():
        raise NotADivisor(f"{g!r} does not divide X^{2 * m} - 1")
    return quot.monic()


# -- the code object ------------------------------------------------------------------


class DistanceResult(NamedTuple):
    distance: int
    relative: Fraction


@dataclass(frozen=True)
class Qc15Code:
    """An index-1½ quasi-cyclic code with its derived parameters.

    Immutable after construction; all methods are pure.
    """

    field: PrimeField
    m: int
    a: RingElement
    a_prime: RingElement
    g: Poly
    h: Poly
    dim: int
    gen_matrix: np.ndarray = dc_field(repr=False)

    @property
    def length(self) -> int:
        return 3 * self.m

    @property
    def rate(self) -> Fraction:
        return Fraction(self.dim, self.length)

    def zero_word(self) -> Word:
        return Word(self.m, (0,) * self.length)

    def encode(self, f: RingElement) -> Word:
        """Image of f under f -> (f*a, f*a'), the module map defining the code."""
        if f.n != 2 * self.m or f.field != self.field:
            raise RingMismatch(f"message must live in R_{2 * self.m} over GF({self.field.p})")
        left = f * self.a
        right = f.fold_to(self.m) * self.a_prime
        return Word.from_parts(left, right)

    def encode_message(self, y: Sequence[int]) -> Word:
        """Row vector times generator matrix."""
        if len(y) != self.dim:
            raise DimensionMismatch(f"message length {len(y)} != dim {self.dim}")
        p = self.field.p
        if self.dim == 0:
            return self.zero_word()
        vec = np.array([c % p for c in y], dtype=np.int64)
        out = (vec @ self.gen_matrix) % p
        return Word(self.m, tuple(int(c) for c in out))

    def in_kernel(self, f: RingElement) -> bool:
        """True when f annihilates the pair, i.e. h divides the canonical lift of f."""
        return self.h.divides(f.lift())

    def codewords(self, limit: int = DEFAULT_ENUM_LIMIT) -> set[Word]:
        """The full codeword set, of size exactly p^dim."""
        p = self.field.p
        total = p**self.dim
        if total > limit:
            raise EnumerationTooLarge(f"{total} codewords exceed the limit {limit}")
        if self.dim == 0:
            return {self.zero_word()}
        out: set[Word] = set()
        for block in _codeword_blocks(self.gen_matrix, p, self.dim):
            out.update(Word(self.m, tuple(int(c) for c in row)) for row in block)
        return out

    def min_distance(self, limit: int = DEFAULT_ENUM_LIMIT) -> DistanceResult:
        """Exact minimum Hamming weight by exhausting all p^dim codewords."""
        if self.dim == 0:
            raise ZeroCode("the zero code has no nonzero codeword")
        p = self.field.p
        total = p**self.dim
        if total > limit:
            raise EnumerationTooLarge(f"{total} codewords exceed the limit {limit}")
        best = self.length + 1
        first = True
        for block in _codeword_blocks(self.gen_matrix, p, self.dim):
            weights = np.count_nonzero(block, axis=1)
            if first:
                weights = weights[1:]  # message index 0 is the zero word
                first = False
            if weights.size:
                best = min(best, int(weights.min()))
                if best == 1:
                    break
        return DistanceResult(best, Fraction(best, self.length))

    def has_word_of_weight_at_most(
        self, max_weight: int, limit: int = DEFAULT_ENUM_LIMIT
    ) -> bool:
        """Whether some nonzero codeword has Hamming weight <= max_weight.

        Uses the pivot argument on the reduced row echelon form of the
        generator matrix: a codeword restricted to the pivot columns equals
        its own message vector, so any codeword of weight <= w comes from a
        message of weight <= w. Only those few messages are tried, which is
        what makes threshold queries fast at co-indexes where a full p^dim
        sweep is not.
        """
        if self.dim == 0 or max_weight < 1:
            return False
        if max_weight >= self.length:
            return True
        p = self.field.p
        cap = min(max_weight, self.dim)
        n_cand = low_weight_message_count(p, self.dim, cap)
        if n_cand > limit:
            raise EnumerationTooLarge(f"{n_cand} candidate messages exceed the limit {limit}")
        rref, _ = gf_rref(self.gen_matrix, p)
        cand = low_weight_messages(p, self.dim, cap)
        words = gf_matmul(cand, rref, p)
        return bool((np.count_nonzero(words, axis=1) <= max_weight).any())

    def to_json_dict(self, distance: DistanceResult | None = None) -> dict:
        doc = {
            "q": self.field.p,
            "m": self.m,
            "a": self.a.to_text(),
            "a_prime": self.a_prime.to_text(),
            "g": self.g.to_text(),
            "h": self.h.to_text(),
            "dim": self.dim,
            "gen_matrix": [[int(c) for c in row] for row in self.gen_matrix],
        }
        if distance is not None:
            doc["min_distance"] = distance.distance
            doc["relative_distance"] = float(distance.relative)
        return doc


def construct_code(a: RingElement, a_prime: RingElement) -> Qc15Code:
    """Build the code spanned by (a, a') along with g, h, dim and a generator matrix.

    The generator matrix is the canonical one: scan the 2m rows of the span
    matrix top-down and keep each row that increases the rank.
    """
    if a.n != 2 * a_prime.n or a.field != a_prime.field:
        raise RingMismatch(f"need a in R_2m and a' in R_m, got R_{a.n} and R_{a_prime.n}")
    field = a.field
    m = a_prime.n
    if gcd(m, field.p) != 1:
        raise NotCoprime(f"m={m} must be coprime to p={field.p}")
    g = generator_poly(a, a_prime)
    h = check_poly(g, m)
    dim = int(h.degree) if not h.is_zero() else 0
    blocks = span_matrix(a, a_prime)
    rows = leading_independent_rows(blocks.full, field.p)
    if len(rows) != dim:
        raise AssertionError(
            f"rank of the span matrix ({len(rows)}) disagrees with deg h ({dim})"
        )
    gen = blocks.full[rows] if rows else np.zeros((0, 3 * m), dtype=np.int64)
    gen.setflags(write=False)
    return Qc15Code(field, m, a, a_prime, g, h, dim, gen)


# -- message enumeration helpers --------------------------------------------------


def _codeword_blocks(
    gen: np.ndarray, p: int, k: int, block: int = 1 << 15
) -> Iterator[np.ndarray]:
    """Yield codeword matrices for message indices [0, p^k) in blocks."""
    total = p**k
    radix = np.array([p**j for j in range(k)], dtype=np.int64)
    for start in range(0, total, block):
        stop = min(start + block, total)
        idx = np.arange(start, stop, dtype=np.int64)
        msgs = (idx[:, None] // radix[None, :]) % p
        yield gf_matmul(msgs, gen, p)


def low_weight_message_count(p: int, k: int, max_weight: int) -> int:
    """Number of weight <= max_weight messages in F^k with first nonzero entry 1."""
    w_cap = min(max_weight, k)
    return sum(comb(k, w) * (p - 1) ** (w - 1) for w in range(1, w_cap + 1))


@lru_cache(maxsize=64)
def low_weight_messages(p: int, k: int, max_weight: int) -> np.ndarray:
    """All messages of weight 1..max_weight in F^k, scalar-normalized.

    Scaling a message scales the codeword without changing its weight, so the
    first nonzero entry is pinned to 1 and nothing is lost.
    """
    from itertools import combinations, product

    w_cap = min(max_weight, k)
    rows = []
    for w in range(1, w_cap + 1):
        for support in combinations(range(k), w):
            for vals in product(range(1, p), repeat=w - 1):
                row = [0] * k
                row[support[0]] = 1
                for pos, v in zip(support[1:], vals):
                    row[pos] = v
                rows.append(row)
    out = np.array(rows, dtype=np.int64) if rows else np.zeros((0, k), dtype=np.int64)
    out.setflags(write=False)
    return out
