"""The restricted random-code ensemble and its exact / Monte-Carlo experiments.

The probability space is the product of two restricted ideals sampled
uniformly: multiples of (X^m + 1)(X - 1) inside R_{2m}, paired with multiples
of (X - 1) inside R_m. Both factors have dimension m - 1, so the space holds
p^{2(m-1)} equally likely pairs.

Event conventions
-----------------
"Relative distance <= delta" is implemented as "some nonzero codeword has
Hamming weight <= floor(3 m delta)". The zero code (only the pair (0, 0))
has no nonzero codeword, so it never satisfies the event and therefore counts
toward the complement; its frequency is reported separately in every report
because the relative distance of the zero code is not a defined quantity.

Reproducibility
---------------
Monte-Carlo trial t draws its own generator from (seed, t), so serial and
parallel execution orders produce identical streams; trials are independent
and aggregation is order-free.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Union

import numpy as np

from .algebra import Poly, PrimeField, RingElement, cyclotomic_cosets
from .bounds import delta_prob_bound, qary_entropy
from .codes import (
    DEFAULT_ENUM_LIMIT,
    construct_code,
    generator_poly,
    low_weight_message_count,
)
from .errors import (
    DomainError,
    EmptyTrialSet,
    EnumerationTooLarge,
    NotCoprime,
)

DeltaLike = Union[float, str, Fraction]


def as_fraction(delta: DeltaLike) -> Fraction:
    """Exact value of the threshold parameter. Strings like "0.106" are read
    as exact decimals; floats keep their binary value."""
    return delta if isinstance(delta, Fraction) else Fraction(delta)


def weight_threshold(m: int, delta: DeltaLike) -> int:
    """floor(3 m delta), computed exactly."""
    d = as_fraction(delta)
    return (3 * m * d.numerator) // d.denominator


# -- the restricted pair space ------------------------------------------------------


def restricted_generators(field: PrimeField, m: int) -> tuple[RingElement, RingElement]:
    """Generators of the two restricted ideals: (X^m+1)(X-1) in R_{2m} and X-1 in R_m."""
    left = Poly.x_pow_plus_one(field, m) * Poly(field, (-1, 1))
    return (
        RingElement.from_poly(left, 2 * m),
        RingElement.from_poly(Poly(field, (-1, 1)), m),
    )


@dataclass(frozen=True)
class RestrictedPair:
    """A sample (a, a'): a is a multiple of (X^m+1)(X-1), a' a multiple of X-1."""

    a: RingElement
    a_prime: RingElement

    def __post_init__(self):
        m = self.a_prime.n
        if self.a.n != 2 * m:
            raise ValueError(f"a lives in R_{self.a.n}, expected R_{2 * m}")
        lift = self.a.lift()
        if not Poly.x_pow_plus_one(self.a.field, m).divides(lift):
            raise ValueError("a is not a multiple of X^m + 1")
        if lift.evaluate(1) != 0:
            raise ValueError("a is not a multiple of X - 1")
        if self.a_prime.lift().evaluate(1) != 0:
            raise ValueError("a' is not a multiple of X - 1")

    @property
    def m(self) -> int:
        return self.a_prime.n


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """The stream for one trial, derived from (seed, trial)."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(trial,)))
    )


def sample_pair(field: PrimeField, m: int, rng: np.random.Generator) -> RestrictedPair:
    """One uniform sample from the restricted pair space.

    A uniform f in R_{2m} is pushed through f -> f * (X^m+1)(X-1); the map is
    a surjective linear map onto the ideal with equal-size fibers, so the
    image is uniform. Same for the R_m factor.
    """
    if gcd(m, field.p) != 1:
        raise NotCoprime(f"m={m} must be coprime to p={field.p}")
    gen2m, genm = restricted_generators(field, m)
    p = field.p
    f = RingElement(field, 2 * m, tuple(int(c) for c in rng.integers(0, p, size=2 * m)))
    f2 = RingElement(field, m, tuple(int(c) for c in rng.integers(0, p, size=m)))
    return RestrictedPair(f * gen2m, f2 * genm)


# -- ideals inside R_n ----------------------------------------------------------------


def ideal_dim(b: RingElement) -> int:
    """Dimension of the ideal generated by b: n - deg gcd(lift(b), X^n - 1)."""
    g = b.lift().gcd(Poly.x_pow_minus_one(b.field, b.n))
    return b.n - int(g.degree)


def ideal_basis(b: RingElement) -> np.ndarray:
    """Rows X^i * g for i < dim, where g = gcd(lift(b), X^n - 1) generates <b>."""
    g = b.lift().gcd(Poly.x_pow_minus_one(b.field, b.n))
    d = b.n - int(g.degree)
    if d == 0:
        return np.zeros((0, b.n), dtype=np.int64)
    row = np.array(list(g.coeffs) + [0] * (b.n - len(g.coeffs)), dtype=np.int64)
    return np.stack([np.roll(row, i) for i in range(d)])


def ideal_elements(b: RingElement, limit: int = DEFAULT_ENUM_LIMIT) -> np.ndarray:
    """All p^dim elements of <b> as coefficient rows."""
    p = b.field.p
    basis = ideal_basis(b)
    d = basis.shape[0]
    total = p**d
    if total > limit:
        raise EnumerationTooLarge(f"ideal has {total} elements, limit is {limit}")
    if d == 0:
        return np.zeros((1, b.n), dtype=np.int64)
    radix = np.array([p**j for j in range(d)], dtype=np.int64)
    msgs = (np.arange(total, dtype=np.int64)[:, None] // radix[None, :]) % p
    return (msgs @ basis) % p


def restricted_elements(
    field: PrimeField, m: int, limit: int = DEFAULT_ENUM_LIMIT
) -> tuple[list[RingElement], list[RingElement]]:
    """All elements of the two restricted ideals, p^(m-1) on each side."""
    gen2m, genm = restricted_generators(field, m)

    def walk(gen: RingElement) -> list[RingElement]:
        return [
            RingElement(field, gen.n, tuple(int(c) for c in row))
            for row in ideal_elements(gen, limit)
        ]

    return walk(gen2m), walk(genm)


def _weight_histogram(rows: np.ndarray, n: int) -> np.ndarray:
    return np.bincount(np.count_nonzero(rows, axis=1), minlength=n + 1)


def _require_restricted(b: RingElement) -> int:
    if b.n % 2 != 0:
        raise ValueError(f"b must live in R_2m, got co-length {b.n}")
    m = b.n // 2
    lift = b.lift()
    if not b.is_zero():
        if not Poly.x_pow_plus_one(b.field, m).divides(lift) or lift.evaluate(1) != 0:
            raise ValueError("b is not a multiple of (X^m + 1)(X - 1)")
    return m


def exact_low_weight_fraction(
    b: RingElement, delta: DeltaLike, limit: int = DEFAULT_ENUM_LIMIT
) -> Fraction:
    """Exact probability that (b*a, b*a') is nonzero with weight <= floor(3m delta)
    when (a, a') is uniform over the restricted pair space.

    The pushforward of the uniform pair through multiplication by b is uniform
    on the product of the two ideals generated by b, so the probability is a
    plain count over that product; the two weight histograms are convolved
    instead of enumerating the product itself.
    """
    m = _require_restricted(b)
    t = weight_threshold(m, delta)
    if b.is_zero() or t < 1:
        return Fraction(0)
    b_m = b.fold_to(m)
    d1, d2 = ideal_dim(b), ideal_dim(b_m)
    p = b.field.p
    if p ** (d1 + d2) > limit:
        raise EnumerationTooLarge(f"|image| = {p ** (d1 + d2)} exceeds the limit {limit}")
    h1 = _weight_histogram(ideal_elements(b, limit), 2 * m)
    h2 = _weight_histogram(ideal_elements(b_m, limit), m)
    prefix2 = np.cumsum(h2)
    count = 0
    for w1 in range(0, min(t, 2 * m) + 1):
        cap = min(t - w1, m)
        count += int(h1[w1]) * int(prefix2[cap])
    count -= 1  # the zero-zero pair has weight 0, excluded by "1 <= w"
    return Fraction(count, p ** (d1 + d2))


# -- reports -----------------------------------------------------------------------------


CSV_FIELDS = (
    "q",
    "m",
    "delta",
    "mode",
    "trials",
    "hits",
    "estimate",
    "exact",
    "bound",
    "zero_code_fraction",
    "seed",
    "warning",
)


@dataclass(frozen=True)
class EnsembleReport:
    """One experiment outcome; serializes to a fixed-width CSV row.

    estimate is hits/trials in montecarlo mode and equals the exact value in
    exact mode. bound, when present, is always the analytic upper bound on
    Pr(relative distance <= delta), regardless of which side the row
    estimates.
    """

    q: int
    m: int
    delta: Fraction | None
    mode: str  # "exact" | "montecarlo"
    trials: int
    hits: int
    estimate: float
    exact: Fraction | None
    bound: float | None
    zero_code_fraction: float
    seed: int | None
    warning: str = ""

    def csv_row(self) -> list[str]:
        def num(x) -> str:
            return "" if x is None else repr(float(x))

        return [
            str(self.q),
            str(self.m),
            num(self.delta),
            self.mode,
            str(self.trials),
            str(self.hits),
            num(self.estimate),
            num(self.exact),
            num(self.bound),
            num(self.zero_code_fraction),
            "" if self.seed is None else str(self.seed),
            self.warning,
        ]

    def with_warning(self, text: str) -> "EnsembleReport":
        return replace(self, warning=text)


def _maybe_bound(m: int, delta: DeltaLike, q: int) -> float | None:
    try:
        return delta_prob_bound(m, float(as_fraction(delta)), q)
    except DomainError:
        return None


# -- exact and Monte-Carlo experiments -----------------------------------------------------


def exact_delta_leq_prob(
    field: PrimeField, m: int, delta: DeltaLike, limit: int = DEFAULT_ENUM_LIMIT
) -> EnsembleReport:
    """Exact Pr(relative distance <= delta) by sweeping every restricted pair."""
    if gcd(m, field.p) != 1:
        raise NotCoprime(f"m={m} must be coprime to p={field.p}")
    p = field.p
    pairs = p ** (2 * (m - 1))
    if pairs > limit:
        raise EnumerationTooLarge(f"{pairs} pairs exceed the limit {limit}")
    t = weight_threshold(m, delta)
    hits = 0
    zero_codes = 0
    a_list, ap_list = restricted_elements(field, m, limit)
    for a in a_list:
        for ap in ap_list:
            code = construct_code(a, ap)
            if code.dim == 0:
                zero_codes += 1
                continue
            if code.has_word_of_weight_at_most(t, limit):
                hits += 1
    frac = Fraction(hits, pairs)
    return EnsembleReport(
        q=p,
        m=m,
        delta=as_fraction(delta),
        mode="exact",
        trials=pairs,
        hits=hits,
        estimate=float(frac),
        exact=frac,
        bound=_maybe_bound(m, delta, p),
        zero_code_fraction=zero_codes / pairs,
        seed=None,
    )


def mc_delta_prob(
    field: PrimeField,
    m: int,
    delta: DeltaLike,
    trials: int,
    seed: int,
    limit: int = DEFAULT_ENUM_LIMIT,
    attach_exact_pairs: int = 1000,
) -> EnsembleReport:
    """Monte-Carlo estimate of Pr(relative distance > delta).

    A trial is a hit when its code has no nonzero word of weight <=
    floor(3 m delta); zero-code draws are hits under the module convention
    and are tallied in zero_code_fraction. When the full pair space is small
    enough the exact complement is attached for cross-checking.
    """
    if trials < 1:
        raise EmptyTrialSet("at least one trial is required")
    if gcd(m, field.p) != 1:
        raise NotCoprime(f"m={m} must be coprime to p={field.p}")
    p = field.p
    t = weight_threshold(m, delta)
    candidates = low_weight_message_count(p, m - 1, min(t, m - 1)) if m > 1 else 0
    if candidates > limit:
        raise EnumerationTooLarge(
            f"{candidates} low-weight candidates per trial exceed the limit {limit}"
        )
    hits = 0
    zero_codes = 0
    for i in range(trials):
        pair = sample_pair(field, m, trial_rng(seed, i))
        code = construct_code(pair.a, pair.a_prime)
        if code.dim == 0:
            zero_codes += 1
            hits += 1  # no nonzero codeword at all, so none below the threshold
            continue
        if not code.has_word_of_weight_at_most(t, limit):
            hits += 1
    exact = None
    if p ** (2 * (m - 1)) <= attach_exact_pairs:
        exact = 1 - exact_delta_leq_prob(field, m, delta, limit).exact
    return EnsembleReport(
        q=p,
        m=m,
        delta=as_fraction(delta),
        mode="montecarlo",
        trials=trials,
        hits=hits,
        estimate=hits / trials,
        exact=exact,
        bound=_maybe_bound(m, delta, p),
        zero_code_fraction=zero_codes / trials,
        seed=seed,
    )


def exact_fullrank_prob(m: int, q: int) -> Fraction:
    """Exact Pr(dim = m - 1): the product of (1 - q^(-2 d_j)) over the nonzero
    cyclotomic coset sizes d_j. The empty product (m = 1) is 1."""
    acc = Fraction(1)
    for d in cyclotomic_cosets(m, q).nonzero_sizes():
        acc *= 1 - Fraction(1, q ** (2 * d))
    return acc


def fullrank_census(
    field: PrimeField, m: int, limit: int = DEFAULT_ENUM_LIMIT
) -> Fraction:
    """Exhaustive fraction of restricted pairs whose code has dimension m - 1.

    Independent of exact_fullrank_prob: this walks all pairs and counts
    degrees, no coset combinatorics involved.
    """
    p = field.p
    pairs = p ** (2 * (m - 1))
    if pairs > limit:
        raise EnumerationTooLarge(f"{pairs} pairs exceed the limit {limit}")
    a_list, ap_list = restricted_elements(field, m, limit)
    hits = 0
    for a in a_list:
        for ap in ap_list:
            g = generator_poly(a, ap)
            if 2 * m - int(g.degree) == m - 1:
                hits += 1
    return Fraction(hits, pairs)


def mc_fullrank_prob(
    field: PrimeField, m: int, trials: int, seed: int
) -> EnsembleReport:
    """Monte-Carlo estimate of Pr(dim = m - 1); needs only gcd degrees per trial."""
    if trials < 1:
        raise EmptyTrialSet("at least one trial is required")
    p = field.p
    hits = 0
    zero_codes = 0
    for i in range(trials):
        pair = sample_pair(field, m, trial_rng(seed, i))
        g = generator_poly(pair.a, pair.a_prime)
        dim = 2 * m - int(g.degree)
        if dim == m - 1:
            hits += 1
        if dim == 0:
            zero_codes += 1
    return EnsembleReport(
        q=p,
        m=m,
        delta=None,
        mode="montecarlo",
        trials=trials,
        hits=hits,
        estimate=hits / trials,
        exact=exact_fullrank_prob(m, p),
        bound=None,
        zero_code_fraction=zero_codes / trials,
        seed=seed,
    )


# -- ideal counting and sphere counts -----------------------------------------------------


def count_ideals_by_dim(m: int, q: int) -> dict[int, int]:
    """Number of ideals of each dimension inside the restricted ideal of R_{2m}.

    Ideals correspond to subsets of the irreducible factors of
    (X^m - 1)/(X - 1), so the counts are subset sums of the coset sizes.
    Includes the zero ideal at dimension 0.
    """
    sizes = cyclotomic_cosets(m, q).nonzero_sizes()
    counts: dict[int, int] = {0: 1}
    for s in sizes:
        for d in sorted(counts, reverse=True):
            counts[d + s] = counts.get(d + s, 0) + counts[d]
    return dict(sorted(counts.items()))


def sphere_count_check(
    b: RingElement, w: int, limit: int = DEFAULT_ENUM_LIMIT
) -> tuple[int, float]:
    """(exact number of elements of <b> with weight <= w, the bound q^(d*h_q(w/n))).

    The inequality exact <= bound is guaranteed only for w/n <= 1 - 1/q; the
    raw pair is returned either way so callers can probe the edge.
    """
    if w < 0 or w > b.n:
        raise DomainError(f"weight bound must lie in [0, {b.n}], got {w}")
    q = b.field.p
    d = ideal_dim(b)
    if q**d > limit:
        raise EnumerationTooLarge(f"ideal has {q ** d} elements, limit is {limit}")
    rows = ideal_elements(b, limit)
    exact = int((np.count_nonzero(rows, axis=1) <= w).sum())
    bound = float(q ** (d * qary_entropy(q, w / b.n)))
    return exact, bound
