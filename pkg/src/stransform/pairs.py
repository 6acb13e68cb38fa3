"""Ordered-pair ring and the experimental pair transform.

EXPERIMENTAL. Reducing a pair modulo a pair modulus has no standard
definition. Here both components are reduced modulo the scalar
``X**2 + Y**2``, which is the first component of the variant-2 self-product
of the modulus pair ``(X, Y)``. Under variant 2 the power sequence of ``s`` is
``(a**2 + b**2)**k`` times either ``(1, 0)`` or ``s``, so a plan generally has
no order-N base and round trips usually fail. :func:`pair_diagnostic`
reports what actually happens instead of asserting success.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bigring import RingModulus, inverse_mod
from .errors import InvalidParameter, LengthMismatch, NotInvertible
from .numbers import is_prime


@dataclass(frozen=True)
class PairElement:
    first: int
    second: int

    def __iter__(self):
        yield self.first
        yield self.second

    def __str__(self) -> str:
        return f"<{self.first},{self.second}>"


ONE = PairElement(1, 0)
ZERO = PairElement(0, 0)


def pair_add(A: PairElement, B: PairElement) -> PairElement:
    return PairElement(A.first + B.first, A.second + B.second)


def pair_sub(A: PairElement, B: PairElement) -> PairElement:
    return PairElement(A.first - B.first, A.second - B.second)


def pair_mul_componentwise(A: PairElement, B: PairElement) -> PairElement:
    return PairElement(A.first * B.first, A.second * B.second)


Matrix = tuple[tuple[int, int], tuple[int, int]]


def variant_matrix(A: PairElement, variant: int) -> Matrix:
    """2x2 matrix of ``A`` for cross-product variant 0..4 (0 is the degenerate form)."""
    a, b = A.first, A.second
    if variant == 0:
        return ((a, b), (b, a))
    if variant == 1:
        return ((a, -b), (b, a))
    if variant == 2:
        return ((a, b), (b, -a))
    if variant == 3:
        return ((-a, b), (b, a))
    if variant == 4:
        return ((a, b), (-b, a))
    raise InvalidParameter(f"variant must be 0..4, got {variant}")


def _apply(m: Matrix, v: PairElement) -> PairElement:
    return PairElement(m[0][0] * v.first + m[0][1] * v.second, m[1][0] * v.first + m[1][1] * v.second)


def _matmul(p: Matrix, q: Matrix) -> Matrix:
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )


def pair_cross(A: PairElement, B: PairElement, variant: int) -> PairElement:
    return _apply(variant_matrix(A, variant), B)


def determinant(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def pair_pow(s: PairElement, m: int, variant: int) -> PairElement:
    """``M_s**m`` applied to ``<1, 0>``, with ``M_s`` the variant's matrix of s."""
    if m < 0:
        raise InvalidParameter("exponent must be >= 0")
    result: Matrix = ((1, 0), (0, 1))
    base = variant_matrix(s, variant)
    while m:
        if m & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        m >>= 1
    return _apply(result, ONE)


def reduce_pair(A: PairElement, M: int) -> PairElement:
    return PairElement(A.first % M, A.second % M)


@dataclass(frozen=True)
class PairPlan:
    s: PairElement
    variant: int
    N: int
    modulus_pair: PairElement
    scalar_modulus: RingModulus

    @property
    def M(self) -> int:
        return self.scalar_modulus.value

    def weight(self, e: int) -> PairElement:
        return reduce_pair(pair_pow(self.s, e % self.N, self.variant), self.M)


def pair_plan(s: PairElement, N: int, variant: int = 2) -> PairPlan:
    if not is_prime(N):
        raise InvalidParameter(f"N must be prime, got {N}")
    if variant not in (2, 3, 4):
        raise InvalidParameter(f"pair transform is defined for variants 2, 3, 4; got {variant}")
    total = ZERO
    for m in range(N):
        total = pair_add(total, pair_pow(s, m, variant))
    scalar = pair_cross(total, total, 2).first
    if scalar < 2:
        raise InvalidParameter(f"scalar modulus {scalar} is degenerate")
    return PairPlan(s, variant, N, total, RingModulus(scalar))


def _check(plan: PairPlan, xs) -> list[PairElement]:
    xs = [reduce_pair(PairElement(*v), plan.M) for v in xs]
    if len(xs) != plan.N:
        raise LengthMismatch(f"expected {plan.N} pairs, got {len(xs)}")
    return xs


def pair_forward(plan: PairPlan, xs) -> list[PairElement]:
    """``X(k) = sum_i x(i) * s^(-(ki) mod N)`` with the plan's cross product."""
    xs = _check(plan, xs)
    N, M = plan.N, plan.M
    out = []
    for k in range(N):
        acc = ZERO
        for i in range(N):
            w = plan.weight((N - (k * i) % N) % N)
            acc = pair_add(acc, pair_cross(xs[i], w, plan.variant))
        out.append(reduce_pair(acc, M))
    return out


def pair_inverse(plan: PairPlan, Xs, *, scale_by_inverse_n: bool = True) -> list[PairElement]:
    """Inverse sums; ``scale_by_inverse_n`` selects whether the 1/N factor is applied."""
    Xs = _check(plan, Xs)
    N, M = plan.N, plan.M
    inv_n = inverse_mod(N, M) if scale_by_inverse_n else 1
    out = []
    for i in range(N):
        acc = ZERO
        for k in range(N):
            acc = pair_add(acc, pair_cross(Xs[k], plan.weight((k * i) % N), plan.variant))
        out.append(reduce_pair(PairElement(acc.first * inv_n, acc.second * inv_n), M))
    return out


@dataclass
class PairDiagnostic:
    plan: PairPlan
    weight_period_closes: bool  # s^N reduces to <1, 0>
    existence_sums: dict[int, PairElement] = field(default_factory=dict)
    roundtrip_with_inverse_n: bool | None = None  # None when N has no inverse
    roundtrip_without_inverse_n: bool = False
    samples: int = 0

    @property
    def vanishing_offsets(self) -> list[int]:
        return [d for d, v in self.existence_sums.items() if v == ZERO]

    def lines(self) -> list[str]:
        p = self.plan
        out = [
            f"pair plan: s={p.s} variant={p.variant} N={p.N} modulus pair={p.modulus_pair} scalar modulus={p.M}",
            f"s^N reduces to <1,0>: {self.weight_period_closes}",
        ]
        for d, v in self.existence_sums.items():
            out.append(f"  offset d={d}: weight sum {v} {'vanishes' if v == ZERO else 'does not vanish'}")
        rt = "n/a (N not invertible)" if self.roundtrip_with_inverse_n is None else self.roundtrip_with_inverse_n
        out.append(f"round trip with 1/N over {self.samples} samples: {rt}")
        out.append(f"round trip without 1/N over {self.samples} samples: {self.roundtrip_without_inverse_n}")
        return out


def pair_diagnostic(plan: PairPlan, samples: int = 20, seed: int = 0) -> PairDiagnostic:
    """Measure whether the pair transform inverts under the chosen reduction."""
    N, M = plan.N, plan.M
    closes = reduce_pair(pair_pow(plan.s, N, plan.variant), M) == ONE
    sums = {}
    for d in range(1, N):
        acc = ZERO
        for k in range(N):
            acc = pair_add(acc, plan.weight(d * k))
        sums[d] = reduce_pair(acc, M)
    rng = random.Random(seed)
    with_inv: bool | None = True
    without = True
    try:
        inverse_mod(N, M)
    except NotInvertible:
        with_inv = None
    for _ in range(samples):
        xs = [PairElement(rng.randrange(M), rng.randrange(M)) for _ in range(N)]
        X = pair_forward(plan, xs)
        if with_inv is not None and pair_inverse(plan, X) != xs:
            with_inv = False
        if pair_inverse(plan, X, scale_by_inverse_n=False) != xs:
            without = False
    return PairDiagnostic(plan, closes, sums, with_inv, without, samples)
