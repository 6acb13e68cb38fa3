"""Basis change between two plans of equal length through a transform kernel.

The kernel lives in the composite ring modulo ``M1 * M2``. Images and
originals coming from one of the factor rings are lifted by value injection
(the same integer, read modulo the larger composite modulus).

The kernel route only agrees with the direct two-path computation
(inverse in one base, forward in the other) when no wrap-around occurred in
the source ring, so every call checks against that two-path reference by
default and raises :class:`ConsistencyViolation` on disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigring import RingModulus, inverse_mod
from .errors import ConsistencyViolation, InvalidParameter
from .plan import TransformPlan
from .transform import Sequence, as_sequence, forward, inverse

IMAGE = "image"
ORIGINAL = "original"


@dataclass(frozen=True)
class RebasePair:
    plan1: TransformPlan
    plan2: TransformPlan
    composite_modulus: RingModulus

    @property
    def N(self) -> int:
        return self.plan1.N

    @property
    def M(self) -> int:
        return self.composite_modulus.value


def make_pair(plan1: TransformPlan, plan2: TransformPlan) -> RebasePair:
    if plan1.N != plan2.N:
        raise InvalidParameter(f"plans differ in length: {plan1.N} vs {plan2.N}")
    return RebasePair(plan1, plan2, RingModulus(plan1.M * plan2.M))


@dataclass(frozen=True)
class Kernel:
    values: tuple[tuple[int, ...], ...]
    modulus: RingModulus
    direction: str

    def __getitem__(self, idx: tuple[int, int]) -> int:
        r, c = idx
        return self.values[r][c]


def _kernel_entry(ratio: int, N: int, M: int) -> int:
    total, term = 0, 1
    for _ in range(N):
        total += term
        term = term * ratio % M
    return total % M


def build_kernel(pair: RebasePair, direction: str = IMAGE) -> Kernel:
    """Kernel table modulo ``M1 * M2``.

    ``image``: entry (k, n) is ``sum_i (s2^k * s1^-n)^i``, mapping a base-s2
    image to a base-s1 image.
    ``original``: entry (n, i) is ``sum_k (s1^-n * s2^i)^k``, mapping a base-s1
    original to the base-s2 original sharing its image.
    Negative powers use the exponent complement ``s^(N - e)``.
    """
    N, M = pair.N, pair.M
    s1, s2 = pair.plan1.s, pair.plan2.s
    if direction == IMAGE:
        table = tuple(
            tuple(_kernel_entry(pow(s2, k, M) * pow(s1, (N - n) % N, M), N, M) for n in range(N))
            for k in range(N)
        )
    elif direction == ORIGINAL:
        table = tuple(
            tuple(_kernel_entry(pow(s1, (N - n) % N, M) * pow(s2, i, M), N, M) for i in range(N))
            for n in range(N)
        )
    else:
        raise InvalidParameter(f"direction must be {IMAGE!r} or {ORIGINAL!r}")
    return Kernel(table, pair.composite_modulus, direction)


def _apply(pair: RebasePair, kernel: Kernel, values) -> Sequence:
    N, M = pair.N, pair.M
    inv_n = inverse_mod(N, M)
    out = tuple(
        inv_n * sum(values[r] * kernel[r, c] for r in range(N)) % M
        for c in range(N)
    )
    return Sequence(out, pair.composite_modulus)


def _bounded(seq: Sequence, pair: RebasePair, what: str):
    limit = min(pair.plan1.M, pair.plan2.M)
    if any(v >= limit for v in seq):
        raise InvalidParameter(f"{what} entries must be < min(M1, M2) = {limit}")


def two_path_image(pair: RebasePair, image2) -> Sequence:
    """Reference route: recover the original in base s2, then transform in base s1."""
    original = inverse(pair.plan2, image2)
    _bounded(original, pair, "underlying original")
    return forward(pair.plan1, original.values)


def rebase_image(pair: RebasePair, image2, *, check: bool = True) -> Sequence:
    """Recompute a base-s2 image as a base-s1 image over the composite ring."""
    X2 = as_sequence(pair.plan2, image2)
    result = _apply(pair, build_kernel(pair, IMAGE), X2.values)
    if check:
        expected = two_path_image(pair, X2)
        got = tuple(v % pair.plan1.M for v in result)
        if got != expected.values:
            raise ConsistencyViolation(
                f"kernel route gives {list(got)} mod {pair.plan1.M}, "
                f"two-path route gives {list(expected.values)}"
            )
    return result


def two_path_original(pair: RebasePair, original1) -> Sequence:
    image = forward(pair.plan1, original1)
    _bounded(image, pair, "shared image")
    return inverse(pair.plan2, image.values)


def rebase_original(pair: RebasePair, original1, *, check: bool = True) -> Sequence:
    """Recompute a base-s1 original as the base-s2 original with the same image."""
    x1 = as_sequence(pair.plan1, original1)
    _bounded(x1, pair, "original")
    result = _apply(pair, build_kernel(pair, ORIGINAL), x1.values)
    if check:
        expected = two_path_original(pair, x1)
        got = tuple(v % pair.plan2.M for v in result)
        if got != expected.values:
            raise ConsistencyViolation(
                f"kernel route gives {list(got)} mod {pair.plan2.M}, "
                f"two-path route gives {list(expected.values)}"
            )
    return result
