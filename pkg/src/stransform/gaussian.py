"""Gaussian-integer transforms: base ``a + jb`` and a complex modulus.

Residues modulo a Gaussian integer ``M`` are reduced by nearest-integer
division: ``q = round(z * conj(M) / |M|^2)`` componentwise, ties toward zero,
``r = z - M q``. Two values are in the same class exactly when their
difference is divisible by ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .bigring import RingModulus, inverse_mod
from .errors import (
    ComponentOutOfRange,
    ExistenceConditionFailed,
    InvalidParameter,
    LengthMismatch,
    NotInvertible,
    OrderMismatch,
    ZeroModulus,
)
from .numbers import is_prime


@dataclass(frozen=True)
class GaussianElement:
    re: int
    im: int

    def __add__(self, other: GaussianElement) -> GaussianElement:
        return GaussianElement(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianElement) -> GaussianElement:
        return GaussianElement(self.re - other.re, self.im - other.im)

    def __mul__(self, other: GaussianElement) -> GaussianElement:
        return gauss_mul(self, other)

    def __neg__(self) -> GaussianElement:
        return GaussianElement(-self.re, -self.im)

    def conj(self) -> GaussianElement:
        return GaussianElement(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def scale(self, c: int) -> GaussianElement:
        return GaussianElement(c * self.re, c * self.im)

    def __str__(self) -> str:
        return f"({self.re},{self.im})"


ONE = GaussianElement(1, 0)
ZERO = GaussianElement(0, 0)


def gauss_mul(a: GaussianElement, b: GaussianElement) -> GaussianElement:
    return GaussianElement(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def _round_half_to_zero(num: int, den: int) -> int:
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q < 0):
        return q + 1
    return q


def gauss_quotient(z: GaussianElement, modulus: GaussianElement) -> GaussianElement:
    n = modulus.norm()
    if n == 0:
        raise ZeroModulus("Gaussian modulus is zero")
    t = gauss_mul(z, modulus.conj())
    return GaussianElement(_round_half_to_zero(t.re, n), _round_half_to_zero(t.im, n))


def gauss_reduce(z: GaussianElement, modulus: GaussianElement) -> GaussianElement:
    q = gauss_quotient(z, modulus)
    return z - gauss_mul(modulus, q)


def gauss_divides(d: GaussianElement, z: GaussianElement) -> bool:
    """Exact divisibility test: ``z / d`` is a Gaussian integer."""
    n = d.norm()
    if n == 0:
        raise ZeroModulus("division by zero")
    t = gauss_mul(z, d.conj())
    return t.re % n == 0 and t.im % n == 0


def gauss_congruent(a: GaussianElement, b: GaussianElement, modulus: GaussianElement) -> bool:
    return gauss_divides(modulus, a - b)


def residue_system_holds(z: GaussianElement, r: GaussianElement, modulus: GaussianElement) -> bool:
    """The two real congruences mod ``|M|^2`` that a residue ``r`` of ``z`` satisfies.

    ``[[Re M, Im M], [-Im M, Re M]] (r - z) == 0 (mod |M|^2)``. The matrix
    is singular modulo ``|M|^2``, so this pins down the class, not a
    representative.
    """
    n = modulus.norm()
    dre, dim = r.re - z.re, r.im - z.im
    a, b = modulus.re, modulus.im
    return (a * dre + b * dim) % n == 0 and (-b * dre + a * dim) % n == 0


def gauss_pow(base: GaussianElement, exp: int, modulus: GaussianElement) -> GaussianElement:
    result = gauss_reduce(ONE, modulus)
    base = gauss_reduce(base, modulus)
    while exp:
        if exp & 1:
            result = gauss_reduce(result * base, modulus)
        base = gauss_reduce(base * base, modulus)
        exp >>= 1
    return result


@dataclass(frozen=True)
class GaussianPlan:
    s: GaussianElement
    N: int
    modulus: GaussianElement
    norm: RingModulus
    inv_n: GaussianElement

    def reduce(self, z: GaussianElement) -> GaussianElement:
        return gauss_reduce(z, self.modulus)

    @cached_property
    def powers(self) -> tuple[GaussianElement, ...]:
        out = [self.reduce(ONE)]
        for _ in range(self.N - 1):
            out.append(self.reduce(out[-1] * self.s))
        return tuple(out)


def geometric_gaussian(s: GaussianElement, count: int) -> GaussianElement:
    total, term = ZERO, ONE
    for _ in range(count):
        total = total + term
        term = term * s
    return total


def make_gaussian_plan(s: GaussianElement, N: int) -> GaussianPlan:
    """Validate a Gaussian plan with modulus ``sum_{m<N} s^m``."""
    if gcd(s.re, s.im) != 1:
        raise InvalidParameter(f"Re s and Im s must be coprime, got {s}")
    if not is_prime(N):
        raise InvalidParameter(f"N must be prime, got {N}")
    M = geometric_gaussian(s, N)
    norm = M.norm()
    if norm < 2:
        raise OrderMismatch(f"modulus {M} is a unit")

    def is_one(z):
        return gauss_congruent(z, ONE, M)

    if not is_one(gauss_pow(s, N, M)) or any(is_one(gauss_pow(s, d, M)) for d in range(1, N) if N % d == 0):
        raise OrderMismatch(f"order of {s} mod {M} is not {N}")

    powers = [gauss_pow(s, e, M) for e in range(N)]
    for d in range(1, N):
        total = ZERO
        for k in range(N):
            total = total + powers[(d * k) % N]
        if not gauss_divides(M, total):
            raise ExistenceConditionFailed(d)

    try:
        u = inverse_mod(N, norm)
    except NotInvertible:
        raise NotInvertible(f"N={N} is not invertible mod |M|^2 = {norm}") from None
    inv = gauss_reduce(GaussianElement(u, 0), M)
    assert gauss_congruent(inv.scale(N), ONE, M)
    return GaussianPlan(s, N, M, RingModulus(norm), inv)


def _check_input(plan: GaussianPlan, z) -> list[GaussianElement]:
    z = list(z)
    if len(z) != plan.N:
        raise LengthMismatch(f"expected {plan.N} values, got {len(z)}")
    n = plan.norm.value
    for v in z:
        if abs(v.re) >= n or abs(v.im) >= n:
            raise ComponentOutOfRange(f"{v} has a component with |.| >= {n}")
    return z


def gauss_forward(plan: GaussianPlan, z) -> list[GaussianElement]:
    z = _check_input(plan, z)
    N, pw = plan.N, plan.powers
    out = []
    for k in range(N):
        acc = ZERO
        for i in range(N):
            acc = plan.reduce(acc + z[i] * pw[(N - (k * i) % N) % N])
        out.append(acc)
    return out


def gauss_inverse(plan: GaussianPlan, Z) -> list[GaussianElement]:
    Z = _check_input(plan, Z)
    N, pw = plan.N, plan.powers
    out = []
    for i in range(N):
        acc = ZERO
        for k in range(N):
            acc = plan.reduce(acc + Z[k] * pw[(k * i) % N])
        out.append(plan.reduce(acc * plan.inv_n))
    return out
