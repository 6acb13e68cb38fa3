"""Arbitrary-precision residue ring arithmetic.

Residues are kept as canonical least nonnegative representatives in
``[0, M - 1]`` so that equality of ring elements is plain value equality.
Python ints carry the arbitrary precision; nothing here is fixed width.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter, ModulusMismatch, NotInvertible, TheoremViolation


@dataclass(frozen=True)
class RingModulus:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise InvalidParameter(f"modulus must be an int, got {self.value!r}")
        if self.value < 2:
            raise InvalidParameter(f"modulus must be >= 2, got {self.value}")

    def __int__(self) -> int:
        return self.value

    def element(self, value: int) -> RingElement:
        """Reduce an arbitrary (possibly negative) integer into this ring."""
        return RingElement(value % self.value, self)

    @property
    def sup(self) -> int:
        return self.value - 1

    @property
    def inf(self) -> int:
        return 0


@dataclass(frozen=True)
class RingElement:
    residue: int
    modulus: RingModulus

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus.value:
            raise InvalidParameter(
                f"residue {self.residue} is not canonical mod {self.modulus.value}"
            )

    def __int__(self) -> int:
        return self.residue

    def __repr__(self) -> str:
        return f"RingElement({self.residue} mod {self.modulus.value})"

    def __add__(self, other: RingElement) -> RingElement:
        return ring_add(self, other)

    def __sub__(self, other: RingElement) -> RingElement:
        return ring_sub(self, other)

    def __mul__(self, other: RingElement) -> RingElement:
        return ring_mul(self, other)

    def __neg__(self) -> RingElement:
        return self.modulus.element(-self.residue)

    def __pow__(self, exp: int) -> RingElement:
        return ring_pow(self, exp)


def as_modulus(m: int | RingModulus) -> RingModulus:
    return m if isinstance(m, RingModulus) else RingModulus(m)


def _check_same(a: RingElement, b: RingElement) -> RingModulus:
    if a.modulus != b.modulus:
        raise ModulusMismatch(
            f"operands live mod {a.modulus.value} and mod {b.modulus.value}"
        )
    return a.modulus


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    m = _check_same(a, b)
    return RingElement((a.residue + b.residue) % m.value, m)


def ring_sub(a: RingElement, b: RingElement) -> RingElement:
    m = _check_same(a, b)
    return RingElement((a.residue - b.residue) % m.value, m)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    m = _check_same(a, b)
    return RingElement((a.residue * b.residue) % m.value, m)


def power_mod(base: int, exp: int, m: int) -> int:
    """Left-to-right square-and-multiply on plain ints."""
    if exp < 0:
        raise InvalidParameter("exponent must be >= 0")
    result = 1 % m
    base %= m
    for bit in bin(exp)[2:]:
        result = result * result % m
        if bit == "1":
            result = result * base % m
    return result


def ring_pow(base: RingElement, exp: int) -> RingElement:
    return RingElement(power_mod(base.residue, exp, base.modulus.value), base.modulus)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def inverse_mod(a: int, m: int) -> int:
    g, x, _ = extended_gcd(a % m, m)
    if g != 1:
        raise NotInvertible(f"{a} has no inverse mod {m} (gcd = {g})")
    return x % m


def ring_inv(a: RingElement) -> RingElement:
    return RingElement(inverse_mod(a.residue, a.modulus.value), a.modulus)


def geometric_sum(s: int, count: int) -> int:
    """Exact ``sum(s**m for m in range(count))`` via ``(s**count - 1) // (s - 1)``."""
    if s < 2 or count < 1:
        raise InvalidParameter("need s >= 2 and count >= 1")
    q, r = divmod(s**count - 1, s - 1)
    assert r == 0
    return q


def geometric_modulus(s: int, count: int) -> RingModulus:
    # count == 1 gives 1, which RingModulus rejects.
    return RingModulus(geometric_sum(s, count))


def exponent_reduce(s: int, x: int, p: int, M: int | RingModulus) -> RingElement:
    """Evaluate ``s**x mod M`` through the reduced exponent ``x mod p``.

    Both ``s**(x mod p)`` and ``s**x`` are reduced mod ``M`` and compared; they
    agree whenever ``M`` is ``s**p - 1`` or the geometric sum of ``p`` powers
    of ``s``. A disagreement raises :class:`TheoremViolation`, which flags a bad
    ``(s, p, M)`` triple rather than returning a silently wrong residue.
    """
    if s < 2 or x < 0 or p < 1:
        raise InvalidParameter("need s >= 2, x >= 0, p >= 1")
    m = as_modulus(M)
    reduced = power_mod(s, x % p, m.value)
    full = power_mod(s, x, m.value)
    if reduced != full:
        raise TheoremViolation(
            f"s^(x mod p) = {reduced} but s^x = {full} mod {m.value} "
            f"(s={s}, x={x}, p={p})"
        )
    return RingElement(reduced, m)
