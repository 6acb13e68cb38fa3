"""Complement-based dual forms of the ring operations and transform identities.

The complement is ``a' = (1 - a) mod M``. The integer form ``M + 1 - a`` is
congruent to it, so every identity below is checked purely inside the ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bigring import RingElement
from .errors import TheoremViolation
from .plan import TransformPlan
from .theorems import cyclic_convolution_direct, pointwise_mul
from .transform import Sequence, as_sequence, forward


def complement(a: RingElement) -> RingElement:
    return a.modulus.element(1 - a.residue)


def _c(v: int, M: int) -> int:
    return (1 - v) % M


def de_morgan_product(a: RingElement, b: RingElement) -> RingElement:
    """``(a' b')'``, checked against ``a + b - ab``."""
    lhs = complement(complement(a) * complement(b))
    rhs = a.modulus.element(a.residue + b.residue - a.residue * b.residue)
    if lhs != rhs:
        raise TheoremViolation(f"(a'b')' = {lhs.residue} but a+b-ab = {rhs.residue}")
    return lhs


def dual_product(a: RingElement, b: RingElement) -> RingElement:
    """``a + b - (a'b')'``, which must equal ``a * b``."""
    value = a + b - complement(complement(a) * complement(b))
    if value != a * b:
        raise TheoremViolation(f"a+b-(a'b')' = {value.residue} but ab = {(a * b).residue}")
    return value


def dual_sum(a: RingElement, b: RingElement) -> RingElement:
    """``ab + (a'b')'``, which must equal ``a + b``."""
    value = a * b + complement(complement(a) * complement(b))
    if value != a + b:
        raise TheoremViolation(f"ab+(a'b')' = {value.residue} but a+b = {(a + b).residue}")
    return value


@dataclass
class IdentityResult:
    name: str
    passed: bool
    lhs: tuple = ()
    rhs: tuple = ()


@dataclass
class DualityReport:
    results: list[IdentityResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> IdentityResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def dual_theorem_suite(plan: TransformPlan, x, y, mu: int = 3) -> DualityReport:
    """Evaluate both sides of every dual transform identity, elementwise.

    The arrow in "A -> B" is read as ``forward(A) == B``. ``mu`` is the
    linearity scalar. Nothing raises; the report carries pass/fail per identity.
    """
    M, N = plan.M, plan.N
    x, y = as_sequence(plan, x), as_sequence(plan, y)
    mu %= M
    X, Y = forward(plan, x), forward(plan, y)
    inv_n = plan.inv_n.residue

    def seq(vals):
        return Sequence(tuple(v % M for v in vals), plan.modulus)

    def dsum(a, b):  # a*b + (a'*b')'
        return seq(p * q + _c(_c(p, M) * _c(q, M), M) for p, q in zip(a, b))

    def dprod(a, b):  # a + b - (a'*b')'
        return seq(p + q - _c(_c(p, M) * _c(q, M), M) for p, q in zip(a, b))

    def dscale(a):  # mu + a - (mu'*a')'
        return seq(mu + p - _c(_c(mu, M) * _c(p, M), M) for p in a)

    plain_sum_x = seq(p + q for p, q in zip(x, y))
    plain_sum_X = seq(p + q for p, q in zip(X, Y))
    report = DualityReport()

    def record(name, lhs, rhs):
        lhs, rhs = tuple(lhs), tuple(rhs)
        report.results.append(IdentityResult(name, lhs == rhs, lhs, rhs))

    # sum theorem
    record("sum: plain original, dual image", forward(plan, plain_sum_x), dsum(X, Y))
    record("sum: dual original, plain image", forward(plan, dsum(x, y)), plain_sum_X)
    record("sum: dual both sides", forward(plan, dsum(x, y)), dsum(X, Y))

    # linearity
    scaled_x = seq(mu * v for v in x)
    record("scale: plain original, dual image", forward(plan, scaled_x), dscale(X))
    record("scale: dual original, plain image", forward(plan, dscale(x)), seq(mu * v for v in X))
    record("scale: dual both sides", forward(plan, dscale(x)), dscale(X))

    # image convolution theorem in dual form
    def dual_conv(A, B):
        # (1/N) [sum_k A(k) + sum_k B(n-k) - sum_k (A'(k) B'(n-k))']
        out = []
        for n in range(N):
            t = sum(A[k] + B[(n - k) % N] - _c(_c(A[k], M) * _c(B[(n - k) % N], M), M) for k in range(N))
            out.append(inv_n * t)
        return seq(out)

    plain_conv = seq(inv_n * v for v in cyclic_convolution_direct(plan, X, Y))
    record("product: plain original, dual convolution", forward(plan, pointwise_mul(plan, x, y)), dual_conv(X, Y))
    record("product: dual original, plain convolution", forward(plan, dprod(x, y)), plain_conv)
    record("product: dual both sides", forward(plan, dprod(x, y)), dual_conv(X, Y))

    # energy equality in dual form: 2*sum(v) - sum((v'^2)')
    def dual_energy(vals):
        return (2 * sum(vals) - sum(_c(_c(v, M) ** 2, M) for v in vals)) % M

    energy_x = sum(v * v for v in y) % M
    energy_X = sum(v * v for v in Y) % M
    record("energy: dual original, plain image", [dual_energy(y.values)], [energy_X])
    record("energy: plain original, dual image", [energy_x], [dual_energy(Y.values)])
    record("energy: dual both sides", [dual_energy(y.values)], [dual_energy(Y.values)])
    balance_lhs = 2 * (sum(y) - sum(Y)) % M
    balance_rhs = (sum(_c(_c(v, M) ** 2, M) for v in y) - sum(_c(_c(v, M) ** 2, M) for v in Y)) % M
    record("energy: complement-square balance", [balance_lhs], [balance_rhs])
    return report
