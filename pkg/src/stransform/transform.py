"""Forward and inverse S-transforms plus the weight-function surface.

All sums are the direct O(N^2) evaluation. Inverse weights use the exponent
complement ``s**((N - e) mod N)`` instead of per-element inversion; this is
valid because every plan guarantees ``s**N == 1 (mod M)``.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence as _Seq

from .bigring import RingElement, RingModulus, ring_inv
from .errors import InvalidParameter, LengthMismatch, ModulusMismatch, TheoremViolation, WrongRegime
from .plan import RegimeKind, TransformPlan


@dataclass(frozen=True)
class Sequence:
    """A length-N vector of canonical residues (an original or an image)."""

    values: tuple[int, ...]
    modulus: RingModulus

    def __post_init__(self):
        M = self.modulus.value
        for v in self.values:
            if not isinstance(v, int) or not 0 <= v < M:
                raise InvalidParameter(f"value {v!r} is outside [0, {M - 1}]")

    @classmethod
    def of(cls, values: Iterable[int], M: int | RingModulus) -> Sequence:
        m = M if isinstance(M, RingModulus) else RingModulus(M)
        return cls(tuple(values), m)

    @property
    def elements(self) -> tuple[RingElement, ...]:
        return tuple(RingElement(v, self.modulus) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Sequence):
            return self.values == other.values and self.modulus == other.modulus
        if isinstance(other, (list, tuple)):
            return list(self.values) == list(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.values, self.modulus))


def as_sequence(plan: TransformPlan, data: Sequence | Iterable[int]) -> Sequence:
    """Validate length and range of ``data`` against ``plan``.

    Integers outside ``[0, M-1]`` are rejected rather than reduced, since an
    exact convolution result depends on the caller knowing the data fits.
    """
    if isinstance(data, Sequence):
        if data.modulus.value != plan.M:
            raise ModulusMismatch(f"sequence lives mod {data.modulus.value}, plan mod {plan.M}")
        seq = data
    else:
        seq = Sequence(tuple(data), plan.modulus)
    if len(seq) != plan.N:
        raise LengthMismatch(f"expected {plan.N} values, got {len(seq)}")
    return seq


def weight_exponent(plan: TransformPlan, i: int, k: int, sign: str = "+") -> int:
    e = (i * k) % plan.N
    if sign == "-":
        return (plan.N - e) % plan.N
    if sign != "+":
        raise InvalidParameter(f"sign must be '+' or '-', got {sign!r}")
    return e


def weight(plan: TransformPlan, i: int, k: int, sign: str = "+") -> RingElement:
    """``s**(+-(i*k) mod N) mod M``; indices are taken mod N."""
    return RingElement(plan.powers[weight_exponent(plan, i, k, sign)], plan.modulus)


def _map(fn, indices, threads: int):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, indices))
    return [fn(j) for j in indices]


def forward(plan: TransformPlan, original, *, threads: int = 1) -> Sequence:
    x = as_sequence(plan, original).values
    N, M, pw = plan.N, plan.M, plan.powers

    def image_at(k: int) -> int:
        acc = 0
        for i in range(N):
            acc = (acc + x[i] * pw[(N - (k * i) % N) % N]) % M
        return acc

    return Sequence(tuple(_map(image_at, range(N), threads)), plan.modulus)


def inverse(plan: TransformPlan, image, *, threads: int = 1) -> Sequence:
    X = as_sequence(plan, image).values
    N, M, pw = plan.N, plan.M, plan.powers
    inv_n = plan.inv_n.residue

    def original_at(i: int) -> int:
        acc = 0
        for k in range(N):
            acc = (acc + X[k] * pw[(k * i) % N]) % M
        return acc * inv_n % M

    return Sequence(tuple(_map(original_at, range(N), threads)), plan.modulus)


# --- matrices ---------------------------------------------------------------

@dataclass(frozen=True)
class WeightMatrix:
    entries: tuple[tuple[int, ...], ...]
    modulus: RingModulus
    direction: str  # "forward" | "inverse"

    def __matmul__(self, other: WeightMatrix) -> tuple[tuple[int, ...], ...]:
        return mat_mul(self.entries, other.entries, self.modulus.value)

    def is_symmetric(self) -> bool:
        n = len(self.entries)
        return all(self.entries[i][k] == self.entries[k][i] for i in range(n) for k in range(n))


def mat_mul(A: _Seq[_Seq[int]], B: _Seq[_Seq[int]], M: int) -> tuple[tuple[int, ...], ...]:
    inner = len(B)
    cols = len(B[0])
    return tuple(
        tuple(sum(row[t] * B[t][c] for t in range(inner)) % M for c in range(cols))
        for row in A
    )


def matrices(plan: TransformPlan) -> tuple[WeightMatrix, WeightMatrix]:
    """Forward matrix (entry k,i = s^-(ki)) and inverse matrix (entry i,k = s^(ki))."""
    N, pw = plan.N, plan.powers
    fwd = tuple(tuple(pw[(N - (k * i) % N) % N] for i in range(N)) for k in range(N))
    inv = tuple(tuple(pw[(k * i) % N] for k in range(N)) for i in range(N))
    return WeightMatrix(fwd, plan.modulus, "forward"), WeightMatrix(inv, plan.modulus, "inverse")


def negative_index_view(plan: TransformPlan, i: int) -> RingElement:
    """Return ``s**i`` computed as the inverse of ``s**(N-i)``.

    Raises TheoremViolation if the two disagree.
    """
    if not 0 <= i < plan.N:
        raise InvalidParameter(f"index {i} outside [0, {plan.N - 1}]")
    complement = RingElement(plan.powers[(plan.N - i) % plan.N], plan.modulus)
    via_inverse = ring_inv(complement)
    if via_inverse.residue != plan.powers[i]:
        raise TheoremViolation(f"inv(s^{plan.N - i}) = {via_inverse.residue} != s^{i} = {plan.powers[i]}")
    return via_inverse


def sawtooth_permutation(plan: TransformPlan) -> tuple[int, ...]:
    """Column order that turns row 1 of the forward matrix into ``1, 2, ..., N``.

    Only pseudo-Fermat plans (``M = N + 1``) have weights that are exactly the
    integers ``1..N``. ``perm[j]`` is the original column placed at position j.
    """
    if plan.regime.kind is not RegimeKind.PSEUDO_FERMAT:
        raise WrongRegime("sawtooth ordering needs a pseudo-Fermat plan")
    fwd, _ = matrices(plan)
    position = {value: col for col, value in enumerate(fwd.entries[1])}
    return tuple(position[v] for v in range(1, plan.N + 1))


def permute_columns(m: WeightMatrix, perm: _Seq[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row[c] for c in perm) for row in m.entries)


def dump_weights(plan: TransformPlan, i_values: Iterable[int], periods: int = 1) -> list[tuple[int, int, int]]:
    """Rows ``(i, k, S(i*k))`` for ``k`` over ``periods`` full periods."""
    return [
        (i, k, weight(plan, i, k).residue)
        for i in i_values
        for k in range(plan.N * periods)
    ]


def weights_csv(rows: Iterable[tuple[int, int, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "k", "weight"])
    w.writerows(rows)
    return buf.getvalue()
