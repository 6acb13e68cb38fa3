"""Transform planning: choose the modulus for a regime and validate the triple.

A :class:`TransformPlan` is only ever produced after three checks pass:
the order of ``s`` modulo ``M`` is exactly ``N``, the orthogonality sums
vanish for every nonzero offset, and ``N`` is invertible modulo ``M``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .bigring import (
    RingElement,
    RingModulus,
    geometric_sum,
    inverse_mod,
    power_mod,
)
from .errors import (
    ExistenceConditionFailed,
    InvalidParameter,
    NoPlanFound,
    NotInvertible,
    OrderMismatch,
)
from .numbers import factorize, is_power_of_two, is_prime, prime_power


class RegimeKind(enum.Enum):
    PRIME = "prime"
    PRIME_POWER = "prime-power"
    TWO_P = "two-p"
    PSEUDO_FERMAT = "pseudo-fermat"
    MERSENNE = "mersenne"
    FERMAT = "fermat"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    p: int | None = None
    n: int | None = None

    @classmethod
    def prime(cls) -> Regime:
        return cls(RegimeKind.PRIME)

    @classmethod
    def prime_power(cls, p: int, n: int) -> Regime:
        return cls(RegimeKind.PRIME_POWER, p, n)

    @classmethod
    def two_p(cls, p: int) -> Regime:
        return cls(RegimeKind.TWO_P, p)

    @classmethod
    def pseudo_fermat(cls) -> Regime:
        return cls(RegimeKind.PSEUDO_FERMAT)

    @classmethod
    def mersenne(cls) -> Regime:
        return cls(RegimeKind.MERSENNE)

    @classmethod
    def fermat(cls, p: int) -> Regime:
        return cls(RegimeKind.FERMAT, p)

    @classmethod
    def from_name(cls, name: str, N: int, p: int | None = None, n: int | None = None) -> Regime:
        """Build a regime from its CLI/JSON name, deriving parameters from N when omitted."""
        try:
            kind = RegimeKind(name)
        except ValueError:
            raise InvalidParameter(f"unknown regime {name!r}") from None
        if kind is RegimeKind.PRIME_POWER:
            if p is None or n is None:
                pk = prime_power(N)
                if pk is None:
                    raise InvalidParameter(f"N={N} is not a prime power")
                p, n = pk
            return cls.prime_power(p, n)
        if kind in (RegimeKind.TWO_P, RegimeKind.FERMAT):
            if p is None:
                if N % 2:
                    raise InvalidParameter(f"N={N} is odd")
                p = N // 2
            return cls(kind, p)
        return cls(kind)

    @property
    def name(self) -> str:
        return self.kind.value

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in (("p", self.p), ("n", self.n)) if v is not None)
        return f"{self.name}({args})" if args else self.name


@dataclass(frozen=True)
class TransformPlan:
    s: int
    N: int
    modulus: RingModulus
    regime: Regime
    inv_n: RingElement

    @property
    def M(self) -> int:
        return self.modulus.value

    @cached_property
    def powers(self) -> tuple[int, ...]:
        """``s**e mod M`` for ``e`` in ``0 .. N-1``; every weight is one of these."""
        out = [1 % self.M]
        for _ in range(self.N - 1):
            out.append(out[-1] * self.s % self.M)
        return tuple(out)

    def element(self, value: int) -> RingElement:
        return self.modulus.element(value)

    def __str__(self) -> str:
        return f"S-plan(s={self.s}, N={self.N}, M={self.M}, {self.regime})"


def _regime_modulus(s: int, N: int, regime: Regime) -> tuple[int, int]:
    """Return ``(s_effective, M)`` for a regime, checking its shape constraints."""
    kind = regime.kind
    if kind in (RegimeKind.PRIME, RegimeKind.MERSENNE):
        if kind is RegimeKind.MERSENNE and s != 2:
            raise InvalidParameter("the Mersenne regime fixes s = 2")
        return s, geometric_sum(s, N)

    if kind is RegimeKind.PRIME_POWER:
        p, n = regime.p, regime.n
        if p is None or n is None or not is_prime(p) or n < 2 or p**n != N:
            raise InvalidParameter(f"prime-power regime needs N = p^n, p prime, n >= 2 (got N={N}, p={p}, n={n})")
        M = geometric_sum(s ** (p ** (n - 1)), p)
        if M <= N:
            raise InvalidParameter(f"prime-power modulus {M} does not exceed N={N}")
        return s, M

    if kind in (RegimeKind.TWO_P, RegimeKind.FERMAT):
        p = regime.p
        if p is None or p < 1 or N != 2 * p:
            raise InvalidParameter(f"N must equal 2p (got N={N}, p={p})")
        if kind is RegimeKind.FERMAT and (s != 2 or not is_power_of_two(p)):
            raise InvalidParameter("the Fermat regime needs s = 2 and p a power of two")
        return s, s**p + 1

    if kind is RegimeKind.PSEUDO_FERMAT:
        if N % 2 or not is_prime(N + 1):
            raise InvalidParameter(f"pseudo-Fermat regime needs N even and N+1 prime (N={N})")
        s_eff = s % (N + 1)
        if s_eff == 0:
            raise OrderMismatch(f"s={s} is divisible by M={N + 1}")
        return s_eff, N + 1

    raise InvalidParameter(f"unhandled regime {regime}")


def has_order(s: int, N: int, M: int) -> bool:
    if power_mod(s, N, M) != 1 % M:
        return False
    return all(power_mod(s, N // q, M) != 1 for q in factorize(N))


def existence_sum(powers: tuple[int, ...] | list[int], d: int) -> int:
    """Unreduced ``sum_k s**((d*k) mod N)`` over the period."""
    N = len(powers)
    return sum(powers[(d * k) % N] for k in range(N))


def first_existence_failure(powers, M: int) -> tuple[int, int] | None:
    N = len(powers)
    for d in range(N):
        value = existence_sum(powers, d) % M
        expected = N % M if d == 0 else 0
        if value != expected:
            return d, value
    return None


@lru_cache(maxsize=4096)
def _make_plan_cached(s: int, N: int, regime: Regime) -> TransformPlan:
    if N < 2:
        raise InvalidParameter("N must be >= 2")
    if s < 2 and regime.kind is not RegimeKind.PSEUDO_FERMAT:
        raise InvalidParameter("s must be >= 2")
    s, M = _regime_modulus(s, N, regime)
    modulus = RingModulus(M)

    if not has_order(s, N, M):
        raise OrderMismatch(f"order of {s} mod {M} is not {N}")

    powers = [1 % M]
    for _ in range(N - 1):
        powers.append(powers[-1] * s % M)
    failure = first_existence_failure(powers, M)
    if failure is not None:
        raise ExistenceConditionFailed(*failure)

    if regime.kind is RegimeKind.PSEUDO_FERMAT:
        # N = -1 mod N+1, so N is its own inverse.
        inv = N
        assert N * N % M == 1
    else:
        try:
            inv = inverse_mod(N, M)
        except NotInvertible:
            raise NotInvertible(f"N={N} is not invertible mod {M}") from None
    return TransformPlan(s, N, modulus, regime, RingElement(inv, modulus))


def make_plan(s: int, N: int, regime: Regime | str = "prime") -> TransformPlan:
    """Construct and fully validate a transform plan.

    Raises OrderMismatch, ExistenceConditionFailed (carrying the failing
    offset ``d``) or NotInvertible when the triple cannot define a transform.
    """
    if isinstance(regime, str):
        regime = Regime.from_name(regime, N)
    return _make_plan_cached(s, N, regime)


# --- search -----------------------------------------------------------------

SEARCH_N_LIMIT = 256
DEFAULT_S_VALUES = range(2, 33)


def _candidates(min_N: int, max_N: int, s_values: Iterable[int]):
    """Yield ``(M, s, N, regime)`` without validating; M is cheap to compute."""
    s_values = list(s_values)
    seen = set()
    for N in range(min_N, max_N + 1):
        pk = prime_power(N)
        for s in s_values:
            options = []
            if is_prime(N):
                options.append(Regime.prime())
            if pk is not None and pk[1] >= 2:
                options.append(Regime.prime_power(*pk))
            if N % 2 == 0:
                options.append(Regime.two_p(N // 2))
                if is_prime(N + 1) and s % (N + 1):
                    options.append(Regime.pseudo_fermat())
            for regime in options:
                try:
                    s_eff, M = _regime_modulus(s, N, regime)
                except InvalidParameter:
                    continue
                key = (s_eff, N, regime)
                if key in seen:
                    continue
                seen.add(key)
                yield M, s_eff, N, regime


def _window(min_N: int, min_M: int, n_window: int) -> int:
    if min_N < 2 or min_M < 2:
        raise InvalidParameter("min_N and min_M must be >= 2")
    return min(min_N + n_window, SEARCH_N_LIMIT)


def plan_search(
    min_N: int,
    min_M: int,
    preferred_s: int | None = None,
    *,
    n_window: int = 32,
    s_values: Iterable[int] = DEFAULT_S_VALUES,
) -> list[TransformPlan]:
    """All valid plans with ``N >= min_N`` and ``M >= min_M`` in a bounded window.

    The window covers ``N`` in ``[min_N, min(min_N + n_window, 256)]`` and
    bases ``s`` in ``s_values``. Results are sorted by ``M`` ascending; plans
    using ``preferred_s`` are listed first.
    """
    max_N = _window(min_N, min_M, n_window)
    found = []
    for M, s, N, regime in _candidates(min_N, max_N, s_values):
        if M < min_M:
            continue
        try:
            found.append(make_plan(s, N, regime))
        except (InvalidParameter, NotInvertible):
            continue
    if not found:
        raise NoPlanFound(f"no plan with N >= {min_N}, M >= {min_M} in the search window")
    found.sort(key=lambda pl: (pl.s != preferred_s, pl.M, pl.N, pl.s))
    return found


def smallest_plan(min_N: int, min_M: int, *, n_window: int = 32,
                  s_values: Iterable[int] = DEFAULT_S_VALUES) -> TransformPlan:
    """The plan with the smallest modulus that :func:`plan_search` would return."""
    max_N = _window(min_N, min_M, n_window)
    cands = sorted(
        (c for c in _candidates(min_N, max_N, s_values) if c[0] >= min_M),
        key=lambda c: (c[0], c[2], c[1]),
    )
    for M, s, N, regime in cands:
        try:
            return make_plan(s, N, regime)
        except (InvalidParameter, NotInvertible):
            continue
    raise NoPlanFound(f"no plan with N >= {min_N}, M >= {min_M} in the search window")


# --- serialization ----------------------------------------------------------

def plan_to_dict(plan: TransformPlan) -> dict:
    return {
        "s": str(plan.s),
        "n": str(plan.N),
        "m": str(plan.M),
        "regime": plan.regime.name,
        "inv_n": str(plan.inv_n.residue),
    }


def plan_from_dict(data: dict) -> TransformPlan:
    """Rebuild a plan from its JSON form, re-validating it from scratch."""
    try:
        s, N = int(data["s"]), int(data["n"])
        regime = Regime.from_name(data["regime"], N)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameter(f"malformed plan: {exc}") from None
    plan = make_plan(s, N, regime)
    if "m" in data and int(data["m"]) != plan.M:
        raise InvalidParameter(f"plan file says m={data['m']} but the regime gives {plan.M}")
    if "inv_n" in data and int(data["inv_n"]) != plan.inv_n.residue:
        raise InvalidParameter("plan file inv_n does not match N^-1 mod M")
    return plan


def plan_to_json(plan: TransformPlan) -> str:
    return json.dumps(plan_to_dict(plan), indent=2)


def plan_from_json(text: str) -> TransformPlan:
    return plan_from_dict(json.loads(text))
