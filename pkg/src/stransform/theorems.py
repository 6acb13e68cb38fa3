"""Shift, convolution, correlation and energy theorems as executable operations.

Each theorem function returns the quantity of interest and, when ``check`` is
true, also evaluates the other side of the identity and raises
:class:`TheoremViolation` on disagreement. Pass ``check=False`` for the
single-sided fast path.
"""

from __future__ import annotations

from .bigring import RingElement
from .errors import InvalidParameter, TheoremViolation
from .plan import TransformPlan, smallest_plan
from .transform import Sequence, as_sequence, forward, inverse


def _seq(plan: TransformPlan, values) -> Sequence:
    return Sequence(tuple(values), plan.modulus)


def pointwise_mul(plan: TransformPlan, x, y) -> Sequence:
    x, y = as_sequence(plan, x), as_sequence(plan, y)
    return _seq(plan, (a * b % plan.M for a, b in zip(x, y)))


def rotate(seq: Sequence, c: int) -> Sequence:
    """Cyclic shift to the right: ``out[k] = seq[(k - c) mod N]``."""
    N = len(seq)
    return Sequence(tuple(seq[(k - c) % N] for k in range(N)), seq.modulus)


def cyclic_convolution_direct(plan: TransformPlan, x, y) -> Sequence:
    """``sum_i x(i) * y((n - i) mod N)`` evaluated term by term."""
    x, y = as_sequence(plan, x), as_sequence(plan, y)
    N, M = plan.N, plan.M
    return _seq(plan, (sum(x[i] * y[(n - i) % N] for i in range(N)) % M for n in range(N)))


def _require(ok: bool, what: str, lhs, rhs):
    if not ok:
        raise TheoremViolation(f"{what}: {list(lhs)} != {list(rhs)}")


def shift_image(plan: TransformPlan, original, c: int, *, check: bool = True) -> Sequence:
    """Weight the original by ``s**(c*i)``; its image is the original image rotated by ``c``.

    Negative ``c`` gives the opposite direction.
    """
    x = as_sequence(plan, original)
    N, M, pw = plan.N, plan.M, plan.powers
    weighted = _seq(plan, (x[i] * pw[(c * i) % N] % M for i in range(N)))
    if check:
        lhs = forward(plan, weighted)
        rhs = rotate(forward(plan, x), c)
        _require(lhs == rhs, f"shift theorem (c={c})", lhs, rhs)
    return weighted


def shift_original(plan: TransformPlan, image, c: int, *, check: bool = True) -> Sequence:
    """Weight the image by ``s**(c*k)``; its original becomes ``x((i + c) mod N)``."""
    X = as_sequence(plan, image)
    N, M, pw = plan.N, plan.M, plan.powers
    weighted = _seq(plan, (X[k] * pw[(c * k) % N] % M for k in range(N)))
    if check:
        lhs = inverse(plan, weighted)
        rhs = rotate(inverse(plan, X), -c)
        _require(lhs == rhs, f"image weighting theorem (c={c})", lhs, rhs)
    return weighted


def cyclic_convolve(plan: TransformPlan, x, y) -> Sequence:
    """Cyclic convolution of two originals via the product of their images."""
    X, Y = forward(plan, x), forward(plan, y)
    return inverse(plan, pointwise_mul(plan, X, Y))


def image_convolution_of_product(plan: TransformPlan, x, y, *, check: bool = True) -> Sequence:
    """Image of the pointwise product; equals ``(1/N) * (X conv Y)``."""
    xy = pointwise_mul(plan, x, y)
    image = forward(plan, xy)
    if check:
        X, Y = forward(plan, x), forward(plan, y)
        conv = cyclic_convolution_direct(plan, X, Y)
        rhs = _seq(plan, (v * plan.inv_n.residue % plan.M for v in conv))
        _require(image == rhs, "image convolution theorem", image, rhs)
    return image


def autocorrelation(plan: TransformPlan, y, *, check: bool = True) -> Sequence:
    """``sum_i y(i) y((n - i) mod N)``; checked against ``(1/N) sum_k Y(k)^2 s^(kn)``."""
    y = as_sequence(plan, y)
    result = cyclic_convolution_direct(plan, y, y)
    if check:
        Y = forward(plan, y)
        rhs = inverse(plan, _seq(plan, (v * v % plan.M for v in Y)))
        _require(result == rhs, "Wiener-Khinchin identity", result, rhs)
    return result


def image_autocorrelation(plan: TransformPlan, image, *, check: bool = True) -> Sequence:
    """``sum_k Y(k) Y((n - k) mod N)`` for an image Y.

    The check compares against ``N * forward(y**2)``, which is what the
    image-convolution theorem gives for ``x = y``. The variant with a
    ``1/N`` factor is exposed by :func:`image_autocorrelation_printed_sides`.
    """
    Y = as_sequence(plan, image)
    result = cyclic_convolution_direct(plan, Y, Y)
    if check:
        y = inverse(plan, Y)
        energy = forward(plan, pointwise_mul(plan, y, y))
        rhs = _seq(plan, (plan.N * v % plan.M for v in energy))
        _require(result == rhs, "converse Wiener-Khinchin identity", result, rhs)
    return result


def image_autocorrelation_printed_sides(plan: TransformPlan, y) -> tuple[Sequence, Sequence]:
    """Both sides of ``sum_k Y(k)Y(n-k) = (1/N) sum_i y(i)^2 s^(-ni)``.

    This form only agrees when ``N**2 == 1 (mod M)``; callers compare.
    """
    y = as_sequence(plan, y)
    Y = forward(plan, y)
    lhs = cyclic_convolution_direct(plan, Y, Y)
    energy = forward(plan, pointwise_mul(plan, y, y))
    rhs = _seq(plan, (plan.inv_n.residue * v % plan.M for v in energy))
    return lhs, rhs


def parseval_check(plan: TransformPlan, y) -> tuple[RingElement, RingElement]:
    """``(sum_i y(i)^2, sum_k Y(k)^2)`` reduced mod M. The caller compares."""
    y = as_sequence(plan, y)
    Y = forward(plan, y)
    lhs = sum(v * v for v in y) % plan.M
    rhs = sum(v * v for v in Y) % plan.M
    return plan.element(lhs), plan.element(rhs)


def parseval_reflected(plan: TransformPlan, y) -> tuple[RingElement, RingElement]:
    """``(N * sum_i y(i) y(-i mod N), sum_k Y(k)^2)``; these always agree."""
    y = as_sequence(plan, y)
    Y = forward(plan, y)
    N = plan.N
    lhs = N * sum(y[i] * y[(-i) % N] for i in range(N)) % plan.M
    rhs = sum(v * v for v in Y) % plan.M
    return plan.element(lhs), plan.element(rhs)


def exactness_bound(a: list[int], b: list[int]) -> int:
    """Upper bound on every coefficient of the linear convolution of a and b."""
    return min(sum(a) * max(b), sum(b) * max(a))


def convolve_exact_integers(a, b, plan: TransformPlan | None = None) -> list[int]:
    """Exact linear convolution (polynomial product) of nonnegative integer lists.

    Picks the smallest-modulus plan with room for the full result and a
    modulus above :func:`exactness_bound`, so no coefficient wraps around.
    """
    a, b = list(a), list(b)
    if not a or not b:
        raise InvalidParameter("inputs must be non-empty")
    for v in a + b:
        if not isinstance(v, int) or v < 0:
            raise InvalidParameter(f"inputs must be nonnegative integers, got {v!r}")
    length = len(a) + len(b) - 1
    need_M = max(exactness_bound(a, b), max(a), max(b)) + 1
    if plan is None:
        plan = smallest_plan(max(length, 2), max(need_M, 2))
    elif plan.N < length or plan.M < need_M:
        raise InvalidParameter(
            f"plan N={plan.N}, M={plan.M} too small for length {length} and bound {need_M - 1}"
        )
    pad_a = a + [0] * (plan.N - len(a))
    pad_b = b + [0] * (plan.N - len(b))
    return list(cyclic_convolve(plan, pad_a, pad_b).values[:length])
