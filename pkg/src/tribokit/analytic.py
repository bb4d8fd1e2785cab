"""High-precision root finding and Binet-style evaluation.

The cubic x^3 - x^2 - x - 1 has one real root alpha in (1.83, 1.84) and
a conjugate pair beta, gamma with |beta| = 1/sqrt(alpha) < 1.  Then

    S(n) = alpha^n + beta^n + gamma^n
    C(n) = (alpha*beta)^n + (alpha*gamma)^n + (beta*gamma)^n

hold for every integer n.  alpha is located by bracketing-plus-Newton
on [1, 2]; beta and gamma come from the deflated quadratic whose root
sum is 1 - alpha and whose root product is 1/alpha, so the Vieta
identities hold by construction up to rounding.

Precision is a decimal digit count (>= 15).  All arithmetic runs under
an mpmath working precision with guard digits; because the working
precision is a process-global context, callers that mix precisions
across threads should serialize calls.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

import mpmath

from .seqcore import SequenceKind

_GUARD_DIGITS = 10
_NEWTON_MAX_ITER = 200
# Safety factor absorbing ulp constants of the power evaluations and the
# final Newton residual; deliberately generous, the certified window is
# still far below the 0.5 rounding threshold.
_BOUND_SAFETY = 100


class PrecisionError(ArithmeticError):
    """A numeric result could not be certified at the requested precision."""


@dataclass(frozen=True)
class RootSet:
    """The three roots of x^3 - x^2 - x - 1 at a given decimal precision."""

    alpha: Any  # mpmath.mpf
    beta: Any   # mpmath.mpc, positive imaginary part
    gamma: Any  # mpmath.mpc, conjugate of beta
    precision: int


@dataclass(frozen=True)
class VietaResiduals:
    """|e1 - 1|, |e2 + 1|, |e3 - 1| for the elementary symmetric sums."""

    sum_res: float
    pair_res: float
    prod_res: float


def _poly(x: Any) -> Any:
    return ((x - 1) * x - 1) * x - 1


def _poly_deriv(x: Any) -> Any:
    return (3 * x - 2) * x - 1


def char_roots(precision: int) -> RootSet:
    """Compute all three roots to ``precision`` decimal digits (>= 15)."""
    if precision < 15:
        raise ValueError(f"precision must be >= 15 decimal digits, got {precision}")
    with mpmath.workdps(precision + _GUARD_DIGITS):
        lo, hi = mpmath.mpf(1), mpmath.mpf(2)
        x = mpmath.mpf("1.8")
        tol = mpmath.mpf(10) ** (-(precision + _GUARD_DIGITS - 2))
        for _ in range(_NEWTON_MAX_ITER):
            fx = _poly(x)
            if fx > 0:
                hi = x
            elif fx < 0:
                lo = x
            else:
                break
            nxt = x - fx / _poly_deriv(x)
            if not lo < nxt < hi:
                nxt = (lo + hi) / 2
            done = abs(nxt - x) <= tol
            x = nxt
            if done:
                break
        else:
            raise RuntimeError(
                f"Newton iteration did not converge within {_NEWTON_MAX_ITER} steps"
            )
        alpha = x
        real = (1 - alpha) / 2
        imag = mpmath.sqrt(4 / alpha - (1 - alpha) ** 2) / 2
        beta = mpmath.mpc(real, imag)
        gamma = mpmath.mpc(real, -imag)
    return RootSet(alpha=alpha, beta=beta, gamma=gamma, precision=precision)


def vieta_check(roots: RootSet) -> VietaResiduals:
    """Residuals of the three Vieta identities (sum 1, pairs -1, product 1)."""
    with mpmath.workdps(roots.precision + _GUARD_DIGITS):
        a, b, g = roots.alpha, roots.beta, roots.gamma
        return VietaResiduals(
            sum_res=float(abs(a + b + g - 1)),
            pair_res=float(abs(a * b + a * g + b * g + 1)),
            prod_res=float(abs(a * b * g - 1)),
        )


def binet_index_cap(precision: int) -> int:
    """Largest |n| certified for rounding at the given decimal precision."""
    return 2 * precision


def _power_terms_s(n: int, roots: RootSet) -> tuple[Any, Any, Any]:
    return roots.alpha ** n, roots.beta ** n, roots.gamma ** n


def _power_terms_c(n: int, roots: RootSet) -> tuple[Any, Any, Any]:
    a, b, g = roots.alpha, roots.beta, roots.gamma
    return (a * b) ** n, (a * g) ** n, (b * g) ** n


def _binet_value(n: int, roots: RootSet, terms: Callable[[int, RootSet], tuple]) -> Any:
    cap = binet_index_cap(roots.precision)
    if abs(n) > cap:
        raise PrecisionError(
            f"|n| = {abs(n)} exceeds the certified index cap {cap} "
            f"at precision {roots.precision}"
        )
    with mpmath.workdps(roots.precision + _GUARD_DIGITS):
        total = mpmath.mpc(0)
        for t in terms(n, roots):
            total += t
        real, imag = total.real, abs(total.imag)
        if imag > mpmath.mpf("1e-6") * max(1, abs(real)):
            raise PrecisionError(
                f"imaginary residue {imag} at n={n}: precision exhausted"
            )
        return real


def binet_s(n: int, roots: RootSet) -> Any:
    """Real part of alpha^n + beta^n + gamma^n (imaginary part must vanish)."""
    return _binet_value(n, roots, _power_terms_s)


def binet_c(n: int, roots: RootSet) -> Any:
    """Real part of the pairwise-product power sum defining C(n)."""
    return _binet_value(n, roots, _power_terms_c)


def binet_error_bound(kind: SequenceKind, n: int, roots: RootSet) -> float:
    """Certified absolute error of the Binet evaluation at index n.

    Scales with the magnitudes of the three power terms, the index, and
    10^(-precision); decays with the conjugate-pair contribution for the
    terms below modulus one.
    """
    terms = _terms_for(kind)
    with mpmath.workdps(roots.precision + _GUARD_DIGITS):
        magnitude = sum(abs(t) for t in terms(n, roots))
        bound = magnitude * (abs(n) + 1) * _BOUND_SAFETY * mpmath.mpf(10) ** (-roots.precision)
        return float(bound)


def binet_round(kind: SequenceKind, n: int, roots: RootSet) -> int:
    """Nearest integer to the Binet value, refused unless certified.

    Raises PrecisionError when |n| exceeds the index cap or the error
    bound reaches 0.5, so a successful return is the exact sequence
    value.
    """
    terms = _terms_for(kind)
    value = _binet_value(n, roots, terms)
    bound = binet_error_bound(kind, n, roots)
    if bound >= 0.5:
        raise PrecisionError(
            f"error bound {bound} >= 0.5 at n={n}, precision {roots.precision}: "
            "refusing to round"
        )
    with mpmath.workdps(roots.precision + _GUARD_DIGITS):
        return int(mpmath.nint(value))


def _terms_for(kind: SequenceKind) -> Callable[[int, RootSet], tuple]:
    if kind is SequenceKind.GENERALIZED_LUCAS:
        return _power_terms_s
    if kind is SequenceKind.MINOR_SUM:
        return _power_terms_c
    raise ValueError(f"no Binet evaluator for {kind}; use S or C")
