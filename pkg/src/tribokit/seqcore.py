"""Exact evaluation of the Tribonacci-family sequences.

Three integer sequences share the cubic x^3 - x^2 - x - 1:

* ``T`` -- Tribonacci numbers, seeds 0, 1, 1, each term the sum of the
  previous three.
* ``S`` -- the generalized Lucas companion, seeds 3, 1, 3, same
  recurrence.  S(n) is the power sum of the three roots of the cubic.
* ``C`` -- the minor-sum sequence, seeds 3, -1, -1, with recurrence
  C(n) = -C(n-1) - C(n-2) + C(n-3).  C(n) is the power sum of the
  pairwise root products.

All three extend to negative indices by running the recurrences in
reverse; because both trailing recurrence coefficients are +1 or -1 the
extension stays integral.  Every function is pure and exact (arbitrary
precision Python integers), with no caching shared between calls.
"""
from __future__ import annotations

from enum import Enum, unique


@unique
class SequenceKind(Enum):
    """Selector for the three sequences; values are the CLI letters."""

    TRIBONACCI = "T"
    GENERALIZED_LUCAS = "S"
    MINOR_SUM = "C"

    @classmethod
    def from_string(cls, text: str) -> "SequenceKind":
        """Accept the single letters T/S/C or spelled-out names."""
        key = text.strip().upper().replace("-", "_")
        aliases = {
            "T": cls.TRIBONACCI,
            "TRIBONACCI": cls.TRIBONACCI,
            "S": cls.GENERALIZED_LUCAS,
            "LUCAS": cls.GENERALIZED_LUCAS,
            "GENERALIZED_LUCAS": cls.GENERALIZED_LUCAS,
            "C": cls.MINOR_SUM,
            "MINOR_SUM": cls.MINOR_SUM,
            "MINORSUM": cls.MINOR_SUM,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown sequence kind: {text!r} (expected T, S or C)") from None


@unique
class SForm(Enum):
    """The two linear combinations of T values that produce S(n)."""

    MINOR = "minor"  # S(n) = T(n) + 2*T(n-1) + 3*T(n-2)
    OGF = "ogf"      # S(n) = 3*T(n+1) - 2*T(n) - T(n-1)


@unique
class CForm(Enum):
    """The two quadratic combinations of T values that produce C(n)."""

    MINOR_EXPANSION = "minor-expansion"
    SQUARE = "square"


# (c1, c2, c3) with a(n) = c1*a(n-1) + c2*a(n-2) + c3*a(n-3), and the
# seed triple (a(0), a(1), a(2)).  |c3| = 1 keeps the reverse direction
# integral.
_RECURRENCES: dict[SequenceKind, tuple[tuple[int, int, int], tuple[int, int, int]]] = {
    SequenceKind.TRIBONACCI: ((1, 1, 1), (0, 1, 1)),
    SequenceKind.GENERALIZED_LUCAS: ((1, 1, 1), (3, 1, 3)),
    SequenceKind.MINOR_SUM: ((-1, -1, 1), (3, -1, -1)),
}

# C(2k) satisfies an order-3 recurrence of its own in the half index k.
_EVEN_COEFFS = (-1, -3, 1)
_EVEN_SEEDS = (3, -1, -5)


def _single_term(coeffs: tuple[int, int, int], seeds: tuple[int, int, int], n: int) -> int:
    """Walk the recurrence from the seed window to index n, either direction."""
    c1, c2, c3 = coeffs
    a, b, c = seeds
    if n >= 0:
        if n == 0:
            return a
        if n == 1:
            return b
        for _ in range(n - 2):
            a, b, c = b, c, c1 * c + c2 * b + c3 * a
        return c
    # reversed: a(k-1) = (a(k+2) - c1*a(k+1) - c2*a(k)) / c3, and 1/c3 == c3
    for _ in range(-n):
        a, b, c = c3 * (c - c1 * b - c2 * a), a, b
    return a


def _terms_between(
    coeffs: tuple[int, int, int], seeds: tuple[int, int, int], lo: int, hi: int
) -> list[int]:
    """Ascending list of terms for lo..hi inclusive, one linear pass per side."""
    c1, c2, c3 = coeffs
    values: list[int] = []
    if lo < 0:
        a, b, c = seeds
        below: list[int] = []  # below[k] holds the term at index -(k+1)
        for _ in range(-lo):
            a, b, c = c3 * (c - c1 * b - c2 * a), a, b
            below.append(a)
        stop = min(hi, -1)
        values.extend(below[j] for j in range(-lo - 1, -stop - 2, -1))
    if hi >= 0:
        window = list(seeds)
        while len(window) <= hi:
            window.append(c1 * window[-1] + c2 * window[-2] + c3 * window[-3])
        values.extend(window[max(lo, 0) : hi + 1])
    return values


def tribonacci(n: int) -> int:
    """T(n) for any integer n (T(0)=0, T(1)=1, T(2)=1)."""
    coeffs, seeds = _RECURRENCES[SequenceKind.TRIBONACCI]
    return _single_term(coeffs, seeds, n)


def s_lucas(n: int) -> int:
    """S(n) for any integer n (S(0)=3, S(1)=1, S(2)=3)."""
    coeffs, seeds = _RECURRENCES[SequenceKind.GENERALIZED_LUCAS]
    return _single_term(coeffs, seeds, n)


def c_seq(n: int) -> int:
    """C(n) for any integer n (C(0)=3, C(1)=-1, C(2)=-1)."""
    coeffs, seeds = _RECURRENCES[SequenceKind.MINOR_SUM]
    return _single_term(coeffs, seeds, n)


def c_even(k: int) -> int:
    """C(2k) through the dedicated even-index recurrence.

    C(2k) = -C(2k-2) - 3*C(2k-4) + C(2k-6) with seeds C(0)=3, C(2)=-1,
    C(4)=-5, indexed by the half index k >= 0.
    """
    if k < 0:
        raise ValueError(f"half index must be >= 0, got {k}")
    return _single_term(_EVEN_COEFFS, _EVEN_SEEDS, k)


def term(kind: SequenceKind, n: int) -> int:
    """Single term of the selected sequence at any integer index."""
    coeffs, seeds = _RECURRENCES[kind]
    return _single_term(coeffs, seeds, n)


def sequence_range(kind: SequenceKind, lo: int, hi: int) -> list[tuple[int, int]]:
    """(n, value) pairs for lo..hi inclusive, computed in one linear pass."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} exceeds hi={hi}")
    coeffs, seeds = _RECURRENCES[kind]
    return list(zip(range(lo, hi + 1), _terms_between(coeffs, seeds, lo, hi)))


def s_from_t(n: int, form: SForm) -> int:
    """S(n) as a linear combination of Tribonacci numbers."""
    if form is SForm.MINOR:
        return tribonacci(n) + 2 * tribonacci(n - 1) + 3 * tribonacci(n - 2)
    if form is SForm.OGF:
        return 3 * tribonacci(n + 1) - 2 * tribonacci(n) - tribonacci(n - 1)
    raise ValueError(f"unknown S form: {form!r}")


def c_from_t(n: int, form: CForm) -> int:
    """C(n) as a quadratic combination of Tribonacci numbers."""
    t = tribonacci
    if form is CForm.MINOR_EXPANSION:
        return (
            2 * t(n + 1) * t(n - 2)
            + t(n + 1) * t(n - 1)
            - t(n) ** 2
            - 2 * t(n) * t(n - 1)
            - t(n - 1) * t(n - 3)
            + t(n - 2) ** 2
        )
    if form is CForm.SQUARE:
        return (
            -t(n) ** 2
            + 2 * t(n - 1) ** 2
            + 3 * t(n - 2) ** 2
            - 2 * t(n) * t(n - 1)
            + 2 * t(n) * t(n - 2)
            + 4 * t(n - 1) * t(n - 2)
        )
    raise ValueError(f"unknown C form: {form!r}")
