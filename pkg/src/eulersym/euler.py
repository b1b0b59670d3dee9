"""Euler polynomials E_n(x) and Euler numbers, exactly.

Convention: E_n(x) are the coefficients of the exponential generating
function 2 e^{xt} / (e^t + 1) = sum_n E_n(x) t^n / n!, and the Euler number
E_n here means E_n(0) (the constant coefficient), not the classical secant
numbers E_n(1/2) 2^n.

The production path is the triangular recurrence obtained by multiplying
both sides by (e^t + 1) and comparing coefficients:

    E_n(x) = x^n - (1/2) * sum_{k=0}^{n-1} C(n, k) E_k(x).

This needs O(n^2) exact operations for the whole table up to n and no
truncation parameter; the series-division route lives in ``egf_series``
and is used only as an independent test oracle.

The coefficient table is module-level state: built incrementally on first
use, then read-only. Construction is single-threaded; concurrent readers
need no locking afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact_arith import RationalLike

__all__ = [
    "EulerPolynomial",
    "euler_polynomials_up_to",
    "euler_polynomial",
    "euler_eval",
    "euler_number",
    "euler_values",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class EulerPolynomial:
    """Dense coefficient vector of E_n(x); coeffs[j] is the coefficient of x^j."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector length must be degree + 1")

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate at x by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


# Coefficient vectors E_0, E_1, ... ; grown on demand, never mutated after.
_COEFFS: list[tuple[Fraction, ...]] = [(Fraction(1),)]

# Per-argument value vectors E_0(x), E_1(x), ...; grown on demand.
_VALUES: dict[Fraction, list[Fraction]] = {}


def _ensure_table(n: int) -> None:
    while len(_COEFFS) <= n:
        m = len(_COEFFS)
        vec = [Fraction(0)] * (m + 1)
        vec[m] = Fraction(1)
        for k in range(m):
            scale = comb(m, k) * _HALF
            row = _COEFFS[k]
            for j in range(k + 1):
                vec[j] -= scale * row[j]
        _COEFFS.append(tuple(vec))


def euler_polynomial(n: int) -> EulerPolynomial:
    """E_n(x) as an exact coefficient vector."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _ensure_table(n)
    return EulerPolynomial(n, _COEFFS[n])


def euler_polynomials_up_to(n_max: int) -> list[EulerPolynomial]:
    """E_0(x) .. E_{n_max}(x), from the shared recurrence table."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    _ensure_table(n_max)
    return [EulerPolynomial(n, _COEFFS[n]) for n in range(n_max + 1)]


def euler_eval(n: int, x: RationalLike) -> Fraction:
    """Exact value E_n(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _ensure_table(n)
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(_COEFFS[n]):
        acc = acc * x + c
    return acc


def euler_number(n: int) -> Fraction:
    """Euler number E_n = E_n(0), i.e. the constant coefficient of E_n(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _ensure_table(n)
    return _COEFFS[n][0]


def euler_values(x: RationalLike, n_max: int) -> tuple[Fraction, ...]:
    """The vector (E_0(x), ..., E_{n_max}(x)), cached per argument.

    Identity evaluators hit the same arguments thousands of times across a
    sweep; the per-argument cache turns those into index lookups.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    x = Fraction(x)
    vals = _VALUES.setdefault(x, [])
    while len(vals) <= n_max:
        vals.append(euler_eval(len(vals), x))
    return tuple(vals[: n_max + 1])
