"""The three concrete LC-functions and their closed forms.

* ``Beta``: ``p(t) = 1``, so ``L(s) = zeta(s)`` and ``F(s) = zeta(s)``.
* ``CosEven``: ``p(t) = cos(w t)``, ``L(s) = (zeta(s,1+iw) + zeta(s,1-iw))/2``.
* ``SinhOdd``: ``p(t) = sinh(w t)``, ``L(s) = (zeta(s,1+w) - zeta(s,1-w))/2``.

Both non-trivial examples need ``0 < |w| < 1`` (so that ``n_f = 1``).  The
closed forms at integers go through ``K_m`` for ``|w| >= 1/2`` and through a
Laurent expansion in even zeta values below that.  At order ``n`` the ``K``
term and the ``w^-n`` term cancel to about ``eps |w|^-n``, while the Laurent
sum loses about ``eps (1-|w|)^-n``; the two balance at ``|w| = 1/2``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import AccuracyError, DomainError
from .eulerian import _sinpi_guard, eulerian_polynomial, k_function
from .lc_fc import LcEvaluator, lc_series, series_region_ok
from .numerics import hurwitz_zeta, zeta_even
from .numerics_types import EvalResult
from .series_core import Parity, SeriesFunction, expm1_complex

NEAR_ZERO = 0.5
_LAURENT_MIN_TERMS = 6
_LAURENT_MAX_TERMS = 400


class ExampleTag(str, Enum):
    BETA = "Beta"
    COS_EVEN = "CosEven"
    SINH_ODD = "SinhOdd"


@dataclass(frozen=True)
class ExampleKind:
    tag: ExampleTag
    w: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "tag", ExampleTag(self.tag))
        object.__setattr__(self, "w", complex(self.w))
        if self.tag is not ExampleTag.BETA and not 0 < abs(self.w) < 1:
            raise DomainError(f"{self.tag.value} needs 0 < |w| < 1, got w={self.w}")


def _scalar_w(w: complex):
    return w.real if w.imag == 0 else w


def _bose_ratio(t: complex) -> complex:
    """``t / (e^t - 1)`` with its value 1 at ``t = 0``."""
    t = complex(t)
    return 1 + 0j if t == 0 else t / expm1_complex(t)


def make_example(kind: ExampleKind) -> SeriesFunction:
    """Seed function with exact P-stream, radius and closed evaluators."""
    if kind.tag is ExampleTag.BETA:
        return SeriesFunction.from_p(
            [1], 0.0, parity=Parity.EVEN, name="beta",
            closed_f=_bose_ratio,
            closed_pf=lambda t: np.ones_like(t) if isinstance(t, np.ndarray) else 1 + 0j)
    w = _scalar_w(kind.w)
    if kind.tag is ExampleTag.COS_EVEN:
        w2 = -w * w
        return SeriesFunction.from_p(
            lambda n: w2 ** (n // 2) if n % 2 == 0 else 0, abs(kind.w), parity=Parity.EVEN,
            name=f"cos[{w}]",
            closed_f=lambda t: _bose_ratio(t) * cmath.cos(w * complex(t)),
            closed_pf=lambda t: np.cos(w * t))
    return SeriesFunction.from_p(
        lambda n: w ** n if n % 2 else 0, abs(kind.w), parity=Parity.ODD,
        name=f"sinh[{w}]",
        closed_f=lambda t: _bose_ratio(t) * cmath.sinh(w * complex(t)),
        closed_pf=lambda t: np.sinh(w * t))


def _combine(a: EvalResult, b: EvalResult, sign: int, method: str) -> EvalResult:
    return EvalResult((a.value + sign * b.value) / 2, method, (a.err_est + b.err_est) / 2)


def example_l(kind: ExampleKind, s) -> EvalResult:
    """``L(s)`` through Hurwitz zeta (Euler-Maclaurin), valid for ``s != 1``."""
    s = complex(s)
    if kind.tag is ExampleTag.BETA:
        r = hurwitz_zeta(s, 1, method="euler-maclaurin")
        return EvalResult(r.value, "hurwitz", r.err_est)
    w = kind.w
    if kind.tag is ExampleTag.COS_EVEN:
        return _combine(hurwitz_zeta(s, 1 + 1j * w), hurwitz_zeta(s, 1 - 1j * w), 1, "hurwitz-pair")
    return _combine(hurwitz_zeta(s, 1 + w), hurwitz_zeta(s, 1 - w), -1, "hurwitz-pair")


def example_evaluator(kind: ExampleKind) -> LcEvaluator:
    """``LcEvaluator`` whose continuations come from the Hurwitz identities."""
    f = make_example(kind)
    if kind.tag is ExampleTag.BETA:
        holder: list[LcEvaluator] = []

        def fc(s: complex) -> EvalResult:
            # F(s, beta) = zeta(s); use the plain series where it converges
            if series_region_ok(holder[0], s):
                return lc_series(holder[0], s)
            r = hurwitz_zeta(s, 1)
            return EvalResult(r.value, "hurwitz", r.err_est)

        ev = LcEvaluator(f, lambda s: example_l(kind, s), fc)
        holder.append(ev)
        return ev
    return LcEvaluator(f, lambda s: example_l(kind, s))


# closed forms at integers ------------------------------------------------------

def _laurent(first: int, w: complex, odd: bool) -> complex:
    """``sum_k binom(-s, j) (+-w)^j zeta(s + j)`` over even or odd ``j``.

    ``odd=False``: ``s = first`` even, ``j = 2k`` and the sign ``(-1)^k``
    comes from ``(iw)^{2k}``.  ``odd=True``: ``s = first`` odd, ``j = 2k+1``.
    """
    s = first
    total = 0j
    for k in range(_LAURENT_MAX_TERMS):
        j = 2 * k + 1 if odd else 2 * k
        binom = (-1) ** j * math.comb(s + j - 1, j)
        term = binom * w ** j * zeta_even((s + j) // 2) * (1 if odd else (-1) ** k)
        total += term
        if k + 1 >= _LAURENT_MIN_TERMS and abs(term) <= 1e-17 * abs(total):
            return total
    raise AccuracyError(f"Laurent series at w={w} did not settle in {_LAURENT_MAX_TERMS} terms", total)


def l_even_closed(p: int, w) -> complex:
    """``L(2p)`` for the cosine example.

    ``p = 0`` gives ``-1/2``; otherwise
    ``pi^{2p} K_{2p}(pi w) / (2 (2p-1)!) - (-1)^p / (2 w^{2p})``.
    """
    if p < 0:
        raise DomainError("p must be non-negative")
    w = complex(w)
    if p == 0:
        return -0.5 + 0j
    if w == 0:
        return complex(zeta_even(p))
    if abs(w) < NEAR_ZERO:
        return _laurent(2 * p, w, odd=False)
    lead = math.pi ** (2 * p) * k_function(2 * p, math.pi * w) / (2 * math.factorial(2 * p - 1))
    return lead - (-1) ** p / (2 * w ** (2 * p))


def l_odd_closed(p: int, w) -> complex:
    """``L(2p+1)`` for the sinh example.

    ``p = 0``: ``-1/(2w) + (pi/2) cot(pi w)``; ``p >= 1``:
    ``-pi^{2p+1} K_{2p+1}(i pi w) / (2 (2p)!) - 1 / (2 w^{2p+1})``.
    """
    if p < 0:
        raise DomainError("p must be non-negative")
    w = complex(w)
    if w == 0:
        return 0j
    _sinpi_guard(w)
    if abs(w) < NEAR_ZERO:
        return _laurent(2 * p + 1, w, odd=True)
    if p == 0:
        return -1 / (2 * w) + math.pi / 2 / cmath.tan(math.pi * w)
    lead = math.pi ** (2 * p + 1) * k_function(2 * p + 1, 1j * math.pi * w) / (2 * math.factorial(2 * p))
    return -lead - 1 / (2 * w ** (2 * p + 1))


def integral_cos_closed(p: int, w) -> complex:
    """``int_0^inf t^{2p-1} cos(w t) / (e^t - 1) dt`` for ``|Im w| < 1``.

    Uses the Eulerian-polynomial form with ``E = e^{2 pi w}`` (after
    ``w -> -w`` so that ``|E| <= 1``); the value at ``w = 0`` is
    ``Gamma(2p) zeta(2p)`` and small ``|w|`` goes through the Laurent series.
    """
    if p < 1:
        raise DomainError("p must be >= 1")
    w = complex(w)
    if not abs(w.imag) < 1:
        raise DomainError(f"integral needs |Im w| < 1, got w={w}")
    fact = math.factorial(2 * p - 1)
    if w == 0:
        return complex(fact * zeta_even(p))
    if abs(w) < NEAR_ZERO:
        return fact * _laurent(2 * p, w, odd=False)
    if w.real > 0:
        w = -w
    e = cmath.exp(2 * math.pi * w)
    a = eulerian_polynomial(2 * p - 1)(e)
    bracket = (2 * math.pi) ** (2 * p) * e * a / (1 - e) ** (2 * p) - fact / w ** (2 * p)
    return (-1) ** p / 2 * bracket


def integral_sinh_closed(p: int, w) -> complex:
    """``int_0^inf t^{2p} sinh(w t) / (e^t - 1) dt`` for ``|Re w| < 1``.

    Eulerian form with ``E = e^{2 i pi w}``; the integrand is odd in ``w``
    so ``Im w >= 0`` is arranged first.  ``w = 0`` gives 0.
    """
    if p < 1:
        raise DomainError("p must be >= 1")
    w = complex(w)
    if not abs(w.real) < 1:
        raise DomainError(f"integral needs |Re w| < 1, got w={w}")
    if w == 0:
        return 0j
    fact = math.factorial(2 * p)
    if abs(w) < NEAR_ZERO:
        return -fact * _laurent(2 * p + 1, w, odd=True)
    sign = 1
    if w.imag < 0 or (w.imag == 0 and w.real < 0):
        w, sign = -w, -1
    e = cmath.exp(2j * math.pi * w)
    a = eulerian_polynomial(2 * p)(e)
    bracket = (2j * math.pi) ** (2 * p + 1) * e * a / (1 - e) ** (2 * p + 1) + fact / w ** (2 * p + 1)
    return sign * bracket / 2
