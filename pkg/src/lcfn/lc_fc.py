"""LC-functions ``L(s,f) = sum_{n >= n_f} n^(-s,f)`` and their FC companions.

Values come from four routes:

* the Dirichlet-type series (``Re s > 1``, or ``Re s > 0`` when ``p_f(0) = 0``),
  accelerated by a Hurwitz-zeta tail;
* the Mellin integral ``(1/Gamma(s)) int t^{s-1} e^{(1-n_f)t} p_f(-t)/(e^t-1) dt``;
* exact C-polynomial values at non-positive integers;
* for even (``kappa = 0``) or odd (``kappa = 1``) modulators, the functional
  equation ``L(1-s,f) = 2 i^kappa (2 pi)^-s Gamma(s) cos(pi(s-kappa)/2) F(s, f_(2 i pi))``,
  which gives ``F`` at matching positive integers and on ``Re s < 0``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import CapabilityError, DomainError
from .gen_exp import EPS, _TailBound, generalized_pow
from .numerics import cospi, gamma_complex, hurwitz_zeta, rgamma
from .numerics_types import EvalResult, QuadratureSpec
from .quadrature import integrate_halfline
from .series_core import (
    Parity,
    SeriesFunction,
    StructuralConstants,
    c_polynomial,
    max_depth,
    eval_modulator,
    structural_constants,
    underline,
)

TAIL_ORDER = 8
PROBE_STEP = 1e-4
COS_GUARD = 1e-6
_MAX_N = 1 << 20

Continuation = Callable[[complex], EvalResult]


@dataclass(frozen=True)
class LcEvaluator:
    """An LC-function ready for evaluation.

    ``l_continuation`` and ``fc_continuation`` optionally supply ``L(s,f)``
    outside the series region and ``F(s, f_(2 i pi))`` at arbitrary ``s``
    (the worked examples provide both in closed form).
    """

    f: SeriesFunction
    l_continuation: Continuation | None = None
    fc_continuation: Continuation | None = None
    consts: StructuralConstants = field(init=False)
    _under: list = field(default_factory=list, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "consts", structural_constants(self.f))

    @property
    def kappa(self) -> int | None:
        parity = self.f.parity
        if parity is Parity.EVEN:
            return 0
        if parity is Parity.ODD:
            return 1
        return None

    @property
    def underline_f(self) -> SeriesFunction:
        if not self._under:
            self._under.append(underline(self.f))
        return self._under[0]

    def require_kappa(self) -> int:
        kappa = self.kappa
        if kappa is None:
            raise CapabilityError("functional equation needs an even or odd modulator")
        return kappa


def series_region_ok(ev: LcEvaluator, s) -> bool:
    s = complex(s)
    if s.real > 1:
        return True
    return s.real > 0 and ev.f.p(0) == 0


def _check_series_region(ev: LcEvaluator, s: complex) -> None:
    if not series_region_ok(ev, s):
        if ev.f.p(0) == 0:
            raise DomainError(f"series needs Re(s) > 0, got s={s}")
        raise DomainError(f"series needs Re(s) > 1 (p_f(0) != 0), got s={s}")


def _k_tail(bound: _TailBound, k: int, sigma: float, n: int) -> float:
    # zeta(sigma + j, n) <= n^{-sigma-j} (n/(sigma+j-1) + 1) for j > k
    return bound.bound(k) * n ** (-sigma) * (n / (sigma + k) + 1)


def lc_series(ev: LcEvaluator, s, tol: float = 1e-14) -> EvalResult:
    """``L(s,f)`` from the series plus a Hurwitz-zeta tail of order 8.

    Terms with ``n`` close to ``r_f`` use :func:`generalized_pow`; the rest
    are regrouped by powers of ``1/n``.  Past ``N`` the remainder is
    ``sum_{k<=8} binom(-s,k) P_k zeta(s+k, N+1)``; ``N`` grows until the
    bound on the dropped ``k > 8`` terms is below ``tol`` relative.
    """
    s = complex(s)
    _check_series_region(ev, s)
    f = ev.f
    r_f = f.r_f
    n_f = ev.consts.n_f
    sigma = s.real
    n1 = max(n_f, math.ceil(2 * r_f) + 1)

    head = 0j
    head_err = 0.0
    for n in range(n_f, n1):
        g = generalized_pow(n, -s, f, tol=tol * 1e-2)
        head += g.value
        head_err += g.err_est

    # regrouped middle block: sum_k binom(-s,k) P_k sum_n n^{-s-k}
    depth = min(200, max_depth() - 1)
    coeffs = f.p_list(depth)
    binoms = [1 + 0j]
    for k in range(depth):
        binoms.append(binoms[-1] * (-s - k) / (k + 1))
    mid_bound = _TailBound(r_f, float(n1), abs(s))
    scale = max(abs(c) for c in coeffs[:2]) or max(abs(c) for c in coeffs) or 1.0
    k_mid = 0
    for k in range(depth):
        mid_bound.see(k, coeffs[k])
        k_mid = k
        if k >= TAIL_ORDER and mid_bound.bound(k) <= 1e-18 * scale:
            break
    mid_trunc = mid_bound.bound(k_mid)

    N = max(n1 + 32, 64)
    while True:
        ns = np.arange(n1, N + 1, dtype=float)
        logn = np.log(ns)
        mid = 0j
        mid_abs = 0.0
        for k in range(k_mid + 1):
            if coeffs[k] == 0:
                continue
            col = np.exp(-(s + k) * logn)
            c = binoms[k] * coeffs[k]
            mid += c * complex(col.sum())
            mid_abs += abs(c) * float(np.abs(col).sum())
        mid_err = mid_trunc * n1 ** (-sigma) * (1 + n1 / (sigma + k_mid))

        tail = 0j
        tail_err = 0.0
        for k in range(TAIL_ORDER + 1):
            if coeffs[k] == 0:
                continue
            hz = hurwitz_zeta(s + k, N + 1)
            c = binoms[k] * coeffs[k]
            tail += c * hz.value
            tail_err += abs(c) * hz.err_est
        far = _TailBound(r_f, float(N + 1), abs(s))
        for k in range(min(len(coeffs), 64)):
            far.see(k, coeffs[k])
        dropped = _k_tail(far, TAIL_ORDER, sigma, N + 1)

        value = head + mid + tail
        err = head_err + mid_err + tail_err + dropped + 8 * EPS * (mid_abs + abs(tail))
        if dropped <= tol * max(abs(value), 1e-300) or N >= _MAX_N:
            return EvalResult(value, "series+hurwitz-tail", err)
        N *= 4


def lc_integral(ev: LcEvaluator, s, spec: QuadratureSpec | None = None) -> EvalResult:
    """``L(s,f)`` from its Mellin integral over ``(0, inf)``."""
    s = complex(s)
    _check_series_region(ev, s)
    f = ev.f
    shift = 1 - ev.consts.n_f
    closed = f.closed_pf

    if closed is not None:
        def g(t):
            return np.exp(shift * t) * closed(-t)
    else:
        def g(t):
            t = float(t)
            return math.exp(shift * t) * eval_modulator(f, -t)

    raw = integrate_halfline(g, s, spec, kernel="bose")
    inv = rgamma(s)
    return EvalResult(raw.value * inv, "mellin-integral", raw.err_est * abs(inv))


def lc_at_nonpositive_int(ev: LcEvaluator, p: int, form: str = "direct") -> complex:
    """``L(-p, f) = -C_{f,p+1}(n_f)/(p+1) = (-1)^p C_{f_,p+1}(1-n_f)/(p+1)``.

    ``form="underline"`` selects the second expression, built on
    ``e^{-t} f(-t)``.
    """
    if p < 0:
        raise DomainError("p must be non-negative")
    n_f = ev.consts.n_f
    if form == "direct":
        return -c_polynomial(ev.f, p + 1)(n_f) / (p + 1)
    if form == "underline":
        return (-1) ** p * c_polynomial(ev.underline_f, p + 1)(1 - n_f) / (p + 1)
    raise DomainError(f"unknown form {form!r}")


def residue_at_one(ev: LcEvaluator) -> complex:
    """Residue of ``L(s,f)`` at ``s = 1``, namely ``p_f(0) = P_0``."""
    return ev.f.p(0)


def fc_at_positive_int(ev: LcEvaluator, k: int) -> complex:
    """``F(k, f_(2 i pi))`` at ``k = 2p`` (even modulator) or ``k = 2p+1`` (odd)."""
    kappa = ev.require_kappa()
    if k < 0 or k % 2 != kappa:
        raise DomainError(f"k={k} does not match the modulator parity (kappa={kappa})")
    p = k // 2
    cpoly = c_polynomial(ev.underline_f, k)(1 - ev.consts.n_f)
    scale = (2 * math.pi) ** k / (2 * math.factorial(k))
    if kappa == 0:
        return (-1) ** (p + 1) * scale * cpoly
    return (-1) ** p * scale * cpoly / 1j


def _fe_factor(s: complex, kappa: int) -> complex:
    """``2 i^kappa (2 pi)^-s cos(pi (s - kappa)/2)`` (without ``Gamma(s)``)."""
    return 2 * (1j ** kappa) * cmath.exp(-s * math.log(2 * math.pi)) * cospi((s - kappa) / 2)


def _fc_from_l(ev: LcEvaluator, s: complex, kappa: int, tol: float) -> EvalResult:
    left = lc_series(ev, 1 - s, tol)
    # F = L(1-s) / (Gamma(s) * factor) with 1/Gamma entire
    ratio = rgamma(s) / _fe_factor(s, kappa)
    return EvalResult(left.value * ratio, "functional-equation", left.err_est * abs(ratio))


def fc_left_halfplane(ev: LcEvaluator, s, tol: float = 1e-14) -> EvalResult:
    """``F(s, f_(2 i pi))`` for ``Re s < 0`` by inverting the functional equation.

    Where ``cos(pi(s-kappa)/2)`` is numerically zero the singularity is
    removable; the value is the mean of the two probes ``s +- 1e-4``.
    """
    s = complex(s)
    kappa = ev.require_kappa()
    if s.real >= 0:
        raise DomainError(f"fc_left_halfplane needs Re(s) < 0, got s={s}")
    if abs(cospi((s - kappa) / 2)) >= COS_GUARD:
        return _fc_from_l(ev, s, kappa, tol)
    lo = _fc_from_l(ev, s - PROBE_STEP, kappa, tol)
    hi = _fc_from_l(ev, s + PROBE_STEP, kappa, tol)
    value = (lo.value + hi.value) / 2
    # the symmetric mean is off by about F'' h^2 / 2; use the probe spread as a proxy
    err = lo.err_est + hi.err_est + abs(hi.value - lo.value) * PROBE_STEP
    return EvalResult(value, "functional-equation+probe", err)


def _positive_int(s: complex) -> int | None:
    if s.imag == 0 and s.real >= 1 and s.real.is_integer():
        return int(s.real)
    return None


@dataclass(frozen=True)
class FunctionalSides:
    s: complex
    lhs: EvalResult
    rhs: EvalResult

    @property
    def residual(self) -> float:
        return abs(self.lhs.value - self.rhs.value)


def _exact_value(value: complex, method: str) -> EvalResult:
    return EvalResult(value, method, 64 * EPS * abs(value))


def functional_equation_sides(ev: LcEvaluator, s, tol: float = 1e-14) -> FunctionalSides:
    """Both sides of the parity functional equation at ``s``, each from its own route."""
    s = complex(s)
    kappa = ev.require_kappa()
    left_arg = 1 - s

    m = _positive_int(s)
    if m is not None:
        lhs = _exact_value(lc_at_nonpositive_int(ev, m - 1), "c-polynomial")
    elif series_region_ok(ev, left_arg):
        lhs = lc_series(ev, left_arg, tol)
    elif ev.l_continuation is not None:
        lhs = ev.l_continuation(left_arg)
    else:
        raise DomainError(f"no independent evaluation of L(1-s) at s={s}")

    if m is not None and m % 2 == kappa:
        fc = _exact_value(fc_at_positive_int(ev, m), "fc-special-value")
    elif ev.fc_continuation is not None:
        fc = ev.fc_continuation(s)
    else:
        raise DomainError(f"no independent evaluation of F(s) at s={s}")

    factor = _fe_factor(s, kappa) * gamma_complex(s)
    rhs = EvalResult(factor * fc.value, fc.method, abs(factor) * fc.err_est)
    return FunctionalSides(s, lhs, rhs)


def functional_equation_residual(ev: LcEvaluator, s, tol: float = 1e-14) -> float:
    """``|L(1-s,f) - 2 i^kappa (2pi)^-s Gamma(s) cos(pi(s-kappa)/2) F(s, f_(2 i pi))|``."""
    return functional_equation_sides(ev, s, tol).residual
