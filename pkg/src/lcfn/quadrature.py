"""Half-line quadrature for Mellin-type integrands ``t^{s-1} h(t) K(t)``.

``(0, b]`` is handled by a tanh-sinh rule (optionally after ``t = u^2``) and
``[b, inf)`` by the exp-sinh map ``t = b + exp(x - exp(-x))`` that suits
exponentially decaying integrands.  Both trapezoid sums are refined by step
halving; the error estimate is the last-level difference plus a rounding
floor.
"""
from __future__ import annotations

import cmath
import math
from typing import Callable

import numpy as np

from .errors import AccuracyError, DomainError
from .numerics_types import EvalResult, QuadratureSpec

EPS = np.finfo(float).eps
_U_MAX = 4.5
# t^{s-1}-type singularities at 0 need the left map taken much deeper
_U_MIN_LEFT = 6.0


def _kernel(name: str, t: np.ndarray) -> np.ndarray:
    if name == "bose":
        return 1.0 / np.expm1(t)
    if name == "exp":
        return np.exp(-t)
    if name == "none":
        return np.ones_like(t)
    raise DomainError(f"unknown kernel {name!r}")


def _as_vector(g: Callable) -> Callable[[np.ndarray], np.ndarray]:
    def call(t: np.ndarray) -> np.ndarray:
        try:
            out = np.asarray(g(t), dtype=complex)
            if out.shape == t.shape:
                return out
        except (TypeError, ValueError):
            pass
        return np.array([complex(g(float(x))) for x in t], dtype=complex)

    return call


class _Trapezoid:
    """Nested trapezoid sums in the transformed variable ``u``."""

    def __init__(self, nodes_weights: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
                 integrand: Callable[[np.ndarray], np.ndarray], lo: float, hi: float):
        self.nw = nodes_weights
        self.f = integrand
        self.lo, self.hi = lo, hi
        self.h = 1.0
        self.abs_sum = 0.0
        u = np.arange(math.ceil(lo), math.floor(hi) + 1, dtype=float)
        self.total = self._eval(u)
        self.value = self.h * self.total

    def _eval(self, u: np.ndarray) -> complex:
        t, w = self.nw(u)
        with np.errstate(all="ignore"):
            vals = self.f(t) * w
        vals = np.where(np.isfinite(vals), vals, 0.0)
        self.abs_sum += float(np.abs(vals).sum())
        return complex(vals.sum())

    def refine(self) -> complex:
        self.h /= 2
        start = math.ceil(self.lo / self.h)
        if start % 2 == 0:
            start += 1
        u = np.arange(start, math.floor(self.hi / self.h) + 1, 2, dtype=float) * self.h
        self.total += self._eval(u)
        self.value = self.h * self.total
        return self.value

    @property
    def rounding(self) -> float:
        return 16 * EPS * self.h * self.abs_sum


def _tanh_sinh_nodes(b: float, squared: bool):
    top = math.sqrt(b) if squared else b

    def nw(u: np.ndarray):
        with np.errstate(over="ignore"):
            e = np.exp(-np.pi * np.sinh(u))
            x = top / (1.0 + e)
            dx = top * np.pi * np.cosh(u) * e / (1.0 + e) ** 2
        if squared:
            return x * x, 2 * x * dx
        return x, dx

    return nw


def _exp_sinh_nodes(b: float):
    def nw(u: np.ndarray):
        g = np.exp(u - np.exp(-u))
        return b + g, g * (1.0 + np.exp(-u))

    return nw


def _upper_limit(nw, f) -> float:
    u = np.arange(0.0, 9.0, 0.25)
    t, w = nw(u)
    with np.errstate(all="ignore"):
        v = np.abs(f(t) * w)
    v = np.where(np.isfinite(v), v, np.inf)
    finite = np.isfinite(v)
    peak = v[finite].max() if finite.any() else 0.0
    if peak == 0.0:
        return 1.0
    keep = np.nonzero(finite & (v > 1e-20 * peak))[0]
    last = keep.max() if keep.size else 0
    # stop before the first non-finite sample
    bad = np.nonzero(~finite)[0]
    if bad.size and bad.min() <= last + 2:
        return float(u[max(bad.min() - 1, 1)])
    return float(u[min(last + 2, len(u) - 1)])


def integrate_halfline(g: Callable, s=1.0, spec: QuadratureSpec | None = None,
                       kernel: str = "bose") -> EvalResult:
    """``int_0^inf t^{s-1} g(t) K(t) dt`` with ``K`` chosen by ``kernel``.

    ``kernel`` is ``"bose"`` for ``1/(e^t - 1)``, ``"exp"`` for ``e^{-t}`` and
    ``"none"`` for a bare ``g``.  ``g`` may be scalar or numpy-vectorised.
    Raises ``AccuracyError`` (with the best estimate attached) when
    ``spec.max_levels`` halvings do not reach ``spec.target_rel_err``.
    """
    spec = spec or QuadratureSpec()
    s = complex(s)
    gv = _as_vector(g)

    def f(t: np.ndarray) -> np.ndarray:
        logt = np.log(t)
        return np.exp((s - 1) * logt) * gv(t) * _kernel(kernel, t)

    b = spec.split_point
    left_nw = _tanh_sinh_nodes(b, squared=s.real < 1.5)
    right_nw = _exp_sinh_nodes(b)
    left = _Trapezoid(left_nw, f, -_U_MIN_LEFT, _U_MAX)
    right = _Trapezoid(right_nw, f, -_U_MAX, _upper_limit(right_nw, f))

    value = left.value + right.value
    err = math.inf
    for level in range(1, spec.max_levels + 1):
        prev = value
        value = left.refine() + right.refine()
        err = abs(value - prev) + left.rounding + right.rounding
        if level >= 3 and err <= spec.target_rel_err * max(abs(value), 1e-300):
            return EvalResult(value, "tanh-sinh+exp-sinh", err)
    best = EvalResult(value if cmath.isfinite(value) else 0j, "tanh-sinh+exp-sinh", err if math.isfinite(err) else 1e300)
    raise AccuracyError(f"quadrature did not reach rel. error {spec.target_rel_err}", best)
