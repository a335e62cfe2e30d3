"""Generalised complex power ``z^(s,f) = z^s sum_k binom(s, k) P_k z^-k``.

The binomial series is summed until a rigorous-style tail bound falls below
the tolerance.  With ``q = r0/|z|`` for some ``r_f < r0 < |z|`` and
``M = max_k |P_k| r0^-k`` over the coefficients seen so far,

    |sum_{j>k} binom(s, j) P_j z^-j| <= M sum_{j>k} (|s|)_j / j! q^j,

and the right-hand side is a hypergeometric tail with a computable geometric
majorant.  Several ``r0`` are tried and the smallest bound is used.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import AccuracyError, DomainError
from .numerics_types import EvalResult
from .series_core import SeriesFunction, max_depth

EPS = 2.220446049250313e-16
SLOW_RATIO = 1.05
_R0_FRACTIONS = (0.05, 0.2, 0.5)


@dataclass(frozen=True)
class OmegaDomain:
    """``{z : z not in (-inf, 0], |z| > r_f}``."""

    r_f: float

    def __contains__(self, z) -> bool:
        z = complex(z)
        if z.imag == 0 and z.real <= 0:
            return False
        return abs(z) > self.r_f

    def check(self, z) -> None:
        z = complex(z)
        if z.imag == 0 and z.real <= 0:
            raise DomainError(f"z={z} lies on the branch cut (-inf, 0]")
        if not abs(z) > self.r_f:
            raise DomainError(f"|z|={abs(z):g} must exceed r_f={self.r_f:g}")


def _pochhammer_tail(a: float, q: float, k: int) -> float:
    """Upper bound for ``sum_{j>k} (a)_j / j! q^j`` with ``0 <= q < 1``."""
    if q == 0:
        return 0.0
    # (a)_j / j! q^j at j = k + 1, built in logs to dodge overflow
    j = k + 1
    if a == 0:
        return 0.0
    log_t = math.lgamma(a + j) - math.lgamma(a) - math.lgamma(j + 1) + j * math.log(q)
    total = 0.0
    t = math.exp(log_t)
    while True:
        ratio = q * (a + j) / (j + 1)
        if ratio < 1 and ratio >= q:
            return total + t / (1 - ratio)
        if ratio < q:
            # ratios decrease towards q from above
            return total + t / (1 - q)
        total += t
        t *= ratio
        j += 1
        if j > k + 100_000:
            return math.inf


class _TailBound:
    """Tracks ``M(r0)`` for several radii and reports the best tail bound."""

    def __init__(self, r_f: float, modulus: float, abs_s: float):
        self.abs_s = abs_s
        self.modulus = modulus
        self.radii = [r_f + (modulus - r_f) * th for th in _R0_FRACTIONS]
        if r_f == 0:
            self.radii = [modulus * th for th in _R0_FRACTIONS]
        self.log_m = [-math.inf] * len(self.radii)

    def see(self, k: int, p_k: complex) -> None:
        size = abs(p_k)
        if size == 0:
            return
        for i, r0 in enumerate(self.radii):
            self.log_m[i] = max(self.log_m[i], math.log(size) - k * math.log(r0))

    def bound(self, k: int) -> float:
        best = math.inf
        for r0, log_m in zip(self.radii, self.log_m):
            if log_m == -math.inf:
                return 0.0
            tail = _pochhammer_tail(self.abs_s, r0 / self.modulus, k)
            if tail == 0:
                return 0.0
            best = min(best, math.exp(log_m) * tail)
        return best


def _is_nonneg_int(s: complex) -> bool:
    return s.imag == 0 and s.real >= 0 and s.real.is_integer()


def generalized_pow(z, s, f: SeriesFunction, tol: float = 1e-15) -> EvalResult:
    """``z^(s,f)`` with principal-branch ``z^s``; ``z`` must lie in ``Omega_f``."""
    z = complex(z)
    s = complex(s)
    OmegaDomain(f.r_f).check(z)
    zs = cmath.exp(s * cmath.log(z))
    inv_z = 1 / z
    modulus = abs(z)
    slow = modulus < SLOW_RATIO * f.r_f
    method = "binomial-series" + ("+slow-convergence" if slow else "")
    cap = max_depth()

    if _is_nonneg_int(s):
        # binom(s, k) vanishes past k = s: exact finite sum
        m = int(s.real)
        if m >= cap:
            raise AccuracyError(f"exponent {m} exceeds the depth cap {cap}")
        coeffs = f.p_list(m)
        total = 0j
        mag = 0.0
        binom = 1.0
        power = 1 + 0j
        for k in range(m + 1):
            term = binom * coeffs[k] * power
            total += term
            mag += abs(term)
            binom = binom * (m - k) / (k + 1)
            power *= inv_z
        return EvalResult(zs * total, method + ":finite", 4 * (m + 1) * EPS * mag * abs(zs))

    bound = _TailBound(f.r_f, modulus, abs(s))
    coeffs: list[complex] = []
    total = 0j
    mag = 0.0
    binom = 1 + 0j
    power = 1 + 0j
    # for |z| < 1 the power z^-k alone overflows long before P_k z^-k does
    use_logs = modulus < 1
    log_z = cmath.log(z)
    tail = math.inf
    for k in range(cap):
        if k >= len(coeffs):
            coeffs = f.p_list(min(cap - 1, max(32, 2 * k)))
        p_k = coeffs[k]
        bound.see(k, p_k)
        if p_k != 0:
            scaled = cmath.exp(cmath.log(p_k) - k * log_z) if use_logs else p_k * power
            term = binom * scaled
            total += term
            mag += abs(term)
        binom *= (s - k) / (k + 1)
        power *= inv_z
        if k >= 1 and (k % 4 == 0 or k < 8):
            tail = bound.bound(k)
            if tail <= tol * max(abs(total), mag * EPS, 1e-300):
                err = (tail + 8 * EPS * mag) * abs(zs)
                return EvalResult(zs * total, method, err)
    raise AccuracyError(
        f"z^(s,f) tail bound {tail:.3g} not reached within {cap} terms (|z|/r_f close to 1?)",
        EvalResult(zs * total, method, (tail + 8 * EPS * mag) * abs(zs) if math.isfinite(tail) else 1e300))
