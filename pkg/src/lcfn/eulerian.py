"""Eulerian polynomials, the K_m kernel, cotangent derivatives, partial fractions.

Eulerian polynomials follow the descent convention ``A_0 = 1``, ``A_1 = 1``,
``A_2 = 1 + t``, ``A_3 = 1 + 4t + t^2`` and are generated by

    A_{n+1}(t) = (1 + n t) A_n(t) + t (1 - t) A_n'(t).
"""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError
from .numerics_types import EvalResult

MAX_EULERIAN_ROW = 30
POLE_GUARD = 1e-8

_rows: list[tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


@dataclass(frozen=True)
class EulerianPolynomial:
    n: int
    coeffs: tuple[int, ...]

    def __call__(self, t):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _row(n: int) -> tuple[int, ...]:
    if n < 0 or n > MAX_EULERIAN_ROW:
        raise RangeError(f"Eulerian row {n} outside 0..{MAX_EULERIAN_ROW}")
    if n >= len(_rows):
        with _rows_lock:
            while len(_rows) <= n:
                m = len(_rows) - 1
                a = _rows[m]
                # coefficient of t^k in A_{m+1}: (k+1) a_k + (m-k+1) a_{k-1}
                size = m + 1
                new = []
                for k in range(size):
                    ak = a[k] if k < len(a) else 0
                    akm1 = a[k - 1] if 0 < k <= len(a) else 0
                    new.append((k + 1) * ak + (m - k + 1) * akm1)
                _rows.append(tuple(new))
    return _rows[n]


def eulerian_polynomial(n: int) -> EulerianPolynomial:
    """Exact integer coefficients of ``A_n`` (``n <= 30``)."""
    return EulerianPolynomial(n, _row(n))


def eulerian_number(n: int, k: int) -> int:
    """``<n, k>``: number of permutations of ``n`` letters with ``k`` descents."""
    row = _row(n)
    if k < 0 or k >= len(row):
        raise RangeError(f"Eulerian number <{n},{k}> out of range 0..{len(row) - 1}")
    return row[k]


def k_function(m: int, z: complex) -> complex:
    """``K_m(z) = (2i)^m e^{2z} A_{m-1}(e^{2z}) / (1 - e^{2z})^m``.

    Evaluated on the half-plane ``Re z <= 0`` and mapped back with
    ``K_m(-z) = (-1)^m K_m(z)`` so that ``e^{2z}`` never overflows.
    ``m = 1`` is accepted; the partial-fraction identities only use ``m >= 2``.
    """
    if m < 1:
        raise DomainError("K_m needs m >= 1")
    z = complex(z)
    sign = 1
    if z.real > 0:
        z = -z
        sign = -1 if m % 2 else 1
    e = cmath.exp(2 * z)
    denom = 1 - e
    if abs(denom) < 1e-12:
        raise DomainError(f"K_{m} has a pole at z={z} (z in i*pi*Z)")
    a = eulerian_polynomial(m - 1)
    return sign * (2j) ** m * e * a(e) / denom ** m


def _sinpi_guard(w: complex) -> None:
    if abs(cmath.sin(math.pi * complex(w))) < POLE_GUARD:
        raise DomainError(f"pole: w={w} is (numerically) an integer")


def _cot_trig(p: int, x: complex) -> complex:
    s = cmath.sin(x)
    if p % 2 == 0:
        big_n = p // 2
        num = 2 * sum(eulerian_number(2 * big_n, big_n - k) * cmath.cos((2 * k - 1) * x)
                      for k in range(1, big_n + 1))
        return num / s ** (2 * big_n + 1)
    big_n = (p + 1) // 2
    num = eulerian_number(2 * big_n - 1, big_n - 1) + 2 * sum(
        eulerian_number(2 * big_n - 1, big_n - k - 1) * cmath.cos(2 * k * x)
        for k in range(1, big_n))
    return -num / s ** (2 * big_n)


def cot_derivative(p: int, w, form: str = "K") -> complex:
    """``p``-th derivative of ``cot`` evaluated at ``pi * w``.

    ``form="K"`` uses ``-K_{p+1}(i pi w)``; ``form="trig"`` uses the closed
    cosine/sine expressions with Eulerian numbers.
    """
    if p < 1:
        raise DomainError("derivative order must be >= 1")
    w = complex(w)
    _sinpi_guard(w)
    if form == "K":
        return -k_function(p + 1, 1j * math.pi * w)
    if form == "trig":
        return _cot_trig(p, math.pi * w)
    raise DomainError(f"unknown form {form!r}")


def partial_fraction_sum(p: int, w, N: int = 100_000) -> EvalResult:
    """Truncated ``1/w^p + sum_{n=1}^N [(w-n)^-p + (w+n)^-p]`` with a tail model.

    The tail past ``N`` is replaced by the midpoint integral from ``N + 1/2``;
    for ``p = 1`` the pairs are grouped symmetrically as in Euler's cotangent
    expansion.  ``err_est`` bounds the midpoint remainder plus summation noise.
    """
    if p < 1:
        raise DomainError("p must be >= 1")
    if N < 10:
        raise DomainError("N must be >= 10")
    w = complex(w)
    _sinpi_guard(w)
    n = np.arange(1, N + 1, dtype=float)
    terms = (w - n) ** (-p) + (w + n) ** (-p)
    head = w ** (-p)
    partial = head + terms.sum()
    x = N + 0.5
    if p == 1:
        tail = cmath.log((x - w) / (x + w))
    else:
        tail = ((-1) ** p * (x - w) ** (1 - p) + (x + w) ** (1 - p)) / (p - 1)
    dg = p * abs((-1) ** p * (x - w) ** (-p - 1) + (x + w) ** (-p - 1))
    rounding = 8 * np.finfo(float).eps * (abs(head) + float(np.abs(terms).sum())) * math.log2(N)
    return EvalResult(complex(partial + tail), "partial-fraction+midpoint-tail", dg / 12 + rounding)
