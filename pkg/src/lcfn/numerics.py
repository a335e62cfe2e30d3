"""Shared numerical kernel.

Complex Gamma (Lanczos + reflection), Bernoulli numbers and polynomials,
Hurwitz zeta by Euler-Maclaurin (valid as an analytic continuation), the
periodic zeta function for ``Re s > 1`` and the half-line quadrature used by
the integral representations.
"""
from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction

import numpy as np

from .errors import DomainError, RangeError
from .eulerian import eulerian_polynomial
from .numerics_types import EvalResult, QuadratureSpec
from .polynomial import Polynomial
from .quadrature import integrate_halfline

__all__ = [
    "EvalResult",
    "QuadratureSpec",
    "gamma_complex",
    "rgamma",
    "sinpi",
    "cospi",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "bernoulli_exact",
    "zeta_even",
    "hurwitz_zeta",
    "periodic_zeta",
    "unimodular_tail",
    "integrate_halfline",
]

EPS = np.finfo(float).eps
BERNOULLI_FLOAT_CAP = 60

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2 * math.pi)


def sinpi(z) -> complex:
    """``sin(pi z)`` with the real part reduced first, exact zeros at integers."""
    z = complex(z)
    n = round(z.real)
    r = complex(z.real - n, z.imag)
    v = cmath.sin(math.pi * r)
    return -v if n % 2 else v


def cospi(z) -> complex:
    z = complex(z)
    n = round(z.real)
    r = complex(z.real - n, z.imag)
    v = cmath.cos(math.pi * r)
    return -v if n % 2 else v


def _is_nonpositive_int(s: complex) -> bool:
    return s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real)


def _lanczos(s: complex) -> complex:
    z = s - 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


def gamma_complex(s) -> complex:
    """Gamma function on the complex plane, poles at ``0, -1, -2, ...``."""
    s = complex(s)
    if _is_nonpositive_int(s):
        raise DomainError(f"Gamma has a pole at {s.real:g}")
    if s.real < 0.5:
        return math.pi / (sinpi(s) * _lanczos(1 - s))
    return _lanczos(s)


def rgamma(s) -> complex:
    """``1/Gamma(s)``, entire; exactly zero at the non-positive integers."""
    s = complex(s)
    if _is_nonpositive_int(s):
        return 0j
    if s.real < 0.5:
        return sinpi(s) * _lanczos(1 - s) / math.pi
    return 1 / _lanczos(s)


_bern: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli_exact(n: int) -> Fraction:
    """``B_n`` as an exact fraction (convention ``B_1 = -1/2``)."""
    if n < 0:
        raise RangeError("Bernoulli index must be non-negative")
    if n >= len(_bern):
        with _bern_lock:
            while len(_bern) <= n:
                m = len(_bern)
                acc = sum(math.comb(m + 1, k) * _bern[k] for k in range(m))
                _bern.append(-acc / (m + 1))
    return _bern[n]


def bernoulli_numbers(n: int) -> list[float]:
    """``[B_0, ..., B_n]`` from ``sum_k binom(m+1, k) B_k = 0``; ``n <= 60``."""
    if n < 0 or n > BERNOULLI_FLOAT_CAP:
        raise RangeError(f"bernoulli_numbers supports 0 <= n <= {BERNOULLI_FLOAT_CAP}")
    return [float(bernoulli_exact(k)) for k in range(n + 1)]


def bernoulli_polynomial(n: int, exact: bool = False) -> Polynomial:
    """``B_n(x) = sum_k binom(n, k) B_k x^{n-k}`` (ascending coefficients)."""
    if n < 0 or n > BERNOULLI_FLOAT_CAP:
        raise RangeError(f"bernoulli_polynomial supports 0 <= n <= {BERNOULLI_FLOAT_CAP}")
    coeffs = [math.comb(n, j) * bernoulli_exact(n - j) for j in range(n + 1)]
    if not exact:
        coeffs = [float(c) for c in coeffs]
    return Polynomial(coeffs)


def zeta_even(m: int) -> float:
    """``zeta(2m)`` for ``m >= 0`` (``zeta(0) = -1/2``).

    Summed as ``1 + (sum_{2 <= n < 16} n^-2m + Euler-Maclaurin tail)``; the
    part after the leading 1 is small, so the result is correctly rounded in
    practice.  The Bernoulli closed form rounds ``pi^{2m}`` and drifts by a
    few ulps as ``m`` grows.
    """
    if m < 0:
        raise DomainError("zeta_even needs m >= 0")
    if m == 0:
        return -0.5
    s = 2 * m
    cut = 16
    head = 0.0
    for n in range(cut - 1, 1, -1):
        head += n ** (-s)
    tail = cut ** (1 - s) / (s - 1) + 0.5 * cut ** (-s)
    rising = float(s)
    for j in range(1, 9):
        tail += _EM_WEIGHTS[j] * rising * cut ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return 1 + (head + tail)


_EM_WEIGHTS = [float(bernoulli_exact(2 * j) / math.factorial(2 * j)) for j in range(9)]


def hurwitz_zeta(s, a, N: int = 50, M: int = 12, method: str = "auto") -> EvalResult:
    """Hurwitz zeta ``zeta(s, a)`` for ``Re a > 0`` and ``s != 1``.

    Euler-Maclaurin with ``N`` direct terms and ``M`` Bernoulli corrections,

        sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s/2
            + sum_{j<=M} B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1},

    which continues analytically to ``Re s > -(2M-1)``.  ``M`` is raised when
    ``s`` lies further left, ``N`` doubled while the last correction is not
    small against the previous one.  Complex ``a`` uses principal-branch powers.

    For ``Re s < -1`` and real ``a`` the sum cancels badly, so ``method="auto"``
    switches to Hurwitz's formula through the periodic zeta function at
    ``1 - s``; ``method="euler-maclaurin"`` forces the direct route.
    """
    if method not in ("auto", "euler-maclaurin"):
        raise DomainError(f"unknown hurwitz_zeta method {method!r}")
    s = complex(s)
    a = complex(a)
    if s == 1:
        raise DomainError("Hurwitz zeta has a pole at s=1")
    if a.real <= 0:
        raise DomainError("Hurwitz zeta needs Re(a) > 0")
    M = max(M, math.ceil((3 - s.real) / 2) + 1)
    if 2 * M > BERNOULLI_FLOAT_CAP:
        raise RangeError(f"s={s} lies outside the Euler-Maclaurin window")
    if method == "auto" and s.real < -1 and a.imag == 0:
        return _hurwitz_reflected(s, a.real)
    if s.real <= 0:
        # the direct sum cancels like N^{1-Re s}; a short head keeps it exact
        N = min(N, max(12, int(abs(s)) + 10))
    else:
        N = max(N, int(abs(s)) + 10)
    for _ in range(10):
        n = np.arange(N, dtype=float)
        terms = np.exp(-s * np.log(n + a))
        direct = complex(terms.sum())
        x = N + a
        xs = cmath.exp(-s * cmath.log(x))
        tail = x * xs / (s - 1) + xs / 2
        poch = s
        power = xs / x
        inv_x2 = 1 / (x * x)
        last = prev = 0j
        corr = 0j
        for j in range(1, M + 1):
            b = float(bernoulli_exact(2 * j)) / math.factorial(2 * j)
            t = b * poch * power
            corr += t
            prev, last = last, t
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            power *= inv_x2
        if prev == 0 or abs(last) <= 0.5 * abs(prev):
            break
        N *= 2
    value = direct + tail + corr
    noise = 8 * EPS * (float(np.abs(terms).sum()) + abs(tail) + abs(value))
    return EvalResult(value, "euler-maclaurin", abs(last) + noise)


def _hurwitz_reflected(s: complex, a: float) -> EvalResult:
    # zeta(s, a0) from the periodic zeta at 1 - s, then shift a0 -> a
    k = math.ceil(a) - 1
    a0 = a - k
    u = 1 - s
    plus = periodic_zeta(a0, u)
    minus = periodic_zeta(-a0, u)
    scale = gamma_complex(u) / cmath.exp(u * math.log(2 * math.pi))
    rot = cmath.exp(-0.5j * math.pi * u)
    value = scale * (rot * plus.value + minus.value / rot)
    err = abs(scale) * (abs(rot) * plus.err_est + minus.err_est / abs(rot))
    if k:
        shift = np.exp(-s * np.log(a0 + np.arange(k, dtype=float)))
        value -= complex(shift.sum())
        err += 8 * EPS * float(np.abs(shift).sum())
    err += 32 * EPS * abs(value)
    return EvalResult(value, "hurwitz-reflection", err)


def unimodular_tail(a: float, s, N: int, max_terms: int = 30) -> tuple[complex, float]:
    """``sum_{n>=N} e^{2 i pi a n} n^{-s}`` for non-integer ``a``.

    Expands ``n^{-s}`` around ``N`` and sums the geometric moments
    ``sum_m m^j z^m = z A_j(z)/(1-z)^{j+1}`` termwise (Euler-Boole).  The
    expansion is asymptotic; it stops at the smallest term, which is returned
    as the error estimate.
    """
    s = complex(s)
    frac = a - math.floor(a)
    if frac == 0:
        raise DomainError("unimodular_tail needs a non-integer a")
    z = -1 + 0j if frac == 0.5 else cmath.exp(2j * math.pi * frac)
    phase = cmath.exp(2j * math.pi * ((frac * N) % 1.0))
    inv = 1 / (1 - z)
    n_pow = cmath.exp(-s * math.log(N))
    binom = 1 + 0j
    total = phase * inv * n_pow
    smallest = abs(total)
    for j in range(1, max_terms + 1):
        binom *= (-s - j + 1) / j
        n_pow /= N
        c = z * eulerian_polynomial(j)(z) * inv ** (j + 1)
        term = phase * c * binom * n_pow
        size = abs(term)
        if size == 0:
            # A_j(-1) vanishes for even j; not a sign of convergence
            continue
        if size > smallest and j > 1:
            break
        total += term
        smallest = size
        if size <= 1e-17 * abs(total):
            break
    return total, smallest


def periodic_zeta(a: float, s) -> EvalResult:
    """``F(a, s) = sum_{n>=1} e^{2 i pi n a} n^{-s}`` for ``Re s > 1``."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError("periodic_zeta is only defined here for Re(s) > 1")
    a = float(a)
    frac = a - round(a)
    if frac == 0:
        r = hurwitz_zeta(s, 1)
        return EvalResult(r.value, "periodic-zeta:integer-a", r.err_est)
    N = min(max(200, math.ceil(80 / (2 * math.pi * abs(frac)))), 2_000_000)
    n = np.arange(1, N, dtype=float)
    phases = np.exp(2j * np.pi * np.mod(n * frac, 1.0))
    terms = phases * np.exp(-s * np.log(n))
    head = complex(terms.sum())
    tail, tail_err = unimodular_tail(frac, s, N)
    noise = 8 * EPS * float(np.abs(terms).sum())
    return EvalResult(head + tail, "direct+euler-boole-tail", tail_err + noise)
