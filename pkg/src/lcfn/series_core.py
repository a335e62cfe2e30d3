"""Seed functions carried as coefficient streams.

A seed ``f`` (analytic at 0) is described by two exponential generating
functions: its own coefficients ``C_n`` and those of the modulator
``p_f(t) = f(t) (e^t - 1) / t``, the ``P_n``.  Either stream determines the
other:

    P_n = sum_k binom(n, k) C_k / (n - k + 1)
    C_n = sum_k binom(n, k) B_{n-k} P_k

Both convolutions are carried out in exact rational arithmetic on the binary64
inputs and rounded once.  The inverse pair is badly conditioned in floating
point (relative error grows past 1e-10 around n = 20), so the exact path is
what makes round trips reliable.
"""
from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple, Sequence, Union

from .errors import AccuracyError, DomainError, RangeError
from .numerics import bernoulli_exact
from .polynomial import Polynomial

DEFAULT_MAX_DEPTH = 1024
PARITY_DEPTH = 64
PARITY_TOL = 1e-10


def max_depth() -> int:
    """Series depth cap, overridable through ``LCFN_MAX_DEPTH``."""
    raw = os.environ.get("LCFN_MAX_DEPTH")
    if not raw:
        return DEFAULT_MAX_DEPTH
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"LCFN_MAX_DEPTH must be an integer, got {raw!r}") from exc
    if value < 16:
        raise DomainError("LCFN_MAX_DEPTH must be at least 16")
    return value


class Parity(str, Enum):
    EVEN = "Even"
    ODD = "Odd"
    NONE = "None"


class ExactComplex(NamedTuple):
    """A complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


Scalar = Union[int, float, complex, Fraction, ExactComplex]
Stream = Union[Callable[[int], Scalar], Sequence[Scalar]]


def _to_exact(z: Scalar) -> ExactComplex:
    if isinstance(z, ExactComplex):
        return z
    if isinstance(z, (int, Fraction)):
        return ExactComplex(Fraction(z), Fraction(0))
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite coefficient {z}")
    return ExactComplex(Fraction(z.real), Fraction(z.imag))


def _to_complex(z: Scalar) -> complex:
    return complex(z)


# exact convolution kernels -------------------------------------------------

def _convolve(values: list[ExactComplex], weight: Callable[[int, int], Fraction]) -> list[ExactComplex]:
    out = []
    for n in range(len(values)):
        re = im = Fraction(0)
        for k in range(n + 1):
            w = weight(n, k)
            if w:
                re += w * values[k].re
                im += w * values[k].im
        out.append(ExactComplex(re, im))
    return out


def _p_weight(n: int, k: int) -> Fraction:
    return Fraction(math.comb(n, k), n - k + 1)


def _c_weight(n: int, k: int) -> Fraction:
    return math.comb(n, k) * bernoulli_exact(n - k)


def _take(source: Stream, n: int) -> list[Scalar]:
    if callable(source):
        return [source(k) for k in range(n + 1)]
    vals = list(source[: n + 1])
    return vals + [0] * (n + 1 - len(vals))


def p_from_c(c_coeffs: "Stream | SeriesFunction", n: int, exact: bool = False) -> list:
    """``[P_0, ..., P_n]`` from the C-numbers of ``f``.

    ``c_coeffs`` is a ``SeriesFunction``, a sequence (zero-extended) or a
    callable ``k -> C_k``.  With ``exact=True`` the result is a list of
    ``ExactComplex``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if isinstance(c_coeffs, SeriesFunction):
        vals = c_coeffs.c_list(n)
    else:
        vals = _take(c_coeffs, n)
    out = _convolve([_to_exact(v) for v in vals], _p_weight)
    return out if exact else [complex(z) for z in out]


def c_from_p(p_coeffs: "Stream | SeriesFunction", n: int, exact: bool = False) -> list:
    """``[C_0, ..., C_n]`` from P-numbers; inverse of :func:`p_from_c`."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if isinstance(p_coeffs, SeriesFunction):
        vals = p_coeffs.p_list(n)
    else:
        vals = _take(p_coeffs, n)
    out = _convolve([_to_exact(v) for v in vals], _c_weight)
    return out if exact else [complex(z) for z in out]


# memoised streams -----------------------------------------------------------

class _Memo:
    """Lazily filled coefficient table; concurrent fills are idempotent."""

    def __init__(self, fill: Callable[[int], list]):
        self._fill = fill
        self._values: list = []
        self._lock = threading.Lock()

    def upto(self, n: int) -> list:
        cap = max_depth()
        if n >= cap:
            raise RangeError(f"coefficient index {n} reaches the depth cap {cap} (LCFN_MAX_DEPTH)")
        if n >= len(self._values):
            with self._lock:
                if n >= len(self._values):
                    # fill in chunks so repeated small extensions stay cheap
                    target = min(max(n + 1, 2 * len(self._values), 16), cap)
                    self._values = self._fill(target - 1)
        return self._values[: n + 1]


def _direct_fill(source: Stream) -> Callable[[int], list]:
    if callable(source):
        return lambda n: [source(k) for k in range(n + 1)]
    vals = list(source)
    return lambda n: vals[: n + 1] + [0] * max(0, n + 1 - len(vals))


@dataclass(frozen=True, eq=False)
class SeriesFunction:
    """Seed function given by one coefficient stream plus its radius data.

    Build with :meth:`from_p` or :meth:`from_c`; the other stream is derived
    on demand.  ``r_f`` is the reciprocal radius of ``sum P_n t^n`` (so
    ``|P_n|`` grows at most like ``r_f^n``) and must be given, not inferred.
    """

    r_f: float
    _p: _Memo = field(repr=False)
    _c: _Memo = field(repr=False)
    declared_parity: Parity | None = None
    closed_f: Callable[[complex], complex] | None = field(default=None, repr=False)
    closed_pf: Callable[[complex], complex] | None = field(default=None, repr=False)
    name: str = "f"
    _parity_cache: list = field(default_factory=list, repr=False)

    @classmethod
    def from_p(cls, p_coeffs: Stream, r_f: float, *, parity: Parity | None = None,
               closed_f=None, closed_pf=None, name: str = "f") -> "SeriesFunction":
        r_f = _check_radius(r_f)
        p_fill = _direct_fill(p_coeffs)
        p_memo = _Memo(p_fill)
        c_memo = _Memo(lambda n: c_from_p(p_memo.upto(n), n))
        return cls(r_f, p_memo, c_memo, parity, closed_f, closed_pf, name)

    @classmethod
    def from_c(cls, c_coeffs: Stream, r_f: float, *, parity: Parity | None = None,
               closed_f=None, closed_pf=None, name: str = "f") -> "SeriesFunction":
        r_f = _check_radius(r_f)
        c_memo = _Memo(_direct_fill(c_coeffs))
        p_memo = _Memo(lambda n: p_from_c(c_memo.upto(n), n))
        return cls(r_f, p_memo, c_memo, parity, closed_f, closed_pf, name)

    def p(self, n: int) -> complex:
        return _to_complex(self._p.upto(n)[n])

    def c(self, n: int) -> complex:
        return _to_complex(self._c.upto(n)[n])

    def p_list(self, n: int) -> list[complex]:
        return [_to_complex(v) for v in self._p.upto(n)]

    def c_list(self, n: int) -> list[complex]:
        return [_to_complex(v) for v in self._c.upto(n)]

    @property
    def parity(self) -> Parity:
        if self.declared_parity is not None:
            return self.declared_parity
        if not self._parity_cache:
            self._parity_cache.append(detect_parity(self))
        return self._parity_cache[0]

    @property
    def consts(self) -> "StructuralConstants":
        return structural_constants(self)

    def scaled(self, factor: complex) -> "SeriesFunction":
        """``factor * f``; every coefficient scales linearly."""
        factor = complex(factor)
        cf, cpf = self.closed_f, self.closed_pf
        return SeriesFunction.from_p(
            lambda n: factor * self.p(n), self.r_f, parity=self.declared_parity,
            closed_f=None if cf is None else (lambda t: factor * cf(t)),
            closed_pf=None if cpf is None else (lambda t: factor * cpf(t)),
            name=f"{factor}*{self.name}")


def _check_radius(r_f) -> float:
    r = float(r_f)
    if not math.isfinite(r) or r < 0:
        raise DomainError(f"r_f must be finite and non-negative, got {r_f}")
    return r


@dataclass(frozen=True)
class StructuralConstants:
    r_f: float
    n_f: int
    m_f: int


def structural_constants(f: SeriesFunction) -> StructuralConstants:
    """``n_f = floor(r_f) + 1`` and ``m_f = floor(r_f / 2pi) + 1``."""
    r = f.r_f
    return StructuralConstants(r, math.floor(r) + 1, math.floor(r / (2 * math.pi)) + 1)


def c_polynomial(f: SeriesFunction, n: int) -> Polynomial:
    """``C_{f,n}(x) = sum_k binom(n, k) C_{f,k} x^{n-k}`` (ascending coefficients)."""
    if n < 0:
        raise DomainError("n must be non-negative")
    c = f.c_list(n)
    return Polynomial([math.comb(n, j) * c[n - j] for j in range(n + 1)])


def alpha_transform(f: SeriesFunction, alpha) -> SeriesFunction:
    """``f_(alpha)(t) = t p_f(alpha t) / (e^t - 1)``: ``P'_n = alpha^n P_n``.

    ``alpha = -1`` gives ``e^{-t} f(-t)``.  Real or imaginary ``alpha`` keep
    the parity tag of ``f``.
    """
    alpha = complex(alpha)
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    sign = int(alpha.real) if alpha in (1, -1) else None

    def coeff(n: int):
        if sign is None:
            return alpha ** n * f.p(n)
        # keep exact rational coefficients exact under t -> -t
        v = f._p.upto(n)[n]
        return v if sign == 1 or n % 2 == 0 else -v

    cpf = f.closed_pf
    closed_pf = None if cpf is None else (lambda t: cpf(alpha * complex(t)))
    closed_f = None if cpf is None else (lambda t: _from_modulator(complex(t), closed_pf))
    return SeriesFunction.from_p(coeff, abs(alpha) * f.r_f, parity=f.declared_parity,
                                 closed_f=closed_f, closed_pf=closed_pf,
                                 name=f"{f.name}_({alpha:g})")


def underline(f: SeriesFunction) -> SeriesFunction:
    """``e^{-t} f(-t)``, i.e. the alpha-transform with ``alpha = -1``."""
    return alpha_transform(f, -1)


def detect_parity(f: SeriesFunction, depth: int = PARITY_DEPTH, tol: float = PARITY_TOL) -> Parity:
    """Classify ``p_f`` from ``P_0..P_depth`` against ``tol`` times the largest one."""
    if depth < 8:
        raise DomainError("parity detection needs depth >= 8")
    mags = [abs(v) for v in f.p_list(depth)]
    peak = max(mags)
    limit = tol * peak
    if all(m <= limit for m in mags[1::2]):
        return Parity.EVEN
    if all(m <= limit for m in mags[0::2]):
        return Parity.ODD
    return Parity.NONE


def expm1_complex(z: complex) -> complex:
    """``e^z - 1`` without cancellation for small ``|z|``."""
    z = complex(z)
    x, y = z.real, z.imag
    if y == 0:
        return complex(math.expm1(x))
    re = math.expm1(x) * math.cos(y) - 2 * math.sin(y / 2) ** 2
    im = math.exp(x) * math.sin(y)
    return complex(re, im)


def _from_modulator(t: complex, pf: Callable[[complex], complex]) -> complex:
    if t == 0:
        return complex(pf(0j))
    return t * complex(pf(t)) / expm1_complex(t)


def eval_modulator(f: SeriesFunction, t, tol: float = 1e-16) -> complex:
    """``p_f(t)``: closed form when available, else ``sum P_n t^n / n!``."""
    t = complex(t)
    if f.closed_pf is not None:
        return complex(f.closed_pf(t))
    scale = abs(t) * max(f.r_f, 1.0)
    min_terms = min(int(2 * scale) + 16, max_depth() - 2)
    cap = max_depth()
    total = 0j
    weight = 1 + 0j  # t^n / n!
    small_run = 0
    coeffs: list[complex] = []
    for n in range(cap):
        if n >= len(coeffs):
            coeffs = f.p_list(min(cap - 1, max(2 * n, min_terms + 16)))
        if n:
            weight *= t / n
        # zero coefficients contribute nothing even once t^n / n! overflows
        term = coeffs[n] * weight if coeffs[n] != 0 else 0j
        total += term
        if abs(term) <= tol * max(abs(total), 1e-300):
            small_run += 1
            if small_run >= 2 and n >= min_terms:
                return total
        else:
            small_run = 0
    raise AccuracyError(f"modulator series did not settle within {cap} terms at t={t}", total)


def eval_f(f: SeriesFunction, t, tol: float = 1e-16) -> complex:
    """``f(t)`` via a closed form or ``t p_f(t) / (e^t - 1)``."""
    t = complex(t)
    if f.closed_f is not None:
        return complex(f.closed_f(t))
    return _from_modulator(t, lambda u: eval_modulator(f, u, tol))
