"""Dirichlet characters, Gauss sums and L(s, chi) by several independent routes.

Character values are kept as exponents ``e`` of a root of unity
``exp(2 i pi e / order)`` so that products, conjugates and orthogonality are
exact; the complex table is rendered from those exponents with quarter turns
mapped to exactly ``1, i, -1, -i``.
"""
from __future__ import annotations

import cmath
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import DomainError, RangeError
from .eulerian import cot_derivative
from .numerics import (
    bernoulli_exact,
    bernoulli_polynomial,
    cospi,
    gamma_complex,
    hurwitz_zeta,
    periodic_zeta,
    unimodular_tail,
)
from .numerics_types import EvalResult

EPS = 2.220446049250313e-16
MAX_MODULUS = 10_000
MAX_GEN_BERNOULLI = 40


def _root(e: int, order: int) -> complex:
    frac = Fraction(e % order, order)
    quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if frac in quarter:
        return quarter[frac]
    return cmath.exp(2j * math.pi * float(frac))


def _factor(q: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if q > 1:
        out.append((q, 1))
    return out


def _totient(q: int) -> int:
    result = q
    for p, _ in _factor(q):
        result = result // p * (p - 1)
    return result


def _primitive_root(m: int) -> int:
    """Smallest generator of the cyclic group ``(Z/m)^*`` (``m = p^k``, ``p`` odd)."""
    phi = _totient(m)
    primes = [p for p, _ in _factor(phi)]
    for g in range(2, m):
        if math.gcd(g, m) != 1:
            continue
        if all(pow(g, phi // p, m) != 1 for p in primes):
            return g
    raise RangeError(f"no primitive root mod {m}")


@dataclass(frozen=True)
class _Component:
    """One cyclic factor of the unit group: ``modulus``, generator and order."""

    modulus: int
    generator: int
    order: int
    log: dict  # residue mod ``modulus`` -> discrete log


def _cyclic(modulus: int, generator: int, order: int) -> _Component:
    log = {}
    x = 1
    for j in range(order):
        log.setdefault(x, j)
        x = x * generator % modulus
    return _Component(modulus, generator, order, log)


def _components(q: int) -> list[_Component]:
    comps: list[_Component] = []
    for p, k in _factor(q):
        m = p ** k
        if p == 2:
            if k == 1:
                continue
            if k == 2:
                comps.append(_cyclic(4, 3, 2))
                continue
            # (Z/2^k)^* = <-1> x <5>
            order5 = 2 ** (k - 2)
            minus = {}
            five = {}
            x = 1
            for v in range(order5):
                five[x] = v
                minus[(m - x) % m] = v
                x = x * 5 % m
            comps.append(_Component(m, m - 1, 2, {r: 0 for r in five} | {r: 1 for r in minus}))
            comps.append(_Component(m, 5, order5, five | minus))
        else:
            comps.append(_cyclic(m, _primitive_root(m), m - m // p))
    return comps


@dataclass(frozen=True)
class _Group:
    q: int
    order: int  # common exponent E: every value is exp(2 i pi e / E)
    units: np.ndarray
    logs: np.ndarray  # units x components, discrete logs
    orders: tuple[int, ...]


@lru_cache(maxsize=64)
def _group(q: int) -> _Group:
    comps = _components(q)
    orders = tuple(c.order for c in comps)
    big = math.lcm(*orders) if orders else 1
    units = [a for a in range(q) if math.gcd(a, q) == 1] if q > 1 else [0]
    logs = np.array([[c.log[a % c.modulus] for c in comps] for a in units], dtype=np.int64)
    return _Group(q, big, np.array(units, dtype=np.int64), logs.reshape(len(units), len(comps)), orders)


def _roots(e: np.ndarray, order: int) -> np.ndarray:
    """``exp(2 i pi e / order)`` with quarter turns rendered exactly."""
    e = np.mod(e, order)
    out = np.exp(2j * np.pi * e / order)
    scaled = 4 * e
    exact = scaled % order == 0
    quarter = np.array([1 + 0j, 1j, -1 + 0j, -1j])
    out[exact] = quarter[(scaled[exact] // order) % 4]
    return out


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    """A character mod ``q``; ``exponents[a]`` is ``-1`` off the units."""

    q: int
    order: int
    exponents: np.ndarray = field(repr=False)
    label: tuple[int, ...] = ()

    def __call__(self, a: int) -> complex:
        e = int(self.exponents[a % self.q])
        return 0j if e < 0 else _root(e, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletCharacter) or other.q != self.q:
            return NotImplemented
        mine = np.where(self.exponents < 0, -1, self.exponents * (other.order // math.gcd(self.order, other.order)))
        theirs = np.where(other.exponents < 0, -1, other.exponents * (self.order // math.gcd(self.order, other.order)))
        return bool(np.array_equal(mine, theirs))

    def __hash__(self) -> int:
        return hash((self.q, self.label))

    @cached_property
    def table(self) -> np.ndarray:
        """Values indexed by ``a mod q`` (``table[0] = chi(q)``)."""
        e = self.exponents
        out = _roots(np.where(e < 0, 0, e), self.order)
        out[e < 0] = 0
        return out

    @property
    def values(self) -> list[complex]:
        """``chi(1), ..., chi(q)``."""
        return [complex(v) for v in np.roll(self.table, -1)]

    @property
    def principal(self) -> bool:
        return not bool(np.any(self.exponents > 0))

    @property
    def parity(self) -> int:
        return 1 if int(self.exponents[(self.q - 1) % self.q]) == 0 else -1

    @property
    def delta(self) -> int:
        return 0 if self.parity == 1 else 1

    @cached_property
    def conductor(self) -> int:
        return conductor(self)

    @property
    def primitive(self) -> bool:
        return self.conductor == self.q

    def conj(self) -> "DirichletCharacter":
        e = self.exponents
        return DirichletCharacter(self.q, self.order, np.where(e < 0, e, (-e) % self.order), self.label)

    def to_record(self) -> dict:
        return {
            "q": self.q,
            "conductor": self.conductor,
            "parity": self.parity,
            "values": [[v.real, v.imag] for v in self.values],
        }


class CharacterGroup(Sequence):
    """The ``phi(q)`` characters mod ``q`` ordered by exponent tuples, principal first.

    Characters are built on access, so large moduli stay cheap until used.
    """

    def __init__(self, q: int):
        self.q = q
        self._g = _group(q)
        self._len = math.prod(self._g.orders)

    def __len__(self) -> int:
        return self._len

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(self._len))]
        if index < 0:
            index += self._len
        if not 0 <= index < self._len:
            raise IndexError(index)
        g = self._g
        label = []
        for o in reversed(g.orders):
            index, j = divmod(index, o)
            label.append(j)
        label = tuple(reversed(label))
        weights = np.array([j * (g.order // o) for j, o in zip(label, g.orders)], dtype=np.int64)
        exps = np.full(self.q, -1, dtype=np.int64)
        exps[g.units] = (g.logs @ weights) % g.order if len(weights) else 0
        return DirichletCharacter(self.q, g.order, exps, label)


def characters_mod(q: int) -> CharacterGroup:
    """All characters mod ``q`` (``1 <= q <= 10^4``), principal first."""
    if isinstance(q, bool) or not isinstance(q, int) or not 1 <= q <= MAX_MODULUS:
        raise RangeError(f"modulus must be an integer in 1..{MAX_MODULUS}, got {q!r}")
    return CharacterGroup(q)


def character(q: int, index: int) -> DirichletCharacter:
    chars = characters_mod(q)
    if not 0 <= index < len(chars):
        raise RangeError(f"character index {index} outside 0..{len(chars) - 1} for q={q}")
    return chars[index]


def conductor(chi: DirichletCharacter) -> int:
    """Smallest ``d | q`` with ``chi(a) = 1`` for every unit ``a = 1 mod d``."""
    q = chi.q
    for d in range(1, q + 1):
        if q % d == 0 and not np.any(chi.exponents[np.arange(1, q + 1, d) % q] > 0):
            return d
    return q


def gauss_sum(alpha, chi: DirichletCharacter) -> complex:
    """``G(alpha, chi) = sum_{k=1..q} chi(k) e^{2 i pi k alpha / q}``."""
    q = chi.q
    alpha = complex(alpha)
    k = np.arange(1, q + 1, dtype=np.int64)
    e = chi.exponents[k % q]
    unit = e >= 0
    if alpha.imag == 0 and alpha.real.is_integer():
        # integer alpha: combine both phases as one exact rational turn
        m = int(alpha.real) % q
        turns = e[unit] * q + (k[unit] * m % q) * chi.order
        return complex(_roots(turns, q * chi.order).sum())
    phases = np.exp(2j * np.pi * k[unit] * alpha / q)
    return complex((chi.table[k[unit] % q] * phases).sum())


def _fourier(chi: DirichletCharacter) -> list[complex]:
    """``c_b`` with ``chi(n) = sum_b c_b e^{2 i pi b n / q}``, i.e. ``G(-b, chi)/q``."""
    return [gauss_sum(-b, chi) / chi.q for b in range(chi.q)]


def l_series(s, chi: DirichletCharacter, tol: float = 1e-14) -> EvalResult:
    """``L(s, chi) = sum chi(n) n^-s`` by direct summation with an accelerated tail.

    Past ``N`` the character is expanded in additive characters; each
    ``sum_{n>=N} e^{2 i pi b n/q} n^-s`` goes through the Euler-Boole tail and
    the ``b = 0`` part through Hurwitz zeta.  Non-principal characters have no
    ``b = 0`` part, which is what extends the series to ``Re s > 0``.
    """
    s = complex(s)
    q = chi.q
    principal = chi.principal
    if not (s.real > 1 or (s.real > 0 and not principal)):
        raise DomainError(f"l_series needs Re(s) > 1 (or > 0 for non-principal chi), got s={s}")
    N = max(256, 20 * q)
    n = np.arange(1, N, dtype=float)
    vals = chi.table[np.arange(1, N) % q]
    terms = vals * np.exp(-s * np.log(n))
    head = complex(terms.sum())
    err = 8 * EPS * float(np.abs(terms).sum())
    tail = 0j
    coeffs = _fourier(chi)
    for b, c in enumerate(coeffs):
        if b == 0:
            if principal:
                hz = hurwitz_zeta(s, N)
                tail += c * hz.value
                err += abs(c) * hz.err_est
            continue
        if abs(c) < 1e-15:
            continue
        t, t_err = unimodular_tail(b / q, s, N)
        tail += c * t
        err += abs(c) * (t_err + 8 * EPS * abs(t))
    return EvalResult(head + tail, "direct+fourier-tail", err)


def l_via_hurwitz(s, chi: DirichletCharacter) -> EvalResult:
    """``L(s, chi) = q^-s sum_a chi(a) zeta(s, a/q)``, any ``s != 1``."""
    s = complex(s)
    if s == 1:
        raise DomainError("l_via_hurwitz has no value at s=1")
    q = chi.q
    total = 0j
    err = 0.0
    for a in range(1, q + 1):
        v = chi(a)
        if v == 0:
            continue
        hz = hurwitz_zeta(s, a / q)
        total += v * hz.value
        err += hz.err_est
    scale = cmath.exp(-s * math.log(q))
    return EvalResult(total * scale, "hurwitz-identity", err * abs(scale))


def l_value_cot(k: int, chi: DirichletCharacter) -> complex:
    """``L(k, chi)`` from cotangent values (``k = 1``) or derivatives (``k >= 2``)."""
    q = chi.q
    if k < 1:
        raise DomainError("k must be >= 1")
    if k == 1:
        if q < 2 or chi.parity != -1:
            raise DomainError("k=1 needs an odd character with q >= 2")
        s = sum(chi(a) / math.tan(math.pi * a / q) for a in range(1, q))
        return math.pi / (2 * q) * s
    if q < 3 or chi.parity != (-1) ** k:
        raise DomainError("k >= 2 needs q >= 3 and chi(-1) = (-1)^k")
    s = sum(chi(a) * cot_derivative(k - 1, a / q) for a in range(1, q) if chi(a) != 0)
    return (-1) ** (k - 1) * math.pi ** k / (2 * q ** k * math.factorial(k - 1)) * s


def _prefactor(k: int, denom_power: int, q: int) -> complex:
    return (-1) ** (k + 1) * (1j ** k) * 2 ** (k - 1) * math.pi ** k / (q ** denom_power * math.factorial(k))


def l_value_alkan(k: int, chi: DirichletCharacter) -> complex:
    """Double sum over Bernoulli numbers and Gauss sums ``G(a, chi)``."""
    q = chi.q
    if k < 1:
        raise DomainError("k must be >= 1")
    if q < 2 or chi.parity != (-1) ** k:
        raise DomainError("needs q >= 2 and chi(-1) = (-1)^k")
    gauss = [gauss_sum(a, chi) for a in range(1, q + 1)]
    total = 0j
    for l in range(0, 2 * (k // 2) + 1):
        b = bernoulli_exact(l)
        if b == 0:
            continue
        inner = sum((a / q) ** (k - l) * gauss[a - 1] for a in range(1, q + 1))
        total += math.comb(k, l) * float(b) * inner
    return _prefactor(k, 1, q) * total


def generalized_bernoulli(n: int, chi: DirichletCharacter) -> complex:
    """``B_{n,chi} = q^{n-1} sum_a chi(a) B_n(a/q)``, rational parts summed exactly."""
    if n < 0 or n > MAX_GEN_BERNOULLI:
        raise RangeError(f"generalized Bernoulli index must be in 0..{MAX_GEN_BERNOULLI}")
    q = chi.q
    poly = bernoulli_polynomial(n, exact=True)
    by_exponent: dict[int, Fraction] = {}
    for a in range(1, q + 1):
        e = int(chi.exponents[a % q])
        if e < 0:
            continue
        by_exponent[e] = by_exponent.get(e, Fraction(0)) + poly(Fraction(a, q))
    scale = Fraction(q) ** (n - 1)
    return sum((_root(e, chi.order) * float(v * scale) for e, v in sorted(by_exponent.items())), 0j)


def l_value_classical(k: int, chi: DirichletCharacter, mode: str = "unified") -> complex:
    """``L(k, chi)`` for primitive ``chi`` from ``G(1, chi)`` and ``B_{k, conj chi}``.

    ``mode="exercise"`` evaluates the per-parity forms with
    ``sum_a conj(chi)(a) B_k(a/q)`` instead of the generalised Bernoulli number.
    """
    q = chi.q
    if k < 1:
        raise DomainError("k must be >= 1")
    if q < 2 or not chi.primitive:
        raise DomainError("classical formula needs a primitive character with q >= 2")
    if chi.parity != (-1) ** k:
        raise DomainError("needs chi(-1) = (-1)^k")
    g1 = gauss_sum(1, chi)
    bar = chi.conj()
    if mode == "unified":
        return _prefactor(k, k, q) * g1 * generalized_bernoulli(k, bar)
    if mode != "exercise":
        raise DomainError(f"unknown mode {mode!r}")
    poly = bernoulli_polynomial(k, exact=True)
    inner = sum((bar(a) * float(poly(Fraction(a, q))) for a in range(1, q + 1)), 0j)
    p = k // 2
    if k % 2 == 0:
        coef = (-1) ** (p + 1) * 2 ** (2 * p - 1) * math.pi ** (2 * p) / (q * math.factorial(2 * p))
    else:
        coef = 1j * (-1) ** p * 2 ** (2 * p) * math.pi ** (2 * p + 1) / (q * math.factorial(2 * p + 1))
    return coef * g1 * inner


@dataclass(frozen=True)
class Sides:
    lhs: EvalResult
    rhs: EvalResult

    @property
    def residual(self) -> float:
        return abs(self.lhs.value - self.rhs.value)


def dirichlet_functional_sides(s, chi: DirichletCharacter, tol: float = 1e-14) -> Sides:
    """``L(1-s, chi)`` by the Hurwitz identity against the right-hand side of the
    functional equation built from ``L(s, conj chi)``."""
    s = complex(s)
    q = chi.q
    if q < 2 or not chi.primitive:
        raise DomainError("functional equation needs a primitive character with q > 1")
    lhs = l_via_hurwitz(1 - s, chi)
    bar = chi.conj()
    if s.real > 1 or (s.real > 0 and not bar.principal):
        right_l = l_series(s, bar, tol)
    else:
        right_l = l_via_hurwitz(s, bar)
    delta = chi.delta
    factor = (2 * gamma_complex(s) * cospi((s - delta) / 2) * gauss_sum(1, chi)
              / ((1j ** delta) * cmath.exp(s * math.log(2 * math.pi)) * cmath.exp((1 - s) * math.log(q))))
    rhs = EvalResult(factor * right_l.value, right_l.method, abs(factor) * right_l.err_est)
    return Sides(lhs, rhs)


def dirichlet_functional_residual(s, chi: DirichletCharacter, tol: float = 1e-14) -> float:
    return dirichlet_functional_sides(s, chi, tol).residual


def hurwitz_formula_sides(s, a: float) -> Sides:
    """``zeta(1-s, a)`` by Euler-Maclaurin against the periodic-zeta side, ``Re s > 1``."""
    s = complex(s)
    a = float(a)
    if not 0 < a <= 1:
        raise DomainError("Hurwitz formula needs 0 < a <= 1")
    lhs = hurwitz_zeta(1 - s, a, method="euler-maclaurin")
    plus = periodic_zeta(a, s)
    minus = periodic_zeta(-a, s)
    scale = gamma_complex(s) / cmath.exp(s * math.log(2 * math.pi))
    rot = cmath.exp(-0.5j * math.pi * s)
    value = scale * (rot * plus.value + minus.value / rot)
    err = abs(scale) * (abs(rot) * plus.err_est + minus.err_est / abs(rot))
    return Sides(lhs, EvalResult(value, "periodic-zeta", err))
