"""Registry of identity checks driven by ``lcfn verify``.

Each check computes two independently obtained values and compares them
against a tolerance, either absolutely or relative to the right-hand side.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import dirichlet as dch
from . import eulerian as eul
from .lc_fc import (
    fc_at_positive_int,
    fc_left_halfplane,
    functional_equation_sides,
    lc_at_nonpositive_int,
    lc_integral,
    lc_series,
)
from .numerics import hurwitz_zeta, zeta_even
from .quadrature import integrate_halfline
from .worked_examples import (
    ExampleKind,
    example_evaluator,
    example_l,
    integral_cos_closed,
    integral_sinh_closed,
    l_even_closed,
    l_odd_closed,
)

SUITES = ("all", "lc", "eulerian", "dirichlet", "examples")


@dataclass(frozen=True)
class Check:
    check_id: str
    suite: str
    compute: Callable[[], tuple[complex, complex]]
    tolerance: float
    relative: bool = False


@dataclass(frozen=True)
class VerifyReport:
    check_id: str
    lhs: complex
    rhs: complex
    residual: float
    tolerance: float
    passed: bool
    runtime_ms: int


def _cos(w):
    return example_evaluator(ExampleKind("CosEven", w))


def _sinh(w):
    return example_evaluator(ExampleKind("SinhOdd", w))


def _beta():
    return example_evaluator(ExampleKind("Beta"))


def _brute_descents(n: int) -> list[int]:
    counts = [0] * max(n, 1)
    for perm in itertools.permutations(range(n)):
        counts[sum(perm[i] > perm[i + 1] for i in range(n - 1))] += 1
    return counts


def _central_difference(func, x: float, order: int, h: float) -> float:
    """``order``-th derivative by a 6th-order accurate central stencil."""
    # stencils from Fornberg's tables, accuracy O(h^6)
    stencils = {
        1: [(-3, -1 / 60), (-2, 3 / 20), (-1, -3 / 4), (1, 3 / 4), (2, -3 / 20), (3, 1 / 60)],
        2: [(-3, 1 / 90), (-2, -3 / 20), (-1, 3 / 2), (0, -49 / 18), (1, 3 / 2), (2, -3 / 20), (3, 1 / 90)],
        3: [(-4, -7 / 240), (-3, 3 / 10), (-2, -169 / 120), (-1, 61 / 30), (1, -61 / 30), (2, 169 / 120),
            (3, -3 / 10), (4, 7 / 240)],
        4: [(-4, 7 / 240), (-3, -2 / 5), (-2, 169 / 60), (-1, -122 / 15), (0, 91 / 8), (1, -122 / 15),
            (2, 169 / 60), (3, -2 / 5), (4, 7 / 240)],
    }
    return sum(c * func(x + k * h) for k, c in stencils[order]) / h ** order


def cot_finite_difference(p: int, w: float, h: float = 1e-2) -> float:
    """``cot^{(p)}(pi w)`` from finite differences of ``cot`` in its argument."""
    return _central_difference(lambda x: 1 / math.tan(x), math.pi * w, p, h)


def _registry() -> list[Check]:
    checks: list[Check] = []
    add = checks.append

    # examples --------------------------------------------------------------
    for w in (0.1, 0.25, 0.5, 0.9):
        add(Check(f"l0-cos-w{w}", "examples",
                  lambda w=w: (lc_at_nonpositive_int(_cos(w), 0), -0.5), 1e-12))
    half = 0.5
    add(Check("l1-sinh-w0.5-series-vs-closed", "examples",
              lambda: (lc_series(_sinh(half), 1).value, l_odd_closed(0, half)), 1e-8))
    add(Check("l1-sinh-w0.5-series-vs-integral", "examples",
              lambda: (lc_series(_sinh(half), 1).value,
                       -integrate_halfline(lambda t: np.sinh(t / 2), 1.0).value), 1e-8))
    add(Check("l1-sinh-w0.5-closed-vs-integral", "examples",
              lambda: (l_odd_closed(0, half), lc_integral(_sinh(half), 1).value), 1e-8))
    for p, w in itertools.product((1, 2, 3), (0.3, 0.75)):
        add(Check(f"int-cos-p{p}-w{w}", "examples",
                  lambda p=p, w=w: (integrate_halfline(lambda t: np.cos(w * t), 2 * p).value,
                                    integral_cos_closed(p, w)), 1e-8, relative=True))
    for p in (1, 2, 3):
        add(Check(f"int-cos-limit-p{p}-w0", "examples",
                  lambda p=p: (integral_cos_closed(p, 0), math.factorial(2 * p - 1) * zeta_even(p)), 1e-12,
                  relative=True))
    add(Check("l-even-limit-p1-w0.001", "examples",
              lambda: (l_even_closed(1, 1e-3), zeta_even(1)), 1e-4))
    for p, w in itertools.product((1, 2), (0.25, 0.6)):
        add(Check(f"int-sinh-p{p}-w{w}", "examples",
                  lambda p=p, w=w: (integrate_halfline(lambda t: np.sinh(w * t), 2 * p + 1).value,
                                    integral_sinh_closed(p, w)), 1e-8, relative=True))
    for p in (1, 2):
        add(Check(f"hurwitz-pair-p{p}-w0.3", "examples",
                  lambda p=p: (math.pi ** (2 * p) * eul.k_function(2 * p, math.pi * 0.3) / math.factorial(2 * p - 1),
                               (0.3j) ** (-2 * p) + hurwitz_zeta(2 * p, 1 + 0.3j).value
                               + hurwitz_zeta(2 * p, 1 - 0.3j).value), 1e-8))
    for p, w in itertools.product((1, 2), (0.1, 0.25, 0.5, 0.9)):
        add(Check(f"series-closed-even-p{p}-w{w}", "examples",
                  lambda p=p, w=w: (lc_series(_cos(w), 2 * p).value, l_even_closed(p, w)), 1e-8))
    for w in (0.25, 0.5, 0.75):
        add(Check(f"series-closed-odd-s1-w{w}", "examples",
                  lambda w=w: (lc_series(_sinh(w), 1).value, l_odd_closed(0, w)), 1e-8))
    add(Check("euler-cot-w0.3", "examples",
              lambda: (2 * lc_series(_sinh(0.3), 1).value + 1 / 0.3,
                       eul.partial_fraction_sum(1, 0.3, 100_000).value), 1e-6))
    add(Check("sinh-s0.5-series-vs-hurwitz", "examples",
              lambda: (lc_series(_sinh(0.5), 0.5).value, example_l(ExampleKind("SinhOdd", 0.5), 0.5).value),
              1e-10))
    add(Check("beta-s1.05-series-vs-hurwitz", "examples",
              lambda: (lc_series(_beta(), 1.05).value, hurwitz_zeta(1.05, 1).value), 1e-7))

    # lc --------------------------------------------------------------------
    for s in (2, 4):
        add(Check(f"fe-cos-w0.25-s{s}", "lc",
                  lambda s=s: _sides(functional_equation_sides(_cos(0.25), s)), 1e-9))
    for s in (1, 3):
        add(Check(f"fe-sinh-w0.5-s{s}", "lc",
                  lambda s=s: _sides(functional_equation_sides(_sinh(0.5), s)), 1e-9))
    for label, s in (("2.5", 2.5), ("3.7", 3.7), ("2+1.3i", 2 + 1.3j)):
        add(Check(f"riemann-functional-eq-s{label}", "lc",
                  lambda s=s: _sides(functional_equation_sides(_beta(), s)), 1e-8))
    for p in (1, 2, 3):
        add(Check(f"fc-beta-euler-p{p}", "lc",
                  lambda p=p: (fc_at_positive_int(_beta(), 2 * p), zeta_even(p)), 1e-12, relative=True))
    add(Check("fc-beta-left-s-1.5", "lc",
              lambda: (fc_left_halfplane(_beta(), -1.5).value, hurwitz_zeta(-1.5, 1).value), 1e-8))
    for name, make in (("beta", _beta), ("cos-w0.3", lambda: _cos(0.3)), ("sinh-w0.6", lambda: _sinh(0.6))):
        for s in (1.5, 2.5 + 0.7j, 3.5):
            add(Check(f"series-vs-integral-{name}-s{s}", "lc",
                      lambda make=make, s=s: (lc_series(make(), s).value, lc_integral(make(), s).value), 1e-10))
    for p in (0, 3, 7):
        add(Check(f"nonpositive-forms-cos-w0.4-p{p}", "lc",
                  lambda p=p: (lc_at_nonpositive_int(_cos(0.4), p),
                               lc_at_nonpositive_int(_cos(0.4), p, form="underline")), 1e-12))
        add(Check(f"nonpositive-vs-hurwitz-sinh-w0.4-p{p}", "lc",
                  lambda p=p: (lc_at_nonpositive_int(_sinh(0.4), p),
                               example_l(ExampleKind("SinhOdd", 0.4), -p).value), 1e-9))

    # eulerian --------------------------------------------------------------
    for n in range(1, 9):
        add(Check(f"eulerian-row{n}-descents", "eulerian",
                  lambda n=n: (eul.eulerian_polynomial(n)(2), sum(c * 2 ** k for k, c in enumerate(_brute_descents(n)))),
                  0.0))
        add(Check(f"eulerian-row{n}-sum", "eulerian",
                  lambda n=n: (sum(eul.eulerian_polynomial(n).coeffs), math.factorial(n)), 0.0))
        add(Check(f"eulerian-row{n}-palindrome", "eulerian",
                  lambda n=n: _palindrome_gap(eul.eulerian_polynomial(n).coeffs), 0.0))
    for p, w in itertools.product((1, 2, 3), (0.25, 0.3)):
        add(Check(f"cot-K-vs-trig-p{p}-w{w}", "eulerian",
                  lambda p=p, w=w: (eul.cot_derivative(p, w, "K"), eul.cot_derivative(p, w, "trig")), 1e-12))
        add(Check(f"cot-K-vs-fd-p{p}-w{w}", "eulerian",
                  lambda p=p, w=w: (eul.cot_derivative(p, w, "K"), cot_finite_difference(p, w)), 1e-5))
    for p in (2, 3):
        add(Check(f"unified-pf-p{p}-w0.3", "eulerian",
                  lambda p=p: ((-math.pi) ** p * eul.k_function(p, 1j * math.pi * 0.3) / math.factorial(p - 1),
                               eul.partial_fraction_sum(p, 0.3, 100_000).value), 1e-6))

    # dirichlet -------------------------------------------------------------
    chi4 = lambda: dch.character(4, 1)  # noqa: E731
    add(Check("l1-chi4-series-vs-cot", "dirichlet",
              lambda: (dch.l_series(1, chi4()).value, dch.l_value_cot(1, chi4())), 1e-10))
    add(Check("l1-chi4-series-vs-alkan", "dirichlet",
              lambda: (dch.l_series(1, chi4()).value, dch.l_value_alkan(1, chi4())), 1e-10))
    add(Check("l1-chi4-cot-vs-alkan", "dirichlet",
              lambda: (dch.l_value_cot(1, chi4()), dch.l_value_alkan(1, chi4())), 1e-10))
    add(Check("l1-chi4-pi-over-4", "dirichlet",
              lambda: (dch.l_series(1, chi4()).value, math.pi / 4), 1e-10))
    add(Check("classical-k2-q5-even", "dirichlet",
              lambda: (dch.l_value_classical(2, legendre5()), dch.l_series(2, legendre5()).value), 1e-8))
    add(Check("classical-k3-q7-odd", "dirichlet",
              lambda: (dch.l_value_classical(3, odd7()), dch.l_series(3, odd7()).value), 1e-8))
    add(Check("dirichlet-fe-q5-s2.3", "dirichlet",
              lambda: _sides(dch.dirichlet_functional_sides(2.3, legendre5())), 1e-8))
    add(Check("dirichlet-fe-q4-s2", "dirichlet",
              lambda: _sides(dch.dirichlet_functional_sides(2, chi4())), 1e-8))
    add(Check("dirichlet-fe-q3-s2.5+0.7i", "dirichlet",
              lambda: _sides(dch.dirichlet_functional_sides(2.5 + 0.7j, dch.character(3, 1))), 1e-8))
    for q in range(3, 51):
        if any(c.primitive for c in dch.characters_mod(q)):
            add(Check(f"gauss-modulus-q{q}", "dirichlet", lambda q=q: _gauss_worst(q), 1e-9))
    add(Check("hurwitz-formula-s2-a0.5", "dirichlet",
              lambda: _sides(dch.hurwitz_formula_sides(2, 0.5)), 1e-10))
    add(Check("hurwitz-formula-s2-a0.5-value", "dirichlet",
              lambda: (dch.hurwitz_formula_sides(2, 0.5).lhs.value, 1 / 24), 1e-10))
    add(Check("hurwitz-formula-s3-a1/3", "dirichlet",
              lambda: _sides(dch.hurwitz_formula_sides(3, 1 / 3)), 1e-9))
    return checks


def legendre5() -> dch.DirichletCharacter:
    return next(c for c in dch.characters_mod(5)
                if c.parity == 1 and not c.principal and all(v.imag == 0 for v in c.values))


def odd7() -> dch.DirichletCharacter:
    return next(c for c in dch.characters_mod(7) if c.parity == -1 and c.primitive)


def _palindrome_gap(coeffs) -> tuple[int, int]:
    return sum(abs(a - b) for a, b in zip(coeffs, reversed(coeffs))), 0


def _sides(sides) -> tuple[complex, complex]:
    return sides.lhs.value, sides.rhs.value


def _gauss_worst(q: int) -> tuple[complex, complex]:
    # worst-case |G(1,chi)|^2 over the primitive characters, against q
    worst = max((abs(dch.gauss_sum(1, c)) ** 2 for c in dch.characters_mod(q) if c.primitive),
                key=lambda v: abs(v - q))
    return worst, q


def registered(suite: str = "all") -> list[Check]:
    if suite not in SUITES:
        raise KeyError(suite)
    return [c for c in _registry() if suite == "all" or c.suite == suite]


def run_check(check: Check, tolerance: float | None = None, timing: bool = True) -> VerifyReport:
    tol = check.tolerance if tolerance is None else tolerance
    start = time.perf_counter()
    lhs, rhs = check.compute()
    elapsed = int(round((time.perf_counter() - start) * 1000)) if timing else 0
    lhs, rhs = complex(lhs), complex(rhs)
    residual = abs(lhs - rhs)
    if check.relative and rhs != 0:
        residual /= abs(rhs)
    passed = bool(residual <= tol)
    return VerifyReport(check.check_id, lhs, rhs, residual, tol, passed, elapsed)


def run_verify(suite: str = "all", tolerance: float | None = None, timing: bool = True) -> list[VerifyReport]:
    """Run every check of ``suite``; reports come back sorted by ``check_id``."""
    reports = [run_check(c, tolerance, timing) for c in registered(suite)]
    return sorted(reports, key=lambda r: r.check_id)
