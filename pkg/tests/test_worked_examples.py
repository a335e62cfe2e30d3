import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lcfn import (
    DomainError,
    ExampleKind,
    example_l,
    integral_cos_closed,
    integral_sinh_closed,
    l_even_closed,
    l_odd_closed,
    lc_series,
)
from lcfn.worked_examples import NEAR_ZERO, example_evaluator

mpmath.mp.dps = 30


def quad_cos(p, w):
    return complex(mpmath.quad(lambda t: t ** (2 * p - 1) * mpmath.cos(w * t) / mpmath.expm1(t), [0, 1, mpmath.inf]))


def quad_sinh(p, w):
    return complex(mpmath.quad(lambda t: t ** (2 * p) * mpmath.sinh(w * t) / mpmath.expm1(t), [0, 1, mpmath.inf]))


def test_kind_validation():
    with pytest.raises(DomainError):
        ExampleKind("CosEven", 1.0)
    with pytest.raises(DomainError):
        ExampleKind("SinhOdd", 0)
    assert ExampleKind("Beta").w == 0


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("w", [0.01, 0.049, 0.051, 0.3, 0.75, 0.4 + 0.3j])
def test_integral_cos_vs_mpmath(p, w):
    want = quad_cos(p, w)
    assert integral_cos_closed(p, w) == pytest.approx(want, rel=1e-10)


@pytest.mark.parametrize("p", [1, 2])
@pytest.mark.parametrize("w", [0.01, 0.25, 0.6, -0.6, 0.3 - 0.2j])
def test_integral_sinh_vs_mpmath(p, w):
    assert integral_sinh_closed(p, w) == pytest.approx(quad_sinh(p, w), rel=1e-10)


def test_integral_limits():
    for p in (1, 2, 3):
        assert integral_cos_closed(p, 0) == pytest.approx(math.gamma(2 * p) * float(mpmath.zeta(2 * p)), rel=1e-15)
        assert integral_sinh_closed(p, 0) == 0
    with pytest.raises(DomainError):
        integral_cos_closed(1, 2j)
    with pytest.raises(DomainError):
        integral_sinh_closed(1, 1.0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.floats(0.02, 0.95))
def test_l_even_closed_vs_hurwitz(p, w):
    want = complex((mpmath.zeta(2 * p, 1 + 1j * w) + mpmath.zeta(2 * p, 1 - 1j * w)) / 2)
    assert l_even_closed(p, w) == pytest.approx(want, rel=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.floats(0.02, 0.95))
def test_l_odd_closed_vs_hurwitz(p, w):
    s = 2 * p + 1
    if s == 1:
        want = complex((mpmath.digamma(1 - w) - mpmath.digamma(1 + w)) / 2)
    else:
        want = complex((mpmath.zeta(s, 1 + w) - mpmath.zeta(s, 1 - w)) / 2)
    assert l_odd_closed(p, w) == pytest.approx(want, rel=1e-10, abs=1e-14)


@pytest.mark.parametrize("p", [1, 2, 3, 5])
def test_both_sides_of_the_laurent_switch(p):
    for w in (NEAR_ZERO * (1 - 1e-9), NEAR_ZERO * (1 + 1e-9)):
        even = complex((mpmath.zeta(2 * p, 1 + 1j * w) + mpmath.zeta(2 * p, 1 - 1j * w)) / 2)
        odd = complex((mpmath.zeta(2 * p + 1, 1 + w) - mpmath.zeta(2 * p + 1, 1 - w)) / 2)
        assert l_even_closed(p, w) == pytest.approx(even, rel=1e-11)
        assert l_odd_closed(p, w) == pytest.approx(odd, rel=1e-12)


def test_even_closed_at_zero():
    assert l_even_closed(0, 0.4) == -0.5
    assert l_even_closed(2, 0) == pytest.approx(np.pi ** 4 / 90)


@pytest.mark.parametrize("s", [-2.5, 0.5, 3 + 1j])
def test_example_l_continuations(s):
    for tag in ("CosEven", "SinhOdd"):
        kind = ExampleKind(tag, 0.45)
        r = example_l(kind, s)
        if tag == "CosEven":
            want = (mpmath.zeta(s, 1 + 0.45j) + mpmath.zeta(s, 1 - 0.45j)) / 2
        else:
            want = (mpmath.zeta(s, 1.45) - mpmath.zeta(s, 0.55)) / 2
        assert r.value == pytest.approx(complex(want), rel=1e-10)


def test_series_agrees_with_closed_forms():
    ev = example_evaluator(ExampleKind("CosEven", 0.6))
    assert lc_series(ev, 4).value == pytest.approx(l_even_closed(2, 0.6), rel=1e-12)
