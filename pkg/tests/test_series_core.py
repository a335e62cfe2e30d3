import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from lcfn import (
    DomainError,
    Parity,
    RangeError,
    SeriesFunction,
    alpha_transform,
    c_from_p,
    c_polynomial,
    detect_parity,
    eval_f,
    eval_modulator,
    p_from_c,
    structural_constants,
    underline,
)
from lcfn.series_core import ExactComplex, max_depth
from lcfn.worked_examples import ExampleKind, make_example

small = st.floats(min_value=-4, max_value=4, allow_nan=False)


def test_beta_c_numbers_are_bernoulli():
    beta = SeriesFunction.from_p([1], 0.0)
    got = beta.c_list(20)
    want = [complex(mpmath.bernoulli(n)) for n in range(21)]
    assert got == pytest.approx(want, abs=1e-15)


def test_exact_round_trip_at_index_40():
    p = [complex((-1) ** n * 0.3 ** n, 0.1 * n) for n in range(41)]
    c = c_from_p(p, 40, exact=True)
    back = p_from_c(c, 40, exact=True)
    assert [complex(z) for z in back] == p


@settings(max_examples=30, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
                min_size=1, max_size=25))
def test_round_trip_is_exact(coeffs):
    n = len(coeffs) - 1
    back = p_from_c(c_from_p(coeffs, n, exact=True), n, exact=True)
    assert [complex(z) for z in back] == [complex(z) for z in coeffs]


def test_exact_complex_values():
    c = c_from_p([1], 2, exact=True)
    assert c[1] == ExactComplex(Fraction(-1, 2), Fraction(0))


def test_cos_stream_matches_taylor_oracle():
    f = make_example(ExampleKind("CosEven", 0.4))
    # C_n = n! [t^n] t cos(wt)/(e^t - 1)
    want = mpmath.taylor(lambda t: t * mpmath.cos(0.4 * t) / mpmath.expm1(t) if t != 0 else 1, 0, 12)
    got = f.c_list(12)
    for n, (g, w) in enumerate(zip(got, want)):
        assert abs(g - complex(w) * math.factorial(n)) < 1e-13


def test_structural_constants():
    f = SeriesFunction.from_p([1], 7.0)
    c = structural_constants(f)
    assert (c.n_f, c.m_f) == (8, 2)
    assert structural_constants(SeriesFunction.from_p([1], 0.0)).n_f == 1


def test_negative_radius_rejected():
    with pytest.raises(DomainError):
        SeriesFunction.from_p([1], -1.0)


@settings(max_examples=25, deadline=None)
@given(small.filter(lambda a: abs(a) > 1e-3), small.filter(lambda b: abs(b) > 1e-3))
def test_alpha_transform_composes(a, b):
    f = make_example(ExampleKind("SinhOdd", 0.5))
    twice = alpha_transform(alpha_transform(f, a), b)
    once = alpha_transform(f, a * b)
    for n in range(12):
        assert twice.p(n) == pytest.approx(once.p(n), rel=1e-12, abs=1e-300)
    assert twice.r_f == pytest.approx(abs(a * b) * f.r_f)


def test_underline_is_reflection():
    f = make_example(ExampleKind("CosEven", 0.6))
    g = underline(f)
    for t in (0.3, -1.1, 0.5 + 0.2j):
        assert eval_f(g, t) == pytest.approx(complex(mpmath.exp(-t)) * eval_f(f, -t), rel=1e-13)


def test_parity_detection():
    assert detect_parity(make_example(ExampleKind("CosEven", 0.3))) is Parity.EVEN
    assert detect_parity(make_example(ExampleKind("SinhOdd", 0.3))) is Parity.ODD
    assert detect_parity(SeriesFunction.from_p([1, 1], 0.0)) is Parity.NONE
    assert SeriesFunction.from_p([0, 2, 0, 3], 0.0).parity is Parity.ODD


def test_modulator_series_matches_closed_form():
    f = make_example(ExampleKind("SinhOdd", 0.7))
    bare = SeriesFunction.from_p(lambda n: 0.7 ** n if n % 2 else 0, 0.7)
    for t in (0.5, 3.0, 2 - 1j):
        assert eval_modulator(bare, t) == pytest.approx(eval_modulator(f, t), rel=1e-13)
        assert eval_f(bare, t) == pytest.approx(eval_f(f, t), rel=1e-13)


def test_c_polynomial_at_zero_is_c_number():
    f = make_example(ExampleKind("CosEven", 0.25))
    for n in range(6):
        assert c_polynomial(f, n)(0) == pytest.approx(f.c(n), abs=1e-15)


def test_c_polynomial_shift_property():
    # C_{f,n}(x+1) - C_{f,n}(x) = n x^{n-1} for the plain Bernoulli seed
    beta = SeriesFunction.from_p([1], 0.0)
    for n in range(1, 8):
        poly = c_polynomial(beta, n)
        for x in (0.0, 1.5, -2.0):
            assert poly(x + 1) - poly(x) == pytest.approx(n * x ** (n - 1), abs=1e-10)


def test_depth_cap_env(monkeypatch):
    monkeypatch.setenv("LCFN_MAX_DEPTH", "40")
    assert max_depth() == 40
    f = SeriesFunction.from_p([1], 0.0)
    with pytest.raises(RangeError):
        f.p_list(50)
    monkeypatch.delenv("LCFN_MAX_DEPTH")
    assert max_depth() == 1024
