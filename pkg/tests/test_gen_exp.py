import cmath

import pytest
from hypothesis import given, settings, strategies as st

from lcfn import DomainError, OmegaDomain, SeriesFunction, generalized_pow
from lcfn.errors import AccuracyError
from lcfn.worked_examples import ExampleKind, make_example


def _pow(z, s):
    return cmath.exp(s * cmath.log(z))


def test_beta_reduces_to_plain_power():
    beta = make_example(ExampleKind("Beta"))
    for z, s in ((2.0, 0.5), (3 + 1j, -1.7 + 0.4j), (0.3j, 2.2)):
        assert generalized_pow(z, s, beta).value == pytest.approx(_pow(z, s), rel=1e-15)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(1.2, 6), st.floats(-1.5, 1.5), st.floats(-3, 3), st.floats(-2, 2))
def test_cos_and_sinh_binomial_sums(w, mod, arg, sr, si):
    # cos: (z+iw)^s/2 + (z-iw)^s/2;  sinh: (z+w)^s/2 - (z-w)^s/2
    z = cmath.rect(mod * w, arg)
    s = complex(sr, si)
    cos_f = make_example(ExampleKind("CosEven", w))
    sinh_f = make_example(ExampleKind("SinhOdd", w))
    got_c = generalized_pow(z, s, cos_f)
    want_c = _pow(z, s) * ((1 + 1j * w / z) ** s + (1 - 1j * w / z) ** s) / 2
    got_s = generalized_pow(z, s, sinh_f)
    want_s = _pow(z, s) * ((1 + w / z) ** s - (1 - w / z) ** s) / 2
    scale = abs(_pow(z, s))
    assert abs(got_c.value - want_c) <= 1e-11 * scale + 4 * got_c.err_est
    assert abs(got_s.value - want_s) <= 1e-11 * scale + 4 * got_s.err_est


def test_nonnegative_integer_exponent_is_finite():
    f = SeriesFunction.from_p(lambda n: 2.0 ** n, 2.0)
    r = generalized_pow(5.0, 3, f)
    assert r.method.endswith(":finite")
    # z^3 sum_k binom(3,k) 2^k z^-k = (z+2)^3
    assert r.value == pytest.approx(343)


def test_slow_convergence_tag():
    f = make_example(ExampleKind("SinhOdd", 0.5))
    r = generalized_pow(0.52, 0.5, f)
    assert "slow-convergence" in r.method


def test_domain():
    omega = OmegaDomain(0.5)
    assert 1j in omega and -1 not in omega and 0.3 not in omega
    f = make_example(ExampleKind("SinhOdd", 0.5))
    for z in (-2.0, 0.4, 0.0):
        with pytest.raises(DomainError):
            generalized_pow(z, 0.5, f)


def test_depth_cap_reports_best(monkeypatch):
    monkeypatch.setenv("LCFN_MAX_DEPTH", "16")
    f = make_example(ExampleKind("SinhOdd", 0.9))
    with pytest.raises(AccuracyError) as info:
        generalized_pow(0.95, 0.5, f)
    assert info.value.best is not None
