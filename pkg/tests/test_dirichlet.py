import math

import mpmath
import numpy as np
import pytest

from lcfn import (
    DomainError,
    RangeError,
    character,
    characters_mod,
    conductor,
    dirichlet_functional_residual,
    gauss_sum,
    generalized_bernoulli,
    l_series,
    l_value_alkan,
    l_value_classical,
    l_value_cot,
    l_via_hurwitz,
)


def totient(q):
    return sum(math.gcd(a, q) == 1 for a in range(1, q + 1))


def periodic(chi):
    return [chi(a) for a in range(chi.q)]


def dirichlet_oracle(s, chi):
    if s == 1:
        # L(1, chi) = -1/q sum_a chi(a) digamma(a/q) for non-principal chi
        return complex(-sum(chi(a) * mpmath.digamma(mpmath.mpf(a) / chi.q) for a in range(1, chi.q)) / chi.q)
    return complex(mpmath.dirichlet(s, periodic(chi)))


@pytest.mark.parametrize("q", range(1, 51))
def test_group_order_and_orthogonality(q):
    group = characters_mod(q)
    phi = totient(q)
    assert len(group) == phi
    assert group[0].principal
    table = np.array([c.table for c in group])
    gram = table @ table.conj().T
    assert np.allclose(gram, phi * np.eye(phi), atol=1e-9)


@pytest.mark.parametrize("q", range(3, 51))
def test_gauss_sum_modulus(q):
    for chi in characters_mod(q):
        if chi.primitive:
            assert abs(gauss_sum(1, chi)) ** 2 == pytest.approx(q, abs=1e-9)


def test_multiplicative():
    for chi in characters_mod(24):
        for a in range(1, 24):
            for b in range(1, 24):
                assert chi(a * b) == pytest.approx(chi(a) * chi(b), abs=1e-12)


def test_conductors():
    # mod 12 has conductors 1, 3, 4, 12
    assert sorted(conductor(c) for c in characters_mod(12)) == [1, 3, 4, 12]
    assert character(8, 0).conductor == 1


def test_modulus_window():
    with pytest.raises(RangeError):
        characters_mod(10_001)
    assert len(characters_mod(9973)) == 9972


def test_record():
    rec = character(4, 1).to_record()
    assert rec == {"q": 4, "conductor": 4, "parity": -1, "values": [[1, 0], [0, 0], [-1, 0], [0, 0]]}


@pytest.mark.parametrize("q,index", [(4, 1), (5, 1), (5, 2), (7, 3), (12, 3), (9, 2)])
@pytest.mark.parametrize("s", [1, 2, 0.6 + 3j, 1.5])
def test_l_series_vs_mpmath(q, index, s):
    chi = character(q, index)
    if chi.principal:
        return
    r = l_series(s, chi)
    want = dirichlet_oracle(s, chi)
    assert abs(r.value - want) < 1e-10
    assert r.err_est < 1e-8


@pytest.mark.parametrize("s", [-1.5, 0.3, 2.5 - 1j])
def test_l_via_hurwitz(s):
    chi = character(7, 2)
    want = complex(mpmath.dirichlet(s, periodic(chi)))
    assert l_via_hurwitz(s, chi).value == pytest.approx(want, rel=1e-10)


def test_l_one_chi4():
    chi = character(4, 1)
    for value in (l_series(1, chi).value, l_value_cot(1, chi), l_value_alkan(1, chi), l_value_classical(1, chi)):
        assert value == pytest.approx(math.pi / 4, abs=1e-12)


@pytest.mark.parametrize("q", [5, 7, 8, 11, 13])
def test_special_value_formulas(q):
    for chi in characters_mod(q):
        if not chi.primitive or chi.principal:
            continue
        for k in range(1, 5):
            if (k % 2 == 0) != (chi.parity == 1):
                continue
            ref = l_series(k, chi).value
            assert l_value_classical(k, chi) == pytest.approx(ref, rel=1e-10)
            assert l_value_classical(k, chi, mode="exercise") == pytest.approx(ref, rel=1e-10)
            assert l_value_alkan(k, chi) == pytest.approx(ref, rel=1e-10)
            if k == 1:
                assert l_value_cot(k, chi) == pytest.approx(ref, rel=1e-10)


def test_generalized_bernoulli_principal_mod_one():
    chi = character(1, 0)
    for n in range(6):
        want = float(mpmath.bernoulli(n))
        if n == 1:
            want = 0.5  # B_{1, chi_0} with chi_0 = 1 mod 1 uses B_1(1) = +1/2
        assert generalized_bernoulli(n, chi) == pytest.approx(want, abs=1e-14)


def test_generalized_bernoulli_gives_negative_integer_values():
    # L(1-n, chi) = -B_{n,chi}/n
    chi = character(7, 1)
    for n in range(1, 6):
        want = complex(mpmath.dirichlet(1 - n, periodic(chi)))
        assert -generalized_bernoulli(n, chi) / n == pytest.approx(want, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 15])
def test_functional_equation(q):
    for chi in characters_mod(q):
        if chi.primitive:
            assert dirichlet_functional_residual(2.3 + 0.4j, chi) < 1e-9


def test_functional_equation_requires_primitive():
    with pytest.raises(DomainError):
        dirichlet_functional_residual(2, character(9, 0))
