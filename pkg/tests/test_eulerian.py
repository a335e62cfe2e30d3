import itertools
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from lcfn import DomainError, RangeError, cot_derivative, eulerian_number, eulerian_polynomial, k_function
from lcfn import partial_fraction_sum


def descents(n):
    counts = [0] * max(n, 1)
    for perm in itertools.permutations(range(n)):
        counts[sum(perm[i] > perm[i + 1] for i in range(n - 1))] += 1
    return counts


@pytest.mark.parametrize("n", range(1, 9))
def test_rows_match_descent_counts(n):
    assert list(eulerian_polynomial(n).coeffs) == descents(n)


@given(st.integers(1, 30))
def test_row_sum_and_symmetry(n):
    row = eulerian_polynomial(n).coeffs
    assert sum(row) == math.factorial(n)
    assert row == row[::-1]


@given(st.integers(1, 29), st.integers(0, 28))
def test_recurrence(n, k):
    if k >= n:
        return
    # A(n+1, k) = (k+1) A(n, k) + (n+1-k) A(n, k-1)
    prev = eulerian_number(n, k - 1) if k else 0
    assert eulerian_number(n + 1, k) == (k + 1) * eulerian_number(n, k) + (n + 1 - k) * prev


def test_row_window():
    with pytest.raises(RangeError):
        eulerian_polynomial(31)
    assert eulerian_polynomial(0).coeffs == (1,)


@pytest.mark.parametrize("m", [1, 2, 3, 5])
@pytest.mark.parametrize("z", [-0.7, -1.3 + 0.4j, -0.05 + 2j, -2.5 - 1j])
def test_k_function_is_polylog(m, z):
    # K_m(z) = (2i)^m Li_{1-m}(e^{2z}) for Re z < 0; K_m(-z) = (-1)^m K_m(z)
    want = complex((2j) ** m * mpmath.polylog(1 - m, mpmath.exp(2 * z)))
    assert k_function(m, z) == pytest.approx(want, rel=1e-12)
    assert k_function(m, -z) == pytest.approx((-1) ** m * want, rel=1e-12)


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("w", [0.25, 0.3, 0.61, 0.3 + 0.2j])
def test_cot_derivative_vs_mpmath(p, w):
    want = complex(mpmath.diff(mpmath.cot, mpmath.pi * w, p))
    assert cot_derivative(p, w, "K") == pytest.approx(want, rel=1e-11)
    assert cot_derivative(p, w, "trig") == pytest.approx(want, rel=1e-11)


def test_cot_pole():
    with pytest.raises(DomainError):
        cot_derivative(1, 2.0)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_partial_fractions(p):
    w = 0.3
    r = partial_fraction_sum(p, w, 2000)
    # sum over all integers n of 1/(w+n)^p equals (-1)^{p-1} pi^p cot^{(p-1)}(pi w)/(p-1)!
    want = complex(mpmath.nsum(lambda n: 1 / (w + n) ** p, [-mpmath.inf, mpmath.inf]))
    assert abs(r.value - want) < 1e-9
    assert r.err_est < 1e-6
