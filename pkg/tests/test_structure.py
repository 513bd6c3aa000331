import math

import pytest
from hypothesis import given, strategies as st

from pqosc import (
    ArikCoon,
    ArikCoonGeneralized,
    BMSymmetricGeneralized,
    BiedenharnMacfarlane,
    DegenerateDenominatorError,
    ExponentOverflowError,
    GeneralPQ,
    StandardQM,
    TwoParameter,
    TwoParameterSymmetricGeneralized,
    dual,
    f_general,
    f_scheme,
    pq_sum_oracle,
    validate,
)

P_GRID = (0.5, 1.5, 2.0)
Q_GRID = (0.3, 0.9, 3.0)


def test_f_general_frozen_values(base_params):
    assert f_general(0, base_params) == pytest.approx(0.0, abs=1e-15)
    assert f_general(1, base_params) == pytest.approx(1.0, rel=1e-14)
    # expected values frozen from the summation oracle
    assert f_general(2, base_params) == pytest.approx(3.5, rel=1e-14)
    assert f_general(3, base_params) == pytest.approx(10.75, rel=1e-14)
    assert f_general(4, base_params) == pytest.approx(32.375, rel=1e-14)


def test_oracle_values():
    assert pq_sum_oracle(0, 2, 3) == 0.0
    assert pq_sum_oracle(2, 2, 3) == pytest.approx(3.5, rel=1e-15)
    assert pq_sum_oracle(3, 2, 3) == pytest.approx(10.75, rel=1e-15)
    assert pq_sum_oracle(4, 2, 3) == pytest.approx(32.375, rel=1e-15)
    assert pq_sum_oracle(5, 1, 1) == 5.0


def test_oracle_rejects_negative_n():
    with pytest.raises(ValueError):
        pq_sum_oracle(-1, 2, 3)


@pytest.mark.parametrize("p", P_GRID)
@pytest.mark.parametrize("q", Q_GRID)
def test_oracle_equivalence_on_grid(p, q):
    if abs(p * q - 1) < 1e-9:
        pytest.skip("degenerate point")
    params = validate(p, q, 1, 0, 1)
    for n in range(26):
        want = pq_sum_oracle(n, p, q)
        got = f_general(n, params)
        assert abs(got - want) <= 1e-10 * (1 + abs(want))


def test_scheme_values():
    assert f_scheme(StandardQM(), 4) == 2.0
    assert f_scheme(ArikCoon(0.5), 3) == pytest.approx(1.75, rel=1e-15)
    assert f_scheme(BiedenharnMacfarlane(2.0), 2) == pytest.approx(2.5, rel=1e-15)
    # generalized Arik-Coon: q^(alpha n + beta) * (1 - q^n) / (1 - q)
    got = f_scheme(ArikCoonGeneralized(0.5, 2.0, 1.0), 3)
    assert got == pytest.approx(0.5 ** 7 * 1.75, rel=1e-14)
    # symmetric generalized bracket at alpha*n + beta = 2
    got = f_scheme(BMSymmetricGeneralized(2.0, 0.5, 1.0), 2)
    assert got == pytest.approx(2.5, rel=1e-14)


def test_two_parameter_matches_general_at_unit_slope():
    for p in P_GRID:
        for q in Q_GRID:
            params = validate(p, q, 1, 0, 1)
            for n in (-2.0, 0.0, 1.0, 2.5, 7.0):
                a = f_scheme(TwoParameter(p, q, 1.0), n)
                b = f_general(n, params)
                assert abs(a - b) <= 1e-14 * (1 + abs(b))


def test_general_schemes_delegate(base_params):
    n = 2.75
    want = f_general(n, base_params)
    assert f_scheme(GeneralPQ(base_params), n) == want
    assert f_scheme(
        TwoParameterSymmetricGeneralized(2.0, 3.0, 1.0, 0.0, 1.0), n
    ) == pytest.approx(want, rel=1e-15)


def test_scheme_guards():
    with pytest.raises(DegenerateDenominatorError):
        ArikCoon(1.0)
    with pytest.raises(DegenerateDenominatorError):
        BiedenharnMacfarlane(1.0)
    with pytest.raises(DegenerateDenominatorError):
        TwoParameter(2.0, 0.5, 1.0)


def test_overflow_reported(base_params):
    with pytest.raises(ExponentOverflowError):
        f_general(1000, base_params)


def test_zero_locus():
    params = validate(2, 3, 0.7, 0.3, 1)
    x0 = -params.beta / params.alpha
    lp, lq = math.log(2), math.log(3)
    den = abs(math.exp(-lp) - math.exp(lq))
    x = params.alpha * x0 + params.beta
    scale = (math.exp(-x * lp) + math.exp(x * lq)) / den
    assert abs(f_general(x0, params)) <= 1e-14 * scale


@given(
    p=st.floats(0.1, 10.0),
    q=st.floats(0.1, 10.0),
    alpha=st.floats(-2, 2),
    beta=st.floats(-1, 1),
    l=st.floats(0.25, 2),
)
def test_duality_invariance(p, q, alpha, beta, l):
    if abs(l * math.log(p * q)) <= 1e-6:
        return
    params = validate(p, q, alpha, beta, l)
    other = dual(params)
    for i in range(-20, 21):
        n = 0.5 * i
        a = f_general(n, params)
        b = f_general(n, other)
        assert abs(a - b) <= 1e-12 * (1 + abs(a))
