import numpy as np
import pytest

from pqosc import (
    NotLowestWeightError,
    apply_word,
    bracket,
    check_relations,
    dual,
    pq_sum_oracle,
    validate,
)
from pqosc.fock import DimensionMismatchError, build, interior_projector

# weight fixture for (p=2, q=3, alpha=1, beta=0, l=1), frozen from the
# summation oracle level by level
WEIGHTS_FIXTURE = [0.0, 1.0, 3.5, 10.75, 32.375]


def test_weights_match_oracle(base_params):
    rep = build(base_params, dim=4)
    assert rep.weights.shape == (5,)
    for k, want in enumerate(WEIGHTS_FIXTURE):
        assert rep.weights[k] == pytest.approx(want, rel=1e-13, abs=1e-15)
        assert pq_sum_oracle(k, 2, 3) == pytest.approx(want, rel=1e-15)


def test_raising_is_transpose(base_params):
    rep = build(base_params, dim=8)
    assert np.array_equal(rep.a_dag, rep.a.T)


def test_nonzero_beta_default_needs_lowest_weight():
    params = validate(2, 3, 1, 0.5, 1)
    assert bracket(0.5, params) == pytest.approx(0.40998, rel=1e-4)
    with pytest.raises(NotLowestWeightError):
        build(params, dim=6)


def test_nonzero_beta_with_explicit_x0():
    params = validate(2, 3, 1, 0.5, 1)
    rep = build(params, dim=6, x0=0.0)
    report = check_relations(rep, "grading", tol=1e-11 * float(rep.weights.max()))
    assert report.passed


def test_grading_relations_close(base_params):
    rep = build(base_params, dim=16)
    maxweight = float(np.max(np.abs(rep.weights)))
    report = check_relations(rep, "grading", tol=1e-11 * maxweight)
    assert report.passed
    assert report.metadata["mode"] == "grading"


def test_literal_equals_grading_at_unit_alpha(base_params):
    rep = build(base_params, dim=16)
    grading = check_relations(rep, "grading", tol=1e-9)
    literal = check_relations(rep, "literal", tol=1e-9)
    for e_g, e_l in zip(grading.entries, literal.entries):
        assert abs(e_g.residual - e_l.residual) <= 1e-10


def test_literal_fails_for_alpha_two():
    params = validate(2, 3, 2, 0, 1)
    rep = build(params, dim=16)
    report = check_relations(rep, "literal", tol=1e-10)
    assert not report.passed
    assert report.max_residual() > 0.1


def test_twisted_commutator_any_twist(base_params):
    rep = build(base_params, dim=12)
    pi = interior_projector(rep.dim, 1)
    for twist in (-1.3, 0.0, 0.7, 2.0):
        lhs = (rep.a @ rep.a_dag - twist * rep.a_dag @ rep.a) @ pi
        want = np.diag(rep.weights[1 : rep.dim + 1] - twist * rep.weights[: rep.dim]) @ pi
        assert np.max(np.abs(lhs - want)) <= 1e-12 * float(np.max(np.abs(rep.weights)))


def test_ladder_products_are_weight_diagonals(base_params):
    rep = build(base_params, dim=10)
    scale = float(np.max(np.abs(rep.weights)))
    assert np.max(np.abs(rep.a_dag @ rep.a - np.diag(rep.weights[: rep.dim]))) <= 1e-13 * scale
    pi = interior_projector(rep.dim, 1)
    lhs = (rep.a @ rep.a_dag) @ pi
    want = np.diag(rep.weights[1 : rep.dim + 1]) @ pi
    assert np.max(np.abs(lhs - want)) <= 1e-13 * scale


def test_weights_dual_invariant():
    for alpha, l in ((1.0, 1.0), (2.0, 0.5), (0.5, 2.0)):
        params = validate(1.7, 0.4, alpha, 0.0, l)
        rep = build(params, dim=12)
        rep_dual = build(dual(params), dim=12)
        assert np.all(
            np.abs(rep.weights - rep_dual.weights) <= 1e-12 * (1 + np.abs(rep.weights))
        )


def test_apply_word(base_params):
    rep = build(base_params, dim=6)
    ground = np.zeros(6)
    ground[0] = 1.0
    assert np.all(apply_word(rep, ["a"], ground) == 0.0)

    mid = np.zeros(6)
    mid[2] = 1.0
    out = apply_word(rep, ["a", "a+"], mid)
    want = np.zeros(6)
    want[2] = rep.weights[3]
    assert np.allclose(out, want, rtol=1e-13)

    out_n = apply_word(rep, ["N"], mid)
    assert out_n[2] == pytest.approx(rep.nu0 + 2 * base_params.l)


def test_apply_word_validates(base_params):
    rep = build(base_params, dim=4)
    with pytest.raises(ValueError):
        apply_word(rep, [], np.zeros(4))
    with pytest.raises(DimensionMismatchError):
        apply_word(rep, ["a"], np.zeros(5))
    with pytest.raises(KeyError):
        apply_word(rep, ["bogus"], np.zeros(4))
