import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfeq.kernel import GF, QQ
from hopfeq.tensorlab import (
    _candidates,
    batch_component_hopf_mask,
    batch_equation_mask,
    candidate_index,
    check_equation,
    component_check_hopf,
    compose_endo,
    endo_from_function,
    endo_from_matrix,
    identity_endo,
    invert_endo,
    iter_search_masks,
    kron_endo,
    leg_embed,
    search_endos,
    switch_endo,
)

FK = [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def gf2_candidate(index):
    m = _candidates(2, 2, index, index + 1)[0]
    return endo_from_matrix(GF(2), 2, m.tolist())


def test_structure_constant_convention():
    r = endo_from_matrix(QQ, 2, [[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12], [13, 14, 15, 16]])
    # x(u,v,j,i) sits at row (i,j), column (v,u)
    assert r.x(0, 1, 1, 0) == 7
    assert r.apply(1, 0)[(0, 1)] == 7


def test_fk_matrix_verdicts():
    assert check_equation("hopf", endo_from_matrix(GF(2), 2, FK)).passed
    v = check_equation("hopf", endo_from_matrix(QQ, 2, FK))
    assert v.failed and v.witnesses[0].location.startswith("hopf at")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_solves_everything(n):
    for kind in ("hopf", "qybe", "inverse_eq", "commute13"):
        assert check_equation(kind, identity_endo(QQ, n)).passed


def test_switch_solves_qybe_but_not_hopf():
    tau = switch_endo(QQ, 2)
    assert check_equation("hopf", tau).failed
    assert check_equation("qybe", tau).passed


def test_legs_of_identity_are_identity():
    one = identity_endo(GF(3), 2)
    legs = {leg_embed(one, l).matrix for l in ("12", "13", "23")}
    assert len(legs) == 1
    with pytest.raises(ValueError):
        leg_embed(one, "21")


def test_r12_r13_product_for_fk():
    r = endo_from_matrix(GF(2), 2, FK)
    a = leg_embed(r, "12") @ leg_embed(r, "13")
    b = leg_embed(r, "13") @ leg_embed(r, "12")
    assert a.matrix == b.matrix
    assert check_equation("commute13", r).passed


def test_fk_is_an_involution_in_char_2():
    r = endo_from_matrix(GF(2), 2, FK)
    assert invert_endo(r) == r
    assert compose_endo(r, r) == identity_endo(GF(2), 2)


def test_mixed_kind_needs_second_operator():
    with pytest.raises(ValueError):
        check_equation("mixed", identity_endo(QQ, 2))
    with pytest.raises(ValueError):
        check_equation("mixed", identity_endo(QQ, 2), identity_endo(QQ, 3))
    r = endo_from_matrix(GF(2), 2, FK)
    assert check_equation("mixed", r, r).passed


def test_kron_endo_of_projection_solves_hopf():
    # f⊗1 for an idempotent f solves the Hopf equation
    r = kron_endo(QQ, [[1, 3], [0, 0]], [[1, 0], [0, 1]])
    assert check_equation("hopf", r).passed


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**16 - 1))
def test_component_and_operator_checks_agree(index):
    r = gf2_candidate(index)
    assert check_equation("hopf", r).status == component_check_hopf(r).status


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**16 - 1), st.sampled_from(["hopf", "qybe", "inverse_eq", "commute13"]))
def test_batch_mask_matches_exact_check(index, kind):
    mats = _candidates(2, 2, index, index + 1)
    assert bool(batch_equation_mask(2, 2, kind, mats)[0]) == check_equation(kind, gf2_candidate(index)).passed


def test_batch_component_mask_on_fk():
    mats = np.array([FK])
    assert batch_component_hopf_mask(2, 2, mats)[0]


@given(st.integers(0, 2**16 - 1))
def test_candidate_index_round_trip(index):
    assert candidate_index(gf2_candidate(index)) == index


def test_gf3_scalar_solutions():
    found = [r.matrix[0][0] for r in search_endos(GF(3), 1, "hopf")]
    assert [int(c.v) for c in found] == [0, 1]


def test_search_rejects_bad_inputs():
    with pytest.raises(ValueError):
        next(iter_search_masks(QQ, 1, "hopf"))
    with pytest.raises(ValueError):
        next(iter_search_masks(GF(3), 2, "hopf"))  # 3^16 candidates
    with pytest.raises(ValueError):
        next(iter_search_masks(GF(2), 1, "hopf", 2, 1))
    with pytest.raises(ValueError):
        next(iter_search_masks(GF(2), 1, "mixed"))


def test_endo_from_function_matches_matrix():
    r = endo_from_matrix(GF(2), 2, FK)
    assert endo_from_function(GF(2), 2, r.x) == r
