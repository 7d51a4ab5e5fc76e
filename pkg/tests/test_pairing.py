import pytest
from hypothesis import given, settings, strategies as st

from hopfeq.catalog import FK_MATRIX, braided_z2, example, group_algebra, tk_bialgebra
from hopfeq.frt import canonical_comodule
from hopfeq.hopfcore import SubcoalgebraView, check_hopf_module
from hopfeq.kernel import GF, QQ
from hopfeq.pairing import (
    Pairing,
    PairingConvolution,
    PairingError,
    check_braided,
    check_convolution_unit,
    check_dec_identity,
    check_hopf_function,
    check_qybe_from_braided,
    check_well_defined,
    integral_from_sigma,
    integral_round_trip,
    is_right_integral,
    module_from_sigma,
    r_sigma,
    right_integral_space,
    search_hopf_functions,
    sigma_from_integral,
    sigma_from_r,
    sigma_inverse_from_rinv,
)
from hopfeq.tensorlab import endo_from_matrix, identity_endo, switch_endo

FK = example("fk")
SIGMA = FK.sigma("corrected")
VERBATIM = FK.sigma("verbatim")


def test_table_must_cover_every_generator():
    with pytest.raises(ValueError, match="missing"):
        Pairing(FK.subcoalgebra, {("x", "x"): 1})
    with pytest.raises(ValueError, match="not a basis element"):
        SIGMA.with_table({("1", "x"): 1})


def test_unit_rule_and_explicit_unit_entries():
    assert SIGMA.value("y", ()) == 0 and SIGMA.value("x", ()) == 1
    tk = example("tk").sigma()
    assert tk.value("x", ()) == 1


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["x", "y", "z", "t"]), st.lists(st.sampled_from(["x", "y", "z", "t"]), max_size=4))
def test_memo_is_transparent(c, w):
    fresh = Pairing(FK.subcoalgebra, SIGMA.table)
    assert fresh.value(c, w, cache=False) == SIGMA.value(c, w)


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from(["x", "y", "z", "t"]),
    st.lists(st.sampled_from(["x", "y", "z", "t"]), max_size=2),
    st.lists(st.sampled_from(["x", "y", "z", "t"]), max_size=2),
)
def test_sigma_is_multiplicative_in_the_second_slot(c, u, v):
    # σ(c⊗uv) = Σ σ(c1⊗u) σ(c2⊗v)
    expect = sum((s * SIGMA.value(c1, u) * SIGMA.value(c2, v) for c1, c2, s in FK.subcoalgebra.delta[c]), GF(2).zero)
    assert SIGMA.value(c, u + v) == expect


def test_corrected_fk_sigma_is_a_hopf_function():
    assert check_hopf_function(SIGMA).passed
    assert check_hopf_function(SIGMA, "words", 3).passed
    assert check_dec_identity(SIGMA).passed


def test_verbatim_fk_sigma_fails_with_the_documented_witness():
    v = check_hopf_function(VERBATIM)
    assert v.failed
    assert "(H1) c=z h=z: lhs x, rhs t" in [str(w) for w in v.witnesses]
    assert check_well_defined(VERBATIM).failed


def test_fk_sigma_reproduces_the_operator():
    assert r_sigma(SIGMA, FK.comodule) == FK.operator
    act = module_from_sigma(SIGMA, FK.comodule)
    assert act.check().passed
    assert check_hopf_module(FK.bialgebra, act, FK.comodule).passed


def test_fk_sigma_is_its_own_inverse():
    conv = PairingConvolution(SIGMA, SIGMA)
    assert check_convolution_unit(conv, FK.subcoalgebra, 2).passed


def test_sigma_from_r_round_trip():
    s = sigma_from_r(FK.operator)
    assert check_hopf_function(s).passed
    assert r_sigma(s, canonical_comodule(s.host, 2)) == FK.operator


def test_sigma_from_r_of_identity_is_the_counit_pairing():
    s = sigma_from_r(identity_endo(QQ, 2))
    assert all(v == (c[1] == c[2] and h[1] == h[2]) for (c, h), v in s.table.items())


@pytest.mark.parametrize("r", [endo_from_matrix(QQ, 2, FK_MATRIX), switch_endo(QQ, 2)], ids=["F(k) matrix over Q", "switch"])
def test_sigma_from_a_non_solution_does_not_factor(r):
    with pytest.raises(PairingError) as err:
        sigma_from_r(r)
    assert err.value.verdict.witnesses[0].location.startswith("σ(c")


def test_inverse_sigma_for_fk_equals_sigma():
    s = sigma_from_r(FK.operator)
    inv = sigma_inverse_from_rinv(FK.operator, br=s.host)
    assert inv.ok and inv.commute13.passed
    assert inv.pairing.table == s.table


def test_tk_integrals():
    T = tk_bialgebra(QQ)
    space = right_integral_space(T)
    assert len(space) == 2
    assert all(I.values["x"] == 0 for I in space)
    assert all(is_right_integral(T, I).passed for I in space)


@pytest.mark.parametrize("which", [0, 1])
def test_integral_round_trip(which):
    T = tk_bialgebra(QQ)
    I = right_integral_space(T)[which]
    C = SubcoalgebraView(T, ["1", "x"])
    s = integral_round_trip("to_sigma", I, C)
    assert integral_from_sigma(s).values == I.values
    assert check_hopf_function(sigma_from_integral(I, C), axioms=("H1",)).passed
    with pytest.raises(ValueError):
        integral_round_trip("sideways", I)


def test_group_algebra_has_no_hopf_function_on_its_group_likes():
    for p in (2, 3):
        H = group_algebra(2, GF(p))
        for subset in (["e"], ["g"], ["e", "g"]):
            assert search_hopf_functions(H, SubcoalgebraView(H, subset)) == []


def test_tk_search_on_x():
    T = tk_bialgebra(GF(2))
    found = search_hopf_functions(T, SubcoalgebraView(T, ["x"]))
    tables = sorted(tuple(sorted((k, int(v.v)) for k, v in s.table.items())) for s in found)
    # σ(x⊗x) is not forced: both values give a Hopf function
    assert [dict(t)[("x", "x")] for t in tables] == [0, 1]
    assert all(dict(t)[("x", "z")] == 0 for t in tables)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("q", [1, 2])
def test_quantum_plane_hopf_functions_are_exactly_sigma_a(p, q):
    from hopfeq.catalog import quantum_plane

    H = quantum_plane(q, GF(p))
    found = search_hopf_functions(H, SubcoalgebraView(H, ["x"]))
    want = [example("quantum_plane", q=q, a=a, field=GF(p)).sigma().table for a in range(p)]
    assert sorted(map(repr, (s.table for s in found))) == sorted(map(repr, want))


def test_search_needs_a_prime_field():
    T = tk_bialgebra(QQ)
    with pytest.raises(ValueError):
        search_hopf_functions(T, SubcoalgebraView(T, ["x"]))


def test_bicharacter_on_z2_is_braided():
    H, sigma, com = braided_z2(QQ)
    assert check_braided(H, sigma).passed
    assert check_qybe_from_braided(H, sigma, com).passed


def test_hopf_function_is_not_braided():
    H = FK.bialgebra
    table = {(a, b): SIGMA.value_key(a, b) if a != "1" else H.key_counit(b) for a in H.basis for b in H.basis}
    v = check_braided(H, table)
    assert v.failed and v.witnesses[0].location.startswith("(B1)")
