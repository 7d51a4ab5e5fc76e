import pytest
from hypothesis import given, settings, strategies as st

from hopfeq.catalog import fk_bialgebra, group_algebra, q_family, quantum_plane, tk_bialgebra
from hopfeq.hopfcore import (
    AxiomError,
    Comodule,
    SubcoalgebraView,
    check_hopf_module,
    complete_unit_rows,
    make_presented_bialgebra,
    make_table_bialgebra,
    r_from_hopf_module,
    trivial_action,
    trivial_comodule,
)
from hopfeq.kernel import GF, QQ
from hopfeq.tensorlab import check_equation, identity_endo


def elements_of(h, coeffs=st.integers(-2, 2)):
    return st.dictionaries(st.sampled_from(list(h.basis)), coeffs, max_size=len(h.basis)).map(h.element)


TK = tk_bialgebra(QQ)
FK = fk_bialgebra(GF(2))


def test_tk_coproduct():
    assert TK.render_tensor(TK.delta(TK.gen("z"))) == "x⊗z + z⊗1"
    assert TK.check_axioms().passed


def test_fk_is_a_bialgebra_only_in_char_2():
    assert FK.check_axioms().passed
    assert FK.render_tensor(FK.delta(FK.gen("t"))) == "z⊗y + t⊗t"
    with pytest.raises(AxiomError) as err:
        fk_bialgebra(QQ)
    locs = [w.location for w in err.value.verdict.witnesses]
    assert any("associativity" in l for l in locs)
    assert any("Δ multiplicative at (z,y)" in l for l in locs)


@pytest.mark.parametrize("h", [TK, FK], ids=["T(k)", "F(k)"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_delta_and_counit_are_multiplicative(h, data):
    a = data.draw(elements_of(h))
    b = data.draw(elements_of(h))
    assert h.delta(h.mul(a, b)) == h.tensor_mul(h.delta(a), h.delta(b))
    assert h.counit(h.mul(a, b)) == h.counit(a) * h.counit(b)


@pytest.mark.parametrize("h", [TK, FK], ids=["T(k)", "F(k)"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_counit_law(h, data):
    a = data.draw(elements_of(h))
    assert h.counit_tensor(h.delta(a), 0).map_keys(lambda k: k[0]) == a
    assert h.counit_tensor(h.delta(a), 1).map_keys(lambda k: k[0]) == a


def test_table_with_bad_coproduct_is_rejected():
    basis = ["1", "x"]
    mult = complete_unit_rows(basis, {("x", "x"): {"x": 1}})
    with pytest.raises(AxiomError) as err:
        make_table_bialgebra(QQ, basis, "1", mult, {"1": [("1", "1", 1)], "x": [("x", "1", 1)]}, {"1": 1, "x": 1})
    assert err.value.verdict.failed


def test_presented_bialgebras_are_valid():
    assert quantum_plane(2).check_axioms().passed
    for kind in ("bq2", "dq2", "eq2"):
        assert q_family(kind, 1).check_axioms().passed


def test_relation_outside_a_coideal_is_rejected():
    with pytest.raises(AxiomError, match="not coideal-compatible in bad"):
        make_presented_bialgebra(
            QQ, ["x", "y"], lambda x, y: [x * y - y],
            {"x": [("x", "x", 1)], "y": [("y", "1", 1), ("x", "y", 1)]}, {"x": 1, "y": 0}, name="bad",
        )


def test_presented_normal_form():
    qp = quantum_plane(2)
    x, y = qp.gen("x"), qp.gen("y")
    assert qp.equal(qp.mul(x, y), qp.mul(y, x).scale(2))


def test_subcoalgebra_view():
    C = SubcoalgebraView(TK, ["1", "x"])
    assert C.delta["x"] == [("x", "x", 1)]
    assert C.contains_unit() is not None
    with pytest.raises(ValueError, match="escapes the subcoalgebra"):
        SubcoalgebraView(TK, ["z"])


def test_comodule_from_comultiplicative_matrix():
    g = [[FK.gen("x"), FK.gen("y")], [FK.gen("z"), FK.gen("t")]]
    assert Comodule(FK, g).check().passed
    bad = [[FK.gen("x"), FK.gen("z")], [FK.gen("y"), FK.gen("t")]]
    assert Comodule(FK, bad).check().failed


def test_trivial_structures_do_not_form_a_hopf_module():
    # ρ(h·m) = ε(h) m⊗1 but Σ h₁·m ⊗ h₂ = m⊗h
    act, com = trivial_action(TK, 2), trivial_comodule(TK, 2)
    v = check_hopf_module(TK, act, com)
    assert v.failed
    assert str(v.witnesses[0]) == "Hopf module h=x m=m1: lhs m1⊗(1), rhs m1⊗(x)"


def test_trivial_coaction_gives_identity_operator():
    r = r_from_hopf_module(trivial_action(TK, 2), trivial_comodule(TK, 2))
    assert r == identity_endo(QQ, 2)
    assert check_equation("hopf", r).passed


def test_group_algebra_is_group_like():
    h = group_algebra(3, GF(3))
    g = h.gen("g")
    assert h.delta(g) == h.tensor(g, g)
    assert h.word(["g", "g", "g"]) == h.one()
