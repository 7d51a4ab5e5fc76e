import pytest

from hopfeq.catalog import NAMES, example, fk_discrepancy, left_absorbing, monoid_algebra, verify_example
from hopfeq.formats import parse_field
from hopfeq.kernel import GF
from hopfeq.pairing import check_hopf_function, r_sigma
from hopfeq.tensorlab import check_equation


@pytest.mark.parametrize("name", NAMES)
def test_every_example_verifies(name):
    rep = verify_example(name)
    assert rep.status == "pass", str(rep)
    assert rep.matches_expectations


def test_fk_verbatim_variant_fails_as_expected():
    rep = verify_example("fk", variant="verbatim")
    assert rep.status == "fail"
    assert rep.matches_expectations
    assert "(H1) c=z h=z: lhs x, rhs t" in str(rep)


def test_fk_needs_characteristic_two():
    with pytest.raises(ValueError):
        example("fk", field=GF(3))
    with pytest.raises(ValueError):
        example("fk", variant="other")


def test_discrepancy_is_machine_checked():
    assert fk_discrepancy().passed


@pytest.mark.parametrize("q", [1, 2])
@pytest.mark.parametrize("a", [0, 1, 2])
def test_quantum_plane_sigmas(q, a):
    b = example("quantum_plane", q=q, a=a)
    assert check_hopf_function(b.sigma()).passed


@pytest.mark.parametrize("kind", ["bq2", "dq2", "eq2"])
@pytest.mark.parametrize("q", [0, 1, 2, -1])
def test_q_family_operator(kind, q):
    b = example(kind, q=q)
    assert check_hopf_function(b.sigma()).passed
    assert r_sigma(b.sigma(), b.comodule) == b.operator
    assert check_equation("hopf", b.operator).passed


def test_group_algebra_over_gf3():
    assert verify_example("group_algebra", field=parse_field("GF(3)")).status == "pass"


def test_monoid_absorbing_set():
    assert left_absorbing(monoid_algebra()) == ["c1"]


def test_unknown_example():
    with pytest.raises(ValueError, match="unknown example"):
        example("nope")


def test_report_json_shape():
    data = verify_example("tk").to_json()
    assert data["example"] == "tk" and data["status"] == "pass"
    qt4 = [c for c in data["checks"] if c["check"] == "x⊗1 QT4"][0]
    assert qt4["expected"] == "contrast" and qt4["status"] == "fail"
