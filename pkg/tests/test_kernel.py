from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfeq import linalg
from hopfeq.kernel import GF, QQ, LinComb, Residue, Verdict, Witness, format_scalar, parse_scalar

PRIMES = [2, 3, 5, 7]


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_prime_field_ring_axioms(p, a, b, c):
    F = GF(p)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + F.zero == x and x * F.one == x
    assert x - x == F.zero


@given(st.sampled_from(PRIMES), st.integers(min_value=1))
def test_prime_field_inverse(p, a):
    F = GF(p)
    x = F(a)
    if x:
        assert x * x.inverse() == F.one
        assert F.one / x == x.inverse()
    else:
        with pytest.raises(ZeroDivisionError):
            x.inverse()


def test_mixing_fields_is_rejected():
    with pytest.raises(ValueError):
        GF(2)(1) + GF(3)(1)
    with pytest.raises(TypeError):
        QQ(GF(2)(1))


def test_gf_needs_a_prime():
    with pytest.raises(ValueError):
        GF(4)


@pytest.mark.parametrize(
    "field,text,value",
    [(QQ, "3/4", Fraction(3, 4)), (QQ, "-2", Fraction(-2)), (GF(5), "4", Residue(4, 5))],
)
def test_parse_scalar(field, text, value):
    assert parse_scalar(field, text) == value


@pytest.mark.parametrize("field,text", [(QQ, "1/0"), (QQ, "x"), (GF(3), "1/2"), (GF(3), "3")])
def test_parse_scalar_rejects(field, text):
    with pytest.raises(ValueError):
        parse_scalar(field, text)


def test_format_scalar():
    assert format_scalar(Fraction(-3, 2)) == "-3/2"
    assert format_scalar(Fraction(4)) == "4"
    assert format_scalar(GF(7)(-1)) == "6"


def test_lincomb_drops_zero_terms():
    a = LinComb(QQ, {"x": 1, "y": 0})
    assert dict(a.items()) == {"x": 1}
    assert (a - a).is_zero()
    assert a - a == 0


@given(st.dictionaries(st.sampled_from("abcd"), st.integers(-3, 3)), st.dictionaries(st.sampled_from("abcd"), st.integers(-3, 3)))
def test_lincomb_addition_is_commutative(d1, d2):
    a, b = LinComb(QQ, d1), LinComb(QQ, d2)
    assert a + b == b + a
    assert (a + b) - b == a


def test_lincomb_map_keys_merges():
    a = LinComb(GF(2), {("x", 1): 1, ("x", 2): 1})
    assert a.map_keys(lambda k: k[0]).is_zero()


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict("fail")
    with pytest.raises(ValueError):
        Verdict("pass", (Witness("here", 1, 2),))
    w = Witness("here", 1, 2)
    fail = Verdict("fail", (w,))
    unsure = Verdict("inconclusive")
    assert Verdict.combine([Verdict.ok(), unsure]).status == "inconclusive"
    assert Verdict.combine([unsure, fail]).status == "fail"
    assert Verdict.combine([fail, fail]).witnesses == (w, w)
    assert str(w) == "here: expected 1, actual 2"


@st.composite
def square_matrices(draw, p=5, size=3):
    return [[draw(st.integers(0, p - 1)) for _ in range(size)] for _ in range(size)]


@given(square_matrices())
def test_rank_nullity(m):
    F = GF(5)
    m = [[F(c) for c in row] for row in m]
    null = linalg.nullspace(m, F)
    assert linalg.rank(m, F) + len(null) == 3
    for v in null:
        assert all(sum((a * b for a, b in zip(row, v)), F.zero) == 0 for row in m)


@given(square_matrices())
def test_inverse_or_singular(m):
    F = GF(5)
    m = [[F(c) for c in row] for row in m]
    if linalg.rank(m, F) == 3:
        assert linalg.matmul(m, linalg.inverse(m, F), F) == linalg.identity(F, 3)
    else:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.inverse(m, F)


def test_solve_over_rationals():
    a = [[QQ(2), QQ(1)], [QQ(1), QQ(3)]]
    assert linalg.solve(a, [QQ(3), QQ(5)], QQ) == [Fraction(4, 5), Fraction(7, 5)]
    assert linalg.solve([[QQ(1), QQ(1)], [QQ(2), QQ(2)]], [QQ(1), QQ(3)], QQ) is None
