"""Hopf elements R = Σ R¹⊗R² ∈ A⊗H and the quasitriangular contrast.

A is a subalgebra given by generators; first-slot entries are supplied as
words in those generators, which certifies membership in A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .hopfcore import Bialgebra, ModuleAction
from .kernel import LinComb, Scalar, Verdict, Witness
from .tensorlab import EndoTensor, endo_from_function


@dataclass(frozen=True)
class TensorElement:
    """Σ s · word(a) ⊗ h with ``a`` a word in the A-generators."""

    host: Bialgebra
    a_generators: tuple[str, ...]
    terms: tuple[tuple[tuple[str, ...], LinComb, Scalar], ...]

    @property
    def tensor(self) -> LinComb:
        h = self.host
        out = LinComb.zero(h.field)
        for w, e, s in self.terms:
            out = out + h.tensor(h.word(w), e).scale(s)
        return out

    def first_slots(self) -> list[LinComb]:
        return [self.host.word(w) for w, _, _ in self.terms]


def tensor_element(
    host: Bialgebra,
    a_generators: Sequence[str],
    terms: Sequence[tuple[Sequence[str], Any, Any]],
) -> TensorElement:
    """Build R from ``(word in A-generators, second slot, coefficient)`` triples.

    The second slot may be a host element or a generator name; "1" is the unit.
    """
    gens = tuple(a_generators)
    out = []
    for w, e, s in terms:
        w = tuple(g for g in w if g != "1")
        for g in w:
            if g not in gens:
                raise ValueError(f"{g!r} is not a generator of A")
        if isinstance(e, str):
            e = host.one() if e == "1" else host.gen(e)
        out.append((w, e, host.field(s)))
    return TensorElement(host, gens, tuple(out))


def _legs(R: TensorElement, legs: str) -> LinComb:
    """R¹², R¹³ or R²³ in H⊗H⊗H."""
    h = R.host
    one = h.one()
    out = LinComb.zero(h.field)
    for w, e, s in R.terms:
        a = h.word(w)
        if legs == "12":
            t = h.tensor(a, e, one)
        elif legs == "13":
            t = h.tensor(a, one, e)
        elif legs == "23":
            t = h.tensor(one, a, e)
        else:
            raise ValueError(legs)
        out = out + t.scale(s)
    return out


def _compare(host: Bialgebra, loc: str, lhs: LinComb, rhs: LinComb, scalar: bool = False) -> Verdict:
    z = host.is_zero(lhs - rhs) if scalar else host.tensor_is_zero(lhs - rhs)
    if z is True:
        return Verdict.ok(loc)
    render = host.render if scalar else host.render_tensor
    w = Witness(loc, render(lhs), render(rhs), ("lhs", "rhs"))
    return Verdict("fail" if z is False else "inconclusive", (w,), loc)


def _delta_first(R: TensorElement, cop: bool = False) -> LinComb:
    h = R.host
    t = h.delta_tensor(R.tensor, 0)
    if cop:
        t = t.map_keys(lambda k: (k[1], k[0]) + k[2:])
    return t


def _counit_first(R: TensorElement) -> LinComb:
    h = R.host
    return h._element(dict(h.counit_tensor(R.tensor, 0).map_keys(lambda k: k[0]).terms))


def _counit_second(R: TensorElement) -> LinComb:
    h = R.host
    return h._element(dict(h.counit_tensor(R.tensor, 1).map_keys(lambda k: k[0]).terms))


def hopf_element_report(R: TensorElement, a_elements: dict[str, LinComb] | None = None) -> dict[str, Verdict]:
    """Per-axiom verdicts for HE1, HE2 and HE3 (HE3 on the A-generators)."""
    h = R.host
    one = h.one()
    he1 = _compare(h, "(HE1) ΣΔ(R¹)⊗R² = R¹³R²³", _delta_first(R), h.tensor_mul(_legs(R, "13"), _legs(R, "23")))
    he2 = _compare(h, "(HE2) Σε(R¹)R² = 1", _counit_first(R), one, scalar=True)
    if a_elements is None:
        a_elements = {g: h.gen(g) for g in R.a_generators}
    parts = []
    for name, a in a_elements.items():
        lhs = h.tensor_mul(h.flip(h.delta(a)), R.tensor)
        rhs = h.tensor_mul(R.tensor, h.tensor(one, a))
        parts.append(_compare(h, f"(HE3) a={name}", lhs, rhs))
    he3 = Verdict.combine(parts, "(HE3) Δcop(a)R = R(1⊗a)")
    return {"HE1": he1, "HE2": he2, "HE3": he3}


def check_hopf_element(R: TensorElement, a_elements: dict[str, LinComb] | None = None) -> Verdict:
    return Verdict.combine(hopf_element_report(R, a_elements).values(), "Hopf element axioms")


def check_identity_101(R: TensorElement) -> Verdict:
    """R²³R¹³R¹² = R¹²R²³ in the triple tensor product."""
    h = R.host
    r12, r13, r23 = _legs(R, "12"), _legs(R, "13"), _legs(R, "23")
    lhs = h.tensor_mul(h.tensor_mul(r23, r13), r12)
    rhs = h.tensor_mul(r12, r23)
    return _compare(h, "R²³R¹³R¹² = R¹²R²³", lhs, rhs)


def r_from_element(R: TensorElement, action: ModuleAction) -> EndoTensor:
    """𝓡(m⊗n) = Σ R¹·m ⊗ R²·n."""
    f = R.host.field
    mats = [(action.matrix_of(R.host.word(w)), action.matrix_of(e), s) for w, e, s in R.terms]

    def x(u: int, v: int, j: int, i: int) -> Scalar:
        total = f.zero
        for a1, a2, s in mats:
            if a1[i][v] and a2[j][u]:
                total = total + s * a1[i][v] * a2[j][u]
        return total

    return endo_from_function(f, action.n, x)


def integral_t(R: TensorElement, a_elements: dict[str, LinComb] | None = None) -> tuple[LinComb, Verdict]:
    """t = Σ R¹ε(R²), with checks a·t = ε(a)t on A-generators and t² = t."""
    h = R.host
    t = _counit_second(R)
    if a_elements is None:
        a_elements = {g: h.gen(g) for g in R.a_generators}
    parts = [
        _compare(h, f"a·t = ε(a)t at a={name}", h.mul(a, t), t.scale(h.counit(a)), scalar=True)
        for name, a in a_elements.items()
    ]
    parts.append(_compare(h, "t² = t", h.mul(t, t), t, scalar=True))
    return t, Verdict.combine(parts, "integral t")


def quasitriangular_report(R: TensorElement) -> dict[str, Verdict]:
    h = R.host
    one = h.one()
    r12, r13, r23 = _legs(R, "12"), _legs(R, "13"), _legs(R, "23")
    out = {
        "QT1": _compare(h, "(QT1) ΣΔ(R¹)⊗R² = R¹³R²³", _delta_first(R), h.tensor_mul(r13, r23)),
        "QT2": _compare(h, "(QT2) Σε(R¹)R² = 1", _counit_first(R), one, scalar=True),
        "QT3": _compare(h, "(QT3) ΣR¹⊗Δ(R²) = R¹³R¹²", h.delta_tensor(R.tensor, 1), h.tensor_mul(r13, r12)),
        "QT4": _compare(h, "(QT4) ΣR¹ε(R²) = 1", _counit_second(R), one, scalar=True),
    }
    parts = []
    for g in h.generators:
        e = h.gen(g)
        lhs = h.tensor_mul(h.flip(h.delta(e)), R.tensor)
        rhs = h.tensor_mul(R.tensor, h.delta(e))
        parts.append(_compare(h, f"(QT5) h={g}", lhs, rhs))
    out["QT5"] = Verdict.combine(parts, "(QT5) Δcop(h)R = RΔ(h)")
    return out


def check_quasitriangular(R: TensorElement) -> Verdict:
    return Verdict.combine(quasitriangular_report(R).values(), "quasitriangular axioms")
