"""Hopf functions σ: C⊗H → k and everything built from them.

A :class:`Pairing` stores σ on (C-basis × H-generators) and extends it to
words by the multiplicativity rule σ(c⊗w·g) = Σ σ(c₍₁₎⊗w)σ(c₍₂₎⊗g). For a
table host every basis element counts as a generator, so single-letter
words are plain table lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from . import linalg
from .freeword import DEFAULT_DEGREE, NCPoly, Word
from .frt import build_br, comatrix_name, comatrix_view
from .hopfcore import (
    UNIT,
    Bialgebra,
    Comodule,
    ModuleAction,
    PresentedBialgebra,
    SubcoalgebraView,
    TableBialgebra,
)
from .kernel import Field, LinComb, Scalar, Verdict, Witness
from .tensorlab import EndoTensor, check_equation, endo_from_function, invert_endo

DEC_DEGREE = 2


class PairingError(ValueError):
    def __init__(self, message: str, verdict: Verdict):
        super().__init__(f"{message}\n{verdict}")
        self.verdict = verdict


class Pairing:
    """σ on C⊗H given by a generator table.

    ``table[(c, g)]`` for C-basis names c and H generators g. Entries
    ``(c, "1")`` are optional; without them σ(c⊗1) = ε(c) (unless
    ``use_unit_rule`` is off, in which case they are mandatory).
    """

    def __init__(
        self,
        C: SubcoalgebraView,
        table: Mapping[tuple[str, str], Any],
        name: str = "",
        use_unit_rule: bool = True,
    ):
        self.C = C
        self.host: Bialgebra = C.host
        self.field: Field = C.host.field
        self.name = name
        self.use_unit_rule = use_unit_rule
        f = self.field
        self.table: dict[tuple[str, str], Scalar] = {}
        for (c, g), v in table.items():
            if c not in C.elements:
                raise ValueError(f"{c!r} is not a basis element of C")
            if g != UNIT and g not in self.host.generators:
                raise ValueError(f"{g!r} is not a generator of the host")
            self.table[c, g] = f(v)
        for c in C.names:
            for g in self.host.generators:
                if (c, g) not in self.table:
                    raise ValueError(f"pairing table missing σ({c}⊗{g})")
            if not use_unit_rule and (c, UNIT) not in self.table:
                raise ValueError(f"pairing table missing σ({c}⊗1)")
        self._memo: dict[tuple[str, Word], Scalar] = {}
        self._is_table = isinstance(self.host, TableBialgebra)

    def __repr__(self) -> str:
        return f"Pairing({self.name or 'σ'} on C={list(self.C.names)})"

    # -- evaluation -------------------------------------------------------
    def value(self, c: str, w: Sequence[str], cache: bool = True) -> Scalar:
        """σ(c ⊗ g₁⋯g_k) for a word of generators."""
        w = tuple(w)
        if cache:
            hit = self._memo.get((c, w))
            if hit is not None:
                return hit
        if not w:
            v = self.table.get((c, UNIT))
            if v is None:
                v = self.C.counit[c]
        elif len(w) == 1:
            v = self.table[c, w[0]]
        else:
            v = self.field.zero
            head, last = w[:-1], (w[-1],)
            for c1, c2, s in self.C.delta[c]:
                a = self.value(c1, head, cache)
                if a:
                    v = v + s * a * self.value(c2, last, cache)
        if cache:
            self._memo[c, w] = v
        return v

    def value_key(self, c: str, key: Hashable) -> Scalar:
        """σ(c ⊗ h) for an element key of the host (basis name or word)."""
        return self.value(c, (key,) if self._is_table else key)

    def at(self, c: str, h: LinComb) -> Scalar:
        total = self.field.zero
        for k, s in h.items():
            total = total + s * self.value_key(c, k)
        return total

    def on(self, coords: LinComb, h: LinComb) -> Scalar:
        """σ(Σ a_c c ⊗ h) for C-coordinates ``coords``."""
        total = self.field.zero
        for c, a in coords.items():
            total = total + a * self.at(c, h)
        return total

    def on_elements(self, c_elem: LinComb, h: LinComb) -> Scalar:
        return self.on(self.C.coordinates(c_elem), h)

    def with_table(self, changes: Mapping[tuple[str, str], Any], name: str = "") -> Pairing:
        t = dict(self.table)
        t.update(changes)
        return Pairing(self.C, t, name or self.name, self.use_unit_rule)


def pairing_from_table(C: SubcoalgebraView, gen_table: Mapping[tuple[str, str], Any], name: str = "") -> Pairing:
    return Pairing(C, gen_table, name)


# ---------------------------------------------------------------------------
# axioms


def _host_words(host: Bialgebra, degree: int) -> list[Hashable]:
    """Element keys used for word-level checks."""
    if isinstance(host, PresentedBialgebra):
        return list(host.free.words(degree))
    return list(host.basis)


def check_well_defined(sigma: Pairing, relations: Sequence[NCPoly] | None = None) -> Verdict:
    """σ(c⊗r) = 0 for every relation r of a presented host.

    For a table host the relations are the multiplication table itself:
    σ(c⊗a·b) computed by the recursion must match the value on the product.
    """
    host = sigma.host
    f = sigma.field
    fails: list[Witness] = []
    if isinstance(host, PresentedBialgebra):
        if relations is None:
            pairs = list(zip(host.labels, host.relations))
        else:
            pairs = [(f"relation {i + 1}", r) for i, r in enumerate(relations)]
        for c in sigma.C.names:
            for lab, r in pairs:
                v = f.zero
                for w, s in r.items():
                    v = v + s * sigma.value(c, w)
                if v:
                    fails.append(Witness(f"σ({c}⊗{lab})", 0, v))
    else:
        for c in sigma.C.names:
            for a, b in itertools.product(host.basis, host.basis):
                lhs = sigma.value(c, (a, b))
                rhs = sigma.at(c, host.mul(host.gen(a), host.gen(b)))
                if lhs != rhs:
                    fails.append(Witness(f"σ({c}⊗{a}{b})", rhs, lhs, ("table", "recursion")))
    return Verdict.from_checks(fails, detail="well-definedness")


def _h1_sides(sigma: Pairing, c: str, hkey: Hashable) -> tuple[LinComb, LinComb]:
    host, C = sigma.host, sigma.C
    lhs = host.zero()
    hd = host.key_delta(hkey)
    for c1, c2, s in C.delta[c]:
        for (k1, k2), t in hd.items():
            v = sigma.value_key(c1, k1)
            if v:
                lhs = lhs + host.mul(host.key_element(k2), C.elements[c2]).scale(s * t * v)
    rhs = host.zero()
    h = host.key_element(hkey)
    for c1, c2, s in C.delta[c]:
        v = sigma.at(c2, h)
        if v:
            rhs = rhs + C.elements[c1].scale(s * v)
    return lhs, host._element(dict(rhs.terms))


def check_h1(sigma: Pairing, keys: Iterable[Hashable] | None = None) -> Verdict:
    host = sigma.host
    if keys is None:
        keys = [host._gen_key(g) for g in host.generators]
    fails: list[Witness] = []
    unknown: list[Witness] = []
    for c in sigma.C.names:
        for k in keys:
            lhs, rhs = _h1_sides(sigma, c, k)
            z = host.is_zero(lhs - rhs)
            if z is not True:
                w = Witness(f"(H1) c={c} h={host.render_key(k)}", host.render(lhs), host.render(rhs), ("lhs", "rhs"))
                (fails if z is False else unknown).append(w)
    return Verdict.from_checks(fails, unknown, "(H1)")


def check_h2(sigma: Pairing) -> Verdict:
    host = sigma.host
    fails = []
    one = host.one()
    for c in sigma.C.names:
        e = sigma.C.counit[c]
        v = sigma.value(c, ())
        if v != e:
            fails.append(Witness(f"(H2) σ({c}⊗1)", e, v))
        if isinstance(host, TableBialgebra):
            v = sigma.at(c, one)
            if v != e:
                fails.append(Witness(f"(H2) σ({c}⊗1) from the table", e, v))
    return Verdict.from_checks(fails, detail="(H2)")


def check_hopf_function(
    sigma: Pairing,
    mode: str = "generators",
    degree: int = 3,
    axioms: Sequence[str] = ("H1", "H2", "H3"),
) -> Verdict:
    """(H1)-(H3) for σ.

    ``mode="generators"`` checks (H1) on C-basis × generators, which suffices
    once σ is multiplicative; ``mode="words"`` checks every word up to
    ``degree``. (H3) holds by construction on words, so it reduces to
    well-definedness on the host relations.
    """
    host = sigma.host
    parts = []
    if "H3" in axioms:
        parts.append(check_well_defined(sigma))
    if "H2" in axioms:
        parts.append(check_h2(sigma))
    if "H1" in axioms:
        if mode == "generators":
            keys = None
        elif mode == "words":
            keys = _host_words(host, degree)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        parts.append(check_h1(sigma, keys))
    return Verdict.combine(parts, f"Hopf function axioms {'/'.join(axioms)} ({mode})")


# ---------------------------------------------------------------------------
# convolution on C⊗C⊗H


class TripleFunctional:
    """Functional on C⊗C⊗H, evaluated on (C-basis, C-basis, host key) triples."""

    def __init__(self, C: SubcoalgebraView, fn: Callable[[str, str, Hashable], Scalar], name: str = ""):
        self.C = C
        self.host = C.host
        self._fn = fn
        self._memo: dict = {}
        self.name = name

    def __call__(self, c: str, d: str, key: Hashable) -> Scalar:
        k = (c, d, key)
        v = self._memo.get(k)
        if v is None:
            v = self._fn(c, d, key)
            self._memo[k] = v
        return v

    def __mul__(self, other: TripleFunctional) -> TripleFunctional:
        return convolve(self, other)

    def __repr__(self) -> str:
        return f"TripleFunctional({self.name})"


def convolve(f: TripleFunctional, g: TripleFunctional) -> TripleFunctional:
    """(f∗g)(c⊗d⊗x) = Σ f(c₁⊗d₁⊗x₁) g(c₂⊗d₂⊗x₂)."""
    C, host = f.C, f.host
    zero = host.field.zero

    def fn(c: str, d: str, key: Hashable) -> Scalar:
        total = zero
        hd = host.key_delta(key)
        for c1, c2, s in C.delta[c]:
            for d1, d2, t in C.delta[d]:
                for (k1, k2), u in hd.items():
                    a = f(c1, d1, k1)
                    if a:
                        total = total + s * t * u * a * g(c2, d2, k2)
        return total

    return TripleFunctional(C, fn, f"({f.name}∗{g.name})")


def lift(sigma: Pairing, legs: str) -> TripleFunctional:
    """σ₁₂, σ₁₃ or σ₂₃ as functionals on C⊗C⊗H."""
    C, host = sigma.C, sigma.host
    if legs == "12":
        return TripleFunctional(C, lambda c, d, k: host.key_counit(k) * sigma.at(c, C.elements[d]), "σ12")
    if legs == "13":
        return TripleFunctional(C, lambda c, d, k: C.counit[d] * sigma.value_key(c, k), "σ13")
    if legs == "23":
        return TripleFunctional(C, lambda c, d, k: C.counit[c] * sigma.value_key(d, k), "σ23")
    raise ValueError(f"unknown legs {legs!r}")


def triple_unit(C: SubcoalgebraView) -> TripleFunctional:
    host = C.host
    return TripleFunctional(C, lambda c, d, k: C.counit[c] * C.counit[d] * host.key_counit(k), "ε")


def lift_and_convolve(pattern: Sequence[str], sigma: Pairing) -> TripleFunctional:
    """Convolution product of the lifts named in ``pattern`` (e.g. ["23", "13", "12"])."""
    out = None
    for legs in pattern:
        t = lift(sigma, legs)
        out = t if out is None else convolve(out, t)
    return out if out is not None else triple_unit(sigma.C)


def compare_triples(
    f: TripleFunctional, g: TripleFunctional, keys: Iterable[Hashable], detail: str = ""
) -> Verdict:
    C, host = f.C, f.host
    fails = []
    for c, d in itertools.product(C.names, C.names):
        for k in keys:
            a, b = f(c, d, k), g(c, d, k)
            if a != b:
                fails.append(Witness(f"({c},{d},{host.render_key(k)})", a, b, ("lhs", "rhs")))
    return Verdict.from_checks(fails, detail=detail)


def check_dec_identity(sigma: Pairing, degree: int = DEC_DEGREE) -> Verdict:
    """σ₂₃∗σ₁₃∗σ₁₂ = σ₁₂∗σ₂₃ on basis triples (host words up to ``degree``)."""
    lhs = lift_and_convolve(["23", "13", "12"], sigma)
    rhs = lift_and_convolve(["12", "23"], sigma)
    return compare_triples(lhs, rhs, _host_words(sigma.host, degree), "σ23∗σ13∗σ12 = σ12∗σ23")


# ---------------------------------------------------------------------------
# two-slot convolution on C⊗H


class PairingConvolution:
    """(σ∗τ)(c⊗h) = Σ σ(c₁⊗h₁)τ(c₂⊗h₂), evaluated on host keys."""

    def __init__(self, sigma: Pairing, tau: Pairing):
        if sigma.C is not tau.C and sigma.C.names != tau.C.names:
            raise ValueError("pairings live on different coalgebras")
        self.sigma, self.tau = sigma, tau

    def __call__(self, c: str, key: Hashable) -> Scalar:
        s, t = self.sigma, self.tau
        host = s.host
        total = host.field.zero
        hd = host.key_delta(key)
        for c1, c2, a in s.C.delta[c]:
            for (k1, k2), b in hd.items():
                v = s.value_key(c1, k1)
                if v:
                    total = total + a * b * v * t.value_key(c2, k2)
        return total


def check_convolution_unit(conv: Callable[[str, Hashable], Scalar], C: SubcoalgebraView, degree: int) -> Verdict:
    """conv = ε⊗ε on C-basis × host words up to ``degree``."""
    host = C.host
    fails = []
    for c in C.names:
        for k in _host_words(host, degree):
            want = C.counit[c] * host.key_counit(k)
            got = conv(c, k)
            if got != want:
                fails.append(Witness(f"({c},{host.render_key(k)})", want, got))
    return Verdict.from_checks(fails, detail="convolution equals ε⊗ε")


# ---------------------------------------------------------------------------
# R_σ and F_σ


def _coords_matrix(sigma: Pairing, comodule: Comodule) -> list[list[LinComb]]:
    C = sigma.C
    return [
        [C.coordinates(comodule.g[v][l], f"coaction entry g[{v + 1}][{l + 1}]") for l in range(comodule.n)]
        for v in range(comodule.n)
    ]


def r_sigma(sigma: Pairing, comodule: Comodule) -> EndoTensor:
    """R_σ(m⊗n) = Σ σ(m₍₁₎⊗n₍₁₎) m₍₀₎⊗n₍₀₎, i.e. x_uv^{ji} = σ(g_iv ⊗ g_ju)."""
    coords = _coords_matrix(sigma, comodule)
    g = comodule.g
    return endo_from_function(sigma.field, comodule.n, lambda u, v, j, i: sigma.on(coords[i][v], g[j][u]))


def module_from_sigma(sigma: Pairing, comodule: Comodule) -> ModuleAction:
    """h·m = Σ σ(m₍₁₎⊗h) m₍₀₎ on generators."""
    coords = _coords_matrix(sigma, comodule)
    host = sigma.host
    n = comodule.n
    mats = {}
    for gname in host.generators:
        h = host.gen(gname)
        mats[gname] = [[sigma.on(coords[v][l], h) for l in range(n)] for v in range(n)]
    return ModuleAction(host, mats, n)


# ---------------------------------------------------------------------------
# integrals


@dataclass(frozen=True)
class IntegralFunctional:
    host: TableBialgebra
    values: dict = dc_field(hash=False)

    def __call__(self, h: LinComb) -> Scalar:
        total = self.host.field.zero
        for k, s in h.items():
            total = total + s * self.values.get(k, self.host.field.zero)
        return total

    def is_zero(self) -> bool:
        return not any(self.values.values())

    def __str__(self) -> str:
        return ", ".join(f"T({b})={self.values.get(b, 0)}" for b in self.host.basis)


def _integral_system(host: TableBialgebra) -> list[list[Scalar]]:
    """Rows: coefficient of basis e in Σ T(h₁)h₂ − T(h)1, one row per (h, e)."""
    f = host.field
    pos = {b: i for i, b in enumerate(host.basis)}
    one = host.one()
    rows = []
    for h in host.basis:
        for e in host.basis:
            row = [f.zero] * len(host.basis)
            for (a, b), s in host.key_delta(h).items():
                if b == e:
                    row[pos[a]] = row[pos[a]] + s
            u = one[e]
            if u:
                row[pos[h]] = row[pos[h]] - u
            if any(row):
                rows.append(row)
    return rows


def right_integral_space(host: TableBialgebra) -> list[IntegralFunctional]:
    """Basis of {T : Σ T(h₁)h₂ = T(h)1 for all h}."""
    rows = _integral_system(host)
    basis = linalg.nullspace(rows, host.field, len(host.basis))
    return [IntegralFunctional(host, dict(zip(host.basis, v))) for v in basis]


def is_right_integral(host: TableBialgebra, T: IntegralFunctional) -> Verdict:
    fails = []
    one = host.one()
    for h in host.basis:
        lhs = host.zero()
        for (a, b), s in host.key_delta(h).items():
            lhs = lhs + host.gen(b).scale(s * T.values.get(a, host.field.zero))
        rhs = one.scale(T.values.get(h, host.field.zero))
        if lhs != rhs:
            fails.append(Witness(f"right integral at {h}", host.render(rhs), host.render(lhs)))
    return Verdict.from_checks(fails, detail="right integral")


def sigma_from_integral(T: IntegralFunctional, C: SubcoalgebraView) -> Pairing:
    """σ_T(c⊗h) = ε(c)T(h) on basis elements (satisfies (H1), not (H3) in general)."""
    host = T.host
    table = {(c, b): C.counit[c] * T.values.get(b, host.field.zero) for c in C.names for b in host.basis}
    return Pairing(C, table, "σ_T")


def integral_from_sigma(sigma: Pairing) -> IntegralFunctional:
    """T_σ(h) = σ(1⊗h); needs 1_H among the listed C-basis elements."""
    host = sigma.host
    if not isinstance(host, TableBialgebra):
        raise ValueError("integrals are computed on table bialgebras only")
    u = sigma.C.contains_unit()
    if u is None:
        raise ValueError("1_H is not a basis element of C")
    return IntegralFunctional(host, {b: sigma.value_key(u, b) for b in host.basis})


def integral_round_trip(direction: str, arg: Any, C: SubcoalgebraView | None = None):
    if direction == "to_sigma":
        if C is None:
            raise ValueError("to_sigma needs a subcoalgebra")
        return sigma_from_integral(arg, C)
    if direction == "to_integral":
        return integral_from_sigma(arg)
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# σ from a solution R


def _table_from_r(r: EndoTensor) -> dict[tuple[str, str], Scalar]:
    """σ(c_iv ⊗ c_ju) = x_uv^{ji}."""
    n = r.n
    rng = range(n)
    return {
        (comatrix_name(n, i, v), comatrix_name(n, j, u)): r.x(u, v, j, i)
        for i, v, j, u in itertools.product(rng, rng, rng, rng)
    }


def br_subcoalgebra(br: PresentedBialgebra, n: int) -> SubcoalgebraView:
    return comatrix_view(br, n)


def sigma_from_r(r: EndoTensor, degree: int = DEFAULT_DEGREE, br: PresentedBialgebra | None = None) -> Pairing:
    """The Hopf function on C⊗B(R) with σ(c_iv⊗c_ju) = x_uv^{ji}.

    Raises :class:`PairingError` if σ does not vanish on the χ relations.
    """
    br = build_br(r, degree) if br is None else br
    C = br_subcoalgebra(br, r.n)
    sigma = Pairing(C, _table_from_r(r), "σ")
    v = check_well_defined(sigma)
    if not v.passed:
        raise PairingError("σ does not factor through B(R)", v)
    return sigma


def sigma_from_r_table(r: EndoTensor, br: PresentedBialgebra) -> Pairing:
    """Same generator table as :func:`sigma_from_r` on an existing host, unchecked."""
    return Pairing(br_subcoalgebra(br, r.n), _table_from_r(r), "σ")


@dataclass
class InverseResult:
    pairing: Pairing | None
    well_defined: Verdict
    commute13: Verdict

    @property
    def ok(self) -> bool:
        return self.pairing is not None


def sigma_inverse_from_rinv(r: EndoTensor, degree: int = DEFAULT_DEGREE, br: PresentedBialgebra | None = None) -> InverseResult:
    """σ' with σ'(c_iv⊗c_ju) = y_uv^{ji} for y = R⁻¹, if it factors through B(R)."""
    s = invert_endo(r)
    br = build_br(r, degree) if br is None else br
    cand = Pairing(br_subcoalgebra(br, r.n), _table_from_r(s), "σ'")
    wd = check_well_defined(cand)
    c13 = check_equation("commute13", r)
    return InverseResult(cand if wd.passed else None, wd, c13)


# ---------------------------------------------------------------------------
# braided bialgebras


class FullPairing:
    """Bilinear σ on H⊗H for a table bialgebra, given on basis pairs."""

    def __init__(self, host: TableBialgebra, values: Mapping[tuple[str, str], Any]):
        self.host = host
        f = host.field
        self.values = {(a, b): f(values.get((a, b), 0)) for a in host.basis for b in host.basis}

    def __call__(self, x: LinComb, y: LinComb) -> Scalar:
        total = self.host.field.zero
        for a, s in x.items():
            for b, t in y.items():
                total = total + s * t * self.values[a, b]
        return total


def check_braided(host: TableBialgebra, sigma: FullPairing | Mapping[tuple[str, str], Any]) -> Verdict:
    """Co-quasitriangular axioms (B1)-(B5) on basis elements."""
    if not isinstance(sigma, FullPairing):
        sigma = FullPairing(host, sigma)
    H = host
    e = {b: H.gen(b) for b in H.basis}
    one = H.one()
    fails: list[Witness] = []
    for x, y in itertools.product(H.basis, H.basis):
        lhs = H.zero()
        rhs = H.zero()
        for (x1, x2), s in H.key_delta(x).items():
            for (y1, y2), t in H.key_delta(y).items():
                a = sigma.values[x1, y1]
                if a:
                    lhs = lhs + H.mul(e[y2], e[x2]).scale(s * t * a)
                b = sigma.values[x2, y2]
                if b:
                    rhs = rhs + H.mul(e[x1], e[y1]).scale(s * t * b)
        if lhs != rhs:
            fails.append(Witness(f"(B1) x={x} y={y}", H.render(lhs), H.render(rhs), ("lhs", "rhs")))
    for x in H.basis:
        ex = H.counit(e[x])
        if sigma(e[x], one) != ex:
            fails.append(Witness(f"(B2) σ({x}⊗1)", ex, sigma(e[x], one)))
        if sigma(one, e[x]) != ex:
            fails.append(Witness(f"(B4) σ(1⊗{x})", ex, sigma(one, e[x])))
    for x, y, z in itertools.product(H.basis, H.basis, H.basis):
        lhs = sigma(e[x], H.mul(e[y], e[z]))
        rhs = H.field.zero
        for (x1, x2), s in H.key_delta(x).items():
            rhs = rhs + s * sigma.values[x1, y] * sigma.values[x2, z]
        if lhs != rhs:
            fails.append(Witness(f"(B3) x={x} y={y} z={z}", lhs, rhs, ("lhs", "rhs")))
        lhs = sigma(H.mul(e[x], e[y]), e[z])
        rhs = H.field.zero
        for (z1, z2), s in H.key_delta(z).items():
            rhs = rhs + s * sigma.values[y, z1] * sigma.values[x, z2]
        if lhs != rhs:
            fails.append(Witness(f"(B5) x={x} y={y} z={z}", lhs, rhs, ("lhs", "rhs")))
    return Verdict.from_checks(fails, detail="braided axioms (B1)-(B5)")


def r_from_full_pairing(sigma: FullPairing, comodule: Comodule) -> EndoTensor:
    """R_σ(m⊗n) = Σ σ(m₍₁₎⊗n₍₁₎) m₍₀₎⊗n₍₀₎ for σ defined on all of H⊗H."""
    g = comodule.g
    return endo_from_function(sigma.host.field, comodule.n, lambda u, v, j, i: sigma(g[i][v], g[j][u]))


def check_qybe_from_braided(host: TableBialgebra, sigma: FullPairing | Mapping, comodule: Comodule) -> Verdict:
    if not isinstance(sigma, FullPairing):
        sigma = FullPairing(host, sigma)
    return check_equation("qybe", r_from_full_pairing(sigma, comodule))


# ---------------------------------------------------------------------------
# exhaustive search


def search_hopf_functions(host: Bialgebra, C: SubcoalgebraView, field: Field | None = None) -> list[Pairing]:
    """Every table σ(c⊗1), σ(c⊗g) over a prime field that passes (H1)-(H3).

    ``g`` runs over the basis of a table bialgebra or the generators of a
    presented one.
    """
    f = field or host.field
    if not f.is_prime_field:
        raise ValueError("search needs a prime field")
    if f != host.field:
        raise ValueError("search field differs from the host field")
    keys = list(host.basis) if isinstance(host, TableBialgebra) else [UNIT, *host.generators]
    slots = [(c, b) for c in C.names for b in keys]
    size = f.characteristic ** len(slots)
    if size > 2**24:
        raise ValueError(f"search space too large ({size} tables)")
    elements = list(f.elements())
    found = []
    for values in itertools.product(elements, repeat=len(slots)):
        sigma = Pairing(C, dict(zip(slots, values)))
        if check_h2(sigma).passed and check_well_defined(sigma).passed and check_h1(sigma).passed:
            found.append(sigma)
    return found
