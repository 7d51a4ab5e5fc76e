"""Bialgebras (finite tables and finite presentations), comodules, module
actions, subcoalgebras, the Hopf-module axiom and bialgebra-map checks.

Host elements are :class:`LinComb` values. For a :class:`TableBialgebra`
the keys are basis names; for a :class:`PresentedBialgebra` they are words
in the generators (so elements are :class:`NCPoly`). Tensor elements are
LinCombs keyed by tuples of element keys.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from typing import Any, Hashable, Iterable, Mapping, Sequence

from . import linalg
from .freeword import DEFAULT_DEGREE, DEFAULT_SLACK, FreeAlgebra, NCPoly, TruncatedQuotient, Word
from .kernel import Field, LinComb, Scalar, Verdict, Witness
from .tensorlab import EndoTensor, endo_from_function

UNIT = "1"


class AxiomError(ValueError):
    """Raised by validating constructors; carries the failing verdict."""

    def __init__(self, message: str, verdict: Verdict):
        super().__init__(f"{message}\n{verdict}")
        self.verdict = verdict


def _acc(out: dict, key: Hashable, c: Scalar) -> None:
    prev = out.get(key)
    v = c if prev is None else prev + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class Bialgebra(ABC):
    field: Field
    generators: tuple[str, ...]

    # -- algebra ----------------------------------------------------------
    @abstractmethod
    def one(self) -> LinComb: ...

    @abstractmethod
    def gen(self, name: str) -> LinComb: ...

    @abstractmethod
    def key_mul(self, a: Hashable, b: Hashable) -> Mapping[Hashable, Scalar]:
        """Product of two element keys as ``{key: coefficient}``."""

    @abstractmethod
    def key_element(self, key: Hashable) -> LinComb: ...

    @abstractmethod
    def word(self, w: Sequence[str]) -> LinComb:
        """Product of the named generators (basis elements for tables)."""

    def mul(self, a: LinComb, b: LinComb) -> LinComb:
        out: dict = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                for k, c in self.key_mul(ka, kb).items():
                    _acc(out, k, ca * cb * c)
        return self._element(out)

    def prod(self, *elems: LinComb) -> LinComb:
        out = self.one()
        for e in elems:
            out = self.mul(out, e)
        return out

    def scalar(self, c: Any) -> LinComb:
        return self.one().scale(c)

    def zero(self) -> LinComb:
        return self._element({})

    @abstractmethod
    def _element(self, terms: dict) -> LinComb: ...

    def element(self, terms: Mapping[Hashable, Any]) -> LinComb:
        return self._element({k: self.field(c) for k, c in terms.items() if self.field(c)})

    # -- coalgebra --------------------------------------------------------
    @abstractmethod
    def key_delta(self, key: Hashable) -> Mapping[tuple, Scalar]: ...

    @abstractmethod
    def key_counit(self, key: Hashable) -> Scalar: ...

    def delta(self, a: LinComb) -> LinComb:
        out: dict = {}
        for k, c in a.items():
            for pair, s in self.key_delta(k).items():
                _acc(out, pair, c * s)
        return LinComb._raw(self.field, out)

    def counit(self, a: LinComb) -> Scalar:
        total = self.field.zero
        for k, c in a.items():
            total = total + c * self.key_counit(k)
        return total

    def delta_word(self, w: Sequence[str]) -> dict[tuple[Word, Word], Scalar]:
        """Δ of a generator word expanded without reduction: ``{(w1, w2): c}``."""
        out: dict = {((), ()): self.field.one}
        for g in w:
            new: dict = {}
            for (l, r), c in out.items():
                for (a, b), s in self.generator_delta(g).items():
                    _acc(new, (l + a, r + b), c * s)
            out = new
        return out

    @abstractmethod
    def generator_delta(self, g: str) -> dict[tuple[Word, Word], Scalar]:
        """Δ(g) as ``{(word, word): c}`` with words of length <= 1."""

    def counit_word(self, w: Sequence[str]) -> Scalar:
        c = self.field.one
        for g in w:
            c = c * self.key_counit(self._gen_key(g))
        return c

    @abstractmethod
    def _gen_key(self, g: str) -> Hashable: ...

    # -- tensors ----------------------------------------------------------
    def tensor(self, *factors: LinComb) -> LinComb:
        out: dict = {(): self.field.one}
        for f in factors:
            out = {k + (kf,): c * cf for k, c in out.items() for kf, cf in f.items()}
        res: dict = {}
        for k, c in out.items():
            _acc(res, k, c)
        return LinComb._raw(self.field, res)

    def tensor_mul(self, s: LinComb, t: LinComb) -> LinComb:
        out: dict = {}
        for ks, cs in s.items():
            for kt, ct in t.items():
                parts: list[tuple[tuple, Scalar]] = [((), cs * ct)]
                for a, b in zip(ks, kt):
                    prod = self.key_mul(a, b)
                    parts = [(k + (kk,), c * cc) for k, c in parts for kk, cc in prod.items()]
                for k, c in parts:
                    _acc(out, k, c)
        return LinComb._raw(self.field, out)

    def delta_tensor(self, t: LinComb, slot: int) -> LinComb:
        """Apply Δ to one slot of a tensor element."""
        out: dict = {}
        for key, c in t.items():
            for (a, b), s in self.key_delta(key[slot]).items():
                _acc(out, key[:slot] + (a, b) + key[slot + 1 :], c * s)
        return LinComb._raw(self.field, out)

    def counit_tensor(self, t: LinComb, slot: int) -> LinComb:
        out: dict = {}
        for key, c in t.items():
            e = self.key_counit(key[slot])
            if e:
                _acc(out, key[:slot] + key[slot + 1 :], c * e)
        return LinComb._raw(self.field, out)

    def flip(self, t: LinComb) -> LinComb:
        return t.map_keys(lambda k: (k[1], k[0]))

    # -- equality ---------------------------------------------------------
    @abstractmethod
    def is_zero(self, a: LinComb) -> bool | None:
        """True/False when decided, None when truncation leaves it open."""

    @abstractmethod
    def tensor_is_zero(self, t: LinComb) -> bool | None: ...

    def equal(self, a: LinComb, b: LinComb) -> bool | None:
        return self.is_zero(a - b)

    def tensor_equal(self, a: LinComb, b: LinComb) -> bool | None:
        return self.tensor_is_zero(a - b)

    # -- display ----------------------------------------------------------
    @abstractmethod
    def render_key(self, key: Hashable) -> str: ...

    def order(self, key: Hashable) -> Any:
        return key

    def render(self, a: LinComb) -> str:
        if isinstance(a, NCPoly):
            return a.format()
        return a.format(self.render_key, key=self.order)

    def render_tensor(self, t: LinComb) -> str:
        return t.format(
            lambda k: "⊗".join(self.render_key(x) for x in k),
            key=lambda k: tuple(self.order(x) for x in k),
        )


# ---------------------------------------------------------------------------


class TableBialgebra(Bialgebra):
    """Finite-dimensional bialgebra given by structure tables on a named basis."""

    def __init__(
        self,
        field: Field,
        basis: Sequence[str],
        unit: Mapping[str, Any],
        mult: Mapping[tuple[str, str], Mapping[str, Any]],
        delta: Mapping[str, Iterable[tuple[str, str, Any]]],
        eps: Mapping[str, Any],
        name: str = "",
    ):
        self.field = field
        self.basis = tuple(basis)
        self.name = name
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("repeated basis name")
        self._pos = {b: i for i, b in enumerate(self.basis)}
        self.generators = self.basis
        self._unit = self._vec(unit)
        self._mult: dict[tuple[str, str], dict[str, Scalar]] = {}
        for a in self.basis:
            for b in self.basis:
                if (a, b) not in mult:
                    raise ValueError(f"multiplication table missing {a}*{b}")
                self._mult[a, b] = self._vec(mult[a, b]).terms
        self._delta: dict[str, dict[tuple, Scalar]] = {}
        for a in self.basis:
            if a not in delta:
                raise ValueError(f"comultiplication missing for {a}")
            d: dict = {}
            for l, r, c in delta[a]:
                self._check_name(l)
                self._check_name(r)
                _acc(d, (l, r), field(c))
            self._delta[a] = d
        self._eps = {a: field(eps[a]) for a in self.basis}

    def _check_name(self, b: str) -> None:
        if b not in self._pos:
            raise ValueError(f"unknown basis element {b!r}")

    def _vec(self, terms: Mapping[str, Any]) -> LinComb:
        for k in terms:
            self._check_name(k)
        return LinComb(self.field, dict(terms))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def one(self) -> LinComb:
        return self._unit

    def gen(self, name: str) -> LinComb:
        self._check_name(name)
        return LinComb.basis(self.field, name)

    def basis_element(self, name: str) -> LinComb:
        return self.gen(name)

    def key_element(self, key: Hashable) -> LinComb:
        return self.gen(key)

    def key_mul(self, a: Hashable, b: Hashable) -> Mapping[Hashable, Scalar]:
        return self._mult[a, b]

    def word(self, w: Sequence[str]) -> LinComb:
        out = self.one()
        for g in w:
            out = self.mul(out, self.gen(g))
        return out

    def _element(self, terms: dict) -> LinComb:
        return LinComb._raw(self.field, terms)

    def key_delta(self, key: Hashable) -> Mapping[tuple, Scalar]:
        return self._delta[key]

    def key_counit(self, key: Hashable) -> Scalar:
        return self._eps[key]

    def generator_delta(self, g: str) -> dict[tuple[Word, Word], Scalar]:
        return {((l,), (r,)): c for (l, r), c in self._delta[g].items()}

    def _gen_key(self, g: str) -> Hashable:
        return g

    def is_zero(self, a: LinComb) -> bool | None:
        return a.is_zero()

    def tensor_is_zero(self, t: LinComb) -> bool | None:
        return t.is_zero()

    def render_key(self, key: Hashable) -> str:
        return str(key)

    def order(self, key: Hashable) -> Any:
        return self._pos.get(key, -1)

    def __repr__(self) -> str:
        return f"TableBialgebra({self.name or list(self.basis)}, {self.field})"

    # -- axioms -----------------------------------------------------------
    def check_axioms(self) -> Verdict:
        f = self.field
        fails: list[Witness] = []
        B = self.basis
        e = {b: self.gen(b) for b in B}
        r = self.render
        rt = self.render_tensor
        for a, b, c in itertools.product(B, B, B):
            lhs = self.mul(self.mul(e[a], e[b]), e[c])
            rhs = self.mul(e[a], self.mul(e[b], e[c]))
            if lhs != rhs:
                fails.append(Witness(f"associativity ({a}{b}){c}", r(lhs), r(rhs), ("lhs", "rhs")))
        for a in B:
            if self.mul(self._unit, e[a]) != e[a] or self.mul(e[a], self._unit) != e[a]:
                fails.append(Witness(f"unit law at {a}", a, r(self.mul(self._unit, e[a]))))
        for a in B:
            d = self.delta(e[a])
            lhs = self.delta_tensor(d, 0)
            rhs = self.delta_tensor(d, 1)
            if lhs != rhs:
                fails.append(Witness(f"coassociativity at {a}", rt(lhs), rt(rhs), ("lhs", "rhs")))
            left = self.counit_tensor(d, 0).map_keys(lambda k: k[0])
            right = self.counit_tensor(d, 1).map_keys(lambda k: k[0])
            if left != e[a] or right != e[a]:
                fails.append(Witness(f"counit law at {a}", a, f"{r(left)} / {r(right)}"))
        for a, b in itertools.product(B, B):
            ab = self.mul(e[a], e[b])
            lhs = self.delta(ab)
            rhs = self.tensor_mul(self.delta(e[a]), self.delta(e[b]))
            if lhs != rhs:
                fails.append(Witness(f"Δ multiplicative at ({a},{b})", rt(rhs), rt(lhs)))
            if self.counit(ab) != self.counit(e[a]) * self.counit(e[b]):
                fails.append(Witness(f"ε multiplicative at ({a},{b})", self.counit(e[a]) * self.counit(e[b]), self.counit(ab)))
        d1 = self.delta(self._unit)
        if d1 != self.tensor(self._unit, self._unit):
            fails.append(Witness("Δ(1)", "1⊗1", rt(d1)))
        if self.counit(self._unit) != f.one:
            fails.append(Witness("ε(1)", 1, self.counit(self._unit)))
        return Verdict.from_checks(fails, detail=f"bialgebra axioms of {self.name or 'table'}")


def make_table_bialgebra(
    field: Field,
    basis: Sequence[str],
    unit: Mapping[str, Any] | str,
    mult: Mapping[tuple[str, str], Mapping[str, Any]],
    delta: Mapping[str, Iterable[tuple[str, str, Any]]],
    eps: Mapping[str, Any],
    name: str = "",
) -> TableBialgebra:
    """Validating constructor; raises :class:`AxiomError` with every failing instance."""
    if isinstance(unit, str):
        unit = {unit: 1}
    h = TableBialgebra(field, basis, unit, mult, delta, eps, name)
    v = h.check_axioms()
    if not v.passed:
        raise AxiomError(f"invalid bialgebra {name}".strip(), v)
    return h


def complete_unit_rows(
    basis: Sequence[str], mult: Mapping[tuple[str, str], Mapping[str, Any]], unit: str = UNIT
) -> dict[tuple[str, str], Mapping[str, Any]]:
    """Fill in ``1*b = b*1 = b`` and treat missing products as zero."""
    full: dict = {}
    for a in basis:
        for b in basis:
            if a == unit:
                full[a, b] = {b: 1}
            elif b == unit:
                full[a, b] = {a: 1}
            else:
                full[a, b] = dict(mult.get((a, b), {}))
    return full


# ---------------------------------------------------------------------------


class PresentedBialgebra(Bialgebra):
    """k⟨generators | relations⟩ with Δ, ε given on generators."""

    def __init__(
        self,
        field: Field,
        generators: Sequence[str],
        relations: Sequence[NCPoly],
        delta_gen: Mapping[str, Iterable[tuple[str, str, Any]]],
        eps_gen: Mapping[str, Any],
        degree: int = DEFAULT_DEGREE,
        slack: int = DEFAULT_SLACK,
        name: str = "",
        labels: Sequence[str] | None = None,
    ):
        self.field = field
        self.free = FreeAlgebra(field, generators)
        self.generators = self.free.generators
        self.name = name
        self.relations = tuple(self.free(r) for r in relations)
        if labels is None:
            labels = [f"relation {i + 1}" for i in range(len(self.relations))]
        self.labels = tuple(labels)
        self.quotient = TruncatedQuotient(self.free, self.relations, degree, slack)
        self._gdelta: dict[str, dict[tuple[Word, Word], Scalar]] = {}
        for g in self.generators:
            if g not in delta_gen:
                raise ValueError(f"comultiplication missing for generator {g}")
            d: dict = {}
            for a, b, c in delta_gen[g]:
                wa = () if a == UNIT else (a,)
                wb = () if b == UNIT else (b,)
                for w in (wa, wb):
                    self.free.order_key(w)
                _acc(d, (wa, wb), field(c))
            self._gdelta[g] = d
        self._geps = {g: field(eps_gen[g]) for g in self.generators}
        self._dcache: dict[Word, dict] = {}

    @property
    def degree(self) -> int:
        return self.quotient.degree

    def one(self) -> NCPoly:
        return self.free.one()

    def gen(self, name: str) -> NCPoly:
        if name == UNIT:
            return self.free.one()
        return self.free.gen(name)

    def key_element(self, key: Hashable) -> NCPoly:
        return self.free.word(key)

    def key_mul(self, a: Hashable, b: Hashable) -> Mapping[Hashable, Scalar]:
        return {a + b: self.field.one}

    def mul(self, a: LinComb, b: LinComb) -> NCPoly:
        return self.free(a) * self.free(b)

    def word(self, w: Sequence[str]) -> NCPoly:
        return self.free.word(tuple(g for g in w if g != UNIT))

    def _element(self, terms: dict) -> NCPoly:
        return NCPoly(self.free, terms)

    def generator_delta(self, g: str) -> dict[tuple[Word, Word], Scalar]:
        return self._gdelta[g]

    def key_delta(self, key: Hashable) -> Mapping[tuple, Scalar]:
        d = self._dcache.get(key)
        if d is None:
            d = self.delta_word(key)
            self._dcache[key] = d
        return d

    def key_counit(self, key: Hashable) -> Scalar:
        return self.counit_word(key)

    def counit_word(self, w: Sequence[str]) -> Scalar:
        c = self.field.one
        for g in w:
            c = c * self._geps[g]
        return c

    def _gen_key(self, g: str) -> Hashable:
        return (g,)

    def is_zero(self, a: LinComb) -> bool | None:
        return self.quotient.is_zero(self.free(a))

    def tensor_is_zero(self, t: LinComb) -> bool | None:
        return self.quotient.tensor_is_zero(t)

    def normal_form(self, a: LinComb) -> NCPoly:
        return self.quotient.normal_form(self.free(a))

    def render_key(self, key: Hashable) -> str:
        if not key:
            return "1"
        sep = "" if all(len(g) == 1 for g in self.generators) else "*"
        return sep.join(key)

    def order(self, key: Hashable) -> Any:
        k = self.free.order_key(key)
        return (-k[0], tuple(-i for i in k[1]))

    def render(self, a: LinComb) -> str:
        p = self.free(a)
        try:
            p = self.normal_form(p)
        except ValueError:
            pass
        return p.format()

    def render_tensor(self, t: LinComb) -> str:
        deg = max((max(len(w) for w in k) for k in t.terms), default=0)
        try:
            t = self.quotient.tensor_nf(t, self.quotient.cap(deg)) if self.relations else t
        except ValueError:
            pass
        return super().render_tensor(t)

    def __repr__(self) -> str:
        return f"PresentedBialgebra({self.name or list(self.generators)}, {self.field})"

    def check_axioms(self) -> Verdict:
        """Coideal compatibility of every relation plus (co)unit and coassociativity on generators."""
        fails: list[Witness] = []
        unknown: list[Witness] = []
        rt = self.render_tensor
        for lab, r in zip(self.labels, self.relations):
            e = self.counit(r)
            if e:
                fails.append(Witness(f"ε({lab}: {r})", 0, e))
            d = self.delta(r)
            z = self.tensor_is_zero(d)
            if z is None:
                unknown.append(Witness(f"Δ({lab}: {r}) in I⊗H + H⊗I", 0, rt(d)))
            elif not z:
                fails.append(Witness(f"Δ({lab}: {r}) in I⊗H + H⊗I", 0, rt(d)))
        for g in self.generators:
            d = self.delta(self.gen(g))
            lhs, rhs = self.delta_tensor(d, 0), self.delta_tensor(d, 1)
            if self.tensor_is_zero(lhs - rhs) is not True:
                fails.append(Witness(f"coassociativity at {g}", rt(lhs), rt(rhs), ("lhs", "rhs")))
            left = self.counit_tensor(d, 0).map_keys(lambda k: k[0])
            right = self.counit_tensor(d, 1).map_keys(lambda k: k[0])
            for side in (left, right):
                if self.is_zero(self._element(dict(side.terms)) - self.gen(g)) is not True:
                    fails.append(Witness(f"counit law at {g}", g, self.render(self._element(dict(side.terms)))))
        return Verdict.from_checks(fails, unknown, f"bialgebra axioms of {self.name or 'presentation'}")


def make_presented_bialgebra(
    field: Field,
    generators: Sequence[str],
    relations: Sequence[NCPoly] | Any,
    delta_gen: Mapping[str, Iterable[tuple[str, str, Any]]],
    eps_gen: Mapping[str, Any],
    degree: int = DEFAULT_DEGREE,
    name: str = "",
    check: bool = True,
    labels: Sequence[str] | None = None,
) -> PresentedBialgebra:
    """Validating constructor.

    ``relations`` may be a callable receiving the generator polynomials.
    """
    if callable(relations):
        free = FreeAlgebra(field, generators)
        relations = relations(*free.gens())
    maxdeg = max((r.degree for r in relations), default=0)
    if degree < 2 * maxdeg:
        raise ValueError(f"degree bound {degree} below twice the relation degree {maxdeg}")
    b = PresentedBialgebra(field, generators, relations, delta_gen, eps_gen, degree, name=name, labels=labels)
    if check:
        v = b.check_axioms()
        if not v.passed:
            raise AxiomError("relations not coideal-compatible" + (f" in {name}" if name else ""), v)
    return b


def delta_eval(b: Bialgebra, element: LinComb) -> LinComb:
    return b.delta(element)


def counit_eval(b: Bialgebra, element: LinComb) -> Scalar:
    return b.counit(element)


# ---------------------------------------------------------------------------


class SubcoalgebraView:
    """Named elements of a bialgebra spanning a subcoalgebra C.

    ``delta[c]`` lists ``(c1, c2, s)`` in C-basis names, ``counit[c]`` is ε(c).
    """

    def __init__(
        self,
        host: Bialgebra,
        elements: Mapping[str, LinComb] | Sequence[str],
        structure: tuple[Mapping[str, Sequence[tuple[str, str, Any]]], Mapping[str, Any]] | None = None,
    ):
        """``structure = (delta, counit)`` describes C abstractly, for a map C → H
        that need not be injective; it is checked against the host's Δ and ε."""
        self.host = host
        if not isinstance(elements, Mapping):
            elements = {name: host.gen(name) for name in elements}
        self.names: tuple[str, ...] = tuple(elements)
        self.elements: dict[str, LinComb] = dict(elements)
        self.delta: dict[str, list[tuple[str, str, Scalar]]] = {}
        self.counit: dict[str, Scalar] = {}
        f = host.field
        self.independent = self._prepare(require=structure is None)
        if structure is None:
            for c in self.names:
                d = host.delta(self.elements[c])
                self.delta[c] = self._tensor_coords(d, c)
                self.counit[c] = host.counit(self.elements[c])
            return
        delta, counit = structure
        for c in self.names:
            self.delta[c] = [(c1, c2, f(s)) for c1, c2, s in delta[c] if f(s)]
            self.counit[c] = f(counit[c])
            image = LinComb.zero(f)
            for c1, c2, s in self.delta[c]:
                image = image + host.tensor(self.elements[c1], self.elements[c2]).scale(s)
            if host.tensor_equal(host.delta(self.elements[c]), image) is not True:
                raise ValueError(f"Δ({c}) in the host does not match the given coalgebra")
            if host.counit(self.elements[c]) != self.counit[c]:
                raise ValueError(f"ε({c}) in the host does not match the given coalgebra")

    def __len__(self) -> int:
        return len(self.names)

    def _vector(self, e: LinComb) -> dict:
        if isinstance(self.host, PresentedBialgebra):
            return dict(self.host.normal_form(e).terms)
        return dict(e.terms)

    def _prepare(self, require: bool) -> bool:
        f = self.host.field
        vecs = [self._vector(self.elements[c]) for c in self.names]
        keys = sorted({k for v in vecs for k in v}, key=repr)
        self._keys = keys
        self._vectors = vecs
        cols = [[v.get(k, f.zero) for v in vecs] for k in keys]  # rows = keys
        self._matrix = cols
        independent = (linalg.rank(cols, f) if cols else 0) == len(vecs)
        if require and not independent:
            raise ValueError("subcoalgebra basis elements are linearly dependent")
        return independent

    def coordinates(self, e: LinComb, what: str = "element") -> LinComb:
        """Coordinates of a host element in the C basis; ValueError if it escapes C."""
        f = self.host.field
        if not self.independent:
            # coordinates are not unique; a named element keeps its own name
            for name, el in self.elements.items():
                if el.terms == e.terms:
                    return LinComb.basis(f, name)
        vec = self._vector(e)
        if any(k not in self._keys for k in vec):
            raise ValueError(f"{what} {self.host.render(e)} escapes the subcoalgebra")
        if not vec:
            return LinComb.zero(f)
        b = [vec.get(k, f.zero) for k in self._keys]
        x = linalg.solve(self._matrix, b, f)
        if x is None:
            raise ValueError(f"{what} {self.host.render(e)} escapes the subcoalgebra")
        return LinComb(f, dict(zip(self.names, x)))

    def _tensor_coords(self, t: LinComb, c: str) -> list[tuple[str, str, Scalar]]:
        host = self.host
        groups: dict[Hashable, dict] = {}
        for (a, b), s in t.items():
            groups.setdefault(b, {})
            _acc(groups[b], a, s)
        # left legs first
        right_parts: dict[str, dict] = {}
        for kb, left in groups.items():
            coords = self.coordinates(host._element(left), f"Δ({c}) leg")
            for name, s in coords.items():
                right_parts.setdefault(name, {})
                _acc(right_parts[name], kb, s)
        out: list[tuple[str, str, Scalar]] = []
        for n1 in self.names:
            if n1 not in right_parts:
                continue
            coords = self.coordinates(host._element(right_parts[n1]), f"Δ({c}) leg")
            for n2 in self.names:
                s = coords[n2]
                if s:
                    out.append((n1, n2, s))
        return out

    def element_of(self, coords: LinComb) -> LinComb:
        out = LinComb.zero(self.host.field)
        for name, s in coords.items():
            out = out + self.elements[name].scale(s)
        return self.host._element(dict(out.terms))

    def contains_unit(self) -> str | None:
        """Name of a C-basis element equal to 1_H, if any."""
        for c in self.names:
            if self.host.equal(self.elements[c], self.host.one()) is True:
                return c
        return None


def group_like_view(host: Bialgebra, names: Sequence[str]) -> SubcoalgebraView:
    return SubcoalgebraView(host, list(names))


# ---------------------------------------------------------------------------


class Comodule:
    """Right comodule on k^n: ρ(m_l) = Σ_v m_v ⊗ g[v][l]."""

    def __init__(self, host: Bialgebra, matrix: Sequence[Sequence[LinComb]]):
        self.host = host
        self.n = len(matrix)
        if any(len(row) != self.n for row in matrix):
            raise ValueError("coaction matrix must be square")
        self.g = [[host._element(dict(e.terms)) if isinstance(e, LinComb) else host.scalar(e) for e in row] for row in matrix]

    def coaction(self, l: int) -> list[tuple[int, LinComb]]:
        return [(v, self.g[v][l]) for v in range(self.n) if self.g[v][l]]

    def check(self) -> Verdict:
        h = self.host
        fails: list[Witness] = []
        unknown: list[Witness] = []
        f = h.field
        for v, l in itertools.product(range(self.n), repeat=2):
            lhs = h.delta(self.g[v][l])
            rhs = LinComb.zero(f)
            for w in range(self.n):
                rhs = rhs + h.tensor(self.g[v][w], self.g[w][l])
            z = h.tensor_equal(lhs, rhs)
            loc = f"coassociativity at entry ({v + 1},{l + 1})"
            if z is None:
                unknown.append(Witness(loc, h.render_tensor(rhs), h.render_tensor(lhs)))
            elif not z:
                fails.append(Witness(loc, h.render_tensor(rhs), h.render_tensor(lhs)))
            e = h.counit(self.g[v][l])
            if e != (f.one if v == l else f.zero):
                fails.append(Witness(f"counit at entry ({v + 1},{l + 1})", int(v == l), e))
        return Verdict.from_checks(fails, unknown, "comodule axioms")


class ModuleAction:
    """Left action on k^n, one n×n matrix per generator (per basis element for tables)."""

    def __init__(self, host: Bialgebra, matrices: Mapping[str, Sequence[Sequence[Any]]], n: int | None = None):
        self.host = host
        f = host.field
        self.matrices = {g: [[f(c) for c in row] for row in m] for g, m in matrices.items()}
        if n is None:
            n = len(next(iter(self.matrices.values())))
        self.n = n
        for g in host.generators:
            if g not in self.matrices:
                raise ValueError(f"no action given for generator {g}")

    def _key_matrix(self, key: Hashable) -> linalg.Matrix:
        f = self.host.field
        if isinstance(self.host, PresentedBialgebra):
            m = linalg.identity(f, self.n)
            for g in key:
                m = linalg.matmul(m, self.matrices[g], f)
            return m
        return self.matrices[key]

    def matrix_of(self, e: LinComb) -> linalg.Matrix:
        f = self.host.field
        out = linalg.zeros(f, self.n, self.n)
        for k, c in e.items():
            m = self._key_matrix(k)
            for i in range(self.n):
                for j in range(self.n):
                    if m[i][j]:
                        out[i][j] = out[i][j] + c * m[i][j]
        return out

    def act(self, e: LinComb, vec: Sequence[Scalar]) -> list[Scalar]:
        m = self.matrix_of(e)
        return [sum((m[i][j] * vec[j] for j in range(self.n)), self.host.field.zero) for i in range(self.n)]

    def check(self) -> Verdict:
        h = self.host
        f = h.field
        fails: list[Witness] = []
        eye = linalg.identity(f, self.n)
        if self.matrix_of(h.one()) != eye:
            fails.append(Witness("unit acts as identity", eye, self.matrix_of(h.one())))
        if isinstance(h, PresentedBialgebra):
            for lab, r in zip(h.labels, h.relations):
                m = self.matrix_of(r)
                if any(any(row) for row in m):
                    fails.append(Witness(f"{lab}: {r} acts as zero", 0, m))
        else:
            for a, b in itertools.product(h.basis, h.basis):
                lhs = linalg.matmul(self.matrices[a], self.matrices[b], f)
                rhs = self.matrix_of(h.mul(h.gen(a), h.gen(b)))
                if lhs != rhs:
                    fails.append(Witness(f"action of {a}*{b}", rhs, lhs))
        return Verdict.from_checks(fails, detail="module axioms")


def trivial_action(host: Bialgebra, n: int) -> ModuleAction:
    """h·m = ε(h)m."""
    f = host.field
    mats = {}
    for g in host.generators:
        e = host.counit(host.gen(g))
        mats[g] = [[e if i == j else f.zero for j in range(n)] for i in range(n)]
    return ModuleAction(host, mats, n)


def trivial_comodule(host: Bialgebra, n: int) -> Comodule:
    """ρ(m) = m⊗1."""
    z = LinComb.zero(host.field)
    return Comodule(host, [[host.one() if v == l else z for l in range(n)] for v in range(n)])


def _mh_zero(host: Bialgebra, t: dict[int, LinComb]) -> bool | None:
    """Zero test for an element of M⊗H given as ``{basis index: host element}``."""
    result: bool | None = True
    for e in t.values():
        z = host.is_zero(e)
        if z is False:
            return False
        if z is None:
            result = None
    return result


def _hopf_module_sides(host: Bialgebra, action: ModuleAction, coaction: Comodule, h: LinComb, l: int):
    n = coaction.n
    # ρ(h·m_l)
    a = action.matrix_of(h)
    lhs = {v: host.zero() for v in range(n)}
    for i in range(n):
        if a[i][l]:
            for v, g in coaction.coaction(i):
                lhs[v] = lhs[v] + g.scale(a[i][l])
    # Σ h1·m_w ⊗ h2 g_wl
    rhs = {v: host.zero() for v in range(n)}
    for (k1, k2), s in host.delta(h).items():
        a1 = action.matrix_of(host.key_element(k1))
        e2 = host.key_element(k2)
        for w, g in coaction.coaction(l):
            prod = host.mul(e2, g).scale(s)
            for v in range(n):
                if a1[v][w]:
                    rhs[v] = rhs[v] + prod.scale(a1[v][w])
    return lhs, rhs


def check_hopf_module(
    host: Bialgebra, action: ModuleAction, coaction: Comodule, elements: Mapping[str, LinComb] | None = None
) -> Verdict:
    """ρ(h·m) = Σ h₍₁₎·m₍₀₎ ⊗ h₍₂₎m₍₁₎ on generators (or given elements) and basis vectors.

    Both sides are multiplicative in h, so generators suffice.
    """
    if action.n != coaction.n:
        raise ValueError(f"dimension mismatch: action on k^{action.n}, coaction on k^{coaction.n}")
    if elements is None:
        elements = {g: host.gen(g) for g in host.generators}
    fails: list[Witness] = []
    unknown: list[Witness] = []
    for name, h in elements.items():
        for l in range(coaction.n):
            lhs, rhs = _hopf_module_sides(host, action, coaction, h, l)
            diff = {v: lhs[v] - rhs[v] for v in lhs}
            z = _mh_zero(host, diff)
            if z is not True:
                fmt = lambda t: " + ".join(f"m{v + 1}⊗({host.render(e)})" for v, e in t.items() if e) or "0"
                w = Witness(f"Hopf module h={name} m=m{l + 1}", fmt(lhs), fmt(rhs), ("lhs", "rhs"))
                (fails if z is False else unknown).append(w)
    return Verdict.from_checks(fails, unknown, "Hopf module compatibility")


def r_from_hopf_module(action: ModuleAction, coaction: Comodule) -> EndoTensor:
    """R(m⊗n) = Σ n₍₁₎·m ⊗ n₍₀₎."""
    host = action.host
    mats = [[action.matrix_of(coaction.g[j][u]) for u in range(coaction.n)] for j in range(coaction.n)]
    return endo_from_function(host.field, coaction.n, lambda u, v, j, i: mats[j][u][i][v])


def map_element(target: Bialgebra, assignment: Mapping[str, LinComb], e: LinComb) -> LinComb:
    """Image of a word combination under generators ↦ ``assignment`` (extended multiplicatively)."""
    out = target.zero()
    for w, c in e.items():
        out = out + target.prod(*(assignment[g] for g in w)).scale(c)
    return out


def check_bialgebra_map(
    source: PresentedBialgebra, target: Bialgebra, assignment: Mapping[str, LinComb]
) -> Verdict:
    """Relations map to zero and Δ, ε commute with the map on generators."""
    fails: list[Witness] = []
    unknown: list[Witness] = []
    for g in source.generators:
        if g not in assignment:
            raise ValueError(f"assignment missing generator {g}")
    img = {g: target._element(dict(assignment[g].terms)) for g in source.generators}

    def f_word(w: Word) -> LinComb:
        return target.prod(*(img[g] for g in w))

    def f_elem(e: LinComb) -> LinComb:
        return map_element(target, img, e)

    for lab, r in zip(source.labels, source.relations):
        fr = f_elem(r)
        z = target.is_zero(fr)
        if z is not True:
            w = Witness(f"{lab}: {r}", 0, target.render(fr))
            (fails if z is False else unknown).append(w)
    for g in source.generators:
        lhs = target.delta(img[g])
        rhs = LinComb.zero(target.field)
        for (a, b), s in source.generator_delta(g).items():
            rhs = rhs + target.tensor(f_word(a), f_word(b)).scale(s)
        z = target.tensor_equal(lhs, rhs)
        if z is not True:
            w = Witness(f"Δ∘f at {g}", target.render_tensor(rhs), target.render_tensor(lhs))
            (fails if z is False else unknown).append(w)
        e1, e2 = target.counit(img[g]), source.counit(source.gen(g))
        if e1 != e2:
            fails.append(Witness(f"ε∘f at {g}", e2, e1))
    return Verdict.from_checks(fails, unknown, "bialgebra map")
