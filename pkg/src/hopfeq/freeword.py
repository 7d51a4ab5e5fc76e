"""Noncommutative polynomials over named generators and degree-truncated
two-sided ideal membership.

Words are tuples of generator names; the empty tuple is the unit. Words are
ordered by degree, then lexicographically by the declared generator order.
Ideal membership is decided by linear algebra on the span of all products
``w1 * r * w2`` of degree at most a bound D. Because relations may be
inhomogeneous, "member" answers are definitive while "not a member up to D"
only says no certificate exists at that bound.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterable, Iterator, Sequence

from .kernel import Field, LinComb, Scalar

Word = tuple[str, ...]

DEFAULT_DEGREE = 4
DEFAULT_SLACK = 2


class FreeAlgebra:
    """The tensor algebra k⟨generators⟩; parent of :class:`NCPoly` values."""

    def __init__(self, field: Field, generators: Sequence[str]):
        if len(set(generators)) != len(generators):
            raise ValueError(f"repeated generator in {generators}")
        if "1" in generators:
            raise ValueError("'1' is reserved for the unit")
        self.field = field
        self.generators: tuple[str, ...] = tuple(generators)
        self._index = {g: i for i, g in enumerate(self.generators)}
        self._keys: dict[Word, tuple] = {}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FreeAlgebra)
            and self.field == other.field
            and self.generators == other.generators
        )

    def __hash__(self) -> int:
        return hash((self.field, self.generators))

    def __repr__(self) -> str:
        return f"FreeAlgebra({self.field}, {list(self.generators)})"

    def order_key(self, w: Word) -> tuple:
        k = self._keys.get(w)
        if k is None:
            try:
                k = (len(w), tuple(self._index[g] for g in w))
            except KeyError as e:
                raise ValueError(f"unknown generator {e.args[0]!r}") from None
            self._keys[w] = k
        return k

    def poly(self, terms: dict[Word, Any] | None = None) -> NCPoly:
        terms = terms or {}
        for w in terms:
            self.order_key(tuple(w))
        return NCPoly(self, {tuple(w): c for w, c in terms.items()})

    def word(self, w: Iterable[str], coeff: Any = 1) -> NCPoly:
        return self.poly({tuple(w): coeff})

    def gen(self, name: str) -> NCPoly:
        return self.word((name,))

    def gens(self) -> tuple[NCPoly, ...]:
        return tuple(self.gen(g) for g in self.generators)

    def one(self) -> NCPoly:
        return self.word(())

    def zero(self) -> NCPoly:
        return NCPoly(self, {})

    def __call__(self, c: Any) -> NCPoly:
        if isinstance(c, NCPoly):
            if c.parent != self:
                raise ValueError("alphabet mismatch")
            return c
        return self.word((), c)

    def words(self, max_degree: int, min_degree: int = 0) -> Iterator[Word]:
        """All words with degree in [min_degree, max_degree], in word order."""
        for d in range(min_degree, max_degree + 1):
            yield from itertools.product(self.generators, repeat=d)


class NCPoly(LinComb):
    """Element of the free algebra: ``{word: coefficient}``."""

    __slots__ = ("parent",)

    def __init__(self, parent: FreeAlgebra, terms: dict | None = None):
        super().__init__(parent.field, terms)
        self.parent = parent

    def _new(self, terms: dict) -> NCPoly:
        obj = NCPoly.__new__(NCPoly)
        obj.field = self.field
        obj.terms = terms
        obj.parent = self.parent
        return obj

    def _coerce(self, other: Any) -> NCPoly:
        if isinstance(other, NCPoly):
            if other.parent != self.parent:
                raise ValueError(f"alphabet mismatch: {self.parent} vs {other.parent}")
            return other
        if isinstance(other, LinComb):
            raise TypeError("cannot mix NCPoly with a plain LinComb")
        return self.parent(other)

    def __add__(self, other: Any) -> NCPoly:
        return LinComb.__add__(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> NCPoly:
        return LinComb.__add__(self, -self._coerce(other))

    def __rsub__(self, other: Any) -> NCPoly:
        return LinComb.__add__(-self, self._coerce(other))

    def __mul__(self, other: Any) -> NCPoly:
        if not isinstance(other, NCPoly):
            if isinstance(other, LinComb):
                return NotImplemented
            return self.scale(other)
        other = self._coerce(other)
        out: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return self._new(out)

    def __rmul__(self, s: Any) -> NCPoly:
        return self.scale(s)

    def __pow__(self, e: int) -> NCPoly:
        out = self.parent.one()
        for _ in range(e):
            out = out * self
        return out

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def words_sorted(self) -> list[Word]:
        return sorted(self.terms, key=self.parent.order_key, reverse=True)

    def leading_word(self) -> Word | None:
        return max(self.terms, key=self.parent.order_key) if self.terms else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NCPoly):
            return self.parent == other.parent and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = LinComb.__hash__

    def format(self, render=None, key=None) -> str:
        if not self.terms:
            return "0"
        sep = "" if all(len(g) == 1 for g in self.parent.generators) else "*"
        ordered = self.words_sorted()
        rank = {w: i for i, w in enumerate(ordered)}
        return LinComb.format(self, lambda w: sep.join(w) if w else "1", key=lambda w: rank[w])

    def __str__(self) -> str:
        return self.format()


def poly_arith(op: str, a: NCPoly, b: NCPoly | Any) -> NCPoly:
    if op == "add":
        return a + b
    if op == "scale":
        return a.scale(b)
    if op == "multiply":
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------


@dataclass
class IdealBasis:
    """Echelonised span of ``w1*r*w2`` (degree <= bound) for the given relations.

    ``pivots`` maps each leading word to its monic row; rows are fully reduced
    against each other.
    """

    parent: FreeAlgebra
    relations: tuple[NCPoly, ...]
    bound: int
    pivots: dict[Word, dict[Word, Scalar]] = dc_field(default_factory=dict)
    certificates: dict[Word, dict[tuple[Word, int, Word], Scalar]] | None = None

    def __len__(self) -> int:
        return len(self.pivots)

    def basis(self) -> list[NCPoly]:
        key = self.parent.order_key
        return [NCPoly(self.parent, dict(self.pivots[w])) for w in sorted(self.pivots, key=key)]

    def leading_words(self) -> set[Word]:
        return set(self.pivots)

    def _reduce_terms(self, terms: dict[Word, Scalar], cert: dict | None = None) -> dict[Word, Scalar]:
        key = self.parent.order_key
        work = dict(terms)
        heap = [(_neg(key(w)), w) for w in work]
        heapq.heapify(heap)
        out: dict[Word, Scalar] = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if c is None or not c:
                continue
            row = self.pivots.get(w)
            if row is None:
                out[w] = c
                continue
            for w2, c2 in row.items():
                if w2 == w:
                    continue
                prev = work.get(w2)
                if prev is None:
                    work[w2] = -c * c2
                    heapq.heappush(heap, (_neg(key(w2)), w2))
                else:
                    work[w2] = prev - c * c2
            if cert is not None:
                for g, cg in self.certificates[w].items():
                    cert[g] = cert.get(g, 0) - c * cg
        return out

    def reduce(self, p: NCPoly) -> NCPoly:
        if p.parent != self.parent:
            raise ValueError("alphabet mismatch")
        if p.degree > self.bound:
            raise ValueError(f"degree {p.degree} exceeds ideal bound {self.bound}")
        return NCPoly(self.parent, self._reduce_terms(p.terms))

    def reduce_with_certificate(self, p: NCPoly) -> tuple[NCPoly, dict]:
        if self.certificates is None:
            raise ValueError("basis built without certificate tracking")
        if p.degree > self.bound:
            raise ValueError(f"degree {p.degree} exceeds ideal bound {self.bound}")
        cert: dict = {}
        rem = self._reduce_terms(p.terms, cert)
        # p - rem = -Σ cert[g] * g, so p - rem = Σ (-cert[g]) g
        return NCPoly(self.parent, rem), {g: -c for g, c in cert.items() if c}

    def contains(self, p: NCPoly) -> bool:
        return not self.reduce(p).terms


def _neg(key: tuple) -> tuple:
    d, idx = key
    return (-d, tuple(-i for i in idx))


def _padded_products(parent: FreeAlgebra, relations: Sequence[NCPoly], bound: int):
    for ri, r in enumerate(relations):
        slack = bound - r.degree
        for total in range(slack + 1):
            for left in range(total + 1):
                for w1 in itertools.product(parent.generators, repeat=left):
                    for w2 in itertools.product(parent.generators, repeat=total - left):
                        yield (w1, ri, w2), {w1 + w + w2: c for w, c in r.terms.items()}


def ideal_basis(
    parent: FreeAlgebra, relations: Sequence[NCPoly], bound: int = DEFAULT_DEGREE, track: bool = False
) -> IdealBasis:
    relations = tuple(r for r in relations)
    for r in relations:
        if r.parent != parent:
            raise ValueError("relation over a different alphabet")
    maxdeg = max((r.degree for r in relations), default=0)
    if bound < maxdeg:
        raise ValueError(f"bound {bound} below relation degree {maxdeg}")
    ib = IdealBasis(parent, tuple(r for r in relations if r.terms), bound, {}, {} if track else None)
    key = parent.order_key
    for gen_id, terms in _padded_products(parent, ib.relations, bound):
        cert = {} if track else None
        row = ib._reduce_terms(terms, cert)
        if not row:
            continue
        lead = max(row, key=key)
        inv = parent.field.one / row[lead]
        row = {w: c * inv for w, c in row.items()}
        ib.pivots[lead] = row
        if track:
            # row = (generator + Σ cert) * inv
            combo = {g: c * inv for g, c in cert.items() if c}
            combo[gen_id] = combo.get(gen_id, 0) + inv
            ib.certificates[lead] = combo
    _interreduce(ib)
    return ib


def _interreduce(ib: IdealBasis) -> None:
    """Turn the semi-echelon rows into reduced echelon form."""
    key = ib.parent.order_key
    leads = sorted(ib.pivots, key=key)
    for lead in leads:
        row = ib.pivots[lead]
        tail = {w: c for w, c in row.items() if w != lead}
        cert = {} if ib.certificates is not None else None
        if tail:
            saved = ib.pivots.pop(lead)
            red = ib._reduce_terms(tail, cert)
            ib.pivots[lead] = saved
        else:
            red = {}
        new = dict(red)
        new[lead] = ib.parent.field.one
        ib.pivots[lead] = new
        if cert is not None:
            combo = dict(ib.certificates[lead])
            for g, c in cert.items():
                combo[g] = combo.get(g, 0) + c
            ib.certificates[lead] = {g: c for g, c in combo.items() if c}


def reduce_mod_ideal(p: NCPoly, ib: IdealBasis) -> NCPoly:
    return ib.reduce(p)


@dataclass(frozen=True)
class Membership:
    """Outcome of :func:`ideal_member`: definitive ``yes`` or bounded ``not_up_to``."""

    member: bool
    bound: int
    certificate: tuple[tuple[Scalar, Word, int, Word], ...] = ()

    @property
    def status(self) -> str:
        return "yes" if self.member else f"not_up_to({self.bound})"

    def __bool__(self) -> bool:
        return self.member


def ideal_member(p: NCPoly, relations: Sequence[NCPoly], bound: int = DEFAULT_DEGREE) -> Membership:
    """Decide ``p ∈ (relations)`` using products of degree <= bound.

    Bounds are tried from the smallest admissible one upward; the first
    certificate found is returned.
    """
    parent = p.parent
    if p.degree > bound:
        raise ValueError(f"degree {p.degree} exceeds bound {bound}")
    if not p.terms:
        return Membership(True, bound, ())
    start = max([p.degree] + [r.degree for r in relations])
    for b in range(start, bound + 1):
        ib = ideal_basis(parent, relations, b, track=True)
        rem, cert = ib.reduce_with_certificate(p)
        if not rem.terms:
            items = tuple(
                (c, w1, ri, w2) for (w1, ri, w2), c in sorted(cert.items(), key=lambda kv: (kv[0][1], kv[0][0], kv[0][2]))
            )
            # relation indices refer to the nonzero relations kept by ideal_basis
            kept = [i for i, r in enumerate(relations) if r.terms]
            items = tuple((c, w1, kept[ri], w2) for c, w1, ri, w2 in items)
            return Membership(True, b, items)
    return Membership(False, bound, ())


def certificate_value(parent: FreeAlgebra, relations: Sequence[NCPoly], certificate) -> NCPoly:
    """Evaluate Σ c * w1 * r * w2 for a membership certificate."""
    out = parent.zero()
    for c, w1, ri, w2 in certificate:
        out = out + parent.word(w1, c) * relations[ri] * parent.word(w2)
    return out


class TruncatedQuotient:
    """Normal forms in k⟨gens⟩/(relations) with lazily built, cached ideal bases."""

    def __init__(self, parent: FreeAlgebra, relations: Sequence[NCPoly], degree: int = DEFAULT_DEGREE, slack: int = DEFAULT_SLACK):
        self.parent = parent
        self.relations = tuple(relations)
        self.degree = degree
        self.slack = slack
        self.min_bound = max((r.degree for r in self.relations), default=0)
        self._bases: dict[int, IdealBasis] = {}
        self._nf_cache: dict[tuple[int, Word], dict[Word, Scalar]] = {}

    def basis_at(self, bound: int) -> IdealBasis:
        ib = self._bases.get(bound)
        if ib is None:
            ib = ideal_basis(self.parent, self.relations, bound)
            self._bases[bound] = ib
        return ib

    def cap(self, query_degree: int) -> int:
        return max(self.degree, query_degree + self.slack, self.min_bound)

    def bounds(self, query_degree: int) -> range:
        lo = max(query_degree, self.min_bound)
        return range(lo, self.cap(query_degree) + 1)

    def word_nf(self, w: Word, bound: int) -> dict[Word, Scalar]:
        key = (bound, w)
        nf = self._nf_cache.get(key)
        if nf is None:
            nf = self.basis_at(bound)._reduce_terms({w: self.parent.field.one})
            self._nf_cache[key] = nf
        return nf

    def normal_form(self, p: NCPoly, bound: int | None = None) -> NCPoly:
        bound = self.cap(p.degree) if bound is None else bound
        return self.basis_at(bound).reduce(p)

    def is_zero(self, p: NCPoly) -> bool | None:
        """True when p is certified to lie in the ideal, None when undecided."""
        if not p.terms:
            return True
        if not self.relations:
            return False
        for b in self.bounds(p.degree):
            if not self.basis_at(b).reduce(p).terms:
                return True
        return None

    def tensor_is_zero(self, t: LinComb) -> bool | None:
        """Zero test in the tensor power of the quotient (keys are tuples of words)."""
        if not t.terms:
            return True
        if not self.relations:
            return False
        deg = max(max(len(w) for w in k) for k in t.terms)
        for b in self.bounds(deg):
            if not self.tensor_nf(t, b).terms:
                return True
        return None

    def tensor_nf(self, t: LinComb, bound: int) -> LinComb:
        out: dict = {}
        for key, c in t.terms.items():
            expanded: list[tuple[tuple, Scalar]] = [((), c)]
            for w in key:
                nf = self.word_nf(w, bound)
                expanded = [(k + (w2,), s * c2) for k, s in expanded for w2, c2 in nf.items()]
            for k, s in expanded:
                prev = out.get(k)
                v = s if prev is None else prev + s
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return LinComb._raw(t.field, out)
