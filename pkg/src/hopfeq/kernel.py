"""Exact scalars, linear combinations and the verdict vocabulary shared by all checkers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Iterator, Literal, Mapping, Union

__all__ = [
    "FieldSpec",
    "Field",
    "Residue",
    "Scalar",
    "make_field",
    "QQ",
    "GF",
    "parse_scalar",
    "format_scalar",
    "Witness",
    "Verdict",
    "LinComb",
]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class Residue:
    """Element of GF(p), kept canonical in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other: Any) -> Residue | None:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other
        if isinstance(other, int):
            return Residue(other, self.p)
        return None

    def __add__(self, other: Any) -> Residue:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Residue:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o.v, self.p)

    def __rsub__(self, other: Any) -> Residue:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(o.v - self.v, self.p)

    def __mul__(self, other: Any) -> Residue:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.v, self.p)

    def inverse(self) -> Residue:
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other: Any) -> Residue:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> Residue:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> Residue:
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.v, e, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.v, self.p))

    def __bool__(self) -> bool:
        return self.v != 0

    def __int__(self) -> int:
        return self.v

    def __repr__(self) -> str:
        return f"Residue({self.v}, {self.p})"

    def __str__(self) -> str:
        return str(self.v)


Scalar = Union[Fraction, Residue]


@dataclass(frozen=True)
class FieldSpec:
    kind: Literal["Rationals", "PrimeField"]
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "Rationals":
            if self.modulus is not None:
                raise ValueError("the rationals carry no modulus")
        elif self.kind == "PrimeField":
            if self.modulus is None or not _is_prime(self.modulus):
                raise ValueError(f"modulus not prime: {self.modulus}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")


@dataclass(frozen=True)
class Field:
    """Arithmetic context for exact scalars; calling it coerces a value in."""

    spec: FieldSpec

    @property
    def modulus(self) -> int | None:
        return self.spec.modulus

    @property
    def is_prime_field(self) -> bool:
        return self.spec.kind == "PrimeField"

    @property
    def characteristic(self) -> int:
        return self.spec.modulus or 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, value: Any) -> Scalar:
        p = self.spec.modulus
        if p is None:
            if isinstance(value, Residue):
                raise TypeError("cannot coerce a residue into Q")
            if isinstance(value, str):
                return parse_scalar(self, value)
            return Fraction(value)
        if isinstance(value, Residue):
            if value.p != p:
                raise ValueError(f"mixing GF({value.p}) and GF({p})")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Residue(value, p)
        if isinstance(value, Fraction):
            return Residue(value.numerator, p) / Residue(value.denominator, p)
        if isinstance(value, str):
            return parse_scalar(self, value)
        raise TypeError(f"cannot coerce {value!r} into GF({p})")

    def contains(self, s: Any) -> bool:
        if self.spec.modulus is None:
            return isinstance(s, Fraction)
        return isinstance(s, Residue) and s.p == self.spec.modulus

    # explicit arithmetic interface; operators work too
    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b

    def negate(self, a: Scalar) -> Scalar:
        return -a

    def multiply(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b

    def invert(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("zero is not invertible")
        return self.one / a

    def elements(self) -> Iterator[Scalar]:
        """All elements of a prime field in residue order."""
        if self.spec.modulus is None:
            raise ValueError("Q is not finite")
        for v in range(self.spec.modulus):
            yield Residue(v, self.spec.modulus)

    def __str__(self) -> str:
        return "Q" if self.spec.modulus is None else f"GF({self.spec.modulus})"


def make_field(spec: FieldSpec) -> Field:
    return Field(spec)


QQ = make_field(FieldSpec("Rationals"))


def GF(p: int) -> Field:
    return make_field(FieldSpec("PrimeField", p))


_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def parse_scalar(field: Field, text: str) -> Scalar:
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"not a scalar: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    p = field.spec.modulus
    if p is None:
        return Fraction(num, den)
    if m.group(2) is not None:
        raise ValueError(f"fractions are not residues: {text!r}")
    if not 0 <= num < p:
        raise ValueError(f"residue {num} out of range for GF({p})")
    return Residue(num, p)


def format_scalar(s: Scalar) -> str:
    if isinstance(s, Fraction) and s.denominator != 1:
        return f"{s.numerator}/{s.denominator}"
    return str(int(s)) if isinstance(s, Fraction) else str(s)


@dataclass(frozen=True)
class Witness:
    location: str
    expected: Any
    actual: Any
    labels: tuple[str, str] = ("expected", "actual")

    def __str__(self) -> str:
        a, b = self.labels
        return f"{self.location}: {a} {self.expected}, {b} {self.actual}"


@dataclass(frozen=True)
class Verdict:
    status: Literal["pass", "fail", "inconclusive"]
    witnesses: tuple[Witness, ...] = ()
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail", "inconclusive"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witnesses:
            raise ValueError("a failing verdict needs a witness")
        if self.status == "pass" and self.witnesses:
            raise ValueError("a passing verdict carries no witnesses")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    @classmethod
    def ok(cls, detail: str = "") -> Verdict:
        return cls("pass", (), detail)

    @classmethod
    def from_checks(
        cls, failures: Iterable[Witness], unknown: Iterable[Witness] = (), detail: str = ""
    ) -> Verdict:
        """Fail on any definite failure, else inconclusive on any undecided item."""
        failures = tuple(failures)
        unknown = tuple(unknown)
        if failures:
            return cls("fail", failures, detail)
        if unknown:
            return cls("inconclusive", unknown, detail)
        return cls("pass", (), detail)

    @classmethod
    def combine(cls, verdicts: Iterable[Verdict], detail: str = "") -> Verdict:
        verdicts = list(verdicts)
        fails = [w for v in verdicts if v.status == "fail" for w in v.witnesses]
        unknown = [w for v in verdicts if v.status == "inconclusive" for w in v.witnesses]
        if any(v.status == "inconclusive" and not v.witnesses for v in verdicts) and not fails:
            return cls("inconclusive", tuple(unknown), detail)
        return cls.from_checks(fails, unknown, detail)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witnesses": [
                {"location": w.location, w.labels[0]: str(w.expected), w.labels[1]: str(w.actual)}
                for w in self.witnesses
            ],
            "detail": self.detail,
        }

    def __str__(self) -> str:
        lines = [self.status + (f" ({self.detail})" if self.detail else "")]
        lines += [f"  {w}" for w in self.witnesses]
        return "\n".join(lines)


class LinComb:
    """Finite formal linear combination ``{key: scalar}`` with zero terms dropped.

    Keys are any hashable labels: basis names, words, or tuples of those for
    tensor elements. ``order`` sorts keys for display and iteration.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[Hashable, Any] | None = None):
        self.field = field
        clean: dict[Hashable, Scalar] = {}
        if terms:
            for k, c in terms.items():
                c = field(c) if not field.contains(c) else c
                if c:
                    clean[k] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field: Field, terms: dict) -> LinComb:
        obj = cls.__new__(cls)
        obj.field = field
        obj.terms = terms
        return obj

    def _new(self, terms: dict) -> LinComb:
        return type(self)._raw(self.field, terms)

    @classmethod
    def basis(cls, field: Field, key: Hashable) -> LinComb:
        return cls._raw(field, {key: field.one})

    @classmethod
    def zero(cls, field: Field) -> LinComb:
        return cls._raw(field, {})

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, key: Hashable) -> Scalar:
        return self.terms.get(key, self.field.zero)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: LinComb) -> None:
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._new(out)

    def __neg__(self) -> LinComb:
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def scale(self, s: Any) -> LinComb:
        s = self.field(s) if not self.field.contains(s) else s
        if not s:
            return self._new({})
        return self._new({k: c * s for k, c in self.terms.items()})

    def __rmul__(self, s: Any) -> LinComb:
        if isinstance(s, LinComb):
            return NotImplemented
        return self.scale(s)

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> LinComb:
        out: dict = {}
        for k, c in self.terms.items():
            nk = f(k)
            s = out.get(nk)
            s = c if s is None else s + c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        return self._new(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self.field == other.field and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def sorted_items(self, key: Callable | None = None) -> list:
        return sorted(self.terms.items(), key=(lambda kv: key(kv[0])) if key else (lambda kv: repr(kv[0])))

    def format(self, render: Callable[[Hashable], str] = str, key: Callable | None = None) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for k, c in self.sorted_items(key):
            label = render(k)
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if label == "1":
                body = format_scalar(mag)
            elif mag == 1:
                body = label
            else:
                body = f"{format_scalar(mag)}*{label}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()})"


def tensor_label(key: tuple, render: Callable[[Hashable], str] = str) -> str:
    return "⊗".join(render(k) for k in key)
