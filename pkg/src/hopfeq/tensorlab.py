"""Endomorphisms of M⊗M by structure constants, leg embeddings into M⊗M⊗M,
the operator equations (Hopf, QYBE and relatives) and brute-force search.

Index convention: for a basis m_1..m_n of M,

    R(m_v ⊗ m_u) = Σ_{i,j} x[u,v; j,i] m_i ⊗ m_j

and the n²×n² matrix of R uses the lexicographic basis of M⊗M (first factor
most significant), so ``x[u,v; j,i] = matrix[i*n + j][v*n + u]`` with 0-based
indices. All public index arguments below are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from . import linalg
from .kernel import Field, LinComb, Scalar, Verdict, Witness

Kind = Literal["hopf", "qybe", "inverse_eq", "commute13", "mixed"]
KINDS: tuple[str, ...] = ("hopf", "qybe", "inverse_eq", "commute13", "mixed")

SEARCH_LIMIT = 2**24


@dataclass(frozen=True)
class EndoTensor:
    field: Field
    n: int
    matrix: tuple[tuple[Scalar, ...], ...]

    def x(self, u: int, v: int, j: int, i: int) -> Scalar:
        """Coefficient of m_i⊗m_j in R(m_v⊗m_u)."""
        n = self.n
        return self.matrix[i * n + j][v * n + u]

    @property
    def tensor(self) -> list:
        """Nested array ``t[j][i][u][v] = x[u,v; j,i]``."""
        rng = range(self.n)
        return [[[[self.x(u, v, j, i) for v in rng] for u in rng] for i in rng] for j in rng]

    def rows(self) -> list[list[Scalar]]:
        return [list(r) for r in self.matrix]

    def apply(self, v: int, u: int) -> LinComb:
        """R(m_v⊗m_u) as a combination of index pairs (i, j)."""
        n = self.n
        col = v * n + u
        return LinComb(self.field, {(r // n, r % n): self.matrix[r][col] for r in range(n * n)})

    def nonzero(self) -> dict[tuple[int, int, int, int], Scalar]:
        """``{(u, v, j, i): x}`` for the nonzero structure constants."""
        rng = range(self.n)
        return {
            (u, v, j, i): self.x(u, v, j, i)
            for u, v, j, i in itertools.product(rng, rng, rng, rng)
            if self.x(u, v, j, i)
        }

    def __str__(self) -> str:
        return "\n".join(" ".join(str(c) for c in row) for row in self.matrix)


@dataclass(frozen=True)
class TripleEndo:
    """Dense n³×n³ matrix on M⊗M⊗M, basis lexicographic, leftmost factor most significant."""

    field: Field
    n: int
    matrix: tuple[tuple[Scalar, ...], ...]

    def __matmul__(self, other: TripleEndo) -> TripleEndo:
        return TripleEndo(self.field, self.n, _freeze(linalg.matmul(self.matrix, other.matrix, self.field)))

    def column(self, c: int) -> LinComb:
        n = self.n
        return LinComb(
            self.field,
            {(r // (n * n), (r // n) % n, r % n): self.matrix[r][c] for r in range(n**3)},
        )


def _freeze(rows: Sequence[Sequence[Scalar]]) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(r) for r in rows)


def endo_from_matrix(field: Field, n: int, m: Sequence[Sequence]) -> EndoTensor:
    size = n * n
    if len(m) != size or any(len(row) != size for row in m):
        raise ValueError(f"expected a {size}x{size} matrix for n={n}")
    return EndoTensor(field, n, _freeze([[field(c) for c in row] for row in m]))


def endo_to_matrix(r: EndoTensor) -> list[list[Scalar]]:
    return r.rows()


def endo_from_function(field: Field, n: int, x) -> EndoTensor:
    """Build from a callable ``x(u, v, j, i)`` giving structure constants."""
    m = linalg.zeros(field, n * n, n * n)
    for u, v, j, i in itertools.product(range(n), repeat=4):
        m[i * n + j][v * n + u] = field(x(u, v, j, i))
    return EndoTensor(field, n, _freeze(m))


def identity_endo(field: Field, n: int) -> EndoTensor:
    return EndoTensor(field, n, _freeze(linalg.identity(field, n * n)))


def switch_endo(field: Field, n: int) -> EndoTensor:
    """τ(m_a⊗m_b) = m_b⊗m_a."""
    m = linalg.zeros(field, n * n, n * n)
    for a, b in itertools.product(range(n), repeat=2):
        m[b * n + a][a * n + b] = field.one
    return EndoTensor(field, n, _freeze(m))


def permutation_p23(field: Field, n: int) -> TripleEndo:
    """Swap of the second and third tensor factors."""
    size = n**3
    m = linalg.zeros(field, size, size)
    for a, b, c in itertools.product(range(n), repeat=3):
        m[a * n * n + c * n + b][a * n * n + b * n + c] = field.one
    return TripleEndo(field, n, _freeze(m))


def leg_embed(r: EndoTensor, legs: str | int) -> TripleEndo:
    legs = str(legs)
    f, n = r.field, r.n
    eye = linalg.identity(f, n)
    if legs == "12":
        return TripleEndo(f, n, _freeze(linalg.kron(r.matrix, eye, f)))
    if legs == "23":
        return TripleEndo(f, n, _freeze(linalg.kron(eye, r.matrix, f)))
    if legs == "13":
        p = permutation_p23(f, n)
        return p @ leg_embed(r, "12") @ p
    raise ValueError(f"legs must be one of 12, 13, 23, not {legs!r}")


def _same_space(r: EndoTensor, s: EndoTensor) -> None:
    if r.n != s.n:
        raise ValueError(f"dimension mismatch: {r.n} vs {s.n}")
    if r.field != s.field:
        raise ValueError(f"field mismatch: {r.field} vs {s.field}")


def equation_sides(kind: str, r: EndoTensor, s: EndoTensor | None = None) -> tuple[TripleEndo, TripleEndo]:
    """Both sides of the named identity as operators on M⊗M⊗M."""
    if kind == "mixed":
        if s is None:
            raise ValueError("kind=mixed needs a second tensor S")
        _same_space(r, s)
        r23, s13, s12 = leg_embed(r, "23"), leg_embed(s, "13"), leg_embed(s, "12")
        return r23 @ s13 @ s12, s12 @ r23
    a12, a13, a23 = (leg_embed(r, legs) for legs in ("12", "13", "23"))
    if kind == "hopf":
        return a23 @ a13 @ a12, a12 @ a23
    if kind == "qybe":
        return a12 @ a13 @ a23, a23 @ a13 @ a12
    if kind == "inverse_eq":
        return a12 @ a13 @ a23, a23 @ a12
    if kind == "commute13":
        return a12 @ a13, a13 @ a12
    raise ValueError(f"unknown equation kind {kind!r}")


def _triple_name(key: tuple[int, ...]) -> str:
    return "⊗".join(f"m{k + 1}" for k in key)


def check_equation(kind: str, r: EndoTensor, s: EndoTensor | None = None) -> Verdict:
    lhs, rhs = equation_sides(kind, r, s)
    n = r.n
    for col in range(n**3):
        a, b = lhs.column(col), rhs.column(col)
        if a != b:
            triple = (col // (n * n), (col // n) % n, col % n)
            w = Witness(
                f"{kind} at {_triple_name(triple)}",
                a.format(_triple_name),
                b.format(_triple_name),
                ("lhs", "rhs"),
            )
            return Verdict("fail", (w,), f"{kind} equation violated")
    return Verdict.ok(f"{kind} equation holds")


def component_check_mixed(r: EndoTensor, s: EndoTensor) -> Verdict:
    """Componentwise form of R²³S¹³S¹² = S¹²R²³ in structure constants."""
    _same_space(r, s)
    n, f = r.n, r.field
    rng = range(n)
    x, y = r.x, s.x
    for i, j, k, l, p, q in itertools.product(rng, repeat=6):
        lhs = f.zero
        for u, v, b in itertools.product(rng, repeat=3):
            c = x(u, v, j, i)
            if c:
                lhs = lhs + c * y(k, b, u, p) * y(l, q, v, b)
        rhs = f.zero
        for a in rng:
            rhs = rhs + x(k, l, j, a) * y(a, q, i, p)
        if lhs != rhs:
            loc = f"(i,j,k,l,p,q)=({i + 1},{j + 1},{k + 1},{l + 1},{p + 1},{q + 1})"
            return Verdict("fail", (Witness(loc, lhs, rhs, ("lhs", "rhs")),), "component identity violated")
    return Verdict.ok("component identity holds")


def component_check_hopf(r: EndoTensor) -> Verdict:
    return component_check_mixed(r, r)


def invert_endo(r: EndoTensor) -> EndoTensor:
    inv = linalg.inverse(r.matrix, r.field)
    return EndoTensor(r.field, r.n, _freeze(inv))


def compose_endo(a: EndoTensor, b: EndoTensor) -> EndoTensor:
    """The composite a∘b."""
    _same_space(a, b)
    return EndoTensor(a.field, a.n, _freeze(linalg.matmul(a.matrix, b.matrix, a.field)))


def kron_endo(field: Field, f: Sequence[Sequence], g: Sequence[Sequence]) -> EndoTensor:
    """f⊗g for two n×n matrices acting on column coordinates."""
    n = len(f)
    ff = [[field(c) for c in row] for row in f]
    gg = [[field(c) for c in row] for row in g]
    return EndoTensor(field, n, _freeze(linalg.kron(ff, gg, field)))


# ---------------------------------------------------------------------------
# brute-force search over prime fields (vectorised; candidate index = base-p
# digits of the row-major matrix, most significant digit first)


def _candidates(p: int, n: int, start: int, stop: int) -> np.ndarray:
    size = n * n
    digits = size * size
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), digits), dtype=np.int64)
    rest = idx.copy()
    for d in range(digits - 1, -1, -1):
        out[:, d] = rest % p
        rest //= p
    return out.reshape(len(idx), size, size)


def _legs_batch(mats: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    b = mats.shape[0]
    r4 = mats.reshape(b, n, n, n, n)
    eye = np.eye(n, dtype=np.int64)
    n3 = n**3
    r12 = np.einsum("zabde,cf->zabcdef", r4, eye).reshape(b, n3, n3)
    r23 = np.einsum("ad,zbcef->zabcdef", eye, r4).reshape(b, n3, n3)
    r13 = np.einsum("zacdf,be->zabcdef", r4, eye).reshape(b, n3, n3)
    return r12, r13, r23


def _mm(p: int, *ms: np.ndarray) -> np.ndarray:
    out = ms[0]
    for m in ms[1:]:
        out = np.matmul(out, m) % p
    return out


def batch_equation_mask(p: int, n: int, kind: str, mats: np.ndarray) -> np.ndarray:
    """Operator-composition test of ``kind`` for a stack of matrices mod p."""
    r12, r13, r23 = _legs_batch(mats, n)
    if kind == "hopf":
        lhs, rhs = _mm(p, r23, r13, r12), _mm(p, r12, r23)
    elif kind == "qybe":
        lhs, rhs = _mm(p, r12, r13, r23), _mm(p, r23, r13, r12)
    elif kind == "inverse_eq":
        lhs, rhs = _mm(p, r12, r13, r23), _mm(p, r23, r12)
    elif kind == "commute13":
        lhs, rhs = _mm(p, r12, r13), _mm(p, r13, r12)
    else:
        raise ValueError(f"kind {kind!r} is not searchable")
    return np.all((lhs % p) == (rhs % p), axis=(1, 2))


def batch_component_hopf_mask(p: int, n: int, mats: np.ndarray) -> np.ndarray:
    """Structure-constant test of the Hopf equation for a stack of matrices mod p."""
    b = mats.shape[0]
    m = mats.reshape(b, n, n, n, n)  # m[z, i, j, v, u] = x[u,v; j,i]
    lhs = np.einsum("zijvu,zpubk,zbvql->zijklpq", m, m, m, optimize=True) % p
    rhs = np.einsum("zajlk,zpiqa->zijklpq", m, m, optimize=True) % p
    return np.all((lhs == rhs).reshape(b, -1), axis=1)


def search_size(p: int, n: int) -> int:
    return p ** (n**4)


def iter_search_masks(
    field: Field, n: int, kind: str, start: int = 0, stop: int | None = None, chunk: int = 8192, method: str = "operator"
) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield ``(offset, matrices, mask)`` chunks over the candidate index range."""
    if not field.is_prime_field:
        raise ValueError("search needs a prime field")
    p = field.modulus
    total = search_size(p, n)
    if total > SEARCH_LIMIT:
        raise ValueError(f"search space too large: {p}^{n**4} candidates > 2^24")
    stop = total if stop is None else min(stop, total)
    if not 0 <= start <= stop:
        raise ValueError(f"bad range {start}..{stop}")
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        mats = _candidates(p, n, lo, hi)
        if method == "operator":
            mask = batch_equation_mask(p, n, kind, mats)
        elif method == "component":
            if kind != "hopf":
                raise ValueError("component search is only defined for the Hopf equation")
            mask = batch_component_hopf_mask(p, n, mats)
        else:
            raise ValueError(f"unknown method {method!r}")
        yield lo, mats, mask


def search_endos(
    field: Field, n: int, kind: str, start: int = 0, stop: int | None = None
) -> Iterator[EndoTensor]:
    """All candidates in index order satisfying ``check_equation(kind)``."""
    for _, mats, mask in iter_search_masks(field, n, kind, start, stop):
        for m in mats[mask]:
            yield endo_from_matrix(field, n, [[int(c) for c in row] for row in m])


def candidate_index(r: EndoTensor) -> int:
    p = r.field.modulus
    idx = 0
    for row in r.matrix:
        for c in row:
            idx = idx * p + int(c)
    return idx
