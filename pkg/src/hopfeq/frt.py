"""The bialgebra B(R) attached to an endomorphism R of M⊗M.

Generators are the comatrix entries c_jk (Δ(c_jk) = Σ_u c_ju ⊗ c_uk,
ε(c_jk) = δ_jk); relations are the χ(i,j,k,l) polynomials; M = k^n is a
right comodule via ρ(m_l) = Σ_v m_v ⊗ c_vl.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freeword import DEFAULT_DEGREE, FreeAlgebra, NCPoly
from .hopfcore import Bialgebra, Comodule, PresentedBialgebra, SubcoalgebraView, make_presented_bialgebra
from .kernel import Field
from .tensorlab import EndoTensor


def comatrix_name(n: int, j: int, k: int) -> str:
    """Generator name for c_jk (0-based indices, 1-based names)."""
    if n == 1:
        return "c"
    if n < 10:
        return f"c{j + 1}{k + 1}"
    return f"c{j + 1}_{k + 1}"


def comatrix_names(n: int) -> list[str]:
    return [comatrix_name(n, j, k) for j in range(n) for k in range(n)]


def _comatrix_delta(n: int) -> dict[str, list[tuple[str, str, int]]]:
    return {
        comatrix_name(n, j, k): [(comatrix_name(n, j, u), comatrix_name(n, u, k), 1) for u in range(n)]
        for j in range(n)
        for k in range(n)
    }


def _comatrix_eps(n: int) -> dict[str, int]:
    return {comatrix_name(n, j, k): int(j == k) for j in range(n) for k in range(n)}


def free_comatrix_bialgebra(field: Field, n: int) -> PresentedBialgebra:
    """T(C) for the comatrix coalgebra C of order n (no relations)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return make_presented_bialgebra(
        field, comatrix_names(n), [], _comatrix_delta(n), _comatrix_eps(n), name=f"T(M^c({n}))"
    )


def comatrix_view(host: Bialgebra, n: int) -> SubcoalgebraView:
    """The comatrix coalgebra mapped into ``host`` by its generators c_jk (not necessarily injectively)."""
    names = comatrix_names(n)
    return SubcoalgebraView(host, names, (_comatrix_delta(n), _comatrix_eps(n)))


def comatrix_coalgebra(field: Field, n: int) -> SubcoalgebraView:
    """The comatrix coalgebra of order n as a subcoalgebra of its tensor algebra."""
    return SubcoalgebraView(free_comatrix_bialgebra(field, n), comatrix_names(n))


@dataclass(frozen=True)
class ChiRelationSet:
    n: int
    parent: FreeAlgebra
    chi: dict[tuple[int, int, int, int], NCPoly]

    def nonzero(self) -> list[NCPoly]:
        return [p for p in self.chi.values() if p.terms]

    def labelled(self) -> list[tuple[str, NCPoly]]:
        """Nonzero relations with 1-based ``χ(i,j,k,l)`` labels."""
        return [
            ("χ(" + ",".join(str(a + 1) for a in idx) + ")", p) for idx, p in self.chi.items() if p.terms
        ]

    def __getitem__(self, idx: tuple[int, int, int, int]) -> NCPoly:
        """χ(i,j,k,l) with 1-based indices."""
        i, j, k, l = idx
        return self.chi[i - 1, j - 1, k - 1, l - 1]

    def __len__(self) -> int:
        return len(self.chi)


def chi_relations(r: EndoTensor, parent: FreeAlgebra | None = None) -> ChiRelationSet:
    """χ(i,j,k,l) = Σ_{u,v} x_uv^{ji} c_uk c_vl − Σ_α x_kl^{jα} c_iα for all indices."""
    n, f = r.n, r.field
    if parent is None:
        parent = FreeAlgebra(f, comatrix_names(n))
    c = [[(comatrix_name(n, a, b),) for b in range(n)] for a in range(n)]
    chi = {}
    rng = range(n)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    terms: dict = {}

                    def add(w, s):
                        v = terms.get(w, f.zero) + s
                        if v:
                            terms[w] = v
                        else:
                            terms.pop(w, None)

                    for u in rng:
                        for v in rng:
                            s = r.x(u, v, j, i)
                            if s:
                                add(c[u][k] + c[v][l], s)
                    for a in rng:
                        s = r.x(k, l, j, a)
                        if s:
                            add(c[i][a], -s)
                    chi[i, j, k, l] = NCPoly(parent, terms)
    return ChiRelationSet(n, parent, chi)


def build_br(r: EndoTensor, degree: int = DEFAULT_DEGREE, check: bool = True) -> PresentedBialgebra:
    """B(R) = T(comatrix)/(χ); the constructor verifies each χ generates a coideal.

    Raises :class:`~hopfeq.hopfcore.AxiomError` naming the offending χ otherwise.
    """
    n = r.n
    pairs = chi_relations(r).labelled()
    return make_presented_bialgebra(
        r.field,
        comatrix_names(n),
        [p for _, p in pairs],
        _comatrix_delta(n),
        _comatrix_eps(n),
        degree,
        name="B(R)",
        check=check,
        labels=[lab for lab, _ in pairs],
    )


def canonical_comodule(r: EndoTensor | PresentedBialgebra, n: int | None = None) -> Comodule:
    """ρ(m_l) = Σ_v m_v ⊗ c_vl over B(R) (pass an already built B(R) to reuse it)."""
    br = build_br(r) if isinstance(r, EndoTensor) else r
    if n is None:
        n = r.n if isinstance(r, EndoTensor) else int(round(len(br.generators) ** 0.5))
    return Comodule(br, [[br.gen(comatrix_name(n, v, l)) for l in range(n)] for v in range(n)])
