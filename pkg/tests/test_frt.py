
from hopfeq.catalog import FK_COMATRIX, FK_MATRIX, fk_bialgebra
from hopfeq.frt import build_br, canonical_comodule, chi_relations, comatrix_coalgebra, comatrix_name
from hopfeq.hopfcore import check_bialgebra_map
from hopfeq.kernel import GF, QQ
from hopfeq.tensorlab import endo_from_matrix, identity_endo, search_endos

R_FK = endo_from_matrix(GF(2), 2, FK_MATRIX)


def test_comatrix_names():
    assert comatrix_name(1, 0, 0) == "c"
    assert comatrix_name(2, 1, 0) == "c21"
    assert comatrix_name(12, 10, 2) == "c11_3"


def test_comatrix_coalgebra():
    C = comatrix_coalgebra(QQ, 2)
    assert sorted(C.delta["c12"]) == [("c11", "c12", 1), ("c12", "c22", 1)]
    assert C.counit["c11"] == 1 and C.counit["c12"] == 0


def test_chi_relations_of_fk():
    chi = chi_relations(R_FK)
    assert len(chi.nonzero()) == 16
    assert str(chi[1, 1, 1, 1]) == "c11*c11 + c11"
    assert str(chi[2, 2, 1, 1]) == "c21*c21"
    assert str(chi[1, 2, 1, 2]) == "c21*c12 + c11*c22 + c11"
    assert chi.labelled()[0][0] == "χ(1,1,1,1)"


def test_chi_relation_for_a_scalar_solution():
    assert [str(p) for p in chi_relations(endo_from_matrix(QQ, 1, [[1]])).nonzero()] == ["cc - c"]


def test_br_maps_onto_fk():
    br = build_br(R_FK)
    H = fk_bialgebra()
    good = {c: H.gen(name) for name, c in FK_COMATRIX.items()}
    assert check_bialgebra_map(br, H, good).passed
    swapped = dict(good, c12=H.gen("z"), c21=H.gen("y"))
    v = check_bialgebra_map(br, H, swapped)
    assert v.failed
    assert any(w.location.startswith("χ(") for w in v.witnesses)


def test_canonical_comodule_is_a_comodule():
    br = build_br(R_FK)
    assert canonical_comodule(br, 2).check().passed


def test_br_of_identity():
    br = build_br(identity_endo(QQ, 2))
    assert br.check_axioms().passed


def test_br_is_a_bialgebra_even_for_a_non_solution():
    br = build_br(endo_from_matrix(QQ, 2, FK_MATRIX))
    assert br.check_axioms().passed


def test_br_builds_for_every_small_solution():
    count = 0
    for r in search_endos(GF(2), 2, "hopf"):
        br = build_br(r)
        assert len(br.relations) == len(chi_relations(r).nonzero())
        count += 1
    assert count == 147
