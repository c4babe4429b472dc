import random

import pytest

from coble import data
from coble.enriques import (
    CobleSurfaceData,
    check_isotropic_sequence,
    check_root_basis,
    coble_mukai_lattice,
    exact_sequence_report,
    extended_picard,
    gf2_rank,
    picard_index_in_extended,
    verify_cm_pic_identification,
)
from coble.qlattice import is_enriques_lattice, profile
from coble.report import FAIL, KNOWN, NOT_APPLICABLE, PASS
from coble.surface import blow_up_point, contract, projective_plane
from coble.surface_file import bundled_surface


def _toy():
    S = blow_up_point(projective_plane("T"), "E")
    return S.with_boundary(["B"], {"B": 2 * S.cls("E")})


def test_extended_picard_toy():
    d = CobleSurfaceData.from_surface(_toy())
    ext = extended_picard(d)
    assert ext.rank == 2
    # beta/2 = E is already integral
    assert picard_index_in_extended(d) == 1
    cm = coble_mukai_lattice(d)
    assert cm.rank == 1 and cm.gram == ((1,),)


def test_coble_data_validation():
    S = blow_up_point(projective_plane(), "E")
    with pytest.raises(ValueError):
        CobleSurfaceData(S, (S.cls("E"),))
    with pytest.raises(ValueError):
        CobleSurfaceData(S, (S.cls("1/2E"),))


def test_pencil_extended_and_cm(pencil):
    d = CobleSurfaceData.from_surface(pencil)
    # (C1 + C2)/2 = -K_V is already integral, so only C1/2 adds anything
    assert picard_index_in_extended(d) == 2
    cm = coble_mukai_lattice(d)
    p = profile(cm)
    assert (p.rank, p.signature, p.even, abs(p.discriminant)) == (10, (1, 9, 0), True, 1)
    assert is_enriques_lattice(cm)[0]


def test_cm_identification_pencil(pencil, pencil_x):
    rep = verify_cm_pic_identification(pencil_x, CobleSurfaceData.from_surface(pencil), pencil.cls("E1 - E2"))
    assert rep.ok, rep.to_text()
    assert {c.status for c in rep.checks} == {PASS}


def test_cm_identification_zero_k_fails(pencil, pencil_x):
    rep = verify_cm_pic_identification(pencil_x, CobleSurfaceData.from_surface(pencil), pencil.zero())
    assert rep["kernel_is_K"].status == FAIL
    assert "kernel trivial" in rep["kernel_is_K"].note


def test_coble10_single_boundary():
    S = bundled_surface("coble10.surface")
    C = contract(S)
    d = CobleSurfaceData.from_surface(S)
    assert picard_index_in_extended(d) == 1
    rep = verify_cm_pic_identification(C, d, S.canonical)
    assert rep.ok, rep.to_text()
    seq = exact_sequence_report(C)
    assert seq.ok and seq["index"].values["2^(s-1)"] == 1


def test_root_basis_pencil(pencil, pencil_x):
    alphas = [pencil.cls(a) for a in data.PENCIL["root_basis"]]
    assert check_root_basis(pencil_x, alphas).ok
    rng = random.Random(7)
    for _ in range(5):
        perm = alphas[:]
        rng.shuffle(perm)
        assert check_root_basis(pencil_x, perm).ok
    bad = alphas[:-1] + [pencil.cls("R9")]
    assert not check_root_basis(pencil_x, bad).ok


def test_isotropic_pencil(pencil, pencil_x):
    fs = [pencil.cls(f) for f in data.PENCIL["isotropic_r"]]
    rep = check_isotropic_sequence(pencil_x, fs, pencil.cls(data.PENCIL["delta"]))
    assert rep["isotropic"].status == PASS
    assert rep["mutual_one"].status == PASS
    assert rep["delta_identity"].status == FAIL
    rev = check_isotropic_sequence(pencil_x, fs[::-1])
    assert rev["isotropic"].status == rev["mutual_one"].status == PASS
    alt = check_isotropic_sequence(pencil_x, [pencil.cls(f) for f in data.PENCIL["isotropic_e"]])
    assert alt["isotropic"].status == FAIL
    with pytest.raises(ValueError):
        check_isotropic_sequence(pencil_x, fs[:1])


def test_exact_sequence_pencil(pencil_x):
    rep = exact_sequence_report(pencil_x)
    assert rep.ok
    assert rep["index"].values["free_part_index"] == 2


def test_gf2_rank():
    assert gf2_rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert gf2_rank([[2, 4]]) == 0
    assert gf2_rank([]) == 0


def test_broken_anticanonical_relation_flagged(pencil, pencil_x):
    broken = pencil.__class__(pencil.name, pencil.labels, pencil.gram, pencil.cls("-3H + E1 + E2"),
                          pencil.boundary, pencil.classes)
    C = contract(broken)
    d = CobleSurfaceData.from_surface(broken)
    K = broken.cls("E1 - E2")
    for rep in (verify_cm_pic_identification(C, d, K),
                check_root_basis(C, [broken.cls(a) for a in data.PENCIL["root_basis"]]),
                check_isotropic_sequence(C, [broken.cls("E1"), broken.cls("E1 + 2R9")]),
                exact_sequence_report(C)):
        assert rep["anticanonical"].status == FAIL
        assert not rep.ok


def test_report_downgrade_and_json():
    from coble.report import VerificationReport
    rep = VerificationReport("t")
    rep.add("a", True, {"x": 1})
    rep.add("b", False, {"y": [1, 2]})
    rep.add("c", None, {})
    assert not rep.ok and rep["c"].status == NOT_APPLICABLE
    rep.downgrade({"b": "misprint"})
    assert rep.ok and rep["b"].status == KNOWN
    assert rep.to_json() == rep.to_json()
