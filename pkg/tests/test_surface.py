from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coble.surface import (
    blow_up_point,
    blow_up_points,
    contract,
    make_class,
    mumford_coefficients,
    mumford_pairing,
    mumford_pullback,
    parity_vector,
    picard_of_general_fiber,
    projective_plane,
    proper_transform,
)
from coble.surface_file import SurfaceFileError, bundled_surface, parse_surface


def test_plane_and_blowups():
    P = projective_plane()
    assert P.self_intersection(P.canonical) == 9
    S = blow_up_points(P, [f"E{i}" for i in range(1, 10)])
    assert S.self_intersection(S.canonical) == 0
    assert S.rank == 10
    assert S.format(S.canonical) == "-3H + E1 + E2 + E3 + E4 + E5 + E6 + E7 + E8 + E9"


def test_proper_transform_of_conic():
    S = blow_up_points(projective_plane(), ["E1", "E2"])
    D = proper_transform(S, 2 * S.cls("H"), [("E1", 1), ("E2", 1)])
    assert S.format(D) == "2H - E1 - E2"
    assert S.self_intersection(D) == 2


def test_blow_up_duplicate_label():
    S = blow_up_point(projective_plane(), "E1")
    with pytest.raises(ValueError):
        blow_up_point(S, "E1")


def test_class_arithmetic_checks_surface():
    a = make_class("A", [1])
    b = make_class("B", [1])
    with pytest.raises((TypeError, ValueError)):
        a + b
    S = projective_plane()
    with pytest.raises(ValueError):
        S.cls("3H +")
    with pytest.raises(KeyError):
        S.cls("Q")
    assert S.cls("1/2H").coefficients == (Fraction(1, 2),)


def _minus_four_toy():
    S = blow_up_point(projective_plane(), "E")
    return S.with_boundary(["B"], {"B": 2 * S.cls("E")})


def test_contract_toy():
    C = contract(_minus_four_toy())
    assert C.class_group.rank == 1 and C.class_group.torsion == (2,)
    assert C.boundary_gram == ((-4,),)


def test_contract_rejects_indefinite_boundary():
    S = blow_up_point(projective_plane(), "E")
    with pytest.raises(ValueError):
        contract(S.with_boundary(["H"]))
    with pytest.raises(ValueError):
        contract(S)


def test_mumford_toy():
    C = contract(_minus_four_toy())
    S = C.source
    E = S.cls("E")
    assert mumford_coefficients(C, E) == [Fraction(-1, 2)]
    assert mumford_pullback(C, E).is_zero
    assert mumford_pairing(C, S.cls("H"), S.cls("H")) == 1


def test_pencil_mumford_values(pencil, pencil_x):
    S = pencil
    assert mumford_coefficients(pencil_x, S.cls("H")) == [Fraction(3, 4), Fraction(3, 4)]
    assert mumford_pairing(pencil_x, S.cls("E1"), S.cls("H")) == Fraction(3, 2)
    assert mumford_pairing(pencil_x, S.cls("E1"), S.cls("R3")) == Fraction(1, 2)
    assert mumford_pairing(pencil_x, S.cls("E1"), S.cls("E2")) == 0


classes12 = st.lists(st.integers(-3, 3), min_size=12, max_size=12)


@settings(max_examples=25, deadline=None)
@given(classes12, classes12, classes12, st.integers(-3, 3))
def test_mumford_bilinear_symmetric(pencil, pencil_x, a, b, c, k):
    D, F, G = (make_class(pencil.name, v) for v in (a, b, c))
    assert mumford_pairing(pencil_x, D, F) == mumford_pairing(pencil_x, F, D)
    assert mumford_pairing(pencil_x, D + k * F, G) == (mumford_pairing(pencil_x, D, G)
                                                 + k * mumford_pairing(pencil_x, F, G))
    # each C_i is (-4), so Mumford numbers live in (1/4)Z
    assert (4 * mumford_pairing(pencil_x, D, F)).denominator == 1
    # boundary curves are numerically zero on the contraction
    assert all(mumford_pairing(pencil_x, D, c_) == 0 for c_ in pencil_x.boundary)


@settings(max_examples=30, deadline=None)
@given(classes12, classes12)
def test_parity_additive(pencil, pencil_x, a, b):
    D, F = make_class(pencil.name, a), make_class(pencil.name, b)
    pd, pf = parity_vector(pencil_x, D), parity_vector(pencil_x, F)
    assert parity_vector(pencil_x, D + F) == tuple((x + y) % 2 for x, y in zip(pd, pf))


def test_parity_examples(pencil, pencil_x):
    assert parity_vector(pencil_x, pencil.cls("R9")) == (1,)
    assert parity_vector(pencil_x, pencil.cls("E1")) == (0,)
    with pytest.raises(ValueError):
        parity_vector(pencil_x, pencil.cls("1/2R9"))


def test_general_fiber_pencil(pencil, pencil_x):
    gf = picard_of_general_fiber(pencil_x)
    assert gf.lattice.rank == 10
    assert gf.torsion_order == 2
    assert gf.index_in_free_part == 2
    assert gf.contains(pencil.cls("E1 - E2"))
    assert not gf.contains(pencil.cls("R9"))


def test_general_fiber_rejects_odd_boundary():
    S = blow_up_points(projective_plane(), ["E1", "E2"])
    S = S.with_boundary(["A", "B"], {"A": S.cls("E1"), "B": S.cls("E2")})
    with pytest.raises(ValueError):
        picard_of_general_fiber(contract(S))


def test_bundled_surfaces():
    S = bundled_surface("pencil.surface")
    assert [b for b, _ in S.boundary] == ["C1", "C2"]
    assert S.format(S.lookup("C1")) == "3H - 2E1 - R1 - R2 - R3 - R4 - R5 - R6 - R7 - R8 - R9"
    T = bundled_surface("coble10.surface")
    assert T.self_intersection(T.lookup("B")) == -4


SIMPLE = """\
surface T   # toy
gen H self=1
gen E self=-1
class B = 2E
canonical = -3H + E
boundary B
"""


def test_parse_surface_roundtrip():
    S = parse_surface(SIMPLE)
    assert S.name == "T" and S.labels == ("H", "E")
    assert S.format(S.canonical) == "-3H + E"


@pytest.mark.parametrize("text, line", [
    (SIMPLE.replace("gen E self=-1", "gen E self=x"), 3),
    (SIMPLE.replace("class B = 2E", "class B = 2Q"), 4),
    (SIMPLE + "gen H self=1\n", 7),
    (SIMPLE.replace("boundary B", "boundary Z"), 6),
    (SIMPLE + "frobnicate\n", 7),
])
def test_parse_surface_errors_carry_line(text, line):
    with pytest.raises(SurfaceFileError) as exc:
        parse_surface(text)
    assert exc.value.lineno == line
    assert f"line {line}" in str(exc.value)
