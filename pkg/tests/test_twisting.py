import random

import pytest

from asreg.catalog import (catalog, plalg_b_relations, plalg_d_relations, plalg_e_relations,
                           poly4)
from asreg.linalg import QMatrix, SingularMatrix
from asreg.parser import parse_expr
from asreg.structure import central_space
from asreg.tensor import QuadraticPresentation, TensorElement, hilbert_coefficients
from asreg.twisting import (NotAnAutomorphism, OreData, TwistMap, hv_twist_map, ore_presentation,
                            pair_twist, sigma_derivation_check, stabilizes, zhang_twist)


def _random_tau(rng):
    while True:
        m = QMatrix.from_rows([[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)])
        if m.is_invertible():
            return m


def test_round_trip_for_random_tau():
    rng = random.Random(11)
    P = plalg_d_relations()
    for _ in range(20):
        t = _random_tau(rng)
        assert zhang_twist(zhang_twist(P, t), t.inverse()) == P


def test_twists_compose():
    rng = random.Random(3)
    P = plalg_b_relations(3)
    a, b = _random_tau(rng), _random_tau(rng)
    assert zhang_twist(P, a @ b) == zhang_twist(zhang_twist(P, a), b)


def test_identity_twist_is_trivial():
    assert zhang_twist(plalg_e_relations(), QMatrix.identity(4)) == plalg_e_relations()


@pytest.mark.parametrize("P, diag, expected", [
    (plalg_d_relations(), [2, 3, 2, 3], True),
    (plalg_d_relations(), [1, 1, 1, 2], False),
    (plalg_e_relations(), [1, 5, 7, 1], True),
])
def test_stabilizes(P, diag, expected):
    assert stabilizes(P, QMatrix.diag(diag)) is expected


def test_twisted_polynomial_ring_is_skew():
    P = zhang_twist(poly4(), QMatrix.diag([1, 2, 1, 1]))
    # tau acts on the first factor: x2 (x) x1 picks up the factor 2
    assert P.relations.contains(parse_expr("x1*x2 - 2*x2*x1").dense())
    assert hilbert_coefficients(P, 4) == [1, 4, 10, 20, 35]


def test_diagonal_twist_of_plalg_d_outside_the_family():
    # diag(1,1,2,3) breaks t11 t22 + t12 t21 = t33 t44 - t34 t43, so it is not
    # an automorphism and the twisted span has the wrong growth
    t = QMatrix.diag([1, 1, 2, 3])
    assert not stabilizes(plalg_d_relations(), t)
    P = zhang_twist(plalg_d_relations(), t)
    assert hilbert_coefficients(P, 4) == [1, 4, 10, 18, 28]
    assert zhang_twist(P, t.inverse()) == plalg_d_relations()


def test_catalog_pltwist_d_untwists_to_plalg_d():
    inst = catalog("pltwist_d")
    assert stabilizes(plalg_d_relations(), inst.tau)
    assert hilbert_coefficients(inst.P, 5) == [1, 4, 10, 20, 35, 56]
    base = zhang_twist(inst.P, inst.tau.inverse())
    assert base == plalg_d_relations()
    C = central_space(base)
    assert C.contains([1, 0, 0, 0]) and C.contains([0, 1, 0, 0])


def test_pair_twist_with_equal_maps_is_a_base_change():
    t = QMatrix.diag([1, 2, 3, 5])
    P = pair_twist(poly4(), TwistMap(t, t))
    assert P == poly4()


def test_singular_twist_map_rejected():
    with pytest.raises(SingularMatrix):
        TwistMap(QMatrix.diag([1, 0, 1, 1]), QMatrix.identity(4))


def test_hv_map_at_n_zero():
    tau = QMatrix.diag([2, 1, 1, 1])
    m = hv_twist_map(QMatrix.diag([3, 1, 1, 1]), tau, 0)
    assert m.f == QMatrix.identity(4)
    assert m.g == tau.inverse() @ tau


# Ore extensions over k[x1, x2, x3]
def _poly3():
    rels = [TensorElement.word((i, j), 3) - TensorElement.word((j, i), 3)
            for i in range(3) for j in range(i + 1, 3)]
    return QuadraticPresentation.from_relations(rels, 3)


def test_ore_extension_of_poly3_is_poly4():
    o = OreData(_poly3(), QMatrix.identity(3))
    assert sigma_derivation_check(o)
    assert ore_presentation(o) == poly4()


def test_incompatible_derivation_detected():
    d = {1: TensorElement.word((2, 2), 3)}
    assert not sigma_derivation_check(OreData(_poly3(), QMatrix.diag([2, 1, 1]), d))


def test_sigma_must_preserve_relations():
    B = QuadraticPresentation.from_relations([TensorElement.word((0, 1), 3)], 3)
    swap = QMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    with pytest.raises(NotAnAutomorphism):
        sigma_derivation_check(OreData(B, swap))


def test_ore_presentation_matches_plalg_d():
    d = {2: -(TensorElement.word((0, 1), 3))}
    o = OreData(_poly3(), QMatrix.identity(3), d, "x4")
    assert sigma_derivation_check(o)
    assert ore_presentation(o) == plalg_d_relations()
