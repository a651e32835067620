from fractions import Fraction

import pytest

from asreg.catalog import catalog, ex_notnormal
from asreg.coordinate_rings import QuadricSpec
from asreg.linalg import QMatrix
from asreg.structure import (NotNormal, PreconditionError, ZeroProduct, adapted_generators,
                             central_space, is_normal_deg1, is_normal_deg2, normal_pair_scalar,
                             normalizing_sequence_check, normalizing_sequence_report)
from asreg.tensor import TensorElement

Q = QuadricSpec.standard()
OMEGA = TensorElement.word((0, 1))


def test_everything_is_central_in_poly4():
    assert central_space(catalog("poly4").P).dim == 4


def test_plalg_b_x1_has_diagonal_automorphism():
    cert = is_normal_deg1(catalog("plalg_b", {"alpha": 3}).P, [1, 0, 0, 0])
    assert cert.is_normal
    assert cert.phi == QMatrix.diag([1, Fraction(1, 2), 1, 1])


def test_non_normal_generator_has_witness():
    # x1 x4 - x4 x1 - x1 x2 in plalg_c: x4 fails to be normal
    cert = is_normal_deg1(catalog("plalg_c").P, [0, 0, 0, 1])
    assert not cert.is_normal and cert.witness is not None


def test_commutator_not_normal_in_zero_product_algebra():
    om = TensorElement.word((1, 2)) - TensorElement.word((2, 1))
    assert not is_normal_deg2(ex_notnormal(), om).is_normal


def test_zero_element_is_rejected():
    with pytest.raises(ValueError):
        is_normal_deg2(ex_notnormal(), OMEGA)


@pytest.mark.parametrize("cid", ["plalg_d", "pltwist_e", "prop1_a"])
def test_quadric_lift_normal_in_catalog(cid):
    assert is_normal_deg2(catalog(cid).P, OMEGA).is_normal


def test_pair_scalar_for_commuting_generators():
    assert normal_pair_scalar(catalog("poly4").P, [1, 0, 0, 0], [0, 1, 0, 0]) == 1


def test_pair_scalar_detects_zero_product():
    with pytest.raises(ZeroProduct):
        normal_pair_scalar(ex_notnormal(), [1, 0, 0, 0], [0, 1, 0, 0])


def test_pair_scalar_needs_normal_first_argument():
    with pytest.raises(NotNormal):
        normal_pair_scalar(catalog("plalg_c").P, [0, 0, 0, 1], [1, 0, 0, 0])


def test_normalizing_sequence_in_plalg_d():
    rep = normalizing_sequence_report(catalog("plalg_d").P, [1, 0, 0, 0], [0, 1, 0, 0])
    assert rep["ok"]


def test_zero_divisor_breaks_the_sequence():
    rep = normalizing_sequence_report(ex_notnormal(), [1, 0, 0, 0], [0, 1, 0, 0])
    assert not rep["ok"] and not rep["v1_regular"]


def test_dependent_pair_rejected():
    with pytest.raises(ValueError):
        normalizing_sequence_check(catalog("poly4").P, [1, 0, 0, 0], [2, 0, 0, 0])


@pytest.mark.parametrize("cid, branch", [
    ("poly4", "two_lines_commutative"),
    ("plalg_d", "two_lines_commutative"),
    ("plalg_b", "two_lines_noncommutative"),
])
def test_adapted_generators_branches(cid, branch):
    inst = catalog(cid)
    ab = adapted_generators(inst.P, inst.quadric, inst.tau)
    assert ab.branch == branch
    assert is_normal_deg2(ab.transformed, ab.omega).is_normal


def test_adapted_generators_untwist_first():
    inst = catalog("pltwist_b")
    ab = adapted_generators(inst.P, inst.quadric, inst.tau)
    assert ab.twisted_by == inst.tau.inverse()


def test_adapted_generators_need_a_domain():
    with pytest.raises(PreconditionError):
        adapted_generators(ex_notnormal(), Q)
