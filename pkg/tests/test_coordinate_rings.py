import random

import pytest

from asreg.catalog import catalog, ex_notnormal, line_forms, plalg_d_relations
from asreg.coordinate_rings import (OmegaError, QuadricSpec, check_surjection, extract_omega,
                                    omega_multiple_check, omega_tensor, thcr_presentation,
                                    thcr_relation_space)
from asreg.linalg import QMatrix
from asreg.parser import parse_expr
from asreg.tensor import hilbert_coefficients

Q = QuadricSpec.standard()


def _random_tau(rng):
    while True:
        m = QMatrix.from_rows([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
        if m.is_invertible():
            return m


def test_graph_relation_space_has_dimension_seven():
    rng = random.Random(7)
    for _ in range(10):
        assert thcr_relation_space(Q, _random_tau(rng)).dim == 7


def test_graph_relations_contain_twisted_commutator():
    W = thcr_presentation(Q, QMatrix.diag([1, 2, 1, 1]))
    assert W.relations.contains(parse_expr("x1*x2 - 2*x2*x1").dense())


def test_quadric_ring_hilbert():
    assert hilbert_coefficients(thcr_presentation(Q), 4) == [1, 4, 9, 16, 25]


def test_singular_tau_rejected():
    with pytest.raises(ValueError):
        thcr_relation_space(Q, QMatrix.diag([1, 0, 1, 1]))


def test_dependent_forms_rejected():
    with pytest.raises(ValueError):
        QuadricSpec(*line_forms("x1, 2*x1"))


def test_surjection_depends_on_the_quadric():
    P = plalg_d_relations()
    assert check_surjection(P, Q)
    assert not check_surjection(P, QuadricSpec(*line_forms("x1, x3")))


@pytest.mark.parametrize("cid", ["plalg_b", "plalg_c", "pltwist_c", "prop1_a"])
def test_omega_is_a_nonzero_multiple(cid):
    inst = catalog(cid)
    om = extract_omega(inst.P, inst.quadric, inst.tau)
    assert not om.is_zero()
    assert omega_multiple_check(inst.P, inst.tau, omega_tensor(inst.quadric, inst.tau))


def test_zero_lift_is_an_error():
    with pytest.raises(OmegaError):
        extract_omega(ex_notnormal(), Q)
