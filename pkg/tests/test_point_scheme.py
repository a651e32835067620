from fractions import Fraction

import pytest

from asreg.catalog import PLALG_B_DECOYS, catalog, line_forms, plalg_b_relations
from asreg.coordinate_rings import QuadricSpec
from asreg.point_scheme import (Line, NotOnScheme, PlanePair, contains_component, minors,
                                multilinearize, normalize_point, projectively_equal, scheme_report,
                                sigma_at)

Q = QuadricSpec.standard()


def _line(text):
    return Line(*line_forms(text))


def test_multilinear_matrix_shape():
    M = multilinearize(catalog("poly4").P)
    assert len(M.polys()) == 6 and M.n == 4
    assert M.relations() == catalog("poly4").P.relations


def test_polynomial_ring_has_all_minors_zero():
    assert minors(multilinearize(catalog("poly4").P)).all_zero()
    assert scheme_report(catalog("poly4").P, Q).classification == "all_minors_zero"


def test_plalg_b_is_quadric_plus_line():
    I = minors(multilinearize(plalg_b_relations(3)))
    assert contains_component(I, PlanePair(*line_forms("x1, x2")))
    assert contains_component(I, _line("x3, x4"))
    for decoy in PLALG_B_DECOYS:
        assert not contains_component(I, _line(decoy)), decoy


def test_quadric_only_example_has_no_extra_lines():
    rep = scheme_report(catalog("ex_quadric_only").P, Q, [_line("x3, x4"), _line("x1 - x2, x3")])
    assert rep.classification == "contains_quadric"
    assert not any(rep.candidates.values())


def test_sigma_direction_on_the_line():
    M = multilinearize(plalg_b_relations(3))
    assert sigma_at(M, (1, 1, 0, 0)) == (2, 1, 0, 0)


def test_off_scheme_point_raises():
    M = multilinearize(plalg_b_relations(3))
    with pytest.raises(NotOnScheme):
        sigma_at(M, (1, 1, 1, 1))


def test_normalize_point():
    assert normalize_point((Fraction(-1, 2), 1, 0, 0)) == (1, -2, 0, 0)
    assert projectively_equal((2, 4, 0, 6), (1, 2, 0, 3))
    with pytest.raises(ValueError):
        normalize_point((0, 0, 0, 0))


def test_dependent_forms_do_not_make_a_line():
    with pytest.raises(ValueError):
        _line("x1, 2*x1").param()
