import pytest

from asreg.catalog import ENTRIES, FIXED_INSTANCES, CatalogError, catalog, in_aut_q, parse_params
from asreg.linalg import QMatrix
from asreg.tensor import hilbert_coefficients


@pytest.mark.parametrize("cid", sorted(ENTRIES))
def test_every_entry_builds_with_defaults(cid):
    inst = catalog(cid)
    assert inst.P.n == 4
    meta = inst.metadata()
    assert meta["id"] == cid and meta["tau"]


def test_ten_fixed_instances():
    assert len(FIXED_INSTANCES) == 10


def test_alpha_one_rejected_for_plalg_b():
    with pytest.raises(CatalogError):
        catalog("plalg_b", {"alpha": 1})


def test_unknown_id_and_parameter():
    with pytest.raises(CatalogError):
        catalog("nope")
    with pytest.raises(CatalogError):
        catalog("plalg_c", {"gamma": 2})


def test_float_parameter_rejected():
    with pytest.raises(CatalogError):
        catalog("plalg_c", {"alpha": 0.5})


def test_parse_params_with_inline_matrix():
    p = parse_params("alpha=3,tau=1,0;0,1")
    assert p == {"alpha": "3", "tau": "1,0;0,1"}
    assert parse_params(None) == {}
    with pytest.raises(CatalogError):
        parse_params("3")


def test_quadric_automorphisms():
    assert in_aut_q(QMatrix.diag([2, 3, 5, 7]))
    swap = QMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert in_aut_q(swap)
    assert not in_aut_q(QMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_rescaled_plalg_c_keeps_growth():
    assert hilbert_coefficients(catalog("plalg_c", {"alpha": 4}).P, 4) == [1, 4, 10, 20, 35]


def test_prop1_b_with_beta_is_degenerate():
    # recorded failure: this member has the wrong growth in degree 3
    assert hilbert_coefficients(catalog("prop1_b", {"alpha": 1, "beta": 1}).P, 4) == [1, 4, 10, 18, 28]
