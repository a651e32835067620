import pytest

from asreg.catalog import catalog, ex_notnormal, poly4
from asreg.rewriting import confluent_orientation, count_normal_words, oracle_dims, orient
from asreg.tensor import QuadraticPresentation, TensorElement, graded_dim


def test_poly4_orients_to_commutation_rules():
    rs = orient(poly4())
    assert len(rs.rules) == 6
    assert rs.is_confluent()
    assert [count_normal_words(rs, d) for d in range(5)] == [1, 4, 10, 20, 35]


def test_free_algebra_counts_all_words():
    rs = orient(QuadraticPresentation.from_relations([], 3))
    assert count_normal_words(rs, 3) == 27


def test_reduction_to_normal_form():
    rs = orient(poly4())
    w = {(3, 2, 1, 0): 1}
    assert rs.reduce(w) == {(0, 1, 2, 3): 1}


@pytest.mark.parametrize("cid", ["plalg_b", "plalg_c", "plalg_d", "plalg_e", "pltwist_b",
                                 "ex_quadric_only", "s_q"])
def test_oracle_agrees_with_linear_algebra(cid):
    P = catalog(cid).P
    dims = oracle_dims(P, range(6))
    assert dims is not None
    assert dims[3:] == [graded_dim(P, d) for d in (3, 4, 5)]


def test_oracle_abstains_without_confluence():
    assert confluent_orientation(ex_notnormal()) is None
    assert oracle_dims(ex_notnormal()) is None


def test_single_monomial_relation():
    P = QuadraticPresentation.from_relations([TensorElement.word((0, 0), 2)], 2)
    # words in a, b avoiding "aa": Fibonacci numbers
    assert oracle_dims(P, range(6)) == [1, 2, 3, 5, 8, 13]
