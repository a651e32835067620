from asreg.catalog import catalog, poly4
from asreg.tensor import (QuadraticPresentation, TensorElement, graded_dim, hilbert_coefficients,
                          ideal_component, index_word, multiply_nf, normal_form, reduce,
                          right_ideal_dims, word_index)

G = [TensorElement.gen(i) for i in range(4)]


def test_word_index_round_trip():
    for w in [(0,), (3, 1), (2, 0, 3)]:
        assert index_word(word_index(w, 4), len(w), 4) == w


def test_tensor_product_is_concatenation():
    assert G[0] * G[1] == TensorElement.word((0, 1))
    assert (G[0] * G[1]).degree == 2


def test_poly4_components():
    P = poly4()
    assert P.relation_dim == 6
    assert ideal_component(P, 3).dim == 44
    assert graded_dim(P, 3) == 20
    assert hilbert_coefficients(P, 5) == [1, 4, 10, 20, 35, 56]


def test_free_algebra_has_no_relations():
    P = QuadraticPresentation.from_relations([], 2)
    assert hilbert_coefficients(P, 4) == [1, 2, 4, 8, 16]


def test_multiply_in_quadric_ring():
    sq = catalog("s_q").P
    assert multiply_nf(sq, G[0] * G[1], G[2]).is_zero()


def test_commutators_vanish_in_poly4():
    P = poly4()
    e = G[0] * G[2] - G[2] * G[0]
    assert reduce(P, e).is_zero()
    assert normal_form(P, G[0] * G[2]) == normal_form(P, G[2] * G[0])


def test_right_ideal_of_a_generator_in_poly4():
    # x1 A_3 inside A_4 has the dimension of A_3 (no zero divisors)
    assert right_ideal_dims(poly4(), [TensorElement.gen(0)], 4) == 20
    assert right_ideal_dims(poly4(), [TensorElement.gen(0), TensorElement.gen(1)], 2) == 7
