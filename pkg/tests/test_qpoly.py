from hypothesis import given, strategies as st

from serpentine.qpoly import QPoly, partition_series, q_binomial

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(QPoly)


def test_no_zero_coefficients_stored():
    f = QPoly({1: 2, 3: 0})
    assert f.coeffs == {1: 2}
    assert not (f - f)


def test_repr_and_pairs():
    f = QPoly({1: 1, 2: 2})
    assert repr(f) == "q + 2*q^2"
    assert f.to_pairs() == [[1, 1], [2, 2]]


def test_partition_series_prefix():
    assert [partition_series(12)[i] for i in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_q_binomial_small():
    assert q_binomial(4, 2) == QPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert q_binomial(5, 0) == QPoly({0: 1})


@given(polys, polys)
def test_invert_is_an_antihomomorphism_of_degree(f, g):
    assert (f * g).invert() == f.invert() * g.invert()
    assert f.invert().invert() == f


@given(polys, st.integers(-4, 4))
def test_shift_is_monomial_multiplication(f, k):
    assert f.shift(k) == f * QPoly.monomial(k)
    assert f.shift(k).at_one() == f.at_one()
