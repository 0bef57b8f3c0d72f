import pytest
from hypothesis import given, strategies as st

from serpentine.errors import InvalidArgument
from serpentine.qpoly import partition_series, q_binomial, QPoly
from serpentine.tableaux import (SerpentineTableau, TwoRowTableau, ballot_number, charge, descent_set,
                                 embed_iN, enumerate_serpentine, enumerate_two_row_tableaux, maj,
                                 principal, principal_tableau, serpentine_generating_function,
                                 serpentine_level_set, stable_major_index, two_row_shapes)

from oracles import maj_direct, syt_by_fillings

T = lambda r1, r2=(): TwoRowTableau(tuple(r1), tuple(r2))  # noqa: E731


def test_invalid_tableaux_rejected():
    for rows in [((1, 3), (2, 2)), ((2, 1), ()), ((1,), (2, 3)), ((1, 2), (4,)), ((2,), (1,))]:
        with pytest.raises(InvalidArgument):
            TwoRowTableau(*rows)


def test_enumerate_small_cases():
    assert sorted(map(str, enumerate_two_row_tableaux(2))) == ["[1 / 2]", "[1 2]"]
    assert len(enumerate_two_row_tableaux(4, (2, 2))) == 2
    assert len(enumerate_two_row_tableaux(4)) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_permutation_fillings(n):
    for shape in two_row_shapes(n):
        ours = sorted((t.row1, t.row2) if t.row2 else (t.row1,) for t in enumerate_two_row_tableaux(n, shape))
        assert ours == sorted(syt_by_fillings(shape))
        assert len(ours) == ballot_number(*(tuple(shape) + (0,))[:2])


def test_enumerate_rejects_bad_shapes():
    with pytest.raises(InvalidArgument):
        enumerate_two_row_tableaux(3, (1, 1, 1))
    with pytest.raises(InvalidArgument):
        enumerate_two_row_tableaux(4, (2, 1))


def test_descents_and_maj_examples():
    assert descent_set(T((1, 2, 3, 4))) == frozenset()
    assert descent_set(T((1, 3), (2, 4))) == {1, 3}
    assert descent_set(T((1, 2, 4), (3,))) == {2}
    assert maj(T((1, 2, 3, 4))) == 0
    assert maj(T((1, 3), (2, 4))) == 4
    assert embed_iN(T((1, 3), (2, 4))) == T((1, 3, 5), (2, 4, 6))
    assert maj(T((1, 3, 5), (2, 4, 6))) == 9


def test_charge_examples():
    assert charge(T((1, 2))) == 1
    assert charge(T((1,), (2,))) == 0
    assert charge(T((1, 3), (2,))) == 2


def test_embed_examples():
    assert embed_iN(T((1, 2))) == T((1, 2, 3), (4,))
    assert embed_iN(T(())) == T((1,), (2,))
    t = embed_iN(T((1, 2), (3, 4)))
    assert t == T((1, 2, 5), (3, 4, 6)) and maj(t) == 7


def test_principal_tableaux():
    assert principal_tableau(0, 4) == T((1, 3), (2, 4))
    assert principal_tableau(2, 4) == T((1, 2, 3, 4))
    assert principal_tableau(1, 4) == T((1, 2, 3), (4,))
    for bad in [(1, 3), (2, 2), (0, -2)]:
        with pytest.raises(InvalidArgument):
            principal_tableau(*bad)


@pytest.mark.parametrize("n", range(0, 7))
def test_principal_tableau_has_max_maj_for_its_shape(n):
    # For shape (n+k, n-k) the largest maj is n^2 - k^2, attained only by [tau_k]_{2n}.
    for k in range(n + 1):
        shape = (n + k, n - k) if n - k else (n + k,)
        ts = enumerate_two_row_tableaux(2 * n, shape) if n else [T(())]
        top = max(maj(t) for t in ts)
        assert top == n * n - k * k
        assert [t for t in ts if maj(t) == top] == [principal_tableau(k, 2 * n)]


@pytest.mark.parametrize("n", range(1, 13))
def test_maj_charge_complement_and_embedding(n):
    for t in enumerate_two_row_tableaux(n):
        assert maj(t) + charge(t) == n * (n - 1) // 2
        assert maj(embed_iN(t)) == maj(t) + n + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_maj_matches_direct_definition(n):
    for t in enumerate_two_row_tableaux(n):
        rows = (t.row1, t.row2) if t.row2 else (t.row1,)
        assert maj(t) == maj_direct(rows)


def test_stable_major_index_examples():
    assert stable_major_index(principal(0)) == 0
    assert stable_major_index(SerpentineTableau(4, T((1, 2, 4), (3,)))) == 2
    assert stable_major_index(SerpentineTableau(6, T((1, 3, 4), (2, 5, 6)))) == 4
    assert [stable_major_index(principal(k)) for k in range(5)] == [0, 1, 4, 9, 16]


def test_serpentine_canonical_form():
    a = SerpentineTableau(4, T((1, 2, 3), (4,)))
    assert a == principal(1) and a.level == 2
    assert a.at_level(6) == T((1, 2, 3, 5), (4, 6))
    with pytest.raises(InvalidArgument):
        SerpentineTableau(3, T((1, 2, 3)))
    with pytest.raises(InvalidArgument):
        a.at_level(0)


def test_enumerate_serpentine_examples():
    assert enumerate_serpentine(0) == [principal(0)]
    counts = [0] * 5
    for t in enumerate_serpentine(4):
        counts[stable_major_index(t)] += 1
    assert counts == [1, 1, 2, 3, 5]
    assert sum(stable_major_index(t) == 6 for t in enumerate_serpentine(6)) == 11


def test_enumerate_serpentine_against_level_sets():
    # Independent route: canonicalize every tableau with up to 2*(r_max+1) cells.
    r_max = 5
    brute = set()
    for level in range(0, 2 * (r_max + 1) + 1, 2):
        for t in serpentine_level_set(level):
            if stable_major_index(t) <= r_max:
                brute.add(t)
    assert sorted(brute) == sorted(enumerate_serpentine(r_max))


def test_serpentine_generating_function():
    assert serpentine_generating_function(12) == partition_series(12)


def test_level_sets():
    assert len(serpentine_level_set(0)) == 1
    assert len(serpentine_level_set(2)) == 2
    assert len(serpentine_level_set(4)) == 6
    for k in range(1, 6):
        ts = serpentine_level_set(2 * k)
        assert QPoly.from_exponents(stable_major_index(t) for t in ts) == q_binomial(2 * k, k)


ballot_words = st.integers(1, 14).flatmap(
    lambda n: st.lists(st.booleans(), min_size=n, max_size=n)).map(
    lambda bits: _ballot(bits))


def _ballot(bits):
    word, ones, twos = [], 0, 0
    for b in bits:
        if b and twos < ones:
            word.append(2)
            twos += 1
        else:
            word.append(1)
            ones += 1
    return TwoRowTableau.from_word(word)


@given(ballot_words)
def test_statistics_on_random_tableaux(t):
    n = t.size
    assert maj(t) + charge(t) == n * (n - 1) // 2
    assert maj(embed_iN(t)) == maj(t) + n + 1
    assert descent_set(t) <= set(range(1, n))


@given(ballot_words, st.integers(0, 3))
def test_stable_major_index_is_level_independent(t, extra):
    if t.size % 2:
        t = TwoRowTableau.from_word(t.word() + (1,))
    s = SerpentineTableau.of(t)
    r = stable_major_index(s)
    level = s.level + 2 * extra
    n = level // 2
    assert n * n - maj(s.at_level(level)) == r >= 0
