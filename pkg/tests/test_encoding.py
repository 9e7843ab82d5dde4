import pytest

from collatz_regex.collatz import ParityVector, first_occurrence_end, first_occurrence_start
from collatz_regex.encoding import CLOSED_FORMS, admissible, decode, encode

from conftest import vectors_up_to

P = ParityVector


def test_admissible():
    assert admissible("d", 4) and admissible("l", 3)
    assert not admissible("d", 3) and not admissible("l", 0)


@pytest.mark.parametrize("p, word", [("dd", "00"), ("ldd", "101"), ("", ""), ("ll", "11"), ("lld", "011")])
def test_encode(p, word):
    assert encode(P(p)) == word


@pytest.mark.parametrize("word, p", [("00", "dd"), ("11", "ll"), ("1", "l"), ("1000", "dddl"), ("", "")])
def test_decode(word, p):
    assert decode(word) == P(p)


def test_encode_is_padded_first_start():
    for p in vectors_up_to(10):
        w = encode(p)
        assert len(w) == p.norm
        assert int(w or "0", 2) == first_occurrence_start(p)


def test_round_trip():
    for p in vectors_up_to(14):
        assert decode(encode(p)) == p


@pytest.mark.parametrize("form", range(len(CLOSED_FORMS)))
def test_closed_forms(form):
    word_fn, vector_fn = CLOSED_FORMS[form]
    for n in range(13):
        assert decode(word_fn(n)) == P(vector_fn(n))


def test_closed_forms_literal():
    # spelled out independently of CLOSED_FORMS, n = 2
    assert decode("00") == P("dd")
    assert decode("100") == P("ddl")
    assert decode("100001") == P("ldldll")
    assert decode("1000001") == P("ldldldd")
    assert decode("010101") == P("lddddd")
    assert decode("11") == P("ll")


@pytest.mark.parametrize("n", range(13))
def test_all_left_end(n):
    assert first_occurrence_end(P("l" * n)) == 3**n - 1


def test_prefix_monotone():
    for p in vectors_up_to(10):
        w = encode(p)
        for a in "dl":
            w2 = encode(p + a)
            assert len(w2) == len(w) + 1 and w2[1:] == w
