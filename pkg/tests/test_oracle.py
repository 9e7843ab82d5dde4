import json

import pytest

from collatz_regex.collatz import ParityVector, first_occurrence_end, first_occurrence_start, occurrence
from collatz_regex.oracle import cross_validate, forward_check, pred_brute

from conftest import brute_pred, vectors_up_to

Y1 = "100001000111000111000111000101"
Y2 = "1000010010111101101000010010111100011"


def test_pred_brute():
    assert pred_brute(6, 1, 1000) == set()
    assert pred_brute(1, 0, 100) == {1, 2, 4, 8, 16, 32, 64}
    assert pred_brute(1, 1, 30) == {1, 2, 4, 5, 8, 10, 16, 20, 21}
    assert pred_brute(0, 0, 10) == {0}
    assert pred_brute(0, 1, 10) == set()


def test_forward_check():
    assert forward_check(Y1, 14, 3)
    assert forward_check(Y2, 14, 3)
    assert forward_check("1110", 14, 0)
    assert not forward_check("1110", 14, 1)
    assert forward_check("1", 1, 0)
    # 1 -> 2 -> 1 reaches 1 again after one odd step
    assert forward_check("1", 1, 1)
    assert not forward_check("", 0, 1)


@pytest.mark.parametrize("k", range(4))
def test_pred_matches_forward_simulation(k):
    for x in range(1, 21):
        pred = pred_brute(x, k, 2000)
        assert pred == brute_pred(x, k, 2000)
        for y in range(2001):
            assert (y in pred) == forward_check(format(y, "b"), x, k)


def test_occurrence_arithmetic():
    for p in vectors_up_to(10):
        a0, e0 = first_occurrence_start(p), first_occurrence_end(p)
        for i in range(6):
            occ = occurrence(p, i)
            assert occ.start == 2**p.norm * i + a0
            assert occ.end == 3**p.span * i + e0


@pytest.mark.parametrize("k", range(3))
def test_pred_grows_with_bound(k):
    for x in [1, 2, 4, 5, 7, 8, 10]:
        sizes = [len(pred_brute(x, k, 2**b)) for b in (8, 12, 16)]
        assert sizes[0] < sizes[1] < sizes[2]


def test_cross_validate_examples():
    r = cross_validate(14, 3, 2**16, 1)
    assert r.ok and r.members_checked == 192 and r.ancestors_checked > 0
    r = cross_validate(9, 2, 10**4, 1)
    assert r.ok and r.members_checked == 0 and r.ancestors_checked == 0
    assert cross_validate(1, 0, 10**3, 3).ok


def test_cross_validate_threads_same_report():
    a = cross_validate(5, 3, 2**14, 1)
    b = cross_validate(5, 3, 2**14, 1, threads=4)
    assert a.as_dict() == b.as_dict()


def test_report_detects_a_wrong_language(monkeypatch):
    import collatz_regex.oracle as oracle
    from collatz_regex.regexgen import build_reg

    # Pred_1(4) is a strict subset of Pred_1(1): swapping the two languages
    # breaks soundness one way and completeness the other
    monkeypatch.setattr(oracle, "build_reg", lambda x, k: build_reg(5 - x, k))
    r = oracle.cross_validate(4, 1, 2**10, 1)
    assert r.soundness_failures and not r.completeness_failures
    assert list(r.lines())[-1] == "FAIL"
    r = oracle.cross_validate(1, 1, 2**10, 1)
    assert r.completeness_failures and not r.soundness_failures
    assert json.loads(json.dumps(r.as_dict()))["ok"] is False


def test_pred_matches_forward_simulation_large_bound():
    assert pred_brute(1, 3, 2**16) == brute_pred(1, 3, 2**16)
