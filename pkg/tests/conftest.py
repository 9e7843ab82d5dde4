import itertools
import re

import pytest

from collatz_regex.collatz import ParityVector
from collatz_regex.regex import Alt, Concat, Empty, Literal, Star

# name -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


def all_vectors(n):
    for arrows in itertools.product("dl", repeat=n):
        yield ParityVector("".join(arrows))


def vectors_up_to(n):
    for m in range(n + 1):
        yield from all_vectors(m)


def forward_path(y, n):
    """Plain forward iteration, independent of the package."""
    out = [y]
    for _ in range(n):
        y = y // 2 if y % 2 == 0 else (3 * y + 1) // 2
        out.append(y)
    return out


def parities(path):
    return "".join("l" if v % 2 else "d" for v in path[:-1])


def brute_first_start(p):
    """Smallest y whose trajectory follows p, by linear scan."""
    y = 0
    while parities(forward_path(y, p.norm)) != p.arrows:
        y += 1
    return y


def brute_pred(x, k, bound):
    """Pred_k(x) restricted to y <= bound, by forward simulation of every y."""
    found = set()
    for y in range(bound + 1):
        v, odd = y, 0
        while odd <= k:
            if odd == k and v == x:
                found.add(y)
                break
            if v == 0:
                break
            if v % 2:
                v, odd = (3 * v + 1) // 2, odd + 1
            else:
                v //= 2
    return found


def to_python_re(r):
    if isinstance(r, Empty):
        return "(?!)"
    if isinstance(r, Literal):
        return re.escape(r.word)
    if isinstance(r, Star):
        return f"(?:{to_python_re(r.child)})*"
    if isinstance(r, Alt):
        return "(?:" + "|".join(to_python_re(c) for c in r.children) + ")"
    if isinstance(r, Concat):
        return "".join(f"(?:{to_python_re(c)})" for c in r.children)
    raise TypeError(r)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        passed, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def acceptance_record():
    return ACCEPTANCE
