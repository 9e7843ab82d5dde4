"""Membership, bounded enumeration and smallest-ancestor search over a Regex.

Matching compiles the AST to a position (Glushkov) automaton and runs a
lazily built subset construction, so every query is linear in the word
length once the states it touches are cached.
"""

import itertools

from .bitstring import interpret, interpret_inv_min
from .regex import Alt, Concat, Empty, Literal, Regex, Star


class Matcher:
    def __init__(self, r: Regex):
        self.symbols = []  # symbol of each position
        self.follow = []  # follow set of each position
        nullable, first, last = self._build(r)
        self.nullable = nullable
        self.final = frozenset(last)
        self.start = frozenset([-1])
        self._first = frozenset(first)
        self._delta = {}

    def _new(self, ch):
        self.symbols.append(ch)
        self.follow.append(set())
        return len(self.symbols) - 1

    def _build(self, r):
        # returns (nullable, first, last); positions are allocated per occurrence
        if isinstance(r, Empty):
            return False, set(), set()
        if isinstance(r, Literal):
            if not r.word:
                return True, set(), set()
            ps = [self._new(ch) for ch in r.word]
            for a, b in zip(ps, ps[1:]):
                self.follow[a].add(b)
            return False, {ps[0]}, {ps[-1]}
        if isinstance(r, Star):
            _, first, last = self._build(r.child)
            for p in last:
                self.follow[p] |= first
            return True, first, last
        if isinstance(r, Alt):
            nullable, first, last = False, set(), set()
            for c in r.children:
                n, f, l = self._build(c)
                nullable |= n
                first |= f
                last |= l
            return nullable, first, last
        if isinstance(r, Concat):
            nullable, first, last = True, set(), set()
            for c in r.children:
                n, f, l = self._build(c)
                for p in last:
                    self.follow[p] |= f
                if nullable:
                    first |= f
                last = (last | l) if n else l
                nullable = nullable and n
            return nullable, first, last
        raise TypeError(f"not a regex node: {r!r}")

    def step(self, state: frozenset, ch: str) -> frozenset:
        key = (state, ch)
        nxt = self._delta.get(key)
        if nxt is None:
            succ = set()
            for p in state:
                cands = self._first if p == -1 else self.follow[p]
                succ.update(q for q in cands if self.symbols[q] == ch)
            nxt = self._delta[key] = frozenset(succ)
        return nxt

    def run(self, word: str, state=None) -> frozenset:
        state = self.start if state is None else state
        for ch in word:
            if not state:
                break
            state = self.step(state, ch)
        return state

    def accepts_state(self, state: frozenset) -> bool:
        return bool(state & self.final) or (self.nullable and -1 in state)

    def accepts(self, word: str) -> bool:
        return self.accepts_state(self.run(word))

    def accepts_padded(self, word: str, max_pad: int) -> bool:
        """True iff ``0^n word`` is accepted for some ``0 <= n < max_pad``."""
        state = self.start
        for _ in range(max_pad):
            if self.accepts_state(self.run(word, state)):
                return True
            state = self.step(state, "0") if state else state
            if not state:
                break
        return False


_compiled = {}


def compile_regex(r: Regex) -> Matcher:
    hit = _compiled.get(id(r))
    if hit is not None and hit[0] is r:
        return hit[1]
    if len(_compiled) > 256:
        _compiled.clear()
    m = Matcher(r)
    _compiled[id(r)] = (r, m)
    return m


def matches(r: Regex, word: str) -> bool:
    return compile_regex(r).accepts(word)


def padding_bound(k: int) -> int:
    return (k + 1) ** 2


def matches_value(r: Regex, y: int, k: int) -> bool:
    """True iff ``0^n`` followed by the binary form of ``y`` matches, for some ``n < (k+1)^2``."""
    return compile_regex(r).accepts_padded(interpret_inv_min(y), padding_bound(k))


def star_height(r: Regex) -> int:
    if isinstance(r, Star):
        return star_height(r.child) + 1
    if isinstance(r, (Alt, Concat)):
        return max((star_height(c) for c in r.children), default=0)
    return 0


def _language(r, reps, memo):
    key = id(r)
    if key in memo:
        return memo[key]
    if isinstance(r, Empty):
        out = frozenset()
    elif isinstance(r, Literal):
        out = frozenset([r.word])
    elif isinstance(r, Star):
        inner = _language(r.child, reps, memo)
        acc, power = {""}, {""}
        for _ in range(reps):
            power = {a + b for a in power for b in inner}
            acc |= power
        out = frozenset(acc)
    elif isinstance(r, Alt):
        out = frozenset().union(*(_language(c, reps, memo) for c in r.children))
    elif isinstance(r, Concat):
        acc = {""}
        for c in r.children:
            part = _language(c, reps, memo)
            acc = {a + b for a in acc for b in part}
        out = frozenset(acc)
    else:
        raise TypeError(f"not a regex node: {r!r}")
    memo[key] = out
    return out


def enumerate_members(r: Regex, max_star_reps: int):
    """Yield every member reachable with each star unrolled at most ``max_star_reps`` times.

    Members come out without duplicates, ordered by (length, lexicographic).
    """
    if star_height(r) > 1:
        raise ValueError("bounded enumeration supports star height <= 1 only")
    if max_star_reps < 0:
        raise ValueError("max_star_reps must be a natural number")
    members = _language(r, max_star_reps, {})
    yield from sorted(members, key=lambda w: (len(w), w))


def sample(r: Regex, max_star_reps: int, count: int):
    return list(itertools.islice(enumerate_members(r, max_star_reps), count))


def smallest_ancestor(x: int, k: int, max_star_reps: int):
    """Smallest value among the bounded members of reg_k(x), or None if there are none."""
    from .regexgen import build_reg

    best = None
    for w in enumerate_members(build_reg(x, k), max_star_reps):
        key = (interpret(w), len(w), w)
        if best is None or key < best:
            best = key
    return None if best is None else best[0]
