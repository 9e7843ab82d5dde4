"""Brute-force checks of reg_k(x) against the Collatz graph itself."""

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from .bitstring import interpret
from .collatz import collatz_step
from .engine import enumerate_members, matches_value
from .regexgen import build_reg


def pred_brute(x: int, k: int, value_bound: int) -> set[int]:
    """All ``y <= value_bound`` reaching ``x`` with exactly ``k`` odd steps.

    Backward breadth-first search over states ``(value, odd steps undone)``.
    A state with ``j`` odd steps still to undo is kept while its value is at
    most ``value_bound * 2**j``: a forward odd step at most doubles a
    positive value, so nothing reachable from a ``y <= value_bound`` is lost.
    """
    if x == 0:
        return {0} if k == 0 and value_bound >= 0 else set()
    found = set()
    seen = {(x, 0)}
    queue = deque(seen)
    while queue:
        v, used = queue.popleft()
        if used == k and v <= value_bound:
            found.add(v)
        nexts = [(2 * v, used)]
        if used < k and v % 3 == 2:
            nexts.append(((2 * v - 1) // 3, used + 1))
        for w, u in nexts:
            if w <= value_bound << (k - u) and (w, u) not in seen:
                seen.add((w, u))
                queue.append((w, u))
    return found


def forward_check(word: str, x: int, k: int) -> bool:
    """Simulate from ``interpret(word)``; accept at the first point with ``k`` odd steps at ``x``."""
    v = interpret(word)
    odd = 0
    while True:
        if odd == k and v == x:
            return True
        if v == 0:
            # 0 is a fixed point of the even map
            return False
        v, bit = collatz_step(v)
        odd += bit
        if odd > k:
            return False


@dataclass
class Report:
    x: int
    k: int
    value_bound: int
    reps: int
    members_checked: int = 0
    ancestors_checked: int = 0
    soundness_failures: list = field(default_factory=list)
    completeness_failures: list = field(default_factory=list)
    bijection_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.soundness_failures or self.completeness_failures
                    or self.bijection_violations)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def lines(self):
        yield (f"x={self.x} k={self.k} max={self.value_bound} reps={self.reps} "
               f"members={self.members_checked} ancestors={self.ancestors_checked}")
        for w in self.soundness_failures:
            yield f"soundness failure: {w}"
        for y in self.completeness_failures:
            yield f"completeness failure: {y}"
        for a, b in self.bijection_violations:
            yield f"bijection violation: {a} {b}"
        yield "OK" if self.ok else "FAIL"


def cross_validate(x: int, k: int, value_bound: int, reps: int, threads: int = 1) -> Report:
    """Compare the bounded language of reg_k(x) with the brute-force ancestor set.

    An empty report (``report.ok``) certifies agreement at this scale.
    """
    reg = build_reg(x, k)
    report = Report(x, k, value_bound, reps)
    members = list(enumerate_members(reg, reps))
    report.members_checked = len(members)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            verdicts = list(pool.map(lambda w: forward_check(w, x, k), members, chunksize=64))
    else:
        verdicts = [forward_check(w, x, k) for w in members]
    report.soundness_failures = sorted(w for w, ok in zip(members, verdicts) if not ok)

    if x > 0:
        by_value = {}
        for w in members:
            other = by_value.setdefault(interpret(w), w)
            if other != w:
                report.bijection_violations.append((other, w))
        report.bijection_violations.sort()

    ancestors = sorted(pred_brute(x, k, value_bound))
    report.ancestors_checked = len(ancestors)
    report.completeness_failures = [y for y in ancestors if not matches_value(reg, y, k)]
    return report
