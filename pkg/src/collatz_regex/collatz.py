"""The Collatz map, parity vectors and their occurrences.

A parity vector is written with one character per step: ``d`` for an even
step (x -> x/2) and ``l`` for an odd step (x -> (3x+1)/2).
"""

from dataclasses import dataclass
from fractions import Fraction

from .mod3k import t0k, t1k

DOWN = "d"
LEFT = "l"


@dataclass(frozen=True)
class ParityVector:
    arrows: str = ""

    def __post_init__(self):
        for pos, ch in enumerate(self.arrows):
            if ch not in (DOWN, LEFT):
                raise ValueError(f"invalid arrow {ch!r} at position {pos} in {self.arrows!r}")

    @classmethod
    def parse(cls, text: str) -> "ParityVector":
        return cls("" if text == "eps" else text)

    @property
    def norm(self) -> int:
        return len(self.arrows)

    @property
    def span(self) -> int:
        return self.arrows.count(LEFT)

    def __len__(self):
        return len(self.arrows)

    def __iter__(self):
        return iter(self.arrows)

    def __add__(self, other):
        if isinstance(other, str):
            other = ParityVector(other)
        return ParityVector(self.arrows + other.arrows)

    def __mul__(self, n: int):
        return ParityVector(self.arrows * n)

    def __str__(self):
        return self.arrows or "eps"


@dataclass(frozen=True)
class Occurrence:
    values: tuple[int, ...]
    index: int = 0

    @property
    def start(self) -> int:
        return self.values[0]

    @property
    def end(self) -> int:
        return self.values[-1]

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class FeasibleVector:
    """Run-length form ``(s_0, ..., s_k)`` of a parity vector."""

    entries: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.entries) - 1

    @property
    def norm(self) -> int:
        return self.length + sum(self.entries)


def collatz_step(x: int) -> tuple[int, int]:
    """Return ``(T(x), x % 2)``."""
    if x % 2:
        return (3 * x + 1) // 2, 1
    return x // 2, 0


def trajectory_parity_vector(x: int, n: int) -> ParityVector:
    """Parity vector of the ``n`` forward steps starting at ``x``."""
    arrows = []
    for _ in range(n):
        x, bit = collatz_step(x)
        arrows.append(LEFT if bit else DOWN)
    return ParityVector("".join(arrows))


def first_occurrence_end(p: ParityVector) -> int:
    """Smallest end value of an occurrence of ``p``; it is below 3**span(p)."""
    x, k = 0, 0
    for a in p:
        if a == DOWN:
            x = t0k(x, k)
        else:
            x = t1k(x, k)
            k += 1
    return x


def first_occurrence_start(p: ParityVector) -> int:
    """Smallest x whose trajectory follows ``p``; it is below 2**norm(p)."""
    from .bitstring import interpret
    from .encoding import encode

    return interpret(encode(p))


def occurrence(p: ParityVector, i: int = 0) -> Occurrence:
    """The ``i``-th occurrence of ``p``, ordered by starting value."""
    if i < 0:
        raise ValueError("occurrence index must be a natural number")
    x = 2**p.norm * i + first_occurrence_start(p)
    values = [x]
    for a in p:
        x, bit = collatz_step(x)
        if bit != (a == LEFT):
            raise AssertionError(f"trajectory from {values[0]} does not follow {p}")
        values.append(x)
    expected_end = 3**p.span * i + first_occurrence_end(p)
    if x != expected_end:
        raise AssertionError(f"occurrence of {p} ends at {x}, expected {expected_end}")
    return Occurrence(tuple(values), i)


def to_feasible_vector(p: ParityVector) -> FeasibleVector:
    return FeasibleVector(tuple(len(run) for run in p.arrows.split(LEFT)))


def backtrace(s: FeasibleVector, x: int) -> Fraction:
    """Pull ``x`` back along ``s``: ``c(s) * x - r(s)`` as an exact rational.

    The result is an integer exactly when ``s`` is realizable backwards from ``x``.
    """
    k = s.length
    c = Fraction(2**s.norm, 3**k)
    r = Fraction(0)
    acc = 0
    for j in range(k):
        acc += s.entries[j]
        r += Fraction(2 ** (j + acc), 3 ** (j + 1))
    return c * x - r
