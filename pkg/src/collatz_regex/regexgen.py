"""Construction of reg_k(x), the regular expression of Collatz ancestors.

``build_reg(x, k)`` defines the binary representations (with controlled
leading zeros) of every ``y`` that reaches ``x`` using the odd map exactly
``k`` times and the even map any number of times.

For a unit residue ``x = 2^(-i0)`` modulo ``3^k`` the expression is::

    (R^i0(Pi_k))* ( join_0 b_0 reg_{k-1}(2^-0) | ... | join_m b_m reg_{k-1}(2^-m) )

with ``m = group_order(k - 1) - 1``.  Other inputs reduce to that case.
"""

from dataclasses import dataclass
from functools import lru_cache

from .bitstring import interpret_inv_min, rotate_right
from .mod3k import dlog_inv2, group_order, inv2_pow, pi_sequence, t1k
from .regex import Alt, Concat, Empty, Literal, Regex, Star


def compute_b(i2: int, k: int) -> str:
    """Bit prepended by the odd step leaving residue 2^(-i2) at level ``k``."""
    return "0" if inv2_pow(i2, k) % 2 else "1"


def compute_join(i2: int, k_plus_1: int, i0: int) -> tuple[str, int]:
    """Bits prepended by the downs that join ``t1k(2^(-i2))`` to ``2^(-i0)``.

    Returns ``(join, r)`` where ``r`` is the number of downs.
    """
    k = k_plus_1 - 1
    x1 = t1k(inv2_pow(i2, k), k)
    i1 = dlog_inv2(x1, k_plus_1)
    r = (i0 - i1) % group_order(k_plus_1)
    bits = ["0"] * r
    for i in range(r):
        bits[r - 1 - i] = str(inv2_pow(i1 + i, k_plus_1) & 1)
    return "".join(bits), r


_ZERO_STAR = Star(Literal("0"))


def build_reg(x: int, k: int) -> Regex:
    if x < 0 or k < 0:
        raise ValueError("x and k must be natural numbers")
    if k > 0 and x % 3 == 0:
        return Empty()
    if k == 0:
        if x == 0:
            return _ZERO_STAR
        return Concat((Literal(interpret_inv_min(x)), _ZERO_STAR))
    q, rem = divmod(x, 3**k)
    if q:
        return Concat((Literal(interpret_inv_min(q)), _unit_reg(rem, k)))
    return _unit_reg(x, k)


@lru_cache(maxsize=None)
def _unit_reg(x: int, k: int) -> Regex:
    # Cached: every unit of level k-1 is reused under every unit of level k.
    i0 = dlog_inv2(x, k)
    branches = []
    for i2 in range(group_order(k - 1)):
        join, _ = compute_join(i2, k, i0)
        sub = _ZERO_STAR if k == 1 else _unit_reg(inv2_pow(i2, k - 1), k - 1)
        branches.append(Concat((Literal(join), Literal(compute_b(i2, k - 1)), sub)))
    return Concat((Star(Literal(rotate_right(pi_sequence(k), i0))), Alt(tuple(branches))))


@dataclass(frozen=True)
class Metrics:
    branches: int
    alphabetic_width: int
    star_height: int

    def __str__(self):
        return (f"branches={self.branches} alphabetic_width={self.alphabetic_width} "
                f"star_height={self.star_height}")


def metrics(r: Regex) -> Metrics:
    """Branch count, number of 0/1 symbols and star height of ``r``.

    Shared sub-expressions count once per occurrence, as in the printed form.
    """
    memo = {}

    def walk(node):
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Empty):
            out = (0, 0, 0)
        elif isinstance(node, Literal):
            out = (1, len(node.word), 0)
        elif isinstance(node, Star):
            b, w, h = walk(node.child)
            out = (b, w, h + 1)
        else:
            parts = [walk(c) for c in node.children]
            if isinstance(node, Alt):
                b = sum(p[0] for p in parts)
            else:
                b = 1
                for p in parts:
                    b *= p[0]
            out = (b, sum(p[1] for p in parts), max((p[2] for p in parts), default=0))
        memo[key] = out
        return out

    return Metrics(*walk(r))
