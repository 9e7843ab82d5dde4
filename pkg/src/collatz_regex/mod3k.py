"""Arithmetic in Z/3^kZ and its unit group.

Residues are plain ints identified with ``{0, ..., 3**k - 1}``; the level
``k`` is passed alongside.  The inverse of 2 modulo ``3**k`` generates the
whole unit group, whose order is ``2 * 3**(k - 1)``.
"""

from functools import lru_cache


def group_order(k: int) -> int:
    """Size of (Z/3^kZ)*, with the convention that level 0 has order 1."""
    if k < 0:
        raise ValueError("level must be a natural number")
    return 1 if k == 0 else 2 * 3 ** (k - 1)


def inv2(k: int) -> int:
    """The inverse of 2 modulo 3**k, i.e. ``(3**k + 1) // 2``."""
    if k < 1:
        raise ValueError("2 has no inverse at level 0")
    return (3**k + 1) // 2


def t0k(x: int, k: int) -> int:
    """Halving in Z/3^kZ: multiply ``x`` by the inverse of 2."""
    if k == 0:
        if x != 0:
            raise ValueError("the only residue at level 0 is 0")
        return 0
    _check_residue(x, k)
    return x // 2 if x % 2 == 0 else (3**k + x) // 2


def t1k(x: int, k: int) -> int:
    """Odd Collatz step carried to the next level.

    ``x`` is a residue at level ``k``; the result is ``(3x + 1) / 2`` taken
    in Z/3^(k+1)Z.  The map is 3^k-periodic, which is why inputs live one
    level below their outputs.
    """
    _check_residue(x, k)
    if x % 2:
        return (3 * x + 1) // 2
    return (3 ** (k + 1) + 3 * x + 1) // 2


def _check_residue(x: int, k: int) -> None:
    if k < 0:
        raise ValueError("level must be a natural number")
    if not 0 <= x < 3**k and not (k == 0 and x == 0):
        raise ValueError(f"{x} is not a residue modulo 3^{k}")


@lru_cache(maxsize=None)
def powers(k: int) -> tuple[int, ...]:
    """Successive powers ``inv2(k)**i mod 3**k`` for ``0 <= i < group_order(k)``.

    Level 0 follows the convention that its single power is 0.
    """
    if k == 0:
        return (0,)
    mod = 3**k
    g = inv2(k)
    out = [1]
    for _ in range(group_order(k) - 1):
        out.append(out[-1] * g % mod)
    return tuple(out)


@lru_cache(maxsize=None)
def _log_table(k: int) -> dict[int, int]:
    return {v: i for i, v in enumerate(powers(k))}


def inv2_pow(i: int, k: int) -> int:
    """The residue 2^(-i) at level ``k`` (0 at level 0)."""
    table = powers(k)
    return table[i % len(table)]


def dlog_inv2(x: int, k: int) -> int:
    """The exponent ``0 <= i < group_order(k)`` with ``x == inv2(k)**i mod 3**k``."""
    if k < 1:
        raise ValueError("discrete logarithm needs level >= 1")
    if x % 3 == 0:
        raise ValueError(f"{x} is a multiple of 3, not a unit modulo 3^{k}")
    return _log_table(k)[x % 3**k]


@lru_cache(maxsize=None)
def pi_sequence(k: int) -> str:
    """Parity word of the unit group: the parities of the powers of 2^-1, mirrored."""
    if k < 1:
        raise ValueError("the parity sequence is defined for k >= 1 only")
    return "".join(str(v & 1) for v in reversed(powers(k)))


def leading_zeros(word: str) -> int:
    return len(word) - len(word.lstrip("0"))
