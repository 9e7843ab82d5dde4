"""Finite binary words.

Bit strings are plain ``str`` objects over ``"0"``/``"1"``, most significant
bit first.  The empty word is ``""``.
"""

EMPTY = ""


def check_bits(word: str) -> str:
    """Return ``word`` unchanged, or raise ``ValueError`` naming the bad token."""
    for pos, ch in enumerate(word):
        if ch not in "01":
            raise ValueError(f"invalid bit {ch!r} at position {pos} in {word!r}")
    return word


def interpret(word: str) -> int:
    """Numeric value of ``word`` read in base 2; the empty word is 0."""
    return int(word, 2) if word else 0


def interpret_inv_n(x: int, n: int) -> str:
    """Binary representation of ``x`` on exactly ``n`` bits."""
    if x < 0 or n < 0:
        raise ValueError("x and n must be natural numbers")
    if x.bit_length() > n:
        raise ValueError(f"{x} does not fit on {n} bits")
    if n == 0:
        return EMPTY
    return format(x, "b").zfill(n)


def interpret_inv_min(x: int) -> str:
    """Binary representation of ``x`` without leading zeros (``"0"`` for 0)."""
    if x < 0:
        raise ValueError("x must be a natural number")
    return format(x, "b")


def rotate_right(word: str, i: int) -> str:
    """Circular shift of ``word`` by ``i`` positions to the right."""
    if not word:
        raise ValueError("cannot rotate the empty word")
    if not 0 <= i < len(word):
        raise ValueError(f"rotation {i} out of range for a word of length {len(word)}")
    if i == 0:
        return word
    return word[-i:] + word[:-i]


def parse_bits(text: str) -> str:
    """Parse CLI text into a bit string; ``eps`` denotes the empty word."""
    if text == "eps":
        return EMPTY
    return check_bits(text)


def show_bits(word: str) -> str:
    return word if word else "eps"
