"""Collatz encoding of parity vectors.

``encode(p)`` is the ``norm(p)``-bit binary representation of the smallest
integer whose trajectory follows ``p``.  It is built one arrow at a time: the
new bit goes in front and is 0 exactly when the arrow matches the parity of
the running first-occurrence end value.
"""

from .bitstring import interpret
from .collatz import DOWN, LEFT, ParityVector, trajectory_parity_vector
from .mod3k import t0k, t1k


def admissible(arrow: str, x: int) -> bool:
    return (arrow == DOWN) == (x % 2 == 0)


def encode(p: ParityVector) -> str:
    bits = []
    x, k = 0, 0
    for a in p:
        bits.append("0" if admissible(a, x) else "1")
        if a == DOWN:
            x = t0k(x, k)
        else:
            x = t1k(x, k)
            k += 1
    return "".join(reversed(bits))


def decode(word: str) -> ParityVector:
    # Forward simulation on purpose: independent of the residue recursion in encode.
    return trajectory_parity_vector(interpret(word), len(word))


# Closed-form decodings, indexed as in the list below:
#   0^n -> d^n                 1 0^n -> d^n l
#   1 0^2n 1 -> l (dl)^n l     1 0^(2n+1) 1 -> (ld)^(n+1) d
#   (01)^(n+1) -> l d d^2n     1^n -> l^n
CLOSED_FORMS = (
    (lambda n: "0" * n, lambda n: DOWN * n),
    (lambda n: "1" + "0" * n, lambda n: DOWN * n + LEFT),
    (lambda n: "1" + "0" * (2 * n) + "1", lambda n: LEFT + (DOWN + LEFT) * n + LEFT),
    (lambda n: "1" + "0" * (2 * n + 1) + "1", lambda n: (LEFT + DOWN) * (n + 1) + DOWN),
    (lambda n: "01" * (n + 1), lambda n: LEFT + DOWN + DOWN * (2 * n)),
    (lambda n: "1" * n, lambda n: LEFT * n),
)
