"""Regular expressions describing the binary form of Collatz ancestors."""

from .bitstring import interpret, interpret_inv_min, interpret_inv_n, rotate_right
from .collatz import (
    FeasibleVector,
    Occurrence,
    ParityVector,
    backtrace,
    collatz_step,
    first_occurrence_end,
    first_occurrence_start,
    occurrence,
    to_feasible_vector,
    trajectory_parity_vector,
)
from .encoding import decode, encode
from .engine import enumerate_members, matches, matches_value, smallest_ancestor
from .mod3k import dlog_inv2, inv2, pi_sequence, t0k, t1k
from .oracle import cross_validate, forward_check, pred_brute
from .regex import Alt, Concat, Empty, Literal, Regex, Star, parse_text, to_text
from .regexgen import build_reg, compute_b, compute_join, metrics

__version__ = "0.1.0"
