#!/usr/bin/env python3
"""
Permutation arithmetic for pancake graphs.

Permutations are tuples in one-line notation over [n] (values and positions
are 1-based); ranks are 0-based lexicographic indices into Sym_n.
"""

import logging
import re
from enum import Enum
from math import factorial
from typing import Iterable, Iterator, List, Sequence, Tuple

from core.errors import CapacityError, RangeError

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]

# Permutation arithmetic works up to 20! (fits in 64 bits); anything that
# enumerates a whole graph stops at 12.
MAX_N = 20
ENUMERATION_LIMIT = 12

FACTORIALS: Tuple[int, ...] = tuple(factorial(k) for k in range(MAX_N + 1))


class Parity(str, Enum):
    """Sign of a permutation."""
    EVEN = "even"
    ODD = "odd"


def make_permutation(entries: Iterable[int]) -> Permutation:
    """
    Validate entries and return them as a permutation tuple.

    Raises:
        RangeError: if entries are not a bijection on [n] or n > MAX_N
    """
    perm = tuple(int(x) for x in entries)
    n = len(perm)
    if n < 1 or n > MAX_N:
        raise RangeError(f"Permutation length {n} outside [1, {MAX_N}]")
    if sorted(perm) != list(range(1, n + 1)):
        raise RangeError(f"{list(perm)} is not a permutation of [1..{n}]")
    return perm


def identity(n: int) -> Permutation:
    """The identity permutation [1 2 ... n]."""
    if n < 1 or n > MAX_N:
        raise RangeError(f"n={n} outside [1, {MAX_N}]")
    return tuple(range(1, n + 1))


def parse_permutation(text: str) -> Permutation:
    """
    Parse "[14352]", "[1 4 3 5 2]" or "1 4 3 5 2".

    A bracketed run of digits without separators is read one digit per
    entry, which is only meaningful for n <= 9.
    """
    body = text.strip()
    if body.startswith('[') and body.endswith(']'):
        body = body[1:-1].strip()
    if not body:
        raise RangeError(f"Empty permutation text: {text!r}")
    if re.fullmatch(r'\d+', body):
        return make_permutation(int(ch) for ch in body)
    tokens = [tok for tok in re.split(r'[\s,]+', body) if tok]
    try:
        return make_permutation(int(tok) for tok in tokens)
    except ValueError as e:
        if isinstance(e, RangeError):
            raise
        raise RangeError(f"Cannot parse permutation {text!r}: {e}")


def format_permutation(perm: Sequence[int]) -> str:
    """Bracket form: "[14352]" for n <= 9, "[1 2 ... 10]" beyond."""
    if len(perm) <= 9:
        return '[' + ''.join(str(x) for x in perm) + ']'
    return '[' + ' '.join(str(x) for x in perm) + ']'


def apply_reversal(perm: Permutation, i: int) -> Permutation:
    """
    Reverse the prefix of length i.

    Args:
        perm: permutation in one-line notation
        i: prefix length, 2 <= i <= n

    Returns:
        New tuple [perm_i ... perm_1 perm_{i+1} ... perm_n]
    """
    n = len(perm)
    if i < 2 or i > n:
        raise RangeError(f"Reversal length {i} outside [2, {n}]")
    return perm[i - 1::-1] + perm[i:]


def parity(perm: Sequence[int]) -> Parity:
    """Sign of perm from its cycle decomposition: n minus #cycles transpositions."""
    n = len(perm)
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x - 1]
    return Parity.EVEN if (n - cycles) % 2 == 0 else Parity.ODD


def reversal_parity(i: int) -> Parity:
    """Parity of the prefix reversal r_i: even iff i = 0 or 1 (mod 4)."""
    if i < 2:
        raise RangeError(f"Reversal length {i} must be >= 2")
    return Parity.EVEN if i % 4 in (0, 1) else Parity.ODD


def lex_rank(perm: Sequence[int]) -> int:
    """0-based position of perm in lexicographic order (factorial number system)."""
    n = len(perm)
    remaining = list(range(1, n + 1))
    rank = 0
    for pos, value in enumerate(perm):
        idx = remaining.index(value)
        rank += idx * FACTORIALS[n - 1 - pos]
        del remaining[idx]
    return rank


def lex_unrank(rank: int, n: int) -> Permutation:
    """Inverse of lex_rank."""
    if n < 1 or n > MAX_N:
        raise RangeError(f"n={n} outside [1, {MAX_N}]")
    if rank < 0 or rank >= FACTORIALS[n]:
        raise RangeError(f"Rank {rank} outside [0, {FACTORIALS[n] - 1}] for n={n}")
    remaining = list(range(1, n + 1))
    out: List[int] = []
    for pos in range(n):
        digit, rank = divmod(rank, FACTORIALS[n - 1 - pos])
        out.append(remaining.pop(digit))
    return tuple(out)


def next_permutation(entries: List[int]) -> bool:
    """Advance entries in place to the lexicographic successor; False at the last one."""
    k = len(entries) - 2
    while k >= 0 and entries[k] > entries[k + 1]:
        k -= 1
    if k < 0:
        return False
    m = len(entries) - 1
    while entries[m] < entries[k]:
        m -= 1
    entries[k], entries[m] = entries[m], entries[k]
    entries[k + 1:] = entries[:k:-1]
    return True


def iter_rank_range(n: int, start: int, stop: int) -> Iterator[Permutation]:
    """Yield the permutations with ranks start..stop-1 in lexicographic order."""
    stop = min(stop, FACTORIALS[n])
    if start >= stop:
        return
    current = list(lex_unrank(start, n))
    for _ in range(stop - start - 1):
        yield tuple(current)
        next_permutation(current)
    yield tuple(current)


def check_enumerable(n: int, limit: int = ENUMERATION_LIMIT) -> None:
    """Raise CapacityError when Sym_n is too large to enumerate."""
    if n > limit:
        raise CapacityError(f"n={n} exceeds the enumeration bound {limit}")
