#!/usr/bin/env python3
"""
Vertex colorings of Pancake graphs.

A coloring is either functional (a closed-form rule evaluated per vertex) or
tabular (a numpy table indexed by lex_rank). Both expose color(perm) with
colors in 1..k.

Coloring file format:
    pancake-coloring n=<n> k=<k>
    <rank> <color>          (n! lines, ranks ascending 0..n!-1)
"""

import logging
import re
from enum import Enum
from pathlib import Path
from typing import Callable, IO, Optional, Union

import numpy as np

from core.errors import ColoringFormatError, RangeError
from core.permutations import FACTORIALS, Permutation, check_enumerable, iter_rank_range, lex_rank

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r'^pancake-coloring\s+n=(\d+)\s+k=(\d+)\s*$')


class ColoringKind(str, Enum):
    FUNCTIONAL = "functional"
    TABULAR = "tabular"


class Coloring:
    """Total map from the vertices of P_n to colors 1..k."""

    kind: ColoringKind

    def __init__(self, n: int, k: int, name: str):
        if k < 1:
            raise RangeError(f"A coloring needs k >= 1 colors, got k={k}")
        self.n = n
        self.k = k
        self.name = name

    def color(self, perm: Permutation) -> int:
        raise NotImplementedError

    def __call__(self, perm: Permutation) -> int:
        return self.color(perm)

    def to_table(self) -> "TabularColoring":
        return tabulate(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, n={self.n}, k={self.k})"


class FunctionalColoring(Coloring):
    """
    Coloring given by a rule perm -> color.

    The rule must be picklable (module-level function, functools.partial or
    callable instance) so the coloring can be streamed on several workers.
    """

    kind = ColoringKind.FUNCTIONAL

    def __init__(self, n: int, k: int, rule: Callable[[Permutation], int], name: str):
        super().__init__(n, k, name)
        self.rule = rule

    def color(self, perm: Permutation) -> int:
        return self.rule(perm)


class TabularColoring(Coloring):
    """Coloring stored as a table of n! colors indexed by lex_rank."""

    kind = ColoringKind.TABULAR

    def __init__(self, n: int, k: int, table: np.ndarray, name: str = "table"):
        super().__init__(n, k, name)
        table = np.asarray(table)
        if table.shape != (FACTORIALS[n],):
            raise ColoringFormatError(f"Table for n={n} needs {FACTORIALS[n]} entries, got shape {table.shape}")
        if table.size and (table.min() < 1 or table.max() > k):
            raise ColoringFormatError(f"Table colors must lie in 1..{k}, found {table.min()}..{table.max()}")
        self.table = table

    def color(self, perm: Permutation) -> int:
        return int(self.table[lex_rank(perm)])

    def to_table(self) -> "TabularColoring":
        return self

    def class_sizes(self) -> list:
        return np.bincount(self.table, minlength=self.k + 1)[1:].tolist()


def _table_dtype(k: int):
    return np.uint8 if k < 256 else np.uint16


def tabulate(coloring: Coloring) -> TabularColoring:
    """Evaluate a coloring on every vertex of P_n, in rank order."""
    check_enumerable(coloring.n)
    n = coloring.n
    table = np.fromiter(
        (coloring.color(perm) for perm in iter_rank_range(n, 0, FACTORIALS[n])),
        dtype=_table_dtype(coloring.k),
        count=FACTORIALS[n],
    )
    return TabularColoring(n, coloring.k, table, name=coloring.name)


def write_coloring_file(coloring: Coloring, target: Union[str, Path, IO[str]]) -> int:
    """
    Stream a coloring to a file in rank order without building a table.

    Returns:
        number of vertex lines written
    """
    check_enumerable(coloring.n)
    if isinstance(target, (str, Path)):
        with open(target, 'w') as f:
            return write_coloring_file(coloring, f)

    n = coloring.n
    target.write(f"pancake-coloring n={n} k={coloring.k}\n")
    if isinstance(coloring, TabularColoring):
        colors = (int(c) for c in coloring.table)
    else:
        colors = (coloring.color(perm) for perm in iter_rank_range(n, 0, FACTORIALS[n]))
    count = 0
    for rank, c in enumerate(colors):
        target.write(f"{rank} {c}\n")
        count += 1
    logger.debug(f"Wrote {count} coloring lines for n={n}")
    return count


def read_coloring_file(source: Union[str, Path, IO[str]], name: Optional[str] = None) -> TabularColoring:
    """
    Load a coloring file into a TabularColoring.

    Raises:
        ColoringFormatError: on a bad header, missing/unordered ranks or
            colors outside 1..k
    """
    if isinstance(source, (str, Path)):
        with open(source, 'r') as f:
            return read_coloring_file(f, name=name or Path(source).name)

    header = source.readline()
    match = HEADER_PATTERN.match(header.strip())
    if not match:
        raise ColoringFormatError(f"Bad coloring header: {header.strip()!r}")
    n, k = int(match.group(1)), int(match.group(2))
    check_enumerable(n)
    if n < 1 or k < 1:
        raise ColoringFormatError(f"Header needs n >= 1 and k >= 1, got n={n} k={k}")

    table = np.zeros(FACTORIALS[n], dtype=_table_dtype(k))
    expected = 0
    for line_num, line in enumerate(source, start=2):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ColoringFormatError(f"Line {line_num}: expected '<rank> <color>', got {stripped!r}")
        try:
            rank, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ColoringFormatError(f"Line {line_num}: non-integer entry {stripped!r}")
        if rank != expected:
            raise ColoringFormatError(f"Line {line_num}: expected rank {expected}, got {rank}")
        if not 1 <= c <= k:
            raise ColoringFormatError(f"Line {line_num}: color {c} outside 1..{k}")
        if expected >= FACTORIALS[n]:
            raise ColoringFormatError(f"Line {line_num}: more than {FACTORIALS[n]} vertices")
        table[rank] = c
        expected += 1

    if expected != FACTORIALS[n]:
        raise ColoringFormatError(f"Coloring lists {expected} vertices, n={n} needs {FACTORIALS[n]}")
    return TabularColoring(n, k, table, name=name or "file")
