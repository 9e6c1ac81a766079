#!/usr/bin/env python3
"""
Subadditive composition of Pancake colorings.

[n] is cut into consecutive blocks B_1, ..., B_t. A vertex whose first
element lies in B is colored through the projection onto B with the base
coloring of P_|B|, shifted past the colors of earlier blocks. Disjoint
palettes make the result proper whenever every base coloring is.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from core.coloring import Coloring, FunctionalColoring, TabularColoring, read_coloring_file
from core.errors import ConfigurationError, RangeError
from core.pancake import project_interval
from core.permutations import Parity, Permutation, check_enumerable, parity
from colorings.parity import PARITY4_SIZES, parity4_color

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_BLOCK_SIZE = 7
PRECOMPUTE_LIMIT = 7


@dataclass(frozen=True)
class BaseColoring:
    """A coloring of P_m used as one block of a composition."""
    name: str
    size: int
    colors: int
    rule: Callable[[Permutation], int]


def single_color(perm: Permutation) -> int:
    return 1


def parity_bipartition(perm: Permutation) -> int:
    """Proper on P_2 and P_3, where every reversal is odd."""
    return 1 if parity(perm) is Parity.EVEN else 2


_registered_tables: Dict[int, TabularColoring] = {}


def register_base_table(coloring: Coloring) -> None:
    """Make a tabulated coloring of P_m available as the base for blocks of size m."""
    table = coloring.to_table()
    _registered_tables[table.n] = table
    logger.info(f"Registered base table for size {table.n} ({table.k} colors, {table.name})")


def _load_frozen(size: int) -> Optional[TabularColoring]:
    for path in sorted(DATA_DIR.glob(f"p{size}_*coloring.txt")):
        return read_coloring_file(path)
    return None


def base_coloring(size: int) -> BaseColoring:
    """
    Base coloring registered for blocks of `size`.

    Raises:
        ConfigurationError: when no base exists for that size
    """
    if size in _registered_tables:
        table = _registered_tables[size]
        return BaseColoring(f"table-{size}", size, table.k, table.color)
    if size == 1:
        return BaseColoring("single", 1, 1, single_color)
    if size in (2, 3):
        return BaseColoring("bipartite", size, 2, parity_bipartition)
    if size in PARITY4_SIZES:
        return BaseColoring("parity4", size, 4, parity4_color)

    frozen = _load_frozen(size)
    if frozen is None:
        raise ConfigurationError(
            f"No base coloring registered for block size {size}; "
            f"register a table with register_base_table() or add colorings/data/p{size}_*coloring.txt"
        )
    _registered_tables[size] = frozen
    return BaseColoring(f"table-{size}", size, frozen.k, frozen.color)


@dataclass(frozen=True)
class BlockScheme:
    """Ordered partition of [n] into consecutive intervals (lo, hi)."""
    blocks: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise ConfigurationError("A block scheme needs at least one block")
        expected = 1
        for lo, hi in self.blocks:
            if lo != expected or hi < lo:
                raise ConfigurationError(f"Blocks must be consecutive intervals covering [n], got {self.blocks}")
            expected = hi + 1

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "BlockScheme":
        blocks = []
        lo = 1
        for size in sizes:
            if size < 1:
                raise ConfigurationError(f"Block sizes must be positive, got {list(sizes)}")
            blocks.append((lo, lo + size - 1))
            lo += size
        return cls(tuple(blocks))

    @classmethod
    def parse(cls, text: str) -> "BlockScheme":
        """'7,3' -> blocks {1..7}, {8..10}."""
        try:
            sizes = [int(part) for part in text.split(',') if part.strip()]
        except ValueError:
            raise ConfigurationError(f"Block list must be comma-separated integers, got {text!r}")
        return cls.from_sizes(sizes)

    @property
    def n(self) -> int:
        return self.blocks[-1][1]

    @property
    def sizes(self) -> List[int]:
        return [hi - lo + 1 for lo, hi in self.blocks]

    def describe(self) -> str:
        return ",".join(str(size) for size in self.sizes)


def default_blocks(n: int) -> BlockScheme:
    """Chunks of 7 plus a remainder block."""
    if n < 1:
        raise RangeError(f"n must be positive, got n={n}")
    sizes = [DEFAULT_BLOCK_SIZE] * (n // DEFAULT_BLOCK_SIZE)
    if n % DEFAULT_BLOCK_SIZE:
        sizes.append(n % DEFAULT_BLOCK_SIZE)
    return BlockScheme.from_sizes(sizes)


class ComposedRule:
    """Picklable color rule of a composed coloring."""

    def __init__(self, scheme: BlockScheme, bases: Sequence[BaseColoring]):
        self.scheme = scheme
        self.block_of: Dict[int, int] = {}
        self.offsets: List[int] = []
        self.lookups: List[Optional[Dict[Permutation, int]]] = []
        self.rules = [base.rule for base in bases]

        offset = 0
        for index, ((lo, hi), base) in enumerate(zip(scheme.blocks, bases)):
            for element in range(lo, hi + 1):
                self.block_of[element] = index
            self.offsets.append(offset)
            offset += base.colors
            if base.size <= PRECOMPUTE_LIMIT:
                members = permutations(range(1, base.size + 1))
                self.lookups.append({perm: base.rule(perm) for perm in members})
            else:
                self.lookups.append(None)
        self.total_colors = offset

    def __call__(self, perm: Permutation) -> int:
        index = self.block_of[perm[0]]
        lo, hi = self.scheme.blocks[index]
        projected = project_interval(perm, lo, hi)
        lookup = self.lookups[index]
        base = lookup[projected] if lookup is not None else self.rules[index](projected)
        return self.offsets[index] + base


def compose(scheme: BlockScheme) -> FunctionalColoring:
    """
    Coloring of P_n with sum-of-base-colors colors.

    Raises:
        ConfigurationError: if a block size has no base coloring
        CapacityError: for n > 12
    """
    check_enumerable(scheme.n)
    bases = [base_coloring(size) for size in scheme.sizes]
    rule = ComposedRule(scheme, bases)
    logger.info(f"Composed P_{scheme.n} from blocks [{scheme.describe()}] "
                f"({'+'.join(base.name for base in bases)}): {rule.total_colors} colors")
    return FunctionalColoring(scheme.n, rule.total_colors, rule, name=f"compose[{scheme.describe()}]")
