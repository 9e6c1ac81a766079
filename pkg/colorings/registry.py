"""
Built-in coloring methods by name
"""

import logging
from typing import Dict, Optional, Tuple

from core.coloring import Coloring
from core.errors import ConfigurationError, RangeError
from colorings.compose import BlockScheme, compose, default_blocks
from colorings.domsets import first_element_coloring
from colorings.parity import PARITY4_SIZES, parity4_coloring
from colorings.quotient import lift

logger = logging.getLogger(__name__)

# method -> (min n, max n) it is defined and enumerable for
METHOD_RANGES: Dict[str, Tuple[int, int]] = {
    'equitable-nm1': (3, 12),
    'parity4': (min(PARITY4_SIZES), max(PARITY4_SIZES)),
    'compose': (1, 12),
    'first-element': (2, 12),
}


def build_coloring(method: str, n: int, blocks: Optional[str] = None) -> Coloring:
    """
    Construct a built-in coloring of P_n.

    Args:
        method: one of METHOD_RANGES
        n: graph size
        blocks: comma-separated block sizes for 'compose' (default chunks of 7)

    Raises:
        ConfigurationError: unknown method, or blocks not summing to n
        RangeError: n outside the method's range
    """
    if method not in METHOD_RANGES:
        raise ConfigurationError(f"Unknown coloring method {method!r}; choose from {', '.join(METHOD_RANGES)}")
    lo, hi = METHOD_RANGES[method]
    if not lo <= n <= hi:
        raise RangeError(f"Method {method} is defined for {lo} <= n <= {hi}, got n={n}")

    if method == 'equitable-nm1':
        return lift(n)
    if method == 'parity4':
        return parity4_coloring(n)
    if method == 'first-element':
        return first_element_coloring(n)

    scheme = BlockScheme.parse(blocks) if blocks else default_blocks(n)
    if scheme.n != n:
        raise ConfigurationError(f"Blocks [{scheme.describe()}] cover [{scheme.n}], not [{n}]")
    return compose(scheme)
