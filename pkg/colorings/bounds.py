#!/usr/bin/env python3
"""
Upper and lower bounds on the chromatic number of P_n.

Rows, each tagged with its equation id (1)..(7) where one exists:
    trivial            n - 1                      n >= 4 (Brooks, Delta = n - 1)
    brooks             n - 2                      n >= 5 (omega = 2 improvement)
    catlin             floor(2(n + 2) / 3)        n >= 8 (C_4-free graphs)
    structural-small   n - k / n - 2              5 <= n <= 8
    structural-mid     n - (k + 2) / n - 4        9 <= n <= 16
    structural-large   n - (k + 4) / n - 8        n >= 17
    subadditive        4 floor(n / 9) + chi(P_{n mod 9})   n >= 9
    greedy             n (Delta + 1)              always
    known              exact chi                  2 <= n <= 9
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from core.errors import RangeError

logger = logging.getLogger(__name__)

# chi(P_n) for 2 <= n <= 9; P_0 and P_1 extend it for the subadditive remainder
KNOWN_CHI: Dict[int, int] = {0: 0, 1: 1, 2: 2, 3: 2, 4: 3, 5: 3, 6: 4, 7: 4, 8: 4, 9: 4}
SUBADDITIVE_BLOCK = 9


@dataclass
class BoundRow:
    """One bound evaluated at n."""
    id: str
    formula: str
    value: Optional[int]
    applicable: bool
    valid_range: str
    equation: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {'id': self.id, 'formula': self.formula, 'value': self.value,
                'applicable': self.applicable, 'range': self.valid_range,
                'equation': self.equation}


@dataclass
class BoundReport:
    n: int
    rows: List[BoundRow] = field(default_factory=list)
    best: int = 0
    lower: int = 0

    def row(self, row_id: str) -> BoundRow:
        for row in self.rows:
            if row.id == row_id:
                return row
        raise KeyError(row_id)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'rows': [row.to_dict() for row in self.rows],
            'best': self.best,
            'lower': self.lower,
        }

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame([row.to_dict() for row in self.rows])
        return frame.set_index('id')


def catlin_bound(n: int) -> int:
    return (2 * (n + 2)) // 3


def structural_bound(n: int) -> Optional[int]:
    """Piecewise bounds from structural properties; None below n = 5."""
    k = n % 4
    if 5 <= n <= 8:
        return n - k if k in (1, 3) else n - 2
    if 9 <= n <= 16:
        return n - (k + 2) if k in (1, 3) else n - 4
    if n >= 17:
        return n - (k + 4) if k else n - 8
    return None


def subadditive_bound(n: int) -> int:
    """4 per full block of 9 plus chi of the remainder (0 for P_0, 1 for P_1)."""
    return KNOWN_CHI[SUBADDITIVE_BLOCK] * (n // SUBADDITIVE_BLOCK) + KNOWN_CHI[n % SUBADDITIVE_BLOCK]


def lower_bound(n: int) -> int:
    """Best known lower bound: 2 from any edge, 3 from 7-cycles, 4 from P_6 inside P_n."""
    if n >= 6:
        return 4
    if n >= 4:
        return 3
    return 2


def _structural_row(n: int) -> BoundRow:
    if n <= 8:
        row_id, formula, valid_range, equation = 'structural-small', 'n-k (n=k mod 4, k=1,3); n-2 (n even)', '5<=n<=8', '(4)'
    elif n <= 16:
        row_id, formula, valid_range, equation = 'structural-mid', 'n-(k+2) (n=k mod 4, k=1,3); n-4 (n even)', '9<=n<=16', '(5)'
    else:
        row_id, formula, valid_range, equation = 'structural-large', 'n-(k+4) (n=k mod 4, k=1,2,3); n-8 (n=0 mod 4)', 'n>=17', '(6)'
    value = structural_bound(n)
    return BoundRow(row_id, formula, value, value is not None, valid_range, equation)


def upper_bound_table(n: int) -> BoundReport:
    """
    Evaluate every bound on its applicability range.

    Args:
        n: size of the Pancake graph, n >= 2

    Returns:
        BoundReport with best = minimum over applicable rows
    """
    if n < 2:
        raise RangeError(f"Bounds are tabulated for n >= 2, got n={n}")

    rows = [
        BoundRow('trivial', 'n-1', n - 1, n >= 4, 'n>=4', '(1)'),
        BoundRow('brooks', 'n-2', n - 2, n >= 5, 'n>=5', '(2)'),
        BoundRow('catlin', 'floor(2(n+2)/3)', catlin_bound(n), n >= 8, 'n>=8', '(3)'),
        _structural_row(n),
        BoundRow('subadditive', '4*floor(n/9)+chi(P_(n mod 9))',
                 subadditive_bound(n) if n >= SUBADDITIVE_BLOCK else None,
                 n >= SUBADDITIVE_BLOCK, 'n>=9', '(7)'),
        BoundRow('greedy', 'n', n, True, 'n>=2'),
        BoundRow('known', 'chi(P_n)', KNOWN_CHI.get(n) if n <= 9 else None, 2 <= n <= 9, '2<=n<=9'),
    ]
    applicable = [row.value for row in rows if row.applicable and row.value is not None]
    report = BoundReport(n=n, rows=rows, best=min(applicable), lower=lower_bound(n))
    logger.debug(f"Bounds for n={n}: best={report.best}, lower={report.lower}")
    return report
