#!/usr/bin/env python3
"""
Regenerate the frozen base colorings under colorings/data/.

    p4_3coloring.txt   proper 3-coloring of P_4 from the complete solver
    p8_4coloring.txt   4-coloring of P_8 from the heuristic (only with --heuristic)
    p9_4coloring.txt   4-coloring of P_9 from the heuristic (only with --heuristic)

Every table is verified edge by edge before it is written.
"""

import argparse
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.coloring import write_coloring_file  # noqa: E402
from core.pancake import PancakeView  # noqa: E402
from core.verify import verify_proper  # noqa: E402
from colorings.compose import DATA_DIR  # noqa: E402
from solver.exact import find_k_coloring  # noqa: E402
from solver.instance import SearchBudget, SolveStatus  # noqa: E402

logger = logging.getLogger("freeze_tables")


def freeze(n: int, k: int, mode: str, budget: SearchBudget, workers: int, out_dir: Path) -> bool:
    view = PancakeView(n)
    outcome = find_k_coloring(view, k, budget, mode=mode, workers=workers)
    if outcome.status is not SolveStatus.COLORED:
        logger.warning(f"P_{n}: no {k}-coloring ({outcome.status.value} after {outcome.nodes} nodes)")
        return False
    report = verify_proper(view, outcome.coloring, workers=workers)
    if not report.proper:
        logger.error(f"P_{n}: solver witness failed verification ({report.violations} violations)")
        return False
    target = out_dir / f"p{n}_{k}coloring.txt"
    write_coloring_file(outcome.coloring, target)
    logger.info(f"Wrote {target} (class sizes {report.class_sizes})")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description="Regenerate frozen Pancake coloring tables")
    parser.add_argument('--heuristic', action='store_true', help='also search 4-colorings of P_8 and P_9')
    parser.add_argument('--timeout', type=float, default=7200.0, help='seconds per heuristic search')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--threads', type=int, default=1)
    parser.add_argument('--out-dir', default=str(DATA_DIR))
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    ok = freeze(4, 3, 'complete', SearchBudget(max_seconds=60.0), 1, out_dir)
    if args.heuristic:
        budget = SearchBudget(max_seconds=args.timeout, max_nodes=10**12, seed=args.seed)
        for n in (8, 9):
            freeze(n, 4, 'heuristic', budget, args.threads, out_dir)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
