#!/usr/bin/env python3
"""
Unit tests for block composition and the built-in coloring registry
"""

import pytest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'scripts'))

from core.errors import CapacityError, ConfigurationError, RangeError
from core.pancake import PancakeView, pancake_view, project_interval
from core.verify import verify_proper
from colorings import compose as compose_module
from colorings.compose import DATA_DIR, BlockScheme, base_coloring, compose, default_blocks, register_base_table
from colorings.domsets import first_element_coloring
from colorings.registry import build_coloring
from core.coloring import read_coloring_file
from freeze_tables import freeze
from solver.instance import SearchBudget


def test_block_scheme_parsing():
    """'7,3' is the blocks {1..7} and {8..10}."""
    scheme = BlockScheme.parse("7,3")
    assert scheme.blocks == ((1, 7), (8, 10))
    assert scheme.n == 10
    assert scheme.describe() == "7,3"


def test_default_blocks():
    assert default_blocks(10).sizes == [7, 3]
    assert default_blocks(14).sizes == [7, 7]
    assert default_blocks(5).sizes == [5]


def test_base_colorings():
    """Bases: one color for P_1, two for P_2/P_3, the frozen 3-coloring of P_4, parity4 beyond."""
    assert base_coloring(1).colors == 1
    assert base_coloring(3).colors == 2
    assert base_coloring(4).colors == 3
    assert base_coloring(6).name == "parity4"


def test_frozen_p4_table_is_proper():
    """The shipped P_4 table is a proper 3-coloring."""
    base = base_coloring(4)
    view = PancakeView(4)
    for u in view.iter_vertices():
        for _, v in view.adjacent(u):
            assert base.rule(u) != base.rule(v)


def test_frozen_p4_table_regenerates(tmp_path):
    """freeze_tables writes the complete solver's 3-coloring of P_4, byte for byte the shipped file."""
    assert freeze(4, 3, 'complete', SearchBudget(max_seconds=60.0), 1, tmp_path)
    fresh = tmp_path / 'p4_3coloring.txt'
    coloring = read_coloring_file(fresh)
    assert coloring.k == 3
    assert verify_proper(PancakeView(4), coloring).proper
    assert fresh.read_text() == (DATA_DIR / 'p4_3coloring.txt').read_text()


def test_compose_is_proper():
    """Composed colorings stay proper and use the sum of the block palettes."""
    for text, colors in (("2,2", 4), ("3,4", 5), ("4,3", 5), ("5,1", 5), ("3,3", 4)):
        coloring = compose(BlockScheme.parse(text))
        assert coloring.k == colors, f"[{text}] should use {colors} colors"
        report = verify_proper(PancakeView(coloring.n), coloring)
        assert report.proper, f"compose[{text}]: {report.violations} violations"


def test_compose_p8_from_two_p4_blocks():
    """[4,4] uses the frozen 3-coloring twice: six colors, proper on P_8."""
    coloring = compose(BlockScheme.parse("4,4"))
    assert coloring.k == 6
    report = verify_proper(PancakeView(8), coloring, workers=2)
    assert report.proper, f"compose[4,4]: {report.violations} violations"


def test_block_restriction_is_the_shifted_base():
    """On vertices starting in block B the color is offset(B) plus the base color of the projection."""
    for text in ("2,2", "3,4", "4,3", "5,1", "4,4"):
        scheme = BlockScheme.parse(text)
        coloring = compose(scheme)
        offset = 0
        for (lo, hi), size in zip(scheme.blocks, scheme.sizes):
            base = base_coloring(size)
            for perm in pancake_view(scheme.n, range(lo, hi + 1)).iter_vertices():
                expected = offset + base.rule(project_interval(perm, lo, hi))
                assert coloring.color(perm) == expected, f"[{text}] block {lo}..{hi} at {perm}"
            offset += base.colors


def test_registered_table_overrides_base(monkeypatch):
    """A registered table becomes the base for its block size."""
    monkeypatch.setattr(compose_module, '_registered_tables', {})
    register_base_table(first_element_coloring(3))
    assert base_coloring(3).colors == 3
    assert compose(BlockScheme.parse("3,3")).k == 6


def test_registry_methods():
    """build_coloring dispatches each method name."""
    assert build_coloring('equitable-nm1', 5).k == 4
    assert build_coloring('parity4', 6).k == 4
    assert build_coloring('first-element', 4).k == 4
    assert build_coloring('compose', 10, "7,3").k == 6


class TestCompositionErrors:

    def test_blocks_must_be_consecutive(self):
        with pytest.raises(ConfigurationError):
            BlockScheme(((1, 3), (5, 6)))

    def test_non_integer_blocks(self):
        with pytest.raises(ConfigurationError):
            BlockScheme.parse("7,x")

    def test_missing_base(self, monkeypatch):
        monkeypatch.setattr(compose_module, 'DATA_DIR', compose_module.DATA_DIR / 'missing')
        monkeypatch.setattr(compose_module, '_registered_tables', {})
        with pytest.raises(ConfigurationError):
            base_coloring(8)

    def test_blocks_must_cover_n(self):
        with pytest.raises(ConfigurationError):
            build_coloring('compose', 9, "7,3")

    def test_unknown_method(self):
        with pytest.raises(ConfigurationError):
            build_coloring('rainbow', 5)

    def test_method_range(self):
        with pytest.raises(RangeError):
            build_coloring('parity4', 4)

    def test_enumeration_bound(self):
        with pytest.raises(CapacityError):
            compose(BlockScheme.parse("7,6"))


@pytest.mark.slow
def test_compose_p10():
    """[7,3] 6-colors P_10 properly."""
    coloring = compose(BlockScheme.parse("7,3"))
    report = verify_proper(PancakeView(10), coloring, workers=os.cpu_count() or 1)
    assert report.proper
    assert coloring.k == 6
