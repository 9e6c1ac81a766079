#!/usr/bin/env python3
"""
Unit tests for coloring representations and the coloring file format
"""

import pytest
import numpy as np
import sys
import os
from io import StringIO

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.coloring import FunctionalColoring, TabularColoring, read_coloring_file, tabulate, write_coloring_file
from core.errors import ColoringFormatError, RangeError
from core.permutations import lex_unrank
from colorings.domsets import first_element_color


def test_tabulate_matches_rule():
    """A tabulated coloring agrees with its rule on every vertex."""
    coloring = FunctionalColoring(4, 4, first_element_color, name="first")
    table = tabulate(coloring)
    assert isinstance(table, TabularColoring)
    assert table.class_sizes() == [6, 6, 6, 6]
    for rank in range(24):
        perm = lex_unrank(rank, 4)
        assert table.color(perm) == coloring.color(perm)


def test_file_written_in_rank_order(tmp_path):
    """The file is a header plus one '<rank> <color>' line per vertex."""
    coloring = FunctionalColoring(3, 3, first_element_color, name="first")
    path = tmp_path / "p3.txt"
    written = write_coloring_file(coloring, path)
    lines = path.read_text().splitlines()
    assert written == 6
    assert lines[0] == "pancake-coloring n=3 k=3"
    assert lines[1:] == ["0 1", "1 1", "2 2", "3 2", "4 3", "5 3"]


def test_read_back(tmp_path):
    """Reading a written file gives the same colors."""
    coloring = FunctionalColoring(4, 4, first_element_color, name="first")
    path = tmp_path / "p4.txt"
    write_coloring_file(coloring, path)
    loaded = read_coloring_file(path)
    assert loaded.n == 4 and loaded.k == 4
    assert np.array_equal(loaded.table, tabulate(coloring).table)


class TestColoringFileErrors:
    """Malformed coloring files are rejected with ColoringFormatError."""

    def test_bad_header(self):
        with pytest.raises(ColoringFormatError):
            read_coloring_file(StringIO("coloring n=3 k=2\n0 1\n"))

    def test_missing_vertices(self):
        with pytest.raises(ColoringFormatError):
            read_coloring_file(StringIO("pancake-coloring n=3 k=2\n0 1\n1 2\n"))

    def test_ranks_out_of_order(self):
        text = "pancake-coloring n=3 k=2\n" + "\n".join(f"{r} 1" for r in (0, 2, 1, 3, 4, 5)) + "\n"
        with pytest.raises(ColoringFormatError):
            read_coloring_file(StringIO(text))

    def test_color_outside_palette(self):
        text = "pancake-coloring n=3 k=2\n" + "\n".join(f"{r} {3 if r == 4 else 1}" for r in range(6)) + "\n"
        with pytest.raises(ColoringFormatError):
            read_coloring_file(StringIO(text))

    def test_table_shape(self):
        with pytest.raises(ColoringFormatError):
            TabularColoring(3, 2, np.ones(5, dtype=np.uint8))

    def test_zero_colors(self):
        with pytest.raises(RangeError):
            FunctionalColoring(3, 0, first_element_color, name="none")
