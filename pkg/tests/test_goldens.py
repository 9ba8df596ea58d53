"""Golden tables: regeneration must reproduce the committed files."""

import filecmp
import os

import pytest

from cubespectra.goldens import SUITES, regenerate

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "..", "goldens")

FILES = {
    "hamming-table": "hamming_table.tsv",
    "bounds-table": "bounds_table.tsv",
    "search-table": "search_table.tsv",
    "partition-certs": "partition_certs.json",
}


@pytest.mark.parametrize("suite", SUITES)
def test_regenerated_matches_committed(suite, tmp_path):
    (path,) = regenerate(suite, str(tmp_path))
    committed = os.path.join(GOLDEN_DIR, FILES[suite])
    assert os.path.exists(committed), f"golden file {committed} missing"
    assert filecmp.cmp(path, committed, shallow=False), (
        f"regenerated {suite} differs from the committed golden; "
        f"run `cubespectra regen-goldens --suite {suite}` and review the diff")


def test_golden_tables_sanity():
    with open(os.path.join(GOLDEN_DIR, "hamming_table.tsv")) as fh:
        rows = [line.split("\t") for line in fh.read().splitlines()[1:]]
    values = {(int(d), int(i)): float(lam) for d, i, lam in rows}
    assert abs(values[(6, 2)] - 4.0) < 1e-9
    assert abs(values[(20, 9)] - 18.0) < 1e-9
    assert all(i <= d // 2 for d, i in values)
    with open(os.path.join(GOLDEN_DIR, "search_table.tsv")) as fh:
        lines = fh.read().splitlines()
    assert len(lines) == 12   # header + n in 2..12
