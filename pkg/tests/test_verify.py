import json
import subprocess
import sys

import pytest

from regionflip.verify import run_verification


@pytest.fixture(scope="module")
def results():
    return run_verification(max_crossings=5)


class TestSuites:
    def test_everything_passes(self, results):
        failed = [r for r in results if not r.passed]
        assert not failed, failed

    def test_all_suites_present(self, results):
        suites = {r.suite for r in results}
        assert suites == {
            "rank_law", "hopf_obstruction", "admissibility_equivalence",
            "unknotting_criterion", "linking_parity_invariance",
            "region_weight_parity", "arf_change_law",
            "arf_unknotting_consistency", "smoothing_independence",
            "codec_roundtrip",
        }

    def test_every_catalog_diagram_covered(self, results):
        from regionflip.catalog import CATALOG_NAMES

        rank_rows = {r.diagram for r in results if r.suite == "rank_law"}
        assert set(CATALOG_NAMES) <= rank_rows

    def test_records_serialize(self, results):
        for r in results:
            d = r.as_dict()
            assert set(d) == {"suite", "diagram", "passed", "detail"}
            json.dumps(d)


class TestParallel:
    def test_jobs_two_matches_sequential(self):
        seq = run_verification(max_crossings=4, jobs=1)
        par = run_verification(max_crossings=4, jobs=2)
        assert [r.as_dict() for r in seq] == [r.as_dict() for r in par]


class TestExternalCatalog:
    def test_external_catalog_path(self, tmp_path):
        path = tmp_path / "mini.jsonl"
        path.write_text('{"name": "ring", "pd": "X(1,2,2,1)"}\n')
        results = run_verification(max_crossings=4, catalog_path=str(path))
        assert any(r.diagram == "ring" for r in results)
        assert all(r.passed for r in results)


class TestConsoleScript:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "regionflip", "info", "--pd", "X(1,2,2,1)"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["c"] == 1
