import shutil

import pytest

from blocktutor.analysis import block_category_stats, corpus_scan
from blocktutor.analysis.categories import (EmptyProject, categorize,
                                            CategoryStats)

from conftest import FIXTURE_NAMES, fixture_path, load_forest

CATEGORIES = ("conditions", "loops", "variables", "booleans", "other")


@pytest.mark.parametrize("name", [n for n in FIXTURE_NAMES
                                  if n != "empty_stage"])
def test_partition_invariants(name):
    stats = block_category_stats(load_forest(name))
    assert set(stats.counts) == set(CATEGORIES)
    assert sum(stats.counts.values()) == stats.total_blocks
    assert abs(sum(stats.fractions.values()) - 1.0) < 1e-9
    for key in CATEGORIES:
        assert stats.fractions[key] == pytest.approx(
            stats.counts[key] / stats.total_blocks)


def test_soccer_counts():
    stats = block_category_stats(load_forest("soccer_min"))
    assert stats.counts == {"conditions": 1, "loops": 2, "variables": 2,
                            "booleans": 1, "other": 8}
    assert stats.total_blocks == 14


def test_empty_project_rejected():
    with pytest.raises(EmptyProject):
        block_category_stats(load_forest("empty_stage"))


def test_categorize_is_total_and_disjoint():
    for opcode in ("control_if", "control_if_else"):
        assert categorize(opcode) == "conditions"
    for opcode in ("control_repeat", "control_forever",
                   "control_repeat_until"):
        assert categorize(opcode) == "loops"
    for opcode in ("data_setvariableto", "data_changevariableby",
                   "data_variable"):
        assert categorize(opcode) == "variables"
    for opcode in ("operator_and", "operator_lt", "sensing_touchingobject"):
        assert categorize(opcode) == "booleans"
    for opcode in ("motion_movesteps", "made_up_opcode", ""):
        assert categorize(opcode) == "other"


def test_zero_cc_project_is_all_other():
    stats = block_category_stats(load_forest("say_hello"))
    assert stats.fractions["other"] == 1.0
    for key in ("conditions", "loops", "variables", "booleans"):
        assert stats.fractions[key] == 0.0


def test_from_counts_validates():
    stats = CategoryStats.from_counts({"conditions": 2, "loops": 0,
                                       "variables": 0, "booleans": 0,
                                       "other": 8})
    assert stats.total_blocks == 10
    assert stats.fractions["conditions"] == pytest.approx(0.2)


class TestCorpusScan:
    def test_aggregate_is_elementwise_sum(self, tmp_path):
        for i in range(3):
            shutil.copy(fixture_path("soccer_min"),
                        tmp_path / f"copy{i}.sb3")
        scan = corpus_scan(sorted(tmp_path.glob("*.sb3")))
        assert len(scan.results) == 3
        assert not scan.skipped
        single = block_category_stats(load_forest("soccer_min"))
        for key in CATEGORIES:
            assert scan.aggregate.counts[key] == 3 * single.counts[key]
        assert scan.aggregate.total_blocks == 3 * single.total_blocks

    def test_corrupt_archive_is_skipped_not_fatal(self, tmp_path):
        shutil.copy(fixture_path("soccer_min"), tmp_path / "good.sb3")
        (tmp_path / "bad.sb3").write_bytes(b"definitely not a zip")
        scan = corpus_scan(sorted(tmp_path.glob("*.sb3")))
        assert len(scan.results) == 1
        assert len(scan.skipped) == 1
        assert scan.error is None

    def test_empty_corpus_flagged(self):
        scan = corpus_scan([])
        assert scan.results == []
        assert scan.error == "EmptyCorpus"

    def test_per_file_order_is_input_order(self, tmp_path):
        names = ["z.sb3", "a.sb3", "m.sb3"]
        for name in names:
            shutil.copy(fixture_path("say_hello"), tmp_path / name)
        paths = [tmp_path / n for n in names]
        scan = corpus_scan(paths)
        assert [str(p) for p, _, _ in scan.results] == [str(p) for p in paths]
