"""Batch scan of project archives for per-project and aggregate statistics."""

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import BlockTutorError
from ..sb3 import build_block_tree, load_project
from .categories import CATEGORIES, CategoryStats, block_category_stats
from .ct import score_ct


class EmptyCorpus(BlockTutorError):
    code = "empty_corpus"


@dataclass
class ScanResult:
    results: list = field(default_factory=list)  # [(path, CTReport, CategoryStats)]
    skipped: list = field(default_factory=list)  # [(path, error message)]
    aggregate: CategoryStats | None = None
    error: str | None = None                     # "EmptyCorpus" when vacuous


def corpus_scan(paths) -> ScanResult:
    """Analyze every readable archive; failures are collected, never fatal.

    Aggregate counts are the elementwise sum of the per-project counts.
    """
    scan = ScanResult()
    totals = {k: 0 for k in CATEGORIES}
    for path in paths:
        path = Path(path)
        try:
            project = load_project(path.read_bytes())
            forest = build_block_tree(project)
            report = score_ct(forest)
            stats = block_category_stats(forest)
        except (OSError, BlockTutorError) as exc:
            scan.skipped.append((str(path), str(exc)))
            continue
        scan.results.append((str(path), report, stats))
        for k in CATEGORIES:
            totals[k] += stats.counts[k]
    if sum(totals.values()) == 0:
        scan.error = "EmptyCorpus"
    else:
        scan.aggregate = CategoryStats.from_counts(totals)
    return scan
