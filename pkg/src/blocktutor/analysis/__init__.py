from .categories import (CATEGORIES, CategoryStats, EmptyProject,
                         block_category_stats, categorize)
from .corpus import EmptyCorpus, ScanResult, corpus_scan
from .ct import CTReport, collect_facts, report_to_dict, score_ct
from .rubric import DIMENSIONS, RubricRule, evaluate_rule, load_rubric

__all__ = [
    "CATEGORIES", "CTReport", "CategoryStats", "DIMENSIONS", "EmptyCorpus",
    "EmptyProject", "RubricRule", "ScanResult", "block_category_stats",
    "categorize", "collect_facts", "corpus_scan", "evaluate_rule",
    "load_rubric", "report_to_dict", "score_ct",
]
