from .base import (DEFAULT_THRESHOLD, DEFAULT_TOP_K, EmbedderMismatch,
                   KnowledgeBase, KnowledgeEntry, MalformedKnowledgeBase,
                   dedup, load_kb, retrieve, save_kb)
from .embedder import DEFAULT_DIMENSION, HashedTfidfEmbedder, cosine, tokenize
from .extract import (Candidate, RuleBasedExtractor, extract_knowledge,
                      filter_length, load_lexicon, split_sentences, word_count)
from .records import CorpusRecord, MalformedRecord, read_records

__all__ = [
    "Candidate", "CorpusRecord", "DEFAULT_DIMENSION", "DEFAULT_THRESHOLD",
    "DEFAULT_TOP_K", "EmbedderMismatch", "HashedTfidfEmbedder",
    "KnowledgeBase", "KnowledgeEntry", "MalformedKnowledgeBase",
    "MalformedRecord", "RuleBasedExtractor", "cosine", "dedup",
    "extract_knowledge", "filter_length", "load_kb", "load_lexicon",
    "read_records", "retrieve", "save_kb", "split_sentences", "tokenize",
    "word_count",
]
