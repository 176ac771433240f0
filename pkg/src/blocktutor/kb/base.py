"""Knowledge-base construction (dedup), retrieval, and the on-disk artifact."""

import json
from dataclasses import dataclass, field

import numpy as np

from ..errors import BlockTutorError
from .embedder import DEFAULT_DIMENSION, HashedTfidfEmbedder, cosine

KB_VERSION = 1
DEFAULT_THRESHOLD = 0.90
DEFAULT_TOP_K = 3


class EmbedderMismatch(BlockTutorError):
    code = "embedder_mismatch"


class MalformedKnowledgeBase(BlockTutorError):
    code = "malformed_knowledge_base"


@dataclass
class KnowledgeEntry:
    id: str
    text: str
    context: str
    tags: tuple
    embedding: np.ndarray
    merged_texts: tuple = ()      # near-duplicates folded into this entry


@dataclass
class KnowledgeBase:
    entries: list = field(default_factory=list)
    embedder_id: str = ""
    dimension: int = DEFAULT_DIMENSION
    threshold: float = DEFAULT_THRESHOLD
    idf: dict = field(default_factory=dict)
    n_docs: int = 0
    built_at: str | None = None   # informational; not part of canonical bytes

    def query_embedder(self) -> HashedTfidfEmbedder:
        embedder = HashedTfidfEmbedder(dimension=self.dimension, idf=self.idf)
        embedder.n_docs = self.n_docs
        return embedder


def dedup(candidates, embedder=None, threshold=DEFAULT_THRESHOLD) -> KnowledgeBase:
    """Greedy input-order clustering: a candidate joins the first entry
    whose representative embedding has cosine >= threshold (merging
    contexts and tags), otherwise it becomes a new entry."""
    if not 0 < threshold <= 1:
        raise ValueError(f"threshold must be in (0, 1], got {threshold}")
    candidates = list(candidates)
    if embedder is None:
        embedder = HashedTfidfEmbedder()
        embedder.fit([c.sentence for c in candidates])
    entries = []
    for candidate in candidates:
        vec = embedder.embed(candidate.sentence)
        merged = False
        for entry in entries:
            if cosine(entry.embedding, vec) >= threshold:
                tags = tuple(sorted(set(entry.tags) | set(candidate.tags)))
                entry.tags = tags
                if candidate.context and candidate.context != entry.context:
                    entry.context = f"{entry.context}\n{candidate.context}"
                if candidate.sentence != entry.text:
                    entry.merged_texts = entry.merged_texts + (candidate.sentence,)
                merged = True
                break
        if not merged:
            entries.append(KnowledgeEntry(
                id=f"k{len(entries) + 1:04d}",
                text=candidate.sentence,
                context=candidate.context,
                tags=tuple(sorted(candidate.tags)),
                embedding=vec))
    return KnowledgeBase(entries=entries, embedder_id=embedder.embedder_id,
                         dimension=embedder.dimension, threshold=threshold,
                         idf=dict(embedder.idf), n_docs=embedder.n_docs)


def retrieve(kb: KnowledgeBase, query: str, k: int = DEFAULT_TOP_K) -> list:
    """Top-k entries by cosine similarity; descending score, ties broken
    by entry id ascending."""
    if not kb.embedder_id.startswith("hashed-tfidf-"):
        raise EmbedderMismatch(
            f"knowledge base built with unknown embedder: {kb.embedder_id!r}")
    query_vec = kb.query_embedder().embed(query)
    scored = [(entry, cosine(entry.embedding, query_vec))
              for entry in kb.entries]
    scored.sort(key=lambda pair: (-pair[1], pair[0].id))
    return scored[:k]


def _round(value):
    return round(float(value), 9)


def save_kb(kb: KnowledgeBase, path=None) -> str:
    """Serialize to the versioned artifact format (canonical bytes: two
    builds from identical inputs are byte-identical)."""
    doc = {
        "version": KB_VERSION,
        "embedder_id": kb.embedder_id,
        "dimension": kb.dimension,
        "threshold": _round(kb.threshold),
        "n_docs": kb.n_docs,
        "idf": {str(bucket): _round(weight)
                for bucket, weight in sorted(kb.idf.items())},
        "entries": [
            {
                "id": entry.id,
                "text": entry.text,
                "context": entry.context,
                "tags": list(entry.tags),
                "merged": list(entry.merged_texts),
                "embedding": {str(i): _round(v)
                              for i, v in enumerate(entry.embedding) if v},
            }
            for entry in kb.entries
        ],
    }
    text = json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if path is not None:
        if hasattr(path, "write"):
            path.write(text)
        else:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
    return text


def load_kb(source) -> KnowledgeBase:
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, str) and source.lstrip().startswith("{"):
        text = source
    else:
        with open(source, encoding="utf-8") as handle:
            text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedKnowledgeBase(f"not valid JSON: {exc.msg}") from exc
    if doc.get("version") != KB_VERSION:
        raise MalformedKnowledgeBase(
            f"unsupported artifact version: {doc.get('version')!r}")
    dimension = int(doc["dimension"])
    entries = []
    for raw in doc.get("entries", []):
        vec = np.zeros(dimension)
        for bucket, value in raw.get("embedding", {}).items():
            vec[int(bucket)] = value
        entries.append(KnowledgeEntry(
            id=raw["id"], text=raw["text"], context=raw.get("context", ""),
            tags=tuple(raw.get("tags", [])),
            merged_texts=tuple(raw.get("merged", [])),
            embedding=vec))
    return KnowledgeBase(
        entries=entries, embedder_id=doc["embedder_id"], dimension=dimension,
        threshold=float(doc["threshold"]),
        idf={int(b): w for b, w in doc.get("idf", {}).items()},
        n_docs=int(doc.get("n_docs", 0)))
