"""Deterministic hashed term-frequency embedder with IDF weighting.

Offline and reproducible: tokens are hashed with md5 into a fixed-size
vocabulary, weighted by inverse document frequency learned at build time,
and L2 normalized.  A neural embedder can be plugged in behind the same
interface; ``embedder_id`` guards against mixing schemes.
"""

import hashlib
import math
import re

import numpy as np

DEFAULT_DIMENSION = 1024

_TOKEN_RE = re.compile(r"[a-z0-9']+")


def tokenize(text):
    return _TOKEN_RE.findall(text.lower())


def _bucket(token, dimension):
    digest = hashlib.md5(token.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") % dimension


class HashedTfidfEmbedder:
    def __init__(self, dimension=DEFAULT_DIMENSION, idf=None):
        self.dimension = dimension
        # idf maps bucket index -> weight; missing buckets fall back to
        # the weight of an unseen term.
        self.idf = dict(idf) if idf else {}
        self.n_docs = 0

    @property
    def embedder_id(self):
        return f"hashed-tfidf-{self.dimension}"

    def fit(self, texts):
        """Learn IDF weights from a corpus of documents."""
        texts = list(texts)
        self.n_docs = len(texts)
        df = {}
        for text in texts:
            for bucket in {_bucket(t, self.dimension) for t in tokenize(text)}:
                df[bucket] = df.get(bucket, 0) + 1
        self.idf = {
            bucket: math.log((1 + self.n_docs) / (1 + count)) + 1.0
            for bucket, count in df.items()
        }
        return self

    def _default_idf(self):
        return math.log(1 + self.n_docs) + 1.0 if self.n_docs else 1.0

    def embed(self, text) -> np.ndarray:
        vec = np.zeros(self.dimension)
        for token in tokenize(text):
            bucket = _bucket(token, self.dimension)
            vec[bucket] += self.idf.get(bucket, self._default_idf())
        norm = np.linalg.norm(vec)
        if norm > 0:
            vec /= norm
        return vec


def cosine(a, b) -> float:
    # Inputs are unit vectors (or zero); the dot product is the cosine.
    return float(np.dot(a, b))
