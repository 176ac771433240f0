"""Sentence extraction from corpus records.

The extractor is pluggable; the default is rule based: deterministic
sentence splitting plus a keyword lexicon over concept / practice /
creative-idea terms.  Replies and comments get the nearest preceding post
for the same project attached as context, mirroring how question-answer
pairs appear in community threads.
"""

import re
from dataclasses import dataclass
from importlib import resources

# Trailing abbreviations that do not end a sentence.
ABBREVIATIONS = frozenset({"e.g", "i.e", "mr", "mrs", "dr", "vs", "etc", "st"})

_SENTENCE_END = re.compile(r"([.?!]+)\s+")


@dataclass(frozen=True)
class Candidate:
    sentence: str
    context: str
    tags: frozenset


def split_sentences(text):
    """Deterministic splitter: break on .?! followed by whitespace, with
    an abbreviation stop-list."""
    sentences = []
    start = 0
    for match in _SENTENCE_END.finditer(text):
        chunk = text[start:match.end(1)]
        last_word = chunk[:match.start(1) - start].rsplit(None, 1)
        if last_word and last_word[-1].lower().rstrip(".") in ABBREVIATIONS:
            continue
        sentences.append(chunk.strip())
        start = match.end()
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return [s for s in sentences if s]


def load_lexicon(path=None) -> dict:
    """Load the tag -> term-set lexicon (sections in square brackets)."""
    source = (resources.files("blocktutor.data") / "lexicon.txt"
              if path is None else path)
    lexicon = {}
    tag = None
    for line in source.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            tag = line[1:-1]
            lexicon[tag] = set()
        elif tag:
            lexicon[tag].add(line.lower())
    return lexicon


class RuleBasedExtractor:
    def __init__(self, lexicon=None):
        self.lexicon = lexicon or load_lexicon()

    def extract(self, record, context):
        candidates = []
        for sentence in split_sentences(record.text):
            words = set(re.findall(r"[a-z0-9']+", sentence.lower()))
            tags = frozenset(tag for tag, terms in sorted(self.lexicon.items())
                             if words & terms)
            if tags:
                candidates.append(Candidate(sentence=sentence,
                                            context=context, tags=tags))
        return candidates


def extract_knowledge(records, extractor=None) -> list:
    """Run the extractor over every record, pairing replies/comments with
    the nearest preceding post on the same project."""
    extractor = extractor or RuleBasedExtractor()
    last_post = {}
    candidates = []
    for record in records:
        if record.kind == "post":
            last_post[record.project_id] = record.text
            context = record.text
        else:
            context = last_post.get(record.project_id, record.text)
        candidates.extend(extractor.extract(record, context))
    return candidates


def word_count(sentence) -> int:
    return len(sentence.split())


def filter_length(candidates, min_words=5, max_words=400) -> list:
    """Keep sentences with min_words <= words <= max_words (strict reading
    of the 'shorter than 5 / longer than 400' bounds)."""
    return [c for c in candidates
            if min_words <= word_count(c.sentence) <= max_words]
