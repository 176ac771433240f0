"""Local blocklist moderation.

Every outbound text passes through ``moderate`` before emission.  A
pluggable external moderator may tighten the verdict but can never loosen
the local blocklist.
"""

import re
from dataclasses import dataclass
from importlib import resources

from ..errors import BlockTutorError

CATEGORIES = ("explicit", "hate", "harassment", "violence", "self-harm")


class ModerationBlocked(BlockTutorError):
    code = "moderation_blocked"

    def __init__(self, message, category):
        super().__init__(message, category=category)
        self.category = category


@dataclass(frozen=True)
class ModerationResult:
    blocked: bool
    category: str | None = None
    term: str | None = None


REFUSAL_TEXT = ("Let's keep our chat friendly and about the project. "
                "Try asking in a different way!")


def load_blocklist(path=None) -> dict:
    source = (resources.files("blocktutor.data") / "blocklist.txt"
              if path is None else path)
    blocklist = {}
    category = None
    for line in source.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            category = line[1:-1]
            blocklist[category] = []
        elif category:
            blocklist[category].append(line.lower())
    return blocklist


class Moderator:
    def __init__(self, blocklist=None, external=None):
        self.blocklist = blocklist or load_blocklist()
        self.external = external
        self._patterns = {
            category: [re.compile(r"\b" + re.escape(term) + r"\b")
                       for term in terms]
            for category, terms in self.blocklist.items()
        }

    def moderate(self, text) -> ModerationResult:
        lowered = (text or "").lower()
        for category in sorted(self._patterns):
            for pattern in self._patterns[category]:
                if pattern.search(lowered):
                    return ModerationResult(blocked=True, category=category,
                                            term=pattern.pattern)
        if self.external is not None:
            verdict = self.external(text)
            if verdict is not None and verdict.blocked:
                return verdict
        return ModerationResult(blocked=False)

    def check(self, text):
        """Raise ModerationBlocked if the text fails moderation."""
        result = self.moderate(text)
        if result.blocked:
            raise ModerationBlocked(
                f"content blocked ({result.category})", result.category)
        return text


_default = None


def default_moderator() -> Moderator:
    global _default
    if _default is None:
        _default = Moderator()
    return _default


def moderate(text) -> ModerationResult:
    return default_moderator().moderate(text)
