"""Response check: label a learner answer clear, vague, or negative."""

import re
from dataclasses import dataclass

LABELS = ("clear", "vague", "negative")

REFUSAL_LEXICON = (
    "i don't know", "i dont know", "dont know", "don't know", "no idea",
    "not sure", "idk", "dunno", "i give up",
)

MIN_CLEAR_WORDS = 5


@dataclass(frozen=True)
class ResponseJudgment:
    label: str
    rationale: str


def check_response(answer, expected_concepts=(), judge=None) -> ResponseJudgment:
    """Deterministic fallback judge; a live backend may override but must
    emit one of the three labels."""
    if judge is not None:
        try:
            label = judge.generate("judge", {
                "answer": answer,
                "expected": ", ".join(expected_concepts),
            }).strip().lower()
            if label in LABELS:
                return ResponseJudgment(label=label, rationale="backend judge")
        except Exception:
            pass  # fall through to the local judge

    lowered = (answer or "").strip().lower()
    for phrase in REFUSAL_LEXICON:
        if phrase in lowered:
            return ResponseJudgment(
                label="negative",
                rationale=f"matched refusal phrase {phrase!r}")

    words = re.findall(r"[a-z0-9']+", lowered)
    hits = [concept for concept in expected_concepts
            if concept.lower() in lowered]
    if len(words) < MIN_CLEAR_WORDS:
        return ResponseJudgment(
            label="vague", rationale=f"only {len(words)} words")
    if expected_concepts and not hits:
        return ResponseJudgment(
            label="vague", rationale="no expected concept mentioned")
    return ResponseJudgment(
        label="clear",
        rationale=f"mentions {', '.join(hits) if hits else 'enough detail'}")
