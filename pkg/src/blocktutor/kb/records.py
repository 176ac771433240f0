"""Corpus records: anonymized community posts, comments, and replies."""

import json
from dataclasses import dataclass

from ..errors import BlockTutorError

RECORD_KINDS = ("post", "comment", "reply")


class MalformedRecord(BlockTutorError):
    code = "malformed_record"


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    kind: str
    text: str
    project_id: str | None = None
    author_hash: str = ""

    def __post_init__(self):
        if self.kind not in RECORD_KINDS:
            raise MalformedRecord(f"unknown record kind: {self.kind}")
        if not self.text:
            raise MalformedRecord(f"record {self.id} has empty text")


def read_records(path) -> list:
    """Read a line-delimited records file (one JSON object per line)."""
    records = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(
                    f"line {line_no} is not valid JSON: {exc.msg}",
                    line=line_no) from exc
            try:
                records.append(CorpusRecord(
                    id=str(raw["id"]), kind=raw["kind"], text=raw["text"],
                    project_id=raw.get("project_id"),
                    author_hash=raw.get("author_hash", "")))
            except KeyError as exc:
                raise MalformedRecord(
                    f"line {line_no} missing field {exc}", line=line_no) from exc
    return records
