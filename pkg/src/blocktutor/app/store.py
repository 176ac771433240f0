"""File-backed session store: one archive + one snapshot file per session.

Saves are atomic (write to a temp file, then rename), so a session file on
disk is always a complete, parseable snapshot.
"""

import os
import time
from pathlib import Path

from ..errors import BlockTutorError
from ..graph import extract_reference_graph
from ..sb3 import build_block_tree, load_project
from .sessiondoc import record_from_document, record_to_document


class StorageUnavailable(BlockTutorError):
    code = "storage_unavailable"


class FileSessionStore:
    def __init__(self, root, kb=None):
        self.root = Path(root)
        self.kb = kb
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageUnavailable(f"cannot create {root}: {exc}") from exc

    def _doc_path(self, session_id) -> Path:
        return self.root / f"{session_id}.json"

    def _archive_path(self, session_id) -> Path:
        return self.root / f"{session_id}.sb3"

    def save_archive(self, session_id, data):
        self._atomic_write(self._archive_path(session_id), data)

    def save(self, record):
        text = record_to_document(record)
        self._atomic_write(self._doc_path(record.session.session_id),
                           text.encode("utf-8"))

    def _atomic_write(self, path, data):
        tmp = path.with_name(path.name + f".tmp-{os.getpid()}")
        try:
            tmp.write_bytes(data)
            os.replace(tmp, path)
        except OSError as exc:
            raise StorageUnavailable(f"cannot write {path}: {exc}") from exc

    def exists(self, session_id) -> bool:
        return self._doc_path(session_id).exists()

    def load(self, session_id):
        doc_path = self._doc_path(session_id)
        if not doc_path.exists():
            return None
        archive = self._archive_path(session_id).read_bytes()
        project = load_project(archive)
        forest = build_block_tree(project)
        reference = extract_reference_graph(forest)
        return record_from_document(doc_path.read_text(encoding="utf-8"),
                                    forest, reference, self.kb)

    def list_ids(self) -> list:
        return sorted(p.stem for p in self.root.glob("*.json"))

    def expire(self, ttl_seconds, now=None) -> list:
        """Remove sessions idle longer than the TTL; returns removed ids."""
        now = time.time() if now is None else now
        removed = []
        for session_id in self.list_ids():
            mtime = self._doc_path(session_id).stat().st_mtime
            if now - mtime >= ttl_seconds:
                self._doc_path(session_id).unlink(missing_ok=True)
                self._archive_path(session_id).unlink(missing_ok=True)
                removed.append(session_id)
        return removed
