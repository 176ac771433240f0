from .sessiondoc import (MalformedSessionDocument, SessionRecord,
                         record_from_document, record_to_document)
from .store import FileSessionStore, StorageUnavailable

__all__ = [
    "FileSessionStore", "MalformedSessionDocument", "SessionRecord",
    "StorageUnavailable", "record_from_document", "record_to_document",
]
