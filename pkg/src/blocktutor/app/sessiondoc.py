"""Session snapshot document: how a dialogue session round-trips to disk."""

import json
from dataclasses import dataclass, field

from ..errors import BlockTutorError
from ..graph import deserialize_graph, serialize_graph
from ..scaffold.closure import BlockGraphHighlight
from ..scaffold.engine import DialogueSession, Turn

SESSION_DOC_VERSION = 1


class MalformedSessionDocument(BlockTutorError):
    code = "malformed_session_document"


@dataclass
class SessionRecord:
    session: DialogueSession
    remix_proposals: list = field(default_factory=list)
    created: float = 0.0
    updated: float = 0.0


def _highlight_doc(highlight):
    if highlight is None:
        return None
    return {
        "target": highlight.target_block,
        "blocks": list(highlight.generated_block),
        "edges": [list(e) for e in highlight.edges],
        "summary": highlight.summary,
    }


def _highlight_from(doc):
    if doc is None:
        return None
    return BlockGraphHighlight(
        target_block=doc["target"], generated_block=list(doc["blocks"]),
        edges=[tuple(e) for e in doc.get("edges", [])],
        summary=doc.get("summary", ""))


def proposal_doc(proposal):
    return {
        "label": proposal.label,
        "description": proposal.description,
        "image_prompt": proposal.image_prompt,
        "negative_prompt": proposal.negative_prompt,
        "image_ref": proposal.image_ref,
        "image_missing": proposal.image_missing,
    }


def record_to_document(record: SessionRecord) -> str:
    session = record.session
    doc = {
        "version": SESSION_DOC_VERSION,
        "session_id": session.session_id,
        "project_ref": session.project_ref,
        "state": session.state,
        "loop_count": session.loop_count,
        "max_loops": session.max_loops,
        "pending_question": session.pending_question,
        "expected_concepts": list(session.expected_concepts),
        "transcript": [
            {"role": t.role, "content": t.content, "state": t.state_after}
            for t in session.transcript
        ],
        "highlight": _highlight_doc(session.highlight),
        "learner_graph": json.loads(serialize_graph(session.learner_graph)),
        "remix_proposals": [proposal_doc(p) for p in record.remix_proposals],
        "created": record.created,
        "updated": record.updated,
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def record_from_document(text, forest, reference_graph, kb) -> SessionRecord:
    """Rebuild a record; the forest/reference graph are re-derived from the
    stored archive by the caller (they are not part of the snapshot)."""
    from ..remix.proposals import NodeProposal

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSessionDocument(f"not valid JSON: {exc.msg}") from exc
    if doc.get("version") != SESSION_DOC_VERSION:
        raise MalformedSessionDocument(
            f"unsupported session document version: {doc.get('version')!r}")
    session = DialogueSession(
        session_id=doc["session_id"],
        project_ref=doc.get("project_ref", ""),
        forest=forest,
        learner_graph=deserialize_graph(json.dumps(doc["learner_graph"])),
        reference_graph=reference_graph,
        kb=kb,
        state=doc["state"],
        transcript=[Turn(t["role"], t["content"], t["state"])
                    for t in doc.get("transcript", [])],
        pending_question=doc.get("pending_question"),
        loop_count=doc.get("loop_count", 0),
        max_loops=doc.get("max_loops", 3),
        highlight=_highlight_from(doc.get("highlight")),
        expected_concepts=tuple(doc.get("expected_concepts", [])),
    )
    proposals = [NodeProposal(
        label=p["label"], description=p["description"],
        image_prompt=p["image_prompt"], negative_prompt=p["negative_prompt"],
        image_ref=p.get("image_ref"), image_missing=p.get("image_missing", False))
        for p in doc.get("remix_proposals", [])]
    return SessionRecord(session=session, remix_proposals=proposals,
                         created=doc.get("created", 0.0),
                         updated=doc.get("updated", 0.0))
