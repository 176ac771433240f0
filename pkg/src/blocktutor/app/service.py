"""HTTP service exposing the engine; see docs/api.md."""

import json
import threading
import time
import uuid

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..analysis import block_category_stats, report_to_dict, score_ct
from ..errors import BlockTutorError
from ..graph import (GraphNode, deserialize_graph, graph_diff,
                     serialize_graph, validate_graph)
from ..kb import KnowledgeBase
from ..remix import (AssetStore, RemixRequest, derive_image_prompts,
                     render_node_image, suggest_edges)
from ..scaffold import ScaffoldEngine, SessionResolved, start_session
from ..scaffold.moderation import ModerationBlocked
from .sessiondoc import SessionRecord, proposal_doc
from .store import FileSessionStore

DEFAULT_MAX_ARCHIVE = 32 * 1024 * 1024


def _error(status, code, message):
    return JSONResponse(status_code=status,
                        content={"error": code, "message": message})


def create_app(session_dir=".blocktutor-sessions", kb=None, backend=None,
               image_backend=None, asset_dir=None,
               max_archive_bytes=DEFAULT_MAX_ARCHIVE) -> FastAPI:
    kb = kb or KnowledgeBase(embedder_id="hashed-tfidf-1024")
    store = FileSessionStore(session_dir, kb=kb)
    engine = ScaffoldEngine(backend=backend)
    locks = {}
    locks_guard = threading.Lock()

    app = FastAPI(title="blocktutor")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.store = store

    def lock_for(session_id):
        with locks_guard:
            return locks.setdefault(session_id, threading.Lock())

    @app.exception_handler(BlockTutorError)
    async def _handle_typed(request, exc):
        status = 422 if not isinstance(exc, SessionResolved) else 409
        return _error(status, exc.code, str(exc))

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        body = await request.body()
        if len(body) > max_archive_bytes:
            return _error(413, "payload_too_large",
                          f"archive exceeds {max_archive_bytes} bytes")
        session_id = uuid.uuid4().hex[:12]
        try:
            session = start_session(body, kb=kb, session_id=session_id,
                                    project_ref=f"{session_id}.sb3")
        except BlockTutorError as exc:
            return _error(422, exc.code, str(exc))
        store.save_archive(session_id, body)
        now = time.time()
        record = SessionRecord(session=session, created=now, updated=now)
        store.save(record)
        report = score_ct(session.forest)
        try:
            stats = block_category_stats(session.forest)
            stats_doc = {"counts": stats.counts, "total": stats.total_blocks}
        except BlockTutorError:
            stats_doc = None
        reference = session.reference_graph
        return {
            "session_id": session_id,
            "ct_report": report_to_dict(report),
            "category_stats": stats_doc,
            "reference_graph_summary": {
                "canvases": len(reference.canvases),
                "nodes": len(reference.nodes),
                "edges": len(reference.edges),
            },
            "reference_graph": json.loads(serialize_graph(reference)),
        }

    def load_or_404(session_id):
        record = store.load(session_id)
        if record is None:
            return None, _error(404, "not_found",
                                f"unknown session: {session_id}")
        return record, None

    @app.get("/sessions/{session_id}/graph")
    def get_graph(session_id: str):
        record, err = load_or_404(session_id)
        if err:
            return err
        return Response(serialize_graph(record.session.learner_graph),
                        media_type="application/json")

    @app.put("/sessions/{session_id}/graph")
    async def put_graph(session_id: str, request: Request):
        record, err = load_or_404(session_id)
        if err:
            return err
        text = (await request.body()).decode("utf-8")
        try:
            graph = deserialize_graph(text)
        except BlockTutorError as exc:
            return _error(422, exc.code, str(exc))
        diff = graph_diff(record.session.learner_graph, graph)
        record.session.learner_graph = graph
        record.updated = time.time()
        store.save(record)
        violations = validate_graph(graph)
        return {
            "violations": [
                {"kind": v.kind, "node": v.node_id, "message": v.message}
                for v in violations
            ],
            "diff": {
                "extended_nodes": diff.extended_nodes,
                "extended_edges": diff.extended_edges,
                "suggestion_adoptions": diff.suggestion_adoptions,
            },
        }

    @app.post("/sessions/{session_id}/turns")
    async def post_turn(session_id: str, request: Request):
        lock = lock_for(session_id)
        if not lock.acquire(blocking=False):
            return _error(409, "conflict",
                          "another turn is in progress for this session")
        try:
            record, err = load_or_404(session_id)
            if err:
                return err
            payload = json.loads((await request.body()).decode("utf-8"))
            learner_input = payload.get("input", "")
            try:
                _, response = engine.handle_turn(record.session, learner_input)
            except SessionResolved as exc:
                return _error(409, exc.code, str(exc))
            record.updated = time.time()
            store.save(record)
            highlight = response.highlight
            return {
                "state": record.session.state,
                "states_visited": response.states_visited,
                "messages": response.messages,
                "judgment": response.judgment,
                "moderation_blocked": response.moderation_blocked,
                "referral": response.referral,
                "highlight": None if highlight is None else {
                    "target": highlight.target_block,
                    "blocks": highlight.generated_block,
                    "edges": [list(e) for e in highlight.edges],
                    "summary": highlight.summary,
                },
            }
        finally:
            lock.release()

    @app.post("/sessions/{session_id}/remix")
    async def post_remix(session_id: str, request: Request):
        record, err = load_or_404(session_id)
        if err:
            return err
        payload = json.loads((await request.body()).decode("utf-8"))
        remix_request = RemixRequest(
            utterance=payload.get("utterance", ""),
            target_canvas=payload.get("target_canvas", ""),
            session_id=session_id)
        try:
            proposals = derive_image_prompts(
                remix_request, record.session.learner_graph, backend=backend)
        except ModerationBlocked as exc:
            return _error(422, exc.code, str(exc))
        asset_store = AssetStore(asset_dir) if asset_dir else None
        proposals = [render_node_image(p, image_backend, store=asset_store)
                     for p in proposals]
        record.remix_proposals = proposals
        record.updated = time.time()
        store.save(record)
        return {"proposals": [proposal_doc(p) for p in proposals]}

    @app.post("/sessions/{session_id}/edge-suggestions")
    async def post_edge_suggestions(session_id: str, request: Request):
        record, err = load_or_404(session_id)
        if err:
            return err
        payload = json.loads((await request.body()).decode("utf-8"))
        node_id = payload.get("node_id", "")
        graph = record.session.learner_graph
        node = graph.nodes.get(node_id)
        if node is None:
            return _error(404, "not_found", f"unknown node: {node_id}")
        candidates = suggest_edges(graph, node, backend=backend)
        return {"candidates": [
            {"from": e.from_id, "to": e.to_id, "relation": e.relation}
            for e in candidates
        ]}

    @app.get("/sessions/{session_id}/transcript")
    def get_transcript(session_id: str):
        record, err = load_or_404(session_id)
        if err:
            return err
        return {
            "state": record.session.state,
            "turns": [
                {"role": t.role, "content": t.content, "state": t.state_after}
                for t in record.session.transcript
            ],
        }

    return app
