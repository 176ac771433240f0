"""Acceptance gate: one test per release criterion, each printing a
single PASS/FAIL line.  Run with `pytest -s tests/test_acceptance.py`."""

import functools
import json
import random
import time
import zipfile
from io import BytesIO

from blocktutor.analysis import block_category_stats, score_ct
from blocktutor.errors import BlockTutorError
from blocktutor.graph import (GraphEdge, GraphNode, VisualGraph,
                              deserialize_graph, graph_diff, serialize_graph,
                              validate_graph)
from blocktutor.graph.model import (NODE_KINDS, RELATIONS, DuplicateEdge,
                                    KindViolation, UnknownId,
                                    allowed_relations)
from blocktutor.kb import dedup, extract_knowledge, filter_length, retrieve, \
    save_kb
from blocktutor.kb.extract import Candidate
from blocktutor.kb.records import CorpusRecord
from blocktutor.sb3 import build_block_tree, load_project
from blocktutor.scaffold import ScaffoldEngine, SessionResolved, start_session
from blocktutor.scaffold.closure import control_dependency_closure
from blocktutor.scaffold.engine import DialogueSession, STATES
from blocktutor.remix import RemixRequest, derive_image_prompts, suggest_edges
from blocktutor.remix.proposals import load_negative_prompts
from blocktutor.scaffold.moderation import moderate

from conftest import (FIXTURE_NAMES, fixture_bytes, fixture_json,
                      fixture_path, load_forest)
from oracles import brute_force_ct, closure_oracle, retrieval_oracle
from test_ct import HAND_SCORES, ORDER, append_random_block
from test_graph import random_graph


def criterion(name):
    """Print one PASS/FAIL line per acceptance criterion."""
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {name}: FAIL")
                raise
            print(f"ACCEPTANCE {name}: PASS")
        return wrapper
    return decorate


@criterion("parser-totality")
def test_parser_totality_and_fuzz():
    assert len(FIXTURE_NAMES) >= 12
    for name in FIXTURE_NAMES:
        forest = build_block_tree(load_project(fixture_bytes(name)))
        source_count = sum(
            sum(1 for b in t.get("blocks", {}).values() if isinstance(b, dict))
            for t in fixture_json(name)["targets"])
        assert forest.node_count() == source_count, name

    rng = random.Random(1234)
    seeds = [fixture_bytes(n) for n in FIXTURE_NAMES]
    started = time.monotonic()
    for case in range(1000):
        data = bytearray(rng.choice(seeds))
        mode = case % 4
        if mode == 0:
            data = data[: rng.randrange(len(data) + 1)]       # truncation
        elif mode == 1:
            for _ in range(rng.randint(1, 20)):               # bit flips
                if data:
                    data[rng.randrange(len(data))] ^= 1 << rng.randrange(8)
        elif mode == 2:
            data = bytearray(rng.randbytes(rng.randrange(600)))
        else:                                                 # bad JSON body
            buf = BytesIO()
            with zipfile.ZipFile(buf, "w") as archive:
                archive.writestr("project.json",
                                 rng.randbytes(rng.randrange(200)))
            data = bytearray(buf.getvalue())
        try:
            build_block_tree(load_project(bytes(data)))
        except BlockTutorError:
            pass  # typed failure is the contract; anything else crashes
    assert time.monotonic() - started < 10.0


@criterion("ct-scoring-oracle")
def test_ct_scores_match_oracle_and_monotonicity():
    assert len(HAND_SCORES) >= 10
    for name, levels in HAND_SCORES.items():
        report = score_ct(load_forest(name))
        assert report.dimension_scores == dict(zip(ORDER, levels)), name
        assert report.dimension_scores == brute_force_ct(fixture_json(name))
        assert all(0 <= s <= 3 for s in report.dimension_scores.values())
        assert 0 <= report.total <= 21

    rng = random.Random(777)
    doc = fixture_json("say_hello")
    previous = brute_force_ct(doc)
    for step in range(200):
        append_random_block(doc, rng, step)
        forest = build_block_tree(load_project(json.dumps(doc)))
        scores = score_ct(forest).dimension_scores
        assert scores == brute_force_ct(doc), f"step {step}"
        for dim, value in previous.items():
            assert scores[dim] >= value, f"step {step}: {dim} regressed"
        previous = scores


@criterion("category-partition")
def test_category_partition():
    for name in FIXTURE_NAMES:
        if name == "empty_stage":
            continue
        stats = block_category_stats(load_forest(name))
        assert sum(stats.counts.values()) == stats.total_blocks, name
        assert abs(sum(stats.fractions.values()) - 1.0) < 1e-9, name
    # The published corpus distribution (conditions 21%, loops 30%,
    # variables 24%, booleans 7%) describes a 5,000-project crawl that is
    # not redistributable; it is documented in docs/rubric.md as a
    # reference value and deliberately not asserted here.


@criterion("knowledge-base")
def test_knowledge_base_boundaries_and_oracle():
    def cand(words, i=0):
        return Candidate(sentence=" ".join(["word"] * words) + f" v{i}",
                         context="", tags=frozenset({"concept"}))

    # Length boundaries (bounds are inclusive at 5 and 400 words).
    for words, kept in ((4, False), (5, True), (400, True), (401, False)):
        sentence = " ".join(["word"] * words)
        out = filter_length([Candidate(sentence=sentence, context="",
                                       tags=frozenset({"concept"}))])
        assert bool(out) is kept, f"{words}-word sentence"

    # Identical duplicates collapse at the default 0.9 threshold.
    twin = Candidate(sentence="use a loop to repeat the move block",
                     context="", tags=frozenset({"concept"}))
    assert len(dedup([twin, twin]).entries) == 1

    # Full-sort oracle on a 1,000-entry random base; k defaults to 3.
    rng = random.Random(42)
    vocab = [f"term{i}" for i in range(800)]
    candidates = [
        Candidate(sentence=" ".join(rng.sample(vocab, 10)) + f" uid{i}",
                  context="", tags=frozenset({"concept"}))
        for i in range(1000)
    ]
    kb = dedup(candidates, threshold=0.999)
    assert len(kb.entries) == 1000
    for query in ("term1 term2 term3", "term500 uid10", "term799",
                  "nothing matches this"):
        got = retrieve(kb, query)
        assert len(got) == 3
        expected = retrieval_oracle(kb, query, k=3)
        assert [e.id for e, _ in got] == [i for i, _ in expected], query

    # Two builds from identical inputs are byte-identical.
    records = [
        CorpusRecord(id="p1", kind="post",
                     text="How do I make the score variable go up when the "
                          "cat touches the ball?",
                     project_id="x", author_hash="a"),
        CorpusRecord(id="r1", kind="reply",
                     text="Use a change variable block inside a loop with an "
                          "if condition that checks touching.",
                     project_id="x", author_hash="b"),
    ]
    build = lambda: save_kb(dedup(filter_length(extract_knowledge(records))))
    assert build() == build()


@criterion("control-dependency-closure")
def test_closure_matches_oracle_everywhere():
    # The nested benchmark: hat -> forever -> if -> change-score is a
    # four-block closure.
    forest = load_forest("soccer_min")
    highlight = control_dependency_closure(forest, "b5")
    assert highlight.generated_block == ["b1", "b2", "b3", "b5"]
    assert len(highlight.edges) == 3

    for name in FIXTURE_NAMES:
        if name == "empty_stage":
            continue
        forest = load_forest(name)
        doc = fixture_json(name)
        for sprite in forest.sprites:
            for block_id in sorted(sprite.nodes):
                got = control_dependency_closure(forest, block_id)
                ids, edges = closure_oracle(doc, block_id)
                assert got.generated_block == ids, (name, block_id)
                assert got.edges == edges, (name, block_id)


@criterion("state-machine")
def test_state_machine_conformance():
    engine = ScaffoldEngine()

    def run(script):
        session = start_session(fixture_bytes("soccer_min"))
        trace = []
        for line in script:
            _, r = engine.handle_turn(session, line)
            trace.append((tuple(r.states_visited), tuple(r.messages)))
        return trace, session.state

    # Full loop: question -> visual -> got_it -> thinking -> vague answer
    # -> textual -> clear answer -> Resolved.
    script = ["why does the score change when they touch?", "got_it",
              "not sure really",
              "the condition checks touching so the variable changes"]
    trace, final = run(script)
    assert [t[0] for t in trace] == [
        ("VisualScaffold",),
        ("ThinkingQuestion", "AwaitResponse"),
        ("TextualScaffold", "ThinkingQuestion", "AwaitResponse"),
        ("Resolved",),
    ]
    assert final == "Resolved"
    assert run(script) == (trace, final)  # byte-exact reproducibility

    # The dont_know branch skips the thinking question and goes textual.
    trace, final = run(["why does the score change?", "dont_know", "got_it"])
    assert [t[0] for t in trace] == [
        ("VisualScaffold",),
        ("TextualScaffold", "ThinkingQuestion", "AwaitResponse"),
        ("Resolved",),
    ]

    # 10,000 random-input sequences: no undefined states, and never more
    # than max_loops textual scaffolds before resolution.
    base = start_session(fixture_bytes("soccer_min"))
    rng = random.Random(8)
    vocab = ["why", "what about the loop?", "hmm", "idk",
             "the condition guards the variable change in the loop",
             "score goes up maybe", "got_it", "dont_know"]
    for _seq in range(10_000):
        session = DialogueSession(
            session_id="fuzz", project_ref="", forest=base.forest,
            learner_graph=base.learner_graph,
            reference_graph=base.reference_graph, kb=base.kb)
        textual = 0
        for _turn in range(rng.randint(1, 8)):
            try:
                _, r = engine.handle_turn(session, rng.choice(vocab))
            except SessionResolved:
                break
            assert session.state in STATES
            assert all(s in STATES for s in r.states_visited)
            textual += r.states_visited.count("TextualScaffold")
        assert textual <= 3


@criterion("graph-rules")
def test_graph_rules():
    # Character -> Condition -> Character triggers CCBetweenCharacters.
    g = VisualGraph().with_canvas("c1")
    for node_id, kind in (("ch1", "Character"), ("ch2", "Character"),
                          ("co1", "Condition")):
        g = g.with_node(GraphNode(id=node_id, kind=kind, label=node_id,
                                  canvas_id="c1"))
    doc = json.loads(serialize_graph(g))
    doc["edges"] = [
        {"id": "x1", "from": "ch1", "to": "co1", "relation": "guards"},
        {"id": "x2", "from": "co1", "to": "ch2", "relation": "guards"},
    ]
    bad = deserialize_graph(json.dumps(doc))
    assert any(v.kind == "CCBetweenCharacters" for v in validate_graph(bad))

    # Adjacency fuzz: 10,000 random edge attempts admit only legal pairs.
    rng = random.Random(5150)
    base = VisualGraph().with_canvas("c1")
    for i, kind in enumerate(NODE_KINDS):
        base = base.with_node(GraphNode(id=f"n{i}", kind=kind, label=kind,
                                        canvas_id="c1"))
    ids = sorted(base.nodes)
    admitted = rejected = 0
    for trial in range(10_000):
        a, b = rng.choice(ids), rng.choice(ids)
        relation = rng.choice(RELATIONS)
        legal = (a != b and relation in
                 allowed_relations(base.nodes[a].kind, base.nodes[b].kind))
        try:
            base.with_edge(GraphEdge(f"t{trial}", a, b, relation))
            assert legal, (a, b, relation)
            admitted += 1
        except (KindViolation, DuplicateEdge, UnknownId):
            assert not legal, (a, b, relation)
            rejected += 1
    assert admitted and rejected

    # graph_diff returns exact set-difference counts.
    original = random_graph(random.Random(1))
    extended = original
    canvas = extended.canvases[0]
    extended = extended.with_node(GraphNode(
        id="extra1", kind="Variable", label="score", canvas_id=canvas,
        origin="remix-suggested"))
    extended = extended.with_node(GraphNode(
        id="extra2", kind="Behavior", label="kick", canvas_id=canvas))
    metrics = graph_diff(original, extended)
    assert metrics.extended_nodes == 2
    assert metrics.suggestion_adoptions == 1
    assert metrics.extended_edges == 0

    # 500 random serialization round-trips are identities.
    rng = random.Random(90210)
    for _ in range(500):
        g = random_graph(rng)
        doc = serialize_graph(g)
        assert serialize_graph(deserialize_graph(doc)) == doc


@criterion("remix-contract")
def test_remix_contract():
    from blocktutor.graph import extract_reference_graph

    graph = extract_reference_graph(load_forest("soccer_min"))
    request = RemixRequest(utterance="add a goalkeeper that blocks shots",
                           target_canvas=graph.canvases[0])
    negatives = load_negative_prompts()
    proposals = derive_image_prompts(request, graph)
    assert len(proposals) == 2
    assert proposals[0].image_prompt != proposals[1].image_prompt
    for proposal in proposals:
        assert proposal.negative_prompt
        for term in negatives:
            assert term in proposal.negative_prompt
        assert not moderate(proposal.image_prompt).blocked

    # suggest_edges stays adjacency-sound under fuzzed backend output.
    rng = random.Random(6502)
    ids = sorted(graph.nodes) + ["ghost", ""]
    relations = list(RELATIONS) + ["explodes", ""]

    class FuzzBackend:
        def generate(self, role, context):
            return "\n".join(
                f"{rng.choice(ids)} {rng.choice(relations)} {rng.choice(ids)}"
                for _ in range(rng.randint(0, 10)))

    backend = FuzzBackend()
    for _trial in range(300):
        node = graph.nodes[rng.choice(sorted(graph.nodes))]
        for edge in suggest_edges(graph, node, backend=backend):
            legal = allowed_relations(graph.nodes[edge.from_id].kind,
                                      graph.nodes[edge.to_id].kind)
            assert edge.relation in legal


@criterion("offline-end-to-end")
def test_offline_chat_end_to_end(tmp_path):
    from click.testing import CliRunner

    from blocktutor.app.cli import main as cli_main

    script = tmp_path / "script.txt"
    script.write_text("\n".join([
        "ask: why does the score never change when they touch?",
        "button: dont_know",
        "say: the if condition checks touching so the variable changes",
        "remix: add a goalkeeper sprite",
    ]), encoding="utf-8")
    args = ["chat", "--project", str(fixture_path("soccer_min")),
            "--script", str(script),
            "--asset-dir", str(tmp_path / "assets")]
    started = time.monotonic()
    first = CliRunner().invoke(cli_main, args)
    assert first.exit_code == 0, first.output
    assert time.monotonic() - started < 60.0
    assert "# final state: Resolved" in first.output
    assert "[remix] proposal 1" in first.output
    assert "[remix] proposal 2" in first.output
    second = CliRunner().invoke(cli_main, args)
    assert second.output == first.output
