"""The constructive-loop dialogue engine.

State machine: AwaitQuestion -> VisualScaffold -> (ThinkingQuestion ->
AwaitResponse) -> Resolved, with TextualScaffold re-entry for vague or
negative answers, bounded by max_loops before resolving with a referral.
"""

from dataclasses import dataclass, field

from ..errors import BlockTutorError
from ..graph import VisualGraph, extract_reference_graph
from ..kb import KnowledgeBase, retrieve
from ..sb3 import build_block_tree, load_project
from .backends import StubTextBackend
from .closure import BlockGraphHighlight, TargetNotInProject, \
    control_dependency_closure
from .judge import check_response
from .moderation import REFUSAL_TEXT, default_moderator

STATES = ("AwaitQuestion", "VisualScaffold", "ThinkingQuestion",
          "AwaitResponse", "TextualScaffold", "Resolved")

BUTTONS = ("got_it", "dont_know")

DEFAULT_MAX_LOOPS = 3

# Opcode prefixes/names mapped to the concept keywords a clear answer
# should mention.
_CONCEPT_MAP = (
    (("control_if", "control_if_else"), "condition"),
    (("control_repeat", "control_forever", "control_repeat_until"), "loop"),
    (("data_",), "variable"),
    (("operator_", "sensing_"), "touch"),
    (("event_",), "event"),
)


class SessionResolved(BlockTutorError):
    code = "session_resolved"


@dataclass
class Turn:
    role: str          # "learner" | "system"
    content: str
    state_after: str


@dataclass
class ScaffoldResponse:
    messages: list = field(default_factory=list)
    highlight: BlockGraphHighlight | None = None
    states_visited: list = field(default_factory=list)
    judgment: str | None = None
    moderation_blocked: str | None = None
    referral: bool = False


@dataclass
class DialogueSession:
    session_id: str
    project_ref: str
    forest: object
    learner_graph: VisualGraph
    reference_graph: VisualGraph
    kb: KnowledgeBase
    state: str = "AwaitQuestion"
    transcript: list = field(default_factory=list)
    pending_question: str | None = None
    loop_count: int = 0
    max_loops: int = DEFAULT_MAX_LOOPS
    highlight: BlockGraphHighlight | None = None
    expected_concepts: tuple = ()


def start_session(project_source, learner_graph=None, kb=None,
                  session_id="session", project_ref="",
                  max_loops=DEFAULT_MAX_LOOPS) -> DialogueSession:
    """Parse the project, extract the reference graph, and open a session
    in AwaitQuestion.  Parse errors propagate; no partial session."""
    project = load_project(project_source)
    forest = build_block_tree(project)
    return DialogueSession(
        session_id=session_id,
        project_ref=project_ref,
        forest=forest,
        learner_graph=learner_graph or VisualGraph(),
        reference_graph=extract_reference_graph(forest),
        kb=kb or KnowledgeBase(embedder_id="hashed-tfidf-1024"),
        max_loops=max_loops,
    )


class ScaffoldEngine:
    def __init__(self, backend=None, moderator=None):
        self.backend = backend or StubTextBackend()
        self.moderator = moderator or default_moderator()

    # -- outbound text: everything passes moderation before emission ----

    def _emit(self, response, session, text):
        verdict = self.moderator.moderate(text)
        if verdict.blocked:
            response.moderation_blocked = verdict.category
            text = REFUSAL_TEXT
        response.messages.append(text)
        session.transcript.append(Turn("system", text, session.state))
        return text

    def _enter(self, response, session, state):
        session.state = state
        response.states_visited.append(state)

    # -- main entry -------------------------------------------------------

    def handle_turn(self, session, learner_input):
        """Advance the session one turn.  ``learner_input`` is either a
        free-text utterance or one of the buttons got_it / dont_know."""
        if session.state == "Resolved":
            raise SessionResolved(f"session {session.session_id} is resolved")
        response = ScaffoldResponse()
        is_button = learner_input in BUTTONS
        session.transcript.append(
            Turn("learner", learner_input, session.state))

        if not is_button:
            verdict = self.moderator.moderate(learner_input)
            if verdict.blocked:
                response.moderation_blocked = verdict.category
                self._emit(response, session, REFUSAL_TEXT)
                response.states_visited.append(session.state)
                return session, response

        state = session.state
        if state == "AwaitQuestion":
            if is_button:
                self._emit(response, session,
                           "Ask me anything about the project first!")
                self._enter(response, session, "AwaitQuestion")
            else:
                self._visual_step(response, session, learner_input)
        elif state == "VisualScaffold":
            if learner_input == "got_it":
                self._thinking_step(response, session)
            elif learner_input == "dont_know":
                self._textual_path(response, session)
            else:
                self._visual_step(response, session, learner_input)
        elif state == "AwaitResponse":
            if learner_input == "got_it":
                self._resolve(response, session,
                              "Great, sounds like you've got it!")
            elif learner_input == "dont_know":
                self._textual_path(response, session)
            else:
                judgment = check_response(learner_input,
                                          session.expected_concepts)
                response.judgment = judgment.label
                if judgment.label == "clear":
                    self._resolve(response, session,
                                  "Exactly right. Nice thinking!")
                else:
                    self._textual_path(response, session)
        else:  # pragma: no cover - STATES is exhaustive by construction
            raise SessionResolved(f"undefined state {state!r}")
        return session, response

    # -- steps -------------------------------------------------------------

    def _visual_step(self, response, session, question):
        session.pending_question = question
        highlight = self.visual_scaffold(question, session.forest)
        session.highlight = highlight
        session.expected_concepts = self._concepts_for(session, highlight)
        response.highlight = highlight
        self._emit(response, session, highlight.summary)
        self._enter(response, session, "VisualScaffold")

    def _thinking_step(self, response, session):
        question = self.thinking_question(session)
        self._emit(response, session, question)
        self._enter(response, session, "ThinkingQuestion")
        self._enter(response, session, "AwaitResponse")

    def _textual_path(self, response, session):
        if session.loop_count >= session.max_loops:
            response.referral = True
            self._resolve(
                response, session,
                "Let's take a break here. Try explaining it in your own "
                "words to a friend, or ask a mentor in the community!")
            return
        session.loop_count += 1
        hint = self.textual_scaffold(session)
        self._emit(response, session, hint)
        self._enter(response, session, "TextualScaffold")
        self._thinking_step(response, session)

    def _resolve(self, response, session, message):
        self._emit(response, session, message)
        self._enter(response, session, "Resolved")

    # -- generation operations ----------------------------------------------

    def visual_scaffold(self, question, forest) -> BlockGraphHighlight:
        """Backend proposes the target block; the engine computes the
        control-dependency closure itself (the backend is never trusted
        for closure)."""
        default = self._default_target(question, forest)
        target = None
        for _attempt in range(2):
            proposed = self.backend.generate("target_block", {
                "question": question, "default_target": default,
            })
            if forest.find(proposed)[1] is not None:
                target = proposed
                break
        if target is None:
            raise TargetNotInProject(
                "backend named a nonexistent block twice")
        highlight = control_dependency_closure(forest, target)
        block_list = self._block_list(forest, highlight)
        summary = self.backend.generate("visual_summary", {
            "question": question, "block_list": block_list,
        })
        highlight.summary = summary
        return highlight

    def thinking_question(self, session) -> str:
        knowledge = self._retrieved(session, session.pending_question or "")
        focus_id, focus_opcode = self._focus_block(session)
        return self.backend.generate("thinking_question", {
            "focus_opcode": focus_opcode,
            "focus_detail": f"{focus_opcode} block ({focus_id})",
            "knowledge": knowledge,
            "question": session.pending_question or "",
        })

    def textual_scaffold(self, session) -> str:
        knowledge = self._retrieved(session, session.pending_question or "")
        block_list = ""
        if session.highlight is not None:
            block_list = self._block_list(session.forest, session.highlight)
        return self.backend.generate("textual_hint", {
            "question": session.pending_question or "",
            "block_list": block_list,
            "knowledge": knowledge,
        })

    # -- helpers ------------------------------------------------------------

    def _retrieved(self, session, query):
        if not session.kb.entries:
            return ""
        hits = retrieve(session.kb, query, k=3)
        return "\n".join(f"[community] {entry.text}" for entry, _ in hits)

    def _default_target(self, question, forest):
        """Deterministic target guess: the block whose opcode words overlap
        the question most; ties and misses fall back to the deepest block
        of the first script."""
        words = set(question.lower().split())
        best = None
        best_score = 0
        for sprite in forest.sprites:
            for block_id in sorted(sprite.nodes):
                node = sprite.nodes[block_id]
                opcode_words = set(node.opcode.replace("_", " ").split())
                field_words = {str(v).lower() for _, v in node.fields}
                score = len(words & (opcode_words | field_words))
                if score > best_score:
                    best, best_score = block_id, score
        if best is not None:
            return best
        for sprite in forest.sprites:
            for root in sprite.roots:
                current = sprite.nodes[root]
                while True:
                    if current.substacks:
                        current = sprite.nodes[current.substacks[0]]
                    elif current.next:
                        current = sprite.nodes[current.next]
                    else:
                        return current.id
        return ""

    def _block_list(self, forest, highlight):
        parts = []
        for block_id in highlight.generated_block:
            _, node = forest.find(block_id)
            parts.append(node.opcode if node else block_id)
        return " -> ".join(parts)

    def _focus_block(self, session):
        if session.highlight is None:
            return "", "project"
        forest = session.forest
        for block_id in session.highlight.generated_block:
            _, node = forest.find(block_id)
            if node and node.opcode.startswith(("control_if", "control_repeat",
                                                "control_forever")):
                return block_id, node.opcode
        target = session.highlight.target_block
        _, node = forest.find(target)
        return target, node.opcode if node else "block"

    def _concepts_for(self, session, highlight):
        concepts = []
        for block_id in highlight.generated_block:
            _, node = session.forest.find(block_id)
            if node is None:
                continue
            for prefixes, concept in _CONCEPT_MAP:
                if node.opcode.startswith(prefixes) and concept not in concepts:
                    concepts.append(concept)
        return tuple(concepts)
