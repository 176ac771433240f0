"""Turn a remix request into exactly two candidate node proposals."""

from dataclasses import dataclass
from importlib import resources

from ..errors import BlockTutorError
from ..scaffold.backends import StubTextBackend, load_prompt
from ..scaffold.moderation import ModerationBlocked, default_moderator


@dataclass(frozen=True)
class RemixRequest:
    utterance: str
    target_canvas: str
    session_id: str = ""


@dataclass
class NodeProposal:
    label: str
    description: str
    image_prompt: str
    negative_prompt: str
    image_ref: str | None = None
    image_missing: bool = False


def load_negative_prompts(path=None) -> list:
    source = (resources.files("blocktutor.data") / "negative_prompts.txt"
              if path is None else path)
    return [line.strip()
            for line in source.read_text(encoding="utf-8").splitlines()
            if line.strip() and not line.startswith("#")]


def _scene_description(graph, target_canvas):
    characters = sorted(node.label for node in graph.nodes.values()
                        if node.kind == "Character")
    canvas_labels = sorted(node.label for node in graph.nodes.values()
                           if node.canvas_id == target_canvas)
    parts = []
    if characters:
        parts.append("characters: " + ", ".join(characters))
    if canvas_labels:
        parts.append("scene: " + ", ".join(canvas_labels[:6]))
    return "; ".join(parts) or "a fresh project"


def derive_image_prompts(request, graph, backend=None, moderator=None) -> list:
    """Exactly two distinct proposals, each grounded in project context and
    carrying the safety negative prompts.  The learner utterance is
    moderated before any backend call."""
    backend = backend or StubTextBackend()
    moderator = moderator or default_moderator()
    verdict = moderator.moderate(request.utterance)
    if verdict.blocked:
        raise ModerationBlocked(
            f"remix request blocked ({verdict.category})", verdict.category)

    scene = _scene_description(graph, request.target_canvas)
    negative = ", ".join(load_negative_prompts())
    preamble = load_prompt("image_prompt_preamble")
    proposals = []
    for variant in ("A", "B"):
        prompt = backend.generate("image_prompt", {
            "utterance": request.utterance,
            "scene": scene,
            "variant": variant,
        })
        if preamble not in prompt:
            prompt = f"{preamble} {prompt}"
        moderator.check(prompt)
        label = f"{request.utterance.strip().rstrip('.!?')} ({variant})"
        proposals.append(NodeProposal(
            label=label,
            description=prompt.split(". ", 1)[-1][:280],
            image_prompt=prompt,
            negative_prompt=negative,
        ))
    if proposals[0].image_prompt == proposals[1].image_prompt:
        raise BlockTutorError("backend produced identical prompt variants")
    return proposals
