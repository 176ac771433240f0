"""Generation backends: a deterministic template stub for tests/offline
use, and a config-gated external chat-completion client.

The contract is a single ``generate(role, context) -> text`` call; ``role``
names which template/behavior is wanted ("visual_summary",
"thinking_question", "textual_hint", "image_prompt", "judge",
"edge_suggestion"), ``context`` is a dict of template variables.
"""

import os
from importlib import resources

from ..errors import BlockTutorError


class BackendUnavailable(BlockTutorError):
    code = "backend_unavailable"


def load_prompt(name) -> str:
    text = (resources.files("blocktutor.data") / "prompts" /
            f"{name}.txt").read_text(encoding="utf-8")
    # Strip the leading comment header; keep the template body.
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return "\n".join(lines).strip()


class StubTextBackend:
    """Deterministic templated generation; no network, byte-reproducible."""

    def generate(self, role, context) -> str:
        if role == "visual_summary":
            return (f"Here is how it works: the blocks "
                    f"{context.get('block_list', '')} team up to handle "
                    f"\"{context.get('question', '')}\".")
        if role == "target_block":
            # Pick the block the question is about; the stub chooses the
            # deepest block of the first matching script.
            return context.get("default_target", "")
        if role == "thinking_question":
            focus = context.get("focus_detail", "this block")
            return f"Is the {focus} necessary here? What would change without it?"
        if role == "textual_hint":
            knowledge = context.get("knowledge", "")
            hint = (f"Let's look closer. These blocks run in order: "
                    f"{context.get('block_list', '')}. "
                    f"Each one depends on the block above it.")
            if knowledge:
                hint += f"\nCommunity tips:\n{knowledge}"
            return hint
        if role == "image_prompt":
            return (f"{load_prompt('image_prompt_preamble')} "
                    f"Variant {context.get('variant', 'A')}: "
                    f"{context.get('utterance', '')} in the world of "
                    f"{context.get('scene', 'the project')}.")
        if role == "edge_suggestion":
            return context.get("default_edges", "")
        raise BackendUnavailable(f"stub backend has no role {role!r}")


class ExternalChatBackend:
    """Chat-completion client configured via environment variables.

    BLOCKTUTOR_LLM_ENDPOINT, BLOCKTUTOR_LLM_KEY, BLOCKTUTOR_LLM_MODEL.
    Never used in tests; raises BackendUnavailable when unconfigured.
    """

    def __init__(self, endpoint=None, api_key=None, model=None, timeout=30.0):
        self.endpoint = endpoint or os.environ.get("BLOCKTUTOR_LLM_ENDPOINT")
        self.api_key = api_key or os.environ.get("BLOCKTUTOR_LLM_KEY")
        self.model = model or os.environ.get("BLOCKTUTOR_LLM_MODEL")
        self.timeout = timeout

    def generate(self, role, context) -> str:
        if not (self.endpoint and self.api_key and self.model):
            raise BackendUnavailable(
                "external backend not configured "
                "(set BLOCKTUTOR_LLM_ENDPOINT/KEY/MODEL)")
        import httpx

        persona = load_prompt("educator_persona")
        try:
            template = load_prompt(role)
            prompt = template.format(**context)
        except (FileNotFoundError, KeyError):
            prompt = "\n".join(f"{k}: {v}" for k, v in sorted(context.items()))
        try:
            response = httpx.post(
                self.endpoint,
                headers={"Authorization": f"Bearer {self.api_key}"},
                json={
                    "model": self.model,
                    "messages": [
                        {"role": "system", "content": persona},
                        {"role": "user", "content": prompt},
                    ],
                },
                timeout=self.timeout,
            )
            response.raise_for_status()
            return response.json()["choices"][0]["message"]["content"]
        except Exception as exc:
            raise BackendUnavailable(f"external backend call failed: {exc}") from exc
