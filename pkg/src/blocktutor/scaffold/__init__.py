from .backends import (BackendUnavailable, ExternalChatBackend,
                       StubTextBackend, load_prompt)
from .closure import (BlockGraphHighlight, TargetNotInProject,
                      control_dependency_closure)
from .engine import (BUTTONS, DEFAULT_MAX_LOOPS, DialogueSession,
                     ScaffoldEngine, ScaffoldResponse, SessionResolved,
                     STATES, Turn, start_session)
from .judge import LABELS, ResponseJudgment, check_response
from .moderation import (ModerationBlocked, ModerationResult, Moderator,
                         REFUSAL_TEXT, default_moderator, load_blocklist,
                         moderate)

__all__ = [
    "BUTTONS", "BackendUnavailable", "BlockGraphHighlight",
    "DEFAULT_MAX_LOOPS", "DialogueSession", "ExternalChatBackend", "LABELS",
    "ModerationBlocked", "ModerationResult", "Moderator", "REFUSAL_TEXT",
    "ResponseJudgment", "STATES", "ScaffoldEngine", "ScaffoldResponse",
    "SessionResolved", "StubTextBackend", "TargetNotInProject", "Turn",
    "check_response", "control_dependency_closure", "default_moderator",
    "load_blocklist", "load_prompt", "moderate", "start_session",
]
