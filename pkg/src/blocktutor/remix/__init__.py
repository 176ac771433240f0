from .edges import suggest_edges
from .images import (AssetStore, ImageBackendUnavailable, StubImageBackend,
                     prompt_digest, render_node_image)
from .proposals import (NodeProposal, RemixRequest, derive_image_prompts,
                        load_negative_prompts)

__all__ = [
    "AssetStore", "ImageBackendUnavailable", "NodeProposal", "RemixRequest",
    "StubImageBackend", "derive_image_prompts", "load_negative_prompts",
    "prompt_digest", "render_node_image", "suggest_edges",
]
