"""Image backends and the content-addressed asset store.

Image generation is strictly optional: the stub backend emits a
deterministic placeholder raster labeled with the prompt hash, and a
backend failure degrades gracefully (proposal returned imageless).
"""

import hashlib
import os
from dataclasses import replace
from pathlib import Path

from ..errors import BlockTutorError


class ImageBackendUnavailable(BlockTutorError):
    code = "image_backend_unavailable"


def prompt_digest(proposal) -> str:
    canonical = f"{proposal.image_prompt}\x00{proposal.negative_prompt}"
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


class AssetStore:
    """Content-addressed PNG store; identical prompts map to one file and
    concurrent writers of identical content are idempotent."""

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path_for(self, digest) -> Path:
        return self.root / f"{digest}.png"

    def put(self, digest, data) -> str:
        path = self.path_for(digest)
        if not path.exists():
            tmp = path.with_suffix(f".tmp-{os.getpid()}")
            tmp.write_bytes(data)
            os.replace(tmp, path)
        return str(path)


class StubImageBackend:
    """Renders a deterministic placeholder tile labeled with the prompt
    hash (solid color derived from the hash, hash text burned in)."""

    size = (256, 256)

    def render(self, proposal) -> bytes:
        from PIL import Image, ImageDraw

        digest = prompt_digest(proposal)
        color = tuple(int(digest[i:i + 2], 16) for i in (0, 2, 4))
        image = Image.new("RGB", self.size, color)
        draw = ImageDraw.Draw(image)
        draw.rectangle([8, 8, self.size[0] - 8, self.size[1] - 8],
                       outline=(255, 255, 255))
        draw.text((16, self.size[1] // 2), digest, fill=(255, 255, 255))
        import io
        buffer = io.BytesIO()
        image.save(buffer, format="PNG")
        return buffer.getvalue()


def render_node_image(proposal, image_backend=None, store=None):
    """Persist the proposal's image under a content-addressed name.  When
    the backend is down, the proposal comes back imageless and flagged."""
    backend = image_backend or StubImageBackend()
    store = store or AssetStore(Path(os.environ.get(
        "BLOCKTUTOR_ASSET_DIR", ".blocktutor-assets")))
    digest = prompt_digest(proposal)
    try:
        data = backend.render(proposal)
    except ImageBackendUnavailable:
        return replace(proposal, image_ref=None, image_missing=True)
    path = store.put(digest, data)
    return replace(proposal, image_ref=path, image_missing=False)
