"""Data model for parsed Scratch 3 projects.

Everything here is an immutable-by-convention value object.  The loader
normalizes Scratch's shadow-block input encoding into tagged ``InputRef``
values so downstream code never sees serialization artifacts.
"""

from dataclasses import dataclass, field


# Event-entry opcodes.  Scripts rooted at one of these are "hat" scripts;
# everything else at top level is an orphan stack (kept, but flagged).
HAT_OPCODES = frozenset({
    "event_whenflagclicked",
    "event_whenkeypressed",
    "event_whenthisspriteclicked",
    "event_whenstageclicked",
    "event_whenbackdropswitchesto",
    "event_whengreaterthan",
    "event_whenbroadcastreceived",
    "control_start_as_clone",
    "procedures_definition",
})

# Input-ref kinds produced by normalization.
INPUT_KINDS = ("number", "string", "color", "broadcast", "variable", "list",
               "block", "empty")


@dataclass(frozen=True)
class InputRef:
    """A normalized block input: a literal, a reference, or a plugged block."""

    kind: str                    # one of INPUT_KINDS
    value: object = None         # literal value or referenced name
    ref_id: str | None = None    # block-id / variable-id / broadcast-id

    def __post_init__(self):
        if self.kind not in INPUT_KINDS:
            raise ValueError(f"unknown input kind: {self.kind}")


@dataclass
class BlockNode:
    id: str
    opcode: str
    inputs: list = field(default_factory=list)     # [(slot, InputRef)]
    fields: list = field(default_factory=list)     # [(name, value)]
    parent: str | None = None
    next: str | None = None
    substacks: list = field(default_factory=list)  # first block-id of each stack

    @property
    def is_hat(self):
        return self.opcode in HAT_OPCODES

    def input_block_ids(self):
        """Ids of blocks plugged directly into this block's input slots."""
        return [ref.ref_id for _, ref in self.inputs
                if ref.kind == "block" and ref.ref_id]


@dataclass
class RawBlock:
    """A block as it appears in project.json, before tree linking."""

    id: str
    opcode: str
    inputs: dict
    fields: dict
    parent: str | None
    next: str | None
    top_level: bool


@dataclass
class SpriteTarget:
    name: str
    is_stage: bool
    blocks: dict                 # block-id -> RawBlock
    variables: dict              # var-id -> (name, initial value)
    lists: dict                  # list-id -> (name, initial items)


@dataclass
class ProjectModel:
    targets: list                # [SpriteTarget], exactly one stage
    meta: str                    # format-version string
    asset_index: dict            # asset-id -> {"name": ..., "kind": ...}

    @property
    def stage(self):
        return next(t for t in self.targets if t.is_stage)

    def total_blocks(self):
        return sum(len(t.blocks) for t in self.targets)


@dataclass
class SpriteScripts:
    """One sprite's slice of the block forest."""

    name: str
    roots: list                  # script-root block-ids, deterministic order
    nodes: dict                  # block-id -> BlockNode
    is_stage: bool = False


@dataclass
class BlockForest:
    sprites: list                # [SpriteScripts]

    def node_count(self):
        return sum(len(s.nodes) for s in self.sprites)

    def iter_nodes(self):
        for sprite in self.sprites:
            for block_id in sorted(sprite.nodes):
                yield sprite, sprite.nodes[block_id]

    def find(self, block_id):
        for sprite in self.sprites:
            node = sprite.nodes.get(block_id)
            if node is not None:
                return sprite, node
        return None, None
