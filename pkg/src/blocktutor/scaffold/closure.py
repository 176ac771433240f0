"""Control-dependency closure of a target block.

The highlight always contains the target, every control ancestor up to the
hat block (enclosing if/else and loops, plus the stack above it), and the
reporter blocks plugged directly into the target's inputs.
"""

from dataclasses import dataclass, field

from ..errors import BlockTutorError

CONTAINER_OPCODES = frozenset({
    "control_if", "control_if_else", "control_repeat", "control_forever",
    "control_repeat_until", "control_wait_until",
})


class TargetNotInProject(BlockTutorError):
    code = "target_not_in_project"


@dataclass
class BlockGraphHighlight:
    target_block: str
    generated_block: list                    # ordered block-ids, hat first
    edges: list = field(default_factory=list)  # (from, to, dependency kind)
    summary: str = ""


def control_dependency_closure(forest, target_id) -> BlockGraphHighlight:
    sprite, target = forest.find(target_id)
    if target is None:
        raise TargetNotInProject(f"no block with id {target_id}")
    nodes = sprite.nodes

    # Walk parent links upward; containers (and the hat) are control
    # dependencies, plain stacked predecessors are passage only.
    chain = []
    current = target
    while current.parent is not None:
        parent = nodes.get(current.parent)
        if parent is None:
            break
        if (parent.is_hat or current.id in parent.substacks
                or (parent.opcode in CONTAINER_OPCODES
                    and current.id in parent.input_block_ids())):
            chain.append(parent)
        current = parent

    ordered = [node.id for node in reversed(chain)] + [target_id]
    edges = [(ordered[i], ordered[i + 1], "control")
             for i in range(len(ordered) - 1)]

    for input_id in target.input_block_ids():
        if input_id in nodes:
            ordered.append(input_id)
            edges.append((target_id, input_id, "data"))

    return BlockGraphHighlight(target_block=target_id,
                               generated_block=ordered, edges=edges)
