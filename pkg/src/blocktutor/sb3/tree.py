"""Link raw blocks into a block forest and validate its structure."""

from dataclasses import dataclass

from ..errors import BlockTutorError
from .model import BlockForest, BlockNode, InputRef, SpriteScripts

# Literal codes used by the Scratch 3 input encoding.
_NUMBER_CODES = {4, 5, 6, 7, 8}


class DanglingReference(BlockTutorError):
    code = "dangling_reference"


class CyclicStack(BlockTutorError):
    code = "cyclic_stack"


@dataclass(frozen=True)
class Violation:
    kind: str
    block_id: str
    message: str


def normalize_input(slot, value):
    """Flatten one raw input entry into (slot, InputRef) or a substack link."""
    if not isinstance(value, list) or len(value) < 2:
        return InputRef("empty")
    primary = value[1]
    if primary is None:
        return InputRef("empty")
    if isinstance(primary, str):
        return InputRef("block", ref_id=primary)
    if isinstance(primary, list) and primary:
        code = primary[0]
        payload = primary[1] if len(primary) > 1 else None
        if code in _NUMBER_CODES:
            try:
                num = float(payload)
                if num.is_integer():
                    num = int(num)
                return InputRef("number", value=num)
            except (TypeError, ValueError):
                return InputRef("number", value=payload)
        if code == 9:
            return InputRef("color", value=payload)
        if code == 10:
            return InputRef("string", value=payload)
        if code == 11:
            return InputRef("broadcast", value=payload,
                            ref_id=primary[2] if len(primary) > 2 else None)
        if code == 12:
            return InputRef("variable", value=payload,
                            ref_id=primary[2] if len(primary) > 2 else None)
        if code == 13:
            return InputRef("list", value=payload,
                            ref_id=primary[2] if len(primary) > 2 else None)
    return InputRef("empty")


def build_block_tree(project) -> BlockForest:
    """Build the parent/next/substack forest for every target of a project.

    Root ordering is deterministic: sprite order in the project, then
    block-id lexicographic within a sprite.
    """
    sprites = []
    for target in project.targets:
        nodes = {}
        for block_id, raw in target.blocks.items():
            inputs = []
            substacks = []
            for slot in raw.inputs:
                ref = normalize_input(slot, raw.inputs[slot])
                if slot.startswith("SUBSTACK"):
                    if ref.kind == "block":
                        substacks.append(ref.ref_id)
                    continue
                inputs.append((slot, ref))
            fields = [(name, spec[0] if isinstance(spec, list) and spec else spec)
                      for name, spec in raw.fields.items()]
            nodes[block_id] = BlockNode(
                id=block_id, opcode=raw.opcode, inputs=inputs, fields=fields,
                parent=raw.parent, next=raw.next, substacks=substacks,
            )

        _check_references(target.name, nodes)
        _check_cycles(target.name, nodes)

        non_roots = set()
        for node in nodes.values():
            if node.next:
                non_roots.add(node.next)
            non_roots.update(node.substacks)
            non_roots.update(node.input_block_ids())
        roots = sorted(b for b in nodes if b not in non_roots)
        sprites.append(SpriteScripts(name=target.name, roots=roots, nodes=nodes,
                                     is_stage=target.is_stage))
    return BlockForest(sprites=sprites)


def _check_references(sprite_name, nodes):
    for node in nodes.values():
        referenced = [node.parent, node.next, *node.substacks,
                      *node.input_block_ids()]
        for ref in referenced:
            if ref is not None and ref not in nodes:
                raise DanglingReference(
                    f"block {node.id} in {sprite_name} references missing id {ref}",
                    block_id=node.id, missing=ref)


def _check_cycles(sprite_name, nodes):
    for start in nodes:
        seen = set()
        current = start
        while current is not None:
            if current in seen:
                raise CyclicStack(
                    f"next-chain cycle at block {current} in {sprite_name}",
                    block_id=current)
            seen.add(current)
            current = nodes[current].next


def validate_block_tree(forest) -> list:
    """Check every forest invariant; returns violations ordered by
    (sprite, block-id).  An empty list means the forest is well formed."""
    violations = []
    for sprite in forest.sprites:
        nodes = sprite.nodes
        for block_id in sorted(nodes):
            node = nodes[block_id]
            if node.parent is not None:
                parent = nodes.get(node.parent)
                if parent is None:
                    violations.append(Violation(
                        "DanglingParent", block_id,
                        f"parent {node.parent} not in sprite {sprite.name}"))
                else:
                    linked = (parent.next == block_id
                              or block_id in parent.substacks
                              or block_id in parent.input_block_ids())
                    if not linked:
                        violations.append(Violation(
                            "UnlinkedParent", block_id,
                            f"parent {node.parent} does not link back"))
                if node.is_hat:
                    violations.append(Violation(
                        "HatWithParent", block_id,
                        f"hat block {node.opcode} has a parent"))
            for sub in node.substacks:
                child = nodes.get(sub)
                if child is not None and child.parent != block_id:
                    violations.append(Violation(
                        "SubstackParentMismatch", sub,
                        f"substack head parent is {child.parent}, "
                        f"expected {block_id}"))

        # Reachability: every non-root node must be reached from exactly
        # one root through next/substack/input links.
        reached = {}
        for root in sprite.roots:
            stack = [root]
            while stack:
                current = stack.pop()
                if current in reached:
                    continue
                reached[current] = root
                node = nodes.get(current)
                if node is None:
                    continue
                if node.next:
                    stack.append(node.next)
                stack.extend(node.substacks)
                stack.extend(node.input_block_ids())
        for block_id in sorted(nodes):
            if block_id not in reached:
                violations.append(Violation(
                    "Unreachable", block_id,
                    f"block not reachable from any script root in {sprite.name}"))
    return violations
