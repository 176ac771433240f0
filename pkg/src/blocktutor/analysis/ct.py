"""Computational-thinking scoring over a block forest."""

from dataclasses import dataclass, field

from .rubric import DIMENSIONS, ForestFacts, evaluate_rule, load_rubric


@dataclass
class CTReport:
    dimension_scores: dict                 # dimension -> 0..3
    evidence: dict = field(default_factory=dict)  # dimension -> [(id, opcode)]

    @property
    def total(self):
        return sum(self.dimension_scores.values())


def collect_facts(forest) -> ForestFacts:
    """Gather rubric facts by depth-first traversal of every script."""
    opcode_blocks = {}
    sequence_blocks = []
    script_roots = []
    sprites_with_blocks = 0

    for sprite in forest.sprites:
        if sprite.nodes and not sprite.is_stage:
            sprites_with_blocks += 1
        for root in sprite.roots:
            script_roots.append((root, sprite.nodes[root].opcode))
            stack = [root]
            seen = set()
            while stack:
                block_id = stack.pop()
                if block_id in seen or block_id not in sprite.nodes:
                    continue
                seen.add(block_id)
                node = sprite.nodes[block_id]
                opcode_blocks.setdefault(node.opcode, []).append(
                    (block_id, node.opcode))
                if node.next:
                    sequence_blocks.append((block_id, node.opcode))
                # Visit children in reverse so DFS order follows the script.
                children = ([node.next] if node.next else []) + \
                    list(node.substacks) + node.input_block_ids()
                stack.extend(reversed(children))
    for blocks in opcode_blocks.values():
        blocks.sort()
    sequence_blocks.sort()
    script_roots.sort()
    return ForestFacts(opcode_blocks=opcode_blocks,
                       sequence_blocks=sequence_blocks,
                       script_roots=script_roots,
                       sprite_count=sprites_with_blocks)


def score_ct(forest, rubric=None) -> CTReport:
    """Score all seven dimensions; the awarded level is the highest level
    whose rubric predicate holds, with the matching blocks as evidence."""
    rules = load_rubric() if rubric is None else rubric
    facts = collect_facts(forest)
    scores = {dim: 0 for dim in DIMENSIONS}
    evidence = {}
    for rule in sorted(rules, key=lambda r: (r.dimension, r.level)):
        hit = evaluate_rule(rule, facts)
        if hit is not None and rule.level > scores[rule.dimension]:
            scores[rule.dimension] = rule.level
            evidence[rule.dimension] = [
                (block_id, opcode) for block_id, opcode in hit]
    return CTReport(dimension_scores=scores, evidence=evidence)


def report_to_dict(report) -> dict:
    return {
        "dimensions": dict(sorted(report.dimension_scores.items())),
        "total": report.total,
        "evidence": {dim: [list(e) for e in ev]
                     for dim, ev in sorted(report.evidence.items())},
    }
