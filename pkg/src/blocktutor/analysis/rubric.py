"""Rubric table loading and predicate evaluation.

The rubric lives in a data file (one predicate row per line) so it can be
audited and patched without touching the traversal code.  Three predicate
forms exist:

    opcode:<op1,op2,...>        any listed opcode present
    sequence                    any block with a non-null next link
    scripts-and-sprites:<s,p>   at least s scripts and p non-stage sprites
    hat-count:<n>:<op1,...>     at least n script roots with a listed opcode
"""

from dataclasses import dataclass
from importlib import resources

DIMENSIONS = ("abstraction", "parallelism", "logic", "synchronization",
              "flow_control", "interactivity", "data_representation")

EVIDENCE_CAP = 20


@dataclass(frozen=True)
class RubricRule:
    dimension: str
    level: int
    predicate: str
    args: tuple


def default_rubric_path():
    return resources.files("blocktutor.data") / "rubric.txt"


def load_rubric(path=None) -> list:
    source = default_rubric_path() if path is None else path
    rules = []
    for line in source.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        dimension, level, spec = line.split("\t")
        if dimension not in DIMENSIONS:
            raise ValueError(f"unknown rubric dimension: {dimension}")
        rules.append(RubricRule(dimension, int(level), *_parse_predicate(spec)))
    return rules


def _parse_predicate(spec):
    if spec == "sequence":
        return "sequence", ()
    name, _, rest = spec.partition(":")
    if name == "opcode":
        return "opcode", (frozenset(rest.split(",")),)
    if name == "scripts-and-sprites":
        scripts, sprites = rest.split(",")
        return "scripts-and-sprites", (int(scripts), int(sprites))
    if name == "hat-count":
        count, _, ops = rest.partition(":")
        return "hat-count", (int(count), frozenset(ops.split(",")))
    raise ValueError(f"unknown rubric predicate: {spec}")


@dataclass
class ForestFacts:
    """The flattened view of a forest that rubric predicates consume.

    ``opcode_blocks`` maps opcode -> ordered (block-id, opcode) pairs;
    ``sequence_blocks`` lists blocks with a next link; ``script_roots``
    holds (root-id, opcode) pairs; ``sprite_count`` counts non-stage
    sprites that own at least one block.
    """

    opcode_blocks: dict
    sequence_blocks: list
    script_roots: list
    sprite_count: int


def evaluate_rule(rule, facts):
    """Return the evidence list if the rule's predicate holds, else None."""
    if rule.predicate == "opcode":
        (opcodes,) = rule.args
        evidence = []
        for op in sorted(opcodes):
            evidence.extend(facts.opcode_blocks.get(op, ()))
        return evidence[:EVIDENCE_CAP] if evidence else None
    if rule.predicate == "sequence":
        return facts.sequence_blocks[:EVIDENCE_CAP] or None
    if rule.predicate == "scripts-and-sprites":
        scripts, sprites = rule.args
        if len(facts.script_roots) >= scripts and facts.sprite_count >= sprites:
            return facts.script_roots[:EVIDENCE_CAP]
        return None
    if rule.predicate == "hat-count":
        count, opcodes = rule.args
        matching = [r for r in facts.script_roots if r[1] in opcodes]
        return matching[:EVIDENCE_CAP] if len(matching) >= count else None
    raise ValueError(f"unknown predicate: {rule.predicate}")
