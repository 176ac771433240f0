"""Block-category statistics: conditions, loops, variables, booleans, other."""

from dataclasses import dataclass

from ..errors import BlockTutorError

CONDITION_OPCODES = frozenset({"control_if", "control_if_else"})
LOOP_OPCODES = frozenset({"control_repeat", "control_forever",
                          "control_repeat_until"})
VARIABLE_OPCODES = frozenset({"data_setvariableto", "data_changevariableby",
                              "data_variable"})
BOOLEAN_OPCODES = frozenset({
    "operator_equals", "operator_gt", "operator_lt", "operator_and",
    "operator_or", "operator_not", "operator_contains",
    "sensing_touchingobject", "sensing_touchingcolor",
    "sensing_coloristouchingcolor", "sensing_keypressed", "sensing_mousedown",
    "data_listcontainsitem",
})

CATEGORIES = ("conditions", "loops", "variables", "booleans", "other")


class EmptyProject(BlockTutorError):
    code = "empty_project"


@dataclass
class CategoryStats:
    counts: dict
    fractions: dict
    total_blocks: int

    @staticmethod
    def from_counts(counts) -> "CategoryStats":
        total = sum(counts.values())
        if total == 0:
            raise EmptyProject("category fractions undefined for zero blocks")
        fractions = {k: counts[k] / total for k in CATEGORIES}
        return CategoryStats(counts=dict(counts), fractions=fractions,
                             total_blocks=total)


def categorize(opcode) -> str:
    """Assign an opcode to exactly one of the five categories."""
    if opcode in CONDITION_OPCODES:
        return "conditions"
    if opcode in LOOP_OPCODES:
        return "loops"
    if opcode in VARIABLE_OPCODES:
        return "variables"
    if opcode in BOOLEAN_OPCODES:
        return "booleans"
    return "other"


def block_category_stats(forest) -> CategoryStats:
    counts = {k: 0 for k in CATEGORIES}
    for _sprite, node in forest.iter_nodes():
        counts[categorize(node.opcode)] += 1
    return CategoryStats.from_counts(counts)
