from .canonical import forest_to_document
from .loader import MalformedArchive, MalformedProject, SchemaViolation, load_project
from .model import (BlockForest, BlockNode, HAT_OPCODES, InputRef, ProjectModel,
                    SpriteScripts, SpriteTarget)
from .tree import (CyclicStack, DanglingReference, Violation, build_block_tree,
                   validate_block_tree)

__all__ = [
    "BlockForest", "BlockNode", "CyclicStack", "DanglingReference",
    "HAT_OPCODES", "InputRef", "MalformedArchive", "MalformedProject",
    "ProjectModel", "SchemaViolation", "SpriteScripts", "SpriteTarget",
    "Violation", "build_block_tree", "forest_to_document", "load_project",
    "validate_block_tree",
]
