"""Canonical text serialization of a block forest (golden-file format)."""

import json

FOREST_DOC_VERSION = 1


def _input_ref_doc(ref):
    doc = {"kind": ref.kind}
    if ref.value is not None:
        doc["value"] = ref.value
    if ref.ref_id is not None:
        doc["ref"] = ref.ref_id
    return doc


def forest_to_document(forest) -> str:
    """Serialize a forest with stable key ordering; see docs/formats.md."""
    doc = {
        "version": FOREST_DOC_VERSION,
        "sprites": [
            {
                "name": sprite.name,
                "roots": list(sprite.roots),
                "blocks": {
                    block_id: {
                        "opcode": node.opcode,
                        "inputs": [[slot, _input_ref_doc(ref)]
                                   for slot, ref in node.inputs],
                        "fields": [[name, value] for name, value in node.fields],
                        "parent": node.parent,
                        "next": node.next,
                        "substacks": list(node.substacks),
                    }
                    for block_id, node in sorted(sprite.nodes.items())
                },
            }
            for sprite in forest.sprites
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
