"""Derive a reference visual graph from a parsed block forest.

The mapping is deliberately simple and deterministic: one canvas per
hat-rooted script, a Character per sprite, a Behavior per maximal run of
motion/looks/sound blocks, Results for terminal state changes, and CC
nodes for the control/operator/data blocks that drive them.
"""

from ..analysis.categories import BOOLEAN_OPCODES
from .model import GraphEdge, GraphNode, VisualGraph, is_cc

BEHAVIOR_PREFIXES = ("motion_", "looks_", "sound_")
CONDITION_OPCODES = {"control_if", "control_if_else"}
LOOP_OPCODES = {"control_repeat", "control_forever", "control_repeat_until"}
VARIABLE_WRITE_OPCODES = {"data_setvariableto", "data_changevariableby"}
RESULT_OPCODES = {"event_broadcast", "event_broadcastandwait", "control_stop"}


def _is_behavior(opcode):
    return opcode.startswith(BEHAVIOR_PREFIXES)


def humanize(opcode):
    """Turn 'motion_movesteps' into 'move steps' (best effort)."""
    tail = opcode.split("_", 1)[-1]
    words = []
    # Known compounds first; fall back to the raw tail.
    replacements = {
        "movesteps": "move steps", "gotoxy": "go to x y",
        "changevariableby": "change variable by",
        "setvariableto": "set variable to", "ifelse": "if else",
        "repeatuntil": "repeat until", "whenflagclicked": "when flag clicked",
        "touchingobject": "touching object", "switchcostumeto": "switch costume",
    }
    if tail in replacements:
        return replacements[tail]
    for part in tail.split("_"):
        words.append(part)
    return " ".join(words)


class _Extractor:
    def __init__(self, forest):
        self.forest = forest
        self.graph = VisualGraph()
        self.counter = {}
        self.edge_n = 0
        self.var_nodes = {}       # variable name -> node id

    def _next_id(self, prefix):
        n = self.counter.get(prefix, 0) + 1
        self.counter[prefix] = n
        return f"{prefix}:{n:03d}"

    def _add_node(self, kind, label, canvas, prefix, description=None):
        node_id = self._next_id(prefix)
        self.graph = self.graph.with_node(GraphNode(
            id=node_id, kind=kind, label=label, canvas_id=canvas,
            description=description, origin="system"))
        return node_id

    def _add_edge(self, from_id, to_id, relation):
        triple = (from_id, to_id, relation)
        for edge in self.graph.edges.values():
            if (edge.from_id, edge.to_id, edge.relation) == triple:
                return
        self.edge_n += 1
        self.graph = self.graph.with_edge(GraphEdge(
            id=f"e:{self.edge_n:03d}", from_id=from_id, to_id=to_id,
            relation=relation))

    def run(self):
        for sprite in self.forest.sprites:
            hat_roots = [r for r in sprite.roots
                         if sprite.nodes[r].is_hat]
            char_id = None
            for root in hat_roots:
                hat = sprite.nodes[root]
                canvas = self._next_id("canvas")
                self.graph = self.graph.with_canvas(canvas)
                if char_id is None:
                    char_id = self._add_node("Character", sprite.name,
                                             canvas, "char")
                self._walk_stack(sprite, hat.next, canvas, char_id,
                                 guard=None, loop=None, prev_behavior=None)
        self._prune_disconnected_cc()
        return self.graph

    def _walk_stack(self, sprite, block_id, canvas, char_id, guard, loop,
                    prev_behavior):
        """Walk a next-chain; returns the last Behavior node id created."""
        nodes = sprite.nodes
        first_in_stack = True
        while block_id is not None:
            node = nodes[block_id]
            op = node.opcode
            if _is_behavior(op):
                run_label = humanize(op)
                extra = 0
                while node.next and _is_behavior(nodes[node.next].opcode):
                    node = nodes[node.next]
                    extra += 1
                if extra:
                    run_label += f" (+{extra} more)"
                beh_id = self._add_node("Behavior", run_label, canvas, "beh")
                self._add_edge(char_id, beh_id, "performs")
                if guard and first_in_stack:
                    self._add_edge(guard, beh_id, "guards")
                if loop and first_in_stack:
                    self._add_edge(loop, beh_id, "repeats")
                if prev_behavior:
                    self._add_edge(prev_behavior, beh_id, "sequence")
                prev_behavior = beh_id
            elif op in CONDITION_OPCODES:
                cond_id = self._add_node("Condition",
                                         self._condition_label(sprite, node),
                                         canvas, "cond")
                self._attach_boolean(sprite, node, cond_id, canvas)
                for sub in node.substacks:
                    self._walk_stack(sprite, sub, canvas, char_id,
                                     guard=cond_id, loop=None,
                                     prev_behavior=None)
            elif op in LOOP_OPCODES:
                loop_id = self._add_node("Loop", humanize(op), canvas, "loop")
                if op == "control_repeat_until":
                    self._attach_boolean(sprite, node, None, canvas)
                for sub in node.substacks:
                    self._walk_stack(sprite, sub, canvas, char_id,
                                     guard=guard if first_in_stack else None,
                                     loop=loop_id, prev_behavior=None)
            elif op in VARIABLE_WRITE_OPCODES:
                var_name = self._variable_name(node)
                res_id = self._add_node(
                    "Result", f"{var_name} updated", canvas, "res")
                var_id = self._variable_node(var_name, canvas)
                self._add_edge(var_id, res_id, "writes")
                if guard and first_in_stack:
                    self._add_edge(guard, res_id, "guards")
                if prev_behavior:
                    self._add_edge(prev_behavior, res_id, "produces")
            elif op in RESULT_OPCODES:
                label = humanize(op)
                if prev_behavior:
                    res_id = self._add_node("Result", label, canvas, "res")
                    self._add_edge(prev_behavior, res_id, "produces")
                elif guard and first_in_stack:
                    res_id = self._add_node("Result", label, canvas, "res")
                    self._add_edge(guard, res_id, "guards")
            block_id = node.next
            first_in_stack = False
        return prev_behavior

    def _condition_label(self, sprite, node):
        for _, ref in node.inputs:
            if ref.kind == "block":
                return f"if {humanize(sprite.nodes[ref.ref_id].opcode)}"
        return "if"

    def _attach_boolean(self, sprite, node, cond_id, canvas):
        for _, ref in node.inputs:
            if ref.kind == "variable" and cond_id:
                var_id = self._variable_node(ref.value, canvas)
                self._add_edge(var_id, cond_id, "reads")
            if ref.kind != "block":
                continue
            child = sprite.nodes[ref.ref_id]
            if child.opcode in BOOLEAN_OPCODES and cond_id:
                bool_id = self._add_node("Boolean", humanize(child.opcode),
                                         canvas, "bool")
                self._add_edge(bool_id, cond_id, "reads")
                for _, sub_ref in child.inputs:
                    if sub_ref.kind == "variable":
                        var_id = self._variable_node(sub_ref.value, canvas)
                        self._add_edge(var_id, cond_id, "reads")

    def _variable_name(self, node):
        for name, value in node.fields:
            if name == "VARIABLE":
                return str(value)
        return "variable"

    def _variable_node(self, var_name, canvas):
        var_name = str(var_name)
        if var_name not in self.var_nodes:
            self.var_nodes[var_name] = self._add_node(
                "Variable", var_name, canvas, "var")
        return self.var_nodes[var_name]

    def _prune_disconnected_cc(self):
        # A CC node can end up edgeless (e.g. an if with an empty body);
        # drop such nodes so the reference graph validates cleanly.
        while True:
            dangling = [node_id for node_id, node in self.graph.nodes.items()
                        if is_cc(node.kind)
                        and not self.graph.neighbors(node_id)]
            if not dangling:
                return
            for node_id in dangling:
                self.graph = self.graph.without_node(node_id)


def extract_reference_graph(forest) -> VisualGraph:
    return _Extractor(forest).run()
