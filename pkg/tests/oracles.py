"""Independent brute-force oracles used to cross-check derived behavior.

Each oracle recomputes a result from raw inputs with the most obvious
algorithm available, sharing no traversal or scoring code with the
package under test.
"""

MODIFIER_OPCODES = {
    "motion_movesteps", "motion_gotoxy", "motion_goto",
    "motion_glidesecstoxy", "motion_setx", "motion_sety",
    "motion_changexby", "motion_changeyby", "motion_turnright",
    "motion_turnleft", "motion_pointindirection", "motion_pointtowards",
    "looks_changesizeby", "looks_setsizeto", "looks_switchcostumeto",
    "looks_nextcostume", "looks_changeeffectby", "looks_seteffectto",
    "looks_show", "looks_hide", "looks_switchbackdropto",
    "looks_nextbackdrop",
}

LIST_OPCODES = {
    "data_addtolist", "data_deleteoflist", "data_deletealloflist",
    "data_insertatlist", "data_replaceitemoflist", "data_itemoflist",
    "data_itemnumoflist", "data_lengthoflist", "data_listcontainsitem",
    "data_showlist", "data_hidelist",
}

HAT_OPCODES = {
    "event_whenflagclicked", "event_whenkeypressed",
    "event_whenthisspriteclicked", "event_whenbroadcastreceived",
    "event_whenbackdropswitchesto", "event_whengreaterthan",
    "control_start_as_clone", "procedures_definition",
}


def _referenced_ids(blocks):
    """Every block id mentioned as someone's next or input target."""
    referenced = set()
    for entry in blocks.values():
        if not isinstance(entry, dict):
            continue
        if entry.get("next"):
            referenced.add(entry["next"])
        for slot in entry.get("inputs", {}).values():
            for item in slot[1:]:
                if isinstance(item, str):
                    referenced.add(item)
    return referenced


def project_facts(doc):
    """Flat facts straight off a raw project.json document."""
    opcodes = []
    has_sequence = False
    roots = []
    sprites_with_blocks = 0
    for target in doc.get("targets", []):
        blocks = target.get("blocks", {})
        real = {bid: b for bid, b in blocks.items() if isinstance(b, dict)}
        if real and not target.get("isStage"):
            sprites_with_blocks += 1
        referenced = _referenced_ids(real)
        for bid, entry in real.items():
            opcodes.append(entry["opcode"])
            if entry.get("next"):
                has_sequence = True
            if bid not in referenced:
                roots.append(entry["opcode"])
    return opcodes, has_sequence, roots, sprites_with_blocks


def brute_force_ct(doc):
    """Hand-coded rubric applied to a raw project document.

    Returns a dimension -> level dict, recomputed without touching the
    package's rubric file, traversal, or predicate machinery.
    """
    opcodes, has_sequence, roots, sprites = project_facts(doc)
    present = set(opcodes)

    def hats(*ops):
        return sum(1 for op in roots if op in ops)

    scores = {}

    logic = 0
    if "control_if" in present:
        logic = 1
    if "control_if_else" in present:
        logic = 2
    if present & {"operator_and", "operator_or", "operator_not"}:
        logic = 3
    scores["logic"] = logic

    flow = 0
    if has_sequence:
        flow = 1
    if present & {"control_repeat", "control_forever"}:
        flow = 2
    if "control_repeat_until" in present:
        flow = 3
    scores["flow_control"] = flow

    sync = 0
    if "control_wait" in present:
        sync = 1
    if present & {"event_broadcast", "event_whenbroadcastreceived",
                  "control_stop"}:
        sync = 2
    if present & {"control_wait_until", "event_whenbackdropswitchesto",
                  "event_broadcastandwait"}:
        sync = 3
    scores["synchronization"] = sync

    abstraction = 0
    if len(roots) >= 2 and sprites >= 2:
        abstraction = 1
    if "procedures_definition" in present:
        abstraction = 2
    if present & {"control_start_as_clone", "control_create_clone_of",
                  "control_delete_this_clone"}:
        abstraction = 3
    scores["abstraction"] = abstraction

    parallelism = 0
    if hats("event_whenflagclicked") >= 2:
        parallelism = 1
    if hats("event_whenkeypressed", "event_whenthisspriteclicked") >= 2:
        parallelism = 2
    if hats("event_whenbroadcastreceived", "event_whenbackdropswitchesto",
            "control_start_as_clone") >= 2:
        parallelism = 3
    scores["parallelism"] = parallelism

    interactivity = 0
    if "event_whenflagclicked" in present:
        interactivity = 1
    if present & {"event_whenkeypressed", "event_whenthisspriteclicked",
                  "sensing_askandwait", "sensing_answer", "sensing_mousedown",
                  "sensing_keypressed", "sensing_mousex", "sensing_mousey"}:
        interactivity = 2
    if present & {"videoSensing_whenMotionGreaterThan",
                  "videoSensing_videoToggle", "sensing_loudness"}:
        interactivity = 3
    scores["interactivity"] = interactivity

    data = 0
    if present & MODIFIER_OPCODES:
        data = 1
    if present & {"data_setvariableto", "data_changevariableby"}:
        data = 2
    if present & LIST_OPCODES:
        data = 3
    scores["data_representation"] = data

    return scores


CONTAINERS = {"control_if", "control_if_else", "control_repeat",
              "control_forever", "control_repeat_until",
              "control_wait_until"}


def closure_oracle(doc, target_id):
    """Parent-walk closure on the raw document: the target, every block
    that encloses it (substack containers, condition consumers, the hat),
    and the target's direct input blocks.  Returns (ids, edges)."""
    for target in doc.get("targets", []):
        blocks = {bid: b for bid, b in target.get("blocks", {}).items()
                  if isinstance(b, dict)}
        if target_id not in blocks:
            continue

        def input_ids(entry):
            out = []
            for slot_name, slot in entry.get("inputs", {}).items():
                if slot_name.startswith("SUBSTACK"):
                    continue
                for item in slot[1:]:
                    if isinstance(item, str) and item in blocks:
                        out.append(item)
            return out

        def substack_ids(entry):
            out = []
            for slot_name, slot in entry.get("inputs", {}).items():
                if slot_name.startswith("SUBSTACK"):
                    for item in slot[1:]:
                        if isinstance(item, str):
                            out.append(item)
            return out

        chain = []
        current_id = target_id
        while True:
            parent_id = blocks[current_id].get("parent")
            if parent_id is None or parent_id not in blocks:
                break
            parent = blocks[parent_id]
            encloses = (
                parent["opcode"] in HAT_OPCODES
                or current_id in substack_ids(parent)
                or (parent["opcode"] in CONTAINERS
                    and current_id in input_ids(parent)))
            if encloses:
                chain.append(parent_id)
            current_id = parent_id

        ordered = list(reversed(chain)) + [target_id]
        edges = [(ordered[i], ordered[i + 1], "control")
                 for i in range(len(ordered) - 1)]
        for input_id in input_ids(blocks[target_id]):
            ordered.append(input_id)
            edges.append((target_id, input_id, "data"))
        return ordered, edges
    return None, None


def retrieval_oracle(kb, query, k=3):
    """Full sort over every entry with plain-Python dot products."""
    query_vec = kb.query_embedder().embed(query)
    scored = []
    for entry in kb.entries:
        dot = sum(float(a) * float(b)
                  for a, b in zip(entry.embedding, query_vec))
        scored.append((entry.id, dot))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]
