#!/usr/bin/env python3
"""Regenerate the bundled .sb3 test fixtures (deterministic output).

Usage: python scripts/make_fixtures.py [dest-dir]
"""

import json
import sys
import zipfile
from pathlib import Path

DEST = Path(sys.argv[1] if len(sys.argv) > 1 else
            Path(__file__).resolve().parent.parent / "tests" / "fixtures")

ZIP_DATE = (2020, 1, 1, 0, 0, 0)


def block(opcode, *, parent=None, next=None, top=False, inputs=None,
          fields=None):
    return {
        "opcode": opcode,
        "parent": parent,
        "next": next,
        "topLevel": top,
        "inputs": inputs or {},
        "fields": fields or {},
        "shadow": False,
    }


def stage():
    return {
        "isStage": True,
        "name": "Stage",
        "blocks": {},
        "variables": {},
        "lists": {},
        "costumes": [{"assetId": "bd000001", "name": "backdrop1"}],
        "sounds": [],
    }


def sprite(name, blocks, variables=None, lists=None):
    return {
        "isStage": False,
        "name": name,
        "blocks": blocks,
        "variables": variables or {},
        "lists": lists or {},
        "costumes": [{"assetId": f"sp{name.lower()[:6]}", "name": "costume1"}],
        "sounds": [],
    }


def project(*targets):
    return {
        "targets": [stage(), *targets],
        "meta": {"semver": "3.0.0", "vm": "1.0.0", "agent": "fixture"},
        "extensions": [],
        "monitors": [],
    }


def num(value):
    return [1, [4, str(value)]]


def text(value):
    return [1, [10, value]]


def blockref(block_id):
    return [2, block_id]


FIXTURES = {}


def fixture(name):
    def register(fn):
        FIXTURES[name] = fn
        return fn
    return register


@fixture("empty_stage")
def _empty():
    return project()


@fixture("soccer_min")
def _soccer():
    cat = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_forever", parent="b1",
                    inputs={"SUBSTACK": blockref("b3")}),
        "b3": block("control_if", parent="b2",
                    inputs={"CONDITION": blockref("b4"),
                            "SUBSTACK": blockref("b5")}),
        "b4": block("sensing_touchingobject", parent="b3",
                    fields={"TOUCHINGOBJECTMENU": ["Ball", None]}),
        "b5": block("data_changevariableby", parent="b3",
                    inputs={"VALUE": num(1)},
                    fields={"VARIABLE": ["score", "var_score"]}),
        "b6": block("event_whenflagclicked", top=True, next="b7"),
        "b7": block("data_setvariableto", parent="b6",
                    inputs={"VALUE": num(0)},
                    fields={"VARIABLE": ["score", "var_score"]}),
    }
    ball = {
        "b8": block("event_whenflagclicked", top=True, next="b9"),
        "b9": block("control_repeat", parent="b8",
                    inputs={"TIMES": [1, [6, "10"]],
                            "SUBSTACK": blockref("b10")}),
        "b10": block("motion_movesteps", parent="b9",
                     inputs={"STEPS": num(10)}),
        "b11": block("event_whenflagclicked", top=True, next="b12"),
        "b12": block("motion_gotoxy", parent="b11", next="b13",
                     inputs={"X": num(0), "Y": num(0)}),
        "b13": block("looks_say", parent="b12", next="b14",
                     inputs={"MESSAGE": text("go!")}),
        "b14": block("motion_movesteps", parent="b13",
                     inputs={"STEPS": num(5)}),
    }
    return project(sprite("Cat", cat, variables={"var_score": ["score", 0]}),
                   sprite("Ball", ball))


@fixture("logic_levels")
def _logic_levels():
    blocks = {"b1": block("control_if", top=True)}
    return project(sprite("Solo", blocks))


@fixture("logic_ifelse")
def _logic_ifelse():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_if_else", parent="b1"),
    }
    return project(sprite("Chooser", blocks))


@fixture("logic_ops")
def _logic_ops():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_if", parent="b1",
                    inputs={"CONDITION": blockref("b3")}),
        "b3": block("operator_and", parent="b2"),
    }
    return project(sprite("Thinker", blocks))


@fixture("broadcast_pair")
def _broadcast():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("event_broadcast", parent="b1",
                    inputs={"BROADCAST_INPUT": [1, [11, "start", "bc1"]]}),
        "b3": block("event_whenbroadcastreceived", top=True, next="b4",
                    fields={"BROADCAST_OPTION": ["start", "bc1"]}),
        "b4": block("motion_movesteps", parent="b3",
                    inputs={"STEPS": num(10)}),
        "b5": block("event_whenbroadcastreceived", top=True, next="b6",
                    fields={"BROADCAST_OPTION": ["start", "bc1"]}),
        "b6": block("looks_show", parent="b5"),
    }
    return project(sprite("Runner", blocks))


@fixture("clones")
def _clones():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_create_clone_of", parent="b1",
                    fields={"CLONE_OPTION": ["_myself_", None]}),
        "b3": block("control_start_as_clone", top=True, next="b4"),
        "b4": block("motion_movesteps", parent="b3",
                    inputs={"STEPS": num(10)}),
    }
    return project(sprite("Cloner", blocks))


@fixture("lists")
def _lists():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("data_addtolist", parent="b1",
                    inputs={"ITEM": text("apple")},
                    fields={"LIST": ["inventory", "list_inv"]}),
    }
    return project(sprite("Keeper", blocks,
                          lists={"list_inv": ["inventory", []]}))


@fixture("keys")
def _keys():
    blocks = {
        "b1": block("event_whenkeypressed", top=True, next="b2",
                    fields={"KEY_OPTION": ["right arrow", None]}),
        "b2": block("motion_changexby", parent="b1", inputs={"DX": num(10)}),
        "b3": block("event_whenkeypressed", top=True, next="b4",
                    fields={"KEY_OPTION": ["left arrow", None]}),
        "b4": block("motion_changexby", parent="b3", inputs={"DX": num(-10)}),
    }
    return project(sprite("Mover", blocks))


@fixture("custom_blocks")
def _custom():
    blocks = {
        "b1": block("procedures_definition", top=True, next="b2"),
        "b2": block("motion_movesteps", parent="b1",
                    inputs={"STEPS": num(10)}),
        "b3": block("event_whenflagclicked", top=True, next="b4"),
        "b4": block("procedures_call", parent="b3"),
    }
    return project(sprite("Maker", blocks))


@fixture("waits")
def _waits():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_wait", parent="b1", next="b3",
                    inputs={"DURATION": [1, [5, "1"]]}),
        "b3": block("looks_hide", parent="b2"),
    }
    return project(sprite("Waiter", blocks))


@fixture("repeat_until")
def _repeat_until():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_repeat_until", parent="b1",
                    inputs={"CONDITION": blockref("b3"),
                            "SUBSTACK": blockref("b4")}),
        "b3": block("operator_lt", parent="b2",
                    inputs={"OPERAND1": num(0), "OPERAND2": num(10)}),
        "b4": block("motion_movesteps", parent="b2",
                    inputs={"STEPS": num(10)}),
    }
    return project(sprite("Looper", blocks))


@fixture("race_min")
def _race():
    car = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("control_forever", parent="b1",
                    inputs={"SUBSTACK": blockref("b3")}),
        "b3": block("control_if_else", parent="b2",
                    inputs={"CONDITION": blockref("b4"),
                            "SUBSTACK": blockref("b5"),
                            "SUBSTACK2": blockref("b6")}),
        "b4": block("sensing_keypressed", parent="b3",
                    fields={"KEY_OPTION": ["up arrow", None]}),
        "b5": block("motion_movesteps", parent="b3",
                    inputs={"STEPS": num(10)}),
        "b6": block("motion_turnright", parent="b3",
                    inputs={"DEGREES": num(15)}),
    }
    flag = {
        "b7": block("event_whenflagclicked", top=True, next="b8"),
        "b8": block("looks_say", parent="b7",
                    inputs={"MESSAGE": text("Ready, set, go!")}),
    }
    return project(sprite("Car", car), sprite("Flag", flag))


@fixture("say_hello")
def _say_hello():
    blocks = {
        "b1": block("event_whenflagclicked", top=True, next="b2"),
        "b2": block("looks_say", parent="b1",
                    inputs={"MESSAGE": text("hello!")}),
    }
    return project(sprite("Greeter", blocks))


def write_fixture(name, doc):
    payload = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    path = DEST / f"{name}.sb3"
    with zipfile.ZipFile(path, "w", zipfile.ZIP_DEFLATED) as archive:
        info = zipfile.ZipInfo("project.json", date_time=ZIP_DATE)
        archive.writestr(info, payload)
    return path


def main():
    DEST.mkdir(parents=True, exist_ok=True)
    for name, builder in sorted(FIXTURES.items()):
        path = write_fixture(name, builder())
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
