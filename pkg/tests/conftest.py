import json
import sys
import zipfile
from io import BytesIO
from pathlib import Path

import pytest

FIXTURE_DIR = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))

FIXTURE_NAMES = sorted(p.stem for p in FIXTURE_DIR.glob("*.sb3"))


def fixture_path(name):
    return FIXTURE_DIR / f"{name}.sb3"


def fixture_bytes(name):
    return fixture_path(name).read_bytes()


def fixture_json(name):
    """The raw project.json document inside a fixture archive."""
    with zipfile.ZipFile(BytesIO(fixture_bytes(name))) as archive:
        return json.loads(archive.read("project.json"))


def load_forest(name):
    from blocktutor.sb3 import build_block_tree, load_project

    return build_block_tree(load_project(fixture_bytes(name)))


def make_archive(doc):
    """Pack a project document into an in-memory .sb3 archive."""
    buf = BytesIO()
    with zipfile.ZipFile(buf, "w") as archive:
        archive.writestr("project.json", json.dumps(doc))
    return buf.getvalue()


@pytest.fixture
def soccer_forest():
    return load_forest("soccer_min")


@pytest.fixture
def soccer_bytes():
    return fixture_bytes("soccer_min")


def sample_records():
    from blocktutor.kb.records import CorpusRecord

    return [
        CorpusRecord(id="p1", kind="post",
                     text="How do I make the score variable go up when the "
                          "cat touches the ball?",
                     project_id="proj1", author_hash="a"),
        CorpusRecord(id="r1", kind="reply",
                     text="Use a change variable block inside a loop with an "
                          "if condition that checks touching.",
                     project_id="proj1", author_hash="b"),
        CorpusRecord(id="c1", kind="comment",
                     text="You could add a list to keep an inventory of "
                          "items the player collects.",
                     project_id="proj1", author_hash="c"),
    ]
