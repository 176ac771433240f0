"""Load a Scratch 3 archive (or bare project.json text) into a ProjectModel."""

import io
import json
import zipfile

from ..errors import BlockTutorError
from .model import ProjectModel, RawBlock, SpriteTarget


class MalformedArchive(BlockTutorError):
    code = "malformed_archive"


class MalformedProject(BlockTutorError):
    code = "malformed_project"


class SchemaViolation(BlockTutorError):
    code = "schema_violation"


def load_project(source) -> ProjectModel:
    """Parse an .sb3 archive (bytes) or project.json text into a ProjectModel.

    Parsing is total: the result is either a fully validated model or a
    typed error, never a partial model.
    """
    text = _project_text(source)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedProject(f"project.json syntax error: {exc.msg}",
                               offset=exc.pos) from exc
    return _build_model(raw)


def _project_text(source) -> str:
    if isinstance(source, str):
        return source
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
        if data[:2] == b"PK":
            try:
                with zipfile.ZipFile(io.BytesIO(data)) as archive:
                    if "project.json" not in archive.namelist():
                        raise MalformedArchive("archive has no project.json")
                    payload = archive.read("project.json")
            except MalformedArchive:
                raise
            # zipfile surfaces corruption in several shapes: BadZipFile for
            # broken directories, but also ValueError/OSError/EOFError for
            # truncated or bit-flipped members.
            except (zipfile.BadZipFile, ValueError, OSError, EOFError,
                    NotImplementedError) as exc:
                raise MalformedArchive(f"unreadable zip archive: {exc}") from exc
        else:
            payload = data
        try:
            return payload.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedProject("project.json is not valid UTF-8",
                                   offset=exc.start) from exc
    raise MalformedProject(f"unsupported input type: {type(source).__name__}")


def _require(mapping, key, path):
    if not isinstance(mapping, dict) or key not in mapping:
        raise SchemaViolation(f"missing required key: {path}/{key}",
                              key_path=f"{path}/{key}")
    return mapping[key]


def _build_model(raw) -> ProjectModel:
    if isinstance(raw, dict) and "objName" in raw:
        raise SchemaViolation("Scratch 2 projects are not supported",
                              key_path="/objName")
    targets_raw = _require(raw, "targets", "")
    if not isinstance(targets_raw, list):
        raise SchemaViolation("targets must be a list", key_path="/targets")
    meta = raw.get("meta", {})
    version = meta.get("semver", "") if isinstance(meta, dict) else ""

    targets = []
    asset_index = {}
    for i, target_raw in enumerate(targets_raw):
        path = f"/targets/{i}"
        targets.append(_build_target(target_raw, path))
        for kind in ("costumes", "sounds"):
            for asset in target_raw.get(kind, []) or []:
                asset_id = asset.get("assetId")
                if asset_id:
                    asset_index[asset_id] = {
                        "name": asset.get("name", ""),
                        "kind": "image" if kind == "costumes" else "sound",
                    }

    stages = [t for t in targets if t.is_stage]
    if len(stages) != 1:
        raise SchemaViolation(f"expected exactly one stage, found {len(stages)}",
                              key_path="/targets")
    names = [t.name for t in targets]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise SchemaViolation(f"duplicate sprite names: {dupes}",
                              key_path="/targets")
    return ProjectModel(targets=targets, meta=version, asset_index=asset_index)


def _build_target(raw, path) -> SpriteTarget:
    name = _require(raw, "name", path)
    is_stage = bool(raw.get("isStage", False))
    blocks_raw = _require(raw, "blocks", path)
    if not isinstance(blocks_raw, dict):
        raise SchemaViolation("blocks must be a map", key_path=f"{path}/blocks")

    blocks = {}
    for block_id, entry in blocks_raw.items():
        # Top-level bare reporters are stored as arrays; they carry no
        # opcode or links, so they are dropped like the Scratch VM does.
        if not isinstance(entry, dict):
            continue
        opcode = _require(entry, "opcode", f"{path}/blocks/{block_id}")
        blocks[block_id] = RawBlock(
            id=block_id,
            opcode=str(opcode),
            inputs=entry.get("inputs", {}) or {},
            fields=entry.get("fields", {}) or {},
            parent=entry.get("parent"),
            next=entry.get("next"),
            top_level=bool(entry.get("topLevel", False)),
        )

    variables = {}
    for var_id, spec in (raw.get("variables", {}) or {}).items():
        if isinstance(spec, list) and len(spec) >= 2:
            variables[var_id] = (spec[0], spec[1])
    lists = {}
    for list_id, spec in (raw.get("lists", {}) or {}).items():
        if isinstance(spec, list) and len(spec) >= 2:
            lists[list_id] = (spec[0], list(spec[1]))

    for bucket, label in ((variables, "variable"), (lists, "list")):
        seen = [v[0] for v in bucket.values()]
        if len(set(seen)) != len(seen):
            raise SchemaViolation(f"duplicate {label} names in target {name}",
                                  key_path=f"{path}")
    return SpriteTarget(name=name, is_stage=is_stage, blocks=blocks,
                        variables=variables, lists=lists)
