"""Command-line interface: analysis, corpus stats, knowledge-base
lifecycle, graph tools, the HTTP service, and a scripted offline chat."""

import json
import sys
from pathlib import Path

import click

from ..analysis import block_category_stats, corpus_scan, report_to_dict, score_ct
from ..errors import BlockTutorError
from ..graph import (deserialize_graph, extract_reference_graph, graph_diff,
                     serialize_graph)
from ..kb import (DEFAULT_THRESHOLD, dedup, extract_knowledge, filter_length,
                  load_kb, read_records, retrieve, save_kb)
from ..remix import RemixRequest, derive_image_prompts, render_node_image
from ..sb3 import build_block_tree, load_project
from ..scaffold import ScaffoldEngine, start_session


@click.group()
def main():
    """Scratch project analysis and scaffolding tools."""


def _load_forest(path):
    project = load_project(Path(path).read_bytes())
    return build_block_tree(project)


@main.command()
@click.argument("path", type=click.Path(exists=True))
def analyze(path):
    """Emit a computational-thinking report for one project archive."""
    try:
        forest = _load_forest(path)
    except BlockTutorError as exc:
        raise click.ClickException(f"{exc.code}: {exc}")
    report = score_ct(forest)
    click.echo(json.dumps(report_to_dict(report), indent=2, sort_keys=True))


@main.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
def stats(directory):
    """Per-project and aggregate block-category statistics for a corpus."""
    paths = sorted(Path(directory).glob("*.sb3"))
    scan = corpus_scan(paths)
    header = ["project", "conditions", "loops", "variables", "booleans",
              "other", "total"]
    click.echo("\t".join(header))
    for path, _report, project_stats in scan.results:
        row = [Path(path).name] + [
            str(project_stats.counts[k]) for k in header[1:-1]
        ] + [str(project_stats.total_blocks)]
        click.echo("\t".join(row))
    if scan.aggregate is not None:
        agg = scan.aggregate
        row = ["AGGREGATE"] + [str(agg.counts[k]) for k in header[1:-1]] + \
            [str(agg.total_blocks)]
        click.echo("\t".join(row))
    for path, message in scan.skipped:
        click.echo(f"SKIPPED\t{path}\t{message}", err=True)
    if scan.error:
        raise click.ClickException(scan.error)


@main.group()
def kb():
    """Knowledge-base lifecycle."""


@kb.command("build")
@click.option("--in", "records_path", required=True,
              type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--threshold", type=float, default=DEFAULT_THRESHOLD,
              show_default=True)
def kb_build(records_path, out_path, threshold):
    """Build a knowledge base from a line-delimited records file."""
    records = read_records(records_path)
    candidates = filter_length(extract_knowledge(records))
    base = dedup(candidates, threshold=threshold)
    save_kb(base, out_path)
    click.echo(f"built {len(base.entries)} entries from "
               f"{len(records)} records -> {out_path}")


@kb.command("query")
@click.option("--kb", "kb_path", required=True, type=click.Path(exists=True))
@click.option("--k", type=int, default=3, show_default=True)
@click.argument("question")
def kb_query(kb_path, k, question):
    """Retrieve the top-k most relevant knowledge entries."""
    base = load_kb(kb_path)
    for rank, (entry, score) in enumerate(retrieve(base, question, k=k), 1):
        click.echo(f"{rank}\t{score:.4f}\t{entry.text}")


@main.group()
def graph():
    """Visual-graph tools."""


@graph.command("extract")
@click.argument("path", type=click.Path(exists=True))
def graph_extract(path):
    """Extract the reference visual graph from a project archive."""
    try:
        forest = _load_forest(path)
    except BlockTutorError as exc:
        raise click.ClickException(f"{exc.code}: {exc}")
    click.echo(serialize_graph(extract_reference_graph(forest)), nl=False)


@graph.command("diff")
@click.argument("original", type=click.Path(exists=True))
@click.argument("remixed", type=click.Path(exists=True))
def graph_diff_cmd(original, remixed):
    """Remix metrics between two graph documents."""
    try:
        a = deserialize_graph(Path(original).read_text(encoding="utf-8"))
        b = deserialize_graph(Path(remixed).read_text(encoding="utf-8"))
    except BlockTutorError as exc:
        raise click.ClickException(f"{exc.code}: {exc}")
    metrics = graph_diff(a, b)
    click.echo(f"{metrics.extended_nodes} nodes, "
               f"{metrics.extended_edges} edges, "
               f"{metrics.suggestion_adoptions} adoptions")


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--session-dir", default=".blocktutor-sessions",
              show_default=True)
@click.option("--kb", "kb_path", type=click.Path(exists=True), default=None)
def serve(port, host, session_dir, kb_path):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    base = load_kb(kb_path) if kb_path else None
    app = create_app(session_dir=session_dir, kb=base)
    uvicorn.run(app, host=host, port=port)


@main.command()
@click.option("--project", required=True, type=click.Path(exists=True))
@click.option("--script", "script_path", required=True,
              type=click.Path(exists=True))
@click.option("--kb", "kb_path", type=click.Path(exists=True), default=None)
@click.option("--asset-dir", type=click.Path(), default=None)
def chat(project, script_path, kb_path, asset_dir):
    """Drive a scripted offline dialogue with stub backends.

    Script lines: 'ask: <question>', 'say: <answer>', 'button: got_it',
    'button: dont_know', 'remix: <utterance>'.
    """
    base = load_kb(kb_path) if kb_path else None
    session = start_session(Path(project).read_bytes(), kb=base,
                            project_ref=str(project))
    engine = ScaffoldEngine()
    report = score_ct(session.forest)
    categories = block_category_stats(session.forest)
    click.echo(f"# project: {project}")
    click.echo(f"# ct total: {report.total}/21; "
               f"blocks: {categories.total_blocks}")
    click.echo(f"# reference graph: {len(session.reference_graph.nodes)} "
               f"nodes, {len(session.reference_graph.edges)} edges")

    for raw_line in Path(script_path).read_text(encoding="utf-8").splitlines():
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        directive, _, payload = line.partition(":")
        payload = payload.strip()
        if directive in ("ask", "say"):
            learner_input = payload
        elif directive == "button":
            learner_input = payload
        elif directive == "remix":
            request = RemixRequest(utterance=payload, target_canvas="remix")
            proposals = derive_image_prompts(request, session.learner_graph)
            proposals = [render_node_image(p, store=None)
                         if asset_dir is None else
                         render_node_image(p, store=_asset_store(asset_dir))
                         for p in proposals]
            for i, proposal in enumerate(proposals):
                click.echo(f"[remix] proposal {i + 1}: {proposal.label} "
                           f"(image: {proposal.image_ref or 'none'})")
            continue
        else:
            raise click.ClickException(f"unknown script directive: {directive}")
        click.echo(f"[{session.state}] learner: {learner_input}")
        _, response = engine.handle_turn(session, learner_input)
        for message in response.messages:
            click.echo(f"[{session.state}] tutor: {message}")
    click.echo(f"# final state: {session.state}")


def _asset_store(asset_dir):
    from ..remix import AssetStore

    return AssetStore(asset_dir)


if __name__ == "__main__":
    sys.exit(main())
