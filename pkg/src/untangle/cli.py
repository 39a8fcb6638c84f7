"""Command line interface.

Subcommands: construct, lemma-check, bound, verify, untangle, serve,
play-log. Text output by default where a table reads better; --json
everywhere for machines.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import bounds as bounds_mod
from . import sequences as seq_mod
from .construction import standard_instance
from .embed import barycentric_embed, untangle_fixing_face
from .errors import UntangleError
from .game import apply_move, new_game_from_drawing, new_game_from_instance, undo_move
from .geometry import Point
from .graph import count_crossings, is_plane_drawing, planar_rotation, trace_faces
from .serialize import (
    drawing_from_dict,
    instance_to_dict,
    load_file,
    loaded_from_dict,
    redraw_to_dict,
    save_file,
)


@click.group()
def main():
    """Planar graph untangling lab."""


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@main.command()
@click.option("--family", type=click.Choice(["chain", "square"]), required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--s", "s", type=int, default=None)
@click.option("--style", type=click.Choice(["stacked", "strip"]), default="stacked")
@click.option("--out", "out", type=click.Path(dir_okay=False), required=True)
@click.option("--json", "as_json", is_flag=True, help="echo the instance to stdout too")
def construct(family, k, s, style, out, as_json):
    """Build a standard adversarial instance with its bad drawing."""
    try:
        inst = standard_instance(family, k, s, style)
    except UntangleError as exc:
        _fail(str(exc))
    data = instance_to_dict(inst)
    save_file(out, data)
    if as_json:
        click.echo(json.dumps(data))
    else:
        crossings = count_crossings(inst.graph, inst.bad_drawing)
        click.echo(
            f"{inst.family_tag}: n={inst.n}, m={inst.m} clusters of size {inst.k}, "
            f"{inst.graph.edge_count} edges, bad drawing has {crossings} crossings -> {out}"
        )


@main.command("lemma-check")
@click.option("--kmax", type=int, required=True)
@click.option("--smax", type=int, required=True)
@click.option("--cap", type=int, default=seq_mod.EXHAUSTIVE_CAP, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def lemma_check(kmax, smax, cap, as_json):
    """Brute-force the block-sequence bound over a (k, s) grid."""
    try:
        rows = seq_mod.lemma_table(kmax, smax, cap)
    except UntangleError as exc:
        _fail(str(exc))
    if as_json:
        click.echo(json.dumps([row.__dict__ for row in rows]))
    else:
        click.echo(" k  s   n  max_free  k+s  verdict")
        for r in rows:
            verdict = "pass" if r.passed else "FAIL"
            click.echo(
                f"{r.k:2d} {r.s:2d} {r.n:3d}  {r.max_free_length:8d}  {r.bound:3d}  {verdict}"
            )
    if not all(r.passed for r in rows):
        sys.exit(1)


def _certificate_json(cert: bounds_mod.BoundCertificate) -> dict:
    return {
        "family": cert.family,
        "k": cert.k,
        "m": cert.m,
        "n": cert.n,
        "s": cert.s,
        "method": cert.method,
        "label_sequence": list(cert.label_seq.labels),
        "certified_fixed_upper": cert.certified_fixed_upper,
        "certified_moved_lower": cert.certified_moved_lower,
    }


@main.command()
@click.option("--instance", "instance_path", type=click.Path(exists=True), required=True)
@click.option("--method", type=click.Choice(["circle", "persistence"]), default=None)
def bound(instance_path, method):
    """Print the certified bound certificate for an instance (JSON)."""
    _, _, inst = loaded_from_dict(load_file(instance_path))
    if inst is None:
        _fail("file does not contain a clustered instance")
    method_name = {"circle": "circle_lemma", "persistence": "persistence", None: None}[method]
    try:
        cert = bounds_mod.certified_fixed_upper_bound(inst, method_name)
    except UntangleError as exc:
        _fail(str(exc))
    click.echo(json.dumps(_certificate_json(cert), indent=1))


@main.command()
@click.option("--instance", "instance_path", type=click.Path(exists=True), required=True)
@click.option("--redraw", "redraw_path", type=click.Path(exists=True), required=True)
@click.option("--method", type=click.Choice(["circle", "persistence"]), default=None)
@click.option("--json", "as_json", is_flag=True)
def verify(instance_path, redraw_path, method, as_json):
    """Check a redrawing against the instance's certificate."""
    _, _, inst = loaded_from_dict(load_file(instance_path))
    if inst is None:
        _fail("instance file does not contain a clustered instance")
    redraw_data = load_file(redraw_path)
    try:
        redraw = drawing_from_dict(inst.n, redraw_data.get("drawing", {}))
        method_name = {"circle": "circle_lemma", "persistence": "persistence", None: None}[method]
        cert = bounds_mod.certified_fixed_upper_bound(inst, method_name)
        report = bounds_mod.count_fixed(inst.bad_drawing, redraw)
        plane = is_plane_drawing(inst.graph, redraw)
        persistent = bounds_mod.persistent_clusters(inst, redraw)
    except UntangleError as exc:
        _fail(str(exc))
    ok = (not plane) or report.fixed_count <= cert.certified_fixed_upper
    payload = {
        "plane": plane,
        "fixed_count": report.fixed_count,
        "moved_count": report.moved_count,
        "fixed_vertices": sorted(report.fixed_vertices),
        "persistent_clusters": sorted(persistent),
        "certificate": _certificate_json(cert),
        "pass": ok,
        "note": None if plane else "redrawing is not crossing-free; certificate not applicable",
    }
    if as_json:
        click.echo(json.dumps(payload, indent=1))
    else:
        click.echo(
            f"plane={plane} fixed={report.fixed_count} moved={report.moved_count} "
            f"certified_fixed_upper={cert.certified_fixed_upper} -> "
            + ("PASS" if ok else "FAIL")
        )
    if not ok:
        sys.exit(1)


@main.command("untangle")
@click.option("--instance", "instance_path", type=click.Path(exists=True), required=True)
@click.option("--fix-face/--no-fix-face", default=True,
              help="keep a facial triangle at its bad-drawing position (default) "
                   "or re-embed on a fresh canonical outer face")
@click.option("--out", "out", type=click.Path(dir_okay=False), required=True)
@click.option("--json", "as_json", is_flag=True)
def untangle_cmd(instance_path, fix_face, out, as_json):
    """Produce a crossing-free straight-line redrawing."""
    g, drawing, inst = loaded_from_dict(load_file(instance_path))
    if drawing is None:
        _fail("file carries no drawing to untangle")
    try:
        if fix_face:
            result = untangle_fixing_face(g, drawing)
            redraw = result.drawing
            fixed = result.fix_report.fixed_count
        else:
            faces = trace_faces(planar_rotation(g))
            face = min(
                (f for f in faces if len(f) == 3),
                key=lambda f: tuple(sorted(f)),
            )
            side = g.vertex_count
            redraw = barycentric_embed(
                g, face, [Point(0, 0), Point(2 * side, 0), Point(0, 2 * side)],
                _skip_face_check=True,
            )
            fixed = sum(1 for v in range(g.vertex_count) if redraw[v] == drawing[v])
    except UntangleError as exc:
        _fail(str(exc))
    save_file(out, redraw_to_dict(g, redraw))
    payload = {
        "crossings": count_crossings(g, redraw),
        "fixed_count": fixed,
        "moved_count": g.vertex_count - fixed,
        "out": out,
    }
    if as_json:
        click.echo(json.dumps(payload))
    else:
        click.echo(
            f"redraw: crossings={payload['crossings']} fixed={fixed} "
            f"moved={payload['moved_count']} -> {out}"
        )


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="also serve a built web UI from this directory")
@click.option("--log-dir", type=click.Path(file_okay=False), default=None,
              help="append per-session JSONL move logs here")
def serve(port, host, static_dir, log_dir):
    """Run the HTTP service (and optionally the web UI)."""
    import uvicorn

    from .server import create_app

    app = create_app(static_dir=static_dir, log_dir=log_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command("play-log")
@click.option("--instance", "instance_path", type=click.Path(exists=True), required=True)
@click.option("--log", "log_path", type=click.Path(exists=True), required=True)
@click.option("--json", "as_json", is_flag=True)
def play_log(instance_path, log_path, as_json):
    """Replay a JSONL session log against an instance and report the result."""
    g, drawing, inst = loaded_from_dict(load_file(instance_path))
    if drawing is None:
        _fail("instance file carries no drawing")
    try:
        if inst is not None:
            state = new_game_from_instance(inst)
        else:
            state = new_game_from_drawing(g, drawing)
        with open(log_path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                if entry.get("undo"):
                    state = undo_move(state)
                    continue
                p = Point(
                    Fraction(entry["x"][0], entry["x"][1]),
                    Fraction(entry["y"][0], entry["y"][1]),
                )
                state = apply_move(state, int(entry["v"]), p)
    except (UntangleError, json.JSONDecodeError, KeyError, IndexError) as exc:
        _fail(f"replay failed: {exc}")
    payload = {
        "moves": state.moves_used,
        "crossings": state.crossings,
        "status": state.status,
    }
    if state.bound is not None:
        payload["certified_moved_lower"] = state.bound.certified_moved_lower
        payload["meets_certificate"] = (
            state.moves_used >= state.bound.certified_moved_lower
            if state.status == "solved"
            else None
        )
    if as_json:
        click.echo(json.dumps(payload))
    else:
        click.echo(
            f"replayed {payload['moves']} moves: crossings={payload['crossings']} "
            f"status={payload['status']}"
        )


if __name__ == "__main__":
    main()
