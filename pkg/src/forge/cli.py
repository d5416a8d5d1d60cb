"""Command-line front end: reproducible build -> morse -> certify ->
homology pipelines, plus the affine verification commands and equivariant
scans.

Exit codes: 0 verified, 1 refuted / witness absent, 2 input error,
3 resource limit exceeded.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys

import click

from . import affine, complexes, config_space, equivariant, homology, morse

SCHEMA_VERSION = 1


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _manifest(command: str, parameters: dict, inputs: list[str], seed=None) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "input_hashes": {p: _sha256(p) for p in inputs},
        "seed": seed,
        "threads": os.environ.get("FORGE_THREADS"),
        "artifacts": {},
        "verdicts": {},
    }


def _write_json(path: str | None, payload: dict):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _faces_json(faces) -> list:
    return sorted(sorted(f) for f in faces)


@click.group()
def cli():
    """Desk-scale workbench for combinatorial configuration spaces."""


# ----------------------------------------------------------------------
# build


@cli.command()
@click.argument("kind")
@click.option("--params", "params_", default="", help="comma-separated integers")
@click.option("--input", "inputs", multiple=True, help="input complex JSON file(s)")
@click.option("--out", default=None)
def build(kind, params_, inputs, out):
    """Build a complex: multipartite|chessboard|multichess|bier|join|
    deleted-join|skeleton|dual."""
    nums = [int(x) for x in params_.split(",") if x.strip() != ""]
    loaded = [
        complexes.SimplicialComplex.from_json(open(p).read()) for p in inputs
    ]
    if kind == "multipartite":
        K = complexes.multipartite_complex(nums)
    elif kind == "chessboard":
        K = complexes.chessboard_complex(nums[0], nums[1])
    elif kind == "multichess":
        rows, cols = nums[0], nums[1]
        row_caps = nums[2 : 2 + rows]
        col_caps = nums[2 + rows : 2 + rows + cols]
        K = complexes.multi_chessboard_complex(rows, cols, row_caps, col_caps)
    elif kind == "bier":
        K = complexes.bier_sphere(loaded[0])
    elif kind == "join":
        K = complexes.join(loaded[0], loaded[1])
    elif kind == "deleted-join":
        K = complexes.deleted_join(loaded[0], nums[0])
    elif kind == "skeleton":
        K = complexes.skeleton(loaded[0], nums[0])
    elif kind == "dual":
        K = complexes.alexander_dual(loaded[0], loaded[0].ground_set)
    else:
        raise ValueError("unknown build kind %r" % kind)
    text = K.to_json()
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


# ----------------------------------------------------------------------
# configuration space


def _space_payload(space: config_space.ConfigurationSpace) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "params": vars(space.params),
        "coloring": [list(c) for c in space.coloring.classes],
        "complex": json.loads(space.as_complex().to_json()),
        "labels": [
            {
                "parts": [sorted(a) for a in lab.parts],
                "face": sorted(lab.flat_face(space.params.r)),
            }
            for lab in space.labels
        ],
    }


def _load_space(path: str) -> config_space.ConfigurationSpace:
    data = json.load(open(path))
    p = data["params"]
    params = config_space.balanced_params(p["r"], p["d"])
    coloring = config_space.Coloring(
        tuple(tuple(c) for c in data["coloring"])
    )
    space = config_space.ConfigurationSpace(params, coloring)
    if len(space.labels) != len(data["labels"]):
        raise ValueError("space file does not match its parameters")
    return space


@cli.command("config-space")
@click.option("--r", "r", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--coloring", "coloring_file", default=None)
@click.option("--out", default=None)
def config_space_cmd(r, d, coloring_file, out):
    """Build the balanced configuration space with its label sidecar."""
    params = config_space.balanced_params(r, d)
    coloring = None
    if coloring_file:
        coloring = config_space.Coloring(
            tuple(tuple(c) for c in json.load(open(coloring_file)))
        )
    space = config_space.build_config_space(params, coloring)
    _write_json(out, _space_payload(space))


# ----------------------------------------------------------------------
# morse / certify


@cli.command("morse")
@click.option("--space", "space_file", required=True)
@click.option("--out", default=None)
def morse_cmd(space_file, out):
    """Run the stepwise matching and emit the discrete vector field."""
    space = _load_space(space_file)
    field = morse.balanced_matching(space)
    payload = {
        "schema": SCHEMA_VERSION,
        "pairs": sorted(
            [sorted(lo), sorted(hi)] for lo, hi in field.pairs.items()
        ),
        "critical": _faces_json(f for f in field.critical() if f),
    }
    _write_json(out, payload)


@cli.command("certify")
@click.option("--space", "space_file", required=True)
@click.option("--field", "field_file", required=True)
@click.option("--out", default=None)
@click.pass_context
def certify_cmd(ctx, space_file, field_file, out):
    """Validate a vector field and emit the connectivity certificate."""
    space = _load_space(space_file)
    data = json.load(open(field_file))
    field = morse.DiscreteVectorField(
        complex=space.as_complex(),
        pairs={
            frozenset(lo): frozenset(hi) for lo, hi in data["pairs"]
        },
    )
    rep = morse.check_dvf(field)
    acy = morse.acyclicity(field)
    verdict = {"schema": SCHEMA_VERSION, "valid": rep.ok, "acyclic": acy.acyclic}
    if not acy.acyclic:
        verdict["witness_cycle"] = _faces_json(acy.witness_cycle)
    if rep.ok and acy.acyclic:
        cert = morse.connectivity_certificate(field)
        verdict["certificate"] = cert.as_dict()
        mono = morse.pi_monotonicity(field, space)
        verdict["lexicographic_violations"] = len(mono.violations)
    _write_json(out, verdict)
    if not (rep.ok and acy.acyclic):
        ctx.exit(1)


# ----------------------------------------------------------------------
# homology


@cli.command("homology")
@click.option("--complex", "complex_file", required=True)
@click.option("--mod2", is_flag=True, default=False)
@click.option("--reduced/--unreduced", default=True)
@click.option("--out", default=None)
def homology_cmd(complex_file, mod2, reduced, out):
    """Betti numbers and torsion of a complex from its JSON file."""
    K = complexes.SimplicialComplex.from_json(open(complex_file).read())
    rep = homology.homology(K, reduced=reduced, mod2=mod2)
    _write_json(
        out,
        {
            "schema": SCHEMA_VERSION,
            "betti": rep.betti,
            "torsion": rep.torsion,
            "reduced": rep.reduced,
            "mod2": rep.mod2,
        },
    )


# ----------------------------------------------------------------------
# equivariant scan


@cli.command("equivariant-scan")
@click.option("--k", "k_file", default=None, help="source complex (default: chessboard sphere)")
@click.option("--l", "l_file", default=None, help="target complex (default: tetra boundary)")
@click.option("--group", default="klein4")
@click.option("--subdivide", type=int, default=0)
@click.option("--out", default=None)
@click.pass_context
def equivariant_scan(ctx, k_file, l_file, group, subdivide, out):
    """Enumerate equivariant simplicial maps with degrees and check the
    parity congruence."""
    if group != "klein4":
        raise ValueError("only the klein4 group is supported")
    act_K, act_L = equivariant.klein_actions()
    if k_file or l_file:
        raise ValueError(
            "custom complexes need their action tables; only the built-in "
            "klein4 pair is supported at desk scale"
        )
    records = equivariant.enumerate_equivariant_maps(
        act_K.complex, act_L.complex, act_K, act_L, subdivision_level=subdivide
    )
    degs = [rec.degree for rec in records]
    parity_ok = len({d % 2 for d in degs}) <= 1
    _write_json(
        out,
        {
            "schema": SCHEMA_VERSION,
            "subdivision_level": subdivide,
            "maps": [
                {
                    "vertex_map": rec.map.vertex_map,
                    "degree": rec.degree,
                    "collapsing": rec.collapsing,
                }
                for rec in records
            ],
            "empty": not records,
            "parity_congruence": parity_ok,
        },
    )
    if not parity_ok:
        ctx.exit(1)


# ----------------------------------------------------------------------
# affine verification


@cli.command("verify")
@click.argument("mode", type=click.Choice(["tverberg", "rainbow", "seven-point"]))
@click.option("--config", "config_file", required=True)
@click.option("--r", "r", type=int, default=2)
@click.option("--k", "k", type=int, default=None)
@click.option("--s", "s", type=int, default=None)
@click.option("--out", default=None)
@click.pass_context
def verify_cmd(ctx, mode, config_file, r, k, s, out):
    """Search for a partition witness in a rational point configuration."""
    cfg = affine.RationalPointConfig.from_json(open(config_file).read())
    if mode == "tverberg":
        res = affine.tverberg_search(cfg, r)
    elif mode == "rainbow":
        if k is None or s is None:
            raise ValueError("rainbow mode needs --k and --s")
        res = affine.rainbow_search(cfg, r, k, s)
    else:
        res = affine.seven_point_search(cfg)
    if isinstance(res, affine.PartitionWitness):
        _write_json(out, {"schema": SCHEMA_VERSION, "witness": res.as_dict()})
    else:
        _write_json(
            out,
            {
                "schema": SCHEMA_VERSION,
                "witness": None,
                "exhaustion": {
                    "candidates_checked": res.candidates_checked,
                    "pruned_and_reverified": res.pruned_and_reverified,
                },
            },
        )
        ctx.exit(1)


@cli.command("random-config")
@click.option("--seed", type=int, required=True)
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--colors", default=None, help="comma-separated class sizes")
@click.option("--out", default=None)
def random_config_cmd(seed, n, d, colors, out):
    """Emit a seeded random general-position rational configuration."""
    sizes = [int(x) for x in colors.split(",")] if colors else None
    cfg = affine.random_config(seed, n, d, sizes)
    text = cfg.to_json()
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


# ----------------------------------------------------------------------
# pipeline / report


def pipeline_balanced(r: int, d: int) -> dict:
    """Full verification pipeline for one balanced instance: build the
    configuration space, run the stepwise matching, validate it, certify the
    connectivity bound and cross-check against the homology oracle."""
    params = config_space.balanced_params(r, d)
    if params.m * params.r > 40:
        raise ResourceWarning("instance too large for the desk-scale pipeline")
    space = config_space.build_config_space(params)
    field = morse.balanced_matching(space)
    verdicts: dict = {}
    rep = morse.check_dvf(field)
    verdicts["field_valid"] = rep.ok
    acy = morse.acyclicity(field)
    verdicts["acyclic"] = acy.acyclic
    mono = morse.pi_monotonicity(field, space)
    verdicts["lexicographic_violations"] = len(mono.violations)
    cert = morse.connectivity_certificate(field)
    verdicts["certificate"] = cert.as_dict()
    target = params.r * params.k + params.s - 2
    verdicts["connectivity_target"] = target
    verdicts["connectivity_certified"] = cert.connectivity == target
    crit_top = [f for f in field.critical() if len(f) - 1 == cert.n_min_dim]
    hom = homology.homology(space.as_complex(), reduced=True)
    verdicts["betti"] = hom.betti
    verdicts["homology_agrees"] = (
        all(b == 0 for b in hom.betti[: cert.n_min_dim])
        and hom.betti[cert.n_min_dim] == len(crit_top)
        and all(not t for t in hom.torsion)
    )
    verdicts["perfect_matching"] = cert.wedge_of_spheres
    manifest = {
        "schema": SCHEMA_VERSION,
        "command": "pipeline",
        "parameters": {"r": r, "d": d, **vars(params)},
        "seed": None,
        "threads": os.environ.get("FORGE_THREADS"),
        "verdicts": verdicts,
    }
    return manifest


@cli.command("pipeline")
@click.option("--r", "r", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--out", default=None)
@click.pass_context
def pipeline_cmd(ctx, r, d, out):
    """Run the full balanced-instance verification pipeline."""
    manifest = pipeline_balanced(r, d)
    _write_json(out, manifest)
    v = manifest["verdicts"]
    ok = (
        v["field_valid"]
        and v["acyclic"]
        and v["lexicographic_violations"] == 0
        and v["connectivity_certified"]
        and v["homology_agrees"]
    )
    if not ok:
        ctx.exit(1)


@cli.command("report")
@click.option("--manifest", "manifest_file", required=True)
def report_cmd(manifest_file):
    """Render a manifest or verdict JSON as a human-readable summary."""
    data = json.load(open(manifest_file))
    click.echo("command: %s" % data.get("command", "?"))
    for key, val in sorted(data.get("parameters", {}).items()):
        click.echo("  param %s = %s" % (key, val))
    verdicts = data.get("verdicts", {})
    cert = verdicts.get("certificate")
    if cert:
        click.echo(
            "  connectivity %d certified (min critical dim %d)"
            % (cert["connectivity"], cert["min_critical_dim"])
        )
        if verdicts.get("perfect_matching"):
            click.echo("  perfect matching: critical cells realize the homology")
    if "witness" in data:
        w = data["witness"]
        if w is None:
            click.echo("  no witness (exhaustion)")
        else:
            click.echo("  witness point: (%s)" % ", ".join(w["point"]))
            for i, part in enumerate(w["parts"]):
                click.echo("    part %d: %s" % (i + 1, part))
    for key, val in sorted(verdicts.items()):
        if key == "certificate":
            continue
        click.echo("  %s: %s" % (key, val))


def main():
    try:
        cli(standalone_mode=False)
    except click.exceptions.Exit as e:
        sys.exit(e.exit_code)
    except click.ClickException as e:
        e.show()
        sys.exit(2)
    except (ValueError, FileNotFoundError, KeyError) as e:
        click.echo("input error: %s" % e, err=True)
        sys.exit(2)
    except ResourceWarning as e:
        click.echo("resource limit: %s" % e, err=True)
        sys.exit(3)
    except click.Abort:
        sys.exit(2)


if __name__ == "__main__":
    main()
