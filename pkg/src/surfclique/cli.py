"""Command-line interface.

Subcommands::

    surfclique inspect <input>
    surfclique verify-table
    surfclique bounds <S<g>|N<h>> --n N
    surfclique generate <input> --n N [--policy lex|random] [--seed S]
    surfclique reduce <input> [--policy lex|random] [--seed S]

``<input>`` is a fixture id (``S2#1``, ``S1:K7``), a file path, ``-`` for
standard input, or literal embedding text.  Exit status is 0 on success,
1 when a verification fails and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .cliques import clique_report
from .embed import Embedding, EmbeddingError, Surface, format_embedding, read_embedding, surface_of
from .fixtures import get_fixture
from .surfmath import bound_report
from .surgery import SurgeryError, generate_extremal, reduce_to_irreducible, reducible_edges
from .verify import verify_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_input(source: str) -> Embedding:
    """Resolve a fixture id, path, ``-`` or literal text to an embedding."""
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            return get_fixture(source).embedding
        except KeyError:
            pass
        path = Path(source)
        if path.is_file():
            text = path.read_text()
        elif "#" in source or ":" in source:
            raise UsageError(f"unknown fixture id {source!r}")
        else:
            text = source
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    return read_embedding("\n".join(lines))


def _dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _letters(e: Embedding, v: int) -> str:
    return chr(ord("a") + v) if e.vertex_count <= 26 else str(v + 1)


def cmd_inspect(args) -> int:
    e = load_input(args.input)
    surface = surface_of(e)
    cr = clique_report(e)
    red = reducible_edges(e)
    red_names = [f"{_letters(e, r.v)}{_letters(e, r.w)}" for r in red]
    info = {
        "vertices": e.vertex_count,
        "edges": e.edge_count,
        "faces": e.face_count,
        "euler_characteristic": surface.chi,
        "orientable": surface.orientable,
        "surface": surface.name,
        "cliques": cr.total,
        "excess": cr.excess,
        "clique_number": cr.clique_number,
        "irreducible": not red,
        "reducible_edges": red_names,
    }
    if args.json:
        print(_dump(info))
    else:
        for key, value in info.items():
            if key == "reducible_edges":
                value = " ".join(value) if value else "none"
            print(f"{key:<21} {value}")
    return EXIT_OK


def cmd_verify_table(args) -> int:
    report = verify_table()
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bounds(args) -> int:
    try:
        surface = Surface.parse(args.surface)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    rep = bound_report(surface, args.n)
    data = rep.as_dict()
    if args.json:
        print(_dump(data))
        return EXIT_OK
    rows = [
        ("surface", surface.name),
        ("euler characteristic", surface.chi),
        ("n", args.n),
        ("omega", rep.omega),
        ("K_omega triangulates", rep.complete_triangulates),
        ("minimal order", rep.minimal_order),
        ("irreducible order bound", rep.irreducible_order_bound),
        ("lower bound", "n/a (n < omega)" if rep.lower is None else rep.lower),
    ]
    if rep.s is None:
        rows.append(("general bounds", "require a surface other than S0"))
        if rep.upper is not None:
            rows.append(("planar bound 8n-16", rep.upper))
    else:
        rows += [
            ("s", rep.s),
            ("upper bound", rep.upper),
            ("min degree cap", data["min_degree_cap"]),
        ]
        for j, cap in sorted(rep.degree_caps.items()):
            label = "<= omega+1 vertices" if j == 1 else f">= omega+{j} vertices"
            rows.append((f"min degree, {label}", cap))
    for key, value in rows:
        print(f"{key:<32} {value}")
    return EXIT_OK


def _emit_embedding(e: Embedding, extra: dict, as_json: bool) -> None:
    cr = clique_report(e)
    payload = {"embedding": format_embedding(e), "vertices": e.vertex_count,
               "cliques": cr.total, "excess": cr.excess, **extra}
    if as_json:
        print(_dump(payload))
        return
    print(format_embedding(e).rstrip("\n"))
    if e.vertex_count > 26:
        print()
    print(f"# vertices {e.vertex_count}")
    print(f"# cliques {cr.total}")
    print(f"# excess {cr.excess}")
    for key, value in extra.items():
        print(f"# {key} {value}")


def cmd_generate(args) -> int:
    seed = load_input(args.input)
    if args.n is None:
        raise UsageError("--n is required")
    try:
        e = generate_extremal(seed, args.n, args.policy, random.Random(args.seed))
    except SurgeryError as exc:
        raise UsageError(str(exc)) from None
    _emit_embedding(e, {}, args.json)
    return EXIT_OK


def cmd_reduce(args) -> int:
    e = load_input(args.input)
    rng = random.Random(args.seed) if args.policy == "random" else None
    result, steps = reduce_to_irreducible(e, rng)
    _emit_embedding(result, {"contractions": steps}, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="surfclique",
        description="Clique counts of surface triangulations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", parents=[common], help="describe one triangulation")
    p.add_argument("input")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify-table", parents=[common], help="check all reference triangulations")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("bounds", parents=[common], help="closed-form bounds for a surface")
    p.add_argument("surface", help="S<g> or N<h>")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    for name, func, help_text in (
        ("generate", cmd_generate, "split faces up to --n vertices"),
        ("reduce", cmd_reduce, "contract reducible edges until irreducible"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input")
        if name == "generate":
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--policy", choices=("lex", "random"), default="lex")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, EmbeddingError, OSError) as exc:
        print(f"surfclique {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
