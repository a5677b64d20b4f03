"""Command-line front end.

Every command reads one JSON document (a file path or ``--json``) and
prints a JSON report.  Exit codes: 0 ok, 1 theorem violation, 2 invalid
input, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .campaigns import ALIASES, CAMPAIGNS, run_campaign
from .complex import (
    SimplicialComplex,
    minimal_nonfaces,
    shedding_order,
    is_vertex_decomposable,
    stanley_reisner,
)
from .decomposability import (
    depth_report,
    is_ass_decomposable,
    regularity_report,
    unmixed_consequences,
    verify_certificate,
)
from .errors import InvalidInputError, ResourceLimitError, TheoremViolation
from .graphs import GENERATORS, Graph, edge_ideal, generate, independence_complex, is_chordal, is_star
from .homology import (
    FieldSpec,
    betti_table,
    invariants_from_table,
    is_cohen_macaulay,
    is_sequentially_cm,
    reduced_homology_ranks,
)
from .ideal import MonomialIdeal, associated_primes, irreducible_decomposition, numeric_invariants

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

IDEAL_COMMANDS = ("decompose", "ass-primes", "invariants", "betti", "depth", "reg", "assdec")
COMPLEX_COMMANDS = ("complex", "vd")


def _load_document(args) -> dict:
    if args.json is not None:
        text, origin = args.json, "--json"
    elif args.input is not None:
        try:
            text, origin = Path(args.input).read_text(), args.input
        except OSError as exc:
            raise InvalidInputError(f"cannot read {args.input}: {exc.strerror}")
    else:
        raise InvalidInputError("no input: pass a JSON file path or --json")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{origin}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")


# ---------------------------------------------------------------------------
# command bodies

def _cmd_decompose(I: MonomialIdeal, field, args) -> dict:
    return {"components": [c.to_json() for c in irreducible_decomposition(I)]}


def _cmd_ass_primes(I, field, args) -> dict:
    return {"primes": [p.to_json() for p in associated_primes(I)]}


def _cmd_invariants(I, field, args) -> dict:
    return numeric_invariants(I).to_json()


def _cmd_betti(I, field, args) -> dict:
    table = betti_table(I, field, max_gens=args.max_gens)
    out = table.to_json()
    out.update(invariants_from_table(table).to_json())
    return out


def _cmd_depth(I, field, args) -> dict:
    return depth_report(I, field).to_json()


def _cmd_reg(I, field, args) -> dict:
    return regularity_report(I, field).to_json()


def _cmd_assdec(I, field, args) -> dict:
    result = is_ass_decomposable(I)
    out = result.to_json()
    if result:
        out["certificate_verified"] = verify_certificate(I, result.certificate)
        out["unmixed_consequences"] = unmixed_consequences(I, field, result=result).to_json()
    return out


def _cmd_complex(delta: SimplicialComplex, field, args) -> dict:
    I = stanley_reisner(delta)
    return {
        "facets": [list(f) for f in delta.facets],
        "dim": delta.dim,
        "simplex": delta.is_simplex,
        "stanley_reisner": I.to_json() if I is not None else "(0)",
        "minimal_nonfaces": [list(f) for f in minimal_nonfaces(delta)],
        "reduced_homology": reduced_homology_ranks(delta, field),
        "cohen_macaulay": is_cohen_macaulay(delta, field),
        "sequentially_cm": is_sequentially_cm(delta, field),
    }


def _cmd_vd(delta, field, args) -> dict:
    ok, witness = is_vertex_decomposable(delta)
    return {"vertex_decomposable": ok, "witness": witness, "shedding_order": shedding_order(witness)}


def _cmd_graph(args, field) -> tuple[dict, dict]:
    if args.kind is not None:
        if args.size is None:
            raise InvalidInputError("graph --kind needs --size")
        G = generate(args.kind, args.size, args.seed)
        echo = {"kind": args.kind, "size": args.size, "seed": args.seed}
    else:
        echo = _load_document(args)
        G = Graph.from_json(echo)
    chordal, witness = is_chordal(G)
    out = {
        "graph": G.to_json(),
        "chordal": chordal,
        "perfect_elimination_order" if chordal else "chordless_cycle": witness,
        "star": is_star(G),
        "independence_complex": independence_complex(G).to_json(),
    }
    if G.edges:
        out["edge_ideal"] = edge_ideal(G).to_json()
    return echo, out


IDEAL_HANDLERS = {
    "decompose": _cmd_decompose,
    "ass-primes": _cmd_ass_primes,
    "invariants": _cmd_invariants,
    "betti": _cmd_betti,
    "depth": _cmd_depth,
    "reg": _cmd_reg,
    "assdec": _cmd_assdec,
}
COMPLEX_HANDLERS = {"complex": _cmd_complex, "vd": _cmd_vd}


def execute(args) -> tuple[dict, int]:
    field = FieldSpec(args.char)
    start = time.perf_counter()
    status = EXIT_OK
    if args.command in IDEAL_HANDLERS:
        echo = _load_document(args)
        I = MonomialIdeal.from_json(echo)
        if args.max_gens is not None and len(I.gens) > args.max_gens:
            raise ResourceLimitError(f"{len(I.gens)} minimal generators exceed --max-gens {args.max_gens}")
        results = IDEAL_HANDLERS[args.command](I, field, args)
    elif args.command in COMPLEX_HANDLERS:
        echo = _load_document(args)
        results = COMPLEX_HANDLERS[args.command](SimplicialComplex.from_json(echo), field, args)
    elif args.command == "graph":
        echo, results = _cmd_graph(args, field)
    else:  # verify
        echo = {"campaign": args.campaign, "count": args.count, "seed": args.seed}
        results = run_campaign(args.campaign, args.count, args.seed, field).to_json()
        if results["failures"]:
            status = EXIT_VIOLATION
    report = {
        "command": args.command,
        "input": echo,
        "results": results,
        "field": field.to_json(),
        "version": __version__,
        "timing": {"seconds": round(time.perf_counter() - start, 6)},
    }
    return report, status


COMMAND_HELP = {
    "decompose": "irreducible decomposition of an ideal",
    "ass-primes": "associated primes",
    "invariants": "numeric invariants (heights, index, d(I))",
    "betti": "graded Betti table",
    "depth": "depth, by formula and by resolution",
    "reg": "regularity and the d(I) bound",
    "assdec": "ass-decomposability with a certificate",
    "complex": "facets, Stanley-Reisner ideal and homology of a complex",
    "vd": "vertex decomposability with a shedding witness",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=2, metavar="P", help="field characteristic (prime, default 2)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int, default=None)
    common.add_argument("--max-gens", type=int, default=None, help="reject ideals with more minimal generators")
    common.add_argument("--json", default=None, metavar="TEXT", help="inline JSON input")
    common.add_argument("--out", default=None, metavar="PATH", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="assdec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in IDEAL_COMMANDS + COMPLEX_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=COMMAND_HELP[name])
        p.add_argument("input", nargs="?", help="JSON file")
    g = sub.add_parser("graph", parents=[common], help="analyze a graph or generate one")
    g.add_argument("input", nargs="?", help="graph JSON file")
    g.add_argument("--kind", choices=sorted(GENERATORS))
    g.add_argument("--size", type=int)
    v = sub.add_parser("verify", parents=[common], help="run a property campaign")
    v.add_argument("campaign", choices=sorted(CAMPAIGNS) + sorted(ALIASES))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, status = execute(args)
    except TheoremViolation as exc:
        return _fail(EXIT_VIOLATION, "theorem-violation", exc)
    except InvalidInputError as exc:
        return _fail(EXIT_INPUT, "invalid-input", exc)
    except ResourceLimitError as exc:
        return _fail(EXIT_RESOURCE, "resource-limit", exc)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return status


def _fail(code: int, kind: str, exc: Exception) -> int:
    print(json.dumps({"error": kind, "message": str(exc), "exit_code": code}), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
