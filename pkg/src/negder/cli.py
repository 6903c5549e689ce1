"""Command line interface.

Exit codes follow one convention across subcommands: 0 the queried
property holds, 1 it fails (with a certificate or violation list on
stdout), 2 usage or input errors (message on stderr).  With --json the
stdout payload is a stable machine-readable document; rationals are
always serialized as exact "p/q" strings.
"""

import argparse
import json
import sys

from . import corpus
from .algebra import Element
from .derivations import check_class_h, derivation_space
from .fileformats import (AlgebraFile, ParseError, ValidationError,
                          detect_format, load_algebra_text)
from .rigidity import char_subspace, prove_rigidity


def build_parser():
    parser = argparse.ArgumentParser(
        prog="negder",
        description="Exact-rational checks for graded-commutative algebras: "
                    "negative-degree derivations, class-H membership, "
                    "characteristic subspaces, torus splitting rigidity.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file", help="algebra file (presentation or structure constants)")
        p.add_argument("--json", action="store_true", help="emit a stable JSON document")
        return p

    command("validate", "parse an algebra file and check every axiom")
    p = command("check-h", "decide class H: no nonzero negative-degree derivations")
    p.add_argument("--max-degree", type=int, default=None, metavar="D",
                   help="sweep derivation degrees -1..-D (default: top degree)")
    p = command("derivations", "compute the space of derivations of one degree")
    p.add_argument("--degree", type=int, required=True, metavar="D",
                   help="degree shift of the derivations (may be negative)")
    p = command("char", "characteristic subspace for a bundle rank")
    p.add_argument("--rank", type=int, required=True, metavar="K", help="bundle rank, K >= 1")
    p = command("rigidity", "run the level-by-level splitting-rigidity proof")
    p.add_argument("--torus", type=int, required=True, metavar="S",
                   help="torus rank of the product")
    p = command("examples", "list or print the bundled algebra files", with_file=False)
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?", help="example name (for show)")
    return parser


def _emit(args, doc, lines):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return AlgebraFile(detect_format(text), text)


def _map_doc(algebra, m):
    blocks = []
    for n in sorted(m.blocks):
        mat = m.blocks[n]
        blocks.append({
            "source_degree": n,
            "target_degree": n + m.shift,
            "source_basis": [algebra.labels[i] for i in algebra.graded_piece(n)],
            "target_basis": [algebra.labels[i] for i in algebra.graded_piece(n + m.shift)],
            "matrix": [[str(x) for x in row] for row in mat],
        })
    return {"shift": m.shift, "blocks": blocks}


def _map_lines(algebra, m, symbol="theta"):
    lines = []
    for n in sorted(m.blocks):
        mat = m.blocks[n]
        src = algebra.graded_piece(n)
        tgt = algebra.graded_piece(n + m.shift)
        for c, i in enumerate(src):
            img = Element({tgt[r]: mat[r][c] for r in range(len(tgt))})
            if img:
                lines.append(f"{symbol}({algebra.labels[i]}) = "
                             f"{algebra.format_element(img)}")
    return lines


def _cmd_validate(args):
    algebra_file = _load(args.file)
    try:
        alg = algebra_file.build()
        violations = alg.validate()
    except ValidationError as exc:
        violations = exc.violations
    doc = {"command": "validate", "file": args.file,
           "format": algebra_file.format,
           "valid": not violations, "violations": violations}
    lines = ["valid"] if not violations else violations
    _emit(args, doc, lines)
    return 0 if not violations else 1


def _cmd_check_h(args):
    alg = _load(args.file).build()
    verdict = check_class_h(alg, args.max_degree)
    checked = sorted(verdict.dimensions, reverse=True)
    doc = {
        "command": "check-h",
        "file": args.file,
        "in_class": verdict.in_class,
        "connectivity_ok": verdict.connectivity_ok,
        "degrees": [{"degree": d, "dimension": verdict.dimensions[d]} for d in checked],
        "certificate": None,
    }
    lines = []
    ok = verdict.in_class and verdict.connectivity_ok
    if verdict.in_class:
        lines.append("in class H" if ok else "no negative-degree derivations")
        if checked:
            lines.append(f"degrees checked {checked[0]}..{checked[-1]}")
        else:
            lines.append("degrees checked: none (top degree 0)")
    else:
        d, cert = verdict.certificate
        doc["certificate"] = {"degree": d, "map": _map_doc(alg, cert)}
        lines.append("not in class H")
        lines.append(f"degree {d}: " + "; ".join(_map_lines(alg, cert)))
    if not verdict.connectivity_ok:
        lines.append("connectivity check failed: needs one-dimensional degree 0 "
                     "and empty degree 1")
    _emit(args, doc, lines)
    return 0 if ok else 1


def _cmd_derivations(args):
    alg = _load(args.file).build()
    space = derivation_space(alg, args.degree)
    doc = {"command": "derivations", "file": args.file, "degree": args.degree,
           "dimension": len(space), "basis": [_map_doc(alg, m) for m in space]}
    lines = [f"dimension {len(space)}"]
    for idx, m in enumerate(space, start=1):
        lines.append(f"basis map {idx}:")
        lines.extend("  " + t for t in _map_lines(alg, m))
    _emit(args, doc, lines)
    return 0 if not space else 1


def _cmd_char(args):
    alg = _load(args.file).build()
    char = char_subspace(alg, args.rank)
    doc = {"command": "char", "file": args.file, "rank": char.rank,
           "degrees": list(char.degrees), "dimension": char.dimension,
           "basis": [{"degree": n,
                      "labels": [alg.labels[i] for i in char.basis_indices[n]]}
                     for n in char.degrees]}
    lines = [f"degrees: {', '.join(map(str, char.degrees))}",
             f"dimension: {char.dimension}"]
    for n in char.degrees:
        labels = [alg.labels[i] for i in char.basis_indices[n]]
        lines.append(f"degree {n}: " + (", ".join(labels) if labels else "(empty)"))
    _emit(args, doc, lines)
    return 0


def _cmd_rigidity(args):
    if args.torus < 0:
        raise ValueError("torus rank must be nonnegative")
    alg = _load(args.file).build()
    trace = prove_rigidity(alg, args.torus)
    doc = {"command": "rigidity", "file": args.file,
           "torus_rank": trace.torus_rank, "level_cap": trace.level_cap,
           "levels": [{"level": rec.level, "dimension": rec.dimension,
                       "certificate": (_map_doc(alg, rec.certificate)
                                       if rec.certificate else None)}
                      for rec in trace.levels],
           "established": trace.established,
           "failed_level": trace.failed_level}
    parts = [f"level {rec.level}: dim {rec.dimension}" for rec in trace.levels]
    if trace.established:
        parts.append("established")
    else:
        parts.append(f"not established at level {trace.failed_level}")
    lines = ["; ".join(parts)]
    if not trace.established:
        cert = trace.levels[-1].certificate
        lines.append("certificate: " + "; ".join(_map_lines(alg, cert, symbol="lambda")))
    _emit(args, doc, lines)
    return 0 if trace.established else 1


def _cmd_examples(args):
    if args.action == "list":
        doc = {"command": "examples", "names": corpus.names(),
               "descriptions": {n: corpus.entry(n).description for n in corpus.names()}}
        lines = [f"{n}: {corpus.entry(n).description}" for n in corpus.names()]
        _emit(args, doc, lines)
        return 0
    if not args.name:
        print("error: examples show needs a name", file=sys.stderr)
        return 2
    try:
        payload = corpus.text(args.name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    doc = {"command": "examples", "name": args.name, "text": payload}
    _emit(args, doc, payload.splitlines())
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "check-h": _cmd_check_h,
    "derivations": _cmd_derivations,
    "char": _cmd_char,
    "rigidity": _cmd_rigidity,
    "examples": _cmd_examples,
}


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _HANDLERS[args.command](args)
    except (OSError, ParseError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))
