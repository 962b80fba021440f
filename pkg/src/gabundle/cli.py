"""Command-line interface: ``gabundle <subcommand> ...``.

JSON arguments may be given inline, as a file path, as ``-`` for stdin, or
(for bundles) as a corpus name such as ``sl2`` or ``x22``. Every subcommand
prints one JSON document.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 violated precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import corpus, jsonio
from .autact import DEFAULT_MAX_DEGREE, pullback, pullback_dual_path
from .cech import canonicalize_bundle, decompose, homogeneous_degree, normalize
from .classify import compare, exoticity_report, h3_coefficient
from .descent import descend, dg_find_section, dg_pick_lambda, normalize_p1
from .errors import InputError, PreconditionError, SchemaError
from .selfcheck import run_suite
from .verify import nf_bundle, verify_identity

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


def load_json_arg(value: str, allow_corpus: bool = False):
    if value == "-":
        text = sys.stdin.read()
    elif value.lstrip().startswith(("{", "[")):
        text = value
    elif allow_corpus and value in corpus.BY_NAME:
        return jsonio.bundle_to_json(corpus.get(value))
    elif os.path.isfile(value):
        text = Path(value).read_text(encoding="utf-8")
    else:
        raise SchemaError(f"{value!r} is neither inline JSON nor a readable file")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _bundle(value: str):
    return jsonio.bundle_from_json(load_json_arg(value, allow_corpus=True))


def _class(value: str):
    return jsonio.class_from_json(load_json_arg(value))


def cmd_normalize(args):
    return jsonio.class_to_json(normalize(jsonio.laurent_from_json(load_json_arg(args.poly))))


def cmd_canonicalize(args):
    p = jsonio.laurent_from_json(load_json_arg(args.p))
    return jsonio.bundle_to_json(canonicalize_bundle(args.m, args.n, p))


def cmd_decompose(args):
    return {"components": [jsonio.component_to_json(h) for h in decompose(_class(args.cls))]}


def cmd_degree(args):
    return {"degree": homogeneous_degree(_class(args.cls))}


def cmd_pullback(args):
    auto = jsonio.auto_from_json(load_json_arg(args.auto))
    fn = pullback_dual_path if args.path == "dual" else pullback
    return jsonio.class_to_json(fn(auto, _class(args.cls), max_degree=args.max_degree))


def cmd_h3(args):
    return {"coefficient": jsonio.rat_out(h3_coefficient(_bundle(args.bundle)))}


def cmd_compare(args):
    if args.pairs:
        doc = load_json_arg(args.pairs)
        if not isinstance(doc, list):
            raise SchemaError("--pairs expects a JSON list of {\"a\": ..., \"b\": ...}")
        pairs = []
        for item in doc:
            if not isinstance(item, dict) or "a" not in item or "b" not in item:
                raise SchemaError("each pair needs keys 'a' and 'b'")
            pairs.append(tuple(
                corpus.get(x) if isinstance(x, str) and x in corpus.BY_NAME else jsonio.bundle_from_json(x)
                for x in (item["a"], item["b"])))
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            verdicts = list(pool.map(lambda ab: compare(*ab), pairs))
        return {"results": [jsonio.verdict_to_json(v) for v in verdicts]}
    if not (args.a and args.b):
        raise SchemaError("compare needs --a and --b, or --pairs")
    return jsonio.verdict_to_json(compare(_bundle(args.a), _bundle(args.b)))


def cmd_exotic(args):
    return jsonio.report_to_json(exoticity_report(_bundle(args.bundle)))


def cmd_descend(args):
    if args.component:
        h = jsonio.component_from_json(load_json_arg(args.component))
    else:
        comps = decompose(_class(args.cls))
        if len(comps) != 1:
            raise PreconditionError("descend needs a homogeneous class (exactly one weight component)")
        h = comps[0]
    return jsonio.p1cocycle_to_json(descend(h))


def cmd_p1_normalize(args):
    return jsonio.p1class_to_json(normalize_p1(jsonio.p1cocycle_from_json(load_json_arg(args.cocycle)), args.d))


def cmd_dg_section(args):
    q = jsonio.poly1_from_json(load_json_arg(args.q))
    lam = jsonio.rat_in(args.lam) if args.lam is not None else dg_pick_lambda(args.d, q)
    return jsonio.section_to_json(dg_find_section(args.d, q, lam))


def cmd_nf(args):
    f = jsonio.poly4_from_json(load_json_arg(args.poly))
    return jsonio.poly4_to_json(nf_bundle(f, _bundle(args.bundle)))


def cmd_verify(args):
    lhs = jsonio.poly4_from_json(load_json_arg(args.lhs))
    rhs = jsonio.poly4_from_json(load_json_arg(args.rhs))
    chk = verify_identity(lhs, rhs, _bundle(args.bundle))
    return jsonio.identity_to_json(chk), (EXIT_OK if chk.passes else EXIT_FAILED)


def cmd_verify_paper(args):
    result = run_suite()
    return result, (EXIT_OK if result["passed"] else EXIT_FAILED)


def cmd_corpus(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in corpus.CORPUS:
        doc = {"name": entry.name, "notes": entry.notes, **jsonio.bundle_to_json(entry.spec)}
        path = out / f"{entry.name}.json"
        path.write_text(jsonio.dumps(doc), encoding="utf-8")
        written.append(path.name)
    return {"written": written}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gabundle", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normal form of a Laurent cocycle")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("canonicalize", help="canonical X(m, n, p) for x^-m y^-n p")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True)
    p.set_defaults(func=cmd_canonicalize)

    for name, func in (("decompose", cmd_decompose), ("degree", cmd_degree)):
        p = sub.add_parser(name)
        p.add_argument("--class", dest="cls", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("pullback", help="pull a class back along an automorphism word")
    p.add_argument("--auto", required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--path", choices=("expansion", "dual"), default="expansion")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.set_defaults(func=cmd_pullback)

    for name, func in (("h3", cmd_h3), ("exotic", cmd_exotic)):
        p = sub.add_parser(name)
        p.add_argument("--bundle", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("compare", help="isomorphy verdict for two bundles")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--pairs")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("descend", help="cocycle on P^1 of a homogeneous class")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--component")
    g.add_argument("--class", dest="cls")
    p.set_defaults(func=cmd_descend)

    p = sub.add_parser("p1-normalize")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_p1_normalize)

    p = sub.add_parser("dg-section", help="rational section with a pole of order d-1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=cmd_dg_section)

    p = sub.add_parser("nf", help="normal form modulo the bundle relator")
    p.add_argument("--poly", required=True)
    p.add_argument("--bundle", required=True)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("verify", help="check lhs == rhs in the coordinate ring")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--bundle", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("corpus", help="write the named example bundles as JSON files")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_corpus)
    return ap


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except InputError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        # shape problems caught by constructors (wrong lengths, d < 2, q(0) != 0, ...)
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    stdout.write(jsonio.dumps(result))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
