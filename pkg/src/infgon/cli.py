"""Command line interface.

Subcommands read the family document format and print human text, or a
stable machine-readable form under --json.  Exit status: 0 success, 1
domain verdict failure (invalid family, not maximal, not mutable, ...),
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO, Optional, Sequence

from . import encode, oracle
from .arcs import Arc, Valid, Window, arcs_in_window, classify, validate_family
from .dsl import ParseError, parse_document, parse_family, serialize_family
from .homcalc import hom_dim, morphism_kind
from .mutation import NotMember, NotMutable, exchange_arc, mutate
from .quiver import cluster_quiver, to_dot
from .render import render_svg
from .triangulation import (
    Certified,
    Crossing,
    Fountain,
    LocallyFinite,
    Maximal,
    Missing,
    Refuted,
    SplitFountains,
    Unknown,
    certify_global_maximal,
    functorially_finite,
    is_window_maximal,
)

__all__ = ["run_command", "main"]


class _UsageError(Exception):
    pass


def _parse_pair(text: str) -> Arc:
    try:
        m, n = (int(t) for t in text.split(","))
        return Arc(m, n)
    except ValueError as e:
        raise _UsageError(f"bad coordinate pair {text!r}: {e}") from None


def _parse_window(text: str) -> Window:
    try:
        lo, hi = (int(t) for t in text.split(":"))
        return Window(lo, hi)
    except ValueError as e:
        raise _UsageError(f"bad window {text!r}: {e}") from None


def _load_family(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_family(fh.read())
    except OSError as e:
        raise _UsageError(str(e)) from None


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="infgon", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def fam_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        c = sub.add_parser(name, help=help_)
        c.add_argument("file", help="family document")
        c.add_argument("--json", action="store_true")
        return c

    fam_cmd("validate", "check the family invariants")
    fam_cmd("classify", "report fountains and local finiteness")

    c = fam_cmd("maximal", "window maximality or a global certificate")
    c.add_argument("--window", metavar="LO:HI")

    fam_cmd("ff", "functorial finiteness of a certified maximal family")

    c = sub.add_parser("hom", help="Hom dimension between two coordinates")
    c.add_argument("--x", required=True, metavar="M,N")
    c.add_argument("--y", required=True, metavar="P,Q")
    c.add_argument("--json", action="store_true")

    c = fam_cmd("mutate", "flip an arc of a maximal family")
    c.add_argument("--arc", required=True, metavar="M,N")
    c.add_argument("-o", "--output", metavar="OUT")

    c = fam_cmd("quiver", "cluster quiver on a window")
    c.add_argument("--window", required=True, metavar="LO:HI")
    c.add_argument("--dot", action="store_true")

    c = sub.add_parser("render", help="SVG diagram of a family or its quiver")
    c.add_argument("file")
    c.add_argument("--window", required=True, metavar="LO:HI")
    c.add_argument("-o", "--output", required=True, metavar="OUT.svg")
    c.add_argument("--subject", choices=("arcs", "quiver"), default="arcs")

    c = sub.add_parser("oracle", help="run the brute-force window suite")
    c.add_argument("--vertices", type=int, default=8)
    c.add_argument("--json", action="store_true")

    c = sub.add_parser("serve", help="stateless HTTP service")
    c.add_argument("--port", type=int, required=True)
    c.add_argument("--host", default="127.0.0.1")
    return p


def run_command(
    argv: Sequence[str],
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _dispatch(args, out, err)
    except (_UsageError, ParseError) as e:
        print(f"error: {e}", file=err)
        return 2


def _dispatch(args, out, err) -> int:
    if args.command == "validate":
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise _UsageError(str(e)) from None
        doc = parse_document(text)  # syntax errors exit 2 via ParseError
        try:
            family = doc.family()
        except ValueError as e:
            if args.json:
                out.write(encode.dumps({"valid": False, "kind": "removal", "message": str(e)}))
            else:
                print(f"invalid: {e}", file=err)
            return 1
        verdict = validate_family(family)
        if args.json:
            out.write(encode.dumps(encode.validation_json(verdict)))
        elif isinstance(verdict, Valid):
            print("valid", file=out)
        else:
            print(f"invalid: {encode.validation_json(verdict)}", file=err)
        return 0 if isinstance(verdict, Valid) else 1

    if args.command == "classify":
        family = _load_family(args.file)
        cls = classify(family)
        if args.json:
            out.write(encode.dumps(encode.classification_json(cls)))
        else:
            print(f"locally finite: {'yes' if cls.locally_finite else 'no'}", file=out)
            print(f"left fountains: {sorted(cls.left_fountains)}", file=out)
            print(f"right fountains: {sorted(cls.right_fountains)}", file=out)
            print(f"fountains: {sorted(cls.fountains)}", file=out)
        return 0

    if args.command == "maximal":
        family = _load_family(args.file)
        if args.window:
            verdict = is_window_maximal(family, _parse_window(args.window))
            if args.json:
                out.write(encode.dumps(encode.maximality_json(verdict)))
            else:
                if isinstance(verdict, Maximal):
                    print("maximal on the window", file=out)
                elif isinstance(verdict, Missing):
                    print(f"not maximal: {verdict.witness} fits", file=out)
                else:
                    print(f"not valid: {verdict.first} crosses {verdict.second}", file=out)
            return 0 if isinstance(verdict, Maximal) else 1
        cert = certify_global_maximal(family)
        if args.json:
            out.write(encode.dumps(encode.certificate_json(cert)))
        else:
            if isinstance(cert, Certified):
                print(f"certified maximal (window [{cert.window.lo}, {cert.window.hi}])", file=out)
            elif isinstance(cert, Refuted):
                print(f"not maximal: {cert.witness} fits", file=out)
            else:
                print(f"unknown: {cert.reason}", file=out)
        return 0 if isinstance(cert, Certified) else 1

    if args.command == "ff":
        family = _load_family(args.file)
        try:
            verdict = functorially_finite(family)
        except ValueError as e:
            print(f"error: {e}", file=err)
            return 1
        if args.json:
            out.write(encode.dumps(encode.ff_json(verdict)))
        else:
            r = verdict.reason
            if isinstance(r, LocallyFinite):
                why = "locally finite"
            elif isinstance(r, Fountain):
                why = f"fountain at {r.vertex}"
            else:
                why = f"split fountains (left at {r.left}, right at {r.right})"
            yn = "yes" if verdict.functorially_finite else "no"
            print(f"functorially finite: {yn} ({why})", file=out)
        return 0 if verdict.functorially_finite else 1

    if args.command == "hom":
        x, y = _parse_pair(args.x), _parse_pair(args.y)
        d = hom_dim(x, y)
        if args.json:
            out.write(
                encode.dumps(
                    {
                        "x": encode.arc_json(x),
                        "y": encode.arc_json(y),
                        "hom": d,
                        "kind": morphism_kind(x, y).value,
                        "reverse": hom_dim(y, x),
                    }
                )
            )
        else:
            print(d, file=out)
        return 0

    if args.command == "mutate":
        family = _load_family(args.file)
        a = _parse_pair(args.arc)
        try:
            star = exchange_arc(family, a)
            new = mutate(family, a)
        except (NotMember, NotMutable) as e:
            if args.json:
                out.write(
                    encode.dumps(
                        {"ok": False, "kind": type(e).__name__, "message": str(e)}
                    )
                )
            else:
                print(f"not mutable: {e}", file=err)
            return 1
        doc = serialize_family(new)
        if args.json:
            out.write(
                encode.dumps(
                    {
                        "ok": True,
                        "family": doc,
                        "exchanged": encode.arc_json(star),
                        "removed": encode.arc_json(a),
                    }
                )
            )
        elif args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(doc)
        else:
            out.write(doc)
        return 0

    if args.command == "quiver":
        family = _load_family(args.file)
        q = cluster_quiver(family, _parse_window(args.window))
        if args.json:
            out.write(encode.dumps(encode.quiver_json(q)))
        elif args.dot:
            out.write(to_dot(q))
        else:
            print(f"{len(q.vertices)} vertices, {len(q.arrows)} arrows", file=out)
            for u, v in q.arrows:
                print(f"  {u} -> {v}", file=out)
        return 0

    if args.command == "render":
        family = _load_family(args.file)
        w = _parse_window(args.window)
        subject = cluster_quiver(family, w) if args.subject == "quiver" else family
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(render_svg(subject, w))
        return 0

    if args.command == "oracle":
        limit = oracle.oracle_limit()
        if args.vertices < 4:
            raise _UsageError("need at least 4 vertices")
        if args.vertices > limit:
            raise _UsageError(
                f"--vertices {args.vertices} exceeds the limit {limit} "
                f"(set {oracle.ORACLE_LIMIT_ENV} to raise it)"
            )
        lines: list[str] = []
        ok = oracle.run_suite(args.vertices, report=lines.append)
        if args.json:
            out.write(encode.dumps({"ok": ok, "report": lines}))
        else:
            for line in lines:
                print(line, file=out)
        return 0 if ok else 1

    if args.command == "serve":
        from .service import serve

        serve(args.host, args.port)
        return 0

    raise _UsageError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
