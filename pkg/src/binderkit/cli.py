"""Command-line interface: ``binderkit <command> ...``.

Exit codes: 0 success, 1 scope error, 2 type error, 3 parse error,
4 property counterexample, 5 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from .cyclic import spine, unfold
from .deep import deep_call
from .desc import utlc_desc
from .equality import eq_term
from .nbe import OutOfFuel, norm, utlc_alg
from .printing import DISPLAYS, print_term, to_sexpr
from .relations import SAMPLING_NOTE, fusion_suite, simulation_suite
from .scopecheck import NodeSortError, OutOfScope, RawShapeError, WrongSort, to_tm
from .sexpr import ParseError, StlcTypeError, parse, parse_stlc, parse_type, read, stlc_debruijn
from .sorts import CHECK, encode_type
from .sugar import optimise, unlet
from .syntaxes import SYNTAXES
from .typecheck import check, elaborate, infer

OK, SCOPE, TYPE, PARSE, COUNTEREXAMPLE, USAGE = range(6)

EXTENSIONS = {".utlc": "utlc", ".bidi": "bidi", ".stlc": "stlc", ".let": "utlc+let", ".clist": "clist"}


class Failure(Exception):
    """A command failed; carries everything needed to report it."""

    def __init__(self, kind: str, message: str, code: int, pos: Optional[tuple] = None,
                 verdict: bool = False):
        super().__init__(message)
        self.kind, self.message, self.code, self.pos = kind, message, code, pos
        self.verdict = verdict  # an answer rather than a diagnostic: goes to stdout


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise Failure("usage", message, USAGE)


@dataclass
class Program:
    syntax: str
    sort: Any
    term: Any

    @property
    def desc(self):
        return SYNTAXES[self.syntax].desc


def _syntax_for(path: str, override: Optional[str]) -> str:
    if override:
        return override
    ext = Path(path).suffix
    if ext not in EXTENSIONS:
        raise Failure("usage", f"cannot tell the syntax of {path!r}; pass --syntax", USAGE)
    return EXTENSIONS[ext]


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise Failure("usage", f"cannot read {path}: {exc}", USAGE) from None


def load(path: str, syntax: Optional[str], top: Any = None) -> Program:
    """Parse and scope check a program file."""
    name = _syntax_for(path, syntax)
    text = _read(path)
    try:
        info = SYNTAXES[name]
        if name == "stlc":
            sort, raw = parse_stlc(text)
        else:
            raw = parse(name, text)
            sort = info.top if top is None else top
        return Program(name, sort, to_tm(info.desc, (), (), sort, raw))
    except ParseError as exc:
        raise Failure("parse", exc.message, PARSE, exc.pos) from None
    except RawShapeError as exc:
        raise Failure("parse", exc.message, PARSE, exc.meta) from None
    except (OutOfScope, WrongSort) as exc:
        raise Failure(type(exc).__name__, exc.message, SCOPE, exc.meta) from None
    except (NodeSortError, StlcTypeError) as exc:
        raise Failure("type", exc.message, TYPE, exc.meta) from None


def _need(prog: Program, *syntaxes: str) -> None:
    if prog.syntax not in syntaxes:
        raise Failure("usage", f"this command needs a {' or '.join(syntaxes)} program, got {prog.syntax}", USAGE)


def _candidate(args) -> Any:
    if args.type is None:
        return None
    try:
        return parse_type(read(args.type))
    except ParseError as exc:
        raise Failure("parse", f"in --type: {exc.message}", PARSE, None) from None


def cmd_check(args):
    cand = _candidate(args)
    prog = load(args.file, args.syntax, CHECK if cand is not None and _is_bidi(args) else None)
    if prog.syntax == "bidi":
        ok = check(prog.term, cand) if cand is not None else infer(prog.term)
        if not ok:
            raise Failure("type", "ill-typed", TYPE, verdict=True)
        return encode_type(cand if cand is not None else ok)
    if prog.syntax == "stlc":
        return encode_type(prog.sort)
    return "ok"


def _is_bidi(args) -> bool:
    return _syntax_for(args.file, args.syntax) == "bidi"


def cmd_elab(args):
    cand = _candidate(args)
    prog = load(args.file, args.syntax, CHECK if cand is not None else None)
    _need(prog, "bidi")
    if cand is not None:
        out = elaborate(prog.term)(cand)
        out = None if out is None else (cand, out)
    else:
        out = elaborate(prog.term)
    if out is None:
        raise Failure("type", "ill-typed", TYPE, verdict=True)
    ty, term = out
    return f"{encode_type(ty)}\n{stlc_debruijn(term)}"


def cmd_unlet(args):
    prog = load(args.file, args.syntax)
    _need(prog, "utlc+let")
    return to_sexpr("utlc", utlc_desc(), (), unlet(utlc_desc(), prog.term))


def cmd_inline(args):
    prog = load(args.file, args.syntax)
    _need(prog, "utlc+let")
    return to_sexpr("utlc+let", prog.desc, (), optimise(utlc_desc(), prog.term))


def cmd_norm(args):
    prog = load(args.file, args.syntax)
    _need(prog, "utlc")
    try:
        out = norm(prog.desc, utlc_alg, prog.term, (), args.fuel)
    except OutOfFuel as exc:
        raise Failure("fuel", str(exc), TYPE) from None
    except RecursionError:
        raise Failure("fuel", "evaluation nested too deeply; the term may not normalise (try --fuel)",
                      TYPE) from None
    if out is None:
        raise Failure("type", "evaluation failed", TYPE)
    return to_sexpr("utlc", prog.desc, (), out)


def cmd_print(args):
    prog = load(args.file, args.syntax)
    return print_term(prog.desc, DISPLAYS[prog.syntax], (), prog.term)


def cmd_eq(args):
    a = load(args.file1, args.syntax)
    b = load(args.file2, args.syntax)
    if a.syntax != b.syntax:
        raise Failure("usage", f"cannot compare {a.syntax} with {b.syntax}", USAGE)
    if a.sort != b.sort:
        return f"different: sorts {a.sort!r} and {b.sort!r}"
    res = eq_term(a.desc, a.term, b.term)
    if res:
        return "equal"
    return f"different at path {'.'.join(map(str, res.path)) or 'root'}: {res.reason}"


def cmd_unfold(args):
    prog = load(args.file, args.syntax)
    _need(prog, "clist")
    heads = spine(unfold(prog.desc, prog.term), args.depth)
    if heads and heads[-1] == "nil":
        return " :: ".join(map(str, heads))
    return " :: ".join(map(str, heads + ["…"]))


def cmd_prop(args):
    run = fusion_suite if args.suite == "fusion" else simulation_suite
    reports = run(n=args.samples, depth=args.depth, seed=args.seed)
    lines = []
    for r in reports:
        lines.append(r.summary())
        lines.extend(f"  {c}" for c in r.counterexamples[:5])
    lines.append(f"note: {SAMPLING_NOTE}")
    failed = [r for r in reports if not r.passed]
    if failed:
        raise Failure("counterexample", "\n".join(lines), COUNTEREXAMPLE, verdict=True)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
    common.add_argument("--syntax", choices=sorted(SYNTAXES), help="override the file-extension default")

    p = _Parser(prog="binderkit", description="Scope-safe syntaxes with binding.")
    cmds = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = cmds.add_parser("check", parents=[common], help="scope check (and type check bidi)")
    c.add_argument("file")
    c.add_argument("--type", help="check a bidi program against this type instead of inferring")
    c.set_defaults(run=cmd_check)

    c = cmds.add_parser("elab", parents=[common], help="elaborate bidi into stlc")
    c.add_argument("file")
    c.add_argument("--type", help="candidate type for a checkable program")
    c.set_defaults(run=cmd_elab)

    for name, fn, text in [("unlet", cmd_unlet, "inline every let"),
                           ("inline", cmd_inline, "inline lets used at most once"),
                           ("print", cmd_print, "pretty-print with generated names")]:
        c = cmds.add_parser(name, parents=[common], help=text)
        c.add_argument("file")
        c.set_defaults(run=fn)

    c = cmds.add_parser("norm", parents=[common], help="normalise an untyped term")
    c.add_argument("file")
    c.add_argument("--fuel", type=_positive, default=None, help="step budget (default: unbounded)")
    c.set_defaults(run=cmd_norm)

    c = cmds.add_parser("eq", parents=[common], help="decide syntactic equality")
    c.add_argument("file1")
    c.add_argument("file2")
    c.set_defaults(run=cmd_eq)

    c = cmds.add_parser("unfold", parents=[common], help="unfold a cyclic list")
    c.add_argument("file")
    c.add_argument("--depth", type=_positive, required=True)
    c.set_defaults(run=cmd_unfold)

    c = cmds.add_parser("prop", parents=[common], help="run a sampled law suite")
    c.add_argument("--suite", choices=["simulation", "fusion"], required=True)
    c.add_argument("--samples", type=_positive, default=1000)
    c.add_argument("--depth", type=_positive, default=8)
    c.add_argument("--seed", type=int, default=42)
    c.set_defaults(run=cmd_prop)
    return p


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _emit(as_json: bool, result: Optional[str], failure: Optional[Failure]) -> None:
    if as_json:
        if failure is None:
            obj = {"status": "ok", "result": result}
        else:
            line, col = failure.pos if failure.pos else (None, None)
            obj = {"status": "error",
                   "error": {"kind": failure.kind, "message": failure.message, "line": line, "col": col}}
        print(json.dumps(obj, ensure_ascii=False))
    elif failure is None:
        print(result)
    else:
        where = f"{failure.pos[0]}:{failure.pos[1]}: " if failure.pos else ""
        if failure.verdict:
            print(failure.message)
        else:
            print(f"{where}{failure.kind}: {failure.message}", file=sys.stderr)


def run(argv: Sequence[str]) -> int:
    argv = list(argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        result = args.run(args)
    except Failure as f:
        _emit(as_json, None, f)
        return f.code
    _emit(as_json, result, None)
    return OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; runs on a thread with a large stack so deep terms fit."""
    argv = sys.argv[1:] if argv is None else argv
    return deep_call(run, argv)


if __name__ == "__main__":
    sys.exit(main())
