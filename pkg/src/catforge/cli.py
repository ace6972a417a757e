"""``catforge`` command line.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
parse, resolution or elaboration errors, or when a size cap is hit.
"""
from __future__ import annotations

import argparse
import hashlib
import os
import sys

from . import caps
from .category import find_initial, find_terminal
from .diagram import check_commutes
from .errors import CatforgeError, CycleError
from .finset import finite_set, finset_category, function_space_window
from .foundations import (
    HFSet,
    HFSetSyntaxError,
    check_universe_axioms,
    lawvere_fixed_point_check,
    sets_of_rank_at_most,
)
from .lang import category_decl, elaborate, parse_catfile, serialize
from .lang.syntax import CategorySpec, LocatedError, ParseError
from .report import (
    exponential_rows,
    namer_for,
    product_rows,
    render_json,
    render_text,
    report_data,
)
from .universal import canonical_exponential, canonical_product, check_cartesian_closed

FILE_COMMANDS = ("check", "commutes", "initial", "terminal", "products", "exponentials", "ccc",
                 "functor-check", "nat-check", "adjunction-check")


class UsageError(Exception):
    pass


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return data, data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise UsageError(f"{path} is not UTF-8 (byte {e.start})") from None


def _where(decl_span):
    return f"{decl_span.line}:{decl_span.column}"


def _law_results(ws, kinds, subjects):
    out = []
    for c in ws.checks:
        if c.kind in kinds:
            subject = subjects[c.kind][c.name]
            out.append((f"{c.kind} {c.name}", c.span, report_data(c.report, namer_for(subject))))
    return out


def _decl_spans(spec: CategorySpec, kind):
    return {d.name.text: d.span for d in spec.of_kind(kind)}


def _file_results(command, ws, args):
    from .lang.syntax import CategoryDecl, DiagramDecl
    cats = ws.categories
    spans = _decl_spans(ws.spec, CategoryDecl)
    subjects = {"category": cats, "functor": ws.functors, "nat": ws.nats, "adjunction": ws.adjunctions}
    if command == "check":
        return _law_results(ws, ("category", "functor", "nat", "adjunction"), subjects)
    if command in ("functor-check", "nat-check", "adjunction-check"):
        return _law_results(ws, (command.split("-")[0],), subjects)
    if command == "commutes":
        names = sorted(ws.diagrams) if args.diagram is None else [args.diagram]
        dspans = _decl_spans(ws.spec, DiagramDecl)
        out = []
        for n in names:
            if n not in ws.diagrams:
                raise UsageError(f"no diagram named {n!r}")
            D = ws.diagrams[n]
            try:
                report = check_commutes(D, args.max_length)
            except CycleError as e:
                raise LocatedError(f"diagram {n}: {e}", dspans[n].line, dspans[n].column) from None
            out.append((f"diagram {n}", dspans[n], report_data(report, D)))
        return out
    out = []
    for name, C in cats.items():
        title, span = f"category {name}", spans[name]
        if command in ("initial", "terminal"):
            found = (find_initial if command == "initial" else find_terminal)(C)
            doc = {"kind": "objects", "role": command, "objects": [C.objects[X] for X in found]}
        elif command == "products":
            table = {(A, B): canonical_product(C, A, B) for A in range(C.n_objects) for B in range(C.n_objects)}
            doc = {"kind": "products", "entries": product_rows(C, table)}
        elif command == "exponentials":
            table = {}
            for A in range(C.n_objects):
                has_products = all(canonical_product(C, X, A) is not None for X in range(C.n_objects))
                for B in range(C.n_objects):
                    table[(A, B)] = canonical_exponential(C, A, B) if has_products else None
            doc = {"kind": "exponentials", "entries": exponential_rows(C, table)}
        elif command == "ccc":
            doc = report_data(check_cartesian_closed(C), C)
        elif command == "lawvere":
            report = check_cartesian_closed(C)
            if not report.is_ccc:
                doc = {"kind": "lawvere", "valid": False, "checked": 0, "point_surjections": [],
                       "fixed_points": [], "violations": [],
                       "precondition": f"not cartesian closed: {report.failures[0]}"}
            else:
                doc = report_data(lawvere_fixed_point_check(C, report.exp_table), C)
        out.append((title, span, doc))
    return out


def _ok(doc) -> bool:
    kind = doc["kind"]
    if kind == "law" or kind == "lawvere":
        return doc["valid"]
    if kind == "commutativity":
        return doc["commutes"]
    if kind == "objects":
        return bool(doc["objects"])
    if kind == "products":
        return all(r["apex"] is not None for r in doc["entries"])
    if kind == "exponentials":
        return all(r["object"] is not None for r in doc["entries"])
    if kind == "ccc":
        return doc["is_ccc"]
    if kind == "universe":
        return doc["is_universe"]
    return True


def _emit(args, source, digest, results):
    ok = all(_ok(doc) for _, _, doc in results)
    if args.json:
        payload = {"command": args.command, "input": {"source": source, "sha256": digest}, "ok": ok,
                   "results": [{"subject": title,
                                "location": None if span is None else {"line": span.line, "column": span.column},
                                "report": doc} for title, span, doc in results]}
        sys.stdout.write(render_json(payload))
    else:
        lines = [f"input {source} sha256 {digest}"]
        for title, span, doc in results:
            label = title if span is None else f"{title} @{_where(span)}"
            lines.append(render_text(doc, label).rstrip("\n"))
        if not results:
            lines.append("OK nothing to check")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def _error(args, source, digest, err):
    info = {"type": type(err).__name__, "message": getattr(err, "message", str(err))}
    if isinstance(err, LocatedError):
        info.update(line=err.line, column=err.column)
        if isinstance(err, ParseError):
            info.update(token=err.token, expected=list(err.expected))
        text = f"{source}:{err.line}:{err.column}: error: {err.message}"
    elif isinstance(err, HFSetSyntaxError):
        info.update(line=1, column=err.column)
        text = f"{source}:1:{err.column}: error: {err}"
    else:
        text = f"{source}: error: {err}"
    if getattr(args, "json", False):
        sys.stdout.write(render_json({"command": args.command, "input": {"source": source, "sha256": digest},
                                      "ok": False, "error": info}))
    sys.stderr.write(text + "\n")
    return 2


def _sizes(values):
    try:
        sizes = [int(v) for v in values]
    except ValueError:
        raise UsageError("set sizes must be integers") from None
    if any(s < 0 for s in sizes):
        raise UsageError("set sizes must be non-negative")
    return sizes


def finset_names(sizes) -> list:
    """``One`` for the first singleton, ``S<n>`` otherwise, suffixed on repeats."""
    names, seen = [], {}
    for s in sizes:
        base = "One" if s == 1 and "One" not in seen else f"S{s}"
        k = seen.get(base, 0)
        seen[base] = k + 1
        names.append(base if k == 0 else f"{base}_{k}")
    return names


def _run_generate(args):
    if args.kind != "finset":
        raise UsageError(f"unknown generator {args.kind!r}")
    sizes = _sizes(args.sizes)
    sets = [finite_set(n, s) for n, s in zip(finset_names(sizes), sizes)]
    C = finset_category(sets)
    header = "# finite sets of sizes " + " ".join(map(str, sizes)) + "\n"
    text = header + serialize(CategorySpec((category_decl(C, args.name),)))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _run_universe(args):
    if args.rank is not None:
        source = f"rank<={args.rank}"
        digest = _digest(source.encode())
        U = sets_of_rank_at_most(args.rank)
    else:
        if args.set is None:
            raise UsageError("universe needs a nested-brace set, a file holding one, or --rank")
        if os.path.isfile(args.set):
            data, text = _read(args.set)
            source = args.set
        else:
            text = args.set
            data, source = text.encode("utf-8"), "<argument>"
        digest = _digest(data)
        try:
            U = HFSet.parse(text.strip()).sorted_children()
        except HFSetSyntaxError as e:
            return _error(args, source, digest, e)
    try:
        report = check_universe_axioms(U)
    except CatforgeError as e:
        return _error(args, source, digest, e)
    return _emit(args, source, digest, [("universe", None, report_data(report))])


def _run_lawvere_finset(args):
    sizes = _sizes(args.finset)
    source = "finset " + " ".join(map(str, sizes))
    digest = _digest(source.encode())
    if 1 not in sizes:
        sizes = sizes + [1]
    sets = [finite_set(n, s) for n, s in zip(finset_names(sizes), sizes)]
    try:
        W, exps = function_space_window(sets)
        report = lawvere_fixed_point_check(W, exps, terminal=W.object_of(sets[sizes.index(1)]))
    except CatforgeError as e:
        return _error(args, source, digest, e)
    return _emit(args, source, digest, [("finite sets", None, report_data(report, W))])


def _run_file(args):
    data, text = _read(args.file)
    digest = _digest(data)
    try:
        ws = elaborate(parse_catfile(text))
        results = _file_results(args.command, ws, args)
    except (CatforgeError, RecursionError) as e:
        return _error(args, args.file, digest, e)
    return _emit(args, args.file, digest, results)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catforge", description="Check finite categories and their structure.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--cap", type=int, help=f"size cap (overrides {caps.ENV_VAR})")

    for name in FILE_COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("file")
        common(sp)
        if name == "commutes":
            sp.add_argument("--diagram", help="check only this diagram")
            sp.add_argument("--max-length", type=int, help="bound path length (needed for cyclic diagrams)")

    sp = sub.add_parser("lawvere", help="fixed-point sweep over a file's categories or finite sets")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--finset", nargs="+", metavar="SIZE", help="sweep finite sets of these sizes")
    common(sp)

    sp = sub.add_parser("universe", help="Grothendieck universe axioms on hereditarily finite sets")
    sp.add_argument("set", nargs="?", help="nested-brace set whose elements form U, or a file holding it")
    sp.add_argument("--rank", type=int, help="use all sets of rank at most this")
    common(sp)

    sp = sub.add_parser("generate", help="emit a .cat file")
    sp.add_argument("kind", choices=["finset"])
    sp.add_argument("sizes", nargs="+")
    sp.add_argument("--name", default="FinSet")
    sp.add_argument("-o", "--output")
    sp.add_argument("--cap", type=int)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    with caps.override(args.cap):
        return _dispatch(args)


def _dispatch(args) -> int:
    try:
        if args.command == "generate":
            return _run_generate(args)
        if args.command == "universe":
            return _run_universe(args)
        if args.command == "lawvere":
            if args.finset:
                return _run_lawvere_finset(args)
            if not args.file:
                raise UsageError("lawvere needs a file or --finset SIZES")
        return _run_file(args)
    except UsageError as e:
        sys.stderr.write(f"catforge: error: {e}\n")
        return 2
    except CatforgeError as e:
        sys.stderr.write(f"catforge: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
