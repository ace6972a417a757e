"""Report rendering: stable text and a fixed-key JSON schema.

Every report converts to a plain dict with a ``kind`` key; JSON output is
that dict dumped with sorted keys, so the bytes depend only on the input.
Arrow and object indices are replaced by their names when a naming context
is supplied.

Kinds and their keys:

- ``law``: valid, violations[{law, witness, detail}]
- ``commutativity``: commutes, conflicts[{source, target, path1, path2, composite1, composite2}]
- ``objects``: role, objects
- ``products``: entries[{a, b, apex, chi1, chi2}] (apex null when absent)
- ``exponentials``: entries[{base, exponent, object, eval}]
- ``ccc``: is_ccc, terminal, products, exponentials, failures
- ``lawvere``: valid, checked, point_surjections[{a, b, phi}], fixed_points[{phi, g, point}], violations
- ``universe``: is_universe, size, axioms{name: {holds, witness}}
"""
from __future__ import annotations

import json
from functools import singledispatch

from .category import FinCategory, LawReport
from .diagram import CommutativityReport, Diagram
from .foundations import FixedPointReport, UniverseReport
from .universal import CCCReport


def _arrow_name(C, f):
    return "undefined" if f is None else (C.name(f) if C is not None else f)


def _object_name(C, X):
    return "undefined" if X is None else (C.objects[X] if C is not None else X)


def _category_namer(C):
    def name(v):
        if v.law == "identity-typing":
            return [_arrow_name(C, f) for f in v.witness], [_object_name(C, X) for X in v.detail]
        return [_arrow_name(C, f) for f in v.witness], [_arrow_name(C, f) for f in v.detail]
    return name


def _functor_namer(F):
    def name(v):
        return ([_arrow_name(F.source, f) for f in v.witness],
                [_arrow_name(F.target, f) for f in v.detail])
    return name


def _nat_namer(t):
    return _functor_namer(t.F)


def adjunction_namer(S):
    A, B = S.A, S.B

    def name(v):
        part = v.law.split(":", 1)[0]
        if part == "left-adjoint":
            return _functor_namer(S.F)(v)
        if part == "right-adjoint":
            return _functor_namer(S.G)(v)
        if part == "unit":
            return _category_namer(A)(v)
        if part == "counit":
            return _category_namer(B)(v)
        if v.law == "left-triangle":
            return [_object_name(A, X) for X in v.witness], [v.detail[0]] + [_arrow_name(B, f) for f in v.detail[1:]]
        if v.law == "right-triangle":
            return [_object_name(B, X) for X in v.witness], [v.detail[0]] + [_arrow_name(A, f) for f in v.detail[1:]]
        return list(v.witness), list(v.detail)
    return name


def namer_for(subject):
    """Pick the naming scheme for a law report about ``subject``."""
    from .adjunction import AdjointSituation
    from .functor import Functor, NaturalTransformation
    if isinstance(subject, FinCategory):
        return _category_namer(subject)
    if isinstance(subject, Functor):
        return _functor_namer(subject)
    if isinstance(subject, NaturalTransformation):
        return _nat_namer(subject)
    if isinstance(subject, AdjointSituation):
        return adjunction_namer(subject)
    return _category_namer(None)


@singledispatch
def report_data(report, context=None) -> dict:
    if isinstance(report, dict):
        return report
    raise TypeError(f"no renderer for {type(report).__name__}")


@report_data.register
def _(report: LawReport, context=None):
    name = context if callable(context) else namer_for(context)
    rows = []
    for v in report.violations:
        w, d = name(v)
        rows.append({"law": v.law, "witness": w, "detail": d})
    return {"kind": "law", "valid": report.valid, "violations": rows}


@report_data.register
def _(report: CommutativityReport, context: Diagram = None):
    C = context.category if context is not None else None

    def path(p):
        if context is None:
            return list(p)
        return [C.name(context.edges[i][2]) for i in p]

    rows = []
    for c in report.conflicts:
        rows.append({"source": c.source, "target": c.target, "path1": path(c.path1),
                     "path2": path(c.path2), "composite1": _arrow_name(C, c.composite1),
                     "composite2": _arrow_name(C, c.composite2)})
    return {"kind": "commutativity", "commutes": report.commutes, "conflicts": rows}


def _cone(C, cone):
    return None if cone is None else {"apex": _object_name(C, cone.apex), "chi1": _arrow_name(C, cone.chi1),
                                      "chi2": _arrow_name(C, cone.chi2)}


def product_rows(C, table) -> list:
    rows = []
    for (A, B), cone in sorted(table.items()):
        row = {"a": C.objects[A], "b": C.objects[B], "apex": None, "chi1": None, "chi2": None}
        if cone is not None:
            row.update(_cone(C, cone))
        rows.append(row)
    return rows


def exponential_rows(C, table) -> list:
    rows = []
    for (A, B), exp in sorted(table.items()):
        rows.append({"exponent": C.objects[A], "base": C.objects[B],
                     "object": None if exp is None else C.objects[exp.exp_object],
                     "eval": None if exp is None else C.name(exp.eval)})
    return rows


@report_data.register
def _(report: CCCReport, context: FinCategory = None):
    C = context
    return {"kind": "ccc", "is_ccc": report.is_ccc,
            "terminal": None if report.terminal is None else _object_name(C, report.terminal),
            "products": product_rows(C, report.product_table),
            "exponentials": exponential_rows(C, report.exp_table),
            "failures": list(report.failures)}


@report_data.register
def _(report: FixedPointReport, context: FinCategory = None):
    C = context
    return {"kind": "lawvere", "valid": report.valid, "checked": report.checked,
            "point_surjections": [{"a": _object_name(C, A), "b": _object_name(C, B), "phi": _arrow_name(C, phi)}
                                  for A, B, phi in report.point_surjections],
            "fixed_points": [{"phi": _arrow_name(C, phi), "g": _arrow_name(C, g), "point": _arrow_name(C, b)}
                             for (phi, g), b in sorted(report.fixed_points.items())],
            "violations": [{"a": _object_name(C, A), "b": _object_name(C, B), "phi": _arrow_name(C, phi),
                            "g": _arrow_name(C, g)} for A, B, phi, g in report.violations]}


@report_data.register
def _(report: UniverseReport, context=None):
    return {"kind": "universe", "is_universe": report.is_universe, "size": report.size,
            "axioms": {k: {"holds": r.holds, "witness": None if r.witness is None else [str(x) for x in r.witness]}
                       for k, r in report.axioms().items()}}


# -- text ---------------------------------------------------------------------

def _status(ok):
    return "OK" if ok else "FAIL"


def _text(doc, title) -> list:
    kind = doc["kind"]
    head = f"{title} " if title else ""
    if kind == "law":
        n = len(doc["violations"])
        lines = [f"{_status(doc['valid'])} {head}" + ("all laws hold" if doc["valid"] else f"{n} violation(s)")]
        for v in doc["violations"]:
            detail = f" -> {', '.join(map(str, v['detail']))}" if v["detail"] else ""
            lines.append(f"  {v['law']}: {', '.join(map(str, v['witness']))}{detail}")
        return lines
    if kind == "commutativity":
        lines = [f"{_status(doc['commutes'])} {head}" + ("commutes" if doc["commutes"]
                                                         else f"{len(doc['conflicts'])} conflict(s)")]
        for c in doc["conflicts"]:
            p1 = " ; ".join(c["path1"]) or "(empty path)"
            p2 = " ; ".join(c["path2"]) or "(empty path)"
            lines.append(f"  {c['source']} -> {c['target']}: [{p1}] = {c['composite1']}"
                         f" but [{p2}] = {c['composite2']}")
        return lines
    if kind == "objects":
        objs = ", ".join(doc["objects"]) or "none"
        return [f"{_status(bool(doc['objects']))} {head}{doc['role']} objects: {objs}"]
    if kind == "products":
        rows = doc["entries"]
        lines = [f"{_status(all(r['apex'] is not None for r in rows))} {head}products"]
        for r in rows:
            val = "none" if r["apex"] is None else f"{r['apex']} ({r['chi1']}, {r['chi2']})"
            lines.append(f"  {r['a']} x {r['b']} = {val}")
        return lines
    if kind == "exponentials":
        rows = doc["entries"]
        lines = [f"{_status(all(r['object'] is not None for r in rows))} {head}exponentials"]
        for r in rows:
            val = "none" if r["object"] is None else f"{r['object']} (eval {r['eval']})"
            lines.append(f"  {r['base']}^{r['exponent']} = {val}")
        return lines
    if kind == "ccc":
        lines = [f"{_status(doc['is_ccc'])} {head}" + ("cartesian closed" if doc["is_ccc"] else "not cartesian closed"),
                 f"  terminal: {doc['terminal'] or 'none'}"]
        lines += _text({"kind": "products", "entries": doc["products"]}, "")[1:]
        lines += _text({"kind": "exponentials", "entries": doc["exponentials"]}, "")[1:]
        lines += [f"  failure: {f}" for f in doc["failures"]]
        return lines
    if kind == "lawvere":
        lines = [f"{_status(doc['valid'])} {head}fixed-point sweep: {doc['checked']} arrows checked, "
                 f"{len(doc['point_surjections'])} point-surjective, {len(doc['violations'])} violation(s)"]
        for p in doc["point_surjections"]:
            lines.append(f"  point-surjective {p['phi']}: {p['a']} -> {p['b']}^{p['a']}")
        for v in doc["violations"]:
            lines.append(f"  no fixed point for {v['g']} despite {v['phi']}")
        return lines
    if kind == "universe":
        lines = [f"{_status(doc['is_universe'])} {head}universe axioms over {doc['size']} element(s)"]
        for k, r in doc["axioms"].items():
            w = "" if r["witness"] is None else f" witness {' '.join(r['witness'])}"
            lines.append(f"  {k}: {'holds' if r['holds'] else 'fails'}{w}")
        return lines
    return [f"{head}{json.dumps(doc, sort_keys=True)}"]


def render_text(doc: dict, title: str = "") -> str:
    return "\n".join(_text(doc, title)) + "\n"


def render_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(report, format: str = "text", context=None, title: str = "") -> str:
    """Render any workbench report as ``text`` or ``json``."""
    doc = report_data(report, context)
    if format == "json":
        return render_json(doc)
    if format == "text":
        return render_text(doc, title)
    raise ValueError(f"unknown format {format!r}")
