"""Command-line front end.

Curves come from JSON spec files (``--curve``) or a small expression
syntax (``--expr "z^2 - w^3"``). Results go to stdout as JSON, or CSV with
``--format csv``. Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import logging
import math
import re
import sys
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import intersect, monodromy, multifun, projection, puiseux
from .errors import DomainError, DuplicateTerm, SchemaError, UsageError
from .polycalc import BivarPoly, Disk, MPoly, roots, w_slice

log = logging.getLogger("curvelab")

TERM_KEYS = {"i", "j", "re", "im", "coeff"}


# -- curve specs ------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    i: int
    j: int
    re: float = 0.0
    im: float = 0.0
    coeff: str | None = None  # parameter expression, replaces re/im


@dataclass(frozen=True)
class CurveSpec:
    name: str
    terms: tuple
    params: dict = field(default_factory=dict)

    def poly(self) -> BivarPoly:
        """Evaluate symbolic coefficients with ``params`` and build the polynomial."""
        out = {}
        for k, t in enumerate(self.terms):
            if t.coeff is None:
                c = complex(t.re, t.im)
            else:
                try:
                    c = eval_constant(t.coeff, self.params)
                except UsageError as exc:
                    raise SchemaError(f"terms[{k}].coeff", str(exc)) from None
            out[(t.i, t.j)] = c
        return BivarPoly(out)


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _complex_field(value, path):
    if _is_number(value):
        return complex(value)
    if isinstance(value, dict) and set(value) <= {"re", "im"} and "re" in value:
        if not all(_is_number(v) for v in value.values()):
            raise SchemaError(path, "re/im must be numbers")
        return complex(value["re"], value.get("im", 0.0))
    raise SchemaError(path, "expected a number or {re, im}")


def parse_curve(text: str, params=None) -> CurveSpec:
    """Parse and validate a curve spec JSON document.

    ``params`` (name -> complex) override the document's own ``params``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise SchemaError("$", "top level must be an object")
    extra = set(doc) - {"name", "terms", "params"}
    if extra:
        raise SchemaError(f"$.{sorted(extra)[0]}", "unknown field")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("$.name", "must be a string")
    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        raise SchemaError("$.params", "must be an object")
    merged = {k: _complex_field(v, f"$.params.{k}") for k, v in raw_params.items()}
    merged.update({k: complex(v) for k, v in (params or {}).items()})
    terms = doc.get("terms")
    if not isinstance(terms, list) or not terms:
        raise SchemaError("$.terms", "must be a nonempty list")
    out, seen = [], set()
    for k, t in enumerate(terms):
        path = f"$.terms[{k}]"
        if not isinstance(t, dict):
            raise SchemaError(path, "must be an object")
        if set(t) - TERM_KEYS:
            raise SchemaError(f"{path}.{sorted(set(t) - TERM_KEYS)[0]}", "unknown field")
        for key in ("i", "j"):
            v = t.get(key)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise SchemaError(f"{path}.{key}", "must be an integer >= 0")
        if (t["i"], t["j"]) in seen:
            raise DuplicateTerm(f"{path}: duplicate term (i={t['i']}, j={t['j']})")
        seen.add((t["i"], t["j"]))
        if "coeff" in t:
            if "re" in t or "im" in t:
                raise SchemaError(path, "give either coeff or re/im, not both")
            if not isinstance(t["coeff"], str):
                raise SchemaError(f"{path}.coeff", "must be a string")
            out.append(Term(t["i"], t["j"], coeff=t["coeff"]))
            continue
        if "re" not in t:
            raise SchemaError(f"{path}.re", "missing")
        for key in ("re", "im"):
            if key in t and not _is_number(t[key]):
                raise SchemaError(f"{path}.{key}", "must be a number")
        out.append(Term(t["i"], t["j"], float(t["re"]), float(t.get("im", 0.0))))
    return CurveSpec(name, tuple(out), merged)


def emit_curve(spec: CurveSpec) -> str:
    terms = []
    for t in spec.terms:
        d = {"i": t.i, "j": t.j}
        if t.coeff is None:
            d.update(re=t.re, im=t.im)
        else:
            d["coeff"] = t.coeff
        terms.append(d)
    doc = {"name": spec.name, "terms": terms}
    if spec.params:
        doc["params"] = {k: v for k, v in spec.params.items()}
    return dumps(doc)


def spec_from_poly(p: BivarPoly, name="") -> CurveSpec:
    terms = tuple(Term(i, j, c.real, c.imag) for (i, j), c in sorted(p.terms.items()))
    return CurveSpec(name, terms)


# -- expressions ------------------------------------------------------------

_IMAG = re.compile(r"(?<![\w.])(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)i\b")


def _prepare(text):
    text = _IMAG.sub(r"\1j", text.replace("^", "**"))
    return re.sub(r"(?<![\w.])i\b", "1j", text)


def _eval_node(node, names):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, names)
    if isinstance(node, ast.Constant) and _is_number(node.value) or (
        isinstance(node, ast.Constant) and isinstance(node.value, complex)
    ):
        return complex(node.value)
    if isinstance(node, ast.Name):
        if node.id not in names:
            raise UsageError(f"unknown name {node.id!r}")
        return names[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, names)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a = _eval_node(node.left, names)
        if isinstance(node.op, ast.Pow):
            e = _eval_node(node.right, names)
            if not isinstance(e, complex) or e.imag or e.real != int(e.real) or e.real < 0:
                raise UsageError("exponents must be nonnegative integers")
            return a ** int(e.real)
        b = _eval_node(node.right, names)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if not isinstance(b, complex):
                raise UsageError("can only divide by constants")
            return a * (1 / b)
    raise UsageError(f"unsupported syntax: {ast.dump(node)[:40]}")


def _evaluate(text, names):
    try:
        tree = ast.parse(_prepare(text), mode="eval")
    except SyntaxError:
        raise UsageError(f"cannot parse expression {text!r}") from None
    return _eval_node(tree, names)


def eval_constant(text, params):
    v = _evaluate(text, {k: complex(v) for k, v in params.items()})
    return complex(v)


def parse_expr(text, params=None, variables=("z", "w")) -> MPoly:
    """Polynomial from ``"z^2 - 2i*w^3 + e1"`` style text."""
    n = len(variables)
    cls = BivarPoly if n == 2 else MPoly
    names = {k: complex(v) for k, v in (params or {}).items()}
    for k, v in enumerate(variables):
        names[v] = cls({tuple(int(i == k) for i in range(n)): 1}) if n == 2 else MPoly.variable(k, n)
    v = _evaluate(text, names)
    if isinstance(v, complex):
        v = cls({(0,) * n: v}) if n == 2 else MPoly.constant(v, n)
    return v


# -- output -----------------------------------------------------------------


def _num(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    if x == 0:
        return "0.0"  # drops the sign of -0.0 for stable output
    s = format(x, ".17g")
    return s if any(ch in s for ch in ".en") else s + ".0"


def _to_plain(obj):
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return obj


def dumps(obj, indent=0) -> str:
    """JSON text with floats at 17 significant digits and complex as {re, im}."""
    obj = _to_plain(obj)
    pad, pad1 = "  " * indent, "  " * (indent + 1)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, complex):
        return f'{{"re": {_num(obj.real)}, "im": {_num(obj.imag)}}}'
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad1}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(_to_plain(v), (int, float, complex, str, bool)) or v is None for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad1 + dumps(v, indent + 1) for v in obj) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _cell(v):
    v = _to_plain(v)
    if isinstance(v, float):
        return _num(v).strip('"')
    if isinstance(v, complex):
        return f"{_num(v.real)}{'+' if v.imag >= 0 or math.isnan(v.imag) else '-'}{_num(abs(v.imag))}j"
    if v is None:
        return ""
    return str(v)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    for r in rows:
        wr.writerow([_cell(v) for v in r])
    return buf.getvalue()


@dataclass
class Result:
    doc: dict
    header: list | None = None
    rows: list | None = None

    def render(self, fmt):
        if fmt == "json":
            return dumps(self.doc) + "\n"
        if self.header is None:
            return to_csv(["key", "value"], [(k, v) for k, v in self.doc.items()
                                             if not isinstance(v, (list, dict))])
        return to_csv(self.header, self.rows)


# -- argument helpers -------------------------------------------------------


def _floats(text, n, what):
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected {n} comma-separated numbers, got {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"{what}: expected {n} comma-separated numbers, got {text!r}")
    return vals


def parse_disk(text, what="--disk"):
    cx, cy, r = _floats(text, 3, what)
    if not r > 0:
        raise UsageError(f"{what}: radius must be positive")
    return Disk(complex(cx, cy), r)


def parse_point(text, what):
    parts = text.split(",")
    if len(parts) == 1:
        parts.append("0")
    re_, im = _floats(",".join(parts), 2, what)
    return complex(re_, im)


def parse_param(text):
    if "=" not in text:
        raise UsageError(f"--param expects NAME=RE[,IM], got {text!r}")
    name, val = text.split("=", 1)
    if not name.isidentifier():
        raise UsageError(f"--param: bad name {name!r}")
    return name, parse_point(val, f"--param {name}")


def _params(args):
    out = dict(parse_param(p) for p in (args.param or []))
    for k in ("e1", "e2", "e3"):
        v = getattr(args, k, None)
        if v is not None:
            out[k] = complex(v)
    return out


def load_curve(path=None, expr=None, params=None, what="curve") -> BivarPoly:
    if (path is None) == (expr is None):
        raise UsageError(f"give exactly one of --{what} or --expr{what[5:]}")
    if expr is not None:
        return parse_expr(expr, params)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_curve(text, params).poly()


def _curve(args, role=""):
    suffix = f"-{role}" if role else ""
    attr = f"_{role}" if role else ""
    return load_curve(getattr(args, f"curve{attr}"), getattr(args, f"expr{attr}"),
                      _params(args), what=f"curve{suffix}")


def _polydisk(args):
    return projection.Polydisk(parse_disk(args.disk), parse_disk(args.vdisk, "--vdisk"))


def _series(coeffs):
    return [complex(c) for c in coeffs]


# -- subcommands ------------------------------------------------------------


def cmd_good_check(args):
    F = _curve(args)
    res = projection.check_good(F, _polydisk(args), boundary_samples=args.samples or 32)
    return Result({
        "good": res.good,
        "max_distance": res.max_distance,
        "witness": list(res.witness) if res.witness else None,
        "reason": res.reason,
    })


def cmd_fiber(args):
    F = _curve(args)
    z0 = parse_point(args.z, "--z")
    fib = projection.fiber(F, z0) if args.tol is None else projection.Fiber(
        z0, roots(w_slice(F, z0), tol=args.tol))
    return Result({"z": fib.base_point, "points": list(fib.points)},
                  ["re", "im"], [(p.real, p.imag) for p in fib.points])


def cmd_discriminant(args):
    F = _curve(args)
    rep = projection.discriminant(F, parse_disk(args.disk), steps_per_turn=args.steps)
    pts = [{"location": p.location, "multiplicity": p.multiplicity, "crossing": p.crossing}
           for p in rep.points]
    return Result(
        {"sheet_count": rep.sheet_count, "points": pts,
         "dropped": [{"location": q, "multiplicity": k} for q, k in rep.dropped]},
        ["re", "im", "multiplicity", "crossing"],
        [(p.location.real, p.location.imag, p.multiplicity, p.crossing.value) for p in rep.points],
    )


def cmd_puiseux(args):
    F = _curve(args)
    center = (parse_point(args.center, "--center"), parse_point(args.wcenter, "--wcenter"))
    params = puiseux.puiseux_expand(F, center, order=args.order)
    branches = []
    for p in params:
        branches.append({
            "ramification": p.ramification,
            "truncation_order": p.truncation_order,
            "exact": p.exact,
            "residual": puiseux.param_residual(p, F, radius=args.radius),
            "series": _series(p.series),
        })
    rows = [(b, k, c.real, c.imag) for b, p in enumerate(params) for k, c in enumerate(p.series)]
    return Result({"center": list(center), "residual_radius": args.radius, "branches": branches},
                  ["branch", "k", "re", "im"], rows)


def cmd_monodromy(args):
    F = _curve(args)
    loop = monodromy.LoopSpec(parse_point(args.center, "--center"), args.radius,
                              args.turns, args.steps or monodromy.STEPS_PER_TURN)
    res = monodromy.track(F, loop)
    return Result({
        "permutation": list(res.permutation),
        "cycles": res.cycles,
        "order": res.order,
        "steps_per_turn": res.steps_per_turn,
        "start_fiber": {"z": res.start_fiber.base_point, "points": list(res.start_fiber.points)},
    }, ["index", "image"], list(enumerate(res.permutation)))


def cmd_separation(args):
    F = _curve(args)
    excluded = [parse_disk(d, "--exclude") for d in args.exclude or []]
    grid = tuple(int(x) for x in _floats(args.grid, 2, "--grid"))
    if min(grid) < 1:
        raise UsageError("--grid values must be positive")
    val = multifun.separation(F, parse_disk(args.disk), excluded, grid)
    return Result({"separation": val, "grid": list(grid), "excluded": [
        {"center": d.center, "radius": d.radius} for d in excluded]})


def cmd_dsym(args):
    F, G = _curve(args, "v"), _curve(args, "w")
    z0 = parse_point(args.z, "--z")
    a, b = projection.fiber(F, z0), projection.fiber(G, z0)
    return Result({
        "z": z0,
        "d_sym": multifun.d_sym(a, b),
        "d_sym_reverse": multifun.d_sym(b, a),
        "d_sym_symmetric": multifun.d_sym_symmetric(a, b),
    })


def cmd_hausdorff(args):
    F, G = _curve(args, "v"), _curve(args, "w")
    H = _polydisk(args)
    n = args.samples or multifun.SAMPLE_GRID[0]
    grid = (n, 4 * n)
    a = multifun.sample_curve(F, H, grid, "V")
    b = multifun.sample_curve(G, H, grid, "W")
    return Result({
        "hausdorff_estimate": multifun.hausdorff(a, b),
        "grid": list(grid),
        "points_v": len(a),
        "points_w": len(b),
        "discriminant_drift": multifun.discriminant_drift(F, G, H.base),
    })


def _verdict_doc(v):
    return {
        "status": v.status,
        "zero_count": v.zero_count,
        "pullback_degrees": v.pullback_degrees,
        "witnesses": [{"z": w.z, "w": w.w, "t": w.t, "res_f": w.res_f, "res_g": w.res_g,
                       "in_polydisk": w.in_polydisk, "method": w.method} for w in v.witnesses],
        "hypothesis_report": v.hypothesis_report,
        "notes": v.notes,
    }


def _tdisk(args):
    return "auto" if args.tdisk == "auto" else parse_disk(args.tdisk, "--tdisk")


def cmd_intersect(args):
    F, G = _curve(args, "v"), _curve(args, "w")
    v = intersect.certify(F, G, _polydisk(args), _tdisk(args), order=args.order)
    return Result(_verdict_doc(v), ["z_re", "z_im", "w_re", "w_im", "res_f", "res_g", "method"],
                  [(w.z.real, w.z.imag, w.w.real, w.w.imag, w.res_f, w.res_g, w.method)
                   for w in v.witnesses])


CUBIC_MAP = ("z^2 + e1*w^4", "w^3 + z^3 + e2*w^2", "w + e3")
CUBIC_Q = "a^3 - (b - c^3)^2"


def cmd_pullback3(args):
    params = {"e1": 0.01, "e2": 0.01, "e3": 0.01}
    params.update(_params(args))
    comps = [parse_expr(e, params) for e in (args.g1, args.g2, args.g3)]
    Q = parse_expr(args.q, params, variables=("a", "b", "c"))
    p = intersect.pullback_map(comps, Q)
    doc = {"terms": [{"i": i, "j": j, "coeff": c} for (i, j), c in sorted(p.terms.items())]}
    line = None
    if args.line:
        var, _, val = args.line.partition("=")
        if var not in ("z", "w") or not val:
            raise UsageError("--line expects z=VALUE or w=VALUE")
        line = (var, parse_point(val, "--line"))
        zeros = intersect.line_zero(p, line, parse_disk(args.disk))
        ev = (lambda x: p.eval_many(x, line[1])) if var == "w" else (lambda x: p.eval_many(line[1], x))
        doc["line"] = {"variable": var, "value": line[1]}
        doc["line_zeros"] = [{"zero": x, "abs_p": float(abs(ev(x)))} for x in zeros]
    return Result(doc, ["i", "j", "re", "im"],
                  [(i, j, c.real, c.imag) for (i, j), c in sorted(p.terms.items())])


def cmd_sweep(args):
    F = _curve(args, "v")
    names = [n for n in args.sweep_param.split(",") if n]
    values = [parse_point(v, "--values") for v in args.values.split(";" if ";" in args.values else ",")]
    base_params = _params(args)
    H = _polydisk(args)

    def family(eps):
        params = dict(base_params)
        params.update({n: eps for n in names})
        return load_curve(args.curve_w, args.expr_w, params, what="curve-w")

    family(values[0])  # surface usage errors before starting workers
    rows = intersect.sweep(F, family, values, H, _tdisk(args), order=args.order)
    header = ["eps_re", "eps_im", "status", "zero_count", "d_H_estimate", "nnc_count_W", "error"]
    table = [(r.eps.real, r.eps.imag, r.status, r.zero_count, r.d_h, r.nnc_count, r.error)
             for r in rows]
    doc = {
        "rows": [dict(zip(header, r)) for r in table],
        "empirical_threshold": intersect.empirical_threshold(rows),
    }
    return Result(doc, header, table)


# -- parser -----------------------------------------------------------------


def _add_curve(p, role=""):
    suffix = f"-{role}" if role else ""
    p.add_argument(f"--curve{suffix}", metavar="FILE", help="curve spec JSON file")
    p.add_argument(f"--expr{suffix}", metavar="EXPR", help='curve expression, e.g. "z^2 - w^3"')


def _add_params(p):
    p.add_argument("--param", action="append", metavar="NAME=RE[,IM]",
                   help="parameter value (repeatable)")
    for k in ("e1", "e2", "e3"):
        p.add_argument(f"--{k}", type=float, help=f"shortcut for --param {k}=VALUE")


def build_parser():
    parser = argparse.ArgumentParser(prog="curvelab", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv"), default=None)
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized steps (results are deterministic)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help, curves=("",)):
        p = sub.add_parser(name, help=help)
        for role in curves:
            _add_curve(p, role)
        _add_params(p)
        p.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        p.add_argument("--tol", type=float, default=None)
        p.set_defaults(func=fn)
        return p

    def polydisk(p):
        p.add_argument("--disk", default="0,0,0.5", metavar="CX,CY,R")
        p.add_argument("--vdisk", default="0,0,1", metavar="CX,CY,R")

    p = command("good-check", cmd_good_check, "is the polydisk a good neighborhood")
    polydisk(p)
    p.add_argument("--samples", type=int, default=None)

    p = command("fiber", cmd_fiber, "fiber over a base point")
    p.add_argument("--z", default="0", metavar="RE[,IM]")

    p = command("discriminant", cmd_discriminant, "classified discriminant points")
    p.add_argument("--disk", default="0,0,0.9", metavar="CX,CY,R")
    p.add_argument("--steps", type=int, default=None)

    p = command("puiseux", cmd_puiseux, "Puiseux parametrizations at a point")
    p.add_argument("--center", default="0", metavar="RE[,IM]", help="z-coordinate of the center")
    p.add_argument("--wcenter", default="0", metavar="RE[,IM]", help="w-coordinate of the center")
    p.add_argument("--order", type=int, default=puiseux.DEFAULT_ORDER)
    p.add_argument("--radius", type=float, default=0.3, help="residual check radius in t")

    p = command("monodromy", cmd_monodromy, "monodromy permutation around a circle")
    p.add_argument("--center", default="0", metavar="RE[,IM]")
    p.add_argument("--radius", type=float, default=0.5)
    p.add_argument("--turns", type=int, default=1)
    p.add_argument("--steps", type=int, default=None)

    p = command("separation", cmd_separation, "minimum fiber separation off excluded disks")
    p.add_argument("--disk", default="0,0,0.9", metavar="CX,CY,R")
    p.add_argument("--exclude", action="append", metavar="CX,CY,R")
    p.add_argument("--grid", default="64,256", metavar="NR,NT")

    p = command("dsym", cmd_dsym, "directed fiber distance", curves=("v", "w"))
    p.add_argument("--z", default="0", metavar="RE[,IM]")

    p = command("hausdorff", cmd_hausdorff, "sampled Hausdorff distance", curves=("v", "w"))
    polydisk(p)
    p.add_argument("--samples", type=int, default=None, help="radial grid size")

    for name, fn, hlp in (("intersect", cmd_intersect, "certify V and W meet in the polydisk"),
                          ("sweep", cmd_sweep, "certify over a family W(eps)")):
        p = command(name, fn, hlp, curves=("v", "w"))
        polydisk(p)
        p.add_argument("--tdisk", default="0,0,1", metavar="CX,CY,R|auto")
        p.add_argument("--order", type=int, default=puiseux.DEFAULT_ORDER)
    p.add_argument("--sweep-param", default="eps", metavar="NAME[,NAME]",
                   help="parameters set to each sweep value")
    p.add_argument("--values", default="0.1,0.01,0.001", metavar="V1,V2,...")

    p = command("pullback3", cmd_pullback3, "pull a C^3 curve back through a map", curves=())
    p.add_argument("--g1", default=CUBIC_MAP[0])
    p.add_argument("--g2", default=CUBIC_MAP[1])
    p.add_argument("--g3", default=CUBIC_MAP[2])
    p.add_argument("--q", default=CUBIC_Q, help="polynomial in a, b, c")
    p.add_argument("--line", default="w=0", help="restrict to z=VALUE or w=VALUE ('' to skip)")
    p.add_argument("--disk", default="0,0,1", metavar="CX,CY,R")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    fmt = args.format or ("csv" if args.command == "sweep" else "json")
    np.random.seed(args.seed)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"curvelab: usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"curvelab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"curvelab: usage error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(result.render(fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
