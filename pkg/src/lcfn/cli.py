"""``lcfn`` command line: ``eval``, ``verify`` and ``table``.

Output is deterministic.  Floats are rendered as ``.16e`` (17 significant
digits) and keys come out in a fixed order.  Errors never write to stdout.
The error record goes to stderr with exit code 2 (bad request or range) or 3
(the operation rejected its arguments or could not reach its tolerance).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import checks
from . import dirichlet as dch
from . import eulerian as eul
from . import gen_exp, lc_fc
from . import numerics as nm
from . import series_core as sc
from . import worked_examples as wx
from .errors import AccuracyError, CapabilityError, DomainError, LcfnError, RangeError
from .numerics_types import EvalResult

EPS = 2.220446049250313e-16
EXIT_REQUEST = 2
EXIT_DOMAIN = 3


class RequestError(Exception):
    """Unknown target, unknown or missing parameter, or a value of the wrong type."""


# rendering ---------------------------------------------------------------------

def render_float(x: float) -> str:
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x + 0.0, ".16e")


def _csv_float(x: float) -> str:
    return render_float(x).strip('"')


def to_json(obj: Any) -> str:
    """JSON text with fixed float formatting; dict order is preserved."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return render_float(obj)
    if isinstance(obj, complex):
        return to_json({"re": obj.real, "im": obj.imag})
    if isinstance(obj, Fraction):
        return to_json(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__}")


def _csv_text(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _csv_float(v)
    if isinstance(v, (dict, list)):
        return to_json(v)
    return str(v)


# parameter parsing -------------------------------------------------------------

def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    if t.endswith("i") and not t.lower().endswith("inf"):
        t = t[:-1] + "j"
    try:
        return complex(t)
    except ValueError:
        raise RequestError(f"not a complex number: {text!r}") from None


def _collapse(z: complex):
    """Keep real inputs real so that real-only routines accept them."""
    return z.real if z.imag == 0 else z


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise RequestError(f"not an integer: {text!r}") from None


def parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise RequestError(f"not a real number: {text!r}") from None


PARSERS: dict[str, Callable[[str], Any]] = {
    "complex": lambda t: _collapse(parse_complex(t)),
    "float": parse_float,
    "int": parse_int,
    "str": str,
    "path": str,
}

SOURCE_PARAMS = {"example": "str", "w": "complex", "p_coeffs": "path", "r_f": "float"}
CHAR_PARAMS = {"q": "int", "chi": "int"}


def read_p_coeffs(path: str) -> list[complex]:
    """One coefficient per line, ``re`` or ``re im``; ``#`` starts a comment."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise RequestError(f"cannot read {path}: {exc.strerror}") from None
    out = []
    for number, line in enumerate(lines, 1):
        parts = line.split("#", 1)[0].split()
        if not parts:
            continue
        if len(parts) > 2:
            raise RequestError(f"{path}:{number}: expected 're im'")
        re_part = parse_float(parts[0])
        im_part = parse_float(parts[1]) if len(parts) == 2 else 0.0
        out.append(complex(re_part, im_part))
    if not out:
        raise RequestError(f"{path}: no coefficients")
    return out


def _example_kind(params: dict) -> wx.ExampleKind:
    name = params.get("example")
    tags = {"beta": "Beta", "cos": "CosEven", "sinh": "SinhOdd"}
    if name not in tags:
        raise RequestError("--example must be one of beta, cos, sinh")
    if name != "beta" and "w" not in params:
        raise RequestError(f"--example {name} needs --w")
    return wx.ExampleKind(tags[name], params.get("w", 0))


def build_evaluator(params: dict) -> lc_fc.LcEvaluator:
    if "p_coeffs" in params:
        if "example" in params:
            raise RequestError("give either --example or --p-coeffs, not both")
        if "r_f" not in params:
            raise RequestError("--p-coeffs needs --r-f")
        coeffs = read_p_coeffs(params["p_coeffs"])
        return lc_fc.LcEvaluator(sc.SeriesFunction.from_p(coeffs, params["r_f"], name=params["p_coeffs"]))
    if "example" not in params:
        raise RequestError("a seed function is required: --example beta|cos|sinh or --p-coeffs FILE --r-f R")
    return wx.example_evaluator(_example_kind(params))


def _chi(params: dict) -> dch.DirichletCharacter:
    return dch.character(params["q"], params["chi"])


# eval targets ------------------------------------------------------------------

@dataclass(frozen=True)
class Target:
    run: Callable[[dict], "Outcome"]
    params: dict[str, str]
    required: tuple[str, ...] = ()
    defaults: dict[str, Any] = field(default_factory=dict)
    help: str = ""


@dataclass(frozen=True)
class Outcome:
    value: Any
    method: str
    err_est: float
    extra: dict = field(default_factory=dict)


def _from_result(r: EvalResult) -> Outcome:
    return Outcome(r.value, r.method, r.err_est)


def _rounded(value: complex, method: str) -> Outcome:
    """Closed-form value; err_est is a rounding model, 64 ulps of |value|."""
    value = complex(value)
    return Outcome(value, method, 64 * EPS * abs(value))


def _exact(value: Any, method: str, **extra) -> Outcome:
    return Outcome(value, method, 0.0, extra)


def _bernoulli(params):
    b = nm.bernoulli_exact(params["n"])
    return Outcome(complex(float(b)), "exact-rational", abs(float(b)) * EPS / 2, {"exact": str(b)})


def _bernoulli_poly(params):
    poly = nm.bernoulli_polynomial(params["n"], exact=True)
    return _exact([complex(float(c)) for c in poly.coeffs], "exact-rational",
                  exact=[str(c) for c in poly.coeffs])


def _constants(params):
    c = build_evaluator(params).consts
    return _exact({"r_f": c.r_f, "n_f": c.n_f, "m_f": c.m_f}, "structural-constants")


def _c_polynomial(params):
    poly = sc.c_polynomial(build_evaluator(params).f, params["n"])
    # rational arithmetic from exact streams, then one rounding per coefficient
    return Outcome([complex(c) for c in poly.coeffs], "c-polynomial",
                   64 * EPS * max(abs(complex(c)) for c in poly.coeffs))


def _fe_residual(params):
    sides = lc_fc.functional_equation_sides(build_evaluator(params), params["s"], params["tol"])
    return Outcome(complex(sides.residual), f"{sides.lhs.method}|{sides.rhs.method}",
                   sides.lhs.err_est + sides.rhs.err_est,
                   {"lhs": sides.lhs.value, "rhs": sides.rhs.value})


def _dirichlet_residual(params):
    sides = dch.dirichlet_functional_sides(params["s"], _chi(params), params["tol"])
    return Outcome(complex(sides.residual), f"{sides.lhs.method}|{sides.rhs.method}",
                   sides.lhs.err_est + sides.rhs.err_est,
                   {"lhs": sides.lhs.value, "rhs": sides.rhs.value})


def _hurwitz_formula(params):
    sides = dch.hurwitz_formula_sides(params["s"], params["a"])
    return Outcome(complex(sides.residual), f"{sides.lhs.method}|{sides.rhs.method}",
                   sides.lhs.err_est + sides.rhs.err_est,
                   {"lhs": sides.lhs.value, "rhs": sides.rhs.value})


def _gen_bernoulli(params):
    return _rounded(dch.generalized_bernoulli(params["n"], _chi(params)), "generalized-bernoulli")


def _src(**extra):
    return {**SOURCE_PARAMS, **extra}


def _chars(**extra):
    return {**CHAR_PARAMS, **extra}


TOL = {"tol": "float"}

TARGETS: dict[str, Target] = {
    # series_core
    "series.p_numbers": Target(
        lambda p: _exact(build_evaluator(p).f.p_list(p["n"]), "coefficient-stream"),
        _src(n="int"), ("n",), help="P_0..P_n"),
    "series.c_numbers": Target(
        lambda p: _exact(build_evaluator(p).f.c_list(p["n"]), "exact-convolution"),
        _src(n="int"), ("n",), help="C_0..C_n"),
    "series.c_polynomial": Target(_c_polynomial, _src(n="int"), ("n",), help="coefficients of C_{f,n}(x)"),
    "series.constants": Target(_constants, _src(), help="r_f, n_f, m_f"),
    "series.parity": Target(lambda p: _exact(build_evaluator(p).f.parity.value, "parity"), _src()),
    "series.modulator": Target(
        lambda p: _rounded(sc.eval_modulator(build_evaluator(p).f, p["t"]), "power-series"),
        _src(t="complex"), ("t",), help="p(t) = sum P_n t^n / n!"),
    "series.f": Target(
        lambda p: _rounded(sc.eval_f(build_evaluator(p).f, p["t"]), "power-series"),
        _src(t="complex"), ("t",), help="f(t) = t p(t) / (e^t - 1)"),
    # gen_exp
    "gen_exp.pow": Target(
        lambda p: _from_result(gen_exp.generalized_pow(p["z"], p["s"], build_evaluator(p).f, p["tol"])),
        _src(z="complex", s="complex", **TOL), ("z", "s"), {"tol": 1e-15}, "z^(s,f)"),
    # lc_fc
    "lc.series": Target(
        lambda p: _from_result(lc_fc.lc_series(build_evaluator(p), p["s"], p["tol"])),
        _src(s="complex", **TOL), ("s",), {"tol": 1e-14}, "L(s,f) by the generalised-power series"),
    "lc.integral": Target(
        lambda p: _from_result(lc_fc.lc_integral(build_evaluator(p), p["s"])),
        _src(s="complex"), ("s",), help="L(s,f) by the Mellin integral"),
    "lc.nonpositive_int": Target(
        lambda p: _rounded(lc_fc.lc_at_nonpositive_int(build_evaluator(p), p["p"], p["form"]), "c-polynomial"),
        _src(p="int", form="str"), ("p",), {"form": "direct"}, "L(-p,f)"),
    "lc.residue": Target(
        lambda p: _rounded(lc_fc.residue_at_one(build_evaluator(p)), "residue"), _src(),
        help="residue of L(s,f) at s = 1"),
    "lc.functional_residual": Target(_fe_residual, _src(s="complex", **TOL), ("s",), {"tol": 1e-14}),
    "fc.positive_int": Target(
        lambda p: _rounded(lc_fc.fc_at_positive_int(build_evaluator(p), p["k"]), "fc-special-value"),
        _src(k="int"), ("k",), help="F(k, f_(2 i pi))"),
    "fc.left_halfplane": Target(
        lambda p: _from_result(lc_fc.fc_left_halfplane(build_evaluator(p), p["s"], p["tol"])),
        _src(s="complex", **TOL), ("s",), {"tol": 1e-14}),
    # numerics
    "numerics.gamma": Target(lambda p: _rounded(nm.gamma_complex(p["s"]), "lanczos"), {"s": "complex"}, ("s",)),
    "numerics.rgamma": Target(lambda p: _rounded(nm.rgamma(p["s"]), "lanczos"), {"s": "complex"}, ("s",)),
    "numerics.bernoulli": Target(_bernoulli, {"n": "int"}, ("n",)),
    "numerics.bernoulli_polynomial": Target(_bernoulli_poly, {"n": "int"}, ("n",)),
    "numerics.zeta_even": Target(lambda p: _rounded(nm.zeta_even(p["m"]), "bernoulli"), {"m": "int"}, ("m",),
                                 help="zeta(2m)"),
    "numerics.hurwitz_zeta": Target(
        lambda p: _from_result(nm.hurwitz_zeta(p["s"], p["a"], method=p["method"])),
        {"s": "complex", "a": "complex", "method": "str"}, ("s", "a"), {"method": "auto"}),
    "numerics.periodic_zeta": Target(
        lambda p: _from_result(nm.periodic_zeta(p["a"], p["s"])), {"a": "float", "s": "complex"}, ("a", "s")),
    # eulerian
    "eulerian.polynomial": Target(
        lambda p: _exact(list(eul.eulerian_polynomial(p["n"]).coeffs), "recurrence"), {"n": "int"}, ("n",)),
    "eulerian.number": Target(
        lambda p: _exact(eul.eulerian_number(p["n"], p["k"]), "recurrence"), {"n": "int", "k": "int"}, ("n", "k")),
    "eulerian.k_function": Target(
        lambda p: _rounded(eul.k_function(p["m"], p["z"]), "eulerian-form"), {"m": "int", "z": "complex"},
        ("m", "z")),
    "eulerian.cot_derivative": Target(
        lambda p: _rounded(eul.cot_derivative(p["p"], p["w"], p["form"]), f"cot-{p['form']}"),
        {"p": "int", "w": "complex", "form": "str"}, ("p", "w"), {"form": "K"}),
    "eulerian.partial_fraction_sum": Target(
        lambda p: _from_result(eul.partial_fraction_sum(p["p"], p["w"], p["N"])),
        {"p": "int", "w": "complex", "N": "int"}, ("p", "w"), {"N": 100_000}),
    # worked examples
    "examples.l": Target(
        lambda p: _from_result(wx.example_l(_example_kind(p), p["s"])),
        {"example": "str", "w": "complex", "s": "complex"}, ("example", "s"), help="L(s) via Hurwitz zeta"),
    "examples.l_even_closed": Target(
        lambda p: _rounded(wx.l_even_closed(p["p"], p["w"]), "closed-form"), {"p": "int", "w": "complex"},
        ("p", "w")),
    "examples.l_odd_closed": Target(
        lambda p: _rounded(wx.l_odd_closed(p["p"], p["w"]), "closed-form"), {"p": "int", "w": "complex"},
        ("p", "w")),
    "examples.integral_cos": Target(
        lambda p: _rounded(wx.integral_cos_closed(p["p"], p["w"]), "closed-form"), {"p": "int", "w": "complex"},
        ("p", "w")),
    "examples.integral_sinh": Target(
        lambda p: _rounded(wx.integral_sinh_closed(p["p"], p["w"]), "closed-form"), {"p": "int", "w": "complex"},
        ("p", "w")),
    # dirichlet
    "dirichlet.character": Target(lambda p: _exact(_chi(p).to_record(), "character-group"), _chars(),
                                  ("q", "chi")),
    "dirichlet.conductor": Target(lambda p: _exact(_chi(p).conductor, "character-group"), _chars(),
                                  ("q", "chi")),
    "dirichlet.gauss_sum": Target(
        lambda p: _rounded(dch.gauss_sum(p["alpha"], _chi(p)), "direct-sum"), _chars(alpha="int"),
        ("q", "chi"), {"alpha": 1}),
    "dirichlet.l_series": Target(
        lambda p: _from_result(dch.l_series(p["s"], _chi(p), p["tol"])), _chars(s="complex", **TOL),
        ("q", "chi", "s"), {"tol": 1e-14}),
    "dirichlet.l_via_hurwitz": Target(
        lambda p: _from_result(dch.l_via_hurwitz(p["s"], _chi(p))), _chars(s="complex"), ("q", "chi", "s")),
    "dirichlet.l_value_cot": Target(
        lambda p: _rounded(dch.l_value_cot(p["k"], _chi(p)), "cot-formula"), _chars(k="int"), ("q", "chi", "k")),
    "dirichlet.l_value_alkan": Target(
        lambda p: _rounded(dch.l_value_alkan(p["k"], _chi(p)), "alkan-formula"), _chars(k="int"),
        ("q", "chi", "k")),
    "dirichlet.l_value_classical": Target(
        lambda p: _rounded(dch.l_value_classical(p["k"], _chi(p), p["mode"]), "generalized-bernoulli"),
        _chars(k="int", mode="str"), ("q", "chi", "k"), {"mode": "unified"}),
    "dirichlet.generalized_bernoulli": Target(_gen_bernoulli, _chars(n="int"), ("q", "chi", "n")),
    "dirichlet.functional_residual": Target(_dirichlet_residual, _chars(s="complex", **TOL), ("q", "chi", "s"),
                                            {"tol": 1e-14}),
    "dirichlet.hurwitz_formula_residual": Target(_hurwitz_formula, {"s": "complex", "a": "float"}, ("s", "a")),
}


def parse_params(target: Target, pairs: list[str]) -> dict:
    """Turn ``--key value`` tokens into typed parameters for ``target``."""
    raw: dict[str, str] = {}
    it = iter(pairs)
    for token in it:
        if not token.startswith("--") or len(token) < 3:
            raise RequestError(f"unexpected argument {token!r}")
        key, sep, value = token[2:].partition("=")
        key = key.replace("-", "_")
        if not sep:
            value = next(it, None)
            if value is None:
                raise RequestError(f"--{key.replace('_', '-')} needs a value")
        if key not in target.params:
            raise RequestError(f"unknown parameter --{key.replace('_', '-')}")
        if key in raw:
            raise RequestError(f"parameter --{key.replace('_', '-')} given twice")
        raw[key] = value
    missing = [k for k in target.required if k not in raw]
    if missing:
        raise RequestError("missing parameter(s): " + ", ".join("--" + k.replace("_", "-") for k in missing))
    typed = {k: PARSERS[target.params[k]](v) for k, v in raw.items()}
    return {**target.defaults, **typed}


def run_eval(name: str, pairs: list[str], tol: float | None = None) -> dict:
    if name not in TARGETS:
        raise RequestError(f"unknown target {name!r}")
    target = TARGETS[name]
    params = parse_params(target, pairs)
    if tol is not None:
        if "tol" not in target.params:
            raise RequestError(f"target {name} takes no --tol")
        params["tol"] = tol
    out = target.run(params)
    record = {"target": name, "params": dict(sorted(params.items())), "value": _value(out.value),
              "method": out.method, "err_est": float(out.err_est)}
    record.update(out.extra)
    return record


def _value(v):
    if isinstance(v, (int, str, dict)) and not isinstance(v, bool):
        return v
    if isinstance(v, list):
        return [_value(x) for x in v]
    return complex(v)


def _eval_csv(record: dict) -> str:
    value = record["value"]
    items = value if isinstance(value, list) else [value]
    rows = []
    for i, v in enumerate(items):
        if isinstance(v, complex):
            rows.append([record["target"], i, v.real, v.imag, record["method"], record["err_est"]])
        else:
            rows.append([record["target"], i, v, None, record["method"], record["err_est"]])
    return _csv_text(["target", "index", "re", "im", "method", "err_est"], rows)


# verify ------------------------------------------------------------------------

def _report_record(r: checks.VerifyReport) -> dict:
    return {"check_id": r.check_id, "lhs": r.lhs, "rhs": r.rhs, "residual": r.residual,
            "tolerance": r.tolerance, "passed": r.passed, "runtime_ms": r.runtime_ms}


def verify_output(suite: str, reports: list[checks.VerifyReport], fmt: str) -> str:
    if fmt == "csv":
        header = ["check_id", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "residual", "tolerance", "passed",
                  "runtime_ms"]
        rows = [[r.check_id, r.lhs.real, r.lhs.imag, r.rhs.real, r.rhs.imag, r.residual, r.tolerance, r.passed,
                 r.runtime_ms] for r in reports]
        return _csv_text(header, rows)
    failed = sum(not r.passed for r in reports)
    return to_json({"suite": suite, "total": len(reports), "failed": failed,
                    "reports": [_report_record(r) for r in reports]}) + "\n"


# tables ------------------------------------------------------------------------

TABLE_LIMITS = {"rows": (1, eul.MAX_EULERIAN_ROW + 1), "n": (0, 60), "q": (1, 10_000)}


def _limit(name: str, value: int) -> int:
    lo, hi = TABLE_LIMITS[name]
    if not lo <= value <= hi:
        raise RangeError(f"--{name} must lie in {lo}..{hi}, got {value}")
    return value


def table_eulerian(rows: int) -> str:
    rows = _limit("rows", rows)
    width = max(rows - 1, 1)
    body = []
    for n in range(rows):
        coeffs = list(eul.eulerian_polynomial(n).coeffs)
        body.append([n] + coeffs + [None] * (width - len(coeffs)))
    return _csv_text(["n"] + [f"a{k}" for k in range(width)], body)


def table_bernoulli(n: int) -> str:
    n = _limit("n", n)
    body = []
    for k in range(n + 1):
        b = nm.bernoulli_exact(k)
        body.append([k, b.numerator, b.denominator, float(b)])
    return _csv_text(["n", "numerator", "denominator", "value"], body)


def table_lc_values(params: dict, n: int) -> str:
    """``L(-k, f)`` for ``k < n`` and ``F(k+1)`` where the parity allows it."""
    if not 1 <= n <= 60:
        raise RangeError(f"--n must lie in 1..60 for lc_values, got {n}")
    ev = build_evaluator(params)
    kappa = ev.kappa
    body = []
    for k in range(n):
        lv = complex(lc_fc.lc_at_nonpositive_int(ev, k))
        if kappa is not None and (k + 1) % 2 == kappa:
            fv = complex(lc_fc.fc_at_positive_int(ev, k + 1))
            body.append([k, lv.real, lv.imag, fv.real, fv.imag])
        else:
            body.append([k, lv.real, lv.imag, None, None])
    return _csv_text(["k", "l_minus_k_re", "l_minus_k_im", "fc_k_plus_1_re", "fc_k_plus_1_im"], body)


def table_characters(q: int) -> str:
    q = _limit("q", q)
    body = []
    for index, chi in enumerate(dch.characters_mod(q)):
        rec = chi.to_record()
        body.append([index, "-".join(map(str, chi.label)) or "0", rec["q"], rec["conductor"], rec["parity"],
                     chi.primitive, rec["values"]])
    return _csv_text(["index", "label", "q", "conductor", "parity", "primitive", "values"], body)


def _csv_to_json(text: str) -> str:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return to_json([dict(zip(header, row)) for row in reader]) + "\n"


# entry point -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise RequestError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lcfn", description="LC-function evaluator and identity checker")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one operation",
                        description="Remaining --key value pairs are the operation's parameters.")
    ev.add_argument("target", help="operation path, see 'lcfn eval list'")
    ev.add_argument("--format", choices=("json", "csv"), default="json")
    ev.add_argument("--tol", type=float)

    ve = sub.add_parser("verify", help="run the identity checks")
    ve.add_argument("suite", nargs="?", default="all")
    ve.add_argument("--format", choices=("json", "csv"), default="json")
    ve.add_argument("--tol", type=float, help="override every check's tolerance")
    ve.add_argument("--no-timing", action="store_true", help="report runtime_ms as 0 for byte-stable output")

    ta = sub.add_parser("table", help="emit a table")
    ta.add_argument("kind", choices=("eulerian", "bernoulli", "lc_values", "characters"))
    ta.add_argument("--format", choices=("json", "csv"), default="csv")
    ta.add_argument("--rows", type=int, default=8)
    ta.add_argument("--n", type=int, default=10)
    ta.add_argument("--q", type=int, default=5)
    ta.add_argument("--example", choices=("beta", "cos", "sinh"))
    ta.add_argument("--w", type=parse_complex)
    ta.add_argument("--p-coeffs", dest="p_coeffs")
    ta.add_argument("--r-f", dest="r_f", type=float)
    return parser


def _list_targets() -> str:
    lines = []
    for name, t in TARGETS.items():
        params = " ".join(f"--{k.replace('_', '-')}" + ("" if k in t.required else "?") for k in t.params)
        lines.append(f"{name}  {params}" + (f"  # {t.help}" if t.help else ""))
    return "\n".join(lines) + "\n"


def dispatch(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns ``(exit_code, stdout_text)``.  Raises on errors."""
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if args.verb != "eval" and extra:
        raise RequestError(f"unrecognised arguments: {' '.join(extra)}")
    if args.verb == "eval":
        if args.target == "list":
            return 0, _list_targets()
        record = run_eval(args.target, extra, args.tol)
        text = _eval_csv(record) if args.format == "csv" else to_json(record) + "\n"
        return 0, text
    if args.verb == "verify":
        if args.suite not in checks.SUITES:
            raise RequestError(f"unknown suite {args.suite!r}; choose from {', '.join(checks.SUITES)}")
        reports = checks.run_verify(args.suite, args.tol, timing=not args.no_timing)
        code = 0 if all(r.passed for r in reports) else 1
        return code, verify_output(args.suite, reports, args.format)
    if args.kind == "eulerian":
        text = table_eulerian(args.rows)
    elif args.kind == "bernoulli":
        text = table_bernoulli(args.n)
    elif args.kind == "characters":
        text = table_characters(args.q)
    else:
        source = {k: getattr(args, k) for k in SOURCE_PARAMS if getattr(args, k) is not None}
        text = table_lc_values(source, args.n)
    return 0, _csv_to_json(text) if args.format == "json" else text


def _error_record(kind: str, exc: BaseException) -> str:
    record = {"error": kind, "message": str(exc)}
    best = getattr(exc, "best", None)
    if isinstance(best, EvalResult):
        record["best"] = {"value": best.value, "method": best.method, "err_est": best.err_est}
    return to_json(record) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        code, text = dispatch(argv)
    except RequestError as exc:
        sys.stderr.write(_error_record("request", exc))
        return EXIT_REQUEST
    except RangeError as exc:
        sys.stderr.write(_error_record("range", exc))
        return EXIT_REQUEST
    except DomainError as exc:
        sys.stderr.write(_error_record("domain", exc))
        return EXIT_DOMAIN
    except CapabilityError as exc:
        sys.stderr.write(_error_record("capability", exc))
        return EXIT_DOMAIN
    except AccuracyError as exc:
        sys.stderr.write(_error_record("accuracy", exc))
        return EXIT_DOMAIN
    except LcfnError as exc:
        sys.stderr.write(_error_record("error", exc))
        return EXIT_DOMAIN
    except (TypeError, ValueError) as exc:
        # argument accepted by the parser but rejected by the operation's signature
        sys.stderr.write(_error_record("type", exc))
        return EXIT_REQUEST
    sys.stdout.write(text)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
