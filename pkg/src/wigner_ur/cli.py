"""Command-line interface: ``wigner-ur <command> ...``.

Every computation command produces a list of entries (labels plus value) and a
provenance block, rendered as a pretty table, CSV or versioned JSON. Exact
values are printed as ``+sqrt(p/q)`` strings; everything else as a complex
pair. Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from . import su2core, urbasis
from .halfint import HalfInt, InputError, m_values, triangle
from .linalg import default_tol
from .rotation import wigner_D
from .sqrtrational import InexactValue, SqrtRational
from .verify import SUITES, run_suite
from .wra import symbols

SCHEMA = 1


# --- values and their serialisation -------------------------------------------------


def fmt_float(x: float) -> str:
    return f"{x:.17g}"


def value_to_json(v) -> Any:
    if isinstance(v, SqrtRational):
        return {"exact": str(v)}
    if isinstance(v, InexactValue):
        return {"re": float(v), "im": 0.0}
    c = complex(v)
    return {"re": c.real, "im": c.imag}


def value_from_json(obj) -> SqrtRational | complex:
    if "exact" in obj:
        return SqrtRational.parse(obj["exact"])
    return complex(float(obj["re"]), float(obj["im"]))


def value_text(v) -> str:
    if isinstance(v, SqrtRational):
        return str(v)
    c = complex(v)
    return f"({fmt_float(c.real)}, {fmt_float(c.imag)})"


@dataclass
class Result:
    command: str
    quantity: str
    label_names: list[str]
    entries: list[tuple[list[str], Any]]
    provenance: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "quantity": self.quantity,
            "provenance": self.provenance,
            "labels": self.label_names,
            "values": [{"labels": labs, "value": value_to_json(v)} for labs, v in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Result":
        if obj.get("schema") != SCHEMA:
            raise InputError(f"unsupported schema {obj.get('schema')!r}")
        return cls(
            obj["command"], obj["quantity"], list(obj["labels"]),
            [(list(e["labels"]), value_from_json(e["value"])) for e in obj["values"]],
            dict(obj["provenance"]),
        )

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow([*self.label_names, "re", "im", "exact"])
            for labs, v in self.entries:
                c = complex(v)
                w.writerow([*labs, fmt_float(c.real), fmt_float(c.imag), str(v) if isinstance(v, SqrtRational) else ""])
            return buf.getvalue().rstrip("\n")
        lines = [f"# {self.quantity}"]
        lines += [f"# {k} = {v}" for k, v in self.provenance.items()]
        if len(self.entries) == 1 and not self.label_names:
            lines.append(value_text(self.entries[0][1]))
        else:
            for labs, v in self.entries:
                lines.append("  ".join(f"{n}={x}" for n, x in zip(self.label_names, labs)) + "  " + value_text(v))
        return "\n".join(lines)


def parse_output(text: str) -> Result:
    """Inverse of ``Result.render('json')``."""
    return Result.from_json(json.loads(text))


# --- argument handling ---------------------------------------------------------


class Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a positional value
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):  # argparse exits with 2, keep the message terse
        self.print_usage(sys.stderr)
        raise SystemExit(f"wigner-ur: error: {message}") from None


def _spin(text: str, twice_mode: bool) -> HalfInt:
    if twice_mode:
        try:
            return HalfInt(int(text))
        except ValueError:
            raise InputError(f"--twice expects integer twice-values, got {text!r}") from None
    return HalfInt.of(text)


def _j(text: str, twice_mode: bool) -> HalfInt:
    j = _spin(text, twice_mode)
    if j.twice < 0:
        raise InputError(f"angular momentum must be >= 0, got {j}")
    return j


def _r(text: str) -> Fraction:
    return urbasis.as_r(text)


def _r_list(text: str) -> list[Fraction]:
    return [_r(x) for x in text.split(",") if x.strip()]


def _alpha_label(j: HalfInt, r: Fraction, text: str) -> urbasis.AlphaLabel:
    """An alpha value such as ``-1/2``, or ``t=<offset>``."""
    if text.startswith("t="):
        return urbasis.AlphaLabel(j, r, int(text[2:]))
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"invalid alpha label {text!r}") from None
    return urbasis.AlphaLabel.from_alpha(j, r, alpha)


def _prov(r=None, **labels) -> dict:
    out = {}
    if r is not None:
        out["r"] = str(r)
    out.update({k: str(v) for k, v in labels.items()})
    return out


# --- commands ---------------------------------------------------------------------


def cmd_cg(a) -> Result:
    j1, j2, j3 = (_j(x, a.twice) for x in (a.j1, a.j2, a.j3))
    m1, m2, m3 = (_spin(x, a.twice) for x in (a.m1, a.m2, a.m3))
    v = su2core.cg(j1, j2, m1, m2, j3, m3)
    return Result("cg", "Clebsch-Gordan coefficient (j1 j2 m1 m2 | j3 m3), Condon-Shortley", [],
                  [([], v)], _prov(j1=j1, j2=j2, m1=m1, m2=m2, j3=j3, m3=m3))


def cmd_threejm(a) -> Result:
    j1, j2, j3 = (_j(x, a.twice) for x in (a.j1, a.j2, a.j3))
    m1, m2, m3 = (_spin(x, a.twice) for x in (a.m1, a.m2, a.m3))
    v = su2core.threejm(j1, j2, j3, m1, m2, m3)
    return Result("threejm", "Wigner 3-jm symbol", [], [([], v)],
                  _prov(j1=j1, j2=j2, j3=j3, m1=m1, m2=m2, m3=m3))


def cmd_sixj(a) -> Result:
    js = [_j(x, a.twice) for x in a.j]
    v = su2core.sixj(*js)
    return Result("sixj", "Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}", [], [([], v)],
                  _prov(**{f"j{i + 1}": j for i, j in enumerate(js)}))


def cmd_ninej(a) -> Result:
    js = [_j(x, a.twice) for x in a.j]
    v = su2core.ninej([js[0:3], js[3:6], js[6:9]])
    return Result("ninej", "Wigner 9-j symbol, rows (j11 j12 j13) (j21 j22 j23) (j31 j32 j33)", [], [([], v)],
                  _prov(**{f"j{i // 3 + 1}{i % 3 + 1}": j for i, j in enumerate(js)}))


_TRIPLE = {
    "cg-ur": ("coupling coefficient (j1 j2 a1 a2 | j3 a3)_r in the {J^2, U_r} scheme", symbols.cg_ur_tensor),
    "fr": ("f_r symbol (-1)^{2 j3} (2j1+1)^{-1/2} (j2 j3 a2 a3 | j1 a1)_r^*", symbols.fr_tensor),
    "fbar": ("fbar_r symbol: 3-jm symbol transformed by q^{-alpha m} on every column", symbols.fbar_tensor),
}


def cmd_triple(a) -> Result:
    quantity, fn = _TRIPLE[a.command]
    js = [_j(x, a.twice) for x in (a.j1, a.j2, a.j3)]
    r = _r(a.r)
    tensor = fn(*(j.twice for j in js), r)
    names = ["alpha1", "alpha2", "alpha3"]
    if a.alpha:
        labs = [_alpha_label(j, r, x) for j, x in zip(js, a.alpha)]
        entries = [([str(lab) for lab in labs], complex(tensor[tuple(lab.t for lab in labs)]))]
    else:
        entries = []
        for ts in np.ndindex(*tensor.shape):
            labs = [urbasis.AlphaLabel(j, r, t) for j, t in zip(js, ts)]
            entries.append(([str(lab) for lab in labs], complex(tensor[ts])))
    prov = _prov(r, j1=js[0], j2=js[1], j3=js[2])
    prov["triad"] = str(triangle(*(j.twice for j in js))).lower()
    return Result(a.command, quantity, names, entries, prov)


def cmd_metric(a) -> Result:
    j, r = _j(a.jval, a.twice), _r(a.r)
    G = symbols.metric_alpha_matrix(j.twice, r)
    labels = urbasis.alpha_labels(j, r)
    entries = [([str(x), str(y)], complex(G[x.t, y.t])) for x in labels for y in labels]
    return Result("metric", "2-j alpha metric tensor (j j; alpha alpha')_r", ["alpha", "alpha'"], entries, _prov(r, j=j))


def cmd_basis(a) -> Result:
    j, r = _j(a.jval, a.twice), _r(a.r)
    entries = []
    for vec in urbasis.build_basis(j, r):
        for tm, c in zip(m_values(j.twice), vec.coeffs):
            entries.append(([str(vec.label), str(HalfInt(tm))], complex(c)))
    return Result("basis", "expansion coefficients <j m | j alpha; r>", ["alpha", "m"], entries, _prov(r, j=j))


def cmd_overlap(a) -> Result:
    j, r, s = _j(a.jval, a.twice), _r(a.r), _r(a.s)
    entries = []
    for x in urbasis.alpha_labels(j, r):
        for y in urbasis.alpha_labels(j, s):
            entries.append(([str(x), str(y)], complex(urbasis.basis_overlap(j, x, y))))
    prov = _prov(r, j=j)
    prov["s"] = str(s)
    return Result("overlap", "inter-basis overlap <j alpha; r | j beta; s> (Dirichlet kernel)", ["alpha", "beta"], entries, prov)


def cmd_dmat(a) -> Result:
    j = _j(a.jval, a.twice)
    euler = tuple(float(x) for x in a.euler)
    if a.r is None:
        D = wigner_D(j, euler)
        labs = [str(HalfInt(tm)) for tm in m_values(j.twice)]
        names = ["m", "m'"]
        quantity = "Wigner D matrix D^j(a, b, c)_{m m'}, active z-y-z"
        prov = _prov(j=j)
    else:
        r = _r(a.r)
        D = urbasis.rot_matrix_r(j, euler, r).data
        labs = [str(x) for x in urbasis.alpha_labels(j, r)]
        names = ["alpha", "alpha'"]
        quantity = "rotation matrix D_r^j(R)_{alpha alpha'} in the {J^2, U_r} scheme"
        prov = _prov(r, j=j)
    prov["euler"] = ",".join(fmt_float(x) for x in euler)
    entries = [([labs[i], labs[k]], complex(D[i, k])) for i in range(len(labs)) for k in range(len(labs))]
    return Result("dmat", quantity, names, entries, prov)


def cmd_verify(a) -> tuple[str, int]:
    tj = _j(a.jval, a.twice).twice if a.jval is not None else None
    tjmax = _j(a.jmax, a.twice).twice if a.jmax is not None else None
    rs = _r_list(a.r) if a.r else None
    tol = a.tol
    if tol is None and os.environ.get("WIGNER_UR_TOL"):
        tol = default_tol()
    rep = run_suite(a.suite, tj, tjmax, rs, tol)
    if a.format == "json":
        body = rep.to_dict()
        body["schema"] = SCHEMA
        text = json.dumps(body, indent=2)
    elif a.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "deviation"])
        for tag, dev in sorted(rep.table.items()):
            w.writerow([tag, fmt_float(dev)])
        text = buf.getvalue().rstrip("\n")
    else:
        lines = [f"suite {rep.name}: {rep.cases} cases, worst deviation {fmt_float(rep.worst)}, "
                 f"{'PASS' if rep.passed else 'FAIL'}"]
        width = max((len(t) for t in rep.table), default=0)
        lines += [f"  {tag:<{width}}  {fmt_float(dev)}" for tag, dev in sorted(rep.table.items())]
        text = "\n".join(lines)
    return text, rep.exit_code


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--twice", action="store_true", help="read spin arguments as twice-values (3 means 3/2)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--tol", type=float, help="tolerance override (also WIGNER_UR_TOL)")

    p = Parser(prog="wigner-ur", description="SU(2) coupling in the {J^2, U_r} scheme")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    for name in ("cg", "threejm"):
        s = sub.add_parser(name, parents=[common], help=f"standard {name} value")
        if name == "cg":
            for x in ("j1", "j2", "m1", "m2", "j3", "m3"):
                s.add_argument(x)
        else:
            for x in ("j1", "j2", "j3", "m1", "m2", "m3"):
                s.add_argument(x)
    s = sub.add_parser("sixj", parents=[common], help="6-j symbol")
    s.add_argument("j", nargs=6)
    s = sub.add_parser("ninej", parents=[common], help="9-j symbol, row by row")
    s.add_argument("j", nargs=9)
    for name in _TRIPLE:
        s = sub.add_parser(name, parents=[common], help=_TRIPLE[name][0])
        for x in ("j1", "j2", "j3"):
            s.add_argument(x)
        s.add_argument("--r", required=True)
        s.add_argument("--alpha", nargs=3, help="alpha values (e.g. -1/2) or t=<offset>; default: all")
    for name in ("metric", "basis"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--j", dest="jval", required=True)
        s.add_argument("--r", required=True)
    s = sub.add_parser("overlap", parents=[common])
    s.add_argument("--j", dest="jval", required=True)
    s.add_argument("--r", required=True)
    s.add_argument("--s", required=True)
    s = sub.add_parser("dmat", parents=[common])
    s.add_argument("--j", dest="jval", required=True)
    s.add_argument("--euler", nargs=3, required=True, metavar=("A", "B", "C"))
    s.add_argument("--r")
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    s.add_argument("--j", dest="jval")
    s.add_argument("--jmax")
    s.add_argument("--r", help="comma-separated list, e.g. 0,1,0.37")
    return p


_COMMANDS = {
    "cg": cmd_cg, "threejm": cmd_threejm, "sixj": cmd_sixj, "ninej": cmd_ninej,
    "cg-ur": cmd_triple, "fr": cmd_triple, "fbar": cmd_triple,
    "metric": cmd_metric, "basis": cmd_basis, "overlap": cmd_overlap, "dmat": cmd_dmat,
}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return int(exc.code or 0)
    try:
        if a.tol is not None and a.tol < 0:
            raise InputError("--tol must be nonnegative")
        if a.command == "verify":
            text, code = cmd_verify(a)
        else:
            text, code = _COMMANDS[a.command](a).render(a.format), 0
    except (InputError, ValueError, ZeroDivisionError) as exc:
        print(f"wigner-ur: error: {exc}", file=sys.stderr)
        return 2
    _emit(text, a.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
