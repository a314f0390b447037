"""Command-line interface: ``bornforge <command> [options]``.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .born import (
    BornStructure,
    BornStructureError,
    HermitianBornData,
    assemble_from_forms,
    assemble_from_hermitian,
    check_integrable,
    check_table1,
    eigenspace_lagrangian_report,
)
from .catalog import catalog_json, entry, fingerprint_for, identify_report
from .geometry import BilinearForm, classify_metric
from .lie import JacobiError, LieAlgebra, SalamonParseError, Subspace, parse_salamon, print_salamon
from .linalg import ContractError, Matrix, to_rational
from .tables import REPRODUCERS, TableResult, remark_r4, sweep_r3_heis3


class InputError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    tables: list[TableResult] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c[1] for c in self.checks) and all(t.ok for t in self.tables)

    def check(self, name: str, ok: bool, witness: str = "") -> None:
        self.checks.append((name, bool(ok), witness))

    # -- rendering ---------------------------------------------------------
    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "ok": self.ok,
            "checks": [{"name": n, "pass": ok, "witness": w} for n, ok, w in self.checks],
            "tables": [{"title": t.title, "headers": t.headers, "rows": t.rows, "diffs": t.diffs}
                       for t in self.tables],
        }
        if self.data:
            payload["data"] = self.data
        return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=False) + "\n"

    def to_markdown(self) -> str:
        out = [f"# bornforge {self.command}", ""]
        for k, v in self.inputs.items():
            out.append(f"- {k}: `{v}`")
        if self.inputs:
            out.append("")
        for k, v in self.data.items():
            out.append(f"- {k}: {json.dumps(v, ensure_ascii=False)}")
        if self.data:
            out.append("")
        if self.checks:
            out += ["| check | result | witness |", "|---|---|---|"]
            for n, ok, w in self.checks:
                out.append(f"| {n} | {'PASS' if ok else 'FAIL'} | {w} |")
            out.append("")
        for t in self.tables:
            out += [f"## {t.title}", "", "| " + " | ".join(t.headers) + " |",
                    "|" + "---|" * len(t.headers)]
            out += ["| " + " | ".join(r) + " |" for r in t.rows]
            out.append("")
            for d in t.diffs:
                out.append(f"- DIFF {d}")
            if t.diffs:
                out.append("")
        out.append(f"**{'PASS' if self.ok else 'FAIL'}**")
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.checks:
            w.writerow(["check", "result", "witness"])
            for n, ok, wit in self.checks:
                w.writerow([n, "PASS" if ok else "FAIL", wit])
        for t in self.tables:
            w.writerow(t.headers)
            w.writerows(t.rows)
            for d in t.diffs:
                w.writerow(["DIFF", d])
        for k, v in self.data.items():
            w.writerow([k, json.dumps(v, ensure_ascii=False)])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv}.get(fmt, self.to_markdown)()


# -- input handling ------------------------------------------------------------

def _read_source(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    p = Path(text)
    if not text.lstrip().startswith(("(", "{")) and p.is_file():
        return p.read_text(encoding="utf-8")
    return text


def load_algebra(source) -> LieAlgebra:
    """Salamon text, algebra JSON (text, dict or file) or a catalog name."""
    if isinstance(source, dict):
        return LieAlgebra.from_json(source)
    text = _read_source(source).strip()
    if text.startswith("("):
        return parse_salamon(text)
    if text.startswith("{"):
        try:
            return LieAlgebra.from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"bad algebra JSON: {exc}") from exc
    try:
        return entry(text).algebra
    except KeyError:
        raise InputError(f"cannot interpret {text!r} as an algebra") from None


def _subspace(n: int, spec) -> Subspace:
    vecs = []
    for item in spec:
        if isinstance(item, int):
            vecs.append(Matrix.column([1 if k == item - 1 else 0 for k in range(n)]))
        else:
            vecs.append(Matrix.column(item))
    return Subspace(n, tuple(vecs))


def load_structure(bundle: dict) -> BornStructure:
    lie = load_algebra(bundle["algebra"])
    s = bundle["structure"]
    n = lie.dim
    kind = s.get("type", "hermitian")
    if kind == "hermitian":
        data = HermitianBornData(lie, BilinearForm(Matrix(s["h"])), Matrix(s["J"]),
                                 _subspace(n, s["g_plus"]), _subspace(n, s["g_minus"]))
        return assemble_from_hermitian(data)
    if kind == "forms":
        return assemble_from_forms(lie, BilinearForm(Matrix(s["g"])), BilinearForm(Matrix(s["h"])),
                                   BilinearForm(Matrix(s["omega"]), "antisymmetric"))
    raise InputError(f"unknown structure type {kind!r}")


def catalog_bundle(name: str) -> dict:
    born = entry(name).born_model()
    if born is None:
        raise InputError(f"catalog entry {name!r} carries no Born structure")
    data = born.hermitian().to_json()
    return {"algebra": data.pop("algebra"), "structure": data}


# -- commands ------------------------------------------------------------------

def cmd_check(args) -> Report:
    if args.catalog:
        bundle = catalog_bundle(args.catalog)
        rep = Report("check", {"catalog": args.catalog})
    else:
        try:
            bundle = json.loads(_read_source(args.bundle))
        except json.JSONDecodeError as exc:
            raise InputError(f"bad bundle JSON: {exc}") from exc
        rep = Report("check", {"bundle": args.bundle})
    try:
        born = load_structure(bundle)
    except BornStructureError as exc:
        rep.check(exc.identity, False, str(exc))
        return rep
    for name, ok in check_table1(born).items():
        rep.check(name, ok)
    integ = check_integrable(born)
    for name, ok in integ.as_dict().items():
        rep.check(name, ok)
    rep.check("integrability formulations agree", integ.formulations_agree)
    lag = eigenspace_lagrangian_report(born)
    for name, v in lag.items():
        if isinstance(v, bool):
            rep.check(name, v)
    rep.data["g signature"] = list(lag["g_signature"])
    rep.data["h signature"] = list(lag["h_signature"])
    rep.data["curvature h"] = classify_metric(born.algebra, born.h)
    rep.data["curvature g"] = classify_metric(born.algebra, born.g)
    return rep


def cmd_reproduce(args) -> Report:
    rep = Report("reproduce", {"table": args.table})
    rep.tables.append(REPRODUCERS[args.table]())
    return rep


def _grid(values: list[str] | None, default: list[str]) -> list:
    out = []
    for v in values or default:
        for part in v.split(","):
            if part.strip():
                out.append(to_rational(part.strip()))
    return out


def cmd_sweep(args) -> Report:
    if args.family != "r3-heis3":
        raise InputError(f"unknown family {args.family!r}")
    xs, ys = _grid(args.x, ["0"]), _grid(args.y, ["0"])
    x0s, y0s = _grid(args.x0, ["0"]), _grid(args.y0, ["0"])
    points = [(x, y, a, b) for x in xs for y in ys for a in x0s for b in y0s]
    rep = Report("sweep", {"family": args.family, "points": len(points)})
    rep.tables.append(sweep_r3_heis3(points))
    return rep


def cmd_identify(args) -> Report:
    lie = load_algebra(args.algebra)
    rep = Report("identify", {"algebra": print_salamon(lie)})
    rep.data.update(identify_report(lie, pseudo_kahler=args.pseudo_kahler))
    return rep


def cmd_invariants(args) -> Report:
    lie = load_algebra(args.algebra)
    rep = Report("invariants", {"algebra": print_salamon(lie)})
    fp = fingerprint_for(lie)
    rep.data["fingerprint"] = fp.as_dict() if hasattr(fp, "as_dict") else list(fp.as_tuple())
    return rep


def cmd_parse(args) -> Report:
    lie = load_algebra(args.text)
    rep = Report("parse", {"text": args.text})
    rep.data["salamon"] = print_salamon(lie)
    rep.data["algebra"] = lie.to_json()
    return rep


def cmd_catalog(args) -> Report:
    rep = Report("catalog dump")
    rep.data["catalog"] = catalog_json()
    return rep


def cmd_remark_r4(args) -> Report:
    rep = Report("remark-r4", {"variant": args.variant})
    rep.tables.append(remark_r4(args.variant))
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bornforge", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify a Born structure bundle")
    c.add_argument("bundle", nargs="?", help="bundle JSON file, JSON text or '-'")
    c.add_argument("--catalog", help="use the structure attached to a catalog entry")
    c.set_defaults(fn=cmd_check)

    r = sub.add_parser("reproduce", help="regenerate a table and diff it")
    r.add_argument("--table", type=int, choices=sorted(REPRODUCERS), required=True)
    r.set_defaults(fn=cmd_reproduce)

    s = sub.add_parser("sweep", help="sweep a parametric family")
    s.add_argument("--family", default="r3-heis3")
    for name in ("x", "y", "x0", "y0"):
        s.add_argument(f"--{name}", action="append", help="comma separated rationals")
    s.set_defaults(fn=cmd_sweep)

    i = sub.add_parser("identify", help="match an algebra against the catalog")
    i.add_argument("algebra")
    i.add_argument("--pseudo-kahler", action="store_true",
                   help="the algebra is known to carry a pseudo-Kähler structure")
    i.set_defaults(fn=cmd_identify)

    v = sub.add_parser("invariants", help="numerical fingerprint")
    v.add_argument("algebra")
    v.set_defaults(fn=cmd_invariants)

    pa = sub.add_parser("parse", help="parse Salamon notation")
    pa.add_argument("text")
    pa.set_defaults(fn=cmd_parse)

    cat = sub.add_parser("catalog", help="catalog operations")
    cat.add_argument("action", choices=["dump"])
    cat.set_defaults(fn=cmd_catalog)

    rr = sub.add_parser("remark-r4", help="curvature of the alternative structure on r4,-1,-1")
    rr.add_argument("--variant", choices=["remark", "table2"], default="remark")
    rr.set_defaults(fn=cmd_remark_r4)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and not (args.bundle or args.catalog):
        parser.error("check needs a bundle or --catalog")
    try:
        rep = args.fn(args)
    except SalamonParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return 2
    except (InputError, JacobiError, ContractError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(rep.render(args.format))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
