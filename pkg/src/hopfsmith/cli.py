"""Batch front end: load presentations, bialgebras, and comodule families,
run the constructions and checks, and emit machine- or human-readable
reports.

Exit codes: 0 when everything passes, 1 on any failing check, 2 when the
only non-passes are Unknown verdicts, 64 for usage errors.  Hopf-ness is
reported data, never a failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional

from . import bialgebra as ba
from . import walking
from .evaluate import EvalContext, EvaluationError, shear_semantics
from .field import FieldError
from .fixtures import standard_fixtures
from .gray import gray, smash
from .matrix import Matrix
from .presentation import Presentation, validate_presentation
from .reconstruct import (ClosureError, GeneratingFamily, coend_reconstruct,
                          round_trip)
from .comodule import Comodule
from .rewriting import default_budget
from .shear import proof_skeleton_check
from .terms import TermError
from .walking import PointedPresentation

USAGE_EXIT = 64

BUILTIN_PRESENTATIONS = {
    "point": walking.point,
    "mnd": lambda: walking.mnd().base,
    "adj": lambda: walking.adj().base,
    "oriental2": walking.oriental2,
    "e-oriental2": walking.e_oriental2,
    **{f"globe{i}": (lambda i=i: walking.globe(i)) for i in range(5)},
    **{f"bglobe{i}": (lambda i=i: walking.boundary_globe(i))
       for i in range(1, 5)},
}


class Report:
    def __init__(self, command: List[str], timing: bool):
        self.command = command
        self.timing = timing
        self.start = time.monotonic()
        self.checks: List[Dict] = []
        self.payload: Dict = {}

    def check(self, name: str, status: str, witness: Optional[str] = None):
        entry = {"name": name, "status": status}
        if witness is not None:
            entry["witness"] = witness
        self.checks.append(entry)

    def exit_code(self) -> int:
        statuses = {c["status"] for c in self.checks}
        if "fail" in statuses:
            return 1
        if "unknown" in statuses:
            return 2
        return 0

    def emit(self, as_json: bool) -> None:
        if as_json:
            doc = {"command": self.command, "checks": self.checks,
                   **self.payload}
            if self.timing:
                doc["timing_ms"] = round(
                    (time.monotonic() - self.start) * 1000, 3)
            print(json.dumps(doc, sort_keys=True))
            return
        for c in self.checks:
            line = f"[{c['status']:>7}] {c['name']}"
            if "witness" in c:
                line += f"  ({c['witness']})"
            print(line)
        for k, v in self.payload.items():
            print(f"{k}: {json.dumps(v, sort_keys=True)}")
        if self.timing:
            print(f"elapsed: {(time.monotonic() - self.start) * 1000:.1f} ms")


def load_presentation(name: str) -> Presentation:
    if name in BUILTIN_PRESENTATIONS:
        return BUILTIN_PRESENTATIONS[name]()
    with open(name, "r", encoding="utf-8") as fh:
        return Presentation.loads(fh.read())


def load_bialgebra(name: str) -> ba.Bialgebra:
    fixtures = standard_fixtures()
    if name in fixtures:
        return fixtures[name]
    return ba.load_bialgebra(name)


def emit_dot(p: Presentation, path: str) -> None:
    from .terms import generators
    lines = ["digraph presentation {"]
    for g in p.gens.values():
        lines.append(f'  "{g.name}" [label="{g.name} ({g.dim})"];')
    for g in p.gens.values():
        seen = set()
        for side in (g.src, g.tgt):
            if side is None:
                continue
            for name in generators(side):
                if name not in seen:
                    seen.add(name)
                    lines.append(f'  "{g.name}" -> "{name}";')
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_census(args, report: Report) -> None:
    p = load_presentation(args.presentation)
    bad = validate_presentation(p)
    report.check("valid", "pass" if not bad else "fail",
                 None if not bad else bad[0].issue)
    report.payload["census"] = list(p.census())


def cmd_gray(args, report: Report) -> None:
    a = load_presentation(args.left)
    b = load_presentation(args.right)
    out = gray(a, b)
    bad = validate_presentation(out)
    report.check("tensor-valid", "pass" if not bad else "fail",
                 None if not bad else bad[0].issue)
    report.payload["census"] = list(out.census())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out.dumps())
    if args.dot:
        emit_dot(out, args.dot)


def cmd_smash(args, report: Report) -> None:
    a = load_presentation(args.left)
    b = load_presentation(args.right)
    pa = PointedPresentation(a, args.left_point)
    pb = PointedPresentation(b, args.right_point)
    out, _ = smash(pa, pb)
    bad = validate_presentation(out)
    report.check("smash-valid", "pass" if not bad else "fail",
                 None if not bad else bad[0].issue)
    report.payload["census"] = list(out.census())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out.dumps())
    if args.dot:
        emit_dot(out, args.dot)


def cmd_shear_check(args, report: Report) -> None:
    B = load_bialgebra(args.bialgebra)
    for axiom in ba.check_bialgebra(B):
        report.check(f"axiom:{axiom.name}", "pass" if axiom.holds else "fail",
                     axiom.witness)
    ranks = {}
    for d in (ba.NW, ba.NE, ba.SW, ba.SE):
        mat = ba.shear(B, d)
        ranks[d] = mat.rank()
    report.payload["shear_ranks"] = ranks
    report.payload["hopf"] = ba.is_hopf(B)
    report.payload["cohopf"] = ba.is_cohopf(B)
    equiv = (ranks[ba.NW] == B.n * B.n) == (ranks[ba.SE] == B.n * B.n) and \
            (ranks[ba.NE] == B.n * B.n) == (ranks[ba.SW] == B.n * B.n)
    report.check("shear-direction-equivalences", "pass" if equiv else "fail")
    try:
        value, want = shear_semantics(EvalContext(B))
        report.check("universal-shear-image",
                     "pass" if value == want else "fail")
    except EvaluationError as e:
        report.check("universal-shear-image", "fail", str(e))


def cmd_antipode(args, report: Report) -> None:
    B = load_bialgebra(args.bialgebra)
    for axiom in ba.check_bialgebra(B):
        if not axiom.holds:
            report.check(f"axiom:{axiom.name}", "fail", axiom.witness)
    try:
        hd = ba.antipode(B)
    except ba.NoAntipode as e:
        report.payload["hopf"] = False
        report.check("antipode", "pass",
                     f"not Hopf: kernel dimension {len(e.kernel)}")
        return
    report.payload["hopf"] = True
    report.payload["antipode"] = [[B.field.show(hd.S[i, j])
                                   for j in range(B.n)] for i in range(B.n)]
    report.payload["antipode_invertible"] = hd.S_inv is not None
    conv = ba.convolution_inverse(B)
    report.check("convolution-oracle", "pass" if conv == hd.S else "fail")
    try:
        from_int = ba.antipode_from_integrals(B)
        report.check("integral-formula",
                     "pass" if from_int == hd.S else "fail")
    except ba.IntegralConditionError as e:
        report.check("integral-formula", "unknown", str(e))


def cmd_integrals(args, report: Report) -> None:
    B = load_bialgebra(args.bialgebra)
    data = ba.integrals(B)
    report.payload["integral_dimension"] = len(data.left_integrals)
    report.payload["cointegral_dimension"] = len(data.left_cointegrals)
    if data.pairing is not None:
        report.payload["pairing"] = B.field.show(data.pairing)
    report.check("integrals-computed", "pass")


def cmd_reconstruct(args, report: Report) -> None:
    if args.family in standard_fixtures() or not args.family.endswith(".json"):
        B = load_bialgebra(args.family)
        rt = round_trip(B, depth=args.depth)
        report.payload["verdict"] = rt.verdict
        report.payload["hopf"] = [rt.reference_hopf, rt.reconstruction_hopf]
        report.check("round-trip",
                     "pass" if rt.verdict == "isomorphism" else "fail",
                     "; ".join(rt.details))
        report.check("hopf-flags-agree",
                     "pass" if rt.flags_agree() else "fail")
        return
    with open(args.family, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    spec = doc["bialgebra"]
    B = load_bialgebra(spec) if isinstance(spec, str) \
        else ba.bialgebra_from_json(spec)
    members = []
    for c in doc["comodules"]:
        rows = [[B.field.parse(str(x)) for x in row] for row in c["rho"]]
        members.append(Comodule(B, c["dim"],
                               Matrix.from_rows(B.field, rows)))
    fam = GeneratingFamily(members, depth=doc.get("depth", args.depth))
    res = coend_reconstruct(fam, reference=B)
    report.payload["verdict"] = res.verdict
    report.payload["coend_dim"] = res.bialgebra.n
    report.check("reconstruction",
                 "pass" if res.verdict == "isomorphism" else "fail",
                 "; ".join(res.details))


def cmd_proof_skeleton(args, report: Report) -> None:
    rep = proof_skeleton_check(budget=args.budget)
    report.check("chain-composable",
                 "pass" if rep.chain_composable else "fail")
    report.check("total-boundary-matches-shear",
                 "pass" if rep.boundary_match else "fail")
    report.check("hexagon-closes", "pass" if rep.hexagon_closes else "fail")
    need = {"L": 2, "R": 2, "4-cell": 1, "collapse-trivial": 1}
    for kind, minimum in need.items():
        got = rep.table.get(kind, 0)
        report.check(f"classification:{kind}",
                     "pass" if got >= minimum else "fail", f"count {got}")
    report.payload["classification_table"] = rep.table
    report.payload["steps"] = [
        {"label": s.label, "class": s.classification} for s in rep.steps]
    for f in rep.failures:
        report.check("failure", "fail", f)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hopfsmith",
        description="workbench for walking structures, lax tensor squares, "
                    "and exact Hopf-algebra checks")
    ap.add_argument("--json", action="store_true", help="machine output")
    ap.add_argument("--no-timing", action="store_true",
                    help="omit timing for byte-stable output")
    ap.add_argument("--budget", type=int, default=None,
                    help="rewrite search budget (default HOPFSMITH_BUDGET "
                         f"or {default_budget()})")
    ap.add_argument("--depth", type=int, default=2,
                    help="tensor closure depth for reconstruction")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="per-dimension generator counts")
    c.add_argument("presentation")
    c.set_defaults(run=cmd_census)

    g = sub.add_parser("gray", help="lax tensor product of two presentations")
    g.add_argument("left")
    g.add_argument("right")
    g.add_argument("--out")
    g.add_argument("--dot")
    g.set_defaults(run=cmd_gray)

    s = sub.add_parser("smash", help="pointed smash collapse of a tensor")
    s.add_argument("left")
    s.add_argument("left_point")
    s.add_argument("right")
    s.add_argument("right_point")
    s.add_argument("--out")
    s.add_argument("--dot")
    s.set_defaults(run=cmd_smash)

    sc = sub.add_parser("shear-check",
                        help="axioms, shear ranks, and shear semantics")
    sc.add_argument("bialgebra")
    sc.set_defaults(run=cmd_shear_check)

    an = sub.add_parser("antipode", help="antipode by shear and by oracle")
    an.add_argument("bialgebra")
    an.set_defaults(run=cmd_antipode)

    it = sub.add_parser("integrals", help="integral and cointegral spaces")
    it.add_argument("bialgebra")
    it.set_defaults(run=cmd_integrals)

    rc = sub.add_parser("reconstruct",
                        help="coend reconstruction or a round trip")
    rc.add_argument("family", help="family JSON, bialgebra JSON, or fixture")
    rc.set_defaults(run=cmd_reconstruct)

    ps = sub.add_parser("proof-skeleton",
                        help="factorization chain in the whiskered square")
    ps.set_defaults(run=cmd_proof_skeleton)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_EXIT if e.code not in (0,) else 0
    report = Report(["hopfsmith"] + list(argv), timing=not args.no_timing)
    try:
        args.run(args, report)
    except (OSError, json.JSONDecodeError) as e:
        print(f"hopfsmith: {e}", file=sys.stderr)
        return USAGE_EXIT
    except (TermError, FieldError, ba.BialgebraError, ClosureError,
            ValueError) as e:
        report.check("error", "fail", str(e))
    report.emit(args.json)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
