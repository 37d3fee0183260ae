"""Command-line front end.

Subcommands: cup, conv, chartable, phi, betti, presentation, det-check, verify.
Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Sequence

from . import characters
from . import classalg as ca
from . import hilbert as hb
from . import jsonio
from . import symfun as sf
from .errors import HilbcupError
from .verify import SUITES, verify, verify_all


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _classfunction_arg(value: str, flag: str, n: int | None) -> ca.ClassFunction:
    try:
        f = jsonio.classfunction_from_json(json.loads(value))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(flag, f"invalid class function JSON ({exc})") from exc
    if n is not None and f.n != n:
        raise UsageError(flag, f"class function has n={f.n}, expected --n {n}")
    return f


def _table_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def _cf_text(f: ca.ClassFunction) -> str:
    rows = [(list(lam), jsonio.number_to_str(v)) for lam, v in f.sorted_items()]
    return f"n = {f.n}\n" + _table_text(["partition", "value"], rows)


# ---------------------------------------------------------------------------
# subcommands return (payload, text, exit_status)


def cmd_product(args, graded: bool):
    f = _classfunction_arg(args.f, "--f", args.n)
    g = _classfunction_arg(args.g, "--g", args.n)
    op = ca.cup if graded else ca.convolve
    h = op(f, g, args.engine)
    return jsonio.classfunction_to_json(h), _cf_text(h), 0


def cmd_chartable(args):
    tab = characters.table(args.n)
    payload = {
        "n": tab.n,
        "partitions": [list(p) for p in tab.partitions],
        "rows": [
            {"lambda": list(lam), "values": [str(v) for v in tab.row(lam)]}
            for lam in tab.partitions
        ],
    }
    header = ["lambda \\ mu"] + [str(list(mu)) for mu in tab.partitions]
    rows = [[str(list(lam))] + tab.row(lam) for lam in tab.partitions]
    return payload, _table_text(header, rows), 0


def cmd_phi(args):
    f = _classfunction_arg(args.f, "--f", args.n)
    q = sf.phi(f)
    rows = [(r["powers"], r["coeff"]) for r in jsonio.ppoly_to_json(q)]
    return jsonio.ppoly_to_json(q), _table_text(["powers", "coeff"], rows), 0


def cmd_betti(args):
    b = hb.betti(args.n)
    return b, _table_text(["degree", "rank"], list(enumerate(b))), 0


def cmd_presentation(args):
    pres = hb.presentation(args.n, args.max_degree, args.engine)
    payload = {
        "n": pres.n,
        "max_degree": pres.degree_bound,
        "generators": pres.generators,
        "relations": [
            {"lambda": list(r.lam), "poly": jsonio.chernpoly_to_json(r.poly)} for r in pres.relations
        ],
        "betti": pres.betti,
        "verified": pres.verified,
        "problems": pres.problems,
    }
    lines = [f"H*(Hilb^{pres.n}) = Z[{', '.join(pres.generators)}] / relations",
             f"betti: {pres.betti}"]
    lines.append(_table_text(["lambda", "r_lambda"], [(list(r.lam), r.poly) for r in pres.relations]))
    lines += pres.problems
    return payload, "\n".join(lines), 0 if pres.verified else 1


def cmd_det_check(args):
    rows, ok_all = [], True
    for d in range(1, args.max_d + 1):
        a, b = hb.matrix_A(d, engine=args.engine), hb.matrix_B(d)
        da, db = a.abs_determinant(), b.abs_determinant()
        fa, fb = hb.det_A_formula(d), hb.det_B_formula(d)
        ok = da == fa and db == fb and da == db
        ok_all &= ok
        rows.append({
            "d": d,
            "n": a.n,
            "abs_det_A": str(da),
            "formula_A": str(fa),
            "abs_det_B": str(db),
            "formula_B": str(fb),
            "ratio": str(da / db),
            "pass": ok,
        })
    header = ["d", "n", "|det A|", "formula", "|det B|", "formula", "ratio", "pass"]
    text = _table_text(header, [list(r.values()) for r in rows])
    return {"rows": rows, "pass": ok_all}, text, 0 if ok_all else 1


def cmd_verify(args):
    if args.suite == "all":
        reports = verify_all(args.max_n, args.max_d, args.engine)
    else:
        reports = [verify(args.suite, args.max_n, args.max_d, args.engine)]
    ok = all(r.passed for r in reports)
    payload = {"passed": ok, "suites": [r.to_json() for r in reports]}
    rows = [(r.suite, r.cases, r.failures, "pass" if r.passed else "FAIL") for r in reports]
    text = _table_text(["suite", "cases", "failures", "status"], rows)
    for r in reports:
        if r.counterexample:
            text += f"\n{r.suite}: {r.counterexample}"
    return payload, text, 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--engine", choices=ca.ENGINES, default="auto")

    parser = argparse.ArgumentParser(prog="hilbcup", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("cup", "graded cup product f u g"), ("conv", "convolution product f * g")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int)
        p.add_argument("--f", required=True, help="class function JSON")
        p.add_argument("--g", required=True, help="class function JSON")

    p = sub.add_parser("chartable", parents=[common], help="character table of S_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("phi", parents=[common], help="image of a class function in Q[p1,p2,...]")
    p.add_argument("--n", type=int)
    p.add_argument("--f", required=True, help="class function JSON")

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of Hilb^n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("presentation", parents=[common], help="generators and relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("det-check", parents=[common], help="determinants of A and B")
    p.add_argument("--max-d", type=int, default=4)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-d", type=int, default=None)
    return parser


COMMANDS = {
    "cup": lambda a: cmd_product(a, graded=True),
    "conv": lambda a: cmd_product(a, graded=False),
    "chartable": cmd_chartable,
    "phi": cmd_phi,
    "betti": cmd_betti,
    "presentation": cmd_presentation,
    "det-check": cmd_det_check,
    "verify": cmd_verify,
}


def _check_ranges(parser: argparse.ArgumentParser, args) -> None:
    for flag in ("n", "max_n", "max_d", "max_degree"):
        value = getattr(args, flag, None)
        if value is not None and value < 0:
            parser.error(f"--{flag.replace('_', '-')}: must be non-negative")
    if args.command in ("chartable", "presentation") and args.n < 1:
        parser.error("--n: must be at least 1")


def run(argv: List[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_ranges(parser, args)
    try:
        payload, text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except HilbcupError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    output = jsonio.dumps(payload) if args.format == "json" else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(output + "\n")
    else:
        stdout.write(output + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
