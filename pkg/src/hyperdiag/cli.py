"""Command-line front end: ``hyperdiag {stats,compactify,straighten,verify,enumerate}``.

Exit status is 0 on success, 1 when an identity fails to verify and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import ediagrams as ed
from . import frobenius as fr
from . import odiagrams as od
from . import polyring as pr
from . import signed
from .errors import HyperdiagError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("all", "genfunction", "ogenfunction", "flip", "corollary", "table3", "regular", "psi")
SUITE_CAPS = {"genfunction": 5, "ogenfunction": 5, "flip": 5, "corollary": 6, "regular": 5, "psi": 3}


class UsageError(Exception):
    pass


# -- output helpers --------------------------------------------------------------

def _set(s):
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _vec(v):
    return "(" + ",".join(map(str, v)) + ")"


def emit_table(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
        return
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell_text(r[c]) for c in cols])
    elif fmt == "latex":
        out.write("\\begin{tabular}{" + "l" * len(cols) + "}\n")
        out.write(" & ".join(cols).replace("_", "\\_") + " \\\\\n\\hline\n")
        for r in rows:
            out.write(" & ".join(f"${_cell_text(r[c])}$" for c in cols) + " \\\\\n")
        out.write("\\end{tabular}\n")
    else:
        texts = [[_cell_text(r[c]) for c in cols] for r in rows]
        widths = [max(len(c), *(len(t[i]) for t in texts)) for i, c in enumerate(cols)]
        out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
        for t in texts:
            out.write("  ".join(x.ljust(w) for x, w in zip(t, widths)).rstrip() + "\n")


def _cell_text(v):
    if isinstance(v, (list, tuple)):
        return _vec(v)
    if isinstance(v, (set, frozenset)):
        return _set(v)
    return str(v)


def latex_diagram(cells) -> str:
    top = " & ".join(str(c[0]) for c in cells)
    bot = " & ".join(str(c[1]) for c in cells)
    return "\\begin{pmatrix} " + top + " \\\\ " + bot + " \\end{pmatrix}"


def emit_record(rec: dict, fmt: str, out, diagrams=()) -> None:
    """A single report; ``diagrams`` names keys holding cell lists for latex/text."""
    if fmt == "json":
        json.dump(rec, out, indent=1)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in rec.items():
            w.writerow([k, json.dumps(v)])
    elif fmt == "latex":
        for k, v in rec.items():
            val = latex_diagram(v) if k in diagrams else str(v)
            out.write(f"% {k}\n{val}\n")
    else:
        for k, v in rec.items():
            if k in diagrams:
                out.write(f"{k}:\n{ed.format_two_line(v)}\n")
            else:
                out.write(f"{k}: {v}\n")


# -- commands ---------------------------------------------------------------------

def _cap_check(n, cap):
    if n < 1:
        raise UsageError("--n must be positive")
    if n > cap:
        raise UsageError(f"n={n} exceeds cap {cap}")


def cmd_stats(args, out) -> int:
    n = args.n
    _cap_check(n, args.cap)
    rows = []
    for beta in signed.enumerate_bn(n, cap=args.cap):
        st = signed.stats(beta)
        rows.append({
            "beta": list(beta.window),
            "des": sorted(st.des),
            "maj": st.maj,
            "neg": st.neg,
            "fmaj": st.fmaj,
            "fmaj_inv": signed.fmaj(signed.inverse(beta)),
            "g": list(signed.g_vector(beta)),
            "ghat": list(signed.g_hat(beta)),
        })
    if args.self_check:
        total = fr.fmaj_sum(n)
        if total != fr.fmaj_product(n):
            print("self-check failed: fmaj distribution differs from the product formula", file=sys.stderr)
            return EXIT_FAIL
    emit_table(rows, args.format, out)
    return EXIT_OK


def _read_input(path):
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_compactify(args, out) -> int:
    cells, kind = ed.parse_cells(_read_input(args.input))
    kind = args.kind or kind or "e"
    rng = random.Random(args.seed)
    if kind == "e":
        D = ed.normalize(cells)
        beta = ed.classifying_perm(D)
        r = ed.phi(D)
        C = r.compact
        lam, mu = r.lam, r.mu
        ok = D.weight() == (C.weight()[0] + 2 * sum(lam), C.weight()[1] + 2 * sum(mu))
        if args.self_check:
            ok = ok and ed.phi_inverse(r) == D and ed.compactify_by_moves(D, rng) == C
    elif kind == "o":
        D = od.normalize_o(cells)
        beta = od.colabel_classifying_perm(D)
        C, lam, mu = od.phi_o(D)
        ok = D.weight() == (C.weight()[0] + 2 * sum(lam), C.weight()[1] + 2 * sum(mu))
        if args.self_check:
            ok = ok and od.phi_o_inverse(C, lam, mu) == D
    else:
        raise UsageError(f"unknown diagram kind {kind!r}")
    rec = {
        "kind": kind,
        "input": [list(c) for c in D.cells],
        "beta": list(beta.window),
        "compact": [list(c) for c in C.cells],
        "lam": list(lam),
        "mu": list(mu),
        "weight_check": ok,
    }
    emit_record(rec, args.format, out, diagrams=("input", "compact"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_straighten(args, out) -> int:
    cells, _ = ed.parse_cells(_read_input(args.input))
    D = ed.normalize(cells)
    form = pr.straighten(D)
    certificate = pr.expand_straightened(form) == pr.monomial_invariant(D)
    if args.self_check:
        other = pr.straighten(D, order="random", rng=random.Random(args.seed))
        certificate = certificate and other == form
    rec = {"input": [list(c) for c in D.cells], "terms": form.to_json(), "certificate": certificate}
    if args.format in ("text", "latex"):
        rec = {"input": rec["input"], "terms": str(form), "certificate": certificate}
    emit_record(rec, args.format, out, diagrams=("input",))
    return EXIT_OK if certificate else EXIT_FAIL


def run_suite(suite: str, n: int, trunc=None) -> list:
    if suite in SUITE_CAPS and n > SUITE_CAPS[suite]:
        raise UsageError(f"suite {suite} supports n <= {SUITE_CAPS[suite]}")
    if suite == "genfunction":
        return [fr.verify_genfunction(n, trunc)]
    if suite == "ogenfunction":
        return [fr.verify_ogenfunction(n, trunc)]
    if suite == "flip":
        return fr.verify_flip_symmetry(n)
    if suite == "corollary":
        return [fr.verify_corollary(n)]
    if suite == "table3":
        if n != 3:
            raise UsageError("suite table3 is defined for n = 3 only")
        return fr.verify_table3()
    if suite == "regular":
        return fr.verify_regular(n)
    if suite == "psi":
        return [fr.verify_psi_positivity(lab.lam, lab.rho, n) for lab in fr.irr_labels(n)]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args, out) -> int:
    n = args.n
    _cap_check(n, args.cap)
    if args.trunc is not None and args.trunc < n * n:
        raise UsageError("--trunc must be at least n^2")
    if args.suite == "all":
        suites = [s for s in SUITES[1:] if (s != "table3" or n == 3) and n <= SUITE_CAPS.get(s, n)]
    else:
        suites = [args.suite]
    reports = []
    for s in suites:
        reports.extend(run_suite(s, n, args.trunc))
    reports.sort(key=lambda r: (r.identity, r.label or ""))
    rows = [r.to_json() for r in reports]
    if args.format == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
    else:
        table = [{
            "identity": r.identity,
            "label": r.label or "",
            "n": r.n,
            "status": r.status,
            "first_discrepancy": "" if r.first_discrepancy is None else json.dumps(r.first_discrepancy),
        } for r in reports]
        emit_table(table, args.format, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_enumerate(args, out) -> int:
    n = args.n
    _cap_check(n, args.cap)
    what = args.what
    rows = []
    if what == "bn":
        rows = [{"beta": list(b.window), "fmaj": signed.fmaj(b)} for b in signed.enumerate_bn(n, cap=args.cap)]
    elif what == "compact-e":
        for b in signed.enumerate_bn(n, cap=args.cap):
            C = ed.compact_of_perm(b)
            rows.append({"beta": list(b.window), "top": list(C.a), "bottom": list(C.b)})
    elif what == "compact-o":
        for b in signed.enumerate_bn(n, cap=args.cap):
            C = od.compact_o_of_perm(b)
            rows.append({"beta": list(b.window), "top": list(C.a), "bottom": list(C.b)})
    elif what == "ediagrams":
        for D in ed.enumerate_ediagrams(n, args.max_entry):
            rows.append({"top": list(D.a), "bottom": list(D.b), "beta": list(ed.classifying_perm(D).window)})
    elif what == "odiagrams":
        for D in od.enumerate_odiagrams(n, args.max_entry):
            rows.append({"top": list(D.a), "bottom": list(D.b), "beta": list(od.colabel_classifying_perm(D).window)})
    emit_table(rows, args.format, out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank of B_n (default 2)")
    common.add_argument("--trunc", type=int, default=None, help="series truncation order (default 2n^2)")
    common.add_argument("--format", choices=("json", "csv", "latex", "text"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    common.add_argument("--self-check", action="store_true", help="re-verify results by an independent route")
    common.add_argument("--cap", type=int, default=signed.DEFAULT_CAP, help="enumeration cap on n")

    p = argparse.ArgumentParser(prog="hyperdiag", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("stats", parents=[common], help="statistics of every signed permutation")

    c = sub.add_parser("compactify", parents=[common], help="compactify a diagram and report phi")
    c.add_argument("input", nargs="?", help="diagram file (two-line or JSON); stdin if omitted")
    c.add_argument("--kind", choices=("e", "o"), default=None)

    s = sub.add_parser("straighten", parents=[common], help="straighten M(a,b) onto the compact basis")
    s.add_argument("input", nargs="?", help="e-diagram file; stdin if omitted")

    v = sub.add_parser("verify", parents=[common], help="check generating-function identities")
    v.add_argument("suite", choices=SUITES)

    e = sub.add_parser("enumerate", parents=[common], help="list group elements or diagrams")
    e.add_argument("what", choices=("bn", "compact-e", "compact-o", "ediagrams", "odiagrams"))
    e.add_argument("--max-entry", type=int, default=2)
    return p


COMMANDS = {
    "stats": cmd_stats,
    "compactify": cmd_compactify,
    "straighten": cmd_straighten,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except (UsageError, HyperdiagError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
