"""Command-line front end.

Knots are given as ``catalog:<name>`` or as a path to a front file.  Exit
status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .dga import SIGN_CONVENTIONS, DGAError, build_dga, grading_census, verify_dga
from .diagram import CATALOG_TEXT, DiagramError, FrontDiagram, catalog, classical_invariants, parse_front
from .field import FieldError, gl_order, make_field
from .ncpoly import format_poly
from .repcat import homotopy_cardinality
from .reps import enumerate_reps, rep_number
from .rulings import enumerate_rulings, ruling_polynomial
from .satellite import colored_ruling_polynomial
from .verify import ruling_side, verify_identity

SCHEMA = 1
SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class InputError(Exception):
    pass


def load_knot(source: str) -> FrontDiagram:
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        try:
            return catalog(name)
        except KeyError as e:
            raise InputError(str(e.args[0]) if e.args else f"unknown catalog knot {name!r}") from None
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {source}: {e.strerror}") from None
    return parse_front(text)


def parse_qs(text: str) -> list[int]:
    try:
        qs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad q list {text!r}") from None
    if not qs:
        raise InputError("empty q list")
    for q in qs:
        make_field(q)  # raises FieldError for non prime powers
    return qs


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        payload = {"schema": SCHEMA, "command": args.command, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _require_r0(d: FrontDiagram) -> None:
    r = classical_invariants(d).r
    if r != 0:
        raise InputError(f"rotation number is {r}; representations need r = 0")


def cmd_invariants(args) -> int:
    d = load_knot(args.knot)
    inv = classical_invariants(d)
    payload = {"tb": inv.tb, "r": inv.r, "writhe": inv.writhe, "right_cusps": inv.right_cusps}
    lines = [f"tb = {inv.tb}", f"r = {inv.r}", f"writhe = {inv.writhe}"]
    if inv.crossing_gradings is not None:
        grades = {str(k + 1): v for k, v in sorted(inv.crossing_gradings.items())}
        payload["crossing_gradings"] = grades
        listed = ", ".join(f"{k}: {v}" for k, v in grades.items()) or "none"
        lines.append("crossing gradings (event: grading): " + listed)
    _emit(args, payload, lines)
    return 0


def cmd_dga(args) -> int:
    d = load_knot(args.knot)
    _require_r0(d)
    g = build_dga(d, args.signs)
    report = verify_dga(g)
    counts, chi = grading_census(g)
    payload = {"dga": g.to_json(), "check": str(report), "census": {str(k): v for k, v in counts.items()}, "chi_star": chi}
    lines = [f"{a} (grading {g.degree[a]}): d{a} = {format_poly(g.differential[a])}" for a in g.names]
    lines += [str(report), f"census {counts}, chi* = {chi}"]
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def cmd_rulings(args) -> int:
    d = load_knot(args.knot)
    _require_r0(d)
    rs = enumerate_rulings(d, args.m)
    poly = ruling_polynomial(d, args.m)
    label = f"R{str(args.m).translate(SUPERSCRIPTS)}(z)"
    payload = {"m": args.m, "rulings": [[k + 1 for k in r.switches] for r in rs], "polynomial": str(poly)}
    lines = [f"ruling {i + 1}: switches at events {[k + 1 for k in r.switches]}" for i, r in enumerate(rs)]
    lines.append(f"{label} = {poly}")
    _emit(args, payload, lines)
    return 0


def cmd_colored(args) -> int:
    d = load_knot(args.knot)
    _require_r0(d)
    qs = parse_qs(args.q) if args.q else []
    R = colored_ruling_polynomial(d, args.n)
    values = {str(q): str(R.evaluate(q)) for q in qs}
    sides = {str(q): str(ruling_side(d, args.n, q, R)) for q in qs}
    payload = {"n": args.n, "polynomial": str(R), "values": values, "ruling_side": sides}
    lines = [f"R_{args.n}(s) = {R}   (s^2 = q)"]
    lines += [f"q={q}: R_{args.n} = {values[str(q)]}, q^(n^2 tb/2) R_{args.n} = {sides[str(q)]}" for q in qs]
    _emit(args, payload, lines)
    return 0


def cmd_reps(args) -> int:
    d = load_knot(args.knot)
    _require_r0(d)
    g = build_dga(d)
    rows = []
    for q in parse_qs(args.q):
        reps = enumerate_reps(g, args.n, q)
        rows.append(
            {
                "q": q,
                "count": len(reps),
                "gl_order": gl_order(args.n, q),
                "rep_number": str(rep_number(g, args.n, q, len(reps))),
                **({"representations": [r.to_json() for r in reps]} if args.list else {}),
            }
        )
    lines = [f"n={args.n} q={r['q']}: {r['count']} representations, rep number {r['rep_number']}" for r in rows]
    if args.list:
        for r in rows:
            lines += [f"  {json.dumps(x, sort_keys=True)}" for x in r["representations"]]
    _emit(args, {"n": args.n, "rows": rows}, lines)
    return 0


def _homcard_row(knot: str, n: int, q: int) -> dict:
    g = build_dga(load_knot(knot))
    rep = homotopy_cardinality(g, n, q)
    return {
        "q": q,
        "count": rep.count,
        "categorical": str(rep.categorical),
        "closed_form": str(rep.closed_form),
        "match": rep.categorical == rep.closed_form,
        "classes": [
            {
                "representative": c.representative.to_json(),
                "size": c.size,
                "aut": c.aut,
                "cohomology": {str(i): v for i, v in sorted(c.cohomology.items())},
            }
            for c in rep.classes
        ],
    }


def _verify_row(knot: str, n: int, q: int) -> dict:
    row = verify_identity(load_knot(knot), n, q)
    return row.to_json()


def _map(fn, knot: str, n: int, qs: list[int], jobs: int) -> list[dict]:
    if jobs <= 1 or len(qs) <= 1:
        return [fn(knot, n, q) for q in qs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, knot, n, q) for q in qs]
        return [f.result() for f in futures]


def cmd_homcard(args) -> int:
    d = load_knot(args.knot)
    _require_r0(d)
    rows = _map(_homcard_row, args.knot, args.n, parse_qs(args.q), args.jobs)
    lines = []
    for r in rows:
        lines.append(f"n={args.n} q={r['q']}: categorical {r['categorical']}, closed form {r['closed_form']}")
        for c in r["classes"]:
            dims = ", ".join(f"dim H^{i} = {v}" for i, v in c["cohomology"].items())
            lines.append(f"  class of size {c['size']}, |Aut| = {c['aut']}, {dims}")
    _emit(args, {"n": args.n, "rows": rows}, lines)
    return 0 if all(r["match"] for r in rows) else 1


def cmd_verify(args) -> int:
    d = load_knot(args.knot)
    _require_r0(d)
    rows = _map(_verify_row, args.knot, args.n, parse_qs(args.q), args.jobs)
    ok = all(r["categorical_eq_closed_form"] and r["closed_form_eq_ruling_side"] for r in rows)
    lines = [
        f"n={args.n} q={r['q']}: categorical {r['categorical']} | closed form {r['closed_form']} | "
        f"ruling side {r['ruling_side']} | "
        + ("agree" if r["categorical_eq_closed_form"] and r["closed_form_eq_ruling_side"] else "MISMATCH")
        for r in rows
    ]
    lines.append("all agree" if ok else "mismatch found")
    _emit(args, {"knot": args.knot, "n": args.n, "rows": rows, "ok": ok}, lines)
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    if args.name is None:
        _emit(args, {"knots": sorted(CATALOG_TEXT)}, sorted(CATALOG_TEXT))
        return 0
    d = load_knot(f"catalog:{args.name}")
    _emit(args, {"name": args.name, "front": d.serialize()}, [d.serialize().rstrip("\n")])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legrep", description="Legendrian knot representation counts and rulings")
    sub = p.add_subparsers(dest="command", required=True)

    def knot_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("knot", help="catalog:<name> or a front file")
        sp.add_argument("--json", action="store_true", help="JSON on stdout")
        return sp

    knot_cmd("invariants", "tb, r and crossing gradings").set_defaults(func=cmd_invariants)
    sp = knot_cmd("dga", "Chekanov-Eliashberg DGA with a d^2 check")
    sp.add_argument("--signs", default="LT", choices=SIGN_CONVENTIONS, help="negative quadrants at even crossings")
    sp.set_defaults(func=cmd_dga)
    sp = knot_cmd("rulings", "normal rulings and the ruling polynomial")
    sp.add_argument("-m", type=int, default=0, help="grading modulus (0 = graded)")
    sp.set_defaults(func=cmd_rulings)
    sp = knot_cmd("colored-ruling", "n-colored ruling polynomial")
    sp.add_argument("-n", type=int, default=1)
    sp.add_argument("-q", default="", help="comma separated prime powers to evaluate at")
    sp.set_defaults(func=cmd_colored)
    for name, fn, help_text in (
        ("reps", cmd_reps, "count n-dimensional representations over F_q"),
        ("homcard", cmd_homcard, "homotopy cardinality by classes and by the closed form"),
        ("verify", cmd_verify, "three-way check of categorical, closed-form and ruling-side values"),
    ):
        sp = knot_cmd(name, help_text)
        sp.add_argument("-n", type=int, default=1)
        sp.add_argument("-q", default="2", help="comma separated prime powers")
        if name == "reps":
            sp.add_argument("--list", action="store_true", help="list every representation")
        else:
            sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        sp.set_defaults(func=fn)
    sp = sub.add_parser("catalog", help="list built-in fronts or print one")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) < 1:
        print("error: -n must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, DiagramError, DGAError, FieldError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
