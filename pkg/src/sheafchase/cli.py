"""Command-line surface: exact cohomology tables, Littlewood-Richardson
decompositions, and scenario verification with replayable certificates.

Exit codes: 0 success / scenario passed, 1 scenario failed or flagged,
2 usage or parse error, 3 space/bundle mismatch, 4 unknown scenario,
5 inconsistent hypothesis set.
"""

from __future__ import annotations

import argparse
import inspect
import json
import re
import sys
from collections import Counter

from .bwb import (
    BundleExpr,
    GrassmannSpace,
    SchurTerm,
    line_bundle,
    omega_expr,
    tangent_term,
)
from .bwb import table as bwb_table
from .chase import quadric_table_fn
from .quadric import QuadricSpace, spinor_value
from .table import Val, add_vals
from .young import check_partition, lr_decompose
from .scenarios import (
    InconsistentHypotheses,
    UnknownScenario,
    default_window,
    list_scenarios,
    run_scenario,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_MISMATCH = 3
EXIT_UNKNOWN = 4
EXIT_INCONSISTENT = 5

FORMATS = ("json", "csv", "markdown", "cert-text")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# --- Spec parsing ---------------------------------------------------------


def parse_space(spec: str):
    m = re.fullmatch(r"gr:(\d+),(\d+)", spec)
    if m:
        try:
            return GrassmannSpace(int(m.group(1)), int(m.group(2)))
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE)
    m = re.fullmatch(r"q:(\d+)", spec)
    if m:
        try:
            return QuadricSpace(int(m.group(1)))
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE)
    raise CliError(
        f"bad space spec {spec!r}: expected gr:<k>,<n> or q:<n>", EXIT_PARSE
    )


def parse_window(spec: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+):(-?\d+)", spec)
    if not m:
        raise CliError(f"bad window {spec!r}: expected <lo>:<hi>", EXIT_PARSE)
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise CliError(f"empty window {spec!r}", EXIT_PARSE)
    return lo, hi


def parse_int_list(spec: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in spec.split(",") if x.strip() != "")
    except ValueError:
        raise CliError(f"bad integer list {spec!r}", EXIT_PARSE)


_ATOM_RES = [
    ("O", re.compile(r"O\((-?\d+)\)")),
    ("Omega", re.compile(r"Omega\^(\d+)\((-?\d+)\)")),
    ("Spinor", re.compile(r"Spinor\((-?\d+)\)")),
    ("SchurQ", re.compile(r"S_\((\d+(?:,\d+)*)\)Q")),
    ("SchurS", re.compile(r"S_\((\d+(?:,\d+)*)\)S")),
    ("Qdual", re.compile(r"Qdual")),
    ("Sdual", re.compile(r"Sdual")),
    ("Q", re.compile(r"Q")),
    ("S", re.compile(r"S")),
    ("T", re.compile(r"T")),
]


def tokenize_bundle(spec: str) -> list[tuple[str, object, int]]:
    """Token stream of (kind, payload, position); kinds are the atom names
    plus 'x' and '+'."""
    out = []
    pos = 0
    while pos < len(spec):
        ch = spec[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "x":
            out.append(("x", None, pos))
            pos += 1
            continue
        if ch == "+":
            out.append(("+", None, pos))
            pos += 1
            continue
        for kind, rx in _ATOM_RES:
            m = rx.match(spec, pos)
            if m:
                out.append((kind, m.groups(), pos))
                pos = m.end()
                break
        else:
            raise CliError(f"parse error at position {pos}: {spec[pos:]!r}", EXIT_PARSE)
    if not out:
        raise CliError("empty bundle spec", EXIT_PARSE)
    return out


def _parse_sum(tokens):
    """expr := product ('+' product)*; product := atom ('x' atom)*.
    Returns a sum-of-products list of atom token lists."""
    products, current = [], []
    expect_atom = True
    for kind, payload, pos in tokens:
        if kind in ("x", "+"):
            if expect_atom:
                raise CliError(f"parse error at position {pos}: unexpected {kind!r}", EXIT_PARSE)
            if kind == "+":
                products.append(current)
                current = []
            expect_atom = True
        else:
            if not expect_atom:
                raise CliError(
                    f"parse error at position {pos}: missing operator before atom", EXIT_PARSE
                )
            current.append((kind, payload, pos))
            expect_atom = False
    if expect_atom:
        raise CliError("parse error: dangling operator at end of spec", EXIT_PARSE)
    products.append(current)
    return products


def _grassmann_atom(kind, payload, space: GrassmannSpace) -> BundleExpr:
    rq, rs = space.rank_q, space.rank_s
    if kind == "O":
        return BundleExpr.from_term(line_bundle(int(payload[0]), space))
    if kind == "Omega":
        q, t = int(payload[0]), int(payload[1])
        if not 0 <= q <= space.dim:
            raise CliError(f"form degree {q} outside [0, {space.dim}] on {space}", EXIT_MISMATCH)
        return omega_expr(q, space).twisted(t)
    if kind == "T":
        return BundleExpr.from_term(tangent_term(space))
    if kind == "Q":
        return BundleExpr.from_term(SchurTerm((1,) + (0,) * (rq - 1), (0,) * rs))
    if kind == "Qdual":
        return BundleExpr.from_term(SchurTerm((0,) * (rq - 1) + (-1,), (0,) * rs))
    if kind == "S":
        return BundleExpr.from_term(SchurTerm((0,) * rq, (1,) + (0,) * (rs - 1)))
    if kind == "Sdual":
        return BundleExpr.from_term(SchurTerm((0,) * rq, (0,) * (rs - 1) + (-1,)))
    if kind in ("SchurQ", "SchurS"):
        lam = check_partition(parse_int_list(payload[0]))
        rank = rq if kind == "SchurQ" else rs
        if len(lam) > rank:
            raise CliError(
                f"partition {lam} has more than {rank} rows for {kind[-1]} on {space}",
                EXIT_MISMATCH,
            )
        padded = tuple(lam) + (0,) * (rank - len(lam))
        if kind == "SchurQ":
            return BundleExpr.from_term(SchurTerm(padded, (0,) * rs))
        return BundleExpr.from_term(SchurTerm((0,) * rq, padded))
    if kind == "Spinor":
        raise CliError("spinor bundles live on quadrics, not Grassmannians", EXIT_MISMATCH)
    raise CliError(f"unsupported atom {kind}", EXIT_MISMATCH)


def grassmann_bundle_table(spec: str, space: GrassmannSpace, window) -> dict:
    products = _parse_sum(tokenize_bundle(spec))
    total = BundleExpr.zero()
    for atoms in products:
        expr = _grassmann_atom(*atoms[0][:2], space)
        for kind, payload, _pos in atoms[1:]:
            expr = expr.tensor(_grassmann_atom(kind, payload, space), space)
        total = total + expr
    return bwb_table(total, space, range(window[0], window[1] + 1))


def quadric_bundle_table(spec: str, space: QuadricSpace, window) -> dict:
    """Quadric tables cover twisted forms, the tangent bundle, and spinor
    bundles; tensor products are only folded when one factor is a line
    bundle (anything else has no honest closed form here)."""
    n = space.n
    products = _parse_sum(tokenize_bundle(spec))
    form_atoms: Counter = Counter()
    spinor_twists: list[int] = []
    for atoms in products:
        twist = 0
        core = None  # (kind, payload)
        for kind, payload, pos in atoms:
            if kind == "O":
                twist += int(payload[0])
            elif kind in ("Omega", "T", "Spinor"):
                if core is not None:
                    raise CliError(
                        f"tensor product at position {pos} is not computable on {space}",
                        EXIT_MISMATCH,
                    )
                core = (kind, payload)
            else:
                raise CliError(f"atom {kind} is not defined on {space}", EXIT_MISMATCH)
        if core is None:
            form_atoms[(0, twist)] += 1
        elif core[0] == "Omega":
            q, t = int(core[1][0]), int(core[1][1])
            if not 0 <= q <= n:
                raise CliError(f"form degree {q} outside [0, {n}] on {space}", EXIT_MISMATCH)
            form_atoms[(q, t + twist)] += 1
        elif core[0] == "T":
            # TQ(t) = Omega^{n-1}(t + n)
            form_atoms[(n - 1, n + twist)] += 1
        else:
            spinor_twists.append(int(core[1][0]) + twist)
    form_fn = quadric_table_fn(form_atoms, n)
    out = {}
    for i in range(n + 1):
        for t in range(window[0], window[1] + 1):
            v = form_fn(i, t) if form_atoms else Val.zero()
            for st in spinor_twists:
                v = add_vals(v, spinor_value(i, t + st, n))
            out[(i, t)] = v
    return out


# --- Rendering ------------------------------------------------------------


def stable_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def table_json_obj(space, bundle: str, window, tbl) -> dict:
    entries = [
        {"i": i, "t": t, "value": v.render()}
        for (i, t), v in sorted(tbl.items())
        if not v.is_zero
    ]
    return {
        "command": "cohomology",
        "space": str(space),
        "bundle": bundle,
        "window": [window[0], window[1]],
        "nonzero_entries": entries,
        "zero_elsewhere": True,
    }


def render_table(space, bundle, window, tbl, fmt: str) -> str:
    if fmt == "json":
        return stable_json(table_json_obj(space, bundle, window, tbl))
    rows = [(i, t, v.render()) for (i, t), v in sorted(tbl.items()) if not v.is_zero]
    if fmt == "csv":
        lines = ["i,t,value"] + [f"{i},{t},{v}" for i, t, v in rows]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = [
            f"# {bundle} on {space}, twists {window[0]}..{window[1]}",
            "",
            "| i | t | value |",
            "| - | - | ----- |",
        ] + [f"| {i} | {t} | {v} |" for i, t, v in rows]
        lines.append("")
        lines.append(f"{len(rows)} nonzero entr(ies); all other window entries vanish.")
        return "\n".join(lines) + "\n"
    raise CliError(f"format {fmt} does not apply to cohomology tables", EXIT_PARSE)


def render_decomposition(expr: str, rank: int, terms, fmt: str) -> str:
    items = sorted(terms.items())
    if fmt == "json":
        return stable_json(
            {
                "command": "decompose",
                "expr": expr,
                "rank": rank,
                "terms": [{"partition": list(lam), "mult": m} for lam, m in items],
            }
        )
    if fmt == "csv":
        lines = ["partition,mult"] + [f"\"{','.join(map(str, lam))}\",{m}" for lam, m in items]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        body = ", ".join(f"({','.join(map(str, lam))}):{m}" for lam, m in items)
        return f"{expr} at rank {rank} = {body}\n"
    raise CliError(f"format {fmt} does not apply to decompositions", EXIT_PARSE)


def render_report(report, fmt: str) -> str:
    if fmt == "json":
        return stable_json({"command": "verify", "report": report.json_obj()})
    if fmt == "cert-text":
        if report.certificate is None:
            raise CliError("this scenario produced no certificate", EXIT_PARSE)
        return report.certificate.render()
    status = "PASS" if report.passed else "FAIL"
    lines = [
        f"scenario: {report.scenario}",
        f"status: {status}",
        f"verdict: {report.verdict}",
    ]
    for key in sorted(report.details):
        lines.append(f"  {key}: {report.details[key]}")
    lines.append("assumptions:")
    if report.certificate is not None and report.certificate.assumptions:
        lines.extend(f"  {a.render()}" for a in report.certificate.assumptions)
    else:
        lines.append("  (none)")
    lines.append("conclusions:")
    lines.extend(f"  {c}" for c in report.conclusions)
    if report.flags:
        lines.append("flags:")
        lines.extend(f"  {f}" for f in report.flags)
    if fmt == "markdown":
        lines = [f"## {report.scenario}: {status}"] + [f"- {ln.strip()}" for ln in lines[1:]]
    elif fmt != "csv":
        raise CliError(f"unknown format {fmt}", EXIT_PARSE)
    if fmt == "csv":
        out = ["field,value", f"scenario,{report.scenario}", f"status,{status}",
               f"verdict,{report.verdict}", f"flags,{len(report.flags)}"]
        return "\n".join(out) + "\n"
    return "\n".join(lines) + "\n"


def render_listing(listing, fmt: str) -> str:
    if fmt == "json":
        return stable_json({"command": "scenarios", "scenarios": listing})
    if fmt == "csv":
        lines = ["id,summary"] + [f"\"{s['id']}\",\"{s['summary']}\"" for s in listing]
        return "\n".join(lines) + "\n"
    lines = []
    for s in listing:
        lines.append(f"- **{s['id']}**: {s['summary']}")
        params = ", ".join(f"{k} ({v})" for k, v in s["params"].items())
        lines.append(f"  - params: {params}")
    return "\n".join(lines) + "\n"


# --- Commands -------------------------------------------------------------


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_cohomology(args) -> int:
    space = parse_space(args.space)
    window = parse_window(args.window) if args.window else default_window(space)
    if isinstance(space, GrassmannSpace):
        tbl = grassmann_bundle_table(args.bundle, space, window)
    else:
        tbl = quadric_bundle_table(args.bundle, space, window)
    _emit(render_table(space, args.bundle, window, tbl, args.format), args.out)
    return EXIT_OK


_DECOMP_ATOM = re.compile(r"wedge\^(\d+)|S_\((\d+(?:,\d+)*)\)")


def cmd_decompose(args) -> int:
    spec = args.expr.strip()
    if not spec:
        raise CliError("empty decomposition expression", EXIT_PARSE)
    factors = []
    pos = 0
    expect_atom = True
    while pos < len(spec):
        if spec[pos].isspace():
            pos += 1
            continue
        if spec[pos] == "x":
            if expect_atom:
                raise CliError(f"parse error at position {pos}: unexpected 'x'", EXIT_PARSE)
            expect_atom = True
            pos += 1
            continue
        m = _DECOMP_ATOM.match(spec, pos)
        if not m or not expect_atom:
            raise CliError(f"parse error at position {pos}: {spec[pos:]!r}", EXIT_PARSE)
        if m.group(1) is not None:
            factors.append((1,) * int(m.group(1)))
        else:
            factors.append(check_partition(parse_int_list(m.group(2))))
        expect_atom = False
        pos = m.end()
    if expect_atom:
        raise CliError("parse error: dangling operator at end of expression", EXIT_PARSE)
    acc = Counter({(): 1})
    for lam in factors:
        nxt: Counter = Counter()
        for mu, m0 in acc.items():
            for nu, m1 in lr_decompose(mu, lam, args.rank).items():
                nxt[nu] += m0 * m1
        acc = nxt
    _emit(render_decomposition(spec, args.rank, acc, args.format), args.out)
    return EXIT_OK


def _scenario_params(args) -> dict:
    params: dict = {}
    if args.space:
        space = parse_space(args.space)
        if isinstance(space, GrassmannSpace):
            params["k"], params["n"] = space.k, space.n
        else:
            params["n"] = space.n
    for name in ("k", "n", "r", "tmax", "smax", "spinor_twist"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    for name in ("degrees", "i_list", "extra_wedges"):
        v = getattr(args, name)
        if v is not None:
            params[name] = parse_int_list(v)
    if args.window:
        params["window"] = parse_window(args.window)
    if args.drop is not None:
        params["drop"] = args.drop
    if args.direction is not None:
        params["direction"] = args.direction
    return params


def cmd_verify(args) -> int:
    from .scenarios import SCENARIOS

    if args.scenario not in SCENARIOS:
        sys.stderr.write(f"unknown scenario {args.scenario!r}\n")
        return EXIT_UNKNOWN
    _, fn = SCENARIOS[args.scenario]
    params = _scenario_params(args)
    accepted = set(inspect.signature(fn).parameters)
    extra = set(params) - accepted
    if extra:
        raise CliError(
            f"scenario {args.scenario} does not take parameter(s) {sorted(extra)}",
            EXIT_PARSE,
        )
    try:
        report = run_scenario(args.scenario, raise_on_conflict=False, **params)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    _emit(render_report(report, args.format), args.out)
    if report.inconsistent:
        return EXIT_INCONSISTENT
    return EXIT_OK if report.passed and not report.flags else EXIT_FAIL


def cmd_scenarios(args) -> int:
    _emit(render_listing(list_scenarios(), args.format), args.out)
    return EXIT_OK


# --- Entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sheafchase",
        description="Exact sheaf cohomology on Grassmannians and quadrics, "
        "with mechanized exact-sequence chases.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="exact cohomology table of a bundle")
    p.add_argument("--space", required=True, help="gr:<k>,<n> or q:<n>")
    p.add_argument("--bundle", required=True, help="bundle spec, e.g. \"O(1)\" or \"Omega^1(0)\"")
    p.add_argument("--window", help="<lo>:<hi> twist window")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("decompose", help="Littlewood-Richardson decomposition")
    p.add_argument("expr", help="e.g. \"wedge^1 x wedge^1\" or \"S_(2,1) x S_(1)\"")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", help="run a registered scenario")
    p.add_argument("scenario", help="scenario id; see the scenarios command")
    p.add_argument("--space", help="gr:<k>,<n> or q:<n>")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--tmax", type=int)
    p.add_argument("--smax", type=int)
    p.add_argument("--spinor-twist", type=int, dest="spinor_twist")
    p.add_argument("--degrees", help="comma-separated integers")
    p.add_argument("--i-list", dest="i_list", help="comma-separated integers")
    p.add_argument("--extra-wedges", dest="extra_wedges", help="comma-separated integers")
    p.add_argument("--window", help="<lo>:<hi> twist window")
    p.add_argument("--drop", help="seed group to omit (hypothesis-honesty check)")
    p.add_argument("--direction", choices=("forward", "converse", "both"))
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("scenarios", help="list registered scenarios")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(fn=cmd_scenarios)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except UnknownScenario as exc:
        sys.stderr.write(f"unknown scenario {exc}\n")
        return EXIT_UNKNOWN
    except InconsistentHypotheses as exc:
        sys.stderr.write(f"inconsistent hypotheses: {exc}\n")
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
