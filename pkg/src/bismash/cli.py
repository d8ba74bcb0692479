"""Command-line front end.

Subcommands build the bundled families, run the dimension computations,
cross-validate against the Wedderburn oracle and emit either a human table
or canonical JSON (byte-deterministic for a fixed configuration).

Exit codes: 0 success, 1 mathematical mismatch, 2 usage or parse error,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bismash as bm
from . import families, lingrp, permgrp, screen, wedderburn
from .errors import (
    CapExceededError,
    ConsistencyError,
    CycleParseError,
    FactorizationError,
    NotFrobeniusError,
    NotNilpotentError,
    OracleError,
)
from .numutil import prime_power

SCHEMA = 1

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "pass": bool(passed), "detail": detail}


def _closed_form(q: int) -> wedderburn.DegreeMultiset:
    return wedderburn.DegreeMultiset.of([1] * (q - 1) + [q - 1] + [q] * (q - 1))


def _oracle_check(fg: bm.FactorizedGroup, dims, seed: int, dim_cap: int) -> dict:
    if fg.dim > dim_cap:
        return _check(
            "oracle-agreement",
            True,
            f"skipped: dim {fg.dim} exceeds oracle cap {dim_cap} (warning)",
        )
    algebra = bm.build_algebra(fg)
    sca = algebra.to_structure_algebra(fg.splitting_prime())
    result = wedderburn.decompose(sca, seed=seed)
    agree = result.degrees == dims
    return _check(
        "oracle-agreement",
        agree,
        f"wedderburn over GF({result.prime}) gives {result.degrees}",
    )


def cmd_pgl(args) -> tuple[dict, int]:
    q = args.q
    pkg = lingrp.build_pgl2(q)
    fg = bm.factorize(pkg.G, pkg.C, pkg.S)
    dims = bm.kmm_dimensions(fg)
    closed = _closed_form(q)
    checks = [
        _check(
            "closed-form",
            dims == closed,
            f"kmm {dims} vs closed form {closed}",
        )
    ]
    checks.append(_oracle_check(fg, dims, args.seed, args.dim_cap))

    orbs = bm.right_orbits(fg)
    sizes = sorted(len(o) for o in orbs)
    checks.append(
        _check(
            "transitive-on-nonidentity",
            sizes == [1, q],
            f"right-action orbit sizes on the Singer cycle: {sizes}",
        )
    )
    xbar_idx = fg.l_index[pkg.xbar]
    stab = bm.orbit_stabilizer(fg, xbar_idx)
    cyclic = any(g.order() == stab.order for g in stab.elements())
    checks.append(
        _check(
            "generator-stabilizer-cyclic",
            stab.order == q - 1 and cyclic,
            f"Stab_S(xbar) has order {stab.order}, cyclic={cyclic}",
        )
    )
    ident_idx = fg.l_index[permgrp.Perm.identity(fg.G.degree)]
    stab1 = bm.orbit_stabilizer(fg, ident_idx)
    checks.append(
        _check(
            "identity-stabilizer-full",
            stab1.order == pkg.S.order,
            f"Stab_S(1) has order {stab1.order} = |S|",
        )
    )
    right = fg.actions().right
    u_images = {int(right[xbar_idx, fg.f_index[u]]) for u in pkg.unipotents}
    checks.append(
        _check(
            "unipotent-images-distinct",
            len(u_images) == q,
            f"{len(u_images)} distinct images of xbar under the q unipotents",
        )
    )
    ok = all(c["pass"] for c in checks)
    report = {
        "schema": SCHEMA,
        "command": "pgl",
        "inputs": {"q": q, "seed": args.seed, "dim_cap": args.dim_cap},
        "dims": list(dims),
        "checks": checks,
        "verdict": "match" if ok else "mismatch",
    }
    return report, EXIT_OK if ok else EXIT_MISMATCH


def cmd_bismash(args) -> tuple[dict, int]:
    with open(args.spec, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    G, L, F = bm.load_factorized_spec(data)
    fg = bm.factorize(G, L, F)
    dims = bm.kmm_dimensions(fg)
    orbs = bm.right_orbits(fg)
    stab_orders = [bm.orbit_stabilizer(fg, min(o)).order for o in orbs]
    checks = [
        _check(
            "sum-of-squares",
            dims.sum_of_squares() == fg.G.order,
            f"{dims} squares to |G| = {fg.G.order}",
        )
    ]
    checks.append(_oracle_check(fg, dims, args.seed, args.dim_cap))
    if fg.dim <= args.hopf_cap:
        try:
            bm.verify_hopf_axioms(fg, hopf_cap=args.hopf_cap)
            checks.append(_check("hopf-axioms", True, "exhaustive over the oracle prime"))
        except ConsistencyError as exc:
            checks.append(_check("hopf-axioms", False, str(exc)))
        cocomm = bm.cocommutativity_check(fg, hopf_cap=args.hopf_cap)
        checks.append(
            _check(
                "cocommutativity-criterion",
                True,
                f"cocommutative={cocomm.cocommutative}, "
                f"L-abelian-normal={cocomm.l_abelian_normal}",
            )
        )
        cocommutative = cocomm.cocommutative
    else:
        checks.append(
            _check(
                "hopf-axioms",
                True,
                f"skipped: dim {fg.dim} exceeds Hopf cap {args.hopf_cap} (warning)",
            )
        )
        cocommutative = None
    ok = all(c["pass"] for c in checks)
    report = {
        "schema": SCHEMA,
        "command": "bismash",
        "inputs": {
            "spec": args.spec,
            "seed": args.seed,
            "dim_cap": args.dim_cap,
            "hopf_cap": args.hopf_cap,
        },
        "orders": {"G": fg.G.order, "L": fg.L.order, "F": fg.F.order},
        "orbit_sizes": [len(o) for o in orbs],
        "stabilizer_orders": stab_orders,
        "dims": list(dims),
        "cocommutative": cocommutative,
        "checks": checks,
        "verdict": "match" if ok else "mismatch",
    }
    return report, EXIT_OK if ok else EXIT_MISMATCH


def cmd_frobenius(args) -> tuple[dict, int]:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        G, N, H = bm.load_factorized_spec(data)
        name = args.spec
    else:
        if not args.name:
            raise ValueError("a family name or --spec is required")
        G, N, H = families.builtin_frobenius(args.name)
        name = args.name
    rep = bm.frobenius_bismash_report(G, N, H)
    checks = [
        _check(
            "multiset-identity",
            rep.kmm == rep.predicted,
            f"kmm {rep.kmm} vs degrees(H) + {rep.regular_orbit_count} x |H| "
            f"= {rep.predicted}",
        ),
        _check(
            "nstar-order",
            rep.nstar_order == N.order,
            f"|N*| = {rep.nstar_order} with invariants {list(rep.nstar_invariants)}",
        ),
    ]
    ok = all(c["pass"] for c in checks)
    report = {
        "schema": SCHEMA,
        "command": "frobenius",
        "inputs": {"name": name, "seed": args.seed, "dim_cap": args.dim_cap},
        "orders": {"G": rep.fg.G.order, "N": N.order, "H": H.order},
        "dims": list(rep.kmm),
        "series_orders": list(rep.series_orders),
        "nstar_invariants": list(rep.nstar_invariants),
        "checks": checks,
        "verdict": "match" if ok else "mismatch",
    }
    return report, EXIT_OK if ok else EXIT_MISMATCH


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_screen(args) -> tuple[dict, int]:
    if args.range:
        lo, hi = _parse_range(args.range)
    elif args.q is not None:
        lo, hi = _parse_range(args.q)
    elif args.n is None:
        raise ValueError("--q, --range or --n is required")
    else:
        lo, hi = 1, 0  # normalizer check only
    single = lo == hi
    rows = []
    for q in range(lo, hi + 1):
        if prime_power(q) is None:
            if single:
                raise ValueError(f"q = {q} is not a prime power")
            continue
        rep = screen.screen_pattern(q, normalizer_order=lingrp.singer_normalizer_order)
        rows.append(
            {
                "q": q,
                "verdict": rep.verdict,
                "witness": rep.witness,
                "dims": list(rep.pattern.multiset),
                "checks": [
                    {"name": c.name, "pass": c.passed, "detail": c.detail}
                    for c in rep.checks
                ],
            }
        )
    checks = []
    if args.n is not None:
        order = lingrp.singer_normalizer_order(args.n)
        formula = args.n * (2**args.n - 1)
        checks.append(
            _check(
                "singer-normalizer-order",
                order == formula,
                f"|N_GL{args.n}(2)(Singer)| = {order}, n(2^n - 1) = {formula}",
            )
        )
    ok = all(c["pass"] for c in checks)
    report = {
        "schema": SCHEMA,
        "command": "screen",
        "inputs": {"range": [lo, hi], "n": args.n, "seed": args.seed},
        "results": rows,
        "checks": checks,
        "verdict": "ok" if ok else "mismatch",
        "scope": screen.ScreenReport.scope,
    }
    return report, EXIT_OK if ok else EXIT_MISMATCH


def _emit(report: dict, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")))
        sys.stdout.write("\n")
        return
    print(f"command: {report['command']}")
    for key in ("orders", "orbit_sizes", "stabilizer_orders", "series_orders",
                "nstar_invariants", "cocommutative"):
        if key in report and report[key] is not None:
            print(f"{key}: {report[key]}")
    if "dims" in report:
        print(f"dims: {report['dims']}")
    if report.get("results"):
        for row in report["results"]:
            witness = f" (witness {row['witness']})" if row["witness"] else ""
            print(f"q = {row['q']}: {row['verdict']}{witness}")
    for c in report.get("checks", []):
        mark = "PASS" if c["pass"] else "FAIL"
        print(f"[{mark}] {c['name']}: {c['detail']}")
    if "verdict" in report:
        print(f"verdict: {report['verdict']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bismash",
        description="bismash products of factorized groups: dimensions and checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--dim-cap", type=int, default=wedderburn.DEFAULT_DIM_CAP,
                       dest="dim_cap")
        p.add_argument("--hopf-cap", type=int, default=bm.HOPF_DIM_CAP,
                       dest="hopf_cap")

    p = sub.add_parser("pgl", help="PGL2(q) family dimensions and lemma checks")
    p.add_argument("--q", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_pgl)

    p = sub.add_parser("bismash", help="full report for a factorized-group spec file")
    p.add_argument("--spec", required=True)
    common(p)
    p.set_defaults(func=cmd_bismash)

    p = sub.add_parser("frobenius", help="Frobenius-family multiset identity")
    p.add_argument("name", nargs="?", help="agl1-<q> or heis7-z3")
    p.add_argument("--spec")
    common(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("screen", help="arithmetic screening of the degree pattern")
    p.add_argument("--q", help="single q or inclusive range A..B")
    p.add_argument("--range", help="inclusive range A..B")
    p.add_argument("--n", type=int, choices=(2, 3, 4),
                   help="also confirm the GLn(2) Singer-normalizer order")
    common(p)
    p.set_defaults(func=cmd_screen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        report, code = args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CycleParseError, FactorizationError, NotFrobeniusError,
            NotNilpotentError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    _emit(report, args.format)
    return code


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
