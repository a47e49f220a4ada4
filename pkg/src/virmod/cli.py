"""Command-line surface and machine-readable reports.

Every subcommand prints an aligned text table and can additionally emit a
canonical JSON or CSV report.  Rationals serialize as exact "num/den"
strings.  Exit codes: 0 all checks pass, 1 a verification failed, 2 usage
or contract error.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__, coset, virasoro, weights
from .exact import QQ, matrix, rank
from .virasoro import DegenerateParams, VermaParams, gram_matrix

# Catalogue of documented divergences between the published statements and
# this implementation's conventions; emitted as `info` notes, never `fail`.
DISCREPANCIES = {
    "ell3-nonprime-9": (
        "the published bad-prime list for ell=3 includes 9, which is not prime; "
        "the classifier reports primes only and omits it"
    ),
    "g-range": (
        "the published good-candidate range [1, 2l^2+l-3] misses the top block of "
        "the complement (e.g. {8, 9} at ell=2); the block-union identity holds on "
        "[1, 2l^2+2l-3], exposed via --corrected"
    ),
    "p2-convention": (
        "p = 2 is classified bad by convention; the bracket normalization carries "
        "factors of 1/2, so characteristic 2 is outside the engine"
    ),
    "degenerate-convention": (
        "weights with no image mod p are excluded from the collision comparison and "
        "listed separately; this reproduces the published good/bad verdicts"
    ),
    "probe-proxy": (
        "the mod-p minimal series is probed as the irreducible quotient of the mod-p "
        "Verma module; graded Gram ranks are compared against characteristic 0"
    ),
}


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _label(lab: weights.MinimalLabel) -> str:
    return f"({lab.m},{lab.n})"


@dataclass
class ReportEnvelope:
    command: str
    parameters: dict
    results: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)

    def add(self, name: str, status: str, detail: str = "") -> None:
        self.results.append({"name": name, "status": status, "detail": detail})

    def note(self, key: str) -> None:
        if not any(n["id"] == key for n in self.notes):
            self.notes.append({"id": key, "note": DISCREPANCIES[key]})

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.add(name, "pass" if ok else "fail", detail)

    @property
    def failed(self) -> bool:
        return any(r["status"] == "fail" for r in self.results)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "parameters": self.parameters,
            "version": __version__,
            "results": self.results,
            "notes": self.notes,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(env: ReportEnvelope, args) -> int:
    width = max((len(r["name"]) for r in env.results), default=4)
    print(f"{env.command}  ({env.parameters})")
    for r in env.results:
        print(f"  {r['name']:<{width}}  {r['status']:<4}  {r['detail']}")
    for n in env.notes:
        print(f"  note[{n['id']}]: {n['note']}")
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as f:
            f.write(env.to_json())
    if getattr(args, "csv", None):
        with open(args.csv, "w", encoding="utf-8", newline="") as f:
            w = csv.writer(f)
            w.writerow(["name", "status", "detail"])
            for r in env.results:
                w.writerow([r["name"], r["status"], r["detail"]])
    return 1 if env.failed else 0


def _parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def _parse_label(s: str) -> tuple[int, int]:
    m, n = s.split(",")
    return int(m), int(n)


# ---------------------------------------------------------------- subcommands


def cmd_bad_primes(args) -> int:
    env = ReportEnvelope("bad-primes", {"ell": args.ell})
    bad = weights.bad_primes(args.ell)
    env.add("bad-primes", "pass", "{" + ", ".join(map(str, bad)) + "}")
    if args.ell == 3:
        env.note("ell3-nonprime-9")
    env.note("p2-convention")
    env.note("degenerate-convention")
    return _emit(env, args)


def cmd_classify(args) -> int:
    env = ReportEnvelope("classify", {"ell": args.ell, "prime": args.prime})
    cls = weights.classify_prime(args.ell, args.prime)
    env.add("status", "pass", cls.status)
    if cls.collisions:
        pairs = "; ".join(f"{_label(a)}~{_label(b)}" for a, b in cls.collisions)
        env.add("collisions", "info", pairs)
    if cls.degenerate:
        env.add("degenerate", "info", ", ".join(_label(l) for l in cls.degenerate))
        env.note("degenerate-convention")
    env.add("central-charge-defined", "info", str(cls.central_charge_defined).lower())
    if args.prime == 2:
        env.note("p2-convention")
    return _emit(env, args)


def cmd_bset(args) -> int:
    env = ReportEnvelope("bset", {"ell": args.ell, "mode": args.mode})
    if args.mode == "bruteforce":
        env.add("bset", "pass", "{" + ", ".join(map(str, weights.b_set_bruteforce(args.ell))) + "}")
    else:
        env.add("bset", "pass", str(weights.b_set_intervals(args.ell)))
    return _emit(env, args)


def cmd_gset(args) -> int:
    env = ReportEnvelope("gset", {"ell": args.ell, "corrected": args.corrected})
    env.add("gset", "pass", str(weights.g_set(args.ell, corrected=args.corrected)))
    if not args.corrected:
        env.note("g-range")
    return _emit(env, args)


def cmd_dmatrix(args) -> int:
    env = ReportEnvelope("dmatrix", {"ell": args.ell})
    for row in weights.d_matrix(args.ell):
        env.add("row", "pass", "  ".join(f"{v:>3}" for v in row))
    return _emit(env, args)


def cmd_gram(args) -> int:
    env = ReportEnvelope(
        "gram",
        {"c": _rat(args.c), "h": _rat(args.h), "level": args.level, "prime": args.prime},
    )
    if args.prime is None:
        params = VermaParams.rational(args.c, args.h)
        fmt = _rat
    else:
        try:
            params = VermaParams.mod_p(args.c, args.h, args.prime)
        except ValueError as e:
            env.add("gram", "info", f"degenerate parameters: {e}")
            return _emit(env, args)
        fmt = str
    m = gram_matrix(params, args.level)
    for row in m.entries:
        env.add("row", "pass", "  ".join(fmt(v) for v in row))
    env.add("rank", "info", str(rank(m)))
    return _emit(env, args)


def cmd_probe(args) -> int:
    m, n = args.label
    env = ReportEnvelope(
        "probe",
        {"ell": args.ell, "label": f"{m},{n}", "prime": args.prime, "max_level": args.max_level},
    )
    env.note("probe-proxy")
    label = weights.canonicalize(args.ell, m, n)
    try:
        verdict = virasoro.irreducibility_probe(args.ell, label, args.prime, args.max_level)
    except DegenerateParams as e:
        env.add("probe", "info", f"degenerate parameters: {e}")
        env.note("degenerate-convention")
        return _emit(env, args)
    for lev, rq, rp in verdict.levels:
        env.add(f"level-{lev}", "info", f"rank QQ = {rq}, rank mod p = {rp}")
    env.add("verdict", "info", verdict.verdict + (f" at level {verdict.drop_level}" if verdict.drop_level is not None else ""))
    return _emit(env, args)


def _verify_range(args) -> list[int]:
    if args.ell_max is not None:
        return list(range(2, args.ell_max + 1))
    return [args.ell if args.ell is not None else 2]


def cmd_verify(args) -> int:
    env = ReportEnvelope(
        "verify", {"what": args.what, "ell": args.ell, "ell_max": args.ell_max}
    )
    ells = _verify_range(args)
    if args.what == "prop-h":
        for ell in ells:
            r = weights.verify_prop_h(ell)
            env.check(f"prop-h ell={ell}", r.passed, r.detail)
    elif args.what == "prop-x":
        for ell in ells:
            env.check(f"prop-x ell={ell}", weights.verify_prop_x(ell).passed)
    elif args.what == "g-identity":
        for ell in ells:
            env.check(f"g-identity ell={ell}", weights.verify_g_identity(ell).passed)
        env.note("g-range")
    elif args.what == "gko":
        for ell in ells:
            rep = coset.gko_verify(ell)
            env.check(f"gko ell={ell}", rep.passed, f"{rep.total_count} summands")
    elif args.what == "table1":
        for row in coset.table1_check():
            env.check(f"table1 ell={row.ell}", row.consistent, f"{row.p_max_known} < {row.bound}")
    return _emit(env, args)


# ---------------------------------------------------------- reproduce-paper

EXPECTED_BAD_PRIMES = {
    2: [2, 7],
    3: [2, 3, 7, 13, 17],
    4: [p for p in weights.primes_upto(33) if p not in (5, 19, 29, 31)],
    5: [p for p in weights.primes_upto(52) if p not in (7, 29, 41, 43, 47)],
    6: [p for p in weights.primes_upto(75) if p not in (7, 41, 71, 73)],
}

EXPECTED_D5 = [
    [2, 4, 10, 16, 22, 28],
    [9, 3, 3, 9, 15, 21],
    [16, 10, 4, 2, 8, 14],
    [23, 17, 11, 5, 1, 7],
    [30, 24, 18, 12, 6, 0],
    [37, 31, 25, 19, 13, 7],
    [44, 38, 32, 26, 20, 14],
    [51, 45, 39, 33, 27, 21],
    [58, 52, 46, 40, 34, 28],
]


def _level2_closed_form(c: Fraction, h: Fraction):
    return [[4 * h + c / 2, 6 * h], [6 * h, 8 * h * h + 4 * h]]


def reproduce(env: ReportEnvelope, probe_level: int = 8) -> None:
    # 1. bad-prime example lists
    for ell, expected in EXPECTED_BAD_PRIMES.items():
        got = weights.bad_primes(ell)
        env.check(f"bad-primes ell={ell}", got == expected, "{" + ", ".join(map(str, got)) + "}")
    env.note("ell3-nonprime-9")
    env.note("p2-convention")
    env.note("degenerate-convention")

    # 2. interval decomposition of the collision set, plus extremes
    ok = all(weights.verify_prop_x(ell).passed for ell in range(2, 101))
    extremes = all(
        max(b := weights.b_set_bruteforce(ell)) == 2 * (ell * ell + ell - 1)
        and b[-2] == 2 * ell * ell + ell - 3
        for ell in range(2, 101)
    )
    env.check("collision-set intervals ell=2..100", ok)
    env.check("collision-set extremes ell=2..100", extremes)

    # 3. printed difference table at ell=5
    env.check("difference-table ell=5", weights.d_matrix(5) == EXPECTED_D5)

    # 4. good-candidate block identity
    ok = all(weights.verify_g_identity(ell).passed for ell in range(2, 101))
    env.check("g-identity corrected range ell=2..100", ok)
    published_fails = weights.g_set(2, corrected=False) != weights.g_blocks(2)
    env.add(
        "g-identity published range ell=2",
        "info",
        "fails as documented (missing {8, 9})" if published_fails else "unexpectedly holds",
    )
    env.note("g-range")

    # 5. neighbour-prime and excluded-square checks
    ok = True
    for ell in range(2, 101):
        b = weights.b_set_intervals(ell)
        if (ell + 1) ** 2 in b or (ell + 2) ** 2 in b:
            ok = False
        for q in (ell + 1, ell + 2):
            if weights._is_prime(q) and weights.classify_prime(ell, q).is_bad:
                ok = False
    env.check("neighbour-prime/excluded-square suite ell=2..100", ok)

    # 6. level-2 Gram closed form at deterministic random rationals
    rng = random.Random(0)
    ok = True
    for _ in range(5):
        c = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        h = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        got = gram_matrix(VermaParams.rational(c, h), 2)
        if got != matrix(QQ, _level2_closed_form(c, h)):
            ok = False
    env.check("level-2 Gram closed form (5 samples)", ok)

    # 7. determinant vanishing pattern
    for ell in (2, 3):
        for lab in weights.canonical_labels(ell):
            rep = virasoro.kac_vanishing_check(ell, lab, n_max=8)
            env.check(
                f"vanishing ell={ell} label={_label(lab)}",
                rep.passed,
                f"first zero at level {rep.d_min}",
            )

    # 8. rank-comparison probes at ell=2
    env.note("probe-proxy")
    for lab in weights.canonical_labels(2):
        for p in (11, 13, 101):
            v = virasoro.irreducibility_probe(2, lab, p, probe_level)
            env.check(f"probe ell=2 label={_label(lab)} p={p}", v.consistent)
        v7 = virasoro.irreducibility_probe(2, lab, 7, probe_level)
        detail = v7.verdict + (f" at level {v7.drop_level}" if v7.drop_level is not None else "")
        env.add(f"probe ell=2 label={_label(lab)} p=7 (experiment)", "info", detail)

    # 9. coset structural suite
    for ell in range(2, 21):
        rep = coset.gko_verify(ell)
        env.check(f"gko ell={ell}", rep.passed, f"{rep.total_count} summands")

    # 10. reducible-Weyl-module table audit
    for row in coset.table1_check():
        env.check(f"table1 ell={row.ell}", row.consistent, f"{row.p_max_known} < {row.bound}")


def cmd_reproduce(args) -> int:
    env = ReportEnvelope("reproduce-paper", {})
    reproduce(env)
    return _emit(env, args)


# --------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virmod", description="exact verification of minimal-series prime data"
    )
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--json", metavar="PATH", help="write a canonical JSON report")
    out.add_argument("--csv", metavar="PATH", help="write a CSV report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bad-primes", parents=[out])
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_bad_primes)

    p = sub.add_parser("classify", parents=[out])
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bset", parents=[out])
    p.add_argument("--ell", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bruteforce", dest="mode", action="store_const", const="bruteforce")
    g.add_argument("--intervals", dest="mode", action="store_const", const="intervals")
    p.set_defaults(func=cmd_bset, mode="intervals")

    p = sub.add_parser("gset", parents=[out])
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--corrected", action="store_true")
    p.set_defaults(func=cmd_gset)

    p = sub.add_parser("dmatrix", parents=[out])
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_dmatrix)

    p = sub.add_parser("verify", parents=[out])
    p.add_argument("what", choices=["prop-h", "prop-x", "gko", "g-identity", "table1"])
    p.add_argument("--ell", type=int)
    p.add_argument("--ell-max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gram", parents=[out])
    p.add_argument("--c", type=_parse_fraction, required=True)
    p.add_argument("--h", type=_parse_fraction, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("probe", parents=[out])
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--label", type=_parse_label, required=True, metavar="M,N")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--max-level", type=int, default=8)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("reproduce-paper", parents=[out])
    p.set_defaults(func=cmd_reproduce)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
