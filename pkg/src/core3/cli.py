"""Command-line front end.

Subcommands: ``compute`` (one value), ``table`` (CSV or JSONL stream),
``verify`` (one identity family), ``selfcheck`` (cross-validation plus the
whole identity battery, with per-family timing).

Exit codes: 0 success, 1 verification failure, 2 usage error.  Values are
always printed as decimal strings so downstream JSON consumers never hit
the 53-bit number limit.  Output ordering is deterministic: ascending n,
JSON keys fixed as kind, n, value, method.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import __version__, arith, identities, lambert, partitions, series

KINDS = ("a3", "A3", "B3")
METHODS = ("formula", "series", "lambert", "brute")
TUPLE_SIZE = {"a3": 1, "A3": 2, "B3": 3}

DEFAULT_ORDER = 2000
DEFAULT_BRUTE_CAP = 40

ENV_SIEVE_LIMIT = "CORE3_SIEVE_LIMIT"
ENV_BRUTE_CAP = "CORE3_BRUTE_CAP"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    """Run-wide knobs; flags win over environment variables over defaults."""

    order: int = DEFAULT_ORDER
    brute_cap: int = DEFAULT_BRUTE_CAP
    sieve_limit: int = arith.DEFAULT_SIEVE_LIMIT


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be a positive integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"{name} must be a positive integer, got {raw!r}")
    return value


def _make_config(args) -> Config:
    order = getattr(args, "order", None)
    if order is None:
        order = DEFAULT_ORDER
    if order < 1:
        raise UsageError("--order must be >= 1")
    cap = getattr(args, "brute_cap", None)
    if cap is None:
        cap = _env_int(ENV_BRUTE_CAP, DEFAULT_BRUTE_CAP)
    if cap < 0:
        raise UsageError("--brute-cap must be >= 0")
    sieve_limit = _env_int(ENV_SIEVE_LIMIT, arith.DEFAULT_SIEVE_LIMIT)
    return Config(order=order, brute_cap=cap, sieve_limit=sieve_limit)


def _record(kind: str, n: int, value: int, method: str) -> dict:
    return {"kind": kind, "n": n, "value": str(value), "method": method}


def _closed_form(kind: str):
    return {"a3": arith.core_count, "A3": arith.pair_count,
            "B3": arith.triple_count}[kind]


def _evaluate(kind: str, n: int, method: str, cfg: Config) -> int:
    if n < 0:
        raise UsageError("n must be >= 0")
    k = TUPLE_SIZE[kind]
    if method == "formula":
        return _closed_form(kind)(n)
    if method == "series":
        if n >= cfg.order:
            raise UsageError(
                f"n={n} exceeds the series order budget {cfg.order}; raise --order")
        return series.core_tuple_series(3, k, n + 1)[n]
    if method == "lambert":
        if n >= cfg.order:
            raise UsageError(
                f"n={n} exceeds the series order budget {cfg.order}; raise --order")
        return lambert.tuple_series(k, n + 1)[n]
    if method == "brute":
        if n > cfg.brute_cap:
            raise UsageError(
                f"n={n} exceeds the brute-force cap {cfg.brute_cap}; raise --brute-cap")
        return partitions.brute_tuple_count(n, 3, k, cap=cfg.brute_cap)
    raise UsageError(f"unknown method {method!r}")


def _cmd_compute(args, cfg: Config) -> int:
    value = _evaluate(args.kind, args.n, args.method, cfg)
    print(json.dumps(_record(args.kind, args.n, value, args.method)))
    return 0


def _table_values(kind: str, n_max: int, method: str, cfg: Config) -> list[int]:
    k = TUPLE_SIZE[kind]
    if n_max == 0:
        return []
    if method == "formula":
        fn = _closed_form(kind)
        return [fn(n) for n in range(n_max)]
    if method == "series":
        if n_max > cfg.order:
            raise UsageError(
                f"--nmax {n_max} exceeds the series order budget {cfg.order}")
        s = series.core_tuple_series(3, k, n_max)
        return list(s.coeffs)
    if method == "lambert":
        if n_max > cfg.order:
            raise UsageError(
                f"--nmax {n_max} exceeds the series order budget {cfg.order}")
        return list(lambert.tuple_series(k, n_max).coeffs)
    if method == "brute":
        if n_max - 1 > cfg.brute_cap:
            raise UsageError(
                f"--nmax {n_max} exceeds the brute-force cap {cfg.brute_cap}")
        return [partitions.brute_tuple_count(n, 3, k, cap=cfg.brute_cap)
                for n in range(n_max)]
    raise UsageError(f"unknown method {method!r}")


def _cmd_table(args, cfg: Config) -> int:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    values = _table_values(args.kind, args.nmax, args.method, cfg)
    out = sys.stdout
    if args.format == "csv":
        out.write("kind,n,value,method\n")
        for n, value in enumerate(values):
            out.write(f"{args.kind},{n},{value},{args.method}\n")
    else:
        for n, value in enumerate(values):
            out.write(json.dumps(_record(args.kind, n, value, args.method)))
            out.write("\n")
    return 0


def _or(value, fallback):
    return fallback if value is None else value


def _as_list(reports) -> list:
    return reports if isinstance(reports, list) else [reports]


def _fam_a3_even_power(args, cfg):
    return _as_list(identities.check_a3_even_power(
        _or(args.p, 2), _or(args.kmax, 4), _or(args.nmax, 200)))


def _fam_bn(args, cfg):
    return identities.check_baruah_nath(_or(args.kmax, 5), _or(args.nmax, 200))


def _fam_lin(args, cfg):
    return _as_list(identities.check_lin(_or(args.nmax, 500)))


def _fam_relation_general(args, cfg):
    return _as_list(identities.check_A3_relations(
        _or(args.p, 5), _or(args.kmax, 4), _or(args.nmax, 200),
        coprime_variant=False))


def _fam_relation_coprime(args, cfg):
    return _as_list(identities.check_A3_relations(
        _or(args.p, 5), _or(args.kmax, 4), _or(args.nmax, 200),
        coprime_variant=True))


def _fam_a3_residues(args, cfg):
    return identities.check_A3_residue_families(
        _or(args.kmax, 4), _or(args.nmax, 200))


def _fam_b3_ids(args, cfg):
    return identities.check_b3_power_families(
        _or(args.kmax, 5), _or(args.nmax, 200))


def _fam_b3_relation_general(args, cfg):
    return _as_list(identities.check_B3_relations(
        _or(args.p, 5), _or(args.kmax, 4), _or(args.nmax, 200),
        coprime_variant=False))


def _fam_b3_relation_coprime(args, cfg):
    return _as_list(identities.check_B3_relations(
        _or(args.p, 5), _or(args.kmax, 4), _or(args.nmax, 200),
        coprime_variant=True))


def _fam_b3_residues(args, cfg):
    return identities.check_B3_residue_families(
        _or(args.kmax, 4), _or(args.nmax, 200))


def _fam_xia_congruence(args, cfg):
    return _as_list(identities.check_xia_congruences(_or(args.nmax, 1000)))


def _fam_xia_conjecture(args, cfg):
    xp = identities.XiaParams(_or(args.p, 3), _or(args.j, 1))
    return _as_list(identities.check_xia_conjecture(
        xp, _or(args.alphamax, 1), _or(args.nmax, 50)))


def _fam_cross_validate(args, cfg):
    return _as_list(identities.cross_validate(
        _or(args.nmax, 200), brute_cap=cfg.brute_cap))


FAMILIES = {
    "a3-even-power": _fam_a3_even_power,
    "BN": _fam_bn,
    "lin": _fam_lin,
    "relation-general": _fam_relation_general,
    "relation-coprime": _fam_relation_coprime,
    "A3-residues": _fam_a3_residues,
    "B3-ids": _fam_b3_ids,
    "B3-relation-general": _fam_b3_relation_general,
    "B3-relation-coprime": _fam_b3_relation_coprime,
    "B3-residues": _fam_b3_residues,
    "xia-congruence": _fam_xia_congruence,
    "xia-conjecture": _fam_xia_conjecture,
    "cross-validate": _fam_cross_validate,
}


def _summary_line(report) -> str:
    status = "PASS" if report.passed else "FAIL"
    return (f"{report.family}: checked={report.checked} "
            f"failures={len(report.failures)} {status}")


def _cmd_verify(args, cfg: Config) -> int:
    runner = FAMILIES.get(args.family)
    if runner is None:
        known = ", ".join(sorted(FAMILIES))
        raise UsageError(f"unknown family {args.family!r}; known families: {known}")
    reports = runner(args, cfg)
    for report in reports:
        print(_summary_line(report))
    print(json.dumps({"reports": [r.as_dict() for r in reports]}))
    return 0 if all(r.passed for r in reports) else 1


def _structural_reports(n_max: int) -> list:
    order = max(2, min(n_max, 500))
    q_split_ok = series.verify_q_split(order)
    kernel_ok = lambert.square_kernel_check(100)
    cross_zero = all(c == 0 for c in lambert.pair_fold_cross_term(order).coeffs)
    reports = []
    for family, ok, params in (
            ("q-split", q_split_ok, {"order": order}),
            ("square-kernel", kernel_ok, {"order": 100}),
            ("pair-fold-cross-term", cross_zero, {"order": order})):
        failures = [] if ok else [identities.Failure(params, 0, 1)]
        reports.append(identities.IdentityReport(family, params, 1, failures))
    return reports


def _selfcheck_battery(n_max: int, cfg: Config):
    n_fam = min(n_max, 200)
    yield "cross-validate", lambda: [identities.cross_validate(
        n_max, brute_cap=cfg.brute_cap)]
    yield "structural", lambda: _structural_reports(n_max)
    for p in (2, 5):
        yield f"a3-even-power-p{p}", (
            lambda p=p: [identities.check_a3_even_power(p, 4, n_fam)])
    yield "BN", lambda: identities.check_baruah_nath(3, n_fam)
    yield "lin", lambda: [identities.check_lin(500)]
    for p in (2, 5, 7):
        yield f"A3-relations-p{p}", (
            lambda p=p: [identities.check_A3_relations(p, 3, n_fam, False),
                         identities.check_A3_relations(p, 3, n_fam, True)])
    yield "A3-residues", lambda: identities.check_A3_residue_families(2, n_fam)
    yield "B3-ids", lambda: identities.check_b3_power_families(3, n_fam)
    for p in (2, 5, 7):
        yield f"B3-relations-p{p}", (
            lambda p=p: [identities.check_B3_relations(p, 3, n_fam, False),
                         identities.check_B3_relations(p, 3, n_fam, True)])
    yield "B3-relations-p3", (
        lambda: [identities.check_B3_relations(3, 3, n_fam, True)])
    yield "B3-residues", lambda: identities.check_B3_residue_families(2, n_fam)
    yield "xia-congruence", lambda: [identities.check_xia_congruences(1000)]
    for p in (3, 5):
        yield f"xia-conjecture-p{p}", (
            lambda p=p: [identities.check_xia_conjecture(
                identities.XiaParams(p, 1), 1, 50)])


def _cmd_selfcheck(args, cfg: Config) -> int:
    n_max = _or(args.nmax, 200)
    if n_max < 1:
        raise UsageError("--nmax must be >= 1")
    total = 0
    failed = 0
    for label, run in _selfcheck_battery(n_max, cfg):
        started = time.perf_counter()
        reports = run()
        elapsed = time.perf_counter() - started
        for report in reports:
            total += 1
            if not report.passed:
                failed += 1
            status = "PASS" if report.passed else "FAIL"
            print(f"{report.family:<32} checked={report.checked:<8} "
                  f"{status}  [{elapsed:.2f}s]")
    print(f"selfcheck: {total - failed}/{total} families passed")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="core3",
        description=("Count 3-core partitions (a3), pairs (A3) and triples (B3) "
                     "by independent methods, and verify their identity families."),
        epilog=(f"Environment: {ENV_SIEVE_LIMIT} sets the factorization sieve "
                f"limit (default {arith.DEFAULT_SIEVE_LIMIT}); {ENV_BRUTE_CAP} "
                f"sets the brute-force cap (default {DEFAULT_BRUTE_CAP}). "
                "Flags take precedence over the environment."))
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=None,
                       help=f"series order budget (default {DEFAULT_ORDER})")
        p.add_argument("--brute-cap", type=int, default=None, dest="brute_cap",
                       help=f"brute-force cap (default {DEFAULT_BRUTE_CAP})")

    p_compute = sub.add_parser("compute", help="compute one value")
    p_compute.add_argument("kind", choices=KINDS)
    p_compute.add_argument("n", type=int)
    p_compute.add_argument("--method", choices=METHODS, default="formula")
    common(p_compute)
    p_compute.set_defaults(handler=_cmd_compute)

    p_table = sub.add_parser("table", help="emit values for 0 <= n < nmax")
    p_table.add_argument("kind", choices=KINDS)
    p_table.add_argument("--nmax", type=int, required=True)
    p_table.add_argument("--method", choices=METHODS, default="formula")
    p_table.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    common(p_table)
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="verify one identity family")
    p_verify.add_argument("family")
    p_verify.add_argument("--p", type=int, default=None)
    p_verify.add_argument("--j", type=int, default=None)
    p_verify.add_argument("--kmax", type=int, default=None)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--alphamax", type=int, default=None)
    common(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_self = sub.add_parser("selfcheck",
                            help="cross-validate all methods and run every family")
    p_self.add_argument("--nmax", type=int, default=None)
    common(p_self)
    p_self.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _make_config(args)
        arith.set_default_sieve_limit(cfg.sieve_limit)
        return args.handler(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # precondition violations from the library are usage errors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())
