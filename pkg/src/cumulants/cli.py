"""Command-line surface: enumerate objects, evaluate cumulants, and run the
identity and involution checks with machine-readable output.

Exit codes form a stable contract:

    0  success / identity verified
    1  a verification or involution check reported inequality
    2  usage error or violated precondition (bad flags, over-cap sizes,
       unknown variables, missing files)
    3  an input file failed to parse (message names the atom index)

All output is deterministic: rationals print exactly, polynomials print with
sorted monomials, JSON uses sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cyclic import (
    cyclic_count,
    enumerate_cyclic,
    enumerate_g,
    enumerate_nested,
    g_count,
    nested_count,
)
from .die import build_instance, check_die
from .distributions import ConditionalOracle, FiniteDistribution
from .engine import (
    kappa,
    verify_coefficient_sum,
    verify_independent_split,
    verify_moment_expansion,
    verify_near_independence,
    verify_refinement,
    verify_row_products,
    verify_total_cumulance,
)
from .errors import DistributionParseError, DomainError
from .partitions import GridShape, Partition, bell_number, enumerate_partitions

SIZE_CAP_ENV = "CUMULANTS_SIZE_CAP"

DEFAULT_CAPS = {"partitions": 7, "cyclic": 7, "nested": 5, "g": 4}

COUNT_FORMULAS = {
    "partitions": bell_number,
    "cyclic": cyclic_count,
    "nested": nested_count,
    "g": g_count,
}

ENUMERATORS = {
    "partitions": enumerate_partitions,
    "cyclic": enumerate_cyclic,
    "nested": enumerate_nested,
    "g": enumerate_g,
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_shape(text: str) -> GridShape:
    try:
        sizes = [int(part) for part in text.split(",")]
    except ValueError:
        raise DomainError(f"bad shape {text!r}; expected e.g. 2,1") from None
    return GridShape(sizes)


def _parse_tau(text: str) -> Partition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad partition JSON: {exc}") from None
    return Partition.from_json(obj)


def _load_distribution(path: str) -> FiniteDistribution:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DistributionParseError(f"{path}: invalid JSON: {exc}") from None
    try:
        return FiniteDistribution.from_json(obj)
    except DistributionParseError as exc:
        raise DistributionParseError(f"{path}: {exc}") from None


def _split_vars(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(","))
    if any(not nm for nm in names):
        raise DomainError(f"bad variable list {text!r}")
    return names


def _cap_for(kind: str) -> int:
    override = os.environ.get(SIZE_CAP_ENV)
    if override is not None:
        try:
            return int(override)
        except ValueError:
            raise DomainError(
                f"{SIZE_CAP_ENV} must be an integer, got {override!r}"
            ) from None
    return DEFAULT_CAPS[kind]


def _cmd_enumerate(args) -> int:
    if (args.n is None) == (args.shape is None):
        raise DomainError("enumerate needs exactly one of --n or --shape")
    if args.shape is not None:
        shape = _parse_shape(args.shape)
        ground = shape.elements()
    else:
        if args.n < 1:
            raise DomainError("--n must be at least 1")
        ground = tuple(range(1, args.n + 1))
    size = len(ground)
    cap = _cap_for(args.kind)
    if size > cap:
        if not args.allow_large:
            raise DomainError(
                f"ground size {size} exceeds the {args.kind} cap of {cap}; "
                f"pass --allow-large or set {SIZE_CAP_ENV}"
            )
        estimate = COUNT_FORMULAS[args.kind](size)
        print(f"enumerating an estimated {estimate} objects", file=sys.stderr)
    stream = ENUMERATORS[args.kind](ground)
    if args.format == "count":
        print(sum(1 for _ in stream))
    elif args.format == "pretty":
        for obj in stream:
            print(obj.pretty())
    else:
        for obj in stream:
            print(_dump(obj.to_json()))
    return 0


def _cmd_cumulant(args) -> int:
    dist = _load_distribution(args.dist)
    names = _split_vars(args.vars)
    print(kappa(dist, names))
    return 0


def _report_for(args):
    t = args.identity
    if t in (1, 2, 4):
        if args.n is None:
            raise DomainError(f"identity {t} needs --n")
        if t == 1:
            return verify_coefficient_sum(args.n)
        if t == 2:
            return verify_near_independence(args.n)
        return verify_moment_expansion(args.n)
    if t == 3:
        if args.dist_m is None or args.dist_n is None:
            raise DomainError("identity 3 needs --dist-m and --dist-n")
        names = _split_vars(args.vars) if args.vars else None
        return verify_independent_split(
            _load_distribution(args.dist_m), _load_distribution(args.dist_n), names
        )
    if t == 5:
        if args.tau is None:
            raise DomainError("identity 5 needs --tau")
        return verify_refinement(_parse_tau(args.tau))
    if t == 6:
        if args.shape is None:
            raise DomainError("identity 6 needs --shape")
        return verify_row_products(_parse_shape(args.shape))
    if t == 7:
        if args.dist is None or args.y is None:
            raise DomainError("identity 7 needs --dist and --y")
        cond = ConditionalOracle(_load_distribution(args.dist), args.y)
        if args.vars:
            names = _split_vars(args.vars)
        else:
            names = tuple(nm for nm in cond.dist.variables if nm != args.y)
        return verify_total_cumulance(cond, names)
    raise DomainError(f"unknown identity {t}; expected 1..7")


def _cmd_verify(args) -> int:
    report = _report_for(args)
    print(_dump(report.to_json()))
    return 0 if report.equal else 1


def _instance_for(args):
    t = args.identity
    kwargs = {}
    if t in (1, 2, 4):
        if args.n is None:
            raise DomainError(f"identity {t} needs --n")
        kwargs["n"] = args.n
    elif t == 3:
        if args.dist_m is None or args.dist_n is None:
            raise DomainError("identity 3 needs --dist-m and --dist-n")
        kwargs["dist_m"] = _load_distribution(args.dist_m)
        kwargs["dist_n"] = _load_distribution(args.dist_n)
        if args.vars:
            kwargs["names"] = _split_vars(args.vars)
    elif t == 5:
        if args.tau is None:
            raise DomainError("identity 5 needs --tau")
        kwargs["tau"] = _parse_tau(args.tau)
    elif t == 6:
        if args.shape is None:
            raise DomainError("identity 6 needs --shape")
        kwargs["shape"] = _parse_shape(args.shape)
    elif t == 7:
        if args.dist is None or args.y is None:
            raise DomainError("identity 7 needs --dist and --y")
        kwargs["cond"] = ConditionalOracle(_load_distribution(args.dist), args.y)
        if args.vars:
            kwargs["names"] = _split_vars(args.vars)
    else:
        raise DomainError(f"unknown identity {t}; expected 1..7")
    return build_instance(t, **kwargs)


def _cmd_die_check(args) -> int:
    report = check_die(_instance_for(args))
    print(_dump(report.to_json()))
    return 0 if report.passed else 1


def _add_identity_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("identity", type=int, help="identity id, 1..7")
    sub.add_argument("--n", type=int, help="ground-set size (identities 1, 2, 4)")
    sub.add_argument("--tau", help="partition as JSON, e.g. [[1,2],[3]] (identity 5)")
    sub.add_argument("--shape", help="grid row sizes, e.g. 2,1 (identity 6)")
    sub.add_argument("--dist-m", dest="dist_m", help="left distribution file (identity 3)")
    sub.add_argument("--dist-n", dest="dist_n", help="right distribution file (identity 3)")
    sub.add_argument("--dist", help="joint distribution file (identity 7)")
    sub.add_argument("--y", help="conditioning variable name (identity 7)")
    sub.add_argument("--vars", help="comma-separated variable selection")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cumulants",
        description="Exact joint-cumulant combinatorics and identity checks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    enum = subs.add_parser("enumerate", help="stream combinatorial objects")
    enum.add_argument("kind", choices=sorted(ENUMERATORS))
    enum.add_argument("--n", type=int, help="plain ground-set size")
    enum.add_argument("--shape", help="grid row sizes, e.g. 2,1")
    enum.add_argument(
        "--format", choices=("json", "count", "pretty"), default="json"
    )
    enum.add_argument(
        "--allow-large",
        action="store_true",
        help="bypass the size cap (prints an estimated object count first)",
    )
    enum.set_defaults(run=_cmd_enumerate)

    cum = subs.add_parser("cumulant", help="evaluate a cumulant from a distribution file")
    cum.add_argument("--dist", required=True, help="distribution JSON file")
    cum.add_argument("--vars", required=True, help="comma-separated columns; repeats allowed")
    cum.set_defaults(run=_cmd_cumulant)

    ver = subs.add_parser("verify", help="check one identity, print a report")
    _add_identity_params(ver)
    ver.set_defaults(run=_cmd_verify)

    die = subs.add_parser("die-check", help="run one involution check, print a report")
    _add_identity_params(die)
    die.set_defaults(run=_cmd_die_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except DistributionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
