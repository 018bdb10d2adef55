"""Command-line interface.

Subcommands: build, verify, dualbasis, equiv, table.  Exit codes are a
stable contract: 0 success, 1 a verification check failed, 2 invalid
configuration (with the violated degree bound in the message), 3 an I/O
or parse failure.  All numeric I/O is exact-rational strings.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import serialize
from .cobracket import axiom_sweep
from .errors import LbforgeError, MalformedInputError
from .lagrangian import catalog_w0, dual_basis, is_lagrangian
from .liealg import build_sl, casimir, jordanian, r_dj, swap2
from .pairing import CaseSpec, admissible_degree, embed_canonical, q_form, validate_case
from .ratfun import bivar_swap_vars
from .rmatrix import (
    MCYBE,
    RKind,
    build_r,
    cyb_spectral,
    expand_region,
    family_requirement,
    skew_spectral_check,
    sum_dual_series,
)
from .sparse import Sparse
from .twist import quasi_twist_verify

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_IO = 3

ALL_CHECKS = ("cybe", "skew", "duality", "delta-axioms", "equiv")


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated configuration shared by the config-driven subcommands."""

    algebra: object
    spec: CaseSpec = None
    constant_r: str = None
    degree: int = 6
    checks: list = field(default_factory=list)
    out: str = None
    infile: str = None
    sweep_degree: int = 2

    @classmethod
    def from_args(cls, args, need_case=False) -> "RunConfig":
        alg = parse_algebra(getattr(args, "algebra", "A:2"))
        case = getattr(args, "case", None)
        if case is None and need_case:
            raise ConfigError("this command needs --case")
        spec = parse_case(case) if case else None
        checks = [
            c.strip()
            for c in getattr(args, "checks", "").split(",")
            if c.strip()
        ]
        for name in checks:
            if name not in ALL_CHECKS:
                raise ConfigError(f"unknown check {name!r}")
        degree = getattr(args, "degree", None)
        return cls(
            algebra=alg,
            spec=spec,
            constant_r=getattr(args, "r", None),
            degree=check_degree(degree) if degree is not None else 6,
            checks=checks,
            out=getattr(args, "out", None),
            infile=getattr(args, "infile", None),
            sweep_degree=getattr(args, "sweep_degree", 2),
        )


def parse_algebra(text: str):
    parts = text.split(":")
    if len(parts) != 2 or parts[0] != "A":
        raise ConfigError(f"unsupported algebra {text!r}; expected A:n")
    try:
        return build_sl(int(parts[1]))
    except (ValueError, LbforgeError) as exc:
        raise ConfigError(str(exc)) from exc


def parse_case(text: str) -> CaseSpec:
    try:
        spec = CaseSpec.parse(text)
    except LbforgeError as exc:
        raise ConfigError(str(exc)) from exc
    reason = validate_case(spec)
    if reason is not None:
        raise ConfigError(reason)
    return spec


def classify_rkind(alg, value: Sparse) -> RKind:
    if value + swap2(value) == casimir(alg):
        return RKind.mcybe(alg, value)
    if (value + swap2(value)).is_zero():
        return RKind.skew(alg, value)
    raise ConfigError("constant tensor is neither modified-type nor skew")


def parse_constant_r(alg, spec, text: str) -> RKind:
    need = family_requirement(spec)
    try:
        if text == "zero":
            return RKind.skew(alg, Sparse())
        if text == "dj":
            return RKind.mcybe(alg, r_dj(alg))
        if text == "jordanian" or text.startswith("jordanian:"):
            root = None
            if ":" in text:
                i, j = (int(p) for p in text.split(":", 1)[1].split(","))
                root = (i, j)
            return RKind.skew(alg, jordanian(alg, root))
        if text.startswith("file:"):
            doc = serialize.load(text[5:])
            value = serialize.const_tensor_from_doc(doc, alg)
            return classify_rkind(alg, value)
    except MalformedInputError:
        raise
    except (LbforgeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown constant part {text!r}")


def check_degree(n: int) -> int:
    if n < 1:
        raise ConfigError("degree must be >= 1")
    cap = os.environ.get("LBFORGE_MAX_DEGREE")
    if cap is not None and n > int(cap):
        raise ConfigError(f"degree {n} exceeds LBFORGE_MAX_DEGREE={cap}")
    return n


def _emit(doc, out_path):
    text = serialize.dump(doc, out_path)
    if not out_path:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    config = RunConfig.from_args(args, need_case=True)
    rk = parse_constant_r(config.algebra, config.spec, config.constant_r)
    r = build_r(config.algebra, config.spec, rk)
    _emit(serialize.tensor_to_doc(config.algebra, r), config.out)
    return EXIT_OK


def _witness_entry(alg, key, detail):
    if len(key) == 2:
        return {"i": alg.basis[key[0]], "j": alg.basis[key[1]], "coefficient": detail}
    return {"indices": [alg.basis[k] for k in key[:3]], "coefficient": detail}


def _check_cybe(alg, r, config):
    result = cyb_spectral(alg, r)
    if result.is_zero():
        return True, None
    key, coeff = next(iter(sorted(result.numerators.items())))
    return False, _witness_entry(alg, key[:3], serialize.frac_str(coeff))


def _check_skew(alg, r, config):
    if skew_spectral_check(r):
        return True, None
    total = dict(r.entries)
    for (i, j), val in r.items():
        cur = total.get((j, i))
        total[(j, i)] = bivar_swap_vars(val) + cur if cur else bivar_swap_vars(val)
    for key in sorted(total):
        if not total[key].is_zero():
            coeff = next(iter(sorted(total[key].num.items())))[1]
            return False, _witness_entry(alg, key, serialize.frac_str(coeff))
    return False, None


def _check_duality(alg, r, config):
    if config.spec is None:
        raise ConfigError("duality check needs --case")
    spec = config.spec
    n = config.degree
    w = catalog_w0(alg, spec)
    duals = dual_basis(alg, w, n)
    for (i, k, el) in duals:
        for l in range(n + 1):
            for j in range(alg.dim):
                val = q_form(
                    alg, spec, embed_canonical(spec, Sparse({j: Fraction(1)}), l), el
                )
                want = Fraction(1) if (i, k) == (j, l) else Fraction(0)
                if val != want:
                    return False, {
                        "i": f"{alg.basis[j]}*u^{l}",
                        "j": f"dual({alg.basis[i]}*u^{k})",
                        "coefficient": serialize.frac_str(val),
                    }
    series = sum_dual_series(alg, w, n)
    closed = expand_region(r, n)
    if series != closed:
        return False, {"detail": "dual-basis series differs from the tensor expansion"}
    return True, None


def _check_delta_axioms(alg, r, config):
    label = config.spec.text if config.spec else "-"
    records = axiom_sweep(alg, label, r, config.sweep_degree)
    bad = [rec for rec in records if not rec["pass"]]
    if bad:
        return False, bad[0]
    return True, None


def _check_equiv(alg, r, config):
    spec = config.spec
    if spec is None or spec.a_form != "two-points":
        raise ConfigError("equiv check needs a two-points --case")
    report = quasi_twist_verify(spec.c1, spec.c2, 1, 2, alg=alg)
    if report.equal:
        return True, None
    return False, {"detail": "scaling identity failed against the (1,2) family"}


_CHECKS = {
    "cybe": _check_cybe,
    "skew": _check_skew,
    "duality": _check_duality,
    "delta-axioms": _check_delta_axioms,
    "equiv": _check_equiv,
}


def cmd_verify(args) -> int:
    doc = serialize.load(args.infile)
    alg, r = serialize.tensor_from_doc(doc)
    config = RunConfig.from_args(args)
    config.algebra = alg  # the tensor file owns the algebra
    results = []
    all_pass = True
    for name in config.checks:
        ok, witness = _CHECKS[name](alg, r, config)
        all_pass = all_pass and ok
        entry = {"check": name, "pass": ok}
        if witness is not None:
            entry["witness"] = witness
        results.append(entry)
    _emit({"pass": all_pass, "checks": results}, config.out)
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


def cmd_dualbasis(args) -> int:
    config = RunConfig.from_args(args, need_case=True)
    alg, spec = config.algebra, config.spec
    w = catalog_w0(alg, spec)
    report = is_lagrangian(alg, w, max(config.degree, 6))
    if not report.ok:
        raise ConfigError("catalog presentation failed the Lagrangian check")
    duals = [
        {
            "i": alg.basis[i],
            "degree": k,
            "dual": serialize.double_element_doc(alg, el),
        }
        for (i, k, el) in dual_basis(alg, w, config.degree)
    ]
    _emit(
        {
            "algebra": serialize.algebra_doc(alg),
            "basis": list(alg.basis),
            "case": spec.text,
            "presentation": serialize.wpresentation_to_doc(alg, w),
            "duals": duals,
        },
        config.out,
    )
    return EXIT_OK


def cmd_equiv(args) -> int:
    try:
        report = quasi_twist_verify(args.c1, args.c2, args.d1, args.d2)
    except LbforgeError as exc:
        raise ConfigError(str(exc)) from exc
    verdict = "equal" if report.equal else "different"
    print(
        f"p={report.change.p} q={report.change.q} C={report.scale} {verdict}"
    )
    return EXIT_OK if report.equal else EXIT_CHECK_FAILED


def cmd_table(args) -> int:
    simple_k = None
    if args.vertex == "simple":
        simple_k = args.k if args.k is not None else 1
    elif args.k is not None:
        raise ConfigError("k applies to the simple vertex only")
    try:
        deg = admissible_degree(args.double_type, simple_k)
    except LbforgeError as exc:
        raise ConfigError(str(exc)) from exc
    print("impossible" if deg is None else str(deg))
    return EXIT_OK


def _fraction_arg(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lbforge",
        description="Exact spectral r-matrices for Lie bialgebra structures "
        "on polynomial Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="emit a closed-form r-matrix as JSON")
    build.add_argument("--algebra", default="A:2", help="A:n for sl_n")
    build.add_argument("--case", required=True, help='e.g. "I:two-points:1,2"')
    build.add_argument("--r", default=None, help="zero|dj|jordanian[:i,j]|file:path")
    build.add_argument("--out", default=None)
    build.set_defaults(func=cmd_build)

    verify = sub.add_parser("verify", help="verify a tensor file")
    verify.add_argument("--in", dest="infile", required=True)
    verify.add_argument("--case", default=None)
    verify.add_argument("--checks", default="cybe,skew")
    verify.add_argument("--degree", type=int, default=6)
    verify.add_argument("--sweep-degree", type=int, default=2)
    verify.add_argument("--out", default=None)
    verify.set_defaults(func=cmd_verify)

    dualb = sub.add_parser("dualbasis", help="emit the catalog dual basis")
    dualb.add_argument("--algebra", default="A:2")
    dualb.add_argument("--case", required=True)
    dualb.add_argument("--degree", type=int, default=6)
    dualb.add_argument("--out", default=None)
    dualb.set_defaults(func=cmd_dualbasis)

    equiv = sub.add_parser("equiv", help="quasi-twist equivalence of two families")
    for name in ("c1", "c2", "d1", "d2"):
        equiv.add_argument(name, type=_fraction_arg)
    equiv.set_defaults(func=cmd_equiv)

    table = sub.add_parser("table", help="admissible degree of 1/a(u)")
    table.add_argument("double_type", choices=("I", "II", "III"))
    table.add_argument("vertex", choices=("minus-alpha-max", "simple"))
    table.add_argument("k", type=int, nargs="?", default=None)
    table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if getattr(args, "command", None) == "build" and args.r is None:
        try:
            need = family_requirement(parse_case(args.case))
        except ConfigError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_CONFIG
        args.r = "dj" if need == MCYBE else "zero"
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except LbforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
