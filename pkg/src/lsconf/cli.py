"""Command-line front end.

Exit codes are a contract shared by every subcommand:
0 pass/success, 1 negative finding, 2 input error, 3 guarded refusal,
4 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algebras import AlgebraError, IdentityError, check_identity, normalize_identity_id
from .cohomology import SpanningConditionError, h2
from .conformal import (ModuleElement, build_current, build_rank_one,
                        check_coeff_left_symmetry, format_lambda_poly,
                        lambda_product)
from .constructions import (comm_assoc_derivation_to_novikov_poisson,
                            ls_poisson_to_pre_gd, pre_novikov_to_pre_gd,
                            truncated_binomial_zinbiel, zinbiel_to_pre_gd,
                            zinbiel_to_pre_novikov)
from .files import (FileFormatError, dump_json, file_sha256, load_algebra,
                    load_cocycle, load_matrix, save_algebra, cocycle_to_json)
from .ideals import TrivialAlgebra, certify_conformal_simplicity
from .linalg import LinalgError

PASS, FAIL, INPUT_ERROR, REFUSED, INCONCLUSIVE = 0, 1, 2, 3, 4


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def _cli_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _emit(args, doc, text_lines):
    if getattr(args, "json", False):
        sys.stdout.write(dump_json(doc))
    else:
        for line in text_lines:
            print(line)


def _labels(alg, idx):
    return tuple(alg.basis[i] if isinstance(i, int) and 0 <= i < alg.dim else i
                 for i in idx)


def _violation_lines(alg, report, limit=5):
    lines = []
    for label, idx, residual in report.violations[:limit]:
        at = ",".join(str(x) for x in _labels(alg, idx))
        res = "[" + ", ".join(str(x) for x in residual) + "]"
        lines.append(f"  {label} at ({at}): residual {res}")
    extra = len(report.violations) - limit
    if extra > 0:
        lines.append(f"  ... and {extra} more")
    return lines


def cmd_check(args):
    alg = load_algebra(args.file)
    aux = None
    if args.derivation:
        aux = load_matrix(args.derivation, expect_dim=alg.dim)
    ident = normalize_identity_id(args.identity)
    report = check_identity(alg, ident, aux=aux)
    doc = {"command": "check", "input": args.file,
           "input_sha256": file_sha256(args.file), "identity": ident,
           "passed": report.passed, "skipped": report.skipped,
           "violations": [
               {"identity": label,
                "at": list(_labels(alg, idx)),
                "residual": [str(x) for x in residual]}
               for label, idx, residual in report.violations]}
    if report.passed:
        _emit(args, doc, [f"PASS {ident} on {alg.name}"])
        return PASS
    _emit(args, doc, [f"FAIL {ident} on {alg.name}"] + _violation_lines(alg, report))
    return FAIL


def _family_text(alg, fam):
    cap = fam.degree_cap
    parts = []
    for i in range(cap, -1, -1):
        for a in range(alg.dim):
            for b in range(alg.dim):
                v = fam.forms[i][a][b]
                if v:
                    parts.append(f"alpha_{i}({alg.basis[a]},{alg.basis[b]}) = {v}")
    return ", ".join(parts) if parts else "0"


def cmd_h2(args):
    alg = load_algebra(args.file)
    result = h2(alg, args.beta, degree_cap=args.degree_cap)
    lines = [f"beta = {result.beta}",
             f"degree cap = {result.degree_cap}",
             "spanning products: " + (", ".join(result.spanning) or "none")]
    if result.cap_limited:
        lines.append("note: no product spans V; results cover cocycles of "
                     f"degree <= {result.degree_cap} only")
    lines += [f"dim Z2 = {result.dim_Z2}",
              f"dim B2 = {result.dim_B2}",
              f"dim H2 = {result.dim_H2}"]
    for k, fam in enumerate(result.representatives, 1):
        lines.append(f"representative {k}: {_family_text(alg, fam)}")
    doc = {"command": "h2", "input": args.file,
           "input_sha256": file_sha256(args.file), "beta": str(result.beta),
           "degree_cap": result.degree_cap, "cap_limited": result.cap_limited,
           "spanning": list(result.spanning),
           "dim_Z2": result.dim_Z2, "dim_B2": result.dim_B2,
           "dim_H2": result.dim_H2,
           "representatives": [cocycle_to_json(f) for f in result.representatives]}
    _emit(args, doc, lines)
    return PASS


def _witness_doc(witness):
    if witness is None:
        return None
    if hasattr(witness, "basis") and hasattr(witness, "ambient_dim"):
        return {"ideal_basis": [[str(x) for x in row] for row in witness.basis]}
    return {"element": [str(x) for x in witness]}


def _witness_text(alg, witness):
    if witness is None:
        return "none"
    if hasattr(witness, "basis") and hasattr(witness, "ambient_dim"):
        rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in witness.basis]
        return "ideal with basis " + ", ".join(rows)
    terms = [f"{c}*{alg.basis[i]}" if c != 1 else alg.basis[i]
             for i, c in enumerate(witness) if c]
    return "element " + (" + ".join(terms) if terms else "0")


def cmd_simple(args):
    alg = load_algebra(args.file)
    cert = certify_conformal_simplicity(alg, trials=args.trials, rng_seed=args.seed)
    lines = [f"verdict: {cert.verdict}",
             f"criterion: {cert.criterion}",
             f"witness: {_witness_text(alg, cert.witness)}",
             f"seed = {args.seed}, trials = {args.trials}"]
    lines += [f"  {d}" for d in cert.details]
    doc = {"command": "simple", "input": args.file,
           "input_sha256": file_sha256(args.file),
           "seed": args.seed, "trials": args.trials,
           "verdict": cert.verdict, "criterion": cert.criterion,
           "witness": _witness_doc(cert.witness),
           "details": list(cert.details)}
    _emit(args, doc, lines)
    if cert.verdict == "simple":
        return PASS
    if cert.verdict == "not_simple":
        return FAIL
    return INCONCLUSIVE


def _require(args, names):
    for n in names:
        if getattr(args, n.replace("-", "_"), None) is None:
            raise FileFormatError(f"construct kind {args.kind!r} needs --{n}")


def _construct_algebra(args):
    kind = args.kind
    if kind == "rank-one":
        _require(args, ["c"])
        return build_rank_one(args.c), None
    if kind == "binomial-zinbiel":
        _require(args, ["n"])
        alg, D = truncated_binomial_zinbiel(args.n)
        return alg, D
    _require(args, ["file"])
    alg = load_algebra(args.file)
    if kind == "current":
        return build_current(alg), None
    if kind == "zinbiel-pn":
        _require(args, ["derivation", "xi"])
        D = load_matrix(args.derivation, expect_dim=alg.dim)
        return zinbiel_to_pre_novikov(alg, D, args.xi), None
    if kind == "pn-pregd":
        _require(args, ["k"])
        return pre_novikov_to_pre_gd(alg, args.k), None
    if kind == "zinbiel-pregd":
        _require(args, ["derivation", "xi", "k"])
        D = load_matrix(args.derivation, expect_dim=alg.dim)
        return zinbiel_to_pre_gd(alg, D, args.xi, args.k), None
    if kind == "lsp-pregd":
        return ls_poisson_to_pre_gd(alg), None
    if kind == "ca-np":
        _require(args, ["derivation"])
        D = load_matrix(args.derivation, expect_dim=alg.dim)
        return comm_assoc_derivation_to_novikov_poisson(alg, D), None
    raise FileFormatError(f"unknown construct kind {kind!r}")


def cmd_construct(args):
    try:
        alg, D = _construct_algebra(args)
    except IdentityError as exc:
        _err(str(exc))
        return FAIL
    save_algebra(alg, args.output)
    if D is not None and args.derivation_out:
        with open(args.derivation_out, "w", encoding="utf-8") as fh:
            fh.write(dump_json(
                {"matrix": [[str(x) for x in row] for row in D.matrix]}))
    doc = {"command": "construct", "kind": args.kind, "output": args.output,
           "output_sha256": file_sha256(args.output),
           "name": alg.name, "dim": alg.dim}
    _emit(args, doc, [f"wrote {args.output} ({alg.name}, dim {alg.dim})"])
    return PASS


def cmd_lambda(args):
    alg = load_algebra(args.file)
    for label in (args.left, args.right):
        if label not in alg.basis:
            raise FileFormatError(f"unknown basis label {label!r}")
    cocycle = None
    if args.cocycle:
        cocycle = load_cocycle(args.cocycle, dim=alg.dim)
    x = ModuleElement.basis(alg.index(args.left))
    y = ModuleElement.basis(alg.index(args.right))
    poly = lambda_product(alg, x, y, cocycle=cocycle, beta=args.beta)
    rendered = format_lambda_poly(poly, alg.basis)
    doc = {"command": "lambda", "input": args.file,
           "input_sha256": file_sha256(args.file),
           "left": args.left, "right": args.right, "beta": str(args.beta),
           "result": rendered}
    _emit(args, doc, [rendered])
    return PASS


def cmd_coeff_check(args):
    alg = load_algebra(args.file)
    cocycle = None
    if args.cocycle:
        cocycle = load_cocycle(args.cocycle, dim=alg.dim)
    report = check_coeff_left_symmetry(alg, args.window, cocycle=cocycle)
    doc = {"command": "coeff-check", "input": args.file,
           "input_sha256": file_sha256(args.file), "window": args.window,
           "passed": report.passed, "skipped": report.skipped,
           "violations": [
               {"basis": list(v[0]), "exponents": list(v[1]),
                "residual": str(v[2])}
               for v in report.violations]}
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{status} coefficient left-symmetry on {alg.name} "
             f"(window {args.window}, skipped {report.skipped})"]
    if not report.passed:
        for basis_idx, exps, residual in report.violations[:5]:
            at = ",".join(str(x) for x in _labels(alg, basis_idx))
            lines.append(f"  at ({at}) exponents {exps}: residual {residual}")
        extra = len(report.violations) - 5
        if extra > 0:
            lines.append(f"  ... and {extra} more")
    _emit(args, doc, lines)
    return PASS if report.passed else FAIL


def build_parser():
    p = argparse.ArgumentParser(
        prog="lsconf",
        description="Exact checks for pre-Novikov, pre-Gelfand-Dorfman and "
                    "quadratic left-symmetric conformal structures.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify an identity system on an algebra file")
    c.add_argument("file")
    c.add_argument("--identity", required=True)
    c.add_argument("--derivation", help="matrix file for derivation checks")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("h2", help="second cohomology of the quadratic "
                                  "conformal algebra")
    c.add_argument("file")
    c.add_argument("--beta", type=_cli_rational, default=Fraction(0))
    c.add_argument("--degree-cap", type=int, default=None)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_h2)

    c = sub.add_parser("simple", help="certify conformal simplicity")
    c.add_argument("file")
    c.add_argument("--trials", type=int, default=20)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_simple)

    c = sub.add_parser("construct", help="build and verify a derived algebra")
    c.add_argument("kind", choices=["zinbiel-pn", "pn-pregd", "zinbiel-pregd",
                                    "lsp-pregd", "ca-np", "rank-one", "current",
                                    "binomial-zinbiel"])
    c.add_argument("file", nargs="?")
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--c", type=_cli_rational)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=_cli_rational)
    c.add_argument("--xi", type=_cli_rational)
    c.add_argument("--derivation")
    c.add_argument("--derivation-out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("lambda", help="print one lambda-product")
    c.add_argument("file")
    c.add_argument("--left", required=True)
    c.add_argument("--right", required=True)
    c.add_argument("--beta", type=_cli_rational, default=Fraction(0))
    c.add_argument("--cocycle")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_lambda)

    c = sub.add_parser("coeff-check", help="left-symmetry of the windowed "
                                           "coefficient algebra")
    c.add_argument("file")
    c.add_argument("--window", type=int, required=True)
    c.add_argument("--cocycle")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_coeff_check)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpanningConditionError as exc:
        _err(str(exc))
        return REFUSED
    except TrivialAlgebra as exc:
        _err(str(exc))
        return INPUT_ERROR
    except (FileFormatError, AlgebraError, LinalgError, ValueError) as exc:
        _err(str(exc))
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
