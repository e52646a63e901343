"""Command line interface: JSON on stdout, deterministic byte-for-byte.

Exit codes: 0 success (and passing verification / non-asserted verdicts),
1 failed verification or a non-irreducible verdict under --assert-irreducible,
2 invalid input.

Output goes to standard output unless --out PATH is given, in which case the
JSON is written to that file instead and nothing is printed.  Diagnostics from
argument parsing go to standard error.

JSON schema by subcommand (keys are fixed; values use the canonical renderings
of the library: weights as "a1,..,am|b1,..,bn", partitions as "p1,p2,..",
polynomials and characters in the documented ascending orders):

  typical     {"weight", "m", "n", "characteristic", "omega": [[int]],
               "atypical_positions": [[i, j]], "typical": bool}
  decide      typical's keys plus {"family": "induced",
               "even_part": "irreducible" | "reducible" |
                            "external(irreducible)" | "external(reducible)" |
                            "unavailable",
               "induced_irreducible": bool | "indeterminate", "rationale"}
  character   {"kind": "induced" | "hook", "weight" or "partition", "m", "n",
               "character", "dimension_at_ones"}
  hookschur   {"partition", "m", "n", "hook_schur", "dimension_at_ones"}
  factorcheck {"partition", "m", "n", "match": bool}
  dim         {"weight", "m", "n", "dim_even", "dim_induced"}
  normalize   {"weight", "normalized", "twist"}
  verify      {"target", "context": {"m", "n", "characteristic", "weight"},
               "instances_checked", "failures": [{"instance", "lhs", "rhs"}],
               "notes", "passed"}
  oracle      {"weight", "m", "n", "dim_closure", "dim_induced",
               "irreducible", "kappa_weight", "kappa_multiplicity"}
  kappa       {"weight", "kappa"}

Errors caught at run time emit {"error": "<message>"} and exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import char_induced, dim_even, dim_induced, factorization_check, hook_schur
from .theorems import (
    VERIFY_TARGETS,
    closure_oracle,
    decide_irreducible,
)
from .weights import (
    HookPartition,
    Weight,
    berezin_normalize,
    is_typical,
    kappa_weight,
)


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_char(parser):
    parser.add_argument("--char", type=int, default=0, metavar="P",
                        help="field characteristic: 0 or an odd prime")


def _parse_weight(args) -> Weight:
    """Parse --lambda, cross-checking redundant --m/--n when given."""
    lam = Weight.parse(args.lam)
    if args.m is not None and args.m != lam.m:
        raise ValueError(f"--m {args.m} does not match weight with m={lam.m}")
    if args.n is not None and args.n != lam.n:
        raise ValueError(f"--n {args.n} does not match weight with n={lam.n}")
    return lam


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glmn",
        description="Exact computations for induced modules of GL(m|n)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH",
                        help="write the JSON to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def weight_parser(name, help_text, char=True):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("--lambda", dest="lam", required=True,
                       metavar="W", help="weight as a1,..,am|b1,..,bn")
        p.add_argument("-m", "--m", type=int,
                       help="even rank (checked against the weight)")
        p.add_argument("-n", "--n", type=int,
                       help="odd rank (checked against the weight)")
        if char:
            _add_char(p)
        return p

    weight_parser("typical", "atypicality matrix and typicality")

    p = weight_parser("decide", "irreducibility of the induced module")
    p.add_argument("--even-verdict", choices=["irreducible", "reducible"],
                   help="externally known status of the even-part module "
                        "(odd characteristic only)")
    p.add_argument("--assert-irreducible", action="store_true",
                   help="exit 1 unless the verdict is definitely irreducible")

    p = sub.add_parser("character", parents=[common],
                       help="character of an induced module or a hook Schur function")
    p.add_argument("--kind", choices=["induced", "hook"], required=True)
    p.add_argument("--lambda", dest="lam", metavar="W",
                   help="weight (induced kind)")
    p.add_argument("--partition", help="partition (hook kind)")
    p.add_argument("-m", "--m", type=int, help="even rank (hook kind)")
    p.add_argument("-n", "--n", type=int, help="odd rank (hook kind)")

    for name, help_text in [
            ("hookschur", "hook Schur function of a partition"),
            ("factorcheck", "hook Schur factorization check for lambda_m >= n")]:
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("--partition", required=True)
        p.add_argument("-m", "--m", type=int, required=True)
        p.add_argument("-n", "--n", type=int, required=True)

    weight_parser("dim", "even and induced dimensions", char=False)
    weight_parser("normalize", "factor out the Berezinian twist", char=False)

    p = sub.add_parser("verify", parents=[common],
                       help="run one identity verification suite")
    p.add_argument("--target", required=True, choices=sorted(VERIFY_TARGETS),
                   help="identity suite to run")
    p.add_argument("-m", "--m", type=int, help="even rank (shape targets)")
    p.add_argument("-n", "--n", type=int, help="odd rank (shape targets)")
    p.add_argument("--lambda", dest="lam", metavar="W",
                   help="weight (weight targets)")
    _add_char(p)

    p = weight_parser("oracle",
                      "characteristic-0 closure dimension of the highest vector",
                      char=False)
    p.add_argument("--max-dim", type=int, default=4000,
                   help="guard on the induced dimension")
    p.add_argument("--assert-irreducible", action="store_true")

    weight_parser("kappa", "weight of the fully lowered vector", char=False)

    return parser


def _run(args) -> int:
    cmd = args.command
    out = args.out
    if cmd == "typical":
        _emit(is_typical(_parse_weight(args), args.char).to_json(), out)
        return 0
    if cmd == "decide":
        ev = None
        if args.even_verdict is not None:
            ev = args.even_verdict == "irreducible"
        verdict = decide_irreducible(_parse_weight(args), args.char, ev)
        _emit(verdict.to_json(), out)
        if args.assert_irreducible and verdict.irreducible is not True:
            return 1
        return 0
    if cmd == "character":
        if args.kind == "induced":
            if not args.lam:
                raise ValueError("character --kind induced needs --lambda")
            lam = Weight.parse(args.lam)
            ch = char_induced(lam)
            _emit({"kind": "induced", "weight": lam.render(),
                   "m": lam.m, "n": lam.n,
                   "character": ch.render(),
                   "dimension_at_ones": ch.eval_ones()}, out)
            return 0
        if not args.partition or args.m is None or args.n is None:
            raise ValueError("character --kind hook needs --partition, -m and -n")
        hp = HookPartition.parse(args.partition)
        ch = hook_schur(hp, args.m, args.n)
        _emit({"kind": "hook", "partition": hp.render(),
               "m": args.m, "n": args.n,
               "character": ch.render(),
               "dimension_at_ones": ch.eval_ones()}, out)
        return 0
    if cmd == "hookschur":
        hp = HookPartition.parse(args.partition)
        ch = hook_schur(hp, args.m, args.n)
        _emit({"partition": hp.render(), "m": args.m, "n": args.n,
               "hook_schur": ch.render(),
               "dimension_at_ones": ch.eval_ones()}, out)
        return 0
    if cmd == "factorcheck":
        hp = HookPartition.parse(args.partition)
        match = factorization_check(hp, args.m, args.n)
        _emit({"partition": hp.render(), "m": args.m, "n": args.n,
               "match": match}, out)
        return 0 if match else 1
    if cmd == "dim":
        lam = _parse_weight(args)
        _emit({"weight": lam.render(), "m": lam.m, "n": lam.n,
               "dim_even": dim_even(lam), "dim_induced": dim_induced(lam)}, out)
        return 0
    if cmd == "normalize":
        lam = _parse_weight(args)
        norm, twist = berezin_normalize(lam)
        _emit({"weight": lam.render(), "normalized": norm.render(),
               "twist": twist}, out)
        return 0
    if cmd == "verify":
        kind, runner = VERIFY_TARGETS[args.target]
        if kind == "weight":
            if not args.lam:
                raise ValueError(f"target {args.target} needs --lambda")
            report = runner(Weight.parse(args.lam), args.char)
        else:
            if args.m is None or args.n is None:
                raise ValueError(f"target {args.target} needs -m and -n")
            report = runner(args.m, args.n, args.char)
        _emit(report.to_json(), out)
        return 0 if report.passed else 1
    if cmd == "oracle":
        result = closure_oracle(_parse_weight(args), args.max_dim)
        _emit(result.to_json(), out)
        if args.assert_irreducible and not result.irreducible:
            return 1
        return 0
    if cmd == "kappa":
        lam = _parse_weight(args)
        _emit({"weight": lam.render(), "kappa": kappa_weight(lam).render()}, out)
        return 0
    raise ValueError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ValueError as exc:
        _emit({"error": str(exc)}, getattr(args, "out", None))
        return 2


if __name__ == "__main__":
    sys.exit(main())
