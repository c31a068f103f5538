"""Command line front end: validate, cohomology, roundtrip.

Exit codes: 0 pass, 2 validation failure, 3 precondition failure,
4 budget exceeded.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import fixtures
from .crossed_modules import Sampler
from .errors import (BudgetExceeded, CohomologyWitnessNotFound, IsgcohError, NotAdmissible,
                     NotAssociative, NotFInverse, NotInverse, NotOrderPreservingCocycle,
                     NotStronglyNormalized, ParseError, ValidationError, Violation,
                     WitnessPreconditionFailed)
from .semigroup_core import build_semigroup
from .tmodule_cohomology import (DEFAULT_BUDGET, cochain_from_json, cohomology,
                                 module_from_json, normalize_cocycle, validate_cochain,
                                 validate_tmodule)

EXIT_OK, EXIT_INVALID, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4

FIXTURES = {
    "z2": fixtures.z2_module,
    "two-chain": fixtures.two_chain_module,
    "z2-chain": fixtures.z2_chain_module,
}


class Bundle:
    def __init__(self, T, M=None, cochains=()):
        self.T = T
        self.M = M
        self.cochains = list(cochains)


def _load_json(path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", line=exc.lineno, column=exc.colno) from None


def semigroup_from_json(data):
    try:
        elems = [str(x) for x in data["elements"]]
        table = data["table"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed semigroup: missing {exc}") from None
    for r, row in enumerate(table):
        if not isinstance(row, list) or len(row) != len(elems):
            raise ParseError("table row has the wrong length", line=r + 1, column=1)
        for col, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < len(elems):
                raise ParseError(f"table entry {v!r} is not an element index",
                                 line=r + 1, column=col + 1)
    return build_semigroup(elems, table)


def load_bundle(args) -> Bundle:
    """From --fixture, or --bundle, or separate --semigroup/--module/--cochain files."""
    if args.fixture:
        M = FIXTURES[args.fixture]()
        T = M.T
        extra = [cochain_from_json(M, _load_json(p)) for p in args.cochain or ()]
        return Bundle(T, M, extra)
    if args.bundle:
        data = _load_json(args.bundle)
        sg, md, cs = data.get("semigroup"), data.get("module"), data.get("cochains", [])
    else:
        if not args.semigroup:
            raise ParseError("one of --fixture, --bundle or --semigroup is required")
        sg = _load_json(args.semigroup)
        md = _load_json(args.module) if args.module else None
        cs = []
    T = semigroup_from_json(sg)
    M = module_from_json(T, md) if md is not None else None
    cs = list(cs) + [_load_json(p) for p in args.cochain or ()]
    if cs and M is None:
        raise ParseError("cochains need a module")
    return Bundle(T, M, [cochain_from_json(M, c) for c in cs])


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _violations_text(vs):
    return "\n".join(f"  {v.axiom}: {', '.join(str(w) for w in v.witness)}" for v in vs)


def cmd_validate(args) -> int:
    b = load_bundle(args)
    report = {"semigroup": {"size": b.T.size, "valid": True}}
    bad = []
    if b.M is not None:
        ok, vs = validate_tmodule(b.M)
        report["module"] = {"valid": ok, "violations": [v.to_json() for v in vs]}
        bad += vs
    for k, c in enumerate(b.cochains):
        ok, vs = validate_cochain(c)
        report[f"cochain[{k}]"] = {"valid": ok, "violations": [v.to_json() for v in vs]}
        bad += vs
    report["valid"] = not bad
    _emit(args, report, "valid" if not bad else "invalid\n" + _violations_text(bad))
    return EXIT_OK if not bad else EXIT_INVALID


def cmd_cohomology(args) -> int:
    b = load_bundle(args)
    if b.M is None:
        raise ParseError("cohomology needs a module")
    res = cohomology(b.M, args.degree, args.order_preserving, args.budget)
    tag = "_<=" if args.order_preserving else ""
    n = args.degree
    lines = [f"|Z^{n}{tag}| = {res.order_z}",
             f"|B^{n}{tag}| = {res.order_b if res.order_b is not None else 'undefined'}",
             f"|H^{n}{tag}| = {res.order_h}", "representatives:"]
    lines += [f"  {json.dumps(c.to_json()['entries'], sort_keys=True)}" for c in res.representatives]
    if res.note:
        lines.append(f"note: {res.note}")
    _emit(args, res.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    from .correspondence import roundtrip_extension, theorem_harness
    from .cover_construction import build_extension_from_cocycle
    from .extension_to_cocycle import canonical_cover_transversals

    b = load_bundle(args)
    if b.M is None or not b.cochains:
        raise ParseError("roundtrip needs a module and a cocycle")
    c = b.cochains[-1]
    sampler = Sampler(args.samples, args.seed, args.max_word_len)
    if args.mode == "theorem":
        rep = theorem_harness(b.M, c, sampler, args.budget, args.checked)
    else:
        if args.normalize:
            c = normalize_cocycle(c)[0]
        ext = build_extension_from_cocycle(b.M, c, args.checked)
        tr = canonical_cover_transversals(b.T, b.M, args.transversal)
        rep = roundtrip_extension(ext, tr.rho, tr.sigma, b.M, sampler, args.checked)
    rep.descriptor.update({"seed": args.seed, "max_word_len": args.max_word_len,
                           "samples": args.samples})
    text = "\n".join(f"{'ok  ' if s.ok else 'FAIL'} {s.name}" for s in rep.stages)
    text += "\nroundtrip " + ("passed" if rep.ok else "failed")
    if args.json:
        print(rep.dumps())
    else:
        print(text)
    return EXIT_OK if rep.ok else EXIT_INVALID


def _budget_default():
    env = os.environ.get("ISGCOH_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("instance")
    src.add_argument("--fixture", choices=sorted(FIXTURES))
    src.add_argument("--bundle", help="JSON with semigroup, module and cochains")
    src.add_argument("--semigroup")
    src.add_argument("--module")
    src.add_argument("--cochain", action="append", help="cochain file; may repeat")
    run = common.add_argument_group("run")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--max-word-len", type=int, default=3)
    run.add_argument("--samples", type=int, default=10_000)
    run.add_argument("--budget", type=int, default=_budget_default())
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--checked", dest="checked", action="store_true", default=True)
    mode.add_argument("--fast", dest="checked", action="store_false")
    run.add_argument("--json", action="store_true")
    run.add_argument("--jobs", type=int, default=1,
                     help="upper bound on workers; evaluation is currently single-process")

    p = argparse.ArgumentParser(prog="isgcoh", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", parents=[common], help="check semigroup, module, cochains")
    v.set_defaults(func=cmd_validate)
    h = sub.add_parser("cohomology", parents=[common], help="orders of Z^n, B^n, H^n")
    h.add_argument("--degree", "-n", type=int, default=3)
    h.add_argument("--order-preserving", action="store_true")
    h.set_defaults(func=cmd_cohomology)
    r = sub.add_parser("roundtrip", parents=[common], help="cocycle -> extension -> cocycle")
    r.add_argument("--mode", choices=["theorem", "extension"], default="theorem")
    r.add_argument("--transversal", choices=["plain", "f_inverse"], default="f_inverse")
    r.add_argument("--normalize", action="store_true",
                   help="extension mode: normalize the cocycle first")
    r.set_defaults(func=cmd_roundtrip)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is not None and args.budget <= 0:
        args.budget = None
    try:
        return args.func(args)
    except (ParseError, NotAssociative, NotInverse, ValidationError) as exc:
        _fail(args, exc, "invalid")
        return EXIT_INVALID
    except (NotFInverse, NotAdmissible, NotStronglyNormalized, NotOrderPreservingCocycle,
            WitnessPreconditionFailed) as exc:
        _fail(args, exc, "precondition failed")
        return EXIT_PRECONDITION
    except (BudgetExceeded, CohomologyWitnessNotFound) as exc:
        _fail(args, exc, "budget exceeded")
        return EXIT_BUDGET
    except IsgcohError as exc:
        _fail(args, exc, "invalid")
        return EXIT_INVALID


def _fail(args, exc, label):
    witness = exc.witness
    if isinstance(witness, list) and witness and isinstance(witness[0], Violation):
        witness = [v.to_json() for v in witness]
    payload = {"error": type(exc).__name__, "message": str(exc),
               "witness": witness if isinstance(witness, (list, dict, int, str)) or witness is None
               else [str(w) for w in witness]}
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        print(f"{label}: {type(exc).__name__}: {exc}")
        if witness:
            print(f"witness: {payload['witness']}")


if __name__ == "__main__":
    sys.exit(main())
