"""Command-line front end.

Every subcommand prints one JSON document on stdout (sorted keys, no
timestamps), so identical invocations give byte-identical output. Exit code
0 means a verdict was computed, whatever it is; 2 means the computation
could not be carried out.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from . import io
from .codes import (
    AttainFailure,
    MdsViolation,
    attain_pattern,
    check_gzp_certificate,
    check_ldmds_witness,
    is_gzp_ell,
    is_ld_mds_le,
    is_mds_ell,
    maximal_patterns,
    mds_violation,
    parity_check,
    random_rs_trial,
    _attain_maximal,
)
from .errors import BudgetExceeded, CapacityError, PreconditionError
from .intersect import (
    check_dual_certificate,
    generic_dim,
    generic_dim_lp,
    generic_dim_partition,
    generic_dim_randomized,
)
from .linalg import MERSENNE_61, RNG_ALGORITHM, MatrixFp, PrimeField, rank
from .patterns import SetFamily, extend_hall, extend_to_maximal, gen_hall_k_minus_1
from .witness import (
    check_intersection_witness,
    check_st20,
    find_intersection_witness,
    intersection_dim_two_ways,
    ldmds_to_mds_violation,
)


def _manifest(command: str, params: dict, result: dict) -> dict:
    return {"command": command, "parameters": params, "version": __version__, **result}


# ---------------------------------------------------------------------------
# subcommands


def cmd_dim(args) -> dict:
    fam = io.family_from_json(io.load_json(args.family))
    params = {"family": io.family_to_json(fam), "engine": args.engine}
    if args.engine == "partition":
        res = io.dim_result_to_json(generic_dim_partition(fam))
    elif args.engine == "lp":
        r, cert = generic_dim_lp(fam)
        res = io.dim_result_to_json(r)
        res["certificate"] = io.dual_cert_to_json(cert, fam)
    else:
        params.update(prime=args.prime, seed=args.seed, trials=args.trials, rng=RNG_ALGORITHM)
        res = io.dim_result_to_json(generic_dim_randomized(fam, PrimeField(args.prime), args.trials, args.seed))
    return _manifest("dim", params, res)


def _check(code, prop: str, level: int, strategy: str, budget: int | None) -> dict:
    out: dict = {"property": prop, "level": level}
    if prop == "mds":
        bad = mds_violation(code)
        out["verdict"] = bad is None
        out["evidence"] = None if bad is None else io.mds_violation_to_json(MdsViolation(tuple(j + 1 for j in bad)))
    elif prop == "mds-ell":
        res = is_mds_ell(code, level, budget)
        out["verdict"] = res is True
        if res is not True:
            ev = io.mds_ell_violation_to_json(res)
            w = find_intersection_witness(code.generator, res)
            if w is not None and check_intersection_witness(code.generator, w):
                ev["witness"] = io.intersection_witness_to_json(w)
            out["evidence"] = ev
        else:
            out["evidence"] = None
    elif prop == "gzp-ell":
        res = is_gzp_ell(code, level, budget)
        out["verdict"] = res is True
        if res is True:
            certs = []
            for pat in maximal_patterns(code.n, code.k, level):
                c = _attain_maximal(code, pat, pat)
                certs.append(io.gzp_cert_to_json(c))
            out["evidence"] = {"type": "gzp_certificates", "certificates": certs}
        elif isinstance(res, MdsViolation):
            out["evidence"] = io.mds_violation_to_json(res)
        else:
            out["evidence"] = io.attain_failure_to_json(attain_pattern(code, res))
    elif prop == "ld-mds":
        res = is_ld_mds_le(code, level, strategy, **({} if budget is None else {"kernel_budget": budget}))
        out["strategy"] = strategy
        out["verdict"] = res is True
        if res is True:
            out["evidence"] = None
        else:
            ev = io.ldmds_to_json(res)
            ev["dual_gap"] = io.gap_report_to_json(ldmds_to_mds_violation(code, res))
            out["evidence"] = ev
    else:
        raise ValueError(f"unknown property {prop!r}")
    return out


def cmd_check(args) -> dict:
    code = io.load_code(args.code)
    params = {"code": io.code_to_json(code), "property": args.property, "level": args.level,
              "strategy": args.strategy, "budget": args.budget}
    return _manifest("check", params, _check(code, args.property, args.level, args.strategy, args.budget))


def cmd_random_rs(args) -> dict:
    rep = random_rs_trial(args.n, args.k, args.level, PrimeField(args.prime), args.trials, args.seed,
                          workers=args.workers)
    params = {"n": args.n, "k": args.k, "L": args.level, "prime": args.prime, "seed": args.seed,
              "trials": args.trials, "rng": RNG_ALGORITHM}
    return _manifest("random-rs", params, io.rs_report_to_json(rep))


def cmd_st20(args) -> dict:
    code = io.load_code(args.code)
    d = io.load_json(args.js)
    js = d["js"] if isinstance(d, dict) else d
    params = {"code": io.code_to_json(code), "js": [sorted(j) for j in js]}
    return _manifest("st20", params, io.st20_report_to_json(check_st20(code, js)))


def cmd_extend(args) -> dict:
    d = io.load_json(args.input)
    mode = args.mode
    if mode == "auto":
        mode = "hall" if "deltas" in d else "maximal"
    params = {"input": d, "mode": mode}
    if mode == "hall":
        fam = io.family_from_json(d)
        return _manifest("extend", params, {"family": io.family_to_json(extend_hall(fam))})
    pat = io.pattern_from_json(d)
    out = extend_to_maximal(pat) if mode == "maximal" else gen_hall_k_minus_1(pat)
    return _manifest("extend", params, {"pattern": io.pattern_to_json(out)})


def cmd_attain(args) -> dict:
    code = io.load_code(args.code)
    pat = io.pattern_from_json(io.load_json(args.pattern))
    res = attain_pattern(code, pat)
    params = {"code": io.code_to_json(code), "pattern": io.pattern_to_json(pat)}
    if isinstance(res, AttainFailure):
        return _manifest("attain", params, {"attained": False, "evidence": io.attain_failure_to_json(res)})
    return _manifest("attain", params, {"attained": True, "evidence": io.gzp_cert_to_json(res)})


def verify_evidence(d: dict, code=None) -> bool:
    """Standalone check of any evidence document emitted by the other subcommands."""
    kind = d.get("type")

    def need_code():
        if code is None:
            raise PreconditionError(f"evidence of type {kind!r} needs --code")
        return code

    if kind == "ld_mds_witness":
        return check_ldmds_witness(need_code(), io.ldmds_from_json(d))
    if kind == "gzp_certificate":
        c = need_code()
        return check_gzp_certificate(c, io.gzp_cert_from_json(d, c.field))
    if kind == "gzp_certificates":
        return all(verify_evidence(x, code) for x in d["certificates"])
    if kind == "intersection_witness":
        return check_intersection_witness(need_code().generator, io.intersection_witness_from_json(d))
    if kind == "mds_violation":
        c = need_code()
        cols = [j - 1 for j in d["columns"]]
        return len(cols) == c.k and rank(c.generator.columns(cols)) < c.k
    if kind == "mds_ell_violation":
        c = need_code()
        fam = io.family_from_json(d["family"])
        direct, via_kernel = intersection_dim_two_ways(c.generator, fam)
        return direct == via_kernel and direct != generic_dim(fam)
    if kind == "mds_gap_report":
        c = need_code()
        fam = io.family_from_json(d["family"])
        direct, via_kernel = intersection_dim_two_ways(parity_check(c), fam)
        return direct == via_kernel and direct != generic_dim(fam)
    if kind == "dual_lp_certificate":
        cert, fam = io.dual_cert_from_json(d)
        return check_dual_certificate(fam, cert) and cert.objective == generic_dim(fam)
    if kind == "attain_failure":
        c = need_code()
        pat = io.pattern_from_json(d["maximal"])
        return isinstance(_attain_maximal(c, pat, pat), AttainFailure)
    raise PreconditionError(f"unknown evidence type {kind!r}")


def cmd_verify_witness(args) -> dict:
    d = io.load_json(args.witness)
    if "type" not in d:
        for key in ("evidence", "certificate"):
            if key in d:
                d = d[key]
                break
        if d is None:
            raise PreconditionError("document carries no evidence (positive verdict)")
    code = io.load_code(args.code) if args.code else None
    return _manifest("verify-witness", {"type": d.get("type")}, {"valid": verify_evidence(d, code)})


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="higher-mds", description="Higher-order MDS toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="generic intersection dimension of a set family")
    p.add_argument("family")
    p.add_argument("--engine", choices=["partition", "lp", "randomized"], default="partition")
    p.add_argument("--prime", type=int, default=MERSENNE_61)
    p.add_argument("--trials", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("check", help="test a code for MDS, MDS(l), GZP(l) or LD-MDS(<=L)")
    p.add_argument("code")
    p.add_argument("--property", choices=["mds", "mds-ell", "gzp-ell", "ld-mds"], required=True)
    p.add_argument("--level", type=int, default=2)
    p.add_argument("--strategy", choices=["dual", "direct"], default="dual")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("random-rs", help="random Reed-Solomon list-decoding trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", "-L", type=int, required=True, help="list size L")
    p.add_argument("--prime", type=int, default=MERSENNE_61)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_random_rs)

    p = sub.add_parser("st20", help="hypothesis and rank test for the M_{G,(J_1..J_t)} matrix")
    p.add_argument("code")
    p.add_argument("js", help='JSON list of sets, or {"js": [...]}, 1-based')
    p.set_defaults(func=cmd_st20)

    p = sub.add_parser("extend", help="Hall-type extension of a family or zero pattern")
    p.add_argument("input")
    p.add_argument("--mode", choices=["auto", "hall", "maximal", "k-minus-1"], default="auto")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("attain", help="certificate that a code attains a zero pattern")
    p.add_argument("code")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_attain)

    p = sub.add_parser("verify-witness", help="check emitted evidence independently")
    p.add_argument("witness")
    p.add_argument("--code", default=None)
    p.set_defaults(func=cmd_verify_witness)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (OSError, ValueError, KeyError, TypeError, PreconditionError, CapacityError,
            BudgetExceeded) as exc:
        print(io.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    print(io.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
