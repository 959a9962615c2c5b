"""JSON encoding of families, patterns, codes and evidence.

Element labels and set indices are 1-based in every file. Fractions are
written as strings ("3/4"), so output is exact and byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .codes import (
    AttainFailure,
    GzpCertificate,
    LdMdsWitness,
    LinearCode,
    MdsViolation,
    RsTrialReport,
)
from .intersect import DualLpCertificate, GenericDimResult
from .linalg import MatrixFp, PrimeField
from .patterns import IndexPartition, SetFamily, ZeroPattern
from .witness import IntersectionWitness, MdsGapReport, St20Report


def frac(x: Fraction | int | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def load_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# families and patterns


def family_to_json(f: SetFamily) -> dict:
    out = {"n": f.n, "k": f.k, "sets": [sorted(s) for s in f.sets]}
    if f.deltas is not None:
        out["deltas"] = list(f.deltas)
    return out


def family_from_json(d: dict) -> SetFamily:
    return SetFamily.of(int(d["n"]), int(d["k"]), d["sets"], d.get("deltas"))


def pattern_to_json(p: ZeroPattern) -> dict:
    return {"n": p.n, "k": p.k, "sets": [sorted(s) for s in p.sets]}


def pattern_from_json(d: dict) -> ZeroPattern:
    return ZeroPattern.of(int(d["n"]), int(d["k"]), d["sets"])


def partition_to_json(p: IndexPartition | None) -> list[list[int]] | None:
    return None if p is None else p.one_based()


# ---------------------------------------------------------------------------
# codes


def code_to_json(c: LinearCode) -> dict:
    out = {"p": c.field.modulus, "k": c.k, "n": c.n, "generator": c.generator.to_lists()}
    if c.rs_points is not None:
        out["rs_points"] = list(c.rs_points)
    return out


def code_from_json(d: dict) -> LinearCode:
    F = PrimeField(int(d["p"]))
    k, n = int(d["k"]), int(d["n"])
    G = MatrixFp.from_rows(F, d["generator"], n)
    if G.nrows != k:
        raise ValueError(f"generator has {G.nrows} rows, header says k={k}")
    pts = d.get("rs_points")
    return LinearCode(G, None if pts is None else tuple(int(x) for x in pts))


def load_code(path: str | Path) -> LinearCode:
    """Code from JSON, or from the matrix text format when the file ends in .txt."""
    path = Path(path)
    if path.suffix == ".txt":
        return LinearCode(MatrixFp.from_text(path.read_text()))
    return code_from_json(load_json(path))


def matrix_to_json(m: MatrixFp) -> list[list[int]]:
    return m.to_lists()


# ---------------------------------------------------------------------------
# results and evidence


def dim_result_to_json(r: GenericDimResult) -> dict:
    out = {
        "dimension": r.dimension,
        "partition": partition_to_json(r.partition),
        "engine": r.engine,
        "error_bound": frac(r.error_bound),
    }
    if r.deltas is not None:
        out["deltas"] = [frac(x) for x in r.deltas]
    if r.engine == "randomized":
        det = r.details
        out["trials"] = det["per_trial"]
        out["agreeing_trials"] = det["agreeing_trials"]
        out["per_trial_error_bound"] = frac(det["per_trial_error_bound"])
        out["seed"] = det["seed"]
        out["prime"] = det["prime"]
    return out


def dual_cert_to_json(c: DualLpCertificate, family: SetFamily) -> dict:
    return {
        "type": "dual_lp_certificate",
        "family": family_to_json(family),
        "weights": [{"subset": [i + 1 for i in I], "mu": frac(mu)} for I, mu in sorted(c.weights.items())],
        "objective": frac(c.objective),
        "source": c.source,
    }


def dual_cert_from_json(d: dict) -> tuple[DualLpCertificate, SetFamily]:
    fam = family_from_json(d["family"])
    weights = {tuple(i - 1 for i in w["subset"]): Fraction(w["mu"]) for w in d["weights"]}
    return DualLpCertificate(weights, Fraction(d["objective"]), d.get("source", "")), fam


def ldmds_to_json(w: LdMdsWitness) -> dict:
    return {"type": "ld_mds_witness", "level": w.level, "vectors": [list(v) for v in w.vectors],
            "syndrome": list(w.syndrome)}


def ldmds_from_json(d: dict) -> LdMdsWitness:
    return LdMdsWitness(int(d["level"]), tuple(tuple(int(x) for x in v) for v in d["vectors"]),
                        tuple(int(x) for x in d.get("syndrome", ())))


def gzp_cert_to_json(c: GzpCertificate) -> dict:
    return {"type": "gzp_certificate", "pattern": pattern_to_json(c.pattern),
            "maximal": pattern_to_json(c.maximal), "m": c.m.to_lists()}


def gzp_cert_from_json(d: dict, F: PrimeField) -> GzpCertificate:
    pat = pattern_from_json(d["pattern"])
    maximal = pattern_from_json(d["maximal"]) if "maximal" in d else pat
    return GzpCertificate(pat, MatrixFp.from_rows(F, d["m"], pat.k), maximal)


def attain_failure_to_json(f: AttainFailure) -> dict:
    return {"type": "attain_failure", "pattern": pattern_to_json(f.pattern),
            "maximal": pattern_to_json(f.maximal), "rank": f.rank, "reason": f.reason}


def mds_violation_to_json(v: MdsViolation) -> dict:
    return {"type": "mds_violation", "columns": list(v.columns)}


def mds_ell_violation_to_json(f: SetFamily) -> dict:
    return {"type": "mds_ell_violation", "family": family_to_json(f)}


def intersection_witness_to_json(w: IntersectionWitness) -> dict:
    return {"type": "intersection_witness", "family": family_to_json(w.family), "z": list(w.z),
            "preimages": [list(u) for u in w.preimages]}


def intersection_witness_from_json(d: dict) -> IntersectionWitness:
    return IntersectionWitness(family_from_json(d["family"]), tuple(int(x) for x in d["z"]),
                               tuple(tuple(int(x) for x in u) for u in d["preimages"]))


def gap_report_to_json(r: MdsGapReport) -> dict:
    return {"type": "mds_gap_report", "family": family_to_json(r.family), "actual_dim": r.actual_dim,
            "actual_dim_kernel_route": r.actual_dim_kernel_route, "generic_dim": r.generic_dim,
            "gap": r.gap, "confirmed": r.confirmed, "normalized": r.normalized}


def st20_report_to_json(r: St20Report) -> dict:
    return {
        "hypothesis_holds": r.hypothesis_holds,
        "violating_subset": None if r.violating_subset is None else list(r.violating_subset),
        "full_column_rank": r.full_column_rank,
        "rank": r.rank,
        "ncols": r.ncols,
        "restricted_columns": list(r.restricted_columns),
    }


def rs_report_to_json(r: RsTrialReport) -> dict:
    return {
        "n": r.n, "k": r.k, "L": r.L, "prime": r.prime, "seed": r.seed, "trials": r.trials,
        "failures": r.failures, "failure_rate": frac(r.failure_rate), "c": r.c,
        "error_bound": frac(r.error_bound), "error_bound_float": float(r.error_bound), "rng": r.rng,
        "outcomes": [{"trial": t, "ok": o.ok, "reason": o.reason} for t, o in enumerate(r.outcomes)],
    }
