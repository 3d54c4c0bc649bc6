"""Full pipeline runs and their machine-readable reports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import scenario as sc_mod
from .blocks import Block
from .classify import FlexVerdict, InternalConsistencyError, balance_instance, classify
from .exact import Signature
from .forms import (CentralizerFactor, Duality, FactorKind, FormKind, Iota,
                    IrredClass, IsotypicalBlock, centralizer_factor)
from .groups import Family, GroupSpec
from .oracle import brute_force_roots, compare_reports, synthesize_model
from .roots import RootSystem, root_system
from .scenario import Scenario
from .toledo import Propagation


def _frac(x: Fraction) -> str:
    return str(x)


def _vec(v) -> List[str]:
    return [_frac(x) for x in v]


def _sig(s: Optional[Signature]):
    if s is None:
        return None
    return [s.pos, s.neg]


def block_factors(spec: GroupSpec, b: Block) -> List[CentralizerFactor]:
    """Centralizer factors contributed by one block, at the level of the
    complexified algebra."""
    iota = Iota.CONJUGATION if spec.family == Family.SU else Iota.IDENTITY
    kind = FormKind(iota, +1 if spec.epsilon is None else spec.epsilon) \
        if spec.family == Family.SU or spec.is_orthogonal_like else None
    if b.kind in ("cls", "real_cls"):
        return [CentralizerFactor(FactorKind.GL, b.mult)]
    if b.kind == "conj_pair":
        return [CentralizerFactor(FactorKind.GL, b.mult),
                CentralizerFactor(FactorKind.GL, b.mult)]
    if b.kind == "sesq_self":
        cls = IrredClass("c", b.dim, Duality.SESQUI_SELF_DUAL, signature=b.class_sig)
        blk = IsotypicalBlock(cls, b.mult, block_signature=b.sig)
        return [centralizer_factor(kind, blk)]
    if b.kind == "sesq_pair":
        cls = IrredClass("c", b.dim, Duality.SESQUI_PAIRED, partner="c*")
        blk = IsotypicalBlock(cls, b.mult,
                              block_signature=Signature(b.d_eff, b.d_eff))
        return [centralizer_factor(kind, blk)]
    if b.kind in ("imag_pair", "split_pair", "dual_pair"):
        cls = IrredClass("c", b.dim, Duality.PAIRED, partner="c*")
        blk = IsotypicalBlock(cls, b.mult)
        return [centralizer_factor(kind, blk)]
    if b.kind == "quad_pair":
        cls = IrredClass("c", b.dim, Duality.PAIRED, partner="c*")
        blk = IsotypicalBlock(cls, b.mult)
        f = centralizer_factor(kind, blk)
        return [f, f]
    if b.kind == "zero":
        return []
    raise AssertionError(b.kind)


def center_dim_crosscheck(spec: GroupSpec, system: RootSystem) -> Tuple[int, int]:
    """(sum of complexified per-factor center dimensions adjusted for the
    trace relation, complexified dimension of the center). Equal by
    construction; re-derived independently here as a consistency test."""
    total = 0
    for b in system.blocks:
        for f in block_factors(spec, b):
            total += f.center_dim
    if spec.is_sl_like:
        total -= 1
    dim_c_complexified = system.dim_c // 2 if spec.is_complex else system.dim_c
    return total, dim_c_complexified


@dataclass
class RunResult:
    scenario: Scenario
    system: RootSystem
    propagation: Propagation
    verdict: FlexVerdict
    oracle_problems: Optional[List[str]]

    def exit_code(self) -> int:
        if self.oracle_problems:
            return 4
        if self.verdict.outcome == "indeterminate":
            return 2
        return 0


def run_scenario(sc: Scenario) -> RunResult:
    system = root_system(sc.spec, sc.blocks)
    factors, dim_c = center_dim_crosscheck(sc.spec, system)
    if factors != dim_c:
        raise InternalConsistencyError(
            f"factor centers sum to {factors} but the center has dimension {dim_c}")
    verdict, prop = classify(sc.spec, sc.surface, system, sc.decorations)
    oracle_problems = None
    if sc.options.oracle:
        sys2, fm = synthesize_model(sc.spec, system.blocks, sc.options.cap)
        numeric = brute_force_roots(sys2, fm, sc.options.tolerance, sc.options.seed)
        oracle_problems = compare_reports(sys2, numeric, sc.options.tolerance)
    return RunResult(sc, system, prop, verdict, oracle_problems)


def run_file(path: str) -> RunResult:
    return run_scenario(sc_mod.load(path))


def to_json(res: RunResult) -> Dict:
    sc = res.scenario
    system = res.system
    factor_list = []
    for b in system.blocks:
        for f in block_factors(sc.spec, b):
            factor_list.append({"block": b.label, "factor": f.describe(),
                                "center_dim": f.center_dim})
    std = []
    roots = list(system.standard) + ([system.zero] if system.zero else [])
    for r in roots:
        std.append({
            "label": r.label, "re": _vec(r.re), "im": _vec(r.im), "dim": r.dim,
            "pure_imaginary": r.pure_imaginary, "signature": _sig(r.sig),
            "status": res.propagation.block_status[r.label].value,
        })
    adj = []
    for pr in res.propagation.adjoint:
        r = pr.root
        entry = {
            "label": r.label, "re": _vec(r.re), "im": _vec(r.im), "dim": r.dim,
            "pure_imaginary": r.pure_imaginary, "signature": _sig(r.sig),
            "status": pr.status.value,
        }
        if pr.forced_tag:
            entry["forced_by"] = pr.forced_tag
        if pr.derived_from:
            entry["derived_from"] = pr.derived_from
            entry["derived_flipped"] = pr.flipped
        adj.append(entry)
    inst = balance_instance(system, res.propagation)
    cert = res.verdict.certificate
    balance = {
        "ambient_dim": inst.ambient_dim,
        "p_vectors": [_vec(v) for v in inst.p_vectors],
        "n_vectors": [_vec(v) for v in inst.n_vectors],
    }
    if cert is not None:
        balance["balanced"] = cert.balanced
        if cert.balanced:
            balance["witness"] = {
                "coefficients": [_frac(c) for c in cert.coefficients or []],
                "n_coefficients": [_frac(c) for c in cert.n_coefficients or []],
                "spanning": [[t, i] for t, i in (cert.spanning_indices or [])],
            }
        else:
            balance["witness"] = {"functional": _vec(cert.functional)}
    out = {
        "schema": "liebalance-report/1",
        "scenario": sc_mod.to_json(sc),
        "group": sc.spec.describe(),
        "dim_g": sc.spec.dim_complexified,
        "dim_center": system.dim_c,
        "zero_space_dim": system.dim_g0,
        "centralizer_factors": factor_list,
        "standard_weights": std,
        "adjoint_weights": adj,
        "balance": balance,
        "verdict": {
            "outcome": res.verdict.outcome,
            "reason": res.verdict.reason,
            "descriptor": res.verdict.descriptor,
            "genus_bound_ok": res.verdict.genus_bound_ok,
            "unknown": res.verdict.unknown,
        },
    }
    if res.oracle_problems is not None:
        out["oracle"] = {"checked": True, "problems": res.oracle_problems}
    return out


def render_json(res: RunResult) -> str:
    return json.dumps(to_json(res), indent=2) + "\n"


def render_text(res: RunResult) -> str:
    d = to_json(res)
    lines = []
    lines.append(f"group            {d['group']}   (dim {d['dim_g']})")
    lines.append(f"genus            {res.scenario.surface.genus}"
                 f"   bound ok: {d['verdict']['genus_bound_ok']}")
    lines.append(f"center dim       {d['dim_center']}")
    lines.append("centralizer      " + (" x ".join(f["factor"] for f in
                                                   d["centralizer_factors"]) or "-"))
    lines.append("standard weights")
    for r in d["standard_weights"]:
        sig = f" sig {tuple(r['signature'])}" if r["signature"] else ""
        flag = " imaginary" if r["pure_imaginary"] else ""
        lines.append(f"  {r['label']:<12} dim {r['dim']:<3}{flag}{sig}"
                     f"  status {r['status']}")
    lines.append("adjoint weights")
    for r in d["adjoint_weights"]:
        sig = f" sig {tuple(r['signature'])}" if r["signature"] else ""
        why = f" [{r['forced_by']}]" if "forced_by" in r else ""
        lines.append(f"  {r['label']:<22} dim {r['dim']:<3} status "
                     f"{r['status']}{sig}{why}")
    bal = d["balance"]
    if "balanced" in bal:
        lines.append(f"balanced         {bal['balanced']}")
    v = d["verdict"]
    extra = f" ({v['descriptor']})" if v["descriptor"] else ""
    lines.append(f"verdict          {v['outcome']}{extra}   reason: {v['reason']}")
    if v["unknown"]:
        lines.append(f"unknown statuses {', '.join(v['unknown'])}")
    if "oracle" in d:
        probs = d["oracle"]["problems"]
        lines.append(f"oracle           {'agrees' if not probs else probs}")
    return "\n".join(lines) + "\n"
