"""Scenario files: a versioned, diffable JSON schema for one classification run.

A scenario holds the group, the surface genus, the isotypical block data and
the maximality decorations. Reports echo the scenario, so a report can be
re-run; field order and rational formatting are fixed to keep outputs byte
stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from . import blocks as bk
from . import groups
from .blocks import Block, ScenarioError
from .groups import Family, GroupSpec
from .toledo import Decoration, Status, SurfaceData

SCHEMA = "liebalance-scenario/1"


@dataclass
class Options:
    oracle: bool = False
    tolerance: float = 1e-9
    seed: int = 0
    cap: int = 12


@dataclass
class Scenario:
    spec: GroupSpec
    surface: SurfaceData
    blocks: List[Block]
    decorations: List[Decoration] = field(default_factory=list)
    options: Options = field(default_factory=Options)


def group_to_json(spec: GroupSpec) -> Dict:
    f = spec.family
    if f in (Family.SL_R, Family.SL_C, Family.SO_C):
        return {"family": f.value, "n": spec.n}
    if f == Family.SL_H:
        return {"family": f.value, "m": spec.m}
    if f in (Family.SP_R, Family.SP_C, Family.SO_STAR):
        return {"family": f.value, "n": 2 * spec.m}
    return {"family": f.value, "p": spec.p, "q": spec.q}


def group_from_json(d: Dict) -> GroupSpec:
    try:
        fam = Family(d["family"])
    except (KeyError, ValueError) as exc:
        raise ScenarioError(f"unknown family in {d!r}") from exc
    try:
        if fam == Family.SL_R:
            return groups.sl_r(int(d["n"]))
        if fam == Family.SL_C:
            return groups.sl_c(int(d["n"]))
        if fam == Family.SO_C:
            return groups.so_c(int(d["n"]))
        if fam == Family.SL_H:
            return groups.sl_h(int(d["m"]))
        if fam == Family.SP_R:
            return groups.sp_r(int(d["n"]))
        if fam == Family.SP_C:
            return groups.sp_c(int(d["n"]))
        if fam == Family.SO_STAR:
            return groups.so_star(int(d["n"]))
        if fam == Family.SU:
            return groups.su(int(d["p"]), int(d["q"]))
        if fam == Family.SO:
            return groups.so(int(d["p"]), int(d["q"]))
        if fam == Family.SP:
            return groups.sp(int(d["p"]), int(d["q"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"bad group parameters in {d!r}: {exc}") from exc
    raise AssertionError


def block_to_json(b: Block) -> Dict:
    out: Dict = {"kind": b.kind, "dim": b.dim}
    if b.kind != "zero":
        out["mult"] = b.mult
    if b.kind == "sesq_self":
        out["class_sig"] = [b.class_sig.pos, b.class_sig.neg]
        out["mult_sig"] = [b.mult_sig.pos, b.mult_sig.neg]
    elif b.sig is not None:
        out["sig"] = [b.sig.pos, b.sig.neg]
    if b.label:
        out["label"] = b.label
    return out


def block_from_json(d: Dict) -> Block:
    try:
        kind = d["kind"]
        dim = int(d["dim"])
        mult = int(d.get("mult", 1))
        label = d.get("label", "")
        if kind == "cls":
            return bk.cls(dim, mult, label)
        if kind == "real_cls":
            return bk.real_cls(dim, mult, label)
        if kind == "conj_pair":
            return bk.conj_pair(dim, mult, label)
        if kind == "sesq_self":
            return bk.sesq_self(dim, tuple(d["class_sig"]), tuple(d["mult_sig"]), label)
        if kind == "sesq_pair":
            return bk.sesq_pair(dim, mult, label)
        if kind == "imag_pair":
            return bk.imag_pair(dim, mult, tuple(d["sig"]), label)
        if kind == "split_pair":
            return bk.split_pair(dim, mult, label)
        if kind == "quad_pair":
            return bk.quad_pair(dim, mult, label)
        if kind == "dual_pair":
            return bk.dual_pair(dim, mult, label)
        if kind == "zero":
            sig = tuple(d["sig"]) if "sig" in d else None
            return bk.zero_block(dim, sig, label)
    except ScenarioError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"bad block {d!r}: {exc}") from exc
    raise ScenarioError(f"unknown block kind {d.get('kind')!r}")


def decoration_to_json(deco: Decoration) -> Dict:
    out = {"target": deco.target, "status": deco.status.value}
    if deco.value is not None:
        out["toledo_quanta"] = str(deco.value)
    return out


def decoration_from_json(d: Dict) -> Decoration:
    try:
        status = Status(d["status"])
        value = Fraction(d["toledo_quanta"]) if "toledo_quanta" in d else None
        return Decoration(str(d["target"]), status, value)
    except (KeyError, ValueError, TypeError) as exc:
        raise ScenarioError(f"bad decoration {d!r}: {exc}") from exc


def to_json(sc: Scenario) -> Dict:
    return {
        "schema": SCHEMA,
        "group": group_to_json(sc.spec),
        "surface": {"genus": sc.surface.genus},
        "blocks": [block_to_json(b) for b in sc.blocks],
        "decorations": [decoration_to_json(d) for d in sc.decorations],
        "options": {"oracle": sc.options.oracle, "tolerance": sc.options.tolerance,
                    "seed": sc.options.seed, "cap": sc.options.cap},
    }


def from_json(d: Dict) -> Scenario:
    if not isinstance(d, dict):
        raise ScenarioError("scenario must be a JSON object")
    if d.get("schema") != SCHEMA:
        raise ScenarioError(f"unsupported schema {d.get('schema')!r}; expected {SCHEMA}")
    spec = group_from_json(d.get("group", {}))
    surf = d.get("surface", {})
    try:
        surface = SurfaceData(int(surf["genus"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"bad surface data {surf!r}: {exc}") from exc
    blocks = [block_from_json(b) for b in d.get("blocks", [])]
    decos = [decoration_from_json(x) for x in d.get("decorations", [])]
    opt = d.get("options", {})
    options = Options(bool(opt.get("oracle", False)),
                      float(opt.get("tolerance", 1e-9)),
                      int(opt.get("seed", 0)), int(opt.get("cap", 12)))
    return Scenario(spec, surface, blocks, decos, options)


def load(path: str) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return from_json(data)


def dumps(sc: Scenario) -> str:
    return json.dumps(to_json(sc), indent=2, sort_keys=False) + "\n"
