"""Exhaustive property sweeps over the builtin corpus, shared by the property
and acceptance tests (each sweep runs once per session)."""

from __future__ import annotations

import functools
import time

import numpy as np

from radtilt.artrans import has_length, knit_ar_quiver, mesh_violations, tau_consistency
from radtilt.bench import CLAIMS, REFUTED, VERIFIED, Instance, corpus, corpus_instances
from radtilt.radcalc import calculus, compose_all, nilpotency_index, nilpotency_index_oracle
from radtilt.tiltkit import torsion_axiom_violations

ALGEBRA_CLAIMS = [
    "clau2.5",
    "nopozo",
    "nofuente",
    "nilpo",
    "camiglar",
    "gamaHlong",
    "ppalher",
    "ctdir",
    "APRgral",
    "APRlibre",
    "Hap",
    "Ha6.2-chain-contract",
    "inclite",
]
TILTING_CLAIMS = ["Tsep", "Tsepdual", "BBcompos", "BBirred", "TheoremA", "propinc"]


def _flats(rc, x, y, n):
    p = rc.pairs[(x, y)]
    return rc.F.matmul(p.layers[n][0], p.basis)


def _in_span(F, L: np.ndarray, rows: np.ndarray) -> bool:
    if rows.shape[0] == 0 or F.is_zero(rows):
        return True
    if L.shape[0] == 0:
        return False
    return F.rank(np.concatenate([L, rows], axis=0)) == L.shape[0]


def chain_violations(rc) -> list:
    """Pairs where rad^(n+1) is not inside rad^n."""
    F = rc.F
    bad = []
    for (x, y), p in rc.pairs.items():
        for n in range(len(p.layers) - 1):
            if not _in_span(F, p.layers[n][0], p.layers[n + 1][0]):
                bad.append((x, y, n))
    return bad


def composition_violations(rc) -> tuple[list, int]:
    """Triples where rad^n(z, y) o rad^m(x, z) is not inside rad^(m+n)(x, y)."""
    F, G = rc.F, rc.G
    bad, checked = [], 0
    for (x, z), pin in rc.pairs.items():
        for y in G.nodes:
            y = y.index
            pout = rc.pairs.get((z, y))
            if pout is None:
                continue
            pxy = rc.pairs.get((x, y))
            X, Z, Y = G.nodes[x].module, G.nodes[z].module, G.nodes[y].module
            for m in range(1, len(pin.layers)):
                inner = _flats(rc, x, z, m)
                for n in range(1, len(pout.layers)):
                    outer = _flats(rc, z, y, n)
                    comp = compose_all(F, outer, inner, X, Z, Y)
                    checked += comp.shape[0]
                    if F.is_zero(comp):
                        continue
                    if pxy is None or m + n >= len(pxy.layers):
                        bad.append((x, z, y, m, n))
                        continue
                    coords = comp[:, pxy.pivots]
                    if not _in_span(F, pxy.layers[m + n][0], coords):
                        bad.append((x, z, y, m, n))
    return bad, checked


@functools.cache
def algebra_sweep() -> dict:
    """Per-algebra properties; returns violations per property and counters."""
    out = {k: [] for k in ["chain", "composition", "has_length", "tau_dtr", "mesh", "oracle"] + ALGEBRA_CLAIMS}
    stats = {"algebras": 0, "compositions": 0, "nodes": 0, "statuses": {}}
    t0 = time.perf_counter()
    from radtilt.catalog import BUILTINS

    for name, A in corpus():
        stats["algebras"] += 1
        G = knit_ar_quiver(A)
        stats["nodes"] += len(G.nodes)
        rc = calculus(A)
        out["chain"] += [(name, *v) for v in chain_violations(rc)]
        bad, n = composition_violations(rc)
        stats["compositions"] += n
        out["composition"] += [(name, *v) for v in bad]
        if G.is_acyclic() and not has_length(G)[0]:
            out["has_length"].append(name)
        out["tau_dtr"] += [(name, lab) for lab in tau_consistency(G)]
        out["mesh"] += [(name, lab) for lab in mesh_violations(G)]
        if nilpotency_index(A).r != nilpotency_index_oracle(A):
            out["oracle"].append(name)
        b = BUILTINS.get(name)
        inst = Instance(name, A, None, list(b.chains[0]) if b is not None and b.chains else None)
        for c in ALGEBRA_CLAIMS:
            st = CLAIMS[c][1](inst)
            stats["statuses"].setdefault(c, {}).setdefault(st[0], 0)
            stats["statuses"][c][st[0]] += 1
            if st[0] == REFUTED:
                out[c].append((name, st[1], st[2]))
    stats["seconds"] = time.perf_counter() - t0
    return {"violations": out, "stats": stats}


@functools.cache
def tilting_sweep() -> dict:
    """Per (algebra, tilting module) properties: torsion axioms and transport claims."""
    out = {k: [] for k in ["torsion_axioms"] + TILTING_CLAIMS}
    stats = {"instances": 0, "statuses": {}}
    t0 = time.perf_counter()
    for inst in corpus_instances():
        stats["instances"] += 1
        d = inst.datum()
        out["torsion_axioms"] += [(inst.name, v) for v in torsion_axiom_violations(d)]
        for c in TILTING_CLAIMS:
            st = CLAIMS[c][1](inst)
            stats["statuses"].setdefault(c, {}).setdefault(st[0], 0)
            stats["statuses"][c][st[0]] += 1
            if st[0] == REFUTED:
                out[c].append((inst.name, st[1], st[2]))
    stats["seconds"] = time.perf_counter() - t0
    return {"violations": out, "stats": stats}


def verified_count(stats: dict, claim: str) -> int:
    return stats["statuses"].get(claim, {}).get(VERIFIED, 0)
