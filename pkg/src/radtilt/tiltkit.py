"""Tilting modules, torsion pairs, End(T) presentations and Brenner-Butler functors.

Conventions.  For summands ``T_1, ..., T_n`` the algebra ``B = End_A(T)``
has one vertex ``i'`` per summand (1-based position).  A map
``t: T_i -> T_j`` spanning rad/rad^2 of add T gives an arrow ``j' -> i'``, and
the B-module ``F(M) = Hom_A(T, M)`` carries ``Hom_A(T_i, M)`` at ``i'`` with
that arrow acting by precomposition with ``t``.  A path of B therefore maps
to the composite of its arrow lifts in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .artrans import ARQuiver, RepInfinite, knit_ar_quiver, require_finite, tau_inv
from .qalg import BoundQuiverAlgebra, PathExpr, Quiver
from .radcalc import _rref_or_empty, compose_all, nilpotency_index, postcompose_rows, precompose_rows
from .repmod import (
    ExtSpace,
    ModuleError,
    ModuleMap,
    Representation,
    decompose_with_maps,
    direct_sum,
    ext1,
    hom_space,
    injective,
    is_isomorphic,
    projective,
    projective_dimension_at_most_one,
    radical_endomorphisms,
    simple,
)


class NotTiltingError(ModuleError):
    code = "not_tilting"

    def __init__(self, message: str, reason: str, witness=None):
        super().__init__(message)
        self.reason = reason
        self.witness = witness


class AprError(ModuleError):
    code = "apr_precondition"


class NotInTorsionFreeClassError(ModuleError):
    code = "not_torsion_free"


# --------------------------------------------------------------------------
# End(T) as a bound quiver algebra


@dataclass
class EndPresentation:
    """B = End_A(T) presented by a quiver with relations, plus arrow lifts."""

    B: BoundQuiverAlgebra
    summands: list[Representation]
    lifts: dict[str, tuple[int, int, ModuleMap]]  # arrow -> (i, j, t: T_i -> T_j)

    def vertex(self, i: int) -> str:
        return f"{i + 1}'"


def _flat_rows(maps, X, Y, F) -> np.ndarray:
    width = sum(a * b for a, b in zip(X.dims, Y.dims))
    if not maps:
        return F.zeros(0, width)
    return np.array([f.flat() for f in maps]).reshape(len(maps), width)


def endo_presentation(summands: list[Representation], name: str | None = None) -> EndPresentation:
    """Present End_A(T_1 (+) ... (+) T_n) for pairwise non-isomorphic indecomposables."""
    T = list(summands)
    if not T:
        raise ModuleError("empty module")
    A = T[0].algebra
    F = A.field
    n = len(T)
    for i in range(n):
        for j in range(i + 1, n):
            if is_isomorphic(T[i], T[j])[0]:
                raise NotTiltingError("T is not basic", "repeated_summand", (i, j))
    # rad(T_i, T_j): all maps for i != j, rad End for i = j
    rad = {}
    for i in range(n):
        for j in range(n):
            maps = radical_endomorphisms(T[i]) if i == j else hom_space(T[i], T[j]).basis
            rad[(i, j)] = _rref_or_empty(F, _flat_rows(maps, T[i], T[j], F), sum(a * b for a, b in zip(T[i].dims, T[j].dims)))[0]
    for i in range(n):
        if hom_space(T[i], T[i]).dim - rad[(i, i)].shape[0] != 1:
            raise ModuleError("a summand has End/rad of dimension > 1 (field too small)")
    # arrows: complement of rad^2 in rad
    vname = [f"{i + 1}'" for i in range(n)]
    arrows = []
    lifts = {}
    count = 0
    for i in range(n):
        for j in range(n):
            R = rad[(i, j)]
            if R.shape[0] == 0:
                continue
            acc = [compose_all(F, rad[(k, j)], rad[(i, k)], T[i], T[k], T[j]) for k in range(n) if rad[(k, j)].shape[0] and rad[(i, k)].shape[0]]
            R2 = np.concatenate(acc, axis=0) if acc else F.zeros(0, R.shape[1])
            R2 = _rref_or_empty(F, R2, R.shape[1])[0]
            for row in F.complement(R2, R):
                count += 1
                nm = f"t{count}"
                arrows.append((nm, vname[j], vname[i]))
                lifts[nm] = (i, j, ModuleMap.from_flat(T[i], T[j], row))
    q = Quiver(vname, arrows)
    if not q.is_acyclic():
        raise ModuleError("End(T) has a quiver with oriented cycles; not supported")
    # relations: kernel of paths -> maps, pair by pair over all lengths >= 2
    rels = []
    index = {v: k for k, v in enumerate(vname)}
    paths_from: dict[str, list] = {v: [((v, ()), T[index[v]].identity())] for v in vname}
    frontier = {v: [((v, ()), T[index[v]].identity())] for v in vname}
    length = 0
    while any(frontier.values()):
        length += 1
        nxt = {v: [] for v in vname}
        for v, items in frontier.items():
            for p, m in items:
                tgt = p[0] if not p[1] else q.arrow[p[1][-1]].target
                for a in q.out_arrows(tgt):
                    i, j, t = lifts[a.name]
                    # composite of lifts in reverse order: m o t
                    nxt[v].append(((p[0], p[1] + (a.name,)), m @ t))
        for v in vname:
            paths_from[v].extend(nxt[v])
        frontier = nxt
        if length > 64:
            raise ModuleError("End(T) presentation did not terminate")
    span_check = {}
    for v in vname:
        groups: dict[str, list] = {}
        for p, m in paths_from[v]:
            tgt = p[0] if not p[1] else q.arrow[p[1][-1]].target
            groups.setdefault(tgt, []).append((p, m))
        for w, items in groups.items():
            rows = np.array([m.flat() for _, m in items]).reshape(len(items), -1)
            span_check[(v, w)] = F.rank(rows) if rows.size else 0
            long_items = [(p, m) for p, m in items if len(p[1]) >= 2]
            if not long_items or rows.shape[1] == 0:
                for p, _ in long_items:
                    rels.append(PathExpr(((1, p),)))
                continue
            L = np.array([m.flat() for _, m in long_items]).reshape(len(long_items), -1)
            for row in F.left_nullspace(L):
                terms = tuple((_scalar(F, c), p) for c, (p, _) in zip(row, long_items) if c != 0)
                rels.append(PathExpr(terms))
    total = sum(span_check.values())
    want = sum(hom_space(T[i], T[j]).dim for i in range(n) for j in range(n))
    if total != want:
        raise ModuleError("paths of the presented quiver do not span End(T)")
    B = BoundQuiverAlgebra(q, rels, F, name=name)
    if B.dim != want:
        raise ModuleError(f"presentation has dimension {B.dim}, End(T) has {want}")
    return EndPresentation(B, T, lifts)


def _scalar(F, c):
    from fractions import Fraction

    return Fraction(c) if F.name == "Q" else int(c)


# --------------------------------------------------------------------------
# Brenner-Butler functors


def bb_hom(P: EndPresentation, M: Representation) -> Representation:
    """F(M) = Hom_A(T, M) as a B-module."""
    if M.algebra is not P.summands[0].algebra:
        raise ModuleError("module over a different algebra")
    B, T = P.B, P.summands
    F = B.field
    H = [hom_space(Ti, M) for Ti in T]
    dims = [h.dim for h in H]
    maps = {}
    for a in B.quiver.arrows:
        i, j, t = P.lifts[a.name]
        # arrow j' -> i': Hom(T_j, M) -> Hom(T_i, M), h -> h o t
        if dims[j] == 0 or dims[i] == 0:
            maps[a.name] = F.zeros(dims[i], dims[j])
            continue
        rows = precompose_rows(F, H[j].matrix, T[j], M, t)
        maps[a.name] = rows[:, H[i].pivots].T.copy()
    return Representation(B, dims, maps, label=f"F({M.label})" if M.label else None)


def bb_hom_map(P: EndPresentation, f: ModuleMap, FM: Representation | None = None, FN: Representation | None = None) -> ModuleMap:
    """F(f): F(M) -> F(N), post-composition with f."""
    T = P.summands
    FM = FM or bb_hom(P, f.source)
    FN = FN or bb_hom(P, f.target)
    F = P.B.field
    mats = []
    for Ti in T:
        HM, HN = hom_space(Ti, f.source), hom_space(Ti, f.target)
        if HM.dim == 0 or HN.dim == 0:
            mats.append(F.zeros(HN.dim, HM.dim))
            continue
        rows = postcompose_rows(F, HM.matrix, Ti, f.source, f)
        mats.append(rows[:, HN.pivots].T.copy())
    return ModuleMap(FM, FN, mats)


def bb_ext(P: EndPresentation, M: Representation, check: bool = False) -> Representation:
    """F'(M) = Ext^1_A(T, M) as a B-module."""
    B, T = P.B, P.summands
    F = B.field
    if check and any(hom_space(Ti, M).dim for Ti in T):
        raise NotInTorsionFreeClassError("Hom(T, M) != 0: M is not in the torsion-free class")
    spaces = [ExtSpace(Ti, M) for Ti in T]
    dims = [s.dim for s in spaces]
    maps = {}
    for a in B.quiver.arrows:
        i, j, t = P.lifts[a.name]
        maps[a.name] = spaces[j].pullback_into(spaces[i], t) if dims[i] and dims[j] else F.zeros(dims[i], dims[j])
    return Representation(B, dims, maps, label=f"F'({M.label})" if M.label else None)


def bb_ext_map(P: EndPresentation, f: ModuleMap, FM: Representation | None = None, FN: Representation | None = None) -> ModuleMap:
    """F'(f): Ext^1(T, M) -> Ext^1(T, N), push-forward along f."""
    T = P.summands
    FM = FM or bb_ext(P, f.source)
    FN = FN or bb_ext(P, f.target)
    F = P.B.field
    mats = []
    for Ti in T:
        sM, sN = ExtSpace(Ti, f.source), ExtSpace(Ti, f.target)
        mats.append(sM.pushforward_into(sN, f) if sM.dim and sN.dim else F.zeros(sN.dim, sM.dim))
    return ModuleMap(FM, FN, mats)


# --------------------------------------------------------------------------
# tilting data


@dataclass
class TiltingDatum:
    algebra: BoundQuiverAlgebra
    summands: list[Representation]
    certificate: dict
    gamma: ARQuiver
    torsion: list[int] = field(default_factory=list)
    torsion_free: list[int] = field(default_factory=list)
    separating: bool = False
    _presentation: EndPresentation | None = None
    _b_side: dict | None = None

    @property
    def presentation(self) -> EndPresentation:
        if self._presentation is None:
            self._presentation = endo_presentation(self.summands, name=f"End({self.algebra.name})" if self.algebra.name else None)
        return self._presentation

    @property
    def B(self) -> BoundQuiverAlgebra:
        return self.presentation.B

    def correspondence(self) -> dict[int, str]:
        return {i: self.presentation.vertex(i) for i in range(len(self.summands))}

    def F(self, M: Representation) -> Representation:
        return bb_hom(self.presentation, M)

    def F_map(self, f: ModuleMap) -> ModuleMap:
        return bb_hom_map(self.presentation, f)

    def Fprime(self, M: Representation) -> Representation:
        return bb_ext(self.presentation, M)

    def Fprime_map(self, f: ModuleMap) -> ModuleMap:
        return bb_ext_map(self.presentation, f)

    def b_side(self) -> dict:
        """Knit B and classify its indecomposables into the images of F and F'."""
        if self._b_side is not None:
            return self._b_side
        G = self.gamma
        B = self.B
        knit = knit_ar_quiver(B)
        info = {"representation_finite": not isinstance(knit, RepInfinite), "gamma": knit}
        if isinstance(knit, RepInfinite):
            info.update(splitting=None, X=None, Y=None, reason=knit.reason)
            self._b_side = info
            return info
        GB = knit
        Y, X = {}, {}
        for i in self.torsion:
            FM = self.F(G.nodes[i].module)
            Y[i] = GB.locate(FM)[0]
        for i in self.torsion_free:
            FM = self.Fprime(G.nodes[i].module)
            X[i] = GB.locate(FM)[0]
        covered = set(Y.values()) | set(X.values())
        info.update(
            Y=Y,
            X=X,
            splitting=len(covered) == len(GB.nodes) and len(set(Y.values()) & set(X.values())) == 0,
            bijective=len(set(Y.values())) == len(Y) and len(set(X.values())) == len(X),
        )
        self._b_side = info
        return info

    @property
    def splitting(self) -> bool | None:
        return self.b_side()["splitting"]

    def to_json(self) -> dict:
        G = self.gamma
        return {
            "summands": [
                {"position": i + 1, "label": s.label, "dims": list(s.dims), "vertex": self.presentation.vertex(i)} for i, s in enumerate(self.summands)
            ],
            "certificate": self.certificate,
            "torsion": [G.nodes[i].label for i in self.torsion],
            "torsion_free": [G.nodes[i].label for i in self.torsion_free],
            "separating": self.separating,
        }


def _as_summands(T) -> list[Representation]:
    if isinstance(T, Representation):
        return [X for X, _, _ in decompose_with_maps(T)]
    out = []
    for X in T:
        parts = decompose_with_maps(X)
        if len(parts) == 1:
            out.append(X)
        else:
            out.extend(P for P, _, _ in parts)
    return out


def is_tilting(A: BoundQuiverAlgebra, T, gamma: ARQuiver | None = None) -> TiltingDatum:
    """Certify T as a tilting module and classify ind A into the torsion pair."""
    summands = _as_summands(T)
    for S in summands:
        if S.algebra is not A:
            raise ModuleError("summand over a different algebra")
    n = len(summands)
    for i in range(n):
        for j in range(i + 1, n):
            if summands[i].dims == summands[j].dims and is_isomorphic(summands[i], summands[j])[0]:
                raise NotTiltingError(f"summands {i + 1} and {j + 1} are isomorphic", "repeated_summand", (i, j))
    if n != len(A.vertices):
        raise NotTiltingError(f"{n} summands but {len(A.vertices)} vertices", "summand_count", n)
    for i, S in enumerate(summands):
        if not projective_dimension_at_most_one(S):
            raise NotTiltingError(f"summand {i + 1} has projective dimension > 1", "pd", i)
    for i, S in enumerate(summands):
        for j, R in enumerate(summands):
            d, _ = ext1(S, R)
            if d:
                witness = ExtSpace(S, R).extension(0)
                raise NotTiltingError(f"Ext^1(T_{i + 1}, T_{j + 1}) has dimension {d}", "ext", (i, j, witness))
    G = gamma if gamma is not None else require_finite(knit_ar_quiver(A))
    torsion, free = [], []
    for node in G.nodes:
        X = node.module
        if all(ext1(S, X)[0] == 0 for S in summands):
            torsion.append(node.index)
        if all(hom_space(S, X).dim == 0 for S in summands):
            free.append(node.index)
    separating = len(set(torsion) | set(free)) == len(G.nodes) and not set(torsion) & set(free)
    cert = {"pd_at_most_one": True, "ext_vanishes": True, "summands": n, "vertices": len(A.vertices)}
    return TiltingDatum(A, summands, cert, G, torsion, free, separating)


def torsion_axiom_violations(datum: TiltingDatum) -> list[str]:
    """Check (a) Hom(T, F) = 0, (b) Hom(M, F) = 0 => M in T, (c) Hom(T, N) = 0 => N in F over ind A."""
    G = datum.gamma
    tor, fre = set(datum.torsion), set(datum.torsion_free)
    out = []
    hom = {}

    def h(i, j):
        if (i, j) not in hom:
            hom[(i, j)] = hom_space(G.nodes[i].module, G.nodes[j].module).dim
        return hom[(i, j)]

    for i in tor:
        for j in fre:
            if h(i, j):
                out.append(f"(a) Hom({G.nodes[i].label}, {G.nodes[j].label}) != 0")
    for n in G.nodes:
        if n.index not in tor and all(h(n.index, j) == 0 for j in fre):
            out.append(f"(b) {n.label} has no maps to the torsion-free class but is not torsion")
        if n.index not in fre and all(h(i, n.index) == 0 for i in tor):
            out.append(f"(c) {n.label} receives no maps from the torsion class but is not torsion-free")
    return out


def classify_torsion(A: BoundQuiverAlgebra, T) -> dict:
    datum = T if isinstance(T, TiltingDatum) else is_tilting(A, T)
    G = datum.gamma
    side = datum.b_side()
    return {
        "torsion": [G.nodes[i].label for i in datum.torsion],
        "torsion_free": [G.nodes[i].label for i in datum.torsion_free],
        "separating": datum.separating,
        "b_representation_finite": side["representation_finite"],
        "splitting": side["splitting"],
    }


# --------------------------------------------------------------------------
# APR tilts


def is_free_sink(A: BoundQuiverAlgebra, a) -> bool:
    """A sink that is not the end point of any relation."""
    a = str(a)
    sinks, _, _ = A.sinks_sources()
    if a not in sinks:
        return False
    q = A.quiver
    return all(r.target(q) != a for r in A.relations)


def apr_module(A: BoundQuiverAlgebra, a) -> list[Representation]:
    a = str(a)
    if a not in A.quiver.vertex_index:
        raise AprError(f"unknown vertex {a}")
    sinks, _, _ = A.sinks_sources()
    if a not in sinks:
        raise AprError(f"vertex {a} is not a sink")
    P = projective(A, a)
    if P.dim != 1:
        raise AprError(f"P_{a} is not simple")
    if is_isomorphic(P, injective(A, a))[0]:
        raise AprError(f"P_{a} is injective")
    X = tau_inv(simple(A, a), check=False)
    X = X.with_label(f"tau-S{a}")
    return [X if b == a else projective(A, b) for b in A.vertices]


def apr_tilt(A: BoundQuiverAlgebra, a) -> TiltingDatum:
    """T[a] = tau^-1 S_a (+) the projectives P_b, b != a, ordered by vertex."""
    return is_tilting(A, apr_module(A, a))


def index_comparison(datum: TiltingDatum) -> dict:
    rA = nilpotency_index(datum.algebra).r
    side = datum.b_side()
    if not side["representation_finite"]:
        return {"r_A": rA, "r_B": None, "reason": side["reason"]}
    return {"r_A": rA, "r_B": nilpotency_index(datum.B).r}
