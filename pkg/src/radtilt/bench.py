"""Verification harness: Dynkin sweeps, APR-tilt chains and claim checks.

Every check returns a :class:`VerificationReport` whose status is one of
``verified``, ``refuted``, ``inapplicable`` or ``unverifiable``.  Claims about
all morphisms of a radical power are checked on a spanning set of that power,
which suffices for linear membership statements; claims about paths are
checked exhaustively over the arrows of the AR quiver.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .artrans import ARQuiver, RepInfinite, has_length, knit_ar_quiver, require_finite
from .catalog import BUILTINS, builtin, load_algebra, parse_modules
from .field import QQ, Field
from .qalg import BoundQuiverAlgebra, parse_algebra, path_algebra, rename_vertices
from .radcalc import calculus, factors_through_simple, nilpotency_index, nilpotency_index_oracle, reduced_nilpotency_index
from .repmod import ModuleError, Representation, injective, is_isomorphic, projective
from .tiltkit import AprError, NotTiltingError, TiltingDatum, apr_module, bb_ext_map, bb_hom_map, is_free_sink, is_tilting


class DynkinError(ValueError):
    code = "dynkin"


class ChainError(ModuleError):
    code = "chain"

    def __init__(self, message: str, stage: int, sink: str):
        super().__init__(f"stage {stage}, sink {sink}: {message}")
        self.stage = stage
        self.sink = sink


class UnknownClaimError(KeyError):
    code = "unknown_claim"

    def __str__(self) -> str:
        return f"unknown claim id {self.args[0]!r}; known: {', '.join(CLAIMS)}"


# --------------------------------------------------------------------------
# Dynkin diagrams


def dynkin_edges(kind: str, n: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin graph with vertices 1..n (in a fixed order)."""
    kind = kind.upper()
    if kind == "A" and n >= 1:
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D" and n >= 4:
        return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    if kind == "E" and n in (6, 7, 8):
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise DynkinError(f"{kind}_{n} is not a Dynkin diagram")


def positive_roots(kind: str, n: int) -> int:
    """Number of positive roots, i.e. of indecomposables of a hereditary algebra of this type."""
    kind = kind.upper()
    dynkin_edges(kind, n)
    if kind == "A":
        return n * (n + 1) // 2
    if kind == "D":
        return n * (n - 1)
    return {6: 36, 7: 63, 8: 120}[n]


def hereditary_index(kind: str, n: int) -> int:
    """Nilpotency index of the radical of mod kQ for a Dynkin quiver Q."""
    kind = kind.upper()
    dynkin_edges(kind, n)
    if kind == "A":
        return n
    if kind == "D":
        return 2 * n - 3
    return {6: 11, 7: 17, 8: 29}[n]


def orientation_string(orientation) -> str:
    return "".join("+" if o else "-" for o in orientation)


def dynkin_algebra(kind: str, n: int, orientation=None, field: Field = QQ) -> BoundQuiverAlgebra:
    """kQ for the Dynkin graph with the given orientation.

    ``orientation`` has one entry per edge ``(i, j)`` of :func:`dynkin_edges`;
    True orients it i -> j.  The default orients every edge forwards.
    """
    edges = dynkin_edges(kind, n)
    if orientation is None:
        orientation = (True,) * len(edges)
    if isinstance(orientation, str):
        orientation = tuple(c == "+" for c in orientation)
    if len(orientation) != len(edges):
        raise DynkinError(f"{kind}_{n} has {len(edges)} edges but the orientation has {len(orientation)} entries")
    arrows = []
    for k, ((i, j), fwd) in enumerate(zip(edges, orientation)):
        s, t = (i, j) if fwd else (j, i)
        arrows.append((f"a{k + 1}", str(s), str(t)))
    name = f"{kind.upper()}{n}:{orientation_string(orientation)}"
    return path_algebra([str(i) for i in range(1, n + 1)], arrows, field, name=name)


def dynkin_type(A: BoundQuiverAlgebra) -> tuple[str, int] | None:
    """(kind, n) when A is a path algebra of a Dynkin quiver, else None."""
    if A.relations:
        return None
    q = A.quiver
    n = len(q.vertices)
    edges = {frozenset((a.source, a.target)) for a in q.arrows}
    if len(edges) != len(q.arrows) or any(len(e) == 1 for e in edges) or len(edges) != n - 1 or not q.is_connected():
        return None
    nbr = {v: set() for v in q.vertices}
    for e in edges:
        u, v = tuple(e)
        nbr[u].add(v)
        nbr[v].add(u)
    branch = [v for v in q.vertices if len(nbr[v]) > 2]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or len(nbr[branch[0]]) > 3:
        return None
    c = branch[0]
    arms = []
    for start in nbr[c]:
        length, prev, cur = 1, c, start
        while len(nbr[cur]) == 2:
            prev, cur = cur, next(iter(nbr[cur] - {prev}))
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", n)
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return ("E", n)
    return None


@dataclass
class DynkinResult:
    kind: str
    n: int
    orientation: str
    r: int
    vertex_r: int | None
    nodes: int
    roots: int
    expected: int
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.r == self.expected and self.nodes == self.roots and self.vertex_r is not None

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "type": self.kind,
            "n": self.n,
            "orientation": self.orientation,
            "r": self.r,
            "vertex_r": self.vertex_r,
            "nodes": self.nodes,
            "positive_roots": self.roots,
            "expected": self.expected,
            "ok": self.ok,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def dynkin_index(kind: str, n: int, orientation=None, field: Field = QQ) -> DynkinResult:
    """Knit kQ, compute r_H and the common per-vertex index r_a (None if they differ)."""
    t0 = time.perf_counter()
    A = dynkin_algebra(kind, n, orientation, field)
    G = require_finite(knit_ar_quiver(A))
    rep = nilpotency_index(A)
    vals = {v.r for v in rep.table.values()}
    return DynkinResult(
        kind.upper(),
        n,
        A.name.split(":")[1],
        rep.r,
        vals.pop() if len(vals) == 1 else None,
        len(G.nodes),
        positive_roots(kind, n),
        hereditary_index(kind, n),
        time.perf_counter() - t0,
    )


def orientations(kind: str, n: int):
    return itertools.product((True, False), repeat=len(dynkin_edges(kind, n)))


@dataclass
class SweepReport:
    kind: str
    n: int
    rows: list[DynkinResult]

    @property
    def invariant(self) -> bool:
        return len({r.r for r in self.rows}) == 1

    @property
    def ok(self) -> bool:
        return self.invariant and all(r.ok for r in self.rows)

    def to_json(self, timing: bool = False) -> dict:
        return {
            "type": self.kind,
            "n": self.n,
            "orientations": len(self.rows),
            "r_values": sorted({r.r for r in self.rows}),
            "expected": hereditary_index(self.kind, self.n),
            "orientation_invariant": self.invariant,
            "ok": self.ok,
            "rows": [r.to_json(timing) for r in self.rows],
        }


def orientation_sweep(kind: str, n: int, all_orientations: bool | None = None, field: Field = QQ) -> SweepReport:
    """r_H over every orientation; E_7 and E_8 use one orientation unless asked."""
    kind = kind.upper()
    if all_orientations is None:
        all_orientations = not (kind == "E" and n >= 7)
    ors = list(orientations(kind, n)) if all_orientations else [None]
    return SweepReport(kind, n, [dynkin_index(kind, n, o, field) for o in ors])


# --------------------------------------------------------------------------
# APR-tilt chains


@dataclass
class ChainStage:
    algebra: BoundQuiverAlgebra
    r: int | None
    sink: str | None = None
    free: bool | None = None
    datum: TiltingDatum | None = None

    def to_json(self) -> dict:
        return {
            "sink": self.sink,
            "free_sink": self.free,
            "r": self.r,
            "algebra": self.algebra.to_text(),
        }


@dataclass
class ChainReport:
    stages: list[ChainStage]
    monotone: bool
    free_equal: bool
    final_type: tuple[str, int] | None
    bound: int | None
    within_bound: bool | None
    stopped: str | None = None

    @property
    def indices(self) -> list[int | None]:
        return [s.r for s in self.stages]

    @property
    def ok(self) -> bool:
        return self.stopped is None and self.monotone and self.free_equal and self.within_bound is not False

    def to_json(self) -> dict:
        return {
            "indices": self.indices,
            "monotone": self.monotone,
            "free_sinks_preserve_index": self.free_equal,
            "final_type": None if self.final_type is None else f"{self.final_type[0]}{self.final_type[1]}",
            "bound": self.bound,
            "within_bound": self.within_bound,
            "stopped": self.stopped,
            "note": "the bound is confirmed on this chain only; it is not a proof for all algebras of the type",
            "stages": [s.to_json() for s in self.stages],
        }


def apr_step(A: BoundQuiverAlgebra, a) -> tuple[BoundQuiverAlgebra, TiltingDatum]:
    """End(T[a]) presented with the vertex names of A (vertex u' renamed to u)."""
    a = str(a)
    datum = is_tilting(A, apr_module(A, a))
    mapping = {datum.presentation.vertex(k): v for k, v in enumerate(A.vertices)}
    return rename_vertices(datum.B, mapping, name=f"{A.name or 'A'}[{a}]"), datum


def _index_or_none(A: BoundQuiverAlgebra) -> int | None:
    if isinstance(knit_ar_quiver(A), RepInfinite):
        return None
    return nilpotency_index(A).r


def tilt_chain(A: BoundQuiverAlgebra, sinks) -> ChainReport:
    """Apply APR tilts at the listed sinks in turn and check the index along the way."""
    stages = [ChainStage(A, _index_or_none(A))]
    stopped = None
    cur = A
    for k, a in enumerate(sinks, start=1):
        a = str(a)
        if stages[-1].r is None:
            stopped = f"stage {k - 1} is representation-infinite"
            break
        free = is_free_sink(cur, a)
        try:
            nxt, datum = apr_step(cur, a)
        except (AprError, NotTiltingError) as exc:
            raise ChainError(str(exc), k, a) from None
        stages.append(ChainStage(nxt, _index_or_none(nxt), a, free, datum))
        cur = nxt
    if stopped is None and stages[-1].r is None:
        stopped = f"stage {len(stages) - 1} is representation-infinite"
    rs = [s.r for s in stages]
    monotone = all(x is None or y is None or x <= y for x, y in zip(rs, rs[1:]))
    free_equal = all(s.r == p.r for p, s in zip(stages, stages[1:]) if s.free and s.r is not None and p.r is not None)
    final = dynkin_type(stages[-1].algebra)
    bound = hereditary_index(*final) if final else None
    within = None if bound is None else all(r is not None and r <= bound for r in rs)
    return ChainReport(stages, monotone, free_equal, final, bound, within, stopped)


# --------------------------------------------------------------------------
# corpus


def linear_quotient(n: int, zero_at: tuple[int, ...]) -> BoundQuiverAlgebra:
    """Linear A_n, 1 -> ... -> n, modulo a_{i+1} a_i for each i in ``zero_at``."""
    text = f"vertices {' '.join(map(str, range(1, n + 1)))}\n"
    text += "".join(f"arrow a{i} {i} {i + 1}\n" for i in range(1, n))
    text += "".join(f"relation a{i + 1}*a{i}\n" for i in zero_at)
    name = f"A{n}/" + ",".join(f"a{i + 1}a{i}" for i in zero_at)
    return parse_algebra(text, name=name)


def corpus(include_builtins: bool = True) -> list[tuple[str, BoundQuiverAlgebra]]:
    """Representation-finite test algebras, in a fixed order.

    All orientations of A_1..A_5, D_4 and D_5; every nonempty set of length-two
    zero relations on linear A_3..A_5; and the builtin examples.
    """
    out = []
    for kind, n in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5)]:
        for o in orientations(kind, n):
            A = dynkin_algebra(kind, n, o)
            out.append((A.name, A))
    for n in (3, 4, 5):
        for k in range(1, n - 1):
            for zs in itertools.combinations(range(1, n - 1), k):
                A = linear_quotient(n, zs)
                out.append((A.name, A))
    if include_builtins:
        for name in ("eje1a", "eje1b", "aprsix", "ejemplo1a", "ejemplo1b"):
            out.append((name, builtin(name)))
    return out


def tilting_family(A: BoundQuiverAlgebra) -> list[tuple[str, list[Representation]]]:
    """Generated tilting modules: A itself and T[a] for every admissible sink a."""
    out = [("A", [projective(A, v) for v in A.vertices])]
    for a in _apr_sinks(A):
        out.append((f"T[{a}]", apr_module(A, a)))
    return out


def corpus_instances() -> list[Instance]:
    """Every corpus algebra paired with every module of its tilting family."""
    out = []
    for name, A in corpus():
        b = BUILTINS.get(name)
        chain = list(b.chains[0]) if b is not None and b.chains else None
        for label, T in tilting_family(A):
            out.append(Instance(f"{name} {label}", A, T, chain))
    return out


# --------------------------------------------------------------------------
# reports


VERIFIED, REFUTED, INAPPLICABLE, UNVERIFIABLE = "verified", "refuted", "inapplicable", "unverifiable"


@dataclass
class VerificationReport:
    claim: str
    instance: str
    status: str
    detail: str = ""
    witness: object = None
    metrics: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != REFUTED

    def to_json(self, timing: bool = False) -> dict:
        out = {"claim": self.claim, "instance": self.instance, "status": self.status, "detail": self.detail, "metrics": self.metrics}
        if self.witness is not None:
            out["witness"] = self.witness
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class Instance:
    """An algebra together with optional tilting summands and an APR chain."""

    name: str
    algebra: BoundQuiverAlgebra
    tilting: list[Representation] | None = None
    chain: list[str] | None = None

    @property
    def gamma(self) -> ARQuiver | RepInfinite:
        return knit_ar_quiver(self.algebra)

    def datum(self) -> TiltingDatum | None:
        if self.tilting is None:
            return None
        d = self.__dict__.get("_datum")
        if d is None:
            d = is_tilting(self.algebra, self.tilting)
            self.__dict__["_datum"] = d
        return d


def resolve_instance(ref, tilting: str | None = None, chain=None, field: Field | str | None = None) -> Instance:
    """A builtin name or algebra file, with the builtin's tilting module and chain as defaults."""
    if isinstance(ref, Instance):
        return ref
    if isinstance(ref, BoundQuiverAlgebra):
        A, name, b = ref, ref.name or "algebra", None
    else:
        A = load_algebra(ref, field)
        name = ref
        b = BUILTINS.get(ref)
    if tilting is None and b is not None and b.tilting:
        tilting = b.tilting[0]
    if chain is None and b is not None and b.chains:
        chain = list(b.chains[0])
    if isinstance(chain, str):
        chain = [c for c in chain.split(",") if c]
    T = parse_modules(A, tilting) if tilting else None
    return Instance(name, A, T, list(chain) if chain is not None else None)


# --------------------------------------------------------------------------
# claim checks


def _finite(inst: Instance):
    g = inst.gamma
    return None if isinstance(g, RepInfinite) else g


def _node_labels(G: ARQuiver, idx) -> list[str]:
    return [G.nodes[i].label for i in idx]


def _max_vertices(A: BoundQuiverAlgebra) -> list[str]:
    return nilpotency_index(A).maximal_vertices


def _tilting_gate(inst: Instance, need_splitting: bool = False, need_b_finite: bool = True):
    """(datum, side, None) or (None, None, (status, reason))."""
    if inst.tilting is None:
        return None, None, (INAPPLICABLE, "the instance has no tilting module")
    if _finite(inst) is None:
        return None, None, (INAPPLICABLE, "A is representation-infinite")
    try:
        d = inst.datum()
    except NotTiltingError as exc:
        return None, None, (INAPPLICABLE, f"T is not tilting: {exc}")
    if not d.separating:
        return None, None, (INAPPLICABLE, "T is not separating")
    side = d.b_side()
    if need_b_finite and not side["representation_finite"]:
        return None, None, (UNVERIFIABLE, f"B is representation-infinite ({side['reason']}); radical powers of mod B are not computed")
    if need_splitting and not side["splitting"]:
        return None, None, (INAPPLICABLE, "T is not splitting")
    return d, side, None


def _transport(inst: Instance, dual: bool, both_ways: bool) -> tuple[str, str, object, dict]:
    d, side, gate = _tilting_gate(inst, need_splitting=both_ways)
    if gate:
        return gate[0], gate[1], None, {}
    G = d.gamma
    rcA, rcB = calculus(d.algebra), calculus(d.B)
    nodes = d.torsion_free if dual else d.torsion
    image = side["X"] if dual else side["Y"]
    functor = d.Fprime if dual else d.F
    fmap = bb_ext_map if dual else bb_hom_map
    cls = set(image.values())
    FM = {i: functor(G.nodes[i].module) for i in nodes}
    checked = exact = 0
    for x in nodes:
        for y in nodes:
            if both_ways:
                for n in range(rcA.layer_count(x, y) + 1):
                    a_dim = rcA.layer_dim(x, y, n)
                    b_dim = rcB.layer_dim(image[x], image[y], n)
                    if a_dim != b_dim:
                        return REFUTED, "radical layer dimensions differ", [G.nodes[x].label, G.nodes[y].label, n, a_dim, b_dim], {}
            for n in range(1, rcA.layer_count(x, y)):
                for f in rcA.layer_basis(x, y, n):
                    Ff = fmap(d.presentation, f, FM[x], FM[y])
                    dB = rcB.depth(Ff)
                    checked += 1
                    if dB < n:
                        return REFUTED, f"F(f) has depth {dB} < {n}", [G.nodes[x].label, G.nodes[y].label, n], {}
                    if dB == n and rcA.depth(f) == n:
                        exact += 1
                        if n not in rcB.nonzero_path_lengths(image[x], image[y], within=cls):
                            return REFUTED, f"no nonzero path of length {n} inside the image class", [G.nodes[x].label, G.nodes[y].label, n], {}
    metrics = {"class_size": len(nodes), "maps_checked": checked, "exact_depth_cases": exact}
    if checked == 0:
        metrics["vacuous"] = True
    return VERIFIED, "", None, metrics


def check_tsep(inst: Instance):
    return _transport(inst, dual=False, both_ways=False)


def check_tsepdual(inst: Instance):
    return _transport(inst, dual=True, both_ways=False)


def check_bbcompos(inst: Instance):
    s1 = _transport(inst, dual=False, both_ways=True)
    if s1[0] != VERIFIED:
        return s1
    s2 = _transport(inst, dual=True, both_ways=True)
    if s2[0] != VERIFIED:
        return s2
    m = {"torsion": s1[3], "torsion_free": s2[3]}
    return VERIFIED, "membership preserved and reflected on both classes", None, m


def check_bbirred(inst: Instance):
    d, side, gate = _tilting_gate(inst, need_splitting=True)
    if gate:
        return gate[0], gate[1], None, {}
    G, GB = d.gamma, side["gamma"]
    rcB = calculus(d.B)
    count = 0
    for nodes, image, functor, fmap in ((d.torsion, side["Y"], d.F, bb_hom_map), (d.torsion_free, side["X"], d.Fprime, bb_ext_map)):
        FM = {i: functor(G.nodes[i].module) for i in nodes}
        for x in nodes:
            for y in nodes:
                ma, mb = G.multiplicity(x, y), GB.multiplicity(image[x], image[y])
                if ma != mb:
                    return REFUTED, "arrow multiplicities differ", [G.nodes[x].label, G.nodes[y].label, ma, mb], {}
                for f in G.arrows.get((x, y), ()):
                    count += 1
                    if rcB.depth(fmap(d.presentation, f, FM[x], FM[y])) != 1:
                        return REFUTED, "image of an irreducible map is not irreducible", [G.nodes[x].label, G.nodes[y].label], {}
    return VERIFIED, "", None, {"irreducible_maps": count, **({"vacuous": True} if count == 0 else {})}


def _theorem_a_gate(inst: Instance):
    d, side, gate = _tilting_gate(inst)
    if gate:
        return None, gate
    cands = _projective_summands(d, _max_vertices(d.algebra))
    if not cands:
        return None, (INAPPLICABLE, f"no P_u with u in (R_A)_0 = {_max_vertices(d.algebra)} is a summand of T")
    u, k = cands[0]
    return (d, side, u, k), None


def _projective_summands(d: TiltingDatum, vertices) -> list[tuple[str, int]]:
    """(u, k) with P_u isomorphic to the k-th summand of T, for u in ``vertices``."""
    out = []
    for u in vertices:
        P = projective(d.algebra, u)
        for k, S in enumerate(d.summands):
            if S.dims == P.dims and is_isomorphic(S, P)[0]:
                out.append((u, k))
    return out


def check_theorem_a(inst: Instance):
    got, gate = _theorem_a_gate(inst)
    if gate:
        return gate[0], gate[1], None, {}
    d, side, u, _ = got
    rA, rB = nilpotency_index(d.algebra).r, nilpotency_index(d.B).r
    m = {"u": u, "r_A": rA, "r_B": rB}
    if rA <= rB:
        return VERIFIED, f"r_A = {rA} <= {rB} = r_B", None, m
    return REFUTED, f"r_A = {rA} > {rB} = r_B", m, m


def _fpu_fiu(d: TiltingDatum, side: dict, u: str) -> tuple[int, int]:
    G = d.gamma
    return side["Y"][G.projective_node(u)], side["Y"][G.injective_node(u)]


def check_propinc(inst: Instance):
    got, gate = _theorem_a_gate(inst)
    if gate:
        return gate[0], gate[1], None, {}
    d, side, u, _ = got
    rA, rB = nilpotency_index(d.algebra).r, nilpotency_index(d.B).r
    m = {"u": u, "r_A": rA, "r_B": rB}
    if rA != rB:
        return INAPPLICABLE, f"r_A = {rA} differs from r_B = {rB}", None, m
    p, i = _fpu_fiu(d, side, u)
    lens = calculus(d.B).nonzero_path_lengths(p, i)
    m["path_lengths"] = lens
    if rA - 1 in lens:
        return VERIFIED, f"nonzero path F(P_{u}) ~> F(I_{u}) of length {rA - 1}", None, m
    return REFUTED, f"no nonzero path of length {rA - 1}", m, m


def check_propinc_converse_guard(inst: Instance):
    """The converse of the path criterion fails: a path of length r_A - 1 from P_u' to I_u' with r_A != r_B."""
    got, gate = _theorem_a_gate(inst)
    if gate:
        return gate[0], gate[1], None, {}
    d, side, _, _ = got
    B = d.B
    rA, rB = nilpotency_index(d.algebra).r, nilpotency_index(B).r
    GB = side["gamma"]
    rcB = calculus(B)
    lengths = {}
    for u, k in _projective_summands(d, _max_vertices(d.algebra)):
        ub = d.presentation.vertex(k)
        lens = rcB.nonzero_path_lengths(GB.projective_node(ub), GB.injective_node(ub))
        lengths[ub] = lens
        if rA - 1 in lens and rA != rB:
            m = {"u": u, "u_B": ub, "r_A": rA, "r_B": rB, "path_lengths": lens}
            return VERIFIED, f"a path of length {rA - 1} from P_{ub} to I_{ub} exists yet r_A = {rA} != {rB} = r_B", None, m
    m = {"r_A": rA, "r_B": rB, "path_lengths": lengths}
    return INAPPLICABLE, "this instance does not witness a failure of the converse", None, m


def _per_vertex(inst: Instance, select: Callable, label: str):
    if _finite(inst) is None:
        return INAPPLICABLE, "A is representation-infinite", None, {}
    A = inst.algebra
    if len(A.vertices) < 2:
        return INAPPLICABLE, "a single vertex has no other vertex to compare", None, {"vacuous": True}
    table = nilpotency_index(A).table
    hits = [a for a in A.vertices if select(a)]
    if not hits:
        return INAPPLICABLE, f"no vertex with {label}", None, {"vacuous": True}
    for a in hits:
        if not any(table[a].r <= table[b].r for b in A.vertices if b != a):
            return REFUTED, f"r_{a} exceeds every other r_b", {a: table[a].r}, {}
    return VERIFIED, "", None, {"vertices": hits}


def check_nopozo(inst: Instance):
    A = inst.algebra
    return _per_vertex(inst, lambda a: projective(A, a).dim == 1, "a simple projective")


def check_nofuente(inst: Instance):
    A = inst.algebra
    _, sources, _ = A.sinks_sources()
    if not sources:
        return INAPPLICABLE, "the quiver has no source", None, {"vacuous": True}
    return _per_vertex(inst, lambda a: injective(A, a).dim == 1, "a simple injective")


def _apr_sinks(A: BoundQuiverAlgebra) -> list[str]:
    sinks, _, _ = A.sinks_sources()
    out = []
    for a in A.vertices:
        if a in sinks:
            try:
                apr_module(A, a)
            except (AprError, ModuleError):
                continue
            out.append(a)
    return out


def _apr_check(inst: Instance, free_only: bool):
    if _finite(inst) is None:
        return INAPPLICABLE, "A is representation-infinite", None, {}
    A = inst.algebra
    sinks = [a for a in _apr_sinks(A) if not free_only or is_free_sink(A, a)]
    if not sinks:
        return INAPPLICABLE, "no admissible " + ("free " if free_only else "") + "sink", None, {"vacuous": True}
    rA = nilpotency_index(A).r
    rows = {}
    for a in sinks:
        B, _ = apr_step(A, a)
        rB = _index_or_none(B)
        rows[a] = rB
        if rB is None:
            if free_only:
                return REFUTED, f"B is representation-infinite at the free sink {a}", {a: None}, {}
            continue
        if (free_only and rB != rA) or rB < rA:
            return REFUTED, f"sink {a}: r_A = {rA}, r_B = {rB}", {a: rB}, {}
    return VERIFIED, "", None, {"r_A": rA, "r_B": rows}


def check_aprgral(inst: Instance):
    return _apr_check(inst, free_only=False)


def check_aprlibre(inst: Instance):
    return _apr_check(inst, free_only=True)


def check_nilpo(inst: Instance):
    if _finite(inst) is None:
        return INAPPLICABLE, "A is representation-infinite", None, {}
    A = inst.algebra
    full = nilpotency_index(A).r
    oracle = nilpotency_index_oracle(A)
    _, _, interior = A.sinks_sources()
    m = {"full": full, "oracle": oracle}
    if not interior:
        if full != oracle:
            return REFUTED, "full computation and oracle disagree", m, m
        return INAPPLICABLE, "no vertex is neither a sink nor a source", None, m
    m["reduced"] = reduced_nilpotency_index(A)
    if len({full, oracle, m["reduced"]}) == 1:
        return VERIFIED, f"r_A = {full}", None, m
    return REFUTED, "indices disagree", m, m


def _hereditary_gate(inst: Instance):
    if inst.algebra.relations:
        return INAPPLICABLE, "A has relations"
    if _finite(inst) is None:
        return INAPPLICABLE, "A is representation-infinite"
    return None


def check_gamahlong(inst: Instance):
    gate = _hereditary_gate(inst)
    if gate:
        return gate[0], gate[1], None, {}
    ok, w = has_length(inst.gamma)
    G = inst.gamma
    if ok:
        return VERIFIED, "", None, {"nodes": len(G.nodes)}
    return REFUTED, "parallel paths of different lengths", [_node_labels(G, p) for p in w], {}


def check_camiglar(inst: Instance):
    gate = _hereditary_gate(inst)
    if gate:
        return gate[0], gate[1], None, {}
    table = nilpotency_index(inst.algebra).table
    vals = {a: v.r for a, v in table.items()}
    if len(set(vals.values())) == 1:
        return VERIFIED, f"r_a = {next(iter(vals.values()))} at every vertex", None, {"r_a": vals}
    return REFUTED, "r_a differ", vals, {}


def check_ppalher(inst: Instance):
    gate = _hereditary_gate(inst)
    if gate:
        return gate[0], gate[1], None, {}
    t = dynkin_type(inst.algebra)
    if t is None:
        return INAPPLICABLE, "not a Dynkin quiver", None, {}
    r = nilpotency_index(inst.algebra).r
    m = {"type": f"{t[0]}{t[1]}", "r": r, "expected": hereditary_index(*t), "nodes": len(inst.gamma.nodes), "positive_roots": positive_roots(*t)}
    if r == m["expected"] and m["nodes"] == m["positive_roots"]:
        return VERIFIED, "", None, m
    return REFUTED, "index or node count differs from the table", m, m


def _chain(inst: Instance):
    if inst.chain is None:
        if dynkin_type(inst.algebra) is not None:
            return tilt_chain(inst.algebra, [])
        return None
    return tilt_chain(inst.algebra, inst.chain)


def check_chain_contract(inst: Instance):
    rep = _chain(inst)
    if rep is None:
        return INAPPLICABLE, "no APR chain supplied", None, {}
    m = {"indices": rep.indices, "sinks": inst.chain or []}
    if rep.stopped:
        return REFUTED, rep.stopped, m, m
    if not rep.monotone or not rep.free_equal:
        return REFUTED, "indices violate the APR monotonicity or free-sink equality", m, m
    if rep.final_type is None:
        return INAPPLICABLE, "the chain does not end at a Dynkin path algebra", None, m
    m["final_type"] = f"{rep.final_type[0]}{rep.final_type[1]}"
    return VERIFIED, f"chain of {len(rep.stages) - 1} APR tilts ends at {m['final_type']}", None, m


def check_inclite(inst: Instance):
    rep = _chain(inst)
    if rep is None or rep.final_type is None or rep.stopped:
        return INAPPLICABLE, "no APR chain to a Dynkin path algebra", None, {}
    r = rep.indices[0]
    m = {"r_A": r, "type": f"{rep.final_type[0]}{rep.final_type[1]}", "bound": rep.bound, "indices": rep.indices}
    if rep.within_bound:
        return VERIFIED, f"r_A = {r} <= {rep.bound}", None, m
    return REFUTED, f"some index exceeds {rep.bound}", m, m


def check_hap(inst: Instance):
    rep = _chain(inst)
    if rep is None or rep.final_type is None or rep.stopped:
        return INAPPLICABLE, "not known to be iterated tilted (no APR chain to a Dynkin path algebra)", None, {}
    G = _finite(inst)
    if G.is_acyclic():
        return VERIFIED, "the AR quiver has no oriented cycle", None, {"nodes": len(G.nodes)}
    return REFUTED, "the AR quiver has an oriented cycle", None, {}


def check_ctdir(inst: Instance, max_length: int | None = None):
    G = _finite(inst)
    if G is None:
        return INAPPLICABLE, "A is representation-infinite", None, {}
    if not G.is_acyclic():
        return INAPPLICABLE, "A is not directed", None, {}
    rc = calculus(inst.algebra)
    bound = max_length if max_length is not None else nilpotency_index(inst.algebra).r
    chains = zero = 0
    stack = []
    for n in G.nodes:
        for y, f in G.out_maps(n.index):
            stack.append((n.index, y, f, 1))
    while stack:
        x, y, f, n = stack.pop()
        chains += 1
        z = f.is_zero()
        deep = rc.node_depth(f, x, y) >= n + 1
        zero += z
        if z != deep:
            return REFUTED, f"composite of {n} irreducible maps: zero={z}, in rad^{n + 1}={deep}", [G.nodes[x].label, G.nodes[y].label, n], {}
        if n < bound:
            for w, g in G.out_maps(y):
                stack.append((x, w, g @ f, n + 1))
    return VERIFIED, "", None, {"chains": chains, "zero_chains": zero, "max_length": bound}


def check_clau25(inst: Instance):
    G = _finite(inst)
    if G is None:
        return INAPPLICABLE, "A is representation-infinite", None, {}
    A = inst.algebra
    rc = calculus(A)
    table = nilpotency_index(A).table
    for a in A.vertices:
        p, i = G.projective_node(a), G.injective_node(a)
        ra = table[a].r
        top = rc.layer_basis(p, i, ra)
        if rc.layer_dim(p, i, ra + 1) != 0 or len(top) != 1 or not factors_through_simple(top[0], a):
            return REFUTED, f"vertex {a}: rad^{ra}(P, I) is not the line through S_{a}", {"vertex": a, "dims": [rc.layer_dim(p, i, n) for n in range(ra + 2)]}, {}
    return VERIFIED, "", None, {"vertices": len(A.vertices)}


def hereditary_propinc_iff(A, T=None) -> VerificationReport:
    """r_A = r_B iff a nonzero irreducible path F(P_u) ~> F(I_u) of length r_A - 1 exists (B hereditary)."""
    inst = A if isinstance(A, Instance) else Instance(getattr(A, "name", None) or "algebra", A, T)
    t0 = time.perf_counter()

    def rep(status, detail, witness=None, metrics=None):
        return VerificationReport("hereditary-propinc", inst.name, status, detail, witness, metrics or {}, time.perf_counter() - t0)

    got, gate = _theorem_a_gate(inst)
    if gate:
        return rep(gate[0], gate[1])
    d, side, u, _ = got
    if d.B.relations:
        return rep(INAPPLICABLE, "B is not hereditary")
    rA, rB = nilpotency_index(d.algebra).r, nilpotency_index(d.B).r
    p, i = _fpu_fiu(d, side, u)
    lens = calculus(d.B).nonzero_path_lengths(p, i)
    has = rA - 1 in lens
    m = {"u": u, "r_A": rA, "r_B": rB, "path_lengths": lens}
    if (rA == rB) == has:
        return rep(VERIFIED, f"r_A {'=' if rA == rB else '!='} r_B and the path {'exists' if has else 'does not exist'}", None, m)
    return rep(REFUTED, "equivalence fails", m, m)


CLAIMS: dict[str, tuple[str, Callable]] = {
    "Tsep": ("Hom(T,-) maps rad^n between torsion modules into rad^n", check_tsep),
    "Tsepdual": ("Ext^1(T,-) maps rad^n between torsion-free modules into rad^n", check_tsepdual),
    "BBcompos": ("for separating and splitting T the functors preserve and reflect rad^n", check_bbcompos),
    "BBirred": ("for separating and splitting T the functors preserve and reflect irreducibility", check_bbirred),
    "TheoremA": ("separating T with P_u in add T for u in (R_A)_0 gives r_A <= r_B", check_theorem_a),
    "propinc": ("r_A = r_B gives a nonzero path F(P_u) ~> F(I_u) of length r_A - 1", check_propinc),
    "propinc-converse-guard": ("a path P_u' ~> I_u' of length r_A - 1 need not force r_A = r_B", check_propinc_converse_guard),
    "nopozo": ("a simple projective P_a has some b != a with r_a <= r_b", check_nopozo),
    "nofuente": ("a simple injective I_a (quiver with a source) has some b != a with r_a <= r_b", check_nofuente),
    "APRgral": ("APR tilts with representation-finite B satisfy r_A <= r_B", check_aprgral),
    "APRlibre": ("APR tilts at free sinks satisfy r_A = r_B", check_aprlibre),
    "nilpo": ("r_A = max over interior vertices of r_a, plus one", check_nilpo),
    "gamaHlong": ("the AR quiver of a representation-finite hereditary algebra has length", check_gamahlong),
    "camiglar": ("all r_a agree for a representation-finite hereditary algebra", check_camiglar),
    "ppalher": ("r_H for Dynkin types: n, 2n-3, 11, 17, 29", check_ppalher),
    "Ha6.2-chain-contract": ("the supplied APR chain ends at a Dynkin path algebra", check_chain_contract),
    "inclite": ("iterated tilted of Dynkin type: r_A bounded by r_H", check_inclite),
    "Hap": ("representation-finite iterated tilted algebras are directed", check_hap),
    "ctdir": ("on directed algebras a composite of n irreducibles is in rad^(n+1) iff it is zero", check_ctdir),
    "clau2.5": ("maps P_a -> I_a through S_a have depth r_a, others smaller", check_clau25),
}


def verify(claim_id: str, instance, **kwargs) -> VerificationReport:
    """Evaluate one registered claim on one instance."""
    if claim_id not in CLAIMS:
        raise UnknownClaimError(claim_id)
    inst = resolve_instance(instance, **kwargs)
    t0 = time.perf_counter()
    status, detail, witness, metrics = CLAIMS[claim_id][1](inst)
    return VerificationReport(claim_id, inst.name, status, detail, witness, metrics, time.perf_counter() - t0)


def summary_table(reports: list[VerificationReport]) -> str:
    """Aligned text table, one line per report."""
    rows = [("claim", "instance", "status", "detail")] + [(r.claim, r.instance, r.status, r.detail) for r in reports]
    w = [max(len(r[k]) for r in rows) for k in range(3)]
    return "\n".join(f"{a:<{w[0]}}  {b:<{w[1]}}  {c:<{w[2]}}  {d}".rstrip() for a, b, c, d in rows)
