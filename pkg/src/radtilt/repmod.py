"""Finite-dimensional modules over a bound quiver algebra, as representations.

A :class:`Representation` stores one vector space dimension per vertex and
one matrix per arrow (shape ``target_dim x source_dim``, acting on column
vectors).  A :class:`ModuleMap` stores one matrix per vertex.  Both are
treated as immutable values.
"""

from __future__ import annotations

import random

import numpy as np
import sympy

from . import config
from .field import Field
from .qalg import BoundQuiverAlgebra, Path


class ModuleError(ValueError):
    code = "module"


class ZeroModuleError(ModuleError):
    code = "zero_module"


class FieldTooSmallError(ModuleError):
    """An endomorphism ring is not split local over the base field."""

    code = "field_too_small"


class DecompositionError(ModuleError):
    code = "decomposition"


# --------------------------------------------------------------------------
# representations


class Representation:
    def __init__(self, algebra: BoundQuiverAlgebra, dims, maps=None, label: str | None = None, check: bool = True):
        self.algebra = algebra
        F = algebra.field
        q = algebra.quiver
        if isinstance(dims, dict):
            dims = [int(dims.get(v, 0)) for v in q.vertices]
        self.dims: tuple[int, ...] = tuple(int(d) for d in dims)
        if len(self.dims) != len(q.vertices) or min(self.dims, default=0) < 0:
            raise ModuleError("dimension vector does not match the quiver")
        maps = maps or {}
        unknown = set(maps) - set(q.arrow)
        if unknown:
            raise ModuleError(f"unknown arrows {sorted(unknown)}")
        self.maps: dict[str, np.ndarray] = {}
        for a in q.arrows:
            shape = (self.dim_at(a.target), self.dim_at(a.source))
            m = maps.get(a.name)
            if m is None:
                m = F.zeros(*shape)
            else:
                m = m if isinstance(m, np.ndarray) and _dtype_ok(F, m) else F.array(m, shape=shape)
                if m.shape != shape:
                    raise ModuleError(f"matrix for arrow {a.name} has shape {m.shape}, expected {shape}")
            self.maps[a.name] = m
        self.label = label
        if check:
            self.check_relations()

    @property
    def field(self) -> Field:
        return self.algebra.field

    def dim_at(self, v: str) -> int:
        return self.dims[self.algebra.quiver.vertex_index[v]]

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def path_matrix(self, p: Path) -> np.ndarray:
        F = self.field
        cur = F.eye(self.dim_at(p[0]))
        for a in p[1]:
            cur = F.matmul(self.maps[a], cur)
        return cur

    def check_relations(self) -> None:
        F = self.field
        for r in self.algebra.relations:
            tot = None
            for c, p in r.terms:
                term = F.reduce(self.path_matrix(p) * F.convert(c))
                tot = term if tot is None else F.reduce(tot + term)
            if tot is not None and not F.is_zero(tot):
                raise ModuleError(f"relation {r.to_text()} does not vanish on the representation")

    def with_label(self, label: str | None) -> "Representation":
        return Representation(self.algebra, self.dims, self.maps, label=label, check=False)

    def identity(self) -> "ModuleMap":
        F = self.field
        return ModuleMap(self, self, [F.eye(d) for d in self.dims])

    def zero_map(self, other: "Representation") -> "ModuleMap":
        F = self.field
        return ModuleMap(self, other, [F.zeros(other.dims[i], d) for i, d in enumerate(self.dims)])

    def __repr__(self) -> str:
        lab = f"{self.label} " if self.label else ""
        return f"<Rep {lab}{self.dims}>"

    def to_json(self) -> dict:
        from .field import to_jsonable

        return {
            "label": self.label,
            "dims": dict(zip(self.algebra.vertices, self.dims)),
            "maps": {a: [[to_jsonable(x) for x in row] for row in m] for a, m in self.maps.items()},
        }

    @classmethod
    def from_json(cls, algebra: BoundQuiverAlgebra, data: dict) -> "Representation":
        from .field import from_jsonable

        F = algebra.field
        dims = data["dims"]
        if isinstance(dims, list):
            dims = dict(zip(algebra.vertices, dims))
        maps = {}
        for a, rows in (data.get("maps") or {}).items():
            arr = algebra.quiver.arrow.get(a)
            if arr is None:
                raise ModuleError(f"unknown arrow {a}")
            shape = (int(dims.get(arr.target, 0)), int(dims.get(arr.source, 0)))
            maps[a] = F.array([[from_jsonable(x) for x in row] for row in rows], shape=shape) if rows else F.zeros(*shape)
        return cls(algebra, dims, maps, label=data.get("label"))


def _dtype_ok(F: Field, m: np.ndarray) -> bool:
    return (m.dtype == object) == (F.name == "Q")


def zero_module(A: BoundQuiverAlgebra) -> Representation:
    return Representation(A, [0] * len(A.vertices), label="0")


# --------------------------------------------------------------------------
# maps


class ModuleMap:
    """A morphism of representations: one matrix per vertex."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source: Representation, target: Representation, mats, check: bool = False):
        self.source = source
        self.target = target
        verts = source.algebra.vertices
        if isinstance(mats, dict):
            mats = [mats[v] for v in verts]
        self.mats = tuple(mats)
        if check:
            self.check()

    @property
    def field(self) -> Field:
        return self.source.field

    def check(self) -> None:
        F = self.field
        if self.source.algebra is not self.target.algebra:
            raise ModuleError("maps between modules over different algebras")
        q = self.source.algebra.quiver
        for i, v in enumerate(q.vertices):
            if self.mats[i].shape != (self.target.dims[i], self.source.dims[i]):
                raise ModuleError(f"vertex {v}: matrix shape mismatch")
        for a in q.arrows:
            s, t = q.vertex_index[a.source], q.vertex_index[a.target]
            lhs = F.matmul(self.target.maps[a.name], self.mats[s])
            rhs = F.matmul(self.mats[t], self.source.maps[a.name])
            if not F.equal(lhs, rhs):
                raise ModuleError(f"square for arrow {a.name} does not commute")

    def at(self, v: str) -> np.ndarray:
        return self.mats[self.source.algebra.quiver.vertex_index[v]]

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """``self @ other``: apply ``other`` first."""
        F = self.field
        return ModuleMap(other.source, self.target, [F.matmul(a, b) for a, b in zip(self.mats, other.mats)])

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        F = self.field
        return ModuleMap(self.source, self.target, [F.reduce(a + b) for a, b in zip(self.mats, other.mats)])

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        F = self.field
        return ModuleMap(self.source, self.target, [F.reduce(a - b) for a, b in zip(self.mats, other.mats)])

    def scale(self, c) -> "ModuleMap":
        F = self.field
        c = F.convert(c)
        return ModuleMap(self.source, self.target, [F.reduce(a * c) for a in self.mats])

    def __neg__(self) -> "ModuleMap":
        return self.scale(-1)

    def flat(self) -> np.ndarray:
        parts = [m.reshape(-1) for m in self.mats]
        if not parts:
            return self.field.zeros(1, 0)[0]
        return np.concatenate(parts)

    @classmethod
    def from_flat(cls, source: Representation, target: Representation, vec: np.ndarray) -> "ModuleMap":
        mats = []
        pos = 0
        for ds, dt in zip(source.dims, target.dims):
            n = ds * dt
            mats.append(vec[pos : pos + n].reshape(dt, ds))
            pos += n
        return cls(source, target, mats)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(m) for m in self.mats)

    def rank(self) -> int:
        return sum(self.field.rank(m) for m in self.mats)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def inverse(self) -> "ModuleMap":
        F = self.field
        return ModuleMap(self.target, self.source, [F.inv(m) for m in self.mats])

    def kernel(self) -> tuple[Representation, "ModuleMap"]:
        F = self.field
        bases = [F.nullspace(m).T if m.shape[1] else F.zeros(0, 0) for m in self.mats]
        return submodule(self.source, bases)

    def image(self) -> tuple[Representation, "ModuleMap"]:
        F = self.field
        bases = [column_basis(F, m) for m in self.mats]
        return submodule(self.target, bases)

    def cokernel(self) -> tuple[Representation, "ModuleMap"]:
        F = self.field
        bases = [column_basis(F, m) for m in self.mats]
        return quotient(self.target, bases)

    def __repr__(self) -> str:
        return f"<ModuleMap {self.source!r} -> {self.target!r}>"


def column_basis(F: Field, m: np.ndarray) -> np.ndarray:
    """Columns forming a basis of the column space of m (rref of m^T, transposed)."""
    if m.shape[0] == 0 or m.shape[1] == 0:
        return F.zeros(m.shape[0], 0)
    r, _ = F.rref(m.T)
    return r.T.copy()


# --------------------------------------------------------------------------
# sub, quotient, sums


def submodule(M: Representation, bases) -> tuple[Representation, ModuleMap]:
    """Subrepresentation spanned per vertex by the columns of ``bases[i]``."""
    F = M.field
    q = M.algebra.quiver
    bases = [b if b.shape[0] == M.dims[i] else F.zeros(M.dims[i], 0) for i, b in enumerate(bases)]
    dims = [b.shape[1] for b in bases]
    maps = {}
    for a in q.arrows:
        s, t = q.vertex_index[a.source], q.vertex_index[a.target]
        img = F.matmul(M.maps[a.name], bases[s])
        if dims[s] == 0 or dims[t] == 0:
            if dims[s] and not F.is_zero(img):
                raise ModuleError("subspaces are not closed under the arrow actions")
            maps[a.name] = F.zeros(dims[t], dims[s])
            continue
        x = F.solve(bases[t], img)
        if x is None:
            raise ModuleError("subspaces are not closed under the arrow actions")
        maps[a.name] = x
    S = Representation(M.algebra, dims, maps, check=False)
    return S, ModuleMap(S, M, bases)


def quotient(M: Representation, bases) -> tuple[Representation, ModuleMap]:
    """Quotient of M by the subrepresentation spanned by ``bases``."""
    F = M.field
    q = M.algebra.quiver
    projs = []
    comps = []
    for i, d in enumerate(M.dims):
        b = bases[i] if bases[i].shape[0] == d else F.zeros(d, 0)
        comp = F.complement(b.T, F.eye(d)).T if d else F.zeros(0, 0)
        if d == 0:
            projs.append(F.zeros(0, 0))
            comps.append(comp)
            continue
        full = np.concatenate([b, comp], axis=1)
        inv = F.inv(full)
        projs.append(inv[b.shape[1] :, :])
        comps.append(comp)
    dims = [c.shape[1] for c in comps]
    maps = {}
    for a in q.arrows:
        s, t = q.vertex_index[a.source], q.vertex_index[a.target]
        maps[a.name] = F.matmul(projs[t], F.matmul(M.maps[a.name], comps[s])) if dims[s] and dims[t] else F.zeros(dims[t], dims[s])
    Q = Representation(M.algebra, dims, maps, check=False)
    return Q, ModuleMap(M, Q, projs)


def direct_sum(mods, label: str | None = None) -> tuple[Representation, list[ModuleMap], list[ModuleMap]]:
    mods = list(mods)
    if not mods:
        raise ModuleError("empty direct sum")
    A = mods[0].algebra
    F = A.field
    q = A.quiver
    n = len(q.vertices)
    dims = [sum(M.dims[i] for M in mods) for i in range(n)]
    maps = {}
    for a in q.arrows:
        s, t = q.vertex_index[a.source], q.vertex_index[a.target]
        m = F.zeros(dims[t], dims[s])
        rs = cs = 0
        for M in mods:
            m[rs : rs + M.dims[t], cs : cs + M.dims[s]] = M.maps[a.name]
            rs += M.dims[t]
            cs += M.dims[s]
        maps[a.name] = m
    if label is None:
        labels = [M.label or "?" for M in mods]
        label = "+".join(labels)
    S = Representation(A, dims, maps, label=label, check=False)
    incs, prjs = [], []
    offs = [0] * n
    for M in mods:
        inc, prj = [], []
        for i in range(n):
            e = F.zeros(dims[i], M.dims[i])
            for k in range(M.dims[i]):
                e[offs[i] + k, k] = F.convert(1)
            inc.append(e)
            prj.append(e.T.copy())
            offs[i] += M.dims[i]
        incs.append(ModuleMap(M, S, inc))
        prjs.append(ModuleMap(S, M, prj))
    return S, incs, prjs


def map_from_components(source_parts, target_parts, comps) -> ModuleMap:
    """Assemble a map between direct sums from component maps.

    ``source_parts``/``target_parts`` are (sum, inclusions, projections) triples
    as returned by :func:`direct_sum`; ``comps[j][i]`` maps part i to part j
    (None for zero).
    """
    S, s_inc, s_prj = source_parts
    T, t_inc, t_prj = target_parts
    total = S.zero_map(T)
    for j, row in enumerate(comps):
        for i, c in enumerate(row):
            if c is not None:
                total = total + t_inc[j] @ c @ s_prj[i]
    return total


# --------------------------------------------------------------------------
# standard modules


def _cache(A: BoundQuiverAlgebra) -> dict:
    c = A.__dict__.get("_module_cache")
    if c is None:
        c = {}
        A.__dict__["_module_cache"] = c
    return c


def _check_vertex(A: BoundQuiverAlgebra, a) -> str:
    a = str(a)
    if a not in A.quiver.vertex_index:
        raise ModuleError(f"unknown vertex {a}")
    return a


def projective(A: BoundQuiverAlgebra, a) -> Representation:
    """P_a = A e_a; vertex j carries the standard paths from a to j."""
    a = _check_vertex(A, a)
    key = ("P", a)
    cache = _cache(A)
    if key in cache:
        return cache[key]
    F = A.field
    q = A.quiver
    blocks = {j: A.block(a, j) for j in q.vertices}
    maps = {}
    for arr in q.arrows:
        src, tgt = blocks[arr.source], blocks[arr.target]
        m = F.zeros(len(tgt), len(src))
        ai = A.basis_index[(arr.source, (arr.name,))]
        pos = {k: r for r, k in enumerate(tgt)}
        for c, k in enumerate(src):
            for idx, coef in A.mult.get((ai, k), ()):
                m[pos[idx], c] = coef
        maps[arr.name] = m
    P = Representation(A, [len(blocks[j]) for j in q.vertices], maps, label=f"P{a}", check=False)
    cache[key] = P
    return P


def injective(A: BoundQuiverAlgebra, a) -> Representation:
    """I_a = D(e_a A); vertex j carries the dual of the paths from j to a."""
    a = _check_vertex(A, a)
    key = ("I", a)
    cache = _cache(A)
    if key in cache:
        return cache[key]
    F = A.field
    q = A.quiver
    blocks = {j: A.block(j, a) for j in q.vertices}
    maps = {}
    for arr in q.arrows:
        src, tgt = blocks[arr.source], blocks[arr.target]
        m = F.zeros(len(tgt), len(src))
        ai = A.basis_index[(arr.source, (arr.name,))]
        pos = {k: c for c, k in enumerate(src)}
        for r, k in enumerate(tgt):
            # (alpha_* delta_p)(q) = coefficient of p in q * alpha
            for idx, coef in A.mult.get((k, ai), ()):
                m[r, pos[idx]] = coef
        maps[arr.name] = m
    I = Representation(A, [len(blocks[j]) for j in q.vertices], maps, label=f"I{a}", check=False)
    cache[key] = I
    return I


def simple(A: BoundQuiverAlgebra, a) -> Representation:
    a = _check_vertex(A, a)
    key = ("S", a)
    cache = _cache(A)
    if key not in cache:
        cache[key] = Representation(A, [1 if v == a else 0 for v in A.vertices], label=f"S{a}", check=False)
    return cache[key]


# --------------------------------------------------------------------------
# Hom


class HomSpace:
    """Hom(M, N) with a reduced echelon basis of flattened maps."""

    def __init__(self, M: Representation, N: Representation, matrix: np.ndarray, pivots: list[int]):
        self.source = M
        self.target = N
        self.matrix = matrix
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __len__(self) -> int:
        return self.dim

    @property
    def basis(self) -> list[ModuleMap]:
        return [ModuleMap.from_flat(self.source, self.target, row) for row in self.matrix]

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i) -> ModuleMap:
        return ModuleMap.from_flat(self.source, self.target, self.matrix[i])

    def coords(self, f: ModuleMap | np.ndarray) -> np.ndarray:
        v = f.flat() if isinstance(f, ModuleMap) else f
        return v[self.pivots] if self.pivots else self.source.field.zeros(1, 0)[0]

    def coords_many(self, flats: np.ndarray) -> np.ndarray:
        F = self.source.field
        if not self.pivots:
            return F.zeros(flats.shape[0], 0)
        return flats[:, self.pivots]

    def element(self, coeffs) -> ModuleMap:
        F = self.source.field
        c = F.array([list(coeffs)], shape=(1, self.dim)) if not isinstance(coeffs, np.ndarray) else coeffs.reshape(1, -1)
        return ModuleMap.from_flat(self.source, self.target, F.matmul(c, self.matrix)[0])

    def contains(self, f: ModuleMap) -> bool:
        F = self.source.field
        return F.in_span(self.matrix, self.pivots, f.flat())


def hom_constraints(M: Representation, N: Representation) -> np.ndarray:
    F = M.field
    q = M.algebra.quiver
    sizes = [N.dims[i] * M.dims[i] for i in range(len(q.vertices))]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offs[-1])
    rows = []
    for a in q.arrows:
        s, t = q.vertex_index[a.source], q.vertex_index[a.target]
        neq = N.dims[t] * M.dims[s]
        if neq == 0:
            continue
        block = F.zeros(neq, total)
        if sizes[s]:
            block[:, offs[s] : offs[s + 1]] = F.reduce(np.kron(N.maps[a.name], F.eye(M.dims[s])))
        if sizes[t]:
            block[:, offs[t] : offs[t + 1]] = F.reduce(block[:, offs[t] : offs[t + 1]] - np.kron(F.eye(N.dims[t]), M.maps[a.name].T))
        rows.append(block)
    if not rows:
        return F.zeros(0, total)
    return np.concatenate(rows, axis=0)


def hom_space(M: Representation, N: Representation) -> HomSpace:
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    cache = M.__dict__.setdefault("_hom_cache", {})
    key = id(N)
    if key in cache and cache[key][0] is N:
        return cache[key][1]
    F = M.field
    C = hom_constraints(M, N)
    total = C.shape[1]
    if total == 0:
        H = HomSpace(M, N, F.zeros(0, 0), [])
    else:
        basis = F.nullspace(C)
        rr, piv = F.row_basis(basis) if basis.shape[0] else (F.zeros(0, total), [])
        H = HomSpace(M, N, rr, piv)
    cache[key] = (N, H)
    return H


def random_element(H: HomSpace, rng: random.Random, bound: int = 1000) -> ModuleMap:
    return H.element([rng.randint(-bound, bound) for _ in range(H.dim)])


# --------------------------------------------------------------------------
# radical, socle, top


def radical_of_module(M: Representation) -> tuple[Representation, ModuleMap]:
    if M.is_zero():
        raise ZeroModuleError("radical of the zero module")
    F = M.field
    q = M.algebra.quiver
    bases = []
    for v in q.vertices:
        ims = [M.maps[a.name] for a in q.in_arrows(v)]
        d = M.dim_at(v)
        if not ims or d == 0:
            bases.append(F.zeros(d, 0))
            continue
        bases.append(column_basis(F, np.concatenate(ims, axis=1)))
    return submodule(M, bases)


def socle(M: Representation) -> tuple[Representation, ModuleMap]:
    if M.is_zero():
        raise ZeroModuleError("socle of the zero module")
    F = M.field
    q = M.algebra.quiver
    bases = []
    for v in q.vertices:
        outs = [M.maps[a.name] for a in q.out_arrows(v)]
        d = M.dim_at(v)
        if d == 0:
            bases.append(F.zeros(0, 0))
            continue
        if not outs:
            bases.append(F.eye(d))
            continue
        bases.append(F.nullspace(np.concatenate(outs, axis=0)).T.copy())
    return submodule(M, bases)


def top(M: Representation) -> tuple[Representation, ModuleMap]:
    R, inc = radical_of_module(M)
    return inc.cokernel()


def modulo_socle(M: Representation) -> tuple[Representation, ModuleMap]:
    S, inc = socle(M)
    return inc.cokernel()


# --------------------------------------------------------------------------
# isomorphism and decomposition


def is_isomorphic(M: Representation, N: Representation, tries: int = 4) -> tuple[bool, ModuleMap | None]:
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    if M.dims != N.dims:
        return False, None
    if M is N:
        return True, M.identity()
    H = hom_space(M, N)
    if H.dim == 0:
        return (M.dim == 0), (M.zero_map(N) if M.dim == 0 else None)
    for f in H.basis[:8]:
        if f.is_isomorphism():
            return True, f
    rng = random.Random(config.seed())
    for _ in range(tries):
        f = random_element(H, rng)
        if f.is_isomorphism():
            return True, f
    return False, None


def _trace_radical_dim(F: Field, E: list[ModuleMap]) -> int:
    """dim rad End via the trace form (valid in characteristic 0 or p > dim)."""
    n = len(E)
    # tr(phi psi) = sum over vertices of <phi_v, psi_v^T> entrywise
    X = np.array([np.concatenate([m.reshape(-1) for m in f.mats]) for f in E]).reshape(n, -1)
    Y = np.array([np.concatenate([m.T.reshape(-1) for m in f.mats]) for f in E]).reshape(n, -1)
    G = F.matmul(X, Y.T.copy())
    return n - F.rank(G)


def radical_endomorphisms(M: Representation) -> list[ModuleMap]:
    """Basis of rad End(M): the kernel of the trace form on End(M)."""
    E = hom_space(M, M)
    F = M.field
    maps = E.basis
    n = len(maps)
    if n == 0:
        return []
    X = np.array([np.concatenate([m.reshape(-1) for m in f.mats]) for f in maps]).reshape(n, -1)
    Y = np.array([np.concatenate([m.T.reshape(-1) for m in f.mats]) for f in maps]).reshape(n, -1)
    G = F.matmul(X, Y.T.copy())
    ker = F.left_nullspace(G)
    return [E.element(row) for row in ker]


def local_endomorphisms(M: Representation) -> bool:
    """True iff End(M) is local with residue field the base field."""
    E = hom_space(M, M).basis
    if len(E) == 1:
        return True
    return len(E) - _trace_radical_dim(M.field, E) == 1


def is_indecomposable(M: Representation) -> bool:
    return not M.is_zero() and local_endomorphisms(M)


def _to_sympy(F: Field, m: np.ndarray) -> sympy.Matrix:
    if F.name == "Q":
        return sympy.Matrix(m.shape[0], m.shape[1], [sympy.Rational(x.numerator, x.denominator) for x in m.reshape(-1)])
    return sympy.Matrix(m.shape[0], m.shape[1], [int(x) for x in m.reshape(-1)])


def _irreducible_factors(F: Field, mats) -> list[list]:
    """Distinct monic irreducible factors (as coefficient lists, highest first)."""
    x = sympy.Symbol("x")
    found = {}
    for m in mats:
        if m.shape[0] == 0:
            continue
        cp = _to_sympy(F, m).charpoly(x)
        poly = sympy.Poly(cp.as_expr(), x, modulus=F.p) if F.name != "Q" else sympy.Poly(cp.as_expr(), x, domain="QQ")
        for fac, _ in poly.factor_list()[1]:
            fac = fac.monic()
            coeffs = [sympy.Rational(c) if F.name == "Q" else int(c) % F.p for c in fac.all_coeffs()]
            found.setdefault(tuple(coeffs), coeffs)
    return sorted(found.values(), key=lambda c: (len(c), [str(v) for v in c]))


def _poly_at(F: Field, coeffs, m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    out = F.zeros(n, n)
    for c in coeffs:
        cc = F.convert(sympy_to_fraction(c)) if F.name == "Q" else int(c) % F.p
        out = F.reduce(F.matmul(out, m) + F.eye(n) * cc)
    return out


def sympy_to_fraction(c):
    from fractions import Fraction

    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _matrix_power(F: Field, m: np.ndarray, e: int) -> np.ndarray:
    out = F.eye(m.shape[0])
    base = m
    while e:
        if e & 1:
            out = F.matmul(out, base)
        base = F.matmul(base, base)
        e >>= 1
    return out


def _fitting_split(M: Representation, phi: ModuleMap):
    """Try to split M along the irreducible factors of phi's characteristic polynomial."""
    F = M.field
    for coeffs in _irreducible_factors(F, phi.mats):
        kers, ims = [], []
        for m, d in zip(phi.mats, M.dims):
            if d == 0:
                kers.append(F.zeros(0, 0))
                ims.append(F.zeros(0, 0))
                continue
            p = _matrix_power(F, _poly_at(F, coeffs, m), d)
            kers.append(F.nullspace(p).T.copy())
            ims.append(column_basis(F, p))
        kd = sum(k.shape[1] for k in kers)
        if 0 < kd < M.dim:
            return kers, ims
    return None


def _candidates(M: Representation, E: HomSpace, rng: random.Random, tries: int):
    basis = E.basis
    for f in basis:
        yield f
    for f, g in zip(basis, basis[1:]):
        yield f + g
    for _ in range(tries):
        yield E.element([rng.randint(-9, 9) for _ in range(E.dim)])


def decompose_with_maps(M: Representation, tries: int = 32) -> list[tuple[Representation, ModuleMap, ModuleMap]]:
    """Indecomposable summands X of M with split maps X -> M -> X."""
    if M.is_zero():
        raise ZeroModuleError("cannot decompose the zero module")
    parts = _decompose_rec(M, tries)
    F = M.field
    # projections from the inverse of the assembled inclusion
    projs = []
    n = len(M.dims)
    blocks = [np.concatenate([inc.mats[i] for _, inc in parts], axis=1) if M.dims[i] else F.zeros(0, 0) for i in range(n)]
    invs = [F.inv(b) if M.dims[i] else F.zeros(0, 0) for i, b in enumerate(blocks)]
    offs = [0] * n
    out = []
    for X, inc in parts:
        pm = []
        for i in range(n):
            d = X.dims[i]
            pm.append(invs[i][offs[i] : offs[i] + d, :] if M.dims[i] else F.zeros(0, 0))
            offs[i] += d
        out.append((X, inc, ModuleMap(M, X, pm)))
    out.sort(key=lambda t: (t[0].dim, t[0].dims))
    return out


def _decompose_rec(M: Representation, tries: int) -> list[tuple[Representation, ModuleMap]]:
    E = hom_space(M, M)
    if E.dim == 1:
        return [(M, M.identity())]
    F = M.field
    rad_dim = _trace_radical_dim(F, E.basis)
    top_dim = E.dim - rad_dim
    if top_dim == 1:
        return [(M, M.identity())]
    rng = random.Random(config.seed() + M.dim)
    for phi in _candidates(M, E, rng, tries):
        split = _fitting_split(M, phi)
        if split is None:
            continue
        kers, ims = split
        out = []
        for bases in (kers, ims):
            S, inc = submodule(M, bases)
            for X, sub_inc in _decompose_rec(S, tries):
                out.append((X, inc @ sub_inc))
        return out
    raise FieldTooSmallError(
        f"End/rad End of a module with dims {M.dims} has dimension {top_dim} > 1 and no idempotent was found over {F.name}"
    )


def decompose(M: Representation, tries: int = 32) -> list[tuple[Representation, int]]:
    """Direct-sum decomposition grouped into isomorphism classes."""
    summands = decompose_with_maps(M, tries)
    groups: list[list] = []
    for X, _, _ in summands:
        for g in groups:
            if is_isomorphic(g[0], X)[0]:
                g[1] += 1
                break
        else:
            groups.append([X, 1])
    return [(X, m) for X, m in groups]


# --------------------------------------------------------------------------
# projective covers and presentations


def projective_cover(M: Representation) -> tuple[Representation, ModuleMap]:
    P0, d0, _, _, _ = projective_cover_data(M)
    return P0, d0


def projective_cover_data(M: Representation):
    """Projective cover with its summand structure.

    Returns ``(P0, epi, vertices, inclusions, projections)`` where ``P0`` is the
    direct sum of ``projective(A, v)`` over ``vertices``.
    """
    if M.is_zero():
        raise ZeroModuleError("projective cover of the zero module")
    A = M.algebra
    F = M.field
    q = A.quiver
    R, inc = radical_of_module(M)
    gens: list[tuple[str, np.ndarray]] = []
    for i, v in enumerate(q.vertices):
        d = M.dims[i]
        if d == 0:
            continue
        comp = F.complement(inc.mats[i].T, F.eye(d))
        for row in comp:
            gens.append((v, row))
    projs = [projective(A, v) for v, _ in gens]
    P0, incs, prjs = direct_sum(projs, label="+".join(p.label for p in projs))
    total = P0.zero_map(M)
    for (v, m), Pv, pr in zip(gens, projs, prjs):
        mats = []
        for j in q.vertices:
            cols = [F.matmul(M.path_matrix(A.basis[k]), m.reshape(-1, 1)) for k in A.block(v, j)]
            mats.append(np.concatenate(cols, axis=1) if cols else F.zeros(M.dim_at(j), 0))
        total = total + ModuleMap(Pv, M, mats) @ pr
    return P0, total, [v for v, _ in gens], incs, prjs


def minimal_projective_presentation(M: Representation):
    """(P1, d1, P0, d0): P1 -d1-> P0 -d0-> M -> 0 with ker d0 in rad P0."""
    P0, d0 = projective_cover(M)
    K, k_inc = d0.kernel()
    if K.is_zero():
        return None, None, P0, d0
    P1, e = projective_cover(K)
    return P1, k_inc @ e, P0, d0


def syzygy(M: Representation) -> tuple[Representation, ModuleMap]:
    P0, d0 = projective_cover(M)
    return d0.kernel()


def projective_dimension_at_most_one(M: Representation) -> bool:
    K, _ = syzygy(M)
    if K.is_zero():
        return True
    P1, _ = projective_cover(K)
    return P1.dims == K.dims


def is_projective(M: Representation) -> bool:
    P, _ = projective_cover(M)
    return P.dims == M.dims


# --------------------------------------------------------------------------
# Ext^1


def ext1(M: Representation, N: Representation) -> tuple[int, list[ModuleMap]]:
    """Ext^1(M, N) as coker(Hom(P0, N) -> Hom(Omega M, N)).

    Returns the dimension and maps Omega M -> N representing a basis of the
    cokernel.
    """
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    F = M.field
    if M.is_zero() or N.is_zero():
        return 0, []
    P0, d0 = projective_cover(M)
    K, k_inc = d0.kernel()
    if K.is_zero():
        return 0, []
    HK = hom_space(K, N)
    if HK.dim == 0:
        return 0, []
    HP = hom_space(P0, N)
    restricted = [g @ k_inc for g in HP.basis]
    img = np.array([r.flat() for r in restricted]).reshape(len(restricted), -1) if restricted else F.zeros(0, HK.matrix.shape[1])
    comp = F.complement(img, HK.matrix)
    return comp.shape[0], [ModuleMap.from_flat(K, N, row) for row in comp]


class ExtSpace:
    """Ext^1(M, N) as cocycles modulo coboundaries on the arrows.

    A cocycle assigns to every arrow a: s -> t a matrix c_a: M(s) -> N(t) such
    that the block upper-triangular representation [[N_a, c_a], [0, M_a]]
    satisfies the relations; coboundaries are c_a = N_a h_s - h_t M_a.
    """

    def __init__(self, M: Representation, N: Representation):
        self.M, self.N = M, N
        A = M.algebra
        F = A.field
        q = A.quiver
        self.field = F
        self.slots = []
        off = 0
        for a in q.arrows:
            s, t = q.vertex_index[a.source], q.vertex_index[a.target]
            n = N.dims[t] * M.dims[s]
            self.slots.append((a.name, s, t, off, n))
            off += n
        self.size = off
        self.Z = self._cocycles()
        self.B = self._coboundaries()
        self.Br, self.Bp = F.row_basis(self.B) if self.B.shape[0] else (F.zeros(0, self.size), [])
        self.classes = F.complement(self.Br, self.Z) if self.Z.shape[0] else F.zeros(0, self.size)

    @property
    def dim(self) -> int:
        return self.classes.shape[0]

    def _cocycles(self) -> np.ndarray:
        F = self.field
        A = self.M.algebra
        rows = []
        for r in A.relations:
            # upper-right block of sum c * E_p, linear in the cocycle
            blocks = None
            for c, p in r.terms:
                term = self._path_linear(p)
                term = F.reduce(term * F.convert(c))
                blocks = term if blocks is None else F.reduce(blocks + term)
            if blocks is not None and blocks.shape[0]:
                rows.append(blocks)
        if not rows:
            return F.eye(self.size)
        C = np.concatenate(rows, axis=0)
        return F.nullspace(C)

    def _path_linear(self, p: Path) -> np.ndarray:
        """Matrix (rows: entries of the upper-right block of E_p) in the cocycle."""
        F = self.field
        M, N = self.M, self.N
        q = M.algebra.quiver
        arrows = p[1]
        t = q.vertex_index[q.arrow[arrows[-1]].target]
        s = q.vertex_index[p[0]]
        out = F.zeros(N.dims[t] * M.dims[s], self.size)
        # E_p upper right = sum_k N_{after} c_{a_k} M_{before}
        for k, a in enumerate(arrows):
            before = M.path_matrix((p[0], arrows[:k]))
            src_k = q.arrow[a].target
            after = N.path_matrix((src_k, arrows[k + 1 :]))
            name, ss, tt, off, n = next(sl for sl in self.slots if sl[0] == a)
            if n == 0 or out.shape[0] == 0:
                continue
            out[:, off : off + n] = F.reduce(out[:, off : off + n] + np.kron(after, before.T))
        return out

    def _coboundaries(self) -> np.ndarray:
        F = self.field
        M, N = self.M, self.N
        q = M.algebra.quiver
        nv = len(q.vertices)
        sizes = [N.dims[i] * M.dims[i] for i in range(nv)]
        offs = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
        total = int(offs[-1])
        if total == 0 or self.size == 0:
            return F.zeros(0, self.size)
        D = F.zeros(self.size, total)
        for name, s, t, off, n in self.slots:
            if n == 0:
                continue
            if sizes[s]:
                D[off : off + n, offs[s] : offs[s + 1]] = F.reduce(np.kron(N.maps[name], F.eye(M.dims[s])))
            if sizes[t]:
                D[off : off + n, offs[t] : offs[t + 1]] = F.reduce(D[off : off + n, offs[t] : offs[t + 1]] - np.kron(F.eye(N.dims[t]), M.maps[name].T))
        return F.reduce(D.T.copy())

    def class_coords(self, cocycle: np.ndarray) -> np.ndarray:
        """Coordinates of a cocycle's class in the chosen basis ``classes``."""
        F = self.field
        res = F.reduce_by(self.Br, self.Bp, cocycle)
        basis = np.concatenate([self.Br, self.classes], axis=0)
        c = F.coordinates(basis, cocycle)
        if c is None:
            raise ModuleError("vector is not a cocycle")
        return c[self.Br.shape[0] :]

    def pullback(self, t: ModuleMap) -> np.ndarray:
        """Matrix of Ext^1(M, N) -> Ext^1(M', N) induced by t: M' -> M."""
        other = ExtSpace(t.source, self.N)
        return self.pullback_into(other, t)

    def pullback_into(self, other: "ExtSpace", t: ModuleMap) -> np.ndarray:
        F = self.field
        cols = []
        for cls in self.classes:
            new = F.zeros(1, other.size)[0]
            for (name, s, tt, off, n), (_, s2, _, off2, n2) in zip(self.slots, other.slots):
                if n2 == 0:
                    continue
                c = cls[off : off + n].reshape(self.N.dims[tt], self.M.dims[s]) if n else F.zeros(self.N.dims[tt], self.M.dims[s])
                new[off2 : off2 + n2] = F.matmul(c, t.mats[s]).reshape(-1)
            cols.append(other.class_coords(new))
        if not cols:
            return F.zeros(other.dim, 0)
        return np.array(cols).reshape(len(cols), other.dim).T.copy()

    def pushforward_into(self, other: "ExtSpace", g: ModuleMap) -> np.ndarray:
        """Matrix of Ext^1(M, N) -> Ext^1(M, N') induced by g: N -> N'."""
        F = self.field
        cols = []
        for cls in self.classes:
            new = F.zeros(1, other.size)[0]
            for (name, s, tt, off, n), (_, _, _, off2, n2) in zip(self.slots, other.slots):
                if n2 == 0:
                    continue
                c = cls[off : off + n].reshape(self.N.dims[tt], self.M.dims[s]) if n else F.zeros(self.N.dims[tt], self.M.dims[s])
                new[off2 : off2 + n2] = F.matmul(g.mats[tt], c).reshape(-1)
            cols.append(other.class_coords(new))
        if not cols:
            return F.zeros(other.dim, 0)
        return np.array(cols).reshape(len(cols), other.dim).T.copy()

    def extension(self, i: int) -> Representation:
        """Middle term of the extension given by the i-th basis class."""
        F = self.field
        M, N = self.M, self.N
        q = M.algebra.quiver
        maps = {}
        cls = self.classes[i]
        for name, s, t, off, n in self.slots:
            c = cls[off : off + n].reshape(N.dims[t], M.dims[s]) if n else F.zeros(N.dims[t], M.dims[s])
            top_row = np.concatenate([N.maps[name], c], axis=1)
            bot_row = np.concatenate([F.zeros(M.dims[t], N.dims[s]), M.maps[name]], axis=1)
            maps[name] = np.concatenate([top_row, bot_row], axis=0)
        dims = [N.dims[k] + M.dims[k] for k in range(len(q.vertices))]
        return Representation(M.algebra, dims, maps)


# --------------------------------------------------------------------------
# duality


def dual(M: Representation, opposite: BoundQuiverAlgebra | None = None) -> Representation:
    """D M = Hom_k(M, k) as a representation of the opposite algebra."""
    Aop = opposite if opposite is not None else opposite_algebra(M.algebra)
    maps = {a: m.T.copy() for a, m in M.maps.items()}
    lab = f"D({M.label})" if M.label else None
    return Representation(Aop, M.dims, maps, label=lab, check=False)


def dual_map(f: ModuleMap, Dsource: Representation, Dtarget: Representation) -> ModuleMap:
    """D f : D(target) -> D(source)."""
    return ModuleMap(Dtarget, Dsource, [m.T.copy() for m in f.mats])


def opposite_algebra(A: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    op = A.__dict__.get("_opposite")
    if op is None:
        op = A.opposite()
        op.__dict__["_opposite"] = A
        A.__dict__["_opposite"] = op
    return op
