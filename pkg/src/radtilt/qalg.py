"""Quivers, paths and finite-dimensional bound quiver algebras kQ/I.

Conventions
-----------
A path is stored as ``(source_vertex, arrows)`` with ``arrows`` listed in the
order they are traversed.  Products are written right to left: in ``b*a`` the
arrow ``a`` acts first, so the written relation ``c*b*a`` on 1->2->3->4 is the
path ``("1", ("a", "b", "c"))``.  Paths are ordered by length, then
lexicographically by the arrow declaration order; the leading term of a
relation is its largest path.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict, deque
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .field import QQ, Field, FieldError, PrimeField, field_from_spec, from_jsonable, to_jsonable

ADMISSIBILITY_CAP = 64

Path = tuple  # (source vertex, tuple of arrow ids)


class AlgebraError(ValueError):
    """Invalid algebra input (bad quiver, non-admissible ideal, ...)."""

    code = "algebra"


class ParseError(AlgebraError):
    code = "parse"

    def __init__(self, message: str, line: int, token: str | None = None):
        self.line = line
        self.token = token
        where = f"line {line}" + (f", token {token!r}" if token is not None else "")
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """A finite quiver with string vertex and arrow ids."""

    def __init__(self, vertices, arrows):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex id")
        arrs = []
        for a in arrows:
            a = a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
            if a.source not in self.vertices or a.target not in self.vertices:
                raise AlgebraError(f"arrow {a.name} uses an undeclared vertex")
            arrs.append(a)
        self.arrows: tuple[Arrow, ...] = tuple(arrs)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names) or set(names) & set(self.vertices):
            raise AlgebraError("arrow ids must be unique and distinct from vertex ids")
        self.arrow = {a.name: a for a in self.arrows}
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            v = todo.pop()
            for w in adj[v] - seen:
                seen.add(w)
                todo.append(w)
        return len(seen) == len(self.vertices)

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        todo = deque(v for v in self.vertices if indeg[v] == 0)
        n = 0
        while todo:
            v = todo.popleft()
            n += 1
            for a in self.out_arrows(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    todo.append(a.target)
        return n == len(self.vertices)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __repr__(self) -> str:
        arrs = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}; {arrs})"


# --------------------------------------------------------------------------
# paths


def path_target(q: Quiver, p: Path) -> str:
    return q.arrow[p[1][-1]].target if p[1] else p[0]


def path_key(q: Quiver, p: Path):
    """Sort key: length, then arrow order (idempotents by vertex order)."""
    if not p[1]:
        return (0, (q.vertex_index[p[0]],))
    return (len(p[1]), tuple(q.arrow_index[a] for a in p[1]))


def path_str(p: Path) -> str:
    if not p[1]:
        return f"e{p[0]}"
    return "*".join(reversed(p[1]))


def compose_paths(q: Quiver, outer: Path, inner: Path) -> Path | None:
    """``outer * inner`` (inner acts first), or None if not composable."""
    if path_target(q, inner) != outer[0]:
        return None
    return (inner[0], inner[1] + outer[1])


def paths_of_length(q: Quiver, length: int, start: str | None = None) -> list[Path]:
    starts = [start] if start is not None else list(q.vertices)
    cur = [(v, ()) for v in starts]
    for _ in range(length):
        nxt = []
        for p in cur:
            for a in q.out_arrows(path_target(q, p)):
                nxt.append((p[0], p[1] + (a.name,)))
        cur = nxt
    return cur


@dataclass(frozen=True)
class PathExpr:
    """A linear combination of parallel paths, all of length >= 2 for relations."""

    terms: tuple  # ((Fraction, Path), ...)

    def source(self) -> str:
        return self.terms[0][1][0]

    def target(self, q: Quiver) -> str:
        return path_target(q, self.terms[0][1])

    def is_homogeneous(self) -> bool:
        return len({len(p[1]) for _, p in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def to_text(self) -> str:
        out = []
        for c, p in self.terms:
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = path_str(p) if mag == 1 else f"{mag}*{path_str(p)}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


# --------------------------------------------------------------------------
# the algebra


class BoundQuiverAlgebra:
    """A finite-dimensional algebra kQ/I with a path normal-form basis.

    ``basis[k]`` is a standard path (not a leading term of the ideal);
    ``mult`` maps a pair of basis indices ``(i, j)`` to the product
    ``basis[i] * basis[j]`` (``basis[j]`` acts first) as a sparse list of
    ``(k, coefficient)``.
    """

    def __init__(self, quiver: Quiver, relations=(), field: Field = QQ, name: str | None = None):
        self.quiver = quiver
        self.field = field
        self.name = name
        if not quiver.is_connected():
            raise AlgebraError("quiver is not connected")
        rels = []
        for r in relations:
            r = r if isinstance(r, PathExpr) else PathExpr(tuple(r))
            self._check_relation(r)
            rels.append(r)
        self._input_relations = tuple(rels)
        self._build()

    # -- validation -----------------------------------------------------
    def _check_relation(self, r: PathExpr) -> None:
        q = self.quiver
        if not r.terms:
            raise AlgebraError("empty relation")
        src = {p[0] for _, p in r.terms}
        tgt = {path_target(q, p) for _, p in r.terms}
        if len(src) != 1 or len(tgt) != 1:
            raise AlgebraError(f"relation {r.to_text()} is not a combination of parallel paths")
        for _, p in r.terms:
            if len(p[1]) < 2:
                raise AlgebraError(f"relation {r.to_text()} has a path of length < 2 (not admissible)")
            for a, b in zip(p[1], p[1][1:]):
                if q.arrow[a].target != q.arrow[b].source:
                    raise AlgebraError(f"path {path_str(p)} is not composable")

    # -- normal forms ----------------------------------------------------
    def _build(self) -> None:
        q, F = self.quiver, self.field
        homogeneous = all(r.is_homogeneous() for r in self._input_relations)
        if not q.is_acyclic() and not homogeneous:
            raise AlgebraError("non-homogeneous relations on a quiver with oriented cycles are not supported")
        # group all paths into blocks; a block is (source, target, degree) for
        # graded ideals and (source, target) otherwise
        blocks: dict = defaultdict(list)
        ideal_rows: dict = defaultdict(list)
        by_len: list[list[Path]] = [[(v, ()) for v in q.vertices]]
        nilpotency = None
        while True:
            d = len(by_len) - 1
            for p in by_len[d]:
                key = (p[0], path_target(q, p), d) if homogeneous else (p[0], path_target(q, p))
                blocks[key].append(p)
            if homogeneous and d >= 1:
                if d >= 2:
                    self._graded_ideal_rows(d, by_len, ideal_rows)
                if not self._survivors(by_len[d], ideal_rows, d):
                    nilpotency = d
                    break
            if not homogeneous and not by_len[d]:
                break
            if d >= ADMISSIBILITY_CAP:
                raise AlgebraError(
                    f"arrow ideal power {ADMISSIBILITY_CAP} is not inside the ideal (not admissible / infinite dimensional)"
                )
            nxt = []
            for p in by_len[d]:
                for a in q.out_arrows(path_target(q, p)):
                    nxt.append((p[0], p[1] + (a.name,)))
            by_len.append(nxt)
        if not homogeneous:
            self._ungraded_ideal_rows(by_len, ideal_rows)
        self._blocks = blocks
        self._ideal_rows = ideal_rows

        basis: list[Path] = []
        reduction: dict[Path, dict[Path, Fraction]] = {}
        for key in sorted(blocks, key=lambda k: (q.vertex_index[k[0]], q.vertex_index[k[1]]) + tuple(k[2:])):
            paths = sorted(blocks[key], key=lambda p: path_key(q, p), reverse=True)
            rows = ideal_rows.get(key, [])
            col = {p: i for i, p in enumerate(paths)}
            if rows:
                mat = F.zeros(len(rows), len(paths))
                for i, r in enumerate(rows):
                    for p, c in r.items():
                        mat[i, col[p]] = F.reduce(mat[i, col[p]] + F.convert(c))
                rr, piv = F.rref(mat)
            else:
                rr, piv = F.zeros(0, len(paths)), []
            pivset = set(piv)
            for j, p in enumerate(paths):
                if j not in pivset:
                    basis.append(p)
            for i, pc in enumerate(piv):
                reduction[paths[pc]] = {
                    paths[j]: F.reduce(-rr[i, j]) for j in range(len(paths)) if j not in pivset and rr[i, j] != 0
                }
        if nilpotency is None:
            # smallest n with every path of length n in the ideal
            nilpotency = next(n for n in range(len(by_len) + 1) if n >= len(by_len) or all(p in reduction and not reduction[p] for p in by_len[n]))
        self.nilpotency_bound = nilpotency
        basis.sort(key=lambda p: (q.vertex_index[p[0]], q.vertex_index[path_target(q, p)], path_key(q, p)))
        self.basis: tuple[Path, ...] = tuple(basis)
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self._reduction = reduction
        self._build_mult()
        self.relations = self._canonical_relations()

    def _graded_ideal_rows(self, d, by_len, ideal_rows) -> None:
        q = self.quiver
        for rel in self._input_relations:
            k = len(rel.terms[0][1][1])
            s, t = rel.source(), rel.target(q)
            for lw in range(0, d - k + 1):
                lu = d - k - lw
                ws = [w for w in _all_paths_len(q, lw) if path_target(q, w) == s]
                us = [u for u in _all_paths_len(q, lu) if u[0] == t]
                for w in ws:
                    for u in us:
                        row = {}
                        for c, p in rel.terms:
                            pp = (w[0], w[1] + p[1] + u[1])
                            row[pp] = row.get(pp, 0) + c
                        key = (w[0], path_target(q, u), d)
                        ideal_rows[key].append(row)

    def _survivors(self, paths, ideal_rows, d):
        F = self.field
        alive = set()
        bykey = defaultdict(list)
        for p in paths:
            bykey[(p[0], path_target(self.quiver, p), d)].append(p)
        for key, ps in bykey.items():
            rows = ideal_rows.get(key, [])
            if not rows:
                alive.update(ps)
                continue
            col = {p: i for i, p in enumerate(ps)}
            mat = F.zeros(len(rows), len(ps))
            for i, r in enumerate(rows):
                for p, c in r.items():
                    mat[i, col[p]] = F.reduce(mat[i, col[p]] + F.convert(c))
            if F.rank(mat) < len(ps):
                alive.update(ps)
        return alive

    def _ungraded_ideal_rows(self, by_len, ideal_rows) -> None:
        q = self.quiver
        allp = [p for layer in by_len for p in layer]
        ending = defaultdict(list)
        starting = defaultdict(list)
        for p in allp:
            ending[path_target(q, p)].append(p)
            starting[p[0]].append(p)
        for rel in self._input_relations:
            s, t = rel.source(), rel.target(q)
            for w in ending[s]:
                for u in starting[t]:
                    row = {}
                    for c, p in rel.terms:
                        pp = (w[0], w[1] + p[1] + u[1])
                        row[pp] = row.get(pp, 0) + c
                    ideal_rows[(w[0], path_target(q, u))].append(row)

    def reduce_path(self, p: Path) -> dict[Path, object]:
        """Normal form of a path as {basis path: coefficient} (empty if 0)."""
        if p in self.basis_index:
            return {p: self.field.convert(1)}
        if p in self._reduction:
            return dict(self._reduction[p])
        # longer than the enumerated range: inside the ideal
        return {}

    def _build_mult(self) -> None:
        q = self.quiver
        mult: dict[tuple[int, int], list] = {}
        for i, b in enumerate(self.basis):
            for j, c in enumerate(self.basis):
                p = compose_paths(q, b, c)
                if p is None:
                    continue
                nf = self.reduce_path(p)
                if nf:
                    mult[(i, j)] = sorted((self.basis_index[r], v) for r, v in nf.items())
        self.mult = mult

    def _canonical_relations(self) -> tuple[PathExpr, ...]:
        """A minimal, tip-reduced generating set of the ideal."""
        F, q = self.field, self.quiver
        out = []
        for key, rows in self._ideal_rows.items():
            paths = sorted(self._blocks[key], key=lambda p: path_key(q, p), reverse=True)
            col = {p: i for i, p in enumerate(paths)}

            def to_mat(rs):
                m = F.zeros(len(rs), len(paths))
                for i, r in enumerate(rs):
                    for p, c in r.items():
                        m[i, col[p]] = F.reduce(m[i, col[p]] + F.convert(c))
                return m

            full, _ = F.rref(to_mat(rows))
            if full.shape[0] == 0:
                continue
            # the part of the ideal generated with at least one arrow on a side
            inner = self._decomposable_part(key, paths)
            cur = F.row_basis(to_mat(inner)) if inner else (F.zeros(0, len(paths)), [])
            for row in full:
                if not F.in_span(cur[0], cur[1], row):
                    terms = tuple((_scalar_out(F, row[j]), paths[j]) for j in range(len(paths)) if row[j] != 0)
                    out.append(PathExpr(terms))
                    cur = F.rref(np.concatenate([cur[0], row[None, :]], axis=0))
        out.sort(key=lambda r: (q.vertex_index[r.source()], q.vertex_index[r.target(q)], [path_key(q, p) for _, p in r.terms]))
        return tuple(out)

    def _decomposable_part(self, key, paths) -> list[dict]:
        """Spanning rows of (ideal)*arrow + arrow*(ideal) inside a block."""
        q = self.quiver
        rows = []
        pset = set(paths)
        src, tgt = key[0], key[1]
        for okey, orows in self._ideal_rows.items():
            if okey[0] == src:
                # extend on the target side by one arrow reaching tgt
                for a in q.in_arrows(tgt):
                    if okey[1] != a.source or (len(key) == 3 and okey[2] != key[2] - 1):
                        continue
                    for r in orows:
                        nr = {}
                        for pth, c in r.items():
                            pp = (pth[0], pth[1] + (a.name,))
                            nr[pp] = nr.get(pp, 0) + c
                        if all(x in pset for x in nr):
                            rows.append(nr)
            if okey[1] == tgt:
                for a in q.out_arrows(src):
                    if okey[0] != a.target or (len(key) == 3 and okey[2] != key[2] - 1):
                        continue
                    for r in orows:
                        nr = {}
                        for pth, c in r.items():
                            pp = (src, (a.name,) + pth[1])
                            nr[pp] = nr.get(pp, 0) + c
                        if all(x in pset for x in nr):
                            rows.append(nr)
        return rows

    # -- queries ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def target(self, p: Path) -> str:
        return path_target(self.quiver, p)

    def block(self, source: str, target: str) -> list[int]:
        """Indices of basis elements of e_target A e_source."""
        cache = self.__dict__.setdefault("_block_cache", {})
        key = (source, target)
        if key not in cache:
            cache[key] = [i for i, p in enumerate(self.basis) if p[0] == source and self.target(p) == target]
        return cache[key]

    def path_basis(self) -> dict[tuple[str, str], list[Path]]:
        out = {}
        for s in self.vertices:
            for t in self.vertices:
                idx = self.block(s, t)
                if idx:
                    out[(s, t)] = [self.basis[i] for i in idx]
        return out

    @cached_property
    def cartan(self) -> np.ndarray:
        """``cartan[j, i] = dim e_j A e_i`` (rows targets, columns sources)."""
        n = len(self.vertices)
        c = np.zeros((n, n), dtype=int)
        for p in self.basis:
            c[self.quiver.vertex_index[self.target(p)], self.quiver.vertex_index[p[0]]] += 1
        return c

    def multiply(self, x: dict, y: dict) -> dict:
        """Product ``x * y`` of elements given as {basis index: coefficient}."""
        F = self.field
        out: dict[int, object] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult.get((i, j), ()):
                    out[k] = out.get(k, 0) + a * b * c
        if not out:
            return {}
        keys = sorted(out)
        vals = F.reduce(F.array([[out[k] for k in keys]]))[0]
        return {k: v for k, v in zip(keys, vals) if v != 0}

    def idempotent(self, v: str) -> int:
        return self.basis_index[(v, ())]

    def sinks_sources(self) -> tuple[set, set, set]:
        q = self.quiver
        sinks = {v for v in q.vertices if not q.out_arrows(v)}
        sources = {v for v in q.vertices if not q.in_arrows(v)}
        interior = set(q.vertices) - sinks - sources
        return sinks, sources, interior

    def is_hereditary_presentation(self) -> bool:
        return not self.relations

    def opposite(self) -> "BoundQuiverAlgebra":
        qop = self.quiver.opposite()
        rels = [PathExpr(tuple((c, (path_target(self.quiver, p), tuple(reversed(p[1])))) for c, p in r.terms)) for r in self.relations]
        name = f"{self.name}^op" if self.name else None
        return BoundQuiverAlgebra(qop, rels, self.field, name=name)

    def with_field(self, field: Field) -> "BoundQuiverAlgebra":
        return BoundQuiverAlgebra(self.quiver, self.relations, field, name=self.name)

    # -- serialization ---------------------------------------------------
    def to_text(self) -> str:
        lines = []
        f = self.field
        lines.append("field Q" if f is QQ or f.name == "Q" else f"field Fp {f.p}")
        lines.append("vertices " + " ".join(self.vertices))
        for a in self.quiver.arrows:
            lines.append(f"arrow {a.name} {a.source} {a.target}")
        for r in self.relations:
            lines.append(f"relation {r.to_text()}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "name": self.name,
            "field": self.field.name,
            "vertices": list(self.vertices),
            "arrows": [[a.name, a.source, a.target] for a in self.quiver.arrows],
            "relations": [[[to_jsonable(c), p[0], list(p[1])] for c, p in r.terms] for r in self.relations],
            "basis": [[p[0], list(p[1])] for p in self.basis],
            "dim": self.dim,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BoundQuiverAlgebra":
        q = Quiver(data["vertices"], data["arrows"])
        rels = [PathExpr(tuple((from_jsonable(c), (s, tuple(arr))) for c, s, arr in r)) for r in data["relations"]]
        return cls(q, rels, field_from_spec(data.get("field")), name=data.get("name"))

    def __repr__(self) -> str:
        nm = f"{self.name}: " if self.name else ""
        return f"<BoundQuiverAlgebra {nm}{len(self.vertices)} vertices, dim {self.dim}, {len(self.relations)} relations>"


def _scalar_out(F: Field, x):
    return Fraction(x) if F is QQ or F.name == "Q" else int(x)


def _all_paths_len(q: Quiver, length: int) -> list[Path]:
    cache = q.__dict__.setdefault("_paths_by_length", {})
    if length not in cache:
        cache[length] = paths_of_length(q, length)
    return cache[length]


# --------------------------------------------------------------------------
# text format

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([A-Za-z_][\w']*(?:\s*\*\s*[A-Za-z_][\w']*)*)\s*")


def _parse_relation(text: str, q: Quiver, lineno: int) -> PathExpr:
    pos = 0
    terms = []
    text = text.strip()
    if not text:
        raise ParseError("empty relation", lineno)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("cannot parse relation term", lineno, text[pos:].split()[0] if text[pos:].split() else text[pos:])
        sign, coeff, word = m.groups()
        if terms and sign is None:
            raise ParseError("missing + or - between terms", lineno, word)
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        names = [w.strip() for w in word.split("*")]
        for n in names:
            if n not in q.arrow:
                raise ParseError("unknown arrow", lineno, n)
        arrows = tuple(reversed(names))
        terms.append((c, (q.arrow[arrows[0]].source, arrows)))
        pos = m.end()
    merged: dict = {}
    for c, p in terms:
        merged[p] = merged.get(p, 0) + c
    return PathExpr(tuple((c, p) for p, c in merged.items() if c != 0))


def parse_algebra(text: str, field: Field | None = None, name: str | None = None) -> BoundQuiverAlgebra:
    """Parse the line-oriented algebra file format.

    ``field`` overrides the file's ``field`` line when given.
    """
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] = []
    arrow_lines: list[int] = []
    rel_text: list[tuple[str, int]] = []
    file_field: Field | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            try:
                file_field = field_from_spec(rest)
            except FieldError as exc:
                raise ParseError(str(exc), lineno, rest) from exc
        elif head == "name":
            name = name or rest
        elif head == "vertices":
            if vertices is not None:
                raise ParseError("vertices declared twice", lineno, head)
            vertices = rest.split()
            if not vertices:
                raise ParseError("no vertices", lineno)
        elif head == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError("expected: arrow <id> <source> <target>", lineno, rest or None)
            arrows.append((parts[0], parts[1], parts[2]))
            arrow_lines.append(lineno)
        elif head == "relation":
            rel_text.append((rest, lineno))
        else:
            raise ParseError("unknown directive", lineno, head)
    if vertices is None:
        raise ParseError("missing vertices line", 0)
    declared = set(vertices)
    seen: set[str] = set()
    for (a, src, tgt), ln in zip(arrows, arrow_lines):
        for v in (src, tgt):
            if v not in declared:
                raise ParseError(f"arrow {a} uses the undeclared vertex {v}", ln, v)
        if a in seen:
            raise ParseError(f"arrow {a} declared twice", ln, a)
        seen.add(a)
    try:
        q = Quiver(vertices, arrows)
    except AlgebraError as exc:
        raise ParseError(str(exc), 0) from exc
    rels = [_parse_relation(t, q, ln) for t, ln in rel_text]
    rels = [r for r in rels if r.terms]
    return BoundQuiverAlgebra(q, rels, field or file_field or QQ, name=name)


def algebra_from_json_text(text: str) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra.from_json(json.loads(text))


def path_basis(A: BoundQuiverAlgebra) -> dict[tuple[str, str], list[Path]]:
    return A.path_basis()


def sinks_sources(A: BoundQuiverAlgebra) -> tuple[set, set, set]:
    return A.sinks_sources()


def path_algebra(vertices, arrows, field: Field = QQ, name: str | None = None) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(Quiver(vertices, arrows), (), field, name=name)


def rename_vertices(A: BoundQuiverAlgebra, mapping: dict, name: str | None = None) -> BoundQuiverAlgebra:
    """The same algebra with vertices renamed through ``mapping``."""
    q = A.quiver
    verts = [mapping.get(v, v) for v in q.vertices]
    arrows = [(a.name, mapping.get(a.source, a.source), mapping.get(a.target, a.target)) for a in q.arrows]
    rels = [PathExpr(tuple((c, (mapping.get(p[0], p[0]), p[1])) for c, p in r.terms)) for r in A.relations]
    return BoundQuiverAlgebra(Quiver(verts, arrows), rels, A.field, name=name or A.name)
