"""Exact linear algebra over the rationals or a prime field.

Matrices are numpy arrays: ``object`` arrays of :class:`fractions.Fraction`
over Q, ``int64`` arrays reduced modulo ``p`` over F_p.  Everything above
this module manipulates matrices only through a :class:`Field` instance, so
the two scalar domains are interchangeable.

Subspaces are carried as reduced row echelon bases (rows are the basis
vectors).  For such a basis the coordinates of a vector in its span are just
the vector's entries at the pivot columns.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np


class FieldError(ValueError):
    """Raised for malformed scalar-domain descriptors."""


class Field:
    """Common interface of the exact scalar domains."""

    name: str

    # -- construction ---------------------------------------------------
    def convert(self, x):
        raise NotImplementedError

    def array(self, rows, shape=None) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, m: int, n: int) -> np.ndarray:
        raise NotImplementedError

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.convert(1)
        return out

    def vector(self, entries) -> np.ndarray:
        return self.array([list(entries)]).reshape(-1) if len(entries) else self.zeros(1, 0).reshape(-1)

    def random_matrix(self, m: int, n: int, rng: random.Random, bound: int = 9) -> np.ndarray:
        return self.array([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)], shape=(m, n))

    # -- arithmetic -----------------------------------------------------
    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def inverse_scalar(self, x):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return not np.any(a != 0)

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        return a.shape == b.shape and self.is_zero(self.reduce(a - b))

    # -- elimination ----------------------------------------------------
    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
        raise NotImplementedError

    def rank(self, a: np.ndarray) -> int:
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def nullspace(self, a: np.ndarray) -> np.ndarray:
        """Rows spanning {x : a @ x = 0}, in reduced echelon form."""
        m, n = a.shape
        if m == 0:
            return self.eye(n)
        r, piv = self.rref(a)
        free = [c for c in range(n) if c not in set(piv)]
        basis = self.zeros(len(free), n)
        one = self.convert(1)
        for k, f in enumerate(free):
            basis[k, f] = one
            for i, p in enumerate(piv):
                basis[k, p] = self.reduce(-r[i, f])
        if len(free) == 0:
            return basis
        return self.rref(basis)[0]

    def left_nullspace(self, a: np.ndarray) -> np.ndarray:
        return self.nullspace(a.T)

    def inv(self, a: np.ndarray) -> np.ndarray:
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        if n == 0:
            return self.zeros(0, 0)
        aug = np.concatenate([a, self.eye(n)], axis=1)
        r, piv = self.rref(aug)
        if piv[:n] != list(range(n)) or len(piv) < n or piv[n - 1] != n - 1:
            raise ZeroDivisionError("matrix is singular")
        return r[:, n:]

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """One solution x of a @ x = b (b a matrix), or None."""
        m, n = a.shape
        k = b.shape[1]
        aug = np.concatenate([a, b], axis=1)
        r, piv = self.rref(aug) if aug.shape[0] else (self.zeros(0, n + k), [])
        if any(p >= n for p in piv):
            return None
        x = self.zeros(n, k)
        for i, p in enumerate(piv):
            x[p, :] = r[i, n:]
        return x

    # -- subspaces given by row bases -----------------------------------
    def row_basis(self, rows: np.ndarray) -> tuple[np.ndarray, list[int]]:
        if rows.shape[0] == 0:
            return rows, []
        return self.rref(rows)

    def reduce_by(self, basis: np.ndarray, pivots: list[int], v: np.ndarray) -> np.ndarray:
        """Residue of row vectors ``v`` modulo an rref basis."""
        if not pivots:
            return v
        if v.ndim == 1:
            return self.reduce(v - self.matmul(v[pivots][None, :], basis)[0])
        return self.reduce(v - self.matmul(v[:, pivots], basis))

    def in_span(self, basis: np.ndarray, pivots: list[int], v: np.ndarray) -> bool:
        return self.is_zero(self.reduce_by(basis, pivots, v))

    def complement(self, sub: np.ndarray, ambient: np.ndarray) -> np.ndarray:
        """Rows of ``ambient`` (in order) extending an rref basis of ``sub``
        to a basis of span(sub + ambient); returned reduced modulo ``sub``."""
        n = ambient.shape[1]
        sub_r, sub_p = self.row_basis(sub) if sub.shape[0] else (self.zeros(0, n), [])
        picked = []
        cur_r, cur_p = sub_r, sub_p
        for row in ambient:
            res = self.reduce_by(cur_r, cur_p, row)
            if not self.is_zero(res):
                picked.append(row)
                cur_r, cur_p = self.rref(np.concatenate([cur_r, row[None, :]], axis=0))
        if not picked:
            return self.zeros(0, n)
        return np.array(picked).reshape(len(picked), n)

    def intersect(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Basis (rref rows) of span(a) ∩ span(b)."""
        n = a.shape[1]
        if a.shape[0] == 0 or b.shape[0] == 0:
            return self.zeros(0, n)
        # x a = y b  <=>  [x, -y] [a; b] = 0
        ker = self.left_nullspace(np.concatenate([a, self.reduce(-b)], axis=0))
        if ker.shape[0] == 0:
            return self.zeros(0, n)
        return self.row_basis(self.matmul(ker[:, : a.shape[0]], a))[0]

    def coordinates(self, basis: np.ndarray, v: np.ndarray) -> np.ndarray | None:
        """Coefficients c with c @ basis = v for row vectors v (one per row)."""
        if v.ndim == 1:
            out = self.coordinates(basis, v[None, :])
            return None if out is None else out[0]
        if basis.shape[0] == 0:
            return self.zeros(v.shape[0], 0) if self.is_zero(v) else None
        x = self.solve(basis.T, v.T)
        return None if x is None else x.T

    def __repr__(self) -> str:
        return self.name


class Rationals(Field):
    name = "Q"

    def convert(self, x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def array(self, rows, shape=None) -> np.ndarray:
        if isinstance(rows, np.ndarray) and rows.dtype == object:
            out = np.empty(rows.shape, dtype=object)
            flat = rows.reshape(-1)
            out.reshape(-1)[:] = [x if isinstance(x, Fraction) else Fraction(x) for x in flat]
            return out
        arr = np.array(rows, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        out = np.empty(arr.shape, dtype=object)
        out.reshape(-1)[:] = [Fraction(x) for x in arr.reshape(-1)]
        return out

    def zeros(self, m, n):
        out = np.empty((m, n), dtype=object)
        out.fill(Fraction(0))
        return out

    def matmul(self, a, b):
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return a.dot(b)

    def inverse_scalar(self, x):
        return 1 / Fraction(x)

    def rref(self, a):
        m, n = a.shape
        r = a.copy()
        pivots: list[int] = []
        row = 0
        for c in range(n):
            if row == m:
                break
            col = r[row:, c]
            nz = np.flatnonzero(col != 0)
            if nz.size == 0:
                continue
            p = row + int(nz[0])
            if p != row:
                r[[row, p]] = r[[p, row]]
            piv = r[row, c]
            if piv != 1:
                r[row, c:] = r[row, c:] * (1 / Fraction(piv))
            others = np.flatnonzero(r[:, c] != 0)
            for i in others:
                if i != row:
                    r[i, c:] = r[i, c:] - r[i, c] * r[row, c:]
            pivots.append(c)
            row += 1
        return r[: len(pivots)], pivots


class PrimeField(Field):
    def __init__(self, p: int = 32003):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise FieldError(f"{p} is not prime")
        if p > 3037000493:
            raise FieldError("prime too large for int64 products")
        self.p = p
        self.name = f"Fp:{p}"

    def convert(self, x):
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def array(self, rows, shape=None):
        if isinstance(rows, np.ndarray) and rows.dtype != object:
            return np.mod(rows.astype(np.int64), self.p)
        arr = np.array(rows, dtype=object)
        if shape is not None:
            arr = arr.reshape(shape)
        flat = [self.convert(x) for x in arr.reshape(-1)]
        return np.array(flat, dtype=np.int64).reshape(arr.shape)

    def zeros(self, m, n):
        return np.zeros((m, n), dtype=np.int64)

    def reduce(self, a):
        return np.mod(a, self.p)

    def matmul(self, a, b):
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        # entries < p, so chunk the inner dimension to stay inside int64
        p = self.p
        chunk = max(1, (2**62) // ((p - 1) ** 2))
        if a.shape[1] <= chunk:
            return np.mod(a @ b, p)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for s in range(0, a.shape[1], chunk):
            out = np.mod(out + a[:, s : s + chunk] @ b[s : s + chunk], p)
        return out

    def inverse_scalar(self, x):
        return pow(int(x), -1, self.p)

    def rref(self, a):
        p = self.p
        m, n = a.shape
        r = np.mod(a.astype(np.int64), p)
        pivots: list[int] = []
        row = 0
        for c in range(n):
            if row == m:
                break
            nz = np.flatnonzero(r[row:, c])
            if nz.size == 0:
                continue
            piv_row = row + int(nz[0])
            if piv_row != row:
                r[[row, piv_row]] = r[[piv_row, row]]
            r[row] = (r[row] * pow(int(r[row, c]), -1, p)) % p
            f = r[:, c].copy()
            f[row] = 0
            nzf = np.flatnonzero(f)
            if nzf.size:
                r[nzf] = (r[nzf] - np.outer(f[nzf], r[row])) % p
            pivots.append(c)
            row += 1
        return r[: len(pivots)], pivots


QQ = Rationals()


def field_from_spec(spec: str | None) -> Field:
    """Parse ``Q``, ``Fp``, ``Fp:p`` or ``Fp p``."""
    if spec is None:
        return QQ
    s = spec.strip().replace(" ", ":")
    if s in ("Q", "QQ"):
        return QQ
    if s.startswith("Fp"):
        rest = s[2:].lstrip(":")
        if not rest:
            return PrimeField()
        try:
            return PrimeField(int(rest))
        except ValueError as exc:
            raise FieldError(f"bad prime in field spec {spec!r}") from exc
    raise FieldError(f"unknown field {spec!r}")


def to_jsonable(x):
    """Exact scalar to a JSON-friendly value (int or 'p/q' string)."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return int(x)


def from_jsonable(x) -> Fraction:
    return Fraction(x) if not isinstance(x, Fraction) else x
