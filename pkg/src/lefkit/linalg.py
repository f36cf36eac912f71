"""Incremental reduced row echelon bases over QQ and GF(p).

Over QQ rows are stored as primitive integer vectors with a positive pivot
and reduction is fraction-free: a vector is combined with a row as
``a*v - b*row`` where ``a/b`` is the reduced ratio of the pivots, and the
content is divided out periodically.  Exact (rational) values appear only
when a caller asks for normal forms or exact rows.

Pivots are always the leftmost nonzero entry, so with columns in graded
lexicographic order the non-pivot columns are exactly the standard
monomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import FieldSpec, canonical_rational

_CONTENT_EVERY = 4


def _integerize(vec) -> list[int]:
    den = 1
    for x in vec:
        if type(x) is Fraction:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in vec]
    return [int(x * den) for x in vec]


def _primitive(v: list[int]) -> list[int]:
    g = gcd(*v)
    if g > 1:
        v = [x // g for x in v]
    return v


def _first_nonzero(v) -> int | None:
    for i, x in enumerate(v):
        if x:
            return i
    return None


class EchelonBasis:
    """A subspace of ``field^ncols`` kept in fully reduced echelon form."""

    __slots__ = ("field", "ncols", "_rows", "_p")

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self._rows: dict[int, list[int]] = {}
        self._p = field.modulus

    def copy(self) -> "EchelonBasis":
        other = EchelonBasis(self.field, self.ncols)
        other._rows = dict(self._rows)  # rows are never mutated in place
        return other

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return len(self._rows) == self.ncols

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def non_pivots(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self._rows]

    # -- conversion -----------------------------------------------------
    def _prep(self, vec) -> list[int]:
        if len(vec) != self.ncols:
            raise ValueError(f"vector of length {len(vec)}, expected {self.ncols}")
        if self._p is None:
            return _integerize(vec)
        p = self._p
        return [x % p for x in vec]

    # -- reduction --------------------------------------------------------
    def _reduce_q(self, v: list[int]):
        """Return ``(w, s)`` with ``w == s * NF(v)`` for a nonzero rational ``s``."""
        scale = 1
        steps = 0
        for col, row in self._rows.items():
            c = v[col]
            if not c:
                continue
            pv = row[col]
            g = gcd(c, pv)
            a, b = pv // g, c // g
            if a == 1:
                v = [x - b * y for x, y in zip(v, row)]
            else:
                v = [a * x - b * y for x, y in zip(v, row)]
                scale *= a
            steps += 1
            if steps % _CONTENT_EVERY == 0:
                g = gcd(*v)
                if g > 1:
                    v = [x // g for x in v]
                    scale = Fraction(scale, g)
        return v, scale

    def _reduce_p(self, v: list[int]) -> list[int]:
        p = self._p
        for col, row in self._rows.items():
            c = v[col]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return v

    def _reduced_raw(self, vec):
        v = self._prep(vec)
        if self._p is None:
            return self._reduce_q(v)[0]
        return self._reduce_p(v)

    def reduce(self, vec) -> list:
        """Exact normal form of ``vec`` modulo the span (zero at every pivot)."""
        v = self._prep(vec)
        if self._p is not None:
            return self._reduce_p(v)
        w, scale = self._reduce_q(v)
        if scale == 1:
            return w
        return [canonical_rational(Fraction(x) / scale) for x in w]

    def contains(self, vec) -> bool:
        return not any(self._reduced_raw(vec))

    # -- insertion --------------------------------------------------------
    def add(self, vec) -> bool:
        """Add ``vec`` to the span; return True iff the rank grew."""
        return self._insert(self._reduced_raw(vec))

    def _add_prepped(self, v: list[int]) -> bool:
        if self._p is None:
            return self._insert(self._reduce_q(v)[0])
        return self._insert(self._reduce_p(v))

    def _insert(self, v: list[int]) -> bool:
        piv = _first_nonzero(v)
        if piv is None:
            return False
        rows = self._rows
        if self._p is None:
            v = _primitive(v)
            if v[piv] < 0:
                v = [-x for x in v]
            pv = v[piv]
            for col, row in list(rows.items()):
                c = row[piv]
                if c:
                    g = gcd(c, pv)
                    a, b = pv // g, c // g
                    rows[col] = _primitive([a * x - b * y for x, y in zip(row, v)])
        else:
            p = self._p
            inv = pow(v[piv], -1, p)
            if inv != 1:
                v = [x * inv % p for x in v]
            for col, row in list(rows.items()):
                c = row[piv]
                if c:
                    rows[col] = [(x - c * y) % p for x, y in zip(row, v)]
        rows[piv] = v
        return True

    def extend(self, vecs) -> int:
        """Add many vectors; stops early once the space is full. Returns the rank."""
        for vec in vecs:
            if self.is_full:
                break
            self.add(vec)
        return self.rank

    # -- exact views ------------------------------------------------------
    def exact_rows(self) -> list[list]:
        """Rows of the reduced echelon form with pivot entries equal to 1."""
        out = []
        for col in sorted(self._rows):
            row = self._rows[col]
            if self._p is None and row[col] != 1:
                pv = row[col]
                row = [canonical_rational(Fraction(x, pv)) for x in row]
            out.append(list(row))
        return out

    def pivot_normal_forms(self) -> dict[int, list]:
        """For each pivot column c: the normal form of the unit vector e_c,
        expressed on the non-pivot columns (in increasing order)."""
        free = self.non_pivots()
        out = {}
        for col, row in self._rows.items():
            if self._p is None:
                pv = row[col]
                out[col] = [canonical_rational(Fraction(-row[j], pv)) for j in free]
            else:
                p = self._p
                out[col] = [(-row[j]) % p for j in free]
        return out

    @classmethod
    def from_reduced_rows(cls, field: FieldSpec, ncols: int, rows) -> "EchelonBasis":
        """Trusted constructor for rows already in fully reduced echelon form."""
        eb = cls(field, ncols)
        for r in rows:
            v = eb._prep(r)
            piv = _first_nonzero(v)
            if eb._p is None:
                v = _primitive(v)
                if v[piv] < 0:
                    v = [-x for x in v]
            eb._rows[piv] = v
        return eb


def rank(field: FieldSpec, rows, ncols: int) -> int:
    eb = EchelonBasis(field, ncols)
    return eb.extend(rows)


def kernel_basis(field: FieldSpec, rows, ncols: int) -> list[list]:
    """Basis of ``{x : row . x = 0 for every row}``.

    The returned vectors are in fully reduced echelon form (leading entry 1
    at the leftmost position, zero at the other leading positions), so they
    can be loaded with :meth:`EchelonBasis.from_reduced_rows`.  This works by
    eliminating with the column order reversed: the free columns of the
    reversed system become the leading positions of the kernel vectors.
    """
    eb = EchelonBasis(field, ncols)
    for r in rows:
        if eb.is_full:
            break
        eb.add(list(reversed(r)))
    exact = {col: row for col, row in zip(eb.pivots(), eb.exact_rows())}
    zero = 0
    out = []
    for f in range(ncols):
        if f in exact:
            continue
        x = [zero] * ncols
        x[f] = 1
        for pc, row in exact.items():
            c = row[f]
            if c:
                x[pc] = field.neg(c)
        x.reverse()
        out.append(x)
    out.reverse()
    return out
