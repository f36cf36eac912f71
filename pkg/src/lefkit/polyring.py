"""Sparse homogeneous polynomials over QQ and GF(p).

Monomials are exponent tuples.  Graded lexicographic order is the single
canonical order: it fixes the coordinates of every degree component, the
leading coefficient used for normalization, and the printed term order.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

from .errors import (
    AllZero,
    CharTooSmall,
    ContextMismatch,
    DegreeUnderflow,
    NotDivisible,
)
from .fields import QQ, FieldSpec, GF, canonical_rational

Monomial = tuple


@dataclass(frozen=True)
class RingCtx:
    num_vars: int
    field: FieldSpec = QQ
    var_names: tuple = dc_field(default=())

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a ring needs at least one variable")
        names = tuple(self.var_names) or tuple(f"x{i + 1}" for i in range(self.num_vars))
        if len(names) != self.num_vars:
            raise ValueError("var_names must have num_vars entries")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        object.__setattr__(self, "var_names", names)

    @property
    def n(self) -> int:
        return self.num_vars

    def dual(self, prefix: str = "y") -> "RingCtx":
        """Same field and size, variables renamed ``y1..yn`` (or x-names swapped)."""
        return RingCtx(self.num_vars, self.field, _renamed(self.var_names, prefix))

    def __str__(self):
        return f"{self.field}[{','.join(self.var_names)}]"

    # constructors ------------------------------------------------------
    def var(self, i: int) -> "Form":
        e = [0] * self.num_vars
        e[i] = 1
        return Form(self, 1, {tuple(e): 1})

    def gens(self) -> list["Form"]:
        return [self.var(i) for i in range(self.num_vars)]

    def zero(self, degree: int) -> "Form":
        return Form(self, degree, {})

    def one(self) -> "Form":
        return Form(self, 0, {(0,) * self.num_vars: 1})

    def monomial(self, exps) -> "Form":
        exps = tuple(exps)
        return Form(self, sum(exps), {exps: 1})


def _renamed(names, prefix):
    swap = {"x": "y", "y": "x"}
    if all(len(s) > 1 and s[0] in swap and s[1:].isdigit() for s in names):
        first = {s[0] for s in names}
        if len(first) == 1:
            return tuple(swap[s[0]] + s[1:] for s in names)
    return tuple(f"{prefix}{i + 1}" for i in range(len(names)))


@lru_cache(maxsize=None)
def _monomials(n: int, d: int) -> tuple:
    if n == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in _monomials(n - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {m: i for i, m in enumerate(_monomials(n, d))}


def monomial_basis(ctx: RingCtx | int, d: int) -> tuple:
    """All degree-``d`` monomials, graded-lex descending (``x1^d`` first)."""
    n = ctx if isinstance(ctx, int) else ctx.num_vars
    if d < 0:
        return ()
    return _monomials(n, d)


def num_monomials(n: int, d: int) -> int:
    return comb(n - 1 + d, n - 1) if d >= 0 else 0


@lru_cache(maxsize=None)
def shift_table(n: int, d: int) -> tuple:
    """``shift_table(n, d)[i][j]`` = index in degree d+1 of x_i times monomial j."""
    src = _monomials(n, d)
    idx = monomial_index(n, d + 1)
    table = []
    for i in range(n):
        row = []
        for m in src:
            e = list(m)
            e[i] += 1
            row.append(idx[tuple(e)])
        table.append(tuple(row))
    return tuple(table)


def _madd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class Form:
    """A homogeneous form: degree plus a sparse map monomial -> nonzero coefficient."""

    __slots__ = ("ctx", "degree", "terms")

    def __init__(self, ctx: RingCtx, degree: int, terms: dict | None = None):
        f = ctx.field
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ctx.num_vars or sum(m) != degree or min(m) < 0:
                raise ValueError(f"monomial {m} does not have degree {degree} in {ctx}")
            c = f.coerce(c)
            if c:
                clean[m] = c
        self.ctx = ctx
        self.degree = degree
        self.terms = clean

    @classmethod
    def _raw(cls, ctx, degree, terms) -> "Form":
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.degree = degree
        obj.terms = terms
        return obj

    # -- basic protocol -------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.ctx.num_vars == other.ctx.num_vars
            and self.ctx.field == other.ctx.field
            and self.terms == other.terms
            and (self.degree == other.degree or not self.terms)
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"Form({format_form(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_form(self)

    def coefficient(self, m):
        return self.terms.get(tuple(m), 0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise AllZero("zero form has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "Form"):
        if self.ctx.num_vars != other.ctx.num_vars or self.ctx.field != other.ctx.field:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")

    def __add__(self, other: "Form") -> "Form":
        self._check(other)
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("sum of forms of different degrees is not homogeneous")
        f = self.ctx.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        deg = self.degree if self.terms else other.degree
        return Form._raw(self.ctx, deg, out)

    def __neg__(self) -> "Form":
        f = self.ctx.field
        return Form._raw(self.ctx, self.degree, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Form):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "Form":
        if k < 0:
            raise ValueError("negative power")
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = multiply(out, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return out

    def scale(self, c) -> "Form":
        f = self.ctx.field
        c = f.coerce(c)
        if not c:
            return Form._raw(self.ctx, self.degree, {})
        return Form._raw(self.ctx, self.degree, {m: f.mul(v, c) for m, v in self.terms.items()})

    def monic(self) -> "Form":
        """Scale so that the graded-lex leading coefficient is 1."""
        _, c = self.leading_term()
        return self.scale(self.ctx.field.inv(c))

    def to_vector(self) -> list:
        idx = monomial_index(self.ctx.num_vars, self.degree)
        v = [0] * len(idx)
        for m, c in self.terms.items():
            v[idx[m]] = c
        return v

    @classmethod
    def from_vector(cls, ctx: RingCtx, degree: int, vec) -> "Form":
        basis = monomial_basis(ctx, degree)
        if len(vec) != len(basis):
            raise ValueError("vector length does not match the monomial basis")
        f = ctx.field
        terms = {}
        for m, c in zip(basis, vec):
            c = f.coerce(c)
            if c:
                terms[m] = c
        return cls._raw(ctx, degree, terms)

    def with_ctx(self, ctx: RingCtx) -> "Form":
        """Reinterpret the same coefficients in another ring of the same shape."""
        if ctx.num_vars != self.ctx.num_vars or ctx.field != self.ctx.field:
            raise ContextMismatch(f"{self.ctx} vs {ctx}")
        return Form._raw(ctx, self.degree, self.terms)

    def variables_used(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}


def multiply(f: Form, g: Form) -> Form:
    f._check(g)
    fld = f.ctx.field
    out: dict = {}
    if fld.is_rational:
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                m = _madd(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        out = {m: canonical_rational(c) for m, c in out.items() if c}
    else:
        p = fld.modulus
        for m1, c1 in f.terms.items():
            for m2, c2 in g.terms.items():
                m = _madd(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        out = {m: c for m, c in out.items() if c}
    return Form._raw(f.ctx, f.degree + g.degree, out)


def contract(m: Monomial, F: Form) -> Form:
    """Divided-power contraction ``x^a o y^b = y^(b-a)`` (0 on underflow), no factorials."""
    m = tuple(m)
    if len(m) != F.ctx.num_vars:
        raise ContextMismatch("monomial length does not match the dual ring")
    d = sum(m)
    if d > F.degree:
        raise DegreeUnderflow(f"cannot contract degree {d} into degree {F.degree}")
    out = {}
    for b, c in F.terms.items():
        if _divides(m, b):
            out[tuple(y - x for x, y in zip(m, b))] = c
    return Form._raw(F.ctx, F.degree - d, out)


def contract_form(g: Form, F: Form) -> Form:
    """Bilinear extension of :func:`contract` to a primal form ``g``."""
    if g.ctx.num_vars != F.ctx.num_vars or g.ctx.field != F.ctx.field:
        raise ContextMismatch(f"{g.ctx} vs {F.ctx}")
    if g.degree > F.degree:
        raise DegreeUnderflow(f"cannot contract degree {g.degree} into degree {F.degree}")
    fld = F.ctx.field
    out: dict = {}
    for a, ca in g.terms.items():
        for b, cb in F.terms.items():
            if _divides(a, b):
                k = tuple(y - x for x, y in zip(a, b))
                out[k] = fld.add(out.get(k, 0), fld.mul(ca, cb))
    return Form._raw(F.ctx, F.degree - g.degree, {k: c for k, c in out.items() if c})


def derivative(F: Form, i: int) -> Form:
    """True partial derivative with respect to variable ``i``."""
    fld = F.ctx.field
    out = {}
    for m, c in F.terms.items():
        e = m[i]
        if e:
            v = fld.mul(c, fld.coerce(e))
            if v:
                k = list(m)
                k[i] -= 1
                out[tuple(k)] = v
    return Form._raw(F.ctx, max(F.degree - 1, 0), out)


def divided_power_image(F: Form) -> Form:
    """Map ``y^b -> b! * y^b``.

    Contraction against the image reproduces differentiation against ``F``,
    so the inverse system of ``F`` under differentiation equals the inverse
    system of the image under contraction (characteristic 0 or p > deg F).
    """
    fld = F.ctx.field
    if fld.characteristic and fld.characteristic <= F.degree:
        raise CharTooSmall(f"factorials up to {F.degree}! vanish in {fld}")
    out = {}
    for m, c in F.terms.items():
        w = 1
        for e in m:
            w *= factorial(e)
        out[m] = fld.mul(c, fld.coerce(w))
    return Form._raw(F.ctx, F.degree, out)


# ---------------------------------------------------------------------------
# determinants of form matrices


def determinant(matrix: list[list[Form]]) -> Form:
    """Laplace expansion along rows, memoized on the set of remaining columns."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    ctx = matrix[0][0].ctx
    memo: dict = {}

    def minor(row: int, cols: tuple) -> Form:
        if row == n:
            return ctx.one()
        key = cols
        if key in memo:
            return memo[key]
        total = None
        for k, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            term = multiply(entry, minor(row + 1, cols[:k] + cols[k + 1:]))
            if k % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            deg = sum(matrix[r][0].degree for r in range(row, n))
            total = ctx.zero(deg)
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def hessian_matrix(F: Form) -> list[list[Form]]:
    n = F.ctx.num_vars
    first = [derivative(F, i) for i in range(n)]
    return [[derivative(first[i], j) for j in range(n)] for i in range(n)]


def hessian_det(F: Form) -> Form:
    if F.degree < 2:
        raise ValueError("the Hessian needs degree at least 2")
    p = F.ctx.field.characteristic
    if p and p <= F.degree:
        raise CharTooSmall(f"characteristic {p} must exceed the degree {F.degree}")
    H = hessian_matrix(F)
    det = determinant(H)
    if not det:
        return F.ctx.zero(F.ctx.num_vars * (F.degree - 2))
    return det


# ---------------------------------------------------------------------------
# general (not necessarily homogeneous) sparse polynomials, for GCD work
#
# A poly is a dict exponent-tuple -> coefficient.  ``k`` is the number of
# leading variables that may occur; the recursion peels off variable k-1.


class _Ops:
    def __init__(self, fld: FieldSpec, n: int):
        self.f = fld
        self.n = n
        self.zero_exp = (0,) * n

    def add(self, a, b):
        f = self.f
        out = dict(a)
        for m, c in b.items():
            v = f.add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def sub(self, a, b):
        f = self.f
        return self.add(a, {m: f.neg(c) for m, c in b.items()})

    def mul(self, a, b):
        f = self.f
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _madd(m1, m2)
                out[m] = f.add(out.get(m, 0), f.mul(c1, c2))
        return {m: c for m, c in out.items() if c}

    def scale(self, a, c):
        f = self.f
        return {m: f.mul(v, c) for m, v in a.items()}

    def mul_term(self, a, mono, c):
        f = self.f
        return {_madd(m, mono): f.mul(v, c) for m, v in a.items()}

    def divmod(self, a, b):
        """Multivariate division by a single divisor in lex order."""
        f = self.f
        lm = max(b)
        lc = b[lm]
        q: dict = {}
        r: dict = {}
        a = dict(a)
        while a:
            m = max(a)
            c = a[m]
            if _divides(lm, m):
                t = tuple(x - y for x, y in zip(m, lm))
                ct = f.div(c, lc)
                q[t] = f.add(q.get(t, 0), ct)
                a = self.sub(a, self.mul_term(b, t, ct))
            else:
                r[m] = c
                del a[m]
        return q, r

    def divexact(self, a, b):
        q, r = self.divmod(a, b)
        if r:
            raise NotDivisible("division is not exact")
        return q

    # univariate view in variable v
    def coeffs_in(self, a, v):
        out: dict = {}
        for m, c in a.items():
            e = m[v]
            k = m[:v] + (0,) + m[v + 1:]
            out.setdefault(e, {})[k] = c
        return out

    def deg_in(self, a, v):
        return max(m[v] for m in a)

    def lc_in(self, a, v):
        d = self.deg_in(a, v)
        return {m[:v] + (0,) + m[v + 1:]: c for m, c in a.items() if m[v] == d}

    def content(self, a, k):
        v = k - 1
        g = None
        for c in self.coeffs_in(a, v).values():
            g = c if g is None else self.gcd(g, c, k - 1)
            if len(g) == 1 and sum(next(iter(g))) == 0:
                return {self.zero_exp: self.f.coerce(1)}
        return g

    def normalize(self, a):
        m = max(a)
        return self.scale(a, self.f.inv(a[m]))

    def prem(self, a, b, v):
        """Pseudo-remainder of ``a`` by ``b`` as polynomials in variable ``v``."""
        db = self.deg_in(b, v)
        lcb = self.lc_in(b, v)
        r = dict(a)
        delta = self.deg_in(a, v) - db + 1
        while r and self.deg_in(r, v) >= db:
            dr = self.deg_in(r, v)
            lcr = self.lc_in(r, v)
            shift = [0] * self.n
            shift[v] = dr - db
            t = self.mul(lcr, {tuple(shift): self.f.coerce(1)})
            r = self.sub(self.mul(r, lcb), self.mul(t, b))
            delta -= 1
        for _ in range(max(delta, 0)):
            r = self.mul(r, lcb)
        return r

    def gcd(self, a, b, k):
        if not a:
            return self.normalize(b) if b else {}
        if not b:
            return self.normalize(a)
        one = {self.zero_exp: self.f.coerce(1)}
        if k == 0:
            return one
        v = k - 1
        if all(m[v] == 0 for m in a) and all(m[v] == 0 for m in b):
            return self.gcd(a, b, k - 1)
        ca, cb = self.content(a, k), self.content(b, k)
        pa, pb = self.divexact(a, ca), self.divexact(b, cb)
        c = self.gcd(ca, cb, k - 1)
        if self.deg_in(pa, v) < self.deg_in(pb, v):
            pa, pb = pb, pa
        while True:
            if self.deg_in(pb, v) == 0:
                h = one
                break
            r = self.prem(pa, pb, v)
            if not r:
                h = pb
                break
            if self.deg_in(r, v) == 0:
                h = one
                break
            pa, pb = pb, self.divexact(r, self.content(r, k))
        return self.normalize(self.mul(c, h))


_SCREEN_PRIME = 2147483647


def _integer_primitive(terms: dict) -> dict:
    den = 1
    for c in terms.values():
        if type(c) is Fraction:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = {m: int(c * den) for m, c in terms.items()}
    g = gcd(*ints.values())
    return {m: c // g for m, c in ints.items()}


def _coprime_mod_p(f: Form, g: Form) -> bool:
    """Certificate of coprimality over QQ: primitive integer forms whose
    reductions mod p are coprime have no common factor over QQ (a common
    primitive factor survives reduction with its degree intact)."""
    ops = _Ops(GF(_SCREEN_PRIME), f.ctx.num_vars)
    a = {m: c % _SCREEN_PRIME for m, c in _integer_primitive(f.terms).items()}
    b = {m: c % _SCREEN_PRIME for m, c in _integer_primitive(g.terms).items()}
    a = {m: c for m, c in a.items() if c}
    b = {m: c for m, c in b.items() if c}
    if not a or not b:
        return False
    h = ops.gcd(a, b, f.ctx.num_vars)
    return len(h) == 1 and sum(next(iter(h))) == 0


def gcd_pair(f: Form, g: Form) -> Form:
    f._check(g)
    ctx = f.ctx
    if not f:
        return g.monic() if g else ctx.zero(0)
    if not g:
        return f.monic()
    if ctx.field.is_rational and _coprime_mod_p(f, g):
        return ctx.one()
    ops = _Ops(ctx.field, ctx.num_vars)
    h = ops.gcd(f.terms, g.terms, ctx.num_vars)
    deg = sum(next(iter(h)))
    return Form._raw(ctx, deg, h).monic()


def gcd_forms(fs) -> Form:
    """A greatest common divisor, normalized to graded-lex leading coefficient 1."""
    fs = [f for f in fs if f]
    if not fs:
        raise AllZero("gcd of zero forms")
    g = fs[0].monic()
    for f in fs[1:]:
        if g.degree == 0:
            break
        g = gcd_pair(g, f)
    return g


def divide_exact(f: Form, g: Form) -> Form:
    """``f / g``; raises :class:`NotDivisible` unless g divides f."""
    f._check(g)
    if not g:
        raise AllZero("division by the zero form")
    if not f:
        return f.ctx.zero(max(f.degree - g.degree, 0))
    ops = _Ops(f.ctx.field, f.ctx.num_vars)
    q = ops.divexact(f.terms, g.terms)
    return Form._raw(f.ctx, f.degree - g.degree, q)


def divides(g: Form, f: Form) -> bool:
    try:
        divide_exact(f, g)
    except NotDivisible:
        return False
    return True


# ---------------------------------------------------------------------------
# text


def format_coefficient(c) -> str:
    return str(c)


def format_monomial(m, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_form(F: Form) -> str:
    """Canonical text: graded-lex descending terms, ``p/q`` rationals."""
    if not F.terms:
        return "0"
    names = F.ctx.var_names
    out = []
    for i, (m, c) in enumerate(F.sorted_terms()):
        neg = F.ctx.field.is_rational and c < 0
        a = -c if neg else c
        mono = format_monomial(m, names)
        if not mono:
            body = format_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_coefficient(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)
