"""Homogeneous ideals, their degree components, and artinian quotients.

Every degree component ``I_d`` is kept as a reduced echelon basis in the
graded-lex monomial coordinates of ``R_d``.  The non-pivot monomials are the
standard monomials: they form the basis of ``(R/I)_d`` used for all
multiplication matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .bounds import HilbertSeq
from .errors import ContextMismatch, EmptyComponent, NotArtinian
from .linalg import EchelonBasis, kernel_basis
from .polyring import (
    Form,
    RingCtx,
    gcd_forms,
    monomial_basis,
    monomial_index,
    num_monomials,
    shift_table,
)

DEFAULT_CAP = 64


def _combine(field, pairs, length):
    """Sum of ``c * vec`` over ``pairs`` as an exact vector."""
    out = [0] * length
    if field.is_rational:
        for c, vec in pairs:
            for k, x in enumerate(vec):
                if x:
                    out[k] += c * x
        return [field.coerce(x) for x in out]
    p = field.modulus
    for c, vec in pairs:
        for k, x in enumerate(vec):
            if x:
                out[k] = (out[k] + c * x) % p
    return out


class DegreeBasis:
    """Reduced echelon basis of one degree component of a subspace family."""

    def __init__(self, ctx: RingCtx, degree: int, echelon: EchelonBasis):
        self.ctx = ctx
        self.degree = degree
        self.echelon = echelon

    @property
    def monomials(self) -> tuple:
        return monomial_basis(self.ctx, self.degree)

    @property
    def rank(self) -> int:
        return self.echelon.rank

    def __len__(self):
        return self.echelon.rank

    @cached_property
    def standard_indices(self) -> tuple:
        return tuple(self.echelon.non_pivots())

    @property
    def standard_monomials(self) -> tuple:
        mons = self.monomials
        return tuple(mons[j] for j in self.standard_indices)

    @cached_property
    def normal_form_table(self) -> list:
        """For every monomial of R_d, its coordinates on the standard monomials."""
        std = self.standard_indices
        k = len(std)
        table = [None] * self.echelon.ncols
        for pos, j in enumerate(std):
            unit = [0] * k
            unit[pos] = 1
            table[j] = unit
        for col, nf in self.echelon.pivot_normal_forms().items():
            table[col] = nf
        return table

    def coordinates(self, form: Form) -> list:
        """Coordinates of ``form`` modulo this component, on the standard monomials."""
        if form.degree != self.degree and form:
            raise ValueError("degree mismatch")
        idx = monomial_index(self.ctx.num_vars, self.degree)
        table = self.normal_form_table
        return _combine(
            self.ctx.field,
            ((c, table[idx[m]]) for m, c in form.terms.items()),
            len(self.standard_indices),
        )

    def contains(self, form: Form) -> bool:
        if not form:
            return True
        return self.echelon.contains(form.to_vector())

    def forms(self) -> list[Form]:
        return [Form.from_vector(self.ctx, self.degree, r) for r in self.echelon.exact_rows()]

    def same_span(self, other: "DegreeBasis") -> bool:
        return (
            self.degree == other.degree
            and self.echelon.pivots() == other.echelon.pivots()
            and self.echelon.exact_rows() == other.echelon.exact_rows()
        )


def _full_basis(field, ncols) -> EchelonBasis:
    rows = []
    for j in range(ncols):
        r = [0] * ncols
        r[j] = 1
        rows.append(r)
    return EchelonBasis.from_reduced_rows(field, ncols, rows)


def _times_variables(prev: DegreeBasis, target: EchelonBasis):
    """Add ``x_i * row`` for every row of ``prev`` and every variable."""
    n = prev.ctx.num_vars
    ncols = target.ncols
    tables = shift_table(n, prev.degree)
    for row in list(prev.echelon._rows.values()):
        nz = [(j, x) for j, x in enumerate(row) if x]
        for i in range(n):
            if target.is_full:
                return
            tab = tables[i]
            v = [0] * ncols
            for j, x in nz:
                v[tab[j]] = x
            target._add_prepped(v)


def _shifted_vector(g: Form, mono, degree: int) -> list:
    idx = monomial_index(g.ctx.num_vars, degree)
    v = [0] * len(idx)
    for m, c in g.terms.items():
        v[idx[tuple(a + b for a, b in zip(m, mono))]] = c
    return v


class GradedIdeal:
    """A homogeneous ideal with lazily computed, cached degree components."""

    def __init__(self, ctx: RingCtx, generators=(), *, _base=None, _components=None, _top=None):
        gens = []
        for g in generators:
            if not isinstance(g, Form):
                raise TypeError("generators must be Form instances")
            if g.ctx.num_vars != ctx.num_vars or g.ctx.field != ctx.field:
                raise ContextMismatch(f"generator from {g.ctx} in {ctx}")
            if g:
                gens.append(g.with_ctx(ctx))
        self.ctx = ctx
        self._own_generators = tuple(gens)
        self._base = _base
        self._components = _components
        self._top = _top
        self._cache: dict[int, DegreeBasis] = {}

    @classmethod
    def from_components(cls, ctx: RingCtx, components: dict, top: int) -> "GradedIdeal":
        """An ideal given degreewise by echelon bases for ``d <= top``; full above ``top``.

        The caller guarantees the components are closed under multiplication
        by the variables.  Generators are extracted on demand.
        """
        return cls(ctx, (), _components=dict(components), _top=top)

    @property
    def field(self):
        return self.ctx.field

    @cached_property
    def generators(self) -> tuple:
        if self._components is not None:
            return tuple(g for d in range(self._top + 2) for g in self.new_generators(d))
        if self._base is not None:
            return self._base.generators + self._own_generators
        return self._own_generators

    def component(self, d: int) -> DegreeBasis:
        if d < 0:
            raise ValueError("negative degree")
        hit = self._cache.get(d)
        if hit is not None:
            return hit
        field = self.ctx.field
        ncols = num_monomials(self.ctx.num_vars, d)
        if self._components is not None:
            eb = self._components.get(d) if d <= self._top else None
            if eb is None:
                eb = _full_basis(field, ncols) if d > self._top else EchelonBasis(field, ncols)
        elif self._base is not None:
            eb = self._base.component(d).echelon.copy()
            for g in self._own_generators:
                if g.degree <= d and not eb.is_full:
                    for m in monomial_basis(self.ctx, d - g.degree):
                        if eb.is_full:
                            break
                        eb.add(_shifted_vector(g, m, d))
        else:
            eb = EchelonBasis(field, ncols)
            for g in self._own_generators:
                if g.degree == d:
                    eb.add(g.to_vector())
            if d >= 1:
                prev = self.component(d - 1)
                if prev.echelon.is_full:
                    eb = _full_basis(field, ncols)
                else:
                    _times_variables(prev, eb)
        basis = DegreeBasis(self.ctx, d, eb)
        self._cache[d] = basis
        return basis

    def span_of_lower(self, d: int) -> EchelonBasis:
        """Echelon basis of ``R_1 * I_{d-1}`` inside ``R_d``."""
        eb = EchelonBasis(self.ctx.field, num_monomials(self.ctx.num_vars, d))
        if d >= 1:
            _times_variables(self.component(d - 1), eb)
        return eb

    def new_generators(self, d: int) -> list[Form]:
        """Elements of ``I_d`` completing ``R_1 * I_{d-1}`` to a basis (minimal generators)."""
        lower = self.span_of_lower(d)
        out = []
        for row in self.component(d).echelon.exact_rows():
            if lower.add(row):
                out.append(Form.from_vector(self.ctx, d, row))
        return out

    def minimal_generator_count(self, d: int) -> int:
        return self.component(d).rank - self.span_of_lower(d).rank

    def contains(self, form: Form) -> bool:
        return self.component(form.degree).contains(form)


def ideal_component(ideal: GradedIdeal, d: int) -> DegreeBasis:
    return ideal.component(d)


def hilbert_function(ideal: GradedIdeal, cap: int = DEFAULT_CAP) -> HilbertSeq:
    """``h_d = dim R_d - dim I_d`` until the quotient vanishes; NotArtinian past ``cap``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    n = ideal.ctx.num_vars
    values = []
    for d in range(cap + 1):
        h = num_monomials(n, d) - ideal.component(d).rank
        if h == 0:
            return HilbertSeq(values)
        values.append(h)
    raise NotArtinian(f"h({cap}) = {values[-1]} > 0; quotient not artinian below the cap")


@dataclass(frozen=True)
class Classification:
    codim: int
    initial_degree: int
    socle_degree: int
    is_level: bool
    is_gorenstein: bool
    type: int
    socle_dims: tuple

    def to_dict(self) -> dict:
        return {
            "codim": self.codim,
            "initial_degree": self.initial_degree,
            "socle_degree": self.socle_degree,
            "is_level": self.is_level,
            "is_gorenstein": self.is_gorenstein,
            "type": self.type,
            "socle_dims": list(self.socle_dims),
        }


class QuotientAlgebra:
    """An artinian quotient ``R/I`` with its Hilbert function computed up front."""

    def __init__(self, ideal: GradedIdeal, cap: int = DEFAULT_CAP, dual=None):
        self.ideal = ideal
        self.ctx = ideal.ctx
        self.cap = cap
        self.dual = dual
        self.hilbert = hilbert_function(ideal, cap)

    @classmethod
    def from_generators(cls, ctx: RingCtx, generators, cap: int = DEFAULT_CAP):
        return cls(GradedIdeal(ctx, generators), cap)

    @property
    def field(self):
        return self.ctx.field

    @property
    def socle_degree(self) -> int:
        return len(self.hilbert) - 1

    def h(self, d: int) -> int:
        return self.hilbert.at(d)

    def component(self, d: int) -> DegreeBasis:
        return self.ideal.component(d)

    def quotient_basis(self, d: int) -> tuple:
        if d < 0 or d > self.socle_degree:
            return ()
        return self.component(d).standard_monomials

    def coordinates(self, form: Form) -> list:
        if form.degree > self.socle_degree:
            return []
        return self.component(form.degree).coordinates(form)

    def form_from_coordinates(self, d: int, coords) -> Form:
        terms = dict(zip(self.quotient_basis(d), coords))
        return Form(self.ctx, d, terms)

    @cached_property
    def socle_dims(self) -> tuple:
        e = self.socle_degree
        n = self.ctx.num_vars
        dims = []
        for d in range(e + 1):
            hd = self.h(d)
            if d == e:
                dims.append(hd)
                continue
            src = self.component(d)
            tgt_table = self.component(d + 1).normal_form_table
            tables = shift_table(n, d)
            eb = EchelonBasis(self.field, n * self.h(d + 1))
            for j in src.standard_indices:
                vec = []
                for i in range(n):
                    vec.extend(tgt_table[tables[i][j]])
                eb.add(vec)
            dims.append(hd - eb.rank)
        return tuple(dims)

    @cached_property
    def initial_degree(self) -> int:
        d = 0
        while self.component(d).rank == 0:
            d += 1
        return d

    @cached_property
    def classification(self) -> Classification:
        soc = self.socle_dims
        e = self.socle_degree
        level = all(s == 0 for s in soc[:e])
        t = sum(soc)
        return Classification(
            codim=self.h(1),
            initial_degree=self.initial_degree,
            socle_degree=e,
            is_level=level,
            is_gorenstein=level and t == 1,
            type=t,
            socle_dims=soc,
        )


def socle(A: QuotientAlgebra) -> tuple:
    return A.socle_dims


def classify(A: QuotientAlgebra) -> Classification:
    return A.classification


def ideal_plus_form(ideal: GradedIdeal, F: Form) -> GradedIdeal:
    """The ideal ``(I, F)``; its components reuse the cached ones of ``I``."""
    return GradedIdeal(ideal.ctx, (F,), _base=ideal)


def ideal_colon_form(ideal: GradedIdeal, F: Form, d: int) -> DegreeBasis:
    """``(I : F)_d``: the kernel of ``g -> g*F`` modulo ``I_{d + deg F}``."""
    if not F:
        raise ValueError("colon by the zero form")
    ctx = ideal.ctx
    field = ctx.field
    ncols = num_monomials(ctx.num_vars, d)
    target = ideal.component(d + F.degree)
    k = len(target.standard_indices)
    if k == 0:
        return DegreeBasis(ctx, d, _full_basis(field, ncols))
    idx = monomial_index(ctx.num_vars, d + F.degree)
    table = target.normal_form_table
    columns = []
    for m in monomial_basis(ctx, d):
        pairs = (
            (c, table[idx[tuple(a + b for a, b in zip(t, m))]]) for t, c in F.terms.items()
        )
        columns.append(_combine(field, pairs, k))
    rows = [[col[r] for col in columns] for r in range(k)]
    kernel = kernel_basis(field, rows, ncols)
    return DegreeBasis(ctx, d, EchelonBasis.from_reduced_rows(field, ncols, kernel))


def colon_ideal(ideal: GradedIdeal, F: Form, cap: int = DEFAULT_CAP) -> GradedIdeal:
    """The ideal ``(I : F)`` for an artinian ``R/I``."""
    e = len(hilbert_function(ideal, cap)) - 1
    top = e - F.degree
    comps = {d: ideal_colon_form(ideal, F, d).echelon for d in range(max(top, -1) + 1)}
    return GradedIdeal.from_components(ideal.ctx, comps, top)


def component_gcd(ideal: GradedIdeal, d: int):
    """``(gcd of a basis of I_d, its degree)``; degree 0 means no common divisor."""
    comp = ideal.component(d)
    if comp.rank == 0:
        raise EmptyComponent(f"I_{d} = 0")
    g = gcd_forms(comp.forms())
    return g, g.degree


@dataclass
class ExactSequenceCheck:
    """Degreewise check of ``h_{R/I}(t) = h_{R/(I:F)}(t - deg F) + h_{R/(I,F)}(t)``."""

    holds: bool
    degenerate: bool
    shift: int
    h_quotient: HilbertSeq
    h_plus: HilbertSeq
    h_colon: HilbertSeq
    failures: list = dc_field(default_factory=list)

    def rows(self, length: int | None = None) -> dict:
        """Table rows over degrees 0..length-1; the shifted colon row has None below the shift."""
        length = length or len(self.h_quotient)
        return {
            "deg": list(range(length)),
            "h_quotient": [self.h_quotient.at(t) for t in range(length)],
            "h_colon_shifted": [
                None if t < self.shift else self.h_colon.at(t - self.shift) for t in range(length)
            ],
            "h_plus": [self.h_plus.at(t) for t in range(length)],
        }


def check_exact_sequence(ideal: GradedIdeal, F: Form, cap: int = DEFAULT_CAP) -> ExactSequenceCheck:
    h = hilbert_function(ideal, cap)
    k = F.degree
    degenerate = ideal.contains(F)
    h_plus = hilbert_function(ideal_plus_form(ideal, F), cap)
    if degenerate:
        h_colon = HilbertSeq(())
    else:
        h_colon = hilbert_function(colon_ideal(ideal, F, cap), cap)
    failures = []
    for t in range(len(h) + k + 1):
        lhs = h.at(t)
        rhs = h_colon.at(t - k) + h_plus.at(t)
        if lhs != rhs:
            failures.append((t, lhs, rhs))
    return ExactSequenceCheck(not failures, degenerate, k, h, h_plus, h_colon, failures)
