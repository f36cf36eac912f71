"""Macaulay inverse systems under the contraction pairing.

A :class:`DualModule` lives in the dual ring ``k[y1..yn]``; the primal ring
``k[x1..xn]`` acts by contraction.  ``R/Ann(M)`` is built degreewise from
kernels of catalecticant matrices, so no generator products are needed.

Forms written for the differentiation action (the usual char-0 convention)
should go through :func:`DualModule.from_derivative_generators`, which
applies ``y^b -> b! y^b`` so that contraction reproduces differentiation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CharNotZero, ConstraintUnsatisfied, DependentGenerators
from .lefschetz import DEFAULT_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED, mult_map, sample_general_forms
from .linalg import EchelonBasis, _integerize, _primitive, kernel_basis
from .polyring import (
    Form,
    RingCtx,
    contract,
    divided_power_image,
    hessian_det,
    monomial_basis,
    monomial_index,
    num_monomials,
)
from .quotient import DEFAULT_CAP, DegreeBasis, GradedIdeal, QuotientAlgebra
from .bounds import HilbertSeq

DUAL_COEFF_RANGE = 999
CONSTRAINT_COEFF_RANGE = 9


class DualModule:
    """Generators of an inverse system, as forms in the dual variables."""

    def __init__(self, ctx: RingCtx, generators):
        gens = [g.with_ctx(ctx) for g in generators]
        if not gens or any(not g for g in gens):
            raise ValueError("an inverse system needs nonzero generators")
        self.ctx = ctx
        self.generators = tuple(gens)
        self._spans: dict[int, DegreeBasis] = {}

    @classmethod
    def from_derivative_generators(cls, ctx: RingCtx, generators) -> "DualModule":
        """Generators meant for the differentiation action (char 0 or p > degree)."""
        return cls(ctx, [divided_power_image(g) for g in generators])

    @property
    def top_degree(self) -> int:
        return max(g.degree for g in self.generators)

    @property
    def primal_ctx(self) -> RingCtx:
        return self.ctx.dual("x")

    def __repr__(self):
        return f"DualModule({[str(g) for g in self.generators]})"


def derivative_span(M: DualModule, d: int) -> DegreeBasis:
    """Reduced basis of ``M_d``, the span of all contractions of the generators into degree d."""
    hit = M._spans.get(d)
    if hit is not None:
        return hit
    ctx = M.ctx
    ncols = num_monomials(ctx.num_vars, d)
    eb = EchelonBasis(ctx.field, ncols)
    for g in M.generators:
        if g.degree < d:
            continue
        for m in monomial_basis(ctx, g.degree - d):
            if eb.is_full:
                break
            c = contract(m, g)
            if c:
                eb.add(c.to_vector())
    basis = DegreeBasis(ctx, d, eb)
    M._spans[d] = basis
    return basis


def dual_hilbert(M: DualModule) -> HilbertSeq:
    return HilbertSeq(derivative_span(M, d).rank for d in range(M.top_degree + 1))


def catalecticant(M: DualModule, d: int) -> list[list]:
    """Rows: (generator, monomial y^c of complementary degree); columns: monomials x^a of R_d.
    Entry = coefficient of y^(a+c) in the generator."""
    n = M.ctx.num_vars
    cols = monomial_basis(n, d)
    rows = []
    for g in M.generators:
        if g.degree < d:
            continue
        terms = g.terms
        for c in monomial_basis(n, g.degree - d):
            row = [terms.get(tuple(x + y for x, y in zip(a, c)), 0) for a in cols]
            if any(row):
                rows.append(row)
    return rows


def annihilator_component(M: DualModule, d: int) -> DegreeBasis:
    """``Ann(M)_d`` as a reduced basis in the primal ring."""
    ctx = M.primal_ctx
    ncols = num_monomials(ctx.num_vars, d)
    rows = catalecticant(M, d)
    kernel = kernel_basis(ctx.field, rows, ncols)
    return DegreeBasis(ctx, d, EchelonBasis.from_reduced_rows(ctx.field, ncols, kernel))


def annihilator_ideal(M: DualModule) -> GradedIdeal:
    e = M.top_degree
    comps = {d: annihilator_component(M, d).echelon for d in range(e + 1)}
    return GradedIdeal.from_components(M.primal_ctx, comps, e)


def algebra_from_dual(M: DualModule, cap: int = DEFAULT_CAP) -> QuotientAlgebra:
    """``R/Ann(M)``; generators of Ann are extracted lazily up to degree e+1."""
    return QuotientAlgebra(annihilator_ideal(M), cap, dual=M)


# ---------------------------------------------------------------------------
# random instances


def _random_form(ctx: RingCtx, e: int, rng: random.Random, spread: int = DUAL_COEFF_RANGE) -> Form:
    while True:
        terms = {m: rng.randint(-spread, spread) for m in monomial_basis(ctx, e)}
        F = Form(ctx, e, terms)
        if F:
            return F


def _dual_ctx(ctx: RingCtx) -> RingCtx:
    return ctx if ctx.var_names[0].startswith("y") else ctx.dual()


def random_gorenstein(ctx: RingCtx, e: int, rng: random.Random, cap: int = DEFAULT_CAP) -> QuotientAlgebra:
    """``R/Ann(F)`` for one random form F of degree e (integer coefficients in [-999, 999])."""
    if e < 1:
        raise ValueError("socle degree must be at least 1")
    dctx = _dual_ctx(ctx)
    return algebra_from_dual(DualModule(dctx, [_random_form(dctx, e, rng)]), cap)


@dataclass(frozen=True)
class HilbertConstraint:
    """``h_degree <= bound``."""

    degree: int
    bound: int

    def holds(self, h) -> bool:
        return h.at(self.degree) <= self.bound


def _echelon_forms(ctx: RingCtx, s: int, k: int, rng: random.Random) -> list[list[int]]:
    """k random degree-s forms in reduced echelon shape: leading monomials are the
    first k of R_s, remaining coefficients small integers.  This is a random point of
    the open cell of k-dimensional subspaces, and keeps the apolar kernel integral
    when k = 1."""
    N = num_monomials(ctx.num_vars, s)
    out = []
    for i in range(k):
        v = [0] * N
        v[i] = 1
        for j in range(k, N):
            v[j] = rng.randint(-CONSTRAINT_COEFF_RANGE, CONSTRAINT_COEFF_RANGE)
        out.append(v)
    return out


def apolar_kernel(ctx: RingCtx, forms: list[Form], e: int) -> list[list]:
    """Basis of degree-e dual forms F with ``q o F = 0`` for every primal form q."""
    n = ctx.num_vars
    cols = monomial_basis(n, e)
    col_idx = monomial_index(n, e)
    rows = []
    for q in forms:
        for c in monomial_basis(n, e - q.degree):
            row = [0] * len(cols)
            for a, coeff in q.terms.items():
                row[col_idx[tuple(x + y for x, y in zip(a, c))]] = coeff
            rows.append(row)
    return kernel_basis(ctx.field, rows, len(cols))


def random_gorenstein_constrained(
    ctx: RingCtx,
    e: int,
    constraint: HilbertConstraint,
    rng: random.Random,
    max_retries: int = 20,
    cap: int = DEFAULT_CAP,
) -> QuotientAlgebra:
    """Random Gorenstein algebra whose Hilbert function meets ``constraint``.

    Forces ``dim R_s - bound`` random forms of degree s into the annihilator by
    drawing F from the kernel of their contraction maps.
    """
    dctx = _dual_ctx(ctx)
    pctx = dctx.dual("x")
    s = constraint.degree
    k = num_monomials(ctx.num_vars, s) - constraint.bound
    if k <= 0 or s > e:
        return random_gorenstein(ctx, e, rng, cap)
    for _ in range(max_retries):
        qs = [Form.from_vector(pctx, s, v) for v in _echelon_forms(pctx, s, k, rng)]
        kernel = apolar_kernel(pctx, qs, e)
        if not kernel:
            continue
        vec = [0] * len(kernel[0])
        for kv in kernel:
            c = rng.randint(-DUAL_COEFF_RANGE, DUAL_COEFF_RANGE)
            if c:
                vec = [a + c * b for a, b in zip(vec, kv)]
        F = Form.from_vector(dctx, e, _primitive_vector(vec, ctx.field))
        if not F:
            continue
        A = algebra_from_dual(DualModule(dctx, [F]), cap)
        if constraint.holds(A.hilbert):
            A.constraint_forms = qs
            return A
    raise ConstraintUnsatisfied(f"no algebra with h_{s} <= {constraint.bound} after {max_retries} tries")


def _primitive_vector(vec, field):
    if not field.is_rational:
        return vec
    ints = _integerize(vec)
    if not any(ints):
        return ints
    return _primitive(ints)


def random_level(ctx: RingCtx, e: int, t: int, rng: random.Random, max_retries: int = 20,
                 cap: int = DEFAULT_CAP) -> QuotientAlgebra:
    """``R/Ann`` of t random independent forms of degree e."""
    if t < 1:
        raise ValueError("type must be at least 1")
    if t > num_monomials(ctx.num_vars, e):
        raise DependentGenerators(f"only {num_monomials(ctx.num_vars, e)} forms of degree {e}")
    dctx = _dual_ctx(ctx)
    for _ in range(max_retries):
        M = DualModule(dctx, [_random_form(dctx, e, rng) for _ in range(t)])
        if derivative_span(M, e).rank == t:
            return algebra_from_dual(M, cap)
    raise DependentGenerators("could not draw independent generators")


# ---------------------------------------------------------------------------
# Hessian cross-check


@dataclass(frozen=True)
class WatanabeResult:
    hessian_zero: bool
    map_rank: int
    map_full_rank: bool
    consistent: bool
    hilbert: HilbertSeq

    def to_dict(self) -> dict:
        return {
            "hessian_zero": self.hessian_zero,
            "map_rank": self.map_rank,
            "map_full_rank": self.map_full_rank,
            "consistent": self.consistent,
            "hilbert": list(self.hilbert),
        }


def watanabe_check(F: Form, num_samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                   bound: int = DEFAULT_BOUND) -> WatanabeResult:
    """Compare ``hessian(F) == 0`` with the rank of ``x L^(s-2): A_1 -> A_(s-1)``.

    ``A`` is the Gorenstein algebra of F under differentiation.  Full rank
    means rank equal to the number of variables, so a form that does not
    involve every variable (vanishing Hessian) counts as not full rank.
    """
    if not F.ctx.field.is_rational:
        raise CharNotZero("the Hessian criterion needs characteristic 0")
    s = F.degree
    if s < 3:
        raise ValueError("degree must be at least 3")
    hz = not hessian_det(F)
    A = algebra_from_dual(DualModule.from_derivative_generators(_dual_ctx(F.ctx), [F]))
    best = 0
    for L in sample_general_forms(A.ctx, seed=seed, bound=bound, num_samples=num_samples):
        best = max(best, mult_map(A, L, 1, s - 2).rank)
    full = best == F.ctx.num_vars
    return WatanabeResult(hz, best, full, hz == (not full), A.hilbert)
