"""Weak and Strong Lefschetz checks with certificates.

"General" linear forms are realized two ways.  Over QQ a handful of forms
with random integer coefficients in ``[1, bound]`` are drawn, each from its
own generator seeded with ``seed + index``; the achieved rank in a degree is
the maximum over the samples.  Rank is lower semicontinuous, so the maximum
never exceeds the generic rank, and by Schwartz-Zippel a single sample
misses it with probability at most ``deg(minor) / bound``.  Over a small
prime field every projective linear form is enumerated instead, since a
general form need not exist there.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .errors import CharNotZero, WrongShape
from .fields import random_scalar
from .linalg import EchelonBasis, _integerize, _primitive, kernel_basis
from .polyring import Form, RingCtx, gcd_forms, monomial_index, num_monomials
from .quotient import (
    GradedIdeal,
    QuotientAlgebra,
    _combine,
    hilbert_function,
    ideal_plus_form,
)
from .bounds import HilbertSeq

DEFAULT_SEED = 42
DEFAULT_BOUND = 1 << 20
DEFAULT_SAMPLES = 3
EXHAUSTIVE_LIMIT = 1024

HAS_WLP, FAILS_WLP = "has_wlp", "fails_wlp"
HAS_SLP, FAILS_SLP = "has_slp", "fails_slp"


@dataclass(frozen=True)
class Provenance:
    kind: str  # "sampled" | "exhaustive" | "user_given"
    seed: int | None = None
    bound: int | None = None
    index: int | None = None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "seed": self.seed, "bound": self.bound, "index": self.index}


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple
    provenance: Provenance = Provenance("user_given")

    def __post_init__(self):
        if not any(self.coefficients):
            raise ValueError("a linear form needs a nonzero coefficient")

    def form(self, ctx: RingCtx) -> Form:
        terms = {}
        for i, c in enumerate(self.coefficients):
            e = [0] * ctx.num_vars
            e[i] = 1
            terms[tuple(e)] = c
        return Form(ctx, 1, terms)

    def to_dict(self) -> dict:
        return {"coefficients": [str(c) for c in self.coefficients], "provenance": self.provenance.to_dict()}


def as_linear_form(L, ctx: RingCtx) -> LinearForm:
    if isinstance(L, LinearForm):
        return L
    if isinstance(L, Form):
        if L.degree != 1:
            raise ValueError("not a linear form")
        return LinearForm(tuple(L.coefficient(_unit(ctx.num_vars, i)) for i in range(ctx.num_vars)))
    return LinearForm(tuple(ctx.field.coerce(c) for c in L))


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


def projective_form_count(ctx: RingCtx) -> int | None:
    p = ctx.field.modulus
    if p is None:
        return None
    return (p ** ctx.num_vars - 1) // (p - 1)


def projective_forms(ctx: RingCtx) -> list[LinearForm]:
    """Every linear form up to scaling: first nonzero coefficient equal to 1."""
    p = ctx.field.modulus
    n = ctx.num_vars
    out = []
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            out.append(LinearForm(coeffs, Provenance("exhaustive", index=len(out))))
    return out


def use_exhaustive(ctx: RingCtx, exhaustive: bool | None) -> bool:
    count = projective_form_count(ctx)
    if exhaustive is None:
        return count is not None and count <= EXHAUSTIVE_LIMIT
    if exhaustive and count is None:
        raise ValueError("exhaustive enumeration needs a finite field")
    return bool(exhaustive)


def sample_general_forms(
    ctx: RingCtx,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
    num_samples: int = DEFAULT_SAMPLES,
    exhaustive: bool | None = None,
) -> list[LinearForm]:
    if num_samples < 1:
        raise ValueError("num_samples must be at least 1")
    if use_exhaustive(ctx, exhaustive):
        return projective_forms(ctx)
    out = []
    for k in range(num_samples):
        rng = random.Random(seed + k)
        coeffs = tuple(random_scalar(ctx.field, rng, bound).value for _ in range(ctx.num_vars))
        out.append(LinearForm(coeffs, Provenance("sampled", seed, bound, k)))
    return out


# ---------------------------------------------------------------------------


@dataclass
class MultiplicationMap:
    """Matrix of ``x L^power : A_d -> A_{d+power}`` in standard-monomial coordinates.

    ``matrix`` has one row per target basis element and one column per source one.
    """

    source_degree: int
    power: int
    linear_form: LinearForm
    source_basis: tuple
    target_basis: tuple
    matrix: list
    rank: int

    def kernel(self, field) -> list[list]:
        if not self.source_basis:
            return []
        if not self.target_basis:
            return [[1 if i == j else 0 for i in range(len(self.source_basis))]
                    for j in range(len(self.source_basis))]
        return kernel_basis(field, self.matrix, len(self.source_basis))


def mult_map(A: QuotientAlgebra, L, d: int, s: int = 1) -> MultiplicationMap:
    if d < 0 or s < 1:
        raise ValueError("need d >= 0 and s >= 1")
    ctx = A.ctx
    lf = as_linear_form(L, ctx)
    src = A.quotient_basis(d)
    tgt = A.quotient_basis(d + s)
    if not src or not tgt:
        return MultiplicationMap(d, s, lf, src, tgt, [[0] * len(src) for _ in tgt], 0)
    Ls = lf.form(ctx) ** s
    comp = A.component(d + s)
    table = comp.normal_form_table
    idx = monomial_index(ctx.num_vars, d + s)
    k = len(tgt)
    columns = []
    for m in src:
        pairs = ((c, table[idx[tuple(a + b for a, b in zip(t, m))]]) for t, c in Ls.terms.items())
        columns.append(_combine(ctx.field, pairs, k))
    eb = EchelonBasis(ctx.field, k)
    r = eb.extend(columns)
    matrix = [[col[i] for col in columns] for i in range(k)]
    return MultiplicationMap(d, s, lf, src, tgt, matrix, r)


# ---------------------------------------------------------------------------


@dataclass
class DegreeRow:
    degree: int
    power: int
    h_source: int
    h_target: int
    expected: int
    achieved: int
    inferred: bool = False

    @property
    def mode(self) -> str:
        if self.h_source == self.h_target:
            return "bijective-expected"
        return "injective" if self.h_source < self.h_target else "surjective"

    @property
    def ok(self) -> bool:
        return self.achieved >= self.expected

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "power": self.power,
            "h_source": self.h_source,
            "h_target": self.h_target,
            "expected": self.expected,
            "achieved": self.achieved,
            "mode": self.mode,
            "inferred": self.inferred,
        }


@dataclass
class Witness:
    """A kernel element (injectivity failure) or a cokernel dimension (surjectivity failure)."""

    degree: int
    power: int
    kind: str
    linear_form: LinearForm
    form: Form | None = None
    cokernel_dim: int | None = None

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "power": self.power,
            "kind": self.kind,
            "linear_form": self.linear_form.to_dict(),
            "form": None if self.form is None else str(self.form),
            "cokernel_dim": self.cokernel_dim,
        }


@dataclass
class LefschetzReport:
    property: str
    verdict: str
    hilbert: HilbertSeq
    rows: list
    failing_degrees: list
    witness: Witness | None
    best_form: LinearForm
    sampling: dict
    rank_profile: list = dc_field(default_factory=list)
    shortcut: dict | None = None

    @property
    def holds(self) -> bool:
        return self.verdict in (HAS_WLP, HAS_SLP)

    def row(self, d: int, s: int = 1) -> DegreeRow:
        for r in self.rows:
            if r.degree == d and r.power == s:
                return r
        raise KeyError((d, s))

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "hilbert": list(self.hilbert),
            "rows": [r.to_dict() for r in self.rows],
            "failing_degrees": [list(x) if isinstance(x, tuple) else x for x in self.failing_degrees],
            "witness": None if self.witness is None else self.witness.to_dict(),
            "best_form": self.best_form.to_dict(),
            "sampling": self.sampling,
            "rank_profile": self.rank_profile,
            "shortcut": self.shortcut,
        }


def _sampling_meta(A, forms, seed, bound, exhaustive_mode):
    return {
        "field": str(A.field),
        "mode": "exhaustive" if exhaustive_mode else "sampled",
        "num_samples": len(forms),
        "seed": None if exhaustive_mode else seed,
        "bound": None if exhaustive_mode else bound,
    }


def _make_witness(A, L, d, s) -> Witness:
    mm = mult_map(A, L, d, s)
    hs, ht = A.h(d), A.h(d + s)
    if hs <= ht:
        vec = mm.kernel(A.field)[0]
        if A.field.is_rational:
            vec = _primitive(_integerize(vec))
        return Witness(d, s, "kernel", L, form=A.form_from_coordinates(d, vec))
    return Witness(d, s, "cokernel", L, cokernel_dim=ht - mm.rank)


def verify_witness(A: QuotientAlgebra, w: Witness) -> bool:
    """Independent re-check: ``L^s * w`` lies in I while ``w`` does not (or the
    cokernel dimension matches a fresh rank computation)."""
    if w.kind == "kernel":
        Ls = w.linear_form.form(A.ctx) ** w.power
        if not w.form or A.ideal.contains(w.form):
            return False
        return A.ideal.contains(Ls * w.form)
    mm = mult_map(A, w.linear_form, w.degree, w.power)
    return w.cokernel_dim == A.h(w.degree + w.power) - mm.rank > 0


def _pivotal_degrees(h, e) -> list[int]:
    d0 = next(d for d in range(e + 1) if h.at(d) >= h.at(d + 1))
    return [d for d in (d0 - 1, d0) if 0 <= d <= e - 1]


def wlp_check(
    A: QuotientAlgebra,
    num_samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
    use_level_shortcut: bool = False,
    exhaustive: bool | None = None,
    forms=None,
) -> LefschetzReport:
    """Maximal rank of multiplication by a general linear form in every degree."""
    exhaustive_mode = forms is None and use_exhaustive(A.ctx, exhaustive)
    if forms is None:
        forms = sample_general_forms(A.ctx, seed, bound, num_samples, exhaustive)
    forms = [as_linear_form(L, A.ctx) for L in forms]
    h = A.hilbert
    e = A.socle_degree
    ranks = [dict() for _ in forms]

    def compute(degrees):
        for k, L in enumerate(forms):
            for d in degrees:
                if d not in ranks[k]:
                    ranks[k][d] = mult_map(A, L, d).rank

    all_degrees = list(range(e))
    shortcut = None
    inferred = set()
    if use_level_shortcut and A.classification.is_level:
        pivots = _pivotal_degrees(h, e)
        compute(pivots)
        ok = all(max(r[d] for r in ranks) == min(h.at(d), h.at(d + 1)) for d in pivots)
        shortcut = {"pivotal_degrees": pivots, "fallback_full_scan": not ok}
        if ok:
            inferred = set(all_degrees) - set(pivots)
        else:
            compute(all_degrees)
    else:
        compute(all_degrees)

    rows = []
    for d in all_degrees:
        exp = min(h.at(d), h.at(d + 1))
        if d in inferred:
            rows.append(DegreeRow(d, 1, h.at(d), h.at(d + 1), exp, exp, inferred=True))
        else:
            rows.append(DegreeRow(d, 1, h.at(d), h.at(d + 1), exp, max(r[d] for r in ranks)))
    failing = [r.degree for r in rows if not r.ok]
    best_k = max(range(len(forms)), key=lambda k: (sum(ranks[k].values()), -k))
    best = forms[best_k]
    witness = _make_witness(A, best, failing[0], 1) if failing else None
    profile = []
    if exhaustive_mode:
        profile = [{"coefficients": [str(c) for c in L.coefficients],
                    "ranks": {str(d): r for d, r in sorted(ranks[k].items())}}
                   for k, L in enumerate(forms)]
    return LefschetzReport(
        "WLP",
        FAILS_WLP if failing else HAS_WLP,
        h,
        rows,
        failing,
        witness,
        best,
        _sampling_meta(A, forms, seed, bound, exhaustive_mode),
        profile,
        shortcut,
    )


def slp_check(
    A: QuotientAlgebra,
    num_samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
    exhaustive: bool | None = None,
    forms=None,
) -> LefschetzReport:
    """Maximal rank of every power ``x L^s : A_d -> A_{d+s}`` with ``d + s <= e``."""
    exhaustive_mode = forms is None and use_exhaustive(A.ctx, exhaustive)
    if forms is None:
        forms = sample_general_forms(A.ctx, seed, bound, num_samples, exhaustive)
    forms = [as_linear_form(L, A.ctx) for L in forms]
    h = A.hilbert
    e = A.socle_degree
    pairs = [(d, s) for s in range(1, e + 1) for d in range(0, e - s + 1)]
    ranks = [{(d, s): mult_map(A, L, d, s).rank for d, s in pairs} for L in forms]
    rows = []
    for d, s in pairs:
        exp = min(h.at(d), h.at(d + s))
        rows.append(DegreeRow(d, s, h.at(d), h.at(d + s), exp, max(r[(d, s)] for r in ranks)))
    failing = [(r.degree, r.power) for r in rows if not r.ok]
    best_k = max(range(len(forms)), key=lambda k: (sum(ranks[k].values()), -k))
    best = forms[best_k]
    witness = _make_witness(A, best, *failing[0]) if failing else None
    profile = []
    if exhaustive_mode:
        profile = [{"coefficients": [str(c) for c in L.coefficients],
                    "ranks": {f"{d},{s}": r for (d, s), r in sorted(ranks[k].items())}}
                   for k, L in enumerate(forms)]
    return LefschetzReport(
        "SLP",
        FAILS_SLP if failing else HAS_SLP,
        h,
        rows,
        failing,
        witness,
        best,
        _sampling_meta(A, forms, seed, bound, exhaustive_mode),
        profile,
    )


def quotient_by_linear_hf(A: QuotientAlgebra, L) -> HilbertSeq:
    """Hilbert function of ``R/(I, L)``."""
    lf = as_linear_form(L, A.ctx)
    return hilbert_function(ideal_plus_form(A.ideal, lf.form(A.ctx)), A.cap)


# ---------------------------------------------------------------------------


@dataclass
class GcdCriterionResult:
    a: int
    b: int
    dim_quotient_b: int
    gcd_degree: int
    gcd: Form
    criterion_consistent: bool

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "dim_quotient_b": self.dim_quotient_b,
            "gcd_degree": self.gcd_degree,
            "gcd": str(self.gcd),
            "criterion_consistent": self.criterion_consistent,
        }


def gcd_criterion_check(J: GradedIdeal, L, allow_positive_characteristic: bool = False) -> GcdCriterionResult:
    """Compare ``dim [R/(J,L)]_b`` with the degree of ``gcd(F, G1, G2)``.

    In characteristic 0, with three minimal generators of degrees a <= b = b,
    the dimension is a-1 exactly when the GCD has degree a-1 and a-2 otherwise.
    """
    ctx = J.ctx
    if ctx.field.characteristic != 0 and not allow_positive_characteristic:
        raise CharNotZero("the GCD criterion is stated in characteristic 0")
    gens = sorted(J.generators, key=lambda g: g.degree)
    if len(gens) != 3:
        raise WrongShape("need exactly three generators F, G1, G2")
    F, G1, G2 = gens
    a, b = F.degree, G1.degree
    if a < 2 or G2.degree != b or b < a:
        raise WrongShape("need deg F = a >= 2 and deg G1 = deg G2 = b >= a")
    count = sum(J.minimal_generator_count(d) for d in range(b + 1))
    if count != 3:
        raise WrongShape(f"ideal has {count} minimal generators, not 3")
    lf = as_linear_form(L, ctx)
    plus = ideal_plus_form(J, lf.form(ctx))
    dim_b = num_monomials(ctx.num_vars, b) - plus.component(b).rank
    g = gcd_forms([F, G1, G2])
    expected = a - 1 if g.degree == a - 1 else a - 2
    return GcdCriterionResult(a, b, dim_b, g.degree, g, dim_b == expected)
