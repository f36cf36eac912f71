"""Catalog of named algebras with their expected invariants.

Every record is stored as text (ring plus ideal or dual generators) so that
``run_example`` rebuilds it from scratch and compares each invariant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field, replace

from .errors import UnknownExample
from .inverse import (
    DualModule,
    HilbertConstraint,
    algebra_from_dual,
    derivative_span,
    random_gorenstein_constrained,
)
from .lefschetz import DEFAULT_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED, mult_map, sample_general_forms, wlp_check
from .parsing import parse_generators, parse_ring
from .polyring import RingCtx
from .quotient import QuotientAlgebra, check_exact_sequence


@dataclass(frozen=True)
class ExampleRecord:
    name: str
    ring: str
    kind: str  # "ideal" or "dual"
    generators: tuple
    hilbert: tuple
    is_level: bool
    is_gorenstein: bool
    type: int
    wlp: str
    failing_degrees: tuple = ()
    convention: str = "contraction"  # for duals: "contraction" or "derivative"
    anchor: str = ""

    def build(self, cap: int = 64) -> QuotientAlgebra:
        ctx = parse_ring(self.ring)
        gens = parse_generators(ctx, ", ".join(self.generators))
        if self.kind == "ideal":
            return QuotientAlgebra.from_generators(ctx, gens, cap)
        if self.convention == "derivative":
            M = DualModule.from_derivative_generators(ctx, gens)
        else:
            M = DualModule(ctx, gens)
        return algebra_from_dual(M, cap)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ring": self.ring,
            "kind": self.kind,
            "generators": list(self.generators),
            "convention": self.convention if self.kind == "dual" else None,
            "hilbert": list(self.hilbert),
            "is_level": self.is_level,
            "is_gorenstein": self.is_gorenstein,
            "type": self.type,
            "wlp": self.wlp,
            "failing_degrees": list(self.failing_degrees),
            "anchor": self.anchor,
        }


def _socle_degree_two(r: int) -> ExampleRecord:
    gens = ["y1^2", "y1*y2", "y2^2", "y3*y4"] + [f"y{i}^2" for i in range(5, r + 1)]
    ring = "QQ[" + ",".join(f"y{i}" for i in range(1, r + 1)) + "]"
    return ExampleRecord(
        f"socle-degree-two-r{r}",
        ring,
        "dual",
        tuple(gens),
        (1, r, r),
        True,
        False,
        r,
        "fails_wlp",
        (1,),
        anchor=f"level algebra with Hilbert function (1,{r},{r}); kernel element a3*x3 - a4*x4 from degree 1",
    )


_CATALOG = (
    ExampleRecord(
        "brenner-kaid",
        "QQ[x1,x2,x3]",
        "ideal",
        ("x1^3", "x2^3", "x3^3", "x1*x2*x3"),
        (1, 3, 6, 6, 3),
        True,
        False,
        3,
        "fails_wlp",
        (2,),
        anchor="cubes plus x1*x2*x3; level of type 3; WLP fails from degree 2 to 3",
    ),
    ExampleRecord(
        "brenner-kaid-dual",
        "QQ[y1,y2,y3]",
        "dual",
        ("y1^2*y2^2", "y2^2*y3^2", "y1^2*y3^2"),
        (1, 3, 6, 6, 3),
        True,
        False,
        3,
        "fails_wlp",
        (2,),
        anchor="inverse system of the cubes-plus-x1*x2*x3 ideal",
    ),
    ExampleRecord(
        "level-13662",
        "QQ[y1,y2,y3]",
        "dual",
        ("y1^2*y2^2 + y1^2*y3^2", "y1^2*y2^2 + y2^2*y3^2"),
        (1, 3, 6, 6, 2),
        True,
        False,
        2,
        "fails_wlp",
        (2,),
        anchor="type-2 subsystem of the Brenner-Kaid dual with the same degree-3 part",
    ),
    *(_socle_degree_two(r) for r in (4, 5, 6, 7)),
    ExampleRecord(
        "ci-squares-qq",
        "QQ[x1,x2,x3]",
        "ideal",
        ("x1^2", "x2^2", "x3^2"),
        (1, 3, 3, 1),
        True,
        True,
        1,
        "has_wlp",
        (),
        anchor="complete intersection of squares in characteristic 0",
    ),
    ExampleRecord(
        "ci-squares-gf2",
        "GF(2)[x1,x2,x3]",
        "ideal",
        ("x1^2", "x2^2", "x3^2"),
        (1, 3, 3, 1),
        True,
        True,
        1,
        "fails_wlp",
        (1,),
        anchor="complete intersection of squares in characteristic 2; every linear form squares into the ideal",
    ),
    ExampleRecord(
        "codim4-type2",
        "QQ[y1,y2,y3,y4]",
        "dual",
        ("y1^2*y2^2 + y1^2*y3^2 + y4^4", "y1^2*y2^2 + y2^2*y3^2 + y4^4"),
        (1, 4, 7, 7, 2),
        True,
        False,
        2,
        "fails_wlp",
        (2,),
        convention="derivative",
        anchor="codimension 4 type 2 level algebra without WLP",
    ),
    ExampleRecord(
        "codim3-type4",
        "QQ[y1,y2,y3]",
        "dual",
        (
            "y1^2*y3^5 - y1*y3^6",
            "y1^3*y3^4 - y1^5*y3^2",
            "437*y1^7 - 232*y1^6*y2 - 423*y1^5*y2^2 - 567*y1^4*y2^3 - 769*y1^3*y2^4"
            " + 831*y1^2*y2^5 - 916*y1*y2^6 - 202*y2^7",
            "(127*y1 - 548*y2 - 943*y3)^7",
        ),
        (1, 3, 6, 8, 10, 10, 7, 4),
        True,
        False,
        4,
        "fails_wlp",
        (4,),
        convention="derivative",
        anchor="codimension 3 type 4 level algebra of socle degree 7 without WLP",
    ),
    ExampleRecord(
        "monomial-level-1355",
        "QQ[y1,y2,y3]",
        "dual",
        ("y1^3", "y1^2*y2", "y1*y2^2", "y1*y2*y3", "y2^3"),
        (1, 3, 5, 5),
        True,
        False,
        5,
        "fails_wlp",
        (2,),
        anchor="monomial level algebra with Hilbert function (1,3,5,5) without WLP (found by search)",
    ),
)


def catalog() -> tuple:
    return _CATALOG


def get_record(name: str) -> ExampleRecord:
    for rec in _CATALOG:
        if rec.name == name:
            return rec
    raise UnknownExample(name)


@dataclass
class ExampleResult:
    name: str
    passed: bool
    diff: dict
    computed: dict
    sampling: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "diff": {k: {"expected": e, "computed": c} for k, (e, c) in sorted(self.diff.items())},
            "computed": self.computed,
            "sampling": self.sampling,
        }


def run_record(
    rec: ExampleRecord,
    num_samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = DEFAULT_BOUND,
) -> ExampleResult:
    A = rec.build()
    cls = A.classification
    report = wlp_check(A, num_samples=num_samples, seed=seed, bound=bound)
    computed = {
        "hilbert": list(A.hilbert),
        "is_level": cls.is_level,
        "is_gorenstein": cls.is_gorenstein,
        "type": cls.type,
        "wlp": report.verdict,
        "failing_degrees": list(report.failing_degrees),
    }
    expected = {
        "hilbert": list(rec.hilbert),
        "is_level": rec.is_level,
        "is_gorenstein": rec.is_gorenstein,
        "type": rec.type,
        "wlp": rec.wlp,
        "failing_degrees": list(rec.failing_degrees),
    }
    diff = {k: (expected[k], computed[k]) for k in expected if expected[k] != computed[k]}
    return ExampleResult(rec.name, not diff, diff, computed, report.sampling)


def run_example(name: str, **opts) -> ExampleResult:
    return run_record(get_record(name), **opts)


def run_all(**opts) -> list[ExampleResult]:
    return [run_record(rec, **opts) for rec in _CATALOG]


def corrupted(rec: ExampleRecord, **changes) -> ExampleRecord:
    """Copy of a record with altered expectations (harness self-test)."""
    return replace(rec, **changes)


# ---------------------------------------------------------------------------
# specific checks


def degree_three_spans_agree() -> bool:
    """The type-2 dual and the Brenner-Kaid dual have the same degree-3 part."""
    A = get_record("level-13662")
    B = get_record("brenner-kaid-dual")
    ctx = parse_ring(A.ring)
    M = DualModule(ctx, parse_generators(ctx, ", ".join(A.generators)))
    N = DualModule(ctx, parse_generators(ctx, ", ".join(B.generators)))
    return derivative_span(M, 3).same_span(derivative_span(N, 3)) and derivative_span(M, 3).rank == 6


@dataclass
class KernelWitnessCheck:
    r: int
    coefficients: tuple
    in_kernel: bool
    nonzero: bool
    rank_deficient: bool

    @property
    def ok(self) -> bool:
        return self.in_kernel and self.nonzero and self.rank_deficient


def socle_degree_two_witnesses(r: int, num_samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                               bound: int = DEFAULT_BOUND) -> list[KernelWitnessCheck]:
    """For each sampled L = sum a_i x_i, check that a3*x3 - a4*x4 is killed by L."""
    A = get_record(f"socle-degree-two-r{r}").build()
    out = []
    for L in sample_general_forms(A.ctx, seed, bound, num_samples):
        a = L.coefficients
        x = A.ctx.gens()
        w = x[2].scale(a[2]) - x[3].scale(a[3])
        prod = L.form(A.ctx) * w
        deficient = mult_map(A, L, 1).rank < A.h(1)
        out.append(KernelWitnessCheck(r, a, A.ideal.contains(prod), not A.ideal.contains(w), deficient))
    return out


CASE_ONE_SEED = 0


def case_one_algebra(seed: int = CASE_ONE_SEED) -> QuotientAlgebra:
    """A Gorenstein algebra with Hilbert function (1,3,6,8,6,3,1): two cubics forced into Ann(F)."""
    return random_gorenstein_constrained(RingCtx(3), 6, HilbertConstraint(3, 8), random.Random(seed))


def case_one_table(seed: int = CASE_ONE_SEED, num_samples: int = DEFAULT_SAMPLES,
                   sample_seed: int = DEFAULT_SEED):
    """Exact-sequence rows for the case-one algebra and its max-rank linear form."""
    A = case_one_algebra(seed)
    report = wlp_check(A, num_samples=num_samples, seed=sample_seed)
    L = report.best_form.form(A.ctx)
    return A, report, check_exact_sequence(A.ideal, L)
