"""Randomized checks of the WLP theorems on Gorenstein and level algebras.

Each trial draws its instance from ``random.Random(trial_seed(seed, i))``, so
a report depends only on ``(trials, seed)``.  With ``workers > 1`` trials run
in a process pool and are reassembled in trial order, giving the same report
as a serial run.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .bounds import is_si_sequence
from .corpus import get_record, socle_degree_two_witnesses
from .errors import ConstraintUnsatisfied
from .inverse import (
    DualModule,
    HilbertConstraint,
    algebra_from_dual,
    apolar_kernel,
    derivative_span,
    random_gorenstein,
    random_gorenstein_constrained,
    random_level,
)
from .lefschetz import wlp_check
from .parsing import parse_generators, parse_ring
from .polyring import Form, RingCtx, monomial_basis, num_monomials

SCHEMA = "lefkit.experiment/1"


def trial_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


@dataclass
class ExperimentReport:
    name: str
    trials: int
    seed: int
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    expect_failures: bool = False
    counterexample: dict | None = None
    records: list = dc_field(default_factory=list)
    coverage: dict = dc_field(default_factory=dict)
    subreports: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        """All trials matched the expected outcome (subreports included)."""
        mine = self.failed == 0
        return mine and all(r.ok for r in self.subreports)

    def add(self, record: dict):
        self.records.append(record)
        outcome = record["outcome"]
        if outcome == "pass":
            self.passed += 1
        elif outcome == "skip":
            self.skipped += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = record

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "name": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "expect_failures": self.expect_failures,
            "ok": self.ok,
            "counterexample": self.counterexample,
            "coverage": self.coverage,
            "records": self.records,
            "subreports": [r.to_dict() for r in self.subreports],
        }


def _dump(A) -> dict:
    """Re-runnable description of an algebra built from an inverse system."""
    M = A.dual
    return {
        "ring": str(M.ctx),
        "dual_generators": [str(g) for g in M.generators],
        "convention": "contraction",
    }


def rerun_dump(dump: dict, **wlp_opts):
    ctx = parse_ring(dump["ring"])
    A = algebra_from_dual(DualModule(ctx, parse_generators(ctx, ", ".join(dump["dual_generators"]))))
    return A, wlp_check(A, **wlp_opts)


def _wlp_record(A, index, tseed, extra=None) -> dict:
    report = wlp_check(A)
    rec = {
        "trial": index,
        "trial_seed": tseed,
        "hilbert": list(A.hilbert),
        "verdict": report.verdict,
        "failing_degrees": list(report.failing_degrees),
        "outcome": "pass" if report.holds else "fail",
    }
    if extra:
        rec.update(extra)
    if not report.holds:
        rec["algebra"] = _dump(A)
    return rec


def _run(fn, args_list, workers: int):
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, args_list))
    return [fn(a) for a in args_list]


# ---------------------------------------------------------------------------
# initial degree two


def _init_deg2_trial(args) -> dict:
    i, tseed, e_max = args
    rng = random.Random(tseed)
    e = rng.randint(3, e_max)
    try:
        A = random_gorenstein_constrained(RingCtx(3), e, HilbertConstraint(2, 5), rng)
    except ConstraintUnsatisfied as exc:
        return {"trial": i, "trial_seed": tseed, "hilbert": [], "outcome": "skip", "reason": str(exc)}
    a = A.initial_degree
    if A.h(1) != 3 or a != 2:
        return {"trial": i, "trial_seed": tseed, "hilbert": list(A.hilbert), "outcome": "skip",
                "reason": f"initial degree {a}, codim {A.h(1)}"}
    return _wlp_record(A, i, tseed, {"socle_degree": e, "initial_degree": a})


def experiment_init_deg2(trials: int = 100, e_max: int = 8, seed: int = 1, workers: int = 1) -> ExperimentReport:
    """Codim-3 Gorenstein algebras with a quadric in the ideal should all have WLP."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 3 <= e_max <= 10:
        raise ValueError("e_max must lie in [3, 10]")
    report = ExperimentReport("init-deg2", trials, seed)
    for rec in _run(_init_deg2_trial, [(i, trial_seed(seed, i), e_max) for i in range(trials)], workers):
        report.add(rec)
    report.coverage = _hf_coverage(report.records)
    return report


# ---------------------------------------------------------------------------
# small h_s


def small_s_hypothesis(h) -> int | None:
    """Smallest s with 3 <= s <= e/2 - 1 and h_s <= 3s - 1, or None."""
    e = len(h) - 1
    for s in range(3, e // 2):
        if 2 * s <= e - 2 and h[s] <= 3 * s - 1:
            return s
    return None


def _small_s_trial(args) -> dict:
    i, tseed = args
    rng = random.Random(tseed)
    e = rng.randint(8, 12)
    try:
        A = random_gorenstein_constrained(RingCtx(3), e, HilbertConstraint(3, 8), rng)
    except ConstraintUnsatisfied as exc:
        return {"trial": i, "trial_seed": tseed, "hilbert": [], "outcome": "skip", "reason": str(exc)}
    s = small_s_hypothesis(A.hilbert)
    si = is_si_sequence(A.hilbert)
    if s is None or A.h(1) != 3:
        return {"trial": i, "trial_seed": tseed, "hilbert": list(A.hilbert), "outcome": "skip",
                "reason": "hypothesis not met", "si_sequence": si}
    return _wlp_record(A, i, tseed, {"socle_degree": e, "s": s, "si_sequence": si})


def experiment_small_s(trials: int = 50, seed: int = 2, workers: int = 1) -> ExperimentReport:
    """Codim-3 Gorenstein algebras with h_s <= 3s - 1 for a small s should all have WLP."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = ExperimentReport("small-s", trials, seed)
    for rec in _run(_small_s_trial, [(i, trial_seed(seed, i)) for i in range(trials)], workers):
        report.add(rec)
    report.coverage = _hf_coverage(report.records)
    return report


# ---------------------------------------------------------------------------
# socle degree bounds


def _hf_coverage(records) -> dict:
    counts: dict[str, int] = {}
    for rec in records:
        key = ",".join(map(str, rec["hilbert"]))
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items()))


def _monomial_level_algebras(n: int, e: int, t: int | None = None):
    """All monomial inverse systems of degree e in n variables involving every variable."""
    ctx = RingCtx(n).dual()
    mons = monomial_basis(ctx, e)
    sizes = [t] if t else range(1, len(mons) + 1)
    for k in sizes:
        for sub in itertools.combinations(mons, k):
            if all(any(m[i] for m in sub) for i in range(n)):
                yield algebra_from_dual(DualModule(ctx, [ctx.monomial(m) for m in sub]))


def _socle_a(seed: int, per_type: int) -> ExperimentReport:
    rep = ExperimentReport("socle-bounds/a", 0, seed)
    ctx = RingCtx(3)
    k = 0
    for e in (1, 2):
        for t in range(1, num_monomials(3, e) + 1):
            for _ in range(per_type):
                tseed = trial_seed(seed, k)
                A = random_level(ctx, e, t, random.Random(tseed))
                if A.h(1) != 3:
                    rep.add({"trial": k, "trial_seed": tseed, "hilbert": list(A.hilbert), "outcome": "skip"})
                else:
                    rep.add(_wlp_record(A, k, tseed, {"source": "random_level", "type": t}))
                k += 1
    for e in (1, 2):
        for A in _monomial_level_algebras(3, e):
            rep.add(_wlp_record(A, k, None, {"source": "monomial"}))
            k += 1
    # codimension two, finite range of socle degrees only
    ctx2 = RingCtx(2)
    for e in range(1, 7):
        for t in range(1, min(e + 1, 3) + 1):
            tseed = trial_seed(seed, k)
            A = random_level(ctx2, e, t, random.Random(tseed))
            rep.add(_wlp_record(A, k, tseed, {"source": "codim2", "type": t}))
            k += 1
    rep.trials = k
    rep.coverage = _hf_coverage(rep.records)
    return rep


def _random_type_two(rng: random.Random, forced: int):
    """Two random cubic duals annihilated by ``forced`` random quadrics."""
    dctx = RingCtx(3).dual()
    pctx = dctx.dual("x")
    qs = []
    for _ in range(forced):
        qs.append(Form(pctx, 2, {m: rng.randint(-9, 9) for m in monomial_basis(pctx, 2)}))
    kernel = apolar_kernel(pctx, qs, 3) if qs else [
        [1 if i == j else 0 for i in range(10)] for j in range(10)
    ]
    if len(kernel) < 2:
        return None
    gens = []
    for _ in range(2):
        vec = [0] * 10
        for kv in kernel:
            c = rng.randint(-999, 999)
            vec = [a + c * b for a, b in zip(vec, kv)]
        gens.append(Form.from_vector(dctx, 3, vec))
    if any(not g for g in gens):
        return None
    M = DualModule(dctx, gens)
    if derivative_span(M, 3).rank != 2:
        return None
    return algebra_from_dual(M)


def _socle_b(seed: int, per_shape: int) -> ExperimentReport:
    rep = ExperimentReport("socle-bounds/b", 0, seed)
    k = 0
    ctx = RingCtx(3)
    for e in (2, 3):
        for _ in range(per_shape):
            tseed = trial_seed(seed, k)
            A = random_level(ctx, e, 2, random.Random(tseed))
            rep.add(_wlp_record(A, k, tseed, {"source": "random_level"}) if A.h(1) == 3 else
                    {"trial": k, "trial_seed": tseed, "hilbert": list(A.hilbert), "outcome": "skip"})
            k += 1
    for forced in (1, 2, 3):
        for _ in range(per_shape):
            tseed = trial_seed(seed, k)
            A = _random_type_two(random.Random(tseed), forced)
            if A is None or A.h(1) != 3:
                rep.add({"trial": k, "trial_seed": tseed, "hilbert": [] if A is None else list(A.hilbert),
                         "outcome": "skip", "reason": "degenerate draw"})
            else:
                rep.add(_wlp_record(A, k, tseed, {"source": "forced_quadrics", "forced": forced}))
            k += 1
    for e in (2, 3):
        for A in _monomial_level_algebras(3, e, 2):
            rep.add(_wlp_record(A, k, None, {"source": "monomial"}))
            k += 1
    rep.trials = k
    rep.coverage = _hf_coverage([r for r in rep.records if r["outcome"] != "skip"])
    wanted = [f"1,3,{a},2" for a in range(3, 7)]
    rep.coverage["missing_type_two_shapes"] = [w for w in wanted if w not in rep.coverage]
    # these shapes admit no level algebra; seeing one would be a bug
    rep.coverage["impossible_shapes_seen"] = [w for w in ("1,3,1,2", "1,3,2,2") if w in rep.coverage]
    if rep.coverage["impossible_shapes_seen"]:
        rep.failed += 1
    return rep


def _socle_c(seed: int) -> ExperimentReport:
    """Sharpness records: each must fail WLP."""
    rep = ExperimentReport("socle-bounds/c", 0, seed, expect_failures=True)
    names = ["monomial-level-1355"] + [f"socle-degree-two-r{r}" for r in (4, 5, 6, 7)]
    for k, name in enumerate(names):
        A = get_record(name).build()
        report = wlp_check(A)
        rec = {"trial": k, "name": name, "hilbert": list(A.hilbert), "verdict": report.verdict,
               "failing_degrees": list(report.failing_degrees),
               "outcome": "pass" if not report.holds else "fail"}
        if name.startswith("socle-degree-two"):
            checks = socle_degree_two_witnesses(int(name.rsplit("r", 1)[1]))
            rec["explicit_witness_ok"] = all(c.ok for c in checks)
            if not rec["explicit_witness_ok"]:
                rec["outcome"] = "fail"
        rep.add(rec)
    rep.trials = len(names)
    return rep


def experiment_socle_bounds(seed: int = 3, per_type: int = 3) -> ExperimentReport:
    """(a) socle degree <= 2 level algebras have WLP; (b) type-2 level with e <= 3 have WLP;
    (c) the sharpness records fail."""
    report = ExperimentReport("socle-bounds", 0, seed)
    report.subreports = [_socle_a(seed, per_type), _socle_b(seed, per_type), _socle_c(seed)]
    report.trials = sum(r.trials for r in report.subreports)
    return report


# ---------------------------------------------------------------------------
# open question probe


def _probe_trial(args) -> dict:
    i, tseed, e = args
    A = random_gorenstein(RingCtx(3), e, random.Random(tseed))
    return _wlp_record(A, i, tseed, {"si_sequence": is_si_sequence(A.hilbert)})


def probe_open_question(trials: int = 20, e: int = 6, seed: int = 4, workers: int = 1) -> ExperimentReport:
    """Unconstrained random codim-3 Gorenstein algebras; a failure would be dumped, not raised."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = ExperimentReport("probe", trials, seed)
    for rec in _run(_probe_trial, [(i, trial_seed(seed, i), e) for i in range(trials)], workers):
        report.add(rec)
    report.coverage = _hf_coverage(report.records)
    return report


EXPERIMENTS = {
    "init-deg2": experiment_init_deg2,
    "small-s": experiment_small_s,
    "socle-bounds": experiment_socle_bounds,
    "probe": probe_open_question,
}
