"""Command-line frontend.

Exit codes: 0 success (verdicts live in the output), 1 usage or parse error,
2 computation error, 3 example or experiment mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds
from .corpus import catalog, get_record, run_record
from .errors import LefkitError, NonPrimeModulus, ParseError, UnknownExample
from .experiments import EXPERIMENTS
from .inverse import DualModule, algebra_from_dual, annihilator_component, dual_hilbert
from .lefschetz import (
    DEFAULT_BOUND,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    LinearForm,
    gcd_criterion_check,
    slp_check,
    wlp_check,
)
from .parsing import parse_generators, parse_ring
from .quotient import DEFAULT_CAP, GradedIdeal, QuotientAlgebra, check_exact_sequence

SCHEMA_VERSION = "lefkit/1"

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")


# ---------------------------------------------------------------------------
# text rendering


def _table(rows: list[tuple]) -> str:
    """Rows of (label, values...) aligned column-wise."""
    cells = [[str(label)] + ["." if v is None else str(v) for v in vals] for label, *vals in rows]
    width = max(len(c) for row in cells for c in row[1:]) if any(len(r) > 1 for r in cells) else 1
    lw = max(len(r[0]) for r in cells)
    return "\n".join(r[0].ljust(lw) + "  " + " ".join(c.rjust(width) for c in r[1:]) for r in cells)


def _render_hilbert(res: dict) -> str:
    h = res["hilbert"]
    lines = [f"ring: {res['ring']}", _table([("deg", *range(len(h))), ("h", *h)])]
    cls = res.get("classification")
    if cls:
        lines.append(
            f"codim {cls['codim']}, initial degree {cls['initial_degree']}, socle degree {cls['socle_degree']}, "
            f"level {cls['is_level']}, gorenstein {cls['is_gorenstein']}, type {cls['type']}"
        )
        lines.append("socle dims: " + " ".join(map(str, cls["socle_dims"])))
    if "generator_degrees" in res:
        lines.append("minimal generators per degree: "
                     + ", ".join(f"{d}:{c}" for d, c in sorted(res["generator_degrees"].items(), key=lambda x: int(x[0]))))
    return "\n".join(lines)


def _render_lefschetz(res: dict) -> str:
    rep = res["report"]
    lines = [f"ring: {res['ring']}", f"hilbert: {tuple(rep['hilbert'])}", f"verdict: {rep['verdict']}"]
    rows = [("deg", "pow", "h_src", "h_tgt", "expected", "achieved", "mode")]
    for r in rep["rows"]:
        rows.append((r["degree"], r["power"], r["h_source"], r["h_target"], r["expected"],
                     str(r["achieved"]) + ("*" if r["inferred"] else ""), r["mode"]))
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(row, widths)))
    if any(r["inferred"] for r in rep["rows"]):
        lines.append("(* inferred from the pivotal degrees)")
    if rep["failing_degrees"]:
        lines.append("failing degrees: " + ", ".join(
            f"{d}->{d + 1}" if isinstance(d, int) else f"{d[0]}->{d[0] + d[1]} (power {d[1]})"
            for d in rep["failing_degrees"]))
    w = rep["witness"]
    if w:
        L = " ".join(w["linear_form"]["coefficients"])
        if w["kind"] == "kernel":
            lines.append(f"witness (kernel of L = [{L}]): {w['form']}")
        else:
            lines.append(f"witness (cokernel of L = [{L}]): dimension {w['cokernel_dim']}")
    s = rep["sampling"]
    lines.append(f"sampling: {s['mode']}, {s['num_samples']} forms over {s['field']}"
                 + (f", seed {s['seed']}, bound {s['bound']}" if s["mode"] == "sampled" else ""))
    seq = res.get("sequence")
    if seq:
        lines.append("")
        lines.append(_table([
            ("deg", *seq["deg"]),
            ("h_{R/I}", *seq["h_quotient"]),
            ("h_{R/(I,L)}", *seq["h_plus"]),
            ("h_{R/(I:L)}(-1)", *seq["h_colon_shifted"]),
        ]))
    return "\n".join(lines)


def _render_generic(res) -> str:
    return json.dumps(res, indent=2, sort_keys=True, default=str)


def emit_report(result: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        payload = {"schema": SCHEMA_VERSION, **result}
        out.write(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
        return
    kind = result.get("command")
    if kind in ("hilbert", "socle"):
        text = _render_hilbert(result)
    elif kind in ("wlp", "slp"):
        text = _render_lefschetz(result)
    elif "text" in result:
        text = result["text"]
    else:
        text = _render_generic(result)
    out.write(text + "\n")


# ---------------------------------------------------------------------------
# building algebras from arguments


def _ideal(args):
    ctx = parse_ring(args.ring)
    gens = parse_generators(ctx, args.ideal)
    return ctx, gens


def _algebra(args) -> QuotientAlgebra:
    if getattr(args, "dual", None):
        ctx = parse_ring(args.ring)
        gens = parse_generators(ctx, args.dual)
        M = DualModule.from_derivative_generators(ctx, gens) if args.derivative else DualModule(ctx, gens)
        return algebra_from_dual(M, args.cap)
    if not args.ideal:
        raise UsageError("one of --ideal or --dual is required")
    ctx, gens = _ideal(args)
    return QuotientAlgebra.from_generators(ctx, gens, args.cap)


def _generator_degrees(A: QuotientAlgebra) -> dict:
    out = {}
    for d in range(A.socle_degree + 2):
        c = A.ideal.minimal_generator_count(d)
        if c:
            out[str(d)] = c
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_hilbert(args) -> tuple[dict, int]:
    A = _algebra(args)
    res = {
        "command": args.command,
        "ring": str(A.ctx),
        "hilbert": list(A.hilbert),
        "classification": A.classification.to_dict(),
        "generator_degrees": _generator_degrees(A),
    }
    return res, EXIT_OK


def _sampling_opts(args) -> dict:
    return {"num_samples": args.samples, "seed": args.seed, "bound": args.bound,
            "exhaustive": True if args.exhaustive else None}


def cmd_wlp(args) -> tuple[dict, int]:
    A = _algebra(args)
    opts = _sampling_opts(args)
    if args.command == "wlp":
        report = wlp_check(A, use_level_shortcut=args.level_shortcut, **opts)
    else:
        report = slp_check(A, **opts)
    res = {"command": args.command, "ring": str(A.ctx), "report": report.to_dict()}
    if args.command == "wlp" and A.socle_degree >= 1:
        seq = check_exact_sequence(A.ideal, report.best_form.form(A.ctx), args.cap)
        res["sequence"] = seq.rows(A.socle_degree + 1)
        res["sequence"]["identity_holds"] = seq.holds
    return res, EXIT_OK


def cmd_dual(args) -> tuple[dict, int]:
    ctx = parse_ring(args.ring)
    gens = parse_generators(ctx, args.gens)
    M = DualModule.from_derivative_generators(ctx, gens) if args.derivative else DualModule(ctx, gens)
    A = algebra_from_dual(M, args.cap)
    res = {
        "command": "dual",
        "ring": str(ctx),
        "dual_hilbert": list(dual_hilbert(M)),
        "classification": A.classification.to_dict(),
    }
    if args.annihilator:
        res["annihilator_generators"] = [str(g) for g in A.ideal.generators]
        res["annihilator_ring"] = str(A.ctx)
    if args.wlp:
        res["wlp"] = wlp_check(A, **_sampling_opts(args)).to_dict()
    lines = [f"ring: {ctx}", "dual hilbert: " + str(tuple(res["dual_hilbert"]))]
    cls = res["classification"]
    lines.append(f"level {cls['is_level']}, type {cls['type']}, gorenstein {cls['is_gorenstein']}")
    if args.annihilator:
        lines.append(f"annihilator in {A.ctx}:")
        lines += ["  " + g for g in res["annihilator_generators"]]
    if args.wlp:
        w = res["wlp"]
        lines.append(f"wlp: {w['verdict']}" + (f" (failing degrees {w['failing_degrees']})" if w["failing_degrees"] else ""))
    res["text"] = "\n".join(lines)
    return res, EXIT_OK


def cmd_bounds(args) -> tuple[dict, int]:
    n, d = args.n, args.d
    if args.which == "macaulay":
        value = bounds.macaulay_bound(n, d)
    elif args.which == "green":
        value = bounds.green_bound(n, d)
    elif args.which == "gotzmann":
        value = bounds.gotzmann_growth(n, d, args.s if args.s is not None else 1)
    elif args.which == "expansion":
        value = None
    else:
        if args.s is None or args.b is None:
            raise UsageError("shift needs both a and b (positional s and --b)")
        value = bounds.expansion_shift(bounds.binomial_expansion(n, d), args.s, args.b) if n > 0 else 0
    exp = bounds.binomial_expansion(n, d) if n > 0 else None
    res = {
        "command": "bounds",
        "which": args.which,
        "n": n,
        "d": d,
        "value": value,
        "expansion": [list(t) for t in exp.terms] if exp else [],
    }
    text = f"{n} = {exp if exp else 0}"
    if value is not None:
        text += f"\n{args.which}: {value}"
    res["text"] = text
    return res, EXIT_OK


def cmd_oseq(args) -> tuple[dict, int]:
    h = bounds.parse_sequence(args.sequence)
    if args.which == "check":
        value = bounds.is_o_sequence(h)
    elif args.which == "si":
        value = bounds.is_si_sequence(h)
    elif args.which == "unimodal":
        value = bounds.is_unimodal(h)
    else:
        value = bounds.is_differentiable(h)
    res = {"command": "oseq", "which": args.which, "sequence": list(h), "value": value,
           "first_difference": list(bounds.first_difference(h))}
    res["text"] = f"{args.which} {tuple(h)}: {value}"
    return res, EXIT_OK


def cmd_socle(args) -> tuple[dict, int]:
    return cmd_hilbert(args)


def cmd_examples(args) -> tuple[dict, int]:
    if args.action == "list":
        recs = [r.to_dict() for r in catalog()]
        text = "\n".join(f"{r['name']:<24} {r['ring']:<18} {tuple(r['hilbert'])}  {r['wlp']}" for r in recs)
        return {"command": "examples", "action": "list", "records": recs, "text": text}, EXIT_OK
    if args.action == "run":
        if not args.name:
            raise UsageError("examples run needs a record name")
        results = [run_record(get_record(args.name), **_run_opts(args))]
    else:
        results = [run_record(r, **_run_opts(args)) for r in catalog()]
    out = [r.to_dict() for r in results]
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
        for k, (e, c) in sorted(r.diff.items()):
            lines.append(f"    {k}: expected {e}, computed {c}")
    ok = all(r.passed for r in results)
    res = {"command": "examples", "action": args.action, "results": out, "all_passed": ok, "text": "\n".join(lines)}
    return res, EXIT_OK if ok else EXIT_MISMATCH


def _run_opts(args) -> dict:
    return {"num_samples": args.samples, "seed": args.seed, "bound": args.bound}


def cmd_experiment(args) -> tuple[dict, int]:
    fn = EXPERIMENTS[args.name]
    seed = args.seed
    if args.name == "socle-bounds":
        kwargs = {} if seed is None else {"seed": seed}
    else:
        kwargs = {"workers": args.workers}
        if args.trials is not None:
            kwargs["trials"] = args.trials
        if seed is not None:
            kwargs["seed"] = seed
        if args.name == "init-deg2" and args.e_max is not None:
            kwargs["e_max"] = args.e_max
        if args.name == "probe" and args.e is not None:
            kwargs["e"] = args.e
    report = fn(**kwargs)
    res = {"command": "experiment", "report": report.to_dict()}
    lines = []
    for rep in [report] + report.subreports:
        lines.append(f"{rep.name}: trials {rep.trials}, passed {rep.passed}, failed {rep.failed}, "
                     f"skipped {rep.skipped}, ok {rep.ok}")
        if rep.counterexample:
            lines.append("  first counterexample: " + json.dumps(rep.counterexample, sort_keys=True))
    res["text"] = "\n".join(lines)
    return res, EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_gcd_criterion(args) -> tuple[dict, int]:
    ctx, gens = _ideal(args)
    J = GradedIdeal(ctx, gens)
    if args.L:
        L = LinearForm(tuple(ctx.field.coerce(int(c)) for c in args.L.split(",")))
    else:
        from .lefschetz import sample_general_forms

        L = sample_general_forms(ctx, args.seed, args.bound, 1, exhaustive=False)[0]
    r = gcd_criterion_check(J, L, allow_positive_characteristic=args.allow_positive_characteristic)
    res = {"command": "gcd-criterion", "ring": str(ctx), "linear_form": L.to_dict(), "result": r.to_dict()}
    res["text"] = (f"a={r.a} b={r.b}: dim [R/(J,L)]_b = {r.dim_quotient_b}, gcd degree {r.gcd_degree} "
                   f"(gcd {r.gcd}); criterion consistent: {r.criterion_consistent}")
    return res, EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    seed_default = _env_int("LEFKIT_SEED", DEFAULT_SEED)
    cap_default = _env_int("LEFKIT_CAP", DEFAULT_CAP)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    sampling = _Parser(add_help=False)
    sampling.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sampling.add_argument("--seed", type=int, default=seed_default, help="sampling seed (env LEFKIT_SEED)")
    sampling.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sampling.add_argument("--exhaustive", action="store_true", help="enumerate all linear forms (finite fields)")

    algebra = _Parser(add_help=False)
    algebra.add_argument("--ring", required=True, help='e.g. "QQ[x,y,z]" or "GF(2)[x1,x2,x3]"')
    algebra.add_argument("--ideal", help="comma-separated homogeneous generators")
    algebra.add_argument("--dual", help="comma-separated inverse system generators (in the ring's variables)")
    algebra.add_argument("--derivative", action="store_true",
                         help="dual generators act by differentiation instead of contraction")
    algebra.add_argument("--cap", type=int, default=cap_default, help="degree cap (env LEFKIT_CAP)")

    p = _Parser(prog="lefkit", description="Hilbert functions and Lefschetz properties of artinian algebras")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hilbert", parents=[common, algebra], help="Hilbert function and classification")
    s.set_defaults(func=cmd_hilbert)
    s = sub.add_parser("socle", parents=[common, algebra], help="socle dimensions")
    s.set_defaults(func=cmd_socle)
    s = sub.add_parser("wlp", parents=[common, algebra, sampling], help="Weak Lefschetz check")
    s.add_argument("--level-shortcut", action="store_true")
    s.set_defaults(func=cmd_wlp)
    s = sub.add_parser("slp", parents=[common, algebra, sampling], help="Strong Lefschetz check")
    s.set_defaults(func=cmd_wlp)

    s = sub.add_parser("dual", parents=[common, sampling], help="algebra of an inverse system")
    s.add_argument("--ring", required=True)
    s.add_argument("--gens", required=True)
    s.add_argument("--derivative", action="store_true")
    s.add_argument("--annihilator", action="store_true")
    s.add_argument("--wlp", action="store_true")
    s.add_argument("--cap", type=int, default=cap_default)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("bounds", parents=[common], help="Macaulay / Green / Gotzmann values")
    s.add_argument("which", choices=("macaulay", "green", "gotzmann", "expansion", "shift"))
    s.add_argument("n", type=int)
    s.add_argument("d", type=int)
    s.add_argument("s", type=int, nargs="?", help="steps for gotzmann; a for shift")
    s.add_argument("--b", type=int, help="b for shift")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("oseq", parents=[common], help="predicates on Hilbert sequences")
    s.add_argument("which", choices=("check", "si", "unimodal", "differentiable"))
    s.add_argument("sequence")
    s.set_defaults(func=cmd_oseq)

    s = sub.add_parser("examples", parents=[common, sampling], help="catalog of named examples")
    s.add_argument("action", choices=("list", "run", "run-all"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_examples)

    s = sub.add_parser("experiment", parents=[common], help="randomized theorem checks")
    s.add_argument("name", choices=sorted(EXPERIMENTS))
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--e-max", type=int)
    s.add_argument("--e", type=int)
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("gcd-criterion", parents=[common], help="rank of R/(J,L) against the GCD degree")
    s.add_argument("--ring", required=True)
    s.add_argument("--ideal", required=True)
    s.add_argument("--L", help="comma-separated integer coefficients of L")
    s.add_argument("--seed", type=int, default=seed_default)
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    s.add_argument("--allow-positive-characteristic", action="store_true")
    s.set_defaults(func=cmd_gcd_criterion)
    return p


def main(argv=None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"lefkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        result, code = args.func(args)
    except (UsageError, ParseError, NonPrimeModulus, UnknownExample) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownExample) and exc.args else exc
        print(f"lefkit: error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (LefkitError, ValueError) as exc:
        print(f"lefkit: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    emit_report(result, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
