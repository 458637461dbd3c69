"""Command-line driver for the verification suites.

Subcommands mirror the library: `verify` (cosimplicial identity suites),
`spreadability`, `cohomology`, `braid-check`, `ybe`, and `tl`. Output is a
human-readable summary or, with --format json, a stable machine-readable
report {schema, suite, config, status, checked, witnesses, timings}.

Determinism contract: for a fixed configuration and seed the JSON output is
byte-identical across runs; wall-clock timings are therefore only included
when explicitly requested with --timings. The COSIMPLEX_THREADS environment
variable caps internal parallelism (checks are pure and order-independent;
the sequential order used here is the deterministic reference order).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import braid, cohomology, groups, ncprob, simplicial, tl
from .reports import CheckReport
from .scalars import QQi, scalar

SCHEMA_VERSION = 1

SUITES = {
    "verify": "cosimplicial identity suites (ordinal, tensor, sym, gl, flip, ybe, tl)",
    "spreadability": "moment spreadability of the tensor, TL and table models",
    "cohomology": "cochain complexes of module actions: dd = 0, H^0, H^1",
    "braid-check": "braid relations, shift-word identities, diagram identity",
    "ybe": "set-theoretic Yang-Baxter checks and the induced actions",
    "tl": "Temperley-Lieb relations, Markov trace, unitarity dichotomy",
}


def _parse_q(pair: Sequence[str]) -> QQi:
    return scalar(Fraction(pair[0]), Fraction(pair[1]))


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("COSIMPLEX_THREADS", "1")))
    except ValueError:
        return 1


def _z3_r(a: int, b: int):
    # a commuting-shift solution: r(a, b) = (b + 1, a - 1) over Z/3
    return ((b + 1) % 3, (a - 1) % 3)


def ordinal_sco(n_max: int) -> simplicial.Sco:
    """The ordinals [n] = {0..n} with the face maps themselves as cofaces."""
    return simplicial.Sco(
        levels=tuple(
            simplicial.Level(tuple(range(n + 1))) for n in range(n_max + 1)
        ),
        coface=lambda n, k, x: simplicial.FaceMap(k, n)(x),
    )


def _build_action(name: str, args: argparse.Namespace) -> braid.BraidAction:
    if name == "flip":
        return braid.flip_action((0, 1), support=args.n_max + 1)
    if name == "ybe-z3":
        return braid.ybe_action(_z3_r, range(3), strands=args.n_max + 2)
    if name == "perm-matrix":
        size = args.n_max + 3
        gens = groups.permutation_matrix_generators(size)
        elems = [g for g in gens[: args.n_max + 1]]
        return groups.matrix_action(gens, elems)
    if name == "burau":
        size = args.n_max + 3
        gens = groups.burau_generators(size, _parse_q(args.q))
        elems = [g for g in gens[: args.n_max + 1]]
        return groups.matrix_action(gens, elems)
    if name == "tl":
        params = tl.TlParams(_parse_q(args.q))
        return tl.tl_conjugation_action(params, args.m)
    raise SystemExit(f"unknown action {name!r}")


# ---------------------------------------------------------------------------
# Suite runners; each returns (reports, config-dict)
# ---------------------------------------------------------------------------

def run_verify(args) -> tuple[list[CheckReport], dict]:
    config = {"example": args.example, "n_max": args.n_max}
    reps: list[CheckReport] = []
    if args.example == "ordinal":
        s = ordinal_sco(args.n_max)
        reps.append(simplicial.sco_verify(s))
        reps.append(simplicial.verify_partial_shifts(simplicial.shifts_from_sco(s, verify=False)))
    elif args.example == "tensor":
        ps = ncprob.tensor_sco(args.dim, [Fraction(w) for w in args.weights], args.n_max)
        config.update({"dim": args.dim, "weights": args.weights})
        reps.append(simplicial.sco_verify(ps.sco))
        reps.append(ncprob.verify_functional_invariance(ps))
    elif args.example == "sym":
        reps.append(simplicial.sco_verify(groups.sym_sco(args.n_max)))
    elif args.example == "gl":
        rng = random.Random(args.seed)
        config["seed"] = args.seed
        reps.append(simplicial.sco_verify(groups.gl_sco(args.n_max, rng)))
    elif args.example in ("flip", "ybe-z3", "tl"):
        action = _build_action(args.example, args)
        if args.example == "tl":
            config.update({"q": args.q, "m": args.m})
        try:
            s = braid.braid_sco_build(action, args.n_max)
        except simplicial.VerificationError as err:
            reps.append(err.report)
        else:
            reps.append(simplicial.sco_verify(s))
    else:
        raise SystemExit(2)
    return reps, config


def run_spreadability(args) -> tuple[list[CheckReport], dict]:
    config = {
        "example": args.example,
        "degree": args.degree,
        "pos_bound": args.pos_bound,
        "star": args.star,
    }
    if args.example == "tensor":
        d = ncprob.tensor_model(args.dim, [Fraction(w) for w in args.weights])
        config.update({"dim": args.dim, "weights": args.weights})
    elif args.example == "tl":
        params = tl.TlParams(_parse_q(args.q))
        d = tl.tl_distribution(params, args.m, args.m0)
        config.update({"q": args.q, "m": args.m, "m0": args.m0})
    elif args.example == "broken-table":
        b = ("b",)
        d = ncprob.table_distribution(
            {
                (ncprob.Factor(0, "b"), ncprob.Factor(1, "b")): scalar(1),
                (ncprob.Factor(1, "b"), ncprob.Factor(2, "b")): scalar(1),
            },
            alphabet=b,
        )
    else:
        raise SystemExit(2)
    if args.star:
        d = ncprob.star_spreadability_mode(d)
    rep = ncprob.spreadability_check(d, args.degree, args.pos_bound, star=args.star)
    return [rep], config


def run_cohomology(args) -> tuple[list[CheckReport], dict]:
    from . import linalg, reports

    config = {"action": args.action, "n_max": args.n_max, "dim": args.dim}
    if args.action == "trivial":
        gens = [linalg.Matrix.identity(args.dim)] * (args.n_max + 2)
    elif args.action == "perm":
        gens = groups.permutation_matrix_generators(args.n_max + 3)
    elif args.action == "burau":
        gens = groups.burau_generators(args.n_max + 3, _parse_q(args.q))
        config["q"] = args.q
    else:
        raise SystemExit(2)
    s = cohomology.module_sco(gens, args.n_max)
    c = cohomology.cochain_complex(s)
    reps = [cohomology.verify_dd_zero(c)]
    table = cohomology.cohomology_table(s)
    h0 = table[0]["dim_H"]
    if h0 != 0:
        reps.append(reports.failed(1, "H^0 is nonzero", {"dim": h0}))
    else:
        reps.append(reports.passed(1))
    if args.n_max >= 2:
        generic, explicit = table[1]["dim_H"], cohomology.h1_explicit(s)
        if generic != explicit:
            reps.append(
                reports.failed(1, "H^1 descriptions disagree", {"generic": generic, "explicit": explicit})
            )
        else:
            reps.append(reports.passed(1))
    config["table"] = table
    return reps, config


def run_braid_check(args) -> tuple[list[CheckReport], dict]:
    from . import reports

    config = {"action": args.action, "n_max": args.n_max}
    if args.action in ("tl", "burau"):
        config["q"] = args.q
    if args.action == "tl":
        config["m"] = args.m
    action = _build_action(args.action, args)
    reps = [braid.verify_braid_relations(action)]
    checked = 0
    for x in action.elements:
        lv = braid.level_of(x, action)
        for n in range(max(lv, 0), args.n_max + 1):
            for big_n in range(1, args.big_n + 1):
                if n + big_n > (action.stabilization_bound or n + big_n):
                    continue
                checked += 1
                if not braid.lemma_power_check(action, x, n, big_n):
                    reps.append(
                        reports.failed(checked, "shift-word identity fails", {"n": n, "N": big_n, "element": x})
                    )
                    return reps, config
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    checked += 1
                    if not braid.diagram_identity_check(action, i, j, n, x):
                        reps.append(
                            reports.failed(checked, "diagram identity fails", {"i": i, "j": j, "n": n})
                        )
                        return reps, config
    reps.append(reports.passed(checked))
    return reps, config


def run_ybe(args) -> tuple[list[CheckReport], dict]:
    from . import reports

    config = {"solution": args.solution, "strands": args.strands}
    if args.solution == "z3":
        r, y = _z3_r, range(3)
    elif args.solution == "swap":
        r, y = (lambda a, b: (b, a)), range(2)
    else:
        raise SystemExit(2)
    ok = braid.ybe_check(r, y)
    size = len(tuple(y)) ** 3
    reps = [reports.passed(size) if ok else reports.failed(size, "Yang-Baxter equation fails", {})]
    if ok:
        reps.append(braid.verify_braid_relations(braid.ybe_action(r, y, args.strands)))
    return reps, config


def run_tl(args) -> tuple[list[CheckReport], dict]:
    from . import reports

    params = tl.TlParams(_parse_q(args.q))
    m = args.m
    config = {"q": args.q, "m": m, "unitary": params.unitary}
    beta_inv = params.beta.inverse()
    checked = 0
    e = {n: tl.e_element(n, params, m) for n in range(1, m)}
    g = {n: tl.g_element(n, params, m) for n in range(1, m)}
    gi = {n: tl.g_inverse(n, params, m) for n in range(1, m)}
    one = tl.tl_one(params, m)

    def fail(desc: str, data: dict) -> tuple[list[CheckReport], dict]:
        return [reports.failed(checked, desc, data)], config

    for n in range(1, m):
        checked += 1
        if e[n] * e[n] != e[n]:
            return fail("e_n^2 != e_n", {"n": n})
        checked += 1
        if g[n] * gi[n] != one:
            return fail("g_n g_n^-1 != 1", {"n": n})
        checked += 1
        if g[n] * g[n] != g[n].scale(tl.Coeff(params.q - scalar(1), scalar(0))) + one.scale(
            tl.Coeff(params.q, scalar(0))
        ):
            return fail("Hecke quadratic fails", {"n": n})
        checked += 1
        if tl.markov_trace(e[n]) != tl.Coeff(beta_inv, scalar(0)):
            return fail("tr(e_n) != 1/beta", {"n": n})
        for k in range(1, m):
            if abs(n - k) == 1:
                checked += 1
                if e[n] * e[k] * e[n] != e[n].scale(tl.Coeff(beta_inv, scalar(0))):
                    return fail("e_n e_k e_n != e_n / beta", {"n": n, "k": k})
            elif abs(n - k) >= 2:
                checked += 1
                if e[n] * e[k] != e[k] * e[n]:
                    return fail("distant e's do not commute", {"n": n, "k": k})
                checked += 1
                if g[n] * g[k] != g[k] * g[n]:
                    return fail("distant g's do not commute", {"n": n, "k": k})
        if n + 1 < m:
            checked += 1
            if g[n] * g[n + 1] * g[n] != g[n + 1] * g[n] * g[n + 1]:
                return fail("g braid relation fails", {"n": n})
    # unitarity dichotomy: g g* = 1 exactly when q lies on the unit circle
    for n in range(1, m):
        checked += 1
        if (g[n] * g[n].adjoint() == one) != params.unitary:
            return fail("unitarity dichotomy violated", {"n": n})
    return [reports.passed(checked)], config


RUNNERS = {
    "verify": run_verify,
    "spreadability": run_spreadability,
    "cohomology": run_cohomology,
    "braid-check": run_braid_check,
    "ybe": run_ybe,
    "tl": run_tl,
}


# ---------------------------------------------------------------------------
# Argument parsing and output
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosimplex",
        description="Exact verification suites for semi-cosimplicial algebra.",
    )
    parser.add_argument("--list", action="store_true", help="enumerate available suites")
    sub = parser.add_subparsers(dest="suite")

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")

    p = sub.add_parser("verify", help=SUITES["verify"])
    p.add_argument("--example", default="ordinal",
                   choices=("ordinal", "tensor", "sym", "gl", "flip", "ybe-z3", "tl"))
    p.add_argument("--n-max", type=int, default=4, dest="n_max")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--weights", nargs="+", default=["1/3", "2/3"])
    p.add_argument("--q", nargs=2, default=("2", "0"), metavar=("RE", "IM"))
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("spreadability", help=SUITES["spreadability"])
    p.add_argument("--example", default="tensor", choices=("tensor", "tl", "broken-table"))
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--pos-bound", type=int, default=3, dest="pos_bound")
    p.add_argument("--star", action="store_true")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--weights", nargs="+", default=["1/3", "2/3"])
    p.add_argument("--q", nargs=2, default=("2", "0"), metavar=("RE", "IM"))
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--m0", type=int, default=1)
    common(p)

    p = sub.add_parser("cohomology", help=SUITES["cohomology"])
    p.add_argument("--action", default="trivial", choices=("trivial", "perm", "burau"))
    p.add_argument("--n-max", type=int, default=4, dest="n_max")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--q", nargs=2, default=("2", "0"), metavar=("RE", "IM"))
    common(p)

    p = sub.add_parser("braid-check", help=SUITES["braid-check"])
    p.add_argument("--action", default="flip",
                   choices=("flip", "ybe-z3", "perm-matrix", "burau", "tl"))
    p.add_argument("--n-max", type=int, default=3, dest="n_max")
    p.add_argument("--big-n", type=int, default=4, dest="big_n", help="max shift power N")
    p.add_argument("--q", nargs=2, default=("2", "0"), metavar=("RE", "IM"))
    p.add_argument("--m", type=int, default=6)
    common(p)

    p = sub.add_parser("ybe", help=SUITES["ybe"])
    p.add_argument("--solution", default="z3", choices=("z3", "swap"))
    p.add_argument("--strands", type=int, default=5)
    common(p)

    p = sub.add_parser("tl", help=SUITES["tl"])
    p.add_argument("--q", nargs=2, default=("2", "0"), metavar=("RE", "IM"))
    p.add_argument("--m", type=int, default=8)
    common(p)

    return parser


def _emit(suite: str, config: dict, reps: list[CheckReport], args) -> int:
    config = dict(config)
    config["threads"] = _thread_cap()
    status = "pass" if all(r.passed for r in reps) else "fail"
    checked = sum(r.checked_count for r in reps)
    witnesses = [r.witness.to_json() for r in reps if r.witness is not None]
    if args.format == "json":
        out: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "suite": suite,
            "config": config,
            "status": status,
            "checked": checked,
            "witnesses": witnesses,
            "timings": getattr(args, "_timings", {}) if args.timings else {},
        }
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"[{status}] suite={suite} checked={checked}")
        for key, value in config.items():
            print(f"  {key} = {value}")
        for w in witnesses:
            print(f"  witness: {w}")
    return 0 if status == "pass" else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        for name, desc in SUITES.items():
            print(f"{name}: {desc}")
        return 0
    if args.suite is None:
        parser.print_usage(sys.stderr)
        return 2
    started = time.monotonic()
    try:
        reps, config = RUNNERS[args.suite](args)
    except (ValueError, simplicial.TruncationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    args._timings = {"total_seconds": round(time.monotonic() - started, 3)}
    return _emit(args.suite, config, reps, args)


if __name__ == "__main__":
    sys.exit(main())
