"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 infeasible parameters,
3 enumeration budget exceeded.  Randomized commands default to seed 0
(with a notice) rather than environment entropy, and the enumeration
budget can be overridden with --budget or the ENTRODIST_BUDGET
environment variable.  Reports print as aligned text or as a JSON
envelope carrying exact values as decimal strings plus float
renderings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib.metadata import PackageNotFoundError, version as pkg_version

from . import bounds as bounds_mod
from . import codes as codes_mod
from . import encoders as encoders_mod
from . import kernels
from . import packing as packing_mod
from .codes import DEFAULT_BUDGET
from .entropy import LogQValue, surface_count, weight_entropy
from .errors import BudgetExceededError, EntrodistError, InfeasibleParameterError
from .gf import field_make, format_matrix, read_matrix

EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3


def _tool_version() -> str:
    try:
        return pkg_version("entrodist")
    except PackageNotFoundError:  # pragma: no cover - only when run from a checkout
        return "0.0.0+local"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _envelope(command: str, parameters: dict, results: dict) -> dict:
    return {
        "tool": "entrodist",
        "version": _tool_version(),
        "backend": kernels.backend(),
        "command": command,
        "parameters": parameters,
        "results": results,
    }


def _logq_json(v: LogQValue) -> dict:
    return v.to_json_dict()


def _int_json(x: int) -> dict:
    return {"exact": str(x), "approx": float(x)}


def _emit(env: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(env, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _resolve_budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("ENTRODIST_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


def _resolve_seed(args) -> int:
    if args.seed is None:
        print("notice: no --seed given, defaulting to seed 0", file=sys.stderr)
        return 0
    return args.seed


def _threshold_from_args(q, n, args) -> LogQValue:
    if args.h_surface is not None:
        return LogQValue(q, args.h_surface)
    if args.h_weight is not None:
        return weight_entropy(q, n, args.h_weight)
    raise InfeasibleParameterError("give a threshold via --h-surface or --h-weight")


def _fmt_logq(v: LogQValue) -> str:
    return f"log_{v.q}({v.surface}) = {float(v):.6f}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_field(args) -> int:
    field = field_make(args.p, args.r, tuple(args.poly) if args.poly else None)
    results = {
        "p": field.p,
        "r": field.r,
        "q": field.q,
        "reduction_poly": list(field.reduction_poly) if field.reduction_poly else None,
    }
    env = _envelope("field", {"p": args.p, "r": args.r}, results)
    lines = [f"GF({field.q}) = GF({field.p}^{field.r})"]
    if field.reduction_poly:
        terms = " + ".join(
            f"{c}*x^{i}" if i else str(c)
            for i, c in enumerate(field.reduction_poly)
            if c
        )
        lines.append(f"reduction polynomial: {terms}")
    _emit(env, args.format, lines)
    return 0


def _cmd_analyze(args) -> int:
    budget = _resolve_budget(args)
    m = read_matrix(args.matrix)
    code = codes_mod.code_from_generator(m)
    wd = codes_mod.weight_distribution(code, budget)
    hd = codes_mod.hamming_distance_of_code(code, budget)
    ed = codes_mod.entropy_distance_of_code(code, budget)
    dual_code = codes_mod.dual(code)
    dual_ed = (
        codes_mod.entropy_distance_of_code(dual_code, budget) if dual_code.k else None
    )
    results = {
        "n": code.n,
        "k": code.k,
        "hamming_distance": hd,
        "entropy_distance": _logq_json(ed),
        "weight_distribution": wd.to_json_list(),
        "dual_entropy_distance": _logq_json(dual_ed) if dual_ed is not None else None,
    }
    env = _envelope("analyze", {"matrix": str(args.matrix)}, results)
    lines = [
        f"[{code.n},{code.k}] code over GF({code.field.q})",
        f"hamming distance: {hd}",
        f"entropy distance: {_fmt_logq(ed)}",
        f"weight distribution: {list(wd.counts)}",
    ]
    if dual_ed is not None:
        lines.append(f"dual entropy distance: {_fmt_logq(dual_ed)}")
    _emit(env, args.format, lines)
    return 0


# Reference generator matrices for [7, k] binary codes achieving the bound
# table's lower bounds, k = 1..6.
_TABLE1_EXAMPLES = {
    1: ((1, 1, 1, 0, 0, 0, 0),),
    2: ((1, 1, 1, 0, 0, 0, 0), (1, 0, 0, 1, 1, 0, 0)),
    3: ((1, 0, 1, 0, 1, 0, 1), (0, 1, 1, 0, 0, 1, 1), (0, 0, 0, 1, 1, 1, 1)),
    4: (
        (1, 0, 1, 0, 1, 0, 1),
        (0, 1, 1, 0, 0, 1, 1),
        (0, 0, 0, 1, 1, 1, 0),
        (0, 0, 1, 0, 0, 1, 0),
    ),
    5: tuple(tuple(1 if j == i else 0 for j in range(7)) for i in range(5)),
    6: tuple(tuple(1 if j == i else 0 for j in range(7)) for i in range(6)),
}


def table1_rows() -> list[dict]:
    """Recompute the [7, k] binary bound table with its example codes."""
    field = field_make(2)
    rows = []
    for k in range(1, 7):
        lower = bounds_mod.max_ed_lower(2, 7, k)
        upper = bounds_mod.max_ed_upper(2, 7, k)
        from .gf import GFMatrix

        code = codes_mod.code_from_generator(GFMatrix(field, _TABLE1_EXAMPLES[k], 7))
        ed = codes_mod.entropy_distance_of_code(code)
        rows.append({"k": k, "lower": lower, "upper": upper, "example_ed": ed, "code": code})
    return rows


def _cmd_table1(args) -> int:
    rows = table1_rows()
    expect_lower = [35, 21, 21, 7, 7, 7]
    expect_upper = [35, 35, 35, 21, 7, 7]
    expect_example = [35, 35, 35, 21, 7, 7]
    agree = all(
        r["lower"].surface == el and r["upper"].surface == eu and r["example_ed"].surface == ee
        for r, el, eu, ee in zip(rows, expect_lower, expect_upper, expect_example)
    )
    results = {
        "rows": [
            {
                "k": r["k"],
                "lower": _logq_json(r["lower"]),
                "upper": _logq_json(r["upper"]),
                "example_entropy_distance": _logq_json(r["example_ed"]),
            }
            for r in rows
        ],
        "agrees_with_reference": agree,
    }
    env = _envelope("table1", {}, results)
    lines = ["largest entropy distance of a [7,k] binary linear code", ""]
    lines.append(f"{'k':>2}  {'lower bound':<22}{'upper bound':<22}{'example ed':<22}")
    for r in rows:
        lines.append(
            f"{r['k']:>2}  {_fmt_logq(r['lower']):<22}{_fmt_logq(r['upper']):<22}"
            f"{_fmt_logq(r['example_ed']):<22}"
        )
    lines.append("")
    lines.append(f"agrees with reference values: {agree}")
    _emit(env, args.format, lines)
    return 0 if agree else EXIT_INFEASIBLE


def _cmd_bounds(args) -> int:
    if args.encoder:
        if len(args.params) != 3:
            raise InfeasibleParameterError("encoder bounds need: q k n")
        q, k, n = args.params
        report = bounds_mod.encoder_ed_lower_report(q, k, n)
        upper = bounds_mod.encoder_ed_upper(q, k, n)
        results = {
            "q": q,
            "k": k,
            "n": n,
            "lower": _logq_json(report.h0),
            "upper": _logq_json(upper),
            "lower_threshold": _int_json(report.threshold),
            "lower_weight_below": _int_json(report.weight_below),
            "lower_weight_at": _int_json(report.weight_at),
            "lower_saturated": report.saturated,
        }
        env = _envelope("bounds", {"mode": "encoder", "q": q, "k": k, "n": n}, results)
        lines = [
            f"largest entropy distance of a full-rank {k}->{n} encoder over GF({q})",
            f"lower bound: {_fmt_logq(report.h0)}"
            + (" (saturated)" if report.saturated else ""),
            f"upper bound: {_fmt_logq(upper)}",
            f"counting: weight below = {report.weight_below}, at = {report.weight_at}, "
            f"threshold = {report.threshold}",
        ]
        _emit(env, args.format, lines)
        return 0

    if len(args.params) != 2:
        raise InfeasibleParameterError("code bounds need: q n (plus --h-surface/--h-weight or --k)")
    q, n = args.params
    if args.k is not None:
        lower = bounds_mod.max_ed_lower(q, n, args.k)
        upper = bounds_mod.max_ed_upper(q, n, args.k)
        results = {
            "q": q,
            "n": n,
            "k": args.k,
            "max_ed_lower": _logq_json(lower),
            "max_ed_upper": _logq_json(upper),
        }
        env = _envelope("bounds", {"mode": "max-ed", "q": q, "n": n, "k": args.k}, results)
        lines = [
            f"largest entropy distance of a [{n},{args.k}] code over GF({q})",
            f"lower bound: {_fmt_logq(lower)}",
            f"upper bound: {_fmt_logq(upper)}",
        ]
        _emit(env, args.format, lines)
        return 0

    h = _threshold_from_args(q, n, args)
    gilbert = bounds_mod.gilbert_lower(q, n, h)
    hamming_b = bounds_mod.hamming_upper(q, n, h)
    singleton = bounds_mod.singleton_upper(q, n, h)
    special = None
    if q == 2 and n >= 4 and h.surface == surface_count(2, n, 2):
        special = bounds_mod.d2_at_weight2(n)
    results = {
        "q": q,
        "n": n,
        "h": _logq_json(h),
        "gilbert_lower": _int_json(gilbert),
        "hamming_upper": _int_json(hamming_b),
        "singleton_upper": _int_json(singleton),
        "weight2_exact": _int_json(special) if special is not None else None,
    }
    env = _envelope("bounds", {"mode": "size", "q": q, "n": n}, results)
    lines = [
        f"code size bounds at entropy distance >= {_fmt_logq(h)} (length {n}, GF({q}))",
        f"gilbert lower bound:   {gilbert}",
        f"hamming upper bound:   {hamming_b}",
        f"singleton upper bound: {singleton}",
    ]
    if special is not None:
        lines.append(f"exact value (weight-2 threshold): {special}")
    _emit(env, args.format, lines)
    return 0


def _cmd_dq_exhaustive(args) -> int:
    budget = _resolve_budget(args)
    h = _threshold_from_args(args.q, args.n, args)
    res = bounds_mod.dq_exhaustive(args.q, args.n, h, budget)
    results = {
        "q": args.q,
        "n": args.n,
        "h": _logq_json(h),
        "max_size": _int_json(res.value),
        "witness_k": res.witness.k,
        "witness_generator": format_matrix(res.witness.generator) if res.witness.k else None,
    }
    env = _envelope("dq-exhaustive", {"q": args.q, "n": args.n}, results)
    lines = [
        f"exact largest size with entropy distance >= {_fmt_logq(h)}: {res.value}",
        f"witness: [{res.witness.n},{res.witness.k}] code",
    ]
    if res.witness.k:
        lines.append(format_matrix(res.witness.generator).rstrip())
    _emit(env, args.format, lines)
    return 0


def _cmd_encoder_analyze(args) -> int:
    budget = _resolve_budget(args)
    m = read_matrix(args.matrix)
    enc = encoders_mod.encoder_from_matrix(m)
    witness, ed = encoders_mod.encoder_min_witness(enc, budget)
    graph = encoders_mod.graph_code(enc)
    graph_plain_ed = codes_mod.entropy_distance_of_code(graph, budget)
    results = {
        "k": enc.k,
        "n": enc.n,
        "entropy_distance": _logq_json(ed),
        "minimizing_input": list(witness.elems),
        "graph_code_plain_entropy_distance": _logq_json(graph_plain_ed),
    }
    env = _envelope("encoder-analyze", {"matrix": str(args.matrix)}, results)
    lines = [
        f"{enc.k}->{enc.n} full-rank encoder over GF({enc.field.q})",
        f"entropy distance (product space): {_fmt_logq(ed)}",
        f"minimizing input: {list(witness.elems)}",
        f"graph code plain entropy distance: {_fmt_logq(graph_plain_ed)}",
    ]
    _emit(env, args.format, lines)
    return 0


def _cmd_encoder_search(args) -> int:
    budget = _resolve_budget(args)
    seed = _resolve_seed(args)
    res = encoders_mod.encoder_search_best(
        args.q, args.k, args.n, mode=args.mode, budget=budget, seed=seed, trials=args.trials
    )
    results = {
        "q": args.q,
        "k": args.k,
        "n": args.n,
        "mode": res.mode,
        "best_entropy_distance": _logq_json(res.value),
        "examined": res.examined,
        "rejected_rank_deficient": res.rejected_rank,
        "best_matrix": format_matrix(res.encoder.matrix),
    }
    env = _envelope(
        "encoder-search",
        {"q": args.q, "k": args.k, "n": args.n, "mode": args.mode, "seed": seed},
        results,
    )
    lines = [
        f"best {args.k}->{args.n} encoder over GF({args.q}) ({res.mode}): "
        f"{_fmt_logq(res.value)}",
        f"examined {res.examined} full-rank matrices "
        f"({res.rejected_rank} rank-deficient rejected)",
        format_matrix(res.encoder.matrix).rstrip(),
    ]
    _emit(env, args.format, lines)
    return 0


def _cmd_pack_ensemble_avg(args) -> int:
    sums = packing_mod.ensemble_weight_sums(args.q, args.n, args.k)
    q, n, k = args.q, args.n, args.k
    expected = [0] + [(q**k - 1) * surface_count(q, n, i) for i in range(1, n + 1)]
    expected[0] = q**n - 1
    agree = sums == expected
    results = {
        "q": q,
        "n": n,
        "k": k,
        "weight_sums": [str(s) for s in sums],
        "expected": [str(e) for e in expected],
        "agrees": agree,
    }
    env = _envelope("pack-ensemble-avg", {"q": q, "n": n, "k": k}, results)
    lines = [
        f"multiplier ensemble over GF({q}^{n}): per-weight codeword totals",
        f"computed: {sums}",
        f"expected: {expected}",
        f"agrees: {agree}",
    ]
    _emit(env, args.format, lines)
    return 0 if agree else EXIT_INFEASIBLE


def _cmd_pack_white(args) -> int:
    seed = _resolve_seed(args)
    res = packing_mod.find_white_code(args.q, args.n, args.k, seed=seed, max_trials=args.max_trials)
    wd = codes_mod.weight_distribution(res.code)
    results = {
        "q": args.q,
        "n": args.n,
        "k": args.k,
        "multiplier": res.v,
        "trials": res.trials,
        "weight_distribution": wd.to_json_list(),
        "generator": format_matrix(res.code.generator),
    }
    env = _envelope("pack-white", {"q": args.q, "n": args.n, "k": args.k, "seed": seed}, results)
    lines = [
        f"white [{args.n},{args.k}] code over GF({args.q}) after {res.trials} trial(s), "
        f"multiplier {res.v}",
        f"weight distribution: {list(wd.counts)}",
        format_matrix(res.code.generator).rstrip(),
    ]
    _emit(env, args.format, lines)
    return 0


def _packing_result_json(res) -> dict:
    return {
        "filler": res.filler,
        "s_size": res.s_size,
        "s0_size": res.s0_size,
        "b_size": res.b_size,
        "cond_seed": res.cond_seed,
        "cond_bulk": res.cond_bulk,
        "cond_disjoint": res.cond_disjoint,
        "hypothesis_ok": res.hypothesis_ok,
        "success": res.success,
    }


def _cmd_pack_experiment(args) -> int:
    m = read_matrix(args.code)
    code = codes_mod.code_from_generator(m)
    res = packing_mod.packing_experiment_ball(code, args.radius)
    results = _packing_result_json(res)
    env = _envelope("pack-experiment", {"code": str(args.code), "radius": args.radius}, results)
    lines = [
        f"ball packing, radius {args.radius}, [{code.n},{code.k}] code over GF({code.field.q})",
        f"|S| = {res.s_size}, |S0| = {res.s0_size}, |B| = {res.b_size}",
        f"conditions: seed={res.cond_seed} bulk={res.cond_bulk} disjoint={res.cond_disjoint}",
        f"hypothesis |S| < q^(n-k)/n: {res.hypothesis_ok}",
    ]
    _emit(env, args.format, lines)
    return 0


def _cmd_pack_corollary1(args) -> int:
    seed = _resolve_seed(args)
    rep = packing_mod.rough_packing_demo(args.q, args.n, args.k, args.epsilon, seed=seed)
    results = {
        "q": args.q,
        "n": args.n,
        "k": args.k,
        "epsilon": args.epsilon,
        "delta": rep.delta,
        "gamma": rep.gamma,
        "radius": rep.radius,
        "experiment": _packing_result_json(rep.experiment),
        "retained_ratio_exact": f"{rep.retained_ratio.numerator}/{rep.retained_ratio.denominator}",
        "retained_ratio": float(rep.retained_ratio),
        "threshold": rep.threshold,
        "satisfied": rep.satisfied,
    }
    env = _envelope(
        "pack-corollary1",
        {"q": args.q, "n": args.n, "k": args.k, "epsilon": args.epsilon, "seed": seed},
        results,
    )
    lines = [
        f"rough packing demo: delta = {rep.delta:.6f}, gamma = {rep.gamma:.6f}, "
        f"radius = {rep.radius}",
        f"retained |B|/|S| = {rep.experiment.b_size}/{rep.experiment.s_size} "
        f"= {float(rep.retained_ratio):.6f}",
        f"target 1 - gamma^epsilon = {rep.threshold:.6f}",
        f"satisfied: {rep.satisfied}",
    ]
    _emit(env, args.format, lines)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_format(p):
    p.add_argument("--format", choices=("text", "json"), default="text")


def _add_budget(p):
    p.add_argument("--budget", type=int, default=None, help="enumeration budget override")


def build_parser() -> _Parser:
    parser = _Parser(prog="entrodist", description=__doc__)
    parser.add_argument("--version", action="version", version=f"entrodist {_tool_version()}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe GF(p^r)")
    p.add_argument("p", type=int)
    p.add_argument("r", type=int, nargs="?", default=1)
    p.add_argument("--poly", type=int, nargs="+", default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("analyze", help="analyze a code given by a generator matrix file")
    p.add_argument("matrix")
    _add_format(p)
    _add_budget(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("bounds", help="size/entropy-distance bounds")
    p.add_argument("params", type=int, nargs="+", help="q n  |  --encoder q k n")
    p.add_argument("--encoder", action="store_true")
    p.add_argument("--h-surface", type=int, default=None)
    p.add_argument("--h-weight", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table1", help="recompute the [7,k] binary bound table")
    _add_format(p)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("dq-exhaustive", help="exact largest size by subspace enumeration")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--h-surface", type=int, default=None)
    p.add_argument("--h-weight", type=int, default=None)
    _add_format(p)
    _add_budget(p)
    p.set_defaults(func=_cmd_dq_exhaustive)

    p = sub.add_parser("encoder", help="encoder analysis and search")
    esub = p.add_subparsers(dest="encoder_command", required=True)
    pe = esub.add_parser("analyze", help="entropy distance of an encoder matrix file")
    pe.add_argument("matrix")
    _add_format(pe)
    _add_budget(pe)
    pe.set_defaults(func=_cmd_encoder_analyze)
    pe = esub.add_parser("search", help="search encoders with large entropy distance")
    pe.add_argument("q", type=int)
    pe.add_argument("k", type=int)
    pe.add_argument("n", type=int)
    pe.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    pe.add_argument("--seed", type=int, default=None)
    pe.add_argument("--trials", type=int, default=10_000)
    _add_format(pe)
    _add_budget(pe)
    pe.set_defaults(func=_cmd_encoder_search)

    p = sub.add_parser("pack", help="packing experiments")
    psub = p.add_subparsers(dest="pack_command", required=True)
    pp = psub.add_parser("ensemble-avg", help="exact multiplier-ensemble weight totals")
    pp.add_argument("q", type=int)
    pp.add_argument("n", type=int)
    pp.add_argument("k", type=int)
    _add_format(pp)
    pp.set_defaults(func=_cmd_pack_ensemble_avg)
    pp = psub.add_parser("white", help="find a white code by multiplier sampling")
    pp.add_argument("q", type=int)
    pp.add_argument("n", type=int)
    pp.add_argument("k", type=int)
    pp.add_argument("--seed", type=int, default=None)
    pp.add_argument("--max-trials", type=int, default=1000)
    _add_format(pp)
    pp.set_defaults(func=_cmd_pack_white)
    pp = psub.add_parser("experiment", help="ball-packing experiment for a code file")
    pp.add_argument("--code", required=True)
    pp.add_argument("--radius", type=int, required=True)
    _add_format(pp)
    pp.set_defaults(func=_cmd_pack_experiment)
    pp = psub.add_parser("corollary1", help="end-to-end rough-packing demo")
    pp.add_argument("q", type=int)
    pp.add_argument("n", type=int)
    pp.add_argument("k", type=int)
    pp.add_argument("--epsilon", type=float, required=True)
    pp.add_argument("--seed", type=int, default=None)
    _add_format(pp)
    pp.set_defaults(func=_cmd_pack_corollary1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"entrodist: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (InfeasibleParameterError, EntrodistError) as e:
        print(f"entrodist: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as e:
        print(f"entrodist: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
