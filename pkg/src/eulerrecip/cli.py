"""Command-line interface.

Exit status: 0 success, 1 a verification FAILed, 2 malformed input,
3 an enumeration budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter
from typing import Callable, Sequence

from . import corpus
from .chromatic import (
    aoc_bruteforce,
    aoc_count,
    chromatic_polynomial,
    chromatic_reciprocity_check,
    complete_graph,
    count_proper_colorings,
    graph_from_json,
    acyclic_orientations,
)
from .errors import BudgetError, SizeError
from .eulercalc import (
    SemialgTotalOrder,
    config_space_euler,
    euler_char,
    hom_euler_total_order,
    hom_euler_total_order_by_images,
    parse_tame,
    total_order_euler,
)
from .flow import (
    SAGroup,
    betti,
    enumerate_flows,
    flow_polynomial,
    flow_reciprocity_check,
    ftc_count,
    ftc_euler,
    oriented_graph_from_json,
)
from .homspace import HomMode, count_homs, order_polynomial
from .polynomial import eval_int, reciprocity_transform, to_monomial
from .poset import chain, poset_from_json
from .report import Report, digest, stopwatch
from .stratify import ConstraintSet, cone_euler, hom_euler_negated_target

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(Exception):
    """Malformed input file or argument."""


def _load(path: str, loader: Callable):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return loader(doc)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, data: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _mode(args) -> HomMode:
    return HomMode(args.mode)


# -- plain commands --------------------------------------------------------------

def cmd_order_poly(args) -> int:
    P = _load(args.poset, poset_from_json)
    b = order_polynomial(P, _mode(args))
    m = to_monomial(b)
    _emit(args, {"mode": args.mode, "binom": str(b), "poly": str(m)}, [str(b), str(m)])
    return 0


def cmd_hom_count(args) -> int:
    P = _load(args.source, poset_from_json)
    Q = _load(args.target, poset_from_json)
    mode = _mode(args)
    if args.negate_target:
        value = hom_euler_negated_target(P, Q, mode)
        what = "euler"
    else:
        value = count_homs(P, Q, mode)
        what = "count"
    _emit(args, {"mode": args.mode, what: value, "negated_target": args.negate_target}, [str(value)])
    return 0


def cmd_euler(args) -> int:
    expr = args.expr.strip()
    if args.poset:
        P = _load(args.poset, poset_from_json)
        try:
            T = SemialgTotalOrder.parse(expr)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        value = hom_euler_total_order(P, T, _mode(args))
        _emit(args, {"mode": args.mode, "order": str(T), "euler": value}, [str(value)])
        return 0
    try:
        if set(expr) <= {"p", "o"}:
            value = total_order_euler(SemialgTotalOrder.parse(expr))
        else:
            value = euler_char(parse_tame(expr))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(args, {"expr": expr, "euler": value}, [str(value)])
    return 0


def cmd_chromatic(args) -> int:
    G = _load(args.graph, graph_from_json)
    chi = chromatic_polynomial(G)
    data = {"poly": str(chi), "pretty": chi.pretty()}
    lines = [str(chi), chi.pretty()]
    if args.colors is not None:
        data["value"] = eval_int(chi, args.colors)
        data["brute_force"] = count_proper_colorings(G, args.colors)
        lines.append(f"chi({args.colors}) = {data['value']}  brute force = {data['brute_force']}")
    _emit(args, data, lines)
    return 0


def cmd_flow(args) -> int:
    G = _load(args.graph, oriented_graph_from_json)
    phi = flow_polynomial(G)
    b0, b1 = betti(G)
    data = {"poly": str(phi), "pretty": phi.pretty(), "b0": b0, "b1": b1}
    lines = [str(phi), phi.pretty(), f"b0 = {b0}  b1 = {b1}"]
    if args.group is not None:
        data["value"] = eval_int(phi, args.group)
        data["nowhere_zero"] = enumerate_flows(G, args.group, nowhere_zero=True)
        lines.append(f"phi({args.group}) = {data['value']}  nowhere-zero flows = {data['nowhere_zero']}")
    _emit(args, data, lines)
    return 0


def cmd_aoc(args) -> int:
    G = _load(args.graph, graph_from_json)
    mode = _mode(args)
    T = SemialgTotalOrder.finite_chain(args.colors)
    by_orientation = aoc_count(G, T, mode)
    brute = aoc_bruteforce(G, args.colors, mode)
    data = {"mode": args.mode, "colors": args.colors, "orientation_sum": by_orientation, "brute_force": brute}
    _emit(args, data, [f"orientation sum = {by_orientation}", f"brute force = {brute}"])
    return 0 if by_orientation == brute else EXIT_FAIL


def cmd_ftc(args) -> int:
    G = _load(args.graph, oriented_graph_from_json)
    A = SAGroup.cyclic(args.group)
    count = ftc_count(G, args.group)
    finite = ftc_euler(G, A)
    line = ftc_euler(G, A.negated())
    data = {"group": args.group, "count": count, "euler": finite, "euler_negated_group": line}
    _emit(args, data, [
        f"#FTC(G, {A}) = {count}",
        f"e(FTC(G, {A})) = {finite}",
        f"e(FTC(G, {A.negated()})) = {line}",
    ])
    return 0


# -- verification --------------------------------------------------------------

def verify_stanley_order(max_p: int, extra=()) -> list[Report]:
    reports = []
    posets = corpus.poset_family(max_p) + list(extra)
    for P in posets:
        key = digest({"poset": P.to_json()})
        with stopwatch() as t:
            strict = to_monomial(order_polynomial(P, HomMode.STRICT))
            weak = to_monomial(order_polynomial(P, HomMode.WEAK))
            right = reciprocity_transform(weak, P.n)
        reports.append(Report("stanley-order/polynomial", key, strict, right, t[0], f"|P|={P.n}"))
        for n in range(1, 4):
            reports.append(Report(
                "stanley-order/count", key,
                count_homs(P, chain(n), HomMode.STRICT),
                (-1) ** P.n * eval_int(weak, -n), 0.0, f"|P|={P.n} n={n}",
            ))
    # two routes to e(Hom(P, T)) for a semialgebraic total order T
    orders = corpus.total_order_family(4)
    for P in corpus.poset_family(min(max_p, 4)):
        for mode in HomMode:
            with stopwatch() as t:
                left = [hom_euler_total_order(P, T, mode) for T in orders]
                right = [hom_euler_total_order_by_images(P, T, mode) for T in orders]
            reports.append(Report(
                f"stanley-order/total-order-{mode.value}", digest({"poset": P.to_json()}),
                left, right, t[0], f"|P|={P.n} orders<=4pieces",
            ))
    for n in range(1, 6):
        chi = chromatic_polynomial(complete_graph(n))
        left = [config_space_euler(n, e) for e in range(-4, 5)]
        right = [eval_int(chi, e) for e in range(-4, 5)]
        reports.append(Report("stanley-order/config-space", digest({"n": n}), left, right, 0.0, f"n={n}"))
    return reports


def verify_main_theorem(max_p: int, max_q: int, extra=()) -> list[Report]:
    reports = []
    # cone Euler characteristics behind the fibre computation
    for n in range(0, max(max_p, 5) + 1):
        bad_weak = bad_strict = 0
        for X in corpus.acyclic_pair_sets(n):
            c = ConstraintSet(n, X)
            if cone_euler(c, HomMode.WEAK) != ((-1) ** n if not X else 0):
                bad_weak += 1
            if cone_euler(c, HomMode.STRICT) != (-1) ** n:
                bad_strict += 1
        key = digest({"cones": n})
        reports.append(Report("main-theorem/cone-weak", key, bad_weak, 0, 0.0, f"n={n} failures"))
        reports.append(Report("main-theorem/cone-strict", key, bad_strict, 0, 0.0, f"n={n} failures"))

    pairs = [(P, Q) for P in corpus.poset_family(max_p) for Q in corpus.poset_family(max_q)]
    pairs += list(extra)
    for P, Q in pairs:
        key = digest({"P": P.to_json(), "Q": Q.to_json()})
        sign = (-1) ** P.n
        label = f"|P|={P.n} |Q|={Q.n}"
        with stopwatch() as t:
            left = hom_euler_negated_target(P, Q, HomMode.WEAK)
            right = sign * count_homs(P, Q, HomMode.STRICT)
        reports.append(Report("main-theorem/weak-negated", key, left, right, t[0], label))
        with stopwatch() as t:
            left = hom_euler_negated_target(P, Q, HomMode.STRICT)
            right = sign * count_homs(P, Q, HomMode.WEAK)
        reports.append(Report("main-theorem/strict-negated", key, left, right, t[0], label))
    return reports


def verify_chromatic(max_v: int, colors: int, extra=()) -> list[Report]:
    reports = []
    orders = corpus.total_order_family(3)
    for G in corpus.simple_graph_family(max_v) + list(extra):
        key = digest({"graph": G.to_json()})
        chi = chromatic_polynomial(G)
        with stopwatch() as t:
            left = [eval_int(chi, k) for k in range(5)]
            right = [count_proper_colorings(G, k) for k in range(5)]
        reports.append(Report("chromatic-recip/deletion-contraction", key, left, right, t[0], f"|V|={G.n} k<=4"))
        reports.append(Report(
            "chromatic-recip/acyclic-count", key,
            len(acyclic_orientations(G)), (-1) ** G.n * eval_int(chi, -1), 0.0, f"|V|={G.n}",
        ))
        for n in range(1, colors + 1):
            chain_n = SemialgTotalOrder.finite_chain(n)
            extra_orders = [T for T in orders if T != chain_n] if n == 1 else []
            reports += chromatic_reciprocity_check(G, n, [chain_n] + extra_orders)
    return reports


def verify_flow(max_edges: int, group: int, extra=()) -> list[Report]:
    reports = []
    for G in corpus.multigraph_family(4, max_edges) + list(extra):
        for k in range(1, group + 1):
            reports += flow_reciprocity_check(G, k)
    return reports


def _random_extras(seed, max_p, max_q):
    if seed is None:
        return {}
    rng = random.Random(seed)
    return {
        "stanley-order": [corpus.random_poset(rng, rng.randint(1, 6)) for _ in range(5)],
        "main-theorem": [
            (corpus.random_poset(rng, rng.randint(1, max_p + 1)), corpus.random_poset(rng, rng.randint(1, max_q + 1)))
            for _ in range(5)
        ],
        "chromatic-recip": [corpus.random_graph(rng, rng.randint(1, 6)) for _ in range(3)],
        "flow-recip": [corpus.random_multigraph(rng, rng.randint(1, 4), rng.randint(0, 6)) for _ in range(3)],
    }


def run_verification(target: str, max_p=None, max_q=4, colors=3, group=4, seed=None) -> list[Report]:
    """Run one verification target (or ``all``); reports sorted by input digest.

    ``max_p`` defaults to 5 for stanley-order and 4 for main-theorem.
    """
    extras = _random_extras(seed, max_p or 4, max_q)
    targets = ["stanley-order", "main-theorem", "chromatic-recip", "flow-recip"] if target == "all" else [target]
    reports = []
    for name in targets:
        extra = extras.get(name, ())
        if name == "stanley-order":
            reports += verify_stanley_order(5 if max_p is None else max_p, extra)
        elif name == "main-theorem":
            reports += verify_main_theorem(4 if max_p is None else max_p, max_q, extra)
        elif name == "chromatic-recip":
            reports += verify_chromatic(5, colors, extra)
        elif name == "flow-recip":
            reports += verify_flow(6, group, extra)
        else:
            raise InputError(f"unknown verify target {name!r}")
    reports.sort(key=lambda r: (r.digest, r.theorem, r.label))
    return reports


def cmd_verify(args) -> int:
    reports = run_verification(args.target, args.max_p, args.max_q, args.colors, args.group, args.seed)
    tally = Counter((r.theorem.split("/")[0], r.verdict) for r in reports)
    failed = [r for r in reports if not r.passed]
    verdict = "FAIL" if failed else "PASS"
    if args.json:
        doc = {
            "target": args.target,
            "verdict": verdict,
            "reports": [r.to_dict(args.timing) for r in reports],
            "summary": {f"{name}:{v}": c for (name, v), c in sorted(tally.items())},
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.line(args.timing))
        for (name, v), c in sorted(tally.items()):
            print(f"# {name}: {c} {v}")
        print(f"# verdict: {verdict} ({len(reports)} checks, {len(failed)} failed)")
    return EXIT_FAIL if failed else 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--mode", choices=["weak", "strict"], default="weak")

    parser = argparse.ArgumentParser(prog="eulerrecip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order-poly", parents=[common], help="order polynomial of a poset")
    p.add_argument("poset")
    p.set_defaults(func=cmd_order_poly)

    p = sub.add_parser("hom-count", parents=[common], help="count homs between posets")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--negate-target", action="store_true",
                   help="Euler characteristic of homs into target x (0,1) instead")
    p.set_defaults(func=cmd_hom_count)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic of a tame set or total order")
    p.add_argument("expr")
    p.add_argument("--poset", help="with a total order EXPR: e(Hom(poset, EXPR))")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial")
    p.add_argument("graph")
    p.add_argument("--colors", type=int)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("flow", parents=[common], help="flow polynomial")
    p.add_argument("graph")
    p.add_argument("--group", type=int)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("aoc", parents=[common], help="count acyclic-orientation/colouring pairs")
    p.add_argument("graph")
    p.add_argument("--colors", type=int, required=True)
    p.set_defaults(func=cmd_aoc)

    p = sub.add_parser("ftc", parents=[common], help="flow / totally cyclic reorientation pairs")
    p.add_argument("graph")
    p.add_argument("--group", type=int, required=True)
    p.set_defaults(func=cmd_ftc)

    p = sub.add_parser("verify", parents=[common], help="run the reciprocity verification suite")
    p.add_argument("target", choices=["stanley-order", "main-theorem", "chromatic-recip", "flow-recip", "all"])
    p.add_argument("--max-p", type=int, help="largest source poset (default 5 for stanley-order, 4 otherwise)")
    p.add_argument("--max-q", type=int, default=4)
    p.add_argument("--colors", type=int, default=3)
    p.add_argument("--group", type=int, default=4)
    p.add_argument("--seed", type=int, help="add seeded random cases to the corpus")
    p.add_argument("--timing", action="store_true", help="include elapsed times (not deterministic)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("colors", "group", "max_p", "max_q"):
        value = getattr(args, name, None)
        if value is not None and value < (1 if name == "group" else 0):
            print(f"error: --{name.replace('_', '-')} must be nonnegative"
                  + (" and >= 1" if name == "group" else ""), file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetError, SizeError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
