"""Batch command-line frontend.

Every subcommand reads input files (or inline flags), runs the relevant
verifiers/algorithms, and emits a human-readable block followed by a
machine block of JSON lines with the schema
{"context": ..., "theorem": ..., "status": ..., "details": ...}.
``--json`` suppresses the human block.  Output is byte-stable: identical
inputs produce identical bytes.

Exit codes: 0 when no item failed, 1 when a theorem check failed (the
witness is in the failing item), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import additive, chains, fixtures, laurent, polyfield, ratfunc
from .errors import (HypothesisFailed, NotIndecomposable, RittLabError,
                     TheoremViolated)
from .formats import (parse_context_file, parse_field_line, parse_poly_file,
                      parse_rational_file, parse_skew_file, parse_terms)
from .polyfield import Poly

PASS = "pass"
FAIL = "fail"
HYP = "hypothesis-not-met"


@dataclass
class Item:
    context: str
    theorem: str
    status: str
    details: str


def _run_check(items: list[Item], context: str, theorem: str,
               fn: Callable[[], str]) -> None:
    """Run one check; fn returns the pass details or raises."""
    try:
        details = fn()
        items.append(Item(context, theorem, PASS, details))
    except (HypothesisFailed, NotIndecomposable) as exc:
        items.append(Item(context, theorem, HYP, str(exc)))
    except TheoremViolated as exc:
        items.append(Item(context, theorem, FAIL, str(exc)))


def _emit(items: Sequence[Item], human_lines: Sequence[str],
          json_only: bool) -> int:
    out = sys.stdout
    if not json_only:
        for line in human_lines:
            out.write(line + "\n")
        if human_lines:
            out.write("\n")
    for item in items:
        out.write(json.dumps({"context": item.context, "theorem": item.theorem,
                              "status": item.status, "details": item.details},
                             sort_keys=True) + "\n")
    return 1 if any(i.status == FAIL for i in items) else 0


def _table(items: Sequence[Item]) -> list[str]:
    if not items:
        return []
    rows = [(i.context, i.theorem, i.status, i.details) for i in items]
    widths = [max(len(r[c]) for r in rows) for c in range(3)]
    lines = []
    for r in rows:
        lines.append(f"{r[0]:<{widths[0]}}  {r[1]:<{widths[1]}}  "
                     f"{r[2]:<{widths[2]}}  {r[3]}")
    return lines


# ---------------------------------------------------------------------------
# group subcommands

ALL_THEOREMS = ("ritt1", "mon", "aut", "div", "indec", "rho")


def _verify_items(ctx: chains.ChainContext, theorems: Sequence[str],
                  weak: bool) -> list[Item]:
    items: list[Item] = []
    for name in theorems:
        if name == "ritt1":
            _run_check(items, ctx.name, name,
                       lambda: chains.verify_ritt_first(ctx, weak=weak).details)
        elif name == "mon":
            _run_check(items, ctx.name, name,
                       lambda: chains.verify_monodromy_invariant(ctx).details)
        elif name == "aut":
            _run_check(items, ctx.name, name,
                       lambda: chains.verify_aut_invariant(ctx, weak=weak).details)
        elif name == "div":
            def run_div() -> str:
                details = []
                for chain in chains.maximal_chains(ctx):
                    details.append(chains.verify_divisibility(ctx, chain).details)
                return "; ".join(details)
            _run_check(items, ctx.name, name, run_div)
        elif name == "indec":
            _run_check(items, ctx.name, name,
                       lambda: chains.verify_indecomposable_equivalences(ctx).details)
        elif name == "rho":
            _run_check(items, ctx.name, name,
                       lambda: chains.verify_rho_bijection(ctx).details)
        else:
            raise SystemExit(2)
    return items


def cmd_group_verify(args) -> int:
    ctx = parse_context_file(Path(args.context).read_text(),
                             name=Path(args.context).stem)
    theorems = args.theorems.split(",") if args.theorems else list(ALL_THEOREMS)
    for t in theorems:
        if t not in ALL_THEOREMS:
            print(f"unknown theorem {t!r}; choose from "
                  f"{','.join(ALL_THEOREMS)}", file=sys.stderr)
            raise SystemExit(2)
    items = _verify_items(ctx, theorems, args.weak_hypothesis)
    return _emit(items, _table(items), args.json)


def _chain_line(ctx: chains.ChainContext, i: int, chain: chains.Chain) -> str:
    inv = chains.chain_invariants(ctx, chain)
    orders = " > ".join(str(U.order) for U in chain.groups)
    mons = ", ".join(f"{chains.identify_group(Q)} on {Q.degree} pts"
                     for Q in inv.monodromy_quotients)
    auts = ", ".join(f"{o} ({t})" for o, t in inv.aut_orders_and_types)
    return (f"chain {i}: orders {orders}; indices {list(inv.indices)}; "
            f"monodromy [{mons}]; aut orders [{auts}]")


def cmd_group_chains(args) -> int:
    ctx = parse_context_file(Path(args.context).read_text(),
                             name=Path(args.context).stem)
    all_chains = chains.maximal_chains(ctx)
    items = []
    human = [f"{ctx.name}: {len(all_chains)} maximal chains between G "
             f"(order {ctx.G.order}) and H (order {ctx.H.order})"]
    for i, chain in enumerate(all_chains):
        line = _chain_line(ctx, i, chain)
        human.append("  " + line)
        items.append(Item(ctx.name, "chains", PASS, line))
    if args.walk:
        src, dst = (int(v) for v in args.walk)
        walk = chains.exchange_walk(ctx, all_chains[src], all_chains[dst],
                                    weak=args.weak_hypothesis)
        human.append(f"exchange walk from chain {src} to chain {dst}: "
                     f"{len(walk) - 1} steps")
        for t, chain in enumerate(walk):
            orders = " > ".join(str(U.order) for U in chain.groups)
            line = f"walk[{t}]: {orders}"
            human.append("  " + line)
            items.append(Item(ctx.name, "walk", PASS, line))
    return _emit(items, human, args.json)


# ---------------------------------------------------------------------------
# polynomial subcommands

def cmd_poly_decompose(args) -> int:
    f = parse_poly_file(Path(args.poly).read_text())
    name = Path(args.poly).stem
    decomps = polyfield.all_complete_decompositions(f)
    items = []
    human = [f"{name}: {f.pretty()} over {f.field}",
             f"{len(decomps)} complete decomposition(s); factors listed "
             f"outermost first (f = g1 o g2 o ...)"]
    for i, d in enumerate(decomps):
        auts = tuple(len(polyfield.aut_group(p)) for p in d.factors)
        line = (f"decomposition {i}: " +
                "  o  ".join(p.pretty() for p in d.factors) +
                f"; degrees {list(d.degrees())}; aut orders {list(auts)}")
        human.append("  " + line)
        items.append(Item(name, "decompose", PASS, line))
    _run_check(items, name, "poly-invariants",
               lambda: _poly_theorem_details(f))
    human.append(items[-1].details if items[-1].status == PASS
                 else f"invariant check: {items[-1].status}")
    return _emit(items, human, args.json)


def _poly_theorem_details(f: Poly) -> str:
    rep = polyfield.verify_poly_theorems(f)
    return (f"{rep.n_decompositions} decomposition(s) share length "
            f"{rep.length}, degree multiset {list(rep.degree_multiset)}, "
            f"(degree, |Aut|) multiset {list(rep.degree_aut_multiset)}")


def cmd_poly_invariants(args) -> int:
    f = parse_poly_file(Path(args.poly).read_text())
    name = Path(args.poly).stem
    items = []
    auts = polyfield.aut_group(f)
    items.append(Item(name, "aut", PASS,
                      f"|Aut| = {len(auts)}: "
                      + ", ".join(mu.as_poly().pretty() for mu in auts)))
    gamma = polyfield.gamma_order(f)
    items.append(Item(name, "gamma", PASS,
                      "infinite (linear twist of X^n)" if gamma is None
                      else str(gamma)))
    g, h = polyfield.factorable_core(f)
    items.append(Item(name, "factorable-core", PASS,
                      f"f = ({g.pretty()}) o ({h.pretty()}); core degree "
                      f"{h.degree}"))
    items.append(Item(name, "is-factorable", PASS,
                      str(polyfield.is_factorable(f)).lower()))
    human = [f"{name}: {f.pretty()} over {f.field}"]
    human += ["  " + i.theorem + ": " + i.details for i in items]
    return _emit(items, human, args.json)


# ---------------------------------------------------------------------------
# additive subcommand

def cmd_additive_factor(args) -> int:
    f = parse_skew_file(Path(args.skew).read_text())
    name = Path(args.skew).stem
    facts = additive.all_complete_skew_factorizations(f)
    items = []
    human = [f"{name}: {f.terms_string()} over {f.field} "
             f"(X-form {additive.to_additive(f).pretty()})",
             f"{len(facts)} complete factorization(s), outermost first:"]
    for i, seq in enumerate(facts):
        tau_form = "  *  ".join(d.terms_string() for d in seq)
        x_form = "  o  ".join(additive.to_additive(d).pretty() for d in seq)
        line = f"factorization {i}: {tau_form}   (X-form: {x_form})"
        human.append("  " + line)
        items.append(Item(name, "skew-factor", PASS, line))
    _run_check(items, name, "ore", lambda: _ore_details(f))
    human.append(items[-1].details)
    return _emit(items, human, args.json)


def _ore_details(f: additive.SkewPoly) -> str:
    rep = additive.verify_ore_invariance(f)
    msg = (f"{rep.n_factorizations} factorization(s) share length "
           f"{rep.length} and tau-degree multiset "
           f"{list(rep.tau_degree_multiset)}")
    if rep.general_right_factor_degrees:
        msg += (f"; general right factors at degrees "
                f"{list(rep.general_right_factor_degrees)} all additive")
    return msg


# ---------------------------------------------------------------------------
# laurent subcommand

def cmd_laurent_branch(args) -> int:
    field = parse_field_line(args.field)
    f = Poly.from_terms(field, parse_terms(field, args.poly))
    precision = args.precision if args.precision is not None else 2 * f.degree
    system = laurent.monodromy_at_infinity(f, precision)
    name = f"laurent({f.terms_string()})"
    items = []
    human = [f"{f.pretty()} over {field}, precision {precision}, "
             f"theta = {system.theta}"]
    for i, branch in enumerate(system.branches):
        tail = " ".join(f"{-j}:{field.format(a)}"
                        for j, a in enumerate(branch.tail) if a) or "0"
        line = (f"branch {i}: c = {field.format(branch.c)}; "
                f"x_c = {field.format(branch.c)}*s + tail [{tail}]")
        human.append("  " + line)
        items.append(Item(name, "branch", PASS, line))
    cyc = system.cycle.cycle_string()
    human.append(f"inertia cycle on branches: {cyc}")
    items.append(Item(name, "inertia-cycle", PASS,
                      f"s -> {system.theta}*s induces {cyc}"))
    return _emit(items, human, args.json)


# ---------------------------------------------------------------------------
# counterexample subcommand

def cmd_counterexample(args) -> int:
    outer = inner = None
    if (args.outer is None) != (args.inner is None):
        print("--outer and --inner must be given together", file=sys.stderr)
        raise SystemExit(2)
    if args.outer is not None:
        outer = parse_rational_file(Path(args.outer).read_text())
        inner = parse_rational_file(Path(args.inner).read_text())
    rep = ratfunc.divisibility_counterexample(args.prime, outer=outer, inner=inner)
    name = f"counterexample(p={args.prime})"
    verdict = "divides" if rep.divides else "does NOT divide"
    details = (f"f = {rep.f.pretty()}; |Aut(f)| = {rep.aut_f}, "
               f"|Aut(outer)| = {rep.aut_outer}, |Aut(inner)| = {rep.aut_inner}; "
               f"{rep.aut_f} {verdict} {rep.aut_outer} * {rep.aut_inner}")
    items = [Item(name, "aut-divisibility", PASS, details)]
    human = [f"outer = {rep.outer.pretty()}, inner = {rep.inner.pretty()} "
             f"over F{args.prime}", details]
    return _emit(items, human, args.json)


# ---------------------------------------------------------------------------
# fixtures run-all

def _poly_suite_items() -> list[Item]:
    from .fields import GF, QQ

    items: list[Item] = []
    corpus = [
        ("X^6 over Q", polyfield.power(QQ, 6)),
        ("X^12 over Q", polyfield.power(QQ, 12)),
        ("X^4 + X^2 over Q", Poly.from_terms(QQ, {4: 1, 2: 1})),
        ("X^4 + X^3 over Q", Poly.from_terms(QQ, {4: 1, 3: 1})),
        ("dickson(6, 1) over Q", polyfield.dickson(QQ, 6, 1)),
        ("X^6 over F7", polyfield.power(GF(7), 6)),
    ]
    for label, f in corpus:
        _run_check(items, label, "poly-invariants",
                   lambda f=f: _poly_theorem_details(f))

    def dickson_identity() -> str:
        d2, d3, d6 = (polyfield.dickson(QQ, n, 1) for n in (2, 3, 6))
        if polyfield.compose(d2, d3) != d6 or polyfield.compose(d3, d2) != d6:
            raise TheoremViolated("Dickson composition identity failed")
        return "dickson(6,1) = dickson(2,1) o dickson(3,1) = "\
               "dickson(3,1) o dickson(2,1)"

    _run_check(items, "dickson identity", "poly-invariants", dickson_identity)
    return items


def _additive_suite_items() -> list[Item]:
    from .fields import GF2, GF4

    items: list[Item] = []
    corpus = [
        ("tau^2 + tau over F2", additive.SkewPoly.make(GF2, [0, 1, 1])),
        ("tau^2 + tau + 1 over F2", additive.SkewPoly.make(GF2, [1, 1, 1])),
        ("tau^2 over F2", additive.SkewPoly.make(GF2, [0, 0, 1])),
        ("tau^2 + w*tau over F4",
         additive.SkewPoly.make(GF4, [GF4.zero, GF4.from_int(2), GF4.one])),
    ]
    for label, f in corpus:
        _run_check(items, label, "ore", lambda f=f: _ore_details(f))
    return items


def _laurent_suite_items() -> list[Item]:
    from .fields import GF

    F7 = GF(7)
    items: list[Item] = []
    for label, f in (("X^3 over F7", polyfield.power(F7, 3)),
                     ("X^3 + X over F7", Poly.from_terms(F7, {3: 1, 1: 1}))):
        def run(f=f) -> str:
            system = laurent.monodromy_at_infinity(f, 10)
            return (f"{len(system.branches)} branches verified at precision "
                    f"10; cycle {system.cycle.cycle_string()}")
        _run_check(items, label, "laurent", run)
    return items


def _counterexample_suite_items() -> list[Item]:
    items: list[Item] = []
    for p in (7, 13):
        def run(p=p) -> str:
            rep = ratfunc.divisibility_counterexample(p)
            return (f"(|Aut f|, |Aut outer|, |Aut inner|) = "
                    f"({rep.aut_f}, {rep.aut_outer}, {rep.aut_inner}); "
                    f"divisibility fails as expected")
        _run_check(items, f"counterexample(p={p})", "aut-divisibility", run)
    return items


def cmd_fixtures_run_all(args) -> int:
    items: list[Item] = []
    matrix_lines = ["theorem matrix (pass / FAIL / hyp=hypothesis-not-met):",
                    f"{'context':14s}" + "".join(f"{t:>8s}"
                                                 for t in ALL_THEOREMS)]
    for name in fixtures.FIXTURE_NAMES:
        ctx = fixtures.load_fixture(name)
        row = _verify_items(ctx, ALL_THEOREMS, weak=False)
        items.extend(row)
        cells = []
        for item in row:
            cells.append({PASS: "pass", FAIL: "FAIL", HYP: "hyp"}[item.status])
        matrix_lines.append(f"{name:14s}" + "".join(f"{c:>8s}" for c in cells))

    extra = (_poly_suite_items() + _additive_suite_items()
             + _laurent_suite_items() + _counterexample_suite_items())
    items.extend(extra)
    human = matrix_lines + ["", "additional suites:"]
    human += _table(extra)
    n_fail = sum(1 for i in items if i.status == FAIL)
    human.append("")
    human.append(f"{len(items)} checks: "
                 f"{sum(1 for i in items if i.status == PASS)} passed, "
                 f"{n_fail} failed, "
                 f"{sum(1 for i in items if i.status == HYP)} hypothesis-not-met")
    return _emit(items, human, args.json)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ritt-lab",
        description="Exact verification of decomposition/chain dictionaries "
                    "on permutation groups, polynomials, additive polynomials "
                    "and rational functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="subgroup-chain verifiers")
    gsub = group.add_subparsers(dest="group_command", required=True)
    gv = gsub.add_parser("verify", help="run theorem verifiers on a context")
    gv.add_argument("context", help="context file")
    gv.add_argument("--theorems", help="comma list from "
                                       + ",".join(ALL_THEOREMS))
    gv.add_argument("--weak-hypothesis", action="store_true",
                    help="accept contexts where only the lattice image of A "
                         "permutes pairwise")
    gv.add_argument("--json", action="store_true")
    gv.set_defaults(func=cmd_group_verify)
    gc = gsub.add_parser("chains", help="list maximal chains and invariants")
    gc.add_argument("context")
    gc.add_argument("--walk", nargs=2, metavar=("FROM", "TO"),
                    help="print the exchange walk between two chain indices")
    gc.add_argument("--weak-hypothesis", action="store_true")
    gc.add_argument("--json", action="store_true")
    gc.set_defaults(func=cmd_group_chains)

    poly = sub.add_parser("poly", help="polynomial decomposition")
    psub = poly.add_subparsers(dest="poly_command", required=True)
    pd = psub.add_parser("decompose", help="all complete decompositions")
    pd.add_argument("poly", help="polynomial file")
    pd.add_argument("--json", action="store_true")
    pd.set_defaults(func=cmd_poly_decompose)
    pi = psub.add_parser("invariants", help="Aut, gamma order, factorable core")
    pi.add_argument("poly")
    pi.add_argument("--json", action="store_true")
    pi.set_defaults(func=cmd_poly_invariants)

    add = sub.add_parser("additive", help="skew/additive factorization")
    asub = add.add_subparsers(dest="additive_command", required=True)
    af = asub.add_parser("factor", help="complete skew factorizations")
    af.add_argument("skew", help="skew polynomial file")
    af.add_argument("--json", action="store_true")
    af.set_defaults(func=cmd_additive_factor)

    lb = sub.add_parser("laurent-branch",
                        help="branch expansions and the inertia cycle")
    lb.add_argument("--field", required=True, help="e.g. F7")
    lb.add_argument("--poly", required=True, help="sparse terms, e.g. '3:1 1:1'")
    lb.add_argument("--precision", type=int)
    lb.add_argument("--json", action="store_true")
    lb.set_defaults(func=cmd_laurent_branch)

    ce = sub.add_parser("counterexample",
                        help="automorphism divisibility counterexample")
    ce.add_argument("--prime", type=int, required=True)
    ce.add_argument("--outer", help="rational function file")
    ce.add_argument("--inner", help="rational function file")
    ce.add_argument("--json", action="store_true")
    ce.set_defaults(func=cmd_counterexample)

    fx = sub.add_parser("fixtures", help="bundled acceptance fixtures")
    fsub = fx.add_subparsers(dest="fixtures_command", required=True)
    fr = fsub.add_parser("run-all", help="run the whole acceptance matrix")
    fr.add_argument("--json", action="store_true")
    fr.set_defaults(func=cmd_fixtures_run_all)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RittLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
