"""Command-line driver.

Subcommands:

* solve  -- run one algorithm variant on an instance file.
* bench  -- random instances vs. the exact brute force; writes a CSV of
            per-trial ratios and exits nonzero on any bound violation.
* gadget -- emit reduction/gadget instances as files.

Exit codes: 0 ok, 1 I/O or parse error, 2 validation error (including a
variant applied to an instance it does not support), 3 bound violation
detected by bench.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from .core import first_unshifted_row
from .instances import (
    DEFAULT_BUDGET,
    EnumerationBudgetExceeded,
    Graph,
    Instance,
    InstanceFormatError,
    Meta,
    PrescribedCongestion,
    body_to_system,
    brute_force_sco,
    coloring_gadget,
    congestion_to_cost,
    explicit_members,
    hexagon_gadget,
    independent_set_gadget,
    parse,
    perfect_matchings,
    random_instance,
    serialize,
)
from .oracles import BipartiteMatchings, ExplicitSystem, UniformMatroid
from .sco import (
    NotShiftedError,
    constant_shifted,
    convex_identical,
    log_approx,
    small_n_approx,
)

VARIANTS = ("shifted", "log", "small-n", "convex", "exact")


@dataclass(frozen=True)
class BenchRecord:
    """One bench trial under one algorithm variant."""

    seed: int
    d: int
    n: int
    set_size: int
    variant: str
    apx: int | None
    opt: int | None
    ratio: Fraction | None
    bound: Fraction
    skipped: bool = False

    @property
    def violated(self) -> bool:
        if self.skipped or self.opt is None or self.apx is None or self.opt <= 0:
            return False
        return self.apx * self.bound.denominator < self.bound.numerator * self.opt

    def row(self) -> list[str]:
        if self.skipped:
            apx, opt, ratio = "", "", "skipped"
        else:
            apx, opt = str(self.apx), str(self.opt)
            ratio = str(self.ratio) if self.ratio is not None else ""
        return [
            str(self.seed),
            str(self.d),
            str(self.n),
            str(self.set_size),
            self.variant,
            apx,
            opt,
            ratio,
            str(self.bound),
            "true" if self.violated else "false",
        ]


def _print_solution(matrix_rows) -> None:
    print("solution:")
    for row in matrix_rows:
        print("".join(str(v) for v in row))


def _cmd_solve(args) -> int:
    try:
        data = open(args.file, "rb").read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        inst = parse(data)
    except InstanceFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1

    c, n, system = inst.c, inst.n, inst.system
    try:
        if args.variant == "exact":
            members = explicit_members(system, args.budget)
            value, solution = brute_force_sco(members, c, n, args.budget)
            bound = Fraction(1)
            level = None
        elif args.variant == "shifted":
            res = constant_shifted(system, c, n)
            value, solution, bound, level = res.value, res.solution, res.bound, res.level
        elif args.variant == "log":
            res = log_approx(system, c, n)
            value, solution, bound, level = res.value, res.solution, res.bound, res.level
        elif args.variant == "small-n":
            res = small_n_approx(system, c, n)
            value, solution, bound, level = res.value, res.solution, res.bound, res.level
        else:  # convex: interpret rows as increments of per-element value tables
            tables = []
            for row in c:
                run, table = 0, [0]
                for v in row:
                    run += v
                    table.append(run)
                tables.append(tuple(table))
            bad = first_unshifted_row(tuple(tuple(reversed(row)) for row in c))
            if bad is not None:
                raise NotShiftedError(bad)
            s, value = convex_identical(system, tables, n)
            solution = tuple((b,) * n for b in s)
            bound = Fraction(1)
            level = None
    except NotShiftedError as exc:
        if args.variant == "convex":
            print(
                f"validation error: row {exc.row + 1} is not nondecreasing; "
                "the convex variant needs convex per-element tables",
                file=sys.stderr,
            )
        else:
            print(
                f"validation error: cost matrix is not shifted, row {exc.row + 1} increases",
                file=sys.stderr,
            )
        return 2
    except (ValueError, EnumerationBudgetExceeded) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2

    print(f"variant: {args.variant}")
    print(f"value: {value}")
    print(f"bound: {bound} (~{float(bound):.6f})")
    if level is not None:
        print(f"level: {level}")
    if inst.meta is not None and inst.meta.target is not None:
        met = "yes" if value == inst.meta.target else "no"
        print(f"target: {inst.meta.target} met: {met}")
    if args.print_solution:
        _print_solution(solution)
    return 0


def _bench_variants(n: int, shifted: bool) -> list[str]:
    variants = ["shifted"] if shifted else []
    variants.append("log")
    if n in (2, 3, 4):
        variants.append("small-n")
    return variants


def _cmd_bench(args) -> int:
    if args.trials < 1:
        print("validation error: --trials must be >= 1", file=sys.stderr)
        return 2
    variants = _bench_variants(args.n, args.shifted)
    records: list[BenchRecord] = []
    for trial in range(args.trials):
        inst_seed = args.seed + trial
        try:
            inst = random_instance(
                inst_seed,
                d=args.d,
                n=args.n,
                set_size=args.set_size,
                cost_range=args.cost_range,
                shifted=args.shifted,
            )
        except ValueError as exc:
            print(f"validation error: {exc}", file=sys.stderr)
            return 2
        base = dict(seed=inst_seed, d=args.d, n=args.n, set_size=args.set_size)
        try:
            opt, _ = brute_force_sco(inst.system, inst.c, inst.n, args.budget)
        except EnumerationBudgetExceeded:
            for variant in variants:
                records.append(
                    BenchRecord(
                        **base,
                        variant=variant,
                        apx=None,
                        opt=None,
                        ratio=None,
                        bound=_run_variant_bound(variant, inst),
                        skipped=True,
                    )
                )
            continue
        for variant in variants:
            res = _run_variant(variant, inst)
            ratio = Fraction(res.value, opt) if opt > 0 else None
            records.append(
                BenchRecord(
                    **base,
                    variant=variant,
                    apx=res.value,
                    opt=opt,
                    ratio=ratio,
                    bound=res.bound,
                )
            )

    try:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(
                ["seed", "d", "n", "set_size", "variant", "apx", "opt", "ratio", "bound", "violated"]
            )
            for rec in records:
                writer.writerow(rec.row())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    violations = 0
    for variant in variants:
        ratios = [r.ratio for r in records if r.variant == variant and r.ratio is not None]
        vio = sum(1 for r in records if r.variant == variant and r.violated)
        skipped = sum(1 for r in records if r.variant == variant and r.skipped)
        violations += vio
        bound = next(r.bound for r in records if r.variant == variant)
        min_ratio = f"{float(min(ratios)):.6f}" if ratios else "n/a"
        print(
            f"variant={variant} trials={args.trials} min_ratio={min_ratio} "
            f"bound={float(bound):.6f} violations={vio} skipped={skipped}"
        )
    if violations:
        print(f"bound violations detected: {violations}", file=sys.stderr)
        return 3
    return 0


def _run_variant(variant: str, inst: Instance):
    if variant == "shifted":
        return constant_shifted(inst.system, inst.c, inst.n)
    if variant == "log":
        return log_approx(inst.system, inst.c, inst.n)
    return small_n_approx(inst.system, inst.c, inst.n)


def _run_variant_bound(variant: str, inst: Instance) -> Fraction:
    from .sco import ratio_bound

    key = {"shifted": "shifted_constant", "log": "general_log", "small-n": "small_n"}[variant]
    return ratio_bound(key, inst.n)


def _parse_edge_list(text: str) -> tuple[tuple[int, int], ...]:
    edges = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        bits = part.split("-")
        if len(bits) != 2:
            raise ValueError(f"bad edge {part!r}; expected u-v")
        edges.append((int(bits[0]) - 1, int(bits[1]) - 1))
    if not edges:
        raise ValueError("empty edge list")
    return tuple(edges)


def _parse_family(text: str) -> tuple[tuple[int, ...], ...]:
    sets = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        sets.append(tuple(int(v) - 1 for v in part.split(",")))
    if not sets:
        raise ValueError("empty set family")
    return tuple(sets)


def _parse_congestion_sets(text: str) -> tuple[frozenset[int], ...]:
    sets = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        sets.append(frozenset(int(v) for v in part.split(",")))
    if not sets:
        raise ValueError("empty congestion set list")
    return tuple(sets)


def _cmd_gadget(args) -> int:
    try:
        if args.kind == "independent-set":
            graph = Graph(args.vertices, _parse_edge_list(args.edges))
            inst = independent_set_gadget(graph, args.n)
        elif args.kind == "coloring":
            graph = Graph(args.vertices, _parse_edge_list(args.edges))
            pc = coloring_gadget(graph)
            body = perfect_matchings(graph)
            if not body:
                print(
                    "validation error: graph has no perfect matching",
                    file=sys.stderr,
                )
                return 2
            c, target = congestion_to_cost(pc)
            system = ExplicitSystem(body, downward_closed=False)
            inst = Instance(
                system,
                2,
                c,
                Meta(
                    target=target,
                    description="perfect matchings of a cubic graph; target met iff "
                    "two edge-disjoint perfect matchings exist",
                ),
            )
        elif args.kind == "hexagon":
            family = _parse_family(args.sets)
            bgraph, pc = hexagon_gadget(family, args.k)
            c, target_c = congestion_to_cost(pc)
            bump = 2 * sum(abs(v) for row in c for v in row) + 1
            b = tuple(tuple(v + bump for v in row) for row in c)
            pm_size = (bgraph.left + bgraph.right) // 2
            target = target_c + bump * 2 * pm_size
            inst = Instance(
                BipartiteMatchings(bgraph),
                2,
                b,
                Meta(
                    target=target,
                    description="hexagon gadget over bipartite matchings; target met "
                    "iff an exact cover by the given 3-sets exists",
                ),
            )
        elif args.kind == "congestion":
            pc = PrescribedCongestion(args.n, _parse_congestion_sets(args.sets))
            c, target = congestion_to_cost(pc)
            d = len(pc.sets)
            rank = args.rank if args.rank is not None else d
            inst = Instance(
                UniformMatroid(d, rank),
                args.n,
                c,
                Meta(
                    target=target,
                    description="prescribed congestion over a uniform matroid; "
                    "target met iff the prescription is feasible",
                ),
            )
        else:  # lift-body
            try:
                body_inst = parse(open(args.body, "rb").read())
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
            except InstanceFormatError as exc:
                print(f"parse error: {exc}", file=sys.stderr)
                return 1
            if not isinstance(body_inst.system, ExplicitSystem):
                raise ValueError("lift-body needs an instance with an explicit system")
            closure, b = body_to_system(body_inst.system, body_inst.c)
            meta = body_inst.meta
            if meta is not None and meta.target is not None:
                bump = 2 * sum(abs(v) for row in body_inst.c for v in row) + 1
                card = sum(body_inst.system.vectors[0])
                meta = replace(
                    meta, target=meta.target + bump * body_inst.n * card
                )
            inst = Instance(closure, body_inst.n, b, meta)
    except (ValueError, EnumerationBudgetExceeded) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2

    try:
        with open(args.out, "wb") as fh:
            fh.write(serialize(inst))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


def _bool_flag(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftopt",
        description="Shifted combinatorial optimization over independence systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("file")
    solve.add_argument("--variant", choices=VARIANTS, required=True)
    solve.add_argument("--print-solution", action="store_true")
    solve.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    solve.set_defaults(func=_cmd_solve)

    bench = sub.add_parser("bench", help="benchmark algorithms against brute force")
    bench.add_argument("--d", type=int, required=True)
    bench.add_argument("--n", type=int, required=True)
    bench.add_argument("--set-size", type=int, required=True)
    bench.add_argument("--cost-range", type=int, required=True)
    bench.add_argument("--shifted", type=_bool_flag, required=True)
    bench.add_argument("--trials", type=int, required=True)
    bench.add_argument("--seed", type=int, required=True)
    bench.add_argument("--out", required=True)
    bench.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    bench.set_defaults(func=_cmd_bench)

    gadget = sub.add_parser("gadget", help="emit a reduction gadget instance")
    gsub = gadget.add_subparsers(dest="kind", required=True)

    ind = gsub.add_parser("independent-set")
    ind.add_argument("--vertices", type=int, required=True)
    ind.add_argument("--edges", required=True, help='edge list like "1-2,2-3"')
    ind.add_argument("--n", type=int, required=True)
    ind.add_argument("--out", required=True)
    ind.set_defaults(func=_cmd_gadget)

    col = gsub.add_parser("coloring")
    col.add_argument("--vertices", type=int, required=True)
    col.add_argument("--edges", required=True, help='edge list like "1-2,2-3"')
    col.add_argument("--out", required=True)
    col.set_defaults(func=_cmd_gadget)

    hexa = gsub.add_parser("hexagon")
    hexa.add_argument("--k", type=int, required=True)
    hexa.add_argument("--sets", required=True, help='3-set family like "1,2,3;4,5,6"')
    hexa.add_argument("--out", required=True)
    hexa.set_defaults(func=_cmd_gadget)

    cong = gsub.add_parser("congestion")
    cong.add_argument("--n", type=int, required=True)
    cong.add_argument("--sets", required=True, help='congestion sets like "0,1;0,2"')
    cong.add_argument("--rank", type=int, default=None)
    cong.add_argument("--out", required=True)
    cong.set_defaults(func=_cmd_gadget)

    lift = gsub.add_parser("lift-body")
    lift.add_argument("--body", required=True, help="instance file with an explicit body")
    lift.add_argument("--out", required=True)
    lift.set_defaults(func=_cmd_gadget)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
