"""Command-line entry point (``packdual``).

Machine-readable results go to stdout as a single JSON object, diagnostics
to stderr. Exit codes: 0 success, 1 infeasible solution or failed check,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import reductions as red
from .errors import ContractViolation, InputError
from .formats import parse_solution, read_instance, serialize_instance, serialize_solution
from .generators import gen_gnp, gen_setsystem
from .model import SetSystem
from .selftest import ROUTE_TABLE, run_selftest
from .solvers import (
    PROBLEMS,
    SolveReport,
    approx_element_packing,
    check_pairing,
    find_packing,
    greedy_set_packing,
    is_feasible,
    solve_approx,
    solve_exact,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(obj: dict) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _load(path: str, problem: str | None = None):
    inst = read_instance(path).payload
    if isinstance(inst, SetSystem) and not inst.is_normalized and problem != "sp":
        norm, _ = inst.normalize()
        print(f"note: dropped {inst.m - norm.m} empty set(s); set ids renumbered", file=sys.stderr)
        inst = norm
    if problem is not None:
        check_pairing(problem, inst)
    return inst


def _read_solution(path: str) -> list[int]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_solution(text)


def cmd_solve(args) -> int:
    inst = _load(args.file, args.problem)
    if args.algo == "exact":
        rep = solve_exact(args.problem, inst)
    elif args.algo == "greedy":
        if args.problem == "sp":
            rep = greedy_set_packing(inst)
        elif args.problem == "scbar":
            rep = approx_element_packing(inst)
        else:
            raise InputError("greedy applies to sp and scbar; use --algo approx for graphs")
    elif args.algo == "approx":
        rep = solve_approx(args.problem, inst)
    else:
        if args.k is None:
            raise InputError("--algo decide needs --k")
        t0 = time.perf_counter()
        witness = find_packing(args.problem, inst, args.k)
        elapsed = (time.perf_counter() - t0) * 1e3
        sol = witness if witness is not None else ()
        out = SolveReport(args.problem, "decision", sol, False, elapsed).to_json()
        out.update(k=args.k, decision=witness is not None)
        _emit(out)
        return EXIT_OK
    _emit(rep.to_json())
    return EXIT_OK


def _build(route: str, inst):
    r = ROUTE_TABLE[route]
    check_pairing(r.source_problem, inst)
    w = r.build(inst)
    return r, w, r.target_of(w)


def cmd_reduce(args) -> int:
    r = ROUTE_TABLE[args.route]
    inst = _load(args.file, r.source_problem)
    _, _, target = _build(args.route, inst)
    Path(args.output).write_text(serialize_instance(target))
    _emit({
        "route": args.route,
        "source_problem": r.source_problem,
        "target_problem": r.target_problem,
        "target_n": target.n,
        "target_m": target.m,
        "output": args.output,
    })
    return EXIT_OK


def cmd_map(args) -> int:
    r = ROUTE_TABLE[args.route]
    inst = _load(args.instance, r.source_problem)
    _, w, _ = _build(args.route, inst)
    sol = _read_solution(args.solution)
    if args.direction == "forward":
        fn, out_problem = r.forward, r.target_problem
    else:
        fn, out_problem = r.backward, r.source_problem
    try:
        out = fn(w, sol)
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.output:
        Path(args.output).write_text(serialize_solution(out))
    _emit({
        "route": args.route,
        "direction": args.direction,
        "problem": out_problem,
        "size": len(out),
        "solution": [i + 1 for i in out],
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load(args.instance, args.problem)
    sol = _read_solution(args.solution)
    ok = is_feasible(args.problem, inst, sol)
    _emit({"problem": args.problem, "feasible": ok, "size": len(sol), "solution": [i + 1 for i in sorted(sol)]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.kind == "graph":
        inst = gen_gnp(args.n, args.p, args.seed)
    else:
        inst = gen_setsystem(args.n, args.m, args.max_set_size, args.seed)
    text = serialize_instance(inst)
    if args.output:
        Path(args.output).write_text(text)
        _emit({"kind": args.kind, "n": inst.n, "m": inst.m, "output": args.output})
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    rep = run_selftest(args.max_n, args.max_m, args.samples, args.seed, args.inject_corruption)
    summary = rep.summary()
    _emit(summary)
    if not rep.passed:
        print(f"selftest: {len(rep.failures)} failing record(s)", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="packdual", description="Vertex, edge, set and element packing toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve a packing instance")
    s.add_argument("--problem", choices=PROBLEMS, required=True)
    s.add_argument("--algo", choices=("exact", "greedy", "approx", "decide"), default="exact")
    s.add_argument("--k", type=int)
    s.add_argument("file")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("reduce", help="write the reduced instance")
    s.add_argument("--route", choices=red.ROUTES, required=True)
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("map-solution", help="carry a solution across a reduction")
    s.add_argument("--route", choices=red.ROUTES, required=True)
    s.add_argument("--instance", required=True, help="source instance of the route")
    s.add_argument("--solution", required=True)
    s.add_argument("--direction", choices=("forward", "backward"), default="forward",
                   help="forward: source solution to target; backward: target solution to source")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("verify", help="check feasibility of a solution")
    s.add_argument("--problem", choices=PROBLEMS, required=True)
    s.add_argument("--instance", required=True)
    s.add_argument("--solution", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="generate a seeded random instance")
    gsub = s.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("setsystem")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--max-set-size", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("selftest", help="run the equivalence suite")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--max-m", type=int, default=4)
    s.add_argument("--samples", type=int, default=2000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--inject-corruption", action="store_true",
                   help="negative control: corrupt forward-mapped solutions")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
