"""Command-line front end: parse or generate instances, solve, report.

Modes:
  decide         is there a deletion set of size <= k? exit 0 yes, 1 no
  minimize       find the smallest deletion set
  verify-factors recompute every branching-rule factor and check its bounds
  oracle-check   compare the search engine against brute force on a seeded
                 batch of random instances

Vertex ids are 1-based on input and output to match the DIMACS habit;
internally everything is 0-based. Exit codes: 0 success/yes, 1 no/failed
check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from random import Random

from .analysis import verify_factors
from .graph import Graph, GraphUsageError, Instance
from .oracle import (
    PLANT_KINDS,
    GeneratorSpec,
    PlantSpec,
    brute_force_minimum,
    generate,
)
from .search import SearchStats, solve_decision, solve_minimum, validate_solution


class DimacsParseError(ValueError):
    """Input file rejected; str(err) names the offending line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def parse_dimacs(text: str) -> Graph:
    """Graph from DIMACS edge format.

    Accepts comment lines ("c ..."), one "p edge <n> <m>" line, and edge
    lines "e <u> <v>" with 1-based endpoints. Duplicate edges collapse;
    self-loops, out-of-range ids, and malformed lines are errors. The
    declared edge count is not enforced, the edge lines are authoritative.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise DimacsParseError("duplicate p line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError("p line counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise DimacsParseError("p line counts must be nonnegative", lineno)
        elif kind == "e":
            if n is None:
                raise DimacsParseError("edge line before the p line", lineno)
            if len(parts) != 3:
                raise DimacsParseError("expected 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise DimacsParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsParseError(f"unrecognized line kind {kind!r}", lineno)
    if n is None:
        raise DimacsParseError("missing 'p edge <n> <m>' line")
    return Graph(n, edges)


def format_dimacs(g: Graph) -> str:
    """Serialize the active part of a graph back to DIMACS edge format."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


@dataclass
class RunConfig:
    """Everything one invocation needs; built by main() from flags."""

    mode: str
    d: int | None = None
    k: int | None = None
    input_path: str | None = None
    gen: GeneratorSpec | None = None
    stats_path: str | None = None
    tol: float = 1e-6
    seed: int = 0


def _load_graph(config: RunConfig) -> Graph:
    if (config.input_path is None) == (config.gen is None):
        raise ValueError("exactly one of --input and --gen is required")
    if config.input_path is not None:
        with open(config.input_path, encoding="utf-8") as fh:
            return parse_dimacs(fh.read())
    return generate(config.gen)


def _ids(solution: set[int]) -> str:
    return " ".join(str(v + 1) for v in sorted(solution))


def _write_stats(config: RunConfig, stats: SearchStats) -> None:
    if config.stats_path is None:
        return
    doc = stats.as_dict()
    doc["max_measured_factor"] = stats.max_measured_factor()
    with open(config.stats_path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _run_decide(config: RunConfig) -> int:
    if config.d is None or config.k is None:
        raise ValueError("decide mode needs --d and --k")
    g = _load_graph(config)
    solution, stats = solve_decision(Instance(g, config.d, config.k))
    _write_stats(config, stats)
    if solution is None:
        print("NO")
        return 1
    print("YES")
    print(_ids(solution))
    return 0


def _run_minimize(config: RunConfig) -> int:
    if config.d is None:
        raise ValueError("minimize mode needs --d")
    g = _load_graph(config)
    if config.k is not None:
        # Treat k as a cap: report NO if the minimum exceeds it.
        solution, stats = solve_decision(Instance(g, config.d, config.k))
        if solution is None:
            _write_stats(config, stats)
            print("NO")
            return 1
        best, more = solve_minimum(g, config.d)
        stats.merge(more)
    else:
        best, stats = solve_minimum(g, config.d)
    _write_stats(config, stats)
    print(f"MINIMUM {len(best)}")
    print(_ids(best))
    return 0


def _run_verify_factors(config: RunConfig) -> int:
    rows = verify_factors(range(2, 9), tol=config.tol)
    doc = {
        "rows": [row.as_dict() for row in rows],
        "all_ok": all(row.ok for row in rows),
        "max_factor": max(row.factor for row in rows),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0 if doc["all_ok"] else 1


def _run_oracle_check(config: RunConfig) -> int:
    """Seeded engine-vs-brute-force batch; any disagreement fails the run."""
    rng = Random(config.seed)
    total = 40
    for i in range(total):
        n = rng.randint(6, 10)
        p = rng.choice([0.2, 0.5, 0.8])
        d = rng.choice([1, 2, 3])
        g = generate(GeneratorSpec(n, p, rng.getrandbits(32)))
        best, stats = solve_minimum(g, d)
        reference = brute_force_minimum(g, d)
        if len(best) != len(reference) or not validate_solution(g, d, best):
            print(f"oracle-check: disagreement at instance {i} "
                  f"(n={n} p={p} d={d}): engine {sorted(best)}, "
                  f"brute force {sorted(reference)}")
            return 1
        if stats.fallback_count:
            print(f"oracle-check: fallback fired at instance {i} (n={n} p={p} d={d})")
            return 1
    print(f"oracle-check: {total}/{total} instances agree (seed {config.seed})")
    return 0


def run(config: RunConfig) -> int:
    """Execute one configured invocation; returns the process exit code."""
    runners = {
        "decide": _run_decide,
        "minimize": _run_minimize,
        "verify-factors": _run_verify_factors,
        "oracle-check": _run_oracle_check,
    }
    try:
        return runners[config.mode](config)
    except (DimacsParseError, GraphUsageError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _parse_gen(text: str) -> tuple[int, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--gen expects n,p,seed")
    try:
        return int(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --gen value {text!r}") from None


def _parse_plant(text: str) -> dict:
    head, *opts = text.split(",")
    if head not in PLANT_KINDS:
        raise argparse.ArgumentTypeError(
            f"unknown plant {head!r}; choose from {', '.join(PLANT_KINDS)}"
        )
    out: dict = {"kind": head}
    for opt in opts:
        key, eq, value = opt.partition("=")
        if key == "x" and eq:
            try:
                out["x"] = int(value)
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad x value {value!r}") from None
        elif key == "shape" and eq:
            out["shape"] = value
        else:
            raise argparse.ArgumentTypeError(f"bad plant option {opt!r}")
    return out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="bddv",
        description="Exact solver for deleting at most k vertices so that "
                    "every remaining vertex has degree at most d.",
    )
    parser.add_argument("--mode", required=True,
                        choices=["decide", "minimize", "verify-factors", "oracle-check"])
    parser.add_argument("--input", metavar="PATH",
                        help="DIMACS edge-format instance file")
    parser.add_argument("--gen", metavar="N,P,SEED", type=_parse_gen,
                        help="generate a random instance instead of reading one")
    parser.add_argument("--plant", metavar="TAG[,x=N][,shape=S]", type=_parse_plant,
                        help="embed a named configuration in the generated instance "
                             f"({', '.join(PLANT_KINDS)})")
    parser.add_argument("--d", type=int, help="degree bound")
    parser.add_argument("--k", type=int, help="deletion budget (cap in minimize mode)")
    parser.add_argument("--stats", metavar="PATH",
                        help="write search statistics as one JSON object")
    parser.add_argument("--tol", type=float, default=1e-6,
                        help="closed-form comparison tolerance for verify-factors")
    args = parser.parse_args(argv)

    seed_env = os.environ.get("BDDV_SEED")
    try:
        seed_override = int(seed_env) if seed_env is not None else None
    except ValueError:
        print(f"error: BDDV_SEED must be an integer, got {seed_env!r}", file=sys.stderr)
        return 2

    gen = None
    seed = seed_override if seed_override is not None else 0
    if args.gen is not None:
        n, p, seed_arg = args.gen
        seed = seed_override if seed_override is not None else seed_arg
        plant = None
        if args.plant is not None:
            if args.d is None:
                print("error: --plant needs --d", file=sys.stderr)
                return 2
            plant = PlantSpec(d=args.d, **args.plant)
        gen = GeneratorSpec(n=n, p=p, seed=seed, plant=plant)
    elif args.plant is not None:
        print("error: --plant needs --gen", file=sys.stderr)
        return 2

    config = RunConfig(
        mode=args.mode,
        d=args.d,
        k=args.k,
        input_path=args.input,
        gen=gen,
        stats_path=args.stats,
        tol=args.tol,
        seed=seed,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
