# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Command-line entry point.

Exit codes: 0 on success, 1 when a check fails or a verdict is negative, 2 when an input
cannot be read or parsed.
"""
# pylint: disable=too-many-instance-attributes, invalid-name
import argparse
import difflib
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import env_vars
from .arith import ThetaReal, parse_rational, parse_theta
from .bratteli import (
    dot_export,
    dot_export_skeleton,
    first_path,
    level_description,
    load_diagram,
    parse_diagram,
    validate,
)
from .cohomology import dump_cochain, sample_cocycles, verify_reduction
from .errors import ConfigError, ParseError, PreconditionError, Rank3Error
from .kgraph import degree as dg
from .kgraph import tower_from_path
from .ktheory import (
    NotSimple,
    Simple,
    check_intertwiner,
    emit_nonneg_matrices,
    k0_equal,
    k0_positive,
    limit_summary,
    matrix_A,
    matrix_B,
    matrix_csv,
    parse_class,
    push_A,
    push_B,
    representable,
    simplicity,
    theta_iso,
)
from .traces import solve_traces
from .utils import metrics_report, timed

logger = logging.getLogger("CLI")  # pylint: disable=invalid-name

DATA_DIR = Path(__file__).parent / "data"
EXAMPLES = ("example1", "example2", "example3")
EXAMPLE_LEVELS = 3


@dataclass
class Config:
    """Options shared by all commands, validated on construction."""

    command: str
    diagram: str = None
    theta: str = env_vars.DEFAULT_THETA
    levels: int = 6
    bound: tuple = (2, 2)
    seed: int = env_vars.DEFAULT_SEED
    out: str = None
    metrics: bool = False
    verbose: bool = False

    def __post_init__(self):
        try:
            self.theta_spec = parse_theta(self.theta)
        except ParseError as err:
            raise ConfigError(f"--theta: {err}") from err
        if self.levels is None or self.levels < 1:
            raise ConfigError(f"--levels must be >= 1, got {self.levels}")
        if not self.bound or any(x < 1 for x in self.bound):
            raise ConfigError(f"--bound must be positive, got {self.bound}")


def _add_common(parser):
    parser.add_argument("diagram", help="weighted Bratteli diagram (JSON)", type=str)
    parser.add_argument(
        "--theta",
        help="theta as cf:0,a1,...,(period) or surd:(a+b*sqrt(d))/c",
        type=str,
        default=os.environ.get(env_vars.THETA, env_vars.DEFAULT_THETA),
    )
    parser.add_argument("--levels", help="number of levels", type=int, default=6)
    parser.add_argument("--bound", help="degree bound p,q[,r]", type=str, default="2,2")
    parser.add_argument(
        "--seed",
        help="random seed",
        type=int,
        default=int(os.environ.get(env_vars.SEED, env_vars.DEFAULT_SEED)),
    )
    parser.add_argument("--out", help="write the report to this file", type=str, default=None)


def create_parser():
    parser = argparse.ArgumentParser(
        prog="rank3bd", formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument("--metrics", help="print timers and counters to stderr", action="store_true")
    parser.add_argument("--verbose", help="log at INFO level", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    _add_common(sub.add_parser("validate", help="check the diagram invariants", formatter_class=fmt))

    cmd = sub.add_parser("ktheory", help="level groups, connecting maps, summary", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--matrices", help="append the A'_n CSV", action="store_true")

    cmd = sub.add_parser("k0", help="queries on a K_0 class", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--class", dest="klass", help="k0@n: v=(p,q); ...", type=str, default=None)
    cmd.add_argument("--other", help="compare with this class", type=str, default=None)
    cmd.add_argument("--member", help="value a,b of a+b*theta to locate", type=str, default=None)
    cmd.add_argument("--level", help="level for --member", type=int, default=1)

    cmd = sub.add_parser("k1", help="queries on a K_1 class", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--class", dest="klass", help="k1@n: v=(a,b); ...", type=str, required=True)

    cmd = sub.add_parser("cocycle", help="sample cocycles on a tower and reduce them", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--modulus", help="coefficients Z/m", type=int, default=12)
    cmd.add_argument("--count", help="number of samples", type=int, default=50)
    cmd.add_argument("--dump", help="write the first sample here", type=str, default=None)
    cmd.add_argument("--corrupt", help="perturb the first sample", action="store_true")

    cmd = sub.add_parser("traces", help="solve the trace equations", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--normalize", help="trace of the corner unit is 1", action="store_true")

    _add_common(sub.add_parser("simplicity", help="cofinality verdict", formatter_class=fmt))

    cmd = sub.add_parser("dot", help="Graphviz export", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--skeleton", help="draw the rank-3 skeleton", action="store_true")

    cmd = sub.add_parser("matrices", help="nonnegative matrices A'_n as CSV", formatter_class=fmt)
    _add_common(cmd)
    cmd.add_argument("--level", help="emit only A'_n for this n", type=int, default=None)

    cmd = sub.add_parser("examples", help="run the golden example suite", formatter_class=fmt)
    cmd.add_argument("--update", help="rewrite the golden files", action="store_true")
    return parser


def setup_logging(verbose):
    level = "INFO" if verbose else os.environ.get(env_vars.LOG_LEVEL, env_vars.DEFAULT_LOG_LEVEL)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(level.upper())


def _emit(config, text):
    if config.out:
        with open(config.out, "w", encoding="utf-8") as filep:
            filep.write(text)
    else:
        sys.stdout.write(text)


def _load(config):
    """Load and validate the diagram; violations are printed and end the command."""
    E = load_diagram(config.diagram)
    report = validate(E)
    if report:
        _emit(config, format_violations(report))
        return None
    return E


def format_violations(report):
    return "".join(f"{v.kind}\t{v.subject}\t{v.message}\n" for v in report)


def _fmt_matrix(matrix):
    return "[" + ",".join("[" + ",".join(str(int(x)) for x in row) + "]" for row in matrix) + "]"


def _fmt_simplicity(verdict):
    if isinstance(verdict, Simple):
        return f"Simple (cofinal with n={verdict.level})"
    if isinstance(verdict, NotSimple):
        return f"NotSimple ({verdict.evidence[0]} and {verdict.evidence[1]} are never absorbed)"
    return f"Unknown ({verdict.reason})"


# ----------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------
def ktheory_report(E, spec, levels, matrices=False):
    lines = [f"theta: {spec}"]
    for n in range(1, levels + 1):
        lines.append(f"level {n}: " + " ⊕ ".join(level_description(E, n)))
    for n in range(1, levels):
        lines.append(f"A_{n} = {_fmt_matrix(matrix_A(E, n))}")
        lines.append(f"B_{n} = {_fmt_matrix(matrix_B(E, n))}")
    ok, witness = check_intertwiner(E, levels)
    lines.append("intertwiner T_{n+1}B_n = A_nT_n: " + ("ok" if ok else f"FAILED at {witness}"))
    lines.append(f"simplicity: {_fmt_simplicity(simplicity(E, min(levels, E.num_levels)))}")
    lines.append(f"limit ≅ {limit_summary(E)}")
    text = "\n".join(lines) + "\n"
    if matrices:
        text += matrices_report(E, levels)
    return text


def traces_report(E, levels, normalize):
    space = solve_traces(E, levels, normalize=normalize)
    mode = "unit normalization" if normalize else "no normalization"
    lines = [f"traces on levels 1..{levels} ({mode}): dimension {space.dimension}"]
    determined = set(space.determined())
    for v in space.variables:
        value = space.particular[v] if v in determined else "free"
        lines.append(f"{E.name(v)}\t{value}")
    return "\n".join(lines) + "\n"


def matrices_report(E, levels, only=None):
    chunks = []
    for n, matrix in enumerate(emit_nonneg_matrices(E, levels), start=1):
        if only is not None and n != only:
            continue
        chunks.append(f"# A'_{n}\n" + matrix_csv(matrix))
    return "".join(chunks)


def example_report(E, spec):
    """The text compared against the golden file of an example."""
    return ktheory_report(E, spec, EXAMPLE_LEVELS) + traces_report(E, EXAMPLE_LEVELS + 1, True)


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
def cmd_validate(config):
    E = load_diagram(config.diagram)
    report = validate(E)
    _emit(config, format_violations(report) if report else "valid\n")
    return 1 if report else 0


def cmd_ktheory(config, args):
    E = _load(config)
    if E is None:
        return 1
    _emit(config, ktheory_report(E, config.theta_spec, config.levels, args.matrices))
    return 0


def cmd_k0(config, args):
    E = _load(config)
    if E is None:
        return 1
    lines, status = [], 0
    if args.member is not None:
        parts = args.member.split(",")
        if len(parts) != 2:
            raise ParseError(f"--member expects a,b, got {args.member!r}")
        value = ThetaReal(parse_rational(parts[0]), parse_rational(parts[1]))
        for v in E.level(args.level):
            found = representable(E, v, value)
            answer = f"yes, {found}" if found is not None else "no"
            lines.append(f"{value} in {E.name(v)}@level {args.level}: {answer}")
    if args.klass is not None:
        x = parse_class(E, args.klass)
        lines.append(str(x))
        lines.append("values: " + "; ".join(str(val) for val in x.values()))
        lines.append(f"pushed to level {config.levels}: {push_A(x, max(x.level, config.levels))}")
        verdict = k0_positive(x, config.theta_spec, config.levels)
        lines.append(f"positive: {verdict}")
        if args.other is not None:
            y = parse_class(E, args.other)
            lines.append(f"equal: {k0_equal(x, y, config.levels)}")
    _emit(config, "\n".join(lines) + "\n")
    return status


def cmd_k1(config, args):
    E = _load(config)
    if E is None:
        return 1
    x = parse_class(E, args.klass)
    target = max(x.level, config.levels)
    image = theta_iso(x)
    natural = push_A(image, target) == theta_iso(push_B(x, target))
    lines = [
        str(x),
        f"theta_iso: {image}",
        f"pushed to level {target}: {push_B(x, target)}",
        "naturality: " + ("ok" if natural else "FAILED"),
    ]
    _emit(config, "\n".join(lines) + "\n")
    return 0 if natural else 1


@timed("cli.cocycle")
def cmd_cocycle(config, args):
    E = _load(config)
    if E is None:
        return 1
    tower = tower_from_path(E, first_path(E, config.levels), bound=config.bound[:2])
    samples, generators = sample_cocycles(tower.graph, args.modulus, args.count, config.seed)
    if args.corrupt:
        if not samples or not samples[0].values:
            raise PreconditionError("--corrupt needs a first sample with a non-zero value")
        first = samples[0]
        # The last pair lies in the top level, so Λ_1 and every ξ avoid it.
        target = max(first.values)
        first.values[target] = first.coefficients.add(first.values[target], 1)
    lines = [
        f"tower: {' -> '.join(E.name(v) for v in tower.path)}, bound {tower.bound}, "
        f"{len(tower.graph)} morphisms",
        f"solution module over Z/{args.modulus}: {generators} generators",
    ]
    passed = 0
    for idx, c in enumerate(samples):
        ok, witness = verify_reduction(c, tower)
        if ok:
            passed += 1
        else:
            lines.append(f"sample {idx}: reduction fails on ({witness[0]}, {witness[1]})")
    if samples:
        lines.append(f"reduction: {passed}/{len(samples)} pass")
    if args.dump and samples:
        with open(args.dump, "w", encoding="utf-8") as filep:
            filep.write(dump_cochain(samples[0]))
    _emit(config, "\n".join(lines) + "\n")
    return 0 if passed == len(samples) else 1


def cmd_traces(config, args):
    E = _load(config)
    if E is None:
        return 1
    _emit(config, traces_report(E, config.levels, args.normalize))
    return 0


def cmd_simplicity(config):
    E = _load(config)
    if E is None:
        return 1
    verdict = simplicity(E, min(config.levels, E.num_levels))
    _emit(config, f"simplicity: {_fmt_simplicity(verdict)}\n")
    return 0


def cmd_dot(config, args):
    E = _load(config)
    if E is None:
        return 1
    export = dot_export_skeleton if args.skeleton else dot_export
    _emit(config, export(E, config.levels))
    return 0


def cmd_matrices(config, args):
    E = _load(config)
    if E is None:
        return 1
    _emit(config, matrices_report(E, config.levels, args.level))
    return 0


def cmd_examples(update):
    """Run the three examples end to end and diff them against the golden files."""
    spec = parse_theta(env_vars.DEFAULT_THETA)
    status = 0
    for name in EXAMPLES:
        with open(DATA_DIR / "examples" / f"{name}.json", "r", encoding="utf-8") as filep:
            E = parse_diagram(filep.read())
        actual = example_report(E, spec)
        golden = DATA_DIR / "golden" / f"{name}.txt"
        if update:
            with open(golden, "w", encoding="utf-8") as filep:
                filep.write(actual)
            print(f"{name}: updated")
            continue
        with open(golden, "r", encoding="utf-8") as filep:
            expected = filep.read()
        if actual == expected:
            print(f"{name}: ok")
            continue
        status = 1
        print(f"{name}: MISMATCH")
        sys.stdout.writelines(
            difflib.unified_diff(
                expected.splitlines(True), actual.splitlines(True), f"{name}.golden", f"{name}.actual"
            )
        )
    return status


def _run(args):
    if args.command == "examples":
        return cmd_examples(args.update)
    config = Config(
        command=args.command,
        diagram=args.diagram,
        theta=args.theta,
        levels=args.levels,
        bound=dg.parse_degree(args.bound),
        seed=args.seed,
        out=args.out,
        metrics=args.metrics,
        verbose=args.verbose,
    )
    logger.info("Running %s on %s", config.command, config.diagram)
    if args.command == "validate":
        return cmd_validate(config)
    if args.command == "simplicity":
        return cmd_simplicity(config)
    handlers = {
        "ktheory": cmd_ktheory,
        "k0": cmd_k0,
        "k1": cmd_k1,
        "cocycle": cmd_cocycle,
        "traces": cmd_traces,
        "dot": cmd_dot,
        "matrices": cmd_matrices,
    }
    return handlers[args.command](config, args)


def main(argv=None):
    args = create_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        status = _run(args)
    except (ParseError, ConfigError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        status = 2
    except Rank3Error as err:
        print(f"error: {err}", file=sys.stderr)
        status = 1
    if args.metrics:
        print(metrics_report(), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
