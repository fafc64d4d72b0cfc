"""Command-line interface for the toolkit.

Subcommands:

* ``solve``     solve the measurement phases at one overlap value
* ``fig1``      CSV of cos(beta) against cos(omega) over a grid
* ``fig2``      CSV comparing minimal device counts of both proof routes
* ``reduce``    reduce a JSON-encoded state pair to its two-dim core
* ``simulate``  sample outcome counts for all four joint preparations
* ``report``    render the epsilon^n incompatibility report

Exit codes: 0 success, 1 usage or IO error, 2 infeasible overlap,
3 degenerate state pair, 4 statistical contradiction (a forbidden
outcome fired in simulation).
"""

import argparse
import json
import sys

import numpy as np

from .errors import DegeneratePair, ToolkitError
from .experiment import contradiction_report, render_report, report_as_dict, sample_outcomes
from .linalg import TOL_NORM
from .measurement import build_C, build_M, outcome_matrix, solve_beta, solve_measurement
from .reduction import alt_log_bound_raw, grouping_plan, min_n_pbr
from .states import OverlapAngle, reduce_pair

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_DEGENERATE = 3
EXIT_CONTRADICTION = 4

# Norm deviations up to this are repaired by renormalizing (with a warning
# on stderr); anything larger is rejected as a usage error.
RENORM_LIMIT = 1e-8


class _UsageError(Exception):
    """Flag or input problem; mapped to exit code 1 instead of argparse's 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _g17(x) -> str:
    """17 significant digits, the round-trip-exact form for doubles."""
    return format(float(x), ".17g")


def _format_matrix(name: str, m: np.ndarray) -> str:
    body = np.array2string(m, precision=6, suppress_small=True, max_line_width=140)
    return f"{name} =\n{body}"


def _figure_grid(resolution: int) -> np.ndarray:
    if resolution < 2:
        raise _UsageError(f"resolution must be >= 2, got {resolution}")
    return np.linspace(0.01, 0.99, resolution)


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")


def cmd_solve(args) -> int:
    angle = OverlapAngle.from_cos(args.cos_omega)
    sol = solve_measurement(angle)
    print(f"cos_omega = {_g17(args.cos_omega)}")
    print(f"cos_beta_raw = {_g17(sol.cos_beta_raw)}")
    if not sol.feasible:
        print("INFEASIBLE: no real beta nulls the diagonal at this overlap; group devices first")
        return EXIT_INFEASIBLE
    print(f"beta = {_g17(sol.beta)}")
    print(f"alpha = {_g17(sol.alpha)}")
    probs = outcome_matrix(angle, sol.alpha, sol.beta)
    print(_format_matrix("M", build_M(sol.alpha, sol.beta)))
    print(_format_matrix("C", build_C(angle)))
    print(_format_matrix("P", probs.p))
    print(f"max diagonal probability = {_g17(probs.p.diagonal().max())}")
    return EXIT_OK


def cmd_fig1(args) -> int:
    rows = []
    for c in _figure_grid(args.resolution):
        sol = solve_beta(OverlapAngle.from_cos(float(c)))
        flag = "true" if sol.feasible else "false"
        rows.append(f"{_g17(c)},{_g17(sol.cos_beta_raw)},{flag}")
    _write_csv(args.out, "cos_omega,cos_beta,feasible", rows)
    return EXIT_OK


def cmd_fig2(args) -> int:
    rows = []
    for c in _figure_grid(args.resolution):
        c = float(c)
        angle = OverlapAngle.from_cos(c)
        rows.append(
            f"{_g17(c)},{min_n_pbr(angle)},{grouping_plan(angle).n},{_g17(alt_log_bound_raw(c))}"
        )
    _write_csv(args.out, "cos_omega,n_pbr,n_alt,n_alt_log_raw", rows)
    return EXIT_OK


def _parse_state(obj: dict, name: str, dim: int) -> np.ndarray:
    entries = obj.get(name)
    if not isinstance(entries, list) or len(entries) != dim:
        raise _UsageError(f"'{name}' must be a list of {dim} [re, im] pairs")
    vec = np.empty(dim, dtype=complex)
    for k, entry in enumerate(entries):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise _UsageError(f"'{name}[{k}]' must be a [re, im] pair")
        try:
            vec[k] = complex(float(entry[0]), float(entry[1]))
        except (TypeError, ValueError):
            raise _UsageError(f"'{name}[{k}]' holds non-numeric values") from None
    return vec


def _load_pair(path: str) -> tuple[np.ndarray, np.ndarray]:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(obj, dict) or not isinstance(obj.get("dim"), int):
        raise _UsageError("input must be an object with integer 'dim' and lists 'psi', 'phi'")
    dim = obj["dim"]
    if dim < 2:
        raise _UsageError(f"'dim' must be >= 2, got {dim}")
    return _parse_state(obj, "psi", dim), _parse_state(obj, "phi", dim)


def _checked_norm(name: str, vec: np.ndarray) -> np.ndarray:
    dev = abs(float(np.linalg.norm(vec)) - 1.0)
    if dev > RENORM_LIMIT:
        raise _UsageError(f"{name} norm deviates by {dev:.3e}, beyond {RENORM_LIMIT:g}")
    if dev > TOL_NORM:
        print(f"warning: renormalizing {name} (norm deviation {dev:.3e})", file=sys.stderr)
        return vec / np.linalg.norm(vec)
    return vec


def cmd_reduce(args) -> int:
    psi, phi = _load_pair(args.in_path)
    psi = _checked_norm("psi", psi)
    phi = _checked_norm("phi", phi)
    try:
        pair = reduce_pair(psi, phi)
    except DegeneratePair:
        print("error: states identical up to phase", file=sys.stderr)
        return EXIT_DEGENERATE
    plan = grouping_plan(pair.omega)
    print(f"cos_omega = {_g17(pair.omega.cos)}")
    print(f"omega = {_g17(pair.omega.omega)}")
    print(f"phase_applied = {_g17(pair.phase_applied)}")
    print(_format_matrix("basis0", pair.basis0))
    print(_format_matrix("basis1", pair.basis1))
    print(f"grouping: n = {plan.n} devices in two groups of {plan.group_size}")
    print(f"effective cos = {_g17(plan.effective_omega.cos)}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.trials < 1:
        raise _UsageError(f"trials must be >= 1, got {args.trials}")
    angle = OverlapAngle.from_cos(args.cos_omega)
    sol = solve_measurement(angle)
    effective = angle
    if not sol.feasible:
        plan = grouping_plan(angle)
        effective = plan.effective_omega
        sol = solve_measurement(effective)
        print(f"reduced: n={plan.n}, effective cos = {_g17(effective.cos)}")
    probs = outcome_matrix(effective, sol.alpha, sol.beta)
    print(f"cos_omega = {_g17(args.cos_omega)}, beta = {_g17(sol.beta)}, alpha = {_g17(sol.alpha)}")
    print(f"trials = {args.trials} per preparation, base seed = {args.seed}")
    fired = 0
    for j in (1, 2, 3, 4):
        tally = sample_outcomes(probs, j, args.trials, args.seed + (j - 1))
        fired += tally.counts[j - 1]
        joined = ", ".join(str(k) for k in tally.counts)
        print(
            f"preparation {j}: counts = [{joined}],"
            f" forbidden outcome {j} count = {tally.counts[j - 1]}"
        )
    if fired:
        print(f"statistical contradiction: forbidden outcomes fired {fired} times")
        return EXIT_CONTRADICTION
    print("forbidden outcomes fired 0 times")
    return EXIT_OK


def cmd_report(args) -> int:
    rep = contradiction_report(OverlapAngle.from_cos(args.cos_omega), args.epsilon)
    if args.as_json:
        print(json.dumps(report_as_dict(rep), indent=2, sort_keys=True))
    else:
        print(render_report(rep))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pbrkit",
        description="Forbidden-outcome construction for pairwise-overlapping preparations.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("solve", help="solve the measurement phases at one overlap value")
    p.add_argument("--cos-omega", dest="cos_omega", type=float, required=True,
                   help="overlap cos(omega) in [0, 1)")
    p.set_defaults(func=cmd_solve)

    for name, func, help_text in (
        ("fig1", cmd_fig1, "emit cos(beta) curve data as CSV"),
        ("fig2", cmd_fig2, "emit minimal-device-count comparison data as CSV"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--resolution", type=int, default=200,
                       help="grid points over cos(omega) in [0.01, 0.99] (default 200)")
        p.add_argument("--out", required=True, help="output CSV path")
        p.set_defaults(func=func)

    p = sub.add_parser("reduce", help="reduce a JSON state pair to its two-dim core")
    p.add_argument("--in", dest="in_path", required=True,
                   help="JSON file: {dim, psi: [[re, im], ...], phi: [...]}")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("simulate", help="sample outcome counts for all four joint preparations")
    p.add_argument("--cos-omega", dest="cos_omega", type=float, required=True,
                   help="overlap cos(omega) in [0, 1)")
    p.add_argument("--trials", type=int, default=10000,
                   help="samples per preparation (default 10000)")
    p.add_argument("--seed", type=int, default=0,
                   help="base seed; preparation j samples with seed + j - 1 (default 0)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("report", help="render the epsilon^n incompatibility report")
    p.add_argument("--cos-omega", dest="cos_omega", type=float, required=True,
                   help="overlap cos(omega) in [0, 1)")
    p.add_argument("--epsilon", type=float, required=True,
                   help="assumed per-device compatibility probability in [0, 1]")
    p.add_argument("--json", dest="as_json", action="store_true",
                   help="emit a JSON record instead of text")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegeneratePair as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
