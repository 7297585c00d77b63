"""Command-line entry point.

Exit codes: 0 success, 1 self-check failure, 2 unreadable or malformed
presentation, 3 unsupported input (b1 = 0), 4 normalization failure.
"""

import argparse
import sys

from .errors import NormalizationError, PresentationError, UnsupportedInput
from .laurent import univariate_coefficients
from .presentation import boundary_matrix, parse_presentation
from .report import ComputeReport, coeff_map, int_map
from .selfcheck import run_selfcheck
from .theta import (
    divisibility_check,
    series_theta_check,
    theta_from_alexander,
    turaev_functions,
    wall_identity_check,
)
from .torsion import alexander, all_projected_minors

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_NORMALIZATION = 4


def read_presentation(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise PresentationError(f"cannot read {path}: {exc.strerror}") from None
    return parse_presentation(data)


def default_window(alex):
    if alex.polynomial.group.rank != 1 or not alex.polynomial:
        return 3
    return max(abs(k) for k in univariate_coefficients(alex.polynomial)) + 3


def compute_report(p, window=None, turaev=True):
    """Run the full pipeline on a presentation.

    Raises :class:`UnsupportedInput` or :class:`NormalizationError`.
    """
    m = boundary_matrix(p)
    minors = all_projected_minors(m)
    alex = alexander(m, minors)
    b1 = m.group.rank

    theta = theta_from_alexander(alex) if alex.translation_pinned else None
    checks = {
        "fundamental_identity": m.fundamental_identity_holds(),
        "divisibility": divisibility_check(minors, alex.polynomial).passed,
        "wall_identity": None,
        "series": None,
        "turaev_relations": None,
    }

    theta_out, turaev_out = None, None
    if theta is not None and b1 == 1:
        theta_out = int_map(theta.values)
        n = default_window(alex) if window is None else window
        checks["wall_identity"] = wall_identity_check(theta, alex).passed
        checks["series"] = series_theta_check(theta, alex, n).passed
        if turaev:
            tw = turaev_functions(theta, n)
            turaev_out = {"N": tw.N, "T_t": int_map(tw.T_t), "T_tinv": int_map(tw.T_tinv),
                          "Tprime": int_map(tw.Tprime), "tail_from": tw.tail_from}
            checks["turaev_relations"] = tw.relations_hold()
    elif theta is not None:
        theta_out = {"coeffs": coeff_map(theta.polynomial), "sign_ambiguous": theta.sign_ambiguous}

    return ComputeReport(
        b1=b1,
        torsion=list(m.group.invariant_factors),
        alexander={"coeffs": coeff_map(alex.polynomial),
                   "sign_ambiguous": alex.sign_ambiguity,
                   "symmetric": alex.translation_pinned,
                   "text": str(alex.polynomial)},
        theta=theta_out,
        turaev=turaev_out,
        checks=checks,
    )


def cmd_compute(path, fmt="json", window=None, turaev=True, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        p = read_presentation(path)
        report = compute_report(p, window, turaev)
    except PresentationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except UnsupportedInput as exc:
        print(f"error: unsupported input: {exc}", file=err)
        return EXIT_UNSUPPORTED
    except NormalizationError as exc:
        print(f"error: normalization failed: {exc}", file=err)
        return EXIT_NORMALIZATION
    out.write(report.to_json() + "\n" if fmt == "json" else report.to_text())
    return EXIT_OK


def cmd_selfcheck(path=None, trials=100, seed=0, out=None, err=None, mutate=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        base = [read_presentation(path)] if path else None
        summary = run_selfcheck(base, trials, seed, mutate)
    except PresentationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except UnsupportedInput as exc:
        print(f"error: unsupported input: {exc}", file=err)
        return EXIT_UNSUPPORTED
    out.write(summary.render())
    return EXIT_OK if summary.passed else EXIT_CHECK_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heegaard-theta",
        description="Alexander polynomial, theta invariant and Turaev torsion "
                    "from a balanced presentation of a closed 3-manifold with b1 > 0.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="run the pipeline on a presentation file")
    c.add_argument("path")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--window", type=int, default=None,
                   help="Turaev window bound N (default: deg A + 3)")
    c.add_argument("--no-turaev", action="store_true", help="omit the Turaev window")

    s = sub.add_parser("selfcheck", help="run the randomized invariance suites")
    s.add_argument("path", nargs="?", default=None,
                   help="presentation file (default: built-in fixtures)")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        if args.window is not None and args.window < 0:
            parser.error("--window must be non-negative")
        return cmd_compute(args.path, args.format, args.window, not args.no_turaev)
    if args.trials < 1:
        parser.error("--trials must be at least 1")
    return cmd_selfcheck(args.path, args.trials, args.seed)


if __name__ == "__main__":
    sys.exit(main())
