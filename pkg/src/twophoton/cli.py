"""Command-line front end: selects checks, fixes parameters, runs the matrix.

Exit codes: 0 all checks passed, 1 at least one verification failed,
2 usage error, 3 internal engine error. Every flag can be preset through an
environment variable with the TWOPHOTON_ prefix (TWOPHOTON_ORDER, ...).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import traceback
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import two_photon_algebra, schrodinger_algebra
from .bargmann import (EigenProblem, eigen_operator, rep_checks, series_solve,
                       SingularRecurrenceError)
from .bialgebra import (two_photon_lie, schrodinger_lie, basis_change,
                        delta_table_from_r, verify_cybe, verify_cocycle,
                        H6_R_MATRIX, SCH_R_MATRIX, H6_DELTA_TABLE,
                        SCH_DELTA_TABLE, H6_TO_SCH_MAP)
from .discrete import (verify_realization, symmetry_checks, solution_checks,
                       heat_polynomials, exponential_solutions, sample_grid)
from .hopf import (hopf_checks, rmatrix_checks, transport_checks,
                   structure_checks, casimir_checks, first_order_delta)
from .report import (CheckResult, render_text, report_json_dict,
                     canonical_json, summarize)
from .scalars import ComplexRational, parse_rational, parse_complex_rational

ALL_CHECKS = ("bialgebra", "hopf", "rmatrix", "rep", "eigen", "discrete-se")
ENV_PREFIX = "TWOPHOTON_"
EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _env_default(flag, fallback):
    return os.environ.get(ENV_PREFIX + flag.upper().replace("-", "_"), fallback)


def build_parser():
    p = argparse.ArgumentParser(
        prog="twophoton-verify",
        description="Certify the deformed two-photon / Schrodinger algebra "
                    "identities to a configurable truncation order.")
    p.add_argument("--algebra", choices=("h6", "sch", "both"),
                   default=_env_default("algebra", "both"))
    p.add_argument("--order", type=int, default=_env_default("order", "3"),
                   help="series truncation order k, 0..8")
    p.add_argument("--z", default=_env_default("z", "1/10"),
                   help="lattice parameter, a positive rational like 1/10")
    p.add_argument("--mass", default=_env_default("mass", "1"))
    p.add_argument("--rep-param", dest="rep_param",
                   default=_env_default("rep-param", "-1/2"),
                   help="representation label a; C is a symmetry only at -1/2")
    p.add_argument("--checks", default=_env_default("checks", ",".join(ALL_CHECKS)),
                   help="comma-separated subset of " + ",".join(ALL_CHECKS))
    p.add_argument("--beta", default=_env_default("beta", "0,1,0,0,0"),
                   help="five complex rationals for the eigenproblem")
    p.add_argument("--eigenvalue", default=_env_default("eigenvalue", "1"))
    p.add_argument("--degree", type=int, default=_env_default("degree", "30"))
    p.add_argument("--workers", type=int, default=_env_default("workers", "1"))
    p.add_argument("--out", default=_env_default("out", ""),
                   help="write the JSON report here")
    p.add_argument("--dump-spec", choices=("h6", "sch"), default="",
                   help="dump an algebra spec as JSON and exit")
    p.add_argument("--csv-out", default="",
                   help="sample certified solutions on the lattice into a CSV")
    return p


def parse_config(args, parser):
    if not 0 <= args.order <= 8:
        parser.error("--order must be between 0 and 8")
    try:
        z = parse_rational(args.z)
        mass = parse_rational(args.mass)
        rep_param = parse_rational(args.rep_param)
        betas = tuple(parse_complex_rational(b) for b in args.beta.split(","))
        eigenvalue = parse_complex_rational(args.eigenvalue)
    except ValueError as exc:
        parser.error(str(exc))
    if z <= 0:
        parser.error("--z must be a positive rational")
    if mass == 0:
        parser.error("--mass must be nonzero")
    if len(betas) != 5:
        parser.error("--beta needs exactly five entries")
    if args.degree < 2:
        parser.error("--degree must be at least 2")
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    bad = [c for c in checks if c not in ALL_CHECKS]
    if bad:
        parser.error(f"unknown checks: {', '.join(bad)}")
    return {
        "algebra": args.algebra,
        "order": args.order,
        "z": z,
        "mass": mass,
        "rep_param": rep_param,
        "checks": checks,
        "betas": betas,
        "eigenvalue": eigenvalue,
        "degree": args.degree,
        "workers": args.workers,
    }


def config_echo(cfg):
    return {
        "algebra": cfg["algebra"],
        "order": str(cfg["order"]),
        "z": str(cfg["z"]),
        "mass": str(cfg["mass"]),
        "rep_param": str(cfg["rep_param"]),
        "checks": ",".join(cfg["checks"]),
        "beta": ",".join(str(b) for b in cfg["betas"]),
        "eigenvalue": str(cfg["eigenvalue"]),
        "degree": str(cfg["degree"]),
    }


# -- check groups -----------------------------------------------------------------


def _selected_algebras(cfg):
    out = []
    if cfg["algebra"] in ("h6", "both"):
        out.append("h6")
    if cfg["algebra"] in ("sch", "both"):
        out.append("sch")
    return out


def run_bialgebra(cfg):
    entries = []
    data = {
        "h6": (two_photon_lie(), H6_R_MATRIX, H6_DELTA_TABLE, two_photon_algebra),
        "sch": (schrodinger_lie(), SCH_R_MATRIX, SCH_DELTA_TABLE, schrodinger_algebra),
    }
    for key in _selected_algebras(cfg):
        lie, r, table, quantum = data[key]
        entries.append(CheckResult(
            name=f"bialgebra/{lie.name}/jacobi",
            passed=not lie.jacobi_violations(), residual="0"))
        entries.append(verify_cybe(lie, r))
        deltas = delta_table_from_r(lie, r)
        bad = [g for g in lie.basis if deltas[g] != table[g]]
        entries.append(CheckResult(
            name=f"bialgebra/{lie.name}/cocommutator-table", passed=not bad,
            residual="0" if not bad else "mismatch at " + ", ".join(bad)))
        entries.extend(verify_cocycle(lie, deltas))
        # first z order of the quantum coproduct must reproduce delta
        alg = quantum(max(1, cfg["order"]))
        bad = []
        for g in lie.basis:
            if first_order_delta(alg, g) != deltas[g].coeffs:
                bad.append(g)
        entries.append(CheckResult(
            name=f"bialgebra/{lie.name}/first-order-match", passed=not bad,
            residual="0" if not bad else "mismatch at " + ", ".join(bad)))
    return entries


def run_hopf(cfg):
    entries = []
    makers = {"h6": two_photon_algebra, "sch": schrodinger_algebra}
    for key in _selected_algebras(cfg):
        alg = makers[key](cfg["order"])
        entries.extend(hopf_checks(alg))
        entries.extend(structure_checks(alg))
    entries.extend(transport_checks(cfg["order"]))
    # classical limit of the transport: basis change carries table to table
    h6 = two_photon_lie()
    sch = schrodinger_lie()
    mapped = basis_change(h6, H6_TO_SCH_MAP)
    ok = all(mapped.bracket_basis(i, j) == sch.bracket_basis(i, j)
             for i in range(6) for j in range(i))
    entries.append(CheckResult(name="transport/classical-table", passed=ok,
                               residual="0" if ok else "structure constants differ"))
    return entries


def run_rmatrix(cfg):
    entries = []
    makers = {"h6": two_photon_algebra, "sch": schrodinger_algebra}
    for key in _selected_algebras(cfg):
        entries.extend(rmatrix_checks(makers[key](cfg["order"])))
    return entries


def run_rep(cfg):
    return rep_checks(cfg["order"])


def run_eigen(cfg):
    entries = []
    zero = ComplexRational(0)
    one = ComplexRational(1)

    # number operator: alpha d/dalpha f = n f has the monomial solution
    n_target = 5
    problem = EigenProblem((one, zero, zero, zero, zero), ComplexRational(n_target))
    op = eigen_operator(problem, 0, "classical")
    coeffs, tail = series_solve(op, 10)
    want = [Fraction(1) if i == n_target else Fraction(0) for i in range(11)]
    ok = coeffs == want and not tail
    entries.append(CheckResult(
        name="eigen/number-operator", passed=ok,
        residual="0" if ok else f"coefficients {coeffs}",
        params={"beta": "1,0,0,0,0", "lambda": str(n_target)}))

    # pure second-derivative case follows the two-step recurrence
    lam = ComplexRational(1)
    problem = EigenProblem((zero, one, zero, zero, zero), lam)
    coeffs, _ = series_solve(eigen_operator(problem, 0, "classical"), 12)
    expect = [Fraction(1), Fraction(0)]
    for n in range(11):
        expect.append(expect[n] / ((n + 1) * (n + 2)))
    ok = coeffs == expect
    entries.append(CheckResult(
        name="eigen/recurrence-beta2", passed=ok,
        residual="0" if ok else f"coefficients {coeffs}",
        params={"beta": "0,1,0,0,0", "lambda": "1"}))

    # displayed first-order truncation against the closed-form realization
    problem = EigenProblem(cfg["betas"], cfg["eigenvalue"])
    order = max(1, cfg["order"])
    full = eigen_operator(problem, order, "full").truncate(1)
    first = eigen_operator(problem, 1, "first-order")
    entries.append(CheckResult(
        name="eigen/first-order-vs-full", passed=full == first,
        residual="0" if full == first else str(full - first),
        params={"order": str(order)}))

    # deformed solve at the configured rational z
    op = eigen_operator(problem, 1, "first-order").substitute_z(cfg["z"])
    params = {"beta": ",".join(str(b) for b in cfg["betas"]),
              "lambda": str(cfg["eigenvalue"]), "z": str(cfg["z"]),
              "degree": str(cfg["degree"])}
    try:
        coeffs, tail = series_solve(op, cfg["degree"])
    except (SingularRecurrenceError, ValueError) as exc:
        entries.append(CheckResult(
            name="eigen/deformed-residual", passed=False, residual=str(exc),
            params=params))
        return entries
    params["coefficients"] = "[" + ", ".join(str(c) for c in coeffs) + "]"
    entries.append(CheckResult(
        name="eigen/deformed-residual", passed=True, residual="0", params=params))
    return entries


def run_discrete(cfg):
    z, m, a = cfg["z"], cfg["mass"], cfg["rep_param"]
    entries = []
    entries.extend(verify_realization(m, a, z))
    entries.extend(verify_realization(m, a, 0, classical=True))
    entries.extend(symmetry_checks(m, a, z))
    entries.extend(symmetry_checks(m, a, 0, classical=True))
    entries.extend(solution_checks(m, a, z))
    entries.extend(solution_checks(m, a, 0, classical=True))
    entries.extend(casimir_checks(schrodinger_algebra(cfg["order"])))
    return entries


GROUP_RUNNERS = {
    "bialgebra": run_bialgebra,
    "hopf": run_hopf,
    "rmatrix": run_rmatrix,
    "rep": run_rep,
    "eigen": run_eigen,
    "discrete-se": run_discrete,
}


def run_checks(cfg):
    selected = [name for name in ALL_CHECKS if name in cfg["checks"]]
    entries = []
    if cfg["workers"] > 1:
        with ThreadPoolExecutor(max_workers=cfg["workers"]) as pool:
            futures = [(name, pool.submit(GROUP_RUNNERS[name], cfg))
                       for name in selected]
            for _, fut in futures:
                entries.extend(fut.result())
    else:
        for name in selected:
            entries.extend(GROUP_RUNNERS[name](cfg))
    return sorted(entries, key=lambda e: e.name)


def _dump_spec(which, order, out_path):
    alg = two_photon_algebra(order) if which == "h6" else schrodinger_algebra(order)
    text = canonical_json(alg.to_json_dict())
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _write_csv(cfg, path):
    polys = heat_polynomials(cfg["mass"], cfg["z"], 3)
    exps = exponential_solutions(cfg["mass"], cfg["z"], [Fraction(1)])
    xs = [Fraction(i, 2) for i in range(-4, 5)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["solution", "x", "t", "value"])
        for i, phi in enumerate(polys + exps):
            for x, t, value in sample_grid(phi, xs, Fraction(0), 8):
                writer.writerow([i, x, t, repr(value)])


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.dump_spec:
            if not 0 <= args.order <= 8:
                parser.error("--order must be between 0 and 8")
            return _dump_spec(args.dump_spec, args.order, args.out)
        cfg = parse_config(args, parser)
        entries = run_checks(cfg)
        report = report_json_dict(config_echo(cfg), entries)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(canonical_json(report))
        if args.csv_out:
            _write_csv(cfg, args.csv_out)
        print(render_text(entries))
    except SystemExit:
        raise
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL
    return EXIT_PASS if summarize(entries)["failed"] == 0 else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
