#!/usr/bin/env python3
"""Solves an LP file written by `pstory ilp-export` with scipy's MILP solver.

Prints one "name value" line per variable, preceded by "# objective <v>".
Exit status 0 on an optimal solve, 1 otherwise.
"""

import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def parse_expression(text):
    terms = []
    for sign, coef, name in TERM.findall(text):
        value = int(coef) if coef else 1
        terms.append((-value if sign == "-" else value, name))
    return terms


def parse_lp(path):
    section = None
    objective = []
    rows = []
    lower = {}
    binaries = []
    with open(path) as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("\\"):
                continue
            key = line.lower()
            if key in ("maximize", "subject to", "bounds", "binaries", "end"):
                section = key
                continue
            if section == "maximize":
                objective += parse_expression(line.split(":", 1)[1])
            elif section == "subject to":
                _, body = line.split(":", 1)
                match = re.match(r"(.*?)(<=|>=|=)\s*(-?\d+)\s*$", body)
                lhs, sense, rhs = match.groups()
                rows.append((parse_expression(lhs), sense, int(rhs)))
            elif section == "bounds":
                name, value = [s.strip() for s in line.split(">=")]
                lower[name] = float(value)
            elif section == "binaries":
                binaries.append(line)
    return objective, rows, lower, binaries


def main():
    if len(sys.argv) != 2:
        print("usage: solve_lp.py model.lp", file=sys.stderr)
        return 2
    objective, rows, lower, binaries = parse_lp(sys.argv[1])
    names = list(binaries)
    for _, name in objective:
        if name not in names:
            names.append(name)
    for terms, _, _ in rows:
        for _, name in terms:
            if name not in names:
                names.append(name)
    index = {name: i for i, name in enumerate(names)}
    binary = set(binaries)

    c = np.zeros(len(names))
    for coef, name in objective:
        c[index[name]] -= coef
    a = np.zeros((len(rows), len(names)))
    lo = np.full(len(rows), -np.inf)
    hi = np.full(len(rows), np.inf)
    for r, (terms, sense, rhs) in enumerate(rows):
        for coef, name in terms:
            a[r, index[name]] += coef
        if sense in ("<=", "="):
            hi[r] = rhs
        if sense in (">=", "="):
            lo[r] = rhs
    integrality = np.array([1 if n in binary else 0 for n in names])
    lb = np.array([0.0 if n in binary else lower.get(n, 0.0) for n in names])
    ub = np.array([1.0 if n in binary else np.inf for n in names])

    result = milp(c, constraints=LinearConstraint(a, lo, hi), integrality=integrality, bounds=Bounds(lb, ub))
    if result.status != 0:
        print(f"solver status {result.status}: {result.message}", file=sys.stderr)
        return 1
    print(f"# objective {-result.fun:.6f}")
    for name, value in zip(names, result.x):
        print(f"{name} {round(value) if name in binary else value:g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
