"""Exact rational feasibility for polyhedral cone questions.

A single entry point decides whether a target vector is a nonnegative
combination of given generators plus an arbitrary combination of free
generators.  Free variables are eliminated by Gaussian pivots; the remaining
sign-constrained system goes through a phase-one simplex over Fractions with
Bland's rule, so termination is guaranteed and every comparison is exact.
"""

from fractions import Fraction


def _phase1_feasible(rows, rhs) -> bool:
    m = len(rows)
    p = len(rows[0]) if m else 0
    tableau = []
    for i in range(m):
        r = list(rows[i])
        b = rhs[i]
        if b < 0:
            r = [-x for x in r]
            b = -b
        row = r + [Fraction(0)] * m + [b]
        row[p + i] = Fraction(1)
        tableau.append(row)
    basis = [p + i for i in range(m)]
    width = p + m
    z = [sum(tableau[i][j] for i in range(m)) for j in range(width + 1)]
    for j in range(p, width):
        z[j] -= 1
    while True:
        enter = next((j for j in range(width) if z[j] > 0), None)
        if enter is None:
            return z[width] == 0
        leave = None
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:  # pragma: no cover - phase-1 objective is bounded below
            raise RuntimeError("unbounded phase-1 problem")
        prow = tableau[leave]
        piv = prow[enter]
        tableau[leave] = [x / piv for x in prow]
        prow = tableau[leave]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], prow)]
        if z[enter] != 0:
            f = z[enter]
            z = [a - f * b for a, b in zip(z, prow)]
        basis[leave] = enter


def nonneg_combination_exists(nonneg_cols, free_cols, rhs) -> bool:
    """Decide rhs = sum(lambda_i * nonneg_cols[i]) + sum(mu_j * free_cols[j]), lambda >= 0."""
    neq = len(rhs)
    p = len(nonneg_cols)
    q = len(free_cols)
    aug = [
        [Fraction(nonneg_cols[j][i]) for j in range(p)]
        + [Fraction(free_cols[j][i]) for j in range(q)]
        + [Fraction(rhs[i])]
        for i in range(neq)
    ]
    active = list(range(neq))
    for fj in range(p, p + q):
        pivot = next((i for i in active if aug[i][fj] != 0), None)
        if pivot is None:
            continue
        active.remove(pivot)
        prow = aug[pivot]
        for i in active:
            c = aug[i][fj]
            if c:
                f = c / prow[fj]
                aug[i] = [a - f * b for a, b in zip(aug[i], prow)]
    rows = [[aug[i][j] for j in range(p)] for i in active]
    rhs2 = [aug[i][-1] for i in active]
    if not rows:
        return True
    return _phase1_feasible(rows, rhs2)
