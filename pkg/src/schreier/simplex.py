"""Exact-rational primal simplex for small LPs in standard form.

Maximize c.x subject to A x <= b, x >= 0 with b >= 0, so the all-slack basis
is feasible and no phase one is needed.  Bland's rule guarantees termination.
"""

from fractions import Fraction


def lp_max(c, rows, rhs) -> tuple[Fraction, list[Fraction]]:
    """Return (optimal value, optimal x).  Raises on unbounded problems."""
    n = len(c)
    m = len(rows)
    c = [Fraction(v) for v in c]
    if any(Fraction(b) < 0 for b in rhs):
        raise ValueError("simplex expects nonnegative right-hand sides")
    # Tableau: columns = n structural + m slack + 1 rhs; last row = objective.
    tab = []
    for i in range(m):
        row = [Fraction(v) for v in rows[i]]
        row += [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        row.append(Fraction(rhs[i]))
        tab.append(row)
    obj = [-v for v in c] + [Fraction(0)] * (m + 1)
    tab.append(obj)
    basis = [n + i for i in range(m)]

    total_cols = n + m
    while True:
        enter = None
        for j in range(total_cols):
            if tab[m][j] < 0:
                enter = j  # Bland: smallest index with negative reduced cost
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coeff = tab[i][enter]
            if coeff > 0:
                ratio = tab[i][total_cols] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise ValueError("linear program is unbounded")
        _pivot(tab, leave, enter)
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tab[i][total_cols]
    value = tab[m][total_cols]
    return value, x


def _pivot(tab, row, col):
    inv = 1 / tab[row][col]
    tab[row] = [v * inv for v in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            factor = tab[i][col]
            tab[i] = [a - factor * b for a, b in zip(tab[i], tab[row])]
