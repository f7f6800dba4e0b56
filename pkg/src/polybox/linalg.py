"""Exact linear algebra over F_q[T] and over F_q.

Determinants of polynomial matrices come in two interchangeable flavours
(cofactor expansion and fraction-free Bareiss elimination with exact
divisions); kernel vectors are built from maximal minors of a
fraction-free row echelon form, which keeps every intermediate value in
F_q[T].  Pivots prefer the lowest-degree nonzero entry and rows are
stripped of their polynomial content after each elimination step to keep
degrees small.
"""

from __future__ import annotations

from .errors import FullRankError
from .poly import Poly, poly_gcd, zero


def det_cofactor(rows: list[list[Poly]]) -> Poly:
    """Determinant by first-row cofactor expansion (small matrices)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return _cofactor(rows, n)


def _cofactor(rows, n) -> Poly:
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for c in range(n):
        a = rows[0][c]
        if not a:
            continue
        minor = [[row[j] for j in range(n) if j != c] for row in rows[1:]]
        term = a * _cofactor(minor, n - 1)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return zero(rows[0][0].field)
    return total


def _exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("non-exact division in fraction-free step")
    return q


def det_bareiss(rows: list[list[Poly]]) -> Poly:
    """Fraction-free determinant (Bareiss); all divisions are exact."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 1:
        return rows[0][0]
    field = rows[0][0].field
    m = [list(r) for r in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        pivot = _pick_pivot(m, k, k, n)
        if pivot is None:
            return zero(field)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = val if prev is None else _exact_div(val, prev)
            m[i][k] = zero(field)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def _pick_pivot(m, col, start_row, nrows):
    """Row index >= start_row whose entry in col is nonzero of least degree."""
    best = None
    best_deg = None
    for r in range(start_row, nrows):
        e = m[r][col]
        if e:
            d = len(e.coeffs)
            if best is None or d < best_deg:
                best, best_deg = r, d
    return best


def _strip_content(row: list[Poly]) -> list[Poly]:
    g = None
    for e in row:
        if e:
            g = e if g is None else poly_gcd(g, e)
            if g.degree == 0:
                break
    if g is None or g.degree == 0:
        return row
    return [_exact_div(e, g) if e else e for e in row]


def echelon(rows: list[list[Poly]]):
    """Fraction-free row echelon form over F_q[T].

    Returns (pivot_rows, pivot_cols): pivot_rows[i] has its leading nonzero
    entry in column pivot_cols[i]; rows that vanish are dropped.  Row space
    is preserved up to nonzero polynomial scaling.
    """
    m = [_strip_content(list(r)) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    pivot_rows: list[list[Poly]] = []
    pivot_cols: list[int] = []
    for col in range(ncols):
        idx = _pick_pivot(m, col, 0, len(m))
        if idx is None:
            continue
        pivot = m.pop(idx)
        pivot_rows.append(pivot)
        pivot_cols.append(col)
        reduced = []
        for row in m:
            if row[col]:
                new = [row[j] * pivot[col] - pivot[j] * row[col]
                       for j in range(ncols)]
                new = _strip_content(new)
                if any(new):
                    reduced.append(new)
            else:
                reduced.append(row)
        m = reduced
        if not m:
            break
    return pivot_rows, pivot_cols


def kernel_vector(rows: list[list[Poly]], ncols: int, field) -> list[Poly]:
    """A nonzero kernel vector of the matrix, with entries in F_q[T].

    Uses the echelon form: restrict the pivot rows to the pivot columns
    plus the first free column, then read the kernel of that r x (r+1)
    block off its maximal minors (Cramer).  Deterministic; raises
    FullRankError when the matrix has full column rank.
    """
    live = [r for r in rows if any(r)]
    if not live:
        v = [zero(field)] * ncols
        v[0] = Poly(field, (field.one,))
        return v
    pivot_rows, pivot_cols = echelon(live)
    rank = len(pivot_cols)
    if rank == ncols:
        raise FullRankError("matrix has full column rank; kernel is trivial")
    free_col = next(c for c in range(ncols) if c not in pivot_cols)
    sel = sorted(pivot_cols + [free_col])
    block = [[row[c] for c in sel] for row in pivot_rows]
    out = [zero(field)] * ncols
    for pos, col in enumerate(sel):
        minor = [[row[j] for j in range(len(sel)) if j != pos]
                 for row in block]
        d = det_bareiss(minor) if minor else Poly(field, (field.one,))
        if pos % 2:
            d = -d
        out[col] = d
    out = _strip_content(out)
    lead = next(e for e in out if e)
    out = [e.scaled(field.inv(lead.lead)) for e in out]
    # internal invariant: a kernel vector annihilates every input row
    for r in rows:
        acc = zero(field)
        for c in range(ncols):
            if r[c] and out[c]:
                acc = acc + r[c] * out[c]
        if acc:
            raise AssertionError("kernel vector failed verification")
    return out


def gf_kernel_vector(matrix: list[list[int]], ncols: int, field):
    """Nonzero kernel vector of an F_q matrix, or None if full rank.

    Gaussian elimination; the first free column gets value 1 and pivot
    variables are back-solved, remaining free columns stay 0.
    """
    m = [list(r) for r in matrix]
    pivots: list[tuple[int, int]] = []  # (row, col)
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, len(m)):
            if m[r][col]:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = field.inv(m[row][col])
        m[row] = [field.mul(inv, v) for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                c = m[r][col]
                m[r] = [field.sub(v, field.mul(c, w))
                        for v, w in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
        if row == len(m):
            break
    pivot_cols = [c for _, c in pivots]
    free = [c for c in range(ncols) if c not in pivot_cols]
    if not free:
        return None
    fc = free[0]
    out = [0] * ncols
    out[fc] = field.one
    for r, c in pivots:
        out[c] = field.neg(m[r][fc])
    return out
