"""Exact rational linear algebra over plain tuples and lists.

Vectors are tuples of ints or fractions.Fraction, matrices are sequences of
such rows.  Everything here is exact: no floats, no tolerances.  Elimination
is fraction-free (integer-preserving), with deterministic pivoting (first
nonzero entry in column order), so ranks, null spaces and canonical ray
representatives are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Scalar = int | Fraction
Vector = tuple[Scalar, ...]


def inner_product(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    """Exact Euclidean inner product sum_k u_k v_k."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return Fraction(sum(a * b for a, b in zip(u, v)))


def norm_squared(v: Sequence[Scalar]) -> Fraction:
    return inner_product(v, v)


def is_orthogonal(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    return inner_product(u, v) == 0


def primitive(v: Sequence[Scalar]) -> tuple[int, ...]:
    """Canonical ray representative: primitive integers, first nonzero positive.

    Clears denominators, divides by the content gcd, and fixes the overall
    sign so that the first nonzero entry is positive.  The zero vector maps
    to itself.
    """
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def _integer_rows(rows: Sequence[Sequence[Scalar]]) -> list[list[int]]:
    # clear denominators row by row; row scaling never changes rank/null space
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, abs(x))
    if g > 1:
        return [x // g for x in row]
    return row


def row_echelon(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[int]], list[int]]:
    """Integer-preserving row echelon form.

    Returns (echelon rows, pivot column indices).  Pivots are chosen as the
    first row with a nonzero entry in the current column, columns scanned
    left to right.  Rows are kept primitive after every elimination step to
    bound coefficient growth.
    """
    work = [_reduce_row(r) for r in _integer_rows(rows)]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        p = work[r][c]
        for i in range(r + 1, len(work)):
            m = work[i][c]
            if m == 0:
                continue
            g = gcd(abs(p), abs(m))
            a, b = p // g, m // g
            work[i] = _reduce_row([a * x - b * y for x, y in zip(work[i], work[r])])
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Exact matrix rank."""
    return len(row_echelon(rows)[0])


def determinant(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant via Bareiss fraction-free elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    ints = _integer_rows(rows)
    scale = Fraction(1)
    for orig, cleared in zip(rows, ints):
        # undo the per-row denominator clearing in the final value
        for x, y in zip(orig, cleared):
            if y != 0:
                scale *= Fraction(x) / y
                break
        else:
            return Fraction(0)
    m = [list(r) for r in ints]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return scale * sign * m[n - 1][n - 1]


def null_space_basis(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of {x : Mx = 0}, one primitive integer vector per free column.

    Basis vectors are emitted in increasing free-column order; each is scaled
    to primitive integer form with the first nonzero entry positive.
    """
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer column count from an empty matrix")
        ncols = len(rows[0])
    echelon, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            s = sum((Fraction(echelon[i][j]) * x[j] for j in range(c + 1, ncols)), Fraction(0))
            x[c] = -s / echelon[i][c]
        basis.append(primitive(x))
    return basis


def gram_schmidt(vectors: Sequence[Sequence[Scalar]]) -> list[tuple[int, ...]]:
    """Rational Gram-Schmidt without normalization.

    Returns pairwise-orthogonal primitive integer vectors spanning the same
    space.  Linearly dependent inputs contribute nothing (zero vectors are
    dropped).
    """
    ortho: list[tuple[Fraction, ...]] = []
    for v in vectors:
        w = [Fraction(x) for x in v]
        for u in ortho:
            c = inner_product(w, u) / inner_product(u, u)
            w = [wi - c * ui for wi, ui in zip(w, u)]
        if any(w):
            ortho.append(tuple(w))
    return [primitive(u) for u in ortho]


def orthocomplement_basis(vectors: Sequence[Sequence[Scalar]], dim: int) -> list[tuple[int, ...]]:
    """Mutually orthogonal basis of the orthogonal complement of span(vectors).

    The complement of the row span is the null space of the matrix; the null
    space basis is then orthogonalized over the rationals and canonicalized
    (primitive integers, first nonzero positive, lexicographic order).
    """
    for v in vectors:
        if len(v) != dim:
            raise ValueError(f"vector of dimension {len(v)} in dimension-{dim} space")
    if not vectors:
        return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    kernel = null_space_basis(list(vectors), ncols=dim)
    return sorted(gram_schmidt(kernel))
