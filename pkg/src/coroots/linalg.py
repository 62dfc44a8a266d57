"""Exact rational vectors and small dense matrices.

Everything in this package runs on `fractions.Fraction`; there is no
floating point anywhere.  Vectors are tuples of Fractions, matrices are
tuples of row tuples.  Sizes never exceed ~15, so plain fraction-free
Gaussian elimination is all we need.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]


def vec(entries: Iterable) -> Vec:
    return tuple(Q(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def zero_vec(n: int) -> Vec:
    return (Q(0),) * n


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(c, v: Vec) -> Vec:
    c = Q(c)
    return tuple(c * a for a in v)


# keyed by id() to avoid rehashing large Fraction tuples; the stored gram
# reference keeps the id alive
_diag_memo: dict[int, tuple[Mat, Vec | None]] = {}


def _diagonal_of(gram: Mat) -> Vec | None:
    hit = _diag_memo.get(id(gram))
    if hit is not None and hit[0] is gram:
        return hit[1]
    n = len(gram)
    ok = all(gram[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    diag = tuple(gram[i][i] for i in range(n)) if ok else None
    _diag_memo[id(gram)] = (gram, diag)
    return diag


def dot(u: Vec, v: Vec, gram: Mat | None = None) -> Q:
    """Inner product, Euclidean or with respect to a Gram matrix."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    if gram is None:
        return sum((a * b for a, b in zip(u, v)), Q(0))
    diag = _diagonal_of(gram)
    if diag is not None:
        return sum((a * d * b for a, d, b in zip(u, diag, v)), Q(0))
    return sum(
        (u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v))),
        Q(0),
    )


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def transpose(m: Mat) -> Mat:
    if not m:
        return ()
    return tuple(tuple(m[i][j] for i in range(len(m))) for j in range(len(m[0])))


def is_zero(v: Vec) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Vec) -> Vec:
    """Scale a nonzero rational vector to integer entries with gcd 1.

    The sign is fixed so the first nonzero entry is positive.
    """
    if is_zero(v):
        return v
    den = 1
    for a in v:
        den = den * a.denominator // gcd(den, a.denominator)
    ints = [int(a * den) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    lead = next(a for a in ints if a != 0)
    if lead < 0:
        ints = [-a for a in ints]
    return vec(ints)


def row_echelon(m: Mat) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return [tuple(row) for row in rows], pivots


def rank(m: Mat) -> int:
    return len(row_echelon(m)[1])


def kernel_basis(m: Mat) -> list[Vec]:
    """Basis of the right kernel, scaled to primitive integer vectors."""
    if not m:
        return []
    n_cols = len(m[0])
    rows, pivots = row_echelon(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * n_cols
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(primitive(tuple(v)))
    return basis


def solve(m: Mat, b: Vec) -> Vec | None:
    """One exact solution of m x = b, or None if inconsistent."""
    if not m:
        return () if is_zero(b) else None
    n_cols = len(m[0])
    aug = mat([list(row) + [bi] for row, bi in zip(m, b, strict=True)])
    rows, pivots = row_echelon(aug)
    if n_cols in pivots:
        return None
    x = [Q(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][n_cols]
    return tuple(x)


def in_span(v: Vec, basis: Sequence[Vec]) -> bool:
    if not basis:
        return is_zero(v)
    return solve(transpose(mat(basis)), v) is not None


def coords_in_basis(v: Vec, basis: Sequence[Vec]) -> Vec | None:
    """Coordinates of v in a linearly independent spanning list, if any."""
    if not basis:
        return () if is_zero(v) else None
    return solve(transpose(mat(basis)), v)


def in_lattice(v: Vec, basis: Sequence[Vec]) -> bool:
    """Membership of v in the integer span of a linearly independent basis."""
    c = coords_in_basis(v, basis)
    return c is not None and all(x.denominator == 1 for x in c)


def gram_of(vectors: Sequence[Vec], gram: Mat | None = None) -> Mat:
    """Symmetric matrix of pairwise inner products."""
    return tuple(tuple(dot(u, v, gram) for v in vectors) for u in vectors)


def orthogonal_project(v: Vec, span: Sequence[Vec], gram: Mat | None = None) -> Vec:
    """Orthogonal projection of v onto span(span) under the given Gram form.

    The spanning vectors need not be independent or orthogonal.  Rejects a
    form that is degenerate on the span, which signals a bad root datum.
    """
    return project_many([v], span, gram)[0]


def project_many(vs: Sequence[Vec], span: Sequence[Vec], gram: Mat | None = None) -> list[Vec]:
    """Orthogonal projections of several vectors onto one span."""
    if not span:
        return [zero_vec(len(v)) for v in vs]
    # Reduce to an independent spanning subset once.
    indep: list[Vec] = []
    for s in span:
        if not in_span(s, indep):
            indep.append(s)
    g = gram_of(indep, gram)
    if rank(g) < len(indep):
        raise ValueError("gram form degenerate on span")
    out = []
    for v in vs:
        rhs = tuple(dot(v, s, gram) for s in indep)
        coeffs = solve(g, rhs)
        if coeffs is None:
            raise ValueError("gram form degenerate on span")
        p = zero_vec(len(v))
        for c, s in zip(coeffs, indep):
            p = add(p, scale(c, s))
        out.append(p)
    return out


def lattice_index(sub: Sequence[Vec], sup: Sequence[Vec]) -> int:
    """Index of the lattice spanned by `sub` inside the one spanned by `sup`.

    Both lists must be bases of the same rational vector space.
    """
    if len(sub) != len(sup):
        raise ValueError("lattices of different rank")
    if not sub:
        return 1
    coords = [coords_in_basis(v, sup) for v in sub]
    if any(c is None for c in coords):
        raise ValueError("sublattice not contained in span")
    det = _det(mat(coords))
    if det == 0:
        raise ValueError("degenerate sublattice")
    det = abs(det)
    if det.denominator != 1:
        raise ValueError("not a sublattice")
    return int(det)


def _det(m: Mat) -> Q:
    rows = [list(r) for r in m]
    n = len(rows)
    det = Q(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Q(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det
