"""Catalog of simple (and BC) root systems with exact realizations.

Each type is realized with explicit rational coordinates and a rational
Gram matrix normalized so that short coroots have squared length 2.  Only
the extended simple roots/coroots and the lattice bases are materialized;
full root enumeration lives with the consumers that need it.

Node numbering: node 0 is always the extended node, nodes 1..n follow the
Bourbaki numbering of the finite diagram (for classical types, the chain
e_0-e_1, e_1-e_2, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from .linalg import (
    Mat,
    Vec,
    add,
    dot,
    is_zero,
    lattice_index,
    mat,
    scale,
    solve,
    sub,
    vec,
    zero_vec,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")

# Known orders of the center (coweight/coroot lattice index) per family.
CENTER_ORDER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
    "F": lambda n: 1,
    "G": lambda n: 1,
    "BC": lambda n: 1,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __str__(self) -> str:
        if self.family == "A" and self.rank == 0:
            return "A0 (trivial)"
        return f"{self.family}{self.rank}"

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0


TRIVIAL = SimpleType("A", 0)

_GROUP_ALIASES = [
    (re.compile(r"^SU\((\d+)\)$"), lambda m: SimpleType("A", int(m.group(1)) - 1)),
    (re.compile(r"^Spin\((\d+)\)$"), lambda m: _spin(int(m.group(1)))),
    (re.compile(r"^Sp\((\d+)\)$"), lambda m: _sp(int(m.group(1)))),
    (re.compile(r"^(BC|[ABCDEFG])_?(\d+)$"), lambda m: SimpleType(m.group(1), int(m.group(2)))),
]


def _spin(m: int) -> SimpleType:
    if m % 2 == 0 and m >= 8:
        return SimpleType("D", m // 2)
    if m % 2 == 1 and m >= 5:
        return SimpleType("B", (m - 1) // 2)
    if m == 6:
        return SimpleType("A", 3)
    if m == 5:
        return SimpleType("C", 2)
    if m == 3:
        return SimpleType("A", 1)
    raise ValueError(f"unsupported Spin({m})")


def _sp(m: int) -> SimpleType:
    if m % 2 != 0 or m < 2:
        raise ValueError(f"Sp({m}) needs an even positive argument")
    if m == 2:
        return SimpleType("A", 1)
    return SimpleType("C", m // 2)


def parse_type(text: str) -> SimpleType:
    """Parse a group spec like 'E8', 'A_5', 'Spin(12)', 'SU(7)', 'BC3'."""
    s = text.strip()
    for rx, build in _GROUP_ALIASES:
        m = rx.match(s)
        if m:
            st = build(m)
            validate_type(st)
            return st
    raise ValueError(f"unrecognized group spec {text!r}")


def validate_type(st: SimpleType) -> None:
    fam, n = st.family, st.rank
    ok = (
        (fam == "A" and n >= 0)
        or (fam == "B" and n >= 2)
        or (fam == "C" and n >= 2)
        or (fam == "D" and n >= 4)
        or (fam == "E" and n in (6, 7, 8))
        or (fam == "F" and n == 4)
        or (fam == "G" and n == 2)
        or (fam == "BC" and n >= 1)
    )
    if not ok:
        raise ValueError(f"invalid simple type {fam}{n}")


@dataclass(frozen=True)
class RootDatum:
    type: SimpleType
    ambient_dim: int
    gram: Mat
    extended_roots: tuple[Vec, ...]
    extended_coroots: tuple[Vec, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]
    coroot_lattice_basis: tuple[Vec, ...]
    coweight_lattice_basis: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    def nodes(self) -> range:
        return range(self.rank + 1)

    def pairing(self, root_vec: Vec, t: Vec) -> Q:
        """Value a(t) of the root with vector root_vec on t."""
        return dot(root_vec, t, self.gram)

    def cartan(self, u: Vec, v: Vec) -> Q:
        """Cartan number 2<u,v>/<v,v> of two nonzero vectors."""
        return 2 * dot(u, v, self.gram) / dot(v, v, self.gram)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Extended coroot-diagram Cartan matrix n(i,j) over node ids."""
        cr = self.extended_coroots
        out = []
        for u in cr:
            row = []
            for v in cr:
                n = self.cartan(u, v)
                if n.denominator != 1:
                    raise AssertionError("non-integral Cartan number in catalog")
                row.append(int(n))
            out.append(tuple(row))
        return tuple(out)

    def coroot_sq_lengths(self) -> tuple[Q, ...]:
        return tuple(dot(v, v, self.gram) for v in self.extended_coroots)


@dataclass(frozen=True)
class AlcoveData:
    vertices: tuple[Vec, ...]  # vertex i corresponds to node i; vertex 0 is the origin
    barycenter: Vec


def _basis_vec(i: int, n: int) -> Vec:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


def _identity(n: int, factor=1) -> Mat:
    f = Q(factor)
    return tuple(tuple(f if i == j else Q(0) for j in range(n)) for i in range(n))


def _coroot_of(root: Vec, gram: Mat) -> Vec:
    return scale(2 / dot(root, root, gram), root)


@lru_cache(maxsize=None)
def datum(st: SimpleType) -> RootDatum:
    """The catalog realization of a simple type in standard coordinates."""
    validate_type(st)
    fam, n = st.family, st.rank
    if st == TRIVIAL:
        raise ValueError("the trivial type A0 has no root datum")
    if fam == "B" and n == 2:
        # B_2 is exposed as an alias of C_2 (one datum, C_2 orientation).
        inner = datum(SimpleType("C", 2))
        return RootDatum(
            st,
            inner.ambient_dim,
            inner.gram,
            inner.extended_roots,
            inner.extended_coroots,
            inner.h,
            inner.g,
            inner.coroot_lattice_basis,
            inner.coweight_lattice_basis,
        )

    if fam == "A":
        dim = n + 1
        gram = _identity(dim)
        e = [_basis_vec(i, dim) for i in range(dim)]
        simples = [sub(e[i], e[i + 1]) for i in range(n)]
        highest = sub(e[0], e[n])
        h = (1,) + (1,) * n
    elif fam == "B":
        dim = n
        gram = _identity(dim)
        e = [_basis_vec(i, dim) for i in range(dim)]
        simples = [sub(e[i], e[i + 1]) for i in range(n - 1)] + [e[n - 1]]
        highest = add(e[0], e[1])
        h = (1, 1) + (2,) * (n - 1)
    elif fam == "C":
        dim = n
        gram = _identity(dim, 2)
        e = [_basis_vec(i, dim) for i in range(dim)]
        # realized through the coroots: chain of long coroots ending short
        cr = [sub(e[i], e[i + 1]) for i in range(n - 1)] + [e[n - 1]]
        simples = [_coroot_of(v, gram) for v in cr]
        highest = e[0]
        h = (1,) + (2,) * (n - 1) + (1,)
    elif fam == "D":
        dim = n
        gram = _identity(dim)
        e = [_basis_vec(i, dim) for i in range(dim)]
        simples = [sub(e[i], e[i + 1]) for i in range(n - 1)] + [add(e[n - 2], e[n - 1])]
        highest = add(e[0], e[1])
        h = (1, 1) + (2,) * (n - 3) + (1, 1)
    elif fam == "E":
        dim = 8
        gram = _identity(dim)
        e = [_basis_vec(i, dim) for i in range(dim)]
        half = Q(1, 2)
        a1 = scale(half, vec([1, -1, -1, -1, -1, -1, -1, 1]))
        a2 = add(e[0], e[1])
        chain = [sub(e[i + 1], e[i]) for i in range(6)]  # a3..a8
        all_simple = [a1, a2] + chain
        simples = all_simple[:n]
        if n == 8:
            highest = add(e[6], e[7])
            h = (1, 2, 3, 4, 6, 5, 4, 3, 2)
        elif n == 7:
            highest = sub(e[7], e[6])
            h = (1, 2, 2, 3, 4, 3, 2, 1)
        else:
            highest = scale(half, vec([1, 1, 1, 1, 1, -1, -1, 1]))
            h = (1, 1, 2, 2, 3, 2, 1)
    elif fam == "F":
        dim = 4
        gram = _identity(dim)
        e = [_basis_vec(i, dim) for i in range(dim)]
        simples = [
            sub(e[1], e[2]),
            sub(e[2], e[3]),
            e[3],
            scale(Q(1, 2), vec([1, -1, -1, -1])),
        ]
        highest = add(e[0], e[1])
        h = (1, 2, 3, 4, 2)
    elif fam == "G":
        dim = 3
        gram = _identity(dim, Q(1, 3))
        e = [_basis_vec(i, dim) for i in range(dim)]
        simples = [sub(e[0], e[1]), vec([-2, 1, 1])]
        highest = vec([-1, -1, 2])
        h = (1, 3, 2)
    elif fam == "BC":
        dim = n
        gram = _identity(dim, 2)
        e = [_basis_vec(i, dim) for i in range(dim)]
        # Non-reduced: the highest root is 2e_0, but the extended diagram
        # node is its indivisible half so that the short-coroot
        # normalization and the figure marks (g on the extended node = 2)
        # come out right.
        cr = [sub(e[i], e[i + 1]) for i in range(n - 1)] + [scale(2, e[n - 1])]
        simples = [_coroot_of(v, gram) for v in cr]
        highest = e[0]
        h = (1,) + (2,) * n
    else:  # pragma: no cover
        raise AssertionError(fam)

    roots = (scale(-1, highest),) + tuple(simples)
    coroots = tuple(_coroot_of(r, gram) for r in roots)
    g = _coroot_integers(coroots)
    q_basis = coroots[1:]
    p_basis = _coweights(roots[1:], q_basis, gram)
    d = RootDatum(
        st,
        dim,
        gram,
        roots,
        coroots,
        h,
        g,
        q_basis,
        p_basis,
    )
    _check_datum(d)
    return d


def _coroot_integers(coroots: tuple[Vec, ...]) -> tuple[int, ...]:
    """Coefficients of the single relation among the extended coroots.

    Normalized to positive coprime integers; for the reduced families the
    extended node gets coefficient 1, for BC it is 2.
    """
    from .linalg import kernel_basis, transpose

    ker = kernel_basis(transpose(mat(coroots)))
    if len(ker) != 1:
        raise AssertionError("extended coroots do not satisfy a unique relation")
    rel = ker[0]
    if rel[0] < 0:
        rel = scale(-1, rel)
    if any(x <= 0 or x.denominator != 1 for x in rel):
        raise AssertionError("coroot relation is not positive integral")
    return tuple(int(x) for x in rel)


def _coweights(simple_roots, simple_coroots, gram) -> tuple[Vec, ...]:
    """Fundamental coweights in the span of the coroots."""
    span = mat(simple_coroots)
    rows = mat([[dot(a, s, gram) for s in span] for a in simple_roots])
    out = []
    for i in range(len(simple_roots)):
        rhs = vec([1 if j == i else 0 for j in range(len(simple_roots))])
        coeffs = solve(rows, rhs)
        if coeffs is None:
            raise AssertionError("degenerate simple system")
        w = zero_vec(len(span[0]))
        for c, s in zip(coeffs, span):
            w = add(w, scale(c, s))
        out.append(w)
    return tuple(out)


def _check_datum(d: RootDatum) -> None:
    n = d.rank
    # single exact relations with the catalog integers
    hsum = zero_vec(d.ambient_dim)
    gsum = zero_vec(d.ambient_dim)
    for i in d.nodes():
        hsum = add(hsum, scale(d.h[i], d.extended_roots[i]))
        gsum = add(gsum, scale(d.g[i], d.extended_coroots[i]))
    if not is_zero(hsum) or not is_zero(gsum):
        raise AssertionError(f"relation failure for {d.type}")
    if d.h[0] != 1:
        raise AssertionError("extended root integer must be 1")
    if d.type.family != "BC":
        if d.g[0] != 1:
            raise AssertionError("extended coroot integer must be 1")
        if any(d.h[i] % d.g[i] for i in d.nodes()):
            raise AssertionError("coroot integers must divide root integers")
    if min(d.coroot_sq_lengths()) != 2:
        raise AssertionError(f"short coroot not normalized for {d.type}")
    # fundamental coweights are exactly dual to the simple roots
    for i, w in enumerate(d.coweight_lattice_basis):
        for j in range(1, n + 1):
            expect = Q(1) if j == i + 1 else Q(0)
            if d.pairing(d.extended_roots[j], w) != expect:
                raise AssertionError(f"coweight duality broken for {d.type}")


def dual_coxeter(st: SimpleType) -> int:
    """Dual Coxeter number, the sum of the extended coroot integers."""
    if st == TRIVIAL:
        return 1
    return sum(datum(st).g)


def center_order(st: SimpleType) -> int:
    return CENTER_ORDER[st.family](st.rank)


@lru_cache(maxsize=None)
def alcove(st: SimpleType) -> AlcoveData:
    """Alcove vertex data: the origin plus the vertices opposite each wall.

    Vertex i (for a finite node i) is the fundamental coweight divided by
    the root integer; it lies on every simple-root wall except the i-th and
    on the affine wall of the highest root.
    """
    d = datum(st)
    verts = [zero_vec(d.ambient_dim)]
    for i in range(1, d.rank + 1):
        verts.append(scale(Q(1, d.h[i]), d.coweight_lattice_basis[i - 1]))
    bary = zero_vec(d.ambient_dim)
    for v in verts:
        bary = add(bary, v)
    bary = scale(Q(1, len(verts)), bary)
    return AlcoveData(tuple(verts), bary)


def center_vertex_nodes(st: SimpleType) -> list[int]:
    """Nodes whose alcove vertex exponentiates to a central element.

    These are exactly the nodes with root integer 1; node 0 stands for the
    identity (vertex at the origin).
    """
    d = datum(st)
    return [i for i in d.nodes() if d.h[i] == 1]


def center_vertex(st: SimpleType, node: int) -> Vec:
    """The alcove vertex attached to an h=1 node (node 0 -> origin)."""
    d = datum(st)
    if d.h[node] != 1:
        raise ValueError(f"node {node} does not carry a central vertex")
    return alcove(st).vertices[node]


@lru_cache(maxsize=None)
def center_element_sum(st: SimpleType, node_a: int, node_b: int) -> int:
    """Group law on center nodes: the node of exp(v_a) * exp(v_b)."""
    va = center_vertex(st, node_a)
    vb = center_vertex(st, node_b)
    target = add(va, vb)
    for c in center_vertex_nodes(st):
        if _in_coroot_lattice(st, sub(target, center_vertex(st, c))):
            return c
    raise AssertionError("center nodes not closed under addition")


@lru_cache(maxsize=None)
def center_element_inverse(st: SimpleType, node: int) -> int:
    v = center_vertex(st, node)
    for c in center_vertex_nodes(st):
        if _in_coroot_lattice(st, add(v, center_vertex(st, c))):
            return c
    raise AssertionError("center node has no inverse")


def _in_coroot_lattice(st: SimpleType, v: Vec) -> bool:
    from .linalg import mat_vec

    c = mat_vec(coroot_coord_matrix(st), v)
    return all(x.denominator == 1 for x in c)


def fundamental_group_order(st: SimpleType) -> int:
    """Index of the coroot lattice in the coweight lattice."""
    d = datum(st)
    return lattice_index(d.coroot_lattice_basis, d.coweight_lattice_basis)


@lru_cache(maxsize=None)
def coroot_coord_matrix(st: SimpleType) -> Mat:
    """Left inverse of the coroot basis: coords(v) = M v for v in the span."""
    d = datum(st)
    b = mat(d.coroot_lattice_basis)  # rows are basis vectors
    gram = tuple(tuple(dot(u, v) for v in b) for u in b)
    n = len(b)
    inv = _invert(gram)
    # M = gram^{-1} * B  (Euclidean pairing suffices for coordinates)
    return tuple(
        tuple(
            sum((inv[i][k] * b[k][j] for k in range(n)), Q(0))
            for j in range(d.ambient_dim)
        )
        for i in range(n)
    )


def _invert(m: Mat) -> Mat:
    n = len(m)
    aug = [list(m[i]) + [Q(1) if j == i else Q(0) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)
