"""Center elements realized as diagram automorphisms via the alcove oracle.

A central element c corresponds to the alcove vertex exponentiating to it
(node 0 = identity, otherwise a node with root integer 1).  Its Weyl part
is computed, never transcribed: among all diagram automorphisms of the
extended coroot diagram, exactly one induces an affine map
t -> w(t - zeta_{c^-1}) that permutes the alcove vertices and translates
the central vertices by c.  That automorphism is nu(c).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import rootdata
from .diagrams import automorphism_group, compose, diagram_of
from .linalg import (
    Mat,
    Vec,
    kernel_basis,
    mat,
    mat_vec,
    sub,
    vec,
)
from .rootdata import RootDatum, SimpleType


@dataclass(frozen=True)
class CenterElement:
    node: int
    perm: tuple[int, ...]
    order: int

    @property
    def is_identity(self) -> bool:
        return self.node == 0


@dataclass(frozen=True)
class CenterSubgroup:
    type: SimpleType
    elements: tuple[CenterElement, ...]  # sorted by node id, identity first

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(e.node for e in self.elements)

    def perms(self) -> list[tuple[int, ...]]:
        return [e.perm for e in self.elements]

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_cyclic(self) -> bool:
        return any(e.order == self.order for e in self.elements)

    def generator(self) -> CenterElement:
        """Smallest-node element of maximal order (for cyclic subgroups)."""
        best = max(self.elements, key=lambda e: (e.order, -e.node))
        if best.order != self.order:
            raise ValueError("subgroup is not cyclic")
        return best

    def describe(self) -> str:
        if self.is_trivial:
            return "trivial"
        kind = "cyclic" if self.is_cyclic else "Z/2 x Z/2"
        return f"order {self.order} ({kind}), nodes {list(self.nodes)}"


def coroot_coords(d: RootDatum, v: Vec) -> Vec:
    """Coordinates of a coroot-span vector in the simple-coroot basis."""
    return mat_vec(rootdata.coroot_coord_matrix(d.type), v)


@lru_cache(maxsize=None)
def perm_matrix_on_coroots_of(st: SimpleType, perm: tuple[int, ...]) -> Mat:
    """Matrix (in the simple-coroot basis) of the linear map sending the
    extended coroot of node i to that of perm[i]."""
    d = rootdata.datum(st)
    cols = []
    for i in range(1, d.rank + 1):
        img = d.extended_coroots[perm[i]]
        cols.append(coroot_coords(d, img))
    # columns were computed; return row-major matrix
    return tuple(
        tuple(cols[j][i] for j in range(d.rank)) for i in range(d.rank)
    )


def perm_matrix_on_coroots(d: RootDatum, perm: tuple[int, ...]) -> Mat:
    return perm_matrix_on_coroots_of(d.type, perm)


def from_coroot_coords(d: RootDatum, coords: Vec) -> Vec:
    out = [coords[0] * 0] * d.ambient_dim
    for j, c in enumerate(coords):
        for i in range(d.ambient_dim):
            out[i] += c * d.coroot_lattice_basis[j][i]
    return tuple(out)


def apply_perm_linear(d: RootDatum, perm: tuple[int, ...], v: Vec) -> Vec:
    """Apply the induced linear map to an ambient vector in the coroot span."""
    coords = coroot_coords(d, v)
    return from_coroot_coords(d, mat_vec(perm_matrix_on_coroots(d, perm), coords))


@lru_cache(maxsize=None)
def _vertex_data(st: SimpleType):
    d = rootdata.datum(st)
    alc = rootdata.alcove(st)
    central = rootdata.center_vertex_nodes(st)
    return d, alc, central


@lru_cache(maxsize=None)
def _aut_group(st: SimpleType) -> tuple[tuple[int, ...], ...]:
    return tuple(automorphism_group(diagram_of(st)))


@lru_cache(maxsize=None)
def nu(st: SimpleType, target_node: int) -> CenterElement:
    """The Weyl part of the center element attached to an h=1 node.

    Found by the alcove vertex-permutation oracle: the affine map
    t -> w(t - zeta) with zeta the vertex of the inverse element must
    permute the alcove vertices and act on the central vertices as
    translation by the element.  Exactly one diagram automorphism passes.
    """
    d, alc, central = _vertex_data(st)
    if d.h[target_node] != 1:
        raise ValueError(f"node {target_node} does not carry a central element")
    inv_node = rootdata.center_element_inverse(st, target_node)
    zeta = alc.vertices[inv_node]
    vertex_set = set(alc.vertices)
    winners = []
    # per the convention w_c(extended node) = node of c, only automorphisms
    # with that image can pass; filtering keeps the search fast
    for perm in _aut_group(st):
        if perm[0] != target_node:
            continue
        pm = perm_matrix_on_coroots(d, perm)

        def phi(t: Vec) -> Vec:
            return from_coroot_coords(d, mat_vec(pm, coroot_coords(d, sub(t, zeta))))

        if any(phi(v) not in vertex_set for v in alc.vertices):
            continue
        ok = True
        for dn in central:
            expect = alc.vertices[rootdata.center_element_sum(st, target_node, dn)]
            if phi(alc.vertices[dn]) != expect:
                ok = False
                break
        if ok:
            winners.append(perm)
    if len(winners) != 1:
        raise AssertionError(
            f"vertex oracle found {len(winners)} automorphisms for node "
            f"{target_node} of {st}"
        )
    perm = winners[0]
    if perm[0] != target_node:
        raise AssertionError("oracle winner does not send the extended node to c")
    return CenterElement(target_node, perm, _node_order(st, target_node))


def _node_order(st: SimpleType, node: int) -> int:
    order = 1
    acc = node
    while acc != 0:
        acc = rootdata.center_element_sum(st, acc, node)
        order += 1
    return order


@lru_cache(maxsize=None)
def center_group(st: SimpleType) -> CenterSubgroup:
    """The full center, realized through the vertex oracle."""
    elements = tuple(
        sorted((nu(st, n) for n in rootdata.center_vertex_nodes(st)), key=lambda e: e.node)
    )
    grp = CenterSubgroup(st, elements)
    _check_homomorphism(st, grp)
    return grp


def _check_homomorphism(st: SimpleType, grp: CenterSubgroup) -> None:
    by_node = {e.node: e for e in grp.elements}
    for a in grp.elements:
        for b in grp.elements:
            prod = rootdata.center_element_sum(st, a.node, b.node)
            if compose(a.perm, b.perm) != by_node[prod].perm:
                raise AssertionError(f"nu is not a homomorphism for {st}")
    perms = {e.perm for e in grp.elements}
    if len(perms) != len(grp.elements):
        raise AssertionError(f"nu is not injective for {st}")


def trivial_subgroup(st: SimpleType) -> CenterSubgroup:
    return CenterSubgroup(st, (nu(st, 0),))


def subgroup_generated(st: SimpleType, nodes) -> CenterSubgroup:
    full = center_group(st)
    by_node = {e.node: e for e in full.elements}
    got = {0}
    frontier = list(nodes)
    while frontier:
        n = frontier.pop()
        if n not in by_node:
            raise ValueError(f"node {n} is not a center node of {st}")
        if n in got:
            continue
        got.add(n)
        for m in list(got):
            s = rootdata.center_element_sum(st, n, m)
            if s not in got:
                frontier.append(s)
    elements = tuple(sorted((by_node[n] for n in got), key=lambda e: e.node))
    return CenterSubgroup(st, elements)


def all_subgroups(st: SimpleType) -> list[CenterSubgroup]:
    """All subgroups of the center: the cyclic ones, plus the full center
    when it is not cyclic (the only such case is D_{2n})."""
    full = center_group(st)
    seen: dict[tuple[int, ...], CenterSubgroup] = {}
    for e in full.elements:
        sub_ = subgroup_generated(st, [e.node])
        seen.setdefault(sub_.nodes, sub_)
    if not full.is_cyclic:
        seen.setdefault(full.nodes, full)
    return sorted(seen.values(), key=lambda s: (s.order, s.nodes))


def cyclic_subgroups(st: SimpleType) -> list[CenterSubgroup]:
    return [s for s in all_subgroups(st) if s.is_cyclic]


def fixed_subspace_basis(d: RootDatum, sub_: CenterSubgroup) -> list[Vec]:
    """Ambient basis of the subspace of the coroot span fixed by w_C."""
    n = d.rank
    rows = []
    for e in sub_.elements:
        if e.is_identity:
            continue
        m = perm_matrix_on_coroots(d, e.perm)
        for i in range(n):
            rows.append(tuple(m[i][j] - (1 if i == j else 0) for j in range(n)))
    if not rows:
        coords = [vec([1 if j == i else 0 for j in range(n)]) for i in range(n)]
    else:
        coords = kernel_basis(mat(rows))
    return [from_coroot_coords(d, c) for c in coords]


# ---------------------------------------------------------------------------
# Orbits of a center subgroup on the extended diagram


@dataclass(frozen=True)
class Orbit:
    nodes: tuple[int, ...]
    eps: int
    mark: int

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class OrbitSet:
    orbits: tuple[Orbit, ...]
    degenerate: bool

    @property
    def marks(self) -> tuple[int, ...]:
        return tuple(o.mark for o in self.orbits)


def orbit_data(st: SimpleType, sub_: CenterSubgroup) -> OrbitSet:
    from .diagrams import orbit_kind, orbits_of

    d = rootdata.datum(st)
    dia = diagram_of(st)
    orbs = orbits_of(sub_.perms(), dia.n_nodes)
    for o in orbs:
        marks = {d.g[u] for u in o}
        if len(marks) != 1:
            raise AssertionError("coroot integers not constant on an orbit")
    if len(orbs) == 1:
        return OrbitSet((Orbit(orbs[0], 1, sum(d.g)),), True)
    out = []
    for o in orbs:
        eps = orbit_kind(dia, o)
        out.append(Orbit(o, eps, len(o) * d.g[o[0]]))
    return OrbitSet(tuple(out), False)


def l_c_factors(st: SimpleType, sub_: CenterSubgroup) -> tuple[list[int], int]:
    """Special-unitary factor sizes of the subgroup L attached to sub_.

    For a cyclic subgroup these are the orbit sizes of the Weyl part on the
    extended diagram (size-1 orbits are trivial factors, returned as the
    second component).  The non-cyclic full center of D_{2n} is handled via
    the simple roots not orthogonal to the center, giving n+1 copies of
    SU(2).
    """
    if sub_.is_cyclic:
        sizes = sorted((o.size for o in orbit_data(st, sub_).orbits), reverse=True)
        factors = [s for s in sizes if s > 1]
        trivial = len(sizes) - len(factors)
        nontrivial = _l_c_from_coefficients(st, sub_)
        if sorted(nontrivial, reverse=True) != factors:
            raise AssertionError("orbit factors disagree with coefficient factors")
        return factors, trivial
    if st.family == "D" and st.rank % 2 == 0 and sub_.order == 4:
        return sorted(_l_c_from_coefficients(st, sub_), reverse=True), 0
    raise ValueError("unsupported non-cyclic center subgroup")


def _l_c_from_coefficients(st: SimpleType, sub_: CenterSubgroup) -> list[int]:
    """SU factor sizes from the simple roots with non-integral coefficients.

    log(c) written in the simple coroots has some non-integral coefficients;
    the union over the subgroup spans a subdiagram whose components are all
    of A type, one SU(m+1) per component of size m.
    """
    d = rootdata.datum(st)
    alc = rootdata.alcove(st)
    marked: set[int] = set()
    for e in sub_.elements:
        if e.is_identity:
            continue
        coords = coroot_coords(d, alc.vertices[e.node])
        for i, x in enumerate(coords):
            if x.denominator != 1:
                marked.add(i + 1)
    if not marked:
        return []
    dia = diagram_of(st)
    comps = []
    todo = set(marked)
    while todo:
        u = todo.pop()
        comp = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in dia.neighbors(x):
                if y in todo:
                    todo.discard(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    for comp in comps:
        _assert_a_type(dia, comp)
    return [len(c) + 1 for c in comps]


def _assert_a_type(dia, comp) -> None:
    for u in comp:
        inside = [v for v in dia.neighbors(u) if v in comp]
        if len(inside) > 2 or any(dia.bond_mult(u, v) != 1 for v in inside):
            raise AssertionError("subdiagram component is not of A type")
    if len(comp) > 1 and sum(
        1 for u in comp if len([v for v in dia.neighbors(u) if v in comp]) == 1
    ) != 2:
        raise AssertionError("subdiagram component is not a chain")


# ---------------------------------------------------------------------------
# Center spec parsing (CLI surface)


def parse_center(st: SimpleType, spec: str) -> CenterSubgroup:
    """Center specs: trivial, full, c, c_SO, c_exotic, or node:<id>."""
    s = spec.strip()
    if s == "trivial":
        return trivial_subgroup(st)
    if s == "full":
        return center_group(st)
    if s == "c":
        full = center_group(st)
        if full.is_trivial:
            raise ValueError(f"{st} has trivial center; use 'trivial'")
        if not full.is_cyclic:
            raise ValueError(
                f"center of {st} is not cyclic; use c_SO, c_exotic or full"
            )
        return subgroup_generated(st, [full.generator().node])
    if s in ("c_SO", "c_so"):
        if st.family != "D":
            raise ValueError("c_SO is only defined for D types")
        return subgroup_generated(st, [1])
    if s == "c_exotic":
        if st.family != "D" or st.rank % 2 != 0:
            raise ValueError("c_exotic is only defined for D_{2n}")
        return subgroup_generated(st, [st.rank - 1])
    if s.startswith("node:"):
        return subgroup_generated(st, [int(s[5:])])
    raise ValueError(f"unrecognized center spec {spec!r}")
