from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coroots.linalg import (
    add,
    dot,
    gram_of,
    in_lattice,
    is_zero,
    kernel_basis,
    lattice_index,
    mat,
    mat_vec,
    orthogonal_project,
    primitive,
    rank,
    scale,
    solve,
    sub,
    vec,
)

rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


def matrices(rows, cols):
    return st.lists(
        st.lists(rationals, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(mat)


def test_kernel_basis_identity_empty():
    assert kernel_basis(mat([[1, 0], [0, 1]])) == []


def test_kernel_basis_zero_matrix_full():
    basis = kernel_basis(mat([[0, 0, 0]]))
    assert len(basis) == 3


def test_kernel_basis_affine_a1():
    basis = kernel_basis(mat([[2, -2], [-2, 2]]))
    assert basis == [vec([1, 1])]


@given(matrices(3, 4))
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m):
        assert is_zero(mat_vec(m, v))
        assert all(x.denominator == 1 for x in v)


@given(matrices(4, 3))
def test_rank_plus_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == 3


@given(st.lists(rationals, min_size=3, max_size=3))
def test_primitive_is_integral_coprime(entries):
    v = vec(entries)
    p = primitive(v)
    if is_zero(v):
        assert p == v
        return
    from math import gcd

    ints = [int(x) for x in p]
    assert all(x.denominator == 1 for x in p)
    g = 0
    for x in ints:
        g = gcd(g, x)
    assert g == 1
    # p is parallel to v
    i = next(i for i, x in enumerate(v) if x != 0)
    assert scale(v[i] / p[i], p) == v


def test_project_inside_span_is_identity():
    span = [vec([1, 1, 0]), vec([0, 1, 1])]
    v = add(span[0], scale(3, span[1]))
    assert orthogonal_project(v, span) == v


def test_project_orthogonal_vector_is_zero():
    assert orthogonal_project(vec([1, -1]), [vec([1, 1])]) == vec([0, 0])


def test_project_hand_example():
    assert orthogonal_project(vec([1, 0]), [vec([1, 1])]) == vec([Q(1, 2), Q(1, 2)])


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_projection_idempotent_and_orthogonal(ventries, sentries):
    v, s = vec(ventries), vec(sentries)
    if is_zero(s):
        return
    p = orthogonal_project(v, [s])
    assert orthogonal_project(p, [s]) == p
    assert dot(sub(v, p), s) == 0


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2))
def test_projection_linear(a, b):
    span = [vec([2, 1])]
    va, vb = vec(a), vec(b)
    lhs = orthogonal_project(add(va, vb), span)
    rhs = add(orthogonal_project(va, span), orthogonal_project(vb, span))
    assert lhs == rhs


def test_gram_of_examples():
    assert gram_of([]) == ()
    assert gram_of([vec([1, 0]), vec([0, 1])]) == mat([[1, 0], [0, 1]])
    a1, a2 = vec([1, -1, 0]), vec([0, 1, -1])
    assert gram_of([a1, a2]) == mat([[2, -1], [-1, 2]])


def test_project_rejects_degenerate_gram():
    gram = mat([[0, 0], [0, 1]])
    with pytest.raises(ValueError):
        orthogonal_project(vec([1, 1]), [vec([1, 0])], gram)


@given(matrices(3, 3), st.lists(rationals, min_size=3, max_size=3))
def test_solve_solves(m, x):
    b = mat_vec(m, vec(x))
    got = solve(m, b)
    assert got is not None
    assert mat_vec(m, got) == b


def test_lattice_index_and_membership():
    sup = [vec([1, 0]), vec([0, 1])]
    sub_ = [vec([2, 0]), vec([1, 3])]
    assert lattice_index(sub_, sup) == 6
    assert in_lattice(vec([3, 3]), sub_)
    assert not in_lattice(vec([1, 0]), sub_)
