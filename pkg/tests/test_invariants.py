"""Cross-module structural invariants swept over the whole catalog."""

import pytest

from coroots.center import all_subgroups, center_group, subgroup_generated
from coroots.derived import quotient_marked
from coroots.diagrams import diagram_of, generated_group, orbits_of, quotient
from coroots.moduli import catalog_types, components_for
from coroots.numerology import counts
from coroots.rootdata import parse_type

SWEEP = [
    "A5", "A7", "A11", "A12", "B4", "B7", "C5", "C8",
    "D4", "D5", "D6", "D8", "D9", "D12", "E6", "E7", "E8", "F4", "G2",
]


@pytest.mark.parametrize("spec", SWEEP)
def test_quotient_tower_all_subgroup_pairs(spec):
    """Quotient by G equals the two-step quotient through any H < G."""
    st = parse_type(spec)
    subs = all_subgroups(st)
    d = diagram_of(st)
    for big in subs:
        big_nodes = set(big.nodes)
        for small in subs:
            if not set(small.nodes) < big_nodes:
                continue
            orbits_h = orbits_of(small.perms(), d.n_nodes)
            q_h = quotient(d, small.perms())
            index = {o: i for i, o in enumerate(orbits_h)}
            induced = []
            for e in big.elements:
                induced.append(
                    tuple(index[tuple(sorted(e.perm[u] for u in o))] for o in orbits_h)
                )
            if q_h.n_nodes == 1:
                continue
            q_two = quotient(q_h, generated_group(induced, len(orbits_h)))
            q_direct = quotient(d, big.perms())
            assert q_two.cartan == q_direct.cartan
            assert q_two.marks == q_direct.marks


@pytest.mark.parametrize("spec", SWEEP)
def test_component_dimensions_match_divisibility_counts(spec):
    """d_X of the order-k records equals d_k of the quotient marked diagram."""
    st = parse_type(spec)
    for sub in all_subgroups(st):
        mq = quotient_marked(st, sub)
        c = counts(mq)
        for r in components_for(st, sub):
            assert r.d_X == c.d[r.order], (spec, sub.nodes, r.order)
            assert r.dim == 3 * (r.d_X - 1)
            assert r.torus_rank == r.d_X - 1
            assert r.cs.denominator == r.order or (r.order == 1 and r.cs == 0)


def test_b2_alias_round_trip():
    from coroots.diagrams import classify

    st = parse_type("B2")
    d = diagram_of(st)
    assert classify(d).type == parse_type("C2")
    grp = center_group(st)
    assert grp.order == 2
    sub = subgroup_generated(st, [grp.generator().node])
    assert quotient(d, sub.perms()).marks == quotient(
        diagram_of(parse_type("C2")), sub.perms()
    ).marks


def test_catalog_full_center_matches_known_structure():
    for st in catalog_types(12):
        grp = center_group(st)
        from coroots.rootdata import fundamental_group_order

        assert grp.order == fundamental_group_order(st)
        if st.family == "D" and st.rank % 2 == 0:
            assert not grp.is_cyclic
        else:
            assert grp.is_cyclic
