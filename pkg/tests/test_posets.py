"""Poset engine: relations, Moebius values, ranks, homology, automorphisms."""

import itertools
import random
from fractions import Fraction

import pytest

from wreathcalc.posets import (
    Poset, PosetError, equivariant_char_poly, fixed_subposet, is_automorphism,
    lefschetz_top_trace, mobius_via_chains, order_complex_homology,
    poset_dump_lines,
)


from conftest import antichain, boolean_lattice, chain_poset, partition_lattice


# -- construction and relations -----------------------------------------------------


def test_chain_basics():
    P = chain_poset(4)
    assert P.bottom() == 0 and P.top() == 3
    assert P.cover_pairs() == [(0, 1), (1, 2), (2, 3)]
    assert P.ranks() == [0, 1, 2, 3]
    assert P.is_graded()
    assert P.length() == 3
    assert P.mobius(0, 1) == -1
    assert P.mobius(0, 2) == 0
    assert P.mobius(0, 3) == 0
    assert P.mobius(2, 1) == 0


def test_antichain_has_no_bounds():
    P = antichain(3)
    assert P.bottom() is None and P.top() is None
    with pytest.raises(PosetError):
        P.mobius_bottom_top()


def test_validation_catches_broken_relation():
    with pytest.raises(PosetError):
        Poset([0, 1], lambda a, b: True, validate=True)  # not antisymmetric
    with pytest.raises(PosetError):
        Poset([0, 1], lambda a, b: a != b or a == 2, validate=True)  # irreflexive
    # non-transitive: 0<1, 1<2 but not 0<2
    rel = {(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)}
    with pytest.raises(PosetError):
        Poset([0, 1, 2], lambda a, b: (a, b) in rel, validate=True)


def test_boolean_lattice_mobius_and_ranks():
    P = boolean_lattice(3)
    assert P.n == 8
    b, t = P.bottom(), P.top()
    assert P.mobius(b, t) == -1
    assert P.is_graded() and P.length() == 3
    ranks = P.ranks()
    assert sorted(ranks) == [0, 1, 1, 1, 2, 2, 2, 3]
    # Whitney coefficients of B_3 are those of (1-t)^3
    mu = P.mobius_from(b)
    by_rank = {}
    for j, v in mu.items():
        by_rank[ranks[j]] = by_rank.get(ranks[j], 0) + v
    assert by_rank == {0: 1, 1: -3, 2: 3, 3: -1}


def test_partition_lattice_mobius_oracles():
    # classic values: mu of the partition lattice is (-1)^(n-1) (n-1)!
    P3 = partition_lattice(3)
    assert P3.n == 5
    assert P3.mobius_bottom_top() == 2
    P4 = partition_lattice(4)
    assert P4.n == 15
    assert P4.mobius_bottom_top() == -6
    assert P4.is_graded() and P4.length() == 3


def test_mobius_matches_chain_count():
    for P in (chain_poset(5), boolean_lattice(3), partition_lattice(4)):
        assert mobius_via_chains(P) == P.mobius_bottom_top()


def test_mobius_on_random_posets_against_chains():
    rng = random.Random(99)
    for _ in range(8):
        n = 7
        # random DAG on 1..n-2 between new bottom 0 and top n-1
        edges = set()
        for i in range(1, n - 1):
            for j in range(i + 1, n - 1):
                if rng.random() < 0.4:
                    edges.add((i, j))
        # transitive closure
        closure = {(i, i) for i in range(n)}
        closure |= {(0, j) for j in range(n)}
        closure |= {(i, n - 1) for i in range(n)}
        changed = True
        base = set(edges)
        while changed:
            changed = False
            for (a, b) in list(base):
                for (c, d) in list(base):
                    if b == c and (a, d) not in base:
                        base.add((a, d))
                        changed = True
        closure |= base
        P = Poset(list(range(n)), lambda a, b: (a, b) in closure, validate=True)
        assert mobius_via_chains(P) == P.mobius_bottom_top()


def test_subposet_and_open_interval():
    P = boolean_lattice(3)
    b, t = P.bottom(), P.top()
    middle = P.open_interval(b, t)
    assert middle.n == 6
    assert middle.bottom() is None
    singletons = [i for i in range(P.n) if len(P.payloads[i]) == 1]
    sub = P.subposet(singletons)
    assert sub.n == 3 and sub.cover_pairs() == []


# -- homology ---------------------------------------------------------------------


def test_homology_of_empty_poset():
    P = antichain(0)
    assert order_complex_homology(P) == {-1: 1}


def test_homology_of_points():
    P = antichain(4)
    betti = order_complex_homology(P)
    assert betti[0] == 3
    assert betti[-1] == 0


def test_homology_of_contractible_chain():
    P = chain_poset(3)
    betti = order_complex_homology(P)
    assert all(v == 0 for v in betti.values())


def test_homology_of_hexagon():
    # proper part of B_3 is the barycentric hexagon: a circle
    P = boolean_lattice(3).proper_part()
    betti = order_complex_homology(P)
    assert betti[1] == 1
    assert betti[0] == 0 and betti[-1] == 0


def test_homology_of_partition_lattice_interval():
    # proper part of Pi_4 has top homology of dimension |mu| = 6 in degree 1
    P = partition_lattice(4).proper_part()
    betti = order_complex_homology(P)
    assert betti[1] == 6
    assert betti[0] == 0


def test_homology_matches_euler_characteristic():
    for P in (boolean_lattice(3), partition_lattice(4)):
        proper = P.proper_part()
        betti = order_complex_homology(proper)
        # reduced Euler characteristic equals mu(0,1)
        euler = sum((-1) ** abs(k) * v for k, v in betti.items())
        assert P.mobius_bottom_top() == euler


# -- automorphisms ------------------------------------------------------------------


def swap_auto(P, swap):
    """Automorphism of a boolean lattice induced by a ground permutation."""
    mapping = {}
    for i, s in enumerate(P.payloads):
        target = frozenset(swap[x] for x in s)
        mapping[i] = P.payloads.index(target)
    return [mapping[i] for i in range(P.n)]


def test_is_automorphism():
    P = boolean_lattice(3)
    perm = swap_auto(P, {0: 1, 1: 0, 2: 2})
    assert is_automorphism(P, perm)
    assert is_automorphism(P, list(range(P.n)))
    bad = list(range(P.n))
    b = P.bottom()
    other = (b + 1) % P.n
    bad[b], bad[other] = bad[other], bad[b]
    assert not is_automorphism(P, bad)


def test_fixed_subposet_of_swap():
    P = boolean_lattice(3)
    perm = swap_auto(P, {0: 1, 1: 0, 2: 2})
    sub, orig = fixed_subposet(P, perm)
    fixed_sets = {P.payloads[i] for i in orig}
    assert fixed_sets == {frozenset(), frozenset({2}), frozenset({0, 1}),
                          frozenset({0, 1, 2})}
    assert sub.mobius_bottom_top() == 1  # a diamond


def test_equivariant_char_poly():
    P = boolean_lattice(3)
    ident = list(range(P.n))
    assert equivariant_char_poly(P, ident) == {0: 1, 1: -3, 2: 3, 3: -1}
    perm = swap_auto(P, {0: 1, 1: 0, 2: 2})
    assert equivariant_char_poly(P, perm) == {0: 1, 1: -1, 2: -1, 3: 1}


def test_lefschetz_top_trace():
    P = boolean_lattice(3)
    # identity trace = dim of the hexagon's circle homology
    assert lefschetz_top_trace(P, list(range(P.n))) == 1
    # the swap acts on the circle as a reflection: trace -1 on H_1
    perm = swap_auto(P, {0: 1, 1: 0, 2: 2})
    assert lefschetz_top_trace(P, perm) == -1


def test_lefschetz_matches_homology_trace_dimension():
    # for the identity the trace must equal the top Betti number
    for P in (boolean_lattice(3), partition_lattice(4)):
        top_betti = order_complex_homology(P.proper_part())
        top_dim = max(k for k, v in top_betti.items() if v) if any(
            top_betti.values()) else -1
        assert lefschetz_top_trace(P, list(range(P.n))) == top_betti.get(top_dim, 0)


def test_dump_deterministic():
    P = boolean_lattice(2)
    lines = poset_dump_lines(P, payload_str=lambda s: "{%s}" % ",".join(
        str(x) for x in sorted(s)))
    assert lines[0] == "elements 4"
    assert lines[-1].count(" ") == 1
    assert lines == poset_dump_lines(P, payload_str=lambda s: "{%s}" % ",".join(
        str(x) for x in sorted(s)))
