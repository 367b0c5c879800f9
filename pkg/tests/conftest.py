"""Shared independent oracle builders for the test suite.

These constructions deliberately avoid the package's own Dowling-family
code paths so they can serve as cross-checks.
"""

import itertools

from wreathcalc.posets import Poset


def chain_poset(n):
    return Poset(list(range(n)), lambda a, b: a <= b)


def antichain(n):
    return Poset(list(range(n)), lambda a, b: a == b)


def boolean_lattice(n):
    subsets = [frozenset(s) for k in range(n + 1)
               for s in itertools.combinations(range(n), k)]
    return Poset(subsets, lambda a, b: a <= b)


def partition_lattice(n):
    """Set partitions of {0..n-1} under refinement, built recursively."""
    def parts(elems):
        elems = list(elems)
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for sub in parts(rest):
            for k in range(len(sub)):
                yield sub[:k] + [[first] + sub[k]] + sub[k + 1:]
            yield [[first]] + sub
    payloads = [frozenset(frozenset(b) for b in p) for p in parts(range(n))]
    def refines(a, b):
        return all(any(block <= big for big in b) for block in a)
    return Poset(payloads, refines, validate=True)


def bell_number(n):
    """Bell numbers by the triangle recurrence."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
