"""Concrete finite groups given by Cayley tables.

Elements are dense integer indices 0..order-1.  A group is described by its
multiplication table: ``table[i][j]`` is the index of the product of element
i and element j.  Conjugacy classes are computed eagerly by exhaustive
conjugation and ordered canonically by minimal member index, so class ids
are stable across runs; everything downstream (series variables, cycle
indices) relies on that ordering.

Groups here are desk scale (|G| <= ~24), so validation is exhaustive:
Latin-square check, two-sided identity, associativity over all triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


class GroupTableError(ValueError):
    """Raised when a multiplication table fails to describe a group."""


@dataclass(frozen=True)
class ConjugacyClass:
    class_id: int
    representative: int  # minimal member index
    members: tuple[int, ...]
    size: int


class FiniteGroup:
    """Immutable finite group with precomputed class data.

    Attributes:
        order: number of elements.
        table: order x order tuple of tuples, table[i][j] = i * j.
        identity: index of the identity element.
        names: element labels (generated if not supplied).
        inverse: inverse[i] is the index of the two-sided inverse of i.
        classes: conjugacy classes sorted by minimal member index.
        class_of: class_of[i] is the class id of element i.
    """

    def __init__(self, table: Sequence[Sequence[int]],
                 names: Optional[Sequence[str]] = None):
        rows = tuple(tuple(row) for row in table)
        _validate_table(rows)
        self.order = len(rows)
        self.table = rows
        self.identity = _find_identity(rows)
        _validate_group_axioms(rows, self.identity)
        if names is not None:
            if len(names) != self.order:
                raise GroupTableError(
                    "expected %d element names, got %d" % (self.order, len(names)))
            self.names = tuple(str(s) for s in names)
        else:
            self.names = tuple("x%d" % i for i in range(self.order))
        self.inverse = _inverses(rows, self.identity)
        self.classes = _conjugacy_classes(rows, self.inverse)
        class_of = [0] * self.order
        for cl in self.classes:
            for m in cl.members:
                class_of[m] = cl.class_id
        self.class_of = tuple(class_of)
        self._power_classes: dict[tuple[int, int], int] = {}

    # -- basic arithmetic ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, g: int, k: int) -> int:
        """g**k for k >= 0, by repeated squaring."""
        if k < 0:
            raise ValueError("negative exponent; use inverse[] first")
        acc = self.identity
        base = g
        while k:
            if k & 1:
                acc = self.table[acc][base]
            base = self.table[base][base]
            k >>= 1
        return acc

    def conjugate(self, x: int, g: int) -> int:
        """x g x^{-1}."""
        return self.table[self.table[x][g]][self.inverse[x]]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def identity_class(self) -> int:
        return self.class_of[self.identity]

    def class_size(self, c: int) -> int:
        return self.classes[c].size

    def __repr__(self) -> str:
        return "FiniteGroup(order=%d, classes=%d)" % (self.order, self.num_classes)


def _validate_table(rows: tuple[tuple[int, ...], ...]) -> None:
    m = len(rows)
    if m == 0:
        raise GroupTableError("empty table")
    for i, row in enumerate(rows):
        if len(row) != m:
            raise GroupTableError("row %d has length %d, expected %d" % (i, len(row), m))
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < m):
                raise GroupTableError("entry (%d,%d)=%r out of range 0..%d" % (i, j, v, m - 1))
    full = set(range(m))
    for i, row in enumerate(rows):
        if set(row) != full:
            raise GroupTableError("row %d is not a permutation of 0..%d" % (i, m - 1))
    for j in range(m):
        if {rows[i][j] for i in range(m)} != full:
            raise GroupTableError("column %d is not a permutation of 0..%d" % (j, m - 1))


def _find_identity(rows: tuple[tuple[int, ...], ...]) -> int:
    m = len(rows)
    for e in range(m):
        if all(rows[e][j] == j and rows[j][e] == j for j in range(m)):
            return e
    raise GroupTableError("table has no two-sided identity element")


def _validate_group_axioms(rows: tuple[tuple[int, ...], ...], identity: int) -> None:
    m = len(rows)
    for a in range(m):
        for b in range(m):
            ab = rows[a][b]
            row_ab = rows[ab]
            row_a = rows[a]
            for c in range(m):
                if row_ab[c] != row_a[rows[b][c]]:
                    raise GroupTableError(
                        "associativity fails at triple (%d,%d,%d): "
                        "(%d*%d)*%d=%d but %d*(%d*%d)=%d"
                        % (a, b, c, a, b, c, row_ab[c], a, b, c, row_a[rows[b][c]]))
    for a in range(m):
        if not any(rows[a][b] == identity and rows[b][a] == identity for b in range(m)):
            raise GroupTableError("element %d has no two-sided inverse" % a)


def _inverses(rows: tuple[tuple[int, ...], ...], identity: int) -> tuple[int, ...]:
    m = len(rows)
    inv = [0] * m
    for a in range(m):
        inv[a] = rows[a].index(identity)
    return tuple(inv)


def _conjugacy_classes(rows: tuple[tuple[int, ...], ...],
                       inverse: tuple[int, ...]) -> tuple[ConjugacyClass, ...]:
    m = len(rows)
    seen = [False] * m
    classes = []
    for g in range(m):  # ascending, so classes come out sorted by min member
        if seen[g]:
            continue
        orbit = {rows[rows[x][g]][inverse[x]] for x in range(m)}
        for h in orbit:
            seen[h] = True
        members = tuple(sorted(orbit))
        classes.append(ConjugacyClass(
            class_id=len(classes), representative=members[0],
            members=members, size=len(members)))
    return tuple(classes)


# -- constructors -----------------------------------------------------------

def cyclic_group(r: int) -> FiniteGroup:
    """The cyclic group of order r; element k is the k-th power of the generator."""
    if r < 1:
        raise GroupTableError("cyclic group order must be >= 1, got %d" % r)
    table = [[(i + j) % r for j in range(r)] for i in range(r)]
    names = ["1"] + ["g" if k == 1 else "g^%d" % k for k in range(1, r)]
    return FiniteGroup(table, names)


def symmetric_group(m: int) -> FiniteGroup:
    """The symmetric group on m letters, elements in lexicographic one-line order."""
    from itertools import permutations
    if m < 1:
        raise GroupTableError("symmetric group needs m >= 1, got %d" % m)
    perms = list(permutations(range(m)))  # identity is first
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(m))] for q in perms] for p in perms]
    names = ["".join(str(v) for v in p) for p in perms]
    return FiniteGroup(table, names)


def group_from_table(table: Sequence[Sequence[int]],
                     names: Optional[Sequence[str]] = None) -> FiniteGroup:
    """Validate a raw Cayley table and return the group it describes."""
    return FiniteGroup(table, names)


def class_power(G: FiniteGroup, c: int, j: int) -> int:
    """Class id of g**j for any g in class c (well defined; spot-checked in tests)."""
    if not (0 <= c < G.num_classes):
        raise ValueError("class id %d out of range" % c)
    if j < 1:
        raise ValueError("power must be >= 1, got %d" % j)
    key = (c, j)
    hit = G._power_classes.get(key)
    if hit is None:
        hit = G.class_of[G.power(G.classes[c].representative, j)]
        G._power_classes[key] = hit
    return hit


# -- text format ------------------------------------------------------------

def read_table_text(text: str) -> FiniteGroup:
    """Parse the plain-text Cayley format.

    Line 1 is the order m, the next m lines hold m space-separated indices
    each (row i = products i*j), and an optional final line gives m element
    names.  The identity must be element 0.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GroupTableError("empty table file")
    try:
        m = int(lines[0])
    except ValueError:
        raise GroupTableError("first line must be the group order, got %r" % lines[0])
    if len(lines) < m + 1:
        raise GroupTableError("expected %d table rows, found %d" % (m, len(lines) - 1))
    table = []
    for ln in lines[1:m + 1]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise GroupTableError("non-integer entry in row %r" % ln)
        table.append(row)
    names = None
    if len(lines) > m + 1:
        names = lines[m + 1].split()
    G = FiniteGroup(table, names)
    if G.identity != 0:
        raise GroupTableError("identity must be element 0 in the text format, found %d"
                              % G.identity)
    return G
