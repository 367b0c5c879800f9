"""Builders for the group-labeled partition posets and their relatives.

Ground data: n positions and a finite group G.  Points are pairs (g, m)
encoded as the bit m*|G| + g.  An element of the big poset is a pair

    (i_mask, parts)

where i_mask marks the positions making up the absorbed zone J = G x I, and
parts is the sorted tuple of point bitmasks forming a partition of the
remaining points that is stable under left translation by G, with every
translate of a part either equal to it or disjoint (free).  Freeness forces
each part to pick exactly one group label per position it touches, so a part
is a position block plus a section, and its G-orbit has exactly |G| parts.

The order: (I, pi) <= (I', pi') iff I is contained in I' and every part of pi
either sits inside G x I' or inside a single part of pi'.

Families select which elements are kept:

    q       everything
    r       only I = empty or I = all positions
    qsim    |I| != 1
    q1modd  all block sizes = 1 mod d, and |I| = 0 mod d or I full
    q0modd  the bottom, plus all elements whose block sizes are = 0 mod d
    pi      I = empty over the trivial group: the plain partition lattice

Element counts are cross-checked by an independent binomial recursion that
never materializes masks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, Optional

from .groups import FiniteGroup
from .posets import Poset, _iter_bits
from .wreath import WreathElement, induced_point_perm

FAMILIES = ("q", "r", "qsim", "q1modd", "q0modd", "pi")

Payload = tuple[int, tuple[int, ...]]


class FamilyError(ValueError):
    pass


def _size_predicate(family: str, d: Optional[int]) -> Callable[[int], bool]:
    if family == "q1modd":
        return lambda s: s % d == 1
    if family == "q0modd":
        return lambda s: s % d == 0
    return lambda s: True


def _i_size_allowed(family: str, n: int, d: Optional[int], i_size: int) -> bool:
    if family == "r":
        return i_size in (0, n)
    if family == "qsim":
        return i_size != 1
    if family == "q1modd":
        return i_size % d == 0 or i_size == n
    if family == "pi":
        return i_size == 0
    return True


def _check_args(family: str, G: FiniteGroup, n: int, d: Optional[int]) -> int:
    if family not in FAMILIES:
        raise FamilyError("unknown family %r" % family)
    if n < 1:
        raise FamilyError("need n >= 1")
    if family in ("q1modd", "q0modd"):
        if d is None or d < 2:
            raise FamilyError("family %s needs d >= 2" % family)
        return d
    if family == "pi" and G.order != 1:
        raise FamilyError("the partition-lattice family needs the trivial group")
    return 0


def _orbit_parts(G: FiniteGroup, block: tuple[int, ...],
                 section: tuple[int, ...]) -> list[int]:
    o = G.order
    parts = []
    for a in range(o):
        mask = 0
        for m, s in zip(block, section):
            mask |= 1 << (m * o + G.mul(a, s))
        parts.append(mask)
    return parts


def _free_partitions(G: FiniteGroup, positions: tuple[int, ...],
                     size_ok: Callable[[int], bool]) -> Iterator[list[int]]:
    """All free partitions of G x positions with allowed block sizes, as part lists."""
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for k in range(len(rest) + 1):
        if not size_ok(k + 1):
            continue
        for others in itertools.combinations(rest, k):
            block = (first,) + others
            remaining = tuple(p for p in rest if p not in others)
            for section in itertools.product(range(G.order), repeat=k):
                orbit = _orbit_parts(G, block, (G.identity,) + section)
                for tail in _free_partitions(G, remaining, size_ok):
                    yield orbit + tail


def enumerate_family(family: str, G: FiniteGroup, n: int,
                     d: Optional[int] = None) -> list[Payload]:
    """All family elements, sorted canonically."""
    d = _check_args(family, G, n, d) or d
    size_ok = _size_predicate(family, d)
    out: list[Payload] = []
    if family == "q0modd":
        bottom = (0, tuple(sorted(
            part for m in range(n)
            for part in _orbit_parts(G, (m,), (G.identity,)))))
        out.append(bottom)
    for i_size in range(n + 1):
        if not _i_size_allowed(family, n, d, i_size):
            continue
        for I in itertools.combinations(range(n), i_size):
            i_mask = 0
            for m in I:
                i_mask |= 1 << m
            rest = tuple(m for m in range(n) if m not in I)
            for parts in _free_partitions(G, rest, size_ok):
                out.append((i_mask, tuple(sorted(parts))))
    return sorted(set(out))


def count_family(family: str, G: FiniteGroup, n: int,
                 d: Optional[int] = None) -> int:
    """Element count by binomial recursion; independent of enumerate_family."""
    d = _check_args(family, G, n, d) or d
    size_ok = _size_predicate(family, d)
    o = G.order
    memo = {0: 1}

    def free_count(m: int) -> int:
        if m in memo:
            return memo[m]
        total = 0
        for s in range(1, m + 1):
            if size_ok(s):
                total += comb(m - 1, s - 1) * o ** (s - 1) * free_count(m - s)
        memo[m] = total
        return total

    total = 0
    for i_size in range(n + 1):
        if not _i_size_allowed(family, n, d, i_size):
            continue
        total += comb(n, i_size) * free_count(n - i_size)
    if family == "q0modd":
        total += 1  # the bottom element is adjoined separately
    return total


def dowling_leq_factory(G: FiniteGroup, n: int) -> Callable[[Payload, Payload], bool]:
    o = G.order
    pos_mask = [((1 << o) - 1) << (m * o) for m in range(n)]

    def j_mask_of(i_mask: int) -> int:
        mask = 0
        for m in _iter_bits(i_mask):
            mask |= pos_mask[m]
        return mask

    def leq(x: Payload, y: Payload) -> bool:
        xi, xparts = x
        yi, yparts = y
        if xi & ~yi:
            return False
        yj = j_mask_of(yi)
        for K in xparts:
            outside = K & ~yj
            if not outside:
                continue
            lowest = outside & -outside
            target = 0
            for Ky in yparts:
                if Ky & lowest:
                    target = Ky
                    break
            if K & ~target:
                return False
        return True

    return leq


@dataclass
class FamilyPoset:
    family: str
    G: FiniteGroup
    n: int
    d: Optional[int]
    poset: Poset
    index_of: dict = field(default_factory=dict)

    def action_of(self, w: WreathElement) -> list[int]:
        """The poset permutation induced by a wreath element."""
        if len(w.perm) != self.n:
            raise FamilyError("element acts on %d positions, poset has %d"
                              % (len(w.perm), self.n))
        point_perm = induced_point_perm(self.G, w)
        out = []
        for payload in self.poset.payloads:
            image = transform_payload(payload, w.perm, point_perm)
            out.append(self.index_of[image])
        return out


def transform_payload(payload: Payload, perm, point_perm) -> Payload:
    i_mask, parts = payload
    new_i = 0
    for m in _iter_bits(i_mask):
        new_i |= 1 << perm[m]
    new_parts = []
    for K in parts:
        mask = 0
        for pnt in _iter_bits(K):
            mask |= 1 << point_perm[pnt]
        new_parts.append(mask)
    return (new_i, tuple(sorted(new_parts)))


def _build_up_masks(payloads: list[Payload], G: FiniteGroup, n: int) -> list[int]:
    """Relation masks computed levelwise: x <= y forces the ambient rank
    n - #blocks to grow and I to be contained, so most pairs exit in one test."""
    o = G.order
    npoints = n * o
    count = len(payloads)
    pos_mask = [((1 << o) - 1) << (m * o) for m in range(n)]
    j_mask = []
    part_at = []
    rank = []
    for i_mask, parts in payloads:
        jm = 0
        for m in _iter_bits(i_mask):
            jm |= pos_mask[m]
        j_mask.append(jm)
        pa = [0] * npoints
        for K in parts:
            for pnt in _iter_bits(K):
                pa[pnt] = K
        part_at.append(pa)
        rank.append(n - len(parts) // o)
    levels: dict[int, list[int]] = {}
    for idx, r in enumerate(rank):
        levels.setdefault(r, []).append(idx)
    up = [1 << i for i in range(count)]
    for x in range(count):
        xi, xparts = payloads[x]
        for ry in range(rank[x] + 1, n + 1):
            for y in levels.get(ry, ()):
                if xi & ~payloads[y][0]:
                    continue
                jy = j_mask[y]
                pay = part_at[y]
                ok = True
                for K in xparts:
                    out = K & ~jy
                    if not out:
                        continue
                    tgt = pay[(out & -out).bit_length() - 1]
                    if K & ~tgt:
                        ok = False
                        break
                if ok:
                    up[x] |= 1 << y
    return up


def build_family(family: str, G: FiniteGroup, n: int, d: Optional[int] = None,
                 validate: bool = False) -> FamilyPoset:
    payloads = enumerate_family(family, G, n, d)
    if len(payloads) != count_family(family, G, n, d):
        raise FamilyError("enumeration disagrees with the counting recursion")
    if validate:
        poset = Poset(payloads, dowling_leq_factory(G, n), validate=True)
    else:
        poset = Poset.from_masks(payloads, _build_up_masks(payloads, G, n))
    fp = FamilyPoset(family, G, n, d, poset,
                     {payload: i for i, payload in enumerate(payloads)})
    return fp


def family_rank_formula(fp: FamilyPoset, payload: Payload) -> int:
    """The closed-form rank of an element in its family poset."""
    i_mask, parts = payload
    o = fp.G.order
    n, d = fp.n, fp.d
    blocks = len(parts) // o
    if fp.family in ("q", "r", "qsim", "pi"):
        return n - blocks
    if fp.family == "q1modd":
        if i_mask == (1 << n) - 1:
            return -(-n // d)
        return (n - blocks) // d
    if fp.family == "q0modd":
        if i_mask == 0 and blocks == n:
            return 0
        return n // d + 1 - blocks
    raise FamilyError("no rank formula for %r" % fp.family)


def verify_rank_formulas(fp: FamilyPoset) -> None:
    """Check gradedness and the closed-form rank of every element."""
    if not fp.poset.is_graded():
        raise FamilyError("%s poset is not graded" % fp.family)
    ranks = fp.poset.ranks()
    for i, payload in enumerate(fp.poset.payloads):
        expected = family_rank_formula(fp, payload)
        if ranks[i] != expected:
            raise FamilyError("rank formula fails at element %d: %d vs %d"
                              % (i, ranks[i], expected))


def zero_mod_atom_key(payload: Payload, G: FiniteGroup, n: int):
    """Sort key for q0modd atoms: the concatenated position word, then the
    orbit partitions blockwise as tie-breaker."""
    i_mask, parts = payload
    blocks: dict[tuple[int, ...], list[int]] = {}
    o = G.order
    for K in parts:
        positions = tuple(sorted({pnt // o for pnt in _iter_bits(K)}))
        blocks.setdefault(positions, []).append(K)
    ordered = sorted(blocks.items(), key=lambda kv: kv[0][0])
    word = tuple(sorted(_iter_bits(i_mask)))
    for positions, _orbit in ordered:
        word += positions
    ties = tuple(tuple(sorted(orbit)) for _positions, orbit in ordered)
    return (word, ties)
