"""Finite posets as bitmask relation tables, with exact topological invariants.

A Poset stores, for each element index i, the bitmask up[i] of all j with
i <= j (and the transpose down[j]).  Everything downstream -- covers, Moebius
values, rank functions, order-complex homology, fixed subposets under an
automorphism -- works on these masks with integer arithmetic only, so results
are exact.

Homology is reduced rational homology of the order complex (the simplicial
complex of chains) computed by Gaussian elimination on sparse boundary
matrices over Fraction entries, including the augmentation, so the empty
poset correctly reports one dimension in degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence


class PosetError(ValueError):
    pass


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Poset:
    """A finite poset over payload elements, compared once at construction."""

    __slots__ = ("payloads", "n", "up", "down", "_mobius_cache", "_ranks")

    def __init__(self, payloads: Sequence, leq: Callable, validate: bool = False):
        self.payloads = list(payloads)
        self.n = len(self.payloads)
        up = []
        for i, a in enumerate(self.payloads):
            mask = 0
            for j, b in enumerate(self.payloads):
                if leq(a, b):
                    mask |= 1 << j
            up.append(mask)
        self.up = up
        self.down = self._transpose(up)
        self._mobius_cache: dict[int, dict[int, int]] = {}
        self._ranks: Optional[list[int]] = None
        if validate:
            self._validate()

    @classmethod
    def from_masks(cls, payloads: Sequence, up: list[int]) -> "Poset":
        self = cls.__new__(cls)
        self.payloads = list(payloads)
        self.n = len(self.payloads)
        self.up = list(up)
        self.down = self._transpose(self.up)
        self._mobius_cache = {}
        self._ranks = None
        return self

    @staticmethod
    def _transpose(up: list[int]) -> list[int]:
        n = len(up)
        down = [0] * n
        for i, mask in enumerate(up):
            for j in _iter_bits(mask):
                down[j] |= 1 << i
        return down

    def _validate(self) -> None:
        for i in range(self.n):
            if not (self.up[i] >> i) & 1:
                raise PosetError("relation is not reflexive at %d" % i)
            if self.up[i] & self.down[i] != 1 << i:
                raise PosetError("relation is not antisymmetric at %d" % i)
            for j in _iter_bits(self.up[i]):
                if self.up[j] & ~self.up[i]:
                    raise PosetError(
                        "relation is not transitive through %d <= %d" % (i, j))

    # -- relation queries ------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def strict_up(self, i: int) -> int:
        return self.up[i] & ~(1 << i)

    def strict_down(self, i: int) -> int:
        return self.down[i] & ~(1 << i)

    def bottom(self) -> Optional[int]:
        for i in range(self.n):
            if self.up[i] == (1 << self.n) - 1:
                return i
        return None

    def top(self) -> Optional[int]:
        for i in range(self.n):
            if self.down[i] == (1 << self.n) - 1:
                return i
        return None

    def covers_of(self, i: int) -> list[int]:
        """Elements covering i."""
        out = []
        for j in _iter_bits(self.strict_up(i)):
            if not self.strict_up(i) & self.strict_down(j):
                out.append(j)
        return out

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.covers_of(i)]

    # -- subposets ---------------------------------------------------------------

    def subposet(self, indices: Sequence[int]) -> "Poset":
        """Restriction to the given indices (payloads carried over)."""
        idx = list(indices)
        pos = {orig: k for k, orig in enumerate(idx)}
        up = []
        for orig in idx:
            mask = 0
            for j in _iter_bits(self.up[orig]):
                if j in pos:
                    mask |= 1 << pos[j]
            up.append(mask)
        return Poset.from_masks([self.payloads[i] for i in idx], up)

    def proper_part_indices(self) -> list[int]:
        b, t = self.bottom(), self.top()
        if b is None or t is None:
            raise PosetError("proper part needs a bottom and a top")
        return [i for i in range(self.n) if i != b and i != t]

    def proper_part(self) -> "Poset":
        return self.subposet(self.proper_part_indices())

    def open_interval(self, i: int, j: int) -> "Poset":
        mask = self.strict_up(i) & self.strict_down(j)
        return self.subposet(list(_iter_bits(mask)))

    # -- Moebius function -----------------------------------------------------------

    def mobius_from(self, i: int) -> dict[int, int]:
        """mu(i, j) for every j >= i, by one sweep in a linear extension."""
        if i in self._mobius_cache:
            return self._mobius_cache[i]
        above = sorted(_iter_bits(self.up[i]),
                       key=lambda j: (self.down[j] & self.up[i]).bit_count())
        mu: dict[int, int] = {}
        for j in above:
            if j == i:
                mu[j] = 1
            else:
                mu[j] = -sum(mu[k] for k in _iter_bits(self.up[i] & self.strict_down(j)))
        self._mobius_cache[i] = mu
        return mu

    def mobius(self, i: int, j: int) -> int:
        if not self.leq(i, j):
            return 0
        return self.mobius_from(i)[j]

    def mobius_bottom_top(self) -> int:
        b, t = self.bottom(), self.top()
        if b is None or t is None:
            raise PosetError("needs a bottom and a top")
        return self.mobius(b, t)

    # -- rank ----------------------------------------------------------------------

    def ranks(self) -> list[int]:
        """Longest-chain-from-minimal rank of each element."""
        if self._ranks is not None:
            return self._ranks
        order = sorted(range(self.n), key=lambda j: self.down[j].bit_count())
        r = [0] * self.n
        for j in order:
            below = self.strict_down(j)
            r[j] = max((r[k] + 1 for k in _iter_bits(below)), default=0)
        self._ranks = r
        return r

    def is_graded(self) -> bool:
        """Every cover step raises the longest-chain rank by exactly one."""
        r = self.ranks()
        return all(r[j] == r[i] + 1 for i, j in self.cover_pairs())

    def length(self) -> int:
        return max(self.ranks(), default=0)

    # -- chains ----------------------------------------------------------------------

    def chains(self) -> dict[int, list[tuple[int, ...]]]:
        """All nonempty chains, grouped by size."""
        by_size: dict[int, list[tuple[int, ...]]] = {}

        def extend(chain: tuple[int, ...], top_elt: int) -> None:
            by_size.setdefault(len(chain), []).append(chain)
            for j in _iter_bits(self.strict_up(top_elt)):
                extend(chain + (j,), j)

        for i in range(self.n):
            extend((i,), i)
        return by_size


def _sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    """Exact rank of a sparse rational matrix by elimination, smallest rows first."""
    live = [dict(r) for r in rows if r]
    rank = 0
    while live:
        k = min(range(len(live)), key=lambda idx: len(live[idx]))
        row = live.pop(k)
        col = min(row, key=lambda c: (abs(row[c].numerator) + abs(row[c].denominator), c))
        pivot = row[col]
        rank += 1
        nxt = []
        for r in live:
            v = r.get(col)
            if v is not None:
                factor = v / pivot
                for c, rv in row.items():
                    nv = r.get(c, Fraction(0)) - factor * rv
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            if r:
                nxt.append(r)
        live = nxt
    return rank


def order_complex_homology(P: Poset) -> dict[int, int]:
    """Reduced rational Betti numbers of the order complex of P (all of P).

    Callers pass the open interval or proper part themselves.  The empty
    poset has one reduced class in degree -1.
    """
    chains = P.chains()
    max_size = max(chains, default=0)
    # dimension k chains have k+1 elements; include the empty chain at k = -1
    dims = {-1: [()]}
    for size, chs in chains.items():
        dims[size - 1] = chs
    index_of = {k: {c: i for i, c in enumerate(cs)} for k, cs in dims.items()}
    boundary_rank: dict[int, int] = {}
    for k in range(0, max_size):
        rows = []
        lower = index_of.get(k - 1, {})
        for chain in dims.get(k, []):
            row: dict[int, Fraction] = {}
            for drop in range(len(chain)):
                face = chain[:drop] + chain[drop + 1:]
                row[lower[face]] = Fraction((-1) ** drop)
            rows.append(row)
        boundary_rank[k] = _sparse_rank(rows)
    betti = {}
    for k in range(-1, max_size):
        dim_k = len(dims.get(k, []))
        b = dim_k - boundary_rank.get(k, 0) - boundary_rank.get(k + 1, 0)
        betti[k] = b
    return betti


def mobius_via_chains(P: Poset) -> int:
    """mu(bottom, top) as the signed count of chains of the proper part.

    Philip Hall's formula, used as an implementation-independent check on
    the Moebius recursion.
    """
    if P.bottom() is not None and P.bottom() == P.top():
        return 1
    proper = P.proper_part()
    total = -1  # the empty chain
    for size, chs in proper.chains().items():
        total += (-1) ** size * len(chs) * (-1)
    return total


def fixed_subposet(P: Poset, perm: Sequence[int]) -> tuple[Poset, list[int]]:
    """Subposet of elements fixed by the automorphism, with their original indices."""
    fixed = [i for i in range(P.n) if perm[i] == i]
    return P.subposet(fixed), fixed


def is_automorphism(P: Poset, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(P.n)):
        return False
    for i in range(P.n):
        mapped = 0
        for j in _iter_bits(P.up[i]):
            mapped |= 1 << perm[j]
        if mapped != P.up[perm[i]]:
            return False
    return True


def lefschetz_top_trace(P: Poset, perm: Sequence[int]) -> int:
    """(-1)^length(P) * mu(0,1) of the fixed subposet: the trace of the
    automorphism on the top reduced homology of the proper part when P is
    Cohen-Macaulay.  Checked against the signed fixed-chain count."""
    sub, _orig = fixed_subposet(P, perm)
    via_mobius = sub.mobius_bottom_top()
    via_chains = mobius_via_chains(sub)
    if via_mobius != via_chains:
        raise PosetError("Moebius recursion and chain count disagree")
    sign = (-1) ** P.length()
    return sign * via_mobius


def equivariant_char_poly(P: Poset, perm: Sequence[int]) -> dict[int, int]:
    """Coefficients {ambient rank r: sum of mu_fixed(0, x) over fixed x of rank r}.

    Moebius values are taken in the fixed subposet, ranks in the ambient poset.
    """
    sub, orig = fixed_subposet(P, perm)
    b = sub.bottom()
    if b is None:
        raise PosetError("fixed subposet lost the bottom element")
    mu = sub.mobius_from(b)
    ambient_rank = P.ranks()
    out: dict[int, int] = {}
    for local, value in mu.items():
        r = ambient_rank[orig[local]]
        out[r] = out.get(r, 0) + value
    return {r: v for r, v in out.items() if v != 0}


def atom_order_condition(P: Poset, atom_order: Sequence[int]) -> bool:
    """Shellability-style condition on an ordering of the atoms.

    For every pair of atoms a_i, a_j (i < j in the given order) below a common
    element y, there must be some z <= y covering a_j that also covers an
    earlier atom a_k, k < j.
    """
    b = P.bottom()
    if b is None:
        raise PosetError("atom condition needs a bottom element")
    atoms = set(P.covers_of(b))
    if set(atom_order) != atoms:
        raise PosetError("atom_order must list exactly the atoms")
    pos = {a: k for k, a in enumerate(atom_order)}
    covers_mask = {a: 0 for a in atom_order}
    earlier_covered: dict[int, int] = {}  # z -> bitmask of atom positions covered
    for a in atom_order:
        for z in P.covers_of(a):
            covers_mask[a] |= 1 << z
            earlier_covered[z] = earlier_covered.get(z, 0) | (1 << pos[a])
    for j, aj in enumerate(atom_order):
        before = (1 << j) - 1
        for i in range(j):
            ai = atom_order[i]
            common = P.up[ai] & P.up[aj]
            for y in _iter_bits(common):
                ok = False
                for z in _iter_bits(covers_mask[aj] & P.down[y]):
                    if earlier_covered.get(z, 0) & before:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def poset_dump_lines(P: Poset, payload_str: Callable = str) -> list[str]:
    """Deterministic text dump: element lines then cover-pair lines."""
    lines = ["elements %d" % P.n]
    for i in range(P.n):
        lines.append("%d %s" % (i, payload_str(P.payloads[i])))
    pairs = P.cover_pairs()
    lines.append("covers %d" % len(pairs))
    for i, j in sorted(pairs):
        lines.append("%d %d" % (i, j))
    return lines
