"""Truncated graded series in the class variables p_i(c), with a t-grading.

A series lives over a fixed finite group G and a fixed truncation degree N.
Terms are stored sparsely::

    terms: {(mono, t_num): Fraction}
    mono:  tuple of ((i, class_id), exponent), sorted by (i, class_id)

where the variable (i, class_id) has degree i, and the t-exponent of a term
is t_num / t_den with one declared denominator t_den per series (so t^{1/2}
is representable exactly without symbolic roots).  The zero series has an
empty term dict; no zero coefficients are ever stored; no stored monomial
exceeds degree N.  All coefficients are exact Fractions -- there is no
floating point anywhere in this package.

Operations never extend the truncation degree: combining two series
truncates to the smaller N, and t denominators are refined to the lcm.

The univariate counterpart UniSeries (variable x, same t bookkeeping) is
what the natural specialization p_1(identity) -> x, other p_i(c) -> 0
produces; the standard Maclaurin series live in uni_analytic().
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from .groups import FiniteGroup

Var = tuple[int, int]                      # (cycle length i, class id)
Mono = tuple[tuple[Var, int], ...]         # sorted ((i, c), exponent)

ONE_MONO: Mono = ()


class SeriesError(ValueError):
    """Incompatible operands or violated preconditions on series."""


class NotInvertibleError(SeriesError):
    """The degree-0 part is not a nonzero scalar."""


def mono_degree(mono: Mono) -> int:
    return sum(i * e for (i, _c), e in mono)


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e in b:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def _same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    return a is b or a.table == b.table


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class GradedSeries:
    """Sparse exact series over a group's class variables; immutable by convention."""

    __slots__ = ("group", "trunc", "t_den", "terms")

    def __init__(self, group: FiniteGroup, trunc: int, t_den: int = 1,
                 terms: Optional[dict] = None):
        if trunc < 0:
            raise SeriesError("truncation degree must be >= 0")
        if t_den < 1:
            raise SeriesError("t denominator must be >= 1")
        self.group = group
        self.trunc = trunc
        self.t_den = t_den
        clean: dict[tuple[Mono, int], Fraction] = {}
        if terms:
            for (mono, t_num), coeff in terms.items():
                if coeff == 0 or mono_degree(mono) > trunc:
                    continue
                clean[(mono, t_num)] = Fraction(coeff)
        self.terms = clean

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Mono, t_num: int = 0, t_den: int = 1) -> Fraction:
        """Coefficient of mono * t^(t_num/t_den); exact, defaults to the t-free part."""
        if self.t_den % t_den == 0:
            return self.terms.get((mono, t_num * (self.t_den // t_den)), Fraction(0))
        # query denominator finer than storage: representable only if it reduces
        scaled = Fraction(t_num, t_den) * self.t_den
        if scaled.denominator != 1:
            return Fraction(0)
        return self.terms.get((mono, int(scaled)), Fraction(0))

    def homogeneous_part(self, n: int) -> "GradedSeries":
        keep = {k: c for k, c in self.terms.items() if mono_degree(k[0]) == n}
        return GradedSeries(self.group, self.trunc, self.t_den, keep)

    def degrees(self) -> set[int]:
        return {mono_degree(m) for (m, _t) in self.terms}

    def truncate(self, n: int) -> "GradedSeries":
        keep = {k: c for k, c in self.terms.items() if mono_degree(k[0]) <= n}
        return GradedSeries(self.group, min(self.trunc, n), self.t_den, keep)

    def with_t_den(self, t_den: int) -> "GradedSeries":
        """Re-express with a finer t denominator (must be a multiple of the current one)."""
        if t_den == self.t_den:
            return self
        if t_den % self.t_den != 0:
            raise SeriesError("cannot coarsen t denominator %d to %d" % (self.t_den, t_den))
        f = t_den // self.t_den
        return GradedSeries(self.group, self.trunc, t_den,
                            {(m, t * f): c for (m, t), c in self.terms.items()})

    # -- ring operations -----------------------------------------------------

    def _align(self, other: "GradedSeries") -> tuple["GradedSeries", "GradedSeries", int]:
        if not isinstance(other, GradedSeries):
            raise SeriesError("expected a GradedSeries operand")
        if not _same_group(self.group, other.group):
            raise SeriesError("series live over different groups")
        den = _lcm(self.t_den, other.t_den)
        return self.with_t_den(den), other.with_t_den(den), min(self.trunc, other.trunc)

    def add(self, other: "GradedSeries") -> "GradedSeries":
        a, b, n = self._align(other)
        acc = dict(a.terms)
        for k, c in b.terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return GradedSeries(self.group, n, a.t_den, acc)

    def neg(self) -> "GradedSeries":
        return GradedSeries(self.group, self.trunc, self.t_den,
                            {k: -c for k, c in self.terms.items()})

    def sub(self, other: "GradedSeries") -> "GradedSeries":
        return self.add(other.neg())

    def scale(self, q) -> "GradedSeries":
        q = Fraction(q)
        return GradedSeries(self.group, self.trunc, self.t_den,
                            {k: c * q for k, c in self.terms.items()})

    def mul(self, other: "GradedSeries") -> "GradedSeries":
        a, b, n = self._align(other)
        # bucket by monomial degree so truncation prunes whole blocks
        buckets_a: dict[int, list] = {}
        for (m, t), c in a.terms.items():
            buckets_a.setdefault(mono_degree(m), []).append((m, t, c))
        buckets_b: dict[int, list] = {}
        for (m, t), c in b.terms.items():
            buckets_b.setdefault(mono_degree(m), []).append((m, t, c))
        acc: dict[tuple[Mono, int], Fraction] = {}
        for da, items_a in buckets_a.items():
            for db, items_b in buckets_b.items():
                if da + db > n:
                    continue
                for ma, ta, ca in items_a:
                    for mb, tb, cb in items_b:
                        k = (mono_mul(ma, mb), ta + tb)
                        prev = acc.get(k)
                        acc[k] = ca * cb if prev is None else prev + ca * cb
        return GradedSeries(self.group, n, a.t_den, acc)

    def power(self, k: int) -> "GradedSeries":
        if k < 0:
            raise SeriesError("negative power; use invert() first")
        acc = one(self.group, self.trunc, self.t_den)
        base = self
        while k:
            if k & 1:
                acc = acc.mul(base)
            base = base.mul(base) if k > 1 else base
            k >>= 1
        return acc

    def invert(self) -> "GradedSeries":
        """Multiplicative inverse; needs the whole degree-0 part to be one nonzero scalar."""
        deg0 = self.homogeneous_part(0)
        c0 = deg0.terms.get((ONE_MONO, 0))
        if c0 is None or len(deg0.terms) != 1:
            raise NotInvertibleError(
                "degree-0 part must be a single nonzero t-free scalar to invert")
        n = self.trunc
        slices = [self.homogeneous_part(k) for k in range(n + 1)]
        inv_parts = [const(self.group, n, 1 / c0, self.t_den)]
        for m in range(1, n + 1):
            s = zero(self.group, n, self.t_den)
            for k in range(1, m + 1):
                if slices[k].is_zero():
                    continue
                s = s.add(slices[k].mul(inv_parts[m - k]))
            inv_parts.append(s.scale(-1 / c0))
        acc = zero(self.group, n, self.t_den)
        for part in inv_parts:
            acc = acc.add(part)
        return acc

    # -- t handling ----------------------------------------------------------

    def attach_t(self, num: int, den: int = 1) -> "GradedSeries":
        """Right-compose with t^(num/den) * p_1: each degree-n term gains t^(n*num/den)."""
        t_den = _lcm(self.t_den, den)
        f_self = t_den // self.t_den
        f_new = t_den // den
        out: dict[tuple[Mono, int], Fraction] = {}
        for (m, t), c in self.terms.items():
            k = (m, t * f_self + mono_degree(m) * num * f_new)
            out[k] = out.get(k, Fraction(0)) + c
        return GradedSeries(self.group, self.trunc, t_den, out)

    def scale_t(self, num: int, den: int = 1) -> "GradedSeries":
        """Multiply the whole series by the monomial t^(num/den)."""
        t_den = _lcm(self.t_den, den)
        f_self = t_den // self.t_den
        f_new = t_den // den
        return GradedSeries(self.group, self.trunc, t_den,
                            {(m, t * f_self + num * f_new): c
                             for (m, t), c in self.terms.items()})

    def substitute_t(self, s) -> "GradedSeries":
        """Set t^(1/t_den) to the rational s, collapsing t into the coefficients."""
        s = Fraction(s)
        out: dict[tuple[Mono, int], Fraction] = {}
        for (m, t), c in self.terms.items():
            k = (m, 0)
            out[k] = out.get(k, Fraction(0)) + c * s ** t
        return GradedSeries(self.group, self.trunc, 1, out)

    # -- calculus ------------------------------------------------------------

    def p_derivative(self, i: int = 1, class_id: Optional[int] = None) -> "GradedSeries":
        """Formal d/dp_i(c); defaults to the identity class.  Truncation drops by i."""
        c_id = self.group.identity_class if class_id is None else class_id
        var = (i, c_id)
        out: dict[tuple[Mono, int], Fraction] = {}
        for (m, t), coeff in self.terms.items():
            md = dict(m)
            e = md.get(var, 0)
            if e == 0:
                continue
            if e == 1:
                del md[var]
            else:
                md[var] = e - 1
            k = (tuple(sorted(md.items())), t)
            out[k] = out.get(k, Fraction(0)) + coeff * e
        return GradedSeries(self.group, max(self.trunc - i, 0), self.t_den, out)

    # -- dunders -------------------------------------------------------------

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        if not _same_group(self.group, other.group) or self.trunc != other.trunc:
            return False
        den = _lcm(self.t_den, other.t_den)
        return self.with_t_den(den).terms == other.with_t_den(den).terms

    __hash__ = None  # mutable dict inside; series compare by value

    def __repr__(self):
        return "GradedSeries(N=%d, %d terms)" % (self.trunc, len(self.terms))


def eq_to_degree(a: GradedSeries, b: GradedSeries, n: int) -> bool:
    """Exact equality of all terms of monomial degree <= n."""
    return a.truncate(n) == b.truncate(n)


# -- constructors -------------------------------------------------------------

def zero(G: FiniteGroup, N: int, t_den: int = 1) -> GradedSeries:
    return GradedSeries(G, N, t_den, {})

def one(G: FiniteGroup, N: int, t_den: int = 1) -> GradedSeries:
    return GradedSeries(G, N, t_den, {(ONE_MONO, 0): Fraction(1)})

def const(G: FiniteGroup, N: int, q, t_den: int = 1) -> GradedSeries:
    return GradedSeries(G, N, t_den, {(ONE_MONO, 0): Fraction(q)})

def p(G: FiniteGroup, N: int, i: int, class_id: int, t_den: int = 1) -> GradedSeries:
    """The variable p_i(c) as a series."""
    if not (1 <= i):
        raise SeriesError("cycle length must be >= 1")
    if not (0 <= class_id < G.num_classes):
        raise SeriesError("class id %d out of range" % class_id)
    mono: Mono = (((i, class_id), 1),)
    return GradedSeries(G, N, t_den, {(mono, 0): Fraction(1)})

def t_monomial(G: FiniteGroup, N: int, num: int, den: int = 1) -> GradedSeries:
    """The bare scalar t^(num/den) as a degree-0 series."""
    return one(G, N, den).scale_t(num, den)


# -- analytic helpers on constant-free series ---------------------------------

def _require_constant_free(f: GradedSeries, what: str) -> None:
    if not f.homogeneous_part(0).is_zero():
        raise SeriesError("%s needs a series with no degree-0 part" % what)


def exp_of(f: GradedSeries) -> GradedSeries:
    """exp(f) truncated, for constant-free f."""
    _require_constant_free(f, "exp")
    acc = one(f.group, f.trunc, f.t_den)
    term = acc
    for k in range(1, f.trunc + 1):
        term = term.mul(f).scale(Fraction(1, k))
        if term.is_zero():
            break
        acc = acc.add(term)
    return acc


def log1p_of(f: GradedSeries) -> GradedSeries:
    """log(1 + f) truncated, for constant-free f."""
    _require_constant_free(f, "log1p")
    acc = zero(f.group, f.trunc, f.t_den)
    power_ = one(f.group, f.trunc, f.t_den)
    for k in range(1, f.trunc + 1):
        power_ = power_.mul(f)
        if power_.is_zero():
            break
        acc = acc.add(power_.scale(Fraction((-1) ** (k - 1), k)))
    return acc


def pow1p_of(f: GradedSeries, alpha) -> GradedSeries:
    """(1 + f)^alpha by the generalized binomial series, for constant-free f."""
    _require_constant_free(f, "pow1p")
    alpha = Fraction(alpha)
    acc = one(f.group, f.trunc, f.t_den)
    term = acc
    for k in range(1, f.trunc + 1):
        term = term.mul(f).scale((alpha - (k - 1)) / k)
        if term.is_zero():
            break
        acc = acc.add(term)
    return acc


# -- the named global series ---------------------------------------------------

def exp_series(G: FiniteGroup, N: int) -> GradedSeries:
    """exp(sum over i, c of |c| p_i(c) / (|G| i)): the trivial-character generating series."""
    arg = zero(G, N)
    for i in range(1, N + 1):
        for cl in G.classes:
            arg = arg.add(p(G, N, i, cl.class_id).scale(
                Fraction(cl.size, G.order * i)))
    return exp_of(arg)


def moebius_mu(d: int) -> int:
    """Number-theoretic Moebius function by trial factorization (desk-scale d)."""
    if d < 1:
        raise ValueError("mu is defined for d >= 1")
    result = 1
    q = 2
    while q * q <= d:
        if d % q == 0:
            d //= q
            if d % q == 0:
                return 0
            result = -result
        q += 1
    if d > 1:
        result = -result
    return result


def l_series(trivial: FiniteGroup, N: int) -> GradedSeries:
    """sum over d of (mu(d)/d) log(1 + p_d), over the one-element group."""
    if trivial.order != 1:
        raise SeriesError("the logarithm series lives over the trivial group")
    acc = zero(trivial, N)
    for d in range(1, N + 1):
        mu = moebius_mu(d)
        if mu == 0:
            continue
        acc = acc.add(log1p_of(p(trivial, N, d, 0)).scale(Fraction(mu, d)))
    return acc


def mod_filter(f: GradedSeries, residue: int, d: int, mode: str = "equal") -> GradedSeries:
    """Keep terms by monomial-degree predicate.

    mode "equal": degree == residue mod d; "not-equal": degree != residue mod d;
    "at-least": degree >= residue (d is ignored).
    """
    if mode == "equal":
        pred: Callable[[int], bool] = lambda n: n % d == residue % d
    elif mode == "not-equal":
        pred = lambda n: n % d != residue % d
    elif mode == "at-least":
        pred = lambda n: n >= residue
    else:
        raise SeriesError("unknown mod_filter mode %r" % mode)
    keep = {k: c for k, c in f.terms.items() if pred(mono_degree(k[0]))}
    return GradedSeries(f.group, f.trunc, f.t_den, keep)


# -- univariate series ---------------------------------------------------------

class UniSeries:
    """Truncated series in x with t bookkeeping identical to GradedSeries.

    coeffs: {(n, t_num): Fraction} for the term x^n t^(t_num/t_den).
    """

    __slots__ = ("trunc", "t_den", "coeffs")

    def __init__(self, trunc: int, t_den: int = 1, coeffs: Optional[dict] = None):
        if trunc < 0:
            raise SeriesError("truncation degree must be >= 0")
        self.trunc = trunc
        self.t_den = t_den
        clean: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (n, t), c in coeffs.items():
                if c == 0 or n > trunc:
                    continue
                clean[(n, t)] = Fraction(c)
        self.coeffs = clean

    def coefficient(self, n: int, t_num: int = 0, t_den: int = 1) -> Fraction:
        if self.t_den % t_den == 0:
            return self.coeffs.get((n, t_num * (self.t_den // t_den)), Fraction(0))
        scaled = Fraction(t_num, t_den) * self.t_den
        if scaled.denominator != 1:
            return Fraction(0)
        return self.coeffs.get((n, int(scaled)), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, n: int) -> "UniSeries":
        return UniSeries(min(self.trunc, n), self.t_den,
                         {k: c for k, c in self.coeffs.items() if k[0] <= n})

    def with_t_den(self, t_den: int) -> "UniSeries":
        if t_den == self.t_den:
            return self
        if t_den % self.t_den != 0:
            raise SeriesError("cannot coarsen t denominator %d to %d" % (self.t_den, t_den))
        f = t_den // self.t_den
        return UniSeries(self.trunc, t_den,
                         {(n, t * f): c for (n, t), c in self.coeffs.items()})

    def _align(self, other: "UniSeries"):
        den = _lcm(self.t_den, other.t_den)
        return self.with_t_den(den), other.with_t_den(den), min(self.trunc, other.trunc)

    def add(self, other: "UniSeries") -> "UniSeries":
        a, b, n = self._align(other)
        acc = dict(a.coeffs)
        for k, c in b.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return UniSeries(n, a.t_den, acc)

    def neg(self) -> "UniSeries":
        return UniSeries(self.trunc, self.t_den, {k: -c for k, c in self.coeffs.items()})

    def sub(self, other: "UniSeries") -> "UniSeries":
        return self.add(other.neg())

    def scale(self, q) -> "UniSeries":
        q = Fraction(q)
        return UniSeries(self.trunc, self.t_den, {k: c * q for k, c in self.coeffs.items()})

    def mul(self, other: "UniSeries") -> "UniSeries":
        a, b, n = self._align(other)
        acc: dict[tuple[int, int], Fraction] = {}
        for (na, ta), ca in a.coeffs.items():
            for (nb, tb), cb in b.coeffs.items():
                if na + nb > n:
                    continue
                k = (na + nb, ta + tb)
                acc[k] = acc.get(k, Fraction(0)) + ca * cb
        return UniSeries(n, a.t_den, acc)

    def invert(self) -> "UniSeries":
        c0 = self.coeffs.get((0, 0))
        if c0 is None or any(n == 0 for (n, t) in self.coeffs if t != 0):
            raise NotInvertibleError(
                "degree-0 part must be a single nonzero t-free scalar to invert")
        n = self.trunc
        inv: dict[tuple[int, int], Fraction] = {(0, 0): 1 / c0}
        for m in range(1, n + 1):
            # sum over k >= 1 of f_k * g_{m-k}
            acc: dict[int, Fraction] = {}
            for (k, tf), cf in self.coeffs.items():
                if k < 1 or k > m:
                    continue
                for (j, tg), cg in inv.items():
                    if j == m - k:
                        acc[tf + tg] = acc.get(tf + tg, Fraction(0)) + cf * cg
            for t, c in acc.items():
                if c != 0:
                    inv[(m, t)] = -c / c0
        return UniSeries(n, self.t_den, inv)

    def compose(self, other: "UniSeries") -> "UniSeries":
        """self(other); other must be t-free with zero constant term."""
        if other.t_den != 1 or any(t != 0 for (_n, t) in other.coeffs):
            raise SeriesError("composition argument must be t-free")
        if other.coefficient(0) != 0:
            raise SeriesError("composition argument must have zero constant term")
        n = min(self.trunc, other.trunc)
        g = other.truncate(n)
        powers = [uni_one(n)]
        acc: dict[tuple[int, int], Fraction] = {}
        max_n = max((k for (k, _t) in self.coeffs), default=0)
        for k in range(1, min(max_n, n) + 1):
            powers.append(powers[-1].mul(g))
        for (k, t), c in self.coeffs.items():
            if k > n:
                continue
            for (j, _zero_t), cj in powers[k].coeffs.items():
                key = (j, t)
                acc[key] = acc.get(key, Fraction(0)) + c * cj
        return UniSeries(n, self.t_den, acc)

    def scale_t(self, num: int, den: int = 1) -> "UniSeries":
        t_den = _lcm(self.t_den, den)
        f_self = t_den // self.t_den
        f_new = t_den // den
        return UniSeries(self.trunc, t_den,
                         {(n, t * f_self + num * f_new): c
                          for (n, t), c in self.coeffs.items()})

    def substitute_t(self, s) -> "UniSeries":
        """Set t^(1/t_den) to the rational s."""
        s = Fraction(s)
        out: dict[tuple[int, int], Fraction] = {}
        for (n, t), c in self.coeffs.items():
            k = (n, 0)
            out[k] = out.get(k, Fraction(0)) + c * s ** t
        return UniSeries(self.trunc, 1, out)

    def substitute_x(self, r) -> "UniSeries":
        """Replace x by r*x for a rational r."""
        r = Fraction(r)
        return UniSeries(self.trunc, self.t_den,
                         {(n, t): c * r ** n for (n, t), c in self.coeffs.items()})

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        if isinstance(other, UniSeries):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        if self.trunc != other.trunc:
            return False
        den = _lcm(self.t_den, other.t_den)
        return self.with_t_den(den).coeffs == other.with_t_den(den).coeffs

    __hash__ = None

    def __repr__(self):
        return "UniSeries(N=%d, %d terms)" % (self.trunc, len(self.coeffs))


def uni_zero(N: int, t_den: int = 1) -> UniSeries:
    return UniSeries(N, t_den, {})

def uni_one(N: int, t_den: int = 1) -> UniSeries:
    return UniSeries(N, t_den, {(0, 0): Fraction(1)})

def uni_const(N: int, q, t_den: int = 1) -> UniSeries:
    return UniSeries(N, t_den, {(0, 0): Fraction(q)})

def uni_x(N: int, t_den: int = 1) -> UniSeries:
    return UniSeries(N, t_den, {(1, 0): Fraction(1)})


def uni_reversion(f: UniSeries) -> UniSeries:
    """Compositional inverse of a t-free series with f = x + higher order."""
    if f.coefficient(0) != 0 or f.coefficient(1) != 1:
        raise SeriesError("reversion needs zero constant term and linear coefficient 1")
    N = f.trunc
    g = uni_x(N)
    for n in range(2, N + 1):
        defect = f.compose(g).coefficient(n)
        if defect != 0:
            g = g.add(UniSeries(N, 1, {(n, 0): -defect}))
    return g


def uni_analytic(name: str, N: int, alpha=None) -> UniSeries:
    """Maclaurin series with exact rational coefficients.

    Supported names: exp, log1p, sinh, cosh, tanh, sech, arcsinh, pow1p
    (pow1p takes the exponent through the alpha argument).
    """
    from math import factorial
    if name == "exp":
        return UniSeries(N, 1, {(n, 0): Fraction(1, factorial(n)) for n in range(N + 1)})
    if name == "log1p":
        return UniSeries(N, 1, {(n, 0): Fraction((-1) ** (n - 1), n)
                                for n in range(1, N + 1)})
    if name == "sinh":
        return UniSeries(N, 1, {(n, 0): Fraction(1, factorial(n))
                                for n in range(1, N + 1, 2)})
    if name == "cosh":
        return UniSeries(N, 1, {(n, 0): Fraction(1, factorial(n))
                                for n in range(0, N + 1, 2)})
    if name == "sech":
        return uni_analytic("cosh", N).invert()
    if name == "tanh":
        return uni_analytic("sinh", N).mul(uni_analytic("cosh", N).invert())
    if name == "arcsinh":
        return uni_reversion(uni_analytic("sinh", N))
    if name == "pow1p":
        if alpha is None:
            raise SeriesError("pow1p needs the exponent alpha")
        alpha = Fraction(alpha)
        coeffs = {}
        c = Fraction(1)
        for n in range(N + 1):
            if c != 0:
                coeffs[(n, 0)] = c
            c = c * (alpha - n) / (n + 1)
        return UniSeries(N, 1, coeffs)
    raise SeriesError("unknown analytic series %r" % name)


def uni_pow1p_of(f: UniSeries, alpha) -> UniSeries:
    """(1 + f)^alpha for a series f with zero constant term (t in f allowed)."""
    if f.coefficient(0) != 0 or any(n == 0 for (n, t) in f.coeffs):
        raise SeriesError("pow1p argument must have no degree-0 terms")
    alpha = Fraction(alpha)
    acc = uni_one(f.trunc, f.t_den)
    term = acc
    for k in range(1, f.trunc + 1):
        term = term.mul(f).scale((alpha - (k - 1)) / k)
        if term.is_zero():
            break
        acc = acc.add(term)
    return acc


def natural_spec(f: GradedSeries) -> UniSeries:
    """Set p_1(identity class) to x and every other variable to 0; t rides along."""
    ident = (1, f.group.identity_class)
    out: dict[tuple[int, int], Fraction] = {}
    for (mono, t), c in f.terms.items():
        if mono == ONE_MONO:
            key = (0, t)
        elif len(mono) == 1 and mono[0][0] == ident:
            key = (mono[0][1], t)
        else:
            continue
        out[key] = out.get(key, Fraction(0)) + c
    return UniSeries(f.trunc, f.t_den, out)


# -- serialization --------------------------------------------------------------

def series_terms(f: GradedSeries) -> list[dict]:
    """Canonical JSON-ready term list, sorted by (degree, monomial, t exponent)."""
    rows = []
    for (mono, t), c in f.terms.items():
        rows.append({
            "num": c.numerator,
            "den": c.denominator,
            "t_num": t,
            "t_den": f.t_den,
            "vars": [[i, cid, e] for (i, cid), e in mono],
        })
    rows.sort(key=lambda r: (sum(v[0] * v[2] for v in r["vars"]),
                             tuple((v[0], v[1], v[2]) for v in r["vars"]),
                             r["t_num"]))
    return rows


def format_series(f: GradedSeries, max_degree: Optional[int] = None) -> str:
    """Human-readable rendering, one term per line, canonical order."""
    G = f.group
    lines = []
    for row in series_terms(f):
        deg = sum(v[0] * v[2] for v in row["vars"])
        if max_degree is not None and deg > max_degree:
            continue
        coeff = Fraction(row["num"], row["den"])
        bits = []
        for i, cid, e in row["vars"]:
            label = G.names[G.classes[cid].representative]
            bits.append("p_%d(%s)%s" % (i, label, "^%d" % e if e > 1 else ""))
        if row["t_num"]:
            tq = Fraction(row["t_num"], row["t_den"])
            bits.append("t" if tq == 1 else "t^(%s)" % tq)
        body = "*".join(bits) if bits else "1"
        lines.append("%s %s * %s" % ("deg %d:" % deg, coeff, body))
    return "\n".join(lines) if lines else "0"
