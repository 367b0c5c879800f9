"""Plethystic composition for class-variable series.

The composition f o g is defined whenever at least one side lives over the
one-element group:

* left mode, f over the trivial group: p_i o p_j(c) = p_{ij}(c), and any
  t-power inside g transforms as p_i o t^q = t^{iq};
* right mode, g over the trivial group: p_i(c) o p_j = p_{ij}(c^j) where
  c^j is the conjugacy class of j-th powers, with the same t rule.

Both rules fix rational scalars, and a t-power multiplying f on the left
passes through untouched: (t^a f) o g = t^a (f o g).  When both sides are
trivial the two modes agree.  The result lives over whichever group is
nontrivial and is truncated to the smaller truncation degree.

The right argument must have no degree-0 part; otherwise the substitution
would need infinitely many terms of f per output degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .groups import FiniteGroup, class_power
from .series import (
    GradedSeries, Mono, SeriesError, exp_series, l_series, mod_filter,
    mono_degree, one, p, pow1p_of, zero,
)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def compose(f: GradedSeries, g: GradedSeries) -> GradedSeries:
    """Plethysm f o g; see the module docstring for the variable rules."""
    left_mode = f.group.order == 1
    right_mode = g.group.order == 1
    if not (left_mode or right_mode):
        raise SeriesError("plethysm needs the trivial group on one side")
    if not g.homogeneous_part(0).is_zero():
        raise SeriesError("plethysm argument must have no degree-0 part")
    out_group = g.group if left_mode else f.group
    N = min(f.trunc, g.trunc)
    t_den = _lcm(f.t_den, g.t_den)

    def image(i: int, c: int) -> GradedSeries:
        """The series p_i(c) o g, truncated to N."""
        terms = {}
        for (mono, t_num), coeff in g.terms.items():
            if i * mono_degree(mono) > N:
                continue
            if left_mode:
                new_mono = tuple(sorted(((i * j, cid), e) for (j, cid), e in mono))
            else:
                new_mono = tuple(sorted(
                    ((i * j, class_power(f.group, c, j)), e) for (j, _z), e in mono))
            key = (new_mono, i * t_num)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return GradedSeries(out_group, N, g.t_den, terms)

    cache: dict[tuple[int, int], GradedSeries] = {}
    acc = zero(out_group, N, t_den)
    t_scale = t_den // f.t_den
    for (mono, t_num), coeff in f.terms.items():
        piece = one(out_group, N, t_den).scale(coeff).scale_t(t_num * t_scale, t_den)
        for (i, c), e in mono:
            key = (i, c)
            if key not in cache:
                cache[key] = image(i, c)
            img = cache[key]
            for _ in range(e):
                piece = piece.mul(img)
                if piece.is_zero():
                    break
            if piece.is_zero():
                break
        acc = acc.add(piece)
    return acc


def plethystic_inverse(f: GradedSeries) -> GradedSeries:
    """Compositional inverse of a t-free trivial-group series f = a*p_1 + higher.

    Returns the g with f o g = g o f = p_1 (both directions are checked).
    """
    if f.group.order != 1:
        raise SeriesError("plethystic inverse is computed over the trivial group")
    if any(t != 0 for (_m, t) in f.terms):
        raise SeriesError("plethystic inverse needs a t-free series")
    if not f.homogeneous_part(0).is_zero():
        raise SeriesError("plethystic inverse needs a series with no degree-0 part")
    N = f.trunc
    G = f.group
    p1: Mono = (((1, 0), 1),)
    alpha = f.coefficient(p1)
    deg1 = f.homogeneous_part(1)
    if alpha == 0 or len(deg1.terms) != 1:
        raise SeriesError("plethystic inverse needs a nonzero p_1 coefficient")
    g = p(G, N, 1, 0).scale(1 / alpha)
    target = p(G, N, 1, 0)
    for n in range(2, N + 1):
        defect = compose(f, g).homogeneous_part(n).sub(target.homogeneous_part(n))
        if not defect.is_zero():
            g = g.sub(defect.scale(1 / alpha))
    if compose(f, g) != target or compose(g, f) != target:
        raise SeriesError("plethystic inverse failed its two-sided check")
    return g


def average_p1(G: FiniteGroup, N: int) -> GradedSeries:
    """sum over classes of (|c|/|G|) p_1(c): the degree-1 part of exp_series."""
    acc = zero(G, N)
    for cl in G.classes:
        acc = acc.add(p(G, N, 1, cl.class_id).scale(Fraction(cl.size, G.order)))
    return acc


def F_coefficient(G: FiniteGroup, l: int, class_id: int) -> Fraction:
    """The exponent F(l, c) = -(1/(|G| l)) sum over d | l of mu(d) #{g : g^d in c}."""
    from .series import moebius_mu
    if l < 1:
        raise ValueError("l must be >= 1")
    if not (0 <= class_id < G.num_classes):
        raise ValueError("class id out of range")
    total = 0
    for d in range(1, l + 1):
        if l % d != 0:
            continue
        mu = moebius_mu(d)
        if mu == 0:
            continue
        count = sum(1 for g in range(G.order) if G.class_of[G.power(g, d)] == class_id)
        total += mu * count
    return Fraction(-total, G.order * l)


def product_form_inverse(G: FiniteGroup, N: int) -> GradedSeries:
    """The product over l, c of (1 + p_l(c))^(F(l, c)), truncated."""
    acc = one(G, N)
    for l in range(1, N + 1):
        for cl in G.classes:
            expo = F_coefficient(G, l, cl.class_id)
            if expo == 0:
                continue
            acc = acc.mul(pow1p_of(p(G, N, l, cl.class_id), expo))
    return acc


def sech_series(G: FiniteGroup, N: int) -> GradedSeries:
    """Inverse of the even-degree part of exp_series(G)."""
    return mod_filter(exp_series(G, N), 0, 2, "equal").invert()


def tanh_series(G: FiniteGroup, N: int) -> GradedSeries:
    """Odd part of exp_series(G) divided by its even part."""
    E = exp_series(G, N)
    return mod_filter(E, 0, 2, "not-equal").mul(
        mod_filter(E, 0, 2, "equal").invert())


def arcsinh_series(trivial: FiniteGroup, N: int) -> GradedSeries:
    """Plethystic inverse of the odd-degree part of the trivial-group exp_series."""
    if trivial.order != 1:
        raise SeriesError("the arcsinh lift lives over the trivial group")
    return plethystic_inverse(mod_filter(exp_series(trivial, N), 1, 2, "equal"))
