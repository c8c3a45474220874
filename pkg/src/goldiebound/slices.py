"""Slice-torus restrictions for nilpotent orbits: the delta shift and friends.

A `SliceContext` fixes an orbit, the embedding t_Q -> t of the torus of the
reductive centralizer Q, and a generic parameter nu in t_Q.  The negative
system cut out by nu determines the shift delta; restricting lam - rho - delta
to t_Q produces the character that drives the dimension bound downstream.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NonGenericNu, NotDominant, NotEvenOrbit
from .nilorbit import OrbitDatum, ambient_root_system, tQ_embedding
from .rootsys import Q, RootSystem, Vec, vdot, vec, vscale, vsub, zero_vec


@dataclass(frozen=True)
class SliceContext:
    g: RootSystem
    orbit: OrbitDatum
    nu: Vec
    embedding: tuple[tuple[Fraction, ...], ...]

    @property
    def slice_rank(self) -> int:
        return len(self.embedding[0]) if self.embedding else 0


def restrict_to_tQ(lam: Sequence, ctx: SliceContext) -> Vec:
    """Pull a weight on t back to t_Q coordinates through the embedding."""
    lam = ctx.g._check_dim(lam)
    return tuple(
        sum((lam[i] * ctx.embedding[i][j] for i in range(len(lam))), Q(0))
        for j in range(ctx.slice_rank)
    )


def push_nu(ctx: SliceContext) -> Vec:
    """The parameter nu as a point of t, via the embedding."""
    return tuple(
        sum((ctx.embedding[i][j] * ctx.nu[j] for j in range(ctx.slice_rank)), Q(0))
        for i in range(ctx.g.ambient_dim)
    )


def slice_context(orbit: OrbitDatum, nu: Optional[Sequence] = None) -> SliceContext:
    """Build the context, defaulting nu to (m, m-1, ..., 1), and check genericity.

    nu is generic when every root that survives restriction to t_Q pairs
    nonzero with it; otherwise the negative system below would be ambiguous
    and NonGenericNu is raised.
    """
    g = ambient_root_system(orbit.partition)
    embedding = tQ_embedding(orbit.partition)
    m = len(embedding[0]) if embedding else 0
    if nu is None:
        nu = tuple(Q(m - i) for i in range(m))
    else:
        nu = vec(nu)
        if len(nu) != m:
            raise NonGenericNu(f"nu must have {m} coordinates, got {len(nu)}")
    ctx = SliceContext(g, orbit, nu, embedding)
    for alpha in g.positive_roots:
        restricted = restrict_to_tQ(alpha.coords, ctx)
        if any(c != 0 for c in restricted) and vdot(restricted, nu) == 0:
            raise NonGenericNu(
                f"root {alpha.coords} survives restriction but pairs to zero with nu={nu}"
            )
    return ctx


def _negative_system(ctx: SliceContext) -> list:
    nu_t = push_nu(ctx)
    return [alpha for alpha in ctx.g.all_roots if vdot(alpha.coords, nu_t) < 0]


def delta(ctx: SliceContext) -> Vec:
    """The shift: half the h-degree -1 part plus the full h-degree <= -2 part
    of the nu-negative system."""
    half = zero_vec(ctx.g.ambient_dim)
    whole = zero_vec(ctx.g.ambient_dim)
    for alpha in _negative_system(ctx):
        degree = vdot(alpha.coords, ctx.orbit.h)
        if degree == -1:
            half = tuple(a + b for a, b in zip(half, alpha.coords))
        elif degree <= -2:
            whole = tuple(a + b for a, b in zip(whole, alpha.coords))
    return tuple(a / 2 + b for a, b in zip(half, whole))


def rho_zero(ctx: SliceContext) -> Vec:
    """Half the sum of the positive roots of h-degree zero."""
    total = zero_vec(ctx.g.ambient_dim)
    for alpha in ctx.g.positive_roots:
        if vdot(alpha.coords, ctx.orbit.h) == 0:
            total = tuple(a + b for a, b in zip(total, alpha.coords))
    return vscale(Q(1, 2), total)


def underline_character(lam: Sequence, ctx: SliceContext) -> Vec:
    """Restriction of lam - rho - delta to t_Q."""
    lam = ctx.g._check_dim(lam)
    return restrict_to_tQ(vsub(vsub(lam, ctx.g.rho), delta(ctx)), ctx)


def even_identity_check(ctx: SliceContext) -> bool:
    """For even orbits: delta and half the nonzero-degree negative system
    agree after restriction to t_Q."""
    if not ctx.orbit.is_even:
        raise NotEvenOrbit(f"partition {ctx.orbit.partition.parts} is not even")
    half_nonzero = zero_vec(ctx.g.ambient_dim)
    for alpha in _negative_system(ctx):
        if vdot(alpha.coords, ctx.orbit.h) != 0:
            half_nonzero = tuple(a + b for a, b in zip(half_nonzero, alpha.coords))
    half_nonzero = vscale(Q(1, 2), half_nonzero)
    return restrict_to_tQ(delta(ctx), ctx) == restrict_to_tQ(half_nonzero, ctx)


def principal_in_nu_centralizer(ctx: SliceContext) -> bool:
    """True when the nu-centralizer is a torus times rank-one factors in which
    the orbit's nilpotent is principal.

    The roots killed by restriction form the semisimple part of z_g(nu).  Each
    such sp root predicts the Jordan blocks of a principal nilpotent on the
    natural module (two blocks of size 2 for eps_i - eps_j, one for 2 eps_i);
    untouched coordinates predict size-1 blocks.  The check succeeds when all
    components have rank one and the predicted blocks match the partition.
    """
    n = ctx.g.ambient_dim
    zero_roots = [
        alpha.coords
        for alpha in ctx.g.positive_roots
        if all(c == 0 for c in restrict_to_tQ(alpha.coords, ctx))
    ]
    for i, a in enumerate(zero_roots):
        for b in zero_roots[i + 1 :]:
            if vdot(a, b) != 0:
                return False  # a component of rank >= 2
    blocks: list[int] = []
    touched: set[int] = set()
    for a in zero_roots:
        support = [i for i, c in enumerate(a) if c != 0]
        touched.update(support)
        if len(support) == 2:
            blocks.extend([2, 2])
        else:
            blocks.append(2)
    untouched = n - len(touched)
    blocks.extend([1] * (2 * untouched))
    predicted = tuple(sorted(blocks, reverse=True))
    return predicted == ctx.orbit.partition.parts


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """Outcome of the sufficient-condition test for V to be Q-irreducible."""

    irreducible: bool
    highest_weight: Optional[Vec]
    reason: Optional[str]


def irreducibility_verdict(
    ctx: SliceContext,
    omega: Sequence,
    q: RootSystem,
    underline_dim_one: bool,
) -> IrreducibilityVerdict:
    """Apply the three sufficient conditions in order; report the first failure.

    (i) the restricted module is one-dimensional, (ii) no orthogonal factor
    O(2) occurs in the reductive centralizer (O(1) factors are harmless),
    (iii) omega is minuscule for q.
    """
    omega = q.canonical(omega)
    if not q.is_dominant(omega):
        raise NotDominant(f"{omega} is not dominant for {q.describe()}")
    if not underline_dim_one:
        return IrreducibilityVerdict(
            False, None, "(i) restricted module not known to be one-dimensional"
        )
    for kind, size in ctx.orbit.reductive_factors:
        if kind == "O" and size == 2:
            return IrreducibilityVerdict(
                False, None, "(ii) reductive centralizer has an O(2) factor"
            )
    if not q.is_minuscule(omega):
        return IrreducibilityVerdict(False, None, f"(iii) {omega} is not minuscule for {q.describe()}")
    return IrreducibilityVerdict(True, omega, None)
