"""End-to-end Goldie-rank bound for the minimal-slice family of sp_2n.

`premet_example(n)` walks the whole chain for the orbit (2, ..., 2) of sp_2n
with highest weight rho/2: integral subsystem, slice data, the restricted
character, the minuscule module V of the centralizer quotient Q = O(n), its
class invariant d(psi), and finally the bound Grk <= dim V / d(psi) together
with the codimension of the corresponding primitive ideal's associated
variety cross-section.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NotDivisible, PipelineError, UnsupportedType
from .lattice import integral_subsystem, schur_class_of
from .nilorbit import OrbitDatum, Partition, orbit_datum, validate_partition
from .repdim import (
    DEFAULT_BOUND,
    DEFAULT_WINDOW,
    DPsiResult,
    d_psi,
    weyl_dim,
)
from .rootsys import Q, RootSystem, Vec, vscale
from .slices import (
    SliceContext,
    even_identity_check,
    irreducibility_verdict,
    principal_in_nu_centralizer,
    slice_context,
    underline_character,
)

_ALIAS_EXPANSION = {
    ("B", 1): (("A", 1),),
    ("C", 1): (("A", 1),),
    ("D", 1): (),
    ("D", 2): (("A", 1), ("A", 1)),
    ("D", 3): (("A", 3),),
}


def normalize_factors(factors: Sequence[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    """Expand low-rank aliases and sort, for type comparisons."""
    out: list[tuple[str, int]] = []
    for factor in factors:
        out.extend(_ALIAS_EXPANSION.get(factor, (factor,)))
    return tuple(sorted(out))


def goldie_bound(dim_v: int, d: int) -> int:
    """The bound dim V / d, required to be an exact integer."""
    if d <= 0 or dim_v % d != 0:
        raise NotDivisible(f"{d} does not divide dim V = {dim_v}")
    return dim_v // d


@dataclass(frozen=True)
class BoundReport:
    """Everything the worked example computes, with its internal checks."""

    n: int
    g: RootSystem
    partition: Partition
    lam: Vec
    q: RootSystem
    omega: Vec
    omega_eta: Vec
    dim_v: int
    d_v: DPsiResult
    grk_bound: int
    a_orbit_size: int
    ideal_codim: int
    tightness: str
    verdicts: tuple[tuple[str, bool, str], ...]

    def __post_init__(self):
        if self.dim_v % self.d_v.value != 0:
            raise NotDivisible(f"{self.d_v.value} does not divide dim V = {self.dim_v}")
        assert self.grk_bound == self.dim_v // self.d_v.value
        assert self.ideal_codim == self.a_orbit_size * self.dim_v**2


def _q_and_weight(n: int, omega_eta: Vec) -> tuple[RootSystem, Vec]:
    """The root system of [Q, Q] for Q = O(n) and omega_eta moved into it.

    For small n the Cartan types are aliases: so_3 = sl_2 and so_4 = sl_2 x
    sl_2, with the eta coordinates carried along the isomorphism.
    """
    m = n // 2
    if n % 2 == 1:
        if m >= 2:
            return RootSystem((("B", m),)), omega_eta
        (c,) = omega_eta
        return RootSystem((("A", 1),)), (c, -c)
    if m >= 3:
        return RootSystem((("D", m),)), omega_eta
    c1, c2 = omega_eta
    a, b = (c1 + c2) / 2, (c1 - c2) / 2
    return RootSystem((("A", 1), ("A", 1))), (a, -a, b, -b)


def premet_example(
    n: int,
    *,
    bound: int = DEFAULT_BOUND,
    window: int = DEFAULT_WINDOW,
    nu: Optional[Sequence] = None,
) -> BoundReport:
    """Run the sp_2n worked example for the orbit (2, ..., 2) at lam = rho/2."""
    if n < 3:
        raise UnsupportedType("the worked example needs n >= 3")
    verdicts: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str):
        verdicts.append((name, ok, detail))
        if not ok:
            raise PipelineError(name, detail)

    g = RootSystem((("C", n),))
    lam = vscale(Q(1, 2), g.rho)

    sub = integral_subsystem(g.dual(), lam)
    check(
        "integral subsystem dimension",
        sub.dim == n * n,
        f"dim = {sub.dim}, expected n^2 = {n * n}",
    )
    expected = normalize_factors((("B", n // 2), ("D", (n + 1) // 2)))
    actual = normalize_factors(sub.type_guess.factors) if sub.type_guess else None
    check(
        "integral subsystem type",
        actual == expected,
        f"type = {actual}, expected {expected}",
    )

    partition = validate_partition("sp", (2,) * n)
    orbit = orbit_datum(partition)
    ctx = slice_context(orbit, nu)
    check(
        "reductive centralizer",
        orbit.reductive_factors == (("O", n),) and orbit.component_group_order == 2,
        f"Q = {orbit.reductive_factors}, pi_0 order {orbit.component_group_order}",
    )
    check("even identity", even_identity_check(ctx), "delta restriction identity failed")

    m = n // 2
    omega_eta = underline_character(lam, ctx)
    check(
        "restricted character",
        omega_eta == (Q(1, 2),) * m,
        f"omega_eta = {omega_eta}, expected (1/2, ..., 1/2)",
    )

    q, omega = _q_and_weight(n, omega_eta)
    verdict = irreducibility_verdict(ctx, omega, q, principal_in_nu_centralizer(ctx))
    check(
        "irreducibility over Q",
        verdict.irreducible,
        verdict.reason or f"V({omega}) is irreducible over Q",
    )

    dim_v = weyl_dim(q, omega)
    psi = schur_class_of(q, omega)
    d_result = d_psi(q, psi, bound=bound, window=window)
    check(
        "class divisor",
        d_result.value > 0 and dim_v % d_result.value == 0,
        f"d(psi) = {d_result.value} ({d_result.status}), dim V = {dim_v}",
    )

    grk = goldie_bound(dim_v, d_result.value)
    a_orbit = 2 if n % 2 == 0 else 1
    codim = a_orbit * dim_v**2
    tightness = (
        "exact: Goldie rank is at least 1, so the bound 1 is attained"
        if grk == 1
        else "upper bound only"
    )
    return BoundReport(
        n=n,
        g=g,
        partition=partition,
        lam=lam,
        q=q,
        omega=omega,
        omega_eta=omega_eta,
        dim_v=dim_v,
        d_v=d_result,
        grk_bound=grk,
        a_orbit_size=a_orbit,
        ideal_codim=codim,
        tightness=tightness,
        verdicts=tuple(verdicts),
    )


def premet_table(start: int, stop: int, **kwargs) -> list[BoundReport]:
    """Reports for every n in [start, stop]."""
    if start < 3 or stop < start:
        raise UnsupportedType("table range must satisfy 3 <= start <= stop")
    return [premet_example(n, **kwargs) for n in range(start, stop + 1)]
