"""Weyl dimensions and the divisor invariant d(psi) of a central character.

d(psi) is the greatest common divisor of the dimensions of the irreducible
representations whose highest weight lies in a fixed root-lattice coset psi.
It equals the index of the corresponding homogeneous Azumaya algebra, which is
what `azumaya_index` is named for.  The gcd is computed over a finite
enumeration and is exact when a divisibility certificate is met, otherwise it
is reported as merely stabilized.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BudgetExceeded, NotDominant, NotInWeightLattice
from .lattice import SchurClass, in_root_lattice, in_weight_lattice, _level_tuples
from .rootsys import Q, RootSystem, Vec, coroot_pairing, vsub

CERTIFIED = "certified"
STABILIZED = "stabilized"

DEFAULT_BOUND = 8
DEFAULT_WINDOW = 3
DEFAULT_NODE_LIMIT = 200_000


def weyl_dim(rs: RootSystem, lam: Sequence) -> int:
    """Dimension of the irreducible module with dominant highest weight lam."""
    lam = rs.canonical(lam)
    if not rs.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant for {rs.describe()}")
    if not in_weight_lattice(rs, lam):
        raise NotInWeightLattice(f"{lam} is not in the weight lattice of {rs.describe()}")
    shifted = rs.canonical(tuple(a + b for a, b in zip(lam, rs.rho)))
    dim = Q(1)
    for alpha in rs.positive_roots:
        dim *= coroot_pairing(shifted, alpha) / coroot_pairing(rs.rho, alpha)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def enumerate_dominant_in_class(rs: RootSystem, psi: SchurClass, bound: int) -> list[Vec]:
    """Dominant weights of psi with fundamental-coefficient level <= bound.

    Weights are listed level by level (level = sum of the coefficients in the
    fundamental-weight basis), lexicographically within a level.
    """
    out: list[Vec] = []
    for level in range(bound + 1):
        batch = []
        for coeffs in _level_tuples(level, rs.rank):
            mu = rs.from_fundamental(coeffs)
            if in_root_lattice(rs, vsub(mu, psi.rep)):
                batch.append(mu)
        out.extend(sorted(batch))
    return out


def spinor_certificate(rs: RootSystem, psi: SchurClass) -> Optional[int]:
    """A proven common divisor of all dimensions in the class, when known.

    For the half-integral coset of B_n this is 2^n, for the half-integral
    cosets of D_n it is 2^(n-1): every weight of such a module has a full
    orbit under the group of (even) sign changes.  Other classes have no
    certificate here and return None.
    """
    if len(rs.factors) != 1:
        return None
    family, rank = rs.factors[0]
    half_integral = all(c.denominator == 2 for c in psi.rep)
    if family == "B" and half_integral:
        return 2**rank
    if family == "D" and half_integral:
        return 2 ** (rank - 1)
    return None


@dataclass(frozen=True)
class DPsiResult:
    """Outcome of a d(psi) computation.

    ``status`` is "certified" when the gcd met a proven divisor (so the value
    is exact) and "stabilized" when it merely stopped changing over the last
    few enumeration levels.  ``witnesses`` records the (weight, dimension)
    pairs at which the running gcd strictly dropped; the value divides every
    witness dimension.  ``bound_used`` is the highest level actually examined.
    """

    value: int
    status: str
    witnesses: tuple[tuple[Vec, int], ...]
    bound_used: int


def d_psi(
    rs: RootSystem,
    psi: SchurClass,
    *,
    bound: int = DEFAULT_BOUND,
    window: int = DEFAULT_WINDOW,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> DPsiResult:
    """GCD of the dimensions of the irreducibles with highest weight in psi.

    Dominant class members are enumerated up to ``bound`` (fundamental
    coefficient sum).  The result is certified exact if it reaches a proven
    divisor of the whole class, and reported as stabilized if it is unchanged
    over the trailing ``window`` levels; otherwise BudgetExceeded is raised.
    """
    if psi.root_system != rs:
        raise NotInWeightLattice("class does not belong to this root system")
    certificate = spinor_certificate(rs, psi)
    if certificate is None and psi.is_trivial():
        certificate = 1  # the class of the trivial module
    running = 0
    witnesses: list[tuple[Vec, int]] = []
    gcd_by_level: list[int] = []
    nodes = 0
    for level in range(bound + 1):
        for coeffs in _level_tuples(level, rs.rank):
            nodes += 1
            if nodes > node_limit:
                raise BudgetExceeded(
                    f"d_psi visited more than {node_limit} enumeration nodes"
                )
            mu = rs.from_fundamental(coeffs)
            if not in_root_lattice(rs, vsub(mu, psi.rep)):
                continue
            dim = weyl_dim(rs, mu)
            if certificate is not None:
                assert dim % certificate == 0
            merged = math.gcd(running, dim)
            if merged != running:
                witnesses.append((mu, dim))
                running = merged
            if certificate is not None and running == certificate:
                return DPsiResult(running, CERTIFIED, tuple(witnesses), level)
        gcd_by_level.append(running)
    if running and certificate is not None and running == certificate:
        return DPsiResult(running, CERTIFIED, tuple(witnesses), bound)
    if (
        running
        and len(gcd_by_level) > window
        and gcd_by_level[-1] == gcd_by_level[-1 - window]
    ):
        return DPsiResult(running, STABILIZED, tuple(witnesses), bound)
    raise BudgetExceeded(
        f"d_psi did not certify or stabilize within bound {bound} "
        f"(running gcd {running or 'undefined'}); raise the bound"
    )


def azumaya_index(
    rs: RootSystem,
    psi: SchurClass,
    *,
    bound: int = DEFAULT_BOUND,
    window: int = DEFAULT_WINDOW,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> DPsiResult:
    """Index of the homogeneous Azumaya locus attached to the class psi.

    This is the same invariant as `d_psi`; the name records the algebraic
    meaning of the number.
    """
    return d_psi(rs, psi, bound=bound, window=window, node_limit=node_limit)
