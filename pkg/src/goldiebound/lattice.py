"""Root/weight lattice membership, central characters, and integral subsystems."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NotInWeightLattice
from .rootsys import (
    Q,
    Root,
    RootSystem,
    Vec,
    coroot_pairing,
    vadd,
    vdot,
    vsub,
    zero_vec,
)


def in_weight_lattice(rs: RootSystem, w: Sequence) -> bool:
    """True when every simple coroot pairing of w is an integer."""
    return all(p.denominator == 1 for p in rs.fundamental_coefficients(w))


def in_root_lattice(rs: RootSystem, w: Sequence) -> bool:
    """True when w is an integer combination of roots."""
    w = rs.canonical(w)
    for (family, rank, offset, dim) in rs.blocks:
        part = w[offset : offset + dim]
        if any(c.denominator != 1 for c in part):
            return False
        total = sum(part)
        if family == "A":
            if total % (rank + 1) != 0:
                return False
        elif family in ("C", "D"):
            if total % 2 != 0:
                return False
        # type B: the simple roots span all of Z^n, nothing more to check
    return True


@dataclass(frozen=True)
class SchurClass:
    """A coset of the root lattice inside the weight lattice.

    ``rep`` is the canonical representative: the dominant member of the coset
    of least height (pairing with the dual Weyl vector), ties broken by
    lexicographically smallest coordinates.
    """

    root_system: RootSystem
    rep: Vec

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.rep)


def _rho_check(rs: RootSystem) -> Vec:
    total = zero_vec(rs.ambient_dim)
    for r in rs.positive_roots:
        coroot = tuple(2 * c / vdot(r.coords, r.coords) for c in r.coords)
        total = vadd(total, coroot)
    return tuple(c / 2 for c in total)


def _level_tuples(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _level_tuples(total - first, parts - 1):
            yield (first,) + rest


def schur_class_of(rs: RootSystem, lam: Sequence) -> SchurClass:
    """The root-lattice coset of lam, with its canonical dominant representative."""
    lam = rs.canonical(lam)
    if not in_weight_lattice(rs, lam):
        raise NotInWeightLattice(f"{lam} is not in the weight lattice of {rs.describe()}")
    rho_check = _rho_check(rs)
    min_step = min(vdot(w, rho_check) for w in rs.fundamental_weights)
    best: Optional[tuple[Fraction, Vec]] = None
    level = 0
    while best is None or Q(level) * min_step <= best[0]:
        for coeffs in _level_tuples(level, rs.rank):
            mu = rs.from_fundamental(coeffs)
            if not in_root_lattice(rs, vsub(lam, mu)):
                continue
            key = (vdot(mu, rho_check), mu)
            if best is None or key < best:
                best = key
        level += 1
        if level > 4 * rs.ambient_dim + 8:  # every coset has a small representative
            raise AssertionError("canonical coset representative search did not terminate")
    return SchurClass(rs, best[1])


def trivial_class(rs: RootSystem) -> SchurClass:
    return SchurClass(rs, zero_vec(rs.ambient_dim))


@dataclass(frozen=True)
class IntegralSubsystem:
    """Roots of rs pairing integrally with a weight, plus derived data.

    ``dim`` is the dimension of the corresponding reductive subalgebra:
    the number of integral roots plus the full rank.  ``type_guess`` is the
    factor decomposition of the integral subsystem, or None when a component
    does not match a classical diagram.
    """

    roots: tuple[Root, ...]
    dim: int
    type_guess: Optional[RootSystem]


def integral_subsystem(rs: RootSystem, lam: Sequence) -> IntegralSubsystem:
    """The subsystem of roots of rs whose evaluation (lam, alpha) is integral.

    Membership is linear in alpha, so the result is closed under addition and
    negation within the ambient root system.
    """
    lam = rs._check_dim(lam)
    positive = [r for r in rs.positive_roots if vdot(lam, r.coords).denominator == 1]
    roots = tuple(positive) + tuple(r.negated() for r in positive)
    dim = len(roots) + rs.rank
    return IntegralSubsystem(roots, dim, _classify([r.coords for r in positive]))


def _classify(positive: list[Vec]) -> Optional[RootSystem]:
    """Identify the type of a closed subsystem from its positive roots."""
    if not positive:
        return None
    members = set(positive)
    simple = []
    for alpha in positive:
        if not any(vsub(alpha, beta) in members for beta in positive if beta != alpha):
            simple.append(alpha)
    # Split the simple roots into connected components of the Coxeter diagram.
    n = len(simple)
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if vdot(simple[i], simple[j]) != 0:
                adj[i][j] = adj[j][i] = True
    unseen = set(range(n))
    factors: list[tuple[str, int]] = []
    while unseen:
        stack = [unseen.pop()]
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in list(unseen):
                if adj[i][j]:
                    unseen.remove(j)
                    stack.append(j)
        factor = _classify_component([simple[i] for i in comp])
        if factor is None:
            return None
        factors.append(factor)
    factors.sort()
    return RootSystem(tuple(factors))


def _classify_component(simple: list[Vec]) -> Optional[tuple[str, int]]:
    k = len(simple)
    if k == 1:
        return ("A", 1)
    pair = [[0] * k for _ in range(k)]  # Cartan integers <alpha_i, alpha_j^vee>
    for i in range(k):
        for j in range(k):
            if i != j:
                p = coroot_pairing(simple[i], simple[j])
                assert p.denominator == 1
                pair[i][j] = int(p)
    degree = [sum(1 for j in range(k) if pair[i][j] != 0) for i in range(k)]
    if any(d > 3 for d in degree):
        return None
    forks = [i for i in range(k) if degree[i] == 3]
    ends = [i for i in range(k) if degree[i] == 1]

    if not forks:
        if len(ends) != 2:
            return None
        # Walk the path from one end to the other.
        order = [ends[0]]
        while len(order) < k:
            nxt = [
                j
                for j in range(k)
                if pair[order[-1]][j] != 0 and j not in order[-2:]
            ]
            if len(nxt) != 1:
                return None
            order.append(nxt[0])
        bonds = [pair[order[i]][order[i + 1]] * pair[order[i + 1]][order[i]] for i in range(k - 1)]
        if any(b not in (1, 2) for b in bonds):
            return None
        doubles = [i for i, b in enumerate(bonds) if b == 2]
        if not doubles:
            return ("A", k)
        if len(doubles) > 1 or doubles[0] not in (0, k - 2):
            return None
        if k == 2:
            return ("B", 2)
        # Orient so the double bond joins order[-2] and order[-1].
        if doubles[0] == 0:
            order.reverse()
        # <alpha_{k-2}, alpha_{k-1}^vee> = -2 means the end root is short.
        return ("B", k) if pair[order[-2]][order[-1]] == -2 else ("C", k)

    if len(forks) != 1:
        return None
    if any(pair[i][j] * pair[j][i] not in (0, 1) for i in range(k) for j in range(i + 1, k)):
        return None
    # Branch lengths from the fork node; type D has two branches of length 1.
    fork = forks[0]
    lengths = []
    for start in (j for j in range(k) if pair[fork][j] != 0):
        length = 1
        prev, cur = fork, start
        while degree[cur] == 2:
            nxt = [j for j in range(k) if pair[cur][j] != 0 and j != prev]
            if len(nxt) != 1 or degree[nxt[0]] == 3:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        if degree[cur] != 1:
            return None
        lengths.append(length)
    if sorted(lengths)[:2] == [1, 1] and sum(lengths) == k - 1 and k >= 4:
        return ("D", k)
    return None
