"""Classical root systems (types A-D and products) in exact rational coordinates.

Weights and roots are tuples of `Fraction` in the standard orthonormal basis
(epsilon coordinates).  An A_n factor occupies n+1 coordinates whose weights
are read modulo the all-ones vector; B_n/C_n/D_n factors occupy n coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import DimensionMismatch, NotDominant, UnsupportedType

Q = Fraction
Scalar = Union[int, Fraction]
Vec = tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_ALIAS_HINT = {
    ("B", 1): "B1 is isomorphic to A1; build ('A', 1) instead",
    ("C", 1): "C1 is isomorphic to A1; build ('A', 1) instead",
    ("D", 1): "D1 is a torus direction, not a simple factor; drop it",
    ("D", 2): "D2 is isomorphic to A1 x A1; build ('A', 1), ('A', 1) instead",
}


def vec(values: Iterable[Scalar]) -> Vec:
    """Coerce an iterable of rationals to a weight vector."""
    return tuple(Q(v) for v in values)


def vadd(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise DimensionMismatch(f"cannot add vectors of length {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise DimensionMismatch(f"cannot subtract vectors of length {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c: Scalar, x: Vec) -> Vec:
    return tuple(Q(c) * a for a in x)


def vdot(x: Vec, y: Vec) -> Fraction:
    if len(x) != len(y):
        raise DimensionMismatch(f"cannot pair vectors of length {len(x)} and {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def zero_vec(dim: int) -> Vec:
    return (Q(0),) * dim


class Root(NamedTuple):
    """A root: its coordinate vector, sign, and length class.

    ``length`` is "long" or "short" in types B/C and None in the simply laced
    types A/D where all roots have the same length.
    """

    coords: Vec
    positive: bool
    length: Optional[str]

    def negated(self) -> "Root":
        return Root(tuple(-c for c in self.coords), not self.positive, self.length)


def coroot_pairing(lam: Vec, alpha: Union[Root, Vec]) -> Fraction:
    """Evaluate <lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)."""
    coords = alpha.coords if isinstance(alpha, Root) else alpha
    return 2 * vdot(lam, coords) / vdot(coords, coords)


def _block_positive_roots(family: str, rank: int, dim: int) -> list[tuple[Vec, Optional[str]]]:
    roots: list[tuple[Vec, Optional[str]]] = []

    def unit(i: int) -> list[Fraction]:
        e = [Q(0)] * dim
        e[i] = Q(1)
        return e

    if family == "A":
        for i in range(dim):
            for j in range(i + 1, dim):
                e = unit(i)
                e[j] = Q(-1)
                roots.append((tuple(e), None))
        return roots

    for i in range(rank):
        for j in range(i + 1, rank):
            minus = unit(i)
            minus[j] = Q(-1)
            plus = unit(i)
            plus[j] = Q(1)
            length = "long" if family == "B" else ("short" if family == "C" else None)
            roots.append((tuple(minus), length))
            roots.append((tuple(plus), length))
    if family == "B":
        for i in range(rank):
            roots.append((tuple(unit(i)), "short"))
    elif family == "C":
        for i in range(rank):
            e = unit(i)
            e[i] = Q(2)
            roots.append((tuple(e), "long"))
    return roots


def _block_simple_roots(family: str, rank: int, dim: int) -> list[Vec]:
    simple: list[Vec] = []

    def unit(i: int) -> list[Fraction]:
        e = [Q(0)] * dim
        e[i] = Q(1)
        return e

    for i in range(rank - 1):
        e = unit(i)
        e[i + 1] = Q(-1)
        simple.append(tuple(e))
    if family == "A":
        e = unit(rank - 1)
        e[rank] = Q(-1)
        simple.append(tuple(e))
    elif family == "B":
        simple.append(tuple(unit(rank - 1)))
    elif family == "C":
        e = unit(rank - 1)
        e[rank - 1] = Q(2)
        simple.append(tuple(e))
    elif family == "D":
        e = unit(rank - 2)
        e[rank - 1] = Q(1)
        simple.append(tuple(e))
    return simple


def _block_fundamental_weights(family: str, rank: int, dim: int) -> list[Vec]:
    weights: list[Vec] = []
    if family == "A":
        # omega_k = (1,...,1,0,...,0) with k ones, in the last-coordinate-zero gauge.
        for k in range(1, rank + 1):
            weights.append(tuple(Q(1) if i < k else Q(0) for i in range(dim)))
        return weights
    for k in range(1, rank + 1):
        w = [Q(1) if i < k else Q(0) for i in range(rank)]
        if family == "B" and k == rank:
            w = [Q(1, 2)] * rank
        elif family == "D" and k == rank - 1:
            w = [Q(1, 2)] * rank
            w[rank - 1] = Q(-1, 2)
        elif family == "D" and k == rank:
            w = [Q(1, 2)] * rank
        weights.append(tuple(w))
    return weights


@dataclass(frozen=True)
class RootSystem:
    """A finite product of classical simple root systems."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.factors:
            raise UnsupportedType("a root system needs at least one factor")
        for family, rank in self.factors:
            if family not in FAMILIES:
                raise UnsupportedType(
                    f"family {family!r} not supported; expected one of {', '.join(FAMILIES)}"
                )
            if not isinstance(rank, int) or rank < 1:
                raise UnsupportedType(f"rank must be a positive integer, got {rank!r}")
            if rank < _MIN_RANK[family]:
                hint = _ALIAS_HINT.get((family, rank), "rank below the supported range")
                raise UnsupportedType(f"{family}{rank} rejected: {hint}")

    # -- shape ---------------------------------------------------------------

    @cached_property
    def rank(self) -> int:
        return sum(rank for _, rank in self.factors)

    @cached_property
    def ambient_dim(self) -> int:
        return sum(rank + 1 if family == "A" else rank for family, rank in self.factors)

    @cached_property
    def blocks(self) -> tuple[tuple[str, int, int, int], ...]:
        """Per-factor coordinate blocks as (family, rank, offset, block_dim)."""
        out = []
        offset = 0
        for family, rank in self.factors:
            dim = rank + 1 if family == "A" else rank
            out.append((family, rank, offset, dim))
            offset += dim
        return tuple(out)

    def describe(self) -> str:
        return "x".join(f"{family}{rank}" for family, rank in self.factors)

    def __str__(self) -> str:
        return self.describe()

    def _check_dim(self, w: Sequence) -> Vec:
        w = vec(w)
        if len(w) != self.ambient_dim:
            raise DimensionMismatch(
                f"{self.describe()} lives in dimension {self.ambient_dim}, got vector of length {len(w)}"
            )
        return w

    def _split(self, w: Vec) -> list[Vec]:
        return [w[offset : offset + dim] for _, _, offset, dim in self.blocks]

    @staticmethod
    def _join(parts: Iterable[Sequence[Fraction]]) -> Vec:
        out: list[Fraction] = []
        for part in parts:
            out.extend(part)
        return tuple(out)

    # -- roots ---------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        roots: list[Root] = []
        for family, rank, offset, dim in self.blocks:
            pad_left = (Q(0),) * offset
            pad_right = (Q(0),) * (self.ambient_dim - offset - dim)
            for coords, length in _block_positive_roots(family, rank, dim):
                roots.append(Root(pad_left + coords + pad_right, True, length))
        return tuple(roots)

    @cached_property
    def all_roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(r.negated() for r in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        simple: list[Root] = []
        positive = {r.coords: r for r in self.positive_roots}
        for family, rank, offset, dim in self.blocks:
            pad_left = (Q(0),) * offset
            pad_right = (Q(0),) * (self.ambient_dim - offset - dim)
            for coords in _block_simple_roots(family, rank, dim):
                simple.append(positive[pad_left + coords + pad_right])
        return tuple(simple)

    @cached_property
    def rho(self) -> Vec:
        """Half the sum of the positive roots."""
        total = zero_vec(self.ambient_dim)
        for r in self.positive_roots:
            total = vadd(total, r.coords)
        return vscale(Q(1, 2), total)

    @cached_property
    def fundamental_weights(self) -> tuple[Vec, ...]:
        weights: list[Vec] = []
        for family, rank, offset, dim in self.blocks:
            pad_left = (Q(0),) * offset
            pad_right = (Q(0),) * (self.ambient_dim - offset - dim)
            for w in _block_fundamental_weights(family, rank, dim):
                weights.append(pad_left + w + pad_right)
        return tuple(weights)

    def dual(self) -> "RootSystem":
        """The dual root system: B and C swap, A and D are self-dual."""
        swap = {"A": "A", "B": "C", "C": "B", "D": "D"}
        return RootSystem(tuple((swap[family], rank) for family, rank in self.factors))

    # -- weight arithmetic ----------------------------------------------------

    def canonical(self, w: Sequence) -> Vec:
        """Normalize each A-block to the last-coordinate-zero gauge."""
        w = self._check_dim(w)
        parts = []
        for (family, _, _, _), part in zip(self.blocks, self._split(w)):
            if family == "A":
                shift = part[-1]
                part = tuple(c - shift for c in part)
            parts.append(part)
        return self._join(parts)

    def weights_equal(self, x: Sequence, y: Sequence) -> bool:
        return self.canonical(x) == self.canonical(y)

    def fundamental_coefficients(self, w: Sequence) -> tuple[Fraction, ...]:
        """Pairings of w with the simple coroots, in simple-root order."""
        w = self._check_dim(w)
        return tuple(coroot_pairing(w, alpha) for alpha in self.simple_roots)

    def from_fundamental(self, coeffs: Sequence[Scalar]) -> Vec:
        """The weight sum_k c_k omega_k, A-blocks in the canonical gauge."""
        coeffs = list(coeffs)
        if len(coeffs) != self.rank:
            raise DimensionMismatch(
                f"{self.describe()} has rank {self.rank}, got {len(coeffs)} coefficients"
            )
        total = zero_vec(self.ambient_dim)
        for c, omega in zip(coeffs, self.fundamental_weights):
            if c:
                total = vadd(total, vscale(c, omega))
        return self.canonical(total)

    def is_dominant(self, w: Sequence) -> bool:
        return all(p >= 0 for p in self.fundamental_coefficients(w))

    def dominant_representative(self, w: Sequence) -> Vec:
        """The unique dominant weight in the Weyl orbit of w."""
        w = self._check_dim(w)
        parts = []
        for (family, rank, _, _), part in zip(self.blocks, self._split(w)):
            if family == "A":
                ordered = sorted(part, reverse=True)
                shift = ordered[-1]
                parts.append(tuple(c - shift for c in ordered))
            elif family in ("B", "C"):
                parts.append(tuple(sorted((abs(c) for c in part), reverse=True)))
            else:  # D: sign changes come in pairs, so the sign of the last
                # coordinate is an invariant unless some coordinate vanishes.
                negatives = sum(1 for c in part if c < 0)
                ordered = sorted((abs(c) for c in part), reverse=True)
                if negatives % 2 == 1 and ordered[-1] != 0:
                    ordered[-1] = -ordered[-1]
                parts.append(tuple(ordered))
        return self._join(parts)

    def weyl_group_order(self) -> int:
        order = 1
        for family, rank in self.factors:
            if family == "A":
                order *= math.factorial(rank + 1)
            elif family in ("B", "C"):
                order *= 2**rank * math.factorial(rank)
            else:
                order *= 2 ** (rank - 1) * math.factorial(rank)
        return order

    def stabilizer_order(self, w: Sequence) -> int:
        """Order of the stabilizer of w in the Weyl group."""
        dom = self.dominant_representative(w)
        order = 1
        for (family, rank, _, _), part in zip(self.blocks, self._split(dom)):
            counts: dict[Fraction, int] = {}
            for c in part:
                counts[c] = counts.get(c, 0) + 1
            if family == "A":
                for m in counts.values():
                    order *= math.factorial(m)
            elif family in ("B", "C"):
                zeros = counts.pop(Q(0), 0)
                for m in counts.values():
                    order *= math.factorial(m)
                order *= math.factorial(zeros) * 2**zeros
            else:
                zeros = counts.pop(Q(0), 0)
                # In type D the dominant coordinates are distinct in absolute
                # value except for repeats, and only even sign flips act.
                abs_counts: dict[Fraction, int] = {}
                for c, m in counts.items():
                    abs_counts[abs(c)] = abs_counts.get(abs(c), 0) + m
                for m in abs_counts.values():
                    order *= math.factorial(m)
                if zeros:
                    order *= math.factorial(zeros) * 2 ** (zeros - 1)
        return order

    def orbit_size(self, w: Sequence) -> int:
        size, rem = divmod(self.weyl_group_order(), self.stabilizer_order(w))
        assert rem == 0
        return size

    def is_minuscule(self, w: Sequence) -> bool:
        """True when every coroot pairing of the dominant weight w is 0 or 1."""
        w = self._check_dim(w)
        if not self.is_dominant(w):
            raise NotDominant(f"{w} is not dominant for {self.describe()}")
        return all(coroot_pairing(w, r) <= 1 for r in self.positive_roots)


def build(factors: Union[str, Sequence[tuple[str, int]]], rank: Optional[int] = None) -> RootSystem:
    """Build a root system from ('B', 3), [('A', 2), ('B', 2)] or build('B', 3)."""
    if isinstance(factors, str):
        if rank is None:
            raise UnsupportedType("build('B') needs a rank: build('B', 3)")
        return RootSystem(((factors, rank),))
    return RootSystem(tuple((family, int(r)) for family, r in factors))
