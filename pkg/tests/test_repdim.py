"""Weyl dimensions, class enumeration, and the gcd invariant d(psi)."""
import random
from fractions import Fraction as Q

import pytest

from goldiebound import (
    azumaya_index,
    build,
    d_psi,
    enumerate_dominant_in_class,
    schur_class_of,
    spinor_certificate,
    trivial_class,
    weyl_dim,
)
from goldiebound.errors import BudgetExceeded, NotDominant, NotInWeightLattice

from oracles import freudenthal_dim, scan_dominant_in_class


def half(*values):
    return tuple(Q(v, 2) for v in values)


# -- weyl_dim -------------------------------------------------------------------


def test_weyl_dim_known_values():
    assert weyl_dim(build("B", 3), half(1, 1, 1)) == 8
    assert weyl_dim(build("C", 2), (2, 0)) == 10  # the adjoint module
    assert weyl_dim(build("C", 3), (1, 0, 0)) == 6
    assert weyl_dim(build("A", 3), (1, 1, 0, 0)) == 6
    assert weyl_dim(build("D", 4), half(1, 1, 1, 1)) == 8
    assert weyl_dim(build("B", 2), (0, 0)) == 1
    assert weyl_dim(build([("A", 1), ("A", 1)]), half(1, -1, 0, 0)) == 2


def test_weyl_dim_errors():
    with pytest.raises(NotDominant):
        weyl_dim(build("B", 2), (-1, 0))
    with pytest.raises(NotInWeightLattice):
        weyl_dim(build("C", 2), half(1, 1))


def test_weyl_dim_matches_freudenthal():
    cases = [
        (build("A", 2), (2, 1, 0)),
        (build("A", 2), (3, 0, 0)),
        (build("B", 2), (2, 1)),
        (build("B", 3), half(3, 1, 1)),
        (build("C", 3), (1, 1, 1)),
        (build("D", 3), (2, 1, 1)),
        (build([("A", 1), ("B", 2)]), (1, 0, 1, 1)),
    ]
    for rs, lam in cases:
        assert weyl_dim(rs, lam) == freudenthal_dim(rs, lam), (rs.describe(), lam)


def test_weyl_dim_integrality_on_random_dominant_weights():
    rng = random.Random(20250825)
    systems = [
        build("A", 1),
        build("A", 4),
        build("A", 6),
        build("B", 3),
        build("B", 6),
        build("C", 4),
        build("C", 6),
        build("D", 4),
        build("D", 6),
        build([("B", 2), ("D", 3)]),
    ]
    for _ in range(1000):
        rs = rng.choice(systems)
        coeffs = [rng.randint(0, 5) for _ in range(rs.rank)]
        dim = weyl_dim(rs, rs.from_fundamental(coeffs))  # asserts exactness inside
        assert dim >= 1


def test_minuscule_weights_have_orbit_sized_modules():
    cases = [
        (build("A", 3), [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0)]),
        (build("B", 3), [half(1, 1, 1)]),
        (build("C", 3), [(1, 0, 0)]),
        (build("D", 4), [(1, 0, 0, 0), half(1, 1, 1, 1), half(1, 1, 1, -1)]),
    ]
    for rs, weights in cases:
        for w in weights:
            assert rs.is_minuscule(w)
            assert weyl_dim(rs, w) == rs.orbit_size(w)


def test_minuscule_iff_dim_equals_orbit_size():
    import itertools

    for rs in [build("A", 2), build("B", 2), build("C", 3), build("D", 4)]:
        for coeffs in itertools.product(range(3), repeat=rs.rank):
            w = rs.from_fundamental(coeffs)
            assert rs.is_minuscule(w) == (weyl_dim(rs, w) == rs.orbit_size(w))


# -- enumeration ------------------------------------------------------------------


def test_enumerate_trivial_class_bound_zero():
    rs = build("B", 2)
    assert enumerate_dominant_in_class(rs, trivial_class(rs), 0) == [(Q(0), Q(0))]


def test_enumerate_b2_spinor_class():
    rs = build("B", 2)
    psi = schur_class_of(rs, half(1, 1))
    assert enumerate_dominant_in_class(rs, psi, 2) == [half(1, 1), half(3, 1)]


def test_enumerate_matches_box_scan():
    cases = [
        ("B", 2, half(1, 1), 3),
        ("B", 3, half(1, 1, 1), 3),
        ("C", 2, (1, 0), 4),
        ("C", 2, (0, 0), 3),
        ("D", 3, half(1, 1, 1), 3),
        ("D", 3, (1, 0, 0), 3),
        ("A", 2, (1, 0, 0), 4),
    ]
    for family, rank, rep_coords, bound in cases:
        rs = build(family, rank)
        psi = schur_class_of(rs, rep_coords)
        ours = enumerate_dominant_in_class(rs, psi, bound)
        scanned = scan_dominant_in_class(family, rank, psi.rep, bound)
        assert sorted(ours) == sorted(scanned), (family, rank, bound)


def test_enumerate_is_graded_by_level():
    rs = build("B", 3)
    psi = schur_class_of(rs, half(1, 1, 1))
    listed = enumerate_dominant_in_class(rs, psi, 4)
    levels = [sum(rs.fundamental_coefficients(w)) for w in listed]
    assert levels == sorted(levels)
    assert all(lv <= 4 for lv in levels)


# -- certificates ------------------------------------------------------------------


def test_spinor_certificate_values():
    b4 = build("B", 4)
    assert spinor_certificate(b4, schur_class_of(b4, half(1, 1, 1, 1))) == 16
    d4 = build("D", 4)
    assert spinor_certificate(d4, schur_class_of(d4, half(1, 1, 1, 1))) == 8
    assert spinor_certificate(d4, schur_class_of(d4, half(1, 1, 1, -1))) == 8
    assert spinor_certificate(d4, schur_class_of(d4, (1, 0, 0, 0))) is None
    c3 = build("C", 3)
    assert spinor_certificate(c3, schur_class_of(c3, (1, 0, 0))) is None
    a1 = build("A", 1)
    assert spinor_certificate(a1, schur_class_of(a1, (1, 0))) is None


# -- d_psi --------------------------------------------------------------------------


def test_d_psi_spinor_classes_certified():
    for n in range(2, 7):
        rs = build("B", n)
        result = d_psi(rs, schur_class_of(rs, half(*(1,) * n)))
        assert result.value == 2**n
        assert result.status == "certified"
    for n in range(3, 7):
        rs = build("D", n)
        result = d_psi(rs, schur_class_of(rs, half(*(1,) * n)))
        assert result.value == 2 ** (n - 1)
        assert result.status == "certified"


def test_d_psi_trivial_class_is_one():
    rs = build("C", 3)
    result = d_psi(rs, trivial_class(rs))
    assert result.value == 1 and result.status == "certified"


def test_d_psi_a3_two_row_class():
    rs = build("A", 3)
    psi = schur_class_of(rs, (1, 1, 0, 0))
    result = d_psi(rs, psi)
    assert result.value == 2
    assert result.status == "stabilized"
    assert result.value < weyl_dim(rs, (1, 1, 0, 0))
    # witnesses record the strict drops of the running gcd, which it divides
    assert all(dim % result.value == 0 for _, dim in result.witnesses)


def test_d_psi_a3_matches_independent_gcd_oracle():
    import math

    rs = build("A", 3)
    psi = schur_class_of(rs, (1, 1, 0, 0))
    scanned = scan_dominant_in_class("A", 3, psi.rep, 4)
    oracle = 0
    for w in scanned:
        oracle = math.gcd(oracle, freudenthal_dim(rs, w))
    assert oracle == 2
    assert d_psi(rs, psi).value == oracle


def test_d_psi_monotone_in_bound():
    rs = build("A", 3)
    psi = schur_class_of(rs, (1, 1, 0, 0))
    values = []
    for bound in range(5, 10):
        values.append(d_psi(rs, psi, bound=bound).value)
    assert values == sorted(values, reverse=True)
    rs = build("B", 3)
    psi = schur_class_of(rs, half(1, 1, 1))
    assert d_psi(rs, psi, bound=1).value == d_psi(rs, psi, bound=6).value


def test_d_psi_divides_later_dimensions():
    rs = build("C", 2)
    psi = schur_class_of(rs, (1, 0))
    result = d_psi(rs, psi)
    for w in enumerate_dominant_in_class(rs, psi, 10):
        assert weyl_dim(rs, w) % result.value == 0


def test_d_psi_budget_exceeded():
    rs = build("A", 1)
    psi = schur_class_of(rs, (1, 0))
    with pytest.raises(BudgetExceeded):
        d_psi(rs, psi, bound=0)  # no class member below level 1
    a3 = build("A", 3)
    with pytest.raises(BudgetExceeded):
        d_psi(a3, schur_class_of(a3, (1, 1, 0, 0)), node_limit=5)


def test_d_psi_witnesses_chain():
    rs = build("A", 3)
    psi = schur_class_of(rs, (1, 1, 0, 0))
    result = d_psi(rs, psi)
    dims = [dim for _, dim in result.witnesses]
    import math

    running = 0
    for dim in dims:
        new = math.gcd(running, dim)
        assert new != running  # each witness strictly drops the gcd
        running = new
    assert running == result.value


def test_azumaya_index_is_d_psi():
    rs = build("B", 3)
    psi = schur_class_of(rs, half(1, 1, 1))
    assert azumaya_index(rs, psi) == d_psi(rs, psi)
