"""Tests for exact LP feasibility and the affine partition searches."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forge import affine as af


def frac(n, d=1):
    return F(n, d)


# ----------------------------------------------------------------------
# LP core


def test_lp_feasible_simple_system():
    # x0 + x1 = 1, x0 - x1 = 0  =>  x = (1/2, 1/2)
    A = [[F(1), F(1)], [F(1), F(-1)]]
    b = [F(1), F(0)]
    res = af.lp_feasible(A, b)
    assert res.feasible
    assert res.x == [F(1, 2), F(1, 2)]


def test_lp_infeasible_system():
    # x0 = 1 and x0 = 2 with x0 >= 0
    A = [[F(1)], [F(1)]]
    b = [F(1), F(2)]
    assert not af.lp_feasible(A, b).feasible


def test_lp_infeasible_needs_negative_variable():
    # x0 = -1 has no nonnegative solution
    assert not af.lp_feasible([[F(1)]], [F(-1)]).feasible


def test_lp_solution_is_exact():
    A = [[F(3), F(1, 7)], [F(0), F(2)]]
    b = [F(5), F(1, 3)]
    res = af.lp_feasible(A, b)
    assert res.feasible
    for row, rhs in zip(A, b):
        assert sum(c * x for c, x in zip(row, res.x)) == rhs


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-4, 4), min_size=2, max_size=2),
        min_size=1,
        max_size=3,
    ),
    st.lists(st.integers(0, 5), min_size=2, max_size=2),
)
def test_lp_feasibility_of_constructed_solutions(rows, x):
    # build b = A x for a known nonnegative x: always feasible
    A = [[F(v) for v in row] for row in rows]
    xs = [F(v) for v in x]
    b = [sum(c * v for c, v in zip(row, xs)) for row in A]
    res = af.lp_feasible(A, b)
    assert res.feasible
    for row, rhs in zip(A, b):
        assert sum(c * v for c, v in zip(row, res.x)) == rhs


# ----------------------------------------------------------------------
# point configurations


def unit_square_config():
    return af.RationalPointConfig(
        points=(
            (F(0), F(0)),
            (F(2), F(0)),
            (F(1), F(2)),
            (F(1), F(1)),
        ),
        colors=((0,), (1,), (2,), (3,)),
    )


def test_config_json_round_trip():
    cfg = unit_square_config()
    cfg2 = af.RationalPointConfig.from_json(cfg.to_json())
    assert cfg2.points == cfg.points
    assert cfg2.colors == cfg.colors


def test_general_position_detection():
    assert af.in_general_position(unit_square_config())
    collinear = af.RationalPointConfig(
        points=((F(0), F(0)), (F(1), F(0)), (F(2), F(0))),
        colors=None,
    )
    assert not af.in_general_position(collinear)


def test_random_config_is_deterministic_and_generic():
    a = af.random_config(42, 6, 2, [3, 3])
    b = af.random_config(42, 6, 2, [3, 3])
    assert a.points == b.points
    assert af.in_general_position(a)
    c = af.random_config(43, 6, 2, [3, 3])
    assert c.points != a.points


def test_hulls_intersect_exact_point():
    # triangle hull contains its interior point
    sets = [((F(0), F(0)), (F(2), F(0)), (F(1), F(2))), ((F(1), F(1)),)]
    res = af.hulls_intersect(sets)
    assert res is not None
    x, lam = res
    assert x == (F(1), F(1))


def test_hulls_disjoint():
    sets = [((F(0), F(0)),), ((F(5), F(5)),)]
    assert af.hulls_intersect(sets) is None


# ----------------------------------------------------------------------
# partition searches


def test_radon_partition_of_four_points():
    w = af.tverberg_search(unit_square_config(), 2)
    assert isinstance(w, af.PartitionWitness)
    assert af.verify_witness(unit_square_config(), w)
    # the inner point must be separated from the triangle
    assert sorted(map(len, w.parts)) == [1, 3]


def test_tverberg_exhaustion_report_when_impossible():
    # three spread points, r = 2: a Radon partition needs d + 2 = 4 points
    # in the plane, so exhaustion is expected
    cfg = af.RationalPointConfig(
        points=((F(0), F(0)), (F(10), F(0)), (F(0), F(10))),
        colors=None,
    )
    res = af.tverberg_search(cfg, 2)
    assert isinstance(res, af.ExhaustionReport)
    assert res.candidates_checked > 0


def test_tverberg_prefilter_and_exact_agree():
    for seed in range(5):
        cfg = af.random_config(seed, 5, 2, None)
        a = af.tverberg_search(cfg, 2, prefilter=True)
        b = af.tverberg_search(cfg, 2, prefilter=False)
        assert isinstance(a, af.PartitionWitness)
        assert isinstance(b, af.PartitionWitness)
        assert a.parts == b.parts


def test_witness_verification_rejects_tampering():
    cfg = unit_square_config()
    w = af.tverberg_search(cfg, 2)
    bad = af.PartitionWitness(
        parts=w.parts, point=(w.point[0] + 1, w.point[1]), weights=w.weights
    )
    assert not af.verify_witness(cfg, bad)


def test_rainbow_search_small_instance():
    # r = 2, k = 1, s = 2 on 6 points with two 3-color classes
    cfg = af.random_config(3, 6, 2, [3, 3])
    w = af.rainbow_search(cfg, 2, 1, 2)
    assert isinstance(w, af.PartitionWitness)
    assert af.verify_witness(cfg, w)
    classes = [set(c) for c in cfg.colors]
    for part in w.parts:
        assert len(part) <= 2
        for cls in classes:
            assert len(set(part) & cls) <= 1


def test_seven_point_search_returns_verified_witness():
    cfg = af.random_config(11, 7, 2, [2, 2, 2, 1])
    w = af.seven_point_search(cfg)
    assert isinstance(w, af.PartitionWitness)
    assert af.verify_witness(cfg, w)
    # multiplicity pattern: first of each pair and the singleton once,
    # second of each pair twice
    from collections import Counter

    count = Counter(i for part in w.parts for i in part)
    firsts = [cfg.colors[c][0] for c in range(3)]
    seconds = [cfg.colors[c][1] for c in range(3)]
    singleton = cfg.colors[3][0]
    for i in firsts + [singleton]:
        assert count[i] == 1
    for i in seconds:
        assert count[i] == 2


def test_seven_point_search_rejects_bad_classes():
    cfg = af.random_config(1, 6, 2, [3, 3])
    with pytest.raises(ValueError):
        af.seven_point_search(cfg)


def test_affine_det_orientation():
    pts = ((F(0), F(0)), (F(1), F(0)), (F(0), F(1)))
    assert af._affine_det(pts) > 0
    assert af._affine_det(tuple(reversed(pts))) < 0
