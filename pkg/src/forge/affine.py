"""Exact-rational geometric search engine: LP feasibility with a
deterministic anti-cycling pivot rule, convex hull intersection witnesses,
Tverberg / rainbow / seven-point partition searches, and seeded random
general-position configurations.

All certificates use exact rational arithmetic (fractions.Fraction); an
optional floating-point pre-filter may prune LP calls but never decides an
outcome.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]


# ----------------------------------------------------------------------
# exact LP feasibility (phase-1 simplex, Bland's rule)


@dataclass
class LPResult:
    feasible: bool
    x: list[Fraction] | None


def lp_feasible(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> LPResult:
    """Find x >= 0 with A x = b, or certify infeasibility.

    Phase-1 simplex over exact rationals with Bland's anti-cycling rule
    (smallest-index entering variable, smallest-index tie break on leaving).
    Infeasibility is certified by a terminal phase-1 objective > 0.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    T = [[Fraction(v) for v in row] + [Fraction(0)] * m + [Fraction(b[i])] for i, row in enumerate(A)]
    for i in range(m):
        if T[i][-1] < 0:
            T[i] = [-v for v in T[i]]
        T[i][n + i] = Fraction(1)
    basis = list(range(n, n + m))
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    while True:
        # reduced costs r_j = c_j - sum_i c_{basis_i} T[i][j]
        entering = -1
        for j in range(n + m):
            r = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
            if r < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            # unbounded phase-1 objective cannot happen (bounded below by 0)
            raise AssertionError("phase-1 ratio test failed")
        piv = T[leaving][entering]
        T[leaving] = [v / piv for v in T[leaving]]
        for i in range(m):
            if i != leaving and T[i][entering]:
                f = T[i][entering]
                T[i] = [v - f * w for v, w in zip(T[i], T[leaving])]
        basis[leaving] = entering

    objective = sum(cost[basis[i]] * T[i][-1] for i in range(m))
    if objective > 0:
        return LPResult(False, None)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = T[i][-1]
    return LPResult(True, x)


def _float_prefilter_feasible(A, b) -> bool:
    """Optional floating-point screen: returns False only when the system is
    clearly infeasible.  Never used to certify anything."""
    try:
        from scipy.optimize import linprog
    except Exception:
        return True
    Af = [[float(v) for v in row] for row in A]
    bf = [float(v) for v in b]
    res = linprog(
        [0.0] * len(Af[0]), A_eq=Af, b_eq=bf, bounds=(0, None), method="highs"
    )
    if res.status == 2:  # reported infeasible
        return False
    return True


# ----------------------------------------------------------------------
# point configurations


@dataclass
class RationalPointConfig:
    """Colored point cloud in Q^d with exact coordinates."""

    points: list[Point]
    colors: list[list[int]] | None = None

    def __post_init__(self):
        self.points = [tuple(Fraction(c) for c in p) for p in self.points]
        dims = {len(p) for p in self.points}
        if len(dims) > 1:
            raise ValueError("all points must share one dimension")
        if self.colors is not None:
            self.colors = [tuple(cls) for cls in self.colors]
            flat = [i for cls in self.colors for i in cls]
            if sorted(flat) != list(range(len(self.points))):
                raise ValueError("colors must partition the point indices")

    @property
    def d(self) -> int:
        return len(self.points[0]) if self.points else 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "d": self.d,
                "points": [
                    ["%d/%d" % (c.numerator, c.denominator) for c in p]
                    for p in self.points
                ],
                "colors": self.colors,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "RationalPointConfig":
        data = json.loads(text)
        pts = [tuple(Fraction(c) for c in p) for p in data["points"]]
        return cls(points=pts, colors=data.get("colors"))


def _affine_det(pts: Sequence[Point]) -> Fraction:
    """Determinant of the (d x d) matrix of edge vectors from the first
    point; nonzero iff the d+1 points are affinely independent."""
    base = pts[0]
    M = [[p[i] - base[i] for i in range(len(base))] for p in pts[1:]]
    n = len(M)
    det = Fraction(1)
    M = [row[:] for row in M]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            for c in range(col, n):
                M[r][c] -= f * M[col][c]
    return det


def in_general_position(config: RationalPointConfig) -> bool:
    """No d+1 points affinely dependent (exact determinant test)."""
    d = config.d
    if len(config.points) <= d + 1:
        subsets = [config.points] if len(config.points) == d + 1 else []
    else:
        subsets = itertools.combinations(config.points, d + 1)
    return all(_affine_det(list(s)) != 0 for s in subsets)


def random_config(
    seed: int,
    n: int,
    d: int,
    colors: list[int] | None = None,
    coord_range: int = 1000,
) -> RationalPointConfig:
    """Seeded random rational configuration in general position.  ``colors``
    optionally gives class sizes (classes take consecutive indices)."""
    rng = random.Random(seed)
    while True:
        pts = [
            tuple(Fraction(rng.randint(-coord_range, coord_range)) for _ in range(d))
            for _ in range(n)
        ]
        color_classes = None
        if colors is not None:
            if sum(colors) != n:
                raise ValueError("color sizes must sum to n")
            color_classes, start = [], 0
            for t in colors:
                color_classes.append(list(range(start, start + t)))
                start += t
        cfg = RationalPointConfig(points=pts, colors=color_classes)
        if in_general_position(cfg):
            return cfg


# ----------------------------------------------------------------------
# hull intersection witnesses


@dataclass
class PartitionWitness:
    """Certificate that the convex hulls of the listed parts share a point:
    exact barycentric weights per part, all reproducing the same point."""

    parts: tuple[tuple[int, ...], ...]
    point: Point
    weights: tuple[tuple[Fraction, ...], ...]

    def as_dict(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "point": [str(c) for c in self.point],
            "weights": [[str(w) for w in ws] for ws in self.weights],
        }


@dataclass
class ExhaustionReport:
    candidates_checked: int
    pruned_and_reverified: int = 0


def hulls_intersect(
    point_sets: Sequence[Sequence[Point]],
    prefilter: bool = False,
) -> tuple[Point, list[list[Fraction]]] | None:
    """Common point of the convex hulls of the given point sets, with exact
    barycentric weights, or None when the intersection is certified empty."""
    if any(len(ps) == 0 for ps in point_sets):
        raise ValueError("every part must be non-empty")
    r = len(point_sets)
    d = len(point_sets[0][0])
    sizes = [len(ps) for ps in point_sets]
    offs = [sum(sizes[:i]) for i in range(r)]
    nvars = sum(sizes)

    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for i in range(1, r):
        for t in range(d):
            row = [Fraction(0)] * nvars
            for j, p in enumerate(point_sets[0]):
                row[offs[0] + j] = p[t]
            for j, p in enumerate(point_sets[i]):
                row[offs[i] + j] = -p[t]
            A.append(row)
            b.append(Fraction(0))
    for i in range(r):
        row = [Fraction(0)] * nvars
        for j in range(sizes[i]):
            row[offs[i] + j] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))

    if prefilter and not _float_prefilter_feasible(A, b):
        return None
    res = lp_feasible(A, b)
    if not res.feasible:
        return None
    lam = [
        [res.x[offs[i] + j] for j in range(sizes[i])] for i in range(r)
    ]
    x = tuple(
        sum((lam[0][j] * point_sets[0][j][t] for j in range(sizes[0])), Fraction(0))
        for t in range(d)
    )
    return x, lam


def verify_witness(
    config: RationalPointConfig, witness: PartitionWitness
) -> bool:
    """Exact substitution check: weights are non-negative, sum to one per
    part, and reproduce the common point with zero residual."""
    for part, ws in zip(witness.parts, witness.weights):
        if len(part) != len(ws):
            return False
        if any(w < 0 for w in ws):
            return False
        if sum(ws, Fraction(0)) != 1:
            return False
        for t in range(config.d):
            val = sum(
                (w * config.points[i][t] for i, w in zip(part, ws)), Fraction(0)
            )
            if val != witness.point[t]:
                return False
    return True


def _make_witness(
    config: RationalPointConfig, parts: Sequence[Sequence[int]], prefilter: bool
) -> PartitionWitness | None:
    sets = [[config.points[i] for i in part] for part in parts]
    res = hulls_intersect(sets, prefilter=prefilter)
    if res is None:
        return None
    x, lam = res
    return PartitionWitness(
        parts=tuple(tuple(p) for p in parts),
        point=x,
        weights=tuple(tuple(ws) for ws in lam),
    )


# ----------------------------------------------------------------------
# partition searches


def _set_partitions(n: int, r: int):
    """Partitions of range(n) into exactly r nonempty parts, ordered by
    restricted growth strings (parts ordered by minimal element)."""
    assign = [0] * n

    def rec(i: int, used: int):
        if i == n:
            if used == r:
                parts = [[] for _ in range(r)]
                for idx, a in enumerate(assign):
                    parts[a].append(idx)
                yield [tuple(p) for p in parts]
            return
        for a in range(min(used + 1, r)):
            assign[i] = a
            yield from rec(i + 1, max(used, a + 1))

    yield from rec(0, 0)


def _caps_admit(sizes: Sequence[int], caps: Sequence[int] | None) -> bool:
    if caps is None:
        return True
    return all(a <= b for a, b in zip(sorted(sizes), sorted(caps)))


def tverberg_search(
    config: RationalPointConfig,
    r: int,
    size_profile: Sequence[int] | None = None,
    reverse: bool = False,
    prefilter: bool = False,
) -> PartitionWitness | ExhaustionReport:
    """First (in canonical order) partition of the configuration into r
    nonempty parts with intersecting hulls; an exhaustion report otherwise."""
    n = len(config.points)
    if n < r:
        raise ValueError("need at least r points")
    candidates = _set_partitions(n, r)
    if reverse:
        candidates = reversed(list(candidates))
    checked = 0
    pruned: list[list[tuple[int, ...]]] = []
    for parts in candidates:
        if not _caps_admit([len(p) for p in parts], size_profile):
            continue
        checked += 1
        if prefilter:
            w = _make_witness(config, parts, prefilter=True)
            if w is None:
                pruned.append(parts)
                continue
        else:
            w = _make_witness(config, parts, prefilter=False)
            if w is None:
                continue
        assert verify_witness(config, w)
        return w
    # pre-filtered rejections must be re-verified exactly before certifying
    reverified = 0
    for parts in pruned:
        reverified += 1
        w = _make_witness(config, parts, prefilter=False)
        if w is not None:
            assert verify_witness(config, w)
            return w
    return ExhaustionReport(checked, reverified)


def _rainbow_sets(
    classes: Sequence[Sequence[int]], available: set[int], max_size: int
) -> list[tuple[int, ...]]:
    """Non-empty rainbow subsets of the available points, up to max_size."""
    out: list[tuple[int, ...]] = []
    usable = [[i for i in cls if i in available] for cls in classes]

    def rec(ci: int, cur: list[int]):
        if cur and len(cur) <= max_size:
            out.append(tuple(cur))
        if ci == len(usable) or len(cur) >= max_size:
            return
        rec(ci + 1, cur)
        for i in usable[ci]:
            cur.append(i)
            rec(ci + 1, cur)
            cur.pop()

    rec(0, [])
    return sorted(set(out))


def rainbow_search(
    config: RationalPointConfig,
    r: int,
    k: int,
    s: int,
    prefilter: bool = False,
) -> PartitionWitness | ExhaustionReport:
    """Search for r disjoint nonempty rainbow sets with balanced size caps
    (at most s of them of size k+1, the rest of size at most k) whose convex
    hulls share a point."""
    if config.colors is None:
        raise ValueError("rainbow search needs a colored configuration")
    classes = config.colors
    checked = 0
    pruned: list[list[tuple[int, ...]]] = []

    def yield_check(chosen):
        nonlocal checked
        checked += 1
        w = _make_witness(config, chosen, prefilter=prefilter)
        if w is None and prefilter:
            pruned.append(list(chosen))
            return None
        if w is not None:
            assert verify_witness(config, w)
        return w

    def from_rec(slot, available, chosen, big, cand):
        new_big = big + (1 if len(cand) == k + 1 else 0)
        if new_big > s:
            return None
        chosen.append(cand)
        res = search(slot + 1, available - set(cand), chosen, new_big)
        chosen.pop()
        return res

    def search(slot, available, chosen, big):
        if slot == r:
            return yield_check(chosen)
        cap = k + 1 if big < s else k
        for cand in _rainbow_sets(classes, available, cap):
            if chosen and cand < chosen[-1]:
                continue
            res = from_rec(slot, available, chosen, big, cand)
            if res is not None:
                return res
        return None

    res = search(0, set(range(len(config.points))), [], 0)
    if res is not None:
        return res
    reverified = 0
    for parts in pruned:
        reverified += 1
        w = _make_witness(config, parts, prefilter=False)
        if w is not None:
            assert verify_witness(config, w)
            return w
    return ExhaustionReport(checked, reverified)


def seven_point_search(
    config: RationalPointConfig, prefilter: bool = True
) -> PartitionWitness | ExhaustionReport:
    """Four rainbow sets with exact multiplicities for a 7-point, 4-color
    configuration (pair classes A, B, C and a singleton D): the first point
    of each pair and the singleton appear in exactly one set, the second
    point of each pair in exactly two.

    Implemented by enumerating the facets of the 4-fold deleted join of the
    rainbow complex on 10 virtual vertices (the second point of each pair is
    doubled) and pushing them through the fixed 3-to-2 identification."""
    if config.colors is None or [len(c) for c in config.colors] != [2, 2, 2, 1]:
        raise ValueError("seven-point search needs classes of sizes 2,2,2,1")
    if config.d != 2:
        raise ValueError("seven-point search is planar")
    # virtual vertex v of class c in {0,1,2}: 3c + p (p = 0,1,2) maps to the
    # point with index classes[c][min(p, 1)]; virtual vertex 9 is the singleton
    def point_of(v: int) -> int:
        if v == 9:
            return config.colors[3][0]
        c, p = divmod(v, 3)
        return config.colors[c][min(p, 1)]

    checked = 0
    pruned: list[list[tuple[int, ...]]] = []
    slot_assignments: list[list[tuple[int, ...]]] = []

    # all full injective slot assignments per 3-class, plus the singleton slot
    injections = list(itertools.permutations(range(4), 3))

    for ia in injections:
        for ib in injections:
            for ic in injections:
                for idd in range(4):
                    slots: list[list[int]] = [[] for _ in range(4)]
                    for p in range(3):
                        slots[ia[p]].append(0 * 3 + p)
                        slots[ib[p]].append(1 * 3 + p)
                        slots[ic[p]].append(2 * 3 + p)
                    slots[idd].append(9)
                    if any(not s for s in slots):
                        continue
                    # canonical slot order (quotient the slot symmetry)
                    mins = [min(s) for s in slots]
                    if mins != sorted(mins):
                        continue
                    parts = [
                        tuple(point_of(v) for v in sorted(s)) for s in slots
                    ]
                    slot_assignments.append(parts)

    for parts in slot_assignments:
        checked += 1
        w = _make_witness(config, parts, prefilter=prefilter)
        if w is None:
            if prefilter:
                pruned.append(list(parts))
            continue
        assert verify_witness(config, w)
        return w
    reverified = 0
    for parts in pruned:
        reverified += 1
        w = _make_witness(config, parts, prefilter=False)
        if w is not None:
            assert verify_witness(config, w)
            return w
    return ExhaustionReport(checked, reverified)
