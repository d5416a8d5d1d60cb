"""Discrete Morse machinery: generic vector fields with validity and
acyclicity certification, the stepwise matching on the balanced
configuration space, lexicographic-monotonicity verification and the
connectivity certificate extracted from the critical cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .complexes import SimplicialComplex
from .config_space import (
    ConfigSimplex,
    ConfigurationSpace,
    classify,
)

INFINITY = math.inf


@dataclass
class DiscreteVectorField:
    """A matching on the face poset of a complex.

    ``pairs`` maps the lower face of each matched pair to the upper one.
    Critical faces are the unmatched ones.
    """

    complex: SimplicialComplex
    pairs: dict[frozenset[int], frozenset[int]]
    diagnostics: dict = field(default_factory=dict)

    def matched(self) -> set[frozenset[int]]:
        out = set(self.pairs)
        out.update(self.pairs.values())
        return out

    def critical(self) -> list[frozenset[int]]:
        matched = self.matched()
        return sorted(
            (f for f in self.complex.faces() if f not in matched),
            key=lambda f: (len(f), tuple(sorted(f))),
        )


@dataclass
class FieldReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_dvf(field: DiscreteVectorField) -> FieldReport:
    """Verify the three matching conditions: each face in at most one pair,
    each pair is a face/cofacet pair, and the empty face is unmatched."""
    violations = []
    faces = field.complex.faces()
    seen: dict[frozenset[int], int] = {}
    for lo, hi in field.pairs.items():
        if lo not in faces or hi not in faces:
            violations.append("pair (%s, %s) uses unknown faces" % (sorted(lo), sorted(hi)))
            continue
        for f in (lo, hi):
            seen[f] = seen.get(f, 0) + 1
        if not (lo < hi and len(hi) == len(lo) + 1):
            violations.append(
                "(b) violation: %s is not a facet of %s" % (sorted(lo), sorted(hi))
            )
        if not lo:
            violations.append("(c) violation: the empty face is matched")
    for f, n in seen.items():
        if n > 1:
            violations.append(
                "(a) violation: %s participates in %d pairs" % (sorted(f), n)
            )
    return FieldReport(violations)


@dataclass
class AcyclicityResult:
    acyclic: bool
    witness_cycle: list[frozenset[int]] | None = None


def acyclicity(field: DiscreteVectorField) -> AcyclicityResult:
    """Search for a closed gradient path.  A closed path visits only faces
    that are matched upward, so it suffices to detect a directed cycle in the
    graph on lower faces with edges alpha -> alpha' whenever alpha' != alpha
    is a facet of the partner of alpha and alpha' is matched upward too."""
    pairs = field.pairs
    succ: dict[frozenset[int], list[frozenset[int]]] = {}
    for lo, hi in pairs.items():
        nxt = []
        for v in hi:
            cand = hi - {v}
            if cand != lo and cand in pairs:
                nxt.append(cand)
        succ[lo] = nxt

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {f: WHITE for f in pairs}
    parent: dict[frozenset[int], frozenset[int] | None] = {}
    for start in pairs:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(succ[start]))]
        color[start] = GRAY
        parent[start] = None
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == WHITE:
                    color[nxt] = GRAY
                    parent[nxt] = node
                    stack.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
                if color[nxt] == GRAY:
                    # reconstruct the zig-zag witness
                    cyc = [nxt]
                    cur = node
                    while cur != nxt:
                        cyc.append(cur)
                        cur = parent[cur]
                    cyc.reverse()
                    witness: list[frozenset[int]] = []
                    for alpha in cyc:
                        witness.append(alpha)
                        witness.append(pairs[alpha])
                    witness.append(cyc[0])
                    return AcyclicityResult(False, witness)
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return AcyclicityResult(True, None)


# ----------------------------------------------------------------------
# the stepwise matching on the balanced configuration space


def a_value(
    sigma: ConfigSimplex,
    j: int,
    i: int,
    space: ConfigurationSpace,
) -> int | float:
    """The pivot vertex of step (j, i) for a label: the position-minimal
    element of color i in A_j union B whose within-color position is strictly
    above the position of the previous big step's pivot for the same color.
    INFINITY when no such element exists (possible only at j = r)."""
    coloring = space.coloring
    cls = coloring.classes[i - 1]
    remainder = sigma.remainder()
    threshold = 0
    for jj in range(1, j + 1):
        pool = sigma.parts[jj - 1] | remainder
        best = None
        for v in cls:
            if coloring.position(v) > threshold and v in pool:
                if best is None or coloring.position(v) < coloring.position(best):
                    best = v
        if best is None:
            if jj < space.params.r:
                raise AssertionError(
                    "pivot ill-defined before the last big step"
                )
            return INFINITY
        if jj == j:
            return best
        threshold = coloring.position(best)
    raise AssertionError("unreachable")


def pi_profile(sigma: ConfigSimplex, space: ConfigurationSpace) -> tuple:
    """All pivot positions in step order (big step major); ill-defined
    entries become INFINITY, which compares above every position."""
    coloring = space.coloring
    out = []
    for j in range(1, space.params.r + 1):
        for i in range(1, space.params.k + 2):
            a = a_value(sigma, j, i, space)
            out.append(INFINITY if a is INFINITY else coloring.position(a))
    return tuple(out)


def balanced_matching(space: ConfigurationSpace) -> DiscreteVectorField:
    """The stepwise matching on the balanced configuration space: r big
    steps (one per slot), each split into k+1 small steps (one per color),
    processed in lexicographic step order over the still-unmatched labels.

    At step (j, i) the pivot a of a label is toggled between A_j and B; the
    label is matched with its toggle partner whenever the partner is a valid
    label that is also still unmatched.  Toggle invariance of the pivot is
    asserted at runtime.
    """
    params, coloring = space.params, space.coloring
    r, k = params.r, params.k
    pairs: dict[frozenset[int], frozenset[int]] = {}
    matched: set[ConfigSimplex] = set()
    tags: dict[tuple[int, int], dict[str, int]] = {}

    order = space.labels  # canonical (dim, face) order
    for j in range(1, r + 1):
        for i in range(1, k + 2):
            tag = {"matched": 0, "type3": 0}
            for sigma in order:
                if sigma in matched:
                    continue
                a = a_value(sigma, j, i, space)
                if a is INFINITY:
                    tag["type3"] += 1
                    continue
                if a in sigma.parts[j - 1]:
                    lower_parts = list(sigma.parts)
                    lower_parts[j - 1] = sigma.parts[j - 1] - {a}
                    partner = ConfigSimplex(tuple(lower_parts), sigma.m)
                    lower, upper = partner, sigma
                else:
                    upper_parts = list(sigma.parts)
                    upper_parts[j - 1] = sigma.parts[j - 1] | {a}
                    partner = ConfigSimplex(tuple(upper_parts), sigma.m)
                    lower, upper = sigma, partner
                if not space.contains(partner) or partner in matched:
                    continue
                if a_value(partner, j, i, space) != a:
                    raise AssertionError("toggle changed the pivot value")
                lo = lower.flat_face(r)
                hi = upper.flat_face(r)
                if lo in pairs:
                    raise AssertionError("double matching detected")
                pairs[lo] = hi
                matched.add(lower)
                matched.add(upper)
                tag["matched"] += 2
            tags[(j, i)] = tag

    field = DiscreteVectorField(
        complex=space.as_complex(),
        pairs=pairs,
        diagnostics={"step_tags": tags},
    )
    return field


@dataclass
class MonotonicityReport:
    segments_checked: int
    violations: list[tuple[frozenset[int], frozenset[int], frozenset[int]]]

    @property
    def ok(self) -> bool:
        return not self.violations


def matching_step(
    field: DiscreteVectorField, lo: frozenset[int], space: ConfigurationSpace
) -> tuple[int, int]:
    """The step (j, i) at which the pair with lower face ``lo`` was made:
    the slot and color of the toggled pivot."""
    lower = space.label_for_face(lo)
    upper = space.label_for_face(field.pairs[lo])
    for j in range(space.params.r):
        diff = upper.parts[j] - lower.parts[j]
        if diff:
            (a,) = diff
            return (j + 1, space.coloring.color_of(a) + 1)
    raise AssertionError("degenerate pair")


def pi_monotonicity(
    field: DiscreteVectorField, space: ConfigurationSpace
) -> MonotonicityReport:
    """Check the lexicographic invariant along every continuable two-step
    gradient segment alpha0 -> beta0 -> alpha1 (both alphas matched upward):
    the pivot profile weakly decreases, and on profile ties the matching
    step of alpha1 is strictly earlier than that of alpha0.

    The composite key rules out closed gradient paths: any cycle would have
    a constant profile, forcing the matching step to decrease forever.  The
    profile alone is not strictly monotone; removing a smaller color from
    the slot just extended produces a segment with an unchanged profile.
    """
    checked = 0
    violations = []
    for lo, hi in field.pairs.items():
        pi0 = pi_profile(space.label_for_face(lo), space)
        key0 = (pi0, matching_step(field, lo, space))
        for v in hi:
            cand = hi - {v}
            if cand == lo or not cand:
                continue
            if cand not in field.pairs:
                # the path terminates at a critical or downward-matched
                # face; only continuable segments carry the invariant
                continue
            pi1 = pi_profile(space.label_for_face(cand), space)
            key1 = (pi1, matching_step(field, cand, space))
            checked += 1
            if not key1 < key0:
                violations.append((lo, hi, cand))
    return MonotonicityReport(checked, violations)


@dataclass
class ConnectivityCertificate:
    n_min_dim: int
    connectivity: int
    critical: list[frozenset[int]]
    wedge_of_spheres: bool

    def as_dict(self) -> dict:
        return {
            "min_critical_dim": self.n_min_dim,
            "connectivity": self.connectivity,
            "critical_cells": sorted(sorted(f) for f in self.critical),
            "wedge_of_spheres": self.wedge_of_spheres,
        }


def connectivity_certificate(
    field: DiscreteVectorField,
) -> ConnectivityCertificate:
    """Connectivity bound from the critical cells: with a single critical
    0-cell and every other critical cell of dimension >= N, the complex is
    (N-1)-connected; if all non-basepoint critical cells have dimension
    exactly N the homotopy type is a wedge of N-spheres."""
    rep = check_dvf(field)
    if not rep.ok:
        raise ValueError("invalid field: %s" % rep.violations[:3])
    acy = acyclicity(field)
    if not acy.acyclic:
        raise ValueError("field is not acyclic")
    crit = field.critical()
    zero_cells = [f for f in crit if len(f) == 1]
    if len(zero_cells) != 1:
        raise ValueError(
            "certificate needs exactly one critical 0-cell, got %d"
            % len(zero_cells)
        )
    others = [f for f in crit if len(f) > 1 and f]
    dims = sorted(len(f) - 1 for f in others)
    if not dims:
        raise ValueError("no critical cells above the basepoint")
    n = dims[0]
    return ConnectivityCertificate(
        n_min_dim=n,
        connectivity=n - 1,
        critical=crit,
        wedge_of_spheres=all(d == n for d in dims),
    )


def critical_labels(
    field: DiscreteVectorField, space: ConfigurationSpace
) -> list[ConfigSimplex]:
    return [
        space.label_for_face(f) for f in field.critical() if f
    ]


def saturation_check(
    field: DiscreteVectorField, space: ConfigurationSpace
) -> bool:
    """Every critical cell above the basepoint must be saturated."""
    for lab in critical_labels(field, space):
        if lab.dim == 0:
            continue
        if not classify(lab, space.params, space.coloring).saturated:
            return False
    return True
