"""The balanced configuration space of r-tuples of disjoint rainbow
simplices with size caps, and the classification of its simplices.

A simplex is labeled (A_1, ..., A_r; B) where the A_i are pairwise disjoint
rainbow subsets of the colored ground set [m] and B is the remainder.  Labels
are ordered tuples: the slots matter for the matching machinery and for the
slot-permuting group action; the cap on the number of size-(k+1) slots counts
slots unordered.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import SimplicialComplex, pair_relabeling


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, n + 1):
        if p * p > n and n > 1:
            return True  # n itself is prime
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


@dataclass(frozen=True)
class BalancedParams:
    """Derived parameters of the balanced regime for a prime power r and
    dimension d:  k = ceil((r-1)d / r),  s = (r-1)d - r(k-1),
    m = (2r-1)(k+1).  Always 0 < s <= r and r(k-1) + s = (r-1)d."""

    r: int
    d: int
    k: int
    s: int
    m: int


def balanced_params(r: int, d: int) -> BalancedParams:
    if not _is_prime_power(r):
        raise ValueError("r = %d is not a prime power" % r)
    if d < 1:
        raise ValueError("d must be >= 1")
    k = -((-(r - 1) * d) // r)  # ceil((r-1)d / r)
    s = (r - 1) * d - r * (k - 1)
    m = (2 * r - 1) * (k + 1)
    assert r * (k - 1) + s == (r - 1) * d
    assert 0 < s <= r
    return BalancedParams(r=r, d=d, k=k, s=s, m=m)


@dataclass(frozen=True)
class Coloring:
    """Partition of [m] into color classes; elements of each class carry
    within-class positions 1..|class| (their order in the class tuple)."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = [v for cls in self.classes for v in cls]
        if len(flat) != len(set(flat)):
            raise ValueError("color classes must be disjoint")
        if sorted(flat) != list(range(len(flat))):
            raise ValueError("color classes must cover 0..m-1")

    @property
    def m(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def n_colors(self) -> int:
        return len(self.classes)

    def color_of(self, v: int) -> int:
        for c, cls in enumerate(self.classes):
            if v in cls:
                return c
        raise KeyError(v)

    def position(self, v: int) -> int:
        cls = self.classes[self.color_of(v)]
        return cls.index(v) + 1


def standard_coloring(params: BalancedParams) -> Coloring:
    """Color-major layout: k+1 classes of 2r-1 consecutive vertices each."""
    t = 2 * params.r - 1
    return Coloring(
        tuple(
            tuple(range(c * t, (c + 1) * t)) for c in range(params.k + 1)
        )
    )


@dataclass(frozen=True)
class ConfigSimplex:
    """Label (A_1, ..., A_r; B): ordered tuple of disjoint rainbow sets;
    the remainder B is implied."""

    parts: tuple[frozenset[int], ...]
    m: int

    def remainder(self) -> frozenset[int]:
        used = frozenset().union(*self.parts) if self.parts else frozenset()
        return frozenset(range(self.m)) - used

    @property
    def dim(self) -> int:
        return sum(len(a) for a in self.parts) - 1

    def flat_face(self, r: int) -> frozenset[int]:
        """Encode on the ground set of pairs (vertex, slot), flattened as
        vertex * r + slot."""
        return frozenset(v * r + i for i, a in enumerate(self.parts) for v in a)


def label_is_valid(
    sigma: ConfigSimplex, params: BalancedParams, coloring: Coloring
) -> bool:
    r, k, s = params.r, params.k, params.s
    if len(sigma.parts) != r or sigma.m != params.m:
        return False
    seen: set[int] = set()
    big = 0
    for a in sigma.parts:
        if seen & a:
            return False
        seen |= a
        if len(a) > k + 1:
            return False
        if len(a) == k + 1:
            big += 1
        colors = [coloring.color_of(v) for v in a]
        if len(colors) != len(set(colors)):
            return False
    if big > s:
        return False
    return bool(seen)  # B != [m]


@dataclass(frozen=True)
class SimplexFlags:
    ci_full: tuple[bool, ...]
    k1_full: bool
    saturated: bool


def classify(
    sigma: ConfigSimplex, params: BalancedParams, coloring: Coloring
) -> SimplexFlags:
    """C_i-fullness (every slot holds a vertex of color i), (k+1)-fullness
    (the maximal allowed number s of size-(k+1) slots is attained) and
    saturation ((k+1)-full with every slot of size >= k)."""
    ci = []
    for c in range(coloring.n_colors):
        cls = set(coloring.classes[c])
        ci.append(all(a & cls for a in sigma.parts))
    big = sum(1 for a in sigma.parts if len(a) == params.k + 1)
    k1_full = big == params.s
    saturated = k1_full and all(len(a) >= params.k for a in sigma.parts)
    return SimplexFlags(tuple(ci), k1_full, saturated)


def slot_action(perm: tuple[int, ...], sigma: ConfigSimplex) -> ConfigSimplex:
    """Permute the slots: slot i of the result is slot perm[i] of sigma."""
    if sorted(perm) != list(range(len(sigma.parts))):
        raise ValueError("not a permutation of the slots")
    return ConfigSimplex(tuple(sigma.parts[p] for p in perm), sigma.m)


class ConfigurationSpace:
    """The balanced configuration space, materialized at desk scale.

    Holds every valid label, the face <-> label correspondence and the flat
    simplicial complex on the ground set of (vertex, slot) pairs.
    """

    def __init__(self, params: BalancedParams, coloring: Coloring):
        if coloring.n_colors != params.k + 1 or any(
            len(c) != 2 * params.r - 1 for c in coloring.classes
        ):
            raise ValueError(
                "coloring must have k+1 classes of size 2r-1 each"
            )
        self.params = params
        self.coloring = coloring
        self.labels: list[ConfigSimplex] = _enumerate_labels(params, coloring)
        self._by_face = {
            lab.flat_face(params.r): lab for lab in self.labels
        }

    def label_for_face(self, face: frozenset[int]) -> ConfigSimplex:
        return self._by_face[face]

    def face_for_label(self, lab: ConfigSimplex) -> frozenset[int]:
        return lab.flat_face(self.params.r)

    def contains(self, sigma: ConfigSimplex) -> bool:
        return sigma.flat_face(self.params.r) in self._by_face

    def as_complex(self) -> SimplicialComplex:
        r, m = self.params.r, self.params.m
        lab = pair_relabeling((v, i) for v in range(m) for i in range(r))
        # (v, i) flattens to v * r + i; pair_relabeling agrees because the
        # pair set is the full grid
        assert all(lab[(v, i)] == v * r + i for v in range(m) for i in range(r))
        facets = [
            self.face_for_label(x)
            for x in self.labels
            if classify(x, self.params, self.coloring).saturated
        ]
        return SimplicialComplex(range(m * r), facets)

    def top_dim(self) -> int:
        p = self.params
        return p.r * p.k + p.s - 1


def _enumerate_labels(
    params: BalancedParams, coloring: Coloring
) -> list[ConfigSimplex]:
    """Enumerate all valid labels by assigning, color class by color class,
    an injective partial map (class elements -> slots)."""
    r, k, s, m = params.r, params.k, params.s, params.m
    per_class_options: list[list[tuple[tuple[int, int], ...]]] = []
    for cls in coloring.classes:
        opts = []
        for n_used in range(min(len(cls), r) + 1):
            for chosen in itertools.combinations(cls, n_used):
                for slots in itertools.permutations(range(r), n_used):
                    opts.append(tuple(zip(chosen, slots)))
        per_class_options.append(opts)

    labels = []
    parts_template = [set() for _ in range(r)]

    def rec(ci: int):
        if ci == len(per_class_options):
            sizes = [len(p) for p in parts_template]
            if any(x > k + 1 for x in sizes):
                return
            if sum(1 for x in sizes if x == k + 1) > s:
                return
            if sum(sizes) == 0:
                return  # B = [m] is not a label
            labels.append(
                ConfigSimplex(
                    tuple(frozenset(p) for p in parts_template), m
                )
            )
            return
        for opt in per_class_options[ci]:
            for v, slot in opt:
                parts_template[slot].add(v)
            # prune: slot size can only grow
            if all(len(p) <= k + 1 for p in parts_template):
                rec(ci + 1)
            for v, slot in opt:
                parts_template[slot].discard(v)

    rec(0)
    labels.sort(key=lambda x: (x.dim, tuple(sorted(x.flat_face(r)))))
    return labels


def build_config_space(
    params: BalancedParams, coloring: Coloring | None = None
) -> ConfigurationSpace:
    if coloring is None:
        coloring = standard_coloring(params)
    return ConfigurationSpace(params, coloring)


def brute_force_label_count(params: BalancedParams, coloring: Coloring) -> int:
    """Independent direct enumeration for r = 2: iterate over all pairs of
    disjoint rainbow subsets and count valid labels.  Used as an oracle
    against the production enumerator."""
    if params.r != 2:
        raise ValueError("the brute-force oracle is implemented for r = 2")
    k, s, m = params.k, params.s, params.m
    rainbow: list[frozenset[int]] = []
    classes = [list(c) for c in coloring.classes]
    for choice in itertools.product(*[[None] + c for c in classes]):
        rainbow.append(frozenset(v for v in choice if v is not None))
    count = 0
    for a1 in rainbow:
        for a2 in rainbow:
            if a1 & a2 or (not a1 and not a2):
                continue
            if len(a1) > k + 1 or len(a2) > k + 1:
                continue
            if sum(1 for a in (a1, a2) if len(a) == k + 1) > s:
                continue
            count += 1
    return count
