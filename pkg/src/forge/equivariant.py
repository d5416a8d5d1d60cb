"""Group actions on complexes, fixed subcomplexes and orbit types, degrees
of simplicial maps between oriented pseudomanifolds, equivariant isomorphism
and map enumeration, and the parity congruence check at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .complexes import (
    SimplicialComplex,
    barycentric_subdivision,
    join,
    join_relabeling,
    simplex_boundary,
    standard_multi_chessboard,
)
from .homology import pseudomanifold_check


@dataclass
class PermAction:
    """A finite group acting by vertex permutations of a complex.  Elements
    are named; ``perms`` maps each name to a vertex -> vertex dict.  The
    identity must be present under the name 'e'."""

    complex: SimplicialComplex
    perms: dict[str, dict[int, int]]

    def __post_init__(self):
        verts = set(self.complex.ground_set)
        if "e" not in self.perms:
            raise ValueError("action must contain the identity element 'e'")
        for name, p in self.perms.items():
            if set(p) != verts or set(p.values()) != verts:
                raise ValueError("element %r is not a vertex permutation" % name)
        for name, p in self.perms.items():
            for f in self.complex.facets:
                if not self.complex.has_face({p[v] for v in f}):
                    raise ValueError("element %r is not simplicial" % name)

    def elements(self) -> list[str]:
        return sorted(self.perms)

    def apply(self, name: str, face) -> frozenset[int]:
        p = self.perms[name]
        return frozenset(p[v] for v in face)

    def compose(self, a: str, b: str) -> dict[int, int]:
        pa, pb = self.perms[a], self.perms[b]
        return {v: pa[pb[v]] for v in pb}

    def element_name(self, perm: dict[int, int]) -> str:
        for name, p in self.perms.items():
            if p == perm:
                return name
        raise KeyError("permutation is not a group element")

    def check_homomorphism(self) -> bool:
        """Closure under composition (enough for a finite permutation set
        containing the identity to be a group)."""
        try:
            for a in self.perms:
                for b in self.perms:
                    self.element_name(self.compose(a, b))
        except KeyError:
            return False
        return True

    def vertex_orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        orbits = []
        for v in self.complex.ground_set:
            if v in seen:
                continue
            orb = sorted({p[v] for p in self.perms.values()})
            orbits.append(orb)
            seen.update(orb)
        return orbits

    def vertex_stabilizer(self, v: int) -> list[str]:
        return [name for name, p in self.perms.items() if p[v] == v]

    def face_stabilizer(self, f) -> list[str]:
        f = frozenset(f)
        return [name for name in self.perms if self.apply(name, f) == f]


KLEIN_ROWS = {
    "e": (0, 1, 2, 3),
    "a": (1, 0, 3, 2),
    "b": (2, 3, 0, 1),
    "c": (3, 2, 1, 0),
}


def klein_actions() -> tuple[PermAction, PermAction]:
    """The Klein four-group acting on the multiple chessboard sphere (by
    permuting the four rows of the 4 x 2 board) and on the boundary of the
    3-simplex (by the three double transpositions of its four vertices).
    Row i, column j of the board is vertex 2 * i + j."""
    board = standard_multi_chessboard()
    board_perms = {
        name: {
            2 * i + j: 2 * perm[i] + j for i in range(4) for j in range(2)
        }
        for name, perm in KLEIN_ROWS.items()
    }
    tetra = simplex_boundary(range(4))
    tetra_perms = {
        name: {i: perm[i] for i in range(4)} for name, perm in KLEIN_ROWS.items()
    }
    return PermAction(board, board_perms), PermAction(tetra, tetra_perms)


def octahedral_sphere() -> tuple[SimplicialComplex, PermAction]:
    """The regular octahedron S0 * S0 * S0 with the Klein rotation action:
    each generator is the 180-degree rotation about one coordinate axis.
    Vertices 0/1 = +-x, 2/3 = +-y, 4/5 = +-z."""
    facets = [
        {x, y, z} for x in (0, 1) for y in (2, 3) for z in (4, 5)
    ]
    K = SimplicialComplex(range(6), facets)

    def rot(fixed: int) -> dict[int, int]:
        p = {}
        for axis in range(3):
            lo, hi = 2 * axis, 2 * axis + 1
            if axis == fixed:
                p[lo], p[hi] = lo, hi
            else:
                p[lo], p[hi] = hi, lo
        return p

    perms = {
        "e": {v: v for v in range(6)},
        "a": rot(0),
        "b": rot(1),
        "c": rot(2),
    }
    return K, PermAction(K, perms)


def octahedral_cube_model() -> tuple[SimplicialComplex, PermAction]:
    """The 8-vertex triangulation of the octahedral Klein sphere: the cube
    boundary triangulated through the inscribed-tetrahedron diagonals.

    Vertex i (i < 4) is the i-th tetrahedron corner; vertex i + 4 is its
    antipode.  Triangles are {i, j, k + 4} for distinct i, j, k.  The Klein
    group acts through the double transpositions of the tetrahedron labels,
    extended antipodally; geometrically these are the 180-degree rotations
    about the coordinate axes."""
    facets = [
        {i, j, k + 4}
        for i, j in itertools.combinations(range(4), 2)
        for k in range(4)
        if k not in (i, j)
    ]
    K = SimplicialComplex(range(8), facets)
    perms = {
        name: {
            **{i: perm[i] for i in range(4)},
            **{i + 4: perm[i] + 4 for i in range(4)},
        }
        for name, perm in KLEIN_ROWS.items()
    }
    return K, PermAction(K, perms)


def fixed_subcomplex(action: PermAction, subgroup: list[str]) -> SimplicialComplex:
    """Faces pointwise fixed by every element of the subgroup.  This is the
    combinatorial fixed complex; geometric fixed-point sets of the models are
    generally larger and are out of scope."""
    fixed_verts = [
        v
        for v in action.complex.ground_set
        if all(action.perms[g][v] == v for g in subgroup)
    ]
    fv = set(fixed_verts)
    faces = [f & fv for f in action.complex.facets]
    return SimplicialComplex(action.complex.ground_set, faces)


@dataclass
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: dict[int, int]

    def image(self, face) -> frozenset[int]:
        return frozenset(self.vertex_map[v] for v in face)

    def is_simplicial(self) -> bool:
        return all(self.target.has_face(self.image(f)) for f in self.source.facets)

    def is_collapsing(self) -> bool:
        return any(len(self.image(f)) < len(f) for f in self.source.facets)

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other (other's target must be self's source)."""
        vm = {v: self.vertex_map[w] for v, w in other.vertex_map.items()}
        return SimplicialMap(other.source, self.target, vm)

    def is_equivariant(self, act_src: PermAction, act_tgt: PermAction) -> bool:
        for g in act_src.perms:
            ps, pt = act_src.perms[g], act_tgt.perms[g]
            for v in self.source.ground_set:
                if self.vertex_map[ps[v]] != pt[self.vertex_map[v]]:
                    return False
        return True


def _perm_sign(seq: list[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def degree(f: SimplicialMap) -> int:
    """Degree of a simplicial map between closed oriented pseudomanifolds of
    equal dimension: the signed count of source facets mapping bijectively
    onto a target facet.  Computed over every target facet and asserted
    independent of the choice."""
    repK = pseudomanifold_check(f.source)
    repL = pseudomanifold_check(f.target)
    if not (repK.is_closed_oriented and repL.is_closed_oriented):
        raise ValueError("degree needs closed oriented pseudomanifolds")
    if f.source.dim != f.target.dim:
        raise ValueError("degree needs equal dimensions")
    orK, orL = repK.orientation, repL.orientation
    per_target = {tau: 0 for tau in orL}
    for F, sF in orK.items():
        img = [f.vertex_map[v] for v in F]
        if len(set(img)) != len(img):
            continue
        tau = tuple(sorted(img))
        if tau not in per_target:
            continue
        rank = {v: k for k, v in enumerate(tau)}
        per_target[tau] += sF * orL[tau] * _perm_sign([rank[v] for v in img])
    values = set(per_target.values())
    if len(values) != 1:
        raise AssertionError("degree depends on the target facet: %s" % per_target)
    return values.pop()


def lifted_action(action: PermAction) -> tuple[SimplicialComplex, PermAction, list]:
    """Barycentric subdivision of the acted-on complex with the canonically
    lifted action (a group element sends the barycenter of a face to the
    barycenter of its image)."""
    sd, table = barycentric_subdivision(action.complex)
    index = {frozenset(f): i for i, f in enumerate(table)}
    perms = {
        name: {
            i: index[action.apply(name, f)] for i, f in enumerate(table)
        }
        for name in action.perms
    }
    return sd, PermAction(sd, perms), table


def equivariant_iso_search(
    K: SimplicialComplex,
    L: SimplicialComplex,
    act_K: PermAction,
    act_L: PermAction,
) -> SimplicialMap | None:
    """Search for a vertex bijection K -> L that is simplicial in both
    directions and commutes with the actions; None after exhausting the
    search space."""
    if len(K.ground_set) != len(L.ground_set):
        return None
    if set(act_K.perms) != set(act_L.perms):
        raise ValueError("actions must share the same group element names")
    orbits = act_K.vertex_orbits()
    reps = [orb[0] for orb in orbits]
    facetsL = {tuple(sorted(f)) for f in L.facets}

    deg_K = _vertex_facet_degrees(K)
    deg_L = _vertex_facet_degrees(L)

    def candidates(rep: int) -> list[int]:
        stab = set(act_K.vertex_stabilizer(rep))
        out = []
        for u in L.ground_set:
            if set(act_L.vertex_stabilizer(u)) >= stab and deg_K[rep] == deg_L[u]:
                out.append(u)
        return out

    def try_assignment(choice: list[int]) -> SimplicialMap | None:
        vm: dict[int, int] = {}
        for rep, u in zip(reps, choice):
            for g in act_K.perms:
                v2 = act_K.perms[g][rep]
                u2 = act_L.perms[g][u]
                if v2 in vm and vm[v2] != u2:
                    return None
                vm[v2] = u2
        if len(vm) != len(K.ground_set) or len(set(vm.values())) != len(vm):
            return None
        f = SimplicialMap(K, L, vm)
        if not f.is_simplicial():
            return None
        if {tuple(sorted(f.image(F))) for F in K.facets} != facetsL:
            return None
        return f

    for choice in itertools.product(*[candidates(r) for r in reps]):
        f = try_assignment(list(choice))
        if f is not None:
            return f
    return None


def _vertex_facet_degrees(K: SimplicialComplex) -> dict[int, int]:
    deg = {v: 0 for v in K.ground_set}
    for f in K.facets:
        for v in f:
            deg[v] += 1
    return deg


@dataclass
class EquivariantMapRecord:
    map: SimplicialMap
    degree: int
    collapsing: bool


def enumerate_equivariant_maps(
    K: SimplicialComplex,
    L: SimplicialComplex,
    act_K: PermAction,
    act_L: PermAction,
    subdivision_level: int = 0,
    max_candidates: int = 10**7,
) -> list[EquivariantMapRecord]:
    """All vertex maps K -> L (with K barycentrically subdivided once at
    level 1, the action lifted canonically) that commute with the actions and
    are simplicial.  Each map is returned with its degree and a collapse tag.
    Raises ResourceWarning when the raw search space exceeds the bound."""
    if subdivision_level not in (0, 1):
        raise ValueError("subdivision_level must be 0 or 1")
    if subdivision_level == 1:
        K, act_K, _ = lifted_action(act_K)

    orbits = act_K.vertex_orbits()
    reps = [orb[0] for orb in orbits]
    cand_lists = []
    for rep in reps:
        stab = act_K.vertex_stabilizer(rep)
        cands = [
            u
            for u in L.ground_set
            if all(act_L.perms[g][u] == u for g in stab)
        ]
        cand_lists.append(cands)

    total = 1
    for c in cand_lists:
        total *= len(c)
        if total > max_candidates:
            raise ResourceWarning(
                "equivariant search space exceeds %d candidates" % max_candidates
            )

    out: list[EquivariantMapRecord] = []
    for choice in itertools.product(*cand_lists):
        vm: dict[int, int] = {}
        ok = True
        for rep, u in zip(reps, choice):
            for g in act_K.perms:
                v2 = act_K.perms[g][rep]
                u2 = act_L.perms[g][u]
                if v2 in vm and vm[v2] != u2:
                    ok = False
                    break
                vm[v2] = u2
            if not ok:
                break
        if not ok or len(vm) != len(K.ground_set):
            continue
        f = SimplicialMap(K, L, vm)
        if not f.is_simplicial():
            continue
        out.append(
            EquivariantMapRecord(
                map=f, degree=degree(f), collapsing=f.is_collapsing()
            )
        )
    out.sort(key=lambda rec: sorted(rec.map.vertex_map.items()))
    return out


@dataclass
class OrbitTypeReport:
    stabilizers: list[tuple[tuple[str, ...], int]]  # (subgroup elements, index)
    parity_modulus: int


def orbit_type_report(action: PermAction) -> OrbitTypeReport:
    """Setwise stabilizers occurring on nonempty faces, with their indices
    |G| / |H|; the parity congruence for equivariant map degrees holds modulo
    the GCD of the indices."""
    n = len(action.perms)
    stabs: set[tuple[str, ...]] = set()
    for f in action.complex.faces():
        if not f:
            continue
        stabs.add(tuple(sorted(action.face_stabilizer(f))))
    entries = []
    modulus = 0
    for st in sorted(stabs):
        idx = n // len(st)
        entries.append((st, idx))
        modulus = gcd(modulus, idx)
    return OrbitTypeReport(entries, modulus)


def join_of_maps(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """The join of two simplicial maps, on the canonically relabeled join
    complexes."""
    src = join(f.source, g.source)
    tgt = join(f.target, g.target)
    src_lab = join_relabeling(f.source, g.source)
    tgt_lab = join_relabeling(f.target, g.target)
    vm = {}
    for v in f.source.ground_set:
        vm[src_lab[(v, 0)]] = tgt_lab[(f.vertex_map[v], 0)]
    for w in g.source.ground_set:
        vm[src_lab[(w, 1)]] = tgt_lab[(g.vertex_map[w], 1)]
    return SimplicialMap(src, tgt, vm)


def reference_sphere_map() -> SimplicialMap:
    """The reference composite: the equivariant isomorphism from the multiple
    chessboard sphere to the cube-boundary model, followed by a degree +-1
    equivariant collapse onto the tetrahedron boundary.  The collapse is
    picked deterministically from the enumeration (the antipodal fold
    corner/anticorner -> same label has degree 3 and is skipped)."""
    board_act, tetra_act = klein_actions()
    cube, cube_act = octahedral_cube_model()
    iso = equivariant_iso_search(board_act.complex, cube, board_act, cube_act)
    if iso is None:
        raise AssertionError("no equivariant isomorphism onto the cube model")
    for rec in enumerate_equivariant_maps(
        cube, tetra_act.complex, cube_act, tetra_act
    ):
        if abs(rec.degree) == 1:
            return rec.map.compose(iso)
    raise AssertionError("no degree +-1 collapse of the cube model exists")
