"""Finite abstract simplicial complexes and the combinatorial constructions
used throughout the workbench: multipartite (rainbow) complexes, chessboard
and multiple chessboard complexes, joins, deleted joins, Alexander duals,
Bier spheres, skeleta and barycentric subdivision.

Vertices are non-negative integers.  A complex is stored by its facets
(inclusion-maximal faces); the full face set is materialized lazily by
downward closure.  Every non-void complex contains the empty face.  The void
complex (no faces at all, not even the empty one) is distinct and only arises
from Alexander-dual edge cases.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Mapping

Face = frozenset

# Guard for lazy full-face materialization (desk scale).
MAX_FACES = 10**7


class SimplicialComplex:
    """Abstract simplicial complex on an integer-labeled ground set.

    The ground set is an explicit ordered list of vertex ids; vertices not
    appearing in any facet are still part of the ground set (this matters for
    Alexander duality).
    """

    def __init__(self, ground_set: Iterable[int], facets: Iterable[Iterable[int]]):
        self.ground_set = tuple(sorted(set(ground_set)))
        gs = set(self.ground_set)
        fset = {frozenset(f) for f in facets}
        for f in fset:
            if not f <= gs:
                raise ValueError("facet %s not contained in ground set" % sorted(f))
        # Drop non-maximal entries so `facets` is really the facet list.
        # Containment needs strictly larger cardinality, so compare each
        # candidate only against the strictly bigger ones.
        by_size: dict[int, list[Face]] = {}
        for f in fset:
            by_size.setdefault(len(f), []).append(f)
        maximal: list[Face] = []
        bigger: list[Face] = []
        for n in sorted(by_size, reverse=True):
            for f in by_size[n]:
                if not any(f < g for g in bigger):
                    maximal.append(f)
            bigger.extend(by_size[n])
        self.facets = frozenset(maximal)
        self._faces: frozenset[Face] | None = None

    # ------------------------------------------------------------------
    # basic queries

    @property
    def is_void(self) -> bool:
        """True for the void complex, which has no faces at all."""
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension: max |F| - 1 over facets; -1 for {empty}, -2 for void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> frozenset[Face]:
        """All faces, including the empty face (unless void).  Materialized
        lazily by downward closure of the facets; guarded at desk scale."""
        if self._faces is None:
            est = sum(2 ** len(f) for f in self.facets)
            if est > 8 * MAX_FACES:
                raise ResourceWarning(
                    "face enumeration would touch ~%d subsets (> limit)" % est
                )
            out: set[Face] = set()
            for f in self.facets:
                fl = sorted(f)
                for k in range(len(fl) + 1):
                    out.update(frozenset(c) for c in itertools.combinations(fl, k))
            if len(out) > MAX_FACES:
                raise ResourceWarning("complex has %d faces (> limit)" % len(out))
            self._faces = frozenset(out)
        return self._faces

    def has_face(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def n_vertices(self) -> int:
        return len({v for f in self.facets for v in f})

    def faces_of_dim(self, p: int) -> list[tuple[int, ...]]:
        """Canonically ordered list of p-faces (as sorted vertex tuples)."""
        return sorted(tuple(sorted(f)) for f in self.faces() if len(f) == p + 1)

    def f_vector(self) -> list[int]:
        """(f_{-1}, f_0, ..., f_dim); f_{-1} counts the empty face."""
        if self.is_void:
            return []
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[len(f)] += 1
        return counts

    def euler_characteristic(self, reduced: bool = False) -> int:
        fv = self.f_vector()
        chi = sum((-1) ** k * fk for k, fk in enumerate(fv[1:]))
        return chi - 1 if reduced else chi

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    # ------------------------------------------------------------------
    # structural helpers

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        """Rename vertices by an injective map (applied to the ground set)."""
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("relabeling map must be injective")
        return SimplicialComplex(
            (mapping[v] for v in self.ground_set),
            ({mapping[v] for v in f} for f in self.facets),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.ground_set == other.ground_set
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.ground_set, self.facets))

    def __repr__(self):
        return "SimplicialComplex(|V|=%d, %d facets, dim=%d)" % (
            len(self.ground_set),
            len(self.facets),
            self.dim,
        )

    # ------------------------------------------------------------------
    # interchange format

    def to_json(self) -> str:
        return json.dumps(
            {
                "ground_set": list(self.ground_set),
                "facets": sorted(sorted(f) for f in self.facets),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        data = json.loads(text)
        return cls(data["ground_set"], data["facets"])


def from_faces(ground_set: Iterable[int], faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from an arbitrary face family (closure is taken)."""
    faces = [frozenset(f) for f in faces]
    return SimplicialComplex(ground_set, faces)


# ----------------------------------------------------------------------
# canonical relabeling for joins and deleted joins
#
# New vertices are pairs (original id, slot index); the pairs are sorted
# lexicographically and flattened to consecutive integers.  The scheme is part
# of the file format, so isomorphism tests can be label-exact.


def pair_relabeling(pairs: Iterable[tuple[int, int]]) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(sorted(set(pairs)))}


def full_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    vs = sorted(set(vertices))
    return SimplicialComplex(vs, [vs])


def simplex_boundary(vertices: Iterable[int]) -> SimplicialComplex:
    """Boundary of the simplex on the given vertex set."""
    vs = sorted(set(vertices))
    return SimplicialComplex(vs, itertools.combinations(vs, len(vs) - 1))


def points(vertices: Iterable[int]) -> SimplicialComplex:
    vs = sorted(set(vertices))
    return SimplicialComplex(vs, [[v] for v in vs])


# ----------------------------------------------------------------------
# constructors


def multipartite_complex(sizes: list[int]) -> SimplicialComplex:
    """Complete multipartite complex [t0] * [t1] * ... * [tk].

    Vertices are numbered color-major; the faces are exactly the rainbow sets
    (at most one vertex per color class).
    """
    if not sizes:
        raise ValueError("size list must be non-empty")
    if any(t <= 0 for t in sizes):
        raise ValueError("all class sizes must be positive")
    classes = []
    start = 0
    for t in sizes:
        classes.append(list(range(start, start + t)))
        start += t
    facets = [list(choice) for choice in itertools.product(*classes)]
    return SimplicialComplex(range(start), facets)


def multipartite_classes(sizes: list[int]) -> list[list[int]]:
    """Color classes matching the vertex numbering of multipartite_complex."""
    out, start = [], 0
    for t in sizes:
        out.append(list(range(start, start + t)))
        start += t
    return out


def chessboard_complex(m: int, n: int) -> SimplicialComplex:
    """Non-taking rook placements on an m x n board.

    Cell (i, j) has vertex id i * n + j (row-major).
    """
    if m < 1 or n < 1:
        raise ValueError("board dimensions must be >= 1")
    return multi_chessboard_complex(m, n, [1] * m, [1] * n)


def multi_chessboard_complex(
    rows: int, cols: int, row_caps: list[int], col_caps: list[int]
) -> SimplicialComplex:
    """Rook placements with at most row_caps[i] rooks in row i and
    col_caps[j] rooks in column j.  Cell (i, j) is vertex i * cols + j."""
    if rows < 1 or cols < 1:
        raise ValueError("board dimensions must be >= 1")
    if len(row_caps) != rows or len(col_caps) != cols:
        raise ValueError("cap vector lengths must match the board")
    if any(c < 1 for c in row_caps) or any(c < 1 for c in col_caps):
        raise ValueError("caps must be >= 1")

    cells = [(i, j) for i in range(rows) for j in range(cols)]

    def ok(placement: set[tuple[int, int]]) -> bool:
        for i in range(rows):
            if sum(1 for (r, _) in placement if r == i) > row_caps[i]:
                return False
        for j in range(cols):
            if sum(1 for (_, c) in placement if c == j) > col_caps[j]:
                return False
        return True

    faces: list[set[tuple[int, int]]] = [set()]
    # Grow faces cell by cell; caps are monotone so DFS over subsets works.
    def grow(start: int, cur: set[tuple[int, int]]):
        for idx in range(start, len(cells)):
            cand = cur | {cells[idx]}
            if ok(cand):
                faces.append(cand)
                grow(idx + 1, cand)

    grow(0, set())
    face_set = {frozenset(f) for f in faces}
    facets = [
        f
        for f in face_set
        if not any(f | {c} in face_set for c in cells if c not in f)
    ]
    to_id = lambda c: c[0] * cols + c[1]
    return SimplicialComplex(
        range(rows * cols), [{to_id(c) for c in f} for f in facets]
    )


def standard_multi_chessboard() -> SimplicialComplex:
    """The 4-row, 2-column board with all row caps 1 and column caps (2, 1):
    a triangulated 2-sphere on 8 vertices."""
    return multi_chessboard_complex(4, 2, [1, 1, 1, 1], [2, 1])


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes.  Vertices are relabeled via the canonical pair
    scheme: K-vertex v becomes (v, 0), L-vertex w becomes (w, 1)."""
    pairs = [(v, 0) for v in K.ground_set] + [(w, 1) for w in L.ground_set]
    lab = pair_relabeling(pairs)
    if K.is_void or L.is_void:
        raise ValueError("join of a void complex is undefined")
    facets = [
        {lab[(v, 0)] for v in f} | {lab[(w, 1)] for w in g}
        for f in K.facets
        for g in L.facets
    ]
    return SimplicialComplex(lab.values(), facets)


def join_relabeling(K: SimplicialComplex, L: SimplicialComplex) -> dict[tuple[int, int], int]:
    """The vertex relabeling used by join(K, L)."""
    pairs = [(v, 0) for v in K.ground_set] + [(w, 1) for w in L.ground_set]
    return pair_relabeling(pairs)


def deleted_join(K: SimplicialComplex, r: int) -> SimplicialComplex:
    """r-fold deleted join: faces are r-tuples of pairwise disjoint faces of
    K, encoded on the ground set of pairs (vertex, slot) flattened
    lexicographically (vertex id major)."""
    if r < 2:
        raise ValueError("deleted join needs r >= 2")
    kfaces = K.faces()
    verts = list(K.ground_set)
    lab = pair_relabeling((v, i) for v in verts for i in range(r))

    facets: list[frozenset[int]] = []
    slots: list[set[int]] = [set() for _ in range(r)]
    assign: list[int] = [-1] * len(verts)  # slot per vertex, -1 = unused

    def leaf_is_facet() -> bool:
        for idx, v in enumerate(verts):
            if assign[idx] == -1:
                for s in slots:
                    if frozenset(s | {v}) in kfaces:
                        return False
        return True

    def rec(idx: int):
        if idx == len(verts):
            if leaf_is_facet():
                facets.append(
                    frozenset(
                        lab[(verts[i], assign[i])]
                        for i in range(len(verts))
                        if assign[i] != -1
                    )
                )
            return
        v = verts[idx]
        rec(idx + 1)  # leave v unused
        for slot in range(r):
            cand = slots[slot] | {v}
            if frozenset(cand) in kfaces:
                slots[slot].add(v)
                assign[idx] = slot
                rec(idx + 1)
                slots[slot].discard(v)
                assign[idx] = -1

    rec(0)
    return SimplicialComplex(lab.values(), facets)


def deleted_join_relabeling(K: SimplicialComplex, r: int) -> dict[tuple[int, int], int]:
    return pair_relabeling((v, i) for v in K.ground_set for i in range(r))


def deleted_join_pair(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Deleted join of two complexes on the same ground set: faces are pairs
    (sigma, tau) with sigma in K, tau in L, sigma and tau disjoint."""
    if K.ground_set != L.ground_set:
        raise ValueError("deleted join pair needs a common ground set")
    lab = pair_relabeling(
        [(v, 0) for v in K.ground_set] + [(v, 1) for v in L.ground_set]
    )
    faces = [
        frozenset({lab[(v, 0)] for v in f} | {lab[(w, 1)] for w in g})
        for f in K.faces()
        for g in L.faces()
        if not (f & g)
    ]
    return SimplicialComplex(lab.values(), _maximal(faces))


def _maximal(faces: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    by_size = sorted(set(faces), key=len, reverse=True)
    out: list[frozenset[int]] = []
    for f in by_size:
        if not any(f < g for g in out):
            out.append(f)
    return out


def alexander_dual(K: SimplicialComplex, ground_set: Iterable[int]) -> SimplicialComplex:
    """Alexander dual on the given ground set: sigma is a dual face iff the
    complement of sigma is not a face of K.  The dual of the full simplex is
    the void complex."""
    gs = sorted(set(ground_set))
    if len(gs) > 25:
        raise ResourceWarning("Alexander dual over > 25 vertices is out of scope")
    for f in K.facets:
        if not f <= set(gs):
            raise ValueError("K has faces outside the ground set")
    full = frozenset(gs)
    dual_faces = [
        frozenset(c)
        for k in range(len(gs) + 1)
        for c in itertools.combinations(gs, k)
        if not K.has_face(full - frozenset(c)) or K.is_void
    ]
    if not dual_faces:
        return SimplicialComplex(gs, [])  # void complex
    return SimplicialComplex(gs, _maximal(dual_faces))


def bier_sphere(K: SimplicialComplex) -> SimplicialComplex:
    """Bier sphere: deleted join of K with its Alexander dual, on 2n
    vertices; K must be strictly between {empty} and the full simplex."""
    gs = K.ground_set
    if K.is_void or K.dim == -1:
        raise ValueError("Bier sphere needs a non-trivial complex")
    if K.has_face(gs):
        raise ValueError("Bier sphere of the full simplex is undefined")
    dual = alexander_dual(K, gs)
    return deleted_join_pair(K, dual)


def skeleton(K: SimplicialComplex, d: int) -> SimplicialComplex:
    """d-skeleton: faces with at most d + 1 vertices."""
    if d < 0:
        raise ValueError("skeleton dimension must be >= 0")
    if d >= K.dim:
        return SimplicialComplex(K.ground_set, K.facets)
    faces = [f for f in K.faces() if len(f) <= d + 1]
    return SimplicialComplex(K.ground_set, _maximal(faces))


def quotient_map_3to2(
    K: SimplicialComplex,
) -> tuple[SimplicialComplex, dict[int, int]]:
    """The fixed 3-to-2 quotient on the multipartite complex with class sizes
    (3, 3, 3, 1): within each 3-class the third vertex is identified with the
    second.  Returns the image complex (class sizes (2, 2, 2, 1)) and the
    vertex map."""
    if K != multipartite_complex([3, 3, 3, 1]):
        raise ValueError("input must be the multipartite complex [3,3,3,1]")
    vmap: dict[int, int] = {}
    for c in range(3):
        vmap[3 * c] = 2 * c
        vmap[3 * c + 1] = 2 * c + 1
        vmap[3 * c + 2] = 2 * c + 1
    vmap[9] = 6
    target = multipartite_complex([2, 2, 2, 1])
    # Simpliciality: the image of every face must be a face.
    for f in K.facets:
        if not target.has_face({vmap[v] for v in f}):
            raise AssertionError("quotient image of a facet is not a face")
    return target, vmap


def barycentric_subdivision(
    K: SimplicialComplex,
) -> tuple[SimplicialComplex, list[tuple[int, ...]]]:
    """Barycentric subdivision.  New vertex i corresponds to the i-th
    nonempty face of K in canonical (size, lexicographic) order; facets are
    the maximal chains inside facets of K.  Returns (sd(K), vertex table)."""
    base = sorted(
        (tuple(sorted(f)) for f in K.faces() if f), key=lambda t: (len(t), t)
    )
    index = {f: i for i, f in enumerate(base)}
    facets = []
    for f in K.facets:
        for perm in itertools.permutations(sorted(f)):
            chain = [tuple(sorted(perm[: k + 1])) for k in range(len(perm))]
            facets.append({index[c] for c in chain})
    return SimplicialComplex(range(len(base)), facets), base


# ----------------------------------------------------------------------
# the deleted-join factorization identity at desk scale


def deleted_join_factorization() -> tuple[
    SimplicialComplex, SimplicialComplex, dict[int, int]
]:
    """Build both sides of the identity

        (K_{3,3,3,1})^{*4, deleted}  ==  (Delta_{3,4} * Delta_{3,4} * Delta_{3,4}) * [4]

    together with the canonical vertex bijection from the left-hand ground
    set to the right-hand one.  Facet-set equality under the bijection is
    what the acceptance test checks.
    """
    K = multipartite_complex([3, 3, 3, 1])
    lhs = deleted_join(K, 4)
    lhs_lab = deleted_join_relabeling(K, 4)

    board = chessboard_complex(3, 4)  # cell (p, slot) = vertex p * 4 + slot
    j1 = join(board, board)
    lab1 = join_relabeling(board, board)
    j2 = join(j1, board)
    lab2 = join_relabeling(j1, board)
    four = points(range(4))
    rhs = join(j2, four)
    lab3 = join_relabeling(j2, four)

    def rhs_id(color: int, pos: int, slot: int) -> int:
        # Route a (color, within-class position, slot) cell through the three
        # nested join relabelings.
        if color == 3:
            return lab3[(slot, 1)]
        cell = pos * 4 + slot
        if color < 2:
            inner = lab1[(cell, color)]
        else:
            inner = lab2[(cell, 1)]
            return lab3[(inner, 0)]
        mid = lab2[(inner, 0)]
        return lab3[(mid, 0)]

    classes = multipartite_classes([3, 3, 3, 1])
    color_of = {v: c for c, cls in enumerate(classes) for v in cls}
    pos_of = {v: cls.index(v) for cls in classes for v in cls}

    vmap = {
        lhs_lab[(v, slot)]: rhs_id(color_of[v], pos_of[v], slot)
        for v in K.ground_set
        for slot in range(4)
    }
    return lhs, rhs, vmap
