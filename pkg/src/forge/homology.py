"""Independent verification backend: integer simplicial homology via Smith
normal form, Betti numbers, Euler characteristics and pseudomanifold /
orientation checks.

All homology is computed with exact integer arithmetic (Python ints).  A
mod-2 rank fast path is available behind an explicit flag for instances too
large for exact SNF.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex


@dataclass
class BoundaryMatrix:
    """Integer boundary matrix from p-faces (columns) to (p-1)-faces (rows),
    with the alternating-sign boundary of sorted vertex lists."""

    p: int
    rows: list[tuple[int, ...]]
    cols: list[tuple[int, ...]]
    entries: dict[tuple[int, int], int]

    def to_dense(self) -> list[list[int]]:
        M = [[0] * len(self.cols) for _ in self.rows]
        for (i, j), v in self.entries.items():
            M[i][j] = v
        return M

    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def boundary_matrix(K: SimplicialComplex, p: int) -> BoundaryMatrix:
    """Standard simplicial boundary in dimension p (1 <= p <= dim K).
    Orientations come from the sorted vertex order."""
    if p < 1 or p > K.dim:
        raise ValueError("p out of range")
    rows = K.faces_of_dim(p - 1)
    cols = K.faces_of_dim(p)
    rindex = {f: i for i, f in enumerate(rows)}
    entries: dict[tuple[int, int], int] = {}
    for j, f in enumerate(cols):
        for k in range(len(f)):
            sub = f[:k] + f[k + 1 :]
            entries[(rindex[sub], j)] = (-1) ** k
    return BoundaryMatrix(p, rows, cols, entries)


def _compose_is_zero(d_low: BoundaryMatrix, d_high: BoundaryMatrix) -> bool:
    """Check d_low @ d_high == 0 (the chain-complex identity)."""
    cols_low: dict[int, list[tuple[int, int]]] = {}
    for (i, j), v in d_low.entries.items():
        cols_low.setdefault(j, []).append((i, v))
    high_cols: dict[int, list[tuple[int, int]]] = {}
    for (i, j), v in d_high.entries.items():
        high_cols.setdefault(j, []).append((i, v))
    for j, col in high_cols.items():
        acc: dict[int, int] = {}
        for i, v in col:
            for r, w in cols_low.get(i, []):
                acc[r] = acc.get(r, 0) + v * w
        if any(x != 0 for x in acc.values()):
            return False
    return True


# ----------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M) -> list[int]:
    """Elementary divisors d1 | d2 | ... of an integer matrix (nonzero
    divisors only, each positive).

    Accepts a BoundaryMatrix or a dense list of rows.  Strategy: sparse
    elimination of +-1 pivots (no coefficient growth), then classic dense SNF
    on the small residual with arbitrary-precision integers.
    """
    if isinstance(M, BoundaryMatrix):
        entries = dict(M.entries)
        nr, nc = M.shape()
    else:
        nr, nc = len(M), len(M[0]) if M else 0
        entries = {
            (i, j): M[i][j] for i in range(nr) for j in range(nc) if M[i][j]
        }
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in entries.items():
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, set()).add(i)

    divisors: list[int] = []

    def drop(i: int, j: int):
        rows[i].pop(j, None)
        if not rows[i]:
            del rows[i]
        cols[j].discard(i)
        if not cols[j]:
            del cols[j]

    def set_entry(i: int, j: int, v: int):
        if v == 0:
            if i in rows and j in rows[i]:
                drop(i, j)
        else:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)

    # Phase 1: eliminate unit pivots, cheapest (Markowitz) first.
    while True:
        best = None
        best_cost = None
        for i, r in rows.items():
            for j, v in r.items():
                if v in (1, -1):
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best_cost is None or cost < best_cost:
                        best, best_cost = (i, j), cost
                        if cost == 0:
                            break
            if best_cost == 0:
                break
        if best is None:
            break
        pi, pj = best
        pv = rows[pi][pj]
        prow = dict(rows[pi])
        pcol = [i for i in cols[pj] if i != pi]
        for i in pcol:
            factor = rows[i][pj] * pv  # pv is +-1, so this clears column pj
            for j, v in prow.items():
                cur = rows.get(i, {}).get(j, 0)
                set_entry(i, j, cur - factor * v)
        # remove pivot row and column entirely
        for j in list(prow):
            drop(pi, j)
        for i in list(cols.get(pj, set())):
            drop(i, pj)
        divisors.append(1)

    # Phase 2: dense SNF on the residual.
    if rows:
        live_rows = sorted(rows)
        live_cols = sorted({j for r in rows.values() for j in r})
        ri = {i: a for a, i in enumerate(live_rows)}
        ci = {j: a for a, j in enumerate(live_cols)}
        A = [[0] * len(live_cols) for _ in live_rows]
        for i, r in rows.items():
            for j, v in r.items():
                A[ri[i]][ci[j]] = v
        divisors.extend(_dense_snf(A))

    divisors.sort()
    return divisors


def _dense_snf(A: list[list[int]]) -> list[int]:
    """Classic Smith normal form by row/column reduction; returns the nonzero
    diagonal entries (positive, in divisibility order)."""
    A = [row[:] for row in A]
    nr, nc = len(A), len(A[0]) if A else 0
    out: list[int] = []
    t = 0
    while True:
        # find a nonzero entry at or below/right of (t, t)
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] != 0:
                    if piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        A[t], A[i0] = A[i0], A[t]
        for row in A:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t
            done = True
            for i in range(t + 1, nr):
                if A[i][t] % A[t][t] != 0:
                    done = False
                q = A[i][t] // A[t][t]
                if q:
                    for j in range(t, nc):
                        A[i][j] -= q * A[t][j]
                if A[i][t] != 0:
                    A[t], A[i] = A[i], A[t]
                    done = False
                    break
            if not done:
                continue
            # clear row t
            for j in range(t + 1, nc):
                q = A[t][j] // A[t][t]
                if q:
                    for i in range(t, nr):
                        A[i][j] -= q * A[i][t]
                if A[t][j] != 0:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                    done = False
                    break
            if done:
                break
        # divisibility fix-up: pivot must divide the remaining block
        bad = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if A[i][j] % A[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(t, nc):
                A[t][j] += A[bad][j]
            continue
        out.append(abs(A[t][t]))
        t += 1
        if t == nr or t == nc:
            break
    # normalize divisibility order (entries already divide by construction)
    out.sort()
    return out


def mod2_rank(M) -> int:
    """Rank over GF(2), via bitset Gaussian elimination."""
    if isinstance(M, BoundaryMatrix):
        nr, _ = M.shape()
        bits = [0] * nr
        for (i, j), v in M.entries.items():
            if v % 2:
                bits[i] |= 1 << j
    else:
        bits = []
        for row in M:
            b = 0
            for j, v in enumerate(row):
                if v % 2:
                    b |= 1 << j
            bits.append(b)
    rank = 0
    pivots: dict[int, int] = {}
    for b in bits:
        cur = b
        while cur:
            low = cur & -cur
            if low in pivots:
                cur ^= pivots[low]
            else:
                pivots[low] = cur
                rank += 1
                break
    return rank


# ----------------------------------------------------------------------
# homology report


@dataclass
class HomologyReport:
    betti: list[int]
    torsion: list[list[int]] = field(default_factory=list)
    reduced: bool = True
    mod2: bool = False

    def is_free(self, p: int) -> bool:
        return p >= len(self.torsion) or not self.torsion[p]


def homology(
    K: SimplicialComplex, reduced: bool = True, mod2: bool = False
) -> HomologyReport:
    """Integer (or mod-2) simplicial homology of a finite complex.

    Reduced homology is the default; unreduced adds 1 to Betti_0.  Torsion
    coefficients in dimension p are the elementary divisors (> 1) of the
    boundary in dimension p + 1.  The mod-2 flag switches to GF(2) ranks
    (no torsion information).
    """
    if K.is_void:
        raise ValueError("homology of the void complex is undefined")
    d = K.dim
    if d < 0:
        return HomologyReport([], [], reduced, mod2)
    nfaces = [len(K.faces_of_dim(p)) for p in range(d + 1)]
    ranks = [0] * (d + 2)  # rank of boundary_p for p = 0..d+1
    tors: list[list[int]] = [[] for _ in range(d + 1)]
    for p in range(1, d + 1):
        B = boundary_matrix(K, p)
        if p >= 2:
            assert _compose_is_zero(boundary_matrix(K, p - 1), B)
        if mod2:
            ranks[p] = mod2_rank(B)
        else:
            divs = smith_normal_form(B)
            ranks[p] = len(divs)
            tors[p - 1] = [x for x in divs if x > 1]
    betti = [nfaces[p] - ranks[p] - ranks[p + 1] for p in range(d + 1)]
    if reduced:
        betti[0] -= 1
    return HomologyReport(betti, tors, reduced, mod2)


# ----------------------------------------------------------------------
# pseudomanifold checks


@dataclass
class PseudomanifoldReport:
    pure: bool
    ridge_regular: bool
    strongly_connected: bool
    orientable: bool
    orientation: dict[tuple[int, ...], int] | None

    @property
    def is_closed_oriented(self) -> bool:
        return (
            self.pure
            and self.ridge_regular
            and self.strongly_connected
            and self.orientable
        )


def pseudomanifold_check(K: SimplicialComplex) -> PseudomanifoldReport:
    """Check that K is a closed pseudomanifold (pure, every ridge in exactly
    two facets, strongly connected through ridges) and find a coherent
    orientation if one exists.

    The orientation convention is deterministic: the lexicographically
    smallest facet is oriented +1 with its sorted vertex order, and
    orientations propagate through shared ridges.
    """
    if K.is_void or K.dim < 1:
        raise ValueError("pseudomanifold check needs a complex of dim >= 1")
    if not K.is_pure():
        raise ValueError("pseudomanifold check needs a pure complex")
    facets = sorted(tuple(sorted(f)) for f in K.facets)
    ridge_map: dict[tuple[int, ...], list[tuple[tuple[int, ...], int]]] = {}
    for F in facets:
        for k in range(len(F)):
            ridge = F[:k] + F[k + 1 :]
            ridge_map.setdefault(ridge, []).append((F, k))
    ridge_regular = all(len(v) == 2 for v in ridge_map.values())

    # facet adjacency across ridges
    adj: dict[tuple[int, ...], list[tuple[tuple[int, ...], int, int]]] = {
        F: [] for F in facets
    }
    for pairs in ridge_map.values():
        if len(pairs) == 2:
            (F, kF), (G, kG) = pairs
            adj[F].append((G, kF, kG))
            adj[G].append((F, kG, kF))

    seen = {facets[0]}
    orientation: dict[tuple[int, ...], int] = {facets[0]: 1}
    stack = [facets[0]]
    orientable = True
    while stack:
        F = stack.pop()
        for G, kF, kG in adj[F]:
            # coherence: induced orientations on the shared ridge must cancel
            want = -orientation[F] * (-1) ** kF * (-1) ** kG
            if G in orientation:
                if orientation[G] != want:
                    orientable = False
            else:
                orientation[G] = want
                seen.add(G)
                stack.append(G)
    strongly_connected = len(seen) == len(facets)
    if not (ridge_regular and strongly_connected):
        orientable = False
    return PseudomanifoldReport(
        pure=True,
        ridge_regular=ridge_regular,
        strongly_connected=strongly_connected,
        orientable=orientable,
        orientation=orientation if orientable else None,
    )
