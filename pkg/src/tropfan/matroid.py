"""The linear matroid of an integer matrix.

A handle is built either directly from a matrix A (column dependences over Q)
or in dual mode, where it answers queries about the dual matroid of M(A)
without ever materializing a Gale dual: bases are complements, and dual
fundamental circuits come from the incidence flip
j in C*(k, B)  iff  k in C(j, complement of B).
Ground-set indices are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ElementInBasis,
    HasColoops,
    HasLoops,
    NotABasis,
    RankDeficient,
    SingularBasis,
    WrongSize,
)
from .exact import IntMat, jordan_reduce_on_columns, rank_of_rows
from .util import elements_of


@dataclass(frozen=True)
class TuttePoly:
    """Tutte polynomial as a sparse map (i, j) -> coefficient of x^i y^j."""

    coeffs: dict

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def monomials(self):
        """Sorted ((i, j), coeff) pairs."""
        return sorted(self.coeffs.items())

    @property
    def num_bases(self):
        return self(1, 1)


class Matroid:
    """Linear matroid M(A), or its dual when dual_mode is set.

    Handles are immutable after construction except for the basis and circuit
    caches, which follow a single-writer discipline: populate them (by
    exhausting enumerate_bases / calling circuits) before sharing the handle
    across threads.
    """

    def __init__(self, A: IntMat, *, dual_mode: bool, loops, coloops):
        self.A = A
        self.n = A.cols
        self.m = A.rows  # rank of the representation matrix
        self.dual_mode = dual_mode
        self.loops = tuple(loops)
        self.coloops = tuple(coloops)
        self._bases = None
        self._circuits = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_matrix(cls, A, *, strict: bool = True) -> "Matroid":
        """Build M(A).  Rank-deficient rows are dropped silently.

        With strict=True (the default) the constructor refuses matroids with
        loops or coloops, which the fan computation cannot handle anyway;
        strict=False records them on the handle instead, which is enough for
        reports such as bases, circuits, or the Tutte polynomial.
        """
        if not isinstance(A, IntMat):
            A = IntMat.from_rows(A)
        selected = []
        for row in A.entries:
            if any(row) and rank_of_rows(selected + [list(row)]) == len(selected) + 1:
                selected.append(list(row))
        if not selected:
            raise RankDeficient("matrix has rank 0")
        if len(selected) < A.rows:
            A = IntMat.from_rows(selected)
        loops = tuple(j + 1 for j, col in enumerate(A.columns) if not any(col))
        m = A.rows
        coloops = []
        for j in range(A.cols):
            rows_without = [row[:j] + row[j + 1 :] for row in A.entries]
            if rank_of_rows(rows_without) < m:
                coloops.append(j + 1)
        if strict:
            if loops:
                raise HasLoops(loops)
            if coloops:
                raise HasColoops(coloops)
        return cls(A, dual_mode=False, loops=loops, coloops=tuple(coloops))

    def dual(self) -> "Matroid":
        """Handle for the dual matroid, backed by the same matrix."""
        return Matroid(
            self.A,
            dual_mode=not self.dual_mode,
            loops=self.coloops,
            coloops=self.loops,
        )

    # -- basic queries ------------------------------------------------------

    @property
    def rank(self) -> int:
        """Rank of the represented matroid (n - m in dual mode)."""
        return self.n - self.m if self.dual_mode else self.m

    def _matrix_rank_of(self, cols1) -> int:
        cols = self.A.columns
        rows = [[cols[c - 1][r] for c in cols1] for r in range(self.m)]
        if not cols1:
            return 0
        return rank_of_rows(rows)

    def rank_of(self, S) -> int:
        """Rank of a subset of the ground set."""
        S = sorted(set(S))
        if self.dual_mode:
            comp = [i for i in range(1, self.n + 1) if i not in set(S)]
            return len(S) + self._matrix_rank_of(comp) - self.m
        return self._matrix_rank_of(S)

    def _basis_test(self, S) -> bool:
        if self.dual_mode:
            comp = [i for i in range(1, self.n + 1) if i not in set(S)]
            return self._matrix_rank_of(comp) == self.m
        return self._matrix_rank_of(S) == self.m

    def is_basis(self, S) -> bool:
        S = tuple(sorted(set(S)))
        if len(S) != self.rank:
            raise WrongSize(f"expected {self.rank} elements, got {len(S)}")
        return self._basis_test(S)

    def enumerate_bases(self):
        """Yield every basis exactly once, in lexicographic order of subsets."""
        if self._bases is not None:
            yield from self._bases
            return
        found = []
        for comb in combinations(range(1, self.n + 1), self.rank):
            if self._basis_test(comb):
                found.append(comb)
                yield comb
        self._bases = tuple(found)

    @property
    def bases(self):
        if self._bases is None:
            for _ in self.enumerate_bases():
                pass
        return self._bases

    @property
    def num_bases(self) -> int:
        return len(self.bases)

    def _require_basis(self, B):
        B = tuple(sorted(set(B)))
        if len(B) != self.rank or not self._basis_test(B):
            raise NotABasis(f"{list(B)} is not a basis")
        return B

    # -- fundamental circuits -----------------------------------------------

    def fundamental_circuit_masks(self, B) -> dict:
        """Bitmasks of F_k = C(k, B) - {k} for every non-basis element k.

        One row reduction serves all k; in dual mode the reduction happens on
        the complement basis of the underlying matrix and the incidence is
        transposed, so the dual representation is never formed.
        """
        B = self._require_basis(B)
        bset = set(B)
        outside = [k for k in range(1, self.n + 1) if k not in bset]
        if not self.dual_mode:
            pivot_elems = B
            query_elems = outside
        else:
            pivot_elems = tuple(outside)  # basis of the underlying matroid
            query_elems = B
        m = self.A.row_lists()
        try:
            jordan_reduce_on_columns(m, [b - 1 for b in pivot_elems])
        except SingularBasis as exc:  # pragma: no cover - _require_basis screens this
            raise NotABasis(str(exc)) from exc
        if not self.dual_mode:
            fk = {}
            for k in query_elems:
                mask = 0
                c = k - 1
                for r in range(self.m):
                    if m[r][c]:
                        mask |= 1 << (pivot_elems[r] - 1)
                fk[k] = mask
            return fk
        fk = {k: 0 for k in pivot_elems}
        for j in query_elems:
            jbit = 1 << (j - 1)
            c = j - 1
            for r in range(self.m):
                if m[r][c]:
                    fk[pivot_elems[r]] |= jbit
        return fk

    def fundamental_circuit(self, e: int, B) -> tuple:
        """The unique circuit inside B + {e}, as a sorted tuple containing e."""
        B = self._require_basis(B)
        if e in set(B):
            raise ElementInBasis(f"{e} lies in the basis")
        masks = self.fundamental_circuit_masks(B)
        return elements_of(masks[e] | (1 << (e - 1)))

    # -- global structure ----------------------------------------------------

    def circuits(self):
        """All circuits, each a sorted tuple, the list in lexicographic order.

        Every circuit is fundamental over some basis, so collecting C(e, B)
        over all bases is complete; pruning supersets guards the minimality
        invariant cheaply.
        """
        if self._circuits is None:
            seen = set()
            for B in self.enumerate_bases():
                for k, mask in self.fundamental_circuit_masks(B).items():
                    seen.add(mask | (1 << (k - 1)))
            by_size = sorted(seen, key=lambda m: (m.bit_count(), m))
            minimal = []
            for mask in by_size:
                if not any(prev & mask == prev for prev in minimal):
                    minimal.append(mask)
            self._circuits = tuple(sorted(elements_of(mask) for mask in minimal))
        return self._circuits

    def closure(self, S) -> tuple:
        S = tuple(sorted(set(S)))
        r = self.rank_of(S)
        out = [i for i in range(1, self.n + 1) if i in set(S) or self.rank_of(S + (i,)) == r]
        return tuple(out)

    def is_flat(self, F) -> bool:
        return self.closure(F) == tuple(sorted(set(F)))

    def is_cyclic_flat(self, F) -> bool:
        """True iff F is a flat and its complement is a flat of the dual matroid."""
        F = tuple(sorted(set(F)))
        if not self.is_flat(F):
            return False
        comp = tuple(i for i in range(1, self.n + 1) if i not in set(F))
        return self.dual().is_flat(comp)

    def tutte_polynomial(self) -> TuttePoly:
        """Tutte polynomial via internal/external activities over all bases."""
        return self._tutte_with_positions({e: e for e in range(1, self.n + 1)})

    def _tutte_with_positions(self, pos) -> TuttePoly:
        """Activity computation with an arbitrary position map (order on [n]).

        The Tutte polynomial does not depend on the order; exposing the map
        lets tests assert exactly that.
        """
        coeffs = {}
        for B in self.enumerate_bases():
            fk = self.fundamental_circuit_masks(B)
            outside = sorted(fk, key=lambda k: pos[k])
            ext = 0
            for k, mask in fk.items():
                if all(pos[k] < pos[e] for e in elements_of(mask)):
                    ext += 1
            internal = 0
            for b in B:
                bbit = 1 << (b - 1)
                hits = [k for k in outside if fk[k] & bbit]
                if not hits or pos[b] < pos[hits[0]]:
                    internal += 1
            key = (internal, ext)
            coeffs[key] = coeffs.get(key, 0) + 1
        return TuttePoly(coeffs)
