"""Vertices of Newton polytopes of A-discriminants by ray shooting.

The tropicalization of the discriminantal variety of an integer matrix A is
the Minkowski sum of the tropical linear space of the Gale-dual matroid and
the rowspace of A.  Shooting axis rays from a generic objective w and summing
exact determinant weights over the codimension-one cones crossed recovers the
vertex of the Newton polytope minimizing the dot product with w.

Two exactness devices keep this fast:

* membership of the crossing point in a cone reduces, after applying the
  Gale-dual projection (whose kernel is exactly the rowspace of A), to a
  unique rational solve against the projected rays, precomputed per cone as
  an integer matrix Q and denominator D;
* the determinant in the vertex formula factors through the cone's hyperplane
  normal: det(A^T, rays, e_i) = kappa * normal_i for a per-cone integer
  kappa, so one determinant per cone serves all sixteen directions.

Non-generic objectives are resolved by symbolic perturbation w + eps*r with a
seeded random integer r; every sign test is evaluated lexicographically on
the (constant, eps) pair, and the rare unresolved double zero draws a fresh r
rather than guessing.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import (
    DegenerateDual,
    InternalInvariant,
    LatticeNotSpanned,
    NoAllOnesRow,
    RankError,
)
from .exact import (
    IntMat,
    _rref_fractions,
    det,
    det_of_columns,
    integer_kernel_basis,
    rank,
    rank_of_rows,
    solve_columns,
)
from .fan import Fan, cyclic_bergman_fan
from .matroid import Matroid
from .util import dot, primitive


@dataclass(frozen=True)
class NewtonVertex:
    """A vertex u of the Newton polytope, the objective w it minimizes, and A @ u."""

    u: tuple
    w: tuple
    a_degree: tuple
    perturbed: bool = False
    duplicate_of: int | None = None


@dataclass
class Codim1Cone:
    """A maximal fan cone whose span plus the rowspace of A is a hyperplane."""

    cone_index: int
    normal: tuple  # primitive integer normal of that hyperplane
    qrows: tuple  # integer matrix Q with lambda(x) = Q @ x / denom
    denom: int
    kappa_abs: int | None = None  # |kappa|, computed on first hit


@dataclass
class DiscriminantProblem:
    A: IntMat
    m: int
    n: int
    Aperp: IntMat
    matroid: Matroid
    fan: Fan
    codim1_cones: list
    lattice_spanned: bool
    a_degree: tuple | None = None


class _Unresolved(Exception):
    """An exact tie survived the current perturbation; retry with a fresh one."""


def _independent_rows(rows):
    sel = []
    kept = []
    for t, row in enumerate(rows):
        if rank_of_rows(kept + [list(row)]) == len(kept) + 1:
            sel.append(t)
            kept.append(list(row))
    return sel


def _scaled_inverse(rows):
    """(det * inverse, det) of a square integer matrix, with integer entries."""
    k = len(rows)
    aug = [
        [Fraction(rows[i][j]) for j in range(k)]
        + [Fraction(1 if i == j else 0) for j in range(k)]
        for i in range(k)
    ]
    reduced, pivots = _rref_fractions(aug)
    if pivots != list(range(k)):
        raise InternalInvariant("membership matrix is singular")
    d = det(IntMat.from_rows(rows))
    out = []
    for row in reduced:
        scaled = [x * d for x in row[k:]]
        if any(x.denominator != 1 for x in scaled):
            raise InternalInvariant("adjugate rows are not integral")
        out.append(tuple(int(x) for x in scaled))
    return out, d


def setup(A, *, threads: int = 0) -> DiscriminantProblem:
    """Build the fan of the Gale-dual matroid and index its codimension-1 cones.

    Checks: full row rank, the all-ones vector in the rowspace, and (warning
    only) that the maximal minors of A are coprime so the vertex formula is
    valid.  The fan itself is computed in dual mode straight from A.
    """
    if not isinstance(A, IntMat):
        A = IntMat.from_rows(A)
    m, n = A.rows, A.cols
    if rank(A) != m:
        raise RankError(f"matrix has rank {rank(A)} < {m} rows")
    if n - m <= 1:
        raise DegenerateDual("Gale dual has rank <= 1; the fan is lineality only")
    if solve_columns(A.entries, [1] * n) is None:
        raise NoAllOnesRow("the all-ones vector is not in the rowspace")
    lattice_spanned = False
    g = 0
    for comb in combinations(range(n), m):
        g = gcd(g, det_of_columns([A.columns[c] for c in comb]))
        if g == 1:
            lattice_spanned = True
            break
    if not lattice_spanned:
        warnings.warn(
            f"maximal minors of A have gcd {g} != 1; the columns do not span the "
            "integer lattice and vertex coordinates would be invalid",
            UserWarning,
            stacklevel=2,
        )
    Aperp = integer_kernel_basis(A)
    M = Matroid.from_matrix(A, strict=False).dual()
    fan = cyclic_bergman_fan(M, threads=threads, keep_pairs=False)
    q = n - m
    phi = [tuple(dot(row, ray) for row in Aperp.entries) for ray in fan.rays]
    codim1 = []
    for ci, cone in enumerate(fan.maximal_cones):
        proj = [phi[i] for i in cone]
        if rank_of_rows(proj) != q - 1:
            continue
        y = integer_kernel_basis(IntMat.from_rows(proj)).entries[0]
        normal = primitive(
            [sum(y[t] * Aperp.entries[t][c] for t in range(q)) for c in range(n)]
        )
        for i in cone:
            if dot(normal, fan.rays[i]) != 0:
                raise InternalInvariant("normal not orthogonal to a cone ray")
        for row in A.entries:
            if dot(normal, row) != 0:
                raise InternalInvariant("normal not orthogonal to the rowspace")
        cols = list(zip(*proj))  # q rows of the projected ray matrix
        sel = _independent_rows(cols)
        w_rows = [[proj[j][t] for j in range(q - 1)] for t in sel]
        nmat, d = _scaled_inverse(w_rows)
        qrows = tuple(
            tuple(
                sum(nmat[j][t] * Aperp.entries[sel[t]][c] for t in range(q - 1))
                for c in range(n)
            )
            for j in range(q - 1)
        )
        codim1.append(Codim1Cone(ci, normal, qrows, d))
    return DiscriminantProblem(A, m, n, Aperp, M, fan, codim1, lattice_spanned)


def eq2_determinant(prob: DiscriminantProblem, cone: Codim1Cone, i: int) -> int:
    """|det| of (A^T columns, the cone's rays, e_i), computed directly."""
    cols = [row for row in prob.A.entries]
    cols += [prob.fan.rays[j] for j in prob.fan.maximal_cones[cone.cone_index]]
    e = [0] * prob.n
    e[i] = 1
    cols.append(tuple(e))
    return abs(det_of_columns(cols))


def _kappa_abs(prob: DiscriminantProblem, cone: Codim1Cone) -> int:
    if cone.kappa_abs is None:
        i0 = next(i for i, x in enumerate(cone.normal) if x != 0)
        d = eq2_determinant(prob, cone, i0)
        k, rem = divmod(d, abs(cone.normal[i0]))
        if rem or k == 0:
            raise InternalInvariant("determinant does not factor through the normal")
        cone.kappa_abs = k
    return cone.kappa_abs


def _cone_hits(prob, cone, w, r, directions):
    """Directions i in `directions` whose open ray from w crosses the cone.

    r is the perturbation vector or None; raises _Unresolved on any exact tie
    under the current perturbation.
    """
    nv = cone.normal
    s0 = dot(nv, w)
    s1 = dot(nv, r) if r is not None else 0
    a0 = a1 = None
    Q = cone.qrows
    D = cone.denom
    hits = []
    for i in directions:
        g = nv[i]
        if g == 0:
            if s0 == 0 and (r is None or s1 == 0):
                raise _Unresolved  # the ray lies inside the hyperplane
            continue
        c0 = -s0 * g
        c1 = -s1 * g
        if c0 < 0 or (c0 == 0 and c1 < 0):
            continue
        if c0 == 0 and (r is None or c1 == 0):
            raise _Unresolved
        if a0 is None:
            a0 = [dot(qr, w) for qr in Q]
            a1 = [dot(qr, r) for qr in Q] if r is not None else [0] * len(Q)
        sgn = 1 if D * g > 0 else -1
        inside = True
        for j in range(len(Q)):
            qji = Q[j][i]
            l0 = (a0[j] * g - s0 * qji) * sgn
            if l0 > 0:
                continue
            if l0 < 0:
                inside = False
                break
            if r is None:
                raise _Unresolved
            l1 = (a1[j] * g - s1 * qji) * sgn
            if l1 > 0:
                continue
            inside = False
            if l1 == 0:
                raise _Unresolved
            break
        if inside:
            hits.append(i)
    return hits


def ray_hits_cone(prob: DiscriminantProblem, cone_pos: int, w, i: int, *, seed: int = 0) -> bool:
    """Does the open ray w + t*e_i (t > 0) meet cone + rowspace(A)?

    Exact ties are resolved by seeded symbolic perturbation, never by choice.
    """
    cone = prob.codim1_cones[cone_pos]
    w = tuple(w)
    rng = random.Random(seed)
    r = None
    for _ in range(64):
        try:
            return bool(_cone_hits(prob, cone, w, r, (i - 1,)))
        except _Unresolved:
            r = tuple(rng.randint(-(10**6), 10**6) for _ in range(prob.n))
    raise InternalInvariant("tie unresolved after 64 perturbations")


def _shoot(prob, w, r):
    u = [0] * prob.n
    directions = range(prob.n)
    for cone in prob.codim1_cones:
        hits = _cone_hits(prob, cone, w, r, directions)
        if hits:
            k = _kappa_abs(prob, cone)
            for i in hits:
                u[i] += k * abs(cone.normal[i])
    return u


def shoot_vertex(prob: DiscriminantProblem, w, *, seed: int = 0) -> NewtonVertex:
    """Vertex of the Newton polytope minimizing u . w, by exact ray shooting.

    The unperturbed pass runs first; any exact tie restarts it with a seeded
    symbolic perturbation.  The A-degree is attached and checked constant
    across the problem's lifetime.
    """
    if not prob.lattice_spanned:
        raise LatticeNotSpanned("vertex formula requires coprime maximal minors")
    w = tuple(int(x) for x in w)
    rng = random.Random(seed)
    r = None
    perturbed = False
    for _ in range(64):
        try:
            u = _shoot(prob, w, r)
            break
        except _Unresolved:
            perturbed = True
            r = tuple(rng.randint(-(10**6), 10**6) for _ in range(prob.n))
    else:
        raise InternalInvariant("ties unresolved after 64 perturbations")
    u = tuple(u)
    a_degree = tuple(dot(row, u) for row in prob.A.entries)
    if prob.a_degree is None:
        prob.a_degree = a_degree
    elif prob.a_degree != a_degree:
        raise InternalInvariant(
            f"A-degree changed from {prob.a_degree} to {a_degree}; "
            "the codimension-1 cone family is inconsistent"
        )
    return NewtonVertex(u, w, a_degree, perturbed=perturbed)


def random_vertices(prob: DiscriminantProblem, count: int, seed: int) -> list:
    """Shoot `count` seeded random integer objectives; duplicates are flagged.

    Objectives are uniform in [-10^6, 10^6] per coordinate; each draw also
    fixes the perturbation seed up front so the stream is reproducible whether
    or not ties occur.
    """
    rng = random.Random(seed)
    out = []
    first_seen: dict = {}
    for idx in range(count):
        w = tuple(rng.randint(-(10**6), 10**6) for _ in range(prob.n))
        pseed = rng.getrandbits(32)
        vertex = shoot_vertex(prob, w, seed=pseed)
        prior = first_seen.get(vertex.u)
        if prior is not None:
            vertex = replace(vertex, duplicate_of=prior)
        else:
            first_seen[vertex.u] = idx
        out.append(vertex)
    return out
