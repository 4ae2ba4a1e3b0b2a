"""Cyclic Bergman fan of a loop-free, coloop-free matroid.

Maximal cones are in bijection with regressive compatible pairs (p, <·) over
bases B: a preference function p mapping each non-basis element k to an
element of F_k = C(k, B) - {k} with p(k) < k, together with a total order <·
on the image of p.  Pairs are enumerated by a recursion that fixes p(k) for k
ascending while growing the order, each pair yields a directed caterpillar
tree on the blocks {b} + p^-1(b), and the tree's up-sets are the 0/1 rays of
the cone.  The union of these cones over all bases is the tropical linear
space, each cone produced exactly once.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    HasColoops,
    HasLoops,
    InternalInvariant,
    NotInLocalTrop,
    NotMaxWeightBasis,
    OrderIncompatible,
    WrongSize,
)
from .exact import IntMat, solve_columns
from .matroid import Matroid
from .util import elements_of, mask_of, mask_to_vector


@dataclass(frozen=True)
class CompatiblePair:
    """A basis, a regressive preference function, and a total order on its image.

    pref lists (k, p(k)) with k ascending over the non-basis elements; order
    lists the image of p from smallest to largest.
    """

    basis: tuple
    pref: tuple
    order: tuple

    @property
    def pref_map(self) -> dict:
        return dict(self.pref)


@dataclass(frozen=True)
class CaterpillarTree:
    """Directed caterpillar tree cutting out the cone of one compatible pair.

    blocks partition the ground set, one block {b} + p^-1(b) per basis
    element; the spine lists the non-singleton block representatives in order;
    each remaining singleton hangs off its spine parent.
    """

    n: int
    basis: tuple
    blocks: tuple
    spine: tuple
    leaf_parent: tuple


@dataclass(frozen=True)
class Cone:
    ray_indices: tuple
    source_pair: CompatiblePair | None


@dataclass(frozen=True)
class Fan:
    """Simplicial fan: deduplicated 0/1 rays plus maximal cones as ray-index sets.

    rays are sorted lexicographically as vectors; each cone is a sorted tuple
    of ray indices, cones listed by (basis, pair) enumeration order.  The
    lineality space, spanned by the all-ones vector, is implicit.
    """

    n: int
    rank: int
    rays: tuple
    maximal_cones: tuple
    source_pairs: tuple | None = None

    def cone(self, i: int) -> Cone:
        pair = self.source_pairs[i] if self.source_pairs is not None else None
        return Cone(self.maximal_cones[i], pair)

    def ray_support(self, i: int) -> tuple:
        return tuple(j + 1 for j, x in enumerate(self.rays[i]) if x)


# -- pair enumeration ---------------------------------------------------------


def _regressive_pairs(ks, fmask):
    """All regressive compatible pairs over one basis, as raw (pvals, chain) tuples.

    ks is the ascending tuple of non-basis elements and fmask[k] the bitmask
    of F_k.  The recursion processes k in order.  Reusing an imaged element is
    only compatible with p(k) = the chain-minimal element of image & F_k.  A
    new element b < k may be inserted at any chain slot that keeps it above
    every p(l) of an earlier l with b in F_l (otherwise p(l) would not have
    been minimal) and below every already-imaged element of F_k (otherwise
    p(k) itself would not be minimal).  DFS order: reuse first, then new
    elements ascending, insertion slots bottom-up.
    """
    K = len(ks)
    out = []
    pvals = [0] * K

    def rec(idx, chain, imask):
        if idx == K:
            out.append((tuple(pvals), chain))
            return
        k = ks[idx]
        fk = fmask[k]
        limit = len(chain)
        reused = None
        for j, c in enumerate(chain):
            if fk >> (c - 1) & 1:
                reused = c
                limit = j
                break
        if reused is not None:
            pvals[idx] = reused
            rec(idx + 1, chain, imask)
        cand = fk & ~imask & ((1 << (k - 1)) - 1)
        while cand:
            low = cand & -cand
            cand ^= low
            b = low.bit_length()
            lo = 0
            for jdx in range(idx):
                if fmask[ks[jdx]] >> (b - 1) & 1:
                    pos = chain.index(pvals[jdx])
                    if pos >= lo:
                        lo = pos + 1
            if lo > limit:
                continue
            pvals[idx] = b
            for s in range(lo, limit + 1):
                rec(idx + 1, chain[:s] + (b,) + chain[s:], imask | low)

    rec(0, (), 0)
    return out


def _cone_masks(n, bmask, ks, pvals, chain, fmask):
    """Ray bitmasks of the cone of one raw pair (fused tree construction).

    Spine block up-sets (all but the bottom one, whose up-set is everything)
    plus one singleton ray per basis element outside the image.
    """
    block = {}
    cover = {}
    for c in chain:
        block[c] = 1 << (c - 1)
        cover[c] = 0
    for idx, k in enumerate(ks):
        b = pvals[idx]
        block[b] |= 1 << (k - 1)
        cover[b] |= fmask[k]
    imask = 0
    for c in chain:
        imask |= 1 << (c - 1)
    leftovers = bmask & ~imask
    r = len(chain)
    attach = [0] * r
    un = leftovers
    for j in range(r - 1, -1, -1):
        got = cover[chain[j]] & un
        attach[j] = got
        un &= ~got
    if un:
        raise InternalInvariant(
            f"elements {list(elements_of(un))} attach to no block; matroid has a coloop"
        )
    rays = []
    acc = 0
    suffix = [0] * r
    for j in range(r - 1, -1, -1):
        acc |= block[chain[j]] | attach[j]
        suffix[j] = acc
    rays.extend(suffix[1:])
    lo = leftovers
    while lo:
        low = lo & -lo
        rays.append(low)
        lo ^= low
    if len(rays) != bmask.bit_count() - 1:
        raise InternalInvariant("cone does not have rank-1 rays")
    return tuple(rays)


def _require_no_loops_coloops(M: Matroid):
    if M.loops:
        raise HasLoops(M.loops)
    if M.coloops:
        raise HasColoops(M.coloops)


def enumerate_pairs(M: Matroid, B):
    """Yield every regressive compatible pair with respect to B exactly once."""
    _require_no_loops_coloops(M)
    B = M._require_basis(B)
    fmask = M.fundamental_circuit_masks(B)
    ks = tuple(sorted(fmask))
    for pvals, chain in _regressive_pairs(ks, fmask):
        yield CompatiblePair(B, tuple(zip(ks, pvals)), chain)


def build_tree(M: Matroid, pair: CompatiblePair) -> CaterpillarTree:
    """Caterpillar tree of a compatible pair.

    Each singleton block {c} attaches to the order-largest image element b
    with some k in p^-1(b) whose fundamental circuit contains c; such a b
    exists exactly because the matroid has no coloops.
    """
    fmask = M.fundamental_circuit_masks(pair.basis)
    chain = pair.order
    members = {b: [b] for b in pair.basis}
    cover = {c: 0 for c in chain}
    for k, b in pair.pref:
        members[b].append(k)
        cover[b] |= fmask[k]
    leaf_parent = []
    for c in pair.basis:
        if c in cover:
            continue
        cbit = 1 << (c - 1)
        parent = next((b for b in reversed(chain) if cover[b] & cbit), None)
        if parent is None:
            raise InternalInvariant(f"element {c} attaches to no block")
        leaf_parent.append((c, parent))
    blocks = tuple(tuple(sorted(members[b])) for b in pair.basis)
    return CaterpillarTree(M.n, pair.basis, blocks, chain, tuple(leaf_parent))


def cone_from_tree(tree: CaterpillarTree):
    """0/1 ray vectors of the cone cut out by a caterpillar tree.

    For every block the indicator of its up-set is a generator; the bottom
    spine block generates the all-ones lineality vector and is dropped,
    leaving exactly rank-1 rays.
    """
    block_of = {}
    for block in tree.blocks:
        for e in block:
            block_of[e] = block
    spine_members = {b: mask_of(block_of[b]) for b in tree.spine}
    attach = {b: 0 for b in tree.spine}
    for c, parent in tree.leaf_parent:
        attach[parent] |= 1 << (c - 1)
    masks = []
    acc = 0
    suffix = []
    for b in reversed(tree.spine):
        acc |= spine_members[b] | attach[b]
        suffix.append(acc)
    suffix.reverse()
    masks.extend(suffix[1:])
    for c, _ in sorted(tree.leaf_parent):
        masks.append(1 << (c - 1))
    return tuple(mask_to_vector(m, tree.n) for m in masks)


# -- fan assembly -------------------------------------------------------------


def _per_basis_cones(M: Matroid, B):
    """Raw pairs and cone ray masks for one basis, in canonical pair order."""
    fmask = M.fundamental_circuit_masks(B)
    ks = tuple(sorted(fmask))
    bmask = mask_of(B)
    n = M.n
    return ks, [
        (pvals, chain, _cone_masks(n, bmask, ks, pvals, chain, fmask))
        for pvals, chain in _regressive_pairs(ks, fmask)
    ]


def _fan_worker(payload):
    entries, dual_mode, bases = payload
    M = Matroid(IntMat.from_rows(entries), dual_mode=dual_mode, loops=(), coloops=())
    return [(B,) + _per_basis_cones(M, B) for B in bases]


def _chunks(seq, k):
    step = max(1, -(-len(seq) // k))
    return [seq[i : i + step] for i in range(0, len(seq), step)]


def _iter_basis_results(M: Matroid, threads: int):
    """Per-basis cone data in canonical basis order, optionally computed in parallel.

    Parallel chunks are merged back in basis order, so the stream is identical
    to the sequential one.
    """
    if threads <= 0:
        for B in M.enumerate_bases():
            ks, cones = _per_basis_cones(M, B)
            yield B, ks, cones
        return
    bases = M.bases
    payloads = [
        (M.A.entries, M.dual_mode, chunk) for chunk in _chunks(bases, threads * 4)
    ]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for result in pool.map(_fan_worker, payloads):
            yield from result


def _finalize(n, rank, ray_index, cones, pairs):
    vectors = [mask_to_vector(mask, n) for mask in ray_index]
    order = sorted(range(len(vectors)), key=vectors.__getitem__)
    remap = [0] * len(order)
    for new, old in enumerate(order):
        remap[old] = new
    rays = tuple(vectors[old] for old in order)
    maximal = tuple(tuple(sorted(remap[i] for i in cone)) for cone in cones)
    return Fan(n, rank, rays, maximal, tuple(pairs) if pairs is not None else None)


def cyclic_bergman_fan(
    M: Matroid,
    *,
    threads: int = 0,
    keep_pairs: bool = True,
    check_no_duplicates: bool = False,
) -> Fan:
    """Assemble the full fan: all cones over all bases, rays deduplicated.

    Distinct regressive pairs give distinct cones, so no deduplication of
    cones happens; check_no_duplicates asserts that instead (test mode).
    threads > 0 distributes per-basis work over processes; the output is
    byte-identical to the sequential run.
    """
    _require_no_loops_coloops(M)
    ray_index: dict = {}
    cones = []
    pairs = [] if keep_pairs else None
    seen = set() if check_no_duplicates else None
    for B, ks, per_basis in _iter_basis_results(M, threads):
        for pvals, chain, masks in per_basis:
            idxs = tuple(
                sorted(ray_index.setdefault(mask, len(ray_index)) for mask in masks)
            )
            if seen is not None:
                if idxs in seen:
                    raise InternalInvariant(f"duplicate cone {idxs} from basis {B}")
                seen.add(idxs)
            cones.append(idxs)
            if pairs is not None:
                pairs.append(CompatiblePair(B, tuple(zip(ks, pvals)), chain))
    return _finalize(M.n, M.rank, ray_index, cones, pairs)


def fan_counts(M: Matroid, *, threads: int = 0) -> tuple:
    """(ray count, maximal cone count) without storing the cones."""
    _require_no_loops_coloops(M)
    ray_index: dict = {}
    ncones = 0
    for _, _, per_basis in _iter_basis_results(M, threads):
        for _, _, masks in per_basis:
            for mask in masks:
                ray_index.setdefault(mask, len(ray_index))
            ncones += 1
    return len(ray_index), ncones


# -- membership and induced pairs ---------------------------------------------


def is_in_trop(M: Matroid, v) -> bool:
    """True iff every circuit attains its coordinate minimum at least twice."""
    if len(v) != M.n:
        raise WrongSize(f"vector length {len(v)} != {M.n}")
    for circuit in M.circuits():
        values = [v[i - 1] for i in circuit]
        lo = min(values)
        if values.count(lo) < 2:
            return False
    return True


def _basis_weight(B, v):
    return sum(v[i - 1] for i in B)


def is_in_local_trop(M: Matroid, B, v) -> bool:
    """Membership in the local tropical linear space around B.

    Requires B to have maximal v-weight; then only the fundamental circuits
    over B need their minima attained twice.
    """
    B = M._require_basis(B)
    if len(v) != M.n:
        raise WrongSize(f"vector length {len(v)} != {M.n}")
    weight = _basis_weight(B, v)
    if any(_basis_weight(other, v) > weight for other in M.bases):
        raise NotMaxWeightBasis(f"{list(B)} does not have maximal weight")
    for k, mask in M.fundamental_circuit_masks(B).items():
        values = [v[k - 1]] + [v[i - 1] for i in elements_of(mask)]
        lo = min(values)
        if values.count(lo) < 2:
            return False
    return True


def local_trop_point(M: Matroid, B, x) -> tuple:
    """Image of x under the piecewise-linear parametrization of the local space.

    Basis coordinates copy x (in sorted basis order); each non-basis
    coordinate is the minimum of x over F_k.
    """
    B = M._require_basis(B)
    if len(x) != len(B):
        raise WrongSize(f"expected {len(B)} coordinates, got {len(x)}")
    on_basis = dict(zip(B, x))
    out = list(range(M.n))
    fmask = M.fundamental_circuit_masks(B)
    for i in range(1, M.n + 1):
        if i in on_basis:
            out[i - 1] = on_basis[i]
        else:
            out[i - 1] = min(on_basis[b] for b in elements_of(fmask[i]))
    return tuple(out)


def induce_pair(M: Matroid, B, v, J) -> CompatiblePair:
    """Pair induced by a total order J on B respecting v (v_a < v_b forces a before b)."""
    B = M._require_basis(B)
    J = tuple(J)
    if sorted(J) != list(B):
        raise WrongSize("J must be a total order on the basis")
    for a, b in zip(J, J[1:]):
        if v[a - 1] > v[b - 1]:
            raise OrderIncompatible(f"J places {a} before {b} but v[{a}] > v[{b}]")
    if not is_in_local_trop(M, B, v):
        raise NotInLocalTrop("vector is not in the local tropical linear space")
    fmask = M.fundamental_circuit_masks(B)
    pref = []
    image = set()
    for k in sorted(fmask):
        fk = fmask[k]
        p = next(b for b in J if fk >> (b - 1) & 1)
        pref.append((k, p))
        image.add(p)
    order = tuple(b for b in J if b in image)
    return CompatiblePair(B, tuple(pref), order)


def interior_witness(fan: Fan, cone_index: int) -> tuple:
    """Sum of the cone's ray vectors: a relative-interior point."""
    w = [0] * fan.n
    for i in fan.maximal_cones[cone_index]:
        for j, x in enumerate(fan.rays[i]):
            w[j] += x
    return tuple(w)


def point_in_cone(fan: Fan, cone_index: int, v) -> bool:
    """Exact test v in cone + lineality, via the unique simplicial coordinates."""
    cols = [fan.rays[i] for i in fan.maximal_cones[cone_index]]
    cols.append((1,) * fan.n)
    sol = solve_columns(cols, v)
    if sol is None:
        return False
    residual = [
        Fraction(v[r]) - sum(Fraction(cols[j][r]) * sol[j] for j in range(len(cols)))
        for r in range(fan.n)
    ]
    if any(residual):
        return False
    return all(x >= 0 for x in sol[:-1])


def compare_with_bergman(fan: Fan, M: Matroid):
    """Group maximal cones into classes lying in one maximal Bergman cone each.

    The Bergman fan is the normal fan of the matroid polytope, so two cones
    coincide there iff their interior witnesses maximize weight on the same
    set of bases.  Classes are ordered by their smallest cone index.
    """
    import numpy as np

    bases = M.bases
    n = fan.n
    if fan.rays:
        rays = np.array(fan.rays, dtype=np.int64)
    else:
        rays = np.zeros((0, n), dtype=np.int64)
    basis_idx = np.array([[b - 1 for b in B] for B in bases], dtype=np.intp)
    groups: dict = {}
    order = []
    for ci, cone in enumerate(fan.maximal_cones):
        if cone:
            w = rays[list(cone)].sum(axis=0)
        else:
            w = np.zeros(n, dtype=np.int64)
        weights = w[basis_idx].sum(axis=1)
        key = (weights == weights.max()).tobytes()
        bucket = groups.get(key)
        if bucket is None:
            groups[key] = [ci]
            order.append(key)
        else:
            bucket.append(ci)
    return tuple(tuple(groups[k]) for k in order)


def fan_rays_are_cyclic_flats(fan: Fan, M: Matroid) -> bool:
    """Exact two-sided check: ray supports == proper nonempty flats that are cyclic or singletons."""
    if M.n > 14:
        raise ValueError("brute-force flat enumeration is limited to n <= 14")
    supports = set()
    for i in range(len(fan.rays)):
        supports.add(frozenset(fan.ray_support(i)))
    expected = set()
    for mask in range(1, (1 << M.n) - 1):
        S = elements_of(mask)
        if not M.is_flat(S):
            continue
        if len(S) == 1 or M.is_cyclic_flat(S):
            expected.add(frozenset(S))
    return supports == expected
