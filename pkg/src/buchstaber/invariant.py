"""Freeness verification, xi-mapping search, exact real invariant values,
the level-1/2/3 criteria, lower bounds, and the assembled analysis report.

Matrix conventions: an m x k matrix over GF(2) is a list of m row masks
(k bits each); over the integers it is a list of m rows of k ints. A dual
matrix has m columns: over GF(2) a list of m-bit row masks, over the
integers a list of length-m rows.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence

from . import gf2, zlattice
from .complexes import SimplicialComplex, full_mask

GF2 = "gf2"
INT = "int"

XI_DEFAULT_GUARD = 4
XI_DEFAULT_NODE_BUDGET = 400_000
SREAL_DEFAULT_MAX_K = 5
COVER_SEARCH_GUARD = 40
MATRIX_SCAN_BIT_LIMIT = 16


class SearchBudgetExceeded(RuntimeError):
    """A backtracking search hit its deterministic node budget."""


def _check_ring(ring: str) -> None:
    if ring not in (GF2, INT):
        raise ValueError(f"ring must be {GF2!r} or {INT!r}, got {ring!r}")


def _worker_count(threads: int) -> int:
    if threads < 0:
        raise ValueError("thread count must be >= 0")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def _first_hit(n_branches: int, run: Callable[[int], object], workers: int):
    """First (by branch index) non-None branch result.

    Branches are explored by a worker pool, but selection is by canonical
    branch order, so the outcome is independent of the worker count.
    """
    if workers <= 1 or n_branches <= 1:
        for i in range(n_branches):
            r = run(i)
            if r is not None:
                return r
        return None
    with ThreadPoolExecutor(max_workers=min(workers, n_branches)) as ex:
        futures = [ex.submit(run, i) for i in range(n_branches)]
        result = None
        for i, fut in enumerate(futures):
            r = fut.result()
            if r is not None:
                result = r
                for later in futures[i + 1 :]:
                    later.cancel()
                break
    return result


# ---------------------------------------------------------------------------
# matrix freeness conditions


def verify_S(K: SimplicialComplex, rows: Sequence, k: int, ring: str) -> bool:
    """Rows outside every maximal simplex must span the full rank-k lattice."""
    ok, _ = verify_S_detailed(K, rows, k, ring)
    return ok


def verify_S_detailed(K: SimplicialComplex, rows: Sequence, k: int, ring: str):
    """Like verify_S but also reports the first failing maximal simplex."""
    _check_ring(ring)
    if len(rows) != K.m:
        raise ValueError(f"matrix has {len(rows)} rows, complex has {K.m} vertices")
    for sigma in K.facets:
        outside = [rows[i] for i in range(K.m) if not sigma >> i & 1]
        if ring == GF2:
            good = gf2.spans_full(outside, k)
        else:
            good = zlattice.rows_span_lattice(outside, k)
        if not good:
            return False, sigma
    return True, None


def verify_Lambda(K: SimplicialComplex, rows: Sequence, ring: str) -> bool:
    """Columns indexed by every maximal simplex must be part of a basis."""
    ok, _ = verify_Lambda_detailed(K, rows, ring)
    return ok


def verify_Lambda_detailed(K: SimplicialComplex, rows: Sequence, ring: str):
    """Checked as the rows of each column-submatrix spanning the full space.

    A zero-row matrix (k = m) is vacuously accepted; at that degenerate
    boundary only the parametric condition is meaningful.
    """
    _check_ring(ring)
    if len(rows) == 0:
        return True, None
    if ring == INT and any(len(r) != K.m for r in rows):
        raise ValueError("dual matrix rows must have one entry per vertex")
    for sigma in K.facets:
        r = sigma.bit_count()
        if r == 0:
            continue
        cols = [c for c in range(K.m) if sigma >> c & 1]
        if ring == GF2:
            sub = [
                sum(((row >> c) & 1) << idx for idx, c in enumerate(cols))
                for row in rows
            ]
            good = gf2.spans_full(sub, r)
        else:
            sub = [[row[c] for c in cols] for row in rows]
            good = zlattice.rows_span_lattice(sub, r)
        if not good:
            return False, sigma
    return True, None


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def condition_prime_set(K: SimplicialComplex, rows: Sequence[Sequence[int]], k: int) -> list[int]:
    """Primes that can witness a spanning failure of some outside-row matrix.

    For any other prime the reduction of each outside-row set already spans,
    so the non-face condition cannot fail there: primes dividing a nonzero
    invariant factor, plus 2 whenever a factor is zero (rank deficiency).
    """
    primes: set[int] = set()
    for sigma in K.facets:
        outside = [rows[i] for i in range(K.m) if not sigma >> i & 1]
        factors = zlattice.smith_invariant_factors(outside) if outside else []
        factors = list(factors) + [0] * (k - len(factors))
        for d in factors:
            if d == 0:
                primes.add(2)
            elif d > 1:
                primes |= _prime_factors(d)
    return sorted(primes)


def _projective_reps(p: int, k: int):
    """One vector per projective point of Z_p^k (first nonzero coord = 1).

    Scaling by a unit preserves the pattern of nonvanishing inner products,
    so these representatives suffice for the non-face condition.
    """
    for lead in range(k):
        for tail in product(range(p), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def verify_nonsimplex_condition(K: SimplicialComplex, rows: Sequence, k: int, ring: str) -> bool:
    """Every nonzero vector must pair to nonzero with all rows of some
    minimal non-face (over GF(2), or mod every relevant prime)."""
    _check_ring(ring)
    if len(rows) != K.m:
        raise ValueError(f"matrix has {len(rows)} rows, complex has {K.m} vertices")
    nonsimp = K.minimal_nonsimplices()
    if k == 0:
        return True
    if ring == GF2:
        for a in range(1, 1 << k):
            served = 0
            for i, row in enumerate(rows):
                if (a & row).bit_count() & 1:
                    served |= 1 << i
            if not any(w & ~served == 0 for w in nonsimp):
                return False
        return True
    for p in condition_prime_set(K, rows, k):
        for a in _projective_reps(p, k):
            served = 0
            for i, row in enumerate(rows):
                if sum(x * y for x, y in zip(a, row)) % p:
                    served |= 1 << i
            if not any(w & ~served == 0 for w in nonsimp):
                return False
    return True


def dual_lambda(rows: Sequence, m: int, k: int, ring: str) -> list:
    """Complete a passing m x k matrix to its dual (m-k) x m counterpart.

    GF(2): a kernel basis of the column space. Integers: the trailing rows of
    the unimodular row transform of the Smith reduction, which requires the
    columns to be part of a basis (all invariant factors 1).
    """
    _check_ring(ring)
    if len(rows) != m:
        raise ValueError("row count does not match vertex count")
    if ring == GF2:
        cols = [
            sum(((rows[i] >> j) & 1) << i for i in range(m)) for j in range(k)
        ]
        basis = gf2.kernel_basis(cols, m)
        if len(basis) != m - k:
            raise ValueError("matrix does not have full column rank over GF(2)")
        return basis
    factors, u = zlattice.smith_row_transform(rows)
    if len(factors) != k or any(d != 1 for d in factors):
        raise ValueError("columns are not part of a basis of the integer lattice")
    return u[k:]


# ---------------------------------------------------------------------------
# xi mappings


@dataclass
class XiWitness:
    """Assignment of a minimal non-face to every nonzero vector of Z_2^k."""

    k: int
    assignment: dict[int, int]  # vector mask -> non-face mask


def validate_xi(K: SimplicialComplex, w: XiWitness) -> bool:
    nonsimp = set(K.minimal_nonsimplices())
    nvec = (1 << w.k) - 1
    if sorted(w.assignment) != list(range(1, nvec + 1)):
        return False
    if w.k and not all(om in nonsimp for om in w.assignment.values()):
        return False
    for circuit in gf2.odd_circuits(w.k) if w.k else ():
        inter = full_mask(K.m)
        for a in circuit:
            inter &= w.assignment[a]
        if inter:
            return False
    return True


def _swap_bits(mask: int, i: int, j: int) -> int:
    bi = mask >> i & 1
    bj = mask >> j & 1
    if bi != bj:
        mask ^= (1 << i) | (1 << j)
    return mask


def _gaussian_binomial(m: int, k: int) -> int:
    """Number of k-dimensional subspaces of Z_2^m."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for i in range(k):
        num *= (1 << m - i) - 1
        den *= (1 << k - i) - 1
    return num // den


EXISTENCE_SCAN_LIMIT = 1_000_000


def xi_witness_exists(K: SimplicialComplex, k: int) -> Optional[bool]:
    """Decide whether a rank-k xi mapping exists, via the subspace form of
    the matrix condition: one exists iff some k-dimensional subspace of
    Z_2^m consists (nonzero part) of vectors whose support contains a
    minimal non-face. Returns None when the subspace space is too large to
    scan; never returns a wrong answer.

    Enumeration visits each subspace once through its unique increasing
    basis of coset minima, pruning as soon as a bad vector enters the span.
    """
    if k == 0:
        return True
    nonsimp = K.minimal_nonsimplices()
    if not nonsimp:
        return False
    m = K.m
    if k > m:
        return False
    if _gaussian_binomial(m, k) > EXISTENCE_SCAN_LIMIT:
        return None
    good_cache: dict[int, bool] = {}

    def good(x: int) -> bool:
        r = good_cache.get(x)
        if r is None:
            r = any(w & ~x == 0 for w in nonsimp)
            good_cache[x] = r
        return r

    span = [0]

    def extend(start: int, depth: int) -> bool:
        if depth == k:
            return True
        for b in range(start, 1 << m):
            if not good(b):
                continue
            # unique generation: b must be the minimum of its coset
            if any(b ^ s < b for s in span if s):
                continue
            coset = [b ^ s for s in span]
            if all(good(t) for t in coset):
                span.extend(coset)
                if extend(b + 1, depth + 1):
                    return True
                del span[len(span) - len(coset):]
        return False

    return extend(1, 0)


def _xor_shuffle_masks(k: int) -> list[tuple[int, int]]:
    """Butterfly constants for remapping bit i -> bit i^v on 2^k-bit masks:
    per coordinate b, (shift 2^b, mask of positions with bit b clear)."""
    out = []
    size = 1 << k
    for b in range(k):
        s = 1 << b
        lo = 0
        for i in range(size):
            if not i >> b & 1:
                lo |= 1 << i
        out.append((s, lo))
    return out


def xi_search(
    K: SimplicialComplex,
    k: int,
    *,
    allow_large: bool = False,
    threads: int = 1,
    node_budget: int = XI_DEFAULT_NODE_BUDGET,
    stats: Optional[dict] = None,
    use_existence_filter: bool = True,
) -> Optional[XiWitness]:
    """Deterministic backtracking search for a xi mapping at rank k.

    Vectors are assigned in ascending mask order, candidate non-faces tried
    in canonical order, and a branch is cut when a fully assigned odd circuit
    has nonempty intersection (plus sound propagation that cannot change the
    outcome). Returns the first witness in that order, or None. Raises
    SearchBudgetExceeded after node_budget search nodes per first-level
    branch; the budget is counted deterministically, so results never depend
    on timing or worker count. Nonexistence is normally decided up front
    through the subspace form of the matrix condition (use_existence_filter);
    the backtracking itself settles the remaining cases.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return XiWitness(0, {})
    if k > XI_DEFAULT_GUARD and not allow_large:
        raise ValueError(
            f"k={k} above the default guard {XI_DEFAULT_GUARD}; pass allow_large=True"
        )
    nonsimp = list(K.minimal_nonsimplices())
    if not nonsimp:
        return None
    nvec = (1 << k) - 1
    m = K.m
    if use_existence_filter and xi_witness_exists(K, k) is False:
        # refuting through the subspace form of the matrix condition is far
        # cheaper than exhausting the assignment tree; the backtracking
        # below then only ever runs to produce the canonical witness
        return None

    # Accepting an image for a vector is equivalent to keeping, for every
    # vertex x of the image, the affine system {<a, y> = 1 : x in xi(a)}
    # consistent: an odd dependency splits into disjoint circuits, one of
    # them odd, which is exactly a fully assigned circuit whose images all
    # contain x. Per vertex the whole affine closure is kept as two masks
    # over Z_2^k (span members / members forced to 0), so rejecting a
    # candidate is one AND against forbid[v] = {x : v forced to 0 at x},
    # and every future vector gets full one-step lookahead.
    butterflies = _xor_shuffle_masks(k)
    # failure of a search state is invariant under complex automorphisms, so
    # memo states are canonicalized per orbit: a full sort when every vertex
    # permutation preserves the non-faces (adjacent transpositions generate
    # S_m), otherwise the minimum over a bounded automorphism sample
    ns_set = set(nonsimp)
    symmetric = all(
        {_swap_bits(w, i, i + 1) for w in ns_set} == ns_set for i in range(m - 1)
    )
    auts = () if symmetric else K.automorphisms()[:64]
    if len(auts) <= 1:
        auts = ()
    # candidate domain summary per forbidden-vertex mask: (0, None) dead,
    # (1, om) forced, (2, None) still open
    domain_cache: dict[int, tuple[int, Optional[int]]] = {}

    def domain_info(mask: int) -> tuple[int, Optional[int]]:
        r = domain_cache.get(mask)
        if r is None:
            first = None
            count = 0
            for w in nonsimp:
                if w & mask == 0:
                    count += 1
                    if count == 1:
                        first = w
                    else:
                        first = None
                        break
            r = (count, first)
            domain_cache[mask] = r
        return r

    BUDGET = "budget"

    def run_branch(ci: int):
        span = [1] * m   # bit s: vector s lies in the span at this vertex
        zero = [1] * m   # bit s: <s, y> is forced to 0 there
        assign = [0] * (nvec + 1)
        forbid = [0] * (nvec + 2)  # vertex mask per vector, = {x : v in zero}
        # the closure masks are canonical and determine the whole subtree
        # (including which placements are forced), so exhausted states can
        # be cut on re-entry
        failed: set[tuple[int, ...]] = set()
        trail: list[tuple] = []  # ('c', x, span, zero, add_zero) | ('a', v)
        nodes = 0

        def shuffle(mask: int, v: int) -> int:
            for b in range(k):
                if v >> b & 1:
                    s, lo = butterflies[b]
                    mask = (mask >> s) & lo | (mask & lo) << s
            return mask

        def place(v: int, om: int) -> bool:
            """Insert <v, y> = 1 at every vertex of om, then unit-propagate:
            a future vector whose domain shrank to one non-face is placed at
            once (such moves are implied by every completion). Appends undo
            records to the shared trail; False means dead end."""
            touched = []
            rest = om
            while rest:
                x = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                sp = span[x]
                if sp >> v & 1:
                    continue  # already implied with value 1
                zx = zero[x]
                # new span coset s^v; forced-to-0 elements come from parity-1
                add_zero = shuffle(sp ^ zx, v)
                trail.append(("c", x, sp, zx, add_zero))
                span[x] = sp | shuffle(sp, v)
                zero[x] = zx | add_zero
                bits = add_zero
                while bits:
                    low = bits & -bits
                    w = low.bit_length() - 1
                    bits ^= low
                    forbid[w] |= 1 << x
                    if not assign[w]:
                        touched.append(w)
            assign[v] = om
            trail.append(("a", v))
            for w in sorted(set(touched)):
                if assign[w]:
                    continue
                count, only = domain_info(forbid[w])
                if count == 0:
                    return False
                if count == 1 and not place(w, only):
                    return False
            return True

        def unwind(mark: int) -> None:
            while len(trail) > mark:
                rec = trail.pop()
                if rec[0] == "a":
                    assign[rec[1]] = 0
                    continue
                _, x, sp, zx, add_zero = rec
                span[x] = sp
                zero[x] = zx
                bits = add_zero
                while bits:
                    low = bits & -bits
                    w = low.bit_length() - 1
                    bits ^= low
                    forbid[w] &= ~(1 << x)

        def dfs(v: int) -> Optional[bool]:
            nonlocal nodes
            while v <= nvec and assign[v]:
                v += 1
            if v > nvec:
                return True
            nodes += 1
            if nodes > node_budget:
                return None
            parts = [sp << (nvec + 1) | zr for sp, zr in zip(span, zero)]
            if symmetric:
                parts.sort()
            elif auts:
                parts = min(tuple(parts[x] for x in perm) for perm in auts)
            key = (v, *parts)
            if key in failed:
                return False
            blocked = forbid[v]
            for om in nonsimp:
                if om & blocked:
                    continue
                mark = len(trail)
                if place(v, om):
                    sub = dfs(v + 1)
                    if sub:
                        return True
                    unwind(mark)
                    if sub is None:
                        return None
                else:
                    unwind(mark)
            if len(failed) < 500_000:
                failed.add(key)
            return False

        if not place(1, nonsimp[ci]):
            return None
        sub = True if nvec == 1 else dfs(2)
        if stats is not None:
            stats["nodes"] = stats.get("nodes", 0) + nodes
        if sub is None:
            return BUDGET
        if sub:
            return {v: assign[v] for v in range(1, nvec + 1)}
        return None

    hit = _first_hit(len(nonsimp), run_branch, _worker_count(threads))
    if hit is None:
        return None
    if hit == BUDGET:
        raise SearchBudgetExceeded(
            f"xi search at k={k} exceeded {node_budget} nodes in one branch"
        )
    return XiWitness(k, hit)


def xi_to_matrix(K: SimplicialComplex, w: XiWitness) -> list[int]:
    """Build GF(2) rows from a xi witness: row i solves <a, x> = 1 over all
    vectors a whose image contains vertex i. Always solvable for a valid
    witness (odd dependencies inside each system are excluded)."""
    rows = []
    for i in range(K.m):
        constraints = [a for a in sorted(w.assignment) if w.assignment[a] >> i & 1]
        x = gf2.solve_all_ones(constraints, w.k)
        if x is None:
            raise ValueError("inconsistent xi witness: row system has no solution")
        rows.append(x)
    return rows


def matrix_search(K: SimplicialComplex, k: int, *, threads: int = 1) -> Optional[list[int]]:
    """Exhaustive-scan oracle: first m x k GF(2) matrix passing verify_S.

    Matrices are ordered by their row tuples (first row most significant).
    Intended for cross-validation at tiny sizes only.
    """
    m = K.m
    if k == 0:
        return [0] * m
    if m * k > MATRIX_SCAN_BIT_LIMIT:
        raise ValueError(
            f"matrix scan needs m*k <= {MATRIX_SCAN_BIT_LIMIT}, got {m}*{k}"
        )
    outs = [
        [i for i in range(m) if not sigma >> i & 1] for sigma in K.facets
    ]
    if any(len(o) < k for o in outs):
        return None
    outs.sort(key=len)
    space = 1 << k

    def run_branch(r0: int) -> Optional[list[int]]:
        for rest in product(range(space), repeat=m - 1):
            rows = (r0,) + rest
            ok = True
            for out in outs:
                pivots: dict[int, int] = {}
                cnt = 0
                for i in out:
                    v = rows[i]
                    while v:
                        low = v & -v
                        b = pivots.get(low)
                        if b is None:
                            pivots[low] = v
                            cnt += 1
                            break
                        v ^= b
                    if cnt == k:
                        break
                if cnt < k:
                    ok = False
                    break
            if ok:
                return list(rows)
        return None

    return _first_hit(space, run_branch, _worker_count(threads))


# ---------------------------------------------------------------------------
# exact real invariant


@dataclass
class SRealResult:
    """Outcome of the ascending xi search: exact value, or a verified interval
    when the resource guard stopped the climb early."""

    lower: int
    upper: int
    exact: bool
    xi_witness: Optional[XiWitness]
    matrix_rows: Optional[list[int]]

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


def s_real(
    K: SimplicialComplex,
    *,
    max_k: int = SREAL_DEFAULT_MAX_K,
    threads: int = 1,
    node_budget: int = XI_DEFAULT_NODE_BUDGET,
) -> SRealResult:
    """Largest k admitting a xi mapping, climbing k = 1, 2, ... and stopping
    at the first failure, the upper bound m - dim - 1, or a resource guard
    (k cap or per-search node budget); a guarded stop yields an interval."""
    ub = K.m - K.dimension - 1
    cap = min(ub, max(0, max_k))
    best: Optional[XiWitness] = None
    value = 0
    for k in range(1, cap + 1):
        try:
            w = xi_search(
                K, k, allow_large=True, threads=threads, node_budget=node_budget
            )
        except SearchBudgetExceeded:
            mat = xi_to_matrix(K, best) if best else None
            return SRealResult(value, ub, False, best, mat)
        if w is None:
            mat = xi_to_matrix(K, best) if best else None
            return SRealResult(value, value, True, best, mat)
        best = w
        value = k
    mat = xi_to_matrix(K, best) if best else None
    if value == ub:
        return SRealResult(value, value, True, best, mat)
    return SRealResult(value, ub, False, best, mat)


# ---------------------------------------------------------------------------
# level criteria on the minimal non-faces


@dataclass
class CriterionWitness:
    """Matched configuration: paper-facing case index and the tuple of
    minimal non-faces instantiating it."""

    level: int
    case: int
    sets: tuple[int, ...]


# (case index, tuple size, empty-intersection constraints on 1-based slots),
# scanned in ascending tuple size for early exit
S3_CONFIGURATIONS: tuple[tuple[int, int, tuple[tuple[int, ...], ...]], ...] = (
    (5, 3, ((1, 2), (1, 3), (2, 3))),
    (4, 4, ((1, 2), (1, 3), (1, 4), (2, 3, 4))),
    (3, 5, ((1, 2), (1, 5), (1, 3, 4), (2, 3, 5), (2, 4, 5))),
    (2, 6, ((1, 3), (1, 2, 4), (1, 2, 5), (1, 4, 6), (1, 5, 6), (2, 3, 6), (3, 4, 5))),
    (1, 7, ((1, 2, 4), (1, 3, 5), (1, 6, 7), (2, 3, 6), (2, 5, 7), (3, 4, 7), (4, 5, 6))),
)


def _find_s2(nonsimp: Sequence[int]) -> Optional[CriterionWitness]:
    n = len(nonsimp)
    for i in range(n):
        for j in range(i + 1, n):
            if nonsimp[i] & nonsimp[j] == 0:
                return CriterionWitness(2, 2, (nonsimp[i], nonsimp[j]))
    for i in range(n):
        for j in range(i + 1, n):
            ij = nonsimp[i] & nonsimp[j]
            for l in range(j + 1, n):
                if ij & nonsimp[l] == 0:
                    return CriterionWitness(2, 1, (nonsimp[i], nonsimp[j], nonsimp[l]))
    return None


def _find_s3(nonsimp: Sequence[int]) -> Optional[CriterionWitness]:
    n = len(nonsimp)
    for case, size, constraints in S3_CONFIGURATIONS:
        if n < size:
            continue
        by_depth: list[list[tuple[int, ...]]] = [[] for _ in range(size + 1)]
        for cons in constraints:
            by_depth[max(cons)].append(cons)
        chosen: list[int] = []
        used = [False] * n

        def place(depth: int) -> bool:
            if depth > size:
                return True
            for idx in range(n):
                if used[idx]:
                    continue
                chosen.append(nonsimp[idx])
                ok = True
                for cons in by_depth[depth]:
                    inter = chosen[cons[0] - 1]
                    for pos in cons[1:]:
                        inter &= chosen[pos - 1]
                        if not inter:
                            break
                    if inter:
                        ok = False
                        break
                if ok:
                    used[idx] = True
                    if place(depth + 1):
                        return True
                    used[idx] = False
                chosen.pop()
            return False

        if place(1):
            return CriterionWitness(3, case, tuple(chosen))
    return None


def check_criteria(K: SimplicialComplex) -> tuple[int, Optional[CriterionWitness]]:
    """Largest level r in 0..3 whose non-face configuration is present.

    Level 1 needs a nonempty non-face set; level 2 a disjoint pair or a
    triple with empty common intersection; level 3 one of the five listed
    configurations (scanned pairs-then-triples, then ascending tuple size).
    """
    nonsimp = K.minimal_nonsimplices()
    if not nonsimp:
        return 0, None
    s2 = _find_s2(nonsimp)
    if s2 is None:
        return 1, CriterionWitness(1, 1, (nonsimp[0],))
    s3 = _find_s3(nonsimp)
    if s3 is not None:
        return 3, s3
    return 2, s2


# ---------------------------------------------------------------------------
# lower bounds


@dataclass
class CoverBound:
    """Best value of m - sum |w_i| + l over non-face selections covering all
    vertices; 0 with coverable=False when the non-faces cannot cover."""

    value: int
    cover: tuple[int, ...]
    coverable: bool
    heuristic: bool


def _greedy_cover(nonsimp: Sequence[int], m: int) -> list[int]:
    full = full_mask(m)
    covered = 0
    picked: list[int] = []
    while covered != full:
        best_idx = -1
        best_key = None
        for idx, w in enumerate(nonsimp):
            if idx in picked:
                continue
            new = (w & ~covered).bit_count()
            if new == 0:
                continue
            cost = w.bit_count() - 1
            key = (cost / new, idx)
            if best_key is None or key < best_key:
                best_key = key
                best_idx = idx
        picked.append(best_idx)
        covered |= nonsimp[best_idx]
    return picked


def cover_lower_bound(K: SimplicialComplex, *, guard: int = COVER_SEARCH_GUARD) -> CoverBound:
    """Branch-and-bound weighted cover over the minimal non-faces.

    Maximizing m - sum |w_i| + l is minimizing sum (|w_i| - 1) subject to
    covering every vertex; branching is on the lowest uncovered vertex with
    candidates in canonical order, so the optimal cover returned is the
    canonically first one.
    """
    nonsimp = K.minimal_nonsimplices()
    m = K.m
    full = full_mask(m)
    union = 0
    for w in nonsimp:
        union |= w
    if union != full:
        return CoverBound(0, (), False, False)
    costs = [w.bit_count() - 1 for w in nonsimp]
    if len(nonsimp) > guard:
        picked = _greedy_cover(nonsimp, m)
        cost = sum(costs[i] for i in picked)
        return CoverBound(m - cost, tuple(sorted(nonsimp[i] for i in picked)), True, True)
    sets_with = [
        [idx for idx, w in enumerate(nonsimp) if w >> v & 1] for v in range(m)
    ]
    # cheapest possible cost per newly covered vertex, kept as an exact fraction
    rn, rd = min(
        ((costs[i], nonsimp[i].bit_count()) for i in range(len(nonsimp))),
        key=lambda t: Fraction(t[0], t[1]),
    )
    greedy = _greedy_cover(nonsimp, m)
    best_cost = sum(costs[i] for i in greedy)
    best_sel = list(greedy)

    def dfs(covered: int, cost: int, chosen: list[int]) -> None:
        nonlocal best_cost, best_sel
        if covered == full:
            if cost < best_cost:
                best_cost = cost
                best_sel = list(chosen)
            return
        uncov = (full & ~covered).bit_count()
        # each set covers <= |w| new vertices at cost |w| - 1
        lower = -(-uncov * rn // rd)
        if cost + lower >= best_cost:
            return
        v = ((full & ~covered) & -(full & ~covered)).bit_length() - 1
        for idx in sets_with[v]:
            w = nonsimp[idx]
            chosen.append(idx)
            dfs(covered | w, cost + costs[idx], chosen)
            chosen.pop()

    dfs(0, 0, [])
    return CoverBound(m - best_cost, tuple(sorted(nonsimp[i] for i in best_sel)), True, False)


def chromatic_number(K: SimplicialComplex) -> int:
    """Exact chromatic number of a complex of dimension <= 1.

    Backtracking with vertices in descending-degree order and the usual
    first-new-color symmetry break; ghost vertices are not colored.
    """
    if K.dimension > 1:
        raise ValueError("chromatic number is defined here only for dim <= 1")
    verts = [v for v in range(K.m) if K.contains_face(1 << v)]
    if not verts:
        return 0
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [0] * n
    for f in K.facets:
        if f.bit_count() == 2:
            lo = (f & -f).bit_length() - 1
            hi = f.bit_length() - 1
            a, b = index[lo], index[hi]
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    order = sorted(range(n), key=lambda i: (-adj[i].bit_count(), i))
    colors = [0] * n
    best = n + 1

    def solve(pos: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if pos == n:
            best = used
            return
        v = order[pos]
        taken = 0
        neigh = adj[v]
        while neigh:
            u = (neigh & -neigh).bit_length() - 1
            neigh &= neigh - 1
            if colors[u]:
                taken |= 1 << colors[u]
        for c in range(1, min(used + 1, best - 1) + 1):
            if not taken >> c & 1:
                colors[v] = c
                solve(pos + 1, max(used, c))
                colors[v] = 0

    solve(0, 0)
    return best


def ayzenberg_s(K: SimplicialComplex) -> int:
    """Exact invariant of a graph complex: m - ceil(log2(gamma + 1)).

    Extends to the edgeless (gamma = 1) and empty (gamma = 0) cases, where
    the formula still matches the search value.
    """
    if K.dimension > 1:
        raise ValueError("graph formula needs a complex of dimension <= 1")
    gamma = chromatic_number(K)
    return K.m - gamma.bit_length()


# ---------------------------------------------------------------------------
# report


@dataclass
class InvariantReport:
    m: int
    dim: int
    num_min_nonsimplices: int
    is_flag: bool
    ghost_vertices: tuple[int, ...]
    upper_bound: int
    criteria_level: int
    criterion_witness: Optional[CriterionWitness]
    cover: CoverBound
    graph_chromatic: Optional[int]
    ayzenberg_value: Optional[int]
    chromatic_bound: Optional[int]
    s_real_lower: int
    s_real_upper: int
    s_real_exact: bool
    s_real_searched: int
    xi_witness: Optional[XiWitness]
    matrix_rows: Optional[list[int]]
    s_lower: int
    s_upper: int
    s_exact: bool
    warnings: tuple[str, ...]

    @property
    def s_value(self) -> Optional[int]:
        return self.s_lower if self.s_exact else None

    @property
    def s_real_value(self) -> Optional[int]:
        return self.s_real_lower if self.s_real_exact else None


def analyze(
    K: SimplicialComplex,
    *,
    polytopal: bool = False,
    max_k: int = SREAL_DEFAULT_MAX_K,
    threads: int = 1,
    node_budget: int = XI_DEFAULT_NODE_BUDGET,
) -> InvariantReport:
    """Full report: bounds, criteria level, exact values where determined,
    and the witnesses backing them."""
    nonsimp = K.minimal_nonsimplices()
    dim = K.dimension
    ub = K.m - dim - 1
    level, crit_w = check_criteria(K)
    cover = cover_lower_bound(K)
    sr = s_real(K, max_k=max_k, threads=threads, node_budget=node_budget)
    warnings: list[str] = []
    ghosts = tuple(K.ghost_vertices())
    if ghosts:
        warnings.append(
            "ghost vertices (not faces): " + ", ".join(map(str, ghosts))
        )
    if cover.heuristic:
        warnings.append("cover bound is greedy (non-face count above search guard)")
    gamma = None
    ayz = None
    if dim <= 1:
        gamma = chromatic_number(K)
        ayz = K.m - gamma.bit_length()
    chrom_bound = None
    if polytopal:
        chrom_bound = K.m - chromatic_number(K.one_skeleton())
    s_lower = max(level, cover.value)
    if chrom_bound is not None:
        s_lower = max(s_lower, chrom_bound)
    if ayz is not None:
        # graph formula is exact
        s_lower = s_upper = ayz
    else:
        s_upper = sr.upper
        if sr.exact and sr.lower <= 3:
            # at or below rank 3 the real and integral invariants agree
            s_lower = s_upper = sr.lower
    # the integral invariant never exceeds the real one
    sr_lower = max(sr.lower, s_lower)
    sr_exact = sr.exact or sr_lower == sr.upper
    if sr_lower > sr.lower:
        warnings.append(
            "real invariant lower bound tightened by integral bounds; "
            f"witnesses certify rank {sr.lower}"
        )
    if not sr_exact:
        warnings.append(
            f"search guard stopped at k={sr.lower}; real invariant reported as interval"
        )
    return InvariantReport(
        m=K.m,
        dim=dim,
        num_min_nonsimplices=len(nonsimp),
        is_flag=K.is_flag(),
        ghost_vertices=ghosts,
        upper_bound=ub,
        criteria_level=level,
        criterion_witness=crit_w,
        cover=cover,
        graph_chromatic=gamma,
        ayzenberg_value=ayz,
        chromatic_bound=chrom_bound,
        s_real_lower=sr_lower,
        s_real_upper=sr.upper,
        s_real_exact=sr_exact,
        s_real_searched=sr.lower,
        xi_witness=sr.xi_witness,
        matrix_rows=sr.matrix_rows,
        s_lower=s_lower,
        s_upper=s_upper,
        s_exact=s_lower == s_upper,
        warnings=tuple(warnings),
    )


def oracle_check(K: SimplicialComplex, k: int, *, threads: int = 1) -> dict:
    """Side-by-side xi search, matrix-scan oracle (when tractable) and the
    level criteria at rank k, with an agreement verdict."""
    xi = xi_search(K, k, allow_large=True, threads=threads) is not None
    if K.m * k <= MATRIX_SCAN_BIT_LIMIT:
        mat = matrix_search(K, k, threads=threads) is not None
    else:
        mat = None
    crit = check_criteria(K)[0] >= k if k <= 3 else None
    votes = [v for v in (xi, mat, crit) if v is not None]
    return {
        "k": k,
        "xi": xi,
        "matrix": mat,
        "criteria": crit,
        "agree": all(v == votes[0] for v in votes),
    }
