"""Simplicial complexes on labeled vertices, stored as bitmask face sets.

A face on vertex set {1, ..., m} is packed into an int: bit i-1 <-> vertex i.
All set algebra (cardinality, union, intersection, subset tests) is then a
single machine-word operation, which is what the search layers rely on.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64

# Crossover between the two minimal-non-face algorithms: below this the full
# ascending-cardinality subset scan is cheap, above it the transversal
# computation wins by orders of magnitude.
SCAN_VERTEX_LIMIT = 10


def face_mask(vertices: Iterable[int], m: int) -> int:
    """Pack 1-based vertices into a bitmask, validating the range."""
    mask = 0
    for v in vertices:
        if not 1 <= v <= m:
            raise ValueError(f"vertex {v} out of range 1..{m}")
        mask |= 1 << (v - 1)
    return mask


def face_vertices(mask: int) -> list[int]:
    """Unpack a bitmask into a sorted list of 1-based vertices."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def full_mask(m: int) -> int:
    return (1 << m) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of mask as single-bit ints, lowest first."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def is_antichain(masks: Iterable[int]) -> bool:
    """True when no mask in the collection strictly contains another."""
    ms = list(masks)
    for a, b in combinations(ms, 2):
        if a & b == a or a & b == b:
            return False
    return True


def minimal_transversals(sets: Iterable[int], m: int) -> list[int]:
    """All minimal hitting sets of a family of vertex-set masks.

    Incremental construction: maintain the minimal transversals of the
    processed prefix; a set containing the empty set is unhittable and
    yields []. Dominated (superset) inputs are redundant and dropped.
    """
    family = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    if any(s == 0 for s in family):
        return []
    reduced: list[int] = []
    for s in family:
        if not any(t & ~s == 0 for t in reduced):
            reduced.append(s)
    trans = [0]
    for s in reduced:
        hit = []
        miss = []
        for t in trans:
            (hit if t & s else miss).append(t)
        new = hit[:]
        for t in miss:
            for bit in iter_bits(s):
                cand = t | bit
                # cand is non-minimal iff it contains a transversal that
                # already hits s; candidates from distinct t are incomparable.
                if not any(u & ~cand == 0 for u in hit):
                    new.append(cand)
        trans = new
    return sorted(trans)


class SimplicialComplex:
    """A simplicial complex given by its antichain of maximal faces.

    Instances are immutable after construction; the minimal non-face list is
    filled at most once and then shared, so objects are safe to use from
    concurrent workers.
    """

    __slots__ = ("m", "facets", "_nonsimplices", "_dim", "_auts")

    def __init__(self, m: int, facets: Iterable[int]):
        if not 1 <= m <= MAX_VERTICES:
            raise ValueError(f"vertex count m={m} outside 1..{MAX_VERTICES}")
        self.m = m
        fm = full_mask(m)
        raw = sorted(set(facets))
        for f in raw:
            if f & ~fm:
                raise ValueError(f"facet {face_vertices(f)} references a vertex above m={m}")
        kept = []
        for f in raw:
            if not any(f != g and f & ~g == 0 for g in raw):
                kept.append(f)
        if not kept:
            kept = [0]
        self.facets = tuple(kept)
        self._nonsimplices: tuple[int, ...] | None = None
        self._auts: tuple[tuple[int, ...], ...] | None = None
        self._dim = max(f.bit_count() for f in self.facets) - 1

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(m, (face_mask(f, m) for f in facets))

    @classmethod
    def from_min_nonsimplices(cls, m: int, nonsimplices: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = [face_mask(w, m) for w in nonsimplices]
        return cls.from_min_nonsimplex_masks(m, masks)

    @classmethod
    def from_min_nonsimplex_masks(cls, m: int, masks: Iterable[int]) -> "SimplicialComplex":
        """Reconstruct the unique complex whose minimal non-faces are given.

        A subset is a face iff it contains no listed non-face, so the maximal
        faces are exactly the complements of the minimal transversals of the
        non-face family.
        """
        if not 1 <= m <= MAX_VERTICES:
            raise ValueError(f"vertex count m={m} outside 1..{MAX_VERTICES}")
        ms = list(masks)
        fm = full_mask(m)
        for w in ms:
            if w == 0:
                raise ValueError("minimal non-face must be nonempty")
            if w & ~fm:
                raise ValueError("non-face references a vertex above m")
        if not is_antichain(ms):
            raise ValueError("minimal non-faces must form an antichain")
        facets = [fm ^ t for t in minimal_transversals(ms, m)]
        return cls(m, facets)

    # -- queries ---------------------------------------------------------

    @property
    def dimension(self) -> int:
        """max |F| - 1 over maximal faces; -1 for the empty complex."""
        return self._dim

    def maximal_simplices(self) -> tuple[int, ...]:
        return self.facets

    def contains_face(self, sigma: int) -> bool:
        for f in self.facets:
            if sigma & ~f == 0:
                return True
        return False

    def minimal_nonsimplices(self) -> tuple[int, ...]:
        """The antichain of minimal non-faces, canonically ordered; cached."""
        if self._nonsimplices is None:
            if self.m <= SCAN_VERTEX_LIMIT:
                ns = minimal_nonsimplices_by_scan(self)
            else:
                ns = minimal_nonsimplices_by_transversal(self)
            self._nonsimplices = tuple(ns)
        return self._nonsimplices

    def is_flag(self) -> bool:
        return all(w.bit_count() == 2 for w in self.minimal_nonsimplices())

    def vertices(self) -> list[int]:
        """1-based vertices that are faces (ghost vertices excluded)."""
        support = 0
        for f in self.facets:
            support |= f
        return face_vertices(support)

    def ghost_vertices(self) -> list[int]:
        support = 0
        for f in self.facets:
            support |= f
        return face_vertices(full_mask(self.m) & ~support)

    def one_skeleton(self) -> "SimplicialComplex":
        """Subcomplex of all faces with at most 2 vertices."""
        faces = []
        for v in range(self.m):
            if self.contains_face(1 << v):
                faces.append(1 << v)
        for u, v in combinations(range(self.m), 2):
            e = (1 << u) | (1 << v)
            if self.contains_face(e):
                faces.append(e)
        return SimplicialComplex(self.m, faces)

    def edges(self) -> list[int]:
        return [f for f in self.one_skeleton().facets if f.bit_count() == 2]

    def automorphisms(self, limit: int = 256) -> tuple[tuple[int, ...], ...]:
        """Up to `limit` vertex permutations preserving the facet family,
        identity first; cached. The search layers use them to merge
        relabeled states, so a truncated list is still sound."""
        if self._auts is None:
            fset = set(self.facets)
            m = self.m
            sig = []
            for x in range(m):
                sizes = sorted(f.bit_count() for f in self.facets if f >> x & 1)
                sig.append((len(sizes), tuple(sizes)))
            found: list[tuple[int, ...]] = [tuple(range(m))]
            image = [-1] * m
            used = [False] * m

            def extend(x: int) -> None:
                if len(found) >= limit:
                    return
                if x == m:
                    perm = tuple(image)
                    if perm != found[0]:
                        found.append(perm)
                    return
                domain_mask = (1 << x) - 1
                for y in range(m):
                    if used[y] or sig[y] != sig[x]:
                        continue
                    image[x] = y
                    used[y] = True
                    ok = True
                    # facets fully inside the assigned prefix must map to facets
                    for f in fset:
                        if f & ~(domain_mask | (1 << x)):
                            continue
                        g = 0
                        rest = f
                        while rest:
                            low = rest & -rest
                            rest ^= low
                            g |= 1 << image[low.bit_length() - 1]
                        if g not in fset:
                            ok = False
                            break
                    if ok:
                        extend(x + 1)
                    used[y] = False
                image[x] = -1

            extend(0)
            self._auts = tuple(found)
        return self._auts

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.m, self.facets))

    def __repr__(self) -> str:
        faces = ", ".join("{" + ",".join(map(str, face_vertices(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{faces}])"


def minimal_nonsimplices_by_scan(K: SimplicialComplex) -> list[int]:
    """Ascending-cardinality subset scan for minimal non-faces.

    A subset is a minimal non-face iff it is not a face but all its
    one-element-smaller subsets are. Exponential in m; use only at desk scale.
    """
    out = []
    for t in range(1, K.m + 1):
        for combo in combinations(range(K.m), t):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if K.contains_face(mask):
                continue
            if all(K.contains_face(mask ^ (1 << v)) for v in combo):
                out.append(mask)
    return sorted(out)


def minimal_nonsimplices_by_transversal(K: SimplicialComplex) -> list[int]:
    """Minimal non-faces as minimal transversals of the facet complements.

    A subset fails to fit in facet F exactly when it meets [m]\\F, so the
    minimal non-faces are the minimal hitting sets of {[m]\\F}.
    """
    fm = full_mask(K.m)
    return minimal_transversals([fm ^ f for f in K.facets], K.m)
