"""Fast convexity routines for prime graphs (no clique separator).

On a prime graph a proper convex set is exactly a clique whose outside
vertices see at most one of its members, which collapses the convexity
test and the hull to quadratic bit work and makes the convex family small
enough to enumerate outright.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import VertexSet, bit_members
from .errors import ContractViolationError
from .graph import Graph


@dataclass(frozen=True, slots=True)
class PrimeConvexFamily:
    """Every convex set of a prime graph, sorted by size then members."""

    sets: tuple[VertexSet, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def _require_prime(g: Graph) -> None:
    from .decomposition import is_prime

    if not is_prime(g):
        raise ContractViolationError("graph is not prime")


def _is_clique(adj: list[int], bits: int) -> bool:
    for v in bit_members(bits):
        if bits & ~adj[v] & ~(1 << v):
            return False
    return True


def _prime_convex_bits(adj: list[int], full: int, bits: int) -> bool:
    if bits == full:
        return True
    if not _is_clique(adj, bits):
        return False
    outside = full & ~bits
    while outside:
        low = outside & -outside
        outside ^= low
        if (adj[low.bit_length() - 1] & bits).bit_count() >= 2:
            return False
    return True


def prime_is_t_convex(g: Graph, s: VertexSet, checked: bool = False) -> bool:
    """Convexity test for prime graphs: clique with no doubly-seen outside.

    The caller guarantees primality; pass checked=True to have it verified
    (used by tests and the CLI's --checked mode).
    """
    if checked:
        _require_prime(g)
    return _prime_convex_bits(g._adj, (1 << g.n) - 1, s.bits)


def prime_t_hull(g: Graph, s: VertexSet, checked: bool = False) -> VertexSet:
    """Hull in a prime graph: one closure round decides everything.

    A non-clique seed already hulls to V. Otherwise add the outside
    vertices with two neighbours in the seed; if that is convex it is the
    hull, and if not the hull is V.
    """
    if checked:
        _require_prime(g)
    adj = g._adj
    full = (1 << g.n) - 1
    bits = s.bits
    if bits == full:
        return VertexSet(g.n, full)
    if not _is_clique(adj, bits):
        return VertexSet(g.n, full)
    ext = bits
    outside = full & ~bits
    while outside:
        low = outside & -outside
        outside ^= low
        if (adj[low.bit_length() - 1] & bits).bit_count() >= 2:
            ext |= low
    if _prime_convex_bits(adj, full, ext):
        return VertexSet(g.n, ext)
    return VertexSet(g.n, full)


def enumerate_prime_convex_sets(g: Graph, checked: bool = False) -> PrimeConvexFamily:
    """All convex sets of a prime graph.

    Seeds the family with the trivial sets, then closes each edge once: the
    candidate for edge uv is {u, v} plus their common neighbours, kept when
    convex. All edges inside an accepted candidate are dropped from the
    worklist, which is what keeps every set from being produced twice.
    """
    if checked:
        _require_prime(g)
    adj = g._adj
    n = g.n
    full = (1 << n) - 1
    family = {0, full}
    for v in range(n):
        family.add(1 << v)
    done: set[tuple[int, int]] = set()
    for u, v in g.edges():
        if (u, v) in done:
            continue
        cand = (1 << u) | (1 << v) | (adj[u] & adj[v])
        if _prime_convex_bits(adj, full, cand):
            family.add(cand)
        for a in bit_members(cand):
            for b in bit_members(adj[a] & cand & ~((1 << (a + 1)) - 1)):
                done.add((a, b))
    ordered = sorted(family, key=lambda b: (b.bit_count(), tuple(bit_members(b))))
    return PrimeConvexFamily(tuple(VertexSet(n, b) for b in ordered))
