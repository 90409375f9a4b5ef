"""Maximum proper convex set of a connected graph.

Every maximum proper convex set arises from a convex set C of a single
atom, extended by the components of G - C that avoid the rest of that
atom. Scanning the atoms' (small) convex families and keeping the largest
extension therefore solves the problem in polynomial time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import VertexSet
from .convexity import is_t_convex
from .decomposition import Decomposition, decompose
from .errors import AlgorithmError, ContractViolationError, ValidationError
from .graph import Graph, _components_bits, is_connected
from .prime import enumerate_prime_convex_sets, prime_is_t_convex


@dataclass(frozen=True, slots=True)
class ConvexityNumberResult:
    """value = |witness|; witness is a maximum proper convex set of G.

    atom_index and seed record the atom and the atom-convex set whose
    extension realised the maximum.
    """

    value: int
    witness: VertexSet
    atom_index: int
    seed: VertexSet


def convex_extension(
    g: Graph, dec: Decomposition, i: int, c: VertexSet, checked: bool = False
) -> VertexSet:
    """Extend a convex set of atom i by the components of G - c that avoid
    the rest of the atom. The result is convex in G whenever c is convex
    in the atom."""
    f_bits = dec.atoms[i].bits
    if checked:
        sub, vertices = g.induced(dec.atoms[i])
        local = 0
        for pos, v in enumerate(vertices):
            if (c.bits >> v) & 1:
                local |= 1 << pos
        if c.bits & ~f_bits or not prime_is_t_convex(sub, VertexSet(sub.n, local)):
            raise ContractViolationError("seed is not a convex set of the atom")
    out = c.bits
    remainder = f_bits & ~c.bits
    for comp in _components_bits(g._adj, ((1 << g.n) - 1) & ~c.bits):
        if not comp & remainder:
            out |= comp
    return VertexSet(g.n, out)


def convexity_number(g: Graph) -> ConvexityNumberResult:
    """Size of a maximum proper convex set, with the set as witness.

    Scans atoms in decomposition order and each atom's convex sets in
    (size, members) order; the first pair achieving the maximum wins, so
    results are deterministic. The witness is re-checked before returning.
    """
    if g.n < 2:
        raise ValidationError("convexity number needs at least two vertices")
    if not is_connected(g):
        raise ValidationError("convexity number requires a connected graph")
    dec = decompose(g)
    full = (1 << g.n) - 1
    best = ConvexityNumberResult(0, VertexSet(g.n, 0), -1, VertexSet(g.n, 0))
    for i, atom in enumerate(dec.atoms):
        sub, vertices = g.induced(atom)
        for local in enumerate_prime_convex_sets(sub):
            if local.bits == (1 << sub.n) - 1:
                continue
            seed_bits = 0
            for pos in local:
                seed_bits |= 1 << vertices[pos]
            seed = VertexSet(g.n, seed_bits)
            extended = convex_extension(g, dec, i, seed)
            if len(extended) > best.value:
                best = ConvexityNumberResult(len(extended), extended, i, seed)
    if best.value < 1 or best.witness.bits == full:
        raise AlgorithmError("no proper convex witness found")
    convex, _ = is_t_convex(g, best.witness)
    if not convex:
        raise AlgorithmError("convexity-number witness failed verification")
    return best
