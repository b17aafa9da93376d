"""Equivalence of compositions under cyclic rotation and reversal.

Rotating a step composition corresponds to transposing the underlying
pitch-class set; reversing it corresponds to inversion.  The orbit of a
composition under these moves is therefore exactly the T/I class of the
set it encodes, and a canonical orbit representative gives O(1) equality
testing for T/I classes.
"""

from __future__ import annotations

from .core import Composition, PitchClassSet, normalize_to_zero, steps


def _rotations(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    doubled = parts + parts
    k = len(parts)
    return [doubled[i : i + k] for i in range(k)]


def candidate_parts(parts: tuple[int, ...]) -> list[tuple[int, ...]]:
    """The 2k orbit candidates: rotations of parts, then of reversed parts."""
    return _rotations(parts) + _rotations(parts[::-1])


def canonical_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least of the 2k rotations and reflections."""
    return min(candidate_parts(parts))


def is_canonical_parts(parts: tuple[int, ...]) -> bool:
    # The canonical form starts with the minimum part, so most rejections
    # are decided by this O(k) scan alone.
    if parts[0] != min(parts):
        return False
    return parts == canonical_parts(parts)


def rotations_and_reversals(comp: Composition) -> list[Composition]:
    """All k rotations followed by all k rotations of the reversal.

    May contain duplicates when the composition is symmetric.
    """
    return [Composition(comp.n, p) for p in candidate_parts(comp.parts)]


def canonical(comp: Composition) -> Composition:
    """Orbit representative: the lexicographic minimum over all 2k candidates.

    Idempotent, and equal for two compositions exactly when they lie in the
    same rotation/reversal orbit.
    """
    return Composition(comp.n, canonical_parts(comp.parts))


def is_canonical(comp: Composition) -> bool:
    """True if the composition already is its own canonical form."""
    return is_canonical_parts(comp.parts)


def equivalent(c1: Composition, c2: Composition) -> bool:
    """True iff the two compositions lie in one rotation/reversal orbit.

    Compositions over different moduli or of different lengths are never
    equivalent, so those cases return False rather than raising; enumeration
    code relies on this being a total predicate.
    """
    if c1.n != c2.n or len(c1) != len(c2):
        return False
    return canonical_parts(c1.parts) == canonical_parts(c2.parts)


def ti_equivalent(p1: PitchClassSet, p2: PitchClassSet) -> bool:
    """Transposition/inversion equivalence of sets, decided on compositions."""
    if p1.n != p2.n or len(p1) != len(p2):
        return False
    return equivalent(steps(normalize_to_zero(p1)), steps(normalize_to_zero(p2)))
