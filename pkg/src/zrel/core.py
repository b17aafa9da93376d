"""Interval-class arithmetic over the cyclic group Z_n.

Value types for pitch-class sets, their step compositions, and interval
vectors, plus the conversions between them.  Two independent routes compute
the interval content of a set: the additivity rule over a composition's
partial sums (`interval_multiset`) and the direct pairwise scan
(`interval_multiset_brute`).  `dft_magnitudes` gives a third, spectral
fingerprint used only for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate, combinations

# All arithmetic stays within 64-bit signed range for n up to this bound.
MAX_MODULUS = 65535


def check_modulus(n: int) -> int:
    """Validate a cyclic group order: an integer with 3 <= n <= 65535."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"modulus must be an integer, got {n!r}")
    if not 3 <= n <= MAX_MODULUS:
        raise ValueError(f"modulus must be in [3, {MAX_MODULUS}], got {n}")
    return n


@dataclass(frozen=True, order=True)
class PitchClassSet:
    """Distinct residues mod n, stored as a strictly increasing tuple."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        check_modulus(self.n)
        elems = tuple(sorted(self.elements))
        if not elems:
            raise ValueError("pitch-class set must be nonempty")
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate pitch classes in {tuple(self.elements)!r}")
        if elems[0] < 0 or elems[-1] >= self.n:
            raise ValueError(
                f"pitch classes must lie in [0, {self.n}), got {tuple(self.elements)!r}"
            )
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered positive parts summing to n: the steps of a set rooted at 0.

    The sum constraint is the closure property; the last part is the
    wraparound step back to 0.
    """

    n: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        check_modulus(self.n)
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("composition must have at least one part")
        if any(not isinstance(p, int) or isinstance(p, bool) or p < 1 for p in parts):
            raise ValueError(f"all parts must be positive integers, got {parts!r}")
        if sum(parts) != self.n:
            raise ValueError(f"parts {parts!r} sum to {sum(parts)}, not {self.n}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True, order=True)
class IntervalVector:
    """Counts of interval classes 1..n//2; the grouping key for realizations.

    Two sets share an interval multiset exactly when their vectors are equal,
    so equality/hashing of this type is multiset equality of the intervals.
    """

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        check_modulus(self.n)
        counts = tuple(self.counts)
        if len(counts) != self.n // 2:
            raise ValueError(
                f"expected {self.n // 2} interval-class counts for n={self.n}, "
                f"got {len(counts)}"
            )
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in counts):
            raise ValueError(f"counts must be non-negative integers, got {counts!r}")
        object.__setattr__(self, "counts", counts)

    def total(self) -> int:
        """Number of intervals counted; C(k, 2) for a set of cardinality k."""
        return sum(self.counts)

    def as_multiset(self) -> tuple[int, ...]:
        """Expand the counts into the sorted multiset of interval classes."""
        return tuple(
            ic for ic, c in enumerate(self.counts, start=1) for _ in range(c)
        )


def interval_class(p: int, q: int, n: int) -> int:
    """Undirected circular distance min(|p - q|, n - |p - q|), in 1..n//2.

    Rejects p == q: sets have distinct elements, and a zero class would
    corrupt interval-vector indexing.
    """
    check_modulus(n)
    if not (0 <= p < n and 0 <= q < n):
        raise ValueError(f"pitch classes must lie in [0, {n}), got {p}, {q}")
    if p == q:
        raise ValueError(f"interval class undefined for equal pitch classes ({p})")
    d = abs(p - q)
    return min(d, n - d)


def normalize_to_zero(pcs: PitchClassSet) -> PitchClassSet:
    """Transpose so the least element maps to 0."""
    lo = pcs.elements[0]
    if lo == 0:
        return pcs
    return PitchClassSet(pcs.n, tuple((e - lo) % pcs.n for e in pcs.elements))


def steps(pcs: PitchClassSet) -> Composition:
    """Consecutive differences of a 0-rooted set, including the wraparound step."""
    elems = pcs.elements
    if elems[0] != 0:
        raise ValueError(
            f"steps require a set containing 0, got {elems!r}; "
            "apply normalize_to_zero first"
        )
    parts = tuple(b - a for a, b in zip(elems, elems[1:])) + (pcs.n - elems[-1],)
    return Composition(pcs.n, parts)


def set_from_composition(comp: Composition) -> PitchClassSet:
    """Inverse of steps: the partial sums of the parts, rooted at 0."""
    return PitchClassSet(comp.n, (0, *accumulate(comp.parts[:-1])))


def _interval_counts(parts: tuple[int, ...], n: int) -> tuple[int, ...]:
    # Additivity rule on raw tuples; shared with the enumeration fast path.
    counts = [0] * (n // 2)
    elems = (0, *accumulate(parts[:-1]))
    k = len(elems)
    for i in range(k - 1):
        ei = elems[i]
        for j in range(i + 1, k):
            d = elems[j] - ei
            if 2 * d > n:
                d = n - d
            counts[d - 1] += 1
    return tuple(counts)


def interval_multiset(comp: Composition) -> IntervalVector:
    """Interval content of a composition via the additivity rule.

    The interval class between any two elements of the encoded set is the
    interval class of the sum of the steps between them, so one pass over
    the partial sums yields all C(k, 2) intervals.
    """
    if len(comp) < 2:
        raise ValueError("interval multiset needs at least two parts")
    return IntervalVector(comp.n, _interval_counts(comp.parts, comp.n))


def interval_multiset_brute(pcs: PitchClassSet) -> IntervalVector:
    """Pairwise oracle: ic over every unordered element pair, bypassing steps."""
    if len(pcs) < 2:
        raise ValueError("interval multiset needs at least two pitch classes")
    counts = [0] * (pcs.n // 2)
    for p, q in combinations(pcs.elements, 2):
        counts[interval_class(p, q, pcs.n) - 1] += 1
    return IntervalVector(pcs.n, tuple(counts))


def dft_magnitudes(pcs: PitchClassSet) -> list[float]:
    """Squared DFT magnitudes of the set's characteristic function.

    Returns |sum_p exp(-2*pi*i*p*j/n)|^2 for j = 0..n-1 by direct O(n*k)
    trigonometric summation; index 0 equals k^2.  Sets with equal interval
    vectors have identical magnitude sequences, which makes this an
    independent cross-check on the combinatorial routes.
    """
    n = pcs.n
    out = []
    for j in range(n):
        re = 0.0
        im = 0.0
        for p in pcs.elements:
            angle = -2.0 * math.pi * p * j / n
            re += math.cos(angle)
            im += math.sin(angle)
        out.append(re * re + im * im)
    return out
