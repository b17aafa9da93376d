"""Built-in verification suites over golden enumeration data.

Each suite recomputes a block of known results from scratch and reports one
CheckResult per check.  The Z_12 data is the classical landscape of 12-tone
set theory (23 Z-related pairs, a single all-interval tetrachord group at
k=4, a palindromic class distribution); the Z_19 data and the construction
sweeps pin down the behavior of the scaling and k=4 machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .construct import k4_pair, scale_zpair, classify_pair
from .core import PitchClassSet, dft_magnitudes, set_from_composition
from .dihedral import ti_equivalent
from .enumeration import summary, z_groups, z_pair_count

DFT_TOLERANCE = 1e-9

# (ti_classes, multisets, nonreconstructible) by cardinality.
GOLDEN_Z12 = {
    3: (12, 12, 0),
    4: (29, 28, 1),
    5: (38, 35, 3),
    6: (50, 35, 15),
    7: (38, 35, 3),
    8: (29, 28, 1),
    9: (12, 12, 0),
}
GOLDEN_Z19 = {
    3: (30, 30, 0),
    4: (120, 120, 0),
    5: (324, 324, 0),
    6: (756, 735, 21),
    7: (1368, 1311, 57),
}
Z12_PAIR_TOTAL = 23
Z12_K4_WITNESS = ((1, 2, 4, 5), (1, 3, 2, 6))
Z19_WITNESS = ((0, 1, 2, 3, 6, 10), (0, 1, 2, 4, 5, 11))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def suite_z12(workers: int = 1) -> list[CheckResult]:
    results = []
    rows = summary(12, range(3, 10), workers)
    for row in rows:
        got = (row.ti_classes, row.multisets, row.nonreconstructible)
        want = GOLDEN_Z12[row.k]
        results.append(
            _check(f"z12 table row k={row.k}", got == want, f"got {got}, want {want}")
        )

    total = sum(z_pair_count(12, k, workers) for k in range(3, 10))
    results.append(
        _check("z12 pair total = 23", total == Z12_PAIR_TOTAL, f"got {total}")
    )

    stats = {
        row.k: (row.ti_classes, row.multisets, row.nonreconstructible) for row in rows
    }
    palindrome = all(stats[k] == stats[12 - k] for k in range(3, 10))
    results.append(_check("z12 palindrome k <-> 12-k", palindrome))

    max_r = max(
        (rc.realization_number for k in range(3, 10) for rc in z_groups(12, k, workers)),
        default=0,
    )
    results.append(_check("z12 max group size = 2", max_r == 2, f"got {max_r}"))

    groups4 = z_groups(12, 4, workers)
    witness_ok = (
        len(groups4) == 1
        and tuple(c.parts for c in groups4[0].realizations) == Z12_K4_WITNESS
        and groups4[0].mu.as_multiset() == (1, 2, 3, 4, 5, 6)
    )
    results.append(_check("z12 k=4 witness group", witness_ok))

    worst = 0.0
    for k in range(3, 10):
        for rc in z_groups(12, k, workers):
            spectra = [dft_magnitudes(set_from_composition(c)) for c in rc.realizations]
            for other in spectra[1:]:
                worst = max(
                    worst, max(abs(x - y) for x, y in zip(spectra[0], other))
                )
    results.append(
        _check(
            f"z12 dft agreement within {DFT_TOLERANCE}",
            worst <= DFT_TOLERANCE,
            f"max deviation {worst:.3e}",
        )
    )
    return results


def suite_z19(workers: int = 1) -> list[CheckResult]:
    results = []
    for row in summary(19, range(3, 8), workers):
        got = (row.ti_classes, row.multisets, row.nonreconstructible)
        want = GOLDEN_Z19[row.k]
        results.append(
            _check(f"z19 table row k={row.k}", got == want, f"got {got}, want {want}")
        )

    w1 = PitchClassSet(19, Z19_WITNESS[0])
    w2 = PitchClassSet(19, Z19_WITNESS[1])
    sharing = [
        rc
        for rc in z_groups(19, 6, workers)
        if {w1, w2} <= {set_from_composition(c) for c in rc.realizations}
    ]
    witness_ok = len(sharing) == 1 and not ti_equivalent(w1, w2)
    results.append(_check("z19 k=6 witness pair shares a group", witness_ok))
    return results


def suite_scaling(workers: int = 1) -> list[CheckResult]:
    results = []
    pairs = []
    for m in range(3, 15):
        for k in range(2, min(6, m) + 1):
            for group in z_groups(m, k, workers):
                members = [set_from_composition(c) for c in group.realizations]
                for i in range(len(members)):
                    for j in range(i + 1, len(members)):
                        pairs.append(classify_pair(members[i], members[j]))
    results.append(
        _check("scaling sweep found base pairs", bool(pairs), f"{len(pairs)} pairs")
    )
    for d in (2, 3):
        bad = 0
        for pair in pairs:
            scaled = scale_zpair(pair, d)
            if scaled.mu.as_multiset() != tuple(
                d * ic for ic in pair.mu.as_multiset()
            ) or ti_equivalent(scaled.set1, scaled.set2):
                bad += 1
        results.append(
            _check(
                f"scaling d={d} preserves Z-relation over m<=14, k<=6",
                bad == 0,
                f"{len(pairs)} pairs checked",
            )
        )
    return results


def suite_k4(workers: int = 1) -> list[CheckResult]:
    results = []
    for n in range(8, 65, 4):
        m = n // 2
        ok = True
        detail = ""
        for a in range(1, m // 2):
            pair = k4_pair(n, a)
            c1 = pair.set1.elements
            c2 = pair.set2.elements
            want_mu = tuple(
                sorted((a, m // 2 - a, m // 2, m // 2 + a, m - a, m))
            )
            good = (
                c1 == (0, a, m // 2, m + a)
                and c2 == (0, a, a + m // 2, m)
                and pair.mu.as_multiset() == want_mu
                and not ti_equivalent(pair.set1, pair.set2)
                and pair.is_primitive == (math.gcd(a, m // 2) == 1)
            )
            if not good:
                ok = False
                detail = f"failure at a={a}"
                break
        results.append(_check(f"k4 construction sweep n={n}", ok, detail))
    return results


SUITES = {
    "z12": suite_z12,
    "z19": suite_z19,
    "scaling": suite_scaling,
    "k4": suite_k4,
}


def run_suite(name: str, workers: int = 1) -> list[CheckResult]:
    """Run one named suite, or all of them in a fixed order."""
    if name == "all":
        results = []
        for suite in SUITES.values():
            results.extend(suite(workers))
        return results
    if name not in SUITES:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}"
        )
    return SUITES[name](workers)
