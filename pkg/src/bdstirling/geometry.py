"""Lattice-point censuses over the signed cube and the discretized torus.

A cube point lives in {-m..m}^n; its classification records which
coordinates vanish (the zero support) and which share an absolute value
(a signed pair class per value, the sign pattern choosing the side).
A torus point has coordinates that are either ZERO (None) or an exact
(color, magnitude) pair with color mod m and magnitude in 1..t; equal
magnitudes land in one orbit class with relative colors.  No floating
point anywhere.

The even-signed classification drops the single-vanishing-coordinate
hyperplanes: one zero coordinate forms its own singleton class, vanishing
coordinates form a zero support only when at least two of them vanish,
and a point with exactly one zero plus a repeated absolute value among
the rest fits no even-signed partition at all; censuses tally those as
missing.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULT_CAPS, EnumerationCaps
from .errors import BadIndex, DimensionMismatch, SingletonZeroBlock, SizeOverflow
from .partitions import BPartition, DPartition, GPartition
from .polynomials import falling_factorial

ZERO = None

__all__ = [
    "ZERO",
    "classify_point",
    "census",
    "torus_census",
    "free_point_count",
    "missing_point_count",
    "CensusResult",
]


def _abs_classes(coords) -> dict[int, frozenset[int]]:
    """Signed spot classes keyed by shared absolute value."""
    groups: dict[int, list[int]] = {}
    for spot, value in enumerate(coords, start=1):
        if value != 0:
            groups.setdefault(abs(value), []).append(
                spot if value > 0 else -spot
            )
    return {a: frozenset(g) for a, g in groups.items()}


def classify_point(kind: str, coords, m: int | None = None, n: int | None = None):
    """Canonical partition of the finest subspace containing the point."""
    coords = tuple(coords)
    if n is not None and len(coords) != n:
        raise DimensionMismatch(
            f"point of dimension {len(coords)} where n={n} was required"
        )
    n = len(coords)
    if kind == "G":
        if m is None or m < 1:
            raise ValueError("kind G needs m >= 1")
        zeros = frozenset(i for i, v in enumerate(coords, start=1) if v is ZERO)
        groups: dict[int, list[tuple[int, int]]] = {}
        for spot, value in enumerate(coords, start=1):
            if value is ZERO:
                continue
            color, magnitude = value
            groups.setdefault(magnitude, []).append((spot, color % m))
        reps = tuple(frozenset(g) for _, g in sorted(groups.items()))
        return GPartition(n, m, zeros, reps)
    if kind not in ("B", "D"):
        raise ValueError(f"unknown classification kind {kind!r}")
    zeros = frozenset(i for i, v in enumerate(coords, start=1) if v == 0)
    classes = [c for _, c in sorted(_abs_classes(coords).items())]
    if kind == "B":
        return BPartition(n, zeros, tuple(classes))
    if len(zeros) == 1:
        if any(len(c) > 1 for c in classes):
            raise SingletonZeroBlock(
                "one vanishing coordinate plus a repeated absolute value "
                "fits no even-signed partition"
            )
        classes = classes + [frozenset(zeros)]
        zeros = frozenset()
    return DPartition(n, zeros, tuple(classes))


@dataclass
class CensusResult:
    kind: str
    n: int
    x: int
    m: int | None
    counts: dict
    free: int
    missing: int = 0

    def __post_init__(self):
        total = sum(self.counts.values()) + self.missing
        assert total == self.x**self.n, (
            f"census lost points: {total} != {self.x}**{self.n}"
        )

    def expected(self, partition) -> int:
        """The per-partition count the falling-factorial bases predict."""
        if self.kind == "B":
            poly = falling_factorial("B", partition.r)
        elif self.kind == "D":
            poly = falling_factorial("D", partition.r, n=self.n)
        else:
            poly = falling_factorial("G", partition.r, m=self.m)
        return poly(self.x)


def _check_cap(x: int, n: int, caps: EnumerationCaps):
    if x**n > caps.census_points:
        raise SizeOverflow(
            f"census of {x}**{n} points exceeds cap {caps.census_points}"
        )


def census(kind: str, n: int, m: int, caps: EnumerationCaps = DEFAULT_CAPS) -> CensusResult:
    """Classify every point of {-m..m}^n; kind B or D, x = 2m + 1."""
    if kind not in ("B", "D"):
        raise ValueError(f"cube census kind must be B or D, got {kind!r}")
    if m < 0:
        raise BadIndex("half-width m must be nonnegative")
    x = 2 * m + 1
    _check_cap(x, n, caps)
    counts: dict = {}
    missing = 0
    for point in itertools.product(range(-m, m + 1), repeat=n):
        try:
            p = classify_point(kind, point)
        except SingletonZeroBlock:
            missing += 1
            continue
        counts[p] = counts.get(p, 0) + 1
    free = sum(c for p, c in counts.items() if p.r == n)
    return CensusResult(kind, n, x, None, counts, free, missing)


def torus_census(n: int, m: int, t: int, caps: EnumerationCaps = DEFAULT_CAPS) -> CensusResult:
    """Classify every point of the discretized torus; x = m * t + 1."""
    if m < 2:
        raise BadIndex("torus census needs m >= 2")
    if t < 1:
        raise BadIndex("torus census needs t >= 1")
    x = m * t + 1
    _check_cap(x, n, caps)
    circle = [ZERO] + [
        (z, i) for z in range(m) for i in range(1, t + 1)
    ]
    counts: dict = {}
    for point in itertools.product(circle, repeat=n):
        p = classify_point("G", point, m=m)
        counts[p] = counts.get(p, 0) + 1
    free = sum(c for p, c in counts.items() if p.r == n)
    return CensusResult("G", n, x, m, counts, free, 0)


def free_point_count(kind: str, n: int, x: int, m: int | None = None) -> int:
    """Points on no hyperplane, by the closed falling-factorial form."""
    if kind in ("B", "D"):
        if x < 1 or x % 2 == 0:
            raise BadIndex("cube censuses need odd x = 2m + 1")
        if kind == "B":
            return falling_factorial("B", n)(x)
        return falling_factorial("D", n, n=n)(x)
    if kind == "G":
        if m is None or m < 1:
            raise BadIndex("kind G needs m >= 1")
        if x < 1 or (x - 1) % m != 0:
            raise BadIndex("torus censuses need x = m * t + 1")
        return falling_factorial("G", n, m=m)(x)
    raise ValueError(f"unknown census kind {kind!r}")


def missing_point_count(n: int, x: int) -> int:
    """Even-signed cube points no partition accepts, in closed form."""
    if x < 1 or x % 2 == 0:
        raise BadIndex("cube censuses need odd x = 2m + 1")
    if n == 0:
        return 0
    return n * ((x - 1) ** (n - 1) - falling_factorial("B", n - 1)(x))
