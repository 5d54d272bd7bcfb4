"""Mirror-closed set partitions and their exact Stirling counts.

Type B partitions split {0, +-1, ..., +-n} into a zero block (the block
containing 0, always closed under negation) and pairs (C, -C) of mirror
blocks with C != -C.  Type D partitions are the type B partitions whose
zero support does not have size exactly 1.  The m-colored analogue
partitions {0} and the mn colored points (value, color) into a zero block
(full color fibers) and orbits of a block under the color shift; a block
never repeats a value, so every orbit has the full length m.

Counting never materializes partitions.  Everything reduces to the
weighted classical layer W_m(s, r): set partitions of an s-element set
into r classes, each class of size k carrying weight m**(k-1), which obeys
W_m(s, r) = W_m(s-1, r-1) + m * r * W_m(s-1, r).  A class of size k yields
m**(k-1) colorings once the minimum element is pinned to color 0, and the
zero support is an arbitrary subset (type D: never a single spot).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import (
    MirrorViolation,
    NotAPartition,
    RepeatedValueInBlock,
    SingletonZeroBlock,
)

__all__ = [
    "BPartition",
    "DPartition",
    "GPartition",
    "classical_set_partitions",
    "stirling",
    "stirling_row",
    "stirling_row_by_recurrence",
    "flag_stirling_row",
    "colored_literal_row",
    "enumerate_partitions",
]


# ---------------------------------------------------------------------------
# counting


@lru_cache(maxsize=None)
def _weighted_row(s: int, m: int) -> tuple[int, ...]:
    """Row s of the weighted classical layer W_m."""
    if s == 0:
        return (1,)
    prev = _weighted_row(s - 1, m)
    row = []
    for r in range(s + 1):
        value = prev[r - 1] if r >= 1 else 0
        if r < len(prev):
            value += m * r * prev[r]
        row.append(value)
    return tuple(row)


def _layer(s: int, m: int, r: int) -> int:
    return _weighted_row(s, m)[r] if 0 <= r <= s else 0


@lru_cache(maxsize=None)
def stirling_row(kind: str, n: int, m: int = 2) -> tuple[int, ...]:
    """Row n of the second kind Stirling triangle for the given kind.

    Kind A counts classical partitions of [n] (no zero block), B and D the
    signed partitions described above, G the m-colored ones.  B agrees with
    G at m = 2 under negatives-as-color-1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "A":
        return _weighted_row(n, 1)
    if kind == "B":
        m = 2
    elif kind == "D":
        return tuple(
            sum(
                comb(n, j) * _layer(n - j, 2, r)
                for j in range(n + 1)
                if j != 1
            )
            for r in range(n + 1)
        )
    elif kind != "G":
        raise ValueError(f"unknown partition kind {kind!r}")
    if m < 1:
        raise ValueError("m must be at least 1")
    return tuple(
        sum(comb(n, j) * _layer(n - j, m, r) for j in range(n + 1))
        for r in range(n + 1)
    )


def stirling(kind: str, n: int, r: int, m: int = 2) -> int:
    if not 0 <= r <= n:
        return 0
    return stirling_row(kind, n, m)[r]


def stirling_row_by_recurrence(kind: str, n: int, m: int = 2) -> tuple[int, ...]:
    """Same rows through the triangle recurrences, as an independent check.

    A: S(n,r) = S(n-1,r-1) + r S(n-1,r).  B and G: the new largest spot
    either seeds a class of its own or joins the zero block or one of r
    classes in any of m colors, so the factor is (m r + 1).  D subtracts
    the single-spot zero supports, n times the empty-support layer.
    """
    if kind == "B":
        m = 2
    elif kind == "D":
        base = stirling_row_by_recurrence("B", n)
        return tuple(
            base[r] - (n * _layer(n - 1, 2, r) if n >= 1 else 0)
            for r in range(n + 1)
        )
    elif kind not in ("A", "G"):
        raise ValueError(f"unknown partition kind {kind!r}")
    row = [1]
    for s in range(1, n + 1):
        row = [
            (row[r - 1] if r >= 1 else 0)
            + ((r if kind == "A" else m * r + 1) * row[r] if r < len(row) else 0)
            for r in range(s + 1)
        ]
    return tuple(row)


def flag_stirling_row(n: int) -> tuple[int, ...]:
    """Type B partitions graded by 2 * pairs + [zero support nonempty].

    Index r runs 0..2n.  Even r = 2p: empty zero support and p pairs.
    Odd r = 2p + 1: nonempty zero support and p pairs.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = []
    for r in range(2 * n + 1):
        p = r // 2
        if r % 2 == 0:
            row.append(_layer(n, 2, p))
        else:
            row.append(
                sum(comb(n, j) * _layer(n - j, 2, p) for j in range(1, n + 1))
            )
    return tuple(row)


# ---------------------------------------------------------------------------
# partition objects


@dataclass(frozen=True)
class BPartition:
    """Canonical form of a type B partition of {0, +-1, ..., +-n}.

    pair_reps holds one block per mirror pair, the one whose minimum
    absolute value is positive, sorted by that minimum.  The constructor
    canonicalizes sign choice and order, so equal partitions compare equal.
    """

    n: int
    zero_support: frozenset[int]
    pair_reps: tuple[frozenset[int], ...]

    def __post_init__(self):
        zs = frozenset(int(v) for v in self.zero_support)
        if any(v < 1 or v > self.n for v in zs):
            raise NotAPartition(f"zero support {sorted(zs)} outside 1..{self.n}")
        reps = []
        for rep in self.pair_reps:
            rep = frozenset(int(v) for v in rep)
            if not rep:
                raise NotAPartition("empty block")
            if any(v == 0 or abs(v) > self.n for v in rep):
                raise NotAPartition(f"block {sorted(rep)} outside +-1..+-{self.n}")
            if len({abs(v) for v in rep}) != len(rep):
                raise RepeatedValueInBlock(
                    f"block {sorted(rep)} repeats an absolute value"
                )
            if min(rep, key=abs) < 0:
                rep = frozenset(-v for v in rep)
            reps.append(rep)
        reps.sort(key=lambda rep: min(abs(v) for v in rep))
        covered = [abs(v) for rep in reps for v in rep] + sorted(zs)
        if sorted(covered) != list(range(1, self.n + 1)):
            raise NotAPartition(
                f"spots covered {sorted(covered)} do not tile 1..{self.n}"
            )
        object.__setattr__(self, "zero_support", zs)
        object.__setattr__(self, "pair_reps", tuple(reps))

    @property
    def r(self) -> int:
        """Number of mirror pairs."""
        return len(self.pair_reps)

    def zero_block(self) -> frozenset[int]:
        return frozenset({0}) | self.zero_support | {-v for v in self.zero_support}

    def blocks(self) -> list[frozenset[int]]:
        """Zero block first, then each pair as representative, mirror."""
        out = [self.zero_block()]
        for rep in self.pair_reps:
            out.append(rep)
            out.append(frozenset(-v for v in rep))
        return out

    def sort_key(self):
        return (
            tuple(sorted(self.zero_support)),
            tuple(tuple(sorted(rep, key=abs)) for rep in self.pair_reps),
        )

    def text(self) -> str:
        return " ".join(
            "{" + ",".join(str(v) for v in sorted(b)) + "}" for b in self.blocks()
        )

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "BPartition":
        """Rebuild the canonical form from raw blocks, checking closure."""
        family = [frozenset(int(v) for v in b) for b in blocks]
        seen: list[frozenset[int]] = []
        for b in family:
            if not b:
                raise NotAPartition("empty block")
            if any(b & other for other in seen):
                raise NotAPartition("blocks overlap")
            seen.append(b)
        union = frozenset().union(*family) if family else frozenset()
        expected = frozenset(range(-n, n + 1))
        if union != expected:
            raise NotAPartition(
                f"union misses or exceeds the ground set for n={n}"
            )
        zero = next(b for b in family if 0 in b)
        if frozenset(-v for v in zero) != zero:
            raise MirrorViolation("zero block is not closed under negation")
        reps = []
        rest = [b for b in family if b is not zero]
        index = {b: i for i, b in enumerate(rest)}
        for b in rest:
            mirror = frozenset(-v for v in b)
            if mirror == b:
                raise MirrorViolation(
                    f"nonzero block {sorted(b)} equals its own mirror"
                )
            if mirror not in index:
                raise MirrorViolation(
                    f"mirror of block {sorted(b)} is missing"
                )
            if min(b, key=abs) > 0:
                reps.append(b)
        return cls(n, frozenset(v for v in zero if v > 0), tuple(reps))


class DPartition(BPartition):
    """Type B partition whose zero support never has size exactly 1."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.zero_support) == 1:
            raise SingletonZeroBlock(
                f"zero support {sorted(self.zero_support)} has size 1"
            )


@dataclass(frozen=True)
class GPartition:
    """Canonical m-colored partition: zero support plus one block per orbit.

    Each representative block maps values injectively to colors, carries
    color 0 on its minimum value, and the representatives are sorted by
    minimum value.
    """

    n: int
    m: int
    zero_support: frozenset[int]
    orbit_reps: tuple[frozenset[tuple[int, int]], ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        zs = frozenset(int(v) for v in self.zero_support)
        if any(v < 1 or v > self.n for v in zs):
            raise NotAPartition(f"zero support {sorted(zs)} outside 1..{self.n}")
        reps = []
        for rep in self.orbit_reps:
            rep = frozenset((int(a), int(z) % self.m) for a, z in rep)
            if not rep:
                raise NotAPartition("empty block")
            values = [a for a, _ in rep]
            if any(a < 1 or a > self.n for a in values):
                raise NotAPartition(f"block values {sorted(values)} outside 1..{self.n}")
            if len(set(values)) != len(values):
                raise RepeatedValueInBlock(
                    f"block {sorted(rep)} repeats a value"
                )
            anchor = min(rep)[1]
            rep = frozenset((a, (z - anchor) % self.m) for a, z in rep)
            reps.append(rep)
        reps.sort(key=lambda rep: min(rep)[0])
        covered = [a for rep in reps for a, _ in rep] + sorted(zs)
        if sorted(covered) != list(range(1, self.n + 1)):
            raise NotAPartition(
                f"values covered {sorted(covered)} do not tile 1..{self.n}"
            )
        object.__setattr__(self, "zero_support", zs)
        object.__setattr__(self, "orbit_reps", tuple(reps))

    @property
    def r(self) -> int:
        return len(self.orbit_reps)

    def zero_fiber(self) -> frozenset[tuple[int, int]]:
        """All colored points whose value sits in the zero support."""
        return frozenset(
            (a, z) for a in self.zero_support for z in range(self.m)
        )

    def orbit_blocks(self, rep: frozenset[tuple[int, int]]) -> list[frozenset[tuple[int, int]]]:
        return [
            frozenset((a, (z + shift) % self.m) for a, z in rep)
            for shift in range(self.m)
        ]

    def sort_key(self):
        return (
            tuple(sorted(self.zero_support)),
            tuple(tuple(sorted(rep)) for rep in self.orbit_reps),
        )

    def text(self) -> str:
        zero = "{0" + "".join(
            f",{a}^{z}" for a in sorted(self.zero_support) for z in range(self.m)
        ) + "}"
        reps = [
            "{" + ",".join(f"{a}^{z}" for a, z in sorted(rep)) + "}"
            for rep in self.orbit_reps
        ]
        return " ".join([zero] + reps)


# ---------------------------------------------------------------------------
# enumeration


def classical_set_partitions(
    items: Sequence,
) -> Iterator[tuple[frozenset, ...]]:
    """All set partitions of items, each as a tuple of frozensets.

    Blocks appear in order of their least-indexed element, the standard
    restricted growth enumeration.
    """
    items = list(items)
    if not items:
        yield ()
        return

    def rec(i: int, blocks: list[list]):
        if i == len(items):
            yield tuple(frozenset(b) for b in blocks)
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [[items[0]]])


def _signings(cls: Sequence[int]) -> Iterator[frozenset[int]]:
    """All canonical sign choices on a class of spots (min stays positive)."""
    rest = sorted(cls)[1:]
    anchor = min(cls)
    for signs in itertools.product((1, -1), repeat=len(rest)):
        yield frozenset([anchor] + [s * v for s, v in zip(signs, rest)])


def _colorings(cls: Sequence[int], m: int) -> Iterator[frozenset[tuple[int, int]]]:
    """All canonical colorings of a class (min value pinned to color 0)."""
    rest = sorted(cls)[1:]
    anchor = min(cls)
    for colors in itertools.product(range(m), repeat=len(rest)):
        yield frozenset([(anchor, 0)] + list(zip(rest, colors)))


def enumerate_partitions(kind: str, n: int, r: int | None = None, m: int = 2) -> list:
    """Materialize all partitions of the given kind, sorted canonically.

    With r given, only those with r mirror pairs or orbits.
    """
    if kind not in ("B", "D", "G"):
        raise ValueError(f"unknown partition kind {kind!r}")
    out = []
    spots = range(1, n + 1)
    for k in range(n + 1):
        if kind == "D" and k == 1:
            continue
        for zs in itertools.combinations(spots, k):
            rest = [v for v in spots if v not in zs]
            for classes in classical_set_partitions(rest):
                if r is not None and len(classes) != r:
                    continue
                if kind == "G":
                    for reps in itertools.product(
                        *(_colorings(sorted(c), m) for c in classes)
                    ):
                        out.append(GPartition(n, m, frozenset(zs), reps))
                else:
                    maker = DPartition if kind == "D" else BPartition
                    for reps in itertools.product(
                        *(_signings(sorted(c)) for c in classes)
                    ):
                        out.append(maker(n, frozenset(zs), reps))
    out.sort(key=lambda p: p.sort_key())
    return out


# ---------------------------------------------------------------------------
# the looser colored reading, kept for comparison reports


def colored_literal_row(n: int, m: int) -> tuple[int, ...]:
    """Colored partition counts when short orbits are allowed.

    Blocks only need to be permuted nontrivially by the color shift, so a
    block may repeat a value across colors (possible once m is composite).
    Computed by brute force over set partitions of the colored points, so
    keep m * n small.  Agrees with stirling_row("G", n, m) for prime m.
    """
    points = [0] + [(a, z) for a in range(1, n + 1) for z in range(m)]

    def shift(p):
        if p == 0:
            return 0
        a, z = p
        return (a, (z + 1) % m)

    counts = [0] * (n + 1)
    for blocks in classical_set_partitions(points):
        family = set(blocks)
        ok = True
        for b in blocks:
            image = frozenset(shift(p) for p in b)
            if image not in family:
                ok = False
                break
            if 0 not in b and image == b:
                ok = False
                break
        if not ok:
            continue
        orbits = 0
        seen = set()
        for b in blocks:
            if 0 in b or b in seen:
                continue
            orbits += 1
            cur = b
            while cur not in seen:
                seen.add(cur)
                cur = frozenset(shift(p) for p in cur)
        counts[orbits] += 1
    return tuple(counts)
