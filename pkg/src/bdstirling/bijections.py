"""Block procedures linking signed permutations to ordered mirror partitions.

A separator placement on a window of length n picks gaps from 0..n-1,
gap g sitting just before position g + 1.  Descents occupy their gaps for
free; artificial separators may take any remaining gap.  Cutting the
window at the occupied gaps yields segments: the unseparated leading
segment (possibly empty) becomes the zero block, every later segment C
becomes the adjacent block pair (C, -C).  The gap after the last position
is never stored; the final segment simply ends the window.

The even-signed variant adds one twist before cutting: when gap 1 is
occupied and gap 0 is free, the first entry flips sign and that separator
slides to gap 0.  The inverse then splits on whether a zero block exists
and on the parity of negatives across the class blocks; ordered partitions
with no zero block, an odd number of class negatives, and a singleton
first block have no preimage at all.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import (
    FlavorMismatch,
    InvalidOrderedPartition,
    NotAPartition,
    NotTypeD,
    RepeatedValueInBlock,
    SpotCollision,
    TooManySeparators,
    UnreachableForm,
)
from .groups import SignedPermutation, descent_set
from .partitions import BPartition, DPartition, stirling

__all__ = [
    "OrderedPartition",
    "b_procedure",
    "b_procedure_inverse",
    "d_procedure",
    "d_procedure_inverse",
    "free_gaps",
    "d_unreachable",
    "d_unreachable_count",
]


def _mirror(block: frozenset[int]) -> frozenset[int]:
    return frozenset(-v for v in block)


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered mirror partition: optional zero block first, then block pairs.

    The zero block is stored as the full +-support set without the 0
    marker; it is recognized by being its own mirror.  Pair blocks appear
    adjacently as (C, -C) in procedure order.
    """

    kind: str
    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.kind not in ("B", "D"):
            raise ValueError(f"unknown ordered partition kind {self.kind!r}")
        blocks = tuple(frozenset(int(v) for v in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for b in blocks:
            if not b:
                raise NotAPartition("empty block")
            if any(v == 0 or abs(v) > self.n for v in b):
                raise NotAPartition(
                    f"block {sorted(b)} outside +-1..+-{self.n}"
                )
        start = 0
        support: list[int] = []
        if blocks and blocks[0] == _mirror(blocks[0]):
            support = sorted(v for v in blocks[0] if v > 0)
            start = 1
        pairs = blocks[start:]
        if len(pairs) % 2:
            raise InvalidOrderedPartition("dangling block without its mirror")
        covered = list(support)
        for i in range(0, len(pairs), 2):
            c = pairs[i]
            if len({abs(v) for v in c}) != len(c):
                raise RepeatedValueInBlock(
                    f"block {sorted(c)} repeats an absolute value"
                )
            if pairs[i + 1] != _mirror(c):
                raise InvalidOrderedPartition(
                    f"block {sorted(pairs[i + 1])} is not the mirror of {sorted(c)}"
                )
            covered.extend(abs(v) for v in c)
        if sorted(covered) != list(range(1, self.n + 1)):
            raise NotAPartition(
                f"spots covered {sorted(covered)} do not tile 1..{self.n}"
            )
        if self.kind == "D" and len(support) == 1:
            raise NotTypeD(f"zero support {support} has size 1")

    @property
    def has_zero_block(self) -> bool:
        return bool(self.blocks) and self.blocks[0] == _mirror(self.blocks[0])

    @property
    def zero_support(self) -> frozenset[int]:
        if not self.has_zero_block:
            return frozenset()
        return frozenset(v for v in self.blocks[0] if v > 0)

    @property
    def class_blocks(self) -> tuple[frozenset[int], ...]:
        """First block of each mirror pair, in procedure order."""
        start = 1 if self.has_zero_block else 0
        return self.blocks[start::2]

    @property
    def r(self) -> int:
        return len(self.class_blocks)

    def to_unordered(self) -> BPartition:
        maker = DPartition if self.kind == "D" else BPartition
        return maker(self.n, self.zero_support, self.class_blocks)

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "blocks": [sorted(b) for b in self.blocks],
        }

    @classmethod
    def from_doc(cls, doc) -> "OrderedPartition":
        """Build from a plain dict, raising TypeError on shape problems."""
        if not isinstance(doc, dict):
            raise TypeError("document must be an object")
        for key in ("kind", "n", "blocks"):
            if key not in doc:
                raise TypeError(f"document misses key {key!r}")
        kind, n, blocks = doc["kind"], doc["n"], doc["blocks"]
        if not isinstance(kind, str):
            raise TypeError("kind must be a string")
        if type(n) is not int:
            raise TypeError("n must be an integer")
        if not isinstance(blocks, list) or not all(
            isinstance(b, list) and all(type(v) is int for v in b)
            for b in blocks
        ):
            raise TypeError("blocks must be lists of integers")
        return cls(kind, n, tuple(frozenset(b) for b in blocks))


def free_gaps(element: SignedPermutation, flavor: str) -> frozenset[int]:
    """Gaps 0..n-1 not occupied by a descent of the given flavor."""
    return frozenset(range(element.n)) - descent_set(element, flavor)


def _checked_separators(
    element: SignedPermutation, artificial, flavor: str
) -> set[int]:
    descents = descent_set(element, flavor)
    artificial = set(int(g) for g in artificial)
    for g in artificial:
        if not 0 <= g < element.n:
            raise TooManySeparators(
                f"separator at gap {g} but gaps run 0..{element.n - 1}"
            )
        if g in descents:
            raise SpotCollision(f"gap {g} already holds a descent")
    return set(descents) | artificial


def _blocks_from_cut_window(
    window: tuple[int, ...], separators: set[int]
) -> tuple[frozenset[int], ...]:
    n = len(window)
    gaps = sorted(separators)
    blocks: list[frozenset[int]] = []
    lead = window[: gaps[0]] if gaps else window
    if lead:
        blocks.append(frozenset(lead) | frozenset(-v for v in lead))
    for a, b in zip(gaps, gaps[1:] + [n]):
        seg = frozenset(window[a:b])
        blocks.append(seg)
        blocks.append(_mirror(seg))
    return tuple(blocks)


def b_procedure(beta: SignedPermutation, artificial=()) -> OrderedPartition:
    """Cut the window at descents plus artificial separators into blocks."""
    if not isinstance(beta, SignedPermutation):
        raise FlavorMismatch("the block procedure needs a SignedPermutation")
    separators = _checked_separators(beta, artificial, "B")
    return OrderedPartition(
        "B", beta.n, _blocks_from_cut_window(beta.window, separators)
    )


def d_procedure(gamma: SignedPermutation, artificial=()) -> OrderedPartition:
    """Even-signed block procedure, with the gap 1 to gap 0 slide."""
    if not isinstance(gamma, SignedPermutation):
        raise FlavorMismatch("the block procedure needs a SignedPermutation")
    separators = _checked_separators(gamma, artificial, "D")
    window = gamma.window
    if 1 in separators and 0 not in separators:
        window = (-window[0],) + window[1:]
        separators = (separators - {1}) | {0}
    return OrderedPartition(
        "D", gamma.n, _blocks_from_cut_window(window, separators)
    )


def _window_and_cuts(op: OrderedPartition) -> tuple[list[int], list[int]]:
    window = sorted(op.zero_support)
    cuts = []
    for c in op.class_blocks:
        cuts.append(len(window))
        window.extend(sorted(c))
    return window, cuts


def b_procedure_inverse(op: OrderedPartition) -> tuple[SignedPermutation, frozenset[int]]:
    """The unique (window, artificial separators) preimage of op."""
    if op.kind != "B":
        raise FlavorMismatch(f"expected an ordered partition of kind B, got {op.kind!r}")
    window, cuts = _window_and_cuts(op)
    beta = SignedPermutation(tuple(window))
    artificial = frozenset(cuts) - descent_set(beta, "B")
    assert b_procedure(beta, artificial) == op
    return beta, artificial


def d_unreachable(op: OrderedPartition) -> bool:
    """True when op lies outside the image of the even-signed procedure.

    That happens exactly for: no zero block, a singleton first class
    block, and an odd number of negatives across the class blocks.
    """
    if op.kind != "D":
        raise FlavorMismatch(f"expected an ordered partition of kind D, got {op.kind!r}")
    if op.has_zero_block or not op.blocks:
        return False
    negatives = sum(1 for c in op.class_blocks for v in c if v < 0)
    return len(op.class_blocks[0]) == 1 and negatives % 2 == 1


def d_unreachable_count(n: int, r: int) -> int:
    """How many ordered partitions with r pairs the image misses."""
    if n < 1 or r < 1:
        return 0
    return n * 2 ** (n - 1) * factorial(r - 1) * stirling("A", n - 1, r - 1)


def d_procedure_inverse(op: OrderedPartition) -> tuple[SignedPermutation, frozenset[int]]:
    """The unique preimage under the even-signed procedure, if one exists."""
    if op.kind != "D":
        raise FlavorMismatch(f"expected an ordered partition of kind D, got {op.kind!r}")
    window, cuts = _window_and_cuts(op)
    class_negatives = sum(1 for c in op.class_blocks for v in c if v < 0)
    if op.has_zero_block:
        if class_negatives % 2:
            window[0] = -window[0]
    elif class_negatives % 2:
        if op.blocks and len(op.class_blocks[0]) == 1:
            raise UnreachableForm(
                "no zero block, singleton first block, odd class negatives",
                witness=op.to_doc(),
            )
        window[0] = -window[0]
        cuts[0] = 1
    gamma = SignedPermutation(tuple(window))
    artificial = frozenset(cuts) - descent_set(gamma, "D")
    assert d_procedure(gamma, artificial) == op
    return gamma, artificial
