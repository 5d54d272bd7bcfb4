"""Signed and colored permutations with their descent statistics.

Windows are 1-indexed: ``window[i - 1]`` is the image of ``i``.  Position 0
never appears in a window; it enters the type B and type D descent rules
only through the virtual values ``beta(0) = 0`` and ``gamma(0) = -gamma(2)``.

Colored entries are (value, color) pairs with colors taken mod m.  The
color order ranks ``a^[z]`` by ``(m - 1 - z) * n + (a - 1)``, so every
entry of color m-1 precedes every entry of color m-2 and so on, with
color 0 last and values increasing inside each color class.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .config import DEFAULT_CAPS, EnumerationCaps
from .errors import FlavorMismatch, OddNegativeCount, SizeOverflow

__all__ = [
    "SignedPermutation",
    "ColoredPermutation",
    "colored_from_signed",
    "descent_set",
    "des_stat",
    "fdes",
    "group_order",
    "enumerate_group",
]


@dataclass(frozen=True)
class SignedPermutation:
    """Element of B_n in window notation."""

    window: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        n = len(self.window)
        if sorted(abs(v) for v in self.window) != list(range(1, n + 1)):
            raise ValueError(f"window {self.window!r} is not a signed permutation")

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def negative_count(self) -> int:
        return sum(1 for v in self.window if v < 0)

    def is_even_signed(self) -> bool:
        """True when the element lies in D_n."""
        return self.negative_count % 2 == 0

    @classmethod
    def from_text(cls, text: str) -> "SignedPermutation":
        text = text.replace("−", "-").strip()
        if not text:
            return cls(())
        try:
            window = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse window text {text!r}") from None
        return cls(window)

    def to_text(self) -> str:
        return ",".join(str(v) for v in self.window)

    def __str__(self) -> str:
        return f"[{self.to_text()}]"


@dataclass(frozen=True)
class ColoredPermutation:
    """Element of G_{m,n}: a value permutation with a color mod m per spot."""

    m: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple((int(a), int(z)) for a, z in self.entries)
        )
        if self.m < 1:
            raise ValueError("m must be at least 1")
        n = len(self.entries)
        if sorted(a for a, _ in self.entries) != list(range(1, n + 1)):
            raise ValueError("values must form a permutation of 1..n")
        if any(not 0 <= z < self.m for _, z in self.entries):
            raise ValueError("colors must lie in 0..m-1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def order_key(self, value: int, color: int) -> int:
        """Rank of value^[color] in the color order (smaller comes first)."""
        return (self.m - 1 - color) * self.n + (value - 1)

    @classmethod
    def from_text(cls, text: str, m: int) -> "ColoredPermutation":
        text = text.replace("−", "-").strip()
        if not text:
            return cls(m, ())
        entries = []
        for tok in text.split(","):
            tok = tok.strip()
            if "^" in tok:
                a, z = tok.split("^")
                entries.append((int(a), int(z)))
            else:
                entries.append((int(tok), 0))
        return cls(m, tuple(entries))

    def to_text(self) -> str:
        return ",".join(
            str(a) if z == 0 else f"{a}^{z}" for a, z in self.entries
        )

    def __str__(self) -> str:
        return f"[{self.to_text()}]"


def colored_from_signed(beta: SignedPermutation) -> ColoredPermutation:
    """View a signed permutation as 2-colored: negatives get color 1."""
    return ColoredPermutation(
        2, tuple((abs(v), 1 if v < 0 else 0) for v in beta.window)
    )


def descent_set(element, flavor: str) -> frozenset[int]:
    """Gap positions where the element descends under the given flavor.

    Flavor A compares window neighbors at gaps 1..n-1.  Flavor B adds gap 0
    with beta(0) = 0, so 0 is a descent exactly when beta(1) < 0.  Flavor D
    adds gap 0 with gamma(0) = -gamma(2), so 0 is a descent exactly when
    gamma(1) + gamma(2) < 0; it needs an even-signed input and, for n < 2,
    contributes no gap 0 descent.  Flavor G compares colored entries in the
    color order at gaps 1..n-1; the color-of-first-entry correction is the
    business of des_stat, not of the set.
    """
    if flavor == "G":
        if not isinstance(element, ColoredPermutation):
            raise FlavorMismatch("flavor G needs a ColoredPermutation")
        keys = [element.order_key(a, z) for a, z in element.entries]
        return frozenset(i for i in range(1, len(keys)) if keys[i - 1] > keys[i])
    if not isinstance(element, SignedPermutation):
        raise FlavorMismatch(f"flavor {flavor!r} needs a SignedPermutation")
    w = element.window
    n = len(w)
    if flavor == "A":
        return frozenset(i for i in range(1, n) if w[i - 1] > w[i])
    if flavor == "B":
        virtual = 0 if n else None
    elif flavor == "D":
        if not element.is_even_signed():
            raise OddNegativeCount(
                f"{element.to_text()!r} has an odd number of negative entries"
            )
        virtual = -w[1] if n >= 2 else None
    else:
        raise ValueError(f"unknown descent flavor {flavor!r}")
    des = {i for i in range(1, n) if w[i - 1] > w[i]}
    if virtual is not None and virtual > w[0]:
        des.add(0)
    return frozenset(des)


def fdes(beta: SignedPermutation, order: str = "natural") -> int:
    """Flag descents 2 * desA + eps, eps = 1 when the first entry is negative.

    ``order`` picks the comparison inside the type A part: plain integer
    order, or the 2-colored color order.  The two disagree elementwise but
    produce the same distribution over B_n.
    """
    if not isinstance(beta, SignedPermutation):
        raise FlavorMismatch("fdes needs a SignedPermutation")
    if order == "natural":
        des_a = len(descent_set(beta, "A"))
    elif order == "color":
        des_a = len(descent_set(colored_from_signed(beta), "G"))
    else:
        raise ValueError(f"unknown fdes order {order!r}")
    eps = 1 if beta.n and beta.window[0] < 0 else 0
    return 2 * des_a + eps


def des_stat(element, stat: str) -> int:
    """Descent statistic of a group element.

    desB and desD count the flavor B / D descent set of a signed
    permutation.  desG counts the flavor G set of a colored permutation
    plus 1 when the first entry has nonzero color.  fdes is the flag
    statistic on a signed permutation viewed as 2-colored.
    """
    if stat == "desB":
        return len(descent_set(element, "B"))
    if stat == "desD":
        return len(descent_set(element, "D"))
    if stat == "desG":
        if not isinstance(element, ColoredPermutation):
            raise FlavorMismatch("desG needs a ColoredPermutation")
        eps = 1 if element.entries and element.entries[0][1] != 0 else 0
        return len(descent_set(element, "G")) + eps
    if stat == "fdes":
        return fdes(element)
    raise ValueError(f"unknown statistic {stat!r}")


def group_order(kind: str, n: int, m: int | None = None) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "B":
        return 2**n * factorial(n)
    if kind == "D":
        return 2 ** (n - 1) * factorial(n) if n >= 1 else 1
    if kind == "G":
        if m is None or m < 1:
            raise ValueError("kind G needs m >= 1")
        return m**n * factorial(n)
    raise ValueError(f"unknown group kind {kind!r}")


def enumerate_group(
    kind: str,
    n: int,
    m: int | None = None,
    caps: EnumerationCaps = DEFAULT_CAPS,
) -> Iterator:
    """Stream the whole group in lexicographic window order.

    Signed windows compare as integer tuples, colored windows as tuples of
    (value, color) pairs.  Raises SizeOverflow when the group order exceeds
    the configured cap.
    """
    order = group_order(kind, n, m)
    cap = caps.colored_group if kind == "G" else caps.signed_group
    if order > cap:
        raise SizeOverflow(f"group of order {order} exceeds cap {cap}")
    if kind == "B":
        return _signed_windows(n)
    if kind == "D":
        return (b for b in _signed_windows(n) if b.is_even_signed())
    return _colored_windows(n, m)


def _signed_windows(n: int) -> Iterator[SignedPermutation]:
    def rec(prefix: tuple[int, ...], remaining: frozenset[int]):
        if not remaining:
            yield SignedPermutation(prefix)
            return
        descending = sorted(remaining, reverse=True)
        for v in [-a for a in descending] + sorted(remaining):
            yield from rec(prefix + (v,), remaining - {abs(v)})

    yield from rec((), frozenset(range(1, n + 1)))


def _colored_windows(n: int, m: int) -> Iterator[ColoredPermutation]:
    def rec(prefix: tuple[tuple[int, int], ...], remaining: frozenset[int]):
        if not remaining:
            yield ColoredPermutation(m, prefix)
            return
        for a in sorted(remaining):
            for z in range(m):
                yield from rec(prefix + ((a, z),), remaining - {a})

    yield from rec((), frozenset(range(1, n + 1)))
