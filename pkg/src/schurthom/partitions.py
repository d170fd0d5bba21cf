"""Partitions stored as weakly increasing tuples, ``(i1 <= i2 <= ... <= is)``.

Indices are kept in increasing order so that they read exactly as Schur
function subscripts are written (``S_{123}`` is ``Partition((1, 2, 3))``).
Leading zeros are dropped, since ``S_{0,I} = S_I``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

__all__ = ["Partition", "conjugate", "contains", "phi_shift", "h_class", "rectangle"]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly increasing, got {parts}")
        object.__setattr__(self, "parts", tuple(p for p in parts if p))

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(parts)

    @classmethod
    def from_decreasing(cls, parts: Iterable[int]) -> Partition:
        return cls(sorted(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Accept ``"(1,2,3)"``, ``"1,2,3"``, ``"[1, 2, 3]"`` or ``""``."""
        body = text.strip().strip("()[]").strip()
        if not body:
            return cls()
        return cls(int(t) for t in body.split(","))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def decreasing(self) -> tuple[int, ...]:
        return self.parts[::-1]

    def padded(self, length: int) -> tuple[int, ...]:
        """Parts with leading zeros up to ``length`` entries."""
        if len(self.parts) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return (0,) * (length - len(self.parts)) + self.parts

    def subscript(self) -> str:
        """Subscript in the usual display style: ``123`` or ``1,7,10``."""
        if not self.parts:
            return ""
        sep = "," if any(p >= 10 for p in self.parts) else ""
        return sep.join(map(str, self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def rectangle(width: int, height: int) -> Partition:
    return Partition((width,) * height)


def conjugate(I: Partition) -> Partition:
    rows = I.decreasing()
    if not rows:
        return Partition()
    cols = [sum(1 for r in rows if r > c) for c in range(rows[0])]
    return Partition.from_decreasing(cols)


def contains(I: Partition, J: Partition) -> bool:
    """True iff the Young diagram of ``J`` fits inside that of ``I``."""
    big, small = I.decreasing(), J.decreasing()
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, small))


def phi_shift(I: Partition) -> Partition:
    """``S_{i1,i2,i3} -> S_{i1+1,i2+1,i3+1}`` on partitions of length <= 3."""
    if len(I) > 3:
        raise ValueError(f"phi_shift needs length <= 3, got {I}")
    return Partition(p + 1 for p in I.padded(3))


def h_class(I: Partition, r: int) -> int:
    """Largest h with ``I ⊇ ((r+h-1)^h)``, or 0 if ``I`` does not contain ``(r)``.

    Since ``((r+h)^(h+1))`` is the rectangle for ``h+1``, this is the unique h
    with ``I ⊇ ((r+h-1)^h)`` and ``I ⊉ ((r+h)^(h+1))``.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    h = 0
    while contains(I, rectangle(r + h, h + 1)):
        h += 1
    return h


def partitions_of(n: int, max_len: int | None = None) -> list[Partition]:
    """All partitions of ``n`` (at most ``max_len`` parts), increasing order."""
    out: list[Partition] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(Partition.from_decreasing(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return sorted(out)
