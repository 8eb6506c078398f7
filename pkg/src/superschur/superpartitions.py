"""Superpartitions, their diagrams, conjugation and enumeration.

A superpartition ``(a1, ..., am; s1, s2, ...)`` pairs a strictly decreasing
sequence of non-negative fermionic parts with an ordinary partition of
bosonic parts.  Its diagram is the Young diagram of :meth:`circled` in which
the cells of ``circled / star`` are drawn as circles.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from collections import Counter
from typing import Iterator, Sequence


class SuperPartitionError(ValueError):
    """Base class for malformed superpartition input."""


class NotStrictlyDecreasing(SuperPartitionError):
    pass


class NotWeaklyDecreasing(SuperPartitionError):
    pass


class NegativePart(SuperPartitionError):
    pass


class ParseError(SuperPartitionError):
    """Raised by :func:`parse` with the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def transpose(partition: Sequence[int]) -> tuple[int, ...]:
    """Conjugate of an ordinary partition."""
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > j) for j in range(partition[0]))


@dataclass(frozen=True, order=False)
class SuperPartition:
    antisymmetric_parts: tuple[int, ...] = ()
    symmetric_parts: tuple[int, ...] = ()

    def __post_init__(self):
        a = tuple(int(v) for v in self.antisymmetric_parts)
        s = tuple(int(v) for v in self.symmetric_parts if v != 0)
        object.__setattr__(self, "antisymmetric_parts", a)
        object.__setattr__(self, "symmetric_parts", s)
        if any(v < 0 for v in a) or any(v < 0 for v in self.symmetric_parts):
            raise NegativePart(f"negative part in {a};{self.symmetric_parts}")
        if any(x <= y for x, y in zip(a, a[1:])):
            raise NotStrictlyDecreasing(f"fermionic parts {a} are not strictly decreasing")
        if any(x < y for x, y in zip(s, s[1:])):
            raise NotWeaklyDecreasing(f"bosonic parts {s} are not weakly decreasing")

    # -- basic statistics --------------------------------------------------
    @property
    def fermionic_degree(self) -> int:
        return len(self.antisymmetric_parts)

    m = fermionic_degree

    @property
    def total_degree(self) -> int:
        return sum(self.antisymmetric_parts) + sum(self.symmetric_parts)

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.total_degree, self.fermionic_degree)

    # -- diagrams ----------------------------------------------------------
    def star(self) -> tuple[int, ...]:
        parts = [p for p in self.antisymmetric_parts + self.symmetric_parts if p > 0]
        return tuple(sorted(parts, reverse=True))

    def circled(self) -> tuple[int, ...]:
        parts = [p + 1 for p in self.antisymmetric_parts] + list(self.symmetric_parts)
        return tuple(sorted(parts, reverse=True))

    def rows(self) -> list[tuple[int, bool]]:
        """Diagram rows from the top as ``(length of star row, has circle)``.

        A fermionic zero part appears as a final row of length 0 with a circle.
        """
        c, s = self.circled(), self.star()
        return [(s[i] if i < len(s) else 0, c[i] != (s[i] if i < len(s) else 0))
                for i in range(len(c))]

    def epsilon(self) -> tuple[int, ...]:
        return tuple(int(circ) for _, circ in self.rows())

    def circle_cells(self) -> tuple[tuple[int, int], ...]:
        """(row, column) of every circle, 0-based, top to bottom."""
        return tuple((i, length) for i, (length, circ) in enumerate(self.rows()) if circ)

    # -- transformations ---------------------------------------------------
    def conjugate(self) -> "SuperPartition":
        star_t = transpose(self.star())
        circ_t = transpose(self.circled())
        return from_diagrams(star_t, circ_t)

    # -- ordering and I/O --------------------------------------------------
    def sort_key(self):
        return (self.total_degree, self.fermionic_degree, self.circled(), self.star())

    def __lt__(self, other: "SuperPartition"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return (",".join(map(str, self.antisymmetric_parts)) + ";"
                + ",".join(map(str, self.symmetric_parts)))

    def __repr__(self):
        return f"SuperPartition({str(self)!r})"

    def to_json(self) -> dict:
        return {"a": list(self.antisymmetric_parts), "s": list(self.symmetric_parts)}

    @classmethod
    def from_json(cls, data: dict) -> "SuperPartition":
        return make_superpartition(data.get("a", ()), data.get("s", ()))


def make_superpartition(a: Sequence[int] = (), s: Sequence[int] = ()) -> SuperPartition:
    """Validated constructor; raises a :class:`SuperPartitionError` subclass."""
    s = tuple(s)
    if any(v < 0 for v in s):
        raise NegativePart(f"negative bosonic part in {s}")
    if 0 in s:
        # zeros are only allowed as trailing padding
        if any(v != 0 for v in s[s.index(0):]):
            raise NotWeaklyDecreasing(f"bosonic parts {s} are not weakly decreasing")
    return SuperPartition(tuple(a), s)


def parse(text: str) -> SuperPartition:
    """Parse ``"a1,a2,...;s1,s2,..."``; either side may be empty."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if text.count(";") != 1:
        pos = text.find(";", text.find(";") + 1) if text.count(";") > 1 else len(text)
        raise ParseError("expected exactly one ';'", pos)
    semi = text.index(";")

    def numbers(chunk: str, offset: int) -> list[int]:
        out = []
        if not chunk.strip():
            return out
        pos = offset
        for piece in chunk.split(","):
            stripped = piece.strip()
            if not stripped.isdigit():
                raise ParseError(f"invalid part {piece!r}", pos)
            out.append(int(stripped))
            pos += len(piece) + 1
        return out

    a = numbers(text[:semi], 0)
    s = numbers(text[semi + 1:], semi + 1)
    return make_superpartition(a, s)


def from_diagrams(star: Sequence[int], circled: Sequence[int]) -> SuperPartition:
    """Rebuild a superpartition from its pair of partitions."""
    a, s = [], []
    for i, c in enumerate(circled):
        st = star[i] if i < len(star) else 0
        if c == st + 1:
            a.append(st)
        elif c == st:
            s.append(st)
        else:
            raise SuperPartitionError(f"{circled} / {star} is not a superpartition diagram")
    return SuperPartition(tuple(a), tuple(s))


def from_rows(rows: Sequence[tuple[int, bool]]) -> SuperPartition | None:
    """Superpartition from ``(length, has_circle)`` rows, or None if invalid."""
    star = [length for length, _ in rows]
    circled = [length + int(c) for length, c in rows]
    if any(x < y for x, y in zip(star, star[1:])):
        return None
    if any(x < y for x, y in zip(circled, circled[1:])):
        return None
    fermionic = [length for length, c in rows if c]
    if len(set(fermionic)) != len(fermionic):
        return None
    if any(length == 0 and not c for length, c in rows):
        return None
    return SuperPartition(tuple(sorted(fermionic, reverse=True)),
                          tuple(length for length, c in rows if not c))


def epsilon(sp: SuperPartition, i: int) -> int:
    """Fermionic flag of row ``i`` (1-based)."""
    eps = sp.epsilon()
    if not 1 <= i <= len(eps):
        raise IndexError(f"row {i} out of range for {sp}")
    return eps[i - 1]


def aut_order(partition: Sequence[int]) -> int:
    return prod(factorial(k) for k in Counter(partition).values())


def z_weight(sp: SuperPartition) -> Fraction:
    """Signed weight ``(-1)^binom(m,2) |Aut(s)| / prod(s)``."""
    sign = -1 if comb(sp.fermionic_degree, 2) % 2 else 1
    return sign * Fraction(aut_order(sp.symmetric_parts), prod(sp.symmetric_parts))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of ``n`` with parts at most ``max_part``, lex decreasing."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _strict_partitions(n: int, length: int, below: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of non-negative ints of given length and sum."""
    if length == 0:
        if n == 0:
            yield ()
        return
    # the smallest remaining parts are length-1, ..., 0
    for first in range(min(n, below - 1), -1, -1):
        if first < length - 1:
            break
        for rest in _strict_partitions(n - first, length - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_superpartitions(n: int, m: int) -> tuple[SuperPartition, ...]:
    """Every superpartition of total degree n and fermionic degree m, sorted."""
    out = []
    for k in range(n + 1):
        for a in _strict_partitions(k, m, k + 1):
            for s in partitions(n - k):
                out.append(SuperPartition(a, s))
    return tuple(sorted(out, key=SuperPartition.sort_key))


def superpartitions_up_to(max_n: int, max_m: int) -> Iterator[SuperPartition]:
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            yield from enumerate_superpartitions(n, m)
