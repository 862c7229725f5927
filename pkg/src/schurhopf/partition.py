"""Integer partitions: the indexing combinatorics for everything else.

A partition is stored canonically as a tuple of weakly decreasing positive
integers; the empty tuple is the zero partition.  Partition weight is capped
by a configurable limit (default 64) so malformed input fails fast instead of
exhausting memory.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import PartitionError, WeightLimitError

DEFAULT_WEIGHT_LIMIT = 64

_weight_limit = DEFAULT_WEIGHT_LIMIT


def get_weight_limit() -> int:
    return _weight_limit


def set_weight_limit(limit: int) -> None:
    """Raise or lower the guard on partition weight (None of the math needs
    more than the default; this exists for callers who know what they want)."""
    global _weight_limit
    if limit < 0:
        raise ValueError("weight limit must be nonnegative")
    _weight_limit = limit


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Subclassing tuple keeps hashing and comparison cheap, which matters
    because partitions key every coefficient table in the package.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        t = tuple(parts)
        # strip trailing zeros so (2, 1, 0, 0) and (2, 1) coincide
        while t and t[-1] == 0:
            t = t[:-1]
        for i, p in enumerate(t):
            if not isinstance(p, int):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p <= 0:
                raise PartitionError(f"parts must be positive, got {p}")
            if i and t[i - 1] < p:
                raise PartitionError(f"parts must be weakly decreasing, got {t}")
        if sum(t) > _weight_limit:
            raise WeightLimitError(
                f"partition weight {sum(t)} exceeds the limit {_weight_limit}"
            )
        return tuple.__new__(cls, t)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (column lengths)."""
        if not self:
            return self
        cols = [0] * self[0]
        for part in self:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: Iterable[int]) -> bool:
        """Diagram containment: other fits inside self row by row."""
        other = tuple(other)
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def frobenius(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Frobenius coordinates (arms, legs) of the diagonal cells."""
        conj = self.conjugate()
        arms = []
        legs = []
        for i, part in enumerate(self):
            if part <= i:
                break
            arms.append(part - i - 1)
            legs.append(conj[i] - i - 1)
        return tuple(arms), tuple(legs)

    @classmethod
    def from_frobenius(cls, arms: Iterable[int], legs: Iterable[int]) -> "Partition":
        arms = tuple(arms)
        legs = tuple(legs)
        if len(arms) != len(legs):
            raise PartitionError("arm and leg lists must have equal length")
        rank = len(arms)
        if any(arms[i] <= arms[i + 1] for i in range(rank - 1)):
            raise PartitionError("arms must be strictly decreasing")
        if any(legs[i] <= legs[i + 1] for i in range(rank - 1)):
            raise PartitionError("legs must be strictly decreasing")
        if any(a < 0 for a in arms) or any(l < 0 for l in legs):
            raise PartitionError("Frobenius coordinates must be nonnegative")
        rows = [arms[i] + i + 1 for i in range(rank)]
        heights = [legs[j] + j + 1 for j in range(rank)]
        depth = heights[0] if rank else 0
        for i in range(rank, depth):
            rows.append(sum(1 for h in heights if h > i))
        return cls(rows)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"

    def __str__(self) -> str:
        return format_partition(self)


ZERO = Partition()


def parse_partition(text: str) -> Partition:
    """Parse the shared partition grammar.

    Two forms: a comma list ("4,2,1") and the compact exponent form used in
    classical notation ("2^2 1^2", "21", "1^4").  In the compact form each
    part is a single digit, optionally followed by ^multiplicity; multi-digit
    parts need the comma form.  "0" and "" denote the zero partition.
    """
    t = text.strip()
    if t in ("", "0"):
        return ZERO
    if "," in t:
        tokens = t.split(",")
        if tokens[-1].strip() == "":
            tokens.pop()  # single trailing comma marks multi-digit parts
        parts = []
        for tok in tokens:
            tok = tok.strip()
            if not tok.isdigit():
                raise PartitionError(f"bad part {tok!r} in {text!r}")
            parts.append(int(tok))
        if parts and parts[-1] == 0:
            raise PartitionError(f"zero part in {text!r}")
        return Partition(parts)
    try:
        return _parse_compact(t, text)
    except PartitionError:
        if t.isdigit():
            return Partition((int(t),))
        raise


def _parse_compact(t: str, text: str) -> Partition:
    parts = []
    i = 0
    n = len(t)
    while i < n:
        ch = t[i]
        if ch == " ":
            i += 1
            continue
        if not ch.isdigit() or ch == "0":
            raise PartitionError(f"unexpected {ch!r} in partition {text!r}")
        part = int(ch)
        i += 1
        mult = 1
        if i < n and t[i] == "^":
            i += 1
            j = i
            while j < n and t[j].isdigit():
                j += 1
            if j == i:
                raise PartitionError(f"missing exponent after ^ in {text!r}")
            mult = int(t[i:j])
            if mult < 1:
                raise PartitionError(f"exponent must be positive in {text!r}")
            i = j
        parts.extend([part] * mult)
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    """Render a partition in the compact exponent form, e.g. (2,2,1) -> "2^21".

    The inverse of parse_partition on its output.  A space separates two runs
    only when the first ends in an exponent, so "2^2 1^2" stays unambiguous
    while (2,1,1) prints as "21^2".  Parts above 9 fall back to the comma form.
    """
    p = tuple(p)
    if not p:
        return "0"
    if p[0] > 9:
        if len(p) == 1:
            return f"{p[0]},"  # trailing comma keeps "11" from reading as 1^2
        return ",".join(str(x) for x in p)
    runs = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        runs.append((p[i], j - i))
        i = j
    out = []
    for k, (part, mult) in enumerate(runs):
        if k and "^" in out[-1]:
            out.append(" ")
        out.append(str(part) if mult == 1 else f"{part}^{mult}")
    return "".join(out)


def term_sort_key(p: Iterable[int]):
    """Canonical display order: weight descending, then reverse-lexicographic."""
    t = tuple(p)
    return (-sum(t), tuple(-x for x in t))


def partitions_of(d: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of d in reverse-lexicographic order, largest part first.

    partitions_of(4) gives (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if d < 0:
        return []
    if max_part is None:
        max_part = d
    return [Partition(raw) for raw in _descending_parts(d, max_part)]


def _descending_parts(d, max_part):
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in _descending_parts(d - first, first):
            yield (first,) + rest


def partitions_up_to(d: int) -> list[Partition]:
    """All partitions of weight 0, 1, ..., d, weight-major order."""
    out: list[Partition] = []
    for w in range(d + 1):
        out.extend(partitions_of(w))
    return out


def subpartitions(p: Iterable[int]) -> Iterator[Partition]:
    """All partitions whose diagram fits inside p (any weight, p included)."""
    p = tuple(p)

    def rec(i, prev):
        if i == len(p):
            yield ()
            return
        top = min(p[i], prev)
        for v in range(top, -1, -1):
            if v == 0:
                yield ()
                return
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for raw in rec(0, p[0] if p else 0):
        yield Partition(raw)


def distinct_partitions_of(d: int) -> Iterator[tuple[int, ...]]:
    """Partitions of d into strictly decreasing parts (plain tuples)."""

    def rec(rem, max_part):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, max_part), 0, -1):
            for rest in rec(rem - first, first - 1):
                yield (first,) + rest

    yield from rec(d, d)
