"""Integer partitions as immutable multisets of positive parts.

A partition is kept internally as a run list ``((part, mult), ...)`` with
strictly decreasing part sizes, which makes the multiset view (multiplicity
lookups, union, difference) and the sequence view (weakly decreasing parts)
cheap to derive from one another.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping


class NotSubMultiset(ValueError):
    """Multiset difference was asked to remove parts that are not all present."""


class Partition:
    """An integer partition of a nonnegative number.

    Accepts parts in any order; the empty iterable gives the empty partition
    (the unique partition of 0). Instances are immutable, hashable, and
    compare equal iff they have the same parts with the same multiplicities.
    """

    __slots__ = ("_runs",)

    _runs: tuple[tuple[int, int], ...]

    def __init__(self, parts: Iterable[int] = ()):
        counts: Counter[int] = Counter()
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise ValueError(f"parts must be positive integers, got {part!r}")
            counts[part] += 1
        self._runs = tuple(sorted(counts.items(), reverse=True))

    @classmethod
    def from_multiplicities(cls, table: Mapping[int, int]) -> Partition:
        """Build from a ``{part: multiplicity}`` table; zero entries are dropped."""
        runs = []
        for part, mult in table.items():
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise ValueError(f"part sizes must be positive integers, got {part!r}")
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
                raise ValueError(f"multiplicities must be nonnegative integers, got {mult!r}")
            if mult:
                runs.append((part, mult))
        runs.sort(reverse=True)
        return cls._from_runs(tuple(runs))

    @classmethod
    def _from_runs(cls, runs: tuple[tuple[int, int], ...]) -> Partition:
        # trusted path: runs must already be strictly decreasing with mult >= 1
        self = object.__new__(cls)
        self._runs = runs
        return self

    @property
    def runs(self) -> tuple[tuple[int, int], ...]:
        """Distinct parts with multiplicities, largest part first."""
        return self._runs

    @property
    def parts(self) -> tuple[int, ...]:
        """The weakly decreasing part sequence."""
        out = []
        for part, mult in self._runs:
            out.extend([part] * mult)
        return tuple(out)

    @property
    def size(self) -> int:
        """The number being partitioned (sum of all parts)."""
        return sum(part * mult for part, mult in self._runs)

    @property
    def length(self) -> int:
        """Number of parts, counted with multiplicity."""
        return sum(mult for _, mult in self._runs)

    def multiplicity(self, part: int) -> int:
        """How many copies of ``part`` occur (0 when absent)."""
        for size, mult in self._runs:
            if size == part:
                return mult
            if size < part:
                break
        return 0

    def multiplicities(self) -> dict[int, int]:
        """A fresh ``{part: multiplicity}`` table of the nonzero entries."""
        return dict(self._runs)

    def distinct_parts(self) -> tuple[int, ...]:
        """Distinct part sizes, largest first."""
        return tuple(part for part, _ in self._runs)

    def union(self, other: Partition) -> Partition:
        """Multiset union: multiplicities add."""
        merged = Counter(dict(self._runs))
        merged.update(dict(other._runs))
        return Partition._from_runs(tuple(sorted(merged.items(), reverse=True)))

    def difference(self, other: Partition) -> Partition:
        """Multiset difference; ``other`` must be contained in ``self``.

        Raises NotSubMultiset when some part of ``other`` exceeds its
        multiplicity here.
        """
        table = dict(self._runs)
        for part, mult in other._runs:
            have = table.get(part, 0)
            if mult > have:
                raise NotSubMultiset(
                    f"cannot remove {part}^{mult}: only {have} copies present"
                )
            if mult == have:
                del table[part]
            else:
                table[part] = have - mult
        return Partition._from_runs(tuple(sorted(table.items(), reverse=True)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._runs == other._runs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._runs)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        if not self._runs:
            return "()"
        pieces = []
        for part, mult in self._runs:
            pieces.append(str(part) if mult == 1 else f"{part}^{mult}")
        return "(" + " ".join(pieces) + ")"
