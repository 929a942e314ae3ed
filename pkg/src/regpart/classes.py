"""Restricted partition families and their canonical enumeration.

Four kinds of family are supported, three of them relative to a tuple of
pairwise coprime moduli ``(r1, ..., rm)``:

* ``all``: every partition.
* ``class-regular``: no part divisible by any modulus in the tuple.
* ``regular``: every multiplicity below ``r1``, and no part divisible by any
  of the remaining moduli.
* ``inferior-regular``: exactly one part size with multiplicity at least
  ``r1``, and no part divisible by any of the remaining moduli.

Enumeration is in descending lexicographic order of the part sequences, so
``(7)`` comes first and ``(1, 1, ..., 1)`` last.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from math import gcd

from .partition import Partition


class EmptyTuple(ValueError):
    """A modulus tuple needs at least one entry."""


class TooSmall(ValueError):
    """Every modulus must be an integer of size at least 2."""


class NotCoprime(ValueError):
    """Two moduli in the tuple share a common factor."""


@dataclass(frozen=True)
class ModulusTuple:
    """An ordered tuple of pairwise coprime moduli, each at least 2.

    Order matters: the leading modulus bounds multiplicities in the regular
    families, while the remaining ones forbid divisible part sizes.
    """

    moduli: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.moduli)
        object.__setattr__(self, "moduli", values)
        if not values:
            raise EmptyTuple("need at least one modulus")
        for r in values:
            if not isinstance(r, int) or isinstance(r, bool) or r < 2:
                raise TooSmall(f"modulus {r!r} is not an integer >= 2")
        for i, a in enumerate(values):
            for b in values[i + 1:]:
                if gcd(a, b) != 1:
                    raise NotCoprime(f"moduli {a} and {b} share a factor")

    @property
    def head(self) -> int:
        """The leading modulus."""
        return self.moduli[0]

    @property
    def tail(self) -> tuple[int, ...]:
        """The moduli after the leading one (possibly empty)."""
        return self.moduli[1:]

    @property
    def tail_congruent(self) -> bool:
        """True when every tail modulus is congruent to 1 modulo the head.

        This is the hypothesis under which the preimage-counting identities
        for the insertion map hold; it is vacuously true for a single
        modulus.
        """
        return all(t % self.head == 1 for t in self.tail)

    def __iter__(self) -> Iterator[int]:
        return iter(self.moduli)

    def __len__(self) -> int:
        return len(self.moduli)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.moduli)


def validate_tuple(moduli: ModulusTuple | Iterable[int] | int) -> ModulusTuple:
    """Coerce an int or an iterable of ints into a validated ModulusTuple."""
    if isinstance(moduli, ModulusTuple):
        return moduli
    if isinstance(moduli, int) and not isinstance(moduli, bool):
        return ModulusTuple((moduli,))
    return ModulusTuple(tuple(moduli))


ALL = "all"
REGULAR = "regular"
CLASS_REGULAR = "class-regular"
INFERIOR_REGULAR = "inferior-regular"

_KINDS = (ALL, REGULAR, CLASS_REGULAR, INFERIOR_REGULAR)


@dataclass(frozen=True)
class PartitionClass:
    """One of the partition families, tagged with its moduli when restricted."""

    kind: str
    moduli: ModulusTuple | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown partition class kind {self.kind!r}")
        if (self.moduli is None) != (self.kind == ALL):
            raise ValueError("moduli must be given exactly for the restricted kinds")

    @classmethod
    def all_partitions(cls) -> PartitionClass:
        return cls(ALL)

    @classmethod
    def regular(cls, moduli) -> PartitionClass:
        return cls(REGULAR, validate_tuple(moduli))

    @classmethod
    def class_regular(cls, moduli) -> PartitionClass:
        return cls(CLASS_REGULAR, validate_tuple(moduli))

    @classmethod
    def inferior_regular(cls, moduli) -> PartitionClass:
        return cls(INFERIOR_REGULAR, validate_tuple(moduli))

    def __contains__(self, partition: Partition) -> bool:
        return is_member(partition, self)

    def __str__(self) -> str:
        if self.kind == ALL:
            return ALL
        return f"{self.kind}({self.moduli})"


def _hits_divisor(partition: Partition, divisors: tuple[int, ...]) -> bool:
    return any(part % d == 0 for part, _ in partition.runs for d in divisors)


def is_member(partition: Partition, family: PartitionClass) -> bool:
    """Membership test against the family definition."""
    if family.kind == ALL:
        return True
    mt = family.moduli
    if family.kind == CLASS_REGULAR:
        return not _hits_divisor(partition, mt.moduli)
    if _hits_divisor(partition, mt.tail):
        return False
    if family.kind == REGULAR:
        return all(mult < mt.head for _, mult in partition.runs)
    heavy = sum(1 for _, mult in partition.runs if mult >= mt.head)
    return heavy == 1


def _runs_stream(n, limit, divisors, cap, prefix):
    # Partitions of n into parts <= limit avoiding the divisors, with
    # multiplicities below cap when cap is set, as run tuples in descending
    # lexicographic order of the part sequences.
    if n == 0:
        yield tuple(prefix)
        return
    for part in range(min(limit, n), 0, -1):
        if any(part % d == 0 for d in divisors):
            continue
        top = n // part
        if cap is not None and top >= cap:
            top = cap - 1
        for mult in range(top, 0, -1):
            prefix.append((part, mult))
            yield from _runs_stream(n - part * mult, part - 1, divisors, cap, prefix)
            prefix.pop()


def _inferior_stream(n, limit, divisors, head, have_heavy, prefix):
    # Same order as _runs_stream, keeping only partitions with exactly one
    # part size of multiplicity >= head.
    if n == 0:
        if have_heavy:
            yield tuple(prefix)
        return
    if not have_heavy and n < head:
        return  # no room left for a run of multiplicity >= head
    for part in range(min(limit, n), 0, -1):
        if any(part % d == 0 for d in divisors):
            continue
        for mult in range(n // part, 0, -1):
            if have_heavy and mult >= head:
                continue
            prefix.append((part, mult))
            yield from _inferior_stream(
                n - part * mult, part - 1, divisors, head,
                have_heavy or mult >= head, prefix,
            )
            prefix.pop()


def _family_runs(family: PartitionClass, n: int):
    if n < 0:
        raise ValueError(f"partition sizes are nonnegative, got {n}")
    if family.kind == ALL:
        return _runs_stream(n, n, (), None, [])
    mt = family.moduli
    if family.kind == CLASS_REGULAR:
        return _runs_stream(n, n, mt.moduli, None, [])
    if family.kind == REGULAR:
        return _runs_stream(n, n, mt.tail, mt.head, [])
    return _inferior_stream(n, n, mt.tail, mt.head, False, [])


def enumerate_class(family: PartitionClass, n: int) -> Iterator[Partition]:
    """All members of the family with total size n, descending lex order."""
    for runs in _family_runs(family, n):
        yield Partition._from_runs(runs)


def count_class(family: PartitionClass, n: int) -> int:
    """Number of members of the family with total size n."""
    return sum(1 for _ in _family_runs(family, n))
