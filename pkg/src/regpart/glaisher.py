"""The merge correspondence and the insertion bijection.

The merge correspondence sends any partition to one whose multiplicities all
stay below a modulus r: as long as some part size k occurs at least r times,
r copies of k are replaced by a single part r*k. Always merging the smallest
eligible size gives a canonical run, but the final partition and the number
of steps do not depend on the order, so the step count is a well defined
statistic of the starting partition. Running the replacement backwards
(always splitting the smallest part divisible by r) inverts the map on
partitions with no part divisible by r.

The insertion map extends this to modulus tuples. Given a partition with no
part divisible by any modulus, it removes some copies of a chosen part,
merges what remains with respect to the leading modulus, and inserts a new
run that encodes the removed copies through the factorization of their count
over the remaining moduli.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classes import ModulusTuple, PartitionClass, TooSmall, enumerate_class, is_member
from .partition import Partition


class NotRegular(ValueError):
    """The inverse direction needs every multiplicity below the modulus."""


class InvalidTriple(ValueError):
    """The insertion map was given data outside its domain."""


MERGE = "merge"
SPLIT = "split"


@dataclass(frozen=True)
class GlaisherTrace:
    """A replayable record of one run of the correspondence.

    Each step is ``(op, k)`` where a merge turns k^r into r*k and a split
    turns r*k back into k^r. The step count is the operation statistic of
    the class-regular partition at the class-regular end of the run.
    """

    start: Partition
    end: Partition
    modulus: int
    steps: tuple[tuple[str, int], ...]

    @property
    def count(self) -> int:
        return len(self.steps)

    def states(self) -> list[Partition]:
        """All intermediate partitions, from start to end inclusive."""
        table = self.start.multiplicities()
        out = [self.start]
        r = self.modulus
        for op, small in self.steps:
            big = r * small
            if op == MERGE:
                if table.get(small, 0) < r:
                    raise ValueError(f"cannot replay merge at {small}")
                table[small] -= r
                if not table[small]:
                    del table[small]
                table[big] = table.get(big, 0) + 1
            elif op == SPLIT:
                if table.get(big, 0) < 1:
                    raise ValueError(f"cannot replay split at {big}")
                table[big] -= 1
                if not table[big]:
                    del table[big]
                table[small] = table.get(small, 0) + r
            else:
                raise ValueError(f"unknown step {op!r}")
            out.append(Partition.from_multiplicities(table))
        return out


def _check_modulus(r: int) -> None:
    if not isinstance(r, int) or isinstance(r, bool) or r < 2:
        raise TooSmall(f"modulus {r!r} is not an integer >= 2")


def glaisher_forward(partition: Partition, modulus: int) -> GlaisherTrace:
    """Merge until every multiplicity is below the modulus.

    The canonical order merges the smallest eligible part size first. The
    end partition has all multiplicities below the modulus and the same
    total size as the start.
    """
    _check_modulus(modulus)
    table = partition.multiplicities()
    steps = []
    while True:
        eligible = [size for size, mult in table.items() if mult >= modulus]
        if not eligible:
            break
        small = min(eligible)
        table[small] -= modulus
        if not table[small]:
            del table[small]
        big = modulus * small
        table[big] = table.get(big, 0) + 1
        steps.append((MERGE, small))
    end = Partition.from_multiplicities(table)
    return GlaisherTrace(partition, end, modulus, tuple(steps))


def glaisher_inverse(partition: Partition, modulus: int) -> GlaisherTrace:
    """Split until no part is divisible by the modulus.

    The input must have every multiplicity below the modulus (NotRegular
    otherwise). The canonical order splits the smallest divisible part
    first. The end partition is the unique class-regular partition whose
    forward merge gives the input back, with the same number of steps.
    """
    _check_modulus(modulus)
    if any(mult >= modulus for _, mult in partition.runs):
        raise NotRegular(
            f"some part occurs {modulus} or more times, cannot invert"
        )
    table = partition.multiplicities()
    steps = []
    while True:
        divisible = [size for size in table if size % modulus == 0]
        if not divisible:
            break
        big = min(divisible)
        table[big] -= 1
        if not table[big]:
            del table[big]
        small = big // modulus
        table[small] = table.get(small, 0) + modulus
        steps.append((SPLIT, small))
    end = Partition.from_multiplicities(table)
    return GlaisherTrace(partition, end, modulus, tuple(steps))


def factor_out(value: int, bases) -> tuple[int, int]:
    """Split value into (block, cofactor) over the given coprime bases.

    The block is the largest divisor of value that is a product of powers of
    the bases; the cofactor is value divided by the block, so no base
    divides the cofactor. With no bases the block is 1.
    """
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"can only factor positive integers, got {value!r}")
    block = 1
    cofactor = value
    for base in bases:
        _check_modulus(base)
        while cofactor % base == 0:
            cofactor //= base
            block *= base
    return block, cofactor


@dataclass(frozen=True)
class BijectionTriple:
    """A class-regular partition with a marked run: a part size congruent to
    the chosen residue and a number of copies of it, between 1 and its
    multiplicity."""

    partition: Partition
    part: int
    copies: int


def insertion_map(moduli: ModulusTuple, residue: int, triple: BijectionTriple) -> Partition:
    """Image of a marked class-regular partition under the insertion map.

    Removes the marked copies, merges the remainder with respect to the
    leading modulus, and inserts the run (cofactor)^(part * block), where
    (block, cofactor) factors the number of removed copies over the tail
    moduli. Preserves total size. Raises InvalidTriple when the residue is
    out of range or the triple is outside the domain.
    """
    head = moduli.head
    if not 1 <= residue <= head - 1:
        raise InvalidTriple(f"residue {residue} not in 1..{head - 1}")
    lam, part, copies = triple.partition, triple.part, triple.copies
    if part % head != residue:
        raise InvalidTriple(f"part {part} is not congruent to {residue} mod {head}")
    have = lam.multiplicity(part)
    if not 1 <= copies <= have:
        raise InvalidTriple(f"copies {copies} not in 1..{have} for part {part}")
    if not is_member(lam, PartitionClass.class_regular(moduli)):
        raise InvalidTriple("marked partition has a part divisible by a modulus")
    reduced = lam.difference(Partition.from_multiplicities({part: copies}))
    merged = glaisher_forward(reduced, head).end
    block, cofactor = factor_out(copies, moduli.tail)
    return merged.union(Partition.from_multiplicities({cofactor: part * block}))


@lru_cache(maxsize=None)
def _image_census(moduli: ModulusTuple, residue: int, n: int):
    source = PartitionClass.class_regular(moduli)
    table: dict[Partition, set[BijectionTriple]] = {}
    head = moduli.head
    for lam in enumerate_class(source, n):
        for part, mult in lam.runs:
            if part % head != residue:
                continue
            for copies in range(1, mult + 1):
                triple = BijectionTriple(lam, part, copies)
                image = insertion_map(moduli, residue, triple)
                table.setdefault(image, set()).add(triple)
    return {image: frozenset(found) for image, found in table.items()}


def insertion_preimages(
    moduli: ModulusTuple, residue: int, n: int, target: Partition
) -> frozenset[BijectionTriple]:
    """All marked partitions of total size n that the insertion map sends to
    the target.

    When every tail modulus is congruent to 1 modulo the head, the number of
    preimages is checked on the fly against the counting identity: it equals
    the number of distinct sizes with multiplicity at least the residue when
    the target is regular, exactly 1 when the target is inferior-regular,
    and 0 otherwise.
    """
    head = moduli.head
    if not 1 <= residue <= head - 1:
        raise InvalidTriple(f"residue {residue} not in 1..{head - 1}")
    if n < 0:
        raise ValueError(f"partition sizes are nonnegative, got {n}")
    if target.size != n:
        raise ValueError(f"target has size {target.size}, expected {n}")
    found = _image_census(moduli, residue, n).get(target, frozenset())
    if moduli.tail_congruent:
        if is_member(target, PartitionClass.regular(moduli)):
            expected = sum(1 for _, mult in target.runs if mult >= residue)
        elif is_member(target, PartitionClass.inferior_regular(moduli)):
            expected = 1
        else:
            expected = 0
        assert len(found) == expected, (
            f"preimage count {len(found)} disagrees with the counting "
            f"identity value {expected} for {target}"
        )
    return found
