"""Part statistics and the counting identities that relate them.

Two statistics drive everything here. On the class-regular side, count the
parts lying in a residue class with multiplicity. On the regular side, count
the distinct sizes that occur at least a threshold number of times. Summed
over all partitions of n in their families, the two counts differ by exactly
the total number of merge operations, which in turn equals the number of
inferior-regular partitions of n. The identity needs every tail modulus to
be congruent to 1 modulo the leading one; the aggregate report records
whether that hypothesis holds so a failure can be told apart from a
counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import (
    ModulusTuple,
    PartitionClass,
    count_class,
    enumerate_class,
    validate_tuple,
)
from .glaisher import glaisher_forward
from .partition import Partition


def count_congruent_parts(partition: Partition, modulus: int, residue: int) -> int:
    """Parts congruent to the residue modulo the modulus, with multiplicity."""
    if not 1 <= residue <= modulus - 1:
        raise ValueError(f"residue {residue} not in 1..{modulus - 1}")
    return sum(mult for part, mult in partition.runs if part % modulus == residue)


def count_repeated_sizes(partition: Partition, modulus: int, threshold: int) -> int:
    """Distinct part sizes occurring at least ``threshold`` times.

    The modulus only bounds the admissible thresholds (1 up to modulus - 1),
    matching the residues used on the class-regular side.
    """
    if not 1 <= threshold <= modulus - 1:
        raise ValueError(f"threshold {threshold} not in 1..{modulus - 1}")
    return sum(1 for _, mult in partition.runs if mult >= threshold)


@dataclass(frozen=True)
class XYCReport:
    """Aggregated statistics for one modulus tuple and one total size.

    ``per_residue`` maps each residue j to (X, Y, X - Y) where X sums the
    congruent-part counts over the class-regular family and Y sums the
    repeated-size counts over the regular family. ``operation_total`` is the
    total number of merge steps over the class-regular family, and
    ``inferior_count`` the size of the inferior-regular family.
    """

    moduli: ModulusTuple
    n: int
    per_residue: dict[int, tuple[int, int, int]]
    operation_total: int
    inferior_count: int
    hypothesis_holds: bool


def aggregate(moduli: ModulusTuple | int, n: int) -> XYCReport:
    """One pass over each family, collecting every residue at once."""
    moduli = validate_tuple(moduli)
    head = moduli.head
    x_totals = {j: 0 for j in range(1, head)}
    y_totals = {j: 0 for j in range(1, head)}
    operations = 0
    for lam in enumerate_class(PartitionClass.class_regular(moduli), n):
        for part, mult in lam.runs:
            x_totals[part % head] += mult
        operations += glaisher_forward(lam, head).count
    for mu in enumerate_class(PartitionClass.regular(moduli), n):
        for _, mult in mu.runs:
            for j in range(1, min(mult, head - 1) + 1):
                y_totals[j] += 1
    per_residue = {
        j: (x_totals[j], y_totals[j], x_totals[j] - y_totals[j])
        for j in range(1, head)
    }
    inferior = count_class(PartitionClass.inferior_regular(moduli), n)
    return XYCReport(
        moduli=moduli,
        n=n,
        per_residue=per_residue,
        operation_total=operations,
        inferior_count=inferior,
        hypothesis_holds=moduli.tail_congruent,
    )


@dataclass(frozen=True)
class XYCRow:
    """One residue of an XYCReport, flattened for reporting.

    ``ok`` states that the difference X - Y, the merge-operation total, and
    the inferior-regular count all agree.
    """

    moduli: ModulusTuple
    n: int
    residue: int
    x_total: int
    y_total: int
    difference: int
    operation_total: int
    inferior_count: int
    hypothesis_holds: bool
    ok: bool


def verify_xyc(moduli: ModulusTuple | int, n: int) -> tuple[XYCRow, ...]:
    """Check X - Y = operations = inferior count for every residue."""
    moduli = validate_tuple(moduli)
    report = aggregate(moduli, n)
    rows = []
    for residue, (x_total, y_total, diff) in sorted(report.per_residue.items()):
        rows.append(XYCRow(
            moduli=moduli,
            n=n,
            residue=residue,
            x_total=x_total,
            y_total=y_total,
            difference=diff,
            operation_total=report.operation_total,
            inferior_count=report.inferior_count,
            hypothesis_holds=report.hypothesis_holds,
            ok=diff == report.operation_total == report.inferior_count,
        ))
    return tuple(rows)


@dataclass(frozen=True)
class LengthCheck:
    """Total lengths of the two families of partitions of n, for a single
    modulus, against the merge-operation total.

    Each merge step shortens a partition by modulus - 1 parts, so the
    length sums must differ by (modulus - 1) times the operation total.
    """

    modulus: int
    n: int
    class_regular_length_sum: int
    regular_length_sum: int
    operation_total: int
    ok: bool

    @property
    def difference(self) -> int:
        return self.class_regular_length_sum - self.regular_length_sum


def verify_length_identity(modulus: int, n: int) -> LengthCheck:
    """Compare the two length sums with the operation total."""
    mt = ModulusTuple((modulus,))
    class_sum = 0
    operations = 0
    for lam in enumerate_class(PartitionClass.class_regular(mt), n):
        class_sum += lam.length
        operations += glaisher_forward(lam, modulus).count
    regular_sum = sum(
        mu.length for mu in enumerate_class(PartitionClass.regular(mt), n)
    )
    ok = class_sum - regular_sum == (modulus - 1) * operations
    return LengthCheck(
        modulus=modulus,
        n=n,
        class_regular_length_sum=class_sum,
        regular_length_sum=regular_sum,
        operation_total=operations,
        ok=ok,
    )
