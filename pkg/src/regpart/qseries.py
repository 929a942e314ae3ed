"""Exact truncated power series and the family generating functions.

All coefficients are Python integers, so every identity checked here is
exact: a truncated series knows itself up to some degree and any arithmetic
result is truncated to the smallest degree among its inputs. The family
generating functions are built from Euler products, their inverses, and
geometric tails, and are verified coefficient by coefficient against direct
enumeration.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from math import prod

from .classes import (
    ALL,
    CLASS_REGULAR,
    INFERIOR_REGULAR,
    REGULAR,
    ModulusTuple,
    PartitionClass,
    count_class,
    enumerate_class,
)
from .glaisher import glaisher_forward


class NonInvertible(ValueError):
    """Inversion is exact over the integers only for constant term 1 or -1."""


class TruncatedSeries:
    """A power series with integer coefficients, exact up to a truncation.

    Coefficients beyond the truncation degree are unknown rather than zero;
    asking for one raises IndexError, and arithmetic truncates to the
    smaller window of its operands.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int]):
        values = tuple(coefficients)
        if not values:
            raise ValueError("need at least the constant coefficient")
        for c in values:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        self._coeffs = values

    @classmethod
    def zero(cls, truncation: int) -> TruncatedSeries:
        return cls([0] * (truncation + 1))

    @classmethod
    def one(cls, truncation: int) -> TruncatedSeries:
        return cls([1] + [0] * truncation)

    @property
    def truncation(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, degree: int) -> int:
        if not 0 <= degree <= self.truncation:
            raise IndexError(
                f"coefficient {degree} outside the known range 0..{self.truncation}"
            )
        return self._coeffs[degree]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        return TruncatedSeries(
            [self._coeffs[d] + other._coeffs[d] for d in range(n + 1)]
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        return TruncatedSeries(
            [self._coeffs[d] - other._coeffs[d] for d in range(n + 1)]
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        out = [0] * (n + 1)
        for i, a in enumerate(self._coeffs[:n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def invert(self) -> TruncatedSeries:
        """The multiplicative inverse within the same truncation window.

        Needs constant term 1 or -1, the units of the integers; anything
        else raises NonInvertible.
        """
        c0 = self._coeffs[0]
        if c0 not in (1, -1):
            raise NonInvertible(f"constant term {c0} is not 1 or -1")
        n = self.truncation
        out = [0] * (n + 1)
        out[0] = c0
        for d in range(1, n + 1):
            acc = 0
            for k in range(1, d + 1):
                a = self._coeffs[k]
                if a:
                    acc += a * out[d - k]
            out[d] = -c0 * acc
        return TruncatedSeries(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"


def euler_product(step: int, truncation: int) -> TruncatedSeries:
    """The product of (1 - q^(step * k)) over all k >= 1, truncated.

    Factors whose degree exceeds the truncation contribute nothing, so the
    product is finite.
    """
    if not isinstance(step, int) or isinstance(step, bool) or step < 1:
        raise ValueError(f"step must be a positive integer, got {step!r}")
    if truncation < 0:
        raise ValueError(f"truncation must be nonnegative, got {truncation}")
    coeffs = [0] * (truncation + 1)
    coeffs[0] = 1
    for k in range(1, truncation // step + 1):
        a = step * k
        for d in range(truncation, a - 1, -1):
            coeffs[d] -= coeffs[d - a]
    return TruncatedSeries(coeffs)


def geometric_tail(base: int, truncation: int) -> TruncatedSeries:
    """q^base / (1 - q^base): one for every positive multiple of the base."""
    if not isinstance(base, int) or isinstance(base, bool) or base < 1:
        raise ValueError(f"base must be a positive integer, got {base!r}")
    if truncation < 0:
        raise ValueError(f"truncation must be nonnegative, got {truncation}")
    coeffs = [0] * (truncation + 1)
    for d in range(base, truncation + 1, base):
        coeffs[d] = 1
    return TruncatedSeries(coeffs)


def _subset_product(moduli: ModulusTuple, truncation: int) -> TruncatedSeries:
    # Product over all subsets of the moduli of the Euler product at the
    # subset's product, direct for odd subsets and inverted for even ones.
    # The empty subset contributes the inverse of the plain Euler product,
    # whose coefficients count unrestricted partitions.
    series = TruncatedSeries.one(truncation)
    values = tuple(moduli)
    for size in range(len(values) + 1):
        for combo in combinations(values, size):
            factor = euler_product(prod(combo), truncation)
            if size % 2 == 1:
                series = series * factor
            else:
                series = series * factor.invert()
    return series


def gf_class(family: PartitionClass, truncation: int) -> TruncatedSeries:
    """Generating function of the family, truncated.

    Coefficient d counts the members of total size d. The regular and
    class-regular families of the same tuple share one closed form; the
    inferior-regular coefficients also equal the total number of merge
    operations over the class-regular family at each size.
    """
    if family.kind == ALL:
        return euler_product(1, truncation).invert()
    mt = family.moduli
    if family.kind in (REGULAR, CLASS_REGULAR):
        return _subset_product(mt, truncation)
    if len(mt) == 1:
        # single modulus: product form times the sum of geometric tails at
        # the multiples of the modulus
        r = mt.head
        tails = TruncatedSeries.zero(truncation)
        for k in range(1, truncation // r + 1):
            tails = tails + geometric_tail(r * k, truncation)
        return _subset_product(mt, truncation) * tails
    return gf_tuple_inferior(mt, truncation)


def gf_tuple_inferior(moduli: ModulusTuple, truncation: int) -> TruncatedSeries:
    """Inferior-regular generating function via subset inclusion-exclusion.

    Works for any validated tuple, including a single modulus; the sum runs
    over the subsets containing the leading modulus, with alternating signs
    on the geometric tails at multiples of each subset's product.
    """
    total = TruncatedSeries.zero(truncation)
    for size in range(len(moduli.tail) + 1):
        for combo in combinations(moduli.tail, size):
            block = moduli.head * prod(combo)
            inner = TruncatedSeries.zero(truncation)
            for k in range(1, truncation // block + 1):
                inner = inner + geometric_tail(k * block, truncation)
            if size % 2 == 0:
                total = total + inner
            else:
                total = total - inner
    return _subset_product(moduli, truncation) * total


@dataclass(frozen=True)
class SeriesCheck:
    """Outcome of checking a family's series against direct enumeration.

    ``count_mismatch`` is the first degree where a coefficient fails to
    count the family, or None. For inferior-regular families two more
    streams are compared: ``operations_mismatch`` is the first degree where
    a coefficient differs from the summed merge-operation counts over the
    class-regular family, and ``regular_counts_differ_at`` is the first
    degree where the coefficients depart from the regular family's counts.
    The last one is expected to be a degree, not None: it records that the
    operation totals count the inferior-regular family and not the regular
    one, which the two families' shared small values would otherwise leave
    ambiguous.
    """

    family: PartitionClass
    truncation: int
    series: TruncatedSeries
    count_mismatch: int | None
    operations_mismatch: int | None
    regular_counts_differ_at: int | None

    @property
    def ok(self) -> bool:
        return self.count_mismatch is None and self.operations_mismatch is None


def verify_series_vs_enumeration(family: PartitionClass, truncation: int) -> SeriesCheck:
    """Compare every coefficient up to the truncation with enumeration."""
    series = gf_class(family, truncation)
    count_mismatch = None
    for d in range(truncation + 1):
        if series[d] != count_class(family, d):
            count_mismatch = d
            break
    operations_mismatch = None
    regular_differs = None
    if family.kind == INFERIOR_REGULAR:
        mt = family.moduli
        source = PartitionClass.class_regular(mt)
        for d in range(truncation + 1):
            operations = sum(
                glaisher_forward(lam, mt.head).count
                for lam in enumerate_class(source, d)
            )
            if series[d] != operations:
                operations_mismatch = d
                break
        regular = PartitionClass.regular(mt)
        for d in range(truncation + 1):
            if series[d] != count_class(regular, d):
                regular_differs = d
                break
    return SeriesCheck(
        family=family,
        truncation=truncation,
        series=series,
        count_mismatch=count_mismatch,
        operations_mismatch=operations_mismatch,
        regular_counts_differ_at=regular_differs,
    )
