"""Parameter classes ``Z(n) <= Z*(n) <= Z**(n) <= Z***(n)`` and their AG subclasses."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .core import MIN_ORDER


class ClassVariant(enum.Enum):
    Z = "z"                          # nonzero, distinct, gcd(t, u) == 1
    ZSTAR = "zstar"                  # nonzero, distinct
    ZSTARSTAR = "zstarstar"          # nonzero
    ZSTARSTARSTAR = "zstarstarstar"  # unrestricted

    def contains(self, n: int, t: int, u: int, include_zero_pair: bool = False) -> bool:
        """Membership of the (already reduced) pair ``(t, u)``."""
        if not (0 <= t < n and 0 <= u < n):
            return False
        if self is ClassVariant.ZSTARSTARSTAR:
            return include_zero_pair or (t, u) != (0, 0)
        if t == 0 or u == 0:
            return False
        if self is ClassVariant.ZSTARSTAR:
            return True
        if t == u:
            return False
        return self is ClassVariant.ZSTAR or gcd(t, u) == 1


def smallest_class(n: int, t: int, u: int) -> ClassVariant | None:
    """The tightest of the four classes containing ``(t mod n, u mod n)``."""
    t, u = t % n, u % n
    for v in ClassVariant:
        if v.contains(n, t, u):
            return v
    return None


@dataclass(frozen=True)
class ClassListing:
    n: int
    variant: ClassVariant
    pairs: tuple[tuple[int, int], ...]
    ag_filtered: bool = False

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs


def _check_n(n: int) -> None:
    if n < MIN_ORDER:
        raise ValueError(f"modulus must be >= {MIN_ORDER}, got {n}")


def enumerate_class(n: int, variant: ClassVariant, include_zero_pair: bool = False) -> ClassListing:
    """All pairs of ``variant`` at modulus ``n`` in lexicographic order.

    ``(0, 0)`` is left out of ``Z***`` unless ``include_zero_pair`` is set.
    """
    _check_n(n)
    variant = ClassVariant(variant)
    pairs = tuple(
        (t, u) for t in range(n) for u in range(n)
        if variant.contains(n, t, u, include_zero_pair)
    )
    return ClassListing(n, variant, pairs)


def ag_members(n: int, variant: ClassVariant, include_zero_pair: bool = False) -> ClassListing:
    """Pairs of ``variant`` with ``t**2 == u (mod n)``, i.e. the AG-groupoids."""
    _check_n(n)
    variant = ClassVariant(variant)
    pairs = tuple(
        (t, t * t % n) for t in range(n)
        if variant.contains(n, t, t * t % n, include_zero_pair)
    )
    return ClassListing(n, variant, pairs, ag_filtered=True)


def ag_group_members(n: int) -> ClassListing:
    """Pairs ``(t, 1)`` with ``t**2 == 1 (mod n)``."""
    _check_n(n)
    pairs = tuple((t, 1) for t in range(1, n) if t * t % n == 1)
    return ClassListing(n, ClassVariant.ZSTARSTAR, pairs, ag_filtered=True)
