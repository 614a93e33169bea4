"""Closed-form invariants for semigroups generated by a Fibonacci tail shift.

For an index a the generators are f_a + f_0, f_a + f_1, f_a + f_2, ... taken
over the whole Fibonacci sequence; only finitely many matter because every
f_a + f_k with k >= a folds into earlier ones.  Everything here is a formula
or a small combinatorial count, so results for astronomically large ``a`` are
cheap.  The ``semigroup_core`` oracle recomputes the same invariants by brute
force in the feasible range and the tests require exact agreement.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .fibonacci import beta, fib, zeckendorf
from .semigroup_core import AperyTable, ResourceLimit

__all__ = [
    "TableTooLarge",
    "EnumerationTooLarge",
    "DEFAULT_TABLE_BOUND",
    "MAX_SUBSET_INDEX",
    "family_generators",
    "family_apery",
    "family_apery_value",
    "family_frobenius",
    "family_genus",
    "family_genus_sum",
    "family_genus_recurrence_check",
    "kaplansky_count",
    "enumerate_sparse_subsets",
    "zeckendorf_bijection_check",
    "FamilySummary",
    "family_summary",
]

DEFAULT_TABLE_BOUND = 1_000_000  # largest f_a for which a full Apery table is built
MAX_SUBSET_INDEX = 40  # sparse-subset enumeration cutoff


class TableTooLarge(ResourceLimit):
    """A full Apery table was requested for an index with f_a above the bound."""


class EnumerationTooLarge(ResourceLimit):
    """Sparse-subset enumeration was requested beyond the supported range."""


def family_generators(a: int) -> tuple[int, ...]:
    """Minimal generating set: f_a + f_k for k = 0 and 2 <= k <= a - 1.

    The k = 1 shift duplicates k = 2 and every k >= a folds into smaller
    shifts, leaving exactly a - 1 generators once a >= 3.  For a <= 2 the
    semigroup is all of N, minimally generated by 1.
    """
    if a < 0:
        raise ValueError("index must be nonnegative")
    if a <= 2:
        return (1,)
    fa = fib(a)
    return (fa,) + tuple(fa + fib(k) for k in range(2, a))


def family_apery_value(a: int, x: int) -> int:
    """w(x) = beta(x) * f_a + x, the least element congruent to x mod f_a.

    Pointwise evaluation has no size bound; only full-table materialization
    does.
    """
    if a < 0:
        raise ValueError("index must be nonnegative")
    fa = max(fib(a), 1)
    if not 0 <= x < fa:
        raise ValueError(f"residue {x} out of range for modulus {fa}")
    return beta(x) * fib(a) + x


def family_apery(a: int, *, table_bound: int = DEFAULT_TABLE_BOUND) -> AperyTable:
    """Full Apery table at the multiplicity f_a, straight from the formula."""
    if a < 0:
        raise ValueError("index must be nonnegative")
    fa = fib(a)
    if fa <= 1:
        return AperyTable(1, (0,))
    if fa > table_bound:
        raise TableTooLarge(
            f"Apery table needs f_{a} = {fa} entries, above the bound {table_bound}"
        )
    return AperyTable(fa, tuple(beta(x) * fa + x for x in range(fa)))


def family_frobenius(a: int) -> int:
    """F = floor((a - 1) / 2) * f_a - 1.

    The largest Apery value has residue f_a - 1, whose minimal summand count
    is floor((a - 1) / 2).  Yields -1 for a = 2 as well, consistent with
    S = N there.
    """
    if a < 0:
        raise ValueError("index must be nonnegative")
    if a < 2:
        return -1
    return ((a - 1) // 2) * fib(a) - 1


def family_genus_sum(a: int) -> int:
    """Genus as the weighted sparse-subset count sum_i i * C(a - 1 - i, i)."""
    if a < 3:
        raise ValueError("the combinatorial sum needs index at least 3")
    return sum(i * comb(a - 1 - i, i) for i in range(1, (a - 1) // 2 + 1))


def family_genus(a: int) -> int:
    """g = ((a - 2) * f_a + a * f_{a-2}) / 5, always an exact integer."""
    if a < 0:
        raise ValueError("index must be nonnegative")
    if a < 2:
        return 0
    num = (a - 2) * fib(a) + a * fib(a - 2)
    assert num % 5 == 0, "closed-form genus numerator must be divisible by 5"
    g = num // 5
    if a >= 3:
        assert g == family_genus_sum(a), "closed form and combinatorial sum disagree"
    return g


def family_genus_recurrence_check(a: int) -> bool:
    """Check g(a) = g(a - 1) + g(a - 2) + f_{a-2}, the genus analogue of the
    Fibonacci recurrence.  Valid from a = 5 on, once both predecessors are
    genuine members of the family."""
    if a < 5:
        raise ValueError("the recurrence needs index at least 5")
    return family_genus(a) == family_genus(a - 1) + family_genus(a - 2) + fib(a - 2)


def kaplansky_count(n: int, m: int) -> int:
    """Number of m-element subsets of {2..n-1} with no two consecutive members.

    Equals C(n-1-m, m); zero as soon as 2m exceeds n - 1, and one for the
    empty set.
    """
    if n < 2:
        raise ValueError("index bound must be at least 2")
    if m < 0:
        raise ValueError("subset size must be nonnegative")
    if m == 0:
        return 1
    if 2 * m > n - 1:
        return 0
    return comb(n - 1 - m, m)


def enumerate_sparse_subsets(n: int, m: int) -> list[tuple[int, ...]]:
    """All m-subsets of {2..n-1} with no two consecutive members, in lex order."""
    if n < 2:
        raise ValueError("index bound must be at least 2")
    if m < 0:
        raise ValueError("subset size must be nonnegative")
    if n > MAX_SUBSET_INDEX:
        raise EnumerationTooLarge(
            f"enumeration supports index bounds up to {MAX_SUBSET_INDEX}, got {n}"
        )
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], lo: int, remaining: int) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        # after picking v, the rest needs v+2, v+4, ... to fit below n
        for v in range(lo, n - 2 * (remaining - 1)):
            extend(prefix + (v,), v + 2, remaining - 1)

    extend((), 2, m)
    return out


def zeckendorf_bijection_check(a: int) -> bool:
    """Zeckendorf index sets of 1..f_a - 1 hit each sparse subset exactly once.

    B(x) is an index set inside {2..a - 1} with no two consecutive members,
    and distinct x give distinct sets.  Checking injectivity plus per-size
    counts against kaplansky_count pins the map as a bijection onto the
    sparse subsets of every size from 1 to floor((a - 1) / 2).  Also checks
    the classical consequence f_a = sum over j of C(a - 1 - j, j).
    """
    if not 3 <= a <= 25:
        raise ValueError("bijection check supports 3 <= a <= 25")
    fa = fib(a)
    top = (a - 1) // 2
    if fa != sum(comb(a - 1 - j, j) for j in range(top + 1)):
        return False
    seen: set[tuple[int, ...]] = set()
    per_size: dict[int, int] = {}
    for x in range(1, fa):
        dec = zeckendorf(x)
        key = dec.indices
        if key in seen:
            return False
        if key[0] < 2 or key[-1] > a - 1:
            return False
        if any(hi - lo < 2 for lo, hi in zip(key, key[1:])):
            return False
        seen.add(key)
        per_size[dec.beta] = per_size.get(dec.beta, 0) + 1
    if set(per_size) != set(range(1, top + 1)):
        return False
    if any(per_size[m] != kaplansky_count(a, m) for m in per_size):
        return False
    return sum(per_size.values()) == fa - 1


@dataclass(frozen=True)
class FamilySummary:
    """Closed-form invariants for one family index."""

    a: int
    generators: tuple[int, ...]
    embedding_dimension: int
    multiplicity: int
    frobenius: int
    genus: int
    n_count: int
    wilf_slack: int


def family_summary(a: int) -> FamilySummary:
    """All closed-form invariants; cheap even for very large ``a``.

    n_count comes from the identity g + n = F + 1 rather than enumeration,
    and the Wilf slack e * n - (F + 1) is asserted nonnegative.
    """
    if a < 0:
        raise ValueError("index must be nonnegative")
    gens = family_generators(a)
    f = family_frobenius(a)
    g = family_genus(a)
    n = f + 1 - g
    assert n >= 0, "element count below the Frobenius number cannot be negative"
    slack = len(gens) * n - (f + 1)
    assert slack >= 0, "Wilf inequality must hold throughout the family"
    return FamilySummary(
        a=a,
        generators=gens,
        embedding_dimension=len(gens),
        multiplicity=gens[0],
        frobenius=f,
        genus=g,
        n_count=n,
        wilf_slack=slack,
    )
