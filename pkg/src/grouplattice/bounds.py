"""Degree and maximal-subgroup bounds, each returned as a BoundReport.

All limits are exact rationals; comparisons never touch floating point.
The bounds hold for every solvable group, so a violation here is a bug
detector for the lattice code, not a mathematical event.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .arith import divisors, factorize, is_prime, primes_upto, require_prime
from .core import FiniteGroup, quotient_is_elementary_abelian_2
from .errors import GroupError, NotSolvable, PrimesNotDistinct, TrivialGroup
from .lattice import SubgroupLattice


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality: computed quantity vs exact limit."""

    bound_name: str
    computed: int
    limit: Fraction
    holds: bool
    equality: bool
    equality_condition: Optional[bool] = None


def _make_report(
    name: str,
    computed: int,
    limit: Fraction,
    equality_condition: Optional[bool] = None,
) -> BoundReport:
    limit = Fraction(limit)
    return BoundReport(
        bound_name=name,
        computed=computed,
        limit=limit,
        holds=computed <= limit,
        equality=computed == limit,
        equality_condition=equality_condition,
    )


def _require_solvable(g: FiniteGroup) -> None:
    if not g.is_solvable:
        raise NotSolvable(f"{g.name} is not solvable")


def _require_nontrivial(g: FiniteGroup) -> None:
    if g.order == 1:
        raise TrivialGroup(f"{g.name} is trivial")


def lemma_2_1(g: FiniteGroup, h, lattice: SubgroupLattice) -> BoundReport:
    """Vertex degree of a subgroup of order d is at most d + n/d - 2,
    with equality exactly when H is normal and H and G/H are both
    elementary abelian 2-groups."""
    _require_solvable(g)
    d = h.order
    n = g.order
    computed = lattice.degree(h)
    limit = Fraction(d + n // d - 2)
    condition = (
        h.is_normal
        and h.is_elementary_abelian_2
        and quotient_is_elementary_abelian_2(g, h)
    )
    report = _make_report("lemma_2_1", computed, limit, condition)
    assert report.equality == condition, (
        f"equality characterization failed for {g.name}, |H|={d}: "
        f"degree {computed}, limit {limit}, condition {condition}"
    )
    return report


def wall_a(g: FiniteGroup, lattice: SubgroupLattice) -> BoundReport:
    """|Max(G)| <= |G| - 1."""
    _require_solvable(g)
    _require_nontrivial(g)
    computed = len(lattice.maximal_subgroups())
    return _make_report("wall_a", computed, Fraction(g.order - 1))


def cww_b(g: FiniteGroup, lattice: SubgroupLattice) -> BoundReport:
    """|Max(G)| <= (|G| - 1)/(p - 1) for p the smallest prime divisor,
    with equality exactly for elementary abelian groups."""
    _require_solvable(g)
    _require_nontrivial(g)
    computed = len(lattice.maximal_subgroups())
    p = min(factorize(g.order))
    condition = g.is_abelian and is_prime(g.exponent)
    return _make_report("cww_b", computed, Fraction(g.order - 1, p - 1), condition)


def herzog_manz_c(g: FiniteGroup, lattice: SubgroupLattice) -> BoundReport:
    """|Max(G)| <= (q|G/Phi(G)| - p)/(p(q - 1)) for p, q the smallest and
    largest prime divisors."""
    _require_solvable(g)
    _require_nontrivial(g)
    computed = len(lattice.maximal_subgroups())
    primes = factorize(g.order)
    p, q = min(primes), max(primes)
    frattini_index = g.order // lattice.frattini().order
    limit = Fraction(q * frattini_index - p, p * (q - 1))
    return _make_report("herzog_manz_c", computed, limit)


def newton_d(g: FiniteGroup, lattice: SubgroupLattice, p: int) -> tuple[BoundReport, ...]:
    """Bounds on |Max_p(G)| for |G| = p^k m with p not dividing m: the
    general limit (p^r-1)/(p-1) + (p^(k-r+1)-p)/(p-1) where p^r is the
    index of the smallest normal subgroup of p-power index, plus the
    sharper limit (p^k-1)/(p-1) as a second report when that normal
    subgroup is proper."""
    _require_solvable(g)
    require_prime(p)
    if g.order % p != 0:
        raise GroupError(f"{p} does not divide |{g.name}| = {g.order}")
    k = 0
    n = g.order
    while n % p == 0:
        n //= p
        k += 1
    residual = lattice.o_p(p)
    index = g.order // residual.order
    r = 0
    while index % p == 0:
        index //= p
        r += 1
    computed = len(lattice.max_p(p))
    main_limit = Fraction(p ** r - 1, p - 1) + Fraction(p ** (k - r + 1) - p, p - 1)
    reports = [_make_report("newton_d_main", computed, main_limit)]
    if residual.order < g.order:
        reports.append(_make_report("newton_d_sharp", computed, Fraction(p ** k - 1, p - 1)))
    return tuple(reports)


def newton_e(g: FiniteGroup, lattice: SubgroupLattice) -> BoundReport:
    """|Max(G)| <= (p1^n1 - 1)/(p1 - 1) + sum over the other prime-power
    parts of (p^(n+1) - p)/(p - 1), with p1^n1 the smallest part."""
    _require_solvable(g)
    _require_nontrivial(g)
    computed = len(lattice.maximal_subgroups())
    parts = sorted((p ** e, p, e) for p, e in factorize(g.order).items())
    part1, p1, _ = parts[0]
    limit = Fraction(part1 - 1, p1 - 1)
    for _, p, e in parts[1:]:
        limit += Fraction(p ** (e + 1) - p, p - 1)
    return _make_report("newton_e", computed, limit)


def lemma_2_3_check(p1: int, p2: int, p3: int, n1: int, n2: int, n3: int) -> BoundReport:
    """For three distinct primes, sum of (p^(n+1) - p)/(p - 1) is at most
    half the product of the p^n."""
    for p in (p1, p2, p3):
        require_prime(p)
    if len({p1, p2, p3}) != 3:
        raise PrimesNotDistinct(f"primes must be distinct, got {(p1, p2, p3)}")
    if min(n1, n2, n3) < 1:
        raise GroupError(f"exponents must be >= 1, got {(n1, n2, n3)}")
    computed = 0
    prod = 1
    for p, e in ((p1, n1), (p2, n2), (p3, n3)):
        computed += (p ** (e + 1) - p) // (p - 1)
        prod *= p ** e
    return _make_report("lemma_2_3", computed, Fraction(prod, 2))


def lemma_2_3_scan(prime_bound: int, exp_bound: int) -> list[BoundReport]:
    """Evaluate the three-prime inequality for every distinct prime triple
    up to prime_bound and every exponent tuple up to exp_bound."""
    if exp_bound < 1:
        raise GroupError(f"exp_bound must be >= 1, got {exp_bound}")
    primes = primes_upto(prime_bound)
    out = []
    exponents = range(1, exp_bound + 1)
    for p1, p2, p3 in combinations(primes, 3):
        for n1, n2, n3 in product(exponents, repeat=3):
            out.append(lemma_2_3_check(p1, p2, p3, n1, n2, n3))
    return out


@dataclass(frozen=True)
class CandidateOrders:
    """Divisors d of n that can carry a vertex of degree > n/2 - 1 as the
    order of a maximal subgroup, per the quadratic divisor analysis; n at
    most 11 short-circuits to the small-order case."""

    n: int
    small_case: bool
    divisors: Optional[frozenset[int]]


def candidate_orders(n: int) -> CandidateOrders:
    if n < 1:
        raise GroupError(f"n must be >= 1, got {n}")
    if n <= 11:
        return CandidateOrders(n=n, small_case=True, divisors=None)
    allowed = frozenset(d for d in divisors(n) if 2 * d * d - (n + 2) * d + 2 * n > 0)
    targets = {1, 2, n}
    if n % 2 == 0:
        targets.add(n // 2)
    assert allowed <= targets, f"candidate divisors {sorted(allowed)} escape {sorted(targets)} for n={n}"
    return CandidateOrders(n=n, small_case=False, divisors=allowed)


def edge_bound(lattice: SubgroupLattice) -> BoundReport:
    """|E| <= |V|(|G| - 1)/2, from the per-vertex degree bound."""
    g = lattice.parent
    _require_solvable(g)
    computed = lattice.edge_count
    limit = Fraction(len(lattice) * (g.order - 1), 2)
    return _make_report("edge_bound", computed, limit)
