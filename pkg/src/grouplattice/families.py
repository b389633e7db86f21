"""Constructors for named group families and a small-order catalog.

Concrete models only: pairs, triples, and bit vectors with twisted
products. Every constructor returns a fully validated FiniteGroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .arith import abelian_type_list, is_prime, primes_upto, require_prime
from .core import (
    DEFAULT_CONSTRUCTION_CAP,
    FiniteGroup,
    from_permutation_generators,
)
from .errors import (
    ActionOrderMismatch,
    GroupError,
    GroupTooLarge,
    NotAbelian,
    NotAutomorphism,
    NotCentralInvolution,
)
from .iso import DEFAULT_ISO_CAP, is_isomorphic


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise GroupTooLarge(f"order {order} exceeds construction cap {cap}")


def cyclic(n: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"cyclic order must be >= 1, got {n}")
    _check_cap(n, cap)
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, name=f"C{n}", cap=cap)


def abelian(
    factors: Sequence[int],
    name: Optional[str] = None,
    cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    factors = list(factors)
    if not factors:
        return cyclic(1, cap=cap)
    if any(f < 2 for f in factors):
        raise GroupError(f"cyclic factors must be >= 2, got {factors}")
    n = 1
    for f in factors:
        n *= f
    _check_cap(n, cap)
    idx = np.arange(n, dtype=np.int64)
    table = np.zeros((n, n), dtype=np.int64)
    divisor = n
    for f in factors:
        divisor //= f
        d = (idx // divisor) % f
        table = table * f + (d[:, None] + d[None, :]) % f
    if name is None:
        name = "x".join(f"C{f}" for f in factors)
    return FiniteGroup(table, name=name, cap=cap)


def elementary_abelian(p: int, k: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    require_prime(p)
    if k < 0:
        raise GroupError(f"rank must be >= 0, got {k}")
    if k == 0:
        return cyclic(1, cap=cap)
    name = f"C{p}" if k == 1 else f"C{p}^{k}"
    return abelian([p] * k, name=name, cap=cap)


def generalized_dihedral(a: FiniteGroup, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Extension of an abelian group by an involution acting by inversion.

    Elements are pairs (eps, x) indexed eps*|A| + x; (1, x) elements all
    invert A under conjugation.
    """
    if not a.is_abelian:
        raise NotAbelian(f"{a.name} is not abelian")
    m = a.order
    _check_cap(2 * m, cap)
    ta = a.table
    inv = np.array(a.inverses, dtype=np.int32)
    ta_inv = ta[:, inv]  # entry (x, y) = x * y^-1
    table = np.block([[ta, ta + m], [ta_inv + m, ta_inv]])
    return FiniteGroup(table, name=f"D({a.name})", cap=cap)


def dihedral(m: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Dihedral group of order 2m."""
    if m < 1:
        raise GroupError(f"dihedral parameter must be >= 1, got {m}")
    g = generalized_dihedral(cyclic(m, cap=cap), cap=cap)
    g.name = f"D{2 * m}"
    return g


def semidirect(
    a: FiniteGroup,
    action: Sequence[int],
    m: int,
    name: Optional[str] = None,
    cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    """Split extension A : C_m where the C_m generator acts by the given
    automorphism (a permutation of A's elements)."""
    if m < 1:
        raise GroupError(f"cyclic factor order must be >= 1, got {m}")
    na = a.order
    act = np.asarray(action, dtype=np.int32)
    if act.shape != (na,) or sorted(int(v) for v in act) != list(range(na)):
        raise NotAutomorphism(f"action is not a permutation of 0..{na - 1}")
    ta = a.table
    if not (act[ta] == ta[np.ix_(act, act)]).all():
        x, y = map(int, np.argwhere(act[ta] != ta[np.ix_(act, act)])[0])
        raise NotAutomorphism(f"action breaks the product at pair ({x}, {y})")
    powers = [np.arange(na, dtype=np.int32)]
    for _ in range(m - 1):
        powers.append(act[powers[-1]])
    if not (act[powers[-1]] == powers[0]).all():
        raise ActionOrderMismatch(f"action to the power {m} is not the identity")
    _check_cap(na * m, cap)
    blocks = []
    for c in range(m):
        sub = ta[:, powers[c]]
        blocks.append([sub + na * ((c + d) % m) for d in range(m)])
    table = np.block(blocks)
    if name is None:
        name = f"{a.name}:C{m}"
    return FiniteGroup(table, name=name, cap=cap)


def semidirect_C2(
    a: FiniteGroup,
    action: Sequence[int],
    name: Optional[str] = None,
    cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    return semidirect(a, action, 2, name=name, cap=cap)


def wall_H(r: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Central product of r copies of the dihedral group of order 8.

    Modeled on pairs (v, eps) with v in F_2^{2r}: generator x_i is bit 2i,
    y_i is bit 2i+1, and the product twists by the bilinear form
    B(v, w) = sum_i v[x_i] w[y_i] mod 2. Order 2^(2r+1).
    """
    if r < 1:
        raise GroupError(f"r must be >= 1, got {r}")
    n = 1 << (2 * r + 1)
    _check_cap(n, cap)
    nv = 1 << (2 * r)
    xmask = 0
    for i in range(r):
        xmask |= 1 << (2 * i)
    table = [[0] * n for _ in range(n)]
    for v in range(nv):
        vx = v & xmask
        for eps in range(2):
            row = table[(v << 1) | eps]
            for w in range(nv):
                b = (vx & (w >> 1)).bit_count() & 1
                u = (v ^ w) << 1
                row[(w << 1)] = u | (eps ^ b)
                row[(w << 1) | 1] = u | (eps ^ b ^ 1)
    return FiniteGroup(table, name=f"H({r})", cap=cap)


def wall_S(r: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Split extension of C_2^{2r} by an involution sending each x_i to
    x_i y_i and fixing every y_i. Order 2^(2r+1)."""
    if r < 1:
        raise GroupError(f"r must be >= 1, got {r}")
    _check_cap(1 << (2 * r + 1), cap)
    a = elementary_abelian(2, 2 * r, cap=cap)
    xmask = (1 << r) - 1
    action = [v ^ ((v & xmask) << r) for v in range(a.order)]
    return semidirect(a, action, 2, name=f"S({r})", cap=cap)


def wall_T(r: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Split extension of C_2^{2r} by an order-3 map cycling
    x_i -> y_i -> x_i y_i -> x_i. Order 3*4^r."""
    if r < 1:
        raise GroupError(f"r must be >= 1, got {r}")
    _check_cap(3 << (2 * r), cap)
    a = elementary_abelian(2, 2 * r, cap=cap)
    xmask = (1 << r) - 1
    action = []
    for v in range(a.order):
        xpart = v & xmask
        ypart = v >> r
        action.append(ypart | ((xpart ^ ypart) << r))
    return semidirect(a, action, 3, name=f"T({r})", cap=cap)


def direct_product(
    g1: FiniteGroup,
    g2: FiniteGroup,
    name: Optional[str] = None,
    cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    n1, n2 = g1.order, g2.order
    _check_cap(n1 * n2, cap)
    t1 = g1.table.astype(np.int64)
    t2 = g2.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    if name is None:
        name = f"{g1.name}x{g2.name}"
    return FiniteGroup(table, name=name, cap=cap)


def _central_involutions(g: FiniteGroup) -> list[int]:
    zmask = g.center_mask
    return [x for x in range(g.order) if zmask >> x & 1 and g.element_orders[x] == 2]


def central_product(
    g1: FiniteGroup,
    g2: FiniteGroup,
    z1: Optional[int] = None,
    z2: Optional[int] = None,
    name: Optional[str] = None,
    cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    """Quotient of the direct product identifying (z1, z2) with the
    identity; z1, z2 default to the unique central involutions."""
    for g, z, side in ((g1, z1, "first"), (g2, z2, "second")):
        if z is None:
            found = _central_involutions(g)
            if len(found) != 1:
                raise NotCentralInvolution(
                    f"{side} factor has {len(found)} central involutions; pass one explicitly"
                )
    if z1 is None:
        z1 = _central_involutions(g1)[0]
    if z2 is None:
        z2 = _central_involutions(g2)[0]
    for g, z, side in ((g1, z1, "first"), (g2, z2, "second")):
        if not (0 <= z < g.order) or g.element_orders[z] != 2 or not g.center_mask >> z & 1:
            raise NotCentralInvolution(f"element {z} of the {side} factor is not a central involution")
    n1, n2 = g1.order, g2.order
    n = n1 * n2 // 2
    _check_cap(n, cap)
    rows1, rows2 = g1._rows, g2._rows
    labels = [-1] * (n1 * n2)
    reps = []
    for a in range(n1):
        az = rows1[a][z1]
        for b in range(n2):
            p = a * n2 + b
            if labels[p] != -1:
                continue
            c = len(reps)
            reps.append((a, b))
            labels[p] = c
            labels[az * n2 + rows2[b][z2]] = c
    table = [[0] * n for _ in range(n)]
    for i, (a, b) in enumerate(reps):
        row = table[i]
        ra, rb = rows1[a], rows2[b]
        for j, (c, d) in enumerate(reps):
            row[j] = labels[ra[c] * n2 + rb[d]]
    if name is None:
        name = f"{g1.name}*{g2.name}"
    return FiniteGroup(table, name=name, cap=cap)


def dicyclic(m: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Dicyclic group of order 4m: a of order 2m, b^2 = a^m,
    b a b^-1 = a^-1. The m = 2 case is the quaternion group."""
    if m < 2:
        raise GroupError(f"dicyclic parameter must be >= 2, got {m}")
    n = 4 * m
    _check_cap(n, cap)
    k = 2 * m
    # a^j a^i = a^(j+i); a^j (a^i b) = a^(j+i) b
    # (a^j b) a^i = a^(j-i) b; (a^j b)(a^i b) = a^(j-i+m)
    table = [[0] * n for _ in range(n)]
    for j in range(k):
        for i in range(k):
            table[j][i] = (j + i) % k
            table[j][k + i] = k + (j + i) % k
            table[k + j][i] = k + (j - i) % k
            table[k + j][k + i] = (j - i + m) % k
    name = "Q8" if m == 2 else f"Dic{m}"
    return FiniteGroup(table, name=name, cap=cap)


def heisenberg(p: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Nonabelian group of order p^3 and exponent p (p odd prime): triples
    (a, b, c) with product (a+a', b+b', c+c'+a*b') mod p."""
    require_prime(p)
    if p == 2:
        raise GroupError("exponent-p model needs an odd prime")
    n = p ** 3
    _check_cap(n, cap)
    idx = np.arange(n, dtype=np.int64)
    a, b, c = idx // (p * p), (idx // p) % p, idx % p
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    a2, b2, c2 = a[None, :], b[None, :], c[None, :]
    table = ((a1 + a2) % p) * p * p + ((b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p
    return FiniteGroup(table, name=f"Heis{p}", cap=cap)


def symmetric(n: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"degree must be >= 1, got {n}")
    if n == 1:
        return cyclic(1, cap=cap)
    cycle = tuple(range(1, n)) + (0,)
    swap = (1, 0) + tuple(range(2, n))
    return from_permutation_generators(n, [cycle, swap], name=f"S{n}", cap=cap)


def alternating(n: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    if n < 3:
        raise GroupError(f"degree must be >= 3, got {n}")
    three = (1, 2, 0) + tuple(range(3, n))
    if n % 2 == 1:
        big = tuple(range(1, n)) + (0,)
    else:
        big = (0,) + tuple(range(2, n)) + (1,)
    return from_permutation_generators(n, [three, big], name=f"A{n}", cap=cap)


def trivial(cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    return cyclic(1, cap=cap)


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog group with the family labels asserted at construction."""

    name: str
    group: FiniteGroup
    known_tags: frozenset[str]


def _swap_action(p: int) -> list[int]:
    # coordinate swap on C_p x C_p indexed a*p + b
    return [(v % p) * p + v // p for v in range(p * p)]


@lru_cache(maxsize=None)
def catalog(max_order: int, iso_cap: int = DEFAULT_ISO_CAP) -> tuple[CatalogEntry, ...]:
    """All isomorphism types through order min(max_order, 15), plus named
    family representatives up to max_order, pairwise non-isomorphic."""
    if max_order < 1:
        raise GroupError(f"max_order must be >= 1, got {max_order}")
    buckets: dict[int, list[tuple[FiniteGroup, set[str]]]] = {}

    def add(g: FiniteGroup, *tags: str) -> None:
        if g.order > max_order:
            return
        bucket = buckets.setdefault(g.order, [])
        for other, known in bucket:
            if is_isomorphic(other, g, cap=iso_cap) is not None:
                known.update(tags)
                return
        bucket.append((g, set(tags)))

    small = min(max_order, 15)
    for n in range(1, small + 1):
        add(cyclic(n), "small-order")
    extras = {
        4: [lambda: abelian([2, 2])],
        6: [lambda: symmetric(3)],
        8: [
            lambda: abelian([2, 4]),
            lambda: elementary_abelian(2, 3),
            lambda: dihedral(4),
            lambda: dicyclic(2),
        ],
        9: [lambda: abelian([3, 3])],
        10: [lambda: dihedral(5)],
        12: [
            lambda: abelian([2, 6]),
            lambda: dihedral(6),
            lambda: dicyclic(3),
            lambda: alternating(4),
        ],
        14: [lambda: dihedral(7)],
    }
    for n, builders in extras.items():
        if n <= small:
            for build in builders:
                add(build(), "small-order")

    k = 1
    while 2 ** k <= max_order:
        add(elementary_abelian(2, k), "elementary-abelian-2")
        k += 1
    s = 1
    while 2 ** (s + 1) <= max_order:
        add(abelian([2] * (s - 1) + [4]), "c2s-c4")
        s += 1
    for a_order in range(1, max_order // 2 + 1):
        for typ in abelian_type_list(a_order):
            a = abelian(list(typ)) if typ else cyclic(1)
            add(generalized_dihedral(a), "generalized-dihedral")
    r = 1
    while 2 ** (2 * r + 1) <= max_order:
        add(wall_H(r), "wall-H", "generalized-extraspecial-seed")
        add(wall_S(r), "wall-S")
        r += 1
    r = 1
    while 3 * 4 ** r <= max_order:
        add(wall_T(r), "wall-T")
        r += 1
    if max_order >= 8:
        d8 = dihedral(4)
        q8 = dicyclic(2)
        seeds = [d8, q8]
        if max_order >= 16:
            seeds.append(central_product(d8, cyclic(4)))
        if max_order >= 32:
            seeds.append(central_product(d8, d8))
            seeds.append(central_product(d8, q8))
        for seed in seeds:
            g = seed
            add(g, "generalized-extraspecial-seed")
            while g.order * 2 <= max_order:
                g = direct_product(g, cyclic(2))
                add(g, "generalized-extraspecial-seed")
    k = 1
    while 3 ** k <= max_order and k <= 3:
        add(elementary_abelian(3, k), "exponent-3")
        k += 1
    if max_order >= 27:
        add(heisenberg(3), "exponent-3")
    for p in primes_upto(max_order // 2):
        if p == 2:
            continue
        nexp = 1
        while 2 * p ** nexp <= max_order:
            a = elementary_abelian(p, nexp)
            add(direct_product(a, cyclic(2)), "cpn-c2")
            add(generalized_dihedral(a), "cpn-c2", "generalized-dihedral")
            if nexp == 2:
                add(semidirect_C2(a, _swap_action(p), name=f"{a.name}:C2swap"), "cpn-c2")
            nexp += 1
    if max_order >= 48:
        g = direct_product(symmetric(3), dihedral(4))
        add(g, "s3xd8xE")
        while g.order * 2 <= max_order:
            g = direct_product(g, cyclic(2))
            add(g, "s3xd8xE")
    if max_order >= 36:
        s3 = symmetric(3)
        add(direct_product(s3, s3), "s3xs3")
    if max_order >= 24:
        add(symmetric(4), "s4")
    if max_order >= 60:
        add(alternating(5), "a5")

    entries = []
    for n in sorted(buckets):
        for g, tags in sorted(buckets[n], key=lambda pair: pair[0].name):
            entries.append(CatalogEntry(name=g.name, group=g, known_tags=frozenset(tags)))
    return tuple(entries)
