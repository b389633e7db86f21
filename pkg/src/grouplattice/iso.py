"""Exact isomorphism testing by backtracking over generator images.

The search maps a greedily-chosen generating set of the source group onto
invariant-matched candidates in the target group, rebuilding the partial
homomorphism after each choice and pruning on any conflict. A full table
check validates the final map, so the search can prune aggressively without
risking a false positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteGroup, extend_closure
from .errors import GroupError, GroupTooLarge

DEFAULT_ISO_CAP = 512


@dataclass(frozen=True)
class Isomorphism:
    """A witness isomorphism: map[a] is the image of element a."""

    source: FiniteGroup
    target: FiniteGroup
    map: tuple[int, ...]

    def __post_init__(self):
        n = self.source.order
        if self.target.order != n or sorted(self.map) != list(range(n)):
            raise GroupError("map is not a bijection between the element sets")
        perm = np.array(self.map, dtype=np.int32)
        t1, t2 = self.source.table, self.target.table
        if not (perm[t1] == t2[np.ix_(perm, perm)]).all():
            a, b = map(int, np.argwhere(perm[t1] != t2[np.ix_(perm, perm)])[0])
            raise GroupError(f"map is not a homomorphism at pair ({a}, {b})")


def element_invariants(g: FiniteGroup) -> tuple[tuple[int, int, int, int], ...]:
    """Per-element invariant vectors preserved by any isomorphism.

    Each element gets (order, centralizer size, number of square roots,
    derived-subgroup membership). Order multisets alone fail to separate
    some order-32 pairs; the centralizer profile resolves them cheaply.
    """
    cached = getattr(g, "_element_invariants", None)
    if cached is not None:
        return cached
    t = g.table
    n = g.order
    orders = g.element_orders
    cent = (t == t.T).sum(axis=1)
    sq_counts = np.bincount(t[np.arange(n), np.arange(n)], minlength=n)
    dmask = g.derived_mask
    inv = tuple(
        (orders[i], int(cent[i]), int(sq_counts[i]), dmask >> i & 1)
        for i in range(n)
    )
    g._element_invariants = inv
    return inv


def fingerprint(g: FiniteGroup) -> tuple:
    """Isomorphism-invariant summary used as a fast necessary condition."""
    zsize = g.center_mask.bit_count()
    dsize = g.derived_mask.bit_count()
    return (
        g.order,
        g.is_abelian,
        zsize,
        dsize,
        g.exponent,
        tuple(sorted(element_invariants(g))),
    )


def minimal_generating_set(g: FiniteGroup) -> tuple[int, ...]:
    """Greedy irredundant generating set, scanning elements by descending
    order then index."""
    if g.order == 1:
        return ()
    rows = g._rows
    candidates = sorted(range(1, g.order), key=lambda x: (-g.element_orders[x], x))
    mask = 1
    elems: tuple[int, ...] = (0,)
    gens: tuple[int, ...] = ()
    full = (1 << g.order) - 1
    for x in candidates:
        if mask >> x & 1:
            continue
        mask, new = extend_closure(rows, mask, elems, gens, x)
        elems = elems + new
        gens = gens + (x,)
        if mask == full:
            break
    return gens


def is_isomorphic(g1: FiniteGroup, g2: FiniteGroup, cap: int = DEFAULT_ISO_CAP):
    """Exact isomorphism decision: a witness Isomorphism, or None.

    Raises GroupTooLarge when the common order exceeds the cap.
    """
    n = g1.order
    if g2.order != n:
        return None
    if n > cap:
        raise GroupTooLarge(f"isomorphism test at order {n} exceeds cap {cap}")
    if n == 1:
        return Isomorphism(g1, g2, (0,))
    inv1 = element_invariants(g1)
    inv2 = element_invariants(g2)
    if fingerprint(g1) != fingerprint(g2):
        return None

    by_inv: dict[tuple, list[int]] = {}
    for x in range(n):
        by_inv.setdefault(inv2[x], []).append(x)
    gens = minimal_generating_set(g1)
    cand = [by_inv.get(inv1[g], []) for g in gens]
    if any(not c for c in cand):
        return None
    # assign the most constrained generators first
    order_idx = sorted(range(len(gens)), key=lambda i: len(cand[i]))
    gens = tuple(gens[i] for i in order_idx)
    cand = [cand[i] for i in order_idx]

    rows1 = g1._rows
    rows2 = g2._rows
    t1 = g1.table
    t2 = g2.table

    def rebuild(images: list[int]):
        """Unique hom extension of gen->image on the generated subgroup,
        or None on conflict."""
        map_ = [-1] * n
        used = [False] * n
        map_[0] = 0
        used[0] = True
        known = [0]
        pairs = list(zip(gens[: len(images)], images))
        i = 0
        while i < len(known):
            a = known[i]
            i += 1
            fa = map_[a]
            for gsrc, gtgt in pairs:
                b = rows1[a][gsrc]
                t = rows2[fa][gtgt]
                fb = map_[b]
                if fb == -1:
                    if used[t]:
                        return None
                    map_[b] = t
                    used[t] = True
                    known.append(b)
                elif fb != t:
                    return None
        return map_, len(known)

    images: list[int] = []

    def dfs(depth: int):
        if depth == len(gens):
            map_, size = rebuild(images)  # final rebuild is never None here
            if size != n:
                return None
            perm = np.array(map_, dtype=np.int32)
            if (perm[t1] == t2[np.ix_(perm, perm)]).all():
                return tuple(map_)
            return None
        for h in cand[depth]:
            images.append(h)
            if rebuild(images) is not None:
                result = dfs(depth + 1)
                if result is not None:
                    return result
            images.pop()
        return None

    found = dfs(0)
    if found is None:
        return None
    return Isomorphism(g1, g2, found)
