"""Subgroup enumeration and the covering graph of the subgroup order.

Vertices are all subgroups; edges join H < K with nothing strictly
between. Enumeration walks a frontier: each known subgroup is extended
by one cyclic subgroup of prime-power order at a time, which reaches
every subgroup because any proper H < K <= G extends by an element of
prime-power order in K outside H.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteGroup, Subgroup, extend_closure
from .errors import GroupError, GroupTooLarge

DEFAULT_LATTICE_CAP = 256


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree split into down-degree (covered subgroups) and
    up-degree (covering subgroups); degrees[i] = down[i] + up[i]."""

    degrees: tuple[int, ...]
    down: tuple[int, ...]
    up: tuple[int, ...]


class SubgroupLattice:
    """The covering graph of all subgroups of one finite group.

    Subgroups are sorted by (order, membership bitset); index 0 is the
    trivial subgroup and the last index is the whole group.
    """

    def __init__(self, parent: FiniteGroup, subgroups: list[Subgroup], leq: np.ndarray):
        self.parent = parent
        self.subgroups: tuple[Subgroup, ...] = tuple(subgroups)
        self.leq = leq  # leq[i, j] True iff subgroup i <= subgroup j
        strict = leq & ~np.eye(len(subgroups), dtype=bool)
        leq_f = strict.astype(np.float32)
        # i covered by j iff i < j and no k with i < k < j
        self.cover = strict & ((leq_f @ leq_f) == 0)
        self._index = {s.mask: i for i, s in enumerate(self.subgroups)}
        up = self.cover.sum(axis=1)
        down = self.cover.sum(axis=0)
        self._up = tuple(int(v) for v in up)
        self._down = tuple(int(v) for v in down)

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, h: Subgroup) -> int:
        if h.parent is not self.parent or h.mask not in self._index:
            raise GroupError(f"subgroup is not a vertex of the {self.parent.name} lattice")
        return self._index[h.mask]

    @property
    def covers(self) -> list[tuple[int, int]]:
        lower, upper = np.nonzero(self.cover)
        return sorted(zip(map(int, lower), map(int, upper)))

    @property
    def edge_count(self) -> int:
        return int(self.cover.sum())

    def degree(self, h) -> int:
        i = h if isinstance(h, int) else self.index_of(h)
        return self._up[i] + self._down[i]

    def degree_profile(self) -> DegreeProfile:
        degrees = tuple(u + d for u, d in zip(self._up, self._down))
        return DegreeProfile(degrees=degrees, down=self._down, up=self._up)

    def max_degree(self) -> tuple[Subgroup, int]:
        """The vertex of largest degree; ties broken by smallest order,
        then smallest membership bitset."""
        best = max(range(len(self.subgroups)), key=lambda i: (self._up[i] + self._down[i], -i))
        # index order is (order, mask) ascending, so -i prefers earlier vertices
        return self.subgroups[best], self._up[best] + self._down[best]

    def atoms(self) -> list[Subgroup]:
        return [self.subgroups[i] for i in np.nonzero(self.cover[0])[0]]

    def maximal_subgroups(self) -> list[Subgroup]:
        top = len(self.subgroups) - 1
        return [self.subgroups[i] for i in np.nonzero(self.cover[:, top])[0]]

    def max_p(self, p: int) -> list[Subgroup]:
        """Maximal subgroups of index a power of p."""
        n = self.parent.order
        out = []
        for h in self.maximal_subgroups():
            index = n // h.order
            while index % p == 0:
                index //= p
            if index == 1:
                out.append(h)
        return out

    def frattini(self) -> Subgroup:
        maxes = self.maximal_subgroups()
        if not maxes:
            return self.subgroups[-1]
        mask = self.subgroups[-1].mask
        for h in maxes:
            mask &= h.mask
        return self.subgroups[self._index[mask]]

    def o_p(self, p: int) -> Subgroup:
        """Smallest normal subgroup whose index is a power of p, as the
        intersection of all normal subgroups of p-power index."""
        n = self.parent.order
        mask = self.subgroups[-1].mask
        for s in self.subgroups:
            index = n // s.order
            while index % p == 0:
                index //= p
            if index == 1 and s.is_normal:
                mask &= s.mask
        if mask not in self._index:
            raise GroupError(f"normal p-power-index intersection is not a vertex for p={p}")
        result = self.subgroups[self._index[mask]]
        index = n // result.order
        while index % p == 0:
            index //= p
        if index != 1:
            raise GroupError(f"intersection has index {n // result.order}, not a power of {p}")
        return result

    def interval_atoms(self, h: Subgroup) -> list[Subgroup]:
        """Subgroups covering h, i.e. the atoms of the interval [h, G]."""
        i = self.index_of(h)
        return [self.subgroups[j] for j in np.nonzero(self.cover[i])[0]]

    def export_dot(self) -> str:
        lines = [f'digraph "{self.parent.name}" {{', "  rankdir=BT;"]
        for i, s in enumerate(self.subgroups):
            lines.append(f'  n{i} [label="{s.order}"];')
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def report(self) -> dict:
        profile = self.degree_profile()
        vertex, deg = self.max_degree()
        return {
            "group": self.parent.name,
            "order": self.parent.order,
            "subgroup_count": len(self.subgroups),
            "degree_sequence": sorted(profile.degrees),
            "max_degree": deg,
            "max_degree_order": vertex.order,
            "delta": self.parent.delta,
            "edge_count": self.edge_count,
        }


def _cyclic_prime_power_generators(g: FiniteGroup) -> list[int]:
    """One generator per cyclic subgroup of prime-power order > 1, the
    smallest element index generating it."""
    seen: set[int] = set()
    out = []
    rows = g._rows
    for x in range(1, g.order):
        o = g.element_orders[x]
        p = min(k for k in range(2, o + 1) if o % k == 0)
        q = p
        while o % (q * p) == 0:
            q *= p
        if o != q:
            continue
        mask = 1
        y = x
        while not mask >> y & 1:
            mask |= 1 << y
            y = rows[y][x]
        if mask in seen:
            continue
        seen.add(mask)
        out.append(x)
    return out


def all_subgroups(g: FiniteGroup, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Enumerate every subgroup of g and build its covering graph."""
    if g.order > cap:
        raise GroupTooLarge(
            f"{g.name} has order {g.order}, over the lattice cap {cap}"
        )
    cached = g._lattice_cache.get(cap)
    if cached is not None:
        return cached
    rows = g._rows
    gens = _cyclic_prime_power_generators(g)
    trivial = 1
    seen: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {trivial: ((0,), ())}
    frontier = [trivial]
    full = (1 << g.order) - 1
    while frontier:
        mask = frontier.pop()
        elems, basis = seen[mask]
        if mask == full:
            continue
        for x in gens:
            if mask >> x & 1:
                continue
            new_mask, new_elems = extend_closure(rows, mask, elems, basis, x)
            if new_mask not in seen:
                seen[new_mask] = (elems + new_elems, basis + (x,))
                frontier.append(new_mask)
    order_of = {mask: len(elems) for mask, (elems, _) in seen.items()}
    masks = sorted(seen, key=lambda m: (order_of[m], m))
    subgroups = [Subgroup(g, m) for m in masks]
    orders = np.array([s.order for s in subgroups], dtype=np.int64)
    k = len(subgroups)
    member = np.zeros((k, g.order), dtype=np.float32)
    for i, s in enumerate(subgroups):
        member[i, list(s.elements)] = 1.0
    common = member @ member.T  # common[i, j] = |H_i & H_j|, exact in f32
    leq = common == orders[:, None].astype(np.float32)
    lattice = SubgroupLattice(g, subgroups, leq)
    g._lattice_cache[cap] = lattice
    return lattice
