"""Finite groups as validated Cayley tables.

The element set of a group of order n is always 0..n-1 with 0 the identity,
and the table is the full multiplication table: table[a][b] = a*b. Every
construction path normalizes to this form and validates the group axioms
eagerly, so all downstream code (subgroup masks, lattices, bounds) can rely
on it without re-checking.
"""

from __future__ import annotations

import json
import math
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .arith import is_prime
from .errors import (
    GroupError,
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    NotSubgroup,
)

DEFAULT_CONSTRUCTION_CAP = 4096


def extend_closure(
    rows: Sequence[Sequence[int]],
    h_mask: int,
    h_elems: Sequence[int],
    h_gens: tuple[int, ...],
    x: int,
) -> tuple[int, tuple[int, ...]]:
    """Close the subgroup H (given as bitmask + element list) under x.

    rows is a plain list-of-lists multiplication table. Returns
    (mask, new_elems): the bitmask of <H union {x}> and the elements outside
    H in discovery order. The closure is swept out one right coset H*w at a
    time, so a candidate coset rep already inside the mask is skipped in
    O(1) and the total work stays near-linear in the result size.
    """
    gens = h_gens + (x,)
    mask = h_mask
    new_elems: list[int] = []
    stack = [x]
    while stack:
        r = stack.pop()
        if mask >> r & 1:
            continue
        for h in h_elems:
            t = rows[h][r]
            if not mask >> t & 1:
                mask |= 1 << t
                new_elems.append(t)
        for g in gens:
            stack.append(rows[r][g])
    return mask, tuple(new_elems)


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Validation happens in the constructor: entry range, Latin-square rows
    and columns, a two-sided identity (relocated to index 0 if found
    elsewhere), two-sided inverses, and associativity. Associativity is
    checked with a generating-set test: (a*g)*c = a*(g*c) for every a, c
    and every g in a set that generates the whole table, which is
    equivalent to full associativity and keeps validation at
    O(n^2 log n) instead of O(n^3).

    Instances are immutable after construction; the table array is marked
    read-only.
    """

    def __init__(self, table, name: str = "G", cap: int = DEFAULT_CONSTRUCTION_CAP):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise NotLatinSquare(f"table must be square and nonempty, got shape {arr.shape}")
        n = int(arr.shape[0])
        if n > cap:
            raise GroupTooLarge(f"order {n} exceeds construction cap {cap}")
        if arr.min() < 0 or arr.max() >= n:
            bad = arr.min() if arr.min() < 0 else arr.max()
            raise NotLatinSquare(f"entry {bad} outside 0..{n - 1}")
        arr = arr.astype(np.int32)
        arr = self._validate_and_normalize(arr, n)
        arr.setflags(write=False)
        self.table = arr
        self.order = n
        self.name = name
        self._lattice_cache: dict = {}

    @staticmethod
    def _validate_and_normalize(arr: np.ndarray, n: int) -> np.ndarray:
        ref = np.arange(n, dtype=np.int32)

        row_ok = (np.sort(arr, axis=1) == ref).all(axis=1)
        if not row_ok.all():
            r = int(np.argmin(row_ok))
            raise NotLatinSquare(f"row {r} is not a permutation of 0..{n - 1}")
        col_ok = (np.sort(arr, axis=0) == ref[:, None]).all(axis=0)
        if not col_ok.all():
            c = int(np.argmin(col_ok))
            raise NotLatinSquare(f"column {c} is not a permutation of 0..{n - 1}")

        row_id = (arr == ref[None, :]).all(axis=1)
        col_id = (arr == ref[:, None]).all(axis=0)
        both = row_id & col_id
        if not both.any():
            raise NoIdentity("no element acts as a two-sided identity")
        e = int(np.argmax(both))
        if e != 0:
            # relabel by swapping 0 and e
            m = ref.copy()
            m[0], m[e] = e, 0
            arr = m[arr[np.ix_(m, m)]]

        # two-sided inverses: the right inverse of each row must also work
        # on the left
        right_inv = np.argmax(arr == 0, axis=1).astype(np.int32)
        left_ok = arr[right_inv, ref] == 0
        if not left_ok.all():
            a = int(np.argmin(left_ok))
            raise NoInverse(
                f"element {a}: right inverse {int(right_inv[a])} is not a left inverse"
            )

        # associativity via a generating set (middle-element test)
        rows = arr.tolist()
        gens: list[int] = []
        mask = 1
        elems: tuple[int, ...] = (0,)
        gtuple: tuple[int, ...] = ()
        for x in range(1, n):
            if mask >> x & 1:
                continue
            mask, new = extend_closure(rows, mask, elems, gtuple, x)
            elems = elems + new
            gtuple = gtuple + (x,)
            gens.append(x)
        for g in gens:
            lhs = arr[arr[:, g]]
            rhs = arr[:, arr[g]]
            if not (lhs == rhs).all():
                a, c = map(int, np.argwhere(lhs != rhs)[0])
                raise NotAssociative(f"({a}*{g})*{c} != {a}*({g}*{c})")
        return arr

    def revalidate(self) -> bool:
        """Re-run all construction checks on the stored table."""
        self._validate_and_normalize(self.table.astype(np.int32), self.order)
        return True

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    @cached_property
    def _rows(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        inv = np.argmax(self.table == 0, axis=1)
        return tuple(int(v) for v in inv)

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv_of(self, a: int) -> int:
        return self.inverses[a]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        rows = self._rows
        out = []
        for a in range(self.order):
            k = 1
            x = a
            while x != 0:
                x = rows[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def element_order(self, x: int) -> int:
        return self.element_orders[x]

    @cached_property
    def delta(self) -> int:
        """Number of prime-order subgroups."""
        counts: dict[int, int] = {}
        for k in self.element_orders:
            if is_prime(k):
                counts[k] = counts.get(k, 0) + 1
        total = 0
        for p, cnt in counts.items():
            # each subgroup of order p contributes exactly p-1 elements
            assert cnt % (p - 1) == 0, (p, cnt)
            total += cnt // (p - 1)
        return total

    @cached_property
    def involution_count(self) -> int:
        return sum(1 for k in self.element_orders if k == 2)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def is_cyclic(self) -> bool:
        return max(self.element_orders) == self.order

    @cached_property
    def center_mask(self) -> int:
        central = (self.table == self.table.T).all(axis=1)
        mask = 0
        for i in np.flatnonzero(central):
            mask |= 1 << int(i)
        return mask

    def center(self) -> "Subgroup":
        return Subgroup(self, self.center_mask, check=False)

    @cached_property
    def derived_mask(self) -> int:
        if self.is_abelian:
            return 1
        t = self.table
        inv = np.array(self.inverses, dtype=np.int32)
        left = t[np.ix_(inv, inv)]          # a^-1 * b^-1
        comm = t[left, t]                   # (a^-1 b^-1)(a b)
        seed = [int(v) for v in np.unique(comm)]
        return self.closure_mask(seed)

    def derived_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.derived_mask, check=False)

    def closure_mask(self, seed: Iterable[int]) -> int:
        """Bitmask of the smallest subgroup containing the seed elements."""
        rows = self._rows
        mask = 1
        elems: tuple[int, ...] = (0,)
        gens: tuple[int, ...] = ()
        for x in seed:
            if not 0 <= x < self.order:
                raise GroupError(f"element {x} outside 0..{self.order - 1}")
            if mask >> x & 1:
                continue
            mask, new = extend_closure(rows, mask, elems, gens, x)
            elems = elems + new
            gens = gens + (x,)
        return mask

    def closure(self, seed: Iterable[int]) -> "Subgroup":
        return Subgroup(self, self.closure_mask(seed), check=False)

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        mask = 0
        for x in members:
            mask |= 1 << x
        return Subgroup(self, mask)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, 1, check=False)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, (1 << self.order) - 1, check=False)

    def _derived_of(self, elems: Sequence[int]) -> list[int]:
        """Elements of the derived subgroup of the subgroup with the given
        element list."""
        e = np.array(elems, dtype=np.int32)
        inv = np.array(self.inverses, dtype=np.int32)
        ie = inv[e]
        left = self.table[np.ix_(ie, ie)]
        right = self.table[np.ix_(e, e)]
        comm = self.table[left, right]
        seed = [int(v) for v in np.unique(comm)]
        mask = self.closure_mask(seed)
        return _mask_elements(mask)

    @cached_property
    def is_solvable(self) -> bool:
        if self.is_abelian:
            return True
        elems: list[int] = list(range(self.order))
        while True:
            nxt = self._derived_of(elems)
            if len(nxt) == 1:
                return True
            if len(nxt) == len(elems):
                return False
            elems = nxt


def _mask_elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _popcount(mask: int) -> int:
    return mask.bit_count()


class Subgroup:
    """A subgroup of a parent group, stored as a membership bitmask.

    Bit i of the mask is set iff element i belongs to the subgroup. The
    constructor checks the identity bit, product closure, inverse closure,
    and Lagrange divisibility unless check=False (internal call sites that
    already guarantee a subgroup).
    """

    __slots__ = ("parent", "mask", "__dict__")

    def __init__(self, parent: FiniteGroup, mask: int, check: bool = True):
        self.parent = parent
        self.mask = mask
        if check:
            self._check()

    def _check(self) -> None:
        mask = self.mask
        n = self.parent.order
        if not mask & 1:
            raise NotSubgroup("identity (element 0) missing from member set")
        if mask >> n:
            raise NotSubgroup(f"member bit beyond element range 0..{n - 1}")
        elems = _mask_elements(mask)
        t = self.parent.table
        e = np.array(elems, dtype=np.int32)
        member = np.zeros(n, dtype=bool)
        member[e] = True
        prods = t[np.ix_(e, e)]
        if not member[prods].all():
            i, j = map(int, np.argwhere(~member[prods])[0])
            a, b = elems[i], elems[j]
            raise NotSubgroup(f"not closed: {a}*{b} = {int(t[a, b])} is outside the set")
        inv = self.parent.inverses
        for a in elems:
            if not mask >> inv[a] & 1:
                raise NotSubgroup(f"inverse of {a} is outside the set")
        if n % len(elems) != 0:
            raise NotSubgroup(f"size {len(elems)} does not divide group order {n}")

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(_mask_elements(self.mask))

    @cached_property
    def order(self) -> int:
        return _popcount(self.mask)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    @cached_property
    def is_normal(self) -> bool:
        g = self.parent
        if g.is_abelian or self.order == g.order or self.order == 1:
            return True
        if self.index == 2:
            return True
        e = np.array(self.elements, dtype=np.int32)
        inv = np.array(g.inverses, dtype=np.int32)
        prods = g.table[:, e]                    # g*h for all g, h in H
        conj = g.table[prods, inv[:, None]]      # (g*h)*g^-1
        member = np.zeros(g.order, dtype=bool)
        member[e] = True
        return bool(member[conj].all())

    @cached_property
    def is_abelian(self) -> bool:
        e = np.array(self.elements, dtype=np.int32)
        sub = self.parent.table[np.ix_(e, e)]
        return bool((sub == sub.T).all())

    @cached_property
    def is_elementary_abelian_2(self) -> bool:
        """True iff every member squares to the identity.

        Exponent <= 2 forces commutativity, so no separate abelian check is
        needed; the trivial subgroup counts as elementary abelian 2.
        """
        rows = self.parent._rows
        return all(rows[a][a] == 0 for a in self.elements)


# ---------------------------------------------------------------------------
# module-level operations


def from_cayley_table(table, name: str = "G", cap: int = DEFAULT_CONSTRUCTION_CAP) -> FiniteGroup:
    """Build and validate a group from a full multiplication table."""
    return FiniteGroup(table, name=name, cap=cap)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p o q)(i) = p(q(i))
    return tuple(p[j] for j in q)


def from_permutation_generators(
    degree: int,
    generators: Iterable[Sequence[int]],
    name: str = "G",
    cap: int = DEFAULT_CONSTRUCTION_CAP,
) -> FiniteGroup:
    """Build the group generated by permutations of {0..degree-1}.

    Element 0 is the identity permutation; the remaining elements appear in
    breadth-first discovery order. Raises GroupTooLarge when the closure
    exceeds the cap.
    """
    if degree < 1:
        raise GroupError(f"degree must be >= 1, got {degree}")
    gens = []
    for g in generators:
        t = tuple(int(v) for v in g)
        if sorted(t) != list(range(degree)):
            raise GroupError(f"{t} is not a permutation of 0..{degree - 1}")
        gens.append(t)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in index:
                    if len(elems) >= cap:
                        raise GroupTooLarge(
                            f"permutation closure exceeds cap {cap}"
                        )
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i, p in enumerate(elems):
        row = table[i]
        for j, q in enumerate(elems):
            row[j] = index[_compose(p, q)]
    return FiniteGroup(table, name=name, cap=cap)


def closure(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    return g.closure(seed)


def element_order(g: FiniteGroup, x: int) -> int:
    return g.element_order(x)


def delta(g: FiniteGroup) -> int:
    return g.delta


def involution_count(g: FiniteGroup) -> int:
    return g.involution_count


def center(g: FiniteGroup) -> Subgroup:
    return g.center()


def derived_subgroup(g: FiniteGroup) -> Subgroup:
    return g.derived_subgroup()


def exponent(g: FiniteGroup) -> int:
    return g.exponent


def is_abelian(g: FiniteGroup) -> bool:
    return g.is_abelian


def is_solvable(g: FiniteGroup) -> bool:
    return g.is_solvable


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    if h.parent is not g:
        raise GroupError("subgroup belongs to a different group")
    return h.is_normal


def coset_indices(g: FiniteGroup, h: Subgroup) -> tuple[list[int], list[int]]:
    """Right-coset labels for a normal subgroup.

    Returns (labels, reps): labels[x] is the coset index of element x, reps
    the minimal representative of each coset. The identity coset gets
    index 0.
    """
    rows = g._rows
    helems = h.elements
    labels = [-1] * g.order
    reps = []
    for a in range(g.order):
        if labels[a] != -1:
            continue
        c = len(reps)
        reps.append(a)
        for x in helems:
            labels[rows[x][a]] = c
    return labels, reps


def quotient_group(g: FiniteGroup, h: Subgroup, name: Optional[str] = None) -> FiniteGroup:
    """Coset multiplication table of G/H; requires H normal."""
    if not h.is_normal:
        raise NotNormal(f"subgroup of order {h.order} is not normal in {g.name}")
    labels, reps = coset_indices(g, h)
    rows = g._rows
    m = len(reps)
    table = [[labels[rows[a][b]] for b in reps] for a in reps]
    if name is None:
        name = f"{g.name}/{h.order}"
    return FiniteGroup(table, name=name)


def quotient_is_elementary_abelian_2(g: FiniteGroup, h: Subgroup) -> bool:
    """True iff g^2 in H for all g and [g1, g2] in H for all g1, g2.

    No quotient table is built; the commutator condition is equivalent to
    containing the derived subgroup.
    """
    if not h.is_normal:
        raise NotNormal(f"subgroup of order {h.order} is not normal in {g.name}")
    rows = g._rows
    mask = h.mask
    if any(not mask >> rows[a][a] & 1 for a in range(g.order)):
        return False
    return g.derived_mask & ~mask == 0


def sylow_p_elements_form_subgroup(g: FiniteGroup, p: int) -> Optional[Subgroup]:
    """The set of all elements of p-power order, if it is a subgroup.

    When that set is product-closed it is the unique (hence normal) Sylow
    p-subgroup; otherwise returns None.
    """
    elems = []
    for x, k in enumerate(g.element_orders):
        while k % p == 0:
            k //= p
        if k == 1:
            elems.append(x)
    e = np.array(elems, dtype=np.int32)
    member = np.zeros(g.order, dtype=bool)
    member[e] = True
    if not member[g.table[np.ix_(e, e)]].all():
        return None
    mask = 0
    for x in elems:
        mask |= 1 << x
    return Subgroup(g, mask, check=False)


# ---------------------------------------------------------------------------
# group file format

_FILE_KEYS = ("name", "order", "table")


def dumps_group(g: FiniteGroup) -> str:
    """Canonical text form: fixed key order, compact separators, one
    trailing newline."""
    payload = {"name": g.name, "order": g.order, "table": g._rows}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def loads_group(text: str) -> FiniteGroup:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupError(f"malformed group file: {exc}") from exc
    if not isinstance(obj, dict):
        raise GroupError("group file must hold a single object")
    for key in _FILE_KEYS:
        if key not in obj:
            raise GroupError(f"group file missing field {key!r}")
    name, order, table = obj["name"], obj["order"], obj["table"]
    if not isinstance(table, list) or len(table) != order:
        raise GroupError(f"order field {order} does not match table size {len(table) if isinstance(table, list) else '?'}")
    return from_cayley_table(table, name=str(name))


def write_group(g: FiniteGroup, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_group(g))


def read_group(path) -> FiniteGroup:
    with open(path, "r", encoding="ascii") as fh:
        return loads_group(fh.read())
