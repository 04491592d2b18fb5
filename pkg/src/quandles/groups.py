"""Finite groups as immutable Cayley tables over element indices 0..n-1.

Index 0 is always the identity.  Everything downstream (subgroups,
automorphisms, conjugacy classes, brute-force group isomorphism) works on
plain integer tables, which is adequate for the orders this package targets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .errors import CapacityError, ContractViolation, StructuralError

DEFAULT_AUT_BOUND = 60


class FiniteGroup:
    """A finite group given by its multiplication table (table[a][b] = a*b)."""

    __slots__ = ("name", "order", "table", "spec", "_inv", "_elt_orders",
                 "_abelian", "_center", "_gens")

    def __init__(self, table, name: str = "G", spec=None, check: bool = True):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        self.name = name
        self.spec = spec
        self._center = None
        self._gens = None
        if check:
            self._validate()
        self._inv = self._compute_inverses()
        self._elt_orders = None
        self._abelian = None

    def _validate(self) -> None:
        n = self.order
        if n == 0:
            raise StructuralError("empty table")
        full = frozenset(range(n))
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise StructuralError(f"row {i} has length {len(row)}, expected {n}")
            if frozenset(row) != full:
                raise StructuralError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if frozenset(self.table[i][j] for i in range(n)) != full:
                raise StructuralError(f"column {j} is not a permutation of 0..{n - 1}")
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise StructuralError("index 0 is not a two-sided identity")
        t = self.table
        for i in range(n):
            ti = t[i]
            for j in range(n):
                tij = t[ti[j]]
                tj = t[j]
                for k in range(n):
                    if tij[k] != ti[tj[k]]:
                        raise StructuralError(
                            f"associativity fails at ({i},{j},{k})")

    def _compute_inverses(self):
        inv = [-1] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise StructuralError(f"element {a} has no inverse")
        return tuple(inv)

    def _check_index(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise StructuralError(f"element index {a} out of range for {self.name}")

    def mul(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return self.table[a][b]

    def inv(self, a: int) -> int:
        self._check_index(a)
        return self._inv[a]

    def conj(self, a: int, x: int) -> int:
        """a * x * a^-1."""
        return self.table[self.table[a][x]][self._inv[a]]

    def element_order(self, a: int) -> int:
        self._check_index(a)
        if self._elt_orders is None:
            orders = []
            for x in range(self.order):
                k, y = 1, x
                while y != 0:
                    y = self.table[y][x]
                    k += 1
                orders.append(k)
            self._elt_orders = tuple(orders)
        return self._elt_orders[a]

    def element_order_multiset(self) -> tuple[int, ...]:
        self.element_order(0)
        return tuple(sorted(self._elt_orders))

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            t = self.table
            self._abelian = all(t[a][b] == t[b][a]
                                for a in range(self.order)
                                for b in range(a + 1, self.order))
        return self._abelian

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        g = self.parent
        ms = set(self.members)
        if 0 not in ms:
            raise StructuralError("subgroup must contain the identity")
        for a in self.members:
            if not 0 <= a < g.order:
                raise StructuralError(f"member {a} out of range")
            if g._inv[a] not in ms:
                raise StructuralError(f"subgroup not closed under inverse at {a}")
            for b in self.members:
                if g.table[a][b] not in ms:
                    raise StructuralError(
                        f"subgroup not closed under product at ({a},{b})")

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in set(self.members)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def as_group(self, name: str | None = None) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Reindex onto 0..k-1; returns (group, embedding new-index -> parent-index)."""
        pos = {m: i for i, m in enumerate(self.members)}
        table = [[pos[self.parent.table[a][b]] for b in self.members]
                 for a in self.members]
        label = name or f"{self.parent.name}|sub{len(self.members)}"
        return FiniteGroup(table, name=label, check=False), self.members

    def coset_of(self, x: int) -> tuple[int, ...]:
        """Left coset x*H, sorted."""
        g = self.parent
        return tuple(sorted(g.table[x][h] for h in self.members))


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism between element index sets, stored as an image array."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    check: bool = True

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        if len(self.images) != self.source.order:
            raise StructuralError("image array length mismatch")
        if self.check:
            if self.images[0] != 0:
                raise StructuralError("homomorphism must send identity to identity")
            s, t = self.source.table, self.target.table
            im = self.images
            for a in range(self.source.order):
                for b in range(self.source.order):
                    if im[s[a][b]] != t[im[a]][im[b]]:
                        raise StructuralError(
                            f"not a homomorphism at ({a},{b})")

    def __call__(self, a: int) -> int:
        return self.images[a]

    @property
    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order

    def require_automorphism(self) -> None:
        if self.source is not self.target and self.source.table != self.target.table:
            raise ContractViolation("map is not an endomorphism")
        if not self.is_bijective:
            raise ContractViolation("map is not bijective")

    def inverse(self) -> GroupMap:
        if not self.is_bijective:
            raise ContractViolation("cannot invert a non-bijective map")
        inv = [-1] * self.target.order
        for a, b in enumerate(self.images):
            inv[b] = a
        return GroupMap(self.target, self.source, tuple(inv), check=False)

    def compose(self, other: GroupMap) -> GroupMap:
        """self after other (function composition self . other)."""
        if other.target.order != self.source.order:
            raise ContractViolation("composition shape mismatch")
        return GroupMap(other.source, self.target,
                        tuple(self.images[v] for v in other.images), check=False)

    def conjugate_by(self, tau: GroupMap) -> GroupMap:
        """tau . self . tau^-1 (all maps on the same group)."""
        return tau.compose(self).compose(tau.inverse())

    def map_order(self) -> int:
        """Order of the map under composition (finite since bijective)."""
        self.require_automorphism()
        k, cur = 1, self.images
        ident = tuple(range(self.source.order))
        while cur != ident:
            cur = tuple(self.images[v] for v in cur)
            k += 1
        return k

    def restrict(self, sub: Subgroup) -> tuple[GroupMap, FiniteGroup, tuple[int, ...]]:
        """Restriction to an invariant subgroup, as a map on the reindexed group."""
        ms = sub.member_set()
        for a in sub.members:
            if self.images[a] not in ms:
                raise ContractViolation("subgroup is not invariant under the map")
        grp, embed = sub.as_group()
        pos = {m: i for i, m in enumerate(embed)}
        images = tuple(pos[self.images[m]] for m in embed)
        return GroupMap(grp, grp, images, check=False), grp, embed


def identity_map(g: FiniteGroup) -> GroupMap:
    return GroupMap(g, g, tuple(range(g.order)), check=False)


def inner_automorphism(g: FiniteGroup, a: int) -> GroupMap:
    """Conjugation x -> a x a^-1."""
    g._check_index(a)
    return GroupMap(g, g, tuple(g.conj(a, x) for x in range(g.order)), check=False)


def multiply(g: FiniteGroup, a: int, b: int) -> int:
    return g.mul(a, b)


def inverse(g: FiniteGroup, a: int) -> int:
    return g.inv(a)


def element_order(g: FiniteGroup, a: int) -> int:
    return g.element_order(a)


def generated_subgroup(g: FiniteGroup, gens) -> Subgroup:
    """Smallest subgroup containing ``gens``: closure under product (and hence inverse)."""
    for a in gens:
        g._check_index(a)
    members = {0}
    frontier = [0]
    for a in set(gens):
        if a not in members:
            members.add(a)
            frontier.append(a)
    while frontier:
        x = frontier.pop()
        for y in tuple(members):
            for z in (g.table[x][y], g.table[y][x]):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return Subgroup(g, tuple(members))


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    if h.parent is not g:
        raise ContractViolation("subgroup belongs to a different group")
    ms = h.member_set()
    return all(g.conj(a, x) in ms for a in range(g.order) for x in h.members)


def center(g: FiniteGroup) -> Subgroup:
    if g._center is None:
        t = g.table
        members = tuple(z for z in range(g.order)
                        if all(t[x][z] == t[z][x] for x in range(g.order)))
        g._center = Subgroup(g, members)
    return g._center


def is_simple(g: FiniteGroup) -> bool:
    """No proper nontrivial normal subgroup (normal closure scan)."""
    if g.order == 1:
        return False
    for x in range(1, g.order):
        closure = {0, x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for a in range(g.order):
                c = g.conj(a, y)
                if c not in closure:
                    closure.add(c)
                    frontier.append(c)
            for z in tuple(closure):
                for w in (g.table[y][z], g.table[z][y]):
                    if w not in closure:
                        closure.add(w)
                        frontier.append(w)
        if len(closure) < g.order:
            return False
    return True


def generating_set(g: FiniteGroup) -> tuple[int, ...]:
    """Greedy generating set: repeatedly add the smallest index outside the closure."""
    if g._gens is not None:
        return g._gens
    gens: list[int] = []
    closure = {0}
    while len(closure) < g.order:
        nxt = min(x for x in range(g.order) if x not in closure)
        gens.append(nxt)
        closure = set(generated_subgroup(g, gens).members)
    g._gens = tuple(gens)
    return g._gens


def _extend_partial_hom(src: FiniteGroup, dst: FiniteGroup, mapping: dict[int, int],
                        used: set[int], x: int, y: int) -> list[int] | None:
    """Grow a partial injective homomorphism with x -> y.

    ``mapping`` must already be closed (its domain a subgroup, products
    consistent).  Returns the list of newly mapped elements, or None on
    conflict, in which case mapping/used are left unchanged.
    """
    added: list[int] = []
    stack = [(x, y)]
    ok = True
    while stack:
        a, b = stack.pop()
        cur = mapping.get(a)
        if cur is not None:
            if cur != b:
                ok = False
                break
            continue
        if b in used:
            ok = False
            break
        mapping[a] = b
        used.add(b)
        added.append(a)
        st, dt = src.table, dst.table
        for c, d in list(mapping.items()):
            stack.append((st[a][c], dt[b][d]))
            stack.append((st[c][a], dt[d][b]))
    if not ok:
        for a in added:
            used.discard(mapping.pop(a))
        return None
    return added


def _iso_images(src: FiniteGroup, dst: FiniteGroup, first_only: bool):
    """Yield image arrays of isomorphisms src -> dst by generator backtracking."""
    if src.order != dst.order:
        return
    gens = generating_set(src)
    dst_orders = [dst.element_order(y) for y in range(dst.order)]
    gen_orders = [src.element_order(x) for x in gens]

    mapping = {0: 0}
    used = {0}
    found = [False]

    def rec(i: int):
        if i == len(gens):
            images = tuple(mapping[a] for a in range(src.order))
            found[0] = True
            yield images
            return
        x = gens[i]
        want = gen_orders[i]
        for y in range(dst.order):
            if dst_orders[y] != want or y in used:
                continue
            added = _extend_partial_hom(src, dst, mapping, used, x, y)
            if added is None:
                continue
            yield from rec(i + 1)
            for a in added:
                used.discard(mapping.pop(a))
            if first_only and found[0]:
                return

    yield from rec(0)


def groups_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> GroupMap | None:
    """A witness isomorphism if one exists, else None."""
    if g1.order != g2.order:
        return None
    if g1.table == g2.table:
        return identity_map(g1) if g1 is g2 else GroupMap(
            g1, g2, tuple(range(g1.order)), check=False)
    if g1.is_abelian != g2.is_abelian:
        return None
    if g1.element_order_multiset() != g2.element_order_multiset():
        return None
    if center(g1).order != center(g2).order:
        return None
    for images in _iso_images(g1, g2, first_only=True):
        return GroupMap(g1, g2, images, check=False)
    return None


def all_group_isomorphisms(g1: FiniteGroup, g2: FiniteGroup):
    """All isomorphisms g1 -> g2 (possibly none), in deterministic order."""
    if g1.order != g2.order or g1.element_order_multiset() != g2.element_order_multiset():
        return
    for images in _iso_images(g1, g2, first_only=False):
        yield GroupMap(g1, g2, images, check=False)


def automorphism_group(g: FiniteGroup, bound: int = DEFAULT_AUT_BOUND) -> list[GroupMap]:
    """Every automorphism exactly once, sorted by image array."""
    if g.order > bound:
        raise CapacityError(
            f"automorphism enumeration capped at order {bound}, got {g.order}")
    images = sorted(_iso_images(g, g, first_only=False))
    return [GroupMap(g, g, im, check=False) for im in images]


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """p after q."""
    return tuple(p[v] for v in q)


def _perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _generators_of_perm_list(perms: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """A small generating subset of a group given as a full permutation list."""
    n = len(perms[0]) if perms else 0
    ident = tuple(range(n))
    have = {ident}
    gens: list[tuple[int, ...]] = []
    for p in perms:
        if p in have:
            continue
        gens.append(p)
        frontier = list(have)
        have.add(p)
        frontier.append(p)
        while frontier:
            q = frontier.pop()
            for r in gens:
                for s in (_perm_compose(q, r), _perm_compose(r, q)):
                    if s not in have:
                        have.add(s)
                        frontier.append(s)
        if len(have) == len(perms):
            break
    return gens


def automorphism_conjugacy_classes(
        g: FiniteGroup, bound: int = DEFAULT_AUT_BOUND
) -> list[tuple[GroupMap, int]]:
    """Conjugacy classes of Aut(g): (lexicographically minimal representative, size)."""
    auts = automorphism_group(g, bound=bound)
    perms = [a.images for a in auts]
    gens = _generators_of_perm_list(perms)
    gen_invs = [_perm_inverse(p) for p in gens]
    seen: set[tuple[int, ...]] = set()
    classes: list[tuple[tuple[int, ...], int]] = []
    for p in perms:
        if p in seen:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            q = frontier.pop()
            for t, tinv in zip(gens, gen_invs):
                r = _perm_compose(_perm_compose(t, q), tinv)
                if r not in orbit:
                    orbit.add(r)
                    frontier.append(r)
        seen |= orbit
        classes.append((min(orbit), len(orbit)))
    classes.sort()
    return [(GroupMap(g, g, rep, check=False), size) for rep, size in classes]


def fixed_subgroup(psi: GroupMap) -> Subgroup:
    psi.require_automorphism()
    g = psi.source
    return Subgroup(g, tuple(x for x in range(g.order) if psi.images[x] == x))


def group_to_json(g: FiniteGroup) -> str:
    return json.dumps({"name": g.name, "order": g.order,
                       "table": [list(row) for row in g.table]},
                      sort_keys=True)


def group_from_json(text: str) -> FiniteGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from exc
    for key in ("name", "order", "table"):
        if key not in data:
            raise StructuralError(f"missing field {key!r}")
    g = FiniteGroup(data["table"], name=str(data["name"]))
    if g.order != int(data["order"]):
        raise StructuralError("declared order does not match table size")
    return g


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def units_mod(n: int) -> list[int]:
    if n == 1:
        return [0]
    return [a for a in range(n) if gcd(a, n) == 1]
