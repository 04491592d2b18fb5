"""Quandles as point-symmetry tables and the generalized Alexander construction.

A quandle is stored as the full table of its point symmetries:
``sym[x][y] = s_x(y)``.  The binary-operation view is ``x * y = s_y(x)``.
Generalized Alexander quandles Q(G, psi) carry their (group, automorphism)
provenance so the invariant machinery can reach the underlying group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import CapacityError, ContractViolation, StructuralError
from .groups import FiniteGroup, GroupMap

INNER_CLOSURE_BOUND = 10 ** 6


@dataclass(frozen=True)
class Quandle:
    size: int
    sym: tuple[tuple[int, ...], ...]
    provenance: tuple[FiniteGroup, GroupMap] | None = None

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.sym)
        object.__setattr__(self, "sym", rows)
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise StructuralError("sym table shape mismatch")

    def s(self, x: int, y: int) -> int:
        return self.sym[x][y]

    def op(self, x: int, y: int) -> int:
        """The binary-operation view x * y = s_y(x)."""
        return self.sym[y][x]

    def is_general_alexander(self) -> bool:
        return self.provenance is not None

    def __repr__(self) -> str:
        tag = ""
        if self.provenance is not None:
            g, psi = self.provenance
            tag = f", Q({g.name},psi)"
        return f"Quandle(size={self.size}{tag})"


def check_axioms(q: Quandle) -> list[tuple]:
    """All violations of (Q1') idempotence, (Q2') row bijectivity and
    (Q3') s_x . s_y = s_{s_x(y)} . s_x; empty list iff q is a quandle."""
    n, sym = q.size, q.sym
    bad: list[tuple] = []
    full = frozenset(range(n))
    for x in range(n):
        if sym[x][x] != x:
            bad.append(("Q1", x))
    for x in range(n):
        if frozenset(sym[x]) != full:
            bad.append(("Q2", x))
    if bad:
        return bad
    for x in range(n):
        sx = sym[x]
        for y in range(n):
            sxy = sym[sx[y]]
            sy = sym[y]
            for z in range(n):
                if sx[sy[z]] != sxy[sx[z]]:
                    bad.append(("Q3", x, y, z))
                    break
            else:
                continue
            break
    return bad


def make_quandle(sym, provenance=None) -> Quandle:
    q = Quandle(len(sym), tuple(tuple(r) for r in sym), provenance)
    violations = check_axioms(q)
    if violations:
        raise StructuralError(f"not a quandle: {violations[:3]}")
    return q


def general_alexander(g: FiniteGroup, psi: GroupMap) -> Quandle:
    """Q(G, psi) with s_x(y) = x psi(x^-1 y)."""
    psi.require_automorphism()
    if psi.source.table != g.table:
        raise ContractViolation("automorphism does not belong to this group")
    t, inv, im = g.table, g._inv, psi.images
    sym = tuple(tuple(t[x][im[t[inv[x]][y]]] for y in range(g.order))
                for x in range(g.order))
    return make_quandle(sym, provenance=(g, psi))


def trivial_quandle(n: int) -> Quandle:
    return make_quandle(tuple(tuple(range(n)) for _ in range(n)))


class PermGroup:
    """A permutation group given by generators, with its closure materialized."""

    def __init__(self, degree: int, generators, bound: int = INNER_CLOSURE_BOUND):
        self.degree = degree
        self.generators = tuple(tuple(p) for p in generators)
        for p in self.generators:
            if sorted(p) != list(range(degree)):
                raise StructuralError("generator is not a permutation")
        self.elements = self._close(bound)

    def _close(self, bound: int) -> frozenset[tuple[int, ...]]:
        ident = tuple(range(self.degree))
        have = {ident}
        frontier = [ident]
        while frontier:
            p = frontier.pop()
            for gen in self.generators:
                q = tuple(gen[v] for v in p)
                if q not in have:
                    if len(have) >= bound:
                        raise CapacityError(f"closure exceeded bound {bound}")
                    have.add(q)
                    frontier.append(q)
        return frozenset(have)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self.elements

    def sorted_elements(self) -> list[tuple[int, ...]]:
        return sorted(self.elements)

    def as_group(self, name: str = "perm") -> tuple[FiniteGroup, list[tuple[int, ...]]]:
        """Cayley table of the closure under composition (p, q) -> p . q."""
        elems = self.sorted_elements()
        ident = tuple(range(self.degree))
        order = [ident] + [p for p in elems if p != ident]
        pos = {p: i for i, p in enumerate(order)}
        table = [[pos[tuple(p[v] for v in q)] for q in order] for p in order]
        return FiniteGroup(table, name=name, check=False), order


def inner_group(q: Quandle, bound: int = INNER_CLOSURE_BOUND) -> PermGroup:
    """Closure of the point symmetries {s_x} under composition."""
    return PermGroup(q.size, sorted(set(q.sym)), bound=bound)


def quandle_order(q: Quandle) -> int:
    """ord(s_x), constant over x for homogeneous quandles."""
    orders = set()
    ident = tuple(range(q.size))
    for row in q.sym:
        k, cur = 1, row
        while cur != ident:
            cur = tuple(row[v] for v in cur)
            k += 1
        orders.add(k)
    if len(orders) != 1:
        raise ContractViolation(
            f"point symmetries have non-constant orders {sorted(orders)}; "
            "the quandle is not homogeneous")
    return orders.pop()


def orbit_of(q: Quandle, start: int) -> frozenset[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        y = frontier.pop()
        for row in q.sym:
            z = row[y]
            if z not in seen:
                seen.add(z)
                frontier.append(z)
    return frozenset(seen)


def is_connected(q: Quandle) -> bool:
    """True iff the inner group acts transitively (orbits partition Q)."""
    return len(orbit_of(q, 0)) == q.size


def subquandle(q: Quandle, members) -> tuple[Quandle, tuple[int, ...]]:
    """Re-indexed quandle on a symmetry-closed subset; returns (quandle, embedding)."""
    mem = tuple(sorted(set(members)))
    ms = set(mem)
    for x in mem:
        for y in mem:
            if q.sym[x][y] not in ms:
                raise ContractViolation(
                    f"subset not closed: s_{x}({y}) = {q.sym[x][y]} escapes")
    pos = {m: i for i, m in enumerate(mem)}
    sym = tuple(tuple(pos[q.sym[x][y]] for y in mem) for x in mem)
    return make_quandle(sym), mem


def quandle_to_json(q: Quandle) -> str:
    prov = None
    if q.provenance is not None:
        g, psi = q.provenance
        prov = {"group": g.name, "automorphism": list(psi.images)}
    return json.dumps({"size": q.size, "sym": [list(r) for r in q.sym],
                       "provenance": prov}, sort_keys=True)


def quandle_from_json(text: str) -> Quandle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from exc
    for key in ("size", "sym"):
        if key not in data:
            raise StructuralError(f"missing field {key!r}")
    provenance = None
    prov = data.get("provenance")
    if prov is not None:
        from .catalog import build_named
        try:
            g = build_named(str(prov["group"]))
            psi = GroupMap(g, g, tuple(prov["automorphism"]), check=True)
            if not psi.is_bijective:
                raise StructuralError("provenance map is not bijective")
            provenance = (g, psi)
        except KeyError:
            provenance = None
    q = make_quandle(data["sym"], provenance=provenance)
    if q.size != int(data["size"]):
        raise StructuralError("declared size does not match table")
    if provenance is not None:
        g, psi = provenance
        if general_alexander(g, psi).sym != q.sym:
            raise StructuralError("provenance does not reproduce the table")
    return q
