"""The invariant suite for Q(G, psi).

The central object is P: the orbit of the identity under the inner group,
which always equals the subgroup generated by {x psi(x)^-1}.  Both
computations run on every call and must agree; a mismatch is an internal
bug, not a warning.  On top of P sit P^2, Fix, the twisted normalizer,
the two isomorphism-criterion preconditions, and the inner-group structure,
all bundled into a hashable InvariantProfile used for pruning and as table
rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .catalog import build, groups_of_order
from .errors import VerificationError
from .groups import (FiniteGroup, GroupMap, Subgroup, automorphism_group,
                     center, generated_subgroup, groups_isomorphic, is_normal)
from .quandle import PermGroup, general_alexander, inner_group, orbit_of

PROFILE_VERSION = "profile.v1"


def translation_elements(g: FiniteGroup, psi: GroupMap) -> list[int]:
    """The set {s_x(e)} = {x psi(x)^-1 : x in G}, with duplicates removed."""
    im = psi.images
    return sorted({g.table[x][g._inv[im[x]]] for x in range(g.order)})


def compute_P(g: FiniteGroup, psi: GroupMap) -> Subgroup:
    """Orbit of e under the inner group; cross-checked against <{x psi(x)^-1}>."""
    psi.require_automorphism()
    orbit = orbit_of(general_alexander(g, psi), 0)
    span = generated_subgroup(g, translation_elements(g, psi))
    if orbit != span.member_set():
        raise VerificationError(
            f"P mismatch on {g.name}: orbit {sorted(orbit)} vs "
            f"generated subgroup {list(span.members)}")
    return span


def restrict_to_P(g: FiniteGroup, psi: GroupMap) -> tuple[FiniteGroup, GroupMap, tuple[int, ...]]:
    """The subquandle data (P as a group, psi|_P, embedding into G)."""
    p = compute_P(g, psi)
    restricted, grp, embed = psi.restrict(p)
    return grp, restricted, embed


def compute_P2(g: FiniteGroup, psi: GroupMap) -> Subgroup:
    """P applied to Q(P, psi|_P), returned as a subgroup of G."""
    grp, restricted, embed = restrict_to_P(g, psi)
    inner_p2 = compute_P(grp, restricted)
    return Subgroup(g, tuple(embed[i] for i in inner_p2.members))


def twisted_normalizer(g: FiniteGroup, psi: GroupMap, h: Subgroup) -> Subgroup:
    """{x : x H psi(x)^-1 = H}; always a subgroup."""
    psi.require_automorphism()
    hs = h.member_set()
    members = []
    for x in range(g.order):
        px = g._inv[psi.images[x]]
        if all(g.table[g.table[x][y]][px] in hs for y in h.members):
            members.append(x)
    return Subgroup(g, tuple(members))


def check_p1(g: FiniteGroup, psi: GroupMap) -> bool:
    """P^2 is normal in G."""
    return is_normal(g, compute_P2(g, psi))


def check_p2(g: FiniteGroup, psi: GroupMap) -> bool:
    """P^2 equals the translation set {s_p(e) : p in P} (not just contains it)."""
    p = compute_P(g, psi)
    p2 = compute_P2(g, psi)
    im = psi.images
    translations = {g.table[x][g._inv[im[x]]] for x in p.members}
    return translations == p2.member_set()


@dataclass
class InnStructureReport:
    perm_group: PermGroup
    inn_size: int
    p_size: int
    psi_order: int
    product_holds: bool
    semidirect_witness: GroupMap | None
    centerless_p: bool
    psi_p_inner: bool
    direct_witness: GroupMap | None


def semidirect_product_table(p_group: FiniteGroup, act: GroupMap, m: int) -> FiniteGroup:
    """P x| C_m with (x, i)(y, j) = (x act^i(y), i + j); index((x, i)) = i|P| + x."""
    powers = [tuple(range(p_group.order))]
    for _ in range(m - 1):
        powers.append(tuple(act.images[v] for v in powers[-1]))
    size = p_group.order * m
    table = [[0] * size for _ in range(size)]
    for i in range(m):
        pw = powers[i]
        for x in range(p_group.order):
            u = i * p_group.order + x
            for j in range(m):
                for y in range(p_group.order):
                    table[u][j * p_group.order + y] = \
                        ((i + j) % m) * p_group.order + p_group.table[x][pw[y]]
    return FiniteGroup(table, name=f"{p_group.name}:C{m}", check=False)


def psi_restricted_is_inner(grp: FiniteGroup, restricted: GroupMap) -> bool:
    return any(all(grp.conj(a, x) == restricted.images[x] for x in range(grp.order))
               for a in range(grp.order))


def inn_structure(g: FiniteGroup, psi: GroupMap, verify_iso: bool = True) -> InnStructureReport:
    """Inn(Q(G,psi)) with the size law |Inn| = |P| * ord(psi) and, when P is
    centerless, the direct-vs-semidirect dichotomy driven by whether psi|_P
    is inner."""
    psi.require_automorphism()
    q = general_alexander(g, psi)
    inn = inner_group(q)
    grp, restricted, _ = restrict_to_P(g, psi)
    m = psi.map_order()
    product_holds = inn.order == grp.order * m

    semidirect_witness = None
    direct_witness = None
    if verify_iso:
        inn_as_group, _ = inn.as_group(name="Inn")
        sd = semidirect_product_table(grp, restricted, m)
        semidirect_witness = groups_isomorphic(inn_as_group, sd)

    centerless = center(grp).order == 1
    inner_flag = psi_restricted_is_inner(grp, restricted)
    if verify_iso and centerless:
        from .catalog import cyclic, product
        if grp.order == 1:
            direct = build(cyclic(m)) if m > 1 else build(cyclic(1))
        elif m == 1:
            direct = grp
        else:
            direct = _direct_with_cyclic(grp, m)
        inn_as_group, _ = inn.as_group(name="Inn")
        direct_witness = groups_isomorphic(inn_as_group, direct)

    return InnStructureReport(
        perm_group=inn, inn_size=inn.order, p_size=grp.order, psi_order=m,
        product_holds=product_holds, semidirect_witness=semidirect_witness,
        centerless_p=centerless, psi_p_inner=inner_flag,
        direct_witness=direct_witness)


def _direct_with_cyclic(grp: FiniteGroup, m: int) -> FiniteGroup:
    size = grp.order * m
    table = [[0] * size for _ in range(size)]
    for i in range(m):
        for x in range(grp.order):
            u = i * grp.order + x
            for j in range(m):
                for y in range(grp.order):
                    table[u][j * grp.order + y] = \
                        ((i + j) % m) * grp.order + grp.table[x][y]
    return FiniteGroup(table, name=f"{grp.name}xC{m}", check=False)


# ---------------------------------------------------------------------------
# canonical descriptors
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _catalog_groups(order: int):
    if order > 16:
        return ()
    return tuple((spec.name(), build(spec)) for spec in groups_of_order(order))


def group_descriptor(grp: FiniteGroup) -> tuple:
    """(order, element-order multiset, abelian flag, catalog name or None)."""
    name = None
    for cand_name, cand in _catalog_groups(grp.order):
        if groups_isomorphic(grp, cand) is not None:
            name = cand_name
            break
    return (grp.order, grp.element_order_multiset(), grp.is_abelian, name)


def descriptor_display(desc: tuple) -> str:
    order, _orders, abelian, name = desc
    if name is not None:
        return "1" if name == "C1" else name
    return f"?ord{order}{'ab' if abelian else ''}"


@lru_cache(maxsize=None)
def _catalog_aut_images(name: str) -> tuple[tuple[int, ...], ...]:
    from .catalog import build_named
    return tuple(a.images for a in automorphism_group(build_named(name), bound=128))


def transported_class(grp: FiniteGroup, auto: GroupMap) -> tuple:
    """Conjugacy class id of ``auto`` in Aut(grp), stated on the catalog copy.

    The map is transported along any isomorphism grp -> catalog copy; the
    resulting Aut-conjugacy class does not depend on the choice.  For groups
    outside the catalog the id degrades to (order of the map, fixed count).
    """
    desc = group_descriptor(grp)
    name = desc[3]
    if name is None:
        fixed = sum(1 for x in range(grp.order) if auto.images[x] == x)
        return ("fallback", auto.map_order(), fixed)
    from .catalog import build_named
    k = build_named(name)
    h0 = groups_isomorphic(grp, k)
    assert h0 is not None
    transported = h0.compose(auto).compose(h0.inverse())
    perms = _catalog_aut_images(name)
    t = transported.images
    best = min(_conj_images(tau, t) for tau in perms)
    return ("class", name, best)


def _conj_images(tau: tuple[int, ...], psi: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(tau)
    for i, v in enumerate(tau):
        inv[v] = i
    return tuple(tau[psi[inv[i]]] for i in range(len(tau)))


# ---------------------------------------------------------------------------
# the bundled profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantProfile:
    group_order: int
    psi_order: int
    fix_size: int
    p_iso_type: tuple
    p2_iso_type: tuple
    psi_restricted_class: tuple
    p_fix_size: int
    tn_size: int
    p1: bool
    p2: bool
    inn_size: int

    FIELDS = ("group_order", "psi_order", "fix_size", "p_iso_type",
              "p2_iso_type", "psi_restricted_class", "p_fix_size",
              "tn_size", "p1", "p2", "inn_size")

    def separator_against(self, other: InvariantProfile) -> str | None:
        for field in self.FIELDS:
            if getattr(self, field) != getattr(other, field):
                return field
        return None

    def to_json_dict(self) -> dict:
        return {
            "version": PROFILE_VERSION,
            "group_order": self.group_order,
            "psi_order": self.psi_order,
            "fix_size": self.fix_size,
            "p_iso_type": _desc_json(self.p_iso_type),
            "p2_iso_type": _desc_json(self.p2_iso_type),
            "psi_restricted_class": list(map(_plain, self.psi_restricted_class)),
            "p_fix_size": self.p_fix_size,
            "tn_size": self.tn_size,
            "p1": self.p1,
            "p2": self.p2,
            "inn_size": self.inn_size,
        }


def _plain(v):
    return list(v) if isinstance(v, tuple) else v


def _desc_json(desc: tuple) -> dict:
    order, orders, abelian, name = desc
    return {"order": order, "element_orders": list(orders),
            "abelian": abelian, "name": name}


def profile(g: FiniteGroup, psi: GroupMap, verify_inn_iso: bool = False) -> InvariantProfile:
    """Assemble the full invariant profile of Q(G, psi)."""
    psi.require_automorphism()
    grp, restricted, embed = restrict_to_P(g, psi)
    p_sub = Subgroup(g, embed)
    p2_sub = compute_P2(g, psi)
    p2_grp, _ = p2_sub.as_group()
    fix = [x for x in range(g.order) if psi.images[x] == x]
    p_members = set(embed)
    tn = twisted_normalizer(g, psi, p2_sub)
    rep = inn_structure(g, psi, verify_iso=verify_inn_iso)
    if not rep.product_holds:
        raise VerificationError(
            f"|Inn| = {rep.inn_size} differs from |P| * ord(psi) = "
            f"{rep.p_size * rep.psi_order} on {g.name}")
    im = psi.images
    translations_p = {g.table[x][g._inv[im[x]]] for x in p_sub.members}
    return InvariantProfile(
        group_order=g.order,
        psi_order=rep.psi_order,
        fix_size=len(fix),
        p_iso_type=group_descriptor(grp),
        p2_iso_type=group_descriptor(p2_grp),
        psi_restricted_class=transported_class(grp, restricted),
        p_fix_size=len(p_members.intersection(fix)),
        tn_size=tn.order,
        p1=is_normal(g, p2_sub),
        p2=translations_p == p2_sub.member_set(),
        inn_size=rep.inn_size,
    )


def profile_to_json(p: InvariantProfile) -> str:
    return json.dumps(p.to_json_dict(), sort_keys=True)
