"""Classification of all generalized Alexander quandles of a given order.

Pipeline: enumerate one automorphism per Aut-conjugacy class for every group
of the order (conjugate automorphisms give isomorphic quandles), bucket the
(group, class) pairs by their invariant profiles, run the full decider
cascade inside each bucket, and merge with union-find.  Bucketing is sound
because every profile field is a quandle isomorphism invariant.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .catalog import build, groups_of_order
from .errors import CapacityError
from .groups import FiniteGroup, GroupMap, automorphism_conjugacy_classes
from .invariants import InvariantProfile, descriptor_display
from .iso import (DEFAULT_BRUTE_BOUND, ISOMORPHIC, NOT_ISOMORPHIC, UNDECIDED,
                  METHOD_SEPARATION, IsoVerdict, cached_profile, decide,
                  verify_quandle_witness)
from .labels import labels_for_pair
from .quandle import general_alexander

ENGINE_VERSION = "1.0.0"
CACHE_ENV_VAR = "QF_CACHE_DIR"


@dataclass(frozen=True)
class PairEntry:
    """One (group, automorphism-class representative) construction."""

    group_index: int
    group_name: str
    class_index: int
    images: tuple[int, ...]
    ref_labels: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        return f"{self.group_name}#{self.class_index}"


@dataclass
class ClassificationReport:
    order: int
    engine_version: str
    beyond_paper: bool
    group_names: list[str]
    pairs: list[PairEntry]
    profiles: list[InvariantProfile]
    classes: list[list[int]]
    verdict_log: list[dict]
    notes: list[str] = field(default_factory=list)
    complete: bool = True

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_profiles(self) -> list[InvariantProfile]:
        return [self.profiles[cls[0]] for cls in self.classes]

    def class_of_pair(self, pair_index: int) -> int:
        for ci, cls in enumerate(self.classes):
            if pair_index in cls:
                return ci
        raise KeyError(pair_index)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "engine_version": self.engine_version,
            "beyond_paper": self.beyond_paper,
            "group_names": list(self.group_names),
            "pairs": [{"group_index": p.group_index, "group_name": p.group_name,
                       "class_index": p.class_index, "images": list(p.images),
                       "ref_labels": list(p.ref_labels)} for p in self.pairs],
            "profiles": [p.to_json_dict() for p in self.profiles],
            "classes": [list(c) for c in self.classes],
            "verdict_log": self.verdict_log,
            "notes": list(self.notes),
            "class_count": self.class_count,
            "complete": self.complete,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _pair_objects(order: int, beyond_paper: bool):
    if order == 16 and not beyond_paper:
        raise CapacityError(
            "order 16 is outside the classified range; pass beyond_paper=True")
    if order > 16:
        raise CapacityError("classification is capped at order 16")
    specs = groups_of_order(order)
    groups = [build(s) for s in specs]
    pairs: list[PairEntry] = []
    maps: list[tuple[FiniteGroup, GroupMap]] = []
    for gi, g in enumerate(groups):
        for ci, (rep, _size) in enumerate(automorphism_conjugacy_classes(g, bound=128)):
            refs = tuple(sorted(labels_for_pair(order, g.name, rep.images)))
            pairs.append(PairEntry(gi, g.name, ci, rep.images, refs))
            maps.append((g, rep))
    return groups, pairs, maps


def _sort_key(profile: InvariantProfile, pair: PairEntry):
    return (profile.psi_order, profile.fix_size, profile.p_iso_type,
            pair.group_index, pair.images)


def classify_order(order: int, beyond_paper: bool = False,
                   cache_dir: str | None = None,
                   brute_bound: int = DEFAULT_BRUTE_BOUND) -> ClassificationReport:
    """Classify every Q(G, psi) with |G| = order up to quandle isomorphism."""
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV_VAR) or None
    if cache_dir:
        cached = _load_cache(order, beyond_paper, cache_dir)
        if cached is not None:
            return cached
    groups, pairs, maps = _pair_objects(order, beyond_paper)
    report = _classify_pairs(order, beyond_paper, [g.name for g in groups],
                             pairs, maps, brute_bound=brute_bound)
    if order == 16 and beyond_paper:
        report.notes.append(
            "order 16 output is beyond the classified range; see the "
            "boundary report for the undecidable-by-invariants pair")
    if cache_dir:
        _store_cache(report, cache_dir)
    return report


def classify_group(g: FiniteGroup,
                   brute_bound: int = DEFAULT_BRUTE_BOUND) -> ClassificationReport:
    """Classification restricted to a single group's automorphism classes."""
    pairs: list[PairEntry] = []
    maps: list[tuple[FiniteGroup, GroupMap]] = []
    order = g.order
    for ci, (rep, _size) in enumerate(automorphism_conjugacy_classes(g, bound=128)):
        refs = tuple(sorted(labels_for_pair(order, g.name, rep.images)))
        pairs.append(PairEntry(0, g.name, ci, rep.images, refs))
        maps.append((g, rep))
    return _classify_pairs(order, order > 15, [g.name], pairs, maps,
                           brute_bound=brute_bound)


def _classify_pairs(order: int, beyond_paper: bool, group_names: list[str],
                    pairs: list[PairEntry],
                    maps: list[tuple[FiniteGroup, GroupMap]],
                    brute_bound: int = DEFAULT_BRUTE_BOUND) -> ClassificationReport:
    profiles = [cached_profile(g, psi) for g, psi in maps]
    uf = _UnionFind(len(pairs))
    verdict_log: list[dict] = []
    undecided = 0

    buckets: dict[InvariantProfile, list[int]] = {}
    for i, prof in enumerate(profiles):
        buckets.setdefault(prof, []).append(i)

    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            sep = profiles[i].separator_against(profiles[j])
            if sep is not None:
                verdict_log.append({
                    "left": i, "right": j,
                    "verdict": IsoVerdict(NOT_ISOMORPHIC, METHOD_SEPARATION,
                                          separator=sep).to_json_dict()})

    for bucket in buckets.values():
        for ai in range(len(bucket)):
            for bi in range(ai + 1, len(bucket)):
                i, j = bucket[ai], bucket[bi]
                g1, psi1 = maps[i]
                g2, psi2 = maps[j]
                verdict = decide(g1, psi1, g2, psi2, brute_bound=brute_bound)
                verdict_log.append({"left": i, "right": j,
                                    "verdict": verdict.to_json_dict()})
                if verdict.result == ISOMORPHIC:
                    uf.union(i, j)
                elif verdict.result == UNDECIDED:
                    undecided += 1

    roots: dict[int, list[int]] = {}
    for i in range(len(pairs)):
        roots.setdefault(uf.find(i), []).append(i)
    classes = sorted(roots.values(),
                     key=lambda cls: _sort_key(profiles[cls[0]], pairs[cls[0]]))
    for cls in classes:
        cls.sort()
    notes = []
    if undecided:
        notes.append(f"incomplete: {undecided} pair(s) above capacity remain "
                     "undecided; the partition treats them as distinct")
    return ClassificationReport(
        order=order, engine_version=ENGINE_VERSION, beyond_paper=beyond_paper,
        group_names=group_names, pairs=pairs, profiles=profiles,
        classes=classes, verdict_log=verdict_log, notes=notes,
        complete=undecided == 0)


def closed_form_counts(n: int) -> int | None:
    """|classes| by the closed forms: p - 1 for prime p, p for twice an odd
    prime, 2p^2 - 2p - 1 for p squared; None for other shapes."""
    def is_prime(k: int) -> bool:
        return k >= 2 and all(k % d for d in range(2, int(k ** 0.5) + 1))

    if is_prime(n):
        return n - 1
    for p in range(2, n):
        if p * p == n and is_prime(p):
            return 2 * p * p - 2 * p - 1
    if n % 2 == 0 and is_prime(n // 2) and n // 2 > 2:
        return n // 2
    return None


# ---------------------------------------------------------------------------
# table emission
# ---------------------------------------------------------------------------

def _psi_p_display(profile: InvariantProfile) -> str:
    kind = profile.psi_restricted_class[0]
    if kind == "fallback":
        return f"ord{profile.psi_restricted_class[1]}"
    name, images = profile.psi_restricted_class[1], profile.psi_restricted_class[2]
    if images == tuple(range(len(images))):
        return "id"
    if name.startswith("C") and "x" not in name and name[1:].isdigit():
        return f"x{images[1]}"
    return "(" + " ".join(map(str, images)) + ")"


def emit_table(report: ClassificationReport, fmt: str = "markdown") -> str:
    """Rows, one per quandle class: ord(psi), |Fix|, the type of P, the class
    of psi restricted to P, the precondition flags, members and reference
    labels.  Deterministic ordering."""
    rows = []
    for idx, cls in enumerate(report.classes, start=1):
        prof = report.profiles[cls[0]]
        members = [report.pairs[i].label for i in cls]
        refs = sorted({lbl for i in cls for lbl in report.pairs[i].ref_labels})
        rows.append({
            "row": idx,
            "psi_order": prof.psi_order,
            "fix_size": prof.fix_size,
            "p_type": descriptor_display(prof.p_iso_type),
            "psi_on_p": _psi_p_display(prof),
            "p1": prof.p1,
            "p2": prof.p2,
            "members": members,
            "refs": refs,
        })
    banner = (None if report.complete else
              "INCOMPLETE CLASSIFICATION: some pairs exceeded capacity and "
              "remain undecided; class boundaries are not certified")
    if fmt == "json":
        payload = {"order": report.order, "classes": rows,
                   "complete": report.complete}
        if banner:
            payload["banner"] = banner
        return json.dumps(payload, sort_keys=True, indent=2)
    if fmt == "csv":
        lines = ["row,psi_order,fix_size,p_type,psi_on_p,p1,p2,members,refs"]
        if banner:
            lines.insert(0, f"# {banner}")
        for r in rows:
            lines.append(",".join([
                str(r["row"]), str(r["psi_order"]), str(r["fix_size"]),
                r["p_type"], r["psi_on_p"], "T" if r["p1"] else "F",
                "T" if r["p2"] else "F", ";".join(r["members"]),
                ";".join(r["refs"])]))
        return "\n".join(lines) + "\n"
    if fmt in ("md", "markdown"):
        head = (f"| # | ord psi | Fix | P | psi|P | P1 | P2 | members | refs |\n"
                f"|---|---------|-----|---|-------|----|----|---------|------|")
        lines = [f"Classification of generalized Alexander quandles of order "
                 f"{report.order}: {report.class_count} classes", "", head]
        if banner:
            lines.insert(1, f"**{banner}**")
        for r in rows:
            lines.append(
                f"| {r['row']} | {r['psi_order']} | {r['fix_size']} | "
                f"{r['p_type']} | {r['psi_on_p']} | "
                f"{'T' if r['p1'] else 'F'} | {'T' if r['p2'] else 'F'} | "
                f"{', '.join(r['members'])} | {', '.join(r['refs'])} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# the order-16 boundary pair
# ---------------------------------------------------------------------------

def boundary_pair():
    """The two order-16 constructions whose comparison needs the search:
    C2 x Q8 with the order-3 map lifted from the quaternion factor, and the
    twist group SD16 with an order-3 automorphism."""
    from .catalog import build_named, named_automorphism
    g1 = build_named("C2xQ8")
    psi1 = named_automorphism(g1, "right:psi_4")
    g2 = build_named("SD16")
    reps = [rep for rep, _ in automorphism_conjugacy_classes(g2, bound=128)
            if rep.map_order() == 3]
    return g1, psi1, g2, reps


def boundary_report() -> dict:
    """Beyond-paper verdicts for the order-16 boundary pair, one per order-3
    class of the twist group, each with a verified witness when isomorphic."""
    g1, psi1, g2, reps = boundary_pair()
    out = {"left": {"group": g1.name, "automorphism": "right:psi_4"},
           "right_group": g2.name, "beyond_paper": True, "verdicts": []}
    for rep in reps:
        verdict = decide(g1, psi1, g2, rep)
        prof1 = cached_profile(g1, psi1)
        prof2 = cached_profile(g2, rep)
        out["verdicts"].append({
            "right_class_images": list(rep.images),
            "profiles_agree": prof1.separator_against(prof2) is None,
            "verdict": verdict.to_json_dict(),
        })
    return out


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def _cache_path(order: int, beyond_paper: bool, cache_dir: str) -> str:
    suffix = "-beyond" if beyond_paper else ""
    return os.path.join(cache_dir,
                        f"classification-order{order}{suffix}-v{ENGINE_VERSION}.json")


def _store_cache(report: ClassificationReport, cache_dir: str) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    with open(_cache_path(report.order, report.beyond_paper, cache_dir), "w",
              encoding="utf-8") as fh:
        fh.write(report.to_json())


def _load_cache(order: int, beyond_paper: bool,
                cache_dir: str) -> ClassificationReport | None:
    path = _cache_path(order, beyond_paper, cache_dir)
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("engine_version") != ENGINE_VERSION or data.get("order") != order:
        return None
    try:
        groups, pairs, maps = _pair_objects(order, beyond_paper)
    except CapacityError:
        return None
    stored_pairs = data.get("pairs", [])
    if len(stored_pairs) != len(pairs):
        return None
    for p, sp in zip(pairs, stored_pairs):
        if sp["group_name"] != p.group_name or tuple(sp["images"]) != p.images:
            return None
    # re-verify every isomorphism witness before trusting the partition
    quandles = [general_alexander(g, psi) for g, psi in maps]
    for entry in data.get("verdict_log", []):
        v = entry["verdict"]
        if v["result"] == ISOMORPHIC:
            witness = v.get("witness")
            if witness is None or not verify_quandle_witness(
                    quandles[entry["left"]], quandles[entry["right"]], witness):
                return None
    profiles = [cached_profile(g, psi) for g, psi in maps]
    classes = [sorted(c) for c in data.get("classes", [])]
    if sorted(i for c in classes for i in c) != list(range(len(pairs))):
        return None
    return ClassificationReport(
        order=order, engine_version=ENGINE_VERSION, beyond_paper=beyond_paper,
        group_names=[g.name for g in groups], pairs=pairs, profiles=profiles,
        classes=classes, verdict_log=data.get("verdict_log", []),
        notes=list(data.get("notes", [])),
        complete=bool(data.get("complete", True)))
