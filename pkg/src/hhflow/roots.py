"""Exact root-system combinatorics for ten equal-rank noncompact simple groups.

Root vectors are stored with exact integer coordinates: every coordinate is
twice the Euclidean one, so the half-integer roots of the E and F families
become integers and no floating point ever touches a root.  G2 is the one
exception: its Euclidean realization involves sqrt(3), so its roots are kept
as integer pairs (a, b) on the simple-root basis; sums and negations, which
are all the verification needs, are basis independent.

The module builds the classical and exceptional root systems from their
defining coordinate descriptions, realizes the compact/noncompact splitting
for each of the ten groups, and checks by exhaustive search that every
compact root is a sum of two noncompact ones (the bracket-generation
witness) and that the splitting is consistent with root addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

EUCLIDEAN_DOUBLED = "euclidean-doubled"
G2_SIMPLE_BASIS = "g2-simple-basis"

MAX_CLASSICAL_RANK = 12

CLASSICAL_LABELS = ("A", "B", "C", "D")
EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}

#: Verification order for the ten groups (classical cases first, then the
#: exceptional forms in the order their case analyses are usually listed).
GROUP_ORDER = (
    "so_even",
    "so_odd",
    "sp",
    "e6_2",
    "e7_7",
    "e7_m5",
    "e8_8",
    "e8_m24",
    "f4_4",
    "f4_m20",
    "g2_2",
)

TSV_HEADER = "group\ttotal\tcompact\tnoncompact\tprop2\tconsistency"


@dataclass(frozen=True)
class RootVector:
    """A single root, coords doubled (or (a, b) on the G2 simple basis)."""

    coords: tuple[int, ...]
    basis: str = EUCLIDEAN_DOUBLED

    def __post_init__(self):
        if all(c == 0 for c in self.coords):
            raise ValueError("a root cannot be the zero vector")

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-c for c in self.coords), self.basis)

    def __add__(self, other: "RootVector") -> "RootVector":
        if self.basis != other.basis or len(self.coords) != len(other.coords):
            raise ValueError("cannot add roots from different realizations")
        return RootVector(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis
        )


def _sum_coords(a: RootVector, b: RootVector) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a.coords, b.coords))


@dataclass(frozen=True)
class RootSystem:
    """A finite root system, roots kept in canonical lexicographic order."""

    label: str
    rank: int
    ambient_dim: int
    roots: tuple[RootVector, ...]

    @cached_property
    def coord_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coords for r in self.roots)

    def __contains__(self, vec) -> bool:
        coords = vec.coords if isinstance(vec, RootVector) else tuple(vec)
        return coords in self.coord_set

    def __len__(self) -> int:
        return len(self.roots)


CLASSICAL_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
}

EXCEPTIONAL_COUNTS = {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}


def classical_count(label: str, rank: int) -> int:
    """The classical cardinality formula for a root system."""
    if label in CLASSICAL_COUNTS:
        return CLASSICAL_COUNTS[label](rank)
    return EXCEPTIONAL_COUNTS[label]


# ---------------------------------------------------------------------------
# Coordinate blocks (all doubled).  `lo:hi` selects the index range a block
# lives on so the same code paints sub-systems inside a bigger ambient space.
# ---------------------------------------------------------------------------


def _pairs_block(dim: int, lo: int, hi: int) -> set[tuple[int, ...]]:
    """All +-e_i +- e_j with lo <= i < j < hi."""
    out = set()
    for i in range(lo, hi):
        for j in range(i + 1, hi):
            for si, sj in product((2, -2), repeat=2):
                v = [0] * dim
                v[i], v[j] = si, sj
                out.add(tuple(v))
    return out


def _short_block(dim: int, lo: int, hi: int) -> set[tuple[int, ...]]:
    """All +-e_i with lo <= i < hi."""
    out = set()
    for i in range(lo, hi):
        for s in (2, -2):
            v = [0] * dim
            v[i] = s
            out.add(tuple(v))
    return out


def _long_block(dim: int, lo: int, hi: int) -> set[tuple[int, ...]]:
    """All +-2e_i with lo <= i < hi."""
    out = set()
    for i in range(lo, hi):
        for s in (4, -4):
            v = [0] * dim
            v[i] = s
            out.add(tuple(v))
    return out


def _a_block(dim: int, indices: Iterable[int]) -> set[tuple[int, ...]]:
    """All e_i - e_j with i != j drawn from `indices`."""
    idx = tuple(indices)
    out = set()
    for i in idx:
        for j in idx:
            if i == j:
                continue
            v = [0] * dim
            v[i], v[j] = 2, -2
            out.add(tuple(v))
    return out


def _e8_half_roots() -> set[tuple[int, ...]]:
    """Half-sum roots of E8: all (+-1)^8 with an even number of minus signs."""
    out = set()
    for signs in product((1, -1), repeat=8):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            out.add(signs)
    return out


def _e7_half_roots() -> set[tuple[int, ...]]:
    """Half-sum roots of E7: all (+-1)^8 with exactly four plus signs."""
    out = set()
    for pos in combinations(range(8), 4):
        v = [-1] * 8
        for p in pos:
            v[p] = 1
        out.add(tuple(v))
    return out


def _e6_half_roots() -> set[tuple[int, ...]]:
    """Half-sum roots of E6: three plus signs among the first six slots,
    opposite signs in slots 7 and 8."""
    out = set()
    for pos in combinations(range(6), 3):
        for tail in ((1, -1), (-1, 1)):
            v = [-1] * 6
            for p in pos:
                v[p] = 1
            out.add(tuple(v) + tail)
    return out


def _f4_half_roots() -> set[tuple[int, ...]]:
    return {signs for signs in product((1, -1), repeat=4)}


_G2_POSITIVE = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))


def _generate(label: str, rank: int) -> tuple[set[tuple[int, ...]], int, str]:
    """Return (coordinate set, ambient dimension, basis tag) for a label."""
    if label == "A":
        dim = rank + 1
        return _a_block(dim, range(dim)), dim, EUCLIDEAN_DOUBLED
    if label == "B":
        return _short_block(rank, 0, rank) | _pairs_block(rank, 0, rank), rank, EUCLIDEAN_DOUBLED
    if label == "C":
        return _long_block(rank, 0, rank) | _pairs_block(rank, 0, rank), rank, EUCLIDEAN_DOUBLED
    if label == "D":
        return _pairs_block(rank, 0, rank), rank, EUCLIDEAN_DOUBLED
    if label == "E6":
        roots = _a_block(8, range(6)) | {(0,) * 6 + (2, -2), (0,) * 6 + (-2, 2)}
        return roots | _e6_half_roots(), 8, EUCLIDEAN_DOUBLED
    if label == "E7":
        return _a_block(8, range(8)) | _e7_half_roots(), 8, EUCLIDEAN_DOUBLED
    if label == "E8":
        return _pairs_block(8, 0, 8) | _e8_half_roots(), 8, EUCLIDEAN_DOUBLED
    if label == "F4":
        roots = _short_block(4, 0, 4) | _pairs_block(4, 0, 4) | _f4_half_roots()
        return roots, 4, EUCLIDEAN_DOUBLED
    if label == "G2":
        pos = set(_G2_POSITIVE)
        return pos | {(-a, -b) for a, b in pos}, 2, G2_SIMPLE_BASIS
    raise ValueError(f"unknown root system label {label!r}")


def build_root_system(label: str, rank: int) -> RootSystem:
    """Build a root system from its defining coordinate description.

    Classical families accept ranks 1..12; exceptional labels only their
    fixed rank.  Roots come out sorted lexicographically on coordinates,
    so generation is deterministic.
    """
    if label in CLASSICAL_LABELS:
        if not 1 <= rank <= MAX_CLASSICAL_RANK:
            raise ValueError(
                f"{label}({rank}): classical rank must satisfy 1 <= rank <= {MAX_CLASSICAL_RANK}"
            )
    elif label in EXCEPTIONAL_RANKS:
        if rank != EXCEPTIONAL_RANKS[label]:
            raise ValueError(f"{label} has fixed rank {EXCEPTIONAL_RANKS[label]}, got {rank}")
    else:
        raise ValueError(f"unknown root system label {label!r}")

    coords, dim, basis = _generate(label, rank)
    roots = tuple(RootVector(c, basis) for c in sorted(coords))
    system = RootSystem(label=label, rank=rank, ambient_dim=dim, roots=roots)
    expected = classical_count(label, rank)
    if len(system) != expected:
        raise AssertionError(
            f"{label}({rank}) generated {len(system)} roots, expected {expected}"
        )
    return system


# ---------------------------------------------------------------------------
# The ten groups and their compact/noncompact splittings
# ---------------------------------------------------------------------------

GROUPS_WITH_PARAMS = ("so_even", "so_odd", "sp")


@dataclass(frozen=True)
class HodgeGroupSpec:
    """One of the ten equal-rank noncompact groups, with parameters where
    the family has them (so_even = SO(2p,2q), so_odd = SO(2p+1,2q), sp =
    Sp(p,q))."""

    group: str
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        if self.group not in GROUP_ORDER:
            raise ValueError(f"unknown group {self.group!r}; choose from {GROUP_ORDER}")
        if self.group in GROUPS_WITH_PARAMS:
            if self.p is None or self.q is None:
                raise ValueError(f"{self.group} requires parameters p and q")
            if self.p + self.q > MAX_CLASSICAL_RANK:
                raise ValueError(
                    f"{self.group}: p + q must not exceed {MAX_CLASSICAL_RANK}"
                )
            if self.group in ("so_even", "so_odd"):
                if self.q < 2:
                    raise ValueError(f"{self.group} requires q >= 2")
                if self.p < 1:
                    raise ValueError(f"{self.group} requires p >= 1")
            else:
                if self.p < 1 or self.q < 1:
                    raise ValueError("sp requires p >= 1 and q >= 1")
        elif self.p is not None or self.q is not None:
            raise ValueError(f"{self.group} takes no p, q parameters")

    @property
    def display_name(self) -> str:
        if self.group == "so_even":
            return f"SO({2 * self.p},{2 * self.q})"
        if self.group == "so_odd":
            return f"SO({2 * self.p + 1},{2 * self.q})"
        if self.group == "sp":
            return f"Sp({self.p},{self.q})"
        return {
            "e6_2": "e6(2)",
            "e7_7": "e7(7)",
            "e7_m5": "e7(-5)",
            "e8_8": "e8(8)",
            "e8_m24": "e8(-24)",
            "f4_4": "f4(4)",
            "f4_m20": "f4(-20)",
            "g2_2": "g2(2)",
        }[self.group]

    def parameter_note(self) -> Optional[str]:
        # p = 1 in the even orthogonal case sits outside the usual p, q >= 2
        # case analysis; it is accepted but worth flagging.
        if self.group == "so_even" and self.p == 1:
            return "so_even with p=1 is outside the standard p, q >= 2 analysis"
        return None


@dataclass(frozen=True)
class CompactSplit:
    """Partition of a root system into compact and noncompact roots."""

    system: RootSystem
    compact: tuple[RootVector, ...]
    noncompact: tuple[RootVector, ...]

    def __post_init__(self):
        comp = {r.coords for r in self.compact}
        nonc = {r.coords for r in self.noncompact}
        if comp & nonc:
            raise ValueError("compact and noncompact sets overlap")
        if comp | nonc != self.system.coord_set:
            raise ValueError("compact + noncompact do not partition the root system")

    @cached_property
    def compact_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coords for r in self.compact)

    @cached_property
    def noncompact_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coords for r in self.noncompact)


def _compact_coords(spec: HodgeGroupSpec, system: RootSystem) -> set[tuple[int, ...]]:
    """The compact subsystem, written out literally from its block unions."""
    g, p, q = spec.group, spec.p, spec.q
    if g == "so_even":
        n = p + q
        return _pairs_block(n, 0, p) | _pairs_block(n, p, n)
    if g == "so_odd":
        n = p + q
        return _short_block(n, 0, p) | _pairs_block(n, 0, p) | _pairs_block(n, p, n)
    if g == "sp":
        n = p + q
        return (
            _long_block(n, 0, p)
            | _pairs_block(n, 0, p)
            | _long_block(n, p, n)
            | _pairs_block(n, p, n)
        )
    if g == "e6_2":
        # A5 + A1
        return _a_block(8, range(6)) | {(0,) * 6 + (2, -2), (0,) * 6 + (-2, 2)}
    if g == "e7_7":
        # A7
        return _a_block(8, range(8))
    if g == "e7_m5":
        # D6 + A1: the D6 copy is the union of the A5-type block with the
        # half-sum roots whose last two signs agree (62 = 60 + 2 in total).
        half_equal_tail = {
            r for r in system.coord_set if abs(r[0]) == 1 and r[6] == r[7]
        }
        return (
            _a_block(8, range(6))
            | {(0,) * 6 + (2, -2), (0,) * 6 + (-2, 2)}
            | half_equal_tail
        )
    if g == "e8_8":
        # D8
        return _pairs_block(8, 0, 8)
    if g == "e8_m24":
        # E7 + A1: the A-type block, the half-sum roots with four minus
        # signs, and the pair +-(e1+...+e8)/2 (zero or eight minus signs).
        half = {
            r
            for r in system.coord_set
            if abs(r[0]) == 1 and sum(1 for x in r if x < 0) in (0, 4, 8)
        }
        return _a_block(8, range(8)) | half
    if g == "f4_4":
        # C3 + A1 on f1 = (e1-e2)/2, f2 = (e1+e2)/2, f3 = (e3-e4)/2,
        # written back in e-coordinates, plus +-(e3+e4).
        c3 = {
            (2, -2, 0, 0), (-2, 2, 0, 0),          # +-2f1
            (2, 2, 0, 0), (-2, -2, 0, 0),          # +-2f2
            (0, 0, 2, -2), (0, 0, -2, 2),          # +-2f3
            (2, 0, 0, 0), (-2, 0, 0, 0),           # +-(f1+f2)
            (0, 2, 0, 0), (0, -2, 0, 0),           # +-(f2-f1)
            (1, -1, 1, -1), (-1, 1, -1, 1),        # +-(f1+f3)
            (1, -1, -1, 1), (-1, 1, 1, -1),        # +-(f1-f3)
            (1, 1, 1, -1), (-1, -1, -1, 1),        # +-(f2+f3)
            (1, 1, -1, 1), (-1, -1, 1, -1),        # +-(f2-f3)
        }
        return c3 | {(0, 0, 2, 2), (0, 0, -2, -2)}
    if g == "f4_m20":
        # B4
        return _short_block(4, 0, 4) | _pairs_block(4, 0, 4)
    if g == "g2_2":
        # A1 + A1 = {+-beta} u {+-(2 alpha + beta)}
        return {(0, 1), (0, -1), (2, 1), (-2, -1)}
    raise AssertionError(g)


def split_roots(spec: HodgeGroupSpec) -> CompactSplit:
    """Split the group's root system into compact and noncompact roots."""
    g = spec.group
    if g == "so_even":
        system = build_root_system("D", spec.p + spec.q)
    elif g == "so_odd":
        system = build_root_system("B", spec.p + spec.q)
    elif g == "sp":
        system = build_root_system("C", spec.p + spec.q)
    else:
        label = {"e6_2": "E6", "e7_7": "E7", "e7_m5": "E7", "e8_8": "E8",
                 "e8_m24": "E8", "f4_4": "F4", "f4_m20": "F4", "g2_2": "G2"}[g]
        system = build_root_system(label, EXCEPTIONAL_RANKS[label])

    compact_coords = _compact_coords(spec, system)
    missing = compact_coords - system.coord_set
    if missing:
        raise AssertionError(f"{g}: compact description escapes the root system: {missing}")
    basis = system.roots[0].basis
    compact = tuple(RootVector(c, basis) for c in sorted(compact_coords))
    noncompact = tuple(
        RootVector(c, basis) for c in sorted(system.coord_set - compact_coords)
    )
    return CompactSplit(system=system, compact=compact, noncompact=noncompact)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Prop2Witness:
    alpha: RootVector
    beta: RootVector
    gamma: RootVector


@dataclass(frozen=True)
class Prop2Report:
    """Witness map for: every compact root is a sum of two noncompact roots."""

    witnesses: tuple[Prop2Witness, ...]
    counterexamples: tuple[RootVector, ...]

    @property
    def success(self) -> bool:
        return not self.counterexamples


def verify_prop2(split: CompactSplit) -> Prop2Report:
    """Search each compact root for a noncompact pair summing to it.

    The witness is the lexicographically least pair (beta, gamma), which
    keeps golden outputs stable.
    """
    nonc = split.noncompact_set
    basis = split.system.roots[0].basis if split.system.roots else EUCLIDEAN_DOUBLED
    witnesses = []
    bad = []
    for alpha in split.compact:
        found = None
        for beta in split.noncompact:
            gamma = tuple(a - b for a, b in zip(alpha.coords, beta.coords))
            if gamma in nonc:
                found = Prop2Witness(alpha, beta, RootVector(gamma, basis))
                break
        if found is None:
            bad.append(alpha)
        else:
            witnesses.append(found)
    return Prop2Report(witnesses=tuple(witnesses), counterexamples=tuple(bad))


def verify_bracket_consistency(split: CompactSplit) -> bool:
    """Exhaustively check sum consistency across the partition.

    Whenever the sum of two roots is again a root the classes must compose
    as compact+compact -> compact, compact+noncompact -> noncompact,
    noncompact+noncompact -> compact.
    """
    comp = split.compact_set
    allroots = split.system.coord_set
    roots = [r.coords for r in split.system.roots]
    for r1 in roots:
        c1 = r1 in comp
        for r2 in roots:
            s = tuple(a + b for a, b in zip(r1, r2))
            if s in allroots:
                if (s in comp) != (c1 == (r2 in comp)):
                    return False
    return True


@dataclass(frozen=True)
class CountRow:
    group: str
    total: int
    n_compact: int
    n_noncompact: int
    prop2_ok: bool
    consistency_ok: bool

    def as_tsv(self) -> str:
        return "\t".join(
            [
                self.group,
                str(self.total),
                str(self.n_compact),
                str(self.n_noncompact),
                "true" if self.prop2_ok else "false",
                "true" if self.consistency_ok else "false",
            ]
        )


def count_report(spec: HodgeGroupSpec) -> CountRow:
    """Run the full verification for one group and summarize it as a row."""
    split = split_roots(spec)
    report = verify_prop2(split)
    return CountRow(
        group=spec.display_name,
        total=len(split.system),
        n_compact=len(split.compact),
        n_noncompact=len(split.noncompact),
        prop2_ok=report.success,
        consistency_ok=verify_bracket_consistency(split),
    )


def default_specs(p: int = 2, q: int = 2) -> tuple[HodgeGroupSpec, ...]:
    """The ten groups in listing order, classical cases at the given p, q."""
    out = []
    for g in GROUP_ORDER:
        if g in GROUPS_WITH_PARAMS:
            out.append(HodgeGroupSpec(g, p, q))
        else:
            out.append(HodgeGroupSpec(g))
    return tuple(out)


def count_table(specs: Sequence[HodgeGroupSpec]) -> str:
    """TSV verification table, header plus one row per group."""
    lines = [TSV_HEADER]
    lines.extend(count_report(s).as_tsv() for s in specs)
    return "\n".join(lines) + "\n"


def witness_document(specs: Sequence[HodgeGroupSpec]) -> list[dict]:
    """JSON-ready witness listing for each group, in canonical order."""
    doc = []
    for spec in specs:
        split = split_roots(spec)
        report = verify_prop2(split)
        doc.append(
            {
                "group": spec.display_name,
                "basis": split.system.roots[0].basis,
                "witnesses": [
                    {
                        "alpha": list(w.alpha.coords),
                        "beta": list(w.beta.coords),
                        "gamma": list(w.gamma.coords),
                    }
                    for w in report.witnesses
                ],
                "counterexamples": [list(r.coords) for r in report.counterexamples],
            }
        )
    return doc
