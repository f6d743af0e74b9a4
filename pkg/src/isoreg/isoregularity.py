"""Subset valencies: k-isoregularity, local edge/non-edge parameters,
the t-vertex condition, and the subconstituent characterization.

The valency of a vertex set is the number of vertices adjacent to every
member.  A graph is k-isoregular when, for every j <= k, the valency of a
j-subset depends only on the isomorphism type of its induced subgraph.
Everything here enumerates subsets exhaustively; witnesses are the first
violations in lexicographic scan order so regressions are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional, Sequence

from .graphs import Graph, vertices_to_bits
from .srg import SrgParams, distance_sets, srg_params, subconstituent


class IsoType(tuple):
    """Isomorphism type of a small induced subgraph: (size, canonical code).

    The code is the minimum packed adjacency bit-vector over all orderings
    of the subset, pairs enumerated lexicographically; equal codes mean
    isomorphic induced subgraphs for sizes up to 4.
    """

    __slots__ = ()

    def __new__(cls, size: int, code: int):
        return super().__new__(cls, (size, code))

    @property
    def size(self) -> int:
        return self[0]

    @property
    def code(self) -> int:
        return self[1]

    @property
    def name(self) -> str:
        return _TYPE_NAMES[self]


def _canonical_code(bits: list[list[bool]]) -> int:
    j = len(bits)
    pairs = list(combinations(range(j), 2))
    best = None
    for perm in permutations(range(j)):
        code = 0
        for idx, (a, b) in enumerate(pairs):
            if bits[perm[a]][perm[b]]:
                code |= 1 << idx
        if best is None or code < best:
            best = code
    return best or 0


def iso_type(g: Graph, subset: Sequence[int]) -> IsoType:
    """Canonical type of the induced subgraph, subset size 1..4."""
    j = len(subset)
    if not 1 <= j <= 4:
        raise ValueError("iso_type handles subsets of size 1..4 only")
    bits = [[g.adjacent(u, v) for v in subset] for u in subset]
    return IsoType(j, _canonical_code(bits))


# Size-3 canonical codes correspond to induced edge counts 0..3.
_CODE_BY_EDGES3 = (0, 1, 3, 7)

_SIZE4_REPS = {
    "4K1": [],
    "K2+2K1": [(0, 1)],
    "2K2": [(0, 1), (2, 3)],
    "K1,2+K1": [(0, 1), (0, 2)],
    "K1,3": [(0, 1), (0, 2), (0, 3)],
    "P4": [(0, 1), (1, 2), (2, 3)],
    "K3+K1": [(0, 1), (0, 2), (1, 2)],
    "paw": [(0, 1), (0, 2), (1, 2), (2, 3)],
    "C4": [(0, 1), (1, 2), (2, 3), (0, 3)],
    "diamond": [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)],
    "K4": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
}


def _build_type_names() -> dict[IsoType, str]:
    names = {IsoType(1, 0): "K1", IsoType(2, 0): "2K1", IsoType(2, 1): "K2"}
    for edges, tag in zip(range(4), ("3K1", "K2+K1", "K1,2", "K3")):
        names[IsoType(3, _CODE_BY_EDGES3[edges])] = tag
    for tag, edges in _SIZE4_REPS.items():
        bits = [[False] * 4 for _ in range(4)]
        for a, b in edges:
            bits[a][b] = bits[b][a] = True
        names[IsoType(4, _canonical_code(bits))] = tag
    return names


_TYPE_NAMES = _build_type_names()
TYPES_BY_SIZE: dict[int, list[IsoType]] = {}
for _t in sorted(_TYPE_NAMES):
    TYPES_BY_SIZE.setdefault(_t[0], []).append(IsoType(*_t))


def subset_valency(g: Graph, subset: Sequence[int]) -> int:
    """Number of vertices adjacent to every member of the subset."""
    if not subset:
        raise ValueError("valency of the empty set is undefined")
    mask = (1 << g.n) - 1
    for v in subset:
        mask &= g.row(v)
    mask &= ~vertices_to_bits(subset)
    return mask.bit_count()


def _triple_type_code(g: Graph, a: int, b: int, c: int) -> int:
    edges = (
        ((g.row(a) >> b) & 1) + ((g.row(a) >> c) & 1) + ((g.row(b) >> c) & 1)
    )
    return _CODE_BY_EDGES3[edges]


@dataclass(frozen=True)
class IsoWitness:
    """Two equally typed subsets with different valencies."""

    type: IsoType
    subset_a: tuple[int, ...]
    valency_a: int
    subset_b: tuple[int, ...]
    valency_b: int

    def to_json(self) -> dict:
        return {
            "type": self.type.name,
            "subset_a": list(self.subset_a),
            "valency_a": self.valency_a,
            "subset_b": list(self.subset_b),
            "valency_b": self.valency_b,
        }


@dataclass(frozen=True)
class KIsoregularity:
    holds: bool
    k: int
    witness: Optional[IsoWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def is_k_isoregular(g: Graph, k: int) -> KIsoregularity:
    """Exhaustive check over all subsets of size <= k, k in 1..4.

    On failure the witness pairs the first subset of the violating type
    (in lexicographic order) with the first subset disagreeing with it.
    """
    if k not in (1, 2, 3, 4):
        raise ValueError("k must be between 1 and 4")
    full = (1 << g.n) - 1
    for j in range(1, k + 1):
        first: dict[int, tuple[tuple[int, ...], int]] = {}
        for subset in combinations(range(g.n), j):
            if j == 3:
                code = _triple_type_code(g, *subset)
            else:
                code = iso_type(g, subset).code
            mask = full
            for v in subset:
                mask &= g.row(v)
            valency = mask.bit_count()
            seen = first.get(code)
            if seen is None:
                first[code] = (subset, valency)
            elif seen[1] != valency:
                witness = IsoWitness(IsoType(j, code), seen[0], seen[1], subset, valency)
                return KIsoregularity(False, k, witness)
    return KIsoregularity(True, k)


@dataclass(frozen=True)
class IsoProfile:
    """Type-to-valency map of a k-isoregular graph; vacuous types report 0."""

    k: int
    valencies: dict[str, int]
    vacuous: frozenset[str]

    def size3(self) -> tuple[int, int, int, int]:
        """Valencies on (K3, K1,2, K2+K1, 3K1)."""
        v = self.valencies
        return (v["K3"], v["K1,2"], v["K2+K1"], v["3K1"])

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "valencies": dict(sorted(self.valencies.items())),
            "vacuous": sorted(self.vacuous),
        }


def iso_profile(g: Graph, k: int) -> Optional[IsoProfile]:
    """The profile when g is k-isoregular; None otherwise."""
    if not is_k_isoregular(g, k).holds:
        return None
    valencies: dict[str, int] = {}
    vacuous: set[str] = set()
    for j in range(1, k + 1):
        seen: dict[int, int] = {}
        for subset in combinations(range(g.n), j):
            t = iso_type(g, subset)
            if t.code not in seen:
                seen[t.code] = subset_valency(g, subset)
        for t in TYPES_BY_SIZE[j]:
            if t.code in seen:
                valencies[t.name] = seen[t.code]
            else:
                valencies[t.name] = 0
                vacuous.add(t.name)
    return IsoProfile(k, valencies, frozenset(vacuous))


@dataclass(frozen=True)
class EdgeLocalParams:
    """Valencies (Q, R, W) of triples through a 3-isoregular edge."""

    q: int
    r: int
    w: int
    vacuous: frozenset[str] = field(default_factory=frozenset)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.q, self.r, self.w)

    def to_json(self) -> dict:
        return {"Q": self.q, "R": self.r, "W": self.w, "vacuous": sorted(self.vacuous)}


@dataclass(frozen=True)
class NonEdgeLocalParams:
    """Valencies (R', W', V) of triples through a 3-isoregular non-edge."""

    rp: int
    wp: int
    v: int
    vacuous: frozenset[str] = field(default_factory=frozenset)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.rp, self.wp, self.v)

    def to_json(self) -> dict:
        return {"Rp": self.rp, "Wp": self.wp, "V": self.v, "vacuous": sorted(self.vacuous)}


def _pair_buckets(g: Graph, x: int, y: int) -> Optional[list[Optional[int]]]:
    """Per-bucket triple valency for the pair, buckets by adjacency of z to
    {x, y}: index 2 = adjacent to both, 1 = exactly one, 0 = neither.
    None if any bucket is inconsistent; vacuous buckets stay None inside."""
    values: list[Optional[int]] = [None, None, None]
    common = g.row(x) & g.row(y)
    for z in range(g.n):
        if z == x or z == y:
            continue
        hits = ((g.row(x) >> z) & 1) + ((g.row(y) >> z) & 1)
        valency = (common & g.row(z) & ~(1 << z)).bit_count()
        if values[hits] is None:
            values[hits] = valency
        elif values[hits] != valency:
            return None
    return values


def edge_iso_params(g: Graph, x: int, y: int) -> Optional[EdgeLocalParams]:
    """(Q, R, W) if the edge (x, y) is 3-isoregular, else None."""
    if x == y or not g.adjacent(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    buckets = _pair_buckets(g, x, y)
    if buckets is None:
        return None
    vacuous = set()
    names = {2: "K3", 1: "K1,2", 0: "K2+K1"}
    out = {}
    for hits, tag in names.items():
        if buckets[hits] is None:
            vacuous.add(tag)
            out[tag] = 0
        else:
            out[tag] = buckets[hits]
    return EdgeLocalParams(out["K3"], out["K1,2"], out["K2+K1"], frozenset(vacuous))


def nonedge_iso_params(g: Graph, x: int, z: int) -> Optional[NonEdgeLocalParams]:
    """(R', W', V) if the non-edge (x, z) is 3-isoregular, else None."""
    if x == z or g.adjacent(x, z):
        raise ValueError(f"({x},{z}) is not a non-edge of distinct vertices")
    buckets = _pair_buckets(g, x, z)
    if buckets is None:
        return None
    vacuous = set()
    names = {2: "K1,2", 1: "K2+K1", 0: "3K1"}
    out = {}
    for hits, tag in names.items():
        if buckets[hits] is None:
            vacuous.add(tag)
            out[tag] = 0
        else:
            out[tag] = buckets[hits]
    return NonEdgeLocalParams(out["K1,2"], out["K2+K1"], out["3K1"], frozenset(vacuous))


@dataclass(frozen=True)
class LocalReport:
    """Witnesses for local 3-isoregularity at a vertex."""

    x: int
    edge: Optional[tuple[int, EdgeLocalParams]]
    nonedge: Optional[tuple[int, NonEdgeLocalParams]]

    @property
    def holds(self) -> bool:
        return self.edge is not None and self.nonedge is not None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "locally_3isoregular": self.holds,
            "edge": None if self.edge is None else {"y": self.edge[0], **self.edge[1].to_json()},
            "nonedge": None
            if self.nonedge is None
            else {"z": self.nonedge[0], **self.nonedge[1].to_json()},
        }


def is_locally_3isoregular_at(g: Graph, x: int) -> LocalReport:
    """Locally 3-isoregular at x: some 3-isoregular edge and non-edge at x."""
    edge = None
    for y in g.neighbors(x):
        params = edge_iso_params(g, x, y)
        if params is not None:
            edge = (y, params)
            break
    nonedge = None
    for z in range(g.n):
        if z == x or g.adjacent(x, z):
            continue
        params = nonedge_iso_params(g, x, z)
        if params is not None:
            nonedge = (z, params)
            break
    return LocalReport(x, edge, nonedge)


def is_locally_3isoregular(g: Graph) -> Optional[LocalReport]:
    """First vertex at which g is locally 3-isoregular, or None."""
    for x in range(g.n):
        report = is_locally_3isoregular_at(g, x)
        if report.holds:
            return report
    return None


@dataclass(frozen=True)
class DPartition:
    """Cells D^i_j = (distance-i from x) intersect (distance-j from y)."""

    x: int
    y: int
    d11: tuple[int, ...]
    d12: tuple[int, ...]
    d21: tuple[int, ...]
    d22: tuple[int, ...]

    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.d11), len(self.d12), len(self.d21), len(self.d22))


def d_partition(g: Graph, x: int, y: int) -> DPartition:
    if x == y:
        raise ValueError("distinct vertices required")
    x1, x2 = distance_sets(g, x)
    y1, y2 = distance_sets(g, y)

    def cell(a: int, b: int) -> tuple[int, ...]:
        bits = a & b
        out = []
        v = 0
        while bits:
            if bits & 1:
                out.append(v)
            bits >>= 1
            v += 1
        return tuple(out)

    return DPartition(x, y, cell(x1, y1), cell(x1, y2), cell(x2, y1), cell(x2, y2))


def d_partition_expected_sizes(p: SrgParams, adjacent: bool) -> tuple[int, int, int, int]:
    """Cell sizes forced by strong regularity for an edge or non-edge pair."""
    n, k, lam, mu = p.as_tuple()
    if adjacent:
        d11 = lam
        d12 = d21 = k - lam - 1
        d22 = (k - mu) * (k - lam - 1) // mu
    else:
        d11 = mu
        d12 = d21 = k - mu
        d22 = k * (k - lam - 1) // mu - k + mu - 1
    return (d11, d12, d21, d22)


@dataclass(frozen=True)
class TVertexWitness:
    j: int
    pair_class: str
    type: IsoType
    pair_a: tuple[int, ...]
    count_a: int
    pair_b: tuple[int, ...]
    count_b: int

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "pair_class": self.pair_class,
            "type": self.type.name,
            "pair_a": list(self.pair_a),
            "count_a": self.count_a,
            "pair_b": list(self.pair_b),
            "count_b": self.count_b,
        }


@dataclass(frozen=True)
class TVertexResult:
    holds: bool
    t: int
    witness: Optional[TVertexWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def t_vertex_condition(g: Graph, t: int) -> TVertexResult:
    """Counts of typed j-subsets (j <= t) through a pair must depend only on
    the pair being equal, adjacent, or non-adjacent.  Brute force."""
    if t not in (2, 3, 4):
        raise ValueError("t must be 2, 3 or 4")
    n = g.n
    for j in range(2, t + 1):
        codes = [typ.code for typ in TYPES_BY_SIZE[j]]
        code_index = {c: i for i, c in enumerate(codes)}
        eq_counts = [[0] * len(codes) for _ in range(n)]
        pair_counts = {
            (u, v): [0] * len(codes) for u in range(n) for v in range(u + 1, n)
        }
        for subset in combinations(range(n), j):
            if j == 3:
                code = _triple_type_code(g, *subset)
            else:
                code = iso_type(g, subset).code
            slot = code_index[code]
            for u in subset:
                eq_counts[u][slot] += 1
            for u, v in combinations(subset, 2):
                pair_counts[(u, v)][slot] += 1

        reference = {"equal": None, "adjacent": None, "non-adjacent": None}
        for u in range(n):
            vec = tuple(eq_counts[u])
            if reference["equal"] is None:
                reference["equal"] = ((u, u), vec)
            elif reference["equal"][1] != vec:
                return _tvertex_fail(t, j, "equal", reference["equal"], (u, u), vec, codes)
        for u in range(n):
            for v in range(u + 1, n):
                cls = "adjacent" if g.adjacent(u, v) else "non-adjacent"
                vec = tuple(pair_counts[(u, v)])
                if reference[cls] is None:
                    reference[cls] = ((u, v), vec)
                elif reference[cls][1] != vec:
                    return _tvertex_fail(t, j, cls, reference[cls], (u, v), vec, codes)
    return TVertexResult(True, t)


def _tvertex_fail(t, j, cls, ref, pair, vec, codes) -> TVertexResult:
    ref_pair, ref_vec = ref
    slot = next(i for i in range(len(codes)) if ref_vec[i] != vec[i])
    witness = TVertexWitness(
        j, cls, IsoType(j, codes[slot]), ref_pair, ref_vec[slot], pair, vec[slot]
    )
    return TVertexResult(False, t, witness)


def subconstituent_characterization(g: Graph) -> bool:
    """True iff both subconstituents are strongly regular with parameters
    independent of the base vertex; equivalent to 3-isoregularity for
    nontrivial strongly regular graphs."""
    p = srg_params(g)
    if p is None or not p.is_nontrivial():
        raise ValueError("subconstituent characterization needs a nontrivial SRG")
    seen1: Optional[SrgParams] = None
    seen2: Optional[SrgParams] = None
    for v in range(g.n):
        p1 = srg_params(subconstituent(g, v, 1))
        p2 = srg_params(subconstituent(g, v, 2))
        if p1 is None or p2 is None:
            return False
        if seen1 is None:
            seen1, seen2 = p1, p2
        elif p1 != seen1 or p2 != seen2:
            return False
    return True
