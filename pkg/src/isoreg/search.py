"""Exhaustive symbol-space searches for strongly regular and 3-isoregular
multicirculants, with sound pruning and isomorphism deduplication.

Pruning never drops a strongly regular candidate: the filters are necessary
conditions for strong regularity (within-orbit common-neighbor counts are
determined by set difference multisets), and 3-isoregular graphs are always
strongly regular.  A run with pruning disabled reports identical classes.

Sharding is static over the between-orbit set space; workers are stateless
and survivors are sorted by symbol encoding before deduplication, so output
is independent of worker count and scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph, complement
from .isomorphism import invariant_fingerprint, is_isomorphic
from .formats import encode_graph6
from .srg import SrgParams, srg_params
from .symbols import BicirculantSymbol, TricirculantSymbol, bicirculant, tricirculant

CANDIDATE_CAP = 1 << 26
ISO3_ORDER_CAP = 64
TRICIRC_ORDER_CAP = 40


class SearchCapError(ValueError):
    def __init__(self, message: str, estimate: int):
        super().__init__(f"{message} (estimated {estimate} candidates)")
        self.estimate = estimate


def symmetric_subsets(n: int, size: Optional[int] = None) -> list[tuple[int, ...]]:
    """All S subsets of Z_n minus 0 with S = -S, as sorted residue tuples in
    lexicographic order; optionally restricted to a fixed cardinality."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    out = []
    for mask in _symmetric_masks(n):
        residues = tuple(d for d in range(1, n) if (mask >> d) & 1)
        if size is None or len(residues) == size:
            out.append(residues)
    out.sort(key=lambda residues: (len(residues), residues))
    return out


def _symmetric_masks(n: int) -> list[int]:
    pair_masks = [(1 << d) | (1 << (n - d)) for d in range(1, (n + 1) // 2)]
    if n % 2 == 0:
        pair_masks.append(1 << (n // 2))
    masks = [0]
    for pm in pair_masks:
        masks = [m | choice for m in masks for choice in (0, pm)]
    return masks


def _mask_to_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(d for d in range(n) if (mask >> d) & 1)


def _rotate(mask: int, d: int, n: int) -> int:
    full = (1 << n) - 1
    return ((mask << d) | (mask >> (n - d))) & full if d else mask


def _diff_vector(mask: int, n: int) -> tuple[int, ...]:
    """Entry d-1 is |A intersect (A+d)| for d = 1..n-1."""
    return tuple((mask & _rotate(mask, d, n)).bit_count() for d in range(1, n))


def _orbit_consistent(
    total: list[int], s_mask: int, n: int, lam: Optional[int], mu: Optional[int]
) -> bool:
    """Within-orbit pair condition: common-neighbor totals constant on the
    adjacent class (d in S) and on the non-adjacent class, matching the
    target values when given."""
    seen_lam = lam
    seen_mu = mu
    for d in range(1, n):
        c = total[d - 1]
        if (s_mask >> d) & 1:
            if seen_lam is None:
                seen_lam = c
            elif seen_lam != c:
                return False
        else:
            if seen_mu is None:
                seen_mu = c
            elif seen_mu != c:
                return False
    return True


def triples_isoregular(g: Graph) -> tuple[bool, Optional[list[Optional[int]]]]:
    """Constancy of triple valencies by induced edge count; together with
    strong regularity this is exactly 3-isoregularity."""
    rows = g.rows()
    n = g.n
    vals: list[Optional[int]] = [None, None, None, None]
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            rb = rows[b]
            rab = ra & rb
            eab = (ra >> b) & 1
            for c in range(b + 1, n):
                rc = rows[c]
                e = eab + ((ra >> c) & 1) + ((rb >> c) & 1)
                # rab & rc cannot contain a, b or c: rows carry no loops.
                val = (rab & rc).bit_count()
                if vals[e] is None:
                    vals[e] = val
                elif vals[e] != val:
                    return False, None
    return True, vals


def _profile_from_triple_vals(vals: list[Optional[int]]) -> tuple[int, int, int, int]:
    """(K3, K1,2, K2+K1, 3K1) with vacuous types reported as 0."""
    return (vals[3] or 0, vals[2] or 0, vals[1] or 0, vals[0] or 0)


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of a bicirculant symbol search."""

    n: int
    target: Optional[SrgParams] = None
    s_size: Optional[int] = None
    sp_size: Optional[int] = None
    t_size: Optional[int] = None
    sp_is_complement: bool = False
    require_iso3: bool = False
    dedup: bool = True
    nontrivial_only: bool = True
    use_pruning: bool = True


@dataclass(frozen=True)
class Survivor:
    symbol: object
    params: SrgParams
    profile: Optional[tuple[int, int, int, int]]
    graph6: str
    iso3: bool
    class_id: int = -1

    def to_json(self) -> dict:
        return {
            "symbol": self.symbol.text(),
            "params": self.params.to_json(),
            "profile": None if self.profile is None else list(self.profile),
            "graph6": self.graph6,
            "iso3": self.iso3,
            "class": self.class_id,
        }


@dataclass(frozen=True)
class SearchStats:
    candidates: int
    srg: int
    nontrivial_srg: int
    iso3: int
    survivors: int
    classes: Optional[int]
    complement_classes: Optional[int]

    def to_json(self) -> dict:
        return {
            "candidates": self.candidates,
            "srg": self.srg,
            "nontrivial_srg": self.nontrivial_srg,
            "iso3": self.iso3,
            "survivors": self.survivors,
            "classes": self.classes,
            "complement_classes": self.complement_classes,
        }


@dataclass(frozen=True)
class SearchResult:
    survivors: tuple[Survivor, ...]
    class_reps: tuple[int, ...]
    stats: SearchStats

    def classes_of(self) -> dict[int, list[Survivor]]:
        out: dict[int, list[Survivor]] = {}
        for s in self.survivors:
            out.setdefault(s.class_id, []).append(s)
        return out


def _bicirc_worker(args) -> tuple[list, int, int, int]:
    """One shard of a bicirculant run; returns records and counter deltas."""
    (n, target, s_masks, sp_masks, t_masks, sp_is_complement, require_iso3,
     nontrivial_only, use_pruning, shard, stride) = args
    lam = target[2] if target else None
    mu = target[3] if target else None
    k = target[1] if target else None
    full = (1 << n) - 1
    s_vectors = {m: _diff_vector(m, n) for m in set(s_masks) | set(sp_masks)}
    records = []
    srg_hits = 0
    nontrivial_hits = 0
    iso3_hits = 0
    for t_index in range(shard, len(t_masks), stride):
        t_mask = t_masks[t_index]
        bt = _diff_vector(t_mask, n)
        t_count = t_mask.bit_count()
        for s_mask in s_masks:
            s_count = s_mask.bit_count()
            if k is not None and s_count + t_count != k:
                continue
            if use_pruning:
                total = [s_vectors[s_mask][d] + bt[d] for d in range(n - 1)]
                if not _orbit_consistent(total, s_mask, n, lam, mu):
                    continue
            if sp_is_complement:
                sp_candidates = [full & ~s_mask & ~1]
            else:
                sp_candidates = sp_masks
            for sp_mask in sp_candidates:
                if sp_mask.bit_count() != s_count:
                    continue
                if use_pruning:
                    vec = s_vectors.get(sp_mask)
                    if vec is None:
                        vec = _diff_vector(sp_mask, n)
                    total = [vec[d] + bt[d] for d in range(n - 1)]
                    if not _orbit_consistent(total, sp_mask, n, lam, mu):
                        continue
                sym = BicirculantSymbol(
                    n, _mask_to_set(s_mask, n), _mask_to_set(sp_mask, n), _mask_to_set(t_mask, n)
                )
                g = bicirculant(sym)
                p = srg_params(g)
                if p is None:
                    continue
                srg_hits += 1
                if target is not None and p.as_tuple() != target:
                    continue
                nontrivial = p.is_nontrivial() and g.is_connected() and complement(g).is_connected()
                if nontrivial:
                    nontrivial_hits += 1
                if nontrivial_only and not nontrivial:
                    continue
                ok3, vals = triples_isoregular(g)
                iso3 = ok3 and nontrivial
                if iso3:
                    iso3_hits += 1
                if require_iso3 and not iso3:
                    continue
                profile = _profile_from_triple_vals(vals) if iso3 else None
                records.append((sym.key(), p.as_tuple(), profile, iso3))
    return records, srg_hits, nontrivial_hits, iso3_hits


def search_bicirculant(spec: SearchSpec, jobs: int = 1) -> SearchResult:
    """Enumerate bicirculant symbols under the spec constraints; keep graphs
    passing the strong-regularity (and optional 3-isoregularity) filters;
    deduplicate survivors up to isomorphism."""
    n = spec.n
    if spec.require_iso3 and 2 * n > ISO3_ORDER_CAP:
        raise SearchCapError(f"2n = {2 * n} above the 3-isoregularity cap {ISO3_ORDER_CAP}", 0)
    sym_masks = _symmetric_masks(n)
    s_masks = [m for m in sym_masks if spec.s_size is None or m.bit_count() == spec.s_size]
    if spec.sp_is_complement:
        sp_masks = []
        sp_count = 1
    else:
        sp_masks = [m for m in sym_masks if spec.sp_size is None or m.bit_count() == spec.sp_size]
        sp_count = len(sp_masks)
    if spec.t_size is None:
        t_masks = list(range(1 << n))
    else:
        t_masks = [m for m in range(1 << n) if m.bit_count() == spec.t_size]
    candidates = len(s_masks) * sp_count * len(t_masks)
    if candidates > CANDIDATE_CAP:
        raise SearchCapError("bicirculant space too large", candidates)

    target = spec.target.as_tuple() if spec.target else None
    args = [
        (n, target, s_masks, sp_masks, t_masks, spec.sp_is_complement,
         spec.require_iso3, spec.nontrivial_only, spec.use_pruning, shard, max(jobs, 1))
        for shard in range(max(jobs, 1))
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_bicirc_worker, args))
    else:
        outputs = [_bicirc_worker(a) for a in args]

    records = []
    srg_hits = nontrivial_hits = iso3_hits = 0
    for recs, s_h, nt_h, i_h in outputs:
        records.extend(recs)
        srg_hits += s_h
        nontrivial_hits += nt_h
        iso3_hits += i_h
    records.sort()
    survivors = [
        Survivor(
            BicirculantSymbol(n, key[1], key[2], key[3]),
            SrgParams(*params),
            profile,
            "",
            iso3,
        )
        for key, params, profile, iso3 in records
    ]
    return _finish(survivors, candidates, srg_hits, nontrivial_hits, iso3_hits, spec.dedup)


def _finish(
    survivors: list[Survivor],
    candidates: int,
    srg_hits: int,
    nontrivial_hits: int,
    iso3_hits: int,
    dedup: bool,
) -> SearchResult:
    from .symbols import symbol_graph

    graphs = [symbol_graph(s.symbol) for s in survivors]
    filled = []
    class_reps: list[int] = []
    if dedup:
        reps: list[tuple[tuple, tuple, Graph, int]] = []
        for i, (s, g) in enumerate(zip(survivors, graphs)):
            fp = invariant_fingerprint(g)
            assigned = None
            for params, rep_fp, rep_g, cid in reps:
                if params == s.params.as_tuple() and rep_fp == fp and is_isomorphic(g, rep_g):
                    assigned = cid
                    break
            if assigned is None:
                assigned = len(reps)
                reps.append((s.params.as_tuple(), fp, g, assigned))
                class_reps.append(i)
            filled.append(
                Survivor(s.symbol, s.params, s.profile, encode_graph6(g), s.iso3, assigned)
            )
        complement_classes = _complement_class_count([r[2] for r in reps])
        classes = len(reps)
    else:
        filled = [
            Survivor(s.symbol, s.params, s.profile, encode_graph6(g), s.iso3, -1)
            for s, g in zip(survivors, graphs)
        ]
        classes = None
        complement_classes = None
    stats = SearchStats(
        candidates, srg_hits, nontrivial_hits, iso3_hits, len(filled), classes, complement_classes
    )
    return SearchResult(tuple(filled), tuple(class_reps), stats)


def _complement_class_count(rep_graphs: list[Graph]) -> int:
    """Classes counted after identifying each class with its complement."""
    paired = set()
    count = 0
    for i, g in enumerate(rep_graphs):
        if i in paired:
            continue
        count += 1
        paired.add(i)
        cg = complement(g)
        for j in range(i + 1, len(rep_graphs)):
            if j not in paired and is_isomorphic(cg, rep_graphs[j]):
                paired.add(j)
                break
    return count


# ---------------------------------------------------------------------------
# Tricirculant search


def _tricirc_worker(args) -> tuple[list, int, int, int]:
    (n, target, shard, stride, use_pruning) = args
    k = target[1]
    lam = target[2]
    mu = target[3]
    sym_masks = _symmetric_masks(n)
    sym_by_size: dict[int, list[int]] = {}
    for m in sym_masks:
        sym_by_size.setdefault(m.bit_count(), []).append(m)
    diff = {m: _diff_vector(m, n) for m in sym_masks}
    t_all = list(range(1 << n))
    t_diff = [None] * (1 << n)
    records = []
    srg_hits = nontrivial_hits = iso3_hits = 0

    def tvec(mask: int):
        if t_diff[mask] is None:
            t_diff[mask] = _diff_vector(mask, n)
        return t_diff[mask]

    for t01 in range(shard, 1 << n, stride):
        c01 = t01.bit_count()
        v01 = None
        for t12 in t_all:
            c12 = t12.bit_count()
            for t20 in t_all:
                c20 = t20.bit_count()
                s0_size = k - c01 - c20
                s1_size = k - c01 - c12
                s2_size = k - c12 - c20
                if (
                    s0_size not in sym_by_size
                    or s1_size not in sym_by_size
                    or s2_size not in sym_by_size
                ):
                    continue
                if v01 is None:
                    v01 = tvec(t01)
                v12 = tvec(t12)
                v20 = tvec(t20)
                for s0 in sym_by_size[s0_size]:
                    if use_pruning:
                        total = [diff[s0][d] + v01[d] + v20[d] for d in range(n - 1)]
                        if not _orbit_consistent(total, s0, n, lam, mu):
                            continue
                    for s1 in sym_by_size[s1_size]:
                        if use_pruning:
                            total = [diff[s1][d] + v01[d] + v12[d] for d in range(n - 1)]
                            if not _orbit_consistent(total, s1, n, lam, mu):
                                continue
                        for s2 in sym_by_size[s2_size]:
                            if use_pruning:
                                total = [diff[s2][d] + v12[d] + v20[d] for d in range(n - 1)]
                                if not _orbit_consistent(total, s2, n, lam, mu):
                                    continue
                            sym = TricirculantSymbol(
                                n,
                                _mask_to_set(s0, n),
                                _mask_to_set(s1, n),
                                _mask_to_set(s2, n),
                                _mask_to_set(t01, n),
                                _mask_to_set(t12, n),
                                _mask_to_set(t20, n),
                            )
                            g = tricirculant(sym)
                            p = srg_params(g)
                            if p is None or p.as_tuple() != target:
                                continue
                            srg_hits += 1
                            nontrivial = (
                                p.is_nontrivial()
                                and g.is_connected()
                                and complement(g).is_connected()
                            )
                            if not nontrivial:
                                continue
                            nontrivial_hits += 1
                            ok3, vals = triples_isoregular(g)
                            if ok3:
                                iso3_hits += 1
                            profile = _profile_from_triple_vals(vals) if ok3 else None
                            records.append((sym.key(), p.as_tuple(), profile, ok3))
    return records, srg_hits, nontrivial_hits, iso3_hits


def search_tricirculant_srg(
    n: int, target: SrgParams, jobs: int = 1, use_pruning: bool = True
) -> SearchResult:
    """Exhaustive tricirculant symbol search for a target parameter set."""
    if 3 * n > TRICIRC_ORDER_CAP:
        raise SearchCapError(f"3n = {3 * n} above the tricirculant cap {TRICIRC_ORDER_CAP}", 0)
    if target.n != 3 * n:
        raise ValueError(f"target order {target.n} is not 3n = {3 * n}")
    sym_by_size: dict[int, int] = {}
    for m in _symmetric_masks(n):
        sym_by_size[m.bit_count()] = sym_by_size.get(m.bit_count(), 0) + 1
    from math import comb

    k = target.k
    candidates = 0
    for c01 in range(n + 1):
        for c12 in range(n + 1):
            for c20 in range(n + 1):
                sizes = (k - c01 - c20, k - c01 - c12, k - c12 - c20)
                if all(sz in sym_by_size for sz in sizes):
                    ways = comb(n, c01) * comb(n, c12) * comb(n, c20)
                    for sz in sizes:
                        ways *= sym_by_size[sz]
                    candidates += ways
    if candidates > CANDIDATE_CAP:
        raise SearchCapError("tricirculant space too large", candidates)

    stride = max(jobs, 1)
    args = [(n, target.as_tuple(), shard, stride, use_pruning) for shard in range(stride)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_tricirc_worker, args))
    else:
        outputs = [_tricirc_worker(a) for a in args]

    records = []
    srg_hits = nontrivial_hits = iso3_hits = 0
    for recs, s_h, nt_h, i_h in outputs:
        records.extend(recs)
        srg_hits += s_h
        nontrivial_hits += nt_h
        iso3_hits += i_h
    records.sort()
    survivors = [
        Survivor(TricirculantSymbol(n, *key[1:]), SrgParams(*params), profile, "", iso3)
        for key, params, profile, iso3 in records
    ]
    return _finish(survivors, candidates, srg_hits, nontrivial_hits, iso3_hits, True)


# ---------------------------------------------------------------------------
# Twice-odd-order confirmation runs


@dataclass(frozen=True)
class OddRunResult:
    """Full bicirculant enumeration at odd modulus plus the structural facts
    the twice-odd-order theory predicts for the nontrivial survivors."""

    n: int
    result: SearchResult
    iso3_count: int
    locally_iso3_classes: int
    family_index: Optional[int]
    structure_ok: bool
    structure_failures: tuple[str, ...] = field(default_factory=tuple)


def _family_index_for(n: int) -> Optional[int]:
    import math

    root = math.isqrt(2 * n - 1)
    if root * root != 2 * n - 1 or root % 2 == 0:
        return None
    return (root - 1) // 2


def confirm_nonexistence_bicirc_odd(n: int, jobs: int = 1) -> OddRunResult:
    """Full unconstrained (S, S', T) enumeration for odd n in 5..13.

    Survivors are the nontrivial strongly regular symbols; the run verifies
    that none is 3-isoregular, that no survivor class is even locally
    3-isoregular (checked on class representatives: the property is
    isomorphism-invariant), and that every survivor has S' complementary
    to S with |T| determined by the family index (directly or through the
    complement side of the parameter family)."""
    if n % 2 == 0:
        raise ValueError("this run is for odd moduli")
    if not 5 <= n <= 13:
        raise ValueError("odd confirmation runs cover 5 <= n <= 13")
    spec = SearchSpec(n=n, require_iso3=False, dedup=True, nontrivial_only=True)
    result = search_bicirculant(spec, jobs=jobs)
    m = _family_index_for(n)
    failures = []
    from .paramtheory import bicirc_odd_family

    expected = None
    if m is not None:
        family_params, _, t_size = bicirc_odd_family(m)
        expected = {family_params.as_tuple(): t_size, _complement_tuple(family_params): n - t_size}
    for s in result.survivors:
        sym = s.symbol
        if m is None:
            failures.append(f"{sym.text()}: survivor at n with no admissible family index")
            continue
        if sym.sp != sym.s_hat():
            failures.append(f"{sym.text()}: S' is not the complement of S")
        want_t = expected.get(s.params.as_tuple())
        if want_t is None:
            failures.append(f"{sym.text()}: parameters outside the family pair")
        elif len(sym.t) != want_t:
            failures.append(f"{sym.text()}: |T| = {len(sym.t)}, family predicts {want_t}")
    iso3_count = sum(1 for s in result.survivors if s.iso3)

    from .isoregularity import is_locally_3isoregular
    from .symbols import symbol_graph

    locally = sum(
        1
        for i in result.class_reps
        if is_locally_3isoregular(symbol_graph(result.survivors[i].symbol)) is not None
    )
    return OddRunResult(n, result, iso3_count, locally, m, not failures, tuple(failures))


def _complement_tuple(p: SrgParams) -> tuple[int, int, int, int]:
    return (p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lam)
