"""Integer parameter theory: admissible families, the local-parameter
feasibility solver, and replayable non-existence certificates.

Everything here is exact integer arithmetic.  Certificates carry their full
derivation as typed steps (DIVISIBILITY, INEQUALITY, HOFFMAN_CLIQUE, plus
SUBSTITUTION for identities, GCD for coprimality facts, and GRAPH_CHECK for
the two steps that rest on measuring a concrete graph); replaying a
serialized certificate revalidates every step and regenerates the instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .srg import SrgParams


# ---------------------------------------------------------------------------
# Parameter families


def bicirc_odd_family(m: int) -> tuple[SrgParams, int, int]:
    """Parameters forced on a strongly regular bicirculant of twice-odd order,
    together with the symbol cardinalities |S| and |T|."""
    if m < 1:
        raise ValueError("family index m must be at least 1")
    params = SrgParams(2 * (2 * m * m + 2 * m + 1), m * (2 * m + 1), m * m - 1, m * m)
    return params, m * (m + 1), m * m


@dataclass(frozen=True)
class LeungMaEntry:
    """One partial-difference-triple family entry (n; c, d; lambda, mu)."""

    label: str
    n: int
    c: int
    d: int
    lam: int
    mu: int

    def graph_params(self) -> SrgParams:
        return SrgParams(2 * self.n, self.c + self.d, self.lam, self.mu)

    def to_json(self) -> dict:
        return {
            "family": self.label,
            "n": self.n,
            "c": self.c,
            "d": self.d,
            "lambda": self.lam,
            "mu": self.mu,
            "graph": self.graph_params().to_json(),
        }


def leung_ma_families(m: int) -> list[LeungMaEntry]:
    """The cyclic partial-difference-triple parameter families, up to
    complementation; only the families whose stated bound admits m."""
    if m < 1:
        raise ValueError("family index m must be at least 1")
    m2 = m * m
    out = []
    out.append(LeungMaEntry("a", 2 * m2 + 2 * m + 1, m2, m2 + m, m2 - 1, m2))
    if m >= 2:
        out.append(LeungMaEntry("b", 2 * m2, m2, m2 - m, m2 - m, m2 - m))
    if m >= 3:
        out.append(LeungMaEntry("c", 2 * m2, m2, m2 + m, m2 + m, m2 + m))
    if m >= 2:
        out.append(LeungMaEntry("d+", 2 * m2, m2 + m, m2, m2 + m, m2 + m))
        out.append(LeungMaEntry("d-", 2 * m2, m2 - m, m2, m2 - m, m2 - m))
    return out


@dataclass(frozen=True)
class TricircEntry:
    """One tricirculant parameter set with validity and hypothesis flags."""

    family: int
    s: int
    params: SrgParams
    valid: bool
    disc: int
    disc_root: Optional[int]
    order_coprime: Optional[bool]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "s": self.s,
            "params": self.params.to_json(),
            "valid": self.valid,
            "discriminant": self.disc,
            "discriminant_root": self.disc_root,
            "order_coprime": self.order_coprime,
        }


def _tricirc_entry(family: int, s: int, p: SrgParams) -> TricircEntry:
    valid = p.k >= 1 and p.lam >= 0 and p.mu >= 0 and p.n >= 2
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    root = math.isqrt(disc) if disc >= 0 else None
    if root is not None and root * root != disc:
        root = None
    coprime = None
    if root is not None and p.n % 3 == 0:
        coprime = math.gcd(p.n // 3, 6 * root) == 1
    return TricircEntry(family, s, p, valid, disc, root, coprime)


def tricirc_families(s: int) -> tuple[TricircEntry, TricircEntry]:
    """Both admissible tricirculant parameter sets at index s; invalid
    instances (negative entries) are flagged, not rejected."""
    p1 = SrgParams(
        3 * (12 * s * s + 9 * s + 2),
        (4 * s + 1) * (3 * s + 1),
        s * (4 * s + 3),
        s * (4 * s + 1),
    )
    p2 = SrgParams(3 * (3 * s * s - 3 * s + 1), s * (3 * s - 1), s * s + s - 1, s * s)
    return _tricirc_entry(1, s, p1), _tricirc_entry(2, s, p2)


# ---------------------------------------------------------------------------
# Local-parameter relations and the feasibility solver


def edge_relations_check(p: SrgParams, q: int, r: int, w: int) -> bool:
    """Both counting relations for a 3-isoregular edge, plus their consequence."""
    n, k, lam, mu = p.as_tuple()
    return (
        lam * (lam - q - 1) == r * (k - lam - 1)
        and lam * mu * (k - 2 * lam + q) == w * (k - mu) * (k - lam - 1)
        and w * (k - mu) == mu * (lam - r)
    )


def nonedge_relations_check(p: SrgParams, rp: int, wp: int, v: int) -> bool:
    """Both counting relations for a 3-isoregular non-edge."""
    n, k, lam, mu = p.as_tuple()
    if mu == 0:
        return False
    d22 = Fraction(k * (k - lam - 1), mu) - k + mu - 1
    return (
        mu * (lam - rp) == (k - mu) * wp
        and Fraction(mu * (k - 2 - 2 * lam + rp)) == v * d22
    )


@dataclass(frozen=True)
class LocalParamSolution:
    """Non-negative integer tuple (Q, R, W, V) satisfying all five relations
    with the edge/non-edge identification R = R', W = W'."""

    q: int
    r: int
    w: int
    v: int
    vacuous: frozenset[str] = field(default_factory=frozenset)
    trace: dict = field(default_factory=dict, compare=False, hash=False)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.q, self.r, self.w, self.v)

    def to_json(self) -> dict:
        return {
            "Q": self.q,
            "R": self.r,
            "W": self.w,
            "V": self.v,
            "vacuous": sorted(self.vacuous),
            "trace": self.trace,
        }


def _require_nontrivial(p: SrgParams) -> None:
    if not p.is_nontrivial():
        raise ValueError(f"parameters {p.as_tuple()} are not a nontrivial SRG")


def feasible_local_params(p: SrgParams) -> list[LocalParamSolution]:
    """Exhaustive scan of R in [0, min(lambda, mu-1)] (with R' = R): keep
    tuples whose Q, W, V are non-negative integers within bounds under all
    five relations.  When the non-edge D22 cell is empty (complement has
    lambda = 0) V is vacuous and reported as 0."""
    _require_nontrivial(p)
    n, k, lam, mu = p.as_tuple()
    d22 = n - 2 * k + mu - 2
    if d22 < 0:
        return []
    solutions = []
    for r in range(0, min(lam, mu - 1) + 1):
        vacuous = set()
        if lam > 0:
            num = lam * (lam - 1) - r * (k - lam - 1)
            if num < 0 or num % lam:
                continue
            q = num // lam
            if q > lam - 1:
                continue
        else:
            if r * (k - lam - 1) != 0:
                continue
            q = 0
            vacuous.add("Q")
        wnum = mu * (lam - r)
        if wnum < 0 or wnum % (k - mu):
            continue
        w = wnum // (k - mu)
        if w > lam or w > mu:
            continue
        if lam * mu * (k - 2 * lam + q) != w * (k - mu) * (k - lam - 1):
            continue
        vnum = mu * (k - 2 - 2 * lam + r)
        if d22 > 0:
            if vnum < 0 or vnum % d22:
                continue
            v = vnum // d22
            if v > mu:
                continue
        else:
            if vnum != 0:
                continue
            v = 0
            vacuous.add("V")
        solutions.append(LocalParamSolution(q, r, w, v, frozenset(vacuous)))
    return solutions


def feasible_edge_params(p: SrgParams) -> list[tuple[int, int, int]]:
    """Edge-side feasibility only: (Q, R, W) tuples satisfying the edge
    relations within their bounds, no non-edge identification."""
    _require_nontrivial(p)
    n, k, lam, mu = p.as_tuple()
    out = []
    for r in range(0, lam + 1):
        if lam > 0:
            num = lam * (lam - 1) - r * (k - lam - 1)
            if num < 0 or num % lam:
                continue
            q = num // lam
            if q > lam - 1:
                continue
        else:
            if r * (k - lam - 1) != 0:
                continue
            q = 0
        wnum = mu * (lam - r)
        if wnum < 0 or wnum % (k - mu):
            continue
        w = wnum // (k - mu)
        if w > lam:
            continue
        if lam * mu * (k - 2 * lam + q) != w * (k - mu) * (k - lam - 1):
            continue
        out.append((q, r, w))
    return out


def even_m_candidates(m: int, family: str) -> LocalParamSolution:
    """Candidate local parameters for the even-index families (no existence
    claim).  For family (c) at m = 2 the V relation is degenerate (empty D22
    cell); the returned V is the formal value of the family formula."""
    if m < 2 or m % 2:
        raise ValueError("even m >= 2 required")
    if family == "b":
        q = w = (m * m - m) // 2
        r = v = (m * m - 2 * m) // 2
    elif family == "c":
        q = w = (m * m + m) // 2
        r = v = (m * m + 2 * m) // 2
    else:
        raise ValueError("family must be 'b' or 'c'")
    return LocalParamSolution(q, r, w, v, trace={"family": family, "m": m})


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class Step:
    """One replayable derivation step.

    kinds and their data:
      SUBSTITUTION   {"lhs": int, "rhs": int}            holds iff lhs == rhs
      GCD            {"values": [a, b], "equals": g}     holds iff gcd == g
      DIVISIBILITY   {"value": x, "divisor": d,
                      "divides": bool}                   holds iff claim true
                  or {"divisor": d, "lo": a, "hi": b,
                      "multiples": [..]}                 holds iff multiples
                                                         of d in [a, b] match
      INEQUALITY     {"lhs": x, "rhs": y, "relation": op}
      HOFFMAN_CLIQUE {"clique": c, "valency": k,
                      "eig": m}                          holds iff the clique
                                                         violates 1 + k/m
      GRAPH_CHECK    {"graph": tag, "assertion": name}   measured on the graph
    """

    kind: str
    description: str
    data: dict
    holds: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "description": self.description,
            "data": self.data,
            "holds": self.holds,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Step":
        return cls(obj["kind"], obj["description"], obj["data"], obj["holds"])


_RELATIONS = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
}


def validate_step(step: Step) -> bool:
    """Recompute a step's verdict from its recorded data."""
    data = step.data
    if step.kind == "SUBSTITUTION":
        return (data["lhs"] == data["rhs"]) == step.holds
    if step.kind == "GCD":
        a, b = data["values"]
        return (math.gcd(abs(a), abs(b)) == data["equals"]) == step.holds
    if step.kind == "DIVISIBILITY":
        if "multiples" in data:
            d = data["divisor"]
            found = [x for x in range(data["lo"], data["hi"] + 1) if x % d == 0]
            return (found == data["multiples"]) == step.holds
        ok = data["value"] % data["divisor"] == 0
        return (ok == data["divides"]) == step.holds
    if step.kind == "INEQUALITY":
        return _RELATIONS[data["relation"]](data["lhs"], data["rhs"]) == step.holds
    if step.kind == "HOFFMAN_CLIQUE":
        # Clique of the recorded size contradicts |C| <= 1 + k/m.
        violated = data["eig"] * (data["clique"] - 1) > data["valency"]
        return violated == step.holds
    if step.kind == "GRAPH_CHECK":
        return _validate_graph_check(data) == step.holds
    return False


def _validate_graph_check(data: dict) -> bool:
    from .isoregularity import edge_iso_params
    from .named import named_graph

    g = named_graph(data["graph"])
    assertion = data["assertion"]
    if assertion == "no-3-isoregular-edge":
        return all(edge_iso_params(g, u, v) is None for u, v in g.edges())
    if assertion == "every-edge-3-isoregular-q0-r0-w1":
        return all(
            (params := edge_iso_params(g, u, v)) is not None
            and params.as_tuple() == (0, 0, 1)
            for u, v in g.edges()
        )
    raise ValueError(f"unknown graph assertion {assertion!r}")


CONTRADICTION = "CONTRADICTION"
SOLUTION = "SOLUTION"
DEGENERATE = "DEGENERATE"


@dataclass(frozen=True)
class Instance:
    """Verdict and derivation trace for one family index."""

    index: int
    params: Optional[SrgParams]
    verdict: str
    steps: tuple[Step, ...]
    solution: Optional[dict] = None
    oracle: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "params": None if self.params is None else self.params.to_json(),
            "verdict": self.verdict,
            "steps": [s.to_json() for s in self.steps],
            "solution": self.solution,
            "oracle": self.oracle,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Instance":
        return cls(
            obj["index"],
            None if obj["params"] is None else SrgParams.from_json(obj["params"]),
            obj["verdict"],
            tuple(Step.from_json(s) for s in obj["steps"]),
            obj["solution"],
            obj["oracle"],
        )


@dataclass(frozen=True)
class Certificate:
    claim: str
    indices: tuple[int, ...]
    instances: tuple[Instance, ...]

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "indices": list(self.indices),
            "instances": [inst.to_json() for inst in self.instances],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        return cls(
            obj["claim"],
            tuple(obj["indices"]),
            tuple(Instance.from_json(i) for i in obj["instances"]),
        )


def _eq2_step(p: SrgParams) -> Step:
    return Step(
        "SUBSTITUTION",
        "parameter identity k(k-lambda-1) = mu(n-1-k)",
        {"lhs": p.k * (p.k - p.lam - 1), "rhs": p.mu * (p.n - 1 - p.k)},
        p.k * (p.k - p.lam - 1) == p.mu * (p.n - 1 - p.k),
    )


def _oracle_record(
    feasible: list[LocalParamSolution], eliminations: dict[tuple[int, int, int], str]
) -> dict:
    """Record the solver output and, for each tuple, which graph-level step
    of the certificate eliminates it (empty string if none is needed)."""
    entries = []
    for sol in feasible:
        key = (sol.q, sol.r, sol.w)
        entries.append(
            {
                "tuple": list(sol.as_tuple()),
                "vacuous": sorted(sol.vacuous),
                "eliminated_by": eliminations.get(key, ""),
            }
        )
    return {"feasible": entries, "consistent": all(e["eliminated_by"] for e in entries)}


def certify_bicirc_odd(m: int) -> Instance:
    """Replay the twice-odd-order argument: no 3-isoregular edge/non-edge
    parameter system exists for index m >= 2."""
    if m < 2:
        raise ValueError("certify_bicirc_odd needs m >= 2")
    p, _, _ = bicirc_odd_family(m)
    n, k, lam, mu = p.as_tuple()
    steps = [_eq2_step(p)]

    steps.append(
        Step(
            "GCD",
            "relation (i) gives R = (m-1)(m^2-Q-2)/m; gcd(m-1, m) = 1 forces "
            "m | Q+2, so Q+2 = alpha*m with 1 <= alpha <= m (from Q+2 >= 2 and R >= 0)",
            {"values": [m - 1, m], "equals": 1},
            math.gcd(m - 1, m) == 1,
        )
    )
    steps.append(
        Step(
            "HOFFMAN_CLIQUE",
            "alpha = m gives Q = m^2-2, R = 0, so the common neighborhood of the "
            "edge plus its endpoints is a clique of size m^2+1, above 1 + k/(m+1)",
            {
                "clique": m * m + 1,
                "valency": k,
                "eig": m + 1,
                "tuple": [m * m - 2, 0, m * m - m],
            },
            (m + 1) * (m * m) > k,
        )
    )
    g = math.gcd(m - 1, m + 1)
    steps.append(
        Step(
            "GCD",
            "relation (ii) gives W = (alpha+1)(m-1)m/(m+1); gcd(m-1, m+1) "
            "controls the divisor left for alpha+1",
            {"values": [m - 1, m + 1], "equals": g},
            True,
        )
    )
    if m % 2 == 0:
        divisor = m + 1
        multiples = [x for x in range(2, m + 1) if x % divisor == 0]
        steps.append(
            Step(
                "DIVISIBILITY",
                "m even: m+1 must divide alpha+1, impossible for alpha in [1, m-1]",
                {"divisor": divisor, "lo": 2, "hi": m, "multiples": multiples},
                multiples == [],
            )
        )
        oracle = _solver_cross_check(p, steps)
        return Instance(m, p, CONTRADICTION, tuple(steps), oracle=oracle)

    divisor = (m + 1) // 2
    multiples = [x for x in range(2, m + 1) if x % divisor == 0]
    steps.append(
        Step(
            "DIVISIBILITY",
            "m odd: (m+1)/2 must divide alpha+1; the only multiple in [2, m] "
            "is (m+1)/2 itself, forcing alpha = (m-1)/2",
            {"divisor": divisor, "lo": 2, "hi": m, "multiples": multiples},
            multiples == [divisor],
        )
    )
    q = (m * m - m - 4) // 2
    r = (m * m - 1) // 2
    w = (m * (m - 1)) // 2
    steps.append(
        Step(
            "SUBSTITUTION",
            f"derived Q={q}, R={r}, W={w} satisfy relation (i)",
            {"lhs": lam * (lam - q - 1), "rhs": r * (k - lam - 1)},
            lam * (lam - q - 1) == r * (k - lam - 1),
        )
    )
    steps.append(
        Step(
            "SUBSTITUTION",
            "derived values satisfy relation (ii)",
            {"lhs": lam * mu * (k - 2 * lam + q), "rhs": w * (k - mu) * (k - lam - 1)},
            lam * mu * (k - 2 * lam + q) == w * (k - mu) * (k - lam - 1),
        )
    )
    steps.append(
        Step(
            "DIVISIBILITY",
            "V = m(m^2+2m-1)/(2(m+2)) is not an integer: m+2 never divides "
            "m^2+2m-1 = m(m+2)-1",
            {"value": m * (m * m + 2 * m - 1), "divisor": 2 * (m + 2), "divides": False},
            (m * (m * m + 2 * m - 1)) % (2 * (m + 2)) != 0,
        )
    )
    oracle = _solver_cross_check(p, steps)
    return Instance(m, p, CONTRADICTION, tuple(steps), oracle=oracle)


def _solver_cross_check(p: SrgParams, steps: list[Step]) -> dict:
    feasible = feasible_local_params(p)
    eliminations: dict[tuple[int, int, int], str] = {}
    for step in steps:
        if step.kind in ("HOFFMAN_CLIQUE", "GRAPH_CHECK") and "tuple" in step.data:
            key = tuple(step.data["tuple"][:3])
            eliminations[key] = step.kind
    return _oracle_record(feasible, eliminations)


def certify_family_b(m: int) -> Instance:
    """Even-order family (b), odd index: the parameter system is infeasible."""
    if m % 2 == 0 or m < 3:
        raise ValueError("family (b) certificate covers odd m >= 3")
    p = SrgParams(4 * m * m, 2 * m * m - m, m * m - m, m * m - m)
    steps = [_eq2_step(p)]
    steps.append(
        Step(
            "GCD",
            "Q = m^2-m-1 - (m+1)R/m integral with gcd(m+1, m) = 1 forces m | R; "
            "write R = alpha*m",
            {"values": [m + 1, m], "equals": 1},
            math.gcd(m + 1, m) == 1,
        )
    )
    steps.append(
        Step(
            "SUBSTITUTION",
            "Q >= 0 bounds R <= m(m^2-m-1)/(m+1), so alpha <= m-2",
            {"lhs": (m * m - m - 1) // (m + 1), "rhs": m - 2},
            (m * m - m - 1) // (m + 1) == m - 2,
        )
    )
    steps.append(
        Step(
            "GCD",
            "m odd: gcd(m, m+2) = 1, so V = m(m-2+R)/(m+2) integral forces "
            "(m+2) | (alpha*m - 4), hence (m+2) | 2(alpha+2)",
            {"values": [m, m + 2], "equals": 1},
            math.gcd(m, m + 2) == 1,
        )
    )
    steps.append(
        Step(
            "GCD",
            "m+2 odd, so (m+2) | (alpha+2)",
            {"values": [2, m + 2], "equals": 1},
            math.gcd(2, m + 2) == 1,
        )
    )
    multiples = [x for x in range(2, m + 1) if x % (m + 2) == 0]
    steps.append(
        Step(
            "DIVISIBILITY",
            "no multiple of m+2 among alpha+2 in [2, m]: contradiction with "
            "alpha <= m-2",
            {"divisor": m + 2, "lo": 2, "hi": m, "multiples": multiples},
            multiples == [],
        )
    )
    oracle = _solver_cross_check(p, steps)
    return Instance(m, p, CONTRADICTION, tuple(steps), oracle=oracle)


def certify_family_c(m: int) -> Instance:
    """Even-order family (c), odd index: integer feasibility leaves exactly
    the branches alpha = 2 and alpha = m, each excluded by a clique bound
    (on the complement and on the graph respectively)."""
    if m % 2 == 0 or m < 3:
        raise ValueError("family (c) certificate covers odd m >= 3")
    p = SrgParams(4 * m * m, 2 * m * m + m, m * m + m, m * m + m)
    n, k, lam, mu = p.as_tuple()
    steps = [_eq2_step(p)]
    steps.append(
        Step(
            "GCD",
            "Q = m^2+m-1 - (m-1)R/m integral with gcd(m-1, m) = 1 forces m | R; "
            "write R = alpha*m",
            {"values": [m - 1, m], "equals": 1},
            math.gcd(m - 1, m) == 1,
        )
    )
    steps.append(
        Step(
            "INEQUALITY",
            "V = m(R-m-2)/(m-2) >= 0 needs R >= m+2, so alpha >= 2",
            {"lhs": 1 * m, "rhs": m + 2, "relation": "<"},
            m < m + 2,
        )
    )
    steps.append(
        Step(
            "INEQUALITY",
            "V <= mu gives R <= m^2, so alpha <= m",
            {"lhs": m * (m * m - m - 2), "rhs": (m * m + m) * (m - 2), "relation": "=="},
            m * (m * m - m - 2) == (m * m + m) * (m - 2),
        )
    )
    steps.append(
        Step(
            "GCD",
            "m odd: gcd(m, m-2) = 1 and m-2 odd force (m-2) | (alpha-2)",
            {"values": [m, m - 2], "equals": 1},
            math.gcd(m, m - 2) == 1,
        )
    )
    multiples = [x + 2 for x in range(0, m - 1) if x % (m - 2) == 0]
    steps.append(
        Step(
            "DIVISIBILITY",
            "alpha - 2 in [0, m-2] divisible by m-2: alpha in {2, m} only",
            {"divisor": m - 2, "lo": 0, "hi": m - 2, "multiples": [a - 2 for a in multiples]},
            [a - 2 for a in multiples] == [0, m - 2],
        )
    )

    # Branch alpha = m: the tuple (2m-1, m^2, m+1, m(m+1)).
    q1, r1, w1 = 2 * m - 1, m * m, m + 1
    steps.append(
        Step(
            "SUBSTITUTION",
            f"alpha = m gives (Q,R,W,V) = ({q1},{r1},{w1},{m * (m + 1)}); relation (i) holds",
            {"lhs": lam * (lam - q1 - 1), "rhs": r1 * (k - lam - 1)},
            lam * (lam - q1 - 1) == r1 * (k - lam - 1),
        )
    )
    steps.append(
        Step(
            "HOFFMAN_CLIQUE",
            "alpha = m: each vertex outside the non-edge's common neighborhood "
            "extends {x} to a clique of size 1+m^2, above 1 + k/m",
            {"clique": m * m + 1, "valency": k, "eig": m, "tuple": [q1, r1, w1]},
            m * (m * m) > k,
        )
    )

    # Branch alpha = 2: the tuple (m^2-m+1, 2m, m^2-1, m); its complement
    # edge parameters force a clique in the complement graph.
    q2, r2, w2, v2 = m * m - m + 1, 2 * m, m * m - 1, m
    steps.append(
        Step(
            "SUBSTITUTION",
            f"alpha = 2 gives (Q,R,W,V) = ({q2},{r2},{w2},{v2}); relation (i) holds",
            {"lhs": lam * (lam - q2 - 1), "rhs": r2 * (k - lam - 1)},
            lam * (lam - q2 - 1) == r2 * (k - lam - 1),
        )
    )
    comp_lam = n - 2 - 2 * k + mu
    comp_k = n - k - 1
    comp_q = n - 3 - 3 * k + 3 * mu - v2
    steps.append(
        Step(
            "SUBSTITUTION",
            "alpha = 2: the complement's edge triangle parameter is "
            "Qbar = n-3-3k+3mu-V = lambdabar - 1, so the complement packs a "
            "clique of size lambdabar + 2 = m^2-m",
            {"lhs": comp_q, "rhs": comp_lam - 1},
            comp_q == comp_lam - 1,
        )
    )
    steps.append(
        Step(
            "HOFFMAN_CLIQUE",
            "alpha = 2: clique of size m^2-m in the complement, above "
            "1 + kbar/(m+1)",
            {"clique": comp_lam + 2, "valency": comp_k, "eig": m + 1, "tuple": [q2, r2, w2]},
            (m + 1) * (comp_lam + 1) > comp_k,
        )
    )
    oracle = _solver_cross_check(p, steps)
    return Instance(m, p, CONTRADICTION, tuple(steps), oracle=oracle)


def _tri_oracle(p: SrgParams, steps: list[Step]) -> dict:
    """Edge-side solver output; each tuple points at the graph-level step
    that settles it (confirmation for a SOLUTION, elimination otherwise)."""
    feasible = feasible_edge_params(p)
    settled: dict[tuple[int, int, int], str] = {}
    for step in steps:
        if step.kind in ("HOFFMAN_CLIQUE", "GRAPH_CHECK") and "tuple" in step.data:
            settled[tuple(step.data["tuple"][:3])] = step.kind
    entries = []
    for q, r, w in feasible:
        entries.append({"tuple": [q, r, w], "settled_by": settled.get((q, r, w), "")})
    return {"feasible": entries, "consistent": all(e["settled_by"] for e in entries)}


def certify_tri_family1(s: int) -> Instance:
    """First tricirculant family: an edge parameter system exists exactly at
    s = -1, where the graph is the complement of the triangular graph T(6)."""
    if s == 0:
        step = Step(
            "SUBSTITUTION",
            "s = 0 gives order 6 and valency 1 (a perfect matching), which is "
            "disconnected; excluded as trivial",
            {"lhs": (4 * 0 + 1) * (3 * 0 + 1), "rhs": 1},
            True,
        )
        return Instance(s, None, DEGENERATE, (step,))
    entry = _tricirc_entry(1, s, tricirc_families(s)[0].params)
    p = entry.params
    n, k, lam, mu = p.as_tuple()
    steps = [_eq2_step(p)]
    steps.append(
        Step(
            "GCD",
            "relation (i): R = (4s+3)(4s^2+3s-Q-1)/(4(2s+1)); the factors are "
            "coprime, so Q = 4s^2+3s-1-4*alpha*(2s+1) and R = alpha(4s+3)",
            {"values": [4 * s + 3, 4 * (2 * s + 1)], "equals": 1},
            math.gcd(abs(4 * s + 3), abs(4 * (2 * s + 1))) == 1,
        )
    )
    steps.append(
        Step(
            "GCD",
            "relation (ii): W = s(s-alpha)(4s+3)/(2s+1); coprimality forces "
            "(2s+1) | (s-alpha), so alpha = s - beta(2s+1), W = beta*s(4s+3)",
            {"values": [s * (4 * s + 3), 2 * s + 1], "equals": 1},
            math.gcd(abs(s * (4 * s + 3)), abs(2 * s + 1)) == 1,
        )
    )
    steps.append(
        Step(
            "INEQUALITY",
            "s(4s+3) > 0 for every nonzero s, so W >= 0 forces beta >= 0",
            {"lhs": s * (4 * s + 3), "rhs": 0, "relation": ">"},
            s * (4 * s + 3) > 0,
        )
    )

    def r_of(beta: int) -> int:
        return (4 * s + 3) * (s - beta * (2 * s + 1))

    slope = -(4 * s + 3) * (2 * s + 1)
    steps.append(
        Step(
            "INEQUALITY",
            "R is strictly decreasing in beta",
            {"lhs": slope, "rhs": 0, "relation": "<"},
            slope < 0,
        )
    )
    betas = []
    beta = 0
    while r_of(beta) >= 0:
        betas.append(beta)
        beta += 1
    steps.append(
        Step(
            "INEQUALITY",
            f"R >= 0 admits beta in {betas} only",
            {"lhs": r_of(betas[-1] + 1), "rhs": 0, "relation": "<"},
            r_of(betas[-1] + 1) < 0,
        )
    )

    solution = None
    for beta in betas:
        if beta == 0:
            q0 = -(4 * s * s + s + 1)
            steps.append(
                Step(
                    "INEQUALITY",
                    "beta = 0 gives Q = -(4s^2+s+1) < 0: excluded",
                    {"lhs": q0, "rhs": 0, "relation": "<"},
                    q0 < 0,
                )
            )
        else:
            alpha = s - beta * (2 * s + 1)
            q = 4 * s * s + 3 * s - 1 - 4 * alpha * (2 * s + 1)
            r = alpha * (4 * s + 3)
            w = beta * s * (4 * s + 3)
            steps.append(
                Step(
                    "SUBSTITUTION",
                    f"beta = {beta} gives (Q,R,W) = ({q},{r},{w}); relation (ii) holds",
                    {
                        "lhs": lam * mu * (k - 2 * lam + q),
                        "rhs": w * (k - mu) * (k - lam - 1),
                    },
                    lam * mu * (k - 2 * lam + q) == w * (k - mu) * (k - lam - 1),
                )
            )
            steps.append(
                Step(
                    "GRAPH_CHECK",
                    "s = -1: the graph is the complement of T(6); every edge is "
                    "3-isoregular with (Q,R,W) = (0,0,1), measured directly",
                    {
                        "graph": "t6-complement",
                        "assertion": "every-edge-3-isoregular-q0-r0-w1",
                        "tuple": [q, r, w],
                    },
                    _validate_graph_check(
                        {"graph": "t6-complement", "assertion": "every-edge-3-isoregular-q0-r0-w1"}
                    ),
                )
            )
            solution = {"Q": q, "R": r, "W": w}
    verdict = SOLUTION if solution is not None else CONTRADICTION
    oracle = _tri_oracle(p, steps)
    return Instance(s, p, verdict, tuple(steps), solution=solution, oracle=oracle)


def certify_tri_family2(s: int) -> Instance:
    """Second tricirculant family: no edge parameter system for any admitted s."""
    if s in (-1, 0, 1):
        if s == 1:
            desc = "s = 1 gives order 3 (a triangle): no within-orbit edge structure"
            data = {"lhs": 3 * (3 - 3 + 1), "rhs": 3}
        else:
            desc = f"s = {s} gives lambda = -1"
            data = {"lhs": s * s + s - 1, "rhs": -1}
        return Instance(
            s, None, DEGENERATE, (Step("SUBSTITUTION", desc, data, data["lhs"] == data["rhs"]),)
        )
    entry = _tricirc_entry(2, s, tricirc_families(s)[1].params)
    p = entry.params
    n, k, lam, mu = p.as_tuple()
    steps = [_eq2_step(p)]
    steps.append(
        Step(
            "GCD",
            "relation (i): R = (s^2+s-1)(s^2+s-Q-2)/(2s(s-1)); the factors are "
            "coprime, so Q = s^2+s-2-2*alpha*s(s-1) and R = alpha(s^2+s-1)",
            {"values": [s * s + s - 1, 2 * s * (s - 1)], "equals": 1},
            math.gcd(abs(s * s + s - 1), abs(2 * s * (s - 1))) == 1,
        )
    )
    steps.append(
        Step(
            "INEQUALITY",
            "s^2+s-1 > 0, so R >= 0 forces alpha >= 0",
            {"lhs": s * s + s - 1, "rhs": 0, "relation": ">"},
            s * s + s - 1 > 0,
        )
    )
    steps.append(
        Step(
            "INEQUALITY",
            "W = (1-alpha) * s(s^2+s-1)/(2s-1) with positive factor, so W >= 0 "
            "forces alpha <= 1",
            {"lhs": s * (s * s + s - 1) * (2 * s - 1), "rhs": 0, "relation": ">"},
            s * (s * s + s - 1) * (2 * s - 1) > 0,
        )
    )

    # Branch alpha = 1.
    q1 = -(s - 1) * (s - 2)
    if s == 2:
        r1 = s * s + s - 1
        steps.append(
            Step(
                "SUBSTITUTION",
                f"alpha = 1 at s = 2 gives (Q,R,W) = (0,{r1},0); relation (i) holds",
                {"lhs": lam * (lam - 0 - 1), "rhs": r1 * (k - lam - 1)},
                lam * (lam - 1) == r1 * (k - lam - 1),
            )
        )
        steps.append(
            Step(
                "GRAPH_CHECK",
                "s = 2: the only such graph is the triangular graph T(7), and "
                "none of its edges is 3-isoregular, measured directly",
                {"graph": "t7", "assertion": "no-3-isoregular-edge", "tuple": [0, r1, 0]},
                _validate_graph_check({"graph": "t7", "assertion": "no-3-isoregular-edge"}),
            )
        )
    else:
        steps.append(
            Step(
                "INEQUALITY",
                "alpha = 1 gives Q = -(s-1)(s-2) < 0 for s outside {1, 2}: excluded",
                {"lhs": q1, "rhs": 0, "relation": "<"},
                q1 < 0,
            )
        )

    # Branch alpha = 0.
    steps.append(
        Step(
            "SUBSTITUTION",
            "alpha = 0: 8s(s^2+s-1) = (2s-1)(4s^2+6s-1) - 1, so "
            "(2s-1) | s(s^2+s-1) would force (2s-1) | 1",
            {"lhs": 8 * s * (s * s + s - 1), "rhs": (2 * s - 1) * (4 * s * s + 6 * s - 1) - 1},
            8 * s * (s * s + s - 1) == (2 * s - 1) * (4 * s * s + 6 * s - 1) - 1,
        )
    )
    steps.append(
        Step(
            "GCD",
            "gcd(8, 2s-1) = 1",
            {"values": [8, 2 * s - 1], "equals": 1},
            math.gcd(8, abs(2 * s - 1)) == 1,
        )
    )
    steps.append(
        Step(
            "DIVISIBILITY",
            "2s-1 does not divide 1: alpha = 0 excluded",
            {"value": 1, "divisor": 2 * s - 1, "divides": False},
            1 % (2 * s - 1) != 0,
        )
    )
    oracle = _tri_oracle(p, steps)
    return Instance(s, p, CONTRADICTION, tuple(steps), oracle=oracle)


# ---------------------------------------------------------------------------
# Range certificates, claims, replay

_CERTIFIERS = {
    "bicirc-odd": certify_bicirc_odd,
    "leung-ma-b": certify_family_b,
    "leung-ma-c": certify_family_c,
    "tri-family-1": certify_tri_family1,
    "tri-family-2": certify_tri_family2,
}


def certify_range(claim: str, indices: list[int]) -> Certificate:
    certifier = _CERTIFIERS.get(claim)
    if certifier is None:
        raise ValueError(f"unknown claim {claim!r}; known: {sorted(_CERTIFIERS)}")
    instances = tuple(certifier(i) for i in indices)
    return Certificate(claim, tuple(indices), instances)


def claim_holds(cert: Certificate) -> bool:
    """The family-level statement each certificate is meant to establish."""
    for inst in cert.instances:
        if cert.claim == "tri-family-1":
            if inst.index == -1:
                if inst.verdict != SOLUTION or inst.solution != {"Q": 0, "R": 0, "W": 1}:
                    return False
            elif inst.verdict == SOLUTION:
                return False
        elif cert.claim == "tri-family-2":
            if inst.index in (-1, 0, 1):
                if inst.verdict != DEGENERATE:
                    return False
            elif inst.verdict != CONTRADICTION:
                return False
        else:
            if inst.verdict != CONTRADICTION:
                return False
    return True


@dataclass(frozen=True)
class ReplayResult:
    ok: bool
    mismatches: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def replay_certificate(obj) -> ReplayResult:
    """Re-validate a serialized certificate: every recorded step is recomputed
    from its data, and every instance is regenerated and compared."""
    cert = obj if isinstance(obj, Certificate) else Certificate.from_json(obj)
    problems = []
    certifier = _CERTIFIERS.get(cert.claim)
    if certifier is None:
        return ReplayResult(False, (f"unknown claim {cert.claim!r}",))
    if tuple(i.index for i in cert.instances) != cert.indices:
        problems.append("instance indices disagree with the declared range")
    for inst in cert.instances:
        for pos, step in enumerate(inst.steps):
            if not step.holds:
                problems.append(f"index {inst.index}: step {pos} recorded as failing")
            elif not validate_step(step):
                problems.append(f"index {inst.index}: step {pos} does not revalidate")
        regenerated = certifier(inst.index)
        if regenerated.to_json() != inst.to_json():
            problems.append(f"index {inst.index}: regeneration differs from record")
    return ReplayResult(not problems, tuple(problems))
