"""Registry of provable bounds and the harness that checks them on instances.

Every check has a stable id, a hypothesis test, and two integer sides to
compare. Checks whose statement divides by 2 or 3 are compared with both
sides scaled by 6, so everything stays in exact integer arithmetic; the
record's ``scale`` field says which convention applies. A failed hypothesis
produces a skipped record, never a vacuous pass, and a solver running out of
its node budget produces a skipped record with the reason, never a guessed
value.

For two-sided statements the record carries the primary inequality in
``lhs``/``rhs`` and folds the companion side into ``holds`` with the numbers
spelled out in ``note``.

Binary checks read their orientation from the argument order: ``g`` plays
the role the statement's hypotheses constrain, ``h`` the other. Run the pair
both ways to cover both orientations; ``run_suite`` does so by walking all
ordered pairs of its corpus.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass
from typing import Callable, Optional

from .config import DEFAULT_SUITE_BUDGET
from .constructions import case_table_labels, validate_rdf
from .errors import BudgetExceeded, CapacityError, ParameterError
from .families import complete, cycle, hypercube, path, random_graph, spider, star
from .graph6 import write_graph6
from .graphs import (
    CARTESIAN,
    STRONG,
    Graph,
    components,
    from_edges,
    is_connected,
    is_cycle_graph,
    is_path_graph,
    product,
)
from .solvers import (
    domination_number,
    efficient_dominating_sets,
    enumerate_optimal_rdfs,
    roman_domination_number,
    two_packing_number,
)


# ---------------------------------------------------------------------------
# per-instance lazy invariant cache


class Env:
    """Memoized invariants for one instance (a graph, or an ordered pair)."""

    def __init__(self, g: Graph, h: Optional[Graph] = None, budget: Optional[int] = None):
        self.g = g
        self.h = h
        self.budget = budget
        self._memo: dict = {}

    def graph(self, x: str) -> Graph:
        gr = self.g if x == "g" else self.h
        if gr is None:
            raise ParameterError("binary check evaluated without a second graph")
        return gr

    def _get(self, key, fn):
        if key in self._memo:
            value = self._memo[key]
            if isinstance(value, Exception):
                raise value
            return value
        try:
            value = fn()
        except (BudgetExceeded, CapacityError) as exc:
            self._memo[key] = exc
            raise
        self._memo[key] = value
        return value

    # -- factor invariants

    def nn(self, x: str) -> int:
        return self.graph(x).n

    def edge_count(self, x: str) -> int:
        return self.graph(x).edge_count()

    def gamma(self, x: str) -> int:
        return self._get(("gamma", x), lambda: domination_number(self.graph(x), self.budget).value)

    def gammar(self, x: str) -> int:
        return self._get(
            ("gammar", x), lambda: roman_domination_number(self.graph(x), self.budget).value
        )

    def p2(self, x: str) -> int:
        return self._get(("p2", x), lambda: two_packing_number(self.graph(x), self.budget).value)

    def in_f(self, x: str) -> bool:
        return self._get(
            ("in_f", x), lambda: bool(efficient_dominating_sets(self.graph(x), self.budget))
        )

    def roman(self, x: str) -> bool:
        return self.gammar(x) == 2 * self.gamma(x)

    def optima(self, x: str):
        return self._get(
            ("optima", x), lambda: enumerate_optimal_rdfs(self.graph(x), budget=self.budget)
        )

    def connected(self, x: str) -> bool:
        return is_connected(self.graph(x))

    def comp_gt2(self, x: str) -> bool:
        return any(c.bit_count() > 2 for c in components(self.graph(x)))

    def fulldeg(self, x: str) -> bool:
        want = self.nn(x) - self.gamma(x)
        return any(d == want for d in self.graph(x).degrees())

    def delta(self, x: str) -> int:
        return min(self.graph(x).degrees())

    def regular(self, x: str) -> bool:
        ds = self.graph(x).degrees()
        return min(ds) == max(ds)

    def max_b2(self, x: str) -> tuple[int, str]:
        """Largest 2-set size over optimal Roman functions, with selection mode."""
        try:
            return max(f.b2.bit_count() for f in self.optima(x)), "enumerated"
        except CapacityError:
            fn = self._get(
                ("gammar_fn", x),
                lambda: roman_domination_number(self.graph(x), self.budget).witness,
            )
            return fn.b2.bit_count(), "solver-witness"

    def max_a2b2(self) -> tuple[int, str]:
        a, mode_a = self.max_b2("g")
        b, mode_b = self.max_b2("h")
        return a * b, f"g:{mode_a},h:{mode_b}"

    # -- product invariants

    def prod(self, kind: str) -> Graph:
        return self._get(("prod", kind), lambda: product(self.g, self.h, kind))

    def gamma_prod(self, kind: str) -> int:
        return self._get(
            ("gamma_prod", kind), lambda: domination_number(self.prod(kind), self.budget).value
        )

    def gammar_prod(self, kind: str) -> int:
        return self._get(
            ("gammar_prod", kind),
            lambda: roman_domination_number(self.prod(kind), self.budget).value,
        )

    def prod_k2(self) -> Graph:
        return self._get(("prod_k2",), lambda: product(self.g, complete(2), CARTESIAN))

    def gammar_k2(self) -> int:
        return self._get(
            ("gammar_k2",), lambda: roman_domination_number(self.prod_k2(), self.budget).value
        )

    def witness_payload(self) -> dict:
        """Serializable snapshot of everything solved so far, for violations."""
        out: dict = {"g": write_graph6(self.g)}
        if self.h is not None:
            out["h"] = write_graph6(self.h)
        for key, value in sorted(self._memo.items(), key=lambda kv: repr(kv[0])):
            if isinstance(value, Exception):
                continue
            name = "_".join(str(part) for part in key)
            if isinstance(value, Graph):
                out[name] = write_graph6(value)
            elif isinstance(value, (int, bool)):
                out[name] = value
        return out


# ---------------------------------------------------------------------------
# the registry


@dataclass(frozen=True)
class TheoremSpec:
    tid: str
    kind: Optional[str]  # None = unary, else the product the check runs on
    scale: int
    statement: str
    hypothesis: Callable[[Env], tuple[bool, str]]
    sides: Callable[[Env], tuple[str, int, int]]
    secondary: Optional[Callable[[Env], tuple[bool, str]]] = None


def _no_hyp(_env: Env) -> tuple[bool, str]:
    return True, "no hypotheses"


def _hyp_in_f(env: Env) -> tuple[bool, str]:
    if env.in_f("g"):
        return True, "g has an efficient dominating set"
    return False, "g has no efficient dominating set"


def _hyp_comp_gt2(env: Env) -> tuple[bool, str]:
    if env.comp_gt2("g"):
        return True, "g has a component of order > 2"
    return False, "every component of g has order <= 2"


def _pncn_coefficient(n: int) -> int:
    if n % 3 == 1:
        return (2 * n + 1) // 3
    return 2 * ((n + 2) // 3)


def _registry() -> list[TheoremSpec]:
    specs = [
        TheoremSpec(
            "L1-sandwich",
            None,
            1,
            "gamma(G) <= gamma_R(G) <= 2*gamma(G)",
            _no_hyp,
            lambda e: ("<=", e.gammar("g"), 2 * e.gamma("g")),
            lambda e: (
                e.gamma("g") <= e.gammar("g"),
                f"lower side gamma(G)={e.gamma('g')} <= gamma_R(G)={e.gammar('g')}",
            ),
        ),
        TheoremSpec(
            "L2-B2",
            None,
            1,
            "every optimal Roman function has |B2| <= gamma_R(G) - gamma(G)",
            _no_hyp,
            lambda e: (
                "<=",
                max(f.b2.bit_count() for f in e.optima("g")),
                e.gammar("g") - e.gamma("g"),
            ),
        ),
        TheoremSpec(
            "L2-B1",
            None,
            1,
            "every optimal Roman function has |B1| >= 2*gamma(G) - gamma_R(G)",
            _no_hyp,
            lambda e: (
                ">=",
                min(f.b1.bit_count() for f in e.optima("g")),
                2 * e.gamma("g") - e.gammar("g"),
            ),
        ),
        TheoremSpec(
            "EQ-chino",
            CARTESIAN,
            1,
            "gamma_R(G x H) >= gamma(G)*gamma(H)",
            _no_hyp,
            lambda e: (">=", e.gammar_prod(CARTESIAN), e.gamma("g") * e.gamma("h")),
        ),
        TheoremSpec(
            "T-lower-i",
            CARTESIAN,
            6,
            "gamma_R(G x H) >= 2*gamma(G)*gamma_R(H)/3",
            _no_hyp,
            lambda e: (">=", 6 * e.gammar_prod(CARTESIAN), 4 * e.gamma("g") * e.gammar("h")),
        ),
        TheoremSpec(
            "T-lower-ii",
            CARTESIAN,
            6,
            "gamma_R(G x H) >= (gamma(G)*gamma_R(H) + gamma(G x H))/2",
            _no_hyp,
            lambda e: (
                ">=",
                6 * e.gammar_prod(CARTESIAN),
                3 * (e.gamma("g") * e.gammar("h") + e.gamma_prod(CARTESIAN)),
            ),
        ),
        TheoremSpec(
            "C-RR3",
            CARTESIAN,
            6,
            "gamma_R(G x H) >= gamma_R(G)*gamma_R(H)/3",
            _no_hyp,
            lambda e: (">=", 6 * e.gammar_prod(CARTESIAN), 2 * e.gammar("g") * e.gammar("h")),
        ),
        TheoremSpec(
            "C-gR3",
            CARTESIAN,
            6,
            "gamma(G x H) >= gamma(G)*gamma_R(H)/3",
            _no_hyp,
            lambda e: (">=", 6 * e.gamma_prod(CARTESIAN), 2 * e.gamma("g") * e.gammar("h")),
        ),
        TheoremSpec(
            "EQ-casi-vizing",
            CARTESIAN,
            6,
            "gamma(G x H) >= gamma(G)*gamma(H)/2",
            _no_hyp,
            lambda e: (">=", 6 * e.gamma_prod(CARTESIAN), 3 * e.gamma("g") * e.gamma("h")),
        ),
        TheoremSpec(
            "R-improved-vizing",
            CARTESIAN,
            6,
            "gamma_R(H) > 3*gamma(H)/2 implies gamma(G x H) >= gamma(G)*gamma(H)/2 + gamma(G)/3",
            lambda e: (
                (True, "gamma_R(h) > 3*gamma(h)/2")
                if 2 * e.gammar("h") > 3 * e.gamma("h")
                else (False, "gamma_R(h) <= 3*gamma(h)/2")
            ),
            lambda e: (
                ">=",
                6 * e.gamma_prod(CARTESIAN),
                3 * e.gamma("g") * e.gamma("h") + 2 * e.gamma("g"),
            ),
        ),
        TheoremSpec(
            "C-roman-i",
            CARTESIAN,
            6,
            "H Roman implies gamma_R(G x H) >= 4*gamma(G)*gamma(H)/3",
            lambda e: (True, "h is Roman") if e.roman("h") else (False, "h is not Roman"),
            lambda e: (">=", 6 * e.gammar_prod(CARTESIAN), 8 * e.gamma("g") * e.gamma("h")),
        ),
        TheoremSpec(
            "C-roman-ii",
            CARTESIAN,
            6,
            "H Roman implies gamma(G x H) >= 2*gamma(G)*gamma(H)/3",
            lambda e: (True, "h is Roman") if e.roman("h") else (False, "h is not Roman"),
            lambda e: (">=", 6 * e.gamma_prod(CARTESIAN), 4 * e.gamma("g") * e.gamma("h")),
        ),
        TheoremSpec(
            "C-F-halfmax",
            CARTESIAN,
            6,
            "g efficiently dominatable implies gamma_R(G x H) >= "
            "max(gamma(G)*(gamma_R(H)+gamma(H)), gamma(H)*(gamma_R(G)+gamma(G)))/2",
            _hyp_in_f,
            lambda e: (
                ">=",
                6 * e.gammar_prod(CARTESIAN),
                3
                * max(
                    e.gamma("g") * (e.gammar("h") + e.gamma("h")),
                    e.gamma("h") * (e.gammar("g") + e.gamma("g")),
                ),
            ),
        ),
        TheoremSpec(
            "T-F-lower",
            CARTESIAN,
            1,
            "g efficiently dominatable implies gamma_R(G x H) >= gamma(G)*gamma_R(H)",
            _hyp_in_f,
            lambda e: (">=", e.gammar_prod(CARTESIAN), e.gamma("g") * e.gammar("h")),
        ),
        TheoremSpec(
            "C-F-roman",
            CARTESIAN,
            1,
            "g efficiently dominatable and H Roman imply gamma_R(G x H) >= 2*gamma(G)*gamma(H)",
            lambda e: (
                (False, "g has no efficient dominating set")
                if not e.in_f("g")
                else (True, "g in F, h Roman") if e.roman("h") else (False, "h is not Roman")
            ),
            lambda e: (">=", e.gammar_prod(CARTESIAN), 2 * e.gamma("g") * e.gamma("h")),
        ),
        TheoremSpec(
            "T-superior",
            CARTESIAN,
            1,
            "gamma_R(G x H) <= min(n1*gamma_R(H), n2*gamma_R(G))",
            _no_hyp,
            lambda e: (
                "<=",
                e.gammar_prod(CARTESIAN),
                min(e.nn("g") * e.gammar("h"), e.nn("h") * e.gammar("g")),
            ),
        ),
        TheoremSpec(
            "C-superior-2g",
            CARTESIAN,
            1,
            "gamma_R(G x H) <= 2*min(n1*gamma(H), n2*gamma(G))",
            _no_hyp,
            lambda e: (
                "<=",
                e.gammar_prod(CARTESIAN),
                2 * min(e.nn("g") * e.gamma("h"), e.nn("h") * e.gamma("g")),
            ),
        ),
        TheoremSpec(
            "T-eldek-i",
            CARTESIAN,
            1,
            "g with a component of order > 2 implies "
            "gamma_R(G x H) <= (n1+1)*gamma_R(H) - 2*gamma(H)",
            _hyp_comp_gt2,
            lambda e: (
                "<=",
                e.gammar_prod(CARTESIAN),
                (e.nn("g") + 1) * e.gammar("h") - 2 * e.gamma("h"),
            ),
        ),
        TheoremSpec(
            "T-eldek-ii",
            CARTESIAN,
            1,
            "g Roman implies gamma_R(G x H) <= "
            "2*n1*(gamma_R(H)-gamma(H)) + 2*gamma(G)*(2*gamma(H)-gamma_R(H))",
            lambda e: (True, "g is Roman") if e.roman("g") else (False, "g is not Roman"),
            lambda e: (
                "<=",
                e.gammar_prod(CARTESIAN),
                2 * e.nn("g") * (e.gammar("h") - e.gamma("h"))
                + 2 * e.gamma("g") * (2 * e.gamma("h") - e.gammar("h")),
            ),
        ),
        TheoremSpec(
            "C-nonroman",
            CARTESIAN,
            1,
            "g with a component of order > 2 and H not Roman imply "
            "gamma_R(G x H) <= n1*gamma_R(H) - 1",
            lambda e: (
                (False, "every component of g has order <= 2")
                if not e.comp_gt2("g")
                else (False, "h is Roman") if e.roman("h") else (True, "component > 2, h not Roman")
            ),
            lambda e: ("<=", e.gammar_prod(CARTESIAN), e.nn("g") * e.gammar("h") - 1),
        ),
        TheoremSpec(
            "P-gamma-plus-1",
            None,
            1,
            "connected G of order >= 2: gamma_R(G) = gamma(G)+1 iff "
            "some vertex has degree n - gamma(G)",
            lambda e: (
                (False, "g is not connected")
                if not e.connected("g")
                else (False, "single vertex") if e.nn("g") < 2 else (True, "g connected, n >= 2")
            ),
            lambda e: (
                ("==", e.gammar("g"), e.gamma("g") + 1)
                if e.fulldeg("g")
                else (">=", e.gammar("g"), e.gamma("g") + 2)
            ),
        ),
        TheoremSpec(
            "P-corochulo",
            CARTESIAN,
            1,
            "g with a component of order > 2, h connected with a vertex of degree "
            "n2 - gamma(H): gamma_R(G x H) <= n1*(gamma(H)+1) - gamma(H) + 1",
            lambda e: (
                (False, "every component of g has order <= 2")
                if not e.comp_gt2("g")
                else (False, "h is not connected")
                if not e.connected("h")
                else (True, "component > 2; h has a degree n2-gamma(h) vertex")
                if e.fulldeg("h")
                else (False, "h has no vertex of degree n2 - gamma(h)")
            ),
            lambda e: (
                "<=",
                e.gammar_prod(CARTESIAN),
                e.nn("g") * (e.gamma("h") + 1) - e.gamma("h") + 1,
            ),
        ),
        TheoremSpec(
            "T-flojito",
            CARTESIAN,
            1,
            "gamma_R(G x H) <= 2*gamma(G)*gamma(H) + (n1-gamma(G))*(n2-gamma(H))",
            _no_hyp,
            lambda e: (
                "<=",
                e.gammar_prod(CARTESIAN),
                2 * e.gamma("g") * e.gamma("h")
                + (e.nn("g") - e.gamma("g")) * (e.nn("h") - e.gamma("h")),
            ),
        ),
        TheoremSpec(
            "R-F-regular",
            None,
            1,
            "g efficiently dominatable: gamma(G)*(delta+1) <= n, with equality when regular",
            _hyp_in_f,
            lambda e: (
                "==" if e.regular("g") else "<=",
                e.gamma("g") * (e.delta("g") + 1),
                e.nn("g"),
            ),
        ),
        TheoremSpec(
            "P-F-K2",
            None,
            1,
            "delta-regular efficiently dominatable g: "
            "2*n/(delta+1) <= gamma_R(G x K2) <= 4*n/(delta+1)",
            lambda e: (
                (False, "g has no efficient dominating set")
                if not e.in_f("g")
                else (True, "g regular and in F") if e.regular("g") else (False, "g is not regular")
            ),
            lambda e: ("<=", e.gammar_k2() * (e.delta("g") + 1), 4 * e.nn("g")),
            lambda e: (
                2 * e.nn("g") <= e.gammar_k2() * (e.delta("g") + 1),
                f"lower side 2n={2 * e.nn('g')} <= "
                f"gamma_R(GxK2)*(delta+1)={e.gammar_k2() * (e.delta('g') + 1)}",
            ),
        ),
        TheoremSpec(
            "T-strong-sandwich",
            STRONG,
            1,
            "max(P2(G)*gamma(H), gamma(G)*P2(H)) <= gamma(G strong H) <= gamma(G)*gamma(H)",
            _no_hyp,
            lambda e: (
                "<=",
                max(e.p2("g") * e.gamma("h"), e.gamma("g") * e.p2("h")),
                e.gamma_prod(STRONG),
            ),
            lambda e: (
                e.gamma_prod(STRONG) <= e.gamma("g") * e.gamma("h"),
                f"upper side gamma(product)={e.gamma_prod(STRONG)} <= "
                f"gamma(G)*gamma(H)={e.gamma('g') * e.gamma('h')}",
            ),
        ),
        TheoremSpec(
            "C-strong-F-eq",
            STRONG,
            1,
            "g efficiently dominatable implies gamma(G strong H) = gamma(G)*gamma(H)",
            _hyp_in_f,
            lambda e: ("==", e.gamma_prod(STRONG), e.gamma("g") * e.gamma("h")),
        ),
        TheoremSpec(
            "C-coroloco",
            STRONG,
            1,
            "max(P2(G)*gamma(H), gamma(G)*P2(H)) <= gamma_R(G strong H) <= 2*gamma(G)*gamma(H)",
            _no_hyp,
            lambda e: ("<=", e.gammar_prod(STRONG), 2 * e.gamma("g") * e.gamma("h")),
            lambda e: (
                max(e.p2("g") * e.gamma("h"), e.gamma("g") * e.p2("h")) <= e.gammar_prod(STRONG),
                f"lower side max(P2*gamma)={max(e.p2('g') * e.gamma('h'), e.gamma('g') * e.p2('h'))} "
                f"<= gamma_R(product)={e.gammar_prod(STRONG)}",
            ),
        ),
        TheoremSpec(
            "T-strong-minus",
            STRONG,
            1,
            "gamma_R(G strong H) <= gamma_R(G)*gamma_R(H) - 2*|A2|*|B2| "
            "for optimal factor functions; checked with |A2|*|B2| maximized",
            _no_hyp,
            lambda e: (
                "<=",
                e.gammar_prod(STRONG),
                e.gammar("g") * e.gammar("h") - 2 * e.max_a2b2()[0],
            ),
            lambda e: (True, f"2-set selection {e.max_a2b2()[1]}"),
        ),
        TheoremSpec(
            "C-strong-minus-2",
            STRONG,
            1,
            "G and H with an edge each imply gamma_R(G strong H) <= gamma_R(G)*gamma_R(H) - 2",
            lambda e: (
                (True, "both factors have an edge")
                if e.edge_count("g") >= 1 and e.edge_count("h") >= 1
                else (False, "a factor has no edges")
            ),
            lambda e: ("<=", e.gammar_prod(STRONG), e.gammar("g") * e.gammar("h") - 2),
        ),
        TheoremSpec(
            "C-strong-pncn",
            STRONG,
            1,
            "G with an edge, H a path or cycle of order n: gamma_R(G strong H) <= "
            "c(n)*gamma_R(G) - 2*floor(n/3) with c(n) = (2n+1)/3 when n = 1 mod 3, "
            "else 2*ceil(n/3)",
            lambda e: (
                (False, "g has no edges")
                if e.edge_count("g") < 1
                else (True, "g has an edge; h is a path or cycle")
                if is_path_graph(e.graph("h")) or is_cycle_graph(e.graph("h"))
                else (False, "h is neither a path nor a cycle")
            ),
            lambda e: (
                "<=",
                e.gammar_prod(STRONG),
                _pncn_coefficient(e.nn("h")) * e.gammar("g") - 2 * (e.nn("h") // 3),
            ),
        ),
        TheoremSpec(
            "T-strong-F-lower",
            STRONG,
            1,
            "g efficiently dominatable implies gamma_R(G strong H) >= gamma(G)*gamma_R(H)",
            _hyp_in_f,
            lambda e: (">=", e.gammar_prod(STRONG), e.gamma("g") * e.gammar("h")),
        ),
        TheoremSpec(
            "C-strong-roman-closed",
            STRONG,
            1,
            "g efficiently dominatable and H Roman imply G strong H is Roman",
            lambda e: (
                (False, "g has no efficient dominating set")
                if not e.in_f("g")
                else (True, "g in F, h Roman") if e.roman("h") else (False, "h is not Roman")
            ),
            lambda e: ("==", e.gammar_prod(STRONG), 2 * e.gamma_prod(STRONG)),
        ),
    ]
    return specs


_SPECS = _registry()
THEOREMS: dict[str, TheoremSpec] = {s.tid: s for s in _SPECS}
THEOREM_ORDER: tuple[str, ...] = tuple(s.tid for s in _SPECS)
THEOREM_STATEMENTS: dict[str, str] = {s.tid: s.statement for s in _SPECS}


def resolve_theorem_ids(tokens: list[str]) -> list[str]:
    """Map exact ids or unambiguous prefixes to registry ids, in registry order."""
    chosen: set[str] = set()
    for token in tokens:
        if token in THEOREMS:
            chosen.add(token)
            continue
        hits = [tid for tid in THEOREM_ORDER if tid.startswith(token)]
        if not hits:
            raise ParameterError(f"unknown theorem id {token!r}")
        if len(hits) > 1:
            raise ParameterError(f"theorem id prefix {token!r} is ambiguous: {', '.join(hits)}")
        chosen.add(hits[0])
    return [tid for tid in THEOREM_ORDER if tid in chosen]


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class BoundRecord:
    theorem: str
    kind: str
    g: str
    h: Optional[str]
    status: str  # checked | hypothesis-skipped | budget-skipped
    hypotheses_met: Optional[bool]
    reason: str
    scale: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    relation: Optional[str] = None
    holds: Optional[bool] = None
    tight: Optional[bool] = None
    note: Optional[str] = None
    witnesses: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "kind": self.kind,
            "g": self.g,
            "h": self.h,
            "status": self.status,
            "hypotheses_met": self.hypotheses_met,
            "reason": self.reason,
        }
        if self.status == "checked":
            out.update(
                scale=self.scale,
                lhs=self.lhs,
                rhs=self.rhs,
                relation=self.relation,
                holds=self.holds,
                tight=self.tight,
                note=self.note,
            )
            if self.witnesses is not None:
                out["witnesses"] = self.witnesses
        return out


_REL = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
}


def _evaluate_env(tid: str, env: Env) -> BoundRecord:
    spec = THEOREMS[tid]
    kind = spec.kind or "unary"
    gname = env.g.name()
    hname = env.h.name() if env.h is not None else None

    def skipped(status: str, met: Optional[bool], reason: str) -> BoundRecord:
        return BoundRecord(tid, kind, gname, hname, status, met, reason)

    try:
        met, reason = spec.hypothesis(env)
    except BudgetExceeded as exc:
        return skipped("budget-skipped", None, f"hypothesis check: {exc}")
    except CapacityError as exc:
        return skipped("budget-skipped", None, f"capacity: {exc}")
    if not met:
        return skipped("hypothesis-skipped", False, reason)
    try:
        relation, lhs, rhs = spec.sides(env)
        if spec.secondary is not None:
            sec_ok, note = spec.secondary(env)
        else:
            sec_ok, note = True, None
    except BudgetExceeded as exc:
        return skipped("budget-skipped", True, f"{reason}; {exc}")
    except CapacityError as exc:
        return skipped("budget-skipped", True, f"capacity: {exc}")
    holds = _REL[relation](lhs, rhs) and sec_ok
    witnesses = None if holds else env.witness_payload()
    return BoundRecord(
        tid,
        kind,
        gname,
        hname,
        "checked",
        True,
        reason,
        spec.scale,
        lhs,
        rhs,
        relation,
        holds,
        lhs == rhs,
        note,
        witnesses,
    )


def evaluate(
    theorem: str,
    g: Graph,
    h: Optional[Graph] = None,
    budget: Optional[int] = None,
) -> BoundRecord:
    """Check one registered bound on one instance.

    Unary checks take only ``g``; product checks take the ordered pair
    (g, h), with g in the role the statement's hypotheses constrain.
    """
    ids = resolve_theorem_ids([theorem])
    spec = THEOREMS[ids[0]]
    if spec.kind is None and h is not None:
        raise ParameterError(f"{spec.tid} is a single-graph check")
    if spec.kind is not None and h is None:
        raise ParameterError(f"{spec.tid} needs two graphs")
    return _evaluate_env(spec.tid, Env(g, h, budget))


# ---------------------------------------------------------------------------
# corpora


def default_corpus() -> list[Graph]:
    """Small named families plus one disconnected instance."""
    graphs = [path(n) for n in range(2, 6)]
    graphs += [cycle(n) for n in range(3, 6)]
    graphs += [complete(n) for n in range(2, 5)]
    graphs += [star(2), star(3)]
    graphs += [spider(3, 1), hypercube(3)]
    graphs.append(from_edges(3, [(0, 1)], "K2+K1"))
    return graphs


def exhaustive_corpus(max_n: int) -> list[Graph]:
    """Every labeled graph on 1..max_n vertices, in edge-mask order.

    Edge bit k of the mask is pair (i, j) in graph6 column order: (0,1),
    (0,2), (1,2), (0,3), ...
    """
    if max_n < 1:
        raise ParameterError("exhaustive corpus needs max_n >= 1")
    pairs_by_n = {}
    out = []
    for n in range(1, max_n + 1):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        pairs_by_n[n] = pairs
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            out.append(from_edges(n, edges, f"G{n}#{mask}"))
    return out


def random_corpus(count: int, n_low: int, n_high: int, seed: int) -> list[Graph]:
    """``count`` random graphs with orders cycling n_low..n_high, p = 1/2."""
    if count < 1 or n_low < 1 or n_high < n_low:
        raise ParameterError("random corpus needs count >= 1 and 1 <= n_low <= n_high")
    span = n_high - n_low + 1
    return [random_graph(n_low + i % span, 1, 2, seed + i) for i in range(count)]


# ---------------------------------------------------------------------------
# suite runner


@dataclass(frozen=True)
class SuiteSpec:
    graphs: tuple[Graph, ...]
    theorems: tuple[str, ...] = THEOREM_ORDER
    products: tuple[str, ...] = (CARTESIAN, STRONG)
    budget: Optional[int] = DEFAULT_SUITE_BUDGET
    max_product: Optional[int] = None


def _run_item(args) -> list[dict]:
    kind, g, h, ids, budget = args
    env = Env(g, h, budget)
    return [_evaluate_env(tid, env).to_dict() for tid in ids]


def run_suite(spec: SuiteSpec, jobs: int = 1) -> dict:
    """Evaluate the requested checks over the corpus; deterministic output.

    Record order: unary checks per corpus graph, then Cartesian checks per
    ordered pair, then strong checks per ordered pair, each block in corpus
    order and registry order. The report never contains timestamps, and its
    bytes do not depend on ``jobs``.
    """
    unary_ids = [t for t in spec.theorems if THEOREMS[t].kind is None]
    items = []
    if unary_ids:
        for g in spec.graphs:
            items.append(("unary", g, None, unary_ids, spec.budget))
    for kind in (CARTESIAN, STRONG):
        if kind not in spec.products:
            continue
        ids = [t for t in spec.theorems if THEOREMS[t].kind == kind]
        if not ids:
            continue
        for g in spec.graphs:
            for h in spec.graphs:
                if spec.max_product is not None and g.n * h.n > spec.max_product:
                    continue
                items.append((kind, g, h, ids, spec.budget))
    if jobs > 1 and len(items) > 1:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            chunks = pool.map(_run_item, items, chunksize=1)
    else:
        chunks = [_run_item(item) for item in items]
    records = [rec for chunk in chunks for rec in chunk]
    summary = {
        "checked": sum(r["status"] == "checked" for r in records),
        "held": sum(r["status"] == "checked" and r["holds"] for r in records),
        "tight": sum(r["status"] == "checked" and r["tight"] for r in records),
        "hypothesis_skipped": sum(r["status"] == "hypothesis-skipped" for r in records),
        "budget_skipped": sum(r["status"] == "budget-skipped" for r in records),
    }
    return {
        "suite": {
            "theorems": list(spec.theorems),
            "products": list(spec.products),
            "budget": spec.budget,
            "max_product": spec.max_product,
        },
        "corpus": [g.name() for g in spec.graphs],
        "records": records,
        "summary": summary,
    }


def suite_ok(report: dict) -> bool:
    return report["summary"]["held"] == report["summary"]["checked"]


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


_CSV_COLUMNS = (
    "theorem",
    "kind",
    "g",
    "h",
    "status",
    "hypotheses_met",
    "reason",
    "scale",
    "lhs",
    "rhs",
    "relation",
    "holds",
    "tight",
    "note",
)


def report_to_csv(report: dict) -> str:
    """One row per record, witnesses omitted."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for rec in report["records"]:
        writer.writerow(["" if rec.get(col) is None else rec.get(col) for col in _CSV_COLUMNS])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# the path/cycle 2-set premise


@dataclass(frozen=True)
class PremiseReport:
    kind: str
    n: int
    floor_n3: int
    b2_sizes: tuple[int, ...]
    premise_holds: bool
    violating_labels: Optional[tuple[int, ...]]
    inequality_weight: int
    inequality_rhs: int
    inequality_holds: bool

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "floor_n3": self.floor_n3,
            "b2_sizes": list(self.b2_sizes),
            "premise_holds": self.premise_holds,
            "violating_labels": (
                None if self.violating_labels is None else list(self.violating_labels)
            ),
            "inequality_weight": self.inequality_weight,
            "inequality_rhs": self.inequality_rhs,
            "inequality_holds": self.inequality_holds,
        }


def check_pncn_premise(n: int, kind: str) -> PremiseReport:
    """Probe the claim that optimal path/cycle Roman functions all use
    floor(n/3) twos, separately from the bound that claim was used for.

    The bound itself, gamma_R(K2 strong H) <= c(n)*gamma_R(K2) - 2*floor(n/3),
    is re-derived constructively: take the case-table labeling built from an
    optimal function on H whose 2-set has exactly floor(n/3) vertices, check
    it is a valid Roman function, and compare its exact weight against the
    closed form. A premise violation therefore never silently taints the
    bound check.
    """
    if kind == "path":
        if n < 2:
            raise ParameterError("path premise check needs n >= 2")
        h = path(n)
    elif kind == "cycle":
        if n < 3:
            raise ParameterError("cycle premise check needs n >= 3")
        h = cycle(n)
    else:
        raise ParameterError(f"premise kind must be path or cycle, got {kind!r}")
    optima = enumerate_optimal_rdfs(h)
    floor = n // 3
    sizes = tuple(sorted({f.b2.bit_count() for f in optima}))
    violating = next((f.labels for f in optima if f.b2.bit_count() != floor), None)
    g = complete(2)
    f1 = max(enumerate_optimal_rdfs(g), key=lambda f: f.b2.bit_count())
    f2 = next(f for f in optima if f.b2.bit_count() == floor)
    rdf = case_table_labels(g.n, h.n, f1, f2)
    prod = product(g, h, STRONG)
    rhs = _pncn_coefficient(n) * 2 - 2 * floor
    holds = validate_rdf(prod, rdf) and rdf.weight <= rhs
    return PremiseReport(
        kind,
        n,
        floor,
        sizes,
        sizes == (floor,),
        violating,
        rdf.weight,
        rhs,
        holds,
    )
