"""
Axiom checks over the witness terms.

Every check returns WitnessReport objects. A global report passes when the
value of its formula covers the required open (ℝ by default); a node-local
report passes when its node lies in the value. Reports print as

    PASS|FAIL <axiom> <instance> <region>

with the instance written without spaces.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from topo_forcing.algebra.opens import EMPTY, FULL, OpenSet, format_opens
from topo_forcing.algebra.partition import BreakpointPartition
from topo_forcing.algebra.terms import (
    EMPTY_TERM,
    Grid,
    Term,
    atom,
    generic,
    ground_cut,
    nat_term,
    settle,
    singleton,
    successor,
)
from topo_forcing.semantics import Semantics, evaluator
from topo_forcing.syntax.context import Context
from topo_forcing.syntax.formula import (
    And,
    Eq,
    Forall,
    Formula,
    Implies,
    Mem,
    Or,
    Var,
    exists_in,
    iff,
    neg,
    substitute,
)
from topo_forcing.witnesses.constructors import (
    exp_candidate,
    function_formula,
    ground_functions,
    omega_term,
    pair_term,
    powerset_failure_demo,
    powerset_term,
    sep_term,
    settled_instances,
    subset_choices,
    union_term,
)

_Y = Var("y")
_W = Var("w")


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of one axiom instance."""

    axiom: str
    instance: str
    formula: Formula | None
    region: OpenSet
    required: OpenSet = FULL
    node: Fraction | None = None

    @property
    def passed(self) -> bool:
        if not self.required <= self.region:
            return False
        return self.node is None or self.node in self.region

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.axiom} {self.instance} {format_opens(self.region)}"

    def __str__(self) -> str:
        return self.line()


def _report(
    axiom: str,
    instance: str,
    phi: Formula,
    ctx: Context,
    semantics: Semantics,
    *,
    required: OpenSet = FULL,
    node: Fraction | None = None,
) -> WitnessReport:
    region = evaluator(ctx, semantics).value(phi)
    return WitnessReport(axiom, instance, phi, region, required, node)


def _membership_reports(
    axiom: str,
    label: str,
    formulas: Iterable[Formula],
    ctx: Context,
    semantics: Semantics,
) -> list[WitnessReport]:
    return [
        _report(axiom, f"{label},z={i}", phi, ctx, semantics) for i, phi in enumerate(formulas)
    ]


# -- axioms ----------------------------------------------------------------------


def check_pairing(
    left: Term, right: Term, ctx: Context, semantics: Semantics, label: str = "pair"
) -> list[WitnessReport]:
    """z ∈ {σ, τ} ↔ z = σ ∨ z = τ for every z in the context."""
    p = pair_term(left, right)
    return _membership_reports(
        "pairing",
        label,
        (iff(Mem(z, p), Or(Eq(z, left), Eq(z, right))) for z in ctx.terms),
        ctx,
        semantics,
    )


def check_union(
    sigma: Term, ctx: Context, semantics: Semantics, label: str = "union"
) -> list[WitnessReport]:
    """z ∈ ⋃σ ↔ ∃y ∈ σ. z ∈ y for every z in the context."""
    u = union_term(sigma, semantics)
    return _membership_reports(
        "union",
        label,
        (iff(Mem(z, u), exists_in(_Y, sigma, Mem(z, _Y))) for z in ctx.terms),
        ctx,
        semantics,
    )


def check_separation(
    sigma: Term,
    var: Var,
    body: Formula,
    ctx: Context,
    semantics: Semantics,
    label: str = "sep",
) -> list[WitnessReport]:
    """z ∈ {x ∈ σ | φ} ↔ z ∈ σ ∧ φ(z) for every z in the context."""
    s = sep_term(sigma, var, body, ctx, semantics)
    return _membership_reports(
        "separation",
        label,
        (iff(Mem(z, s), And(Mem(z, sigma), substitute(body, var, z))) for z in ctx.terms),
        ctx,
        semantics,
    )


def check_powerset(sigma: Term, ctx: Context, label: str = "power") -> list[WitnessReport]:
    """Every normal-form subset is in P(σ), and every member of P(σ) is a subset of σ."""
    p = powerset_term(sigma, ctx)
    reports = [
        _report("powerset", f"{label},subset={i}", Mem(subset, p), ctx, Semantics.STD)
        for i, subset in enumerate(subset_choices(sigma, ctx))
    ]
    reports.extend(
        _membership_reports(
            "powerset",
            label,
            (
                Implies(Mem(z, p), Forall(_W, Implies(Mem(_W, z), Mem(_W, sigma))))
                for z in ctx.terms
            ),
            ctx,
            Semantics.STD,
        )
    )
    return reports


def check_exponentiation(
    sigma: Term,
    tau: Term,
    ctx: Context,
    rank_slack: int = 3,
    label: str = "exp",
) -> list[WitnessReport]:
    """
    Settled coverage of the candidate exponent.

    For every sample point s and ground function h : σ^s → τ^s, ĥ is a member of
    C^s, and the number of functions is |τ^s| ^ |σ^s|. For ground σ and τ the
    candidate also forces ĥ ∈ C and "ĥ is a function" on all of ℝ.
    """
    c = exp_candidate(sigma, tau, ctx, rank_slack)
    reports: list[WitnessReport] = []
    for s, functions in settled_instances(sigma, tau):
        expected = count_functions(settle(sigma, s), settle(tau, s))
        reports.append(
            WitnessReport(
                "exponentiation",
                f"{label},s={s},count={len(functions)}/{expected}",
                None,
                FULL if len(functions) == expected else EMPTY,
            )
        )
        settled_c = settle(c, s)
        reports.extend(
            _report(
                "exponentiation", f"{label},s={s},h={i}", Mem(h, settled_c), ctx, Semantics.SETTLE
            )
            for i, h in enumerate(functions)
        )
    if sigma.is_ground and tau.is_ground:
        for i, h in enumerate(ground_functions(sigma, tau)):
            reports.append(
                _report("exponentiation", f"{label},mem={i}", Mem(h, c), ctx, Semantics.SETTLE)
            )
            reports.append(
                _report(
                    "exponentiation",
                    f"{label},fun={i}",
                    function_formula(h, sigma, tau),
                    ctx,
                    Semantics.SETTLE,
                )
            )
    return reports


def check_infinity(bound: int, ctx: Context, semantics: Semantics) -> list[WitnessReport]:
    """∅̂ ∈ ω̂ and n̂ ∈ ω̂ → succ(n̂) ∈ ω̂ below the bound."""
    omega = omega_term(bound)
    reports = [_report("infinity", "zero", Mem(EMPTY_TERM, omega), ctx, semantics)]
    for n in range(bound - 1):
        numeral = nat_term(n)
        phi = Implies(Mem(numeral, omega), Mem(successor(numeral), omega))
        reports.append(_report("infinity", f"succ={n}", phi, ctx, semantics))
    return reports


def count_functions(domain: Term, codomain: Term) -> int:
    """
    Count function graphs by brute force over subsets of domain × codomain.

    Products with more than 16 pairs fall back to |codomain| ^ |domain|.
    """
    if domain.is_atom or codomain.is_atom:
        return 0
    inputs, outputs = list(domain.members()), list(codomain.members())
    pairs = list(product(inputs, outputs))
    if len(pairs) > 16:
        return len(outputs) ** len(inputs)
    return sum(
        1
        for mask in range(1 << len(pairs))
        if all(
            sum(1 for i, (x, _) in enumerate(pairs) if mask >> i & 1 and x is d) == 1
            for d in inputs
        )
    )


# -- the generic real ------------------------------------------------------------


def refine_grid(grid: Grid, s: Fraction) -> Grid:
    """The grid with s added."""
    return grid.refine([s])


def cut_nodes(grid: Grid) -> tuple[Fraction, ...]:
    """Cell representatives strictly inside the hull of the grid."""
    return BreakpointPartition(grid.points).representatives[1:-1]


def check_left_cut(
    cut: Term,
    ctx: Context,
    semantics: Semantics,
    nodes: Iterable[Fraction] | None = None,
) -> list[WitnessReport]:
    """
    Located left cut checks for a generic term over ctx.grid.

    Boundedness and openness are node-local: at every node r strictly inside
    the grid hull, r ⊨ q̂_lo ∈ G ∧ q̂_hi ∉ G for the grid neighbours of r, and
    r ⊨ q̂' ∈ G' for q' halfway between q_lo and r on the grid refined by q'.
    Downward closure and locatedness must be forced by ℝ for every grid pair.
    """
    grid = ctx.grid
    points = grid.points
    reports: list[WitnessReport] = []
    for r in cut_nodes(grid) if nodes is None else nodes:
        lo, hi = bisect_left(points, r) - 1, bisect_right(points, r)
        if lo < 0 or hi >= len(points):
            reports.append(WitnessReport("bounded", f"r={r}", None, EMPTY, EMPTY, r))
            continue
        q_lo, q_hi = points[lo], points[hi]
        bounded = And(Mem(atom(q_lo), cut), neg(Mem(atom(q_hi), cut)))
        reports.append(
            _report(
                "bounded",
                f"r={r},lo={q_lo},hi={q_hi}",
                bounded,
                ctx,
                semantics,
                required=EMPTY,
                node=r,
            )
        )
        q_mid = (q_lo + r) / 2
        refined = generic(refine_grid(grid, q_mid))
        reports.append(
            _report(
                "open",
                f"r={r},q={q_lo},next={q_mid}",
                Mem(atom(q_mid), refined),
                ctx,
                semantics,
                required=EMPTY,
                node=r,
            )
        )
    for i, s in enumerate(points):
        for t in points[i + 1 :]:
            s_in, t_in = Mem(atom(s), cut), Mem(atom(t), cut)
            reports.append(
                _report("downward", f"s={s},t={t}", Implies(t_in, s_in), ctx, semantics)
            )
            reports.append(_report("located", f"s={s},t={t}", Or(s_in, neg(t_in)), ctx, semantics))
    return reports


def check_not_ground(cut: Term, ctx: Context, semantics: Semantics) -> list[WitnessReport]:
    """
    No open keeps forcing G = ĉ once the grid is refined.

    For every ground grid cut ĉ, each component J of max_eq(G, ĉ) has a
    representative s; on G' = generic(grid ∪ {s}) the open K = J ∩ (s, ∞) must
    force ŝ ∈ G', ŝ ∉ ĉ and G' ≠ ĉ. An empty max_eq(G, ĉ) passes outright.
    """
    grid = ctx.grid
    engine = evaluator(ctx, semantics)
    reports: list[WitnessReport] = []
    cuts = [ground_cut(grid, q) for q in grid] + [ground_cut(grid, grid.points[-1] + 1)]
    for k, candidate in enumerate(cuts):
        agree = engine.value(Eq(cut, candidate))
        if agree.is_empty:
            reports.append(
                WitnessReport("not-ground", f"cut={k}", Eq(cut, candidate), agree, EMPTY)
            )
            continue
        for component in agree.components():
            s = _component_point(component)
            refined = generic(refine_grid(grid, s))
            pinned = atom(s)
            phi = And(
                Mem(pinned, refined),
                And(neg(Mem(pinned, candidate)), neg(Eq(refined, candidate))),
            )
            reports.append(
                _report(
                    "not-ground",
                    f"cut={k},s={s}",
                    phi,
                    ctx,
                    semantics,
                    required=component & OpenSet.above(s),
                )
            )
    return reports


def _component_point(component: OpenSet) -> Fraction:
    """Midpoint of a bounded interval, one unit inside the finite end of a ray."""
    ((lo, hi),) = component.intervals
    if isinstance(lo, Fraction) and isinstance(hi, Fraction):
        return (lo + hi) / 2
    if isinstance(lo, Fraction):
        return lo + 1
    if isinstance(hi, Fraction):
        return hi - 1
    return Fraction(0)


def check_generic_settling(cut: Term, grid: Grid, semantics: Semantics) -> list[WitnessReport]:
    """settle(G, s) is the ground cut of the grid below s at every sample point."""
    ctx = Context()
    return [
        _report(
            "settle-generic",
            f"s={s}",
            Eq(settle(cut, s), ground_cut(grid, s)),
            ctx,
            semantics,
        )
        for s in BreakpointPartition(grid.points).sample_points
    ]


def check_demo(
    r: Fraction, samples: Iterable[Fraction], ctx: Context, semantics: Semantics
) -> list[WitnessReport]:
    """
    The fluctuating subset of 1.

    It settles to ∅̂ at s ≤ r and to 1̂ at s > r, and every member of it is a
    member of 1̂ on all of ℝ.
    """
    demo = powerset_failure_demo(r)
    one = singleton(EMPTY_TERM)
    reports = [
        _report(
            "demo-settle",
            f"r={r},s={s}",
            Eq(settle(demo, s), one if s > r else EMPTY_TERM),
            ctx,
            semantics,
        )
        for s in samples
    ]
    reports.extend(
        _membership_reports(
            "demo-subset",
            f"r={r}",
            (Implies(Mem(z, demo), Mem(z, one)) for z in ctx.terms),
            ctx,
            semantics,
        )
    )
    return reports
