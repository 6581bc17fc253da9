"""Named verification suites over enumerated inputs, and the prism
conjecture counterexample search.

Each statement id names one claim with a bounded hypothesis space.  Products
inside the exact cap are decided exactly (enumeration short-circuits on the
first size mismatch); larger products fall back to seeded sampling, which can
only return "consistent" or hard evidence of unequal maximal sets, and any
sampled instance flags the whole report as sampled.  Reports are
deterministic for fixed bounds and seeds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .certificates import Certificate
from .errors import BoundsTooLarge, UnknownStatement
from .graphio import (
    EnumFilter,
    GENERATOR_ORDER_CAP,
    enumerate_connected_graphs,
    parse_graph6,
    write_graph6,
)
from .graphs import (
    Graph,
    GirthValue,
    cartesian_product,
    girth,
    has_four_cycle,
    is_connected,
    named_graph,
    prism,
)
from .independence import (
    find_unequal_maximal_sets,
    independence_summary,
    is_extendable,
    isolatable,
    isolatable_vertices,
    random_maximal_independent_set,
)

MODE_EXACT = "exact"
MODE_SAMPLED = "sampled"


@dataclass(frozen=True)
class Bounds:
    """Instance-space limits; per-statement defaults fill unset fields."""

    max_order: int | None = None
    max_factor_order: int | None = None
    max_product_order: int | None = None
    exact_cap: int = 30
    samples: int = 1000
    seed: int = 0
    min_girth: GirthValue | None = None


@dataclass
class VerificationReport:
    statement: str
    input_space: str
    mode: str
    checked: int
    violations: list[dict]
    work_units: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_document(self) -> dict:
        return {
            "statement": self.statement,
            "input_space": self.input_space,
            "mode": self.mode,
            "checked": self.checked,
            "violations": self.violations,
            "work_units": self.work_units,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"statement:   {self.statement}",
            f"input space: {self.input_space}",
            f"mode:        {self.mode}",
            f"checked:     {self.checked}",
            f"work units:  {self.work_units}",
            f"violations:  {len(self.violations)}",
            f"result:      {'pass' if self.passed else 'FAIL'}",
        ]
        for v in self.violations:
            lines.append("violation:")
            for key in sorted(v):
                lines.append(f"  {key}: {v[key]}")
        return "\n".join(lines) + "\n"


class _Decider:
    """Exact-or-sampled well-coveredness decisions with deterministic cost
    accounting."""

    def __init__(self, bounds: Bounds):
        self.bounds = bounds
        self.work_units = 0
        self.sampled_any = False

    def well_covered(self, graph: Graph, *, force_exact: bool = False) -> bool | None:
        """True/False exactly when the order allows; None if sampling stayed
        consistent with well-coveredness (never a proof)."""
        if force_exact or graph.order <= self.bounds.exact_cap:
            self.work_units += 1
            return find_unequal_maximal_sets(graph, allow_large=True) is None
        self.sampled_any = True
        sizes = set()
        for i in range(self.bounds.samples):
            self.work_units += 1
            sizes.add(len(random_maximal_independent_set(graph, self.bounds.seed + i)))
            if len(sizes) > 1:
                return False  # hard evidence, exact verdict
        return None


def _graph_stream(order: int, **filters) -> Iterator[Graph]:
    return enumerate_connected_graphs(EnumFilter(order=order, **filters))


def _violation(reason: str, **fields) -> dict:
    out = {"reason": reason}
    out.update(fields)
    return out


def _wc_witness_text(graph: Graph) -> str | None:
    pair = find_unequal_maximal_sets(graph, allow_large=True)
    if pair is None:
        return None
    return Certificate.unequal_sets(*pair).to_text()


def _check_generator_bounds(*orders: int | None) -> None:
    for o in orders:
        if o is not None and o > GENERATOR_ORDER_CAP:
            raise BoundsTooLarge(
                f"built-in enumeration is capped at order {GENERATOR_ORDER_CAP}"
            )


def _is_k2(g: Graph) -> bool:
    return g.order == 2 and g.num_edges == 1


def _is_c5(g: Graph) -> bool:
    return g.order == 5 and is_connected(g) and all(d == 2 for d in g.degrees())


# --- statement runners ----------------------------------------------------------


def _run_thm_1_1(bounds: Bounds, decider: _Decider):
    """Both factors not well-covered => product not well-covered."""
    max_f = bounds.max_factor_order or 5
    _check_generator_bounds(max_f)
    factors = [
        g
        for order in range(2, max_f + 1)
        for g in _graph_stream(order)
        if find_unequal_maximal_sets(g) is not None
    ]
    cap = bounds.max_product_order or 30
    checked = 0
    violations = []
    for i, g in enumerate(factors):
        for h in factors[i:]:
            if g.order * h.order > cap:
                continue
            product, _ = cartesian_product(g, h)
            checked += 1
            verdict = decider.well_covered(product)
            if verdict is True:
                violations.append(
                    _violation(
                        "product of two non-well-covered factors is well-covered",
                        factor_g=write_graph6(g),
                        factor_h=write_graph6(h),
                    )
                )
    space = (
        f"pairs of connected non-well-covered graphs, orders 2..{max_f}, "
        f"product order <= {cap}"
    )
    return space, checked, violations


def _run_thm_2_2(bounds: Bounds, decider: _Decider):
    """In a well-covered graph, extendable = not isolatable, per vertex."""
    max_o = bounds.max_order or 8
    _check_generator_bounds(max_o)
    checked = 0
    violations = []
    for order in range(1, max_o + 1):
        for g in _graph_stream(order):
            decider.work_units += 1
            summary = independence_summary(g)
            if not summary.well_covered:
                continue
            checked += 1
            extendable = {x for x in range(order) if is_extendable(g, x)}
            not_isolatable = set(isolatable_vertices(g).complement())
            if extendable != not_isolatable:
                violations.append(
                    _violation(
                        "extendable set differs from complement of isolatable set",
                        graph=write_graph6(g),
                        extendable=sorted(extendable),
                        not_isolatable=sorted(not_isolatable),
                    )
                )
    space = f"well-covered connected graphs of order 1..{max_o}"
    return space, checked, violations


def _run_thm_2_4(bounds: Bounds, decider: _Decider):
    """Girth >= 4 and no isolatable vertex => well-covered."""
    max_o = bounds.max_order or 9
    _check_generator_bounds(max_o)
    checked = 0
    violations = []
    for order in range(1, max_o + 1):
        for g in _graph_stream(order, min_girth=4):
            decider.work_units += 1
            if len(isolatable_vertices(g)) > 0:
                continue
            checked += 1
            if decider.well_covered(g) is not True:
                violations.append(
                    _violation(
                        "girth >= 4 with no isolatable vertex but not well-covered",
                        graph=write_graph6(g),
                        certificate=_wc_witness_text(g),
                    )
                )
    space = f"connected graphs of girth >= 4, order 1..{max_o}, no isolatable vertex"
    return space, checked, violations


def _run_thm_3_1(bounds: Bounds, decider: _Decider):
    """Girth >= 5 factors: the only well-covered products are the 4-cycle and
    the pentagonal prism."""
    max_f = bounds.max_factor_order or 7
    _check_generator_bounds(max_f)
    cap = bounds.max_product_order or 30
    factors = [
        g for order in range(2, max_f + 1) for g in _graph_stream(order, min_girth=5)
    ]
    checked = 0
    violations = []
    for i, g in enumerate(factors):
        for h in factors[i:]:
            if g.order * h.order > cap:
                continue
            product, _ = cartesian_product(g, h)
            checked += 1
            allowed = (_is_k2(g) and _is_k2(h)) or (
                (_is_k2(g) and _is_c5(h)) or (_is_c5(g) and _is_k2(h))
            )
            verdict = decider.well_covered(product)
            if verdict is True and not allowed:
                violations.append(
                    _violation(
                        "unexpected well-covered product of girth-5 factors",
                        factor_g=write_graph6(g),
                        factor_h=write_graph6(h),
                    )
                )
            elif verdict is False and allowed:
                violations.append(
                    _violation(
                        "expected well-covered product is not",
                        factor_g=write_graph6(g),
                        factor_h=write_graph6(h),
                        certificate=_wc_witness_text(product),
                    )
                )
    space = (
        f"pairs of nontrivial connected graphs of girth >= 5, orders 2..{max_f}, "
        f"product order <= {cap}"
    )
    return space, checked, violations


def _run_cor_3_6(bounds: Bounds, decider: _Decider):
    """Girth >= 4 factors of order >= 3: the product is never well-covered."""
    max_f = bounds.max_factor_order or 6
    _check_generator_bounds(max_f)
    cap = bounds.max_product_order or 30
    factors = [
        g for order in range(3, max_f + 1) for g in _graph_stream(order, min_girth=4)
    ]
    checked = 0
    violations = []
    for i, g in enumerate(factors):
        for h in factors[i:]:
            if g.order * h.order > cap:
                continue
            product, _ = cartesian_product(g, h)
            checked += 1
            if decider.well_covered(product) is True:
                violations.append(
                    _violation(
                        "well-covered product with neither factor a single edge",
                        factor_g=write_graph6(g),
                        factor_h=write_graph6(h),
                    )
                )
    space = (
        f"pairs of connected girth >= 4 graphs of orders 3..{max_f}, "
        f"product order <= {cap}"
    )
    return space, checked, violations


def _run_thm_3_8(bounds: Bounds, decider: _Decider):
    """Well-covered with no isolatable vertex => well-covered prism."""
    max_o = bounds.max_order or 8
    _check_generator_bounds(max_o)
    checked = 0
    violations = []
    filters = {}
    if bounds.min_girth is not None:
        filters["min_girth"] = bounds.min_girth
    for order in range(1, max_o + 1):
        for g in _graph_stream(order, **filters):
            decider.work_units += 1
            if find_unequal_maximal_sets(g) is not None:
                continue
            if len(isolatable_vertices(g)) > 0:
                continue
            checked += 1
            p, _ = prism(g)
            if decider.well_covered(p) is not True:
                violations.append(
                    _violation(
                        "well-covered base without isolatable vertices has a "
                        "non-well-covered prism",
                        graph=write_graph6(g),
                        certificate=_wc_witness_text(p),
                    )
                )
    girth_note = (
        "" if bounds.min_girth is None else f", girth >= {bounds.min_girth}"
    )
    space = (
        f"well-covered connected graphs with no isolatable vertex, "
        f"order 1..{max_o}{girth_note}"
    )
    return space, checked, violations


def _run_cor_3_9(bounds: Bounds, decider: _Decider):
    """Girth exactly 4 and no isolatable vertex => well-covered prism."""
    max_o = bounds.max_order or 9
    _check_generator_bounds(max_o)
    checked = 0
    violations = []
    for order in range(1, max_o + 1):
        for g in _graph_stream(order, min_girth=4, must_contain_c4=True):
            decider.work_units += 1
            if len(isolatable_vertices(g)) > 0:
                continue
            checked += 1
            p, _ = prism(g)
            if decider.well_covered(p) is not True:
                violations.append(
                    _violation(
                        "girth-4 base without isolatable vertices has a "
                        "non-well-covered prism",
                        graph=write_graph6(g),
                        certificate=_wc_witness_text(p),
                    )
                )
    space = f"connected graphs of girth 4 with no isolatable vertex, order 1..{max_o}"
    return space, checked, violations


def _run_tv_cycles(bounds: Bounds, decider: _Decider):
    """Products of two cycles: well-covered iff one cycle is the triangle."""
    c3_max = bounds.max_factor_order or 7
    mixed_max = min(6, c3_max)
    checked = 0
    violations = []
    c3 = named_graph("cycle", 3)
    # all verdicts here are exact: the largest instance (36 vertices)
    # deliberately overrides the usual cap, and the negative rows
    # short-circuit long before exhausting their enumerations
    for n in range(3, c3_max + 1):
        product, _ = cartesian_product(c3, named_graph("cycle", n))
        checked += 1
        if decider.well_covered(product, force_exact=True) is not True:
            violations.append(
                _violation(
                    "triangle-times-cycle product is not well-covered",
                    factors=f"C3 x C{n}",
                    certificate=_wc_witness_text(product),
                )
            )
    for m in range(4, mixed_max + 1):
        for n in range(m, mixed_max + 1):
            product, _ = cartesian_product(
                named_graph("cycle", m), named_graph("cycle", n)
            )
            checked += 1
            if decider.well_covered(product, force_exact=True) is not False:
                violations.append(
                    _violation(
                        "triangle-free cycle product is well-covered",
                        factors=f"C{m} x C{n}",
                    )
                )
    space = f"C3 x Cn for n in 3..{c3_max}; Cm x Cn for 4 <= m <= n <= {mixed_max}"
    return space, checked, violations


def _run_kn_product(bounds: Bounds, decider: _Decider):
    """K_n x H is well-covered with alpha = |V(H)| whenever n > Delta(H)."""
    max_h = bounds.max_factor_order or 5
    _check_generator_bounds(max_h)
    checked = 0
    violations = []
    for n in range(3, 6):
        kn = named_graph("complete", n)
        for order in range(1, max_h + 1):
            for h in _graph_stream(order):
                if max(h.degrees()) >= n:
                    continue
                product, _ = cartesian_product(kn, h)
                checked += 1
                decider.work_units += 1
                summary = independence_summary(product, allow_large=True)
                if not (summary.well_covered and summary.alpha == h.order):
                    violations.append(
                        _violation(
                            "complete-by-partner product is not well-covered "
                            "with alpha = |V(H)|",
                            complete_order=n,
                            partner=write_graph6(h),
                            alpha=summary.alpha,
                            idom=summary.idom,
                        )
                    )
    space = f"K_n x H for n in 3..5, connected H of order 1..{max_h}, Delta(H) < n"
    return space, checked, violations


_STATEMENTS: dict[str, Callable] = {
    "thm-1.1": _run_thm_1_1,
    "thm-2.2": _run_thm_2_2,
    "thm-2.4": _run_thm_2_4,
    "thm-3.1": _run_thm_3_1,
    "cor-3.6": _run_cor_3_6,
    "thm-3.8": _run_thm_3_8,
    "cor-3.9": _run_cor_3_9,
    "tv-cycles": _run_tv_cycles,
    "kn-product": _run_kn_product,
}

STATEMENT_IDS = tuple(sorted(_STATEMENTS))


def verify_statement(statement_id: str, bounds: Bounds | None = None) -> VerificationReport:
    """Run one named verification suite and report pass/fail with violations."""
    runner = _STATEMENTS.get(statement_id)
    if runner is None:
        raise UnknownStatement(
            f"unknown statement {statement_id!r}; know {', '.join(STATEMENT_IDS)}"
        )
    bounds = bounds or Bounds()
    decider = _Decider(bounds)
    space, checked, violations = runner(bounds, decider)
    return VerificationReport(
        statement=statement_id,
        input_space=space,
        mode=MODE_SAMPLED if decider.sampled_any else MODE_EXACT,
        checked=checked,
        violations=violations,
        work_units=decider.work_units,
    )


def conjecture_search(
    orders: tuple[int, int] | None = None,
    stream: Iterable[str] | None = None,
    bounds: Bounds | None = None,
) -> VerificationReport:
    """Search for a counterexample to: a connected triangle-free graph with a
    4-cycle whose prism is well-covered has no isolatable vertex.

    Sources: builtin enumeration over an inclusive order range, or graph6
    lines.  A graph counts as a counterexample only when its prism is decided
    well-covered exactly and an isolating witness exists; both facts are
    recorded so the finding can be re-checked independently.
    """
    if (orders is None) == (stream is None):
        raise BoundsTooLarge("pass exactly one of orders=(lo, hi) or stream=...")
    bounds = bounds or Bounds()
    decider = _Decider(bounds)

    def candidates() -> Iterator[Graph]:
        if orders is not None:
            lo, hi = orders
            if lo < 1 or hi < lo:
                raise BoundsTooLarge(f"bad order range {orders}")
            _check_generator_bounds(hi)
            for order in range(lo, hi + 1):
                yield from _graph_stream(
                    order, min_girth=4, must_contain_c4=True
                )
        else:
            for line in stream:
                line = line.strip()
                if line:
                    yield parse_graph6(line)

    checked = 0
    skipped = 0
    violations = []
    for g in candidates():
        if not (is_connected(g) and girth(g) == 4 and has_four_cycle(g)):
            skipped += 1
            continue
        p, _ = prism(g)
        verdict = decider.well_covered(p)
        checked += 1
        if verdict is not True:
            continue
        iso_vertices = isolatable_vertices(g)
        if len(iso_vertices) > 0:
            w = next(iter(iso_vertices))
            violations.append(
                _violation(
                    "counterexample: well-covered prism but the base has an "
                    "isolatable vertex",
                    graph=write_graph6(g),
                    isolatable_vertex=w,
                    isolating_set=sorted(isolatable(g, w)),
                    prism_exactly_well_covered=True,
                )
            )
    if orders is not None:
        source = f"builtin orders {orders[0]}..{orders[1]}"
    else:
        source = "external graph6 stream"
    space = (
        f"{source}: connected triangle-free graphs containing a 4-cycle "
        f"({skipped} inputs skipped by the filter)"
    )
    return VerificationReport(
        statement="conjecture-prism-girth4",
        input_space=space,
        mode=MODE_SAMPLED if decider.sampled_any else MODE_EXACT,
        checked=checked,
        violations=violations,
        work_units=decider.work_units,
    )
