"""Conjecture generation, ranking, filtering, and rendering.

The pipeline turns a knowledge table into ranked inequality conjectures:

1. For one target invariant, fit an upper and a lower affine bound for every
   (other invariant, hypothesis) pair -- (x-1)*y models per direction.
2. Drop degenerate fits, attach touch numbers (how many rows meet the bound
   with equality) and sharp sets (which rows), and sort by touch descending.
3. Optionally thin each sorted list with the one-pass sharpness filter, which
   keeps a conjecture only if its sharp set matches a kept one exactly or
   contributes an object no kept conjecture is sharp on.
4. Concatenate per-target results (upper before lower) and stable-sort the
   whole run by touch, so the tightest bounds surface first.

Equalities are read off afterwards: an upper and a lower bound with the same
target and identical right-hand side pin the target down under the union of
their premises.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .fitting import LOWER, UPPER, FitResult, FitStatus, fit_lower, fit_upper, fit_upper_2d
from .rationals import format_rational, parse_rational
from .table import GRAPH_DOMAIN, Hypothesis, KnowledgeTable

DIRECTION_SYMBOL = {UPPER: "<=", LOWER: ">="}


@dataclass(frozen=True)
class AffineForm:
    """Right-hand side: sum of slope*invariant terms plus an intercept.

    Terms are kept in a canonical order (invariant name) and all slopes are
    nonzero, so structural equality of forms is plain field equality.
    """

    terms: tuple[tuple[str, Fraction], ...]
    intercept: Fraction

    def __post_init__(self) -> None:
        if any(slope == 0 for _, slope in self.terms):
            raise ValueError("affine form carries a zero slope")
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    def invariants(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.terms)

    def evaluate(self, table: KnowledgeTable, row: int) -> Fraction:
        total = self.intercept
        for name, slope in self.terms:
            total += slope * table.value(row, name)
        return total

    def render(self, subject: str) -> str:
        parts = []
        for name, slope in self.terms:
            term = f"{name}({subject})"
            parts.append(term if slope == 1 else f"{format_rational(slope)} {term}")
        rendered = " + ".join(parts)
        if self.intercept != 0:
            rendered += f" + {format_rational(self.intercept)}"
        return rendered


@dataclass(frozen=True)
class LinearConjecture:
    """One inequality: hypothesis => target (<= or >=) affine form."""

    hypothesis: Hypothesis
    target: str
    direction: str
    rhs: AffineForm
    touch: int
    sharp_set: frozenset[str]

    def holds_on(self, table: KnowledgeTable, row: int) -> bool:
        lhs = table.value(row, self.target)
        rhs = self.rhs.evaluate(table, row)
        return lhs <= rhs if self.direction == UPPER else lhs >= rhs

    def signature(self) -> tuple:
        """Identity modulo touch bookkeeping (used by the run filters)."""
        return (self.hypothesis.conjuncts, self.target, self.direction, self.rhs)


@dataclass(frozen=True)
class EqualityConjecture:
    """Derived equation: coinciding upper and lower bounds on one target."""

    hypothesis: Hypothesis
    target: str
    rhs: AffineForm


@dataclass(frozen=True)
class ModelFit:
    """One attempted optimization model, successful or not."""

    target: str
    invariants: tuple[str, ...]
    hypothesis: Hypothesis
    direction: str
    fit: FitResult
    conjecture: LinearConjecture | None


@dataclass(frozen=True)
class ConjectureRun:
    """Immutable snapshot: the table plus its ordered, filtered conjectures."""

    table: KnowledgeTable
    conjectures: tuple[LinearConjecture, ...]
    equalities: tuple[EqualityConjecture, ...]


def touch_and_sharp(
    table: KnowledgeTable,
    hypothesis: Hypothesis,
    target: str,
    direction: str,
    rhs: AffineForm,
) -> tuple[int, frozenset[str]]:
    """Exact equality test of target vs rhs on every hypothesis row."""
    sharp = []
    for row in table.select_rows(hypothesis):
        if table.value(row, target) == rhs.evaluate(table, row):
            sharp.append(table.ids[row])
    return len(sharp), frozenset(sharp)


def fit_all_models(
    table: KnowledgeTable,
    target: str,
    invariants: Sequence[str],
    hypotheses: Sequence[Hypothesis],
    direction: str,
) -> list[ModelFit]:
    """Attempt every (invariant != target, hypothesis) model for one direction.

    Registration order is invariant-major (table column order as supplied),
    hypotheses inner; downstream orderings inherit it.
    """
    table.numeric_index(target)
    for name in invariants:
        table.numeric_index(name)
    fitter = fit_upper if direction == UPPER else fit_lower
    results: list[ModelFit] = []
    for invariant in invariants:
        if invariant == target:
            continue
        for hypothesis in hypotheses:
            rows = table.select_rows(hypothesis)
            points = [
                (table.value(r, invariant), table.value(r, target)) for r in rows
            ]
            fit = fitter(points)
            conjecture = None
            if fit.status is FitStatus.OK:
                rhs = AffineForm(terms=((invariant, fit.slopes[0]),), intercept=fit.intercept)
                touch, sharp = touch_and_sharp(table, hypothesis, target, direction, rhs)
                if touch >= 1:
                    conjecture = LinearConjecture(
                        hypothesis=hypothesis,
                        target=target,
                        direction=direction,
                        rhs=rhs,
                        touch=touch,
                        sharp_set=sharp,
                    )
            results.append(
                ModelFit(target, (invariant,), hypothesis, direction, fit, conjecture)
            )
    return results


def make_all_upper_linear_conjectures(
    table: KnowledgeTable,
    target: str,
    invariants: Sequence[str],
    hypotheses: Sequence[Hypothesis],
) -> list[LinearConjecture]:
    """Every surviving upper-bound conjecture, in registration order."""
    fits = fit_all_models(table, target, invariants, hypotheses, UPPER)
    return [f.conjecture for f in fits if f.conjecture is not None]


def make_all_lower_linear_conjectures(
    table: KnowledgeTable,
    target: str,
    invariants: Sequence[str],
    hypotheses: Sequence[Hypothesis],
) -> list[LinearConjecture]:
    """Every surviving lower-bound conjecture, in registration order."""
    fits = fit_all_models(table, target, invariants, hypotheses, LOWER)
    return [f.conjecture for f in fits if f.conjecture is not None]


def make_all_upper_2d_conjectures(
    table: KnowledgeTable,
    target: str,
    invariants: Sequence[str],
    hypotheses: Sequence[Hypothesis],
) -> list[LinearConjecture]:
    """Two-invariant upper bounds (the richer, separately exposed pipeline)."""
    from itertools import combinations

    table.numeric_index(target)
    others = [name for name in invariants if name != target]
    conjectures: list[LinearConjecture] = []
    for inv1, inv2 in combinations(others, 2):
        for hypothesis in hypotheses:
            rows = table.select_rows(hypothesis)
            points = [
                (table.value(r, inv1), table.value(r, inv2), table.value(r, target))
                for r in rows
            ]
            fit = fit_upper_2d(points)
            if fit.status is not FitStatus.OK:
                continue
            rhs = AffineForm(
                terms=((inv1, fit.slopes[0]), (inv2, fit.slopes[1])),
                intercept=fit.intercept,
            )
            touch, sharp = touch_and_sharp(table, hypothesis, target, UPPER, rhs)
            if touch >= 1:
                conjectures.append(
                    LinearConjecture(hypothesis, target, UPPER, rhs, touch, sharp)
                )
    conjectures.sort(key=lambda c: c.touch, reverse=True)
    return conjectures


def static_dalmatian(
    table: KnowledgeTable, conjectures: Sequence[LinearConjecture]
) -> list[LinearConjecture]:
    """One-pass sharpness filter over a touch-sorted conjecture list.

    The first (highest-touch) conjecture is always kept.  A later conjecture
    survives if its sharp set equals the sharp set of some already-kept
    conjecture, or if it is sharp on at least one object outside the running
    union; only the second case grows the union.
    """
    if any(
        conjectures[i].touch < conjectures[i + 1].touch
        for i in range(len(conjectures) - 1)
    ):
        raise ValueError("input must be sorted by touch")
    if not conjectures:
        return []

    def sharp_of(c: LinearConjecture) -> frozenset[str]:
        _, sharp = touch_and_sharp(table, c.hypothesis, c.target, c.direction, c.rhs)
        return sharp

    first = conjectures[0]
    strong = [first]
    kept_sharp = [sharp_of(first)]
    union = set(kept_sharp[0])
    for c in conjectures[1:]:
        sharp = sharp_of(c)
        if any(sharp == known for known in kept_sharp):
            strong.append(c)
            kept_sharp.append(sharp)
        elif sharp - union:
            strong.append(c)
            kept_sharp.append(sharp)
            union |= sharp
    return strong


def detect_equalities(
    conjectures: Sequence[LinearConjecture],
) -> list[EqualityConjecture]:
    """Pair up coinciding upper/lower bounds into equations.

    Each (upper, lower) pair with identical target and identical rhs yields
    one equality whose hypothesis is the union of the two conjunct sets.
    """
    uppers = [c for c in conjectures if c.direction == UPPER]
    lowers = [c for c in conjectures if c.direction == LOWER]
    out: list[EqualityConjecture] = []
    seen: set[tuple] = set()
    for up in uppers:
        for low in lowers:
            if up.target != low.target or up.rhs != low.rhs:
                continue
            hypothesis = Hypothesis(up.hypothesis.conjuncts | low.hypothesis.conjuncts)
            key = (hypothesis.conjuncts, up.target, up.rhs)
            if key not in seen:
                seen.add(key)
                out.append(EqualityConjecture(hypothesis, up.target, up.rhs))
    return out


def write_on_the_wall(
    table: KnowledgeTable,
    targets: Sequence[str],
    invariants: Sequence[str] | None = None,
    hypotheses: Sequence[Hypothesis] | None = None,
    use_dalmatian: bool = True,
    limit: int | None = None,
) -> ConjectureRun:
    """The full pipeline: generate, sort, filter, merge, rank.

    Ties in the final touch-descending sort preserve concatenation order:
    per target (in caller order) the upper list precedes the lower list, and
    each list keeps its generation order.  ``limit`` caps the final list at
    the top-k conjectures.
    """
    if invariants is None:
        invariants = table.numeric_columns
    if hypotheses is None:
        hypotheses = default_hypotheses(table)
    if limit is not None and limit < 1:
        raise ValueError("limit must be at least 1")

    merged: list[LinearConjecture] = []
    for target in targets:
        uppers = make_all_upper_linear_conjectures(table, target, invariants, hypotheses)
        lowers = make_all_lower_linear_conjectures(table, target, invariants, hypotheses)
        uppers.sort(key=lambda c: c.touch, reverse=True)
        lowers.sort(key=lambda c: c.touch, reverse=True)
        if use_dalmatian:
            uppers = static_dalmatian(table, uppers)
            lowers = static_dalmatian(table, lowers)
        merged += uppers + lowers
    merged.sort(key=lambda c: c.touch, reverse=True)
    if limit is not None:
        merged = merged[:limit]
    equalities = detect_equalities(merged)
    return ConjectureRun(table=table, conjectures=tuple(merged), equalities=tuple(equalities))


def default_hypotheses(table: KnowledgeTable) -> tuple[Hypothesis, ...]:
    """Graph tables use the four standard premises; otherwise one per column."""
    if table.domain == GRAPH_DOMAIN:
        from .table import DEFAULT_GRAPH_HYPOTHESES

        return DEFAULT_GRAPH_HYPOTHESES
    return tuple(Hypothesis({name}) for name in table.boolean_columns)


def filter_known(
    run: ConjectureRun, known: Sequence[LinearConjecture | EqualityConjecture]
) -> ConjectureRun:
    """Drop conjectures already covered by known theorems.

    A known pattern covers a conjecture when target, direction, and rhs match
    exactly and the conjecture's premise is at least as strong (its conjunct
    set is a superset of the pattern's).
    """
    patterns = [
        (k.hypothesis.conjuncts, k.target, getattr(k, "direction", None), k.rhs)
        for k in known
    ]

    def covered(c: LinearConjecture) -> bool:
        return any(
            c.target == target
            and (direction is None or c.direction == direction)
            and c.rhs == rhs
            and c.hypothesis.conjuncts >= conjuncts
            for conjuncts, target, direction, rhs in patterns
        )

    kept = tuple(c for c in run.conjectures if not covered(c))
    return replace(run, conjectures=kept)


def filter_blocked_families(
    run: ConjectureRun, blocklist: Sequence[tuple[str, str, str]]
) -> ConjectureRun:
    """Drop whole conjecture families by (target, direction, rhs invariant).

    Applied after a human establishes that every constant shift of the form
    fails; slope and intercept are deliberately ignored.
    """
    blocked = set(blocklist)

    def is_blocked(c: LinearConjecture) -> bool:
        return any((c.target, c.direction, name) in blocked for name in c.rhs.invariants())

    kept = tuple(c for c in run.conjectures if not is_blocked(c))
    return replace(run, conjectures=kept)


# Optional seed patterns for the known-theorem store: the bipartite matching
# equality (independence = n - matching on connected bipartite graphs) and
# the regular-graph bound (independence <= matching on connected regular
# graphs), both classical results this pipeline rediscovers.
KNOWN_THEOREM_SEEDS = (
    LinearConjecture(
        hypothesis=Hypothesis({"connected", "bipartite"}),
        target="independence_number",
        direction=LOWER,
        rhs=AffineForm(terms=(("n_minus_matching_number", Fraction(1)),), intercept=Fraction(0)),
        touch=0,
        sharp_set=frozenset(),
    ),
    LinearConjecture(
        hypothesis=Hypothesis({"connected", "regular"}),
        target="independence_number",
        direction=UPPER,
        rhs=AffineForm(terms=(("matching_number", Fraction(1)),), intercept=Fraction(0)),
        touch=0,
        sharp_set=frozenset(),
    ),
)


# -- rendering -----------------------------------------------------------


def _subject_and_noun(domain: str) -> tuple[str, str]:
    return ("G", "graphs") if domain == GRAPH_DOMAIN else ("n", "integers")


def render_conjecture(
    c: LinearConjecture,
    index: int,
    boolean_columns: Sequence[str],
    domain: str = GRAPH_DOMAIN,
) -> str:
    """The byte-exact output grammar shared by CLI, API, and tests."""
    subject, noun = _subject_and_noun(domain)
    hypothesis = c.hypothesis.render(boolean_columns)
    symbol = DIRECTION_SYMBOL[c.direction]
    return (
        f"Conjecture {index}. If {subject} is {hypothesis}, "
        f"then {c.target}({subject}) {symbol} {c.rhs.render(subject)}. "
        f"This bound is sharp on {c.touch} {noun}."
    )


def render_equality(
    e: EqualityConjecture, boolean_columns: Sequence[str], domain: str = GRAPH_DOMAIN
) -> str:
    subject, _ = _subject_and_noun(domain)
    hypothesis = e.hypothesis.render(boolean_columns)
    return (
        f"If {subject} is {hypothesis}, "
        f"then {e.target}({subject}) = {e.rhs.render(subject)}."
    )


def render_run(run: ConjectureRun) -> str:
    """One conjecture per line, numbered from 1 in run order."""
    lines = [
        render_conjecture(c, k, run.table.boolean_columns, run.table.domain)
        for k, c in enumerate(run.conjectures, start=1)
    ]
    return "\n".join(lines)


# -- machine-readable (JSON) form ----------------------------------------


def conjecture_to_dict(c: LinearConjecture) -> dict:
    return {
        "hypothesis": sorted(c.hypothesis.conjuncts),
        "target": c.target,
        "direction": c.direction,
        "rhs": {
            "terms": [[name, format_rational(slope)] for name, slope in c.rhs.terms],
            "intercept": format_rational(c.rhs.intercept),
        },
        "touch": c.touch,
        "sharp_set": sorted(c.sharp_set),
    }


def conjecture_from_dict(data: dict) -> LinearConjecture:
    rhs = AffineForm(
        terms=tuple(
            (name, parse_rational(slope)) for name, slope in data["rhs"]["terms"]
        ),
        intercept=parse_rational(data["rhs"]["intercept"]),
    )
    return LinearConjecture(
        hypothesis=Hypothesis(data["hypothesis"]),
        target=data["target"],
        direction=data["direction"],
        rhs=rhs,
        touch=int(data.get("touch", 0)),
        sharp_set=frozenset(data.get("sharp_set", ())),
    )


def equality_to_dict(e: EqualityConjecture) -> dict:
    return {
        "hypothesis": sorted(e.hypothesis.conjuncts),
        "target": e.target,
        "rhs": {
            "terms": [[name, format_rational(slope)] for name, slope in e.rhs.terms],
            "intercept": format_rational(e.rhs.intercept),
        },
    }


def run_to_json(run: ConjectureRun) -> str:
    payload = {
        "domain": run.table.domain,
        "conjectures": [conjecture_to_dict(c) for c in run.conjectures],
        "equalities": [equality_to_dict(e) for e in run.equalities],
    }
    return json.dumps(payload, indent=2)


def conjectures_from_json(text: str) -> list[LinearConjecture]:
    payload = json.loads(text)
    return [conjecture_from_dict(d) for d in payload["conjectures"]]
