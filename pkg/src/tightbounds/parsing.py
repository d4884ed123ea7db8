"""Parser for the textual conjecture grammar (the inverse of rendering).

Accepts lines like

    Conjecture 7. If G is connected, then independence_number(G) >=
    n_minus_matching_number(G) + -1. This bound is sharp on 3 graphs.

with the numbering prefix and the sharpness sentence both optional, and
reconstructs the conjecture object against a given table (touch number and
sharp set are recomputed, not trusted from the text).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .conjectures import AffineForm, LinearConjecture, touch_and_sharp
from .fitting import LOWER, UPPER
from .rationals import parse_rational
from .table import Hypothesis, KnowledgeTable, TableError


class ConjectureParseError(ValueError):
    """The text does not match the conjecture grammar."""


_MAIN_RE = re.compile(
    r"^\s*(?:Conjecture\s+\d+\.\s*)?"
    r"If\s+(?P<subject>\w+)\s+is\s+(?P<hypothesis>.+?),\s*"
    r"then\s+(?P<target>\w+)\((?P=subject)\)\s*(?P<symbol><=|>=)\s*(?P<rhs>.+?)\s*\.?"
    r"(?:\s*This bound is sharp on \d+ \w+\.?)?\s*$"
)
_TERM_RE = re.compile(r"^(?:(?P<slope>-?\d+(?:/\d+)?)\s+)?(?P<name>\w+)\((?P<subject>\w+)\)$")


def _parse_rhs(text: str, subject: str) -> AffineForm:
    terms: list[tuple[str, Fraction]] = []
    intercept = Fraction(0)
    saw_intercept = False
    for chunk in re.split(r"\s\+\s", text):
        chunk = chunk.strip()
        term = _TERM_RE.match(chunk)
        if term:
            if term.group("subject") != subject:
                raise ConjectureParseError(
                    f"term subject {term.group('subject')!r} does not match {subject!r}"
                )
            slope = parse_rational(term.group("slope")) if term.group("slope") else Fraction(1)
            terms.append((term.group("name"), slope))
            continue
        try:
            value = parse_rational(chunk)
        except ValueError:
            raise ConjectureParseError(f"unparseable term: {chunk!r}") from None
        if saw_intercept:
            raise ConjectureParseError("multiple intercept terms")
        intercept = value
        saw_intercept = True
    if not terms:
        raise ConjectureParseError("right-hand side needs at least one invariant term")
    return AffineForm(terms=tuple(terms), intercept=intercept)


def parse_conjecture_form(text: str, table: KnowledgeTable) -> LinearConjecture:
    """Parse one conjecture sentence and bind it to ``table``."""
    match = _MAIN_RE.match(text.strip())
    if match is None:
        raise ConjectureParseError(f"does not match the conjecture grammar: {text!r}")
    hypothesis = Hypothesis(
        part.strip() for part in match.group("hypothesis").split(" and ")
    )
    try:
        hypothesis.validate(table)
    except TableError as exc:
        raise ConjectureParseError(str(exc)) from exc
    target = match.group("target")
    try:
        table.numeric_index(target)
    except TableError as exc:
        raise ConjectureParseError(str(exc)) from exc
    rhs = _parse_rhs(match.group("rhs"), match.group("subject"))
    for name, _ in rhs.terms:
        try:
            table.numeric_index(name)
        except TableError as exc:
            raise ConjectureParseError(str(exc)) from exc
    direction = UPPER if match.group("symbol") == "<=" else LOWER
    touch, sharp = touch_and_sharp(table, hypothesis, target, direction, rhs)
    return LinearConjecture(
        hypothesis=hypothesis,
        target=target,
        direction=direction,
        rhs=rhs,
        touch=touch,
        sharp_set=sharp,
    )
