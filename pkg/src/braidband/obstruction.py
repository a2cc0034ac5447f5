"""
Ribbon obstructions from real-valued braid invariants.

Let phi be a braid invariant that is constant on conjugacy classes, goes up
by exactly one under either Markov stabilization, and never exceeds the band
rank.  Then phi(beta) - n is a link invariant, and a knot with a braid
representative satisfying phi(beta) > n - 1 cannot be ribbon, because a
ribbon knot has a representative of band rank n - 1.  The same inequality
applied to beta^(q) for slice knots gives the slice bound (n - 1) + 2q.

This module checks those properties on samples, evaluates the inequalities
exactly, and ships a few concrete invariants to play with.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .annular_pl import PLProfile, max_gap
from .bands import band_rank_search, letter_presentation, slice_band_bound
from .braid_core import (
    BraidError,
    BraidWord,
    closure_components,
    conjugate,
    include,
    serialize,
    stabilize,
    writhe,
)


class Property(enum.Enum):
    CONJUGACY_INVARIANT = 1
    STABILIZATION_ADDS_ONE = 2
    BOUNDED_BY_BAND_RANK = 3
    INCLUSION_NON_RIGID = 4
    EXCEEDS_STRANDS_MINUS_ONE = 5


class ObstructionError(ValueError):
    pass


@dataclass(frozen=True)
class PhiInvariant:
    name: str
    evaluate: Callable[[BraidWord], Fraction]
    declared: frozenset = frozenset()

    def __call__(self, w: BraidWord) -> Fraction:
        return Fraction(self.evaluate(w))

    def require(self, *props: Property) -> None:
        missing = [p for p in props if p not in self.declared]
        if missing:
            names = ", ".join(p.name for p in missing)
            raise ObstructionError(f"invariant {self.name!r} does not declare {names}")


NOT_RIBBON = "not ribbon"
NO_OBSTRUCTION = "no obstruction"


@dataclass(frozen=True)
class ObstructionVerdict:
    braid: BraidWord
    phi: str
    phi_value: Fraction
    threshold: int
    verdict: str
    evidence: tuple[str, ...]

    @property
    def link_invariant(self) -> Fraction:
        return self.phi_value - self.braid.strands

    def to_json(self) -> dict:
        return {
            "braid": serialize(self.braid),
            "n": self.braid.strands,
            "phi": self.phi,
            "phi_value": _rational_json(self.phi_value),
            "threshold": self.threshold,
            "verdict": self.verdict,
            "evidence": list(self.evidence),
        }


def _rational_json(x: Fraction) -> Union[int, str]:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- built-in invariants ----------------------------------------------------


def writhe_phi() -> PhiInvariant:
    return PhiInvariant(
        "writhe",
        lambda w: Fraction(writhe(w)),
        frozenset({Property.CONJUGACY_INVARIANT, Property.BOUNDED_BY_BAND_RANK}),
    )


def abs_writhe_phi() -> PhiInvariant:
    return PhiInvariant(
        "|writhe|",
        lambda w: Fraction(abs(writhe(w))),
        frozenset({Property.CONJUGACY_INVARIANT, Property.BOUNDED_BY_BAND_RANK}),
    )


def components_phi() -> PhiInvariant:
    """n minus the number of closure components."""
    return PhiInvariant(
        "strands-minus-components",
        lambda w: Fraction(w.strands - closure_components(w)),
        frozenset(
            {
                Property.CONJUGACY_INVARIANT,
                Property.STABILIZATION_ADDS_ONE,
                Property.BOUNDED_BY_BAND_RANK,
            }
        ),
    )


ProfileSource = Union[PLProfile, Mapping[BraidWord, PLProfile], Callable[[BraidWord], PLProfile]]


def profile_gap_phi(profiles: ProfileSource, name: str = "profile-gap") -> PhiInvariant:
    """
    phi(beta) = max_t |f(t) - n(t - 1)| for a user-supplied profile f of beta.

    ``profiles`` is a single profile, a mapping from braid words to profiles,
    or a callable.  The profiles themselves are inputs: nothing here computes
    annular Khovanov-Lee data.
    """
    if isinstance(profiles, PLProfile):
        lookup = lambda w: profiles  # noqa: E731
    elif isinstance(profiles, Mapping):
        lookup = profiles.__getitem__
    else:
        lookup = profiles

    def evaluate(w: BraidWord) -> Fraction:
        f = lookup(w)
        if f.strands != w.strands:
            raise ObstructionError(f"profile is for {f.strands} strands, braid has {w.strands}")
        return max_gap(f)[0]

    return PhiInvariant(
        name,
        evaluate,
        frozenset(
            {
                Property.CONJUGACY_INVARIANT,
                Property.STABILIZATION_ADDS_ONE,
                Property.BOUNDED_BY_BAND_RANK,
            }
        ),
    )


def endpoint_phi(s_value: Union[int, Fraction, Callable[[BraidWord], Fraction]]) -> PhiInvariant:
    """
    The larger of the two endpoint gaps: |s - 1 + n| at t = 0 and |writhe| at
    t = 1.  The s-invariant is supplied by the caller.
    """
    s_of = s_value if callable(s_value) else (lambda w: Fraction(s_value))

    def evaluate(w: BraidWord) -> Fraction:
        return max(abs(Fraction(s_of(w)) - 1 + w.strands), Fraction(abs(writhe(w))))

    return PhiInvariant(
        "endpoint-gap",
        evaluate,
        frozenset(
            {
                Property.CONJUGACY_INVARIANT,
                Property.STABILIZATION_ADDS_ONE,
                Property.BOUNDED_BY_BAND_RANK,
            }
        ),
    )


# -- property checks --------------------------------------------------------

PASS, FAIL, UNCHECKED, CONFIRMED, UNCONFIRMED = "pass", "fail", "unchecked", "confirmed", "unconfirmed"


@dataclass
class PropertyResult:
    prop: Property
    declared: bool
    status: str
    checks: int = 0
    counterexample: Optional[str] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "property": self.prop.value,
            "name": self.prop.name.lower(),
            "declared": self.declared,
            "status": self.status,
            "checks": self.checks,
            "counterexample": self.counterexample,
            "note": self.note,
        }


@dataclass
class PropertyReport:
    phi: str
    results: dict[Property, PropertyResult] = field(default_factory=dict)

    def __getitem__(self, prop: Property) -> PropertyResult:
        return self.results[prop]

    def to_json(self) -> dict:
        return {"phi": self.phi, "properties": [r.to_json() for r in self.results.values()]}


def _random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def check_properties(
    phi: PhiInvariant,
    samples: Sequence[BraidWord],
    seed: int = 0,
    conjugations: int = 3,
    conjugator_length: int = 6,
    max_inclusion: int = 3,
    max_bands: int = 6,
    max_conjugator_length: int = 3,
    witnesses: Iterable[BraidWord] = (),
) -> PropertyReport:
    """
    Test properties (1)-(3) on samples and look for examples of (4) and (5).

    (1) compares phi on random conjugates, (2) on both stabilizations, (3)
    against the smallest presentation found (the letter-by-letter
    presentation or a search hit).  (4) and (5) are existential: they are
    confirmed by an example and otherwise left unconfirmed, never failed.
    (5) only looks at the supplied ``witnesses``.
    """
    rng = random.Random(seed)
    report = PropertyReport(phi.name)

    def result(prop: Property) -> PropertyResult:
        r = PropertyResult(prop, prop in phi.declared, PASS)
        report.results[prop] = r
        return r

    r1 = result(Property.CONJUGACY_INVARIANT)
    for w in samples:
        for _ in range(conjugations):
            g = _random_word(rng, w.strands, rng.randint(1, conjugator_length))
            v = conjugate(w, g)
            r1.checks += 1
            if phi(w) != phi(v):
                r1.status = FAIL
                r1.counterexample = f"phi({serialize(w)}) = {phi(w)} but phi({serialize(v)}) = {phi(v)}"
                break
        if r1.status == FAIL:
            break

    r2 = result(Property.STABILIZATION_ADDS_ONE)
    for w in samples:
        for sign in (1, -1):
            v = stabilize(w, sign)
            r2.checks += 1
            if phi(v) != phi(w) + 1:
                r2.status = FAIL
                r2.counterexample = (
                    f"phi({serialize(w)}; n={w.strands}) = {phi(w)} but stabilizing with "
                    f"sign {sign:+d} gives {phi(v)}"
                )
                break
        if r2.status == FAIL:
            break

    r3 = result(Property.BOUNDED_BY_BAND_RANK)
    for w in samples:
        upper = len(letter_presentation(w))
        found = band_rank_search(w, min(upper, max_bands), max_conjugator_length)
        if found is not None:
            upper = min(upper, len(found))
        r3.checks += 1
        if phi(w) > upper:
            r3.status = FAIL
            r3.counterexample = f"phi({serialize(w)}) = {phi(w)} exceeds a presentation with {upper} bands"
            break
    r3.note = "checked against witnessed upper bounds on band rank only"

    r4 = result(Property.INCLUSION_NON_RIGID)
    r4.status = UNCONFIRMED
    r4.note = "existential, not refutable by sampling"
    for w in samples:
        for k in range(1, max_inclusion + 1):
            r4.checks += 1
            if phi(include(w, k)) != phi(w) + 2 * k:
                r4.status = CONFIRMED
                r4.counterexample = (
                    f"phi({serialize(w)}^({k})) = {phi(include(w, k))} != {phi(w)} + {2 * k}"
                )
                break
        if r4.status == CONFIRMED:
            break

    r5 = result(Property.EXCEEDS_STRANDS_MINUS_ONE)
    r5.status = UNCHECKED
    r5.note = "existential; needs a supplied knot witness"
    for w in witnesses:
        r5.status = UNCONFIRMED
        r5.checks += 1
        if closure_components(w) == 1 and phi(w) > w.strands - 1:
            r5.status = CONFIRMED
            r5.counterexample = f"phi({serialize(w)}) = {phi(w)} > {w.strands - 1}"
            break
    return report


# -- inequalities -----------------------------------------------------------


def link_invariant(phi: PhiInvariant, w: BraidWord) -> Fraction:
    """phi(beta) - n, a link invariant when phi has properties (1) and (2)."""
    phi.require(Property.CONJUGACY_INVARIANT, Property.STABILIZATION_ADDS_ONE)
    return phi(w) - w.strands


def _require_knot(w: BraidWord) -> None:
    c = closure_components(w)
    if c != 1:
        raise ObstructionError(f"closure of {serialize(w) or 'the trivial braid'} has {c} components, not a knot")


def ribbon_obstruction(phi: PhiInvariant, w: BraidWord) -> ObstructionVerdict:
    """
    A ribbon knot has a representative of band rank n - 1, and phi never
    exceeds the band rank, so phi(w) > n - 1 rules out ribbon.
    """
    phi.require(
        Property.CONJUGACY_INVARIANT, Property.STABILIZATION_ADDS_ONE, Property.BOUNDED_BY_BAND_RANK
    )
    _require_knot(w)
    n = w.strands
    value = phi(w)
    threshold = n - 1
    if value > threshold:
        verdict = NOT_RIBBON
        evidence = (
            f"phi = {value} > n - 1 = {threshold}",
            "phi bounds band rank from below, so every representative has band rank > n - 1",
            "a ribbon knot has some representative of band rank exactly n - 1",
        )
    else:
        verdict = NO_OBSTRUCTION
        evidence = (
            f"phi = {value} <= n - 1 = {threshold}",
            "this verdict concerns this representative only and says nothing about the knot",
        )
    return ObstructionVerdict(w, phi.name, value, threshold, verdict, evidence)


@dataclass(frozen=True)
class SliceRow:
    q: int
    phi_value: Fraction
    bound: int

    @property
    def margin(self) -> Fraction:
        return self.bound - self.phi_value

    @property
    def violated(self) -> bool:
        return self.phi_value > self.bound


@dataclass(frozen=True)
class SliceReport:
    braid: BraidWord
    phi: str
    rows: tuple[SliceRow, ...]

    @property
    def violations(self) -> tuple[int, ...]:
        return tuple(r.q for r in self.rows if r.violated)

    @property
    def not_slice(self) -> bool:
        return bool(self.violations)

    def to_json(self) -> dict:
        return {
            "braid": serialize(self.braid),
            "n": self.braid.strands,
            "phi": self.phi,
            "rows": [
                {
                    "q": r.q,
                    "phi_value": _rational_json(r.phi_value),
                    "bound": r.bound,
                    "margin": _rational_json(r.margin),
                    "violated": r.violated,
                }
                for r in self.rows
            ],
            "violations": list(self.violations),
            "verdict": "not slice" if self.not_slice else "consistent with slice",
        }


def slice_consistency(phi: PhiInvariant, w: BraidWord, q_max: int) -> SliceReport:
    """Compare phi(w^(q)) with (n - 1) + 2q for q = 0..q_max."""
    phi.require(Property.BOUNDED_BY_BAND_RANK)
    rows = tuple(
        SliceRow(q, phi(include(w, q)), slice_band_bound(w.strands, q)) for q in range(q_max + 1)
    )
    return SliceReport(w, phi.name, rows)


POSSIBLY_FINITE_ORDER = "possibly finite order"
INFINITE_ORDER = "infinite order"


def finite_order_writhe_filter(w: BraidWord) -> str:
    """
    The writhe of an n-braid whose closure has finite concordance order is
    at most n - 1 in absolute value.  The verdict is per representative:
    stabilizing raises n by one and moves |writhe| up or down by one, so
    another braid for the same knot can give the other answer.
    """
    _require_knot(w)
    return INFINITE_ORDER if abs(writhe(w)) > w.strands - 1 else POSSIBLY_FINITE_ORDER
