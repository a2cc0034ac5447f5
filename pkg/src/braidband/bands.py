"""
Band presentations and band-rank brackets.

A band is a conjugate w sigma_1^{+-1} w^-1 with an explicit conjugating word
w.  The band rank of a braid is the least number of bands whose product is
the braid.  Here it is bracketed from below by the strand/component and
writhe counts and from above by explicit presentations found by bounded
exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .braid_core import (
    BraidError,
    BraidWord,
    _check_same,
    _reduce_letters,
    closure_components,
    free_reduce,
    inverse,
    permutation,
    writhe,
)
from .garside import (
    GarsideNormalForm,
    _atom,
    _conj_by_simple,
    _conj_by_simple_inverse,
    _letter_times,
    normal_form,
    words_equal,
)


@dataclass(frozen=True)
class Band:
    strands: int
    conjugator: BraidWord
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise BraidError(f"band sign must be +1 or -1, got {self.sign}")
        if self.strands < 2:
            raise BraidError("bands need at least 2 strands")
        if self.conjugator.strands != self.strands:
            raise BraidError("conjugator lives in a different braid group")

    def to_json(self) -> dict:
        return {"sign": self.sign, "conjugator": list(self.conjugator.letters)}


@dataclass(frozen=True)
class BandPresentation:
    strands: int
    bands: tuple[Band, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bands", tuple(self.bands))
        for b in self.bands:
            if b.strands != self.strands:
                raise BraidError("all bands of a presentation must share the strand count")

    def __len__(self) -> int:
        return len(self.bands)

    @property
    def band_count(self) -> int:
        return len(self.bands)

    def to_json(self) -> dict:
        return {"strands": self.strands, "bands": [b.to_json() for b in self.bands]}

    @classmethod
    def from_json(cls, data: dict) -> BandPresentation:
        try:
            n = int(data["strands"])
            bands = tuple(
                Band(n, BraidWord(n, tuple(b.get("conjugator", ()))), int(b["sign"]))
                for b in data["bands"]
            )
        except (KeyError, TypeError) as exc:
            raise BraidError(f"malformed band presentation: {exc}") from None
        return cls(n, bands)


def make_band(conjugator: BraidWord, sign: int = 1) -> Band:
    return Band(conjugator.strands, conjugator, sign)


def band_word(b: Band) -> BraidWord:
    w = b.conjugator.letters
    return BraidWord(b.strands, _reduce_letters(w + (b.sign,) + inverse(b.conjugator).letters))


def standard_band(i: int, n: int, sign: int = 1) -> Band:
    """
    The band equal to sigma_i^sign, with conjugator
    (s_{i-1} s_i)(s_{i-2} s_{i-1}) ... (s_1 s_2).
    """
    if not 1 <= i <= n - 1:
        raise BraidError(f"generator index {i} out of range for B_{n}")
    letters: list[int] = []
    for k in range(i - 1, 0, -1):
        letters += [k, k + 1]
    return Band(n, BraidWord(n, tuple(letters)), sign)


def presentation_product(p: BandPresentation) -> BraidWord:
    letters: list[int] = []
    for b in p.bands:
        letters.extend(band_word(b).letters)
    return BraidWord(p.strands, _reduce_letters(letters))


def validate_presentation(p: BandPresentation, target: BraidWord) -> bool:
    _check_same(BraidWord(p.strands), target)
    return words_equal(presentation_product(p), target)


def band_rank_lower(w: BraidWord) -> int:
    """
    Every band changes the writhe by one and merges or splits at most one
    pair of closure components, so this many bands are always needed.
    """
    return max(w.strands - closure_components(w), abs(writhe(w)))


def slice_band_bound(n: int, q: int) -> int:
    """Band-rank ceiling (n - 1) + 2q for beta^(q) when the closure of beta is slice."""
    if n < 1 or q < 0:
        raise BraidError("need n >= 1 and q >= 0")
    return (n - 1) + 2 * q


def letter_presentation(w: BraidWord) -> BandPresentation:
    """One standard band per letter of the freely reduced word."""
    w = free_reduce(w)
    bands = tuple(standard_band(abs(x), w.strands, 1 if x > 0 else -1) for x in w.letters)
    return BandPresentation(w.strands, bands)


# -- search -----------------------------------------------------------------


def _letter_order(n: int) -> list[int]:
    out = []
    for i in range(1, n):
        out += [i, -i]
    return out


def _conj_letter(x: GarsideNormalForm, letter: int) -> GarsideNormalForm:
    """letter * x * letter^-1."""
    s = _atom(x.strands, abs(letter) - 1)
    if letter > 0:
        return _conj_by_simple_inverse(x, s)
    return _conj_by_simple(x, s)


@dataclass
class BandTable:
    """
    Every band element whose conjugator has length at most ``max_length``,
    keyed by normal form, each with its canonical conjugator (shortest,
    then lexicographic in the letter order 1, -1, 2, -2, ...).
    """

    strands: int
    max_length: int
    entries: dict[GarsideNormalForm, Band] = field(default_factory=dict)
    order: list[GarsideNormalForm] = field(default_factory=list)

    @classmethod
    def build(cls, n: int, max_length: int) -> BandTable:
        table = cls(n, max_length)
        letters = _letter_order(n)
        rank = {x: k for k, x in enumerate(letters)}
        for sign in (1, -1):
            base = normal_form(BraidWord(n, (sign,)))
            table._add(base, Band(n, BraidWord(n), sign))
        frontier = list(table.order)
        for _ in range(max_length):
            fresh = []
            # new conjugator = letter + old conjugator; iterate in lexicographic order
            for letter in letters:
                for x in frontier:
                    band = table.entries[x]
                    old = band.conjugator.letters
                    if old and old[0] == -letter:
                        continue
                    y = _conj_letter(x, letter)
                    if y in table.entries:
                        continue
                    conj = BraidWord(n, (letter,) + old)
                    fresh.append((y, Band(n, conj, band.sign)))
            fresh.sort(key=lambda e: ([rank[c] for c in e[1].conjugator.letters], -e[1].sign))
            new_frontier = []
            for y, band in fresh:
                if y not in table.entries:
                    table._add(y, band)
                    new_frontier.append(y)
            frontier = new_frontier
        table.order.sort(key=lambda y: _band_key(table.entries[y], rank))
        return table

    def _add(self, x: GarsideNormalForm, band: Band) -> None:
        self.entries[x] = band
        self.order.append(x)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, x: GarsideNormalForm) -> Optional[Band]:
        return self.entries.get(x)

    def bands(self) -> Iterator[tuple[GarsideNormalForm, Band]]:
        for x in self.order:
            yield x, self.entries[x]


def _band_key(band: Band, rank: dict[int, int]):
    c = band.conjugator.letters
    return (len(c), [rank[x] for x in c], -band.sign)


_TABLES: dict[tuple[int, int], BandTable] = {}


def band_table(n: int, max_length: int) -> BandTable:
    key = (n, max_length)
    if key not in _TABLES:
        _TABLES[key] = BandTable.build(n, max_length)
    return _TABLES[key]


def _left_divide(band: Band, x: GarsideNormalForm) -> GarsideNormalForm:
    """band^-1 * x, computed on normal forms."""
    for letter in band_word(band).letters:
        x = _letter_times(-letter, x)
    return x


def band_rank_search(
    w: BraidWord,
    max_bands: int,
    max_conjugator_length: int,
    min_bands: int = 0,
) -> Optional[BandPresentation]:
    """
    Find a presentation of ``w`` with as few bands as possible, at most
    ``max_bands``, using conjugators of length at most
    ``max_conjugator_length``.

    Band counts are tried in increasing order starting from
    max(min_bands, band_rank_lower(w)); within a count, the first
    presentation in canonical band order is returned.  ``None`` means no
    presentation exists inside the budgets.
    """
    if max_bands < 0 or max_conjugator_length < 0:
        raise BraidError("search budgets must be non-negative")
    n = w.strands
    target = normal_form(w)
    lower = max(band_rank_lower(w), min_bands)
    # each band flips the parity of the projected permutation
    if (lower - writhe(w)) % 2:
        lower += 1
    if n < 2:
        return BandPresentation(n) if lower == 0 and not target.factors and target.infimum == 0 else None
    table = band_table(n, max_conjugator_length)
    candidates = list(table.bands())
    band_perm = {x: permutation(band_word(b)) for x, b in candidates}
    identity = GarsideNormalForm(n, 0, ())
    dead: set[tuple[GarsideNormalForm, int]] = set()

    def search(rest: GarsideNormalForm, left: int) -> Optional[list[Band]]:
        if left == 0:
            return [] if rest == identity else None
        if left == 1:
            b = table.lookup(rest)
            return [b] if b is not None else None
        if (rest, left) in dead:
            return None
        rest_word = rest.to_word()
        rest_perm = permutation(rest_word)
        rest_writhe = writhe(rest_word)
        for x, band in candidates:
            if abs(rest_writhe - band.sign) > left - 1:
                continue
            p = band_perm[x].inverse() * rest_perm
            if n - len(p.cycles()) > left - 1:
                continue
            nxt = _left_divide(band, rest)
            found = search(nxt, left - 1)
            if found is not None:
                return [band] + found
        dead.add((rest, left))
        return None

    for c in range(lower, max_bands + 1, 2):
        found = search(target, c)
        if found is not None:
            return BandPresentation(n, tuple(found))
    return None


@dataclass(frozen=True)
class RankBracket:
    """lower <= rk_n(w) <= upper, with a presentation witnessing the upper bound."""

    lower: int
    upper: int
    witness: BandPresentation
    searched: bool

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "searched": self.searched,
            "witness": self.witness.to_json(),
        }


def band_rank_bracket(w: BraidWord, max_bands: int = 8, max_conjugator_length: int = 6) -> RankBracket:
    """
    Bracket the band rank.  The letter-by-letter presentation always gives
    an upper bound, and a search hit can only improve it.
    """
    lower = band_rank_lower(w)
    trivial = letter_presentation(w)
    found = band_rank_search(w, min(max_bands, len(trivial)), max_conjugator_length)
    if found is not None and len(found) < len(trivial):
        return RankBracket(lower, len(found), found, True)
    return RankBracket(lower, len(trivial), trivial, found is not None)
