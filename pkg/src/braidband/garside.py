"""
Left-greedy Garside normal form and the conjugacy problem in B_n.

Simple elements (positive braids in which every pair of strands crosses at
most once) are stored as 0-indexed permutation tuples ``s`` with ``s[x]``
the final position of the strand starting at ``x``.  A braid is then
Delta^p x_1 ... x_l with every pair (x_i, x_{i+1}) left-weighted.

Conjugacy is decided by computing super summit sets: cycling and decycling
bring both braids to minimal canonical length, and the set is closed under
conjugation by simple elements.  This is exact but exponential, so the orbit
search is capped by a node budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_perms
from typing import Optional

from .braid_core import BraidError, BraidWord, _check_same, _reduce_letters, closure_components
from .braid_core import permutation as _projection
from .braid_core import writhe

DEFAULT_ORBIT_BUDGET = 10**6

Simple = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """The search ran out of budget; the answer is unknown, not negative."""


# -- simple elements --------------------------------------------------------


@lru_cache(maxsize=None)
def _identity(n: int) -> Simple:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _delta(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _atom(n: int, i: int) -> Simple:
    """sigma_{i+1} as a simple element (0-indexed i)."""
    s = list(range(n))
    s[i], s[i + 1] = i + 1, i
    return tuple(s)


def _mul(a: Simple, b: Simple) -> Simple:
    return tuple(b[x] for x in a)


def _inv(a: Simple) -> Simple:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


@lru_cache(maxsize=None)
def _tau(a: Simple) -> Simple:
    """Conjugation by Delta, which sends sigma_i to sigma_{n-i}."""
    n = len(a)
    return tuple(n - 1 - a[n - 1 - x] for x in range(n))


@lru_cache(maxsize=None)
def _right_complement(a: Simple) -> Simple:
    """The simple element d with a * d = Delta."""
    n = len(a)
    ainv = _inv(a)
    return tuple(n - 1 - ainv[x] for x in range(n))


@lru_cache(maxsize=None)
def _starting_set(a: Simple) -> frozenset[int]:
    return frozenset(i for i in range(len(a) - 1) if a[i] > a[i + 1])


@lru_cache(maxsize=None)
def _finishing_set(a: Simple) -> frozenset[int]:
    ainv = _inv(a)
    return frozenset(i for i in range(len(a) - 1) if ainv[i] > ainv[i + 1])


@lru_cache(maxsize=None)
def _left_weight(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Rewrite the product a*b as a left-weighted pair of simple elements."""
    n = len(a)
    while True:
        movable = _starting_set(b) - _finishing_set(a)
        if not movable:
            return a, b
        s = _atom(n, min(movable))
        a, b = _mul(a, s), _mul(s, b)


@lru_cache(maxsize=None)
def simple_word(a: Simple) -> tuple[int, ...]:
    """A positive Artin word (1-indexed letters) for a simple element."""
    letters = []
    n = len(a)
    while a != _identity(n):
        i = min(_starting_set(a))
        letters.append(i + 1)
        a = _mul(_atom(n, i), a)
    return tuple(letters)


@lru_cache(maxsize=None)
def all_simples(n: int) -> tuple[Simple, ...]:
    """All n! simple elements, ordered by length then lexicographically."""
    return tuple(sorted(_all_perms(range(n)), key=lambda s: (len(simple_word(s)), s)))


# -- normal forms -----------------------------------------------------------


@dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^infimum times left-weighted simple factors (none trivial, none Delta)."""

    strands: int
    infimum: int
    factors: tuple[Simple, ...] = ()

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        n = self.strands
        dw = simple_word(_delta(n))
        if self.infimum >= 0:
            letters = list(dw) * self.infimum
        else:
            letters = [-x for x in reversed(dw)] * (-self.infimum)
        for f in self.factors:
            letters.extend(simple_word(f))
        return BraidWord(n, _reduce_letters(letters))

    def __str__(self) -> str:
        parts = [f"D^{self.infimum}"]
        parts += ["[" + " ".join(str(x) for x in simple_word(f)) + "]" for f in self.factors]
        return " ".join(parts)


def _normalize(n: int, p: int, factors) -> GarsideNormalForm:
    """Left-normalize Delta^p times an arbitrary sequence of simple elements."""
    out: list[Simple] = []
    for f in factors:
        out.append(f)
        j = len(out) - 1
        while j > 0:
            a, b = _left_weight(out[j - 1], out[j])
            if a == out[j - 1]:
                break
            out[j - 1], out[j] = a, b
            j -= 1
    delta, ident = _delta(n), _identity(n)
    lo, hi = 0, len(out)
    while lo < hi and out[lo] == delta:
        lo += 1
    while hi > lo and out[hi - 1] == ident:
        hi -= 1
    return GarsideNormalForm(n, p + lo, tuple(out[lo:hi]))


def _times_simple(x: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    # appending to an already left-weighted sequence needs one backward sweep
    return _normalize(x.strands, x.infimum, x.factors + (s,))


def _times_delta_inverse(x: GarsideNormalForm) -> GarsideNormalForm:
    return GarsideNormalForm(x.strands, x.infimum - 1, tuple(_tau(f) for f in x.factors))


def _simple_times(s: Simple, x: GarsideNormalForm) -> GarsideNormalForm:
    lead = _tau(s) if x.infimum % 2 else s
    return _normalize(x.strands, x.infimum, (lead,) + x.factors)


def _letter_times(letter: int, x: GarsideNormalForm) -> GarsideNormalForm:
    s = _atom(x.strands, abs(letter) - 1)
    if letter > 0:
        return _simple_times(s, x)
    y = _simple_times(_tau(_right_complement(s)), x)
    return GarsideNormalForm(y.strands, y.infimum - 1, y.factors)


def _times_letter(x: GarsideNormalForm, letter: int) -> GarsideNormalForm:
    n = x.strands
    s = _atom(n, abs(letter) - 1)
    if letter > 0:
        return _times_simple(x, s)
    # sigma_i^-1 = (sigma_i^-1 Delta) Delta^-1
    return _times_delta_inverse(_times_simple(x, _right_complement(s)))


def _conj_by_simple(x: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    """s^-1 x s, using s^-1 = Delta^-1 tau(s^-1 Delta)."""
    y = _times_simple(_simple_times(_tau(_right_complement(s)), x), s)
    return GarsideNormalForm(y.strands, y.infimum - 1, y.factors)


def _conj_by_simple_inverse(x: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    """s x s^-1."""
    y = _simple_times(s, x)
    return _times_delta_inverse(_times_simple(y, _right_complement(s)))


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """Left normal form of the element of B_n spelled by ``w``."""
    x = GarsideNormalForm(w.strands, 0, ())
    for letter in w.letters:
        x = _times_letter(x, letter)
    return x


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    _check_same(a, b)
    return normal_form(a) == normal_form(b)


# -- conjugacy --------------------------------------------------------------


def cycling(x: GarsideNormalForm) -> tuple[GarsideNormalForm, Simple]:
    """Return c(x) = s^-1 x s together with the simple conjugator s."""
    s = x.factors[0]
    if x.infimum % 2:
        s = _tau(s)
    return _conj_by_simple(x, s), s


def decycling(x: GarsideNormalForm) -> tuple[GarsideNormalForm, Simple]:
    """Return d(x) = s x s^-1 with s the last factor, together with s."""
    s = x.factors[-1]
    return _conj_by_simple_inverse(x, s), s


def _simple_letters(s: Simple, inverse: bool = False) -> list[int]:
    word = simple_word(s)
    return [-x for x in reversed(word)] if inverse else list(word)


def super_summit_representative(x: GarsideNormalForm) -> tuple[GarsideNormalForm, list[int]]:
    """
    Conjugate ``x`` into its super summit set.

    Returns the representative r and a word C with C^-1 x C = r.
    """
    n = x.strands
    patience = n * (n - 1) // 2
    conj: list[int] = []
    idle = 0
    while x.factors and idle < patience:
        y, s = cycling(x)
        idle = 0 if y.infimum > x.infimum else idle + 1
        conj += _simple_letters(s)
        x = y
    idle = 0
    while x.factors and idle < patience:
        y, s = decycling(x)
        idle = 0 if y.supremum < x.supremum else idle + 1
        conj += _simple_letters(s, inverse=True)
        x = y
    return x, conj


def super_summit_set(w: BraidWord, budget: int = DEFAULT_ORBIT_BUDGET) -> set[GarsideNormalForm]:
    rep, _ = super_summit_representative(normal_form(w))
    found, _ = _orbit(rep, None, budget)
    return set(found)


def _orbit(start: GarsideNormalForm, target: Optional[GarsideNormalForm], budget: int):
    """
    Breadth-first closure of ``start`` under conjugation by simple elements,
    keeping only elements with the same infimum and supremum.

    Returns (parents, hit) where parents maps each element to (previous, s)
    and hit is True when ``target`` was reached.
    """
    parents: dict[GarsideNormalForm, Optional[tuple[GarsideNormalForm, Simple]]] = {start: None}
    if start == target:
        return parents, True
    simples = all_simples(start.strands)[1:]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in simples:
            y = _conj_by_simple(x, s)
            if y.infimum != start.infimum or y.supremum != start.supremum or y in parents:
                continue
            parents[y] = (x, s)
            if y == target:
                return parents, True
            if len(parents) > budget:
                raise BudgetExceeded(
                    f"super summit set exceeds {budget} elements; raise the orbit budget"
                )
            queue.append(y)
    return parents, False


def conjugacy_test(
    a: BraidWord, b: BraidWord, budget: int = DEFAULT_ORBIT_BUDGET
) -> tuple[bool, Optional[BraidWord]]:
    """
    Decide whether ``a`` and ``b`` are conjugate in B_n.

    Returns ``(True, g)`` with ``g a g^-1 = b`` or ``(False, None)``.
    Raises BudgetExceeded when the super summit set is larger than ``budget``.
    """
    _check_same(a, b)
    n = a.strands
    if writhe(a) != writhe(b):
        return False, None
    if _projection(a).cycle_type() != _projection(b).cycle_type():
        return False, None
    ra, ca = super_summit_representative(normal_form(a))
    rb, cb = super_summit_representative(normal_form(b))
    if (ra.infimum, ra.supremum) != (rb.infimum, rb.supremum):
        return False, None
    parents, hit = _orbit(ra, rb, budget)
    if not hit:
        return False, None
    # path from ra to rb: rb = E^-1 ra E
    path: list[int] = []
    node = rb
    while parents[node] is not None:
        prev, s = parents[node]
        path = _simple_letters(s) + path
        node = prev
    # a -> ra via ca, ra -> rb via path, b -> rb via cb; g = cb path^-1 ca^-1
    g = list(cb) + [-x for x in reversed(path)] + [-x for x in reversed(ca)]
    return True, BraidWord(n, _reduce_letters(g))


POSITIVE_BAND = "positive band"
NEGATIVE_BAND = "negative band"
NOT_A_BAND = "not a band"


def is_band(w: BraidWord, budget: int = DEFAULT_ORBIT_BUDGET) -> str:
    """Classify ``w`` as conjugate to sigma_1, to sigma_1^-1, or neither."""
    if w.strands < 2:
        raise BraidError("bands need at least 2 strands")
    if abs(writhe(w)) != 1 or closure_components(w) != w.strands - 1:
        return NOT_A_BAND
    sign = writhe(w)
    ok, _ = conjugacy_test(w, BraidWord(w.strands, (sign,)), budget)
    if not ok:
        return NOT_A_BAND
    return POSITIVE_BAND if sign > 0 else NEGATIVE_BAND
