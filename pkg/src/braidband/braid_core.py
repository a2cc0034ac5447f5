"""
Braid words in the Artin generators and their elementary combinatorics.

A word is read left to right and its diagram top to bottom, first strand on
the left.  A letter is a nonzero integer: ``k > 0`` stands for sigma_k and
``k < 0`` for the inverse of sigma_{-k}.  The strand count is always carried
explicitly, so the trivial braids on different numbers of strands are
different objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed braid data (bad letters, strand mismatches)."""


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of the positions ``1..size``.

    ``images[p - 1]`` is the position where the strand starting at position
    ``p`` ends up.  Products are written in reading order: ``a * b`` means
    "apply a, then b", so that the projection of a concatenated word is the
    product of the projections.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise BraidError("permutation sizes differ")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for p, q in enumerate(self.images, start=1):
            inv[q - 1] = p
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points included, each starting at its least element."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


@dataclass(frozen=True)
class BraidWord:
    """An element of B_n spelled as a word in the Artin generators."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.strands!r}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise BraidError(
                    f"letter {x} is not a generator of B_{self.strands} "
                    f"(indices must lie in 1..{self.strands - 1})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return serialize(self)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator(i: int, n: int, sign: int = 1) -> BraidWord:
    if sign not in (1, -1):
        raise BraidError(f"sign must be +1 or -1, got {sign}")
    return BraidWord(n, (sign * i,))


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices, e.g. ``"1 -2 1"``."""
    letters = []
    for token in text.split():
        try:
            x = int(token)
        except ValueError:
            raise BraidError(f"cannot parse braid letter {token!r}") from None
        if x == 0:
            raise BraidError("0 is not a braid letter")
        letters.append(x)
    return BraidWord(strands, tuple(letters))


def serialize(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    """Delete adjacent inverse pairs until none remain."""
    return BraidWord(w.strands, _reduce_letters(w.letters))


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise BraidError(f"strand counts differ: {a.strands} vs {b.strands}")


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, _reduce_letters(-x for x in reversed(w.letters)))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, _reduce_letters(a.letters + b.letters))


def product(words: Sequence[BraidWord], strands: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise BraidError(f"strand counts differ: {w.strands} vs {strands}")
        letters.extend(w.letters)
    return BraidWord(strands, _reduce_letters(letters))


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """Return g w g^-1 (freely reduced)."""
    _check_same(w, g)
    return BraidWord(w.strands, _reduce_letters(g.letters + w.letters + inverse(g).letters))


def writhe(w: BraidWord) -> int:
    """Exponent sum of the word."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation(w: BraidWord) -> Permutation:
    """
    Project to the symmetric group, applying the letters in reading order.

    With this convention the image of 2 under the projection of
    sigma_2^-1 sigma_3 in B_4 is 4.
    """
    # where[s] is the current position of the strand that started at s
    where = list(range(w.strands))
    at = list(range(w.strands))  # at[p] = strand currently in position p
    for x in w.letters:
        i = abs(x) - 1
        s, t = at[i], at[i + 1]
        at[i], at[i + 1] = t, s
        where[s], where[t] = i + 1, i
    return Permutation(tuple(p + 1 for p in where))


def closure_components(w: BraidWord) -> int:
    """Number of components of the closed braid."""
    return len(permutation(w).cycles())


def stabilize(w: BraidWord, sign: int) -> BraidWord:
    """Markov stabilization: include into B_{n+1} and append sigma_n^sign."""
    if sign not in (1, -1):
        raise BraidError(f"sign must be +1 or -1, got {sign}")
    n = w.strands
    return BraidWord(n + 1, w.letters + (sign * n,))


def include(w: BraidWord, k: int) -> BraidWord:
    """Adjoin k trivial strands on the right."""
    if k < 0:
        raise BraidError(f"cannot include into fewer strands (k={k})")
    return BraidWord(w.strands + k, w.letters)
