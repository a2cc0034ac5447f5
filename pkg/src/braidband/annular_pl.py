"""
Exact piecewise-linear profiles on [0, 1].

A profile models the family t -> d_t of an n-strand braid closure: it is
continuous and piecewise linear, and every slope lies in {-n, -n+2, ..., n}.
The closed trivial braid has the profile n(t - 1).  Everything is computed
with ``fractions.Fraction``; no floating point is used anywhere here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

Rational = Union[int, Fraction, str]


class ProfileError(ValueError):
    pass


def _q(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def admissible_slopes(n: int) -> tuple[int, ...]:
    return tuple(range(-n, n + 1, 2))


@dataclass(frozen=True)
class PLProfile:
    strands: int
    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def slopes(self) -> tuple[Fraction, ...]:
        t, v = self.breakpoints, self.values
        return tuple((v[k + 1] - v[k]) / (t[k + 1] - t[k]) for k in range(len(t) - 1))

    def __call__(self, t: Rational) -> Fraction:
        return evaluate(self, t)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "points": [
                [t.numerator, t.denominator, v.numerator, v.denominator]
                for t, v in zip(self.breakpoints, self.values)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> PLProfile:
        try:
            pts = [(Fraction(a, b), Fraction(c, d)) for a, b, c, d in data["points"]]
            n = int(data["strands"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ProfileError(f"malformed profile: {exc}") from None
        return make_profile(n, [t for t, _ in pts], [v for _, v in pts])


def make_profile(n: int, breakpoints: Sequence[Rational], values: Sequence[Rational]) -> PLProfile:
    """Validate and build a profile; slopes must be admissible for n strands."""
    if n < 1:
        raise ProfileError("strand count must be positive")
    ts = tuple(_q(t) for t in breakpoints)
    vs = tuple(_q(v) for v in values)
    if len(ts) != len(vs) or len(ts) < 2:
        raise ProfileError("need at least two breakpoints, one value each")
    if ts[0] != 0 or ts[-1] != 1:
        raise ProfileError("breakpoints must start at 0 and end at 1")
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise ProfileError("breakpoints must be strictly increasing")
    f = PLProfile(n, ts, vs)
    for k, m in enumerate(f.slopes()):
        if m.denominator != 1 or abs(m) > n:
            raise ProfileError(f"slope {m} on segment {k} is outside [-{n}, {n}] or not an integer")
        if (m - n) % 2:
            raise ProfileError(f"slope {m} on segment {k} has the wrong parity for n={n}")
    return f


def evaluate(f: PLProfile, t: Rational) -> Fraction:
    t = _q(t)
    if not 0 <= t <= 1:
        raise ProfileError(f"t={t} is outside [0, 1]")
    ts, vs = f.breakpoints, f.values
    for k in range(len(ts) - 1):
        if t <= ts[k + 1]:
            a, b = ts[k], ts[k + 1]
            return vs[k] + (vs[k + 1] - vs[k]) * (t - a) / (b - a)
    return vs[-1]


def trivial_profile(n: int) -> PLProfile:
    """n(t - 1), the profile of the closed trivial n-braid."""
    return make_profile(n, [0, 1], [-n, 0])


def gap(f: PLProfile, t: Rational) -> Fraction:
    t = _q(t)
    return abs(evaluate(f, t) - f.strands * (t - 1))


def max_gap(f: PLProfile) -> tuple[Fraction, Fraction]:
    """
    Maximum of |f(t) - n(t - 1)| over [0, 1] and the smallest t attaining it.

    The gap is the absolute value of a piecewise-linear function with the
    same breakpoints as f, so the maximum is attained at a breakpoint.
    """
    n = f.strands
    best, where = Fraction(-1), Fraction(0)
    for t, v in zip(f.breakpoints, f.values):
        g = abs(v - n * (t - 1))
        if g > best:
            best, where = g, t
    return best, where


def endpoint_max_holds(f: PLProfile) -> bool:
    """
    Check that the largest gap is already attained at t = 0 or t = 1.

    Only defined for profiles starting at -1 (closures with s = 0).
    """
    if f.values[0] != -1:
        raise ProfileError(f"profile must start at -1, starts at {f.values[0]}")
    n = f.strands
    ends = max(abs(f.values[0] + n), abs(f.values[-1]))
    return max_gap(f)[0] == ends


def band_rank_bound_from_profile(f: PLProfile) -> Fraction:
    """Lower bound on the band rank of any braid with profile f."""
    return max_gap(f)[0]


def _random_rational(rng: random.Random, lo: Fraction, hi: Fraction, den: int) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(1, den - 1), den)


def random_admissible(
    n: int,
    breakpoint_count: int,
    seed: int,
    fixed_start: Optional[Rational] = None,
    fixed_end: Optional[Rational] = None,
) -> PLProfile:
    """
    A random admissible profile with ``breakpoint_count`` interior breakpoints.

    Deterministic in ``seed``.  With ``fixed_end`` the slopes are chosen first
    and the segment lengths are then solved for so that the profile lands
    exactly on the requested end value; the end must be reachable, i.e. the
    mean slope ``fixed_end - start`` must lie in [-n, n].
    """
    rng = random.Random(seed)
    slopes = admissible_slopes(n)
    start = _q(fixed_start) if fixed_start is not None else Fraction(rng.randint(-4 * n, 4 * n), rng.randint(1, 4))
    pieces = breakpoint_count + 1
    if fixed_end is None:
        # breakpoints on the grid k/64, kept as integer numerators until the end
        cuts = [0] + sorted(set(rng.randint(1, 63) for _ in range(breakpoint_count))) + [64]
        ts, vs = [], []
        acc = 0
        for a, b in zip(cuts, cuts[1:]):
            ts.append(Fraction(a, 64))
            vs.append(start + Fraction(acc, 64))
            acc += rng.choice(slopes) * (b - a)
        ts.append(Fraction(1))
        vs.append(start + Fraction(acc, 64))
        return make_profile(n, ts, vs)

    mean = _q(fixed_end) - start
    if abs(mean) > n:
        raise ProfileError(f"end value {fixed_end} unreachable from {start} with slopes in [-{n}, {n}]")
    chosen = [rng.choice(slopes) for _ in range(pieces)]
    weights = [rng.randint(1, 16) for _ in chosen]
    above = [m for m in slopes if m > mean]
    below = [m for m in slopes if m < mean]
    if not above or not below:
        # mean is +-n: only the straight line reaches the end
        chosen, weights = [int(mean)], [1]
    else:
        # integer weights throughout; the balancing piece is scaled up to an integer
        p, q = mean.numerator, mean.denominator
        excess = sum(w * (m * q - p) for w, m in zip(weights, chosen))
        if excess:
            m = rng.choice(above if excess < 0 else below)
            weights = [w * abs(m * q - p) for w in weights]
            chosen.append(m)
            weights.append(abs(excess))
        order = list(range(len(chosen)))
        rng.shuffle(order)
        chosen = [chosen[k] for k in order]
        weights = [weights[k] for k in order]
    total = sum(weights)
    ts, vs = [Fraction(0)], [start]
    acc_t = acc_v = 0
    for m, w in zip(chosen, weights):
        acc_t += w
        acc_v += m * w
        ts.append(Fraction(acc_t, total))
        vs.append(start + Fraction(acc_v, total))
    return make_profile(n, ts, vs)
