"""
Braided, banded surfaces built from band presentations.

Start from the n disks D_1..D_n bounded by the closed trivial braid and
attach one half-twisted band per factor w sigma_1^{+-1} w^-1.  One end of
each band sits on D_1.  The other end starts next to D_2 and is carried
outward by reading the conjugator backwards, one letter at a time; it comes
to rest on the disk whose index is the image of 2 under the projection of
w^-1.

Ribbon singularities are tracked combinatorially.  Each move of the free
end passes one disk, in front of it or behind it.  If the next move passes
on the other side, the band has to go through the disk it just passed,
which is one ribbon singularity with that disk.  The final move lands on
the attaching disk and pierces nothing.  A positive letter sigma_k carries
the strand in position k over the strand in position k+1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bands import BandPresentation, presentation_product
from .braid_core import BraidWord, closure_components, inverse, permutation


@dataclass(frozen=True)
class TrajectoryStep:
    start: int
    position: int  # disk passed, which is also where the end now sits
    sign: int
    over: bool

    @property
    def gap(self) -> int:
        return min(self.start, self.position)


@dataclass(frozen=True)
class BandGeometry:
    index: int
    sign: int
    attach_start: int
    attach_end: int
    trajectory: tuple[TrajectoryStep, ...]
    singularities: tuple[int, ...]
    self_intersections: int

    @property
    def attach(self) -> tuple[int, int]:
        return (self.attach_start, self.attach_end)

    def swept_interval(self) -> tuple[int, int]:
        spots = [2] + [s.position for s in self.trajectory]
        return min(spots), max(spots)


def band_trajectory(conjugator: BraidWord) -> tuple[TrajectoryStep, ...]:
    """Moves of the free band end while the conjugator is read backwards."""
    pos = 2
    steps = []
    for x in reversed(conjugator.letters):
        k = abs(x)
        if pos == k:
            new, rightward = k + 1, True
        elif pos == k + 1:
            new, rightward = k, False
        else:
            continue
        steps.append(TrajectoryStep(pos, new, 1 if x > 0 else -1, (x > 0) == rightward))
        pos = new
    return tuple(steps)


def _singularities(steps: tuple[TrajectoryStep, ...]) -> tuple[int, ...]:
    out = []
    for here, nxt in zip(steps, steps[1:]):
        if here.over != nxt.over:
            out.append(here.position)
    return tuple(out)


def _self_intersections(steps: tuple[TrajectoryStep, ...]) -> int:
    # the band folds back over itself when a non-consecutive move reuses a gap
    count = 0
    for a in range(len(steps)):
        for b in range(a + 2, len(steps)):
            if steps[a].gap == steps[b].gap:
                count += 1
    return count


def band_geometry(index: int, conjugator: BraidWord, sign: int) -> BandGeometry:
    steps = band_trajectory(conjugator)
    end = permutation(inverse(conjugator))(2)
    return BandGeometry(
        index=index,
        sign=sign,
        attach_start=1,
        attach_end=end,
        trajectory=steps,
        singularities=_singularities(steps),
        self_intersections=_self_intersections(steps),
    )


@dataclass(frozen=True)
class BandedSurface:
    strands: int
    bands: tuple[BandGeometry, ...]
    source: BandPresentation

    @property
    def disks(self) -> tuple[int, ...]:
        return tuple(range(1, self.strands + 1))

    @property
    def band_count(self) -> int:
        return len(self.bands)

    def boundary(self) -> BraidWord:
        return presentation_product(self.source)

    def boundary_components(self) -> int:
        return closure_components(self.boundary())

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def total_singularities(self) -> int:
        return sum(len(b.singularities) for b in self.bands)


def build_surface(p: BandPresentation) -> BandedSurface:
    bands = tuple(
        band_geometry(j, b.conjugator, b.sign) for j, b in enumerate(p.bands, start=1)
    )
    return BandedSurface(p.strands, bands, p)


def euler_characteristic(s: BandedSurface) -> int:
    """n disks (0-handles) and c bands (1-handles)."""
    return s.strands - s.band_count


def ribbon_summary(s: BandedSurface) -> dict:
    bands = [
        {
            "index": b.index,
            "sign": b.sign,
            "attach": [b.attach_start, b.attach_end],
            "singularities": list(b.singularities),
            "self_intersections": b.self_intersections,
        }
        for b in s.bands
    ]
    return {
        "strands": s.strands,
        "band_count": s.band_count,
        "bands": bands,
        "total_singularities": s.total_singularities(),
        "total_self_intersections": sum(b.self_intersections for b in s.bands),
        "euler_characteristic": euler_characteristic(s),
        "boundary_components": s.boundary_components(),
    }
