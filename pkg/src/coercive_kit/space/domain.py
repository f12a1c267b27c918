"""Boxes, boundary regions and multi-indices."""

import itertools
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..exceptions import ZeroMeasureRegion

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class DomainBox:
    """Axis-aligned box ``prod_k (lo_k, hi_k)`` in 1, 2 or 3 dimensions."""

    intervals: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        ivs = tuple((float(lo), float(hi)) for lo, hi in self.intervals)
        if not 1 <= len(ivs) <= 3:
            raise ValueError(f"box dimension must be 1, 2 or 3, got {len(ivs)}")
        for lo, hi in ivs:
            if not lo < hi:
                raise ValueError(f"empty interval ({lo}, {hi})")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def unit(cls, d):
        return cls(((0.0, 1.0),) * d)

    @classmethod
    def parse(cls, text):
        """Parse ``"lo:hi[,lo:hi...]"``."""
        parts = []
        for chunk in text.split(","):
            lo, hi = chunk.split(":")
            parts.append((float(lo), float(hi)))
        return cls(tuple(parts))

    @property
    def d(self):
        return len(self.intervals)

    @property
    def lengths(self):
        return tuple(hi - lo for lo, hi in self.intervals)

    @property
    def volume(self):
        return math.prod(self.lengths)

    def __str__(self):
        return ",".join(f"{lo:g}:{hi:g}" for lo, hi in self.intervals)


def face_axis(face):
    """Face ``2k`` is ``x_k = lo_k``, face ``2k + 1`` is ``x_k = hi_k``."""
    return face // 2, face % 2


@dataclass(frozen=True)
class BoundaryRegion:
    """Union of (fractions of) box faces.

    Each part is ``(face, (a, b))``; for d >= 2 the fraction ``0 <= a < b <= 1``
    restricts the first tangential coordinate of the face, all other
    tangential coordinates are kept whole.  In 1-D a face is an endpoint and
    carries counting measure, so the fraction is ignored.
    """

    parts: Tuple[Tuple[int, Tuple[float, float]], ...]

    def __post_init__(self):
        parts = tuple((int(f), (float(a), float(b))) for f, (a, b) in self.parts)
        faces = [f for f, _ in parts]
        if len(set(faces)) != len(faces):
            raise ValueError("boundary region lists a face twice")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def full(cls, d):
        return cls(tuple((f, (0.0, 1.0)) for f in range(2 * d)))

    @classmethod
    def face(cls, face, fraction=(0.0, 1.0)):
        return cls(((face, fraction),))

    @classmethod
    def parse(cls, text, d):
        """Parse ``full``, ``face:<id>`` or ``face:<id>:<fraction>``.

        A single fraction ``f`` selects ``[0, f]`` of the face.
        """
        text = text.strip()
        if text == "full":
            return cls.full(d)
        bits = text.split(":")
        if bits[0] != "face" or len(bits) not in (2, 3):
            raise ValueError(f"cannot parse boundary region {text!r}")
        frac = (0.0, float(bits[2])) if len(bits) == 3 else (0.0, 1.0)
        return cls.face(int(bits[1]), frac)

    def validate(self, box: DomainBox):
        if not self.parts:
            raise ZeroMeasureRegion("boundary region is empty")
        for face, (a, b) in self.parts:
            if not 0 <= face < 2 * box.d:
                raise ValueError(f"face {face} does not exist for d={box.d}")
            if box.d > 1 and not (0.0 <= a < b <= 1.0):
                raise ZeroMeasureRegion(f"face {face} fraction ({a}, {b}) has zero measure")
        return self

    def tangential_ranges(self, box: DomainBox, face, fraction):
        """Integration ranges for the tangential coordinates of one part."""
        axis, _ = face_axis(face)
        ranges = {}
        first = True
        for k, (lo, hi) in enumerate(box.intervals):
            if k == axis:
                continue
            if first:
                a, b = fraction
                ranges[k] = (lo + a * (hi - lo), lo + b * (hi - lo))
                first = False
            else:
                ranges[k] = (lo, hi)
        return ranges

    def measure(self, box: DomainBox):
        self.validate(box)
        total = 0.0
        for face, frac in self.parts:
            ranges = self.tangential_ranges(box, face, frac)
            total += math.prod(hi - lo for lo, hi in ranges.values())
        return total

    def __str__(self):
        return ";".join(f"face:{f}:{a:g}-{b:g}" for f, (a, b) in self.parts)


def enumerate_multi_indices(d, order, mode="exact"):
    """All multi-indices in ``d`` variables of the given order.

    ``mode="exact"`` gives ``|s| == order``, ``mode="up-to"`` gives
    ``|s| <= order``.  The list is lexicographically sorted.
    """
    if d not in (1, 2, 3):
        raise ValueError("d must be 1, 2 or 3")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if mode not in ("exact", "up-to"):
        raise ValueError(f"unknown mode {mode!r}")
    out = [
        s
        for s in itertools.product(range(order + 1), repeat=d)
        if sum(s) == order or (mode == "up-to" and sum(s) < order)
    ]
    return sorted(out)


def multinomial(s: Sequence[int]):
    """``|s|! / s!``: how many ordered derivative tuples give ``D^s``."""
    out = math.factorial(sum(s))
    for k in s:
        out //= math.factorial(k)
    return out
