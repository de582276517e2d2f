"""Finite-support integer lattice pmfs: construction, moments, residues.

A pmf is stored canonically: smallest and largest support points carry
positive weight (interior zeros are kept, they matter for span and window
statistics), and any probability removed by tail trimming is accounted for
in ``trimmed_mass``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Weights more negative than this indicate corrupted input rather than
# round-off; anything in [NEG_CLAMP, 0) is clamped to 0.
NEG_CLAMP = -1e-12
# Total mass must be within this of 1 (including trimmed_mass) unless the
# caller explicitly opts out.
MASS_TOL = 1e-9


@dataclass(frozen=True)
class Normalization:
    """Centering/scaling pair used to normalize a sum before comparing to a
    continuous limit law."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("normalization must be finite")
        if self.b <= 0:
            raise ValueError("scaling b must be > 0")


@dataclass(frozen=True, eq=False)
class LatticePmf:
    """Probability mass function on the integers with finite support.

    ``weights[i]`` is P{X = offset + i}. Instances are immutable; the
    weight array is marked read-only.
    """

    offset: int
    weights: np.ndarray
    trimmed_mass: float = 0.0

    def __post_init__(self):
        self.weights.setflags(write=False)

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def min_support(self) -> int:
        return self.offset

    @property
    def max_support(self) -> int:
        return self.offset + len(self.weights) - 1

    @property
    def total_mass(self) -> float:
        return math.fsum(self.weights)

    def prob(self, m: int) -> float:
        """P{X = m}, zero outside the stored support."""
        i = m - self.offset
        if 0 <= i < len(self.weights):
            return float(self.weights[i])
        return 0.0

    def to_dict(self) -> dict:
        return {
            "offset": int(self.offset),
            "weights": [float(w) for w in self.weights],
            "trimmed_mass": float(self.trimmed_mass),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LatticePmf":
        # Direct construction: serialized pmfs are already canonical and the
        # round trip must preserve every weight bit-for-bit.
        w = np.array(d["weights"], dtype=np.float64)
        if w.size == 0 or np.any(w < 0) or w[0] == 0 or w[-1] == 0:
            raise ValueError("serialized pmf is not canonical")
        return cls(int(d["offset"]), w, float(d.get("trimmed_mass", 0.0)))


def make_pmf(offset, weights, trimmed_mass=0.0, unnormalized=False) -> LatticePmf:
    """Build a canonical LatticePmf.

    Tiny negatives in [-1e-12, 0) are clamped to 0; leading/trailing zeros
    are stripped (interior zeros are preserved); weights are rescaled to
    total mass 1 - trimmed_mass when the input is within 1e-9 of that.
    Raises ValueError on weights below the clamp threshold or on total mass
    off by more than 1e-9, unless ``unnormalized`` is set.
    """
    w = np.array(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a nonempty 1-D sequence")
    if trimmed_mass < 0:
        raise ValueError("trimmed_mass must be >= 0")
    if np.any(w < NEG_CLAMP):
        raise ValueError(
            "weight below %g: corrupted input (min %g)" % (NEG_CLAMP, w.min())
        )
    w[w < 0] = 0.0
    if not np.any(w > 0):
        raise ValueError("at least one weight must be > 0")

    total = math.fsum(w)
    target = 1.0 - trimmed_mass
    if not unnormalized:
        if abs(total + trimmed_mass - 1.0) > MASS_TOL:
            raise ValueError(
                "total mass %r is not within %g of 1; pass unnormalized=True "
                "to keep it" % (total + trimmed_mass, MASS_TOL)
            )
        # The 1e-15 guard keeps canonicalization idempotent: a mass already
        # normalized here lands within one rounding of the target and is
        # left untouched on a second pass.
        if abs(total - target) > 1e-15 * max(1.0, abs(target)):
            w *= target / total

    nz = np.nonzero(w)[0]
    lo, hi = int(nz[0]), int(nz[-1])
    w = w[lo : hi + 1].copy()
    return LatticePmf(int(offset) + lo, w, float(trimmed_mass))


def delta(m: int) -> LatticePmf:
    """Point mass at the integer m."""
    return make_pmf(m, [1.0])


def mean_and_std(p: LatticePmf) -> Normalization:
    """Exact mean and standard deviation of the pmf, via compensated sums.

    Raises ValueError for a degenerate (single-atom) pmf, whose standard
    deviation is not a valid scaling.
    """
    m = p.offset + np.arange(len(p.weights), dtype=np.float64)
    a = math.fsum(p.weights * m)
    var = math.fsum(p.weights * (m - a) ** 2)
    if var <= 0.0 or np.count_nonzero(p.weights) < 2:
        raise ValueError("zero variance: pmf is degenerate (single atom)")
    return Normalization(a, math.sqrt(var))


def residue_distribution(p: LatticePmf, d: int) -> list[float]:
    """Mass in each residue class mod d: entry r is P{X ≡ r (mod d)}."""
    if d < 1:
        raise ValueError("modulus d must be >= 1")
    idx = (p.offset + np.arange(len(p.weights))) % d
    return [math.fsum(p.weights[idx == r]) for r in range(d)]


def mod_deviation(p: LatticePmf, d: int) -> float:
    """Max deviation of the residue distribution mod d from uniform 1/d."""
    res = residue_distribution(p, d)
    return max(abs(r - 1.0 / d) for r in res)
