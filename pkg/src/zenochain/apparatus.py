"""Single-configuration optics for the polarizer chain.

A chain of n slots sits between a horizontally polarized source and a
horizontally analyzing detector. Ahead of each slot the polarization is
rotated by pi/2n; a slot may hold a horizontal polarizer that projects the
state back. The transmitted intensity depends only on the multiset of
distances between consecutive analyzing events, which this module extracts
and evaluates two independent ways: a closed-form product over gaps and a
step-by-step amplitude simulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ApparatusConfig",
    "GapComposition",
    "PolarizationState",
    "classical_intensity",
    "gaps",
    "quantum_intensity",
    "simulate_intensity",
    "zeno_survival",
]


@dataclass(frozen=True, slots=True)
class ApparatusConfig:
    """Occupancy of the n polarizer slots; slot i is ``present[i - 1]``."""

    n: int
    present: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        present = tuple(int(b) for b in self.present)
        object.__setattr__(self, "present", present)
        if len(present) != self.n:
            raise ValueError(f"need {self.n} presence bits, got {len(present)}")
        if any(b not in (0, 1) for b in present):
            raise ValueError(f"presence bits must be 0 or 1, got {present}")

    @classmethod
    def from_bits(cls, bits: str) -> "ApparatusConfig":
        """Parse a slot string read left to right, e.g. ``"010"`` = slot 2 only."""
        return cls(len(bits), tuple(int(c) for c in bits))

    @classmethod
    def from_index(cls, n: int, index: int) -> "ApparatusConfig":
        """Configuration whose slot i holds a polarizer iff bit i-1 of ``index`` is set."""
        if not 0 <= index < (1 << n):
            raise ValueError(f"index must lie in [0, 2^{n}), got {index}")
        return cls(n, tuple((index >> i) & 1 for i in range(n)))

    @property
    def installed(self) -> int:
        """Number of polarizers present."""
        return sum(self.present)

    def bits(self) -> str:
        """Slot string read left to right; inverse of :meth:`from_bits`."""
        return "".join(map(str, self.present))


@dataclass(frozen=True, slots=True)
class GapComposition:
    """Ordered distances between consecutive analyzing events; sums to ``n``."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"gaps must be positive, got {self.parts}")
        if sum(self.parts) != self.n:
            raise ValueError(f"gaps {self.parts} do not sum to n={self.n}")


@dataclass(frozen=True, slots=True)
class PolarizationState:
    """Real horizontal and vertical amplitudes of a single photon mode."""

    amp_h: float
    amp_v: float

    def __post_init__(self) -> None:
        # Projections only ever shrink the norm; allow float slack on rotations.
        if self.amp_h * self.amp_h + self.amp_v * self.amp_v > 1.0 + 1e-9:
            raise ValueError("amplitude norm exceeds 1")

    def rotated(self, angle: float) -> "PolarizationState":
        c = math.cos(angle)
        s = math.sin(angle)
        return PolarizationState(
            self.amp_h * c - self.amp_v * s,
            self.amp_h * s + self.amp_v * c,
        )

    def projected_horizontal(self) -> "PolarizationState":
        """State after a horizontal analyzer absorbs the vertical component."""
        return PolarizationState(self.amp_h, 0.0)

    @property
    def horizontal_intensity(self) -> float:
        return self.amp_h * self.amp_h


def gaps(config: ApparatusConfig) -> GapComposition:
    """Distances from the source to each analyzing event, in beam order.

    Analyzing events are the installed polarizers plus the detector, which
    analyzes horizontally itself. A polarizer in the last slot makes the
    detector's projection redundant, so no zero-length gap is emitted; with
    nothing installed the composition is the single gap ``(n,)``.
    """
    parts = []
    last = 0
    for slot in range(1, config.n + 1):
        if config.present[slot - 1]:
            parts.append(slot - last)
            last = slot
    if last < config.n:
        parts.append(config.n - last)
    return GapComposition(tuple(parts), config.n)


def quantum_intensity(config: ApparatusConfig) -> float:
    """Transmitted intensity by the gap-product rule: prod of cos^2(g pi/2n).

    Returns exactly 0.0 when some gap spans the whole chain, i.e. the beam
    arrives fully vertical at an analyzer; that happens only for the empty
    configuration and for a lone polarizer in the last slot. No other
    configuration darkens the detector completely.
    """
    n = config.n
    result = 1.0
    for g in gaps(config).parts:
        if g == n:
            return 0.0
        c = math.cos(g * math.pi / (2.0 * n))
        result *= c * c
    return result


def simulate_intensity(config: ApparatusConfig) -> float:
    """Step-by-step oracle for :func:`quantum_intensity`.

    Starts horizontally polarized, rotates by pi/2n ahead of every slot,
    projects at each installed polarizer and finally at the detector, and
    reports the surviving intensity. No closed-form shortcuts, so it serves
    as an independent check; agreement is within 1e-12 on every tested
    configuration (the exact zeros come out as ~1e-33 rounding residue).
    """
    step = math.pi / (2.0 * config.n)
    state = PolarizationState(1.0, 0.0)
    for installed in config.present:
        state = state.rotated(step)
        if installed:
            state = state.projected_horizontal()
    return state.projected_horizontal().horizontal_intensity


def classical_intensity(config: ApparatusConfig, alpha: float) -> float:
    """Intensity when each installed element just attenuates by ``alpha``.

    The rotator-free counterpart: with k polarizers installed the detector
    sees ``alpha**k`` regardless of where they sit.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    return alpha ** config.installed


def zeno_survival(n: int) -> float:
    """Transmission of the fully instrumented chain, ``cos^2(pi/2n) ** n``.

    Frequent projection pins the polarization to the rotating frame, so the
    value climbs toward 1; it is bounded below by ``1 - pi^2 / (4n)`` for
    every n >= 2. Exactly 0.0 at n = 1, where the single rotation reaches
    vertical before the only analyzer.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0.0
    c = math.cos(math.pi / (2.0 * n))
    return (c * c) ** n
