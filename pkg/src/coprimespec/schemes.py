"""Co-prime and multi-level sampling schemes on an exact integer grid.

Every sampling instant is stored as an integer count of virtual-grid ticks,
where one tick is the Nyquist period divided by the scheme's grid
denominator: 1 for the prototype co-prime pair, 2 for the super-Nyquist
variant whose second sampler is offset by half a Nyquist period, and q for
a q-level sampler whose i-th branch is offset by (i-1)/q of a period.
Keeping instants integral makes all difference-set arithmetic exact, so lag
tables and everything derived from them are reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import InvalidPeriodsError, NotCoprimeError, TooFewLevelsError


class SchemeKind(Enum):
    """Supported sampling structures."""

    PROTOTYPE = "prototype"
    SUPER_NYQUIST = "super-nyquist"
    MULTI_LEVEL = "multi-level"


#: Kinds built from a single co-prime pair (M, N).
COPRIME_KINDS = (SchemeKind.PROTOTYPE, SchemeKind.SUPER_NYQUIST)


@dataclass(frozen=True)
class SchemeConfig:
    """Validated description of one sampling scheme.

    Instances should be built through :func:`make_scheme`, which checks
    co-primality and fills in the grid denominator. The two undersampling
    factors ``m`` and ``n`` are used by the co-prime kinds; ``levels``
    holds the pairwise co-prime branch factors of a multi-level sampler.

    Attributes
    ----------
    kind : SchemeKind
        Which sampling structure this is.
    m, n : int
        Co-prime undersampling factors (sampler 1 keeps every m-th virtual
        Nyquist sample, sampler 2 every n-th). Zero for multi-level.
    levels : tuple of int
        Pairwise co-prime factors of a multi-level sampler, in branch
        order. Empty for the co-prime kinds.
    periods : int
        Number of co-prime (or multi-level) periods acquired per snapshot.
    grid_denominator : int
        How many virtual-grid ticks fit in one Nyquist period.
    """

    kind: SchemeKind
    m: int = 0
    n: int = 0
    levels: tuple[int, ...] = ()
    periods: int = 1
    grid_denominator: int = 1

    # -- derived bookkeeping -------------------------------------------------

    @property
    def is_coprime_pair(self) -> bool:
        return self.kind in COPRIME_KINDS

    @property
    def level_spacings(self) -> tuple[int, ...]:
        """Inter-sample spacing of each multi-level branch, in Nyquist periods.

        Branch i is spaced by the product of all the other level factors.
        """
        total = math.prod(self.levels)
        return tuple(total // value for value in self.levels)

    @property
    def period_ticks(self) -> int:
        """Virtual-grid ticks in one co-prime (or multi-level) period."""
        if self.is_coprime_pair:
            return self.m * self.n * self.grid_denominator
        return math.prod(self.levels) * self.grid_denominator

    @property
    def snapshot_span(self) -> int:
        """Virtual-grid ticks covered by one snapshot (``periods`` periods)."""
        return self.periods * self.period_ticks

    @property
    def samples_per_snapshot(self) -> int:
        """Number of acquisition events in one snapshot, across all samplers."""
        if self.is_coprime_pair:
            return self.periods * (self.m + self.n)
        return self.periods * sum(self.levels)

    @property
    def pair_count(self) -> int:
        """Ordered sample pairs per snapshot; the natural lag normalization."""
        return self.samples_per_snapshot**2

    def slug(self) -> str:
        """Filesystem-safe label, e.g. ``super-nyquist_4_3_r1``."""
        if self.is_coprime_pair:
            core = f"{self.kind.value}_{self.m}_{self.n}"
        else:
            core = f"{self.kind.value}_" + "_".join(str(v) for v in self.levels)
        return f"{core}_r{self.periods}"

    def describe(self) -> dict[str, object]:
        """Plain-dict form used in CSV headers and JSON payloads."""
        out: dict[str, object] = {"scheme": self.kind.value}
        if self.is_coprime_pair:
            out["m"] = self.m
            out["n"] = self.n
        else:
            out["levels"] = ",".join(str(v) for v in self.levels)
        out["periods"] = self.periods
        out["grid_denominator"] = self.grid_denominator
        return out


@dataclass(frozen=True, eq=False)
class InstantSet:
    """Sampling instants of one snapshot, in virtual-grid ticks.

    ``per_sampler`` holds one sorted int64 array per sub-sampler;
    ``combined`` is the sorted multiset merge of all of them (for the
    prototype kind the coinciding zeroth samples appear twice, once per
    sampler, because both converters acquire at that instant).
    """

    config: SchemeConfig
    per_sampler: tuple[np.ndarray, ...]
    combined: np.ndarray
    snapshot_index: int
    snapshot_span: int

    def __len__(self) -> int:
        return int(self.combined.size)


def _as_positive_int(value: object, name: str) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    return int(value)


def make_scheme(
    kind: SchemeKind | str,
    m: int | None = None,
    n: int | None = None,
    levels: Sequence[int] | None = None,
    periods: int = 1,
) -> SchemeConfig:
    """Build and validate a sampling-scheme configuration.

    Parameters
    ----------
    kind : SchemeKind or str
        ``"prototype"``, ``"super-nyquist"``, or ``"multi-level"``.
    m, n : int, optional
        Undersampling factors for the co-prime kinds. Must be co-prime.
    levels : sequence of int, optional
        Pairwise co-prime factors for the multi-level kind (at least two).
    periods : int
        Periods acquired per snapshot, at least 1.

    Raises
    ------
    NotCoprimeError
        If any required pair of factors shares a common divisor.
    TooFewLevelsError
        If a multi-level scheme is requested with fewer than two levels.
    InvalidPeriodsError
        If ``periods`` is not a positive integer.
    """
    kind = SchemeKind(kind) if not isinstance(kind, SchemeKind) else kind
    if not isinstance(periods, (int, np.integer)) or isinstance(periods, bool) or periods < 1:
        raise InvalidPeriodsError(f"periods must be a positive integer, got {periods!r}")
    periods = int(periods)

    if kind in COPRIME_KINDS:
        if m is None or n is None:
            raise ValueError(f"{kind.value} schemes need both m and n")
        m = _as_positive_int(m, "m")
        n = _as_positive_int(n, "n")
        if math.gcd(m, n) != 1:
            raise NotCoprimeError(f"({m}, {n}) is not a co-prime pair (gcd={math.gcd(m, n)})")
        denominator = 1 if kind is SchemeKind.PROTOTYPE else 2
        return SchemeConfig(kind=kind, m=m, n=n, periods=periods, grid_denominator=denominator)

    if levels is None or len(levels) < 2:
        raise TooFewLevelsError("multi-level schemes need at least two level factors")
    checked = tuple(_as_positive_int(v, "level") for v in levels)
    for a, b in combinations(checked, 2):
        if math.gcd(a, b) != 1:
            raise NotCoprimeError(f"levels {a} and {b} are not co-prime (gcd={math.gcd(a, b)})")
    return SchemeConfig(
        kind=SchemeKind.MULTI_LEVEL,
        levels=checked,
        periods=periods,
        grid_denominator=len(checked),
    )


def _base_instants(config: SchemeConfig) -> tuple[np.ndarray, ...]:
    """Snapshot-zero instants of each sub-sampler, in virtual-grid ticks."""
    r = config.periods
    if config.kind is SchemeKind.PROTOTYPE:
        first = config.m * np.arange(r * config.n, dtype=np.int64)
        second = config.n * np.arange(r * config.m, dtype=np.int64)
        return (first, second)
    if config.kind is SchemeKind.SUPER_NYQUIST:
        first = 2 * config.m * np.arange(r * config.n, dtype=np.int64)
        second = 2 * config.n * np.arange(r * config.m, dtype=np.int64) + 1
        return (first, second)
    q = config.grid_denominator
    branches = []
    for offset, (factor, spacing) in enumerate(zip(config.levels, config.level_spacings)):
        branches.append(q * spacing * np.arange(r * factor, dtype=np.int64) + offset)
    return tuple(branches)


def sample_instants(config: SchemeConfig, snapshot_index: int = 0) -> InstantSet:
    """Generate the sampling instants of one snapshot.

    Snapshot ``k`` is the snapshot-zero pattern shifted by ``k`` times the
    snapshot span, so consecutive snapshots tile the time axis without
    gaps or overlap.

    Parameters
    ----------
    config : SchemeConfig
        Validated scheme description.
    snapshot_index : int
        Zero-based snapshot number.

    Returns
    -------
    InstantSet
        Per-sampler and combined instants, in units of one virtual tick.
    """
    if snapshot_index < 0:
        raise ValueError(f"snapshot_index must be >= 0, got {snapshot_index}")
    span = config.snapshot_span
    shift = np.int64(snapshot_index) * span
    per_sampler = tuple(arr + shift for arr in _base_instants(config))
    combined = np.sort(np.concatenate(per_sampler))
    for arr in per_sampler:
        arr.flags.writeable = False
    combined.flags.writeable = False
    return InstantSet(
        config=config,
        per_sampler=per_sampler,
        combined=combined,
        snapshot_index=int(snapshot_index),
        snapshot_span=span,
    )
