"""Difference sets, lag-weight tables, and coarray structure checks.

The weight function z(l) counts the ordered sample pairs whose instants
differ by exactly l virtual-grid ticks. It is computed two independent
ways: by brute-force enumeration over all ordered pairs of a snapshot
(:func:`weight_enumerated`, valid for every scheme kind), and in closed
form for the super-Nyquist co-prime kind (:func:`weight_closed`). The two
must agree lag for lag, in exact integer arithmetic; the test suite holds
them to that.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedSchemeError
from .schemes import InstantSet, SchemeConfig, SchemeKind, sample_instants

ENUMERATED = "enumerated"
CLOSED_FORM = "closed-form"


@dataclass(frozen=True, eq=False)
class LagTable:
    """Weight function of a sampling pattern.

    Attributes
    ----------
    weights : dict
        Map from integer lag (virtual-grid ticks) to the positive number
        of ordered sample pairs at that lag. Lags with zero weight
        (holes) are absent.
    max_lag : int
        Largest absolute lag with nonzero weight.
    total_pairs : int
        Sum of all weights; equals the squared number of combined
        instants in one snapshot.
    config : SchemeConfig
        Scheme the table was computed for.
    source : str
        ``"enumerated"`` or ``"closed-form"``. Multi-level tables are
        always enumerated; no closed form is implemented for them.
    """

    weights: dict[int, int]
    max_lag: int
    total_pairs: int
    config: SchemeConfig
    source: str

    def weight(self, lag: int) -> int:
        """Weight at ``lag``, zero for holes."""
        return self.weights.get(int(lag), 0)

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Sorted lag array and the aligned weight array."""
        lags = np.array(sorted(self.weights), dtype=np.int64)
        values = np.array([self.weights[int(l)] for l in lags], dtype=np.int64)
        return lags, values

    def holes(self) -> np.ndarray:
        """Lags inside [-max_lag, max_lag] with zero weight."""
        full = np.arange(-self.max_lag, self.max_lag + 1, dtype=np.int64)
        return np.array([l for l in full if int(l) not in self.weights], dtype=np.int64)


@dataclass(frozen=True, eq=False)
class DifferenceSets:
    """Self and cross difference multisets of a single-period pattern.

    All values are integers on the scheme's virtual grid, so super-Nyquist
    cross differences (half-period offsets) are odd integers while every
    self difference is even. Arrays are sorted and keep multiplicity.
    """

    self_first: np.ndarray
    self_second: np.ndarray
    cross_pos: np.ndarray
    cross_neg: np.ndarray
    config: SchemeConfig


@dataclass(frozen=True)
class StructureReport:
    """Summary of the structural properties of a difference set.

    ``self_cross_disjoint`` records whether no cross difference ever
    equals a self difference (true for the super-Nyquist kind, where the
    parity split makes it automatic). ``distinct_cross_count`` is the
    number of distinct values in the positive cross set, expected to be
    M*N. ``prototype_two_contributors`` checks, for the prototype kind
    only, that every lag reachable through cross differences alone has
    exactly two ordered pairs contributing; it is None for other kinds.
    ``sign_paired_cross_values`` lists the (l, -l) pairs that both occur
    inside the positive cross set.
    """

    self_cross_disjoint: bool
    distinct_cross_count: int
    prototype_two_contributors: bool | None
    sign_paired_cross_values: tuple[tuple[int, int], ...]
    config: SchemeConfig


def weight_enumerated(instants: InstantSet) -> LagTable:
    """Count ordered sample pairs at every lag by exhaustive enumeration.

    This is the reference oracle: z(l) is the number of ordered pairs
    (i, j) of combined instants with t_i - t_j = l. The total over all
    lags is therefore the squared instant count. Works for every scheme
    kind, including multi-level patterns that have no closed form.
    """
    t = instants.combined
    if t.size == 0:
        raise ValueError("cannot enumerate weights of an empty instant set")
    diffs = t[:, None] - t[None, :]
    lags, counts = np.unique(diffs, return_counts=True)
    weights = {int(l): int(c) for l, c in zip(lags, counts)}
    return LagTable(
        weights=weights,
        max_lag=int(np.max(np.abs(lags))),
        total_pairs=int(t.size) ** 2,
        config=instants.config,
        source=ENUMERATED,
    )


def weight_closed(config: SchemeConfig) -> LagTable:
    """Closed-form weight function of the super-Nyquist co-prime sampler.

    Three additive terms build the table: a triangle of height r*N at the
    even lags 2*M*k (sampler-1 self pairs), a triangle of height r*M at
    the even lags 2*N*k (sampler-2 self pairs), and one unit deposited at
    both +c and -c for every cross pair, where c = |2*M*i - 2*N*j - 1| is
    odd. Depositing on both signs mirrors ordered-pair counting, and
    collisions accumulate additively, so the result matches
    :func:`weight_enumerated` exactly.

    Raises
    ------
    UnsupportedSchemeError
        For the prototype and multi-level kinds. Prototype weights come
        from enumeration; no multi-level closed form is implemented.
    """
    if config.kind is not SchemeKind.SUPER_NYQUIST:
        raise UnsupportedSchemeError(
            f"closed-form weights exist only for the super-nyquist kind, got {config.kind.value}"
        )
    r, m, n = config.periods, config.m, config.n
    weights: dict[int, int] = defaultdict(int)
    for k in range(-(r * n) + 1, r * n):
        weights[2 * m * k] += r * n - abs(k)
    for k in range(-(r * m) + 1, r * m):
        weights[2 * n * k] += r * m - abs(k)
    for i in range(r * n):
        for j in range(r * m):
            c = abs(2 * m * i - 2 * n * j - 1)
            weights[c] += 1
            weights[-c] += 1
    table = dict(weights)
    return LagTable(
        weights=table,
        max_lag=max(abs(l) for l in table),
        total_pairs=config.pair_count,
        config=config,
        source=CLOSED_FORM,
    )


def difference_sets(config: SchemeConfig) -> DifferenceSets:
    """Self and cross difference multisets of a single-period pattern.

    Restricted to the co-prime kinds with ``periods == 1``; multi-level
    patterns are analysed through :func:`weight_enumerated` instead.
    The first sampler contributes N^2 self differences, the second M^2,
    and the cross set M*N values (each negated into ``cross_neg``).
    """
    if config.kind not in (SchemeKind.PROTOTYPE, SchemeKind.SUPER_NYQUIST):
        raise UnsupportedSchemeError(
            "difference_sets covers the co-prime kinds; enumerate multi-level weights instead"
        )
    if config.periods != 1:
        raise UnsupportedSchemeError("difference_sets is defined for a single period")
    q = config.grid_denominator
    offset = 0 if config.kind is SchemeKind.PROTOTYPE else 1
    first = q * config.m * np.arange(config.n, dtype=np.int64)
    second = q * config.n * np.arange(config.m, dtype=np.int64) + offset
    self_first = np.sort((first[:, None] - first[None, :]).ravel())
    self_second = np.sort((second[:, None] - second[None, :]).ravel())
    cross_pos = np.sort((first[:, None] - second[None, :]).ravel())
    for arr in (self_first, self_second, cross_pos):
        arr.flags.writeable = False
    cross_neg = -cross_pos[::-1]
    cross_neg.flags.writeable = False
    return DifferenceSets(
        self_first=self_first,
        self_second=self_second,
        cross_pos=cross_pos,
        cross_neg=cross_neg,
        config=config,
    )


def verify_structure(config: SchemeConfig) -> StructureReport:
    """Check the structural properties of a single-period difference set."""
    sets = difference_sets(config)
    self_values = set(sets.self_first.tolist()) | set(sets.self_second.tolist())
    cross_pos_values = set(sets.cross_pos.tolist())
    cross_values = cross_pos_values | set(sets.cross_neg.tolist())

    paired = tuple(
        (l, -l) for l in sorted(cross_pos_values) if l > 0 and -l in cross_pos_values
    )

    two_contributors: bool | None = None
    if config.kind is SchemeKind.PROTOTYPE:
        table = weight_enumerated(sample_instants(config))
        cross_only = cross_values - self_values
        two_contributors = all(table.weight(l) == 2 for l in cross_only)

    return StructureReport(
        self_cross_disjoint=self_values.isdisjoint(cross_values),
        distinct_cross_count=len(cross_pos_values),
        prototype_two_contributors=two_contributors,
        sign_paired_cross_values=paired,
        config=config,
    )
