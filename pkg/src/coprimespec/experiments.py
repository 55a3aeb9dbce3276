"""Experiment harness: frequency mapping, presets, CSV and SVG emission.

Outputs are plain CSV files with '#'-prefixed header comments carrying
the full configuration and seed; SVG line plots of the same data sit next
to them as a convenience. Reruns with the same configuration produce
byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

from .bias import BiasWindow, bias_closed, bias_from_weights
from .csvio import format_value, write_csv
from .diffsets import (
    LagTable,
    StructureReport,
    difference_sets,
    verify_structure,
    weight_closed,
    weight_enumerated,
)
from .errors import InvalidConfigError, NonPositiveInputError
from .estimator import correlogram_psd, find_peaks
from .schemes import SchemeConfig, SchemeKind, make_scheme, sample_instants
from .signals import SignalSpec
from .spectra import SpectrumEstimate
from .svgplot import write_dual_scale_svg, write_line_svg

DEFAULT_SEED = 0
DEFAULT_SAMPLE_RATE_HZ = 500.0
PSD_GRID = 1024
BIAS_GRID = 4096
#: Periods per snapshot in the canned tone scenarios. Ten snapshots at one
#: period leave the estimate dominated by the wide single-period bias
#: window; six periods narrow it enough that every tone peak sits on its
#: true grid bin with margin, while keeping snapshots short.
SCENARIO_PERIODS = 6
FIGURE_PAIRS = ((4, 3), (3, 4), (5, 3), (3, 5))
TABLE_FREQUENCIES_HZ = (50.0, 150.0, 250.0, 300.0, 450.0, 500.0)

_TWO_TONES_HZ = (50.0, 150.0)
_THREE_TONES_HZ = (50.0, 150.0, 300.0)
_FOUR_TONES_HZ = (50.0, 150.0, 300.0, 450.0)


class _Unrepresentable:
    """Sentinel for frequencies above a scheme's measurable band."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - trivial
        return "Unrepresentable"

    def __bool__(self) -> bool:
        return False


UNREPRESENTABLE = _Unrepresentable()


def _grid_denominator_of(scheme: SchemeConfig | SchemeKind | str) -> int:
    if isinstance(scheme, SchemeConfig):
        return scheme.grid_denominator
    kind = SchemeKind(scheme) if not isinstance(scheme, SchemeKind) else scheme
    if kind is SchemeKind.PROTOTYPE:
        return 1
    if kind is SchemeKind.SUPER_NYQUIST:
        return 2
    raise ValueError("multi-level mapping needs a full SchemeConfig (level count sets the grid)")


def map_frequency(
    f_hz: float, f_s: float, scheme: SchemeConfig | SchemeKind | str
) -> float | _Unrepresentable:
    """Map a physical frequency to a scheme's normalized frequency.

    nu = f / (q * f_s / 2), where q is the scheme's grid denominator; a
    result above 1 falls outside the measurable band and is reported as
    :data:`UNREPRESENTABLE` rather than silently folded.
    """
    if f_hz <= 0 or f_s <= 0:
        raise NonPositiveInputError(
            f"frequencies must be positive, got f_hz={f_hz}, f_s={f_s}"
        )
    nu = f_hz / (_grid_denominator_of(scheme) * f_s / 2.0)
    return UNREPRESENTABLE if nu > 1.0 else nu


def fold_alias(nu: float) -> float:
    """Fold a normalized frequency into [0, 1] the way uniform sampling would."""
    nu = float(nu) % 2.0
    return 2.0 - nu if nu > 1.0 else nu


def tones_for_scheme(
    tones_hz: Sequence[float],
    f_s: float,
    config: SchemeConfig,
    seed: int,
    noise_std: float = 0.0,
) -> SignalSpec:
    """Unit-amplitude tone spec for physical frequencies under one scheme.

    Frequencies above the scheme's band are folded to their alias, which
    is exactly what the physical sampler would record.
    """
    tones = []
    for hz in tones_hz:
        nu = map_frequency(hz, f_s, config)
        if nu is UNREPRESENTABLE:
            nu = fold_alias(hz / (config.grid_denominator * f_s / 2.0))
        tones.append((1.0, nu))
    return SignalSpec(tones=tuple(tones), noise_std=noise_std, seed=seed)


# ---------------------------------------------------------------------------
# Declarative experiment configuration
# ---------------------------------------------------------------------------

#: Keys a preset pins; only these are rejected as explicit overrides.
_PRESET_LOCKED = ("scheme", "m", "n", "levels", "periods", "tones", "k", "grid", "seed", "noise_std")


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: a scheme, a signal, and estimation settings.

    ``preset``, when set, pins every field except the output directory;
    explicitly supplying any other field alongside a preset is rejected.
    """

    scheme: str = "super-nyquist"
    m: int = 4
    n: int = 3
    levels: tuple[int, ...] = ()
    periods: int = 1
    tones: tuple[tuple[float, float], ...] = ()
    k: int = 10
    grid: int = PSD_GRID
    seed: int = DEFAULT_SEED
    noise_std: float = 0.0
    out: str = "results"
    preset: str | None = None

    def scheme_config(self) -> SchemeConfig:
        kind = SchemeKind(self.scheme)
        if kind is SchemeKind.MULTI_LEVEL:
            return make_scheme(kind, levels=self.levels, periods=self.periods)
        return make_scheme(kind, m=self.m, n=self.n, periods=self.periods)

    def signal_spec(self) -> SignalSpec:
        return SignalSpec(tones=self.tones, noise_std=self.noise_std, seed=self.seed)

    def describe(self) -> dict[str, object]:
        out: dict[str, object] = dict(self.scheme_config().describe())
        out.update(
            tones=format_tones(self.tones),
            k=self.k,
            grid=self.grid,
            seed=self.seed,
            noise_std=self.noise_std,
        )
        if self.preset:
            out["preset"] = self.preset
        return out


def parse_tones(value: object) -> tuple[tuple[float, float], ...]:
    """Parse tones from 'nu[@amplitude],...' strings or JSON-style lists."""
    if value is None:
        return ()
    if isinstance(value, str):
        tones = []
        for piece in filter(None, (p.strip() for p in value.split(","))):
            nu_text, _, amp_text = piece.partition("@")
            tones.append((float(amp_text) if amp_text else 1.0, float(nu_text)))
        return tuple(tones)
    tones = []
    for entry in value:
        if isinstance(entry, (int, float)):
            tones.append((1.0, float(entry)))
        else:
            amplitude, nu = entry
            tones.append((float(amplitude), float(nu)))
    return tuple(tones)


def format_tones(tones: Sequence[tuple[float, float]]) -> str:
    return ",".join(
        f"{format_value(nu)}@{format_value(amp)}" if amp != 1.0 else format_value(nu)
        for amp, nu in tones
    )


def parse_levels(value: object) -> tuple[int, ...]:
    if value is None:
        return ()
    if isinstance(value, str):
        return tuple(int(p) for p in filter(None, (p.strip() for p in value.split(","))))
    return tuple(int(v) for v in value)


def config_from_sources(
    file_values: Mapping[str, object] | None = None,
    flag_values: Mapping[str, object] | None = None,
) -> ExperimentConfig:
    """Merge a JSON config file with CLI flags (flags win).

    A preset from either source locks the experiment fields: any locked
    key supplied explicitly alongside it raises
    :class:`InvalidConfigError` instead of being merged.
    """
    known = {f.name for f in fields(ExperimentConfig)}
    merged: dict[str, object] = {}
    explicit: set[str] = set()
    for source in (file_values or {}), (flag_values or {}):
        for key, value in source.items():
            key = key.replace("-", "_")
            if key not in known:
                raise InvalidConfigError(f"unknown config key {key!r}")
            if value is None:
                continue
            merged[key] = value
            explicit.add(key)
    if merged.get("preset"):
        locked = explicit.intersection(_PRESET_LOCKED)
        if locked:
            raise InvalidConfigError(
                f"preset {merged['preset']!r} pins all experiment fields; "
                f"remove explicit {sorted(locked)}"
            )
        name = str(merged["preset"])
        if name not in PRESETS:
            raise InvalidConfigError(
                f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
            )
    if "tones" in merged:
        merged["tones"] = parse_tones(merged["tones"])
    if "levels" in merged:
        merged["levels"] = parse_levels(merged["levels"])
    return ExperimentConfig(**merged)  # type: ignore[arg-type]


def load_config_file(path: Path | str) -> dict[str, object]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise InvalidConfigError(f"config file {path} must hold a JSON object")
    return data


# ---------------------------------------------------------------------------
# Emission helpers
# ---------------------------------------------------------------------------


def _comments(config: SchemeConfig, **extra: object) -> dict[str, object]:
    out: dict[str, object] = {"generator": "coprimespec"}
    out.update(config.describe())
    out.update(extra)
    return out


def emit_weight(out_dir: Path, stem: str, table: LagTable) -> list[Path]:
    lags, weights = table.as_arrays()
    comments = _comments(table.config, source=table.source, total_pairs=table.total_pairs)
    csv_path = write_csv(out_dir / f"{stem}.csv", {"lag": lags, "weight": weights}, comments)
    svg_path = write_line_svg(
        out_dir / f"{stem}.svg",
        lags,
        weights,
        title=stem,
        x_label="lag (virtual ticks)",
        y_label="pair count",
    )
    return [csv_path, svg_path]


def emit_bias(out_dir: Path, stem: str, window: BiasWindow, **extra: object) -> list[Path]:
    comments = _comments(
        window.config, grid=window.grid_size, normalization=window.normalization, **extra
    )
    x = window.omega_grid / np.pi
    csv_path = write_csv(
        out_dir / f"{stem}.csv",
        {"omega_over_pi": x, "window_value": window.values},
        comments,
    )
    svg_path = write_dual_scale_svg(
        out_dir / f"{stem}.svg", x, window.values, title=stem, x_label="omega/pi"
    )
    return [csv_path, svg_path]


def emit_psd(
    out_dir: Path, stem: str, estimate: SpectrumEstimate, **extra: object
) -> list[Path]:
    comments = _comments(
        estimate.config,
        k=estimate.snapshots,
        grid=estimate.grid_size,
        normalization=estimate.normalization,
        **extra,
    )
    x = estimate.omega_grid / np.pi
    csv_path = write_csv(
        out_dir / f"{stem}.csv", {"omega_over_pi": x, "psd": estimate.psd}, comments
    )
    svg_path = write_dual_scale_svg(
        out_dir / f"{stem}.svg", x, estimate.psd, title=stem, x_label="omega/pi"
    )
    return [csv_path, svg_path]


def emit_peaks(
    out_dir: Path, stem: str, peaks: Sequence[tuple[float, float]], config: SchemeConfig, **extra: object
) -> list[Path]:
    comments = _comments(config, **extra)
    return [
        write_csv(
            out_dir / f"{stem}.csv",
            {
                "omega_over_pi": [p[0] for p in peaks],
                "power": [p[1] for p in peaks],
            },
            comments,
        )
    ]


def emit_structure(out_dir: Path, stem: str, report: StructureReport) -> list[Path]:
    sets = difference_sets(report.config)
    rows = {
        "field": [
            "self_cross_disjoint",
            "distinct_cross_count",
            "expected_distinct_cross",
            "prototype_two_contributors",
            "sign_paired_cross_values",
            "self_first_size",
            "self_second_size",
            "cross_size",
        ],
        "value": [
            report.self_cross_disjoint,
            report.distinct_cross_count,
            report.config.m * report.config.n,
            "n/a" if report.prototype_two_contributors is None else report.prototype_two_contributors,
            ";".join(f"{a}:{b}" for a, b in report.sign_paired_cross_values),
            sets.self_first.size,
            sets.self_second.size,
            sets.cross_pos.size,
        ],
    }
    return [write_csv(out_dir / f"{stem}.csv", rows, _comments(report.config))]


def emit_difference_sets(out_dir: Path, stem: str, config: SchemeConfig) -> list[Path]:
    sets = difference_sets(config)
    names: list[str] = []
    lags: list[int] = []
    for name, arr in (
        ("self_first", sets.self_first),
        ("self_second", sets.self_second),
        ("cross_pos", sets.cross_pos),
        ("cross_neg", sets.cross_neg),
    ):
        names.extend([name] * arr.size)
        lags.extend(int(v) for v in arr)
    return [write_csv(out_dir / f"{stem}.csv", {"set": names, "lag": lags}, _comments(config))]


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------


def _preset_fig3(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    for m, n in FIGURE_PAIRS:
        config = make_scheme(SchemeKind.PROTOTYPE, m=m, n=n)
        table = weight_enumerated(sample_instants(config))
        files += emit_weight(out_dir, f"fig3_weight_{config.slug()}", table)
    return files


def _preset_fig4(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    for m, n in FIGURE_PAIRS:
        sn = make_scheme(SchemeKind.SUPER_NYQUIST, m=m, n=n)
        proto = make_scheme(SchemeKind.PROTOTYPE, m=m, n=n)
        files += emit_weight(out_dir, f"fig4_weight_{sn.slug()}", weight_closed(sn))
        files += emit_bias(out_dir, f"fig4_bias_{sn.slug()}", bias_closed(sn, BIAS_GRID))
        proto_window = bias_from_weights(weight_enumerated(sample_instants(proto)), BIAS_GRID)
        files += emit_bias(out_dir, f"fig4_bias_{proto.slug()}", proto_window)
    return files


def _spectrum_job(
    out_dir: Path,
    stem: str,
    config: SchemeConfig,
    tones_hz: Sequence[float],
    k: int,
    peak_count: int | None = None,
) -> list[Path]:
    spec = tones_for_scheme(tones_hz, DEFAULT_SAMPLE_RATE_HZ, config, DEFAULT_SEED)
    estimate = correlogram_psd(config, spec, k, PSD_GRID)
    extra = {
        "tones": format_tones(spec.tones),
        "tones_hz": ",".join(format_value(hz) for hz in tones_hz),
        "sample_rate_hz": DEFAULT_SAMPLE_RATE_HZ,
        "seed": DEFAULT_SEED,
    }
    files = emit_psd(out_dir, stem, estimate, **extra)
    if peak_count:
        peaks = find_peaks(estimate, peak_count)
        files += emit_peaks(out_dir, f"{stem}_peaks", peaks, config, k=k, **extra)
    return files


def _preset_fig5(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    sn = make_scheme(SchemeKind.SUPER_NYQUIST, m=4, n=3, periods=SCENARIO_PERIODS)
    proto = make_scheme(SchemeKind.PROTOTYPE, m=4, n=3, periods=SCENARIO_PERIODS)
    for k in (2, 4, 10):
        peaks = 5 if k == 10 else None
        files += _spectrum_job(out_dir, f"fig5_psd_{sn.slug()}_k{k}", sn, _TWO_TONES_HZ, k, peaks)
    files += _spectrum_job(out_dir, f"fig5_psd_{proto.slug()}_k10", proto, _TWO_TONES_HZ, 10, 5)
    return files


def _preset_fig6(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    for kind in (SchemeKind.SUPER_NYQUIST, SchemeKind.PROTOTYPE):
        config = make_scheme(kind, m=4, n=3, periods=SCENARIO_PERIODS)
        files += _spectrum_job(
            out_dir, f"fig6_psd_{config.slug()}_k10", config, _THREE_TONES_HZ, 10, 5
        )
    return files


def _preset_fig7(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    for m, n in ((3, 4), (3, 5), (5, 3)):
        for kind in (SchemeKind.SUPER_NYQUIST, SchemeKind.PROTOTYPE):
            config = make_scheme(kind, m=m, n=n, periods=SCENARIO_PERIODS)
            files += _spectrum_job(
                out_dir, f"fig7_psd_{config.slug()}_k10", config, _THREE_TONES_HZ, 10, 5
            )
    return files


def _preset_fig8(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    for kind in (SchemeKind.SUPER_NYQUIST, SchemeKind.PROTOTYPE):
        config = make_scheme(kind, m=4, n=3, periods=SCENARIO_PERIODS)
        files += _spectrum_job(
            out_dir, f"fig8_psd_{config.slug()}_k10", config, _FOUR_TONES_HZ, 10, 6
        )
    return files


def _preset_fig10(out_dir: Path) -> list[Path]:
    files: list[Path] = []
    for periods in (1, 2, 3, 4):
        config = make_scheme(SchemeKind.SUPER_NYQUIST, m=4, n=3, periods=periods)
        files += emit_bias(out_dir, f"fig10_bias_{config.slug()}", bias_closed(config, BIAS_GRID))
    return files


def _preset_table1(out_dir: Path) -> list[Path]:
    def cell(hz: float, kind: SchemeKind) -> object:
        nu = map_frequency(hz, DEFAULT_SAMPLE_RATE_HZ, kind)
        return "-" if nu is UNREPRESENTABLE else nu

    columns = {
        "hz": list(TABLE_FREQUENCIES_HZ),
        "super_nyquist": [cell(hz, SchemeKind.SUPER_NYQUIST) for hz in TABLE_FREQUENCIES_HZ],
        "prototype": [cell(hz, SchemeKind.PROTOTYPE) for hz in TABLE_FREQUENCIES_HZ],
    }
    comments = {"generator": "coprimespec", "sample_rate_hz": DEFAULT_SAMPLE_RATE_HZ}
    return [write_csv(out_dir / "table1.csv", columns, comments)]


PRESETS: dict[str, Callable[[Path], list[Path]]] = {
    "fig3": _preset_fig3,
    "fig4": _preset_fig4,
    "fig5": _preset_fig5,
    "fig6": _preset_fig6,
    "fig7": _preset_fig7,
    "fig8": _preset_fig8,
    "fig10": _preset_fig10,
    "table1": _preset_table1,
}


def run_preset(name: str, out_dir: Path | str) -> list[Path]:
    """Run one named preset into ``out_dir`` and return the written files."""
    if name not in PRESETS:
        raise InvalidConfigError(
            f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}"
        )
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return PRESETS[name](out)


def run_experiment(config: ExperimentConfig) -> list[Path]:
    """Run one experiment (or its preset) and return the written files.

    A custom run emits, for the configured scheme: the enumerated weight
    table (plus the closed form when one exists), a bias window, the PSD
    estimate and its detected peaks when tones are configured, and the
    difference-set structure report for single-period co-prime schemes.
    """
    if config.preset:
        return run_preset(config.preset, config.out)
    out_dir = Path(config.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    scheme = config.scheme_config()
    files: list[Path] = []

    table = weight_enumerated(sample_instants(scheme))
    files += emit_weight(out_dir, f"weight_{scheme.slug()}_enumerated", table)
    if scheme.kind is SchemeKind.SUPER_NYQUIST:
        files += emit_weight(out_dir, f"weight_{scheme.slug()}_closed", weight_closed(scheme))
        files += emit_bias(out_dir, f"bias_{scheme.slug()}", bias_closed(scheme, config.grid))
    else:
        files += emit_bias(out_dir, f"bias_{scheme.slug()}", bias_from_weights(table, config.grid))

    if scheme.is_coprime_pair and scheme.periods == 1:
        files += emit_structure(out_dir, f"structure_{scheme.slug()}", verify_structure(scheme))
        files += emit_difference_sets(out_dir, f"diffset_{scheme.slug()}", scheme)

    if config.tones:
        spec = config.signal_spec()
        estimate = correlogram_psd(scheme, spec, config.k, config.grid)
        extra = {"tones": format_tones(spec.tones), "seed": config.seed, "noise_std": config.noise_std}
        files += emit_psd(out_dir, f"psd_{scheme.slug()}_k{config.k}", estimate, **extra)
        peaks = find_peaks(estimate, max(5, len(config.tones) + 2))
        files += emit_peaks(
            out_dir, f"peaks_{scheme.slug()}_k{config.k}", peaks, scheme, k=config.k, **extra
        )
    return files
